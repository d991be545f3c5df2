use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::decompose::{decompose_with, Decomposition, DecomposeOptions};
use crate::error::Result;
use crate::fflinalg::Mat;
use crate::repmod::{hom_space, Module};

/// An isomorphism between two indecomposable modules, if one exists.
///
/// With `End(S)` local, `S ≅ T` exactly when `g∘f` is invertible for some
/// `f: S → T`, `g: T → S`; non-invertible endomorphisms form the radical,
/// a subspace, so checking basis pairs suffices.
pub fn indecomposables_isomorphic(s: &Module, t: &Module) -> Result<Option<Mat>> {
    if s.dim() != t.dim() {
        return Ok(None);
    }
    if s.dim() == 0 {
        return Ok(Some(Mat::zeros(s.field(), 0, 0)));
    }
    let fs = hom_space(s, t)?;
    if fs.is_empty() {
        return Ok(None);
    }
    let gs = hom_space(t, s)?;
    for f in &fs {
        for g in &gs {
            if g.mul(f).is_invertible() {
                return Ok(Some(f.clone()));
            }
        }
    }
    Ok(None)
}

/// An explicit isomorphism `M → N`: a few seeded random elements of
/// `Hom(M, N)` first, then summand-by-summand matching.
pub fn find_isomorphism(m: &Module, n: &Module, opts: &DecomposeOptions) -> Result<Option<Mat>> {
    if m.dim() != n.dim() {
        return Ok(None);
    }
    if m.dim() == 0 {
        return Ok(Some(Mat::zeros(m.field(), 0, 0)));
    }
    let basis = hom_space(m, n)?;
    if basis.is_empty() {
        return Ok(None);
    }
    let f = m.field();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x1505);
    for _ in 0..8 {
        let mut x = Mat::zeros(f, n.dim(), m.dim());
        for b in &basis {
            x.add_scaled(rng.gen_range(0..f.order()), b);
        }
        if x.is_invertible() {
            return Ok(Some(x));
        }
    }
    let dm = decompose_with(m, opts)?;
    let dn = decompose_with(n, opts)?;
    isomorphism_from_decompositions(&dm, &dn)
}

/// Matches summands of two decompositions up to isomorphism and assembles
/// `Σ ι'_σ(i) φ_i π_i`.
pub fn isomorphism_from_decompositions(dm: &Decomposition, dn: &Decomposition) -> Result<Option<Mat>> {
    if dm.len() != dn.len() || dm.dim != dn.dim {
        return Ok(None);
    }
    let mut used = vec![false; dn.len()];
    let mut total = Mat::zeros(&dm.field, dn.dim, dm.dim);
    for s in &dm.summands {
        let mut found = false;
        for (j, t) in dn.summands.iter().enumerate() {
            if used[j] {
                continue;
            }
            if let Some(phi) = indecomposables_isomorphic(&s.module, &t.module)? {
                used[j] = true;
                total = total.add(&t.inclusion.mul(&phi).mul(&s.projection));
                found = true;
                break;
            }
        }
        if !found {
            return Ok(None);
        }
    }
    Ok(Some(total))
}

pub fn is_isomorphic(m: &Module, n: &Module) -> Result<bool> {
    Ok(find_isomorphism(m, n, &DecomposeOptions::default())?.is_some())
}

/// Krull–Schmidt comparison: the two summand lists agree up to
/// isomorphism and order.
pub fn same_summands(a: &Decomposition, b: &Decomposition) -> Result<bool> {
    Ok(isomorphism_from_decompositions(a, b)?.is_some())
}
