use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebra::{end_algebra, radical, FDAlgebra};
use crate::error::{Error, Result};
use crate::fflinalg::{Elem, Field, Mat, Poly};
use crate::repmod::{Module, Subspace};

/// Knobs for [`decompose_with`].
#[derive(Clone, Debug)]
pub struct DecomposeOptions {
    /// Largest module dimension accepted.
    pub max_dim: usize,
    /// Seed for the random endomorphisms tried before the radical is
    /// computed. Results are summand-isomorphic for every seed.
    pub seed: u64,
    /// Random endomorphisms tried per node before falling back to the
    /// radical.
    pub fitting_attempts: usize,
    /// Largest degree of a scalar extension made to split summands.
    pub max_extension_degree: u32,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        DecomposeOptions {
            max_dim: 512,
            seed: 0,
            fitting_attempts: 4,
            max_extension_degree: 16,
        }
    }
}

/// One indecomposable summand with its inclusion `M_i → M` and projection
/// `M → M_i`.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Module,
    pub inclusion: Mat,
    pub projection: Mat,
    /// Degree over the base field of `End(M_i)/J(End(M_i))`; 1 exactly
    /// when the summand stays indecomposable over every extension.
    pub residue_degree: u32,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub field: Field,
    pub dim: usize,
    pub summands: Vec<Summand>,
}

impl Decomposition {
    pub fn dims(&self) -> Vec<usize> {
        self.summands.iter().map(|s| s.module.dim()).collect()
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Exactly one summand.
    pub fn is_indecomposable(&self) -> bool {
        self.summands.len() == 1
    }

    /// One summand that stays indecomposable over every extension.
    pub fn is_absolutely_indecomposable(&self) -> bool {
        self.summands.len() == 1 && self.summands[0].residue_degree == 1
    }

    /// Number of summands over an algebraic closure.
    pub fn absolute_count(&self) -> usize {
        self.summands.iter().map(|s| s.residue_degree as usize).sum()
    }

    /// `π_i ι_j = δ_ij`, `Σ ι_i π_i = 1`, and every inclusion intertwines.
    pub fn verify(&self, m: &Module) -> Result<()> {
        let f = &self.field;
        let mut total = Mat::zeros(f, self.dim, self.dim);
        for (i, si) in self.summands.iter().enumerate() {
            for (j, sj) in self.summands.iter().enumerate() {
                let prod = si.projection.mul(&sj.inclusion);
                let ok = if i == j { prod.is_identity() } else { prod.is_zero() };
                if !ok {
                    return Err(Error::Invariant("projections are not orthogonal idempotents".into()));
                }
            }
            if !si.module.is_homomorphism_to(m, &si.inclusion) || !m.is_homomorphism_to(&si.module, &si.projection) {
                return Err(Error::Invariant("summand maps are not module maps".into()));
            }
            total = total.add(&si.inclusion.mul(&si.projection));
        }
        if !total.is_identity() && self.dim > 0 {
            return Err(Error::Invariant("projections do not sum to the identity".into()));
        }
        Ok(())
    }
}

/// Verdict on indecomposability over an algebraic closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Indecomposability {
    /// `End(M)/J` is the base field.
    Indecomposable,
    /// Already decomposable over the base field, or zero.
    Decomposable,
    /// Indecomposable over the base field, but `End(M)/J` is a proper
    /// extension field; over it (recorded here) the module splits.
    SplitsOverExtension(Field),
}

impl Indecomposability {
    pub fn is_indecomposable(&self) -> bool {
        matches!(self, Indecomposability::Indecomposable)
    }
}

pub fn decompose(m: &Module) -> Result<Decomposition> {
    decompose_with(m, &DecomposeOptions::default())
}

struct Node {
    module: Module,
    inclusion: Mat,
    projection: Mat,
}

/// Splits `M` into indecomposable summands over its own field.
///
/// Each node first tries a few random endomorphisms: a characteristic
/// polynomial with two coprime factors splits the module into primary
/// components. Otherwise `End/J` is analysed; an idempotent there is lifted
/// to `End` and splits the node, and a node whose `End/J` is a field is a
/// leaf.
pub fn decompose_with(m: &Module, opts: &DecomposeOptions) -> Result<Decomposition> {
    if m.dim() > opts.max_dim {
        return Err(Error::ResourceCap {
            what: "module dimension for decomposition",
            limit: opts.max_dim,
        });
    }
    let f = m.field().clone();
    let n = m.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut stack = vec![Node {
        module: m.clone(),
        inclusion: Mat::identity(&f, n),
        projection: Mat::identity(&f, n),
    }];
    let mut leaves = Vec::new();
    if n == 0 {
        stack.clear();
    }
    while let Some(node) = stack.pop() {
        match split_node(&node.module, opts, &mut rng)? {
            NodeResult::Leaf(residue_degree) => leaves.push(Summand {
                module: node.module,
                inclusion: node.inclusion,
                projection: node.projection,
                residue_degree,
            }),
            NodeResult::Split(parts) => {
                for child in children(&node, &parts)?.into_iter().rev() {
                    stack.push(child);
                }
            }
        }
    }
    leaves.sort_by_key(|s| s.module.dim());
    let d = Decomposition {
        field: f,
        dim: n,
        summands: leaves,
    };
    if cfg!(debug_assertions) {
        d.verify(m)?;
    }
    Ok(d)
}

enum NodeResult {
    Leaf(u32),
    Split(Vec<Subspace>),
}

fn split_node(m: &Module, opts: &DecomposeOptions, rng: &mut ChaCha8Rng) -> Result<NodeResult> {
    if m.dim() == 1 {
        return Ok(NodeResult::Leaf(1));
    }
    let end = end_algebra(m)?;
    if end.dim() == 1 {
        return Ok(NodeResult::Leaf(1));
    }
    let f = m.field();
    for _ in 0..opts.fitting_attempts {
        let coeffs: Vec<Elem> = (0..end.dim()).map(|_| rng.gen_range(0..f.order())).collect();
        let x = end.element(&coeffs);
        let parts = primary_components(&x)?;
        if parts.len() >= 2 {
            return Ok(NodeResult::Split(parts));
        }
    }
    analyse_quotient(&end, rng)
}

/// Generalized eigenspaces `ker φ(x)^n` for the distinct irreducible
/// factors `φ` of the characteristic polynomial of `x`.
fn primary_components(x: &Mat) -> Result<Vec<Subspace>> {
    let n = x.rows();
    let chi = x.char_poly()?;
    let factors = chi.distinct_factors();
    if factors.len() < 2 {
        return Ok(vec![]);
    }
    let mut parts = Vec::with_capacity(factors.len());
    let mut total = 0;
    for phi in &factors {
        let k = phi.eval_mat(x).pow(n as u64);
        let part = Subspace::span(&k.kernel_basis());
        total += part.dim();
        parts.push(part);
    }
    if total != n {
        return Err(Error::Invariant("primary components do not fill the space".into()));
    }
    Ok(parts)
}

/// `M = ker f^n ⊕ im f^n` for an endomorphism `f`; `None` when one side is
/// zero (f nilpotent or invertible).
pub fn fitting_split(m: &Module, f: &Mat) -> Result<Option<(Module, Module)>> {
    if !m.is_homomorphism_to(m, f) {
        return Err(Error::Precondition("not an endomorphism of the module".into()));
    }
    let fpow = f.pow(m.dim() as u64);
    let ker = Subspace::span(&fpow.kernel_basis());
    if ker.dim() == 0 || ker.dim() == m.dim() {
        return Ok(None);
    }
    let im = Subspace::span(&fpow.image_basis());
    Ok(Some((m.submodule(&ker)?, m.submodule(&im)?)))
}

/// Looks for an element of `End/J` with reducible minimal polynomial.
fn analyse_quotient(end: &FDAlgebra, rng: &mut ChaCha8Rng) -> Result<NodeResult> {
    let f = end.field().clone();
    let j = radical(end)?;
    let free = j.non_pivots();
    let s = free.len();
    if s == 1 {
        return Ok(NodeResult::Leaf(1));
    }
    let k = end.dim();
    let unit = |c: usize| -> Vec<Elem> {
        let mut v = vec![0; k];
        v[c] = 1;
        v
    };
    let mut candidates: Vec<Vec<Elem>> = free.iter().map(|&c| unit(c)).collect();
    for (a, &c1) in free.iter().enumerate() {
        for &c2 in free.iter().skip(a + 1).take(4) {
            let mut v = unit(c1);
            v[c2] = 1;
            candidates.push(v);
        }
    }
    for _ in 0..64 {
        let mut v = vec![0; k];
        for &c in &free {
            v[c] = rng.gen_range(0..f.order());
        }
        candidates.push(v);
    }
    for cand in candidates {
        let a = end.element(&cand);
        // left multiplication by a on End/J
        let mut l = Mat::zeros(&f, s, s);
        for (col, &c) in free.iter().enumerate() {
            let prod = a.mul(&end.basis()[c]);
            let mut coords = end
                .coordinates(&prod)
                .ok_or_else(|| Error::Invariant("endomorphism product left the algebra".into()))?;
            j.reduce(&mut coords);
            for (row, &r) in free.iter().enumerate() {
                l.set(row, col, coords[r]);
            }
        }
        let mu = l.min_poly()?;
        // End/J may be non-commutative, so μ need not be squarefree
        let factors = mu.distinct_factors();
        if factors.len() >= 2 {
            let mut primary = factors[0].clone();
            while mu.divrem(&primary.mul(&factors[0])).1.is_zero() {
                primary = primary.mul(&factors[0]);
            }
            let e = lift_idempotent(&a, &mu, &primary)?;
            let n = a.rows();
            let mut comp = Mat::identity(&f, n);
            comp.add_scaled(f.neg(1), &e);
            return Ok(NodeResult::Split(vec![
                Subspace::span(&e.transpose()),
                Subspace::span(&comp.transpose()),
            ]));
        }
        if mu.degree() == Some(s) && mu.is_irreducible() {
            return Ok(NodeResult::Leaf(s as u32));
        }
    }
    Err(Error::Invariant("no splitting element found in End/J".into()))
}

/// Idempotent `e ∈ F[a]` with `e ≡ 1 mod φ^k` and `e ≡ 0 mod μ/φ^k` on `End/J`,
/// lifted to an exact idempotent by `e ← 3e² − 2e³`.
fn lift_idempotent(a: &Mat, mu: &Poly, primary: &Poly) -> Result<Mat> {
    let f = a.field().clone();
    let rest = mu.divrem(primary).0;
    let (g, _, t) = primary.ext_gcd(&rest);
    if g.degree() != Some(0) {
        return Err(Error::Invariant("primary parts of the minimal polynomial are not coprime".into()));
    }
    let poly = t.mul(&rest).rem(mu);
    let mut e = poly.eval_mat(a);
    let three = f.from_int(3);
    let two = f.from_int(2);
    for _ in 0..64 {
        let e2 = e.mul(&e);
        if e2 == e {
            return Ok(e);
        }
        let e3 = e2.mul(&e);
        let mut next = e2.scale(three);
        next.add_scaled(f.neg(two), &e3);
        e = next;
    }
    Err(Error::Invariant("idempotent lifting did not converge".into()))
}

fn children(node: &Node, parts: &[Subspace]) -> Result<Vec<Node>> {
    let f = node.module.field().clone();
    let d = node.module.dim();
    let mut cols: Vec<Vec<Elem>> = Vec::with_capacity(d);
    for part in parts {
        cols.extend(part.basis().row_vectors().map(|r| r.to_vec()));
    }
    let t = Mat::from_columns(&f, d, &cols);
    let tinv = t
        .inverse()
        .ok_or_else(|| Error::Invariant("split parts are not complementary".into()))?;
    let mut out = Vec::with_capacity(parts.len());
    let mut offset = 0;
    for part in parts {
        let k = part.dim();
        let module = node.module.submodule(part)?;
        let basis_cols = part.basis().transpose();
        let proj = tinv.select_rows(offset..offset + k);
        out.push(Node {
            module,
            inclusion: node.inclusion.mul(&basis_cols),
            projection: proj.mul(&node.projection),
        });
        offset += k;
    }
    Ok(out)
}

/// Decomposition over an extension large enough that every summand is
/// absolutely indecomposable; returns the field used.
pub fn decompose_absolute(m: &Module, opts: &DecomposeOptions) -> Result<(Decomposition, Field)> {
    let base = decompose_with(m, opts)?;
    let degree = base
        .summands
        .iter()
        .map(|s| s.residue_degree)
        .fold(1u32, |acc, d| acc / gcd(acc, d) * d);
    if degree == 1 {
        let f = m.field().clone();
        return Ok((base, f));
    }
    check_extension(degree, opts)?;
    let ext = m.field().extension(degree)?;
    let d = decompose_with(&m.extend_scalars(&ext)?, opts)?;
    if d.summands.iter().any(|s| s.residue_degree != 1) || d.len() != base.absolute_count() {
        return Err(Error::Invariant("extension did not split the summands completely".into()));
    }
    Ok((d, ext))
}

fn check_extension(degree: u32, opts: &DecomposeOptions) -> Result<()> {
    if degree > opts.max_extension_degree {
        return Err(Error::ResourceCap {
            what: "scalar extension degree",
            limit: opts.max_extension_degree as usize,
        });
    }
    Ok(())
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn is_absolutely_indecomposable(m: &Module) -> Result<Indecomposability> {
    is_absolutely_indecomposable_with(m, &DecomposeOptions::default())
}

pub fn is_absolutely_indecomposable_with(m: &Module, opts: &DecomposeOptions) -> Result<Indecomposability> {
    let d = decompose_with(m, opts)?;
    classify(m, &d, opts)
}

/// Verdict from a base-field decomposition; a single summand of residue
/// degree `s > 1` is re-decomposed over the degree-`s` extension.
pub fn classify(m: &Module, d: &Decomposition, opts: &DecomposeOptions) -> Result<Indecomposability> {
    if d.len() != 1 {
        return Ok(Indecomposability::Decomposable);
    }
    let s = d.summands[0].residue_degree;
    if s == 1 {
        return Ok(Indecomposability::Indecomposable);
    }
    check_extension(s, opts)?;
    let ext = m.field().extension(s)?;
    let again = decompose_with(&m.extend_scalars(&ext)?, opts)?;
    if again.len() != s as usize {
        return Err(Error::Invariant("scalar extension did not split as predicted".into()));
    }
    Ok(Indecomposability::SplitsOverExtension(ext))
}
