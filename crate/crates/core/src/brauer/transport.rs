use super::checker::judge;
use super::report::Verdict;
use crate::decomp::DecomposeOptions;
use crate::error::{Error, Result};
use crate::fflinalg::Mat;
use crate::permgroup::{product_set, Group};
use crate::repmod::{brauer_construction, module_kernel, Module};

/// Comparison of `M(Q)` with `M(QR)` for a normal `p`-subgroup `R` in the
/// kernel of `M`.
#[derive(Clone, Debug)]
pub struct NormalProductEvidence {
    pub qr_order: usize,
    pub dim_q: usize,
    pub dim_qr: usize,
    /// `M^Q = M^{QR}` and the two trace sums coincide inside `M`.
    pub same_subquotient: bool,
    /// `M(Q) → M(QR)`, induced by the identity on `M^Q`; an isomorphism
    /// of `N_G(Q)`-modules (checked).
    pub isomorphism: Mat,
    /// `Res_{C_G(QR)} M(QR)`.
    pub verdict_qr_over_c_qr: Verdict,
    /// `Res_{C_G(Q)} M(QR)`.
    pub verdict_qr_over_c_q: Verdict,
    /// `Res_{C_G(Q)} M(Q)`.
    pub verdict_q_over_c_q: Verdict,
}

impl NormalProductEvidence {
    /// Indecomposability over `C_G(QR)` or over `C_G(Q)` of `M(QR)`
    /// forces indecomposability of `M(Q)` over `C_G(Q)`.
    pub fn transfer_holds(&self) -> bool {
        let forced = self.verdict_qr_over_c_qr == Verdict::Indecomposable
            || self.verdict_qr_over_c_q == Verdict::Indecomposable;
        !forced || self.verdict_q_over_c_q == Verdict::Indecomposable
    }
}

/// Builds [`NormalProductEvidence`]; `Q` must be a `p`-subgroup and `R` a
/// normal `p`-subgroup of `G` acting trivially on `M`.
pub fn compare_with_normal_product(m: &Module, q: &Group, r: &Group) -> Result<NormalProductEvidence> {
    compare_with_normal_product_opts(m, q, r, &DecomposeOptions::default())
}

pub fn compare_with_normal_product_opts(
    m: &Module,
    q: &Group,
    r: &Group,
    opts: &DecomposeOptions,
) -> Result<NormalProductEvidence> {
    let g = m.group();
    let prime = m.field().characteristic();
    r.require_subgroup_of(g, "R")?;
    if !r.is_normal_in(g) {
        return Err(Error::NotNormal("R is not normal in G".into()));
    }
    if !r.is_subgroup_of(&module_kernel(m)) {
        return Err(Error::Precondition("R does not act trivially on the module".into()));
    }
    for h in [q, r] {
        if !h.is_p_group(prime) {
            return Err(Error::NotPGroup { order: h.order(), p: prime });
        }
    }
    let qr = product_set(q, r)?;
    let bq = brauer_construction(m, q)?;
    let bqr = brauer_construction(m, &qr)?;
    let same_subquotient = bq.fixed == bqr.fixed && bq.traces == bqr.traces;

    let rows: Vec<Vec<u32>> = bq
        .lift
        .row_vectors()
        .map(|v| {
            bqr.project(v)
                .ok_or_else(|| Error::Invariant("M^Q is not contained in M^QR".into()))
        })
        .collect::<Result<_>>()?;
    // Column convention: column i is the image of the i-th basis vector.
    let isomorphism = Mat::from_columns(m.field(), bqr.dim(), &rows);
    let on_nq = bqr.module.restrict(&bq.normalizer)?;
    if bq.dim() != bqr.dim()
        || !isomorphism.is_invertible()
        || !bq.module.is_homomorphism_to(&on_nq, &isomorphism)
    {
        return Err(Error::Invariant(
            "identity on fixed points does not induce an isomorphism M(Q) → M(QR)".into(),
        ));
    }

    let c_q = g.centralizer(q)?;
    let c_qr = g.centralizer(&qr)?;
    let (verdict_qr_over_c_qr, _, _) = judge(&bqr.module.restrict(&c_qr)?, opts)?;
    let (verdict_qr_over_c_q, _, _) = judge(&bqr.module.restrict(&c_q)?, opts)?;
    let (verdict_q_over_c_q, _, _) = judge(&bq.module.restrict(&c_q)?, opts)?;
    Ok(NormalProductEvidence {
        qr_order: qr.order(),
        dim_q: bq.dim(),
        dim_qr: bqr.dim(),
        same_subquotient,
        isomorphism,
        verdict_qr_over_c_qr,
        verdict_qr_over_c_q,
        verdict_q_over_c_q,
    })
}
