use super::{Module, Subspace};
use crate::error::{Error, Result};
use crate::fflinalg::Mat;
use crate::permgroup::{subgroups_between, Group};

/// `M^Q`: vectors fixed by every element of `Q`.
pub fn fixed_points(m: &Module, q: &Group) -> Result<Subspace> {
    q.require_subgroup_of(m.group(), "fixing subgroup")?;
    let f = m.field();
    let d = m.dim();
    let mut stacked = Mat::zeros(f, 0, d);
    for g in q.generators() {
        let mut a = m.element_matrix_ref(g).clone();
        a.add_scalar_identity(f.neg(1));
        stacked = stacked.vstack(&a);
    }
    if stacked.rows() == 0 {
        return Ok(Subspace::full(f, d));
    }
    Ok(Subspace::span(&stacked.kernel_basis()))
}

/// The linear map `Σ_{t ∈ [H/K]} t` for the canonical left transversal.
pub fn relative_trace_map(m: &Module, k: &Group, h: &Group) -> Result<Mat> {
    h.require_subgroup_of(m.group(), "H")?;
    let reps = h.left_coset_reps(k)?;
    Ok(m.sum_of(&reps))
}

/// `tr_K^H(M^K)`. The image does not depend on the transversal; debug
/// builds recompute it with the largest element of each coset.
pub fn relative_trace_image(m: &Module, k: &Group, h: &Group) -> Result<Subspace> {
    k.require_subgroup_of(h, "K")?;
    let fixed = fixed_points(m, k)?;
    let t = relative_trace_map(m, k, h)?;
    let image = trace_of(&t, &fixed);
    if cfg!(debug_assertions) {
        let alt: Vec<_> = h
            .left_coset_reps(k)?
            .iter()
            .map(|r| k.elements().iter().map(|x| r.compose(x)).max().unwrap())
            .collect();
        let t2 = m.sum_of(&alt);
        if trace_of(&t2, &fixed) != image {
            return Err(Error::Invariant("relative trace depends on the transversal".into()));
        }
    }
    Ok(image)
}

fn trace_of(t: &Mat, fixed: &Subspace) -> Subspace {
    if fixed.dim() == 0 {
        return Subspace::zero(t.field(), t.rows());
    }
    Subspace::span(&t.mul(&fixed.basis().transpose()).transpose())
}

/// The Brauer construction `M(Q) = M^Q / Σ_{K<Q} tr_K^Q(M^K)` as a module
/// for `N_G(Q)`.
#[derive(Clone, Debug)]
pub struct BrauerQuotient {
    pub q: Group,
    pub normalizer: Group,
    /// `M^Q` inside `M`.
    pub fixed: Subspace,
    /// The trace part, inside `M^Q`.
    pub traces: Subspace,
    /// `M(Q)` as an `N_G(Q)`-module.
    pub module: Module,
    /// Rows: vectors of `M^Q` lifting the basis of `M(Q)`.
    pub lift: Mat,
}

impl BrauerQuotient {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// Coordinates in `M(Q)` of a vector of `M^Q`.
    pub fn project(&self, v: &[u32]) -> Option<Vec<u32>> {
        let mut c = self.fixed.coordinates(v)?;
        let tc = self.trace_coords();
        tc.reduce(&mut c);
        Some(tc.non_pivots().iter().map(|&i| c[i]).collect())
    }

    fn trace_coords(&self) -> Subspace {
        let rows: Vec<Vec<u32>> = self
            .traces
            .basis()
            .row_vectors()
            .map(|r| self.fixed.coordinates(r).expect("traces lie in the fixed points"))
            .collect();
        Subspace::span(&Mat::from_rows(self.fixed.field(), self.fixed.dim(), &rows))
    }
}

/// `Σ_{K<Q} tr_K^Q(M^K)` summed over the maximal subgroups `K` only.
pub fn trace_sum(m: &Module, q: &Group) -> Result<Subspace> {
    let p = m.field().characteristic();
    let mut sum = Subspace::zero(m.field(), m.dim());
    for k in q.maximal_subgroups(p)? {
        sum = sum.sum(&relative_trace_image(m, &k, q)?)?;
    }
    Ok(sum)
}

/// Same sum over every proper subgroup.
pub fn trace_sum_all(m: &Module, q: &Group) -> Result<Subspace> {
    let mut sum = Subspace::zero(m.field(), m.dim());
    for k in subgroups_between(&Group::trivial(q.degree()), q)? {
        if k.order() < q.order() {
            sum = sum.sum(&relative_trace_image(m, &k, q)?)?;
        }
    }
    Ok(sum)
}

pub fn brauer_construction(m: &Module, q: &Group) -> Result<BrauerQuotient> {
    let n = m.group().normalizer(q)?;
    brauer_construction_with_normalizer(m, q, &n)
}

/// As [`brauer_construction`], with `N_G(Q)` (or any subgroup of it
/// containing `Q`) supplied by the caller.
pub fn brauer_construction_with_normalizer(m: &Module, q: &Group, n: &Group) -> Result<BrauerQuotient> {
    let p = m.field().characteristic();
    if !q.is_p_group(p) {
        return Err(Error::NotPGroup { order: q.order(), p });
    }
    q.require_subgroup_of(n, "Q")?;
    if !q.is_normal_in(n) {
        return Err(Error::NotNormal("Q is not normal in the acting group".into()));
    }
    let fixed = fixed_points(m, q)?;
    let traces = trace_sum(m, q)?;
    if cfg!(debug_assertions) && q.order() <= 32 && trace_sum_all(m, q)? != traces {
        return Err(Error::Invariant("trace sum over maximal subgroups differs from the full sum".into()));
    }
    let on_fixed = m.restrict(n)?.submodule(&fixed)?;
    let rows: Vec<Vec<u32>> = traces
        .basis()
        .row_vectors()
        .map(|r| {
            fixed
                .coordinates(r)
                .ok_or_else(|| Error::Invariant("trace image outside the fixed points".into()))
        })
        .collect::<Result<_>>()?;
    let tc = Subspace::span(&Mat::from_rows(m.field(), fixed.dim(), &rows));
    let module = on_fixed.quotient(&tc)?;
    let free = tc.non_pivots();
    let lift_rows: Vec<Vec<u32>> = free.iter().map(|&i| fixed.basis().row(i).to_vec()).collect();
    let lift = Mat::from_rows(m.field(), m.dim(), &lift_rows);
    Ok(BrauerQuotient {
        q: q.clone(),
        normalizer: n.clone(),
        fixed,
        traces,
        module,
        lift,
    })
}
