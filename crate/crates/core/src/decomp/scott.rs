use std::collections::HashSet;

use super::decompose::{decompose_with, Decomposition, DecomposeOptions};
use crate::error::{Error, Result};
use crate::fflinalg::{Echelon, Field, Mat};
use crate::permgroup::{Group, Perm};
use crate::repmod::{hom_dim, hom_space, perm_module, Module};

/// `Sc(G, H)` with the permutation module it was cut out of.
#[derive(Clone, Debug)]
pub struct ScottModule {
    pub module: Module,
    pub permutation_module: Module,
    pub decomposition: Decomposition,
    /// Index of the Scott summand in `decomposition`.
    pub index: usize,
}

/// The unique summand of `Ind_H^G k` with a nonzero map onto `k_G`.
pub fn scott_module(g: &Group, h: &Group, field: &Field) -> Result<Module> {
    Ok(scott_module_with(g, h, field, &DecomposeOptions::default())?.module)
}

pub fn scott_module_with(g: &Group, h: &Group, field: &Field, opts: &DecomposeOptions) -> Result<ScottModule> {
    let ind = perm_module(g, h, field)?;
    let d = decompose_with(&ind, opts)?;
    let k = Module::trivial(g, field);
    let mut found = None;
    for (i, s) in d.summands.iter().enumerate() {
        if hom_dim(&s.module, &k)? > 0 {
            if found.is_some() {
                return Err(Error::Invariant("two summands map onto the trivial module".into()));
            }
            found = Some(i);
        }
    }
    let index = found.ok_or_else(|| Error::Invariant("no summand maps onto the trivial module".into()))?;
    let module = d.summands[index].module.clone();
    if hom_dim(&k, &module)? == 0 {
        return Err(Error::Invariant("Scott summand does not contain the trivial module".into()));
    }
    Ok(ScottModule {
        module,
        permutation_module: ind,
        decomposition: d,
        index,
    })
}

/// Higman's criterion: `M` is relatively `Q`-projective iff the identity is
/// `Σ_{t ∈ [G/Q]} t φ t⁻¹` for some `φ ∈ End_{kQ}(M)`.
pub fn is_relatively_projective(m: &Module, q: &Group) -> Result<bool> {
    let g = m.group();
    q.require_subgroup_of(g, "Q")?;
    let n = m.dim();
    if n == 0 {
        return Ok(true);
    }
    let reps: Vec<Perm> = g.left_coset_reps(q)?;
    let conj: Vec<(Mat, Mat)> = reps
        .iter()
        .map(|t| (m.element_matrix_ref(t).clone(), m.element_matrix_ref(&t.inverse()).clone()))
        .collect();
    let local = hom_space(&m.restrict(q)?, &m.restrict(q)?)?;
    let mut span = Echelon::new(m.field(), n * n);
    for phi in &local {
        let mut tr = Mat::zeros(m.field(), n, n);
        for (a, ainv) in &conj {
            tr = tr.add(&a.mul(phi).mul(ainv));
        }
        span.insert(tr.data().to_vec());
        if span.contains(Mat::identity(m.field(), n).data()) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// A vertex of the indecomposable `M`, searched below `P`.
///
/// Relative projectivity passes to overgroups, so descending through
/// maximal subgroups from `P` visits every projective subgroup; the minimal
/// ones must be `G`-conjugate, which is checked.
pub fn vertex(m: &Module, p: &Group) -> Result<Group> {
    vertex_with(m, p, &DecomposeOptions::default())
}

pub fn vertex_with(m: &Module, p: &Group, opts: &DecomposeOptions) -> Result<Group> {
    let d = decompose_with(m, opts)?;
    if !d.is_indecomposable() {
        return Err(Error::Precondition(format!(
            "vertex of a module with {} summands is undefined",
            d.len()
        )));
    }
    let prime = m.field().characteristic();
    if !p.is_p_group(prime) {
        return Err(Error::NotPGroup { order: p.order(), p: prime });
    }
    if !is_relatively_projective(m, p)? {
        return Err(Error::VertexMismatch(format!(
            "module is not relatively projective with respect to the given subgroup of order {}",
            p.order()
        )));
    }
    let g = m.group();
    let mut minimal: Vec<Group> = Vec::new();
    let mut seen: HashSet<Vec<Perm>> = HashSet::new();
    let mut stack = vec![p.clone()];
    seen.insert(p.conjugacy_key(g));
    while let Some(q) = stack.pop() {
        let mut any = false;
        for k in q.maximal_subgroups(prime)? {
            if is_relatively_projective(m, &k)? {
                any = true;
                if seen.insert(k.conjugacy_key(g)) {
                    stack.push(k);
                }
            }
        }
        if !any {
            minimal.push(q);
        }
    }
    let first = minimal[0].clone();
    for other in &minimal[1..] {
        if !first.is_conjugate(other, g) {
            return Err(Error::Invariant("minimal projective subgroups are not conjugate".into()));
        }
    }
    Ok(first)
}
