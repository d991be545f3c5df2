use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Subspace;
use crate::error::{Error, Result};
use crate::fflinalg::{Elem, Field, Mat};
use crate::permgroup::{Group, Perm};

/// Above this many `d×d` multiplications the homomorphism check samples.
const FULL_CHECK_BUDGET: usize = 50_000_000;
const SAMPLED_CHECKS: usize = 64;

struct ModuleData {
    group: Group,
    field: Field,
    dim: usize,
    gens: Vec<Mat>,
    elements: OnceLock<Vec<Mat>>,
}

/// A finite-dimensional kG-module: one invertible matrix per generator of
/// the group, acting on column vectors.
#[derive(Clone)]
pub struct Module {
    data: Arc<ModuleData>,
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Module(dim {} over {} for group of order {})",
            self.dim(),
            self.field(),
            self.group().order()
        )
    }
}

impl Module {
    /// Builds a module and checks that the generator matrices define a
    /// representation (exhaustively when cheap, on sampled products
    /// otherwise).
    pub fn new(group: &Group, field: &Field, dim: usize, gens: Vec<Mat>) -> Result<Module> {
        if gens.len() != group.generators().len() {
            return Err(Error::DimensionMismatch(format!(
                "{} matrices for {} generators",
                gens.len(),
                group.generators().len()
            )));
        }
        for a in &gens {
            if a.rows() != dim || a.cols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "generator matrix is {}x{}, expected {}x{}",
                    a.rows(),
                    a.cols(),
                    dim,
                    dim
                )));
            }
            if a.field() != field {
                return Err(Error::field_mismatch(a.field(), field));
            }
            if !a.is_invertible() {
                return Err(Error::Precondition("generator matrix is singular".into()));
            }
        }
        let m = Module::new_unchecked(group, field, dim, gens);
        m.verify_homomorphism()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(group: &Group, field: &Field, dim: usize, gens: Vec<Mat>) -> Module {
        Module {
            data: Arc::new(ModuleData {
                group: group.clone(),
                field: field.clone(),
                dim,
                gens,
                elements: OnceLock::new(),
            }),
        }
    }

    /// The trivial module `k_G`.
    pub fn trivial(group: &Group, field: &Field) -> Module {
        let gens = group.generators().iter().map(|_| Mat::identity(field, 1)).collect();
        Module::new_unchecked(group, field, 1, gens)
    }

    /// The zero module.
    pub fn zero(group: &Group, field: &Field) -> Module {
        let gens = group.generators().iter().map(|_| Mat::zeros(field, 0, 0)).collect();
        Module::new_unchecked(group, field, 0, gens)
    }

    pub fn group(&self) -> &Group {
        &self.data.group
    }

    pub fn field(&self) -> &Field {
        &self.data.field
    }

    pub fn dim(&self) -> usize {
        self.data.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Matrices of the group's generators.
    pub fn generator_matrices(&self) -> &[Mat] {
        &self.data.gens
    }

    /// Matrices of all group elements, indexed like `group().elements()`.
    /// Built once, along the group's spanning tree.
    pub fn element_matrices(&self) -> &[Mat] {
        self.data.elements.get_or_init(|| {
            let g = self.group();
            let mut out: Vec<Option<Mat>> = vec![None; g.order()];
            for &i in g.bfs_order() {
                out[i] = Some(match g.tree_link(i) {
                    None => Mat::identity(self.field(), self.dim()),
                    Some(l) => self.data.gens[l.gen].mul(out[l.parent].as_ref().unwrap()),
                });
            }
            out.into_iter().map(Option::unwrap).collect()
        })
    }

    /// Matrix of a group element.
    pub fn element_matrix(&self, g: &Perm) -> Result<Mat> {
        let i = self
            .group()
            .index_of(g)
            .ok_or_else(|| Error::NotSubgroup(format!("{} is not in the group", g)))?;
        Ok(self.element_matrices()[i].clone())
    }

    pub(crate) fn element_matrix_ref(&self, g: &Perm) -> &Mat {
        &self.element_matrices()[self.group().index_of(g).expect("element of the module's group")]
    }

    fn verify_homomorphism(&self) -> Result<()> {
        let g = self.group();
        let els = self.element_matrices();
        let ngens = g.generators().len();
        let cost = g.order() * ngens * self.dim().pow(3).max(1);
        let check = |s: usize, i: usize| -> Result<()> {
            let j = g.index_of(&g.generators()[s].compose(g.element(i))).unwrap();
            if self.data.gens[s].mul(&els[i]) != els[j] {
                return Err(Error::Precondition(format!(
                    "matrices do not define a representation: relation fails at {} * {}",
                    g.generators()[s],
                    g.element(i)
                )));
            }
            Ok(())
        };
        if cost <= FULL_CHECK_BUDGET {
            for s in 0..ngens {
                for i in 0..g.order() {
                    check(s, i)?;
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..SAMPLED_CHECKS {
                check(rng.gen_range(0..ngens), rng.gen_range(0..g.order()))?;
            }
        }
        Ok(())
    }

    /// `Res^G_H`.
    pub fn restrict(&self, h: &Group) -> Result<Module> {
        h.require_subgroup_of(self.group(), "restriction subgroup")?;
        let gens = h.generators().iter().map(|x| self.element_matrix_ref(x).clone()).collect();
        let m = Module::new_unchecked(h, self.field(), self.dim(), gens);
        if let Some(parent) = self.data.elements.get() {
            let mats = h
                .elements()
                .iter()
                .map(|x| parent[self.group().index_of(x).unwrap()].clone())
                .collect();
            let _ = m.data.elements.set(mats);
        }
        Ok(m)
    }

    /// The same representation over an extension field.
    pub fn extend_scalars(&self, to: &Field) -> Result<Module> {
        if to == self.field() {
            return Ok(self.clone());
        }
        let gens = self
            .generator_matrices()
            .iter()
            .map(|a| a.extend_scalars(to))
            .collect::<Result<Vec<_>>>()?;
        Ok(Module::new_unchecked(self.group(), to, self.dim(), gens))
    }

    pub fn direct_sum(&self, other: &Module) -> Result<Module> {
        self.check_compatible(other)?;
        let gens = self
            .group()
            .generators()
            .iter()
            .zip(self.generator_matrices())
            .map(|(g, a)| Mat::block_diagonal(self.field(), &[a.clone(), other.element_matrix_ref(g).clone()]))
            .collect();
        Ok(Module::new_unchecked(self.group(), self.field(), self.dim() + other.dim(), gens))
    }

    /// Whether `u` is stable under the group action.
    pub fn is_invariant(&self, u: &Subspace) -> bool {
        self.generator_matrices().iter().all(|a| {
            u.basis()
                .row_vectors()
                .all(|b| u.contains(&a.mul_vec(b)))
        })
    }

    /// The submodule on an invariant subspace, in the coordinates of its
    /// RREF basis.
    pub fn submodule(&self, u: &Subspace) -> Result<Module> {
        self.check_subspace(u)?;
        let k = u.dim();
        let mut gens = Vec::with_capacity(self.generator_matrices().len());
        for a in self.generator_matrices() {
            let mut x = Mat::zeros(self.field(), k, k);
            for (j, b) in u.basis().row_vectors().enumerate() {
                let coords = u
                    .coordinates(&a.mul_vec(b))
                    .ok_or_else(|| Error::Precondition("subspace is not invariant".into()))?;
                for (i, c) in coords.into_iter().enumerate() {
                    x.set(i, j, c);
                }
            }
            gens.push(x);
        }
        Ok(Module::new_unchecked(self.group(), self.field(), k, gens))
    }

    /// `M/U` on the canonical complement spanned by the standard basis
    /// vectors outside the pivot columns of `U`.
    pub fn quotient(&self, u: &Subspace) -> Result<Module> {
        self.check_subspace(u)?;
        if !self.is_invariant(u) {
            return Err(Error::Precondition("subspace is not invariant".into()));
        }
        let free = u.non_pivots();
        let k = free.len();
        let gens = self
            .generator_matrices()
            .iter()
            .map(|a| {
                let mut x = Mat::zeros(self.field(), k, k);
                for (j, &c) in free.iter().enumerate() {
                    let mut v = a.column(c);
                    u.reduce(&mut v);
                    for (i, &r) in free.iter().enumerate() {
                        x.set(i, j, v[r]);
                    }
                }
                x
            })
            .collect();
        Ok(Module::new_unchecked(self.group(), self.field(), k, gens))
    }

    /// Matrix of the projection `M → M/U` in the coordinates of [`Module::quotient`].
    pub fn quotient_projection(&self, u: &Subspace) -> Mat {
        let free = u.non_pivots();
        let mut p = Mat::zeros(self.field(), free.len(), self.dim());
        for c in 0..self.dim() {
            let mut v = vec![0; self.dim()];
            v[c] = 1;
            u.reduce(&mut v);
            for (i, &r) in free.iter().enumerate() {
                p.set(i, c, v[r]);
            }
        }
        p
    }

    /// The image of an endomorphism or homomorphism `f: N → self`, as a
    /// subspace of `self`.
    pub fn image_of(&self, f: &Mat) -> Subspace {
        Subspace::span(&f.transpose())
    }

    pub(crate) fn check_compatible(&self, other: &Module) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::field_mismatch(self.field(), other.field()));
        }
        if self.group() != other.group() {
            return Err(Error::Precondition("modules are over different groups".into()));
        }
        Ok(())
    }

    fn check_subspace(&self, u: &Subspace) -> Result<()> {
        if u.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "subspace of F^{} in a module of dimension {}",
                u.ambient_dim(),
                self.dim()
            )));
        }
        if u.field() != self.field() {
            return Err(Error::field_mismatch(u.field(), self.field()));
        }
        Ok(())
    }

    /// Whether `f: self → other` commutes with the action.
    pub fn is_homomorphism_to(&self, other: &Module, f: &Mat) -> bool {
        f.rows() == other.dim()
            && f.cols() == self.dim()
            && self
                .group()
                .generators()
                .iter()
                .zip(self.generator_matrices())
                .all(|(g, a)| f.mul(a) == other.element_matrix_ref(g).mul(f))
    }

    /// Sum of the matrices of `elems`.
    pub(crate) fn sum_of(&self, elems: &[Perm]) -> Mat {
        let mut s = Mat::zeros(self.field(), self.dim(), self.dim());
        for g in elems {
            s.add_scaled(1, self.element_matrix_ref(g));
        }
        s
    }
}

/// The permutation module `Ind_H^G k` on the left cosets of `H`, ordered by
/// their least element.
pub fn perm_module(g: &Group, h: &Group, field: &Field) -> Result<Module> {
    let cosets = g.left_cosets(h)?;
    let d = cosets.reps.len();
    let action = |s: &Perm| -> Mat {
        let mut a = Mat::zeros(field, d, d);
        for (j, r) in cosets.reps.iter().enumerate() {
            let i = cosets.coset_of[g.index_of(&s.compose(r)).unwrap()];
            a.set(i, j, 1);
        }
        a
    };
    let gens = g.generators().iter().map(action).collect();
    let m = Module::new_unchecked(g, field, d, gens);
    if g.order() * d * d <= 1 << 24 {
        let mats = g.elements().iter().map(action).collect();
        let _ = m.data.elements.set(mats);
    }
    Ok(m)
}

/// The left regular module `kG`.
pub fn regular_module(g: &Group, field: &Field) -> Module {
    perm_module(g, &Group::trivial(g.degree()), field).expect("trivial subgroup")
}

pub fn restrict(m: &Module, h: &Group) -> Result<Module> {
    m.restrict(h)
}

pub fn element_matrix(m: &Module, g: &Perm) -> Result<Mat> {
    m.element_matrix(g)
}

/// `ker(M)`: elements acting as the identity.
pub fn module_kernel(m: &Module) -> Group {
    let g = m.group();
    let mats = m.element_matrices();
    let kept: Vec<Perm> = (0..g.order())
        .filter(|&i| mats[i].is_identity())
        .map(|i| g.element(i).clone())
        .collect();
    Group::from_elements(g.degree(), &kept).expect("kernel is a subgroup")
}

/// Column vector `e_i` of length `n`.
pub(crate) fn unit(n: usize, i: usize) -> Vec<Elem> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}
