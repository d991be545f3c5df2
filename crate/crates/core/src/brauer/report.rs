use serde::Serialize;

use crate::permgroup::{Group, Perm};

/// Verdict on one restricted Brauer quotient. Indecomposability is taken
/// over the algebraic closure: a module that splits only after extending
/// scalars counts as decomposable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Indecomposable,
    Zero,
    Decomposable,
}

impl Verdict {
    /// Indecomposable or zero.
    pub fn is_acceptable(self) -> bool {
        self != Verdict::Decomposable
    }
}

/// How a verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    /// Every `M(Q)`, `Q ≤ P`, restricted to `Q·C_G(Q)`.
    Definition,
    /// `P ≤ ker M` and `p ∤ |N_G(P) : P·C_G(P)|`.
    KernelCriterion,
    /// `P ⊴ G`: decided by `p ∤ |G : P·C_G(P)|`.
    NormalSubgroupCriterion,
    /// Some `R ⊴ G` in `P ∩ ker M` with every `M(Q)`, `R ≤ Q ≤ P`,
    /// indecomposable over `C_G(Q)`.
    IntervalCriterion,
    /// `|P : R| = p` for such an `R`: decided by `Res_{C_G(R)} M`.
    IndexPCriterion,
}

/// The computation at one subgroup `Q` of the vertex.
#[derive(Clone, Debug, Serialize)]
pub struct SubgroupRecord {
    #[serde(skip)]
    pub q: Group,
    /// Generators of `Q` as image arrays.
    pub generators: Vec<Vec<usize>>,
    pub order: usize,
    pub class_id: usize,
    /// Number of subgroups of `P` in this `G`-class (1 without reduction).
    pub class_size: usize,
    pub normalizer_order: usize,
    pub centralizer_order: usize,
    /// `|Q·C_G(Q)|`.
    pub qc_order: usize,
    /// `dim M^Q`.
    pub fixed_dim: usize,
    /// `dim M(Q)`.
    pub brauer_dim: usize,
    /// Summand dimensions of `M(Q)` over `Q·C_G(Q)`, absolutely.
    pub summands_qc: Vec<usize>,
    pub verdict_qc: Verdict,
    /// Summand dimensions of `M(Q)` over `C_G(Q)`, absolutely.
    pub summands_c: Vec<usize>,
    pub verdict_c: Verdict,
    pub criterion: Criterion,
}

impl SubgroupRecord {
    pub fn is_for(&self, q: &Group) -> bool {
        &self.q == q
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BrauerReport {
    pub group_order: usize,
    pub module_dim: usize,
    pub field: String,
    pub vertex_order: usize,
    pub vertex_generators: Vec<Vec<usize>>,
    /// One record per `G`-class of subgroups of `P` (per subgroup when
    /// conjugacy reduction is off), in lattice order.
    pub records: Vec<SubgroupRecord>,
    pub overall: bool,
    pub criterion: Criterion,
    /// The normal subgroup `R` used by the interval or index-`p`
    /// criterion.
    pub witness: Option<Vec<Vec<usize>>>,
    /// Fields over which some summand was split.
    pub extensions: Vec<String>,
    pub anomalies: Vec<String>,
}

impl BrauerReport {
    /// Overall verdict recomputed from the records.
    pub fn recomputed_overall(&self) -> bool {
        self.records.iter().all(|r| r.verdict_qc.is_acceptable())
    }

    /// First record with a decomposable quotient.
    pub fn first_failure(&self) -> Option<&SubgroupRecord> {
        self.records.iter().find(|r| !r.verdict_qc.is_acceptable())
    }

    /// The record whose class contains `q`.
    pub fn record_for(&self, q: &Group, g: &Group) -> Option<&SubgroupRecord> {
        self.records
            .iter()
            .find(|r| r.q.order() == q.order() && (r.is_for(q) || (r.class_size > 1 && r.q.is_conjugate(q, g))))
    }
}

pub(crate) fn images_of(gens: &[Perm]) -> Vec<Vec<usize>> {
    gens.iter().map(|g| g.images()).collect()
}
