//! Brauer indecomposability of Scott modules: the direct check over all
//! subgroups of the vertex, and the shortcuts through normal subgroups in
//! the kernel, each cross-checked against the direct check.

mod checker;
mod report;
mod transport;

pub use checker::{
    automizer_index, check_index_p_criterion, check_interval_criterion, check_kernel_criterion,
    check_normal_subgroup_criterion, is_brauer_indecomposable_definition,
    is_brauer_indecomposable_definition_with, judge, saturation_criterion, BrauerChecker, BrauerOptions,
    IndexPOutcome, IntervalOutcome,
};
pub use report::{BrauerReport, Criterion, SubgroupRecord, Verdict};
pub use transport::{compare_with_normal_product, compare_with_normal_product_opts, NormalProductEvidence};
