use anyhow::Result;
use serde_json::{json, Value};

use scott_brauer::brauer::{judge, BrauerChecker, BrauerOptions};
use scott_brauer::decomp::{decompose_absolute, decompose_with, scott_module_with};
use scott_brauer::exec::Exec;
use scott_brauer::repmod::brauer_construction;

use scott_brauer::permgroup::Group;

use crate::failure::Failure;
use crate::job::Job;

/// What a command produced, before formatting.
#[derive(Default)]
pub struct Outcome {
    pub verdicts: Vec<Value>,
    pub extensions: Vec<String>,
    /// Human-readable report.
    pub lines: Vec<String>,
}

impl Outcome {
    fn extend_field(&mut self, name: String) {
        if !self.extensions.contains(&name) {
            self.extensions.push(name);
            self.extensions.sort();
        }
    }
}

fn require_p_subgroup(job: &Job, h: &Group, what: &str) -> Result<()> {
    let p = job.field.characteristic();
    if !h.is_p_group(p) {
        return Err(Failure::Precondition(format!("{} of order {} is not a {}-group", what, h.order(), p)).into());
    }
    Ok(())
}

pub fn brauer_options(job: &Job) -> BrauerOptions {
    BrauerOptions {
        conjugacy_reduction: job.spec.options.conjugacy_reduction,
        exec: Exec::default(),
        decompose: job.decompose.clone(),
        ..BrauerOptions::default()
    }
}

pub fn scott(job: &Job) -> Result<Outcome> {
    let h = job.vertex()?;
    if job.group.order() / h.order() > job.max_dim {
        return Err(Failure::Resource(format!("|G : H| = {} exceeds the cap", job.group.order() / h.order())).into());
    }
    let sc = scott_module_with(&job.group, h, &job.field, &job.decompose)?;
    let dims = sc.decomposition.dims();
    let mut out = Outcome::default();
    out.lines.push(format!("Sc(G, H): dim {}", sc.module.dim()));
    out.lines.push(format!("Ind_H^G k: dim {}, summands {:?}", sc.permutation_module.dim(), dims));
    out.verdicts.push(json!({
        "subject": "scott_module",
        "subgroup_order": h.order(),
        "dim": sc.module.dim(),
        "permutation_module_dim": sc.permutation_module.dim(),
        "permutation_summands": dims,
        "scott_summand_index": sc.index,
    }));
    Ok(out)
}

pub fn decompose(job: &Job) -> Result<Outcome> {
    let m = job.target_module()?;
    let base = decompose_with(&m, &job.decompose)?;
    let (abs, field) = decompose_absolute(&m, &job.decompose)?;
    let mut out = Outcome::default();
    let residue: Vec<u32> = base.summands.iter().map(|s| s.residue_degree).collect();
    out.lines.push(format!("module dim {} over {}", m.dim(), job.field));
    out.lines.push(format!("summands {:?} (residue degrees {:?})", base.dims(), residue));
    out.verdicts.push(json!({
        "subject": "decomposition",
        "field": job.field.to_string(),
        "dim": m.dim(),
        "summands": base.dims(),
        "residue_degrees": residue,
    }));
    if field != job.field {
        out.lines.push(format!("over {}: summands {:?}", field, abs.dims()));
        out.extend_field(field.to_string());
    }
    out.verdicts.push(json!({
        "subject": "absolute_decomposition",
        "field": field.to_string(),
        "summands": abs.dims(),
        "absolutely_indecomposable": abs.len() == 1,
    }));
    Ok(out)
}

pub fn brauer_quotient(job: &Job) -> Result<Outcome> {
    let m = job.target_module()?;
    let name = job
        .spec
        .q
        .as_deref()
        .ok_or_else(|| Failure::Parse("brauer-quotient needs a subgroup q".into()))?;
    let q = job.named(name)?;
    require_p_subgroup(job, q, "Q")?;
    let bq = brauer_construction(&m, q)?;
    let c = job.group.centralizer(q)?;
    let qc = scott_brauer::permgroup::product_set(q, &c)?;
    let (v_qc, s_qc, e1) = judge(&bq.module.restrict(&qc)?, &job.decompose)?;
    let (v_c, s_c, e2) = judge(&bq.module.restrict(&c)?, &job.decompose)?;
    let mut out = Outcome::default();
    for f in e1.into_iter().chain(e2) {
        out.extend_field(f.to_string());
    }
    out.lines.push(format!(
        "M^Q: dim {}; M(Q): dim {} as a module for N_G(Q) of order {}",
        bq.fixed.dim(),
        bq.dim(),
        bq.normalizer.order()
    ));
    out.lines.push(format!("over Q·C_G(Q) (order {}): {:?} {:?}", qc.order(), v_qc, s_qc));
    out.lines.push(format!("over C_G(Q) (order {}): {:?} {:?}", c.order(), v_c, s_c));
    out.verdicts.push(json!({
        "subject": "brauer_quotient",
        "q_order": q.order(),
        "normalizer_order": bq.normalizer.order(),
        "centralizer_order": c.order(),
        "fixed_dim": bq.fixed.dim(),
        "dim": bq.dim(),
        "verdict_qc": v_qc,
        "summands_qc": s_qc,
        "verdict_c": v_c,
        "summands_c": s_c,
    }));
    Ok(out)
}

pub fn check_bi(job: &Job) -> Result<Outcome> {
    let p = job.vertex()?;
    require_p_subgroup(job, p, "the vertex")?;
    let m = job.target_module()?;
    let checker = BrauerChecker::new(&m, p, &brauer_options(job))?;
    let report = checker.run_all()?;
    let mut out = Outcome {
        extensions: report.extensions.clone(),
        ..Outcome::default()
    };
    out.lines.push(format!("BI: {}", report.overall));
    out.lines.push(format!("decided by: {:?}", report.criterion));
    for r in &report.records {
        out.lines.push(format!(
            "  Q of order {:>3} (class {}, {} conjugates): dim M(Q) = {}, over Q·C_G(Q) {:?} {:?}, over C_G(Q) {:?}",
            r.order, r.class_id, r.class_size, r.brauer_dim, r.verdict_qc, r.summands_qc, r.verdict_c
        ));
    }
    for a in &report.anomalies {
        out.lines.push(format!("anomaly: {}", a));
    }
    out.verdicts.push(json!({
        "subject": "brauer_indecomposable",
        "value": report.overall,
        "criterion": report.criterion,
        "witness": report.witness,
        "module_dim": report.module_dim,
        "vertex_order": report.vertex_order,
        "anomalies": report.anomalies,
    }));
    for r in &report.records {
        let mut v = serde_json::to_value(r)?;
        v["subject"] = json!("subgroup");
        out.verdicts.push(v);
    }
    Ok(out)
}
