use std::collections::BTreeSet;
use std::sync::OnceLock;

use super::report::{images_of, BrauerReport, Criterion, SubgroupRecord, Verdict};
use crate::decomp::{decompose_absolute, vertex_with, DecomposeOptions};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::fflinalg::Field;
use crate::permgroup::{product_set, subgroups_between_with_cap, conjugacy_reduce, Group, DEFAULT_MAX_LATTICE_ORDER};
use crate::repmod::{brauer_construction_with_normalizer, module_kernel, Module};

#[derive(Clone, Debug)]
pub struct BrauerOptions {
    /// Check one subgroup per `G`-conjugacy class instead of every one.
    pub conjugacy_reduction: bool,
    /// Confirm that `P` is a vertex before checking anything.
    pub verify_vertex: bool,
    pub exec: Exec,
    pub decompose: DecomposeOptions,
    /// Largest `|P|` whose subgroup lattice is enumerated.
    pub max_lattice_order: usize,
}

impl Default for BrauerOptions {
    fn default() -> Self {
        BrauerOptions {
            conjugacy_reduction: true,
            verify_vertex: true,
            exec: Exec::default(),
            decompose: DecomposeOptions::default(),
            max_lattice_order: DEFAULT_MAX_LATTICE_ORDER,
        }
    }
}

/// Outcome of the interval criterion.
#[derive(Clone, Debug)]
pub struct IntervalOutcome {
    pub verdict: bool,
    /// The first (largest) admissible `R` satisfying the condition.
    pub witness: Option<Group>,
    /// Every admissible `R` tried, with whether it satisfied the condition.
    pub candidates: Vec<(Group, bool)>,
    pub report: BrauerReport,
}

/// Outcome of the index-`p` criterion when its hypotheses hold.
#[derive(Clone, Debug)]
pub struct IndexPOutcome {
    pub verdict: bool,
    pub r: Group,
    /// Summand dimensions of `Res_{C_G(R)} M`, absolutely.
    pub restriction_summands: Vec<usize>,
    pub centralizer_order: usize,
    pub report: BrauerReport,
}

/// `|N_G(P) : P·C_G(P)|`.
pub fn automizer_index(g: &Group, p: &Group) -> Result<usize> {
    let n = g.normalizer(p)?;
    let c = g.centralizer(p)?;
    let pc = product_set(p, &c)?;
    Ok(n.order() / pc.order())
}

/// Whether `p ∤ |G : P·C_G(P)|` for a normal `p`-subgroup `P`, the numeric
/// form of saturation of the fusion system of `G` on `P`.
pub fn saturation_criterion(g: &Group, p: &Group, prime: u32) -> Result<bool> {
    p.require_subgroup_of(g, "P")?;
    if !p.is_normal_in(g) {
        return Err(Error::NotNormal("P is not normal in G".into()));
    }
    if !p.is_p_group(prime) {
        return Err(Error::NotPGroup { order: p.order(), p: prime });
    }
    Ok(automizer_index(g, p)? % prime as usize != 0)
}

/// Absolute verdict and summand dimensions of a module.
pub fn judge(m: &Module, opts: &DecomposeOptions) -> Result<(Verdict, Vec<usize>, Option<Field>)> {
    if m.dim() == 0 {
        return Ok((Verdict::Zero, vec![], None));
    }
    let (d, field) = decompose_absolute(m, opts)?;
    let ext = (&field != m.field()).then_some(field);
    let verdict = if d.len() == 1 {
        Verdict::Indecomposable
    } else {
        Verdict::Decomposable
    };
    Ok((verdict, d.dims(), ext))
}

/// Decides Brauer indecomposability of `Sc(G, P)` by every applicable
/// route. The definition-based report is computed once and shared; every
/// criterion asserts agreement with it.
pub struct BrauerChecker {
    m: Module,
    p: Group,
    opts: BrauerOptions,
    definition: OnceLock<BrauerReport>,
}

impl BrauerChecker {
    pub fn new(m: &Module, p: &Group, opts: &BrauerOptions) -> Result<BrauerChecker> {
        let prime = m.field().characteristic();
        p.require_subgroup_of(m.group(), "P")?;
        if !p.is_p_group(prime) {
            return Err(Error::NotPGroup { order: p.order(), p: prime });
        }
        if p.order() > opts.max_lattice_order {
            return Err(Error::ResourceCap {
                what: "vertex order",
                limit: opts.max_lattice_order,
            });
        }
        Ok(BrauerChecker {
            m: m.clone(),
            p: p.clone(),
            opts: opts.clone(),
            definition: OnceLock::new(),
        })
    }

    pub fn module(&self) -> &Module {
        &self.m
    }

    pub fn vertex(&self) -> &Group {
        &self.p
    }

    fn prime(&self) -> u32 {
        self.m.field().characteristic()
    }

    fn g(&self) -> &Group {
        self.m.group()
    }

    /// The report certified by the definition.
    pub fn definition(&self) -> Result<&BrauerReport> {
        if let Some(r) = self.definition.get() {
            return Ok(r);
        }
        let report = self.compute_definition()?;
        Ok(self.definition.get_or_init(|| report))
    }

    fn compute_definition(&self) -> Result<BrauerReport> {
        let g = self.g();
        if self.opts.verify_vertex {
            let v = vertex_with(&self.m, &self.p, &self.opts.decompose)?;
            if v.order() != self.p.order() {
                return Err(Error::VertexMismatch(format!(
                    "module has a vertex of order {}, not {}",
                    v.order(),
                    self.p.order()
                )));
            }
        }
        let subgroups = subgroups_between_with_cap(&Group::trivial(g.degree()), &self.p, self.opts.max_lattice_order)?;
        let (reps, sizes) = if self.opts.conjugacy_reduction {
            let classes = conjugacy_reduce(&subgroups, g, self.opts.exec);
            let mut sizes = vec![0usize; classes.reps.len()];
            for &c in &classes.class_of {
                sizes[c] += 1;
            }
            (classes.reps, sizes)
        } else {
            let n = subgroups.len();
            (subgroups, vec![1; n])
        };
        let indexed: Vec<(usize, Group)> = reps.into_iter().enumerate().collect();
        let analysed = self
            .opts
            .exec
            .try_map(&indexed, |(i, q)| analyse_subgroup(&self.m, q, *i, sizes[*i], &self.opts.decompose))?;

        let mut extensions = BTreeSet::new();
        let mut anomalies = Vec::new();
        let mut records = Vec::with_capacity(analysed.len());
        for (record, exts) in analysed {
            extensions.extend(exts.iter().map(|f| f.to_string()));
            if record.verdict_qc != record.verdict_c {
                anomalies.push(format!(
                    "Q of order {} (class {}): verdict over Q·C_G(Q) is {:?} but over C_G(Q) is {:?}",
                    record.order, record.class_id, record.verdict_qc, record.verdict_c
                ));
            }
            if record.verdict_qc == Verdict::Zero {
                anomalies.push(format!(
                    "Q of order {} (class {}): zero Brauer quotient at a subgroup of the vertex",
                    record.order, record.class_id
                ));
            }
            records.push(record);
        }
        let overall = records.iter().all(|r| r.verdict_qc.is_acceptable());
        Ok(BrauerReport {
            group_order: g.order(),
            module_dim: self.m.dim(),
            field: self.m.field().to_string(),
            vertex_order: self.p.order(),
            vertex_generators: images_of(self.p.generators()),
            records,
            overall,
            criterion: Criterion::Definition,
            witness: None,
            extensions: extensions.into_iter().collect(),
            anomalies,
        })
    }

    /// Recomputes one other member of every class of size > 1 and checks
    /// that it matches the class representative. Returns how many classes
    /// were checked.
    pub fn spot_check_conjugates(&self) -> Result<usize> {
        let def = self.definition()?;
        let g = self.g();
        let subgroups = subgroups_between_with_cap(&Group::trivial(g.degree()), &self.p, self.opts.max_lattice_order)?;
        let mut checked = 0;
        for rec in def.records.iter().filter(|r| r.class_size > 1) {
            let Some(other) = subgroups
                .iter()
                .find(|h| h.order() == rec.order && **h != rec.q && h.is_conjugate(&rec.q, g))
            else {
                continue;
            };
            let (again, _) = analyse_subgroup(&self.m, other, rec.class_id, rec.class_size, &self.opts.decompose)?;
            if again.brauer_dim != rec.brauer_dim
                || again.verdict_qc != rec.verdict_qc
                || again.verdict_c != rec.verdict_c
            {
                return Err(Error::Invariant(format!(
                    "conjugate subgroups of order {} give different Brauer quotients",
                    rec.order
                )));
            }
            checked += 1;
        }
        Ok(checked)
    }

    /// Normal subgroups of `G` inside `P ∩ ker M`, largest first, then in
    /// canonical order.
    pub fn admissible_normal_subgroups(&self) -> Result<Vec<Group>> {
        let g = self.g();
        let pk = self.p.intersection(&module_kernel(&self.m))?;
        let mut out: Vec<Group> = subgroups_between_with_cap(&Group::trivial(g.degree()), &pk, self.opts.max_lattice_order)?
            .into_iter()
            .filter(|r| r.is_normal_in(g))
            .collect();
        out.sort_by(|a, b| b.order().cmp(&a.order()).then_with(|| a.elements().cmp(b.elements())));
        Ok(out)
    }

    /// The interval criterion: `M` is Brauer indecomposable iff some
    /// admissible `R` has `Res^{N_G(Q)}_{C_G(Q)} M(Q)` indecomposable for
    /// every `R ≤ Q ≤ P`. A zero quotient in the interval counts as failure
    /// and is reported as an anomaly.
    pub fn interval_criterion(&self) -> Result<IntervalOutcome> {
        let def = self.definition()?;
        let g = self.g();
        let mut report = def.clone();
        let mut witness = None;
        let mut candidates = Vec::new();
        for r in self.admissible_normal_subgroups()? {
            let mut holds = true;
            let mut touched = Vec::new();
            for q in subgroups_between_with_cap(&r, &self.p, self.opts.max_lattice_order)? {
                let idx = report
                    .records
                    .iter()
                    .position(|rec| rec.q.order() == q.order() && (rec.is_for(&q) || (self.opts.conjugacy_reduction && rec.q.is_conjugate(&q, g))))
                    .ok_or_else(|| Error::Invariant("subgroup of P missing from the report".into()))?;
                let rec = &report.records[idx];
                if rec.verdict_c == Verdict::Zero {
                    let note = format!("zero Brauer quotient at Q of order {} inside the interval above R of order {}", q.order(), r.order());
                    if !report.anomalies.contains(&note) {
                        report.anomalies.push(note);
                    }
                }
                touched.push(idx);
                if rec.verdict_c != Verdict::Indecomposable {
                    holds = false;
                    break;
                }
            }
            candidates.push((r.clone(), holds));
            if holds {
                for idx in touched {
                    report.records[idx].criterion = Criterion::IntervalCriterion;
                }
                witness = Some(r);
                break;
            }
        }
        let verdict = witness.is_some();
        if verdict != def.overall {
            return Err(Error::Invariant(format!(
                "interval criterion gives {} but the definition gives {}",
                verdict, def.overall
            )));
        }
        report.overall = verdict;
        report.criterion = Criterion::IntervalCriterion;
        report.witness = witness.as_ref().map(|r| images_of(r.generators()));
        Ok(IntervalOutcome {
            verdict,
            witness,
            candidates,
            report,
        })
    }

    /// The index-`p` shortcut; `None` unless `p ∤ |N_G(P) : P·C_G(P)|` and
    /// some admissible `R` has index `p` in `P`. Every such `R` is checked.
    pub fn index_p_criterion(&self) -> Result<Option<IndexPOutcome>> {
        let prime = self.prime() as usize;
        if automizer_index(self.g(), &self.p)? % prime == 0 {
            return Ok(None);
        }
        let rs: Vec<Group> = self
            .admissible_normal_subgroups()?
            .into_iter()
            .filter(|r| r.order() * prime == self.p.order())
            .collect();
        if rs.is_empty() {
            return Ok(None);
        }
        let def = self.definition()?;
        let mut first: Option<IndexPOutcome> = None;
        for r in rs {
            let c = self.g().centralizer(&r)?;
            let (v, dims, ext) = judge(&self.m.restrict(&c)?, &self.opts.decompose)?;
            let verdict = v == Verdict::Indecomposable;
            if verdict != def.overall {
                return Err(Error::Invariant(format!(
                    "index-p criterion with R of order {} gives {} but the definition gives {}",
                    r.order(),
                    verdict,
                    def.overall
                )));
            }
            if first.is_none() {
                let mut report = def.clone();
                report.criterion = Criterion::IndexPCriterion;
                report.witness = Some(images_of(r.generators()));
                if let Some(f) = ext {
                    let name = f.to_string();
                    if !report.extensions.contains(&name) {
                        report.extensions.push(name);
                        report.extensions.sort();
                    }
                }
                first = Some(IndexPOutcome {
                    verdict,
                    r,
                    restriction_summands: dims,
                    centralizer_order: c.order(),
                    report,
                });
            }
        }
        Ok(first)
    }

    /// `Some(true)` when `P ≤ ker M` and `p ∤ |N_G(P) : P·C_G(P)|`, after
    /// confirming the definition agrees; `None` otherwise.
    pub fn kernel_criterion(&self) -> Result<Option<bool>> {
        let prime = self.prime() as usize;
        if !self.p.is_subgroup_of(&module_kernel(&self.m)) || automizer_index(self.g(), &self.p)? % prime == 0 {
            return Ok(None);
        }
        if !self.definition()?.overall {
            return Err(Error::Invariant(
                "kernel criterion holds but the definition finds a decomposable quotient".into(),
            ));
        }
        Ok(Some(true))
    }

    /// For normal `P`: `p ∤ |G : P·C_G(P)|`, asserted equal to the
    /// definition verdict.
    pub fn normal_subgroup_criterion(&self) -> Result<bool> {
        let crit = saturation_criterion(self.g(), &self.p, self.prime())?;
        let def = self.definition()?.overall;
        if crit != def {
            return Err(Error::Invariant(format!(
                "normal-subgroup criterion gives {} but the definition gives {}",
                crit, def
            )));
        }
        Ok(crit)
    }

    /// Every applicable criterion, each cross-checked against the
    /// definition. The report names the first criterion that applies in
    /// the order kernel, normal subgroup, index `p`, interval.
    pub fn run_all(&self) -> Result<BrauerReport> {
        let mut report = self.interval_criterion()?.report;
        let kernel = self.kernel_criterion()?.is_some();
        let normal = if self.p.is_normal_in(self.g()) {
            self.normal_subgroup_criterion()?;
            true
        } else {
            false
        };
        let index_p = self.index_p_criterion()?;
        if let Some(out) = &index_p {
            report.extensions = out.report.extensions.clone();
        }
        report.criterion = if kernel {
            Criterion::KernelCriterion
        } else if normal {
            Criterion::NormalSubgroupCriterion
        } else if let Some(out) = index_p {
            report.witness = out.report.witness;
            Criterion::IndexPCriterion
        } else {
            Criterion::IntervalCriterion
        };
        Ok(report)
    }
}

fn analyse_subgroup(
    m: &Module,
    q: &Group,
    class_id: usize,
    class_size: usize,
    opts: &DecomposeOptions,
) -> Result<(SubgroupRecord, Vec<Field>)> {
    let g = m.group();
    let n = g.normalizer_with(q, Exec::Sequential)?;
    let c = g.centralizer_with(q, Exec::Sequential)?;
    let qc = product_set(q, &c)?;
    let bq = brauer_construction_with_normalizer(m, q, &n)?;
    let (verdict_qc, summands_qc, e1) = judge(&bq.module.restrict(&qc)?, opts)?;
    let (verdict_c, summands_c, e2) = judge(&bq.module.restrict(&c)?, opts)?;
    let record = SubgroupRecord {
        q: q.clone(),
        generators: images_of(q.generators()),
        order: q.order(),
        class_id,
        class_size,
        normalizer_order: n.order(),
        centralizer_order: c.order(),
        qc_order: qc.order(),
        fixed_dim: bq.fixed.dim(),
        brauer_dim: bq.dim(),
        summands_qc,
        verdict_qc,
        summands_c,
        verdict_c,
        criterion: Criterion::Definition,
    };
    Ok((record, e1.into_iter().chain(e2).collect()))
}

pub fn is_brauer_indecomposable_definition(m: &Module, p: &Group) -> Result<BrauerReport> {
    is_brauer_indecomposable_definition_with(m, p, &BrauerOptions::default())
}

pub fn is_brauer_indecomposable_definition_with(m: &Module, p: &Group, opts: &BrauerOptions) -> Result<BrauerReport> {
    Ok(BrauerChecker::new(m, p, opts)?.definition()?.clone())
}

pub fn check_interval_criterion(m: &Module, p: &Group) -> Result<IntervalOutcome> {
    BrauerChecker::new(m, p, &BrauerOptions::default())?.interval_criterion()
}

pub fn check_index_p_criterion(m: &Module, p: &Group) -> Result<Option<IndexPOutcome>> {
    BrauerChecker::new(m, p, &BrauerOptions::default())?.index_p_criterion()
}

pub fn check_kernel_criterion(m: &Module, p: &Group) -> Result<Option<bool>> {
    BrauerChecker::new(m, p, &BrauerOptions::default())?.kernel_criterion()
}

pub fn check_normal_subgroup_criterion(m: &Module, p: &Group) -> Result<bool> {
    BrauerChecker::new(m, p, &BrauerOptions::default())?.normal_subgroup_criterion()
}
