//! Built-in example jobs and the expectations they are checked against.

use std::collections::BTreeMap;

use anyhow::Result;
use serde_json::{json, Value};

use scott_brauer::brauer::{automizer_index, BrauerChecker, Verdict};
use scott_brauer::decomp::{decompose_with, head, is_isomorphic, loewy_layers, scott_module_with};
use scott_brauer::fflinalg::Field;
use scott_brauer::fixtures::{alternating_group, dihedral_times_a4, symmetric_four};
use scott_brauer::permgroup::{Group, Perm};
use scott_brauer::repmod::{module_kernel, perm_module};

use crate::commands::{brauer_options, Outcome};
use crate::failure::Failure;
use crate::job::{FieldSpec, GroupSpec, Job, JobOptions, JobSpec, SubgroupSpec};

pub const EXAMPLES: [&str; 3] = ["ex2.3", "ex3.4", "ex3.5"];

fn perms(gens: &[Perm]) -> SubgroupSpec {
    SubgroupSpec::Permutations(gens.iter().map(|g| g.images()).collect())
}

fn spec(g: &Group, gens: &[Perm], subgroups: Vec<(&str, SubgroupSpec)>, vertex: &str) -> JobSpec {
    JobSpec {
        field: FieldSpec { p: 2, m: 1 },
        group: GroupSpec {
            degree: g.degree(),
            generators: gens.iter().map(|x| x.images()).collect(),
        },
        subgroups: subgroups.into_iter().map(|(n, s)| (n.to_string(), s)).collect::<BTreeMap<_, _>>(),
        vertex: Some(vertex.to_string()),
        q: None,
        module: None,
        options: JobOptions::default(),
    }
}

/// The job document of a built-in example.
pub fn example_job(id: &str) -> Result<JobSpec> {
    match id {
        "ex2.3" => {
            let s = symmetric_four();
            let gens = s.g.generators().to_vec();
            Ok(spec(
                &s.g,
                &gens,
                vec![("P", perms(s.p.generators())), ("H", perms(s.h.generators()))],
                "P",
            ))
        }
        "ex3.4" | "ex3.5" => {
            let fx = dihedral_times_a4()?;
            let gens = vec![fx.a.clone(), fx.y.clone(), fx.z.clone(), fx.t.clone(), fx.b.clone(), fx.c.clone()];
            // generator order: a, y, z, t, b, c
            let idx = |ix: &[usize]| SubgroupSpec::GeneratorIndices(ix.to_vec());
            let subgroups = if id == "ex3.4" {
                vec![
                    ("P", perms(&[fx.y.clone(), fx.z.clone(), fx.x()])),
                    ("R", idx(&[1, 2])),
                    ("Q", perms(&[fx.x(), fx.z.clone()])),
                ]
            } else {
                vec![("P", idx(&[0, 1, 2, 4])), ("R", idx(&[0, 1, 2]))]
            };
            Ok(spec(&fx.g, &gens, subgroups, "P"))
        }
        other => Err(Failure::Parse(format!(
            "unknown example {}; expected one of {}",
            other,
            EXAMPLES.join(", ")
        ))
        .into()),
    }
}

struct Checks {
    out: Outcome,
    failed: Vec<String>,
}

impl Checks {
    fn new() -> Checks {
        Checks {
            out: Outcome::default(),
            failed: Vec::new(),
        }
    }

    fn check(&mut self, subject: &str, expected: Value, actual: Value) {
        let ok = expected == actual;
        self.out.lines.push(format!(
            "{} {}: {}{}",
            if ok { "ok  " } else { "FAIL" },
            subject,
            actual,
            if ok { String::new() } else { format!(" (expected {})", expected) }
        ));
        if !ok {
            self.failed.push(subject.to_string());
        }
        self.out.verdicts.push(json!({
            "subject": subject,
            "expected": expected,
            "actual": actual,
            "ok": ok,
        }));
    }

    fn note(&mut self, line: String) {
        self.out.lines.push(line);
    }
}

/// Runs an example job and compares every recorded expectation. Returns
/// the outcome and the failed subjects.
pub fn reproduce(id: &str, job: &Job) -> Result<(Outcome, Vec<String>)> {
    let mut c = Checks::new();
    let text = job.spec.emit();
    c.check("job round trip", json!(true), json!(JobSpec::parse(&text)? == job.spec));
    match id {
        "ex2.3" => ex23(job, &mut c)?,
        "ex3.4" => ex34(job, &mut c)?,
        "ex3.5" => ex35(job, &mut c)?,
        _ => unreachable!("example ids are validated when the job is built"),
    }
    Ok((c.out, c.failed))
}

fn verdict(v: Verdict) -> Value {
    serde_json::to_value(v).expect("verdicts serialize")
}

fn ex23(job: &Job, c: &mut Checks) -> Result<()> {
    let g = &job.group;
    let p = job.named("P")?;
    let h = job.named("H")?;
    c.check("|G|", json!(24), json!(g.order()));
    c.check("P = O_2(G)", json!(true), json!(*p == g.o_p(2)?));
    let sc_h = scott_module_with(g, h, &job.field, &job.decompose)?;
    let m = job.target_module()?;
    c.check("dim Sc(G, P)", json!(2), json!(m.dim()));
    c.check("Sc(G, H) = Sc(G, P)", json!(true), json!(is_isomorphic(&sc_h.module, &m)?));
    let res = decompose_with(&m.restrict(p)?, &job.decompose)?;
    c.check("Res^G_P M summands", json!([1, 1]), json!(res.dims()));
    c.check("|N_G(P) : P·C_G(P)|", json!(6), json!(automizer_index(g, p)?));
    let checker = BrauerChecker::new(&m, p, &brauer_options(job))?;
    let def = checker.definition()?;
    let at_p = def.record_for(p, g).map(|r| r.verdict_qc);
    c.check("M(P) over P·C_G(P)", verdict(Verdict::Decomposable), json!(at_p));
    c.check("normal-subgroup criterion", json!(false), json!(checker.normal_subgroup_criterion()?));
    c.check("BI", json!(false), json!(def.overall));
    c.note(format!("BI: {}", def.overall));
    Ok(())
}

fn ex34(job: &Job, c: &mut Checks) -> Result<()> {
    let g = &job.group;
    let (p, r, q) = (job.named("P")?, job.named("R")?, job.named("Q")?);
    c.check("|G|", json!(96), json!(g.order()));
    c.check("|P|", json!(8), json!(p.order()));
    let sc = scott_module_with(g, p, &job.field, &job.decompose)?;
    let m = sc.module;
    c.check("dim Sc(G, P)", json!(12), json!(m.dim()));
    c.check("Ind_P^G k indecomposable", json!(true), json!(sc.decomposition.len() == 1));
    c.check("R normal in G", json!(true), json!(r.is_normal_in(g)));
    c.check("R in ker M", json!(true), json!(r.is_subgroup_of(&module_kernel(&m))));
    let c_r = g.centralizer(r)?;
    c.check("|C_G(R)|", json!(48), json!(c_r.order()));
    let res = decompose_with(&m.restrict(&c_r)?, &job.decompose)?;
    c.check("Res_C_G(R) M decomposable", json!(true), json!(res.len() >= 2));
    c.note(format!("Res_C_G(R) M summands: {:?}", res.dims()));
    let checker = BrauerChecker::new(&m, p, &brauer_options(job))?;
    let def = checker.definition()?;
    let vc = |h: &Group| def.record_for(h, g).map(|rec| rec.verdict_c);
    c.check("M(P) over C_G(P)", verdict(Verdict::Indecomposable), json!(vc(p)));
    c.check("M(Q) over C_G(Q)", verdict(Verdict::Indecomposable), json!(vc(q)));
    c.check("M(R) over R·C_G(R)", verdict(Verdict::Decomposable), json!(def.record_for(r, g).map(|x| x.verdict_qc)));
    c.check("BI by definition", json!(false), json!(def.overall));
    c.check("BI by interval criterion", json!(false), json!(checker.interval_criterion()?.verdict));
    let idx = checker.index_p_criterion()?;
    c.check("BI by index-p criterion", json!(Some(false)), json!(idx.map(|o| o.verdict)));
    c.note(format!("BI: {}", def.overall));
    Ok(())
}

fn ex35(job: &Job, c: &mut Checks) -> Result<()> {
    let g = &job.group;
    let (p, r) = (job.named("P")?, job.named("R")?);
    c.check("|G|", json!(96), json!(g.order()));
    c.check("|P|", json!(16), json!(p.order()));
    let ind = perm_module(g, p, &job.field)?;
    c.check("dim Ind_P^G k", json!(6), json!(ind.dim()));
    c.check(
        "Ind_P^G k indecomposable",
        json!(true),
        json!(decompose_with(&ind, &job.decompose)?.len() == 1),
    );
    let m = job.target_module()?;
    c.check("Sc(G, P) = Ind_P^G k", json!(true), json!(is_isomorphic(&m, &ind)?));

    let a4 = alternating_group(4);
    let c2 = a4.subgroup(&[Perm::from_cycles(4, &[&[0, 1], &[2, 3]])?])?;
    let small = perm_module(&a4, &c2, &Field::new(2, 2)?)?;
    let layers = loewy_layers(&small)?;
    c.check("Ind_C2^A4 k radical layers over GF(4)", json!([3, 3]), json!(layers.radical_layers));
    c.check("Ind_C2^A4 k socle layers over GF(4)", json!([3, 3]), json!(layers.socle_layers));
    let top = decompose_with(&head(&small)?, &job.decompose)?;
    let mut distinct = top.len();
    for i in 0..top.len() {
        for j in i + 1..top.len() {
            if is_isomorphic(&top.summands[i].module, &top.summands[j].module)? {
                distinct -= 1;
            }
        }
    }
    c.check("distinct head factors", json!(3), json!(distinct));

    c.check("|P : R|", json!(2), json!(p.order() / r.order()));
    c.check("R normal in G", json!(true), json!(r.is_normal_in(g)));
    c.check("R in ker M", json!(true), json!(r.is_subgroup_of(&module_kernel(&m))));
    let c_r = g.centralizer(r)?;
    c.check(
        "Res_C_G(R) M indecomposable",
        json!(true),
        json!(decompose_with(&m.restrict(&c_r)?, &job.decompose)?.len() == 1),
    );
    let index = automizer_index(g, p)?;
    c.check("|N_G(P) : P·C_G(P)|", json!(1), json!(index));
    c.note(format!("index: {}", index));
    let checker = BrauerChecker::new(&m, p, &brauer_options(job))?;
    let def = checker.definition()?.overall;
    c.check("BI by definition", json!(true), json!(def));
    c.check("BI by interval criterion", json!(true), json!(checker.interval_criterion()?.verdict));
    let idx = checker.index_p_criterion()?;
    c.check("BI by index-p criterion", json!(Some(true)), json!(idx.map(|o| o.verdict)));
    c.note(format!("BI: {}", def));
    Ok(())
}
