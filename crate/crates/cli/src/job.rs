//! The job document: a JSON description of a field, a permutation group,
//! named subgroups and the module to work on.

use std::collections::BTreeMap;

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use scott_brauer::decomp::{scott_module_with, DecomposeOptions};
use scott_brauer::fflinalg::Field;
use scott_brauer::permgroup::{Group, Perm, DEFAULT_MAX_ORDER};
use scott_brauer::repmod::{perm_module, regular_module, Module};

use crate::failure::Failure;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub field: FieldSpec,
    pub group: GroupSpec,
    #[serde(default)]
    pub subgroups: BTreeMap<String, SubgroupSpec>,
    /// Named subgroup used as the vertex `P` (or the subgroup `H` of
    /// `Sc(G, H)`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex: Option<String>,
    /// Named subgroup `Q` for `brauer-quotient`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<String>,
    /// Module for `decompose` and `brauer-quotient`; defaults to the Scott
    /// module of the vertex.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleSpec>,
    #[serde(default)]
    pub options: JobOptions,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub p: u32,
    #[serde(default = "one")]
    pub m: u32,
}

fn one() -> u32 {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub degree: usize,
    /// 0-based image arrays.
    pub generators: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubgroupSpec {
    /// Indices into the group's generator list.
    GeneratorIndices(Vec<usize>),
    Permutations(Vec<Vec<usize>>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleSpec {
    /// `Ind_H^G k` for a named `H`.
    Permutation(String),
    /// `Sc(G, H)` for a named `H`.
    Scott(String),
    Regular,
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct JobOptions {
    pub conjugacy_reduction: bool,
    pub max_extension_degree: u32,
    pub max_order: Option<usize>,
    pub max_dim: Option<usize>,
}

impl Default for JobOptions {
    fn default() -> Self {
        JobOptions {
            conjugacy_reduction: true,
            max_extension_degree: 16,
            max_order: None,
            max_dim: None,
        }
    }
}

impl JobSpec {
    pub fn parse(text: &str) -> Result<JobSpec> {
        serde_json::from_str(text).map_err(|e| Failure::Parse(format!("job document: {}", e)).into())
    }

    pub fn emit(&self) -> String {
        serde_json::to_string_pretty(self).expect("job specs serialize")
    }

    /// SHA-256 of the canonical serialization.
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(serde_json::to_vec(self).expect("job specs serialize")))
    }
}

/// A job with its group, field and subgroups constructed and validated.
pub struct Job {
    pub spec: JobSpec,
    pub field: Field,
    pub group: Group,
    pub subgroups: BTreeMap<String, Group>,
    pub decompose: DecomposeOptions,
    pub max_dim: usize,
}

fn perm(degree: usize, images: &[usize], what: &str) -> Result<Perm> {
    if images.len() != degree {
        return Err(Failure::Parse(format!("{}: expected {} images, got {}", what, degree, images.len())).into());
    }
    Perm::new(images).map_err(|e| Failure::Parse(format!("{}: {}", what, e)).into())
}

impl Job {
    pub fn build(spec: JobSpec, seed: u64) -> Result<Job> {
        let field = Field::new(spec.field.p, spec.field.m).context("field")?;
        let degree = spec.group.degree;
        let gens: Vec<Perm> = spec
            .group
            .generators
            .iter()
            .enumerate()
            .map(|(i, g)| perm(degree, g, &format!("generator {}", i)))
            .collect::<Result<_>>()?;
        let max_order = spec.options.max_order.unwrap_or(DEFAULT_MAX_ORDER);
        let group = Group::generate_with_cap(degree, &gens, max_order).context("group")?;
        let mut subgroups = BTreeMap::new();
        for (name, sub) in &spec.subgroups {
            let sub_gens: Vec<Perm> = match sub {
                SubgroupSpec::GeneratorIndices(ix) => ix
                    .iter()
                    .map(|&i| {
                        gens.get(i)
                            .cloned()
                            .ok_or_else(|| Failure::Parse(format!("subgroup {}: no generator {}", name, i)).into())
                    })
                    .collect::<Result<_>>()?,
                SubgroupSpec::Permutations(ps) => ps
                    .iter()
                    .map(|p| perm(degree, p, &format!("subgroup {}", name)))
                    .collect::<Result<_>>()?,
            };
            let h = group
                .subgroup(&sub_gens)
                .with_context(|| format!("subgroup {}", name))?;
            subgroups.insert(name.clone(), h);
        }
        let decompose = DecomposeOptions {
            seed,
            max_extension_degree: spec.options.max_extension_degree,
            max_dim: spec.options.max_dim.unwrap_or(DecomposeOptions::default().max_dim),
            ..DecomposeOptions::default()
        };
        let max_dim = decompose.max_dim;
        Ok(Job {
            spec,
            field,
            group,
            subgroups,
            decompose,
            max_dim,
        })
    }

    pub fn named(&self, name: &str) -> Result<&Group> {
        self.subgroups
            .get(name)
            .ok_or_else(|| Failure::Parse(format!("no subgroup named {}", name)).into())
    }

    pub fn vertex(&self) -> Result<&Group> {
        let name = self
            .spec
            .vertex
            .as_deref()
            .ok_or_else(|| Failure::Parse("job has no vertex".into()))?;
        self.named(name)
    }

    fn check_index(&self, h: &Group) -> Result<()> {
        let index = self.group.order() / h.order();
        if index > self.max_dim {
            return Err(Failure::Resource(format!(
                "module dimension {} exceeds the cap {}",
                index, self.max_dim
            ))
            .into());
        }
        Ok(())
    }

    pub fn module(&self, spec: &ModuleSpec) -> Result<Module> {
        Ok(match spec {
            ModuleSpec::Permutation(name) => {
                let h = self.named(name)?;
                self.check_index(h)?;
                perm_module(&self.group, h, &self.field)?
            }
            ModuleSpec::Scott(name) => {
                let h = self.named(name)?;
                self.check_index(h)?;
                scott_module_with(&self.group, h, &self.field, &self.decompose)?.module
            }
            ModuleSpec::Regular => {
                self.check_index(&Group::trivial(self.group.degree()))?;
                regular_module(&self.group, &self.field)
            }
            ModuleSpec::Trivial => Module::trivial(&self.group, &self.field),
        })
    }

    /// The job's module, or the Scott module of the vertex.
    pub fn target_module(&self) -> Result<Module> {
        match (&self.spec.module, &self.spec.vertex) {
            (Some(m), _) => self.module(m),
            (None, Some(v)) => self.module(&ModuleSpec::Scott(v.clone())),
            (None, None) => Err(Failure::Parse("job names neither a module nor a vertex".into()).into()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3_job() -> JobSpec {
        let mut subgroups = BTreeMap::new();
        subgroups.insert("P".into(), SubgroupSpec::GeneratorIndices(vec![1]));
        subgroups.insert("C3".into(), SubgroupSpec::Permutations(vec![vec![1, 2, 0]]));
        JobSpec {
            field: FieldSpec { p: 2, m: 1 },
            group: GroupSpec {
                degree: 3,
                generators: vec![vec![1, 2, 0], vec![1, 0, 2]],
            },
            subgroups,
            vertex: Some("P".into()),
            q: None,
            module: Some(ModuleSpec::Permutation("C3".into())),
            options: JobOptions::default(),
        }
    }

    #[test]
    fn round_trip() {
        let spec = s3_job();
        let text = spec.emit();
        assert_eq!(JobSpec::parse(&text).unwrap(), spec);
        assert_eq!(JobSpec::parse(&text).unwrap().digest(), spec.digest());
    }

    #[test]
    fn defaults_fill_in() {
        let spec = JobSpec::parse(r#"{"field": {"p": 3}, "group": {"degree": 1, "generators": []}}"#).unwrap();
        assert_eq!(spec.field.m, 1);
        assert!(spec.options.conjugacy_reduction);
        assert!(spec.subgroups.is_empty());
    }

    #[test]
    fn rejects_bad_permutations() {
        let mut spec = s3_job();
        spec.group.generators.push(vec![0, 0, 1]);
        let err = Job::build(spec, 0).err().unwrap();
        assert!(matches!(err.downcast_ref::<Failure>(), Some(Failure::Parse(_))));
    }

    #[test]
    fn builds_named_subgroups() {
        let job = Job::build(s3_job(), 0).unwrap();
        assert_eq!(job.group.order(), 6);
        assert_eq!(job.named("P").unwrap().order(), 2);
        assert_eq!(job.named("C3").unwrap().order(), 3);
        assert_eq!(job.target_module().unwrap().dim(), 2);
    }
}
