//! Built-in instances, named subalgebras and file loading.

use std::collections::BTreeSet;
use std::path::Path;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlinalg::matrix::unit_vector;
use crate::exactlinalg::Vector;
use crate::hopfcore::{CoidealSubalgebra, FinHopfAlgebra};

use super::builders::{function_algebra, group_algebra, pullback_generators, taft4};
use super::format;
use super::group::GroupTable;

/// A named Hopf subalgebra with the generators it was declared by.
#[derive(Debug, Clone)]
pub struct NamedSubalgebra {
    pub name: String,
    pub generators: Vec<Vector>,
    pub subalgebra: CoidealSubalgebra,
}

/// A validated Hopf algebra with its named Hopf subalgebras.
#[derive(Debug, Clone)]
pub struct Instance {
    pub hopf: Arc<FinHopfAlgebra>,
    pub subalgebras: Vec<NamedSubalgebra>,
}

impl Instance {
    /// Validates the Hopf algebra and every named subalgebra.
    pub fn new(hopf: FinHopfAlgebra, named: Vec<(String, Vec<Vector>)>) -> Result<Self> {
        hopf.validate()?;
        let hopf = Arc::new(hopf);
        let subalgebras = named
            .into_iter()
            .map(|(name, generators)| {
                let subalgebra = CoidealSubalgebra::generated(&name, hopf.clone(), &generators)?;
                Ok(NamedSubalgebra {
                    name,
                    generators,
                    subalgebra,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Instance { hopf, subalgebras })
    }

    pub fn name(&self) -> &str {
        self.hopf.name()
    }

    pub fn subalgebra(&self, name: &str) -> Result<&CoidealSubalgebra> {
        self.subalgebras
            .iter()
            .find(|s| s.name == name)
            .map(|s| &s.subalgebra)
            .ok_or_else(|| Error::UnknownName(format!("subalgebra {name} of {}", self.name())))
    }

    pub fn subalgebra_names(&self) -> Vec<&str> {
        self.subalgebras.iter().map(|s| s.name.as_str()).collect()
    }

    /// The instance in the file format.
    pub fn to_file_string(&self) -> String {
        let subs: Vec<(String, Vec<Vector>)> = self
            .subalgebras
            .iter()
            .map(|s| (s.name.clone(), s.generators.clone()))
            .collect();
        format::serialize(&self.hopf, &subs)
    }
}

/// Parses and validates instance text.
pub fn load_str(name: &str, text: &str) -> Result<Instance> {
    let file = format::parse(name, text)?;
    Instance::new(file.hopf, file.subalgebras)
}

/// Loads an instance file; its name is the file stem.
pub fn load_instance(path: &Path) -> Result<Instance> {
    let text = std::fs::read_to_string(path)?;
    let name = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("instance");
    load_str(name, &text)
}

/// Catalog entry: instance name and its subalgebra names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub subalgebras: Vec<&'static str>,
}

const BUILTINS: [(&str, &str); 13] = [
    ("kC2", "group algebra of C2"),
    ("kC3", "group algebra of C3"),
    ("kC4", "group algebra of C4"),
    ("kS3", "group algebra of S3"),
    ("kD4", "group algebra of the dihedral group of order 8"),
    ("kQ8", "group algebra of the quaternion group"),
    ("fun_C2", "functions on C2"),
    ("fun_C3", "functions on C3"),
    ("fun_C4", "functions on C4"),
    ("fun_S3", "functions on S3"),
    ("fun_D4", "functions on the dihedral group of order 8"),
    ("fun_Q8", "functions on the quaternion group"),
    (
        "taft4",
        "the 4-dimensional Taft algebra (not cosemisimple, no star)",
    ),
];

fn subgroup(g: &GroupTable, gens: &[&str]) -> BTreeSet<usize> {
    let idx: Vec<usize> = gens
        .iter()
        .map(|l| g.index_of(l).expect("known element label"))
        .collect();
    g.closure(&idx)
}

fn group_of(suffix: &str) -> Option<GroupTable> {
    Some(match suffix {
        "C2" => GroupTable::cyclic(2),
        "C3" => GroupTable::cyclic(3),
        "C4" => GroupTable::cyclic(4),
        "S3" => GroupTable::symmetric3(),
        "D4" => GroupTable::dihedral4(),
        "Q8" => GroupTable::quaternion(),
        _ => return None,
    })
}

/// Named subgroups used for group algebras, by group.
fn group_subalgebras(suffix: &str) -> Vec<(&'static str, Vec<&'static str>)> {
    match suffix {
        "C4" => vec![("kC2", vec!["g^2"])],
        "S3" => vec![
            ("kC2_12", vec!["(12)"]),
            ("kC2_13", vec!["(13)"]),
            ("kA3", vec!["(123)"]),
        ],
        "D4" => vec![
            ("center", vec!["r^2"]),
            ("kC2_s", vec!["s"]),
            ("kC4", vec!["r"]),
            ("klein", vec!["r^2", "s"]),
        ],
        "Q8" => vec![("center", vec!["-1"]), ("kC4_i", vec!["i"])],
        _ => vec![],
    }
}

/// Normal subgroups N whose coset functions k^{G/N} are registered, by group.
fn pullback_subalgebras(suffix: &str) -> Vec<(&'static str, Vec<&'static str>)> {
    match suffix {
        "C4" => vec![("pullback_C2", vec!["g^2"])],
        "S3" => vec![("pullback_C2", vec!["(123)"])],
        "D4" => vec![("pullback_C2", vec!["r"]), ("pullback_V4", vec!["r^2"])],
        "Q8" => vec![("pullback_C2", vec!["i"]), ("pullback_V4", vec!["-1"])],
        _ => vec![],
    }
}

fn trivial_and_full(n: usize, one: Vector) -> [(String, Vec<Vector>); 2] {
    [
        ("trivial".to_string(), vec![one]),
        (
            "full".to_string(),
            (0..n).map(|i| unit_vector(n, i)).collect(),
        ),
    ]
}

/// Builds a built-in instance by name.
pub fn builtin(name: &str) -> Result<Instance> {
    let unknown = || Error::UnknownName(format!("builtin {name}"));
    if name == "taft4" {
        let t = taft4();
        let [trivial, full] = trivial_and_full(4, t.one().clone());
        let coradical = ("coradical".to_string(), vec![unit_vector(4, 1)]);
        return Instance::new(t, vec![trivial, coradical, full]);
    }
    if let Some(suffix) = name.strip_prefix("fun_") {
        let g = group_of(suffix).ok_or_else(unknown)?;
        let h = function_algebra(name, &g);
        let [trivial, full] = trivial_and_full(g.order(), h.one().clone());
        let mut named = vec![trivial];
        for (sub, gens) in pullback_subalgebras(suffix) {
            named.push((
                sub.to_string(),
                pullback_generators(&g, &subgroup(&g, &gens))?,
            ));
        }
        named.push(full);
        return Instance::new(h, named);
    }
    if let Some(suffix) = name.strip_prefix('k') {
        let g = group_of(suffix).ok_or_else(unknown)?;
        let h = group_algebra(name, &g);
        let [trivial, full] = trivial_and_full(g.order(), h.one().clone());
        let mut named = vec![trivial];
        for (sub, gens) in group_subalgebras(suffix) {
            let generators: Vec<Vector> = gens
                .iter()
                .map(|l| unit_vector(g.order(), g.index_of(l).unwrap()))
                .collect();
            named.push((sub.to_string(), generators));
        }
        named.push(full);
        return Instance::new(h, named);
    }
    Err(unknown())
}

/// The stable catalog of built-in instances.
pub fn list_builtins() -> Vec<CatalogEntry> {
    BUILTINS
        .iter()
        .map(|&(name, description)| {
            let mut subalgebras = vec!["trivial"];
            if name == "taft4" {
                subalgebras.push("coradical");
            } else if let Some(suffix) = name.strip_prefix("fun_") {
                subalgebras.extend(pullback_subalgebras(suffix).iter().map(|(s, _)| *s));
            } else if let Some(suffix) = name.strip_prefix('k') {
                subalgebras.extend(group_subalgebras(suffix).iter().map(|(s, _)| *s));
            }
            subalgebras.push("full");
            CatalogEntry {
                name,
                description,
                subalgebras,
            }
        })
        .collect()
}

/// Resolves a CLI argument: a built-in name, or otherwise a file path.
pub fn resolve(arg: &str) -> Result<Instance> {
    if BUILTINS.iter().any(|(n, _)| *n == arg) {
        builtin(arg)
    } else {
        load_instance(Path::new(arg))
    }
}
