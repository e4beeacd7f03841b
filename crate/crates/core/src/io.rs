//! JSON file formats. Cross-references between files are paths, resolved
//! relative to the directory of the file that contains them.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::homogeneity::RelStructure;
use crate::order::{check_hom, FiniteLattice, HomKind, PresentedUsl, UslHom, UslTable};
use crate::partition::{FiniteAlgebra, Partition};
use crate::pudlak::{ColoredGraph, Edge};

/// Pretty JSON with object keys sorted and a trailing newline.
pub fn canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value)?;
    let mut s = serde_json::to_string_pretty(&v)?;
    s.push('\n');
    Ok(s)
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    serde_json::from_str(&read_text(path)?)
        .map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

fn resolve(base_file: &Path, reference: &str) -> PathBuf {
    let r = Path::new(reference);
    if r.is_absolute() {
        return r.to_path_buf();
    }
    base_file
        .parent()
        .map_or_else(|| r.to_path_buf(), |dir| dir.join(r))
}

/// How a file written at `file` should refer to `target`: relative when the
/// two share a directory below the root, absolute otherwise.
pub fn reference_from(file: &Path, target: &Path) -> String {
    let abs = |p: &Path| {
        fs::canonicalize(p)
            .unwrap_or_else(|_| std::path::absolute(p).unwrap_or_else(|_| p.to_path_buf()))
    };
    let dir = file
        .parent()
        .map(|d| {
            if d.as_os_str().is_empty() {
                Path::new(".")
            } else {
                d
            }
        })
        .unwrap_or(Path::new("."));
    let (dir, target) = (abs(dir), abs(target));
    let common = dir
        .components()
        .zip(target.components())
        .take_while(|(a, b)| a == b)
        .count();
    if common <= 1 {
        return target.display().to_string();
    }
    let mut rel = PathBuf::new();
    for _ in dir.components().skip(common) {
        rel.push("..");
    }
    rel.extend(target.components().skip(common));
    rel.display().to_string()
}

pub fn load_usl_table(path: &Path) -> Result<UslTable> {
    read_json(path)
}

pub fn load_lattice(path: &Path) -> Result<FiniteLattice> {
    FiniteLattice::from_table(&load_usl_table(path)?)
}

pub fn lattice_json(l: &FiniteLattice) -> Result<String> {
    canonical_json(&l.to_table())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomFile {
    pub source: String,
    pub target: String,
    pub map: Vec<usize>,
}

/// A bounded homomorphism when the map preserves the bound, else a plain one.
pub fn load_hom(path: &Path) -> Result<UslHom> {
    let file: HomFile = read_json(path)?;
    let source = load_lattice(&resolve(path, &file.source))?;
    let target = load_lattice(&resolve(path, &file.target))?;
    let kind = if check_hom(&source, &target, &file.map, HomKind::BuslHom).is_none() {
        HomKind::BuslHom
    } else {
        HomKind::UslHom
    };
    UslHom::new(source, target, file.map, kind)
}

pub fn load_algebra(path: &Path) -> Result<FiniteAlgebra> {
    let v: Value = read_json(path)?;
    FiniteAlgebra::from_json(&v)
}

pub fn load_presentation(path: &Path) -> Result<PresentedUsl> {
    read_json(path)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexEntry {
    pub id: usize,
    pub stage: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub lattice: String,
    pub vertices: Vec<VertexEntry>,
    pub edges: Vec<[usize; 3]>,
}

impl GraphFile {
    pub fn from_graph(g: &ColoredGraph, lattice: &str) -> Self {
        GraphFile {
            lattice: lattice.to_string(),
            vertices: g
                .vertex_stages()
                .iter()
                .enumerate()
                .map(|(id, &stage)| VertexEntry { id, stage })
                .collect(),
            edges: g.edges().iter().map(|e| [e.u, e.v, e.color]).collect(),
        }
    }

    pub fn to_graph(&self, l: &FiniteLattice) -> Result<ColoredGraph> {
        if let Some((i, v)) = self.vertices.iter().enumerate().find(|(i, v)| v.id != *i) {
            return Err(Error::Format(format!(
                "vertex entry {i} has id {}; ids must be 0, 1, 2, … in order",
                v.id
            )));
        }
        let stages = self.vertices.iter().map(|v| v.stage).collect();
        let edges = self
            .edges
            .iter()
            .map(|&[u, v, color]| Edge { u, v, color })
            .collect();
        ColoredGraph::new(stages, edges, l)
    }
}

/// The graph and the lattice its colors come from.
pub fn load_graph(path: &Path) -> Result<(FiniteLattice, ColoredGraph)> {
    let file: GraphFile = read_json(path)?;
    let l = load_lattice(&resolve(path, &file.lattice))?;
    let g = file.to_graph(&l)?;
    Ok((l, g))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Blocks {
    Notation(String),
    Lists(Vec<Vec<usize>>),
}

impl Blocks {
    pub fn to_partition(&self, n: usize) -> Result<Partition> {
        match self {
            Blocks::Notation(s) => Partition::parse(n, s),
            Blocks::Lists(b) => Partition::from_blocks(n, b),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureFile {
    pub n: usize,
    pub lattice: String,
    pub relations: BTreeMap<String, Blocks>,
}

impl StructureFile {
    pub fn to_structure(&self, l: FiniteLattice) -> Result<RelStructure> {
        let mut rels = vec![None; l.len()];
        for (key, blocks) in &self.relations {
            let k: usize = key.parse().map_err(|_| {
                Error::Format(format!("relation key {key:?} is not a lattice index"))
            })?;
            let slot = rels.get_mut(k).ok_or_else(|| {
                Error::OutOfRange(format!("relation key {k} outside the lattice"))
            })?;
            *slot = Some(blocks.to_partition(self.n)?);
        }
        let rels = rels
            .into_iter()
            .enumerate()
            .map(|(k, r)| {
                r.ok_or_else(|| Error::Format(format!("no relation given for lattice element {k}")))
            })
            .collect::<Result<Vec<_>>>()?;
        RelStructure::new(l, rels)
    }

    pub fn from_structure(s: &RelStructure, lattice: &str) -> Self {
        StructureFile {
            n: s.len(),
            lattice: lattice.to_string(),
            relations: s
                .relations()
                .iter()
                .enumerate()
                .map(|(k, p)| (k.to_string(), Blocks::Notation(p.notation())))
                .collect(),
        }
    }
}

pub fn load_structure(path: &Path) -> Result<RelStructure> {
    let file: StructureFile = read_json(path)?;
    let l = load_lattice(&resolve(path, &file.lattice))?;
    file.to_structure(l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{make_standard, Family};
    use crate::pudlak::{RepSequence, RuleVariant};

    #[test]
    fn references_stay_relative() {
        assert_eq!(
            reference_from(Path::new("/w/run/out/g.json"), Path::new("/w/run/l.json")),
            "../l.json"
        );
        assert_eq!(
            reference_from(Path::new("/w/run/g.json"), Path::new("/w/run/l.json")),
            "l.json"
        );
        assert_eq!(
            reference_from(Path::new("/w/g.json"), Path::new("/x/l.json")),
            "/x/l.json"
        );
    }

    #[test]
    fn sorted_keys() {
        let l = make_standard(Family::Chain, 2).unwrap();
        let s = lattice_json(&l).unwrap();
        let keys: Vec<usize> = ["\"bound\"", "\"join\"", "\"meet\"", "\"n\"", "\"unit\""]
            .iter()
            .map(|k| s.find(k).unwrap())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        let back: UslTable = serde_json::from_str(&s).unwrap();
        assert_eq!(FiniteLattice::from_table(&back).unwrap(), l);
    }

    #[test]
    fn graph_round_trip() {
        let l = make_standard(Family::Boolean, 2).unwrap();
        let r = RepSequence::build(l.clone(), 3, RuleVariant::B, 2, 1000).unwrap();
        let file = GraphFile::from_graph(r.graph(), "b2.json");
        let text = canonical_json(&file).unwrap();
        let back: GraphFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back, file);
        assert_eq!(&back.to_graph(&l).unwrap(), r.graph());
    }

    #[test]
    fn graph_schema_violations() {
        let l = make_standard(Family::Chain, 2).unwrap();
        let mut file = GraphFile::from_graph(&crate::pudlak::pudlak_seed(&l, 1).unwrap(), "x");
        file.edges[0][2] = 0;
        assert!(file.to_graph(&l).is_err());
        file.edges[0] = [0, 5, 1];
        assert!(file.to_graph(&l).is_err());
        file.edges[0] = [0, 1, 1];
        file.vertices[1].id = 7;
        assert!(file.to_graph(&l).is_err());
    }

    #[test]
    fn structure_blocks_both_forms() {
        let text =
            r#"{"n": 3, "lattice": "c2.json", "relations": {"0": "0|1|2", "1": [[0, 1], [2]]}}"#;
        let file: StructureFile = serde_json::from_str(text).unwrap();
        let s = file
            .to_structure(make_standard(Family::Chain, 2).unwrap())
            .unwrap();
        assert_eq!(s.relation(1).notation(), "01|2");
        let missing = r#"{"n": 3, "lattice": "c2.json", "relations": {"0": "0|1|2"}}"#;
        let file: StructureFile = serde_json::from_str(missing).unwrap();
        assert!(file
            .to_structure(make_standard(Family::Chain, 2).unwrap())
            .is_err());
    }
}
