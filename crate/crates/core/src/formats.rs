//! JSON file formats for complexes, representations, matroids and partitions.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::complex::{Complex, Partition};
use crate::domination::VectorRepresentation;
use crate::error::{Error, Result};
use crate::matroid::{Builtin, Matroid, MatroidKind};
use crate::numerics::{format_rational, parse_rational, RationalMatrix};
use crate::vertex_set::VertexSet;

/// `{"n": .., "facets": [..]}` or `{"n": .., "missing_faces": [..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub missing_faces: Option<Vec<Vec<usize>>>,
}

impl ComplexFile {
    pub fn to_complex(&self) -> Result<Complex> {
        match (&self.facets, &self.missing_faces) {
            (Some(f), None) => Complex::from_facets(self.n, f),
            (None, Some(m)) => Complex::from_missing_faces(self.n, m),
            _ => Err(Error::InvalidInput(
                "exactly one of \"facets\" and \"missing_faces\" must be given".into(),
            )),
        }
    }

    /// Missing-face form, which stays small for the geometry complexes.
    pub fn from_complex(x: &Complex) -> ComplexFile {
        ComplexFile {
            n: x.n(),
            facets: None,
            missing_faces: Some(x.missing_faces().iter().map(|m| m.to_vec()).collect()),
        }
    }
}

pub fn parse_complex(text: &str) -> Result<Complex> {
    let f: ComplexFile =
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("complex JSON: {e}")))?;
    f.to_complex()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationEntry {
    pub sigma: Vec<usize>,
    /// One row per vertex; entries are rationals written `"p/q"` or `"p"`.
    pub matrix: Vec<Vec<String>>,
}

/// `{"sets": [{"sigma": [..], "matrix": [["1/2", ..], ..]}, ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationFile {
    pub sets: Vec<RepresentationEntry>,
}

impl RepresentationFile {
    pub fn to_representation(&self, n: usize) -> Result<VectorRepresentation> {
        let mut sets = BTreeMap::new();
        for e in &self.sets {
            if let Some(&v) = e.sigma.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            let sigma = VertexSet::from_vertices(e.sigma.iter().copied());
            let rows = e
                .matrix
                .iter()
                .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            if sets.insert(sigma, RationalMatrix::from_rows(rows)?).is_some() {
                return Err(Error::InvalidInput(format!("index set {:?} given twice", e.sigma)));
            }
        }
        Ok(VectorRepresentation { n, sets })
    }

    pub fn from_representation(p: &VectorRepresentation) -> RepresentationFile {
        let sets = p
            .sets
            .iter()
            .map(|(s, m)| RepresentationEntry {
                sigma: s.to_vec(),
                matrix: (0..m.rows())
                    .map(|r| m.row(r).iter().map(format_rational).collect())
                    .collect(),
            })
            .collect();
        RepresentationFile { sets }
    }
}

pub fn parse_representation(text: &str, n: usize) -> Result<VectorRepresentation> {
    let f: RepresentationFile = serde_json::from_str(text)
        .map_err(|e| Error::InvalidInput(format!("representation JSON: {e}")))?;
    f.to_representation(n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum MatroidFile {
    Linear { p: u32, columns: Vec<Vec<u32>> },
    Uniform { rank: usize, n: usize },
    Builtin { name: String },
}

impl MatroidFile {
    pub fn to_matroid(&self) -> Result<Matroid> {
        match self {
            MatroidFile::Linear { p, columns } => Matroid::linear(*p, columns.clone()),
            MatroidFile::Uniform { rank, n } => Matroid::uniform(*rank, *n),
            MatroidFile::Builtin { name } => match name.as_str() {
                "AG23" => Ok(Matroid::builtin(Builtin::Ag23)),
                "PG33" => Ok(Matroid::builtin(Builtin::Pg33)),
                other => Err(Error::InvalidInput(format!("unknown builtin matroid {other:?}"))),
            },
        }
    }

    pub fn from_matroid(m: &Matroid) -> MatroidFile {
        match (m.builtin_name(), m.kind()) {
            (Some(Builtin::Ag23), _) => MatroidFile::Builtin { name: "AG23".into() },
            (Some(Builtin::Pg33), _) => MatroidFile::Builtin { name: "PG33".into() },
            (None, MatroidKind::Linear { p, columns }) => MatroidFile::Linear {
                p: *p,
                columns: columns.clone(),
            },
            (None, MatroidKind::Uniform { rank }) => MatroidFile::Uniform { rank: *rank, n: m.n() },
        }
    }
}

pub fn parse_matroid(text: &str) -> Result<Matroid> {
    let f: MatroidFile =
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("matroid JSON: {e}")))?;
    f.to_matroid()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartitionFile {
    pub classes: Vec<Vec<usize>>,
}

impl PartitionFile {
    pub fn from_partition(p: &Partition) -> PartitionFile {
        PartitionFile {
            classes: p.classes().iter().map(|c| c.to_vec()).collect(),
        }
    }
}

pub fn parse_partition(text: &str) -> Result<Partition> {
    let f: PartitionFile =
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("partition JSON: {e}")))?;
    Partition::new(&f.classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn complex_round_trip() {
        let x = named::ag23();
        let text = serde_json::to_string(&ComplexFile::from_complex(&x)).unwrap();
        assert_eq!(parse_complex(&text).unwrap(), x);
        let t = parse_complex(r#"{"n":3,"facets":[[0,1],[1,2],[0,2]]}"#).unwrap();
        assert_eq!(t, named::hollow_triangle());
        assert!(parse_complex(r#"{"n":3}"#).is_err());
        assert!(parse_complex(r#"{"n":3,"facets":[[0]],"missing_faces":[[1]]}"#).is_err());
        assert!(parse_complex(r#"{"n":3,"faces":[]}"#).is_err());
    }

    #[test]
    fn representation_round_trip() {
        let x = named::ag23();
        let p = VectorRepresentation::all_ones(&x);
        let text = serde_json::to_string(&RepresentationFile::from_representation(&p)).unwrap();
        assert_eq!(parse_representation(&text, 9).unwrap(), p);
        let q = parse_representation(r#"{"sets":[{"sigma":[],"matrix":[["1/2"],["2"]]}]}"#, 2).unwrap();
        assert_eq!(q.sets.len(), 1);
        assert!(parse_representation(r#"{"sets":[{"sigma":[5],"matrix":[]}]}"#, 2).is_err());
    }

    #[test]
    fn matroid_and_partition() {
        let m = parse_matroid(r#"{"kind":"builtin","name":"AG23"}"#).unwrap();
        assert_eq!(m.n(), 9);
        let u = parse_matroid(r#"{"kind":"uniform","rank":2,"n":4}"#).unwrap();
        assert_eq!(u.full_rank(), 2);
        let l = parse_matroid(r#"{"kind":"linear","p":3,"columns":[[1,0],[0,1],[1,1]]}"#).unwrap();
        assert_eq!(l.full_rank(), 2);
        assert_eq!(MatroidFile::from_matroid(&l).to_matroid().unwrap(), l);
        let p = parse_partition(r#"{"classes":[[0,1],[2]]}"#).unwrap();
        assert_eq!(p.len(), 2);
        assert!(parse_partition(r#"{"classes":[[0,1],[1]]}"#).is_err());
    }
}
