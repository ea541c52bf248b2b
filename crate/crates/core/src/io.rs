//! File formats: group files (JSON with 1-indexed cycle strings or image
//! arrays) and single-permutation text files with a `degree:` header.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// On-disk group format:
/// `{ "degree": n, "generators": ["(1 2 3)", …] }`.
/// Generator entries may also be 1-indexed image arrays.
#[derive(Debug, Serialize, Deserialize)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<GeneratorSpec>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeneratorSpec {
    Cycles(String),
    /// 1-indexed image table: entry `i` is the image of point `i+1`.
    Images(Vec<usize>),
}

impl GroupFile {
    pub fn to_group(&self) -> Result<PermGroup> {
        let gens = self
            .generators
            .iter()
            .map(|spec| match spec {
                GeneratorSpec::Cycles(text) => Permutation::parse_cycles(text, self.degree),
                GeneratorSpec::Images(images) => {
                    if images.len() != self.degree {
                        return Err(Error::InvalidImages(format!(
                            "image array has length {}, degree is {}",
                            images.len(),
                            self.degree
                        )));
                    }
                    let zero_indexed = images
                        .iter()
                        .map(|&v| {
                            if v == 0 || v > self.degree {
                                Err(Error::InvalidImages(format!(
                                    "image {} out of range 1..={}",
                                    v, self.degree
                                )))
                            } else {
                                Ok(v - 1)
                            }
                        })
                        .collect::<Result<Vec<usize>>>()?;
                    Permutation::from_images(zero_indexed)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        PermGroup::from_generators(self.degree, gens)
    }

    pub fn from_group(g: &PermGroup) -> GroupFile {
        GroupFile {
            degree: g.degree(),
            generators: g
                .generators()
                .iter()
                .map(|p| GeneratorSpec::Cycles(p.cycle_string()))
                .collect(),
        }
    }
}

pub fn group_from_json(text: &str) -> Result<PermGroup> {
    let file: GroupFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        pos: e.column(),
        reason: format!("invalid group file: {}", e),
    })?;
    file.to_group()
}

pub fn group_to_json(g: &PermGroup) -> String {
    serde_json::to_string_pretty(&GroupFile::from_group(g)).expect("group file serializes")
}

/// Single-permutation text format: a `degree: N` header line followed by
/// disjoint cycles, e.g. `degree: 5\n(1 2 3)(4 5)`.
pub fn permutation_from_text(text: &str) -> Result<Permutation> {
    let mut lines = text.lines();
    let header = lines.next().ok_or(Error::Parse {
        pos: 0,
        reason: "empty permutation file".into(),
    })?;
    let rest = header
        .strip_prefix("degree:")
        .ok_or(Error::Parse {
            pos: 0,
            reason: "expected a 'degree: N' header".into(),
        })?
        .trim();
    let degree: usize = rest.parse().map_err(|_| Error::Parse {
        pos: 0,
        reason: format!("malformed degree {:?}", rest),
    })?;
    let body: String = lines.collect::<Vec<_>>().join(" ");
    Permutation::parse_cycles(&body, degree)
}

pub fn permutation_to_text(p: &Permutation) -> String {
    format!("degree: {}\n{}\n", p.degree(), p.cycle_string())
}
