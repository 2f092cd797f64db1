use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockKind {
    Clique,
    Independent,
    Unconstrained,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Block {
    pub kind: BlockKind,
    pub vertices: Vec<usize>,
}

/// Declares that the bipartite graph between blocks `i` (top) and `j`
/// (bottom) excludes every pattern in `free`, a `;`-separated list of
/// pattern names.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Guarantee {
    pub i: usize,
    pub j: usize,
    pub free: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct LabelledPartition {
    pub blocks: Vec<Block>,
    #[serde(default)]
    pub guarantees: Vec<Guarantee>,
}

impl LabelledPartition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Block index of every vertex, or an error if the blocks do not
    /// partition `0..n`.
    pub fn owners(&self, n: usize) -> Result<Vec<usize>> {
        let mut owner = vec![usize::MAX; n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in &b.vertices {
                if v >= n {
                    return Err(Error::Argument(format!("block {i} has vertex {v} out of range")));
                }
                if owner[v] != usize::MAX {
                    return Err(Error::Argument(format!(
                        "vertex {v} in blocks {} and {i}",
                        owner[v]
                    )));
                }
                owner[v] = i;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::Argument(format!("vertex {v} is in no block")));
        }
        Ok(owner)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("partition serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            offset: 0,
            msg: e.to_string(),
        })
    }
}

/// Common refinement of several partitions of the same ground list: two
/// elements share a part iff they share a part in every input. Parts are
/// ordered by first appearance in `ground`.
pub fn refine(ground: &[usize], labelings: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut parts: Vec<Vec<usize>> = Vec::new();
    let mut index: std::collections::HashMap<Vec<usize>, usize> = Default::default();
    for (pos, &v) in ground.iter().enumerate() {
        let key: Vec<usize> = labelings.iter().map(|l| l[pos]).collect();
        let id = *index.entry(key).or_insert_with(|| {
            parts.push(Vec::new());
            parts.len() - 1
        });
        parts[id].push(v);
    }
    parts
}
