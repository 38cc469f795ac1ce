//! JSON group descriptions.
//!
//! ```json
//! {"kind":"cayley","labels":["e","a"],"table":[[0,1],[1,0]]}
//! {"kind":"permutation","degree":4,"generators":[[2,1,3,4],[2,3,4,1]]}
//! {"kind":"builtin","name":"quaternion8"}
//! ```

use serde::{Deserialize, Serialize};

use crate::catalog::builtin_group;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupSpec {
    Cayley {
        labels: Vec<String>,
        table: Vec<Vec<usize>>,
    },
    Permutation {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
    Builtin {
        name: String,
    },
}

impl GroupSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Cayley { labels, table } => {
                FiniteGroup::from_cayley_table(table.clone(), labels.clone())
            }
            GroupSpec::Permutation { degree, generators } => {
                let gens = generators
                    .iter()
                    .map(|g| {
                        if g.len() != *degree {
                            return Err(Error::Parse(format!(
                                "generator {g:?} does not have {degree} images"
                            )));
                        }
                        Permutation::from_one_line(g)
                    })
                    .collect::<Result<Vec<_>>>()?;
                FiniteGroup::from_permutations(*degree, &gens)
            }
            GroupSpec::Builtin { name } => builtin_group(name),
        }
    }
}
