//! The JSON shape shared by the command-line tool and the browser demo.

use serde::Serialize;

use crate::deletion::DeletionResult;
use crate::recognition::ICPartition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub independent_parts: Vec<Vec<usize>>,
    pub clique_parts: Vec<Vec<usize>>,
}

impl From<&ICPartition> for Witness {
    fn from(p: &ICPartition) -> Witness {
        Witness {
            independent_parts: p.independent.clone(),
            clique_parts: p.cliques.clone(),
        }
    }
}

/// `{answer, size, deleted, witness, elapsed_ms}`. On a no answer `size`
/// and `witness` are null and `deleted` is empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report<T> {
    pub answer: Answer,
    pub size: Option<usize>,
    pub deleted: Vec<T>,
    pub witness: Option<Witness>,
    pub elapsed_ms: u64,
}

impl<T: Clone> Report<T> {
    pub fn from_result(r: Option<&DeletionResult<T>>, elapsed_ms: u64) -> Report<T> {
        match r {
            Some(r) => Report {
                answer: Answer::Yes,
                size: Some(r.size),
                deleted: r.deleted.clone(),
                witness: Some((&r.witness).into()),
                elapsed_ms,
            },
            None => Report {
                answer: Answer::No,
                size: None,
                deleted: Vec::new(),
                witness: None,
                elapsed_ms,
            },
        }
    }

    /// Recognition: nothing deleted.
    pub fn from_partition(p: Option<&ICPartition>, elapsed_ms: u64) -> Report<T> {
        Report {
            answer: if p.is_some() { Answer::Yes } else { Answer::No },
            size: p.map(|_| 0),
            deleted: Vec::new(),
            witness: p.map(Witness::from),
            elapsed_ms,
        }
    }
}
