use serde::{Deserialize, Serialize};

use crate::graph::{edge, Edge, Graph};
use crate::recognition::{ICPartition, RLParams};

/// A deletion set together with an IC-partition of what is left.
///
/// Witness parts use the vertex ids of the input graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeletionResult<T> {
    pub deleted: Vec<T>,
    pub witness: ICPartition,
    pub size: usize,
}

pub type VertexDeletion = DeletionResult<usize>;
pub type EdgeDeletion = DeletionResult<Edge>;

impl<T> DeletionResult<T> {
    pub(crate) fn new(deleted: Vec<T>, witness: ICPartition) -> Self {
        DeletionResult {
            size: deleted.len(),
            deleted,
            witness,
        }
    }
}

fn parts_cover(n: usize, w: &ICPartition, params: RLParams, expected: &[bool]) -> bool {
    if w.independent.len() > params.r || w.cliques.len() > params.l {
        return false;
    }
    let mut seen = vec![false; n];
    for part in w.independent.iter().chain(&w.cliques) {
        for &v in part {
            if v >= n || seen[v] || !expected[v] {
                return false;
            }
            seen[v] = true;
        }
    }
    seen == expected
}

impl VertexDeletion {
    /// The witness partitions `g - deleted` into valid parts.
    pub fn verify(&self, g: &Graph, params: RLParams) -> bool {
        let mut expected = vec![true; g.n()];
        for &v in &self.deleted {
            if v >= g.n() || !expected[v] {
                return false;
            }
            expected[v] = false;
        }
        self.size == self.deleted.len()
            && parts_cover(g.n(), &self.witness, params, &expected)
            && self.witness.independent.iter().all(|p| g.is_independent(p))
            && self.witness.cliques.iter().all(|p| g.is_clique(p))
    }
}

impl EdgeDeletion {
    /// The witness partitions `g - deleted` into valid parts.
    pub fn verify(&self, g: &Graph, params: RLParams) -> bool {
        let mut es: Vec<Edge> = self.deleted.iter().map(|&(u, v)| edge(u, v)).collect();
        es.sort_unstable();
        es.dedup();
        if es.len() != self.deleted.len() || es.iter().any(|&(u, v)| !g.has_edge(u, v)) {
            return false;
        }
        let h = g.without_edges(&es);
        self.size == self.deleted.len()
            && parts_cover(g.n(), &self.witness, params, &vec![true; g.n()])
            && self.witness.independent.iter().all(|p| h.is_independent(p))
            && self.witness.cliques.iter().all(|p| h.is_clique(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_vertex_and_edge() {
        let g = Graph::complete(3);
        let ok = VertexDeletion::new(
            vec![2],
            ICPartition {
                independent: vec![vec![0], vec![1]],
                cliques: vec![vec![]],
            },
        );
        assert!(ok.verify(&g, RLParams::TWO_ONE));
        let missing = VertexDeletion::new(vec![2], ICPartition {
            independent: vec![vec![0], vec![]],
            cliques: vec![vec![]],
        });
        assert!(!missing.verify(&g, RLParams::TWO_ONE));
        let e = EdgeDeletion::new(vec![(0, 1)], ICPartition {
            independent: vec![vec![0, 1]],
            cliques: vec![vec![2]],
        });
        assert!(e.verify(&g, RLParams::ONE_ONE));
        let bad = EdgeDeletion::new(vec![(0, 1)], ICPartition {
            independent: vec![vec![0, 2]],
            cliques: vec![vec![1]],
        });
        assert!(!bad.verify(&g, RLParams::ONE_ONE));
    }
}
