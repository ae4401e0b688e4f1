//! Seeded instance generators.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64(seed)`, with stream
//! 0 for the base graph, stream 1 for vertex noise and stream 2 for edge
//! noise.

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{edge, Edge, Graph};
use crate::recognition::{ICPartition, RLParams};

pub const GENERATOR: &str = "ChaCha8Rng/seed_from_u64";

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlantedGraph {
    pub graph: Graph,
    /// The parts the graph was built from.
    pub partition: ICPartition,
    /// Upper bound on the optimum, from the planted noise.
    pub planted_k: usize,
}

/// Each vertex joins one of the `r + l` parts uniformly at random; pairs in
/// different parts become edges with probability `p`.
pub fn gen_rl_graph(seed: u64, n: usize, params: RLParams, p: f64) -> PlantedGraph {
    let mut rng = rng(seed, 0);
    let parts = params.r + params.l;
    let part: Vec<usize> = (0..n).map(|_| if parts == 0 { 0 } else { rng.gen_range(0..parts) }).collect();
    let mut es = Vec::new();
    for (u, v) in (0..n).tuple_combinations() {
        let joined = if part[u] == part[v] {
            part[u] >= params.r
        } else {
            rng.gen_bool(p)
        };
        if joined {
            es.push((u, v));
        }
    }
    let members = |i: usize| (0..n).filter(|&v| part[v] == i).collect::<Vec<_>>();
    PlantedGraph {
        graph: Graph::from_edges(n, es).expect("valid edges"),
        partition: ICPartition {
            independent: (0..params.r).map(members).collect(),
            cliques: (params.r..parts).map(members).collect(),
        },
        planted_k: 0,
    }
}

/// Appends `k` vertices with uniformly random adjacency. Deleting them
/// restores the planted graph.
pub fn plant_vertex_noise(g: &PlantedGraph, seed: u64, k: usize) -> PlantedGraph {
    let mut rng = rng(seed, 1);
    let n = g.graph.n();
    let mut es: Vec<Edge> = g.graph.edges().collect();
    for v in n..n + k {
        for u in 0..v {
            if rng.gen_bool(0.5) {
                es.push((u, v));
            }
        }
    }
    PlantedGraph {
        graph: Graph::from_edges(n + k, es).expect("valid edges"),
        partition: g.partition.clone(),
        planted_k: g.planted_k + k,
    }
}

/// Flips up to `k` pairs inside parts: adds edges inside independent parts
/// and removes edges inside cliques. Flipping them back restores the
/// planted graph.
pub fn plant_edge_noise(g: &PlantedGraph, seed: u64, k: usize) -> PlantedGraph {
    let mut rng = rng(seed, 2);
    let mut candidates: Vec<Edge> = Vec::new();
    for part in g.partition.independent.iter().chain(&g.partition.cliques) {
        candidates.extend(part.iter().tuple_combinations().map(|(&u, &v)| edge(u, v)));
    }
    candidates.sort_unstable();
    let flips: Vec<Edge> = candidates.choose_multiple(&mut rng, k).copied().sorted().collect();
    let mut es: Vec<Edge> = g.graph.edges().filter(|e| flips.binary_search(e).is_err()).collect();
    es.extend(flips.iter().filter(|&&(u, v)| !g.graph.has_edge(u, v)));
    PlantedGraph {
        graph: Graph::from_edges(g.graph.n(), es).expect("valid edges"),
        partition: g.partition.clone(),
        planted_k: g.planted_k + flips.len(),
    }
}

/// Stochastic block model on stream 0: vertex `v` sits in block
/// `v % blocks`; pairs inside a block are joined with probability `p_in`,
/// other pairs with `p_out`.
pub fn gen_block_graph(seed: u64, n: usize, blocks: usize, p_in: f64, p_out: f64) -> Graph {
    let mut rng = rng(seed, 0);
    let blocks = blocks.max(1);
    let es: Vec<Edge> = (0..n)
        .tuple_combinations()
        .filter(|&(u, v)| rng.gen_bool(if u % blocks == v % blocks { p_in } else { p_out }))
        .collect();
    Graph::from_edges(n, es).expect("valid edges")
}

/// Erdős–Rényi graph on stream 0.
pub fn gen_random_graph(seed: u64, n: usize, p: f64) -> Graph {
    let mut rng = rng(seed, 0);
    let es: Vec<Edge> = (0..n).tuple_combinations().filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, es).expect("valid edges")
}
