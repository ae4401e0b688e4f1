//! Approximate vertex deletion: pack obstructions to splitness, then guess
//! how an optimal partition crosses a split partition of the rest and hand
//! the two sides to an OCT routine.

use log::warn;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::deletion::VertexDeletion;
use crate::error::{contract, Result};
use crate::graph::Graph;
use crate::oct::solve_oct;
use crate::recognition::{split_partition, ICPartition, RLParams};
use crate::util::{map_all, minus, sorted, subsets_up_to, union};
use crate::vertex::{add_disjoint_clique, strip_added_clique};

pub const DEFAULT_OBSTRUCTION_CAP: usize = 32;

/// A vertex set whose induced subgraph is not (r,l)-split.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obstruction {
    pub vertices: Vec<usize>,
    pub minimal: bool,
}

/// Something that finds small odd cycle transversals.
pub trait OctApproximator: Sync {
    fn name(&self) -> &'static str;

    /// An OCT of `g`, or `None` only if `g` has no OCT of size at most `k`.
    fn approximate(&self, g: &Graph, k: usize) -> Option<Vec<usize>>;

    /// Upper bound on the returned size when an OCT of size `k` exists.
    fn guarantee(&self, k: usize, n: usize) -> usize;

    /// Whether results are minimum; enables pruning of the guess loop.
    fn is_exact(&self) -> bool {
        false
    }
}

/// The exact solver, with a budget.
#[derive(Debug, Clone, Copy, Default)]
pub struct ExactOct;

impl OctApproximator for ExactOct {
    fn name(&self) -> &'static str {
        "exact"
    }

    fn approximate(&self, g: &Graph, k: usize) -> Option<Vec<usize>> {
        solve_oct(g, k).map(|s| s.deleted)
    }

    fn guarantee(&self, k: usize, _n: usize) -> usize {
        k
    }

    fn is_exact(&self) -> bool {
        true
    }
}

fn is_split(g: &Graph, vs: &[usize], params: RLParams) -> bool {
    split_partition(&g.induced(vs), params).is_some()
}

/// A minimal obstruction, found by deleting vertices in descending id
/// order whenever the rest stays non-split.
pub fn find_split_obstruction(g: &Graph, params: RLParams) -> Option<Obstruction> {
    let mut cur: Vec<usize> = (0..g.n()).collect();
    if is_split(g, &cur, params) {
        return None;
    }
    for v in (0..g.n()).rev() {
        let trial = minus(&cur, &[v]);
        if !is_split(g, &trial, params) {
            cur = trial;
        }
    }
    if cur.len() > DEFAULT_OBSTRUCTION_CAP {
        warn!("obstruction on {} vertices exceeds cap {}", cur.len(), DEFAULT_OBSTRUCTION_CAP);
    }
    Some(Obstruction {
        vertices: cur,
        minimal: true,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Packing {
    /// Disjoint obstructions and the remaining vertices, which induce a
    /// split graph.
    Packed {
        obstructions: Vec<Obstruction>,
        rest: Vec<usize>,
    },
    /// More than `k` disjoint obstructions; the first `k + 1` are kept.
    TooMany(Vec<Obstruction>),
}

pub fn pack_obstructions(g: &Graph, k: usize, params: RLParams) -> Packing {
    let mut rest: Vec<usize> = (0..g.n()).collect();
    let mut obstructions = Vec::new();
    while let Some(o) = find_split_obstruction(&g.induced(&rest), params) {
        let vs: Vec<usize> = o.vertices.iter().map(|&i| rest[i]).collect();
        rest = minus(&rest, &vs);
        obstructions.push(Obstruction { vertices: vs, ..o });
        if obstructions.len() > k {
            return Packing::TooMany(obstructions);
        }
    }
    Packing::Packed { obstructions, rest }
}

#[derive(Debug, Clone, Copy)]
pub struct ApproxConfig {
    /// Largest split side for which every crossing guess is tried.
    pub exact_cap: usize,
    /// Guesses drawn when a side is larger than `exact_cap`.
    pub samples: usize,
    pub seed: u64,
}

impl Default for ApproxConfig {
    fn default() -> Self {
        ApproxConfig {
            exact_cap: 16,
            samples: 4096,
            seed: 0,
        }
    }
}

fn crossing_sets(side: &[usize], cfg: &ApproxConfig, rng: &mut ChaCha8Rng) -> Vec<Vec<usize>> {
    if side.len() <= cfg.exact_cap {
        return subsets_up_to(side, 4);
    }
    let mut out = vec![Vec::new()];
    for _ in 0..cfg.samples {
        let size = rng.gen_range(1..=4);
        out.push(sorted(side.choose_multiple(rng, size).copied().collect()));
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out.dedup();
    out
}

fn colouring(g: &Graph, vs: &[usize], deleted: &[usize], complement: bool) -> Option<[Vec<usize>; 2]> {
    let keep = minus(vs, deleted);
    let h = g.induced(&keep);
    let h = if complement { h.complement() } else { h };
    let bp = h.is_bipartite()?.mapped(&keep);
    Some([bp.left, bp.right])
}

/// Approximate (2,2)-vertex deletion. `None` means `(g, k)` is a NO
/// instance (or, for sampled guesses, that no sampled guess worked).
pub fn approx_vertex_22(g: &Graph, k: usize, oracle: &dyn OctApproximator) -> Option<VertexDeletion> {
    approx_vertex_22_with(g, k, oracle, &ApproxConfig::default())
}

pub fn approx_vertex_22_with(
    g: &Graph,
    k: usize,
    oracle: &dyn OctApproximator,
    cfg: &ApproxConfig,
) -> Option<VertexDeletion> {
    let (obstructions, rest) = match pack_obstructions(g, k, RLParams::TWO_TWO) {
        Packing::TooMany(_) => return None,
        Packing::Packed { obstructions, rest } => (obstructions, rest),
    };
    let h = g.induced(&rest);
    let sp = split_partition(&h, RLParams::TWO_TWO).expect("rest is split");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let ws = crossing_sets(&sp.v1, cfg, &mut rng);
    let us = crossing_sets(&sp.v2, cfg, &mut rng);
    // V1 = (A' + U) - W always contains A' - W, and V2 contains B' - U.
    let lw = map_all(&ws, |w| oracle.approximate(&h.induced(&minus(&sp.v1, w)), k).map(|s| s.len()));
    let lu = map_all(&us, |u| {
        oracle
            .approximate(&h.induced(&minus(&sp.v2, u)).complement(), k)
            .map(|s| s.len())
    });
    let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
    for (i, a) in lw.iter().enumerate() {
        for (j, b) in lu.iter().enumerate() {
            if let (Some(a), Some(b)) = (a, b) {
                pairs.push((a + b, i, j));
            }
        }
    }
    if oracle.is_exact() {
        pairs.sort_unstable();
    }
    let mut best: Option<(usize, Vec<usize>, Vec<usize>, Vec<usize>, Vec<usize>)> = None;
    for (lb, i, j) in pairs {
        if oracle.is_exact() && best.as_ref().is_some_and(|b| b.0 <= lb) {
            break;
        }
        let (w, u) = (&ws[i], &us[j]);
        let v1 = minus(&union(&sp.v1, u), w);
        let v2 = minus(&union(&sp.v2, w), u);
        let Some(s1) = oracle.approximate(&h.induced(&v1), k) else { continue };
        let Some(s2) = oracle.approximate(&h.induced(&v2).complement(), k) else { continue };
        let s1: Vec<usize> = sorted(s1.iter().map(|&x| v1[x]).collect());
        let s2: Vec<usize> = sorted(s2.iter().map(|&x| v2[x]).collect());
        let cost = s1.len() + s2.len();
        if best.as_ref().map_or(true, |b| cost < b.0) {
            best = Some((cost, v1, v2, s1, s2));
        }
    }
    let (_, v1, v2, s1, s2) = best?;
    let [i1, i2] = colouring(&h, &v1, &s1, false).expect("oracle returned an OCT");
    let [c1, c2] = colouring(&h, &v2, &s2, true).expect("oracle returned an OCT");
    let back = |xs: Vec<usize>| sorted(xs.into_iter().map(|x| rest[x]).collect());
    let mut deleted: Vec<usize> = obstructions.iter().flat_map(|o| o.vertices.iter().copied()).collect();
    deleted.extend(s1.iter().chain(&s2).map(|&x| rest[x]));
    Some(VertexDeletion::new(
        sorted(deleted),
        ICPartition {
            independent: vec![back(i1), back(i2)],
            cliques: vec![back(c1), back(c2)],
        },
    ))
}

/// Approximate (2,1)-vertex deletion through the added-clique reduction.
pub fn approx_vertex_21(g: &Graph, k: usize, oracle: &dyn OctApproximator) -> Result<Option<VertexDeletion>> {
    let n = g.n();
    if k > n {
        return Err(contract(format!("k = {k} exceeds the vertex count {n}")));
    }
    let Some(r) = approx_vertex_22(&add_disjoint_clique(g), k, oracle) else {
        return Ok(None);
    };
    // A result that uses both clique parts for g has deleted more than n
    // vertices, so deleting all of g is no worse.
    Ok(Some(strip_added_clique(n, &r).unwrap_or_else(|| {
        VertexDeletion::new(
            (0..n).collect(),
            ICPartition {
                independent: vec![Vec::new(), Vec::new()],
                cliques: vec![Vec::new()],
            },
        )
    })))
}

/// Approximate (1,2)-vertex deletion through the complement.
pub fn approx_vertex_12(g: &Graph, k: usize, oracle: &dyn OctApproximator) -> Result<Option<VertexDeletion>> {
    Ok(approx_vertex_21(&g.complement(), k, oracle)?.map(|r| VertexDeletion::new(r.deleted, r.witness.swapped())))
}

pub fn approx_vertex(g: &Graph, params: RLParams, k: usize, oracle: &dyn OctApproximator) -> Result<Option<VertexDeletion>> {
    match (params.r, params.l) {
        (2, 2) => Ok(approx_vertex_22(g, k, oracle)),
        (2, 1) => approx_vertex_21(g, k.min(g.n()), oracle),
        (1, 2) => approx_vertex_12(g, k.min(g.n()), oracle),
        _ => Err(crate::Error::InvalidParams(format!("vertex deletion to {params} is not supported"))),
    }
}
