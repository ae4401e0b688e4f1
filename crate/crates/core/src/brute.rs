//! Exhaustive reference implementations.
//!
//! Nothing here calls into the solvers; the only shared code is [`Graph`]
//! and the plain data types. Every routine refuses inputs beyond its cap.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::recognition::{ICPartition, RLParams, SplitPartition};

pub const RECOGNIZE_CAP: usize = 12;
pub const VERTEX_DEL_CAP: usize = 10;
pub const EDGE_DEL_CAP: usize = 18;

fn cap(what: &'static str, cap: usize, got: usize) -> Result<()> {
    if got > cap {
        return Err(Error::CapExceeded { what, cap, got });
    }
    Ok(())
}

/// Labels are `0..r` for independent parts and `r..r+l` for cliques.
/// Visits valid labellings in lexicographic order; `visit` returns true to
/// stop.
fn labellings(g: &Graph, params: RLParams, visit: &mut dyn FnMut(&[usize]) -> bool) {
    fn rec(g: &Graph, p: RLParams, lab: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let v = lab.len();
        if v == g.n() {
            return visit(lab);
        }
        for part in 0..p.r + p.l {
            let clique = part >= p.r;
            let fits = (0..v).all(|u| lab[u] != part || g.has_edge(u, v) == clique);
            if fits {
                lab.push(part);
                if rec(g, p, lab, visit) {
                    return true;
                }
                lab.pop();
            }
        }
        false
    }
    rec(g, params, &mut Vec::new(), visit);
}

fn to_partition(lab: &[usize], params: RLParams) -> ICPartition {
    let part = |i: usize| (0..lab.len()).filter(|&v| lab[v] == i).collect::<Vec<_>>();
    ICPartition {
        independent: (0..params.r).map(part).collect(),
        cliques: (params.r..params.r + params.l).map(part).collect(),
    }
}

/// First valid labelling in lexicographic order, as an IC-partition.
pub fn brute_recognize(g: &Graph, params: RLParams) -> Result<Option<ICPartition>> {
    cap("brute recognition vertex count", RECOGNIZE_CAP, g.n())?;
    let mut found = None;
    labellings(g, params, &mut |lab| {
        found = Some(to_partition(lab, params));
        true
    });
    Ok(found)
}

/// The distinct independent sides `p_i` over all valid labellings.
pub fn brute_ic_sides(g: &Graph, params: RLParams) -> Result<BTreeSet<Vec<usize>>> {
    cap("brute recognition vertex count", RECOGNIZE_CAP, g.n())?;
    let mut out = BTreeSet::new();
    labellings(g, params, &mut |lab| {
        out.insert((0..lab.len()).filter(|&v| lab[v] < params.r).collect());
        false
    });
    Ok(out)
}

fn has_uniform(g: &Graph, vs: &[usize], size: usize, edges: bool) -> bool {
    vs.iter()
        .copied()
        .combinations(size)
        .any(|c| c.iter().tuple_combinations().all(|(&a, &b)| g.has_edge(a, b) == edges))
}

/// Every split partition, by subset of `v1` in increasing bitmask order.
pub fn brute_split_partitions(g: &Graph, params: RLParams) -> Result<Vec<SplitPartition>> {
    cap("brute split vertex count", RECOGNIZE_CAP, g.n())?;
    let n = g.n();
    let mut out = Vec::new();
    for bits in 0u32..1 << n {
        let v1: Vec<usize> = (0..n).filter(|v| bits >> v & 1 == 1).collect();
        let v2: Vec<usize> = (0..n).filter(|v| bits >> v & 1 == 0).collect();
        if !has_uniform(g, &v1, params.r + 1, true) && !has_uniform(g, &v2, params.l + 1, false) {
            out.push(SplitPartition { v1, v2 });
        }
    }
    Ok(out)
}

fn is_rl(g: &Graph, params: RLParams) -> bool {
    let mut ok = false;
    labellings(g, params, &mut |_| {
        ok = true;
        true
    });
    ok
}

/// Minimum vertex deletion set, smallest size first, then lexicographic.
pub fn brute_min_vertex_del(g: &Graph, params: RLParams) -> Result<(usize, Vec<usize>)> {
    cap("brute vertex deletion vertex count", VERTEX_DEL_CAP, g.n())?;
    for size in 0..=g.n() {
        for s in (0..g.n()).combinations(size) {
            if is_rl(&g.without_vertices(&s).0, params) {
                return Ok((size, s));
            }
        }
    }
    unreachable!("deleting every vertex always works")
}

/// Minimum edge deletion set, smallest size first, then lexicographic.
/// Returns `None` when no edge set works (r = 0 with too many vertices).
pub fn brute_min_edge_del(g: &Graph, params: RLParams) -> Result<Option<(usize, Vec<Edge>)>> {
    cap("brute edge deletion edge count", EDGE_DEL_CAP, g.m())?;
    let es: Vec<Edge> = g.edges().collect();
    for size in 0..=es.len() {
        for f in es.iter().copied().combinations(size) {
            if is_rl(&g.without_edges(&f), params) {
                return Ok(Some((size, f)));
            }
        }
    }
    Ok(None)
}

/// Minimum odd cycle transversal size.
pub fn brute_oct(g: &Graph) -> Result<usize> {
    cap("brute OCT vertex count", VERTEX_DEL_CAP, g.n())?;
    Ok(brute_min_vertex_del(g, RLParams { r: 2, l: 0 })?.0)
}

/// Minimum edge odd cycle transversal size.
pub fn brute_eoct(g: &Graph) -> Result<usize> {
    Ok(brute_min_edge_del(g, RLParams { r: 2, l: 0 })?
        .expect("deleting all edges leaves a bipartite graph")
        .0)
}
