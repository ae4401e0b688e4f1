//! Vertex deletion to (2,2)-, (2,1)- and (1,2)-graphs by iterative
//! compression.

use log::debug;

use crate::approx::{pack_obstructions, Packing};
use crate::deletion::VertexDeletion;
use crate::error::{contract, Result};
use crate::graph::Graph;
use crate::oct::solve_oct;
use crate::recognition::{enumerate_ic_partitions_capped, ICPartition, RLParams};
use crate::util::{find_map_first, map_all, minus, sorted, subsets_descending, subsets_up_to, union};

const P22: RLParams = RLParams::TWO_TWO;

fn empty_partition() -> ICPartition {
    ICPartition {
        independent: vec![Vec::new(), Vec::new()],
        cliques: vec![Vec::new(), Vec::new()],
    }
}

fn covers_validly(g: &Graph, p: &ICPartition, vs: &[usize]) -> bool {
    if p.independent.len() != 2 || p.cliques.len() != 2 {
        return false;
    }
    let mut all: Vec<usize> = p.independent.concat();
    all.extend(p.cliques.concat());
    all.sort_unstable();
    all == vs && p.independent.iter().all(|s| g.is_independent(s)) && p.cliques.iter().all(|s| g.is_clique(s))
}

/// At most two vertices from each part, as sorted sets.
pub(crate) fn two_from_each(parts: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for part in parts {
        let picks = subsets_up_to(part, 2);
        out = out
            .iter()
            .flat_map(|base| picks.iter().map(move |p| union(base, p)))
            .collect();
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn oct_within(g: &Graph, vs: &[usize], complement: bool, budget: usize) -> Option<(Vec<usize>, [Vec<usize>; 2])> {
    if budget == 0 && !g.bipartite_on(vs, complement) {
        return None;
    }
    let h = g.induced(vs);
    let h = if complement { h.complement() } else { h };
    let sol = solve_oct(&h, budget)?;
    let back = |xs: &[usize]| sorted(xs.iter().map(|&i| vs[i]).collect());
    Some((
        back(&sol.deleted),
        [back(&sol.coloring.left), back(&sol.coloring.right)],
    ))
}

fn oct_size(g: &Graph, vs: &[usize], complement: bool, budget: usize) -> Option<usize> {
    if g.bipartite_on(vs, complement) {
        return Some(0);
    }
    if budget == 0 {
        return None;
    }
    let h = g.induced(vs);
    let h = if complement { h.complement() } else { h };
    solve_oct(&h, budget).map(|s| s.deleted.len())
}

/// Given a (2,2)-deletion set `s_prime` of `g` and an IC-partition `base` of
/// `g - s_prime` (ids of `g`), looks for a deletion set of size at most `k`.
pub fn compress_vertex_22(g: &Graph, s_prime: &[usize], base: &ICPartition, k: usize) -> Result<Option<VertexDeletion>> {
    let s_prime = sorted(s_prime.to_vec());
    if s_prime.len() > k + 1 {
        return Err(contract("compression set is larger than k + 1"));
    }
    if s_prime.iter().any(|&v| v >= g.n()) {
        return Err(contract("compression set has an out-of-range vertex"));
    }
    let all: Vec<usize> = (0..g.n()).collect();
    if !covers_validly(g, base, &minus(&all, &s_prime)) {
        return Err(contract("base is not a (2,2)-partition of g - s_prime"));
    }
    Ok(compress(g, &s_prime, base, k))
}

fn compress(g: &Graph, s_prime: &[usize], base: &ICPartition, k: usize) -> Option<VertexDeletion> {
    let p_i = base.p_i();
    let p_c = base.p_c();
    // V_I moves from P_C to the independent side, V_C the other way.
    let v_is: Vec<Vec<usize>> = two_from_each(&base.cliques)
        .into_iter()
        .filter(|s| g.induced(s).two_colouring().is_some())
        .collect();
    let v_cs: Vec<Vec<usize>> = two_from_each(&base.independent)
        .into_iter()
        .filter(|s| g.induced(s).complement().two_colouring().is_some())
        .collect();
    for y in subsets_descending(s_prime, k) {
        let n_set = minus(s_prime, &y);
        let parts = enumerate_ic_partitions_capped(&g.induced(&n_set), P22, n_set.len())
            .expect("cap equals the vertex count");
        let budget = k - y.len();
        for part in parts {
            let part = part.mapped(&n_set);
            if let Some((u, w, qi, qc)) = try_guess(g, &p_i, &p_c, &part, &v_is, &v_cs, budget) {
                let deleted = sorted([y.clone(), u, w].concat());
                let [i1, i2] = qi;
                let [c1, c2] = qc;
                return Some(VertexDeletion::new(
                    deleted,
                    ICPartition {
                        independent: vec![i1, i2],
                        cliques: vec![c1, c2],
                    },
                ));
            }
        }
    }
    None
}

type Guess = (Vec<usize>, Vec<usize>, [Vec<usize>; 2], [Vec<usize>; 2]);

/// Every `A` contains `a0 \ V_C` and every `B` contains `b0 \ V_I`, so the
/// OCT sizes of those sets bound each pair from below.
fn try_guess(
    g: &Graph,
    p_i: &[usize],
    p_c: &[usize],
    part: &ICPartition,
    v_is: &[Vec<usize>],
    v_cs: &[Vec<usize>],
    budget: usize,
) -> Option<Guess> {
    let a0 = union(p_i, &part.p_i());
    let b0 = union(p_c, &part.p_c());
    let ca = map_all(v_cs, |vc| oct_size(g, &minus(&a0, vc), false, budget));
    let cb = map_all(v_is, |vi| oct_size(g, &minus(&b0, vi), true, budget));
    let mut pairs: Vec<(u32, u32, usize)> = Vec::new();
    for (i, lb) in cb.iter().enumerate() {
        let Some(lb) = lb else { continue };
        for (j, la) in ca.iter().enumerate() {
            if let Some(la) = la {
                if la + lb <= budget {
                    pairs.push((i as u32, j as u32, *lb));
                }
            }
        }
    }
    find_map_first(&pairs, |&(i, j, lb)| {
        let (vi, vc) = (&v_is[i as usize], &v_cs[j as usize]);
        let a = union(&minus(&a0, vc), vi);
        let b = union(&minus(&b0, vi), vc);
        let (u, qi) = oct_within(g, &a, false, budget - lb)?;
        let (w, qc) = oct_within(g, &b, true, budget - u.len())?;
        Some((u, w, qi, qc))
    })
}

/// Places `v` into the witness without deleting anything, if possible.
fn extend_witness(g: &Graph, w: &ICPartition, v: usize) -> Option<ICPartition> {
    for i in 0..w.independent.len() {
        if w.independent[i].iter().all(|&u| !g.has_edge(u, v)) {
            let mut out = w.clone();
            out.independent[i] = union(&out.independent[i], &[v]);
            return Some(out);
        }
    }
    for i in 0..w.cliques.len() {
        if w.cliques[i].iter().all(|&u| g.has_edge(u, v)) {
            let mut out = w.clone();
            out.cliques[i] = union(&out.cliques[i], &[v]);
            return Some(out);
        }
    }
    let p_i = union(&w.p_i(), &[v]);
    if let Some(p) = ICPartition::from_sides(g, &p_i, &w.p_c(), P22) {
        return Some(p);
    }
    let p_c = union(&w.p_c(), &[v]);
    ICPartition::from_sides(g, &w.p_i(), &p_c, P22)
}

/// Iterative compression over `order`.
///
/// With `minimum` set, every prefix keeps a minimum solution: a step that
/// cannot reuse the old witness compresses `S + v` by one, unless enough
/// disjoint obstructions already force the larger solution. Otherwise a
/// step only compresses once `S + v` exceeds `k`.
fn drive_22(g: &Graph, k: usize, order: &[usize], minimum: bool) -> Option<VertexDeletion> {
    let mut s: Vec<usize> = Vec::new();
    let mut w = empty_partition();
    let mut seen = vec![false; g.n()];
    for &v in order {
        seen[v] = true;
        if let Some(nw) = extend_witness(g, &w, v) {
            w = nw;
            continue;
        }
        let s2 = union(&s, &[v]);
        if !minimum && s2.len() <= k {
            s = s2;
            continue;
        }
        let prefix: Vec<usize> = (0..g.n()).filter(|&u| seen[u]).collect();
        let mut local = vec![usize::MAX; g.n()];
        for (i, &u) in prefix.iter().enumerate() {
            local[u] = i;
        }
        let h = g.induced(&prefix);
        let target = if minimum { s2.len() - 1 } else { k };
        if matches!(pack_obstructions(&h, target, P22), Packing::TooMany(_)) {
            debug!("prefix {}: more than {target} disjoint obstructions", prefix.len());
            s = s2;
        } else {
            let s2_local: Vec<usize> = s2.iter().map(|&u| local[u]).collect();
            match compress(&h, &s2_local, &w.mapped(&local), target) {
                Some(r) => {
                    s = sorted(r.deleted.iter().map(|&i| prefix[i]).collect());
                    w = r.witness.mapped(&prefix);
                }
                None => s = s2,
            }
        }
        if s.len() > k {
            return None;
        }
    }
    debug_assert!(covers_validly(g, &w, &minus(&(0..g.n()).collect::<Vec<_>>(), &s)));
    Some(VertexDeletion::new(s, w))
}

/// Minimum (2,2)-vertex-deletion set of `g`, if it has at most `k`
/// vertices.
pub fn solve_vertex_22(g: &Graph, k: usize) -> Option<VertexDeletion> {
    let order: Vec<usize> = (0..g.n()).collect();
    drive_22(g, k, &order, true)
}

/// Some (2,2)-vertex-deletion set of size at most `k`, if one exists. Only
/// compresses when the incumbent outgrows `k`, so it is much faster than
/// [`solve_vertex_22`] on YES instances, but the set need not be minimum.
pub fn decide_vertex_22(g: &Graph, k: usize) -> Option<VertexDeletion> {
    let order: Vec<usize> = (0..g.n()).collect();
    drive_22(g, k, &order, false)
}

/// `g` plus a disjoint clique on `n + 3` new vertices, appended after the
/// vertices of `g`.
pub fn add_disjoint_clique(g: &Graph) -> Graph {
    g.disjoint_union(&Graph::complete(g.n() + 3))
}

/// Turns a (2,2) result on `add_disjoint_clique(g)` into a (2,1) result on
/// `g`. Fails when no clique part is free of the added clique, which needs
/// more than `n` deletions.
pub(crate) fn strip_added_clique(n: usize, r: &VertexDeletion) -> Option<VertexDeletion> {
    let deleted: Vec<usize> = r.deleted.iter().copied().filter(|&v| v < n).collect();
    let own = |p: &Vec<usize>| p.iter().copied().filter(|&v| v < n).collect::<Vec<_>>();
    let free: Vec<&Vec<usize>> = r.witness.cliques.iter().filter(|c| c.iter().all(|&v| v < n)).collect();
    let clique = match free.as_slice() {
        [] => Vec::new(),
        [c] => c.to_vec(),
        [a, b] if a.is_empty() => b.to_vec(),
        [a, b] if b.is_empty() => a.to_vec(),
        _ => return None,
    };
    Some(VertexDeletion::new(
        deleted,
        ICPartition {
            independent: r.witness.independent.iter().map(own).collect(),
            cliques: vec![clique],
        },
    ))
}

/// Minimum (2,1)-vertex-deletion set, solved on `g` plus a large disjoint
/// clique. Requires `k <= n`.
pub fn solve_vertex_21(g: &Graph, k: usize) -> Result<Option<VertexDeletion>> {
    let n = g.n();
    if k > n {
        return Err(contract(format!("k = {k} exceeds the vertex count {n}")));
    }
    let big = add_disjoint_clique(g);
    let order: Vec<usize> = (n..big.n()).chain(0..n).collect();
    Ok(drive_22(&big, k, &order, true).map(|r| strip_added_clique(n, &r).expect("at most n deletions")))
}

/// Minimum (1,2)-vertex-deletion set, via the complement. Requires
/// `k <= n`.
pub fn solve_vertex_12(g: &Graph, k: usize) -> Result<Option<VertexDeletion>> {
    Ok(solve_vertex_21(&g.complement(), k)?.map(|r| VertexDeletion::new(r.deleted, r.witness.swapped())))
}

/// Dispatches on the supported parameter pairs.
pub fn solve_vertex(g: &Graph, params: RLParams, k: usize) -> Result<Option<VertexDeletion>> {
    match (params.r, params.l) {
        (2, 2) => Ok(solve_vertex_22(g, k)),
        (2, 1) => solve_vertex_21(g, k.min(g.n())),
        (1, 2) => solve_vertex_12(g, k.min(g.n())),
        _ => Err(crate::Error::InvalidParams(format!("vertex deletion to {params} is not supported"))),
    }
}
