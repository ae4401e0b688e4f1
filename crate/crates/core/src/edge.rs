//! Edge deletion to (2,1)- and (1,2)-graphs.
//!
//! Both solvers add vertices one at a time and keep a minimum solution of
//! the current prefix. The independent side of the previous partition has
//! few edges (all of them deleted), so its cliques are few and can be
//! listed; the clique side of the new partition is then fixed by a guess of
//! how it meets the old independent side.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::deletion::EdgeDeletion;
use crate::error::{contract, Error, Result};
use crate::graph::{edge, Edge, Graph};
use crate::oct::solve_eoct;
use crate::recognition::{ICPartition, RLParams};
use crate::util::{mask, minus, sorted, subsets_up_to, union};

fn by_size_then_lex(a: &Vec<usize>, b: &Vec<usize>) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Maximal cliques by Bron–Kerbosch with pivoting, outer loop in
/// degeneracy order.
fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    fn expand(g: &Graph, r: &mut Vec<usize>, p: Vec<usize>, mut x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() && x.is_empty() {
            out.push(sorted(r.clone()));
            return;
        }
        let pivot = p
            .iter()
            .chain(&x)
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&w| g.has_edge(u, w)).count())
            .expect("p or x is non-empty");
        let mut p_left = p.clone();
        for v in p.into_iter().filter(|&v| !g.has_edge(pivot, v)) {
            let keep = |s: &[usize]| s.iter().copied().filter(|&w| g.has_edge(v, w)).collect::<Vec<_>>();
            r.push(v);
            expand(g, r, keep(&p_left), keep(&x), out);
            r.pop();
            p_left.retain(|&w| w != v);
            x.push(v);
        }
    }
    let (order, _) = g.degeneracy_order();
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut out = Vec::new();
    for &v in &order {
        let (later, earlier): (Vec<usize>, Vec<usize>) = g.neighbors(v).iter().partition(|&&w| pos[w] > pos[v]);
        expand(g, &mut vec![v], later, earlier, &mut out);
    }
    out
}

/// Every clique of `g`, including the empty one, ordered by size and then
/// lexicographically. `g` minus `pivot` may have at most `k` edges.
pub fn enumerate_cliques_sparse(g: &Graph, pivot: Option<usize>, k: usize) -> Result<Vec<Vec<usize>>> {
    let m = match pivot {
        Some(p) if p >= g.n() => return Err(contract("pivot out of range")),
        Some(p) => g.m() - g.degree(p),
        None => g.m(),
    };
    if m > k {
        return Err(contract(format!("{m} edges outside the pivot exceed the budget {k}")));
    }
    let mut all = BTreeSet::new();
    all.insert(Vec::new());
    for c in maximal_cliques(g) {
        for size in 1..=c.len() {
            all.extend(c.iter().copied().combinations(size));
        }
    }
    let mut out: Vec<Vec<usize>> = all.into_iter().collect();
    out.sort_by(by_size_then_lex);
    Ok(out)
}

fn check_base(g: &Graph, v: usize, s_prime: &[Edge], base: &ICPartition, params: RLParams, k: usize) -> Result<()> {
    if v >= g.n() {
        return Err(contract("new vertex out of range"));
    }
    if s_prime.len() > k {
        return Err(contract("compression set is larger than k"));
    }
    if s_prime.iter().any(|&(a, b)| a == v || b == v || !g.has_edge(a, b)) {
        return Err(contract("compression set must be edges of g - v"));
    }
    let h = g.without_edges(s_prime);
    let mut all = base.p_i();
    all.extend(base.p_c());
    all.sort_unstable();
    let want: Vec<usize> = (0..g.n()).filter(|&u| u != v).collect();
    let ok = base.independent.len() == params.r
        && base.cliques.len() == params.l
        && all == want
        && base.independent.iter().all(|p| h.is_independent(p))
        && base.cliques.iter().all(|p| h.is_clique(p));
    if ok {
        Ok(())
    } else {
        Err(contract(format!("base is not a {params}-partition of g - v - s_prime")))
    }
}

/// Minimum (2,1)-edge-deletion set of `g`, given a solution `s_prime` of
/// `g - v` and its partition `base` (two independent parts, one clique).
/// Returns `None` when the minimum exceeds `k`.
pub fn compress_edge_21(
    g: &Graph,
    v: usize,
    s_prime: &[Edge],
    base: &ICPartition,
    k: usize,
) -> Result<Option<EdgeDeletion>> {
    check_base(g, v, s_prime, base, RLParams::TWO_ONE, k)?;
    Ok(compress_21(g, v, base, k))
}

fn compress_21(g: &Graph, v: usize, base: &ICPartition, k: usize) -> Option<EdgeDeletion> {
    let i1v = union(&base.independent[0], &[v]);
    let i2 = &base.independent[1];
    let c = &base.cliques[0];
    let cliques_in = |vs: &[usize], pivot: Option<usize>| -> Vec<Vec<usize>> {
        let h = g.induced(vs);
        let local_pivot = pivot.map(|p| vs.binary_search(&p).expect("pivot in set"));
        enumerate_cliques_sparse(&h, local_pivot, usize::MAX)
            .expect("no edge budget")
            .into_iter()
            .map(|q| q.into_iter().map(|i| vs[i]).collect())
            .collect()
    };
    let a_list = cliques_in(&i1v, Some(v));
    let b_list = cliques_in(i2, None);
    let mut best: Option<(Vec<Edge>, Vec<usize>, [Vec<usize>; 2])> = None;
    'search: for a in &a_list {
        for b in &b_list {
            let ab = union(a, b);
            if !g.is_clique(&ab) {
                continue;
            }
            let c_prime: Vec<usize> = c.iter().copied().filter(|&u| ab.iter().all(|&x| g.has_edge(u, x))).collect();
            let p_c = union(&ab, &c_prime);
            let budget = match &best {
                Some((f, ..)) if f.is_empty() => break 'search,
                Some((f, ..)) => f.len() - 1,
                None => k,
            };
            let rest = minus(&(0..g.n()).collect::<Vec<_>>(), &p_c);
            let Some(sol) = solve_eoct(&g.induced(&rest), budget) else { continue };
            let f: Vec<Edge> = sorted_edges(sol.deleted.iter().map(|&(x, y)| edge(rest[x], rest[y])));
            let sides = [
                sorted(sol.coloring.left.iter().map(|&x| rest[x]).collect()),
                sorted(sol.coloring.right.iter().map(|&x| rest[x]).collect()),
            ];
            best = Some((f, p_c, sides));
        }
    }
    let (f, p_c, [i1, i2]) = best?;
    Some(EdgeDeletion::new(
        f,
        ICPartition {
            independent: vec![i1, i2],
            cliques: vec![p_c],
        },
    ))
}

fn sorted_edges(it: impl Iterator<Item = Edge>) -> Vec<Edge> {
    let mut v: Vec<Edge> = it.collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Largest `s` with `s (s - 1) / 2 <= k`.
fn clique_cap(k: usize) -> usize {
    let mut s = 1;
    while (s + 1) * s / 2 <= k {
        s += 1;
    }
    s
}

/// Minimum (1,2)-edge-deletion set of `g`, given a solution `s_prime` of
/// `g - v` and its partition `base` (one independent part, two cliques).
/// Returns `None` when the minimum exceeds `k`.
pub fn compress_edge_12(
    g: &Graph,
    v: usize,
    s_prime: &[Edge],
    base: &ICPartition,
    k: usize,
) -> Result<Option<EdgeDeletion>> {
    check_base(g, v, s_prime, base, RLParams::ONE_TWO, k)?;
    Ok(compress_12(g, v, base, k))
}

/// The new independent side is `(I \ A) + U`, where `A` is a union of two
/// cliques of `g[I]` and `U` is taken from the old cliques and `v`. Every
/// edge inside it is deleted; nothing else needs to be.
fn compress_12(g: &Graph, v: usize, base: &ICPartition, k: usize) -> Option<EdgeDeletion> {
    let i = &base.independent[0];
    let (c1, c2) = (&base.cliques[0], &base.cliques[1]);
    let h = g.induced(i);
    let cliques: Vec<Vec<usize>> = enumerate_cliques_sparse(&h, None, usize::MAX)
        .expect("no edge budget")
        .into_iter()
        .map(|q| q.into_iter().map(|x| i[x]).collect())
        .collect();
    let mut a_list: Vec<Vec<usize>> = cliques
        .iter()
        .enumerate()
        .flat_map(|(x, k1)| cliques[x..].iter().map(move |k2| union(k1, k2)))
        .collect();
    a_list.sort_by(by_size_then_lex);
    a_list.dedup();
    let cap = clique_cap(k);
    let u1s = subsets_up_to(c1, cap);
    let u2s = subsets_up_to(c2, cap);
    let mut best: Option<(usize, Vec<usize>, Vec<usize>)> = None;
    for a in &a_list {
        let p_i0 = minus(i, a);
        let base_cost = g.edges_within(&p_i0);
        if base_cost > k || best.as_ref().is_some_and(|b| base_cost >= b.0) {
            continue;
        }
        let in_pi0 = mask(g.n(), &p_i0);
        for u1 in &u1s {
            for u2 in &u2s {
                for with_v in [false, true] {
                    let mut u = union(u1, u2);
                    if with_v {
                        u = union(&u, &[v]);
                    }
                    let cross: usize = u.iter().map(|&x| g.neighbors(x).iter().filter(|&&y| in_pi0[y]).count()).sum();
                    let cost = base_cost + g.edges_within(&u) + cross;
                    if cost > k || best.as_ref().is_some_and(|b| cost >= b.0) {
                        continue;
                    }
                    let mut p_c = union(&union(a, c1), c2);
                    if !with_v {
                        p_c = union(&p_c, &[v]);
                    }
                    let p_c = minus(&p_c, &u);
                    if g.bipartite_on(&p_c, true) {
                        best = Some((cost, union(&p_i0, &u), p_c));
                    }
                }
            }
        }
    }
    let (_, p_i, p_c) = best?;
    let deleted = sorted_edges(g.edges().filter(|&(x, y)| p_i.binary_search(&x).is_ok() && p_i.binary_search(&y).is_ok()));
    let bp = g.induced(&p_c).complement().is_bipartite().expect("checked").mapped(&p_c);
    Some(EdgeDeletion::new(
        deleted,
        ICPartition {
            independent: vec![p_i],
            cliques: vec![bp.left, bp.right],
        },
    ))
}

/// Puts `v` into a part without deleting any edge, if possible.
fn extend_free(g: &Graph, w: &ICPartition, v: usize) -> Option<ICPartition> {
    let mut out = w.clone();
    if let Some(p) = out.independent.iter_mut().find(|p| p.iter().all(|&u| !g.has_edge(u, v))) {
        p.push(v);
        return Some(out);
    }
    if let Some(p) = out.cliques.iter_mut().find(|p| p.iter().all(|&u| g.has_edge(u, v))) {
        p.push(v);
        return Some(out);
    }
    None
}

fn drive(g: &Graph, k: usize, params: RLParams) -> Option<EdgeDeletion> {
    let compress = if params == RLParams::TWO_ONE {
        compress_21
    } else {
        compress_12
    };
    let mut f: Vec<Edge> = Vec::new();
    let mut w = ICPartition {
        independent: vec![Vec::new(); params.r],
        cliques: vec![Vec::new(); params.l],
    };
    for v in 0..g.n() {
        if let Some(nw) = extend_free(g, &w, v) {
            w = nw;
            continue;
        }
        let prefix: Vec<usize> = (0..=v).collect();
        let r = compress(&g.induced(&prefix), v, &w, k)?;
        f = r.deleted;
        w = r.witness;
    }
    Some(EdgeDeletion::new(f, w))
}

/// Minimum (2,1)-edge-deletion set of `g`, if it has at most `k` edges.
pub fn solve_edge_21(g: &Graph, k: usize) -> Option<EdgeDeletion> {
    drive(g, k, RLParams::TWO_ONE)
}

/// Minimum (1,2)-edge-deletion set of `g`, if it has at most `k` edges.
pub fn solve_edge_12(g: &Graph, k: usize) -> Option<EdgeDeletion> {
    drive(g, k, RLParams::ONE_TWO)
}

pub fn solve_edge(g: &Graph, params: RLParams, k: usize) -> Result<Option<EdgeDeletion>> {
    match (params.r, params.l) {
        (2, 1) => Ok(solve_edge_21(g, k)),
        (1, 2) => Ok(solve_edge_12(g, k)),
        _ => Err(Error::InvalidParams(format!("edge deletion to {params} is not supported"))),
    }
}
