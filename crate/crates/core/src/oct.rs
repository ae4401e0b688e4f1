//! Exact odd cycle transversal, vertex and edge versions.
//!
//! The vertex solver follows the classic compression scheme: given an OCT
//! `X`, every OCT of `G - Y` that avoids `X \ Y` is a vertex cut between
//! the two copies of each surviving terminal in an auxiliary graph, for
//! some orientation of those copies.

use serde::{Deserialize, Serialize};

use crate::error::{contract, Result};
use crate::flow::{edge_cut, vertex_cut, VertexCut};
use crate::graph::{edge, Bipartition, Edge, Graph};
use crate::util::mask;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OctSolution {
    pub deleted: Vec<usize>,
    /// 2-colouring of the remaining vertices (ids of the input graph).
    pub coloring: Bipartition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EoctSolution {
    pub deleted: Vec<Edge>,
    pub coloring: Bipartition,
}

/// Result of [`make_oct_independent`].
#[derive(Debug, Clone)]
pub struct Subdivided {
    pub graph: Graph,
    /// The terminal set, unchanged as ids.
    pub x: Vec<usize>,
    /// Fresh subdivision vertices, ids `n..`.
    pub fresh: Vec<usize>,
}

fn is_oct(g: &Graph, x: &[usize]) -> bool {
    g.without_vertices(x).0.two_colouring().is_some()
}

/// Replaces each edge inside `x` by a path of length three, so `x` becomes
/// independent while every cycle keeps its parity.
///
/// Fresh vertices are labelled with their own ids. Callers that compute
/// OCTs avoiding `x` must not delete them: a deleted fresh vertex would
/// destroy an edge that the original graph can only lose together with an
/// endpoint in `x`.
pub fn make_oct_independent(g: &Graph, x: &[usize]) -> Result<Subdivided> {
    if !is_oct(g, x) {
        return Err(contract("terminal set is not an odd cycle transversal"));
    }
    let in_x = mask(g.n(), x);
    let mut next = g.n();
    let mut fresh = Vec::new();
    let mut es = Vec::with_capacity(g.m());
    for (u, v) in g.edges() {
        if in_x[u] && in_x[v] {
            let (p, q) = (next, next + 1);
            next += 2;
            fresh.extend([p, q]);
            es.extend([(u, p), (p, q), (q, v)]);
        } else {
            es.push((u, v));
        }
    }
    let mut labels = g.labels().to_vec();
    labels.extend(g.n()..next);
    Ok(Subdivided {
        graph: Graph::from_edges_unchecked(next, es).with_labels(labels),
        x: x.to_vec(),
        fresh,
    })
}

#[derive(Debug, Clone)]
pub struct AuxiliaryGraph {
    pub graph: Graph,
    /// `(x, x1, x2)` for every terminal, in terminal order. `x1` is joined
    /// to the neighbours of `x` in `base.right`, `x2` to those in
    /// `base.left`.
    pub duplicates: Vec<(usize, usize, usize)>,
    /// Bipartition of `g - x`, in ids of `g`. In every component the lowest
    /// id is on the left.
    pub base: Bipartition,
    /// For each auxiliary vertex, the vertex of `g` it stands for.
    pub origin: Vec<usize>,
}

pub fn build_auxiliary_graph(g: &Graph, x: &[usize]) -> Result<AuxiliaryGraph> {
    if !g.is_independent(x) {
        return Err(contract("terminal set must be independent"));
    }
    let in_x = mask(g.n(), x);
    let rest: Vec<usize> = (0..g.n()).filter(|&v| !in_x[v]).collect();
    let colour = g
        .induced(&rest)
        .two_colouring()
        .ok_or_else(|| contract("graph minus terminals is not bipartite"))?;
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in rest.iter().enumerate() {
        pos[v] = i;
    }
    let r = rest.len();
    let mut es: Vec<Edge> = Vec::new();
    for (i, &v) in rest.iter().enumerate() {
        for &w in g.neighbors(v) {
            if !in_x[w] && pos[w] > i {
                es.push((i, pos[w]));
            }
        }
    }
    let mut duplicates = Vec::with_capacity(x.len());
    let mut origin = rest.clone();
    for (j, &t) in x.iter().enumerate() {
        let (x1, x2) = (r + 2 * j, r + 2 * j + 1);
        for &w in g.neighbors(t) {
            let i = pos[w];
            if colour[i] == 1 {
                es.push((x1, i));
            } else {
                es.push((x2, i));
            }
        }
        duplicates.push((t, x1, x2));
        origin.extend([t, t]);
    }
    let mut base = Bipartition {
        left: Vec::new(),
        right: Vec::new(),
    };
    for (i, &v) in rest.iter().enumerate() {
        if colour[i] == 0 {
            base.left.push(v);
        } else {
            base.right.push(v);
        }
    }
    let labels = origin.iter().map(|&v| g.label(v)).collect();
    Ok(AuxiliaryGraph {
        graph: Graph::from_edges_unchecked(r + 2 * x.len(), es).with_labels(labels),
        duplicates,
        base,
        origin,
    })
}

/// OCT search avoiding a fixed independent OCT, reused across many
/// choices of which terminals are deleted.
pub(crate) struct AvoidingOct {
    aux: AuxiliaryGraph,
    protected: Vec<bool>,
}

impl AvoidingOct {
    /// `protected` is indexed by vertices of `g`.
    pub(crate) fn new(g: &Graph, x: &[usize], protected: &[bool]) -> Result<AvoidingOct> {
        let aux = build_auxiliary_graph(g, x)?;
        let mut prot: Vec<bool> = aux.origin.iter().map(|&v| protected[v]).collect();
        for &(_, a, b) in &aux.duplicates {
            prot[a] = true;
            prot[b] = true;
        }
        Ok(AvoidingOct {
            aux,
            protected: prot,
        })
    }

    pub(crate) fn terminals(&self) -> usize {
        self.aux.duplicates.len()
    }

    /// Minimum OCT of `g - banned` avoiding the other terminals, in ids of
    /// `g`, if one of size at most `budget` exists. `banned` is indexed by
    /// terminal position. Ties between orientations go to the
    /// lexicographically smallest cut.
    pub(crate) fn solve(&self, banned: &[bool], budget: usize) -> Option<Vec<usize>> {
        let n = self.aux.graph.n();
        let mut removed = vec![false; n];
        let mut live = Vec::new();
        for (i, &(_, a, b)) in self.aux.duplicates.iter().enumerate() {
            if banned[i] {
                removed[a] = true;
                removed[b] = true;
            } else {
                live.push((a, b));
            }
        }
        let u = live.len();
        let mut best: Option<Vec<usize>> = None;
        let mut limit = budget;
        let mut s = Vec::with_capacity(u);
        let mut t = Vec::with_capacity(u);
        for orient in 0u64..1 << u {
            s.clear();
            t.clear();
            for (i, &(a, b)) in live.iter().enumerate() {
                if orient >> (u - 1 - i) & 1 == 0 {
                    s.push(a);
                    t.push(b);
                } else {
                    s.push(b);
                    t.push(a);
                }
            }
            if let VertexCut::Cut(c) = vertex_cut(&self.aux.graph, &s, &t, &removed, &self.protected, limit) {
                let mut c: Vec<usize> = c.iter().map(|&v| self.aux.origin[v]).collect();
                c.sort_unstable();
                if best.as_ref().is_none_or(|b| (c.len(), &c) < (b.len(), b)) {
                    limit = c.len();
                    let done = c.is_empty();
                    best = Some(c);
                    if done {
                        break;
                    }
                }
            }
        }
        best
    }

    /// Union, in ids of `g`, of the closest minimum cut of every valid
    /// partition: each terminal deleted or oriented either way, at most
    /// `max_banned` deleted, cuts over `budget - deleted` skipped. Swapping
    /// all orientations gives another minimum cut of the same size, so the
    /// first live terminal is always oriented the same way.
    pub(crate) fn cut_union(&self, max_banned: usize, budget: usize) -> Vec<usize> {
        let t = self.terminals();
        let n = self.aux.graph.n();
        let mut hit = vec![false; n];
        for bmask in 0u64..1 << t {
            let nb = bmask.count_ones() as usize;
            if nb > max_banned || nb > budget {
                continue;
            }
            let mut removed = vec![false; n];
            let mut live = Vec::new();
            for (i, &(_, a, b)) in self.aux.duplicates.iter().enumerate() {
                if bmask >> i & 1 == 1 {
                    removed[a] = true;
                    removed[b] = true;
                } else {
                    live.push((a, b));
                }
            }
            if live.is_empty() {
                continue;
            }
            for orient in 0u64..1 << (live.len() - 1) {
                let mut s = Vec::with_capacity(live.len());
                let mut t_side = Vec::with_capacity(live.len());
                for (i, &(a, b)) in live.iter().enumerate() {
                    if i > 0 && orient >> (i - 1) & 1 == 1 {
                        s.push(b);
                        t_side.push(a);
                    } else {
                        s.push(a);
                        t_side.push(b);
                    }
                }
                if let VertexCut::Cut(c) =
                    vertex_cut(&self.aux.graph, &s, &t_side, &removed, &self.protected, budget - nb)
                {
                    for v in c {
                        hit[v] = true;
                    }
                }
            }
        }
        let mut out: Vec<usize> = (0..n).filter(|&v| hit[v]).map(|v| self.aux.origin[v]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Minimum OCT of `g - banned` that avoids `x \ banned`, if its size is at
/// most `budget`. `x` must be an independent OCT of `g`.
pub fn min_oct_avoiding(g: &Graph, x: &[usize], banned: &[usize], budget: usize) -> Result<Option<Vec<usize>>> {
    if let Some(b) = banned.iter().find(|b| !x.contains(b)) {
        return Err(contract(format!("banned vertex {b} is not a terminal")));
    }
    if !is_oct(g, x) {
        return Err(contract("terminal set is not an odd cycle transversal"));
    }
    let solver = AvoidingOct::new(g, x, &vec![false; g.n()])?;
    let banned: Vec<bool> = x.iter().map(|v| banned.contains(v)).collect();
    Ok(solver.solve(&banned, budget))
}

/// Minimum OCT of `g - banned` avoiding `x \ banned`, for any OCT `x`
/// (not necessarily independent).
pub fn min_oct_avoiding_general(
    g: &Graph,
    x: &[usize],
    banned: &[usize],
    budget: usize,
) -> Result<Option<Vec<usize>>> {
    let sub = make_oct_independent(g, x)?;
    let solver = AvoidingOct::new(&sub.graph, x, &protected_mask(&sub))?;
    let banned: Vec<bool> = x.iter().map(|v| banned.contains(v)).collect();
    Ok(solver.solve(&banned, budget))
}

pub(crate) fn protected_mask(sub: &Subdivided) -> Vec<bool> {
    mask(sub.graph.n(), &sub.fresh)
}

fn coloring_without(g: &Graph, deleted: &[usize]) -> Bipartition {
    let (h, map) = g.without_vertices(deleted);
    h.is_bipartite()
        .expect("residual graph is bipartite")
        .mapped(&map)
}

/// Given an OCT `s` of `g`, returns a minimum OCT. Each `Y ⊆ s` is treated
/// as deleted and the rest of `s` as kept; `Y` runs by size, then
/// lexicographically, and only strictly smaller solutions replace the
/// incumbent.
fn compress_oct(g: &Graph, s: &[usize]) -> Vec<usize> {
    let sub = make_oct_independent(g, s).expect("s is an OCT");
    let solver = AvoidingOct::new(&sub.graph, s, &protected_mask(&sub)).expect("s is an OCT");
    let t = solver.terminals();
    let mut best = s.to_vec();
    for size in 0..t {
        if size >= best.len() {
            break;
        }
        for ys in itertools::Itertools::combinations(0..t, size) {
            if size >= best.len() {
                break;
            }
            let mut banned = vec![false; t];
            for &i in &ys {
                banned[i] = true;
            }
            if let Some(o) = solver.solve(&banned, best.len() - 1 - size) {
                let mut cand: Vec<usize> = ys.iter().map(|&i| s[i]).chain(o).collect();
                cand.sort_unstable();
                best = cand;
            }
        }
    }
    best
}

/// Minimum OCT of `g` if it has at most `k` vertices.
pub fn solve_oct(g: &Graph, k: usize) -> Option<OctSolution> {
    if let Some(bp) = g.is_bipartite() {
        return Some(OctSolution {
            deleted: Vec::new(),
            coloring: bp,
        });
    }
    if k == 0 {
        return None;
    }
    let mut s: Vec<usize> = Vec::new();
    for i in 0..g.n() {
        let prefix: Vec<usize> = (0..=i).collect();
        let gi = g.induced(&prefix);
        if gi.without_vertices(&s).0.two_colouring().is_some() {
            continue;
        }
        s.push(i);
        s = compress_oct(&gi, &s);
        if s.len() > k {
            return None;
        }
    }
    let coloring = coloring_without(g, &s);
    Some(OctSolution {
        deleted: s,
        coloring,
    })
}

/// Minimum edge set `F` with `g - F` bipartite, if `|F| <= k`.
///
/// Edges are added one at a time. When the incumbent `F` stops working,
/// `F' = F + e` is compressed: for every colouring of the endpoints of
/// `F'` (first endpoint fixed), the vertices whose colour differs from a
/// fixed base colouring of `g - F'` must be cut from those that agree.
pub fn solve_eoct(g: &Graph, k: usize) -> Option<EoctSolution> {
    if let Some(bp) = g.is_bipartite() {
        return Some(EoctSolution {
            deleted: Vec::new(),
            coloring: bp,
        });
    }
    let all: Vec<Edge> = g.edges().collect();
    let mut f: Vec<Edge> = Vec::new();
    for j in 0..all.len() {
        let h = Graph::from_edges_unchecked(g.n(), all[..=j].iter().copied());
        if h.without_edges(&f).two_colouring().is_some() {
            continue;
        }
        f.push(all[j]);
        f.sort_unstable();
        f = compress_eoct(&h, &f);
        if f.len() > k {
            return None;
        }
    }
    let coloring = g.without_edges(&f).is_bipartite().expect("bipartite");
    Some(EoctSolution { deleted: f, coloring })
}

fn compress_eoct(h: &Graph, f: &[Edge]) -> Vec<Edge> {
    let rest = h.without_edges(f);
    let base = rest.two_colouring().expect("f is an edge OCT");
    let mut w: Vec<usize> = f.iter().flat_map(|&(u, v)| [u, v]).collect();
    w.sort_unstable();
    w.dedup();
    let mut wpos = vec![usize::MAX; h.n()];
    for (i, &v) in w.iter().enumerate() {
        wpos[v] = i;
    }
    let mut best = f.to_vec();
    let free = w.len() - 1;
    let mut flipped = Vec::new();
    let mut kept = Vec::new();
    for c in 0u64..1 << free {
        let colour = |v: usize| -> u8 {
            let i = wpos[v];
            if i == 0 {
                0
            } else {
                (c >> (free - i) & 1) as u8
            }
        };
        let mono: Vec<Edge> = f
            .iter()
            .copied()
            .filter(|&(a, b)| colour(a) == colour(b))
            .collect();
        if mono.len() >= best.len() {
            continue;
        }
        flipped.clear();
        kept.clear();
        for &v in &w {
            if colour(v) != base[v] {
                flipped.push(v);
            } else {
                kept.push(v);
            }
        }
        if let Some(cut) = edge_cut(&rest, &flipped, &kept, best.len() - 1 - mono.len()) {
            let mut cand: Vec<Edge> = cut.into_iter().chain(mono).map(|(a, b)| edge(a, b)).collect();
            cand.sort_unstable();
            best = cand;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute;
    use crate::graph::tests::arb_graph;
    use proptest::prelude::*;

    fn two_triangles() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    #[test]
    fn subdivision_of_triangle() {
        let g = Graph::complete(3);
        let sub = make_oct_independent(&g, &[0, 1]).unwrap();
        assert_eq!(sub.fresh, vec![3, 4]);
        assert!(sub.graph.has_edge(0, 3) && sub.graph.has_edge(3, 4) && sub.graph.has_edge(4, 1));
        assert!(!sub.graph.has_edge(0, 1));
        assert_eq!(sub.graph.m(), 5);
        assert!(sub.graph.is_bipartite().is_none());
        assert!(g.is_independent(&[0]) && sub.graph.is_independent(&[0, 1]));
    }

    #[test]
    fn subdivision_noop_and_k4() {
        let g = Graph::cycle(5);
        let sub = make_oct_independent(&g, &[0, 2]).unwrap();
        assert_eq!(sub.graph.n(), 5);
        assert_eq!(sub.graph.m(), 5);
        let k4 = Graph::complete(4);
        let sub = make_oct_independent(&k4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(sub.graph.n(), 16);
        assert_eq!(sub.graph.m(), 18);
        assert!(sub.graph.is_independent(&[0, 1, 2, 3]));
        assert!(sub.graph.without_vertices(&[0, 1, 2, 3]).0.is_bipartite().is_some());
        assert!(make_oct_independent(&Graph::complete(4), &[0]).is_err());
    }

    #[test]
    fn auxiliary_graph_of_triangle() {
        let g = Graph::complete(3);
        let aux = build_auxiliary_graph(&g, &[0]).unwrap();
        assert_eq!(aux.origin, vec![1, 2, 0, 0]);
        assert_eq!(aux.duplicates, vec![(0, 2, 3)]);
        assert_eq!(aux.base.left, vec![1]);
        let es: Vec<_> = aux.graph.edges().collect();
        // bc, a1-c, a2-b
        assert_eq!(es, vec![(0, 1), (0, 3), (1, 2)]);
    }

    #[test]
    fn auxiliary_graph_of_star() {
        // Center 0 and leaves 1..4; leaves 1,2 adjacent to 5 and 6 puts them on
        // opposite sides from 5, 6.
        let g = Graph::from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 5), (3, 6), (4, 6)]).unwrap();
        let aux = build_auxiliary_graph(&g, &[0]).unwrap();
        let (_, x1, x2) = aux.duplicates[0];
        let nb = |v: usize| -> Vec<usize> {
            aux.graph.neighbors(v).iter().map(|&i| aux.origin[i]).collect()
        };
        for (copy, side) in [(x1, &aux.base.right), (x2, &aux.base.left)] {
            let want: Vec<usize> = g.neighbors(0).iter().copied().filter(|v| side.contains(v)).collect();
            let mut got = nb(copy);
            got.sort_unstable();
            assert_eq!(got, want);
        }
        let empty = build_auxiliary_graph(&Graph::cycle(4), &[]).unwrap();
        assert_eq!(empty.graph, Graph::cycle(4));
    }

    #[test]
    fn avoiding_examples() {
        let g = Graph::complete(3);
        assert_eq!(min_oct_avoiding(&g, &[0], &[], 1).unwrap(), Some(vec![1]));
        assert_eq!(min_oct_avoiding(&g, &[0], &[], 0).unwrap(), None);
        let c4 = Graph::cycle(4);
        assert_eq!(min_oct_avoiding(&c4, &[1], &[], 0).unwrap(), Some(vec![]));
        let c5 = Graph::cycle(5);
        assert_eq!(min_oct_avoiding(&c5, &[0], &[0], 0).unwrap(), Some(vec![]));
        assert!(min_oct_avoiding(&c5, &[0], &[1], 0).is_err());
    }

    #[test]
    fn solve_oct_examples() {
        let s = solve_oct(&Graph::cycle(5), 1).unwrap();
        assert_eq!(s.deleted.len(), 1);
        assert_eq!(solve_oct(&two_triangles(), 1).unwrap().deleted, vec![2]);
        assert!(solve_oct(&Graph::complete(4), 1).is_none());
        assert_eq!(solve_oct(&Graph::complete(4), 2).unwrap().deleted.len(), 2);
    }

    #[test]
    fn solve_eoct_examples() {
        assert_eq!(solve_eoct(&Graph::complete(3), 1).unwrap().deleted.len(), 1);
        let k4 = solve_eoct(&Graph::complete(4), 2).unwrap();
        assert_eq!(k4.deleted.len(), 2);
        let (a, b) = (k4.deleted[0], k4.deleted[1]);
        assert!(a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1, "perfect matching");
        assert!(solve_eoct(&Graph::complete(4), 1).is_none());
        assert!(solve_eoct(&Graph::cycle(6), 0).unwrap().deleted.is_empty());
    }

    /// Brute force minimum OCT of `g - y` avoiding `x`.
    fn brute_avoiding(g: &Graph, x: &[usize], y: &[usize]) -> Option<usize> {
        let cand: Vec<usize> = (0..g.n()).filter(|v| !x.contains(v)).collect();
        crate::util::subsets_up_to(&cand, cand.len()).into_iter().find_map(|o| {
            let gone = crate::util::union(&o, y);
            g.without_vertices(&gone).0.two_colouring().map(|_| o.len())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn oct_matches_brute(g in arb_graph(9)) {
            let want = brute::brute_oct(&g).unwrap();
            let got = solve_oct(&g, g.n()).unwrap();
            prop_assert_eq!(got.deleted.len(), want);
            let (h, _) = g.without_vertices(&got.deleted);
            prop_assert!(h.is_bipartite().is_some());
            prop_assert_eq!(got.coloring.left.len() + got.coloring.right.len() + want, g.n());
        }

        #[test]
        fn eoct_matches_brute(g in arb_graph(7)) {
            let want = brute::brute_eoct(&g).unwrap();
            let got = solve_eoct(&g, g.m()).unwrap();
            prop_assert_eq!(got.deleted.len(), want);
            prop_assert!(g.without_edges(&got.deleted).is_bipartite().is_some());
        }

        #[test]
        fn oct_is_monotone_in_budget(g in arb_graph(8)) {
            let opt = solve_oct(&g, g.n()).unwrap().deleted.len();
            for k in 0..=opt + 1 {
                let r = solve_oct(&g, k);
                prop_assert_eq!(r.is_some(), k >= opt);
                if let Some(r) = r { prop_assert_eq!(r.deleted.len(), opt); }
            }
        }

        /// Cut route equals brute force for every deleted subset, on both the
        /// independent-terminal and the subdivided path.
        #[test]
        fn cut_route_matches_brute(g in arb_graph(8), seed in any::<u64>()) {
            let opt = solve_oct(&g, g.n()).unwrap().deleted;
            // An OCT: the optimum plus a few arbitrary extra vertices.
            let mut x = opt.clone();
            for v in 0..g.n() {
                if (seed >> v) & 1 == 1 && x.len() < 4 { x.push(v); }
            }
            let x = crate::util::sorted(x);
            prop_assume!(x.len() <= 4);
            for y in crate::util::subsets_up_to(&x, x.len()) {
                let want = brute_avoiding(&g, &x, &y);
                let got = min_oct_avoiding_general(&g, &x, &y, g.n()).unwrap().map(|o| o.len());
                prop_assert_eq!(got, want, "x={:?} y={:?}", x, y);
                if g.is_independent(&x) {
                    let direct = min_oct_avoiding(&g, &x, &y, g.n()).unwrap().map(|o| o.len());
                    prop_assert_eq!(direct, want);
                }
            }
        }
    }
}
