//! Simple undirected graphs with dense vertex ids.
//!
//! A [`Graph`] is an immutable value: every transformation (complement,
//! induced subgraph, edge deletion, disjoint union) returns a new graph.
//! Each vertex carries a label, which is its id in the graph it was
//! originally parsed or generated as. Labels survive transformations, so
//! results computed on derived graphs can always be mapped back.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An unordered vertex pair, always stored with `.0 < .1`.
pub type Edge = (usize, usize);

#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    words: usize,
    bits: Vec<u64>,
    labels: Vec<usize>,
    m: usize,
}

/// Two disjoint vertex sets, typically the colour classes of a proper
/// 2-colouring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bipartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl Bipartition {
    pub fn sides(&self) -> [&[usize]; 2] {
        [&self.left, &self.right]
    }

    /// Renames every member through `map`.
    pub fn mapped(&self, map: &[usize]) -> Bipartition {
        let mut left: Vec<usize> = self.left.iter().map(|&v| map[v]).collect();
        let mut right: Vec<usize> = self.right.iter().map(|&v| map[v]).collect();
        left.sort_unstable();
        right.sort_unstable();
        Bipartition { left, right }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph::from_edges_unchecked(n, std::iter::empty())
    }

    pub fn complete(n: usize) -> Graph {
        let mut es = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                es.push((u, v));
            }
        }
        Graph::from_edges_unchecked(n, es)
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        Graph::from_edges_unchecked(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges_unchecked(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Builds a graph, rejecting self-loops and out-of-range endpoints.
    /// Repeated pairs collapse into one edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let edges: Vec<_> = edges.into_iter().collect();
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::Contract(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::Contract(format!("self-loop at vertex {u}")));
            }
        }
        Ok(Graph::from_edges_unchecked(n, edges))
    }

    pub(crate) fn from_edges_unchecked<I>(n: usize, edges: I) -> Graph
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let words = n.div_ceil(64).max(1);
        let mut bits = vec![0u64; n * words];
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            debug_assert!(u != v && u < n && v < n);
            if bits[u * words + v / 64] >> (v % 64) & 1 == 1 {
                continue;
            }
            bits[u * words + v / 64] |= 1 << (v % 64);
            bits[v * words + u / 64] |= 1 << (u % 64);
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            adj,
            words,
            bits,
            labels: (0..n).collect(),
            m,
        }
    }

    /// Replaces the label map. `labels.len()` must equal `n`.
    pub fn with_labels(mut self, labels: Vec<usize>) -> Graph {
        assert_eq!(labels.len(), self.n());
        self.labels = labels;
        self
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut es = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    es.push((u, v));
                }
            }
        }
        Graph::from_edges_unchecked(n, es).with_labels(self.labels.clone())
    }

    /// Subgraph induced by `vertices`. Vertex `i` of the result is
    /// `vertices[i]` of `self`; labels are carried over.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut es = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = pos[w];
                if j != usize::MAX && i < j {
                    es.push((i, j));
                }
            }
        }
        let labels = vertices.iter().map(|&v| self.labels[v]).collect();
        Graph::from_edges_unchecked(vertices.len(), es).with_labels(labels)
    }

    /// Deletes `removed`; returns the residual graph and, for each of its
    /// vertices, the id it had in `self`.
    pub fn without_vertices(&self, removed: &[usize]) -> (Graph, Vec<usize>) {
        let mut gone = vec![false; self.n()];
        for &v in removed {
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !gone[v]).collect();
        (self.induced(&keep), keep)
    }

    /// Same vertex set, minus the given edges (pairs that are not edges are
    /// ignored).
    pub fn without_edges(&self, removed: &[Edge]) -> Graph {
        let mut gone: Vec<Edge> = removed.iter().map(|&(u, v)| edge(u, v)).collect();
        gone.sort_unstable();
        Graph::from_edges_unchecked(
            self.n(),
            self.edges().filter(|e| gone.binary_search(e).is_err()),
        )
        .with_labels(self.labels.clone())
    }

    /// Vertices of `other` are appended after those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let es = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + off, v + off)));
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().map(|&l| l + off));
        Graph::from_edges_unchecked(off + other.n(), es).with_labels(labels)
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Number of edges with both endpoints in `vs`.
    pub fn edges_within(&self, vs: &[usize]) -> usize {
        let mut c = 0;
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if self.has_edge(u, v) {
                    c += 1;
                }
            }
        }
        c
    }

    /// Proper 2-colouring if one exists. Each component is coloured by BFS
    /// from its lowest id, which goes to `left`.
    pub fn is_bipartite(&self) -> Option<Bipartition> {
        let colour = self.two_colouring()?;
        let mut bp = Bipartition {
            left: Vec::new(),
            right: Vec::new(),
        };
        for (v, &c) in colour.iter().enumerate() {
            if c == 0 {
                bp.left.push(v);
            } else {
                bp.right.push(v);
            }
        }
        Some(bp)
    }

    pub(crate) fn two_colouring(&self) -> Option<Vec<u8>> {
        let n = self.n();
        let mut colour = vec![u8::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if colour[w] == u8::MAX {
                        colour[w] = colour[u] ^ 1;
                        queue.push_back(w);
                    } else if colour[w] == colour[u] {
                        return None;
                    }
                }
            }
        }
        Some(colour)
    }

    /// Whether `vs` induces a bipartite graph (in the complement when
    /// `complement` is set), without building the subgraph.
    pub(crate) fn bipartite_on(&self, vs: &[usize], complement: bool) -> bool {
        let k = vs.len();
        let mut colour = vec![u8::MAX; k];
        let mut stack = Vec::new();
        for s in 0..k {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            stack.push(s);
            while let Some(i) = stack.pop() {
                for j in 0..k {
                    if i == j || self.has_edge(vs[i], vs[j]) == complement {
                        continue;
                    }
                    if colour[j] == u8::MAX {
                        colour[j] = colour[i] ^ 1;
                        stack.push(j);
                    } else if colour[j] == colour[i] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Repeatedly removes a minimum-degree vertex (lowest id on ties).
    /// Returns the removal order and the largest degree seen at removal.
    pub fn degeneracy_order(&self) -> (Vec<usize>, usize) {
        let n = self.n();
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut degeneracy = 0;
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| (deg[v], v))
                .expect("vertices remain");
            degeneracy = degeneracy.max(deg[v]);
            removed[v] = true;
            order.push(v);
            for &w in &self.adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                }
            }
        }
        (order, degeneracy)
    }

    /// Serializes as `n m` followed by one sorted `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {}", self.n(), self.m());
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }
}

/// Parses the `n m` / `u v` edge-list format. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header `n m`".into(),
    })?;
    let nums = parse_pair(header).ok_or_else(|| Error::Parse {
        line: hline,
        msg: format!("malformed header `{header}`, expected `n m`"),
    })?;
    let (n, m) = nums;

    let mut es = Vec::with_capacity(m);
    let mut last_line = hline;
    for (line, l) in lines {
        last_line = line;
        if es.len() == m {
            return Err(Error::Parse {
                line,
                msg: format!("more than the {m} declared edges"),
            });
        }
        let (u, v) = parse_pair(l).ok_or_else(|| Error::Parse {
            line,
            msg: format!("malformed edge `{l}`"),
        })?;
        for w in [u, v] {
            if w >= n {
                return Err(Error::Parse {
                    line,
                    msg: format!("vertex {w} out of range (n = {n})"),
                });
            }
        }
        if u == v {
            return Err(Error::Parse {
                line,
                msg: format!("self-loop at vertex {u}"),
            });
        }
        es.push((u, v));
    }
    if es.len() < m {
        return Err(Error::Parse {
            line: last_line,
            msg: format!("expected {m} edges, found {}", es.len()),
        });
    }
    Ok(Graph::from_edges_unchecked(n, es))
}

fn parse_pair(l: &str) -> Option<(usize, usize)> {
    let mut it = l.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_path() {
        let g = parse_edge_list("3 2\n0 1\n1 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn parse_isolated_vertex() {
        let g = parse_edge_list("1 0").unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
    }

    #[test]
    fn parse_out_of_range() {
        let err = parse_edge_list("3 1\n0 5").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                msg: "vertex 5 out of range (n = 3)".into()
            }
        );
    }

    #[test]
    fn parse_errors_name_the_line() {
        assert!(matches!(
            parse_edge_list("x y"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n2 2"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn parse_collapses_duplicates() {
        let g = parse_edge_list("3 3\n0 1\n1 0\n1 2").unwrap();
        assert_eq!(g.m(), 2);
        let h = parse_edge_list("3 2\n1 2\n0 1").unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn complement_small_cases() {
        assert_eq!(Graph::complete(3).complement(), Graph::empty(3));
        assert_eq!(Graph::empty(4).complement(), Graph::complete(4));
        // Complement of C5 is the pentagram 0-2-4-1-3-0.
        let c = Graph::cycle(5).complement();
        for i in 0..5 {
            assert!(c.has_edge(i, (i + 2) % 5));
            assert!(!c.has_edge(i, (i + 1) % 5));
        }
        assert_eq!(c.m(), 5);
        assert!((0..5).all(|v| c.degree(v) == 2));
    }

    #[test]
    fn bipartite_cases() {
        let bp = Graph::cycle(4).is_bipartite().unwrap();
        assert_eq!(bp.left, vec![0, 2]);
        assert_eq!(bp.right, vec![1, 3]);
        assert!(Graph::cycle(5).is_bipartite().is_none());
        assert!(Graph::empty(3).is_bipartite().is_some());
    }

    #[test]
    fn degeneracy_cases() {
        assert_eq!(Graph::cycle(5).degeneracy_order().1, 2);
        assert_eq!(Graph::path(6).degeneracy_order().1, 1);
        assert_eq!(Graph::complete(4).degeneracy_order().1, 3);
    }

    #[test]
    fn induced_keeps_labels() {
        let g = Graph::cycle(5);
        let h = g.induced(&[4, 0, 1]);
        assert_eq!(h.labels(), &[4, 0, 1]);
        assert!(h.has_edge(0, 1) && h.has_edge(1, 2) && !h.has_edge(0, 2));
        let (r, map) = g.without_vertices(&[2]);
        assert_eq!(map, vec![0, 1, 3, 4]);
        assert_eq!(r.m(), 3);
    }

    #[test]
    fn serialization_round_trip() {
        let g = Graph::cycle(5).complement();
        assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    fn brute_two_colourable(g: &Graph) -> bool {
        let n = g.n();
        (0u32..1 << n).any(|mask| g.edges().all(|(u, v)| (mask >> u & 1) != (mask >> v & 1)))
    }

    pub(crate) fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut es = Vec::new();
                let mut i = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[i] {
                            es.push((u, v));
                        }
                        i += 1;
                    }
                }
                Graph::from_edges(n, es).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn complement_is_involutive(g in arb_graph(10)) {
            prop_assert_eq!(g.complement().complement(), g);
        }

        #[test]
        fn edge_count_is_half_degree_sum(g in arb_graph(10)) {
            let deg: usize = (0..g.n()).map(|v| g.degree(v)).sum();
            prop_assert_eq!(deg, 2 * g.m());
            for (u, v) in g.edges() {
                prop_assert!(g.has_edge(v, u));
            }
        }

        #[test]
        fn bipartite_matches_brute_force(g in arb_graph(12)) {
            let got = g.is_bipartite();
            prop_assert_eq!(got.is_some(), brute_two_colourable(&g));
            if let Some(bp) = got {
                prop_assert!(g.is_independent(&bp.left));
                prop_assert!(g.is_independent(&bp.right));
                prop_assert_eq!(bp.left.len() + bp.right.len(), g.n());
            }
        }

        #[test]
        fn degeneracy_within_sqrt_bound(g in arb_graph(12)) {
            let d = g.degeneracy_order().1;
            let bound = ((2 * g.m()) as f64).sqrt().ceil() as usize;
            prop_assert!(d <= bound, "degeneracy {} > {}", d, bound);
        }
    }
}
