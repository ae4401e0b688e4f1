//! Unit-capacity minimum cuts by augmenting paths.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{contract, Result};
use crate::graph::{edge, Edge, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Cut {
    Cut(Vec<usize>),
    /// Some source-side vertex cannot be separated from some sink-side
    /// vertex by deleting allowed vertices.
    Inseparable,
}

const INF: u32 = u32::MAX / 4;

struct Network {
    head: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<u32>,
    next: Vec<usize>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network {
            head: vec![usize::MAX; nodes],
            to: Vec::new(),
            cap: Vec::new(),
            next: Vec::new(),
        }
    }

    fn arc(&mut self, u: usize, v: usize, c: u32, back: u32) {
        for (a, b, cap) in [(u, v, c), (v, u, back)] {
            self.to.push(b);
            self.cap.push(cap);
            self.next.push(self.head[a]);
            self.head[a] = self.to.len() - 1;
        }
    }

    /// One BFS augmentation of a single unit. Returns false when the sink
    /// is unreachable.
    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut via = vec![usize::MAX; self.head.len()];
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            let mut a = self.head[u];
            while a != usize::MAX {
                let w = self.to[a];
                if self.cap[a] > 0 && !seen[w] {
                    seen[w] = true;
                    via[w] = a;
                    if w == t {
                        let mut x = t;
                        while x != s {
                            let a = via[x];
                            self.cap[a] -= 1;
                            self.cap[a ^ 1] += 1;
                            x = self.to[a ^ 1];
                        }
                        return true;
                    }
                    q.push_back(w);
                }
                a = self.next[a];
            }
        }
        false
    }

    /// Max flow up to `limit + 1` units. Returns the flow value.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut f = 0;
        while f <= limit && self.augment(s, t) {
            f += 1;
        }
        f
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            let mut a = self.head[u];
            while a != usize::MAX {
                let w = self.to[a];
                if self.cap[a] > 0 && !seen[w] {
                    seen[w] = true;
                    q.push_back(w);
                }
                a = self.next[a];
            }
        }
        seen
    }
}

pub(crate) enum VertexCut {
    Cut(Vec<usize>),
    Inseparable,
    OverLimit,
}

/// Minimum `(s_side, t_side)` vertex cut in `g - removed`.
///
/// The returned cut is the unique minimum cut closest to `s_side`.
pub fn min_vertex_cut(g: &Graph, s_side: &[usize], t_side: &[usize], removed: &[usize]) -> Result<Cut> {
    let n = g.n();
    let mut role = vec![0u8; n];
    for (tag, set) in [(1u8, s_side), (2, t_side), (3, removed)] {
        for &v in set {
            if v >= n {
                return Err(contract(format!("vertex {v} not in graph")));
            }
            if role[v] != 0 && role[v] != tag {
                return Err(contract(format!("vertex {v} appears in two of S, T, R")));
            }
            role[v] = tag;
        }
    }
    let removed = crate::util::mask(n, removed);
    let protected = vec![false; n];
    Ok(match vertex_cut(g, s_side, t_side, &removed, &protected, usize::MAX - 1) {
        VertexCut::Cut(c) => Cut::Cut(c),
        VertexCut::Inseparable => Cut::Inseparable,
        VertexCut::OverLimit => unreachable!("no limit"),
    })
}

/// Vertex cut avoiding `removed` vertices and never using `protected` ones
/// or terminals. Gives up once the cut would exceed `limit`.
pub(crate) fn vertex_cut(
    g: &Graph,
    s_side: &[usize],
    t_side: &[usize],
    removed: &[bool],
    protected: &[bool],
    limit: usize,
) -> VertexCut {
    let n = g.n();
    let mut side = vec![0u8; n];
    for &v in s_side {
        side[v] = 1;
    }
    for &v in t_side {
        side[v] = 2;
    }
    if s_side.is_empty() || t_side.is_empty() {
        return VertexCut::Cut(Vec::new());
    }
    let fixed = |v: usize| side[v] != 0 || protected[v];

    // Paths through undeletable vertices only cannot be cut.
    let mut seen = vec![false; n];
    let mut q: VecDeque<usize> = s_side.iter().copied().collect();
    for &s in s_side {
        seen[s] = true;
    }
    while let Some(u) = q.pop_front() {
        for &w in g.neighbors(u) {
            if removed[w] || seen[w] || !fixed(w) {
                continue;
            }
            if side[w] == 2 {
                return VertexCut::Inseparable;
            }
            seen[w] = true;
            q.push_back(w);
        }
    }

    let src = 2 * n;
    let snk = 2 * n + 1;
    let mut net = Network::new(2 * n + 2);
    for v in 0..n {
        if removed[v] {
            continue;
        }
        net.arc(2 * v, 2 * v + 1, if fixed(v) { INF } else { 1 }, 0);
        for &w in g.neighbors(v) {
            if w > v && !removed[w] {
                net.arc(2 * v + 1, 2 * w, INF, 0);
                net.arc(2 * w + 1, 2 * v, INF, 0);
            }
        }
        match side[v] {
            1 => net.arc(src, 2 * v, INF, 0),
            2 => net.arc(2 * v + 1, snk, INF, 0),
            _ => {}
        }
    }
    if net.max_flow(src, snk, limit) > limit {
        return VertexCut::OverLimit;
    }
    let reach = net.reachable(src);
    VertexCut::Cut(
        (0..n)
            .filter(|&v| !removed[v] && reach[2 * v] && !reach[2 * v + 1])
            .collect(),
    )
}

/// Minimum set of edges separating `s_side` from `t_side` (closest to the
/// source), or `None` if it has more than `limit` edges. Edges are sorted.
pub(crate) fn edge_cut(g: &Graph, s_side: &[usize], t_side: &[usize], limit: usize) -> Option<Vec<Edge>> {
    if s_side.is_empty() || t_side.is_empty() {
        return Some(Vec::new());
    }
    let n = g.n();
    let src = n;
    let snk = n + 1;
    let mut net = Network::new(n + 2);
    for (u, v) in g.edges() {
        net.arc(u, v, 1, 1);
    }
    for &s in s_side {
        net.arc(src, s, INF, 0);
    }
    for &t in t_side {
        net.arc(t, snk, INF, 0);
    }
    if net.max_flow(src, snk, limit) > limit {
        return None;
    }
    let reach = net.reachable(src);
    let mut cut: Vec<Edge> = g
        .edges()
        .filter(|&(u, v)| reach[u] != reach[v])
        .map(|(u, v)| edge(u, v))
        .collect();
    cut.sort_unstable();
    Some(cut)
}
