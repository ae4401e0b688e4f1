//! Recognition of (r,l)-graphs and (r,l)-split graphs for `r, l <= 2`.

use serde::{Deserialize, Serialize};

use crate::error::{contract, Error, Result};
use crate::graph::Graph;
use crate::util::{minus, sorted, subsets_up_to, union};

/// Number of independent sets `r` and cliques `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RLParams {
    pub r: usize,
    pub l: usize,
}

impl RLParams {
    pub fn new(r: usize, l: usize) -> Result<RLParams> {
        if r > 2 || l > 2 || r + l == 0 {
            return Err(Error::InvalidParams(format!(
                "need r, l in 0..=2 with r + l >= 1, got ({r}, {l})"
            )));
        }
        Ok(RLParams { r, l })
    }

    pub const TWO_TWO: RLParams = RLParams { r: 2, l: 2 };
    pub const TWO_ONE: RLParams = RLParams { r: 2, l: 1 };
    pub const ONE_TWO: RLParams = RLParams { r: 1, l: 2 };
    pub const ONE_ONE: RLParams = RLParams { r: 1, l: 1 };

    pub fn swapped(self) -> RLParams {
        RLParams { r: self.l, l: self.r }
    }
}

impl std::fmt::Display for RLParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.r, self.l)
    }
}

/// Ramsey number `R(l+1, r+1)`.
pub fn ramsey_bound(p: RLParams) -> Result<usize> {
    let p = RLParams::new(p.r, p.l)?;
    Ok(ramsey(p.l + 1, p.r + 1))
}

fn ramsey(a: usize, b: usize) -> usize {
    match (a.min(b), a.max(b)) {
        (1, _) => 1,
        (2, x) => x,
        (3, 3) => 6,
        _ => unreachable!("parameters are at most 2"),
    }
}

/// A partition of the vertices into `r` independent sets and `l` cliques.
/// Parts may be empty; there are always exactly `r` and `l` of them.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ICPartition {
    pub independent: Vec<Vec<usize>>,
    pub cliques: Vec<Vec<usize>>,
}

impl ICPartition {
    pub fn p_i(&self) -> Vec<usize> {
        sorted(self.independent.concat())
    }

    pub fn p_c(&self) -> Vec<usize> {
        sorted(self.cliques.concat())
    }

    /// Renames all members through `map`.
    pub fn mapped(&self, map: &[usize]) -> ICPartition {
        let f = |parts: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
            parts
                .iter()
                .map(|p| sorted(p.iter().map(|&v| map[v]).collect()))
                .collect()
        };
        ICPartition {
            independent: f(&self.independent),
            cliques: f(&self.cliques),
        }
    }

    /// Canonical witness for the sides `(p_i, p_c)`, if they are valid: the
    /// independent parts are the colour classes of `g[p_i]` and the cliques
    /// those of the complement of `g[p_c]`.
    pub fn from_sides(g: &Graph, p_i: &[usize], p_c: &[usize], params: RLParams) -> Option<ICPartition> {
        Some(ICPartition {
            independent: split_into(g, p_i, params.r, false)?,
            cliques: split_into(g, p_c, params.l, true)?,
        })
    }

    /// Swaps the roles of independent sets and cliques, which is what a
    /// partition of the complement graph means for the graph itself.
    pub fn swapped(self) -> ICPartition {
        ICPartition {
            independent: self.cliques,
            cliques: self.independent,
        }
    }
}

/// Splits `vs` into `parts` independent sets (or cliques when `clique`).
fn split_into(g: &Graph, vs: &[usize], parts: usize, clique: bool) -> Option<Vec<Vec<usize>>> {
    match parts {
        0 => vs.is_empty().then(Vec::new),
        1 => {
            let ok = if clique {
                g.is_clique(vs)
            } else {
                g.is_independent(vs)
            };
            ok.then(|| vec![vs.to_vec()])
        }
        _ => {
            let h = g.induced(vs);
            let h = if clique { h.complement() } else { h };
            let bp = h.is_bipartite()?.mapped(vs);
            Some(vec![bp.left, bp.right])
        }
    }
}

fn partitionable(g: &Graph, vs: &[usize], parts: usize, clique: bool) -> bool {
    match parts {
        0 => vs.is_empty(),
        1 if clique => g.is_clique(vs),
        1 => g.is_independent(vs),
        _ => {
            let h = g.induced(vs);
            if clique {
                h.complement().two_colouring().is_some()
            } else {
                h.two_colouring().is_some()
            }
        }
    }
}

pub fn verify_ic_partition(g: &Graph, p: &ICPartition, params: RLParams) -> bool {
    if p.independent.len() > params.r || p.cliques.len() > params.l {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for part in p.independent.iter().chain(&p.cliques) {
        for &v in part {
            if v >= g.n() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
    }
    seen.iter().all(|&s| s)
        && p.independent.iter().all(|s| g.is_independent(s))
        && p.cliques.iter().all(|s| g.is_clique(s))
}

/// `v1` has no clique on `r + 1` vertices, `v2` no independent set on
/// `l + 1` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SplitPartition {
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
}

/// First `size`-clique (or independent set when `indep`) inside `vs`, in
/// lexicographic order of positions.
fn find_uniform(g: &Graph, vs: &[usize], size: usize, indep: bool) -> Option<Vec<usize>> {
    let rel = |a: usize, b: usize| g.has_edge(a, b) != indep;
    match size {
        1 => vs.first().map(|&v| vec![v]),
        2 => {
            for (i, &a) in vs.iter().enumerate() {
                for &b in &vs[i + 1..] {
                    if rel(a, b) {
                        return Some(vec![a, b]);
                    }
                }
            }
            None
        }
        3 => {
            for (i, &a) in vs.iter().enumerate() {
                for (j, &b) in vs.iter().enumerate().skip(i + 1) {
                    if !rel(a, b) {
                        continue;
                    }
                    for &c in &vs[j + 1..] {
                        if rel(a, c) && rel(b, c) {
                            return Some(vec![a, b, c]);
                        }
                    }
                }
            }
            None
        }
        _ => unreachable!("parameters are at most 2"),
    }
}

pub fn verify_split_partition(g: &Graph, p: &SplitPartition, params: RLParams) -> bool {
    let mut all = union(&p.v1, &p.v2);
    all.dedup();
    all.len() == g.n()
        && p.v1.len() + p.v2.len() == g.n()
        && find_uniform(g, &p.v1, params.r + 1, false).is_none()
        && find_uniform(g, &p.v2, params.l + 1, true).is_none()
}

struct SplitSearch<'a> {
    g: &'a Graph,
    params: RLParams,
    cap: usize,
    in_v1: Vec<bool>,
    fixed: Vec<bool>,
    moved_out: [usize; 2],
}

impl SplitSearch<'_> {
    fn side(&self, one: bool) -> Vec<usize> {
        (0..self.g.n()).filter(|&v| self.in_v1[v] == one).collect()
    }

    /// Repairs the first violation by moving one of its unfixed vertices to
    /// the other side. Every repair is permanent, and each direction can
    /// move at most `cap` vertices.
    fn run(&mut self) -> bool {
        let violation = match find_uniform(self.g, &self.side(true), self.params.r + 1, false) {
            Some(k) => Some((k, 0)),
            None => find_uniform(self.g, &self.side(false), self.params.l + 1, true).map(|k| (k, 1)),
        };
        let Some((bad, dir)) = violation else {
            return true;
        };
        if self.moved_out[dir] == self.cap {
            return false;
        }
        for u in bad {
            if self.fixed[u] {
                continue;
            }
            self.in_v1[u] = !self.in_v1[u];
            self.fixed[u] = true;
            self.moved_out[dir] += 1;
            if self.run() {
                return true;
            }
            self.moved_out[dir] -= 1;
            self.fixed[u] = false;
            self.in_v1[u] = !self.in_v1[u];
        }
        false
    }
}

/// Extends a split partition of `g - v` to one of `g`.
///
/// Any split partition of `g` differs from `ab` on fewer than
/// `ramsey_bound` vertices in each direction, so this search bounds the
/// moves per direction by `ramsey_bound - 1` and always branches on a
/// violated clique or independent set.
pub fn compress_split(g: &Graph, v: usize, ab: &SplitPartition, params: RLParams) -> Result<Option<SplitPartition>> {
    let mut rest = union(&ab.v1, &ab.v2);
    rest.dedup();
    if rest.len() + 1 != g.n() || rest.contains(&v) || ab.v1.len() + ab.v2.len() != rest.len() {
        return Err(contract("split partition must cover every vertex but v"));
    }
    let (h, map) = g.without_vertices(&[v]);
    let pos = |x: usize| map.binary_search(&x).expect("vertex of g - v");
    let local = SplitPartition {
        v1: ab.v1.iter().map(|&x| pos(x)).collect(),
        v2: ab.v2.iter().map(|&x| pos(x)).collect(),
    };
    if !verify_split_partition(&h, &local, params) {
        return Err(contract("given partition is not a split partition of g - v"));
    }
    Ok(compress_split_unchecked(g, v, &ab.v1, params))
}

fn compress_split_unchecked(g: &Graph, v: usize, v1: &[usize], params: RLParams) -> Option<SplitPartition> {
    let cap = ramsey(params.l + 1, params.r + 1) - 1;
    for v_in_v1 in [true, false] {
        let mut in_v1 = crate::util::mask(g.n(), v1);
        in_v1[v] = v_in_v1;
        let mut fixed = vec![false; g.n()];
        fixed[v] = true;
        let mut search = SplitSearch {
            g,
            params,
            cap,
            in_v1,
            fixed,
            moved_out: [0, 0],
        };
        if search.run() {
            return Some(SplitPartition {
                v1: search.side(true),
                v2: search.side(false),
            });
        }
    }
    None
}

/// A split partition of `g`, built one vertex at a time.
pub fn split_partition(g: &Graph, params: RLParams) -> Option<SplitPartition> {
    let mut v1: Vec<usize> = Vec::new();
    for i in 0..g.n() {
        let prefix: Vec<usize> = (0..=i).collect();
        let gi = g.induced(&prefix);
        v1 = compress_split_unchecked(&gi, i, &v1, params)?.v1;
    }
    Some(SplitPartition {
        v2: minus(&(0..g.n()).collect::<Vec<_>>(), &v1),
        v1,
    })
}

/// An IC-partition of `g`, if `g` is an (r,l)-graph.
///
/// With both parameters positive, a split partition is computed first; an
/// IC-partition moves at most `r * l` vertices across it in each direction.
pub fn recognize_rl(g: &Graph, params: RLParams) -> Option<ICPartition> {
    let all: Vec<usize> = (0..g.n()).collect();
    if params.r == 0 {
        return ICPartition::from_sides(g, &[], &all, params);
    }
    if params.l == 0 {
        return ICPartition::from_sides(g, &all, &[], params);
    }
    let sp = split_partition(g, params)?;
    let cross = params.r * params.l;
    let ws: Vec<Vec<usize>> = subsets_up_to(&sp.v1, cross)
        .into_iter()
        .filter(|w| partitionable(g, &minus(&sp.v1, w), params.r, false))
        .collect();
    let us: Vec<Vec<usize>> = subsets_up_to(&sp.v2, cross)
        .into_iter()
        .filter(|u| partitionable(g, &minus(&sp.v2, u), params.l, true))
        .collect();
    for w in &ws {
        let c_base = union(&sp.v2, w);
        let i_base = minus(&sp.v1, w);
        for u in &us {
            let c = minus(&c_base, u);
            if !partitionable(g, &c, params.l, true) {
                continue;
            }
            let i = union(&i_base, u);
            if let Some(p) = ICPartition::from_sides(g, &i, &c, params) {
                return Some(p);
            }
        }
    }
    None
}

pub const DEFAULT_ENUM_CAP: usize = 24;

/// Every IC-partition of `g`, once per distinct `(p_i, p_c)` pair, with
/// canonical witnesses. Only meant for small graphs.
pub fn enumerate_ic_partitions(g: &Graph, params: RLParams) -> Result<Vec<ICPartition>> {
    enumerate_ic_partitions_capped(g, params, DEFAULT_ENUM_CAP)
}

pub fn enumerate_ic_partitions_capped(g: &Graph, params: RLParams, cap: usize) -> Result<Vec<ICPartition>> {
    if g.n() > cap {
        return Err(Error::CapExceeded {
            what: "IC-partition enumeration vertex count",
            cap,
            got: g.n(),
        });
    }
    let mut out = Vec::new();
    let mut i_side = Vec::new();
    let mut c_side = Vec::new();
    enumerate_rec(g, params, 0, &mut i_side, &mut c_side, &mut out);
    Ok(out)
}

fn enumerate_rec(
    g: &Graph,
    params: RLParams,
    v: usize,
    i_side: &mut Vec<usize>,
    c_side: &mut Vec<usize>,
    out: &mut Vec<ICPartition>,
) {
    if v == g.n() {
        out.push(ICPartition::from_sides(g, i_side, c_side, params).expect("pruned to valid sides"));
        return;
    }
    i_side.push(v);
    if partitionable(g, i_side, params.r, false) {
        enumerate_rec(g, params, v + 1, i_side, c_side, out);
    }
    i_side.pop();
    c_side.push(v);
    if partitionable(g, c_side, params.l, true) {
        enumerate_rec(g, params, v + 1, i_side, c_side, out);
    }
    c_side.pop();
}
