//! Turing kernel for Vertex (2,2)-Partization.
//!
//! An instance `(g, k)` is turned into a list of Twin OCT instances whose
//! disjunction answers it. Each instance pairs the graph induced by the
//! independent side with the complement of the clique side, both shrunk to
//! the terminals plus the vertices that some minimum OCT may need.

use std::collections::BTreeSet;
use std::fs;
use std::io;
use std::path::Path;

use itertools::Itertools;
use serde::Serialize;

use crate::approx::{approx_vertex_22, ExactOct};
use crate::error::{contract, Error, Result};
use crate::flow::{min_vertex_cut, Cut};
use crate::graph::{Edge, Graph};
use crate::oct::{make_oct_independent, protected_mask, solve_oct, AvoidingOct};
use crate::util::{mask, union};
use crate::vertex::two_from_each;

/// Largest terminal set accepted by [`cut_covering_set`] and
/// [`relevant_oct_vertices`].
pub const TERMINAL_CAP: usize = 12;
/// Largest graph, on either side, accepted by [`toct_decide_brute`].
pub const TOCT_VERTEX_CAP: usize = 4096;

/// Twin OCT: is there a split of `x` into kept-left, deleted and kept-right
/// terminals `(X1, XD, X2)` and sets `Z1 ⊆ V(g1) \ x`, `Z2 ⊆ V(g2) \ y` with
/// `g1 - XD - X2 - Z1` and `g2 - φ(XD) - φ(X1) - Z2` bipartite and
/// `|Z1| + |XD| + |Z2| ≤ k`?
///
/// `φ` maps `x[i]` to `y[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TOCTInstance {
    pub g1: Graph,
    pub g2: Graph,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub k: usize,
    /// `|X'| + |Z1| + |Z2|` of the construction; 0 for hand-built instances.
    pub core_size: usize,
}

impl TOCTInstance {
    pub fn new(g1: Graph, g2: Graph, x: Vec<usize>, y: Vec<usize>, k: usize) -> Result<TOCTInstance> {
        if x.len() != y.len() {
            return Err(contract("terminal sets differ in size"));
        }
        for (set, n) in [(&x, g1.n()), (&y, g2.n())] {
            if set.iter().any(|&v| v >= n) || set.iter().duplicates().next().is_some() {
                return Err(contract("terminals must be distinct vertices of their graph"));
            }
        }
        Ok(TOCTInstance {
            g1,
            g2,
            x,
            y,
            k,
            core_size: 0,
        })
    }

    /// Emitted when the approximation already rules the input out: every
    /// labelling of the single terminal leaves a triangle.
    pub fn canonical_no() -> TOCTInstance {
        TOCTInstance::new(Graph::complete(3), Graph::complete(3), vec![0], vec![0], 0).expect("valid")
    }

    pub fn phi(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.x.iter().copied().zip(self.y.iter().copied())
    }

    pub fn vertex_count(&self) -> usize {
        self.g1.n() + self.g2.n()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutCover {
    pub terminals: Vec<usize>,
    pub cover: Vec<usize>,
}

/// Union of the closest minimum `(S, T)` vertex cuts of `g - R` over all
/// disjoint `S, T, R ⊆ x` with `S, T` nonempty. Each unordered `{S, T}` is
/// visited once.
pub fn cut_covering_set(g: &Graph, x: &[usize]) -> Result<CutCover> {
    check_terminals(g, x)?;
    let t = x.len();
    let mut cover = BTreeSet::new();
    let mut labels = vec![0u8; t];
    for code in 0u64..4u64.pow(t as u32) {
        let mut c = code;
        for l in labels.iter_mut() {
            *l = (c % 4) as u8;
            c /= 4;
        }
        // 0 unused, 1 S, 2 T, 3 R; the first of S ∪ T must be in S.
        if labels.iter().find(|&&l| l == 1 || l == 2) != Some(&1) || !labels.contains(&2) {
            continue;
        }
        let pick = |want: u8| -> Vec<usize> { (0..t).filter(|&i| labels[i] == want).map(|i| x[i]).collect() };
        if let Cut::Cut(c) = min_vertex_cut(g, &pick(1), &pick(2), &pick(3))? {
            cover.extend(c);
        }
    }
    Ok(CutCover {
        terminals: x.to_vec(),
        cover: cover.into_iter().collect(),
    })
}

fn check_terminals(g: &Graph, x: &[usize]) -> Result<()> {
    if x.len() > TERMINAL_CAP {
        return Err(Error::CapExceeded {
            what: "terminal set",
            cap: TERMINAL_CAP,
            got: x.len(),
        });
    }
    if x.iter().any(|&v| v >= g.n()) || x.iter().duplicates().next().is_some() {
        return Err(contract("terminals must be distinct vertices of the graph"));
    }
    Ok(())
}

/// Vertices outside `x` such that, for every `Y ⊆ x`, some minimum OCT of
/// `g - Y` avoiding `x` lies inside them. `x` must be an OCT of `g`.
pub fn relevant_oct_vertices(g: &Graph, x: &[usize]) -> Result<Vec<usize>> {
    relevant_within(g, x, x.len(), g.n())
}

/// As [`relevant_oct_vertices`], restricted to `|Y| ≤ max_banned` and to
/// OCTs of size at most `budget - |Y|`.
pub(crate) fn relevant_within(g: &Graph, x: &[usize], max_banned: usize, budget: usize) -> Result<Vec<usize>> {
    check_terminals(g, x)?;
    let sub = make_oct_independent(g, x)?;
    let solver = AvoidingOct::new(&sub.graph, x, &protected_mask(&sub))?;
    Ok(solver.cut_union(max_banned, budget))
}

/// Keeps `keep` (vertex `i` of the result is `keep[i]`) and replaces the
/// rest of `g`, which must be bipartite, by `copies` parallel gadgets per
/// connection: a 2-path for each pair joined by an even path through the
/// removed vertices, a 3-path for an odd one, and a triangle on a kept
/// vertex that closes an odd cycle through them.
pub fn add_parity_gadgets(g: &Graph, keep: &[usize], copies: usize) -> Result<Graph> {
    let n = g.n();
    if keep.iter().any(|&v| v >= n) || keep.iter().duplicates().next().is_some() {
        return Err(contract("kept vertices must be distinct vertices of the graph"));
    }
    let kept = mask(n, keep);
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in keep.iter().enumerate() {
        pos[v] = i;
    }
    let interior: Vec<usize> = (0..n).filter(|&v| !kept[v]).collect();
    let h = g.induced(&interior);
    let colour = h
        .two_colouring()
        .ok_or_else(|| contract("removed vertices do not induce a bipartite graph"))?;

    let mut even = BTreeSet::new();
    let mut odd = BTreeSet::new();
    let mut loops = BTreeSet::new();
    for comp in h.components() {
        // Bit c set when the kept vertex has a neighbour of colour c here.
        let mut sides = vec![0u8; keep.len()];
        for &i in &comp {
            for &w in g.neighbors(interior[i]) {
                if kept[w] {
                    sides[pos[w]] |= 1 << colour[i];
                }
            }
        }
        let touched: Vec<usize> = (0..keep.len()).filter(|&a| sides[a] != 0).collect();
        for &a in &touched {
            if sides[a] == 3 {
                loops.insert(a);
            }
        }
        for (&a, &b) in touched.iter().tuple_combinations() {
            let (sa, sb) = (sides[a], sides[b]);
            if sa & sb != 0 {
                even.insert((a, b));
            }
            if (sa & 1 != 0 && sb & 2 != 0) || (sa & 2 != 0 && sb & 1 != 0) {
                odd.insert((a, b));
            }
        }
    }

    let mut es: Vec<Edge> = g.induced(keep).edges().collect();
    let mut next = keep.len();
    for _ in 0..copies {
        for &(a, b) in &even {
            es.extend([(a, next), (next, b)]);
            next += 1;
        }
        for &(a, b) in &odd {
            es.extend([(a, next), (next, next + 1), (next + 1, b)]);
            next += 2;
        }
        for &a in &loops {
            es.extend([(a, next), (next, next + 1), (next + 1, a)]);
            next += 2;
        }
    }
    Graph::from_edges(next, es)
}

/// Bookkeeping constant `c` with `vertex_count ≤ c · core_size²` for every
/// emitted instance. With `K = |X'| + |Z1| + |Z2|` and `k + 1` gadget
/// copies, each side has at most `K + (k+1)(3K²/2 + 2K)` vertices.
pub fn size_constant(k: usize) -> usize {
    7 * k + 9
}

/// Builds the kernel instances for `(g, k)`, in `(V_C, V_I)` order.
///
/// An approximate solution `X` with partition `(P_I, P_C)` of `g - X` is
/// computed first; if none exists the answer is no and the single
/// [`TOCTInstance::canonical_no`] is returned. Otherwise every guess of the
/// vertices `V_C ⊆ P_I` and `V_I ⊆ P_C` that switch sides (at most two per
/// part) yields one instance with terminals `X' = X ∪ V_I ∪ V_C`.
pub fn build_toct_instances(g: &Graph, k: usize) -> Result<Vec<TOCTInstance>> {
    let Some(apx) = approx_vertex_22(g, k, &ExactOct) else {
        return Ok(vec![TOCTInstance::canonical_no()]);
    };
    let p_i = apx.witness.p_i();
    let p_c = apx.witness.p_c();
    let vcs: Vec<Vec<usize>> = two_from_each(&apx.witness.independent)
        .into_iter()
        .filter(|vc| g.bipartite_on(vc, true))
        .collect();
    let vis: Vec<Vec<usize>> = two_from_each(&apx.witness.cliques)
        .into_iter()
        .filter(|vi| g.bipartite_on(vi, false))
        .collect();
    let guesses: Vec<(&Vec<usize>, &Vec<usize>)> = vcs.iter().cartesian_product(&vis).collect();
    let built = crate::util::map_all(&guesses, |&(vc, vi)| {
        let xp = union(&union(&apx.deleted, vi), vc);
        let (g1, x1, z1) = side(g, &union(&p_i, &xp), &xp, false, k)?;
        let (g2, y2, z2) = side(g, &union(&p_c, &xp), &xp, true, k)?;
        let mut h = TOCTInstance::new(g1, g2, x1, y2, k)?;
        h.core_size = xp.len() + z1 + z2;
        let bound = size_constant(k) * h.core_size * h.core_size;
        log::debug!("kernel instance: {} vertices, bound {}", h.vertex_count(), bound);
        debug_assert!(h.vertex_count() <= bound);
        Ok(h)
    });
    built.into_iter().collect()
}

/// One side of an instance: `g[vs]` (complemented if asked), shrunk to the
/// terminals and their relevant vertices. Returns the gadget graph, the
/// terminals' ids in it (in `xp` order) and `|Z|`.
fn side(g: &Graph, vs: &[usize], xp: &[usize], complement: bool, k: usize) -> Result<(Graph, Vec<usize>, usize)> {
    let mut h = g.induced(vs);
    if complement {
        h = h.complement();
    }
    let at = |v: usize| vs.binary_search(&v).expect("terminal in side");
    let x: Vec<usize> = xp.iter().map(|&v| at(v)).collect();
    let z = relevant_within(&h, &x, k, k)?;
    let keep = union(&crate::util::sorted(x.clone()), &z);
    let gadgets = add_parity_gadgets(&h, &keep, k + 1)?;
    let x_new = x.iter().map(|v| keep.binary_search(v).expect("kept")).collect();
    Ok((gadgets, x_new, z.len()))
}

/// Minimum `|Z|` per kept-terminal mask: entry `m` is the smallest
/// `Z ⊆ V(g) \ x` with `g - (x \ kept(m)) - Z` bipartite, if `≤ budget`.
fn side_costs(g: &Graph, x: &[usize], budget: usize) -> Result<Vec<Option<usize>>> {
    let t = x.len();
    let full = crate::util::mask(g.n(), x);
    let is_oct = g.without_vertices(x).0.two_colouring().is_some();
    let solver = if is_oct {
        let sub = make_oct_independent(g, x)?;
        Some(AvoidingOct::new(&sub.graph, x, &protected_mask(&sub))?)
    } else {
        None
    };
    let masks: Vec<u64> = (0..1u64 << t).collect();
    Ok(crate::util::map_all(&masks, |&kept| {
        let banned: Vec<bool> = (0..t).map(|i| kept >> i & 1 == 0).collect();
        match &solver {
            Some(s) => s.solve(&banned, budget).map(|z| z.len()),
            None => twin_cost(g, x, &full, &banned, budget),
        }
    }))
}

/// Kept terminals are blown up into `budget + 1` false twins, so no OCT
/// within budget can afford to delete one.
fn twin_cost(g: &Graph, x: &[usize], in_x: &[bool], banned: &[bool], budget: usize) -> Option<usize> {
    let gone: Vec<usize> = x.iter().zip(banned).filter(|(_, &b)| b).map(|(&v, _)| v).collect();
    let (h, map) = g.without_vertices(&gone);
    let mut copies: Vec<Vec<usize>> = (0..h.n()).map(|v| vec![v]).collect();
    let mut next = h.n();
    for (v, c) in copies.iter_mut().enumerate() {
        if in_x[map[v]] {
            c.extend(next..next + budget);
            next += budget;
        }
    }
    let mut es: Vec<Edge> = Vec::new();
    for (u, v) in h.edges() {
        es.extend(copies[u].iter().cartesian_product(&copies[v]).map(|(&a, &b)| (a, b)));
    }
    let blown = Graph::from_edges(next, es).expect("valid edges");
    let sol = solve_oct(&blown, budget)?;
    Some(sol.deleted.iter().filter(|&&v| v < h.n() && !in_x[map[v]]).count())
}

/// Decides a Twin OCT instance by trying every split of the terminals.
pub fn toct_decide_brute(h: &TOCTInstance) -> Result<bool> {
    let t = h.x.len();
    if t > TERMINAL_CAP {
        return Err(Error::CapExceeded {
            what: "terminal set",
            cap: TERMINAL_CAP,
            got: t,
        });
    }
    let big = h.g1.n().max(h.g2.n());
    if big > TOCT_VERTEX_CAP {
        return Err(Error::CapExceeded {
            what: "instance graph",
            cap: TOCT_VERTEX_CAP,
            got: big,
        });
    }
    let left = side_costs(&h.g1, &h.x, h.k)?;
    let right = side_costs(&h.g2, &h.y, h.k)?;
    let all = (1u64 << t) - 1;
    for a in 0..=all {
        let Some(ca) = left[a as usize] else { continue };
        let rest = all & !a;
        // b runs over the subsets of `rest`.
        let mut b = rest;
        loop {
            if let Some(cb) = right[b as usize] {
                let deleted = (rest & !b).count_ones() as usize;
                if ca + cb + deleted <= h.k {
                    return Ok(true);
                }
            }
            if b == 0 {
                break;
            }
            b = (b - 1) & rest;
        }
    }
    Ok(false)
}

#[derive(Serialize)]
struct ManifestEntry {
    index: usize,
    g1_vertices: usize,
    g1_edges: usize,
    g2_vertices: usize,
    g2_edges: usize,
    terminals: usize,
    core_size: usize,
    size_bound: usize,
}

#[derive(Serialize)]
struct Manifest {
    k: usize,
    instance_count: usize,
    size_constant: usize,
    instances: Vec<ManifestEntry>,
}

/// Writes `manifest.json` and, per instance, `instance_NNNN_g1.el`,
/// `instance_NNNN_g2.el` and `instance_NNNN_phi.txt` (one `x y` per line).
pub fn write_kernel_dir(dir: &Path, k: usize, instances: &[TOCTInstance]) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let c = size_constant(k);
    let mut entries = Vec::with_capacity(instances.len());
    for (i, h) in instances.iter().enumerate() {
        fs::write(dir.join(format!("instance_{i:04}_g1.el")), h.g1.to_edge_list())?;
        fs::write(dir.join(format!("instance_{i:04}_g2.el")), h.g2.to_edge_list())?;
        let phi: String = h.phi().map(|(a, b)| format!("{a} {b}\n")).collect();
        fs::write(dir.join(format!("instance_{i:04}_phi.txt")), phi)?;
        entries.push(ManifestEntry {
            index: i,
            g1_vertices: h.g1.n(),
            g1_edges: h.g1.m(),
            g2_vertices: h.g2.n(),
            g2_edges: h.g2.m(),
            terminals: h.x.len(),
            core_size: h.core_size,
            size_bound: c * h.core_size * h.core_size,
        });
    }
    let manifest = Manifest {
        k,
        instance_count: instances.len(),
        size_constant: c,
        instances: entries,
    };
    let json = serde_json::to_string_pretty(&manifest).map_err(io::Error::other)?;
    fs::write(dir.join("manifest.json"), json + "\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute::{brute_min_vertex_del, brute_oct};
    use crate::graph::tests::arb_graph;
    use crate::recognition::RLParams;
    use crate::util::subsets_up_to;
    use proptest::prelude::*;

    fn g(n: usize, es: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, es.iter().copied()).unwrap()
    }

    #[test]
    fn cover_examples() {
        let path = Graph::path(3);
        assert_eq!(cut_covering_set(&path, &[0, 2]).unwrap().cover, vec![1]);
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(cut_covering_set(&star, &[1, 2, 3]).unwrap().cover, vec![0]);
        assert!(cut_covering_set(&star, &[]).unwrap().cover.is_empty());
        let many: Vec<usize> = (0..13).collect();
        assert!(matches!(
            cut_covering_set(&Graph::empty(13), &many),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn relevant_examples() {
        let z = relevant_oct_vertices(&Graph::complete(3), &[0]).unwrap();
        assert!(!z.is_empty() && !z.contains(&0));
        assert!(relevant_oct_vertices(&Graph::path(4), &[1]).unwrap().is_empty());
        assert!(relevant_oct_vertices(&Graph::complete(3), &[]).is_err());
    }

    #[test]
    fn gadget_examples() {
        let even = add_parity_gadgets(&g(3, &[(0, 2), (1, 2)]), &[0, 1], 1).unwrap();
        assert_eq!((even.n(), even.m()), (3, 2));
        let odd = add_parity_gadgets(&g(4, &[(0, 2), (2, 3), (3, 1)]), &[0, 1], 1).unwrap();
        assert_eq!((odd.n(), odd.m()), (4, 3));
        let none = add_parity_gadgets(&g(3, &[(0, 1)]), &[0, 1], 3).unwrap();
        assert_eq!((none.n(), none.m()), (2, 1));
        let tri = add_parity_gadgets(&Graph::complete(3), &[0], 2).unwrap();
        assert_eq!((tri.n(), tri.m()), (5, 6));
        assert!(add_parity_gadgets(&Graph::complete(3), &[], 1).is_err());
    }

    #[test]
    fn toct_examples() {
        let yes = TOCTInstance::new(Graph::path(3), Graph::empty(2), vec![], vec![], 0).unwrap();
        assert!(toct_decide_brute(&yes).unwrap());
        let c5 = TOCTInstance::new(Graph::cycle(5), Graph::empty(0), vec![], vec![], 0).unwrap();
        assert!(!toct_decide_brute(&c5).unwrap());
        assert!(!toct_decide_brute(&TOCTInstance::canonical_no()).unwrap());
        assert!(TOCTInstance::new(Graph::path(2), Graph::path(2), vec![0], vec![], 0).is_err());
    }

    fn three_c5() -> Graph {
        Graph::cycle(5).disjoint_union(&Graph::cycle(5)).disjoint_union(&Graph::cycle(5))
    }

    fn or_answer(g: &Graph, k: usize) -> bool {
        let hs = build_toct_instances(g, k).unwrap();
        assert!(!hs.is_empty());
        for h in &hs {
            if h.core_size > 0 {
                assert!(h.vertex_count() <= size_constant(k) * h.core_size * h.core_size);
            }
        }
        hs.iter().any(|h| toct_decide_brute(h).unwrap())
    }

    #[test]
    fn kernel_examples() {
        assert!(or_answer(&three_c5(), 1));
        assert!(!or_answer(&three_c5(), 0));
        let split = g(5, &[(0, 1), (0, 2), (1, 2), (2, 3)]);
        assert!(or_answer(&split, 0));
        let three_k3 = Graph::complete(3).disjoint_union(&Graph::complete(3)).disjoint_union(&Graph::complete(3));
        assert!(!or_answer(&three_k3, 0));
        assert!(or_answer(&three_k3, 1));
        assert!(or_answer(&three_k3.complement(), 1));
    }

    #[test]
    fn kernel_dir_layout() {
        let dir = std::env::temp_dir().join(format!("rlpart-kernel-{}", std::process::id()));
        let hs = build_toct_instances(&three_c5(), 1).unwrap();
        write_kernel_dir(&dir, 1, &hs).unwrap();
        let manifest: serde_json::Value =
            serde_json::from_str(&fs::read_to_string(dir.join("manifest.json")).unwrap()).unwrap();
        assert_eq!(manifest["instance_count"], hs.len());
        let g1 = crate::graph::parse_edge_list(&fs::read_to_string(dir.join("instance_0000_g1.el")).unwrap()).unwrap();
        assert_eq!(g1, hs[0].g1);
        fs::remove_dir_all(dir).unwrap();
    }

    /// Exhaustive Twin OCT search over all deletion sets.
    fn toct_exhaustive(h: &TOCTInstance) -> bool {
        let t = h.x.len();
        let others = |g: &Graph, x: &[usize]| -> Vec<usize> { (0..g.n()).filter(|v| !x.contains(v)).collect() };
        let o1 = others(&h.g1, &h.x);
        let o2 = others(&h.g2, &h.y);
        for labels in (0..t).map(|_| 0..3u8).multi_cartesian_product() {
            let pick = |set: &[usize], l: u8| -> Vec<usize> { (0..t).filter(|&i| labels[i] == l).map(|i| set[i]).collect() };
            let xd = labels.iter().filter(|&&l| l == 1).count();
            if xd > h.k {
                continue;
            }
            let fits = |g: &Graph, gone: Vec<usize>, pool: &[usize], budget: usize| {
                subsets_up_to(pool, budget)
                    .into_iter()
                    .filter(|z| g.without_vertices(&union(&crate::util::sorted(gone.clone()), z)).0.is_bipartite().is_some())
                    .map(|z| z.len())
                    .min()
            };
            let mut gone1 = pick(&h.x, 1);
            gone1.extend(pick(&h.x, 2));
            let mut gone2 = pick(&h.y, 1);
            gone2.extend(pick(&h.y, 0));
            if let (Some(a), Some(b)) = (fits(&h.g1, gone1, &o1, h.k - xd), fits(&h.g2, gone2, &o2, h.k - xd)) {
                if a + b + xd <= h.k {
                    return true;
                }
            }
        }
        false
    }

    fn arb_instance() -> impl Strategy<Value = TOCTInstance> {
        (arb_graph(6), arb_graph(6), 0usize..=3, 0usize..=2, any::<u64>()).prop_map(|(g1, g2, t, k, seed)| {
            let t = t.min(g1.n()).min(g2.n());
            let x: Vec<usize> = (0..t).map(|i| (i + seed as usize) % g1.n().max(1)).unique().collect();
            let y: Vec<usize> = (0..x.len()).rev().collect();
            TOCTInstance::new(g1, g2, x, y, k).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn toct_matches_exhaustive(h in arb_instance()) {
            prop_assert_eq!(toct_decide_brute(&h).unwrap(), toct_exhaustive(&h));
        }

        #[test]
        fn relevant_vertices_hold_minimum(g in arb_graph(8), seed in any::<u64>()) {
            // Any OCT works as x; take the brute-force one plus up to two extra vertices.
            let base = solve_oct(&g, g.n()).unwrap().deleted;
            let extra: Vec<usize> = (0..g.n()).filter(|v| (seed >> v) & 1 == 1).take(2).collect();
            let x = union(&base, &extra);
            prop_assume!(x.len() <= 4);
            let z = relevant_oct_vertices(&g, &x).unwrap();
            prop_assert!(z.iter().all(|v| !x.contains(v)));
            for y in subsets_up_to(&x, x.len()) {
                let (h, map) = g.without_vertices(&y);
                let pool: Vec<usize> = (0..h.n()).filter(|&v| !x.contains(&map[v])).collect();
                let inside: Vec<usize> = pool.iter().copied().filter(|&v| z.contains(&map[v])).collect();
                let best = |cands: &[usize]| {
                    subsets_up_to(cands, cands.len())
                        .into_iter()
                        .filter(|o| h.without_vertices(o).0.is_bipartite().is_some())
                        .map(|o| o.len())
                        .min()
                };
                prop_assert_eq!(best(&inside), best(&pool));
            }
        }

        #[test]
        fn kernel_or_equivalence(g in arb_graph(7), k in 0usize..=2) {
            let yes = brute_min_vertex_del(&g, RLParams::TWO_TWO).unwrap().0 <= k;
            prop_assert_eq!(or_answer(&g, k), yes);
        }

        #[test]
        fn gadgets_preserve_constrained_oct(g in arb_graph(8), seed in any::<u64>()) {
            let x: Vec<usize> = solve_oct(&g, g.n()).unwrap().deleted;
            let rest: Vec<usize> = (0..g.n()).filter(|v| !x.contains(v)).collect();
            let keep = union(&x, &rest.iter().copied().filter(|v| (seed >> v) & 1 == 1).collect::<Vec<_>>());
            let k = 2;
            let star = add_parity_gadgets(&g, &keep, k + 1).unwrap();
            // Minimum OCT within `keep` of g equals the minimum OCT of the gadget graph, up to k.
            let within = subsets_up_to(&keep, k)
                .into_iter()
                .filter(|o| g.without_vertices(o).0.is_bipartite().is_some())
                .map(|o| o.len())
                .min();
            let gadget = (0..=k).find(|&b| solve_oct(&star, b).is_some());
            prop_assert_eq!(within, gadget);
            if keep.len() == g.n() {
                prop_assert_eq!(within, Some(brute_oct(&g).unwrap()).filter(|&b| b <= k));
            }
        }
    }
}
