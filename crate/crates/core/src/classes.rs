//! Graph class recognition.

use crate::bitset::VertexSet;
use crate::families::{SpiderKind, SpiderShape};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::fmt;

pub fn is_forest(g: &Graph) -> bool {
    g.size() + g.connected_components().len() == g.order()
}

pub fn is_tree(g: &Graph) -> bool {
    g.order() >= 1 && g.is_connected() && g.size() + 1 == g.order()
}

/// Largest shortest-path distance; `None` for a disconnected graph.
pub fn diameter(g: &Graph) -> Option<usize> {
    let mut best = 0;
    for v in 0..g.order() {
        for d in g.distances_from(v) {
            best = best.max(d?);
        }
    }
    Some(best)
}

/// The shapes on the right-hand side of the sigma-one conjecture.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum ConjectureForm {
    K1,
    /// `K2 + sK1`, `s >= 0`.
    K2PlusIsolated {
        s: usize,
    },
    /// `K_{1,r} + sK1`, `r >= 2`.
    StarPlusIsolated {
        r: usize,
        s: usize,
    },
}

impl ConjectureForm {
    /// The `s < r - 1` side condition; vacuous for the other shapes.
    pub fn satisfies_constraint(&self) -> bool {
        match *self {
            ConjectureForm::StarPlusIsolated { r, s } => s + 1 < r,
            _ => true,
        }
    }
}

impl fmt::Display for ConjectureForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ConjectureForm::K1 => write!(f, "K1"),
            ConjectureForm::K2PlusIsolated { s } => write!(f, "K2+{s}K1"),
            ConjectureForm::StarPlusIsolated { r, s } => write!(f, "K1,{r}+{s}K1"),
        }
    }
}

/// Whether the component is a star with at least one edge.
fn star_center(g: &Graph, comp: &[usize]) -> bool {
    comp.len() >= 2
        && g.size_within(comp) + 1 == comp.len()
        && comp.iter().any(|&v| g.degree(v) + 1 == comp.len())
}

/// Matches `G` against `K1`, `K2 + sK1` or `K_{1,r} + sK1` ignoring the
/// `s < r - 1` condition. Uses component sizes and degrees only; the three
/// shapes are determined by them.
pub fn raw_shape(g: &Graph) -> Option<ConjectureForm> {
    let n = g.order();
    if n == 1 {
        return Some(ConjectureForm::K1);
    }
    let comps = g.connected_components();
    let nontrivial: Vec<&Vec<usize>> = comps.iter().filter(|c| c.len() > 1).collect();
    let [c] = nontrivial.as_slice() else {
        return None;
    };
    if !star_center(g, c) {
        return None;
    }
    let s = n - c.len();
    match c.len() - 1 {
        1 => Some(ConjectureForm::K2PlusIsolated { s }),
        r => Some(ConjectureForm::StarPlusIsolated { r, s }),
    }
}

/// [`raw_shape`] restricted to the conjecture's parameter ranges.
pub fn conjecture_form(g: &Graph) -> Option<ConjectureForm> {
    raw_shape(g).filter(ConjectureForm::satisfies_constraint)
}

/// Clique/stable-set partition of a split graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitPartition {
    pub clique: Vec<usize>,
    pub stable: Vec<usize>,
}

impl SplitPartition {
    pub fn is_witness_for(&self, g: &Graph) -> bool {
        let mut all: Vec<usize> = self.clique.iter().chain(&self.stable).copied().collect();
        all.sort_unstable();
        all == (0..g.order()).collect::<Vec<_>>()
            && pairs(&self.clique).all(|(u, v)| g.has_edge(u, v))
            && pairs(&self.stable).all(|(u, v)| !g.has_edge(u, v))
    }
}

fn pairs(vs: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    vs.iter()
        .enumerate()
        .flat_map(move |(i, &u)| vs[i + 1..].iter().map(move |&v| (u, v)))
}

/// Split recognition by splittance: with degrees `d1 >= ... >= dn` and `m`
/// the largest index with `d_m >= m - 1`, `G` is split iff
/// `sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i`; the top `m` vertices then form
/// the clique. The clique is grown to be maximal before returning.
pub fn is_split(g: &Graph) -> Option<SplitPartition> {
    let n = g.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let d: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let m = (0..n)
        .filter(|&i| d[i] >= i)
        .map(|i| i + 1)
        .max()
        .unwrap_or(0);
    let head: usize = d[..m].iter().sum();
    let tail: usize = d[m..].iter().sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    let mut clique: Vec<usize> = order[..m].to_vec();
    let mut stable: Vec<usize> = order[m..].to_vec();
    if let Some(pos) = stable
        .iter()
        .position(|&s| clique.iter().all(|&c| g.has_edge(s, c)))
    {
        clique.push(stable.remove(pos));
    }
    clique.sort_unstable();
    stable.sort_unstable();
    Some(SplitPartition { clique, stable })
}

/// What a four-vertex induced subgraph looks like, for the shapes we need.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Quad {
    P4,
    TwoK2,
    C4,
    Other,
}

fn classify_quad(g: &Graph, q: [usize; 4]) -> Quad {
    let mut deg = [0u8; 4];
    let mut edges = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if g.has_edge(q[i], q[j]) {
                deg[i] += 1;
                deg[j] += 1;
                edges += 1;
            }
        }
    }
    deg.sort_unstable();
    match (edges, deg) {
        (3, [1, 1, 2, 2]) => Quad::P4,
        (2, [1, 1, 1, 1]) => Quad::TwoK2,
        (4, [2, 2, 2, 2]) => Quad::C4,
        _ => Quad::Other,
    }
}

fn quads(vs: &[usize]) -> impl Iterator<Item = [usize; 4]> + '_ {
    let k = vs.len();
    (0..k).flat_map(move |a| {
        (a + 1..k).flat_map(move |b| {
            (b + 1..k).flat_map(move |c| (c + 1..k).map(move |d| [vs[a], vs[b], vs[c], vs[d]]))
        })
    })
}

fn all_vertices(g: &Graph) -> Vec<usize> {
    (0..g.order()).collect()
}

/// Four-vertex subsets inducing `P4`.
pub fn count_induced_p4(g: &Graph) -> usize {
    count_p4_within(g, &all_vertices(g))
}

fn count_p4_within(g: &Graph, vs: &[usize]) -> usize {
    quads(vs)
        .filter(|&q| classify_quad(g, q) == Quad::P4)
        .count()
}

fn pseudo_split_within(g: &Graph, vs: &[usize]) -> bool {
    quads(vs).all(|q| !matches!(classify_quad(g, q), Quad::TwoK2 | Quad::C4))
}

/// `{2K2, C4}`-free.
pub fn is_pseudo_split(g: &Graph) -> bool {
    pseudo_split_within(g, &all_vertices(g))
}

/// P4-free test by direct search.
pub fn has_induced_p4(g: &Graph) -> bool {
    quads(&all_vertices(g)).any(|q| classify_quad(g, q) == Quad::P4)
}

/// Cograph test via the cotree recursion: a graph on two or more vertices
/// is a cograph iff it or its complement is disconnected and every part is
/// a cograph.
pub fn is_cograph(g: &Graph) -> bool {
    if g.order() <= 1 {
        return true;
    }
    let comps = g.connected_components();
    let parts = if comps.len() > 1 {
        comps
    } else {
        let anti = g.anticomponent_sets();
        if anti.len() == 1 {
            return false;
        }
        anti
    };
    parts
        .iter()
        .all(|p| is_cograph(&g.induced_on(&set_of(g, p))))
}

fn set_of(g: &Graph, vs: &[usize]) -> VertexSet {
    VertexSet::from_iter_with_capacity(g.order(), vs.iter().copied())
}

/// Every induced subgraph on at most six vertices with more than two induced
/// `P4`s is pseudo-split. Subsets on four or fewer vertices hold at most one
/// `P4`, so only five- and six-vertex subsets are inspected.
pub fn is_extended_p4_laden(g: &Graph) -> bool {
    let n = g.order();
    let mut subset = Vec::with_capacity(6);
    for size in 5..=6.min(n) {
        if !subsets_ok(g, n, size, 0, &mut subset) {
            return false;
        }
    }
    true
}

fn subsets_ok(g: &Graph, n: usize, size: usize, start: usize, cur: &mut Vec<usize>) -> bool {
    if cur.len() == size {
        return count_p4_within(g, cur) <= 2 || pseudo_split_within(g, cur);
    }
    for v in start..n {
        if n - v < size - cur.len() {
            break;
        }
        cur.push(v);
        let ok = subsets_ok(g, n, size, v + 1, cur);
        cur.pop();
        if !ok {
            return false;
        }
    }
    true
}

/// All spider witnesses of `g`, thin before thick and by increasing `k`.
/// Two-leg thick spiders coincide with thin ones and are reported as thin.
pub fn spider_witnesses(g: &Graph) -> Vec<SpiderShape> {
    let mut out = Vec::new();
    if let Some(w) = thin_spider(g) {
        out.push(w);
    }
    for k in 3..=g.order() / 2 {
        if let Some(w) = thick_spider(g, k) {
            out.push(w);
        }
    }
    out
}

pub fn recognize_spider(g: &Graph) -> Option<SpiderShape> {
    spider_witnesses(g).into_iter().next()
}

fn finish_spider(
    g: &Graph,
    kind: SpiderKind,
    legs: Vec<usize>,
    body: Vec<usize>,
) -> Option<SpiderShape> {
    let mut used = set_of(g, &legs);
    for &c in &body {
        used.insert(c);
    }
    let head = (0..g.order()).filter(|v| !used.contains(*v)).collect();
    let shape = SpiderShape {
        kind,
        legs,
        body,
        head,
    };
    shape.is_witness_for(g).then_some(shape)
}

/// Legs of a thin spider are exactly the degree-one vertices (head and body
/// vertices see all of a body of size at least two).
fn thin_spider(g: &Graph) -> Option<SpiderShape> {
    let legs: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) == 1).collect();
    if legs.len() < 2 || 2 * legs.len() > g.order() {
        return None;
    }
    let body = legs
        .iter()
        .map(|&s| g.neighbors(s).iter().next().unwrap())
        .collect();
    finish_spider(g, SpiderKind::Thin, legs, body)
}

/// Legs of a thick spider with `k >= 3` are exactly the vertices of degree
/// `k - 1`; each is paired with the one body vertex it misses.
fn thick_spider(g: &Graph, k: usize) -> Option<SpiderShape> {
    let legs: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) == k - 1).collect();
    if legs.len() != k {
        return None;
    }
    let mut body_set = VertexSet::with_capacity(g.order());
    for &s in &legs {
        for c in g.neighbors(s).iter() {
            body_set.insert(c);
        }
    }
    if body_set.len() != k {
        return None;
    }
    let body = legs
        .iter()
        .map(|&s| body_set.iter().find(|&c| !g.has_edge(s, c)))
        .collect::<Option<Vec<_>>>()?;
    finish_spider(g, SpiderKind::Thick, legs, body)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpiderPart {
    Body,
    Leg,
}

/// `G` obtained from a spider by adding a twin to a body or leg vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpiderTwin {
    /// The spider left after deleting `twin` (labels of `G - twin`).
    pub spider: SpiderShape,
    /// Vertex of `G` regarded as the added twin.
    pub twin: usize,
    /// Vertex of `G` it duplicates.
    pub original: usize,
    /// True twin (adjacent to `original`) or false twin.
    pub adjacent: bool,
    pub part: SpiderPart,
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let mut a = g.neighbors(u).clone();
    let mut b = g.neighbors(v).clone();
    a.remove(v);
    b.remove(u);
    a == b
}

/// Searches for a twin pair whose removal of one side leaves a spider with
/// the other side on its body or legs.
pub fn recognize_spider_twin(g: &Graph) -> Option<SpiderTwin> {
    let n = g.order();
    for twin in 0..n {
        for original in (0..n).filter(|&o| o != twin) {
            if !are_twins(g, twin, original) {
                continue;
            }
            let rest = g.remove_vertex(twin).expect("valid vertex");
            let mapped = if original > twin {
                original - 1
            } else {
                original
            };
            for spider in spider_witnesses(&rest) {
                let part = if spider.body.contains(&mapped) {
                    SpiderPart::Body
                } else if spider.legs.contains(&mapped) {
                    SpiderPart::Leg
                } else {
                    continue;
                };
                return Some(SpiderTwin {
                    spider,
                    twin,
                    original,
                    adjacent: g.has_edge(twin, original),
                    part,
                });
            }
        }
    }
    None
}

/// `Some((r, s))` with `r <= s` when `G` is `K_{r,s}`.
pub fn is_complete_bipartite(g: &Graph) -> Option<(usize, usize)> {
    let anti = g.anticomponent_sets();
    let [a, b] = anti.as_slice() else {
        return None;
    };
    let edgeless = |vs: &[usize]| pairs(vs).all(|(u, v)| !g.has_edge(u, v));
    (edgeless(a) && edgeless(b)).then(|| (a.len().min(b.len()), a.len().max(b.len())))
}

/// The five-vertex exceptional graphs of the extended P4-laden structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SmallException {
    K1,
    P5,
    CoP5,
    C5,
}

pub fn small_exception(g: &Graph) -> Option<SmallException> {
    match g.order() {
        1 => Some(SmallException::K1),
        5 => {
            let path_like = |h: &Graph| is_tree(h) && h.degree_sequence() == [2, 2, 2, 1, 1];
            if path_like(g) {
                Some(SmallException::P5)
            } else if path_like(&g.complement()) {
                Some(SmallException::CoP5)
            } else if g.is_connected() && g.degrees().iter().all(|&d| d == 2) {
                Some(SmallException::C5)
            } else {
                None
            }
        }
        _ => None,
    }
}
