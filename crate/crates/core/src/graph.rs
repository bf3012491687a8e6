//! Immutable simple undirected graphs and the structural operations on them.

use crate::bitset::VertexSet;
use std::collections::VecDeque;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("edge ({0}, {0}) is a loop")]
    Loop(usize),
    #[error("vertex {vertex} is not in a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("{family} needs at least {min} (got {got})")]
    BelowFamilyMinimum {
        family: &'static str,
        min: usize,
        got: usize,
    },
}

/// A simple undirected graph on vertices `0..n`.
///
/// Values are immutable; every operation returns a fresh graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph `nK1`.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![VertexSet::with_capacity(n); n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric predicate evaluated on pairs `u < v`.
    pub(crate) fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            for u in 0..v {
                if adjacent(u, v) {
                    g.adj[u].insert(v);
                    g.adj[v].insert(u);
                }
            }
        }
        g
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(VertexSet::len).collect()
    }

    /// Degrees sorted non-increasingly, `d1 >= d2 >= ... >= dn`.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// Edges with both ends in `vs`.
    pub fn size_within(&self, vs: &[usize]) -> usize {
        vs.iter()
            .enumerate()
            .map(|(i, &u)| vs[i + 1..].iter().filter(|&&v| self.has_edge(u, v)).count())
            .sum()
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex {
                vertex: v,
                n: self.order(),
            })
        }
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.order(), |u, v| !self.has_edge(u, v))
    }

    /// `G1 + G2`: vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n1 = self.order();
        Graph::from_fn(n1 + other.order(), |u, v| {
            if v < n1 {
                self.has_edge(u, v)
            } else if u >= n1 {
                other.has_edge(u - n1, v - n1)
            } else {
                false
            }
        })
    }

    /// `G1 v G2`: the disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let n1 = self.order();
        Graph::from_fn(n1 + other.order(), |u, v| {
            if v < n1 {
                self.has_edge(u, v)
            } else if u >= n1 {
                other.has_edge(u - n1, v - n1)
            } else {
                true
            }
        })
    }

    /// `k` disjoint copies of `self`; `k = 0` gives the null graph.
    pub fn k_copies(&self, k: usize) -> Graph {
        (0..k).fold(Graph::empty(0), |acc, _| acc.disjoint_union(self))
    }

    /// Join of all graphs in order; the null graph when `parts` is empty.
    pub fn join_all<'a, I: IntoIterator<Item = &'a Graph>>(parts: I) -> Graph {
        parts
            .into_iter()
            .fold(Graph::empty(0), |acc, g| acc.join(g))
    }

    /// Adds a new vertex `n` twinned with `v`: it copies the neighbourhood of
    /// `v`, and is adjacent to `v` itself when `adjacent` (a true twin).
    pub fn add_twin(&self, v: usize, adjacent: bool) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let n = self.order();
        Ok(Graph::from_fn(n + 1, |a, b| {
            if b < n {
                self.has_edge(a, b)
            } else if a == v {
                adjacent
            } else {
                self.has_edge(a, v)
            }
        }))
    }

    /// Removes vertex `v`, relabelling the vertices above it down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.order()).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// `G[S]`, relabelled `0..|S|` in the order the vertices are given.
    /// Callers wanting order preservation pass `S` sorted ascending.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        let mut seen = VertexSet::with_capacity(self.order());
        for &v in vertices {
            if seen.contains(v) {
                return Err(GraphError::InvalidVertex {
                    vertex: v,
                    n: self.order(),
                });
            }
            seen.insert(v);
        }
        Ok(Graph::from_fn(vertices.len(), |a, b| {
            self.has_edge(vertices[a], vertices[b])
        }))
    }

    /// Same as [`Graph::induced_subgraph`] for a set, in ascending order.
    pub fn induced_on(&self, set: &VertexSet) -> Graph {
        let vs: Vec<usize> = set.iter().collect();
        Graph::from_fn(vs.len(), |a, b| self.has_edge(vs[a], vs[b]))
    }

    /// Applies the relabelling `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order(), "permutation length mismatch");
        let mut inv = vec![0; perm.len()];
        for (v, &p) in perm.iter().enumerate() {
            inv[p] = v;
        }
        Graph::from_fn(self.order(), |a, b| self.has_edge(inv[a], inv[b]))
    }

    /// Connected components, each sorted ascending, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        components_by(self.order(), |u, v| self.has_edge(u, v))
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// True when the complement is connected.
    pub fn is_co_connected(&self) -> bool {
        self.anticomponent_sets().len() <= 1
    }

    /// Vertex sets of the connected components of the complement.
    pub fn anticomponent_sets(&self) -> Vec<Vec<usize>> {
        components_by(self.order(), |u, v| u != v && !self.has_edge(u, v))
    }

    /// Anticomponents as graphs; `G` is the join of these.
    pub fn anticomponents(&self) -> Vec<Graph> {
        self.anticomponent_sets()
            .iter()
            .map(|s| {
                self.induced_subgraph(s)
                    .expect("anticomponent vertices are valid")
            })
            .collect()
    }

    /// Components as graphs, in the order of [`Graph::connected_components`].
    pub fn components(&self) -> Vec<Graph> {
        self.connected_components()
            .iter()
            .map(|s| {
                self.induced_subgraph(s)
                    .expect("component vertices are valid")
            })
            .collect()
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for w in self.adj[u].iter() {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

fn components_by(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for w in 0..n {
                if !seen[w] && adjacent(u, w) {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.order())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}
