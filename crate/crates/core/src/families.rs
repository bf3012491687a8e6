//! Constructors for the named graph families.

use crate::bitset::VertexSet;
use crate::graph::{Graph, GraphError};
use serde::{Deserialize, Serialize};
use std::fmt;

fn at_least(family: &'static str, min: usize, got: usize) -> Result<(), GraphError> {
    if got < min {
        Err(GraphError::BelowFamilyMinimum { family, min, got })
    } else {
        Ok(())
    }
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    at_least("complete graph", 1, n)?;
    Ok(Graph::from_fn(n, |_, _| true))
}

/// `K_{1,n-1}` with centre 0; `star(1)` is `K1`.
pub fn star(n: usize) -> Result<Graph, GraphError> {
    at_least("star", 1, n)?;
    Ok(Graph::from_fn(n, |u, _| u == 0))
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    at_least("path", 1, n)?;
    Ok(Graph::from_fn(n, |u, v| v == u + 1))
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    at_least("cycle", 3, n)?;
    Ok(Graph::from_fn(n, |u, v| {
        v == u + 1 || (u == 0 && v == n - 1)
    }))
}

/// `K_{r,s}` with the `r` side on `0..r`.
pub fn complete_bipartite(r: usize, s: usize) -> Result<Graph, GraphError> {
    at_least("complete bipartite side", 1, r.min(s))?;
    Ok(Graph::empty(r).join(&Graph::empty(s)))
}

/// `K_{1,r} + sK1`.
pub fn star_plus_isolated(r: usize, s: usize) -> Result<Graph, GraphError> {
    Ok(star(r + 1)?.disjoint_union(&Graph::empty(s)))
}

/// `4K2 v K1 v ... v K1` with `s` copies of `K1`.
pub fn remark_family(s: usize) -> Graph {
    let k1 = Graph::empty(1);
    let mut g = complete(2).expect("K2").k_copies(4);
    for _ in 0..s {
        g = g.join(&k1);
    }
    g
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpiderKind {
    Thin,
    Thick,
}

impl fmt::Display for SpiderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpiderKind::Thin => f.write_str("thin"),
            SpiderKind::Thick => f.write_str("thick"),
        }
    }
}

/// Witness partition of a spider: legs `S`, body `C`, head `R`.
///
/// `legs[i]` is paired with `body[i]`: a thin spider joins exactly those
/// pairs, a thick spider joins every other leg/body combination.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpiderShape {
    pub kind: SpiderKind,
    pub legs: Vec<usize>,
    pub body: Vec<usize>,
    pub head: Vec<usize>,
}

impl SpiderShape {
    pub fn k(&self) -> usize {
        self.legs.len()
    }

    /// Checks every spider condition against `g`.
    pub fn is_witness_for(&self, g: &Graph) -> bool {
        let n = g.order();
        let k = self.legs.len();
        if k < 2 || self.body.len() != k || 2 * k + self.head.len() != n {
            return false;
        }
        let mut all = VertexSet::with_capacity(n);
        for &v in self.legs.iter().chain(&self.body).chain(&self.head) {
            if v >= n || all.contains(v) {
                return false;
            }
            all.insert(v);
        }
        for i in 0..k {
            for j in 0..k {
                if i != j {
                    if g.has_edge(self.legs[i], self.legs[j]) {
                        return false;
                    }
                    if !g.has_edge(self.body[i], self.body[j]) {
                        return false;
                    }
                }
                let want = match self.kind {
                    SpiderKind::Thin => i == j,
                    SpiderKind::Thick => i != j,
                };
                if g.has_edge(self.legs[i], self.body[j]) != want {
                    return false;
                }
            }
        }
        self.head.iter().all(|&r| {
            self.body.iter().all(|&c| g.has_edge(r, c))
                && self.legs.iter().all(|&s| !g.has_edge(r, s))
        })
    }
}

/// Spider with legs `0..k`, body `k..2k` and head `2k..` carrying `head`'s
/// own edges.
pub fn spider(
    kind: SpiderKind,
    k: usize,
    head: &Graph,
) -> Result<(Graph, SpiderShape), GraphError> {
    at_least("spider legs", 2, k)?;
    let h = head.order();
    let n = 2 * k + h;
    let g = Graph::from_fn(n, |u, v| {
        // u < v throughout
        match (
            u < k,
            (k..2 * k).contains(&u),
            v < k,
            (k..2 * k).contains(&v),
        ) {
            (true, _, true, _) => false,
            (true, _, _, true) => match kind {
                SpiderKind::Thin => v - k == u,
                SpiderKind::Thick => v - k != u,
            },
            (true, _, _, _) => false,
            (_, true, _, true) => true,
            (_, true, _, _) => true,
            _ => head.has_edge(u - 2 * k, v - 2 * k),
        }
    });
    let shape = SpiderShape {
        kind,
        legs: (0..k).collect(),
        body: (k..2 * k).collect(),
        head: (2 * k..n).collect(),
    };
    Ok((g, shape))
}
