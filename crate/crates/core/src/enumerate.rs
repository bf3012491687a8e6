//! Canonical forms and exhaustive generation of non-isomorphic graphs.
//!
//! The canonical form is the relabelling whose graph6 string (equivalently,
//! its upper-triangle bit string) is lexicographically smallest among the
//! leaves of an individualisation-refinement search. The search starts from
//! the degree partition and only orders vertices consistently with it.

use crate::graph::Graph;
use crate::graph6;
use std::collections::BTreeSet;
use thiserror::Error;

/// Largest order served by the built-in generator.
pub const MAX_ENUMERATION_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("built-in enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER} (got {0}); ingest graph6 files from an external generator for larger orders")]
    OutOfRange(usize),
}

type Partition = Vec<Vec<usize>>;

/// Splits cells by neighbour counts into other cells until stable.
fn refine(g: &Graph, mut cells: Partition) -> Partition {
    loop {
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            // signature: neighbour count into each current cell
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig = cells
                        .iter()
                        .map(|c| c.iter().filter(|&&w| g.has_edge(v, w)).count())
                        .collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn twins_in(g: &Graph, u: usize, v: usize) -> bool {
    (0..g.order()).all(|w| w == u || w == v || g.has_edge(u, w) == g.has_edge(v, w))
}

fn search(g: &Graph, cells: Partition, best: &mut Option<(String, Graph)>) {
    let cells = refine(g, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let mut perm = vec![0; g.order()];
        for (label, cell) in cells.iter().enumerate() {
            perm[cell[0]] = label;
        }
        let h = g.relabel(&perm);
        let key = graph6::encode(&h);
        if best.as_ref().is_none_or(|(k, _)| key < *k) {
            *best = Some((key, h));
        }
        return;
    };
    let cell = &cells[target];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        // swapping twins inside one cell is an automorphism of the node
        if tried.iter().any(|&u| twins_in(g, u, v)) {
            continue;
        }
        tried.push(v);
        let mut child = Vec::with_capacity(cells.len() + 1);
        child.extend_from_slice(&cells[..target]);
        child.push(vec![v]);
        child.push(cell.iter().copied().filter(|&u| u != v).collect());
        child.extend_from_slice(&cells[target + 1..]);
        search(g, child, best);
    }
}

/// Canonical relabelling of `g`: isomorphic graphs map to equal graphs.
pub fn canonical_form(g: &Graph) -> Graph {
    if g.order() <= 1 {
        return g.clone();
    }
    let mut by_degree: Vec<usize> = (0..g.order()).collect();
    by_degree.sort_by_key(|&v| (g.degree(v), v));
    let mut cells: Partition = Vec::new();
    for v in by_degree {
        match cells.last_mut() {
            Some(c) if g.degree(c[0]) == g.degree(v) => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = None;
    search(g, cells, &mut best);
    best.expect("search reaches at least one leaf").1
}

/// graph6 string of the canonical form.
pub fn canonical_key(g: &Graph) -> String {
    graph6::encode(&canonical_form(g))
}

/// Canonical graph6 keys of every class on `1..=n_max` vertices, one set per
/// order. Classes on `n` vertices come from attaching a new vertex to every
/// neighbourhood subset of each class on `n - 1` vertices.
fn levels(n_max: usize) -> Result<Vec<BTreeSet<String>>, EnumerateError> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n_max) {
        return Err(EnumerateError::OutOfRange(n_max));
    }
    let mut out = vec![BTreeSet::from([graph6::encode(&Graph::empty(1))])];
    for order in 2..=n_max {
        let mut next = BTreeSet::new();
        for key in &out[order - 2] {
            let g = graph6::decode(key).expect("own encoding");
            let base: Vec<(usize, usize)> = g.edges().collect();
            for mask in 0u64..(1 << (order - 1)) {
                let extra = (0..order - 1)
                    .filter(|&u| mask >> u & 1 == 1)
                    .map(|u| (u, order - 1));
                let h = Graph::from_edges(order, base.iter().copied().chain(extra))
                    .expect("edges in range");
                next.insert(canonical_key(&h));
            }
        }
        out.push(next);
    }
    Ok(out)
}

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices, in ascending graph6 order.
pub fn enumerate_nonisomorphic(n: usize) -> Result<impl Iterator<Item = Graph>, EnumerateError> {
    let last = levels(n)?.pop().expect("at least one level");
    Ok(last
        .into_iter()
        .map(|k| graph6::decode(&k).expect("own encoding")))
}

/// All classes with `1 <= order <= n_max`, by order then graph6.
pub fn enumerate_up_to(n_max: usize) -> Result<impl Iterator<Item = Graph>, EnumerateError> {
    Ok(levels(n_max)?
        .into_iter()
        .flatten()
        .map(|k| graph6::decode(&k).expect("own encoding")))
}
