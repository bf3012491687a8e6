//! Recognizers checked against definitions over every graph on up to seven
//! vertices.

use sigma_lab::classes::{self, conjecture_form, raw_shape, ConjectureForm};
use sigma_lab::enumerate::enumerate_up_to;
use sigma_lab::families::{spider, star_plus_isolated, SpiderKind};
use sigma_lab::{spectral, Graph};

fn corpus(n: usize) -> Vec<Graph> {
    enumerate_up_to(n).unwrap().collect()
}

/// Induced 2K2, C4 or C5 by brute force over vertex subsets.
fn has_split_obstruction(g: &Graph) -> bool {
    let n = g.order();
    (0u32..1 << n).any(|mask| {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let h = g.induced_subgraph(&vs).unwrap();
        let degs = h.degrees();
        match vs.len() {
            4 => {
                (h.size() == 2 && degs.iter().all(|&d| d == 1))
                    || (h.size() == 4 && degs.iter().all(|&d| d == 2))
            }
            5 => h.size() == 5 && degs.iter().all(|&d| d == 2) && h.is_connected(),
            _ => false,
        }
    })
}

#[test]
fn split_matches_forbidden_subgraphs() {
    for g in corpus(7) {
        assert_eq!(
            classes::is_split(&g).is_some(),
            !has_split_obstruction(&g),
            "{g:?}"
        );
    }
}

#[test]
fn class_containments_hold() {
    for g in corpus(7) {
        let split = classes::is_split(&g).is_some();
        let pseudo = classes::is_pseudo_split(&g);
        let laden = classes::is_extended_p4_laden(&g);
        let cograph = classes::is_cograph(&g);
        assert!(!split || pseudo, "{g:?}");
        assert!(!pseudo || laden, "{g:?}");
        assert!(!cograph || laden, "{g:?}");
    }
}

#[test]
fn cograph_algorithms_agree() {
    for g in corpus(7) {
        assert_eq!(
            classes::is_cograph(&g),
            !classes::has_induced_p4(&g),
            "{g:?}"
        );
    }
}

#[test]
fn forests_and_trees_by_definition() {
    for g in corpus(7) {
        let acyclic = g.size() + g.connected_components().len() == g.order();
        assert_eq!(classes::is_forest(&g), acyclic);
        assert_eq!(classes::is_tree(&g), acyclic && g.is_connected());
    }
}

#[test]
fn sigma_one_shapes_constructed_directly() {
    for r in 2..12 {
        for s in 0..12 {
            let g = star_plus_isolated(r, s).unwrap();
            let form = conjecture_form(&g);
            let sigma_one = spectral::sigma(&g).unwrap() == 1;
            assert_eq!(form.is_some(), sigma_one, "r={r} s={s}");
            assert_eq!(
                raw_shape(&g),
                Some(ConjectureForm::StarPlusIsolated { r, s })
            );
        }
    }
}

#[test]
fn twins_added_to_spiders_are_recognised() {
    for kind in [SpiderKind::Thin, SpiderKind::Thick] {
        for k in 2..5 {
            for head in [
                Graph::empty(0),
                Graph::empty(1),
                Graph::empty(2).complement(),
            ] {
                let (g, shape) = spider(kind, k, &head).unwrap();
                for &v in shape.legs.iter().chain(&shape.body) {
                    for adjacent in [false, true] {
                        let h = g.add_twin(v, adjacent).unwrap();
                        assert!(
                            classes::recognize_spider(&h).is_some()
                                || classes::recognize_spider_twin(&h).is_some(),
                            "{kind} k={k} twin of {v}"
                        );
                        let sigma = spectral::sigma(&h).unwrap();
                        assert!(sigma >= 2, "{kind} k={k} twin of {v}: sigma {sigma}");
                    }
                }
            }
        }
    }
}
