mod common;

use common::{brute_force_connectivity, graph_from_mask, random_graph};
use oneplanar::generators;
use oneplanar::graph::{families, Graph};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |mask| graph_from_mask(n, &mask))
    })
}

proptest! {
    #[test]
    fn degree_sum_is_twice_edges(g in arb_graph(12)) {
        let sum: usize = g.vertices().map(|v| g.degree(v)).sum();
        prop_assert_eq!(sum, 2 * g.e());
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(10)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        let n = g.n();
        prop_assert_eq!(g.e() + g.complement().e(), n * (n - 1) / 2);
    }

    #[test]
    fn connectivity_at_most_min_degree(g in arb_graph(10)) {
        if g.n() > 1 {
            prop_assert!(g.vertex_connectivity() <= g.min_degree());
        }
    }
}

#[test]
fn degree_sum_and_complement_on_corpus() {
    for f in generators::corpus() {
        let g = &f.graph;
        let sum: usize = g.vertices().map(|v| g.degree(v)).sum();
        assert_eq!(sum, 2 * g.e(), "{}", f.name);
        assert_eq!(&g.complement().complement(), g, "{}", f.name);
        assert!(g.vertex_connectivity() <= g.min_degree(), "{}", f.name);
    }
}

#[test]
fn line_graphs_are_claw_free() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let n = rand::Rng::gen_range(&mut rng, 1..=8);
        let g = random_graph(&mut rng, n, 0.5);
        let l = g.line_graph();
        assert_eq!(l.n(), g.e());
        assert!(l.find_induced_claw().is_none(), "{g:?}");
    }
}

#[test]
fn connectivity_matches_cut_enumeration() {
    for f in generators::corpus() {
        if f.graph.n() <= 9 {
            assert_eq!(f.graph.vertex_connectivity(), brute_force_connectivity(&f.graph), "{}", f.name);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let n = rand::Rng::gen_range(&mut rng, 1..=9);
        let p = rand::Rng::gen_range(&mut rng, 0.2..0.95);
        let g = random_graph(&mut rng, n, p);
        assert_eq!(g.vertex_connectivity(), brute_force_connectivity(&g), "{g:?}");
    }
}

#[test]
fn small_family_connectivities() {
    assert_eq!(families::complete(5).vertex_connectivity(), 4);
    assert_eq!(families::cycle(7).vertex_connectivity(), 2);
    let k2222 = families::complete_multipartite(&[2, 2, 2, 2]);
    assert_eq!(k2222.vertex_connectivity(), 6);
    assert_eq!(brute_force_connectivity(&k2222), 6);
    assert_eq!(families::path(4).vertex_connectivity(), 1);
}

#[test]
fn claw_free_neighborhoods_have_triangle_free_complements() {
    for f in generators::corpus() {
        let g = &f.graph;
        assert!(g.is_claw_free(), "{}", f.name);
        for v in g.vertices() {
            let nb = g.induced_by_indices(g.neighbors(v));
            assert!(nb.complement().find_triangle().is_none(), "{} at {}", f.name, g.name(v));
        }
    }
}

#[test]
fn claw_witness_holds() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let g = random_graph(&mut rng, 8, 0.3);
        match g.find_induced_claw() {
            Some(w) => assert!(w.holds_in(&g)),
            None => {
                for v in g.vertices() {
                    let nb = g.induced_by_indices(g.neighbors(v));
                    assert!(nb.complement().find_triangle().is_none());
                }
            }
        }
    }
}
