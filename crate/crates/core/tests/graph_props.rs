mod common;

use cubicgap::graph::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn symmetric_and_loop_free(g: &Graph) -> bool {
    let a = g.adjacency_matrix::<i64>();
    a.is_symmetric() && (0..g.n()).all(|i| a[(i, i)] == 0)
}

/// Length of a shortest cycle by listing simple cycles from their least
/// vertex.
fn girth_by_cycles(g: &Graph) -> Girth {
    fn dfs(g: &Graph, start: usize, v: usize, len: usize, on: &mut Vec<bool>, best: &mut usize) {
        if len >= *best {
            return;
        }
        for w in g.neighbors(v) {
            if w == start && len >= 3 {
                *best = len;
            } else if w > start && !on[w] {
                on[w] = true;
                dfs(g, start, w, len + 1, on, best);
                on[w] = false;
            }
        }
    }
    let mut best = usize::MAX;
    for s in 0..g.n() {
        let mut on = vec![false; g.n()];
        on[s] = true;
        dfs(g, s, s, 1, &mut on, &mut best);
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

#[test]
fn named_constructions_are_simple() {
    let named = [
        complete(5).unwrap(),
        complete_bipartite(3, 4).unwrap(),
        path(6).unwrap(),
        cycle(7).unwrap(),
        petersen(),
        dodecahedron(),
        prism(),
        k33(),
        tutte_eight_cage(),
        cycle_corona(9).unwrap(),
        common::heawood(),
        common::mcgee(),
    ];
    for g in &named {
        assert!(symmetric_and_loop_free(g));
    }
}

#[test]
fn graph6_round_trip_all_graphs_on_five_vertices() {
    for n in 0..=5usize {
        let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
        }
    }
}

proptest! {
    #[test]
    fn graph6_round_trip_up_to_eight(n in 0usize..=8, seed in any::<u64>(), p in 0.0f64..1.0) {
        let g = common::random_graph(n, p, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn girth_matches_cycle_listing(n in 1usize..=10, seed in any::<u64>(), p in 0.1f64..0.6) {
        let g = common::random_graph(n, p, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert!(symmetric_and_loop_free(&g));
        prop_assert_eq!(g.girth(), girth_by_cycles(&g));
    }

    #[test]
    fn generalized_petersen_is_cubic(n in 3usize..60, k in 1usize..30) {
        prop_assume!(2 * k < n);
        let g = generalized_petersen(n, k).unwrap();
        prop_assert_eq!(g.n(), 2 * n);
        prop_assert!(g.is_cubic());
        prop_assert!(symmetric_and_loop_free(&g));
    }
}
