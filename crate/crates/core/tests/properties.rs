//! Property tests: invariants over randomized graphs plus corpus-wide
//! oracle agreements.

mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use distpareto::graph::{
    clique_number_with_budget, distance_matrix, is_bipartite, Graph,
};
use distpareto::graph6::{emit_graph6, parse_graph6};
use distpareto::matrix::{principal_submatrix, SymMatrix, VertexSubset};
use distpareto::pareto::pareto_spectrum;
use distpareto::patterns::{find_induced, PatternId};
use distpareto::spectral::{dominates, rayleigh, spectral_radius};

/// Random connected graph: a random spanning tree plus random extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        (
            Just(n),
            proptest::collection::vec(any::<usize>(), n),
            proptest::collection::vec(any::<u64>(), n),
        )
            .prop_map(|(n, parents, rows)| {
                let mut edges = Vec::new();
                for i in 1..n {
                    edges.push((parents[i] % i, i));
                }
                for i in 0..n {
                    for j in (i + 1)..n {
                        if rows[i] >> j & 1 == 1 {
                            edges.push((i, j));
                        }
                    }
                }
                Graph::from_edges(n, &edges).expect("spanning tree keeps it connected")
            })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in connected_graph(16)) {
        let token = emit_graph6(&g).unwrap();
        let back = parse_graph6(&token).unwrap();
        prop_assert_eq!(back.n(), g.n());
        for v in 0..g.n() {
            prop_assert_eq!(back.neighbors(v), g.neighbors(v));
        }
    }

    #[test]
    fn spectrum_invariant_under_relabeling(
        g in connected_graph(7),
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..g.n()).collect();
        for i in (1..perm.len()).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let h = g.relabel(&perm).unwrap();
        let a = pareto_spectrum(&distance_matrix(&g)).unwrap();
        let b = pareto_spectrum(&distance_matrix(&h)).unwrap();
        prop_assert_eq!(a.len(), b.len());
        for (x, y) in a.values().iter().zip(b.values()) {
            prop_assert!((x - y).abs() < 1e-9);
        }
    }

    #[test]
    fn rayleigh_never_exceeds_radius(
        g in connected_graph(9),
        raw in proptest::collection::vec(-1.0f64..1.0, 9),
    ) {
        let m = SymMatrix::from_distance(&distance_matrix(&g));
        let x: Vec<f64> = raw.iter().take(g.n()).copied().collect();
        let norm: f64 = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        prop_assume!(norm > 1e-6);
        let rho = spectral_radius(&m).unwrap().radius;
        let q = rayleigh(&m, &x).unwrap();
        prop_assert!(q <= rho + 1e-10);
    }

    #[test]
    fn radius_between_min_and_max_row_sum(g in connected_graph(10)) {
        let m = SymMatrix::from_distance(&distance_matrix(&g));
        let rho = spectral_radius(&m).unwrap().radius;
        let sums = m.row_sums();
        let lo = *sums.iter().min().unwrap() as f64;
        let hi = *sums.iter().max().unwrap() as f64;
        prop_assert!(lo - 1e-9 <= rho && rho <= hi + 1e-9);
    }

    #[test]
    fn clique_number_matches_naive(g in connected_graph(10)) {
        let budget = g.n().max(distpareto::graph::CLIQUE_BUDGET);
        let fast = clique_number_with_budget(&g, budget).unwrap();
        let mut naive = 1;
        for mask in 1u64..(1 << g.n()) {
            let verts = VertexSubset(mask).indices();
            let is_clique = verts
                .iter()
                .enumerate()
                .all(|(a, &u)| verts[a + 1..].iter().all(|&v| g.has_edge(u, v)));
            if is_clique {
                naive = naive.max(verts.len());
            }
        }
        prop_assert_eq!(fast, naive);
    }
}

#[test]
fn dominance_implies_strictly_larger_radius() {
    // 200 dominating pairs of distance submatrices from random small
    // connected graphs (fixed seed, deterministic).
    let mut rng = ChaCha8Rng::seed_from_u64(0x9d2c_5681);
    let mut confirmed = 0;
    let mut attempts = 0;
    while confirmed < 200 {
        attempts += 1;
        assert!(attempts < 100_000, "dominating pairs too rare");
        let n = rng.gen_range(3..=7);
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.gen_bool(0.35) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        let d = SymMatrix::from_distance(&distance_matrix(&g));
        let full = (1u64 << n) - 1;
        let a_mask = rng.gen_range(1..=full);
        let b_mask = rng.gen_range(1..=full);
        let a = principal_submatrix(&d, VertexSubset(a_mask)).unwrap();
        let b = principal_submatrix(&d, VertexSubset(b_mask)).unwrap();
        if dominates(&a, &b) {
            confirmed += 1;
            let ra = spectral_radius(&a).unwrap().radius;
            let rb = spectral_radius(&b).unwrap().radius;
            assert!(
                ra > rb + 1e-10,
                "domination without strict radius gap: {ra} vs {rb}"
            );
        }
    }
}

#[test]
fn induced_detection_matches_naive_oracle_on_corpus() {
    // Exhaustive check, no pruning, over every connected graph with at
    // most 7 vertices and every fixed pattern.
    fn naive(g: &Graph, p: PatternId) -> bool {
        let k = p.order();
        if k > g.n() {
            return false;
        }
        let pat = p.graph();
        subsets(g.n(), k).into_iter().any(|s| {
            permutations(&s)
                .into_iter()
                .any(|q| {
                    (0..k).all(|a| {
                        ((a + 1)..k).all(|b| g.has_edge(q[a], q[b]) == pat.has_edge(a, b))
                    })
                })
        })
    }
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for v in start..n {
                cur.push(v);
                rec(v + 1, n, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(0, n, k, &mut Vec::new(), &mut out);
        out
    }
    fn permutations(v: &[usize]) -> Vec<Vec<usize>> {
        if v.len() <= 1 {
            return vec![v.to_vec()];
        }
        let mut out = Vec::new();
        for i in 0..v.len() {
            let mut rest = v.to_vec();
            let x = rest.remove(i);
            for mut p in permutations(&rest) {
                p.insert(0, x);
                out.push(p);
            }
        }
        out
    }

    for n in 4..=7 {
        for record in common::load_connected(n) {
            for p in PatternId::ALL {
                assert_eq!(
                    find_induced(&record.graph, p).is_some(),
                    naive(&record.graph, p),
                    "order {n} line {} pattern {}",
                    record.ordinal,
                    p.name()
                );
            }
        }
    }
}

#[test]
fn bipartite_filter_matches_two_coloring_oracle_on_corpus() {
    for n in 1..=7 {
        for record in common::load_connected(n) {
            let g = &record.graph;
            let oracle = (0u64..(1 << n)).any(|coloring| {
                g.edges()
                    .iter()
                    .all(|&(u, v)| (coloring >> u & 1) != (coloring >> v & 1))
            });
            assert_eq!(is_bipartite(g), oracle, "order {n} line {}", record.ordinal);
        }
    }
}

#[test]
fn transmission_floor_on_corpus() {
    for n in 2..=7 {
        for record in common::load_connected(n) {
            let g = &record.graph;
            for v in 0..g.n() {
                let tr = g.transmission(v);
                assert!(tr >= (n - 1) as i64);
                assert_eq!(tr == (n - 1) as i64, g.degree(v) == n - 1);
            }
        }
    }
}
