use graphsep_core::io::{nearest_point_edges, parse_graph, write_graph};
use graphsep_core::linalg::{
    char_poly, count_negative_roots, eigenvalues_float, is_psd_exact, rat, RatMatrix, Rational,
};
use graphsep_core::separability::ppt_holds;
use graphsep_core::transpose::degree_mismatches;
use graphsep_core::{
    adjacency_matrix, apply_vertex_permutation, classify_edge, complete_graph,
    decompose_by_edge_orbits, decompose_tensor_product, degree_condition, degree_matrix,
    density_matrix, edge_factor, laplacian, partial_transpose, partial_transpose_graph,
    partial_transpose_matrix, rho_plus, tensor_product, verify_decomposition, Edge, EdgeClass,
    Graph, Subsystem, TripartiteDims, Verdict,
};
use proptest::prelude::*;
use std::collections::BTreeMap;

fn dims_strategy() -> impl Strategy<Value = TripartiteDims> {
    (1usize..=3, 1usize..=3, 1usize..=3)
        .prop_filter("at least two vertices", |(m, p, q)| m * p * q >= 2)
        .prop_map(|(m, p, q)| TripartiteDims::new(m, p, q).unwrap())
}

fn graph_strategy() -> impl Strategy<Value = Graph> {
    dims_strategy().prop_flat_map(|dims| {
        let all: Vec<Edge> = complete_graph(dims).edges().copied().collect();
        proptest::sample::subsequence(all.clone(), 0..=all.len())
            .prop_map(move |edges| Graph::new(dims, edges.iter().map(|e| e.endpoints())).unwrap())
    })
}

fn graph_on_at_most_12_strategy() -> impl Strategy<Value = Graph> {
    nonempty_graph_strategy().prop_filter("at most 12 vertices", |g| g.n() <= 12)
}

fn nonempty_graph_strategy() -> impl Strategy<Value = Graph> {
    graph_strategy().prop_filter("needs an edge", |g| g.edge_count() > 0)
}

fn nearest_graph_strategy() -> impl Strategy<Value = Graph> {
    prop_oneof![Just((2, 2, 2)), Just((3, 2, 2))].prop_flat_map(|(m, p, q)| {
        let dims = TripartiteDims::new(m, p, q).unwrap();
        let all = nearest_point_edges(dims);
        proptest::sample::subsequence(all.clone(), 1..=all.len())
            .prop_map(move |edges| Graph::new(dims, edges.iter().map(|e| e.endpoints())).unwrap())
    })
}

fn factor_strategy() -> impl Strategy<Value = Graph> {
    (2usize..=3).prop_flat_map(|n| {
        let dims = TripartiteDims::flat(n).unwrap();
        let all: Vec<Edge> = complete_graph(dims).edges().copied().collect();
        proptest::sample::subsequence(all.clone(), 1..=all.len())
            .prop_map(move |edges| Graph::new(dims, edges.iter().map(|e| e.endpoints())).unwrap())
    })
}

fn permuted_graph_strategy() -> impl Strategy<Value = (Graph, Vec<usize>)> {
    nonempty_graph_strategy().prop_flat_map(|g| {
        let identity: Vec<usize> = (1..=g.n()).collect();
        (Just(g), Just(identity).prop_shuffle())
    })
}

/// Entries in [−2, 2] keep the spectrum small enough for an absolute
/// residual bound on the characteristic polynomial.
fn small_symmetric_strategy() -> impl Strategy<Value = RatMatrix> {
    (1usize..=8).prop_flat_map(|n| {
        proptest::collection::vec((-4i64..=4, 1i64..=2), n * n).prop_map(move |cells| {
            RatMatrix::from_fn(n, |r, c| {
                let (num, den) = cells[r.min(c) * n + r.max(c)];
                rat(num, 2 * den)
            })
        })
    })
}

fn symmetric_strategy() -> impl Strategy<Value = RatMatrix> {
    let general = (1usize..=6).prop_flat_map(|n| {
        proptest::collection::vec((-6i64..=6, 1i64..=4), n * n).prop_map(move |cells| {
            RatMatrix::from_fn(n, |r, c| {
                let (num, den) = cells[r.min(c) * n + r.max(c)];
                rat(num, den)
            })
        })
    });
    // Gram matrices B·Bᵀ are PSD and rank-deficient when B is thin.
    let gram = (1usize..=6, 1usize..=4).prop_flat_map(|(n, k)| {
        proptest::collection::vec(-3i64..=3, n * k).prop_map(move |cells| {
            RatMatrix::from_fn(n, |r, c| {
                (0..k)
                    .map(|j| Rational::from_integer((cells[r * k + j] * cells[c * k + j]).into()))
                    .sum()
            })
        })
    });
    prop_oneof![general, gram]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]


    #[test]
    fn partial_transpose_is_an_involution(g in nonempty_graph_strategy()) {
        let rho = density_matrix(&g).unwrap();
        for s in Subsystem::ALL {
            let twice = partial_transpose_matrix(&partial_transpose(&rho, s), g.dims(), s).unwrap();
            prop_assert_eq!(&twice, rho.matrix());
            prop_assert_eq!(partial_transpose_graph(&partial_transpose_graph(&g, s), s), g.clone());
        }
    }

    #[test]
    fn density_has_unit_trace_and_is_psd(g in nonempty_graph_strategy()) {
        let rho = density_matrix(&g).unwrap();
        prop_assert_eq!(rho.matrix().trace(), rat(1, 1));
        prop_assert!(is_psd_exact(rho.matrix()).unwrap());
    }

    #[test]
    fn laplacian_invariants(g in graph_strategy()) {
        let l = laplacian(&g);
        prop_assert_eq!(&l, &(&degree_matrix(&g) - &adjacency_matrix(&g)));
        for row in l.rows() {
            prop_assert_eq!(row.iter().cloned().sum::<Rational>(), rat(0, 1));
        }
        prop_assert!(is_psd_exact(&l).unwrap());
        prop_assert_eq!(degree_matrix(&g).trace(), rat(2 * g.edge_count() as i64, 1));
    }

    #[test]
    fn edge_class_ignores_endpoint_order(g in nonempty_graph_strategy()) {
        for e in g.edges() {
            let (a, b) = e.endpoints();
            let flipped = classify_edge(&Edge::new(b, a).unwrap(), g.dims()).unwrap();
            prop_assert_eq!(flipped, classify_edge(e, g.dims()).unwrap());
        }
    }

    #[test]
    fn signless_companion_and_transpose_invariants(g in nonempty_graph_strategy()) {
        let rho = density_matrix(&g).unwrap();
        let plus = rho_plus(&g).unwrap();
        let two_over_d = rat(2, g.degree_sum() as i64);
        prop_assert_eq!(&(rho.matrix() + plus.matrix()), &degree_matrix(&g).scale(&two_over_d));
        for s in Subsystem::ALL {
            let pt = partial_transpose(&rho, s);
            prop_assert_eq!(pt.trace(), rat(1, 1));
            for v in 0..g.n() {
                prop_assert_eq!(&pt[(v, v)], &rho.matrix()[(v, v)]);
            }
            let gt = partial_transpose_graph(&g, s);
            prop_assert_eq!(gt.edge_count(), g.edge_count());
            prop_assert_eq!(gt.degree_sum(), g.degree_sum());
        }
    }

    /// Single-coordinate edges are fixed by every transpose, so deleting
    /// them leaves the per-vertex degree imbalance unchanged.
    #[test]
    fn mismatches_come_only_from_multi_coordinate_edges(g in graph_strategy()) {
        let dims = g.dims();
        let reduced = g.filter_edges(|e| !matches!(classify_edge(e, dims).unwrap(), EdgeClass::OneCoord(_)));
        let imbalance = |h: &Graph, s| -> BTreeMap<usize, i64> {
            degree_mismatches(h, s)
                .iter()
                .map(|m| (m.vertex, m.degree as i64 - m.transposed_degree as i64))
                .collect()
        };
        for s in Subsystem::ALL {
            prop_assert_eq!(imbalance(&g, s), imbalance(&reduced, s));
        }
    }

    #[test]
    fn tensor_decomposition_reproduces_density(
        g1 in factor_strategy(),
        g2 in factor_strategy(),
        g3 in factor_strategy(),
    ) {
        let d = decompose_tensor_product(&g1, &g2, &g3).unwrap();
        prop_assert_eq!(d.len(), 4 * g1.edge_count() * g2.edge_count() * g3.edge_count());
        prop_assert_eq!(d.weight_sum(), rat(1, 1));
        let rho = density_matrix(&tensor_product(&g1, &g2, &g3)).unwrap();
        prop_assert!(verify_decomposition(&rho, &d).unwrap());
    }

    #[test]
    fn no_graph_is_both_decomposed_and_npt(g in nearest_graph_strategy()) {
        let rho = density_matrix(&g).unwrap();
        if let Ok(d) = decompose_by_edge_orbits(&g) {
            prop_assert!(verify_decomposition(&rho, &d).unwrap());
            prop_assert!(ppt_holds(&rho));
        }
        prop_assert_eq!(degree_condition(&g).holds, ppt_holds(&rho));
    }

    #[test]
    fn relabelling_preserves_structure((g, perm) in permuted_graph_strategy()) {
        let h = apply_vertex_permutation(&g, &perm).unwrap();
        prop_assert_eq!(h.edge_count(), g.edge_count());
        let mut before = g.degrees();
        let mut after = h.degrees();
        before.sort_unstable();
        after.sort_unstable();
        prop_assert_eq!(before, after);
        if let Verdict::Separable(d) = graphsep_core::classify(&h).unwrap() {
            prop_assert!(verify_decomposition(&density_matrix(&h).unwrap(), &d).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn text_format_round_trips(g in graph_strategy()) {
        let text = write_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_graph(&back), text);
    }

    #[test]
    fn density_is_uniform_mixture_of_edge_factors(g in graph_on_at_most_12_strategy()) {
        let sum = g
            .edges()
            .map(|e| edge_factor(e, g.dims()).unwrap().into_matrix())
            .fold(RatMatrix::zeros(g.n()), |acc, m| &acc + &m)
            .scale(&rat(1, g.edge_count() as i64));
        prop_assert_eq!(sum, density_matrix(&g).unwrap().into_matrix());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph_transpose_matches_matrix_transpose(g in graph_strategy()) {
        for s in Subsystem::ALL {
            prop_assert_eq!(
                adjacency_matrix(&partial_transpose_graph(&g, s)),
                partial_transpose_matrix(&adjacency_matrix(&g), g.dims(), s).unwrap()
            );
        }
    }

    #[test]
    fn exact_verdicts_agree_with_float_eigenvalues(m in symmetric_strategy()) {
        let eigs = eigenvalues_float(&m, 1e-9);
        let float_negative = eigs.iter().filter(|&&v| v < 0.0).count();
        prop_assert_eq!(count_negative_roots(&char_poly(&m)).unwrap(), float_negative);
        prop_assert_eq!(is_psd_exact(&m).unwrap(), float_negative == 0);
    }

    #[test]
    fn float_eigenvalues_are_char_poly_roots(m in small_symmetric_strategy()) {
        let p = char_poly(&m);
        for v in eigenvalues_float(&m, 0.0) {
            prop_assert!(p.eval_f64(v).abs() < 1e-6, "p({v}) = {}", p.eval_f64(v));
        }
    }
}
