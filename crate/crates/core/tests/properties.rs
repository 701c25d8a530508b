use kronecker::graph::named::complete;
use kronecker::random::labeled_graphs;
use kronecker::*;
use proptest::prelude::*;

fn graph_strategy(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e);
            Graph::new(n, edges).unwrap()
        })
    })
}

/// Odd closed walk of length at most `n`, from boolean adjacency powers.
fn has_odd_closed_walk(graph: &Graph) -> bool {
    let n = graph.vertex_count();
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| graph.has_edge(u, v)).collect())
        .collect();
    let mut power = adj.clone();
    for len in 1..=n {
        if len % 2 == 1 && (0..n).any(|v| power[v][v]) {
            return true;
        }
        power = (0..n)
            .map(|u| {
                (0..n)
                    .map(|v| (0..n).any(|w| power[u][w] && adj[w][v]))
                    .collect()
            })
            .collect();
    }
    false
}

fn check_components_partition(g: &Graph) {
    let components = g.connected_components();
    let mut owner = vec![usize::MAX; g.vertex_count()];
    for (c, members) in components.iter().enumerate() {
        for &v in members {
            assert_eq!(owner[v], usize::MAX, "vertex in two classes");
            owner[v] = c;
        }
        let sub = g.induced_subgraph(members).unwrap();
        assert_eq!(sub.connected_components().len(), 1);
    }
    assert!(owner.iter().all(|&o| o != usize::MAX));
    assert!(g.edges().all(|(a, b)| owner[a] == owner[b]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn graph6_round_trip(g in graph_strategy(0, 10)) {
        prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn rebuild_from_edge_list_is_identity(g in graph_strategy(0, 10)) {
        let rebuilt = Graph::new(g.vertex_count(), g.edges()).unwrap();
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g.clone());
        prop_assert_eq!(rebuilt, g);
    }

    #[test]
    fn odd_cycle_certificate_is_valid(g in graph_strategy(1, 8)) {
        let status = g.odd_cycle_status();
        prop_assert!(status.is_valid_for(&g));
        let bipartite = matches!(status, OddCycleStatus::Bipartition { .. });
        prop_assert_eq!(bipartite, !has_odd_closed_walk(&g));
    }

    #[test]
    fn components_form_a_partition(g in graph_strategy(0, 10)) {
        check_components_partition(&g);
    }

    #[test]
    fn flow_kappa_matches_brute_force(g in graph_strategy(1, 10)) {
        prop_assert_eq!(kappa(&g).unwrap(), brute_force_kappa(&g, 12).unwrap());
    }

    #[test]
    fn witness_is_a_minimum_separator(g in graph_strategy(1, 10)) {
        let k = kappa(&g).unwrap();
        let w = min_vertex_cut(&g).unwrap();
        prop_assert_eq!(w.len(), k);
        prop_assert!(is_separator(&g, &w.vertices).unwrap());
        if g.vertex_count() >= 2 {
            prop_assert!(k <= g.min_degree().unwrap());
        }
    }

    #[test]
    fn product_is_the_tensor_of_adjacencies(
        g in graph_strategy(1, 8),
        h in graph_strategy(1, 8),
    ) {
        let p = direct_product(&g, &h).unwrap();
        let r = h.vertex_count();
        prop_assert_eq!(p.graph().vertex_count(), g.vertex_count() * r);
        for a in 0..p.graph().vertex_count() {
            for b in 0..p.graph().vertex_count() {
                let expected = g.has_edge(a / r, b / r) && h.has_edge(a % r, b % r);
                prop_assert_eq!(p.graph().has_edge(a, b), expected);
            }
        }
        prop_assert_eq!(p.graph().edge_count(), 2 * g.edge_count() * h.edge_count());
        prop_assert_eq!(
            p.graph().min_degree().unwrap(),
            g.min_degree().unwrap() * h.min_degree().unwrap()
        );
    }

    #[test]
    fn bipartite_double_cover(g in graph_strategy(1, 10)) {
        let cover = direct_product(&g, &complete(2)).unwrap();
        prop_assert!(cover.graph().is_bipartite());
    }

    #[test]
    fn formula_branch_is_consistent(kappa_g in 0usize..20, extra in 0usize..20, n in 3usize..12) {
        let delta = kappa_g + extra;
        let r = formula_kappa_product(kappa_g, delta, n).unwrap();
        let (copy, nbhd) = (n * kappa_g, (n - 1) * delta);
        prop_assert_eq!(r.value, copy.min(nbhd));
        match r.binding_branch {
            Branch::Copy => prop_assert!(copy < nbhd),
            Branch::Neighborhood => prop_assert!(nbhd < copy),
            Branch::Tie => prop_assert_eq!(copy, nbhd),
        }
    }
}

#[test]
fn odd_cycle_status_exhaustive_up_to_six() {
    for m in 1..=6 {
        for g in labeled_graphs(m) {
            let status = g.odd_cycle_status();
            assert!(status.is_valid_for(&g));
            assert_eq!(g.is_bipartite(), !has_odd_closed_walk(&g));
        }
    }
}

#[test]
fn deletion_lowers_degree_and_kappa_by_at_most_one() {
    for m in 2..=6 {
        for g in labeled_graphs(m) {
            let delta = g.min_degree().unwrap();
            let k = kappa(&g).unwrap();
            for u in g.vertices() {
                let (rest, map) = g.delete_vertex(u).unwrap();
                assert!(!map.contains(&u));
                assert!(rest.min_degree().unwrap() + 1 >= delta);
                assert!(kappa(&rest).unwrap() + 1 >= k);
            }
        }
    }
}

#[test]
fn no_smaller_separator_exists() {
    use itertools::Itertools;
    use kronecker::random::random_graph;
    for seed in 0..2000u64 {
        let m = 2 + (seed % 8) as usize;
        let g = random_graph(m, 0.5, seed).unwrap();
        let k = kappa(&g).unwrap();
        if k == 0 || k > 3 {
            continue;
        }
        for subset in (0..m).combinations(k - 1) {
            assert!(!is_separator(&g, &subset).unwrap(), "{}", write_graph6(&g));
        }
    }
}
