//! Acceptance suite. Runs every exit criterion, prints one PASS/FAIL line
//! each, and exits non-zero if any criterion fails.
//!
//! Run with `cargo test -p kronecker-core --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use kronecker::graph::named::complete;
use kronecker::product::{check_degree_product, check_weichsel};
use kronecker::random::{
    derive_seed, labeled_graphs, random_connected_bipartite_graph, random_connected_graph,
    random_graph, rng_from_seed,
};
use kronecker::sweep::{to_json_lines, SweepConfig};
use kronecker::theorem::{
    check_lemma_layer_in_component, check_lemma_quotient_connected, sample_separator_candidate,
};
use kronecker::*;

const BRUTE_CAP: usize = 12;

struct Outcome {
    checked: usize,
    failures: Vec<String>,
}

impl Outcome {
    fn from_results(results: Vec<Option<String>>) -> Self {
        Outcome {
            checked: results.len(),
            failures: results.into_iter().flatten().collect(),
        }
    }
}

fn all_graphs_up_to(max: usize) -> Vec<Graph> {
    (1..=max).flat_map(labeled_graphs).collect()
}

fn connected_graphs(min: usize, max: usize) -> Vec<Graph> {
    (min..=max)
        .flat_map(labeled_graphs)
        .filter(Graph::is_connected)
        .collect()
}

fn direct_kappa(g: &Graph, n: usize) -> usize {
    kappa(product_with_complete(g, n).unwrap().graph()).unwrap()
}

/// 1. κ(K_m × K_n) = (m − 1)(n − 1) for 2 ≤ m ≤ n ≤ 6, n ≥ 3.
fn complete_products() -> Outcome {
    let mut results = Vec::new();
    for n in 3..=6 {
        for m in 2..=n {
            let direct = direct_kappa(&complete(m), n);
            let expected = (m - 1) * (n - 1);
            results
                .push((direct != expected).then(|| format!("m={m} n={n}: {direct} != {expected}")));
        }
    }
    Outcome::from_results(results)
}

/// 2. Closed form equals direct κ for every labeled graph on ≤ 6 vertices.
fn theorem_exhaustive() -> Outcome {
    let graphs = all_graphs_up_to(6);
    let results = graphs
        .par_iter()
        .flat_map_iter(|g| {
            [3, 4].into_iter().map(move |n| {
                let fast = kappa_product_fast(g, n).unwrap();
                let direct = direct_kappa(g, n);
                (fast != direct)
                    .then(|| format!("{} n={n}: formula {fast} direct {direct}", write_graph6(g)))
            })
        })
        .collect();
    Outcome::from_results(results)
}

/// 3. Closed form on ≥ 1000 random connected bipartite graphs, ≤ 7 vertices.
fn bipartite_suite() -> Outcome {
    let results = (0..1000u64)
        .into_par_iter()
        .flat_map_iter(|i| {
            let seed = derive_seed(0xB1, i);
            let total = 2 + (seed % 6) as usize;
            let a = 1 + (seed >> 8) as usize % (total - 1);
            let p = 0.3 + 0.1 * ((seed >> 16) % 7) as f64;
            let g = random_connected_bipartite_graph(a, total - a, p, seed).unwrap();
            assert!(g.is_bipartite() && g.is_connected());
            [3, 4].into_iter().map(move |n| {
                let fast = kappa_product_fast(&g, n).unwrap();
                let direct = direct_kappa(&g, n);
                (fast != direct)
                    .then(|| format!("{} n={n}: formula {fast} direct {direct}", write_graph6(&g)))
            })
        })
        .collect();
    Outcome::from_results(results)
}

/// 4. Witness cuts have the closed-form size and separate.
fn witness_soundness() -> Outcome {
    let graphs = connected_graphs(2, 6);
    let results = graphs
        .par_iter()
        .flat_map_iter(|g| {
            [3, 4, 5].into_iter().map(move |n| {
                let w = witness_cut(g, n).unwrap();
                let product = product_with_complete(g, n).unwrap();
                let separates = is_separator(product.graph(), &w.cut.vertices).unwrap();
                let expected = kappa_product_fast(g, n).unwrap();
                (!separates || w.cut.len() != expected).then(|| {
                    format!(
                        "{} n={n}: size {} expected {expected} separates {separates}",
                        write_graph6(g),
                        w.cut.len()
                    )
                })
            })
        })
        .collect();
    Outcome::from_results(results)
}

/// 5. Product lemmas on factor pairs, deletion bounds, quotient lemmas.
fn lemma_suite() -> Outcome {
    let factors = connected_graphs(2, 5);
    let mut results: Vec<Option<String>> = factors
        .par_iter()
        .flat_map_iter(|g| {
            factors.iter().map(move |h| {
                let weichsel = check_weichsel(g, h).unwrap();
                let degree = check_degree_product(g, h).unwrap();
                (!weichsel.passed() || !degree.passed())
                    .then(|| format!("factors {} {}", write_graph6(g), write_graph6(h)))
            })
        })
        .collect();

    let deletion: Vec<Option<String>> = (2..=6)
        .flat_map(labeled_graphs)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|g| {
            let delta = g.min_degree().unwrap();
            let k = kappa(g).unwrap();
            let bad = g.vertices().any(|u| {
                let (rest, _) = g.delete_vertex(u).unwrap();
                rest.min_degree().unwrap() + 1 < delta || kappa(&rest).unwrap() + 1 < k
            });
            bad.then(|| format!("deletion {}", write_graph6(g)))
        })
        .collect();
    results.extend(deletion);

    let quotient: Vec<Option<String>> = (0..10_000u64)
        .into_par_iter()
        .flat_map_iter(|i| {
            let seed = derive_seed(0x2_3_4, i);
            let m = 2 + (seed % 6) as usize;
            let n = 3 + ((seed >> 8) % 3) as usize;
            let g = random_connected_graph(m, 0.5, seed).unwrap();
            let s = sample_separator_candidate(&g, n, &mut rng_from_seed(seed ^ 0x5eed)).unwrap();
            let connected = check_lemma_quotient_connected(&g, n, &s).unwrap();
            let layered = check_lemma_layer_in_component(&g, n, &s).unwrap();
            [
                (!connected.passed()).then(|| connected.to_json_line()),
                (!layered.passed()).then(|| layered.to_json_line()),
            ]
        })
        .collect();
    results.extend(quotient);
    Outcome::from_results(results)
}

/// 6. Flow κ equals the brute-force oracle.
fn oracle_equivalence() -> Outcome {
    let mut results: Vec<Option<String>> = all_graphs_up_to(6)
        .par_iter()
        .map(|g| {
            let (flow, brute) = (kappa(g).unwrap(), brute_force_kappa(g, BRUTE_CAP).unwrap());
            (flow != brute).then(|| format!("{}: flow {flow} brute {brute}", write_graph6(g)))
        })
        .collect();
    let random: Vec<Option<String>> = (0..10_000u64)
        .into_par_iter()
        .map(|i| {
            let seed = derive_seed(0x0AC1E, i);
            let m = 7 + (seed % 6) as usize;
            let p = 0.15 + 0.1 * ((seed >> 8) % 8) as f64;
            let g = random_graph(m, p, seed).unwrap();
            let (flow, brute) = (
                kappa(&g).unwrap(),
                brute_force_kappa(&g, BRUTE_CAP).unwrap(),
            );
            (flow != brute).then(|| format!("{}: flow {flow} brute {brute}", write_graph6(&g)))
        })
        .collect();
    results.extend(random);
    Outcome::from_results(results)
}

/// 7. Identical sweep configurations give byte-identical JSON lines.
fn determinism() -> Outcome {
    let configs = [
        SweepConfig::exhaustive(5, vec![3, 4]),
        SweepConfig {
            lemma_samples: 3,
            oracle: Oracle::Both,
            ..SweepConfig::random(8, vec![3, 5], 300, 42)
        },
    ];
    let results = configs
        .iter()
        .map(|config| {
            let first = to_json_lines(&run_sweep(config).unwrap());
            let second = to_json_lines(&run_sweep(config).unwrap());
            (first != second || first.is_empty()).then(|| format!("{config:?} output differs"))
        })
        .collect();
    Outcome::from_results(results)
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);
    let criteria: [Criterion; 7] = [
        (
            "C1 complete products (m-1)(n-1)",
            complete_products,
            Some(Duration::from_secs(10)),
        ),
        (
            "C2 closed form, all graphs <= 6 vertices",
            theorem_exhaustive,
            None,
        ),
        (
            "C3 closed form, random bipartite",
            bipartite_suite,
            Some(Duration::from_secs(120)),
        ),
        ("C4 witness cut soundness", witness_soundness, None),
        ("C5 lemma suite", lemma_suite, None),
        ("C6 flow vs brute-force oracle", oracle_equivalence, None),
        ("C7 sweep determinism", determinism, None),
    ];
    let mut all_pass = true;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over_budget = budget.is_some_and(|b| elapsed > b);
        let pass = outcome.failures.is_empty() && !over_budget;
        all_pass &= pass;
        println!(
            "[{}] {name}: {} instances, {} counterexamples, {:.2}s{}",
            if pass { "PASS" } else { "FAIL" },
            outcome.checked,
            outcome.failures.len(),
            elapsed.as_secs_f64(),
            if over_budget {
                " (over time budget)"
            } else {
                ""
            },
        );
        for failure in outcome.failures.iter().take(5) {
            println!("    {failure}");
        }
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
