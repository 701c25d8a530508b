//! Verification sweeps over exhaustive or random graph families.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::connectivity::{kappa, DEFAULT_BRUTE_FORCE_CAP};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::parse_graph6;
use crate::product::{check_degree_product, check_weichsel, complete_graph};
use crate::random::{derive_seed, labeled_graph, labeled_graph_count, random_graph, rng_from_seed};
use crate::report::{checks, timed, Verdict, VerificationReport};
use crate::theorem::{
    check_lemma_deletion, check_lemma_layer_in_component, check_lemma_quotient_connected,
    check_special_cases, check_theorem_equality, check_witness, sample_separator_candidate, Oracle,
};

pub const MAX_EXHAUSTIVE_VERTICES: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepMode {
    Exhaustive,
    Random,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub max_vertices: usize,
    #[serde(default = "default_min_vertices")]
    pub min_vertices: usize,
    pub n_values: Vec<usize>,
    pub mode: SweepMode,
    #[serde(default = "default_sample_count")]
    pub sample_count: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub oracle: Oracle,
    #[serde(default = "default_brute_cap")]
    pub brute_cap: usize,
    /// Sampled separators per (graph, n) for the quotient lemmas.
    #[serde(default = "default_lemma_samples")]
    pub lemma_samples: usize,
    /// Store wall-clock times in `elapsed_ms`. Off by default so that
    /// identical configurations give byte-identical output.
    #[serde(default)]
    pub record_timing: bool,
}

fn default_min_vertices() -> usize {
    1
}
fn default_sample_count() -> usize {
    1
}
fn default_brute_cap() -> usize {
    DEFAULT_BRUTE_FORCE_CAP
}
fn default_lemma_samples() -> usize {
    1
}

impl SweepConfig {
    pub fn exhaustive(max_vertices: usize, n_values: Vec<usize>) -> Self {
        SweepConfig {
            max_vertices,
            min_vertices: 1,
            n_values,
            mode: SweepMode::Exhaustive,
            sample_count: 1,
            seed: 0,
            oracle: Oracle::Flow,
            brute_cap: DEFAULT_BRUTE_FORCE_CAP,
            lemma_samples: 1,
            record_timing: false,
        }
    }

    pub fn random(
        max_vertices: usize,
        n_values: Vec<usize>,
        sample_count: usize,
        seed: u64,
    ) -> Self {
        SweepConfig {
            mode: SweepMode::Random,
            sample_count,
            seed,
            ..Self::exhaustive(max_vertices, n_values)
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |m: String| Err(Error::Config(m));
        if self.n_values.is_empty() {
            return fail("n_values must not be empty".into());
        }
        if let Some(&n) = self.n_values.iter().find(|&&n| n < 3) {
            return fail(format!("n_values must all be >= 3, found {n}"));
        }
        if self.min_vertices == 0 || self.min_vertices > self.max_vertices {
            return fail(format!(
                "need 1 <= min_vertices <= max_vertices, got {}..={}",
                self.min_vertices, self.max_vertices
            ));
        }
        if self.mode == SweepMode::Exhaustive && self.max_vertices > MAX_EXHAUSTIVE_VERTICES {
            return fail(format!(
                "exhaustive mode supports at most {MAX_EXHAUSTIVE_VERTICES} vertices, got {}",
                self.max_vertices
            ));
        }
        if self.sample_count == 0 {
            return fail("sample_count must be >= 1".into());
        }
        let largest_product = self.max_vertices * self.n_values.iter().max().unwrap();
        if self.oracle == Oracle::Brute && largest_product > self.brute_cap {
            return fail(format!(
                "brute oracle needs products within the cap: {largest_product} > {}",
                self.brute_cap
            ));
        }
        Ok(())
    }

    fn instance_count(&self) -> u64 {
        match self.mode {
            SweepMode::Exhaustive => (self.min_vertices..=self.max_vertices)
                .map(labeled_graph_count)
                .sum(),
            SweepMode::Random => self.sample_count as u64,
        }
    }

    /// The graph for instance `index` and its derived seed.
    fn instance(&self, index: u64) -> (Graph, u64) {
        let seed = derive_seed(self.seed, index);
        match self.mode {
            SweepMode::Exhaustive => {
                let mut rest = index;
                for m in self.min_vertices..=self.max_vertices {
                    let count = labeled_graph_count(m);
                    if rest < count {
                        return (labeled_graph(m, rest), seed);
                    }
                    rest -= count;
                }
                unreachable!("instance index within instance_count")
            }
            SweepMode::Random => {
                let mut rng = rng_from_seed(seed);
                let m = rng.random_range(self.min_vertices..=self.max_vertices);
                let p = rng.random_range(0.1..=0.9);
                let graph = random_graph(m, p, rng.random()).expect("p within [0, 1]");
                (graph, seed)
            }
        }
    }
}

/// Runs every applicable check on one graph.
pub fn check_graph(
    graph: &Graph,
    seed: u64,
    config: &SweepConfig,
) -> Result<Vec<VerificationReport>> {
    let timing = config.record_timing;
    let m = graph.vertex_count();
    let kappa_g = kappa(graph)?;
    let mut reports = Vec::new();
    if m >= 2 {
        reports.push(timed(timing, || check_lemma_deletion(graph))?);
    }
    for &n in &config.n_values {
        let kn = complete_graph(n)?;
        reports.push(timed(timing, || {
            check_theorem_equality(graph, n, config.oracle, config.brute_cap)
        })?);
        reports.push(timed(timing, || check_degree_product(graph, &kn))?);
        if m >= 2 {
            reports.push(timed(timing, || check_weichsel(graph, &kn))?);
        }
        if kappa_g > 0 {
            reports.push(timed(timing, || check_witness(graph, n))?);
            for k in 0..config.lemma_samples {
                let sample_seed = derive_seed(seed, (n as u64) << 32 | k as u64);
                let s = sample_separator_candidate(graph, n, &mut rng_from_seed(sample_seed))?;
                for check in [
                    check_lemma_quotient_connected,
                    check_lemma_layer_in_component,
                ] {
                    let mut report = timed(timing, || check(graph, n, &s))?;
                    report.inputs.seed = Some(sample_seed);
                    reports.push(report);
                }
            }
        }
    }
    Ok(reports)
}

/// Runs the sweep described by `config`. Instances run in parallel;
/// reports come back in instance order.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<VerificationReport>> {
    config.validate()?;
    let per_instance: Vec<Vec<VerificationReport>> = (0..config.instance_count())
        .into_par_iter()
        .map(|index| {
            let (graph, seed) = config.instance(index);
            check_graph(&graph, seed, config)
        })
        .collect::<Result<_>>()?;
    Ok(per_instance.into_iter().flatten().collect())
}

/// Serialises reports as JSON lines, one per line, newline-terminated.
pub fn to_json_lines(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for report in reports {
        out.push_str(&report.to_json_line());
        out.push('\n');
    }
    out
}

/// Re-runs a report's check from its recorded inputs and returns the fresh
/// verdict.
pub fn recheck(report: &VerificationReport) -> Result<Verdict> {
    let inputs = &report.inputs;
    let graph = parse_graph6(&inputs.graph6)?;
    let n = || {
        inputs
            .n
            .ok_or_else(|| Error::Precondition(format!("{} report without n", report.check_name)))
    };
    let right = || -> Result<Graph> {
        let g6 = inputs.graph6_right.as_deref().ok_or_else(|| {
            Error::Precondition(format!("{} report without graph6_right", report.check_name))
        })?;
        parse_graph6(g6)
    };
    let separator = inputs.separator.clone().unwrap_or_default();
    let fresh = match report.check_name.as_str() {
        checks::THEOREM_EQUALITY => {
            let has = |k: &str| report.computed.contains_key(k);
            let oracle = match (
                has("direct_flow"),
                has("direct_brute") || has("kappa_g_brute"),
            ) {
                (true, true) => Oracle::Both,
                (false, true) => Oracle::Brute,
                _ => Oracle::Flow,
            };
            let cap = report.get_int("brute_cap").unwrap_or(0) as usize;
            check_theorem_equality(&graph, n()?, oracle, cap)?
        }
        checks::WITNESS_CUT => check_witness(&graph, n()?)?,
        checks::DEGREE_PRODUCT => check_degree_product(&graph, &right()?)?,
        checks::WEICHSEL => check_weichsel(&graph, &right()?)?,
        checks::QUOTIENT_CONNECTED => check_lemma_quotient_connected(&graph, n()?, &separator)?,
        checks::LAYER_IN_COMPONENT => check_lemma_layer_in_component(&graph, n()?, &separator)?,
        checks::DELETION_BOUNDS => check_lemma_deletion(&graph)?,
        checks::COMPLETE_PRODUCT => check_special_cases(graph.vertex_count(), n()?)?,
        other => return Err(Error::UnknownCheck(other.to_owned())),
    };
    Ok(fresh.verdict)
}
