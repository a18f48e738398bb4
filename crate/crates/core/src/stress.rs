//! Exhaustive and seeded-random verification sweeps.
//!
//! Each swept graph that is in the class gets the full battery: the
//! trichotomy report (ω, Δ, exact χ, branch, induced W6), the neighborhood
//! outcomes for every maximum clique at every vertex, both constructive
//! colorers, and the two-color component check on every coloring produced.
//! Graphs are independent, so sweeps run in parallel; per-graph tallies are
//! merged with an order-independent reduction and counterexamples are kept
//! in sweep order, so summaries are identical run to run.

use std::time::Instant;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;
use serde::Serialize;

use crate::colorer::ConstructiveColorer;
use crate::coloring::{dsatur_greedy, verify_proper, Coloring, Properness};
use crate::error::{Error, Result};
use crate::generators::{labeled_graph, pair_count, random_in_class, unit_interval, ENUMERATION_MAX_VERTICES};
use crate::graph::Graph;
use crate::kempe::{check_result1, Result1Verdict};
use crate::recognition::{is_in_class, lemma1_holds_for_all_cliques};
use crate::report::{classify_trichotomy, Branch};

/// Environment variable capping the worker count (`0` = serial).
pub const THREADS_ENV: &str = "CLAWCHROMA_THREADS";

/// Largest vertex count accepted by random sweeps.
pub const RANDOM_MAX_VERTICES: usize = 32;

/// Draws per sample before a random sample is given up as out of class.
pub const RANDOM_MAX_TRIES: usize = 2000;

const MAX_COUNTEREXAMPLES: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum StressMode {
    /// Every labeled graph on `1..=max_n` vertices.
    Exhaustive { max_n: usize },
    /// `samples` graphs with `n_lo ≤ n ≤ n_hi`, drawn from `seed`.
    Random { n_lo: usize, n_hi: usize, samples: usize, seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    Theorem,
    Corollary1,
    Corollary2,
    Result1,
    Result2,
    Lemma1,
}

/// A graph that broke a claim, as 0-based edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Position of the graph in the sweep.
    pub index: (usize, u64),
    pub kinds: Vec<ViolationKind>,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Counterexample {
    pub fn graph(&self) -> Graph {
        Graph::new(self.n, self.edges.iter().copied()).expect("recorded from a valid graph")
    }
}

/// Per-graph counters. Each violation counter counts graphs, not
/// individual failed checks.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Tally {
    pub graphs_checked: u64,
    pub in_class_count: u64,
    pub theorem_case_count: u64,
    pub middle_case_count: u64,
    pub wheel_case_count: u64,
    /// Wheel-branch graphs with `χ = ω + 1` where an induced W6 was found.
    pub wheel_case_w6_found: u64,
    pub theorem_violations: u64,
    pub corollary1_violations: u64,
    pub corollary2_violations: u64,
    pub result1_violations: u64,
    pub result2_violations: u64,
    pub lemma1_violations: u64,
    /// Vertices colored by the strict colorer, and how.
    pub strict_vertices: u64,
    pub strict_free: u64,
    pub strict_kempe: u64,
    pub strict_case11: u64,
    pub strict_case12: u64,
    pub strict_fallbacks: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.graphs_checked += other.graphs_checked;
        self.in_class_count += other.in_class_count;
        self.theorem_case_count += other.theorem_case_count;
        self.middle_case_count += other.middle_case_count;
        self.wheel_case_count += other.wheel_case_count;
        self.wheel_case_w6_found += other.wheel_case_w6_found;
        self.theorem_violations += other.theorem_violations;
        self.corollary1_violations += other.corollary1_violations;
        self.corollary2_violations += other.corollary2_violations;
        self.result1_violations += other.result1_violations;
        self.result2_violations += other.result2_violations;
        self.lemma1_violations += other.lemma1_violations;
        self.strict_vertices += other.strict_vertices;
        self.strict_free += other.strict_free;
        self.strict_kempe += other.strict_kempe;
        self.strict_case11 += other.strict_case11;
        self.strict_case12 += other.strict_case12;
        self.strict_fallbacks += other.strict_fallbacks;
        self.counterexamples.extend(other.counterexamples);
        self.counterexamples.sort_by_key(|c| c.index);
        self.counterexamples.truncate(MAX_COUNTEREXAMPLES);
        self
    }

    pub fn total_violations(&self) -> u64 {
        self.theorem_violations
            + self.corollary1_violations
            + self.corollary2_violations
            + self.result1_violations
            + self.result2_violations
            + self.lemma1_violations
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StressSummary {
    #[serde(flatten)]
    pub mode: StressMode,
    #[serde(flatten)]
    pub tally: Tally,
    /// Exact fallbacks per vertex colored by the strict colorer.
    pub fallback_rate: f64,
    /// Not serialized, so summaries stay byte-identical across runs.
    #[serde(skip)]
    pub wall_time: std::time::Duration,
}

impl StressSummary {
    pub fn is_clean(&self) -> bool {
        self.tally.total_violations() == 0
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("summary is serializable");
        text.push('\n');
        text
    }
}

/// Worker count: `Some(0)` runs serially, `None` uses the rayon default.
/// [`StressOptions::from_env`] reads [`THREADS_ENV`].
#[derive(Clone, Copy, Debug, Default)]
pub struct StressOptions {
    pub threads: Option<usize>,
}

impl StressOptions {
    pub fn from_env() -> Result<Self> {
        match std::env::var(THREADS_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map(|t| StressOptions { threads: Some(t) })
                .map_err(|_| Error::ParamRange(format!("{THREADS_ENV}={v} is not a count"))),
            Err(_) => Ok(StressOptions { threads: None }),
        }
    }
}

pub fn run_stress(mode: &StressMode, options: StressOptions) -> Result<StressSummary> {
    let start = Instant::now();
    let tally = match options.threads {
        Some(0) => sweep(mode, false)?,
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::ParamRange(e.to_string()))?
            .install(|| sweep(mode, true))?,
        None => sweep(mode, true)?,
    };
    let fallback_rate =
        if tally.strict_vertices == 0 { 0.0 } else { tally.strict_fallbacks as f64 / tally.strict_vertices as f64 };
    Ok(StressSummary { mode: mode.clone(), tally, fallback_rate, wall_time: start.elapsed() })
}

fn sweep(mode: &StressMode, parallel: bool) -> Result<Tally> {
    let over = |count: u64, job: &(dyn Fn(u64) -> Tally + Sync)| -> Tally {
        if parallel {
            (0..count).into_par_iter().map(job).reduce(Tally::default, Tally::merge)
        } else {
            (0..count).map(job).fold(Tally::default(), Tally::merge)
        }
    };
    match *mode {
        StressMode::Exhaustive { max_n } => {
            if max_n > ENUMERATION_MAX_VERTICES {
                return Err(Error::ScaleExceeded { n: max_n, max: ENUMERATION_MAX_VERTICES });
            }
            Ok((1..=max_n)
                .map(|n| over(1u64 << pair_count(n), &|mask| check_graph(&labeled_graph(n, mask), (n, mask))))
                .fold(Tally::default(), Tally::merge))
        }
        StressMode::Random { n_lo, n_hi, samples, seed } => {
            let jobs = random_jobs(n_lo, n_hi, samples, seed)?;
            Ok(over(jobs.len() as u64, &|i| run_job(&jobs[i as usize])))
        }
    }
}

/// One random sample: its size, edge probability and generator seed.
#[derive(Clone, Copy, Debug)]
struct Job {
    sample: usize,
    n: usize,
    p: f64,
    seed: u64,
}

fn random_jobs(n_lo: usize, n_hi: usize, samples: usize, seed: u64) -> Result<Vec<Job>> {
    if n_lo == 0 || n_lo > n_hi {
        return Err(Error::ParamRange(format!("vertex range {n_lo}..={n_hi} is empty or starts at 0")));
    }
    if n_hi > RANDOM_MAX_VERTICES {
        return Err(Error::ScaleExceeded { n: n_hi, max: RANDOM_MAX_VERTICES });
    }
    let mut master = SplitMix64::seed_from_u64(seed);
    let span = (n_hi - n_lo + 1) as u64;
    Ok((0..samples)
        .map(|sample| {
            let n = n_lo + (master.next_u64() % span) as usize;
            let p = 0.2 + 0.75 * unit_interval(&mut master);
            let seed = master.next_u64();
            Job { sample, n, p, seed }
        })
        .collect())
}

fn run_job(job: &Job) -> Tally {
    match random_in_class(job.n, job.p, job.seed, RANDOM_MAX_TRIES) {
        Ok(Some(g)) => check_graph(&g, (job.sample, 0)),
        _ => Tally { graphs_checked: 1, ..Tally::default() },
    }
}

/// Runs every check on one graph. `index` orders counterexamples.
pub fn check_graph(g: &Graph, index: (usize, u64)) -> Tally {
    let mut tally = Tally { graphs_checked: 1, ..Tally::default() };
    if !is_in_class(g).is_in_class() {
        return tally;
    }
    tally.in_class_count = 1;
    let mut kinds = Vec::new();
    graph_checks(g, &mut tally, &mut kinds);
    kinds.sort_by_key(|k| *k as u8);
    kinds.dedup();
    for kind in &kinds {
        match kind {
            ViolationKind::Theorem => tally.theorem_violations = 1,
            ViolationKind::Corollary1 => tally.corollary1_violations = 1,
            ViolationKind::Corollary2 => tally.corollary2_violations = 1,
            ViolationKind::Result1 => tally.result1_violations = 1,
            ViolationKind::Result2 => tally.result2_violations = 1,
            ViolationKind::Lemma1 => tally.lemma1_violations = 1,
        }
    }
    if !kinds.is_empty() {
        tally.counterexamples.push(Counterexample { index, kinds, n: g.vertex_count(), edges: g.edges().collect() });
    }
    tally
}

fn graph_checks(g: &Graph, tally: &mut Tally, kinds: &mut Vec<ViolationKind>) {
    let report = match classify_trichotomy(g) {
        Ok(r) => r,
        Err(_) => {
            kinds.push(ViolationKind::Result2);
            return;
        }
    };
    let (omega, delta, chi) = (report.omega, report.delta, report.chi);
    let proper = |c: &Coloring| matches!(verify_proper(g, c), Ok(Properness::Proper));

    if g.vertices().any(|u| !lemma1_holds_for_all_cliques(g, g.neighbors(u))) {
        kinds.push(ViolationKind::Lemma1);
    }

    if delta + 1 > 2 * omega || (delta + 1 == 2 * omega && (delta, omega) != (5, 3)) {
        kinds.push(ViolationKind::Corollary1);
    }

    if chi < omega || chi > omega + 1 || !proper(&report.chi_witness) {
        kinds.push(ViolationKind::Result2);
    }
    match &report.coloring {
        Some(c) if proper(c) && c.colors_used() <= omega + 1 => {}
        _ => kinds.push(ViolationKind::Result2),
    }

    match report.branch {
        Branch::TheoremCase => {
            tally.theorem_case_count = 1;
            if chi != omega || report.coloring.as_ref().is_some_and(|c| c.colors_used() != omega) {
                kinds.push(ViolationKind::Theorem);
                kinds.push(ViolationKind::Corollary2);
            }
        }
        Branch::MiddleCase => {
            tally.middle_case_count = 1;
            if chi > omega + 1 {
                kinds.push(ViolationKind::Corollary2);
            }
        }
        Branch::WheelCase => {
            tally.wheel_case_count = 1;
            if chi == omega + 1 && report.w6_witness.is_some() {
                tally.wheel_case_w6_found = 1;
            } else {
                kinds.push(ViolationKind::Corollary2);
            }
        }
        Branch::AboveBound | Branch::OutOfClass => kinds.push(ViolationKind::Corollary1),
    }

    let mut colorings = vec![report.chi_witness.clone(), dsatur_greedy(g)];
    colorings.extend(report.coloring.iter().cloned());

    if report.branch == Branch::TheoremCase {
        match ConstructiveColorer::default().color_strict(g) {
            Ok((c, trace)) => {
                tally.strict_vertices = g.vertex_count() as u64;
                tally.strict_free = trace.free_colorings as u64;
                tally.strict_kempe = trace.kempe_swaps as u64;
                tally.strict_case11 = trace.case11_moves as u64;
                tally.strict_case12 = trace.case12_moves as u64;
                tally.strict_fallbacks = trace.exact_fallbacks as u64;
                if !proper(&c) || c.colors_used() != omega || !trace.is_consistent() {
                    kinds.push(ViolationKind::Theorem);
                }
                colorings.push(c);
            }
            Err(_) => kinds.push(ViolationKind::Theorem),
        }
    }

    if colorings.iter().any(|c| check_result1(g, c) != Result1Verdict::AllPathOrCycle) {
        kinds.push(ViolationKind::Result1);
    }
}
