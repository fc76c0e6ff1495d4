//! Corpus generation and batch verification: exhaustive labeled-graph
//! enumeration, seeded counter-based random graphs, the simplex-boundary
//! family, and deterministic aggregation under any worker count.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use rayon::prelude::*;
use thiserror::Error;

use crate::complex::{Complex, ComplexError};
use crate::engine::check_inequalities_with_order;
use crate::fvector::FVector;
use crate::graph::Graph;

/// Exhaustive enumeration is capped here; `2^C(m,2)` labeled graphs grow
/// past any desk budget immediately afterwards.
pub const MAX_EXHAUSTIVE_VERTICES: usize = 8;

/// Edge probability as an exact unsigned rational.
pub type EdgeProb = Ratio<u64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("exhaustive bound exceeded: {0} vertices > {MAX_EXHAUSTIVE_VERTICES}")]
    ExhaustiveBoundExceeded(usize),
    #[error("edge probability {0} exceeds 1")]
    ProbabilityOutOfRange(EdgeProb),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("worker pool: {0}")]
    WorkerPool(String),
}

/// What a corpus ranges over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusKind {
    /// All `2^C(m,2)` labeled graphs on `m` vertices, in edge-mask order.
    Exhaustive,
    /// `trials` Erdős–Rényi draws `G(m, p)` from the counter-based stream
    /// keyed by `(seed, index)`.
    Random { edge_prob: EdgeProb, trials: u64, seed: u64 },
    /// The boundary of the `(m-1)`-simplex, the canonical non-flag family.
    Family,
}

impl CorpusKind {
    pub fn name(&self) -> &'static str {
        match self {
            CorpusKind::Exhaustive => "exhaustive",
            CorpusKind::Random { .. } => "random",
            CorpusKind::Family => "family",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    pub kind: CorpusKind,
    pub vertices: usize,
    pub max_n: usize,
    pub order: usize,
}

/// One violated inequality, with the offending input in its canonical
/// re-parseable encoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub input: String,
    pub n: usize,
    pub lhs: BigInt,
}

#[derive(Debug, Clone)]
pub struct CorpusResult {
    pub spec: CorpusSpec,
    pub total: u64,
    pub violations: Vec<Violation>,
    /// Inputs where the three `v` routes disagreed; any nonzero count is an
    /// implementation bug, not a property of the input.
    pub route_disagreements: u64,
    /// Per-N maxima of `v_N` over the corpus, `None` on an empty corpus.
    pub max_v_seen: Vec<Option<BigRational>>,
    pub elapsed: Duration,
}

impl CorpusResult {
    /// True when the run found no violations and no route disagreements.
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.route_disagreements == 0
    }
}

fn avalanche(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Counter-based pseudorandom word: three chained avalanche rounds over
/// `(seed, index, counter)`. Pure `u64` arithmetic, so identical on every
/// platform, and random access by counter costs nothing — which is what
/// keeps parallel corpus runs reproducible.
pub fn counter_hash(seed: u64, index: u64, counter: u64) -> u64 {
    let mut h = avalanche(seed ^ 0xA076_1D64_78BD_642F);
    h = avalanche(h ^ index);
    avalanche(h ^ counter)
}

/// Deterministic Erdős–Rényi draw: edge `(u, v)` is present iff its hash
/// word falls below `p * 2^64`, compared exactly in 128-bit arithmetic.
/// Identical `(seed, index)` always yields the identical graph.
pub fn random_graph(m: usize, p: EdgeProb, seed: u64, index: u64) -> Result<Graph, HarnessError> {
    if p > EdgeProb::new(1, 1) {
        return Err(HarnessError::ProbabilityOutOfRange(p));
    }
    let numer = *p.numer() as u128;
    let denom = *p.denom() as u128;
    let threshold = numer << 64;
    let mut edges = Vec::new();
    let mut counter = 0u64;
    for u in 0..m {
        for v in (u + 1)..m {
            let r = counter_hash(seed, index, counter) as u128;
            if r * denom < threshold {
                edges.push((u, v));
            }
            counter += 1;
        }
    }
    Ok(Graph::new(m, &edges).expect("generated edges are valid"))
}

/// All `2^C(m,2)` labeled graphs exactly once, in edge-mask order.
pub fn enumerate_labeled_graphs(
    m: usize,
) -> Result<impl Iterator<Item = Graph>, HarnessError> {
    if m > MAX_EXHAUSTIVE_VERTICES {
        return Err(HarnessError::ExhaustiveBoundExceeded(m));
    }
    let pairs = m * m.saturating_sub(1) / 2;
    Ok((0..1u64 << pairs).map(move |mask| {
        Graph::from_edge_mask(m, mask).expect("mask within range")
    }))
}

struct ItemOutcome {
    index: u64,
    violations: Vec<(usize, BigInt)>,
    route_disagreement: bool,
    v_values: Vec<BigRational>,
    encoding: String,
}

fn evaluate(index: u64, encoding: String, f: &FVector, max_n: usize, order: usize) -> ItemOutcome {
    let report = check_inequalities_with_order(f, max_n, order);
    ItemOutcome {
        index,
        violations: report
            .entries
            .iter()
            .filter(|e| !e.holds)
            .map(|e| (e.n, e.lhs.clone()))
            .collect(),
        route_disagreement: !report.routes_agree,
        v_values: report.entries.into_iter().map(|e| e.v).collect(),
        encoding,
    }
}

#[derive(Default)]
struct Accum {
    total: u64,
    violations: Vec<(u64, Violation)>,
    route_disagreements: u64,
    max_v: Vec<Option<BigRational>>,
}

impl Accum {
    fn absorb(mut self, outcome: ItemOutcome) -> Self {
        self.total += 1;
        self.route_disagreements += u64::from(outcome.route_disagreement);
        if self.max_v.is_empty() {
            self.max_v = vec![None; outcome.v_values.len()];
        }
        for (slot, v) in self.max_v.iter_mut().zip(outcome.v_values) {
            let bigger = match slot.take() {
                Some(current) => current.max(v),
                None => v,
            };
            *slot = Some(bigger);
        }
        for (n, lhs) in outcome.violations {
            self.violations.push((
                outcome.index,
                Violation { input: outcome.encoding.clone(), n, lhs },
            ));
        }
        self
    }

    /// Associative, commutative merge; the final sort restores the canonical
    /// order no matter how work was split.
    fn merge(mut self, other: Self) -> Self {
        self.total += other.total;
        self.route_disagreements += other.route_disagreements;
        self.violations.extend(other.violations);
        if self.max_v.is_empty() {
            self.max_v = other.max_v;
        } else {
            for (slot, v) in self.max_v.iter_mut().zip(other.max_v) {
                *slot = match (slot.take(), v) {
                    (Some(a), Some(b)) => Some(a.max(b)),
                    (a, b) => a.or(b),
                };
            }
        }
        self
    }
}

/// Runs a corpus: builds each member's f-vector, checks the inequality
/// family, and aggregates. The report is a pure function of the spec —
/// independent of worker count and scheduling.
pub fn run_corpus(spec: &CorpusSpec, workers: Option<usize>) -> Result<CorpusResult, HarnessError> {
    let start = Instant::now();
    let accum = match &spec.kind {
        CorpusKind::Exhaustive => {
            if spec.vertices > MAX_EXHAUSTIVE_VERTICES {
                return Err(HarnessError::ExhaustiveBoundExceeded(spec.vertices));
            }
            let pairs = spec.vertices * spec.vertices.saturating_sub(1) / 2;
            let count = 1u64 << pairs;
            let m = spec.vertices;
            let (max_n, order) = (spec.max_n, spec.order);
            run_items(workers, count, move |mask| {
                let g = Graph::from_edge_mask(m, mask).expect("mask within range");
                evaluate(mask, g.encode(), &g.clique_fvector(), max_n, order)
            })?
        }
        CorpusKind::Random { edge_prob, trials, seed } => {
            if *edge_prob > EdgeProb::new(1, 1) {
                return Err(HarnessError::ProbabilityOutOfRange(*edge_prob));
            }
            let (m, p, seed) = (spec.vertices, *edge_prob, *seed);
            let (max_n, order) = (spec.max_n, spec.order);
            run_items(workers, *trials, move |index| {
                let g = random_graph(m, p, seed, index).expect("probability checked");
                evaluate(index, g.encode(), &g.clique_fvector(), max_n, order)
            })?
        }
        CorpusKind::Family => {
            let complex = Complex::boundary_of_simplex(spec.vertices)?;
            let encoding = format!("boundary_simplex(k={})", spec.vertices);
            let f = complex.fvector();
            Accum::default().absorb(evaluate(0, encoding, &f, spec.max_n, spec.order))
        }
    };

    let mut violations = accum.violations;
    violations.sort_by_key(|(index, v)| (*index, v.n));
    Ok(CorpusResult {
        spec: spec.clone(),
        total: accum.total,
        violations: violations.into_iter().map(|(_, v)| v).collect(),
        route_disagreements: accum.route_disagreements,
        max_v_seen: accum.max_v,
        elapsed: start.elapsed(),
    })
}

fn run_items(
    workers: Option<usize>,
    count: u64,
    item: impl Fn(u64) -> ItemOutcome + Sync + Send,
) -> Result<Accum, HarnessError> {
    let job = || {
        (0..count)
            .into_par_iter()
            .fold(Accum::default, |acc, i| acc.absorb(item(i)))
            .reduce(Accum::default, Accum::merge)
    };
    match workers {
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build()
                .map_err(|e| HarnessError::WorkerPool(e.to_string()))?;
            Ok(pool.install(job))
        }
        None => Ok(job()),
    }
}
