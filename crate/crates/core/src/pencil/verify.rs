//! Sweep over admissible `(α, β)` checking that the third degenerate member
//! of the pencil is a real line pair.
//!
//! Per pair the checks are: `D(1/γ²) = 0`; and, with geometry enabled,
//! `C₃` classifies as a real line pair with `2q + 1` points, the member at
//! `(β² : α²)` is degenerate, and both base conics are conjugate imaginary
//! line pairs with a single point.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Duration;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{admissible_parameters, is_admissible_parameter, AlphaBetaPencil};
use crate::gf2n::{FieldElement, FieldSpec};
use crate::pg2::{self, VerdictKind};

pub const DEFAULT_SEED: u64 = 0x5eed_2c0e;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VerifyMode {
    Exhaustive,
    Sample { count: u64, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub mode: VerifyMode,
    /// Classify the conics of each pair, not only the trace identity.
    pub geometry: bool,
    /// Keep one [`PairRow`] per checked pair.
    pub per_pair: bool,
    /// Worker count; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            mode: VerifyMode::Exhaustive,
            geometry: true,
            per_pair: false,
            jobs: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairRow {
    pub alpha: String,
    pub beta: String,
    pub gamma: String,
    /// `D(1/γ²)`.
    pub trace: u8,
    pub verdict: Option<VerdictKind>,
    pub point_count: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub alpha: String,
    pub beta: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub field: FieldSpec,
    pub mode: VerifyMode,
    pub geometry: bool,
    pub ordered_pairs: u64,
    pub unordered_pairs: u64,
    /// Pairs with `D(1/γ²) = 0`.
    pub trace_zero: u64,
    /// Verdicts for `C₃`; empty without geometry.
    pub histogram: BTreeMap<VerdictKind, u64>,
    /// `C₃` classified as a conjugate imaginary line pair.
    pub falsifier_count: u64,
    /// Pairs where `C₁` or `C₂` is not a one-point imaginary line pair.
    pub hypothesis_violations: u64,
    /// Pairs failing any check.
    pub failures: u64,
    pub first_counterexample: Option<Counterexample>,
    pub elapsed: Duration,
    pub rows: Vec<PairRow>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.falsifier_count == 0
    }

    pub fn is_vacuous(&self) -> bool {
        self.ordered_pairs == 0
    }

    pub fn histogram_count(&self, kind: VerdictKind) -> u64 {
        self.histogram.get(&kind).copied().unwrap_or(0)
    }
}

#[derive(Debug, Default)]
struct Partial {
    pairs: u64,
    trace_zero: u64,
    histogram: BTreeMap<VerdictKind, u64>,
    falsifiers: u64,
    hypothesis_violations: u64,
    failures: u64,
    first: Option<Counterexample>,
    rows: Vec<PairRow>,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        self.pairs += other.pairs;
        self.trace_zero += other.trace_zero;
        for (k, v) in other.histogram {
            *self.histogram.entry(k).or_default() += v;
        }
        self.falsifiers += other.falsifiers;
        self.hypothesis_violations += other.hypothesis_violations;
        self.failures += other.failures;
        if self.first.is_none() {
            self.first = other.first;
        }
        self.rows.extend(other.rows);
        self
    }

    fn check(&mut self, alpha: FieldElement, beta: FieldElement, opts: &VerifyOptions) {
        let pencil =
            AlphaBetaPencil::new(alpha, beta).expect("admissible pairs are distinct and nonzero");
        let q = alpha.field().order();
        let gamma = pencil.gamma();
        let trace = gamma.square().inv().expect("gamma is nonzero").trace_bit();
        let mut problems: Vec<String> = Vec::new();

        self.pairs += 1;
        if trace == 0 {
            self.trace_zero += 1;
        } else {
            problems.push("D(1/gamma^2) = 1".into());
        }

        let mut c3_record = None;
        if opts.geometry {
            let record = pg2::classify(&pencil.c3());
            *self.histogram.entry(record.kind()).or_default() += 1;
            if record.kind() == VerdictKind::ImaginaryLinePair {
                self.falsifiers += 1;
            }
            if record.kind() != VerdictKind::RealLinePair || record.point_count != 2 * q + 1 {
                problems.push(format!(
                    "C3 classified {} with {} points",
                    record.kind(),
                    record.point_count
                ));
            }
            let member = pencil.pencil().member(&pencil.c3_parameter());
            if !pg2::classify(&member).verdict.is_degenerate() {
                problems.push("member at (beta^2 : alpha^2) is nondegenerate".into());
            }
            let base_ok = [pencil.c1(), pencil.c2()].iter().all(|c| {
                let r = pg2::classify(c);
                r.kind() == VerdictKind::ImaginaryLinePair && r.point_count == 1
            });
            if !base_ok {
                self.hypothesis_violations += 1;
                problems.push("base conic is not a one-point imaginary line pair".into());
            }
            c3_record = Some(record);
        }

        if !problems.is_empty() {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(Counterexample {
                    alpha: alpha.to_string(),
                    beta: beta.to_string(),
                    reason: problems.join("; "),
                });
            }
        }
        if opts.per_pair {
            self.rows.push(PairRow {
                alpha: alpha.to_string(),
                beta: beta.to_string(),
                gamma: gamma.to_string(),
                trace,
                verdict: c3_record.map(|r| r.kind()),
                point_count: c3_record.map(|r| r.point_count),
            });
        }
    }
}

/// Draws `count` ordered admissible pairs with replacement. Returns an empty
/// list when fewer than two admissible parameters exist.
fn sample_pairs(field: &FieldSpec, count: u64, seed: u64) -> Vec<(FieldElement, FieldElement)> {
    let mut admissible = field
        .nonzero_elements()
        .filter(|&a| is_admissible_parameter(a));
    if admissible.next().is_none() || admissible.next().is_none() {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = field.order();
    let draw = |rng: &mut ChaCha8Rng| loop {
        let a = field.element(rng.random_range(1..q)).expect("in range");
        if is_admissible_parameter(a) {
            return a;
        }
    };
    (0..count)
        .map(|_| {
            let a = draw(&mut rng);
            let b = loop {
                let b = draw(&mut rng);
                if b != a {
                    break b;
                }
            };
            (a, b)
        })
        .collect()
}

fn run_chunks<T, F>(items: &[T], f: F) -> Vec<Partial>
where
    T: Sync,
    F: Fn(&T) -> Partial + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

fn sweep(field: &FieldSpec, opts: &VerifyOptions) -> (Partial, u64) {
    match opts.mode {
        VerifyMode::Exhaustive => {
            let alphas = admissible_parameters(field);
            let partials = run_chunks(&alphas, |&a| {
                let mut p = Partial::default();
                for &b in alphas.iter().filter(|&&b| b != a) {
                    p.check(a, b, opts);
                }
                p
            });
            let merged = partials
                .into_iter()
                .fold(Partial::default(), Partial::merge);
            let unordered = merged.pairs / 2;
            (merged, unordered)
        }
        VerifyMode::Sample { count, seed } => {
            let pairs = sample_pairs(field, count, seed);
            let unordered = pairs
                .iter()
                .map(|&(a, b)| (a.bits().min(b.bits()), a.bits().max(b.bits())))
                .collect::<BTreeSet<_>>()
                .len() as u64;
            let chunk = 1024;
            let chunks: Vec<&[(FieldElement, FieldElement)]> = pairs.chunks(chunk).collect();
            let partials = run_chunks(&chunks, |c| {
                let mut p = Partial::default();
                for &(a, b) in c.iter() {
                    p.check(a, b, opts);
                }
                p
            });
            (
                partials
                    .into_iter()
                    .fold(Partial::default(), Partial::merge),
                unordered,
            )
        }
    }
}

/// Checks every (or a seeded sample of) ordered admissible pair `(α, β)`.
///
/// The merge is deterministic: counts are summed and the first
/// counterexample is the earliest in pair order, whatever the worker count.
pub fn verify_note(field: &FieldSpec, opts: &VerifyOptions) -> VerificationReport {
    #[cfg(not(target_arch = "wasm32"))]
    let start = std::time::Instant::now();

    #[cfg(feature = "parallel")]
    let (partial, unordered) = match opts.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map(|pool| pool.install(|| sweep(field, opts)))
            .unwrap_or_else(|_| sweep(field, opts)),
        None => sweep(field, opts),
    };
    #[cfg(not(feature = "parallel"))]
    let (partial, unordered) = sweep(field, opts);

    #[cfg(not(target_arch = "wasm32"))]
    let elapsed = start.elapsed();
    #[cfg(target_arch = "wasm32")]
    let elapsed = Duration::ZERO;

    VerificationReport {
        field: *field,
        mode: opts.mode,
        geometry: opts.geometry,
        ordered_pairs: partial.pairs,
        unordered_pairs: unordered,
        trace_zero: partial.trace_zero,
        histogram: partial.histogram,
        falsifier_count: partial.falsifiers,
        hypothesis_violations: partial.hypothesis_violations,
        failures: partial.failures,
        first_counterexample: partial.first,
        elapsed,
        rows: partial.rows,
    }
}
