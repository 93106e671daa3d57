//! Batch sweep drivers: scenario benches and the fuzz suites.
//!
//! Individual runs are deterministic and single-threaded; these drivers
//! fan independent runs out across threads when the `parallel` feature is
//! on, collecting results in input order so output artifacts are
//! byte-identical either way. The `*_sequential` variants are always
//! available for comparison benches and as the fallback.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::degrees::unknowability_degree;
use crate::proof::{verify, Justification, Proof};
use crate::prover::{prove_default, ProverOutcome, QueryHint};
use crate::scenario::{
    independence_variant, random_consistent_corpus, random_query, run_scenario, BenchScenario,
    ScenarioRow,
};
use crate::statement::negate;
use crate::system::{bounded_consistency_probe, ConsistencyReport};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Run every scenario, in input order.
pub fn run_scenarios_sequential(scenarios: &[BenchScenario]) -> Vec<ScenarioRow> {
    scenarios.iter().map(run_scenario).collect()
}

#[cfg(feature = "parallel")]
pub fn run_scenarios_parallel(scenarios: &[BenchScenario]) -> Vec<ScenarioRow> {
    scenarios.par_iter().map(run_scenario).collect()
}

/// Default dispatch: parallel when built with the feature, sequential
/// otherwise. Output order and content are identical either way.
pub fn run_scenarios(scenarios: &[BenchScenario]) -> Vec<ScenarioRow> {
    #[cfg(feature = "parallel")]
    {
        run_scenarios_parallel(scenarios)
    }
    #[cfg(not(feature = "parallel"))]
    {
        run_scenarios_sequential(scenarios)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoundnessFuzzReport {
    pub corpora: u32,
    pub queries: u32,
    pub decided: u32,
    pub verified: u32,
    pub failures: Vec<String>,
}

impl SoundnessFuzzReport {
    pub fn all_verified(&self) -> bool {
        self.failures.is_empty() && self.decided == self.verified
    }
}

fn soundness_case(seed: u64, index: u32, queries_per_corpus: u32, fuel: u64) -> SoundnessFuzzReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (index as u64).wrapping_mul(0x9e3779b97f4a7c15));
    let system = random_consistent_corpus(&mut rng);
    let mut report = SoundnessFuzzReport {
        corpora: 1,
        queries: 0,
        decided: 0,
        verified: 0,
        failures: Vec::new(),
    };
    for _ in 0..queries_per_corpus {
        let query = random_query(&mut rng, &system);
        report.queries += 1;
        if let ProverOutcome::Decided { proof, .. } =
            prove_default(&system, &query, QueryHint::Positive, fuel)
        {
            report.decided += 1;
            if verify(&system, &query, &proof).is_valid() {
                report.verified += 1;
            } else {
                report
                    .failures
                    .push(format!("corpus {index}: proof of `{query}` failed the kernel"));
            }
        }
    }
    report
}

fn merge_soundness(reports: Vec<SoundnessFuzzReport>) -> SoundnessFuzzReport {
    let mut total = SoundnessFuzzReport {
        corpora: 0,
        queries: 0,
        decided: 0,
        verified: 0,
        failures: Vec::new(),
    };
    for r in reports {
        total.corpora += r.corpora;
        total.queries += r.queries;
        total.decided += r.decided;
        total.verified += r.verified;
        total.failures.extend(r.failures);
    }
    total
}

/// Soundness sweep: seeded consistent corpora, random queries, every
/// decided proof re-checked by the kernel.
pub fn soundness_fuzz(seed: u64, corpora: u32, queries_per_corpus: u32, fuel: u64) -> SoundnessFuzzReport {
    #[cfg(feature = "parallel")]
    let reports: Vec<SoundnessFuzzReport> = (0..corpora)
        .into_par_iter()
        .map(|i| soundness_case(seed, i, queries_per_corpus, fuel))
        .collect();
    #[cfg(not(feature = "parallel"))]
    let reports: Vec<SoundnessFuzzReport> = (0..corpora)
        .map(|i| soundness_case(seed, i, queries_per_corpus, fuel))
        .collect();
    merge_soundness(reports)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MutationFuzzReport {
    pub mutations: u32,
    pub rejected: u32,
    /// Mutations that left every statement in place and merely relabeled
    /// a justification to another licensing one; accepting those is
    /// correct.
    pub noop_accepted: u32,
    pub failures: Vec<String>,
}

impl MutationFuzzReport {
    pub fn clean(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Build a pool of valid proofs to mutate: decided queries over a few
/// seeded corpora.
fn proof_pool(seed: u64) -> Vec<(crate::system::FormalSystem, Proof)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool = Vec::new();
    while pool.len() < 24 {
        let system = random_consistent_corpus(&mut rng);
        for _ in 0..6 {
            let query = random_query(&mut rng, &system);
            if let ProverOutcome::Decided { proof, .. } =
                prove_default(&system, &query, QueryHint::Positive, 20_000)
            {
                pool.push((system.clone(), proof));
            }
        }
    }
    pool
}

/// Single-token mutation sweep over valid proofs: flip one justification
/// index or one statement and demand the kernel reject, unless the
/// mutation provably changed nothing.
pub fn kernel_mutation_fuzz(seed: u64, mutations: u32) -> MutationFuzzReport {
    let pool = proof_pool(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
    let mut report = MutationFuzzReport {
        mutations: 0,
        rejected: 0,
        noop_accepted: 0,
        failures: Vec::new(),
    };
    for _ in 0..mutations {
        let (system, original) = &pool[rng.gen_range(0..pool.len())];
        let mut mutated = original.clone();
        let idx = rng.gen_range(0..mutated.steps.len());
        let kind = rng.gen_range(0..5u32);
        match kind {
            0 => {
                // Perturb an axiom index (or swap kinds for mp/truth).
                let step = &mut mutated.steps[idx];
                step.justification = match step.justification {
                    Justification::Axiom(k) => {
                        Justification::Axiom(k.wrapping_add(rng.gen_range(1..5usize)))
                    }
                    Justification::Truth => Justification::Axiom(0),
                    Justification::Mp { antecedent, implication } => Justification::Mp {
                        antecedent: antecedent.wrapping_add(1),
                        implication,
                    },
                };
            }
            1 => {
                let step = &mut mutated.steps[idx];
                if let Justification::Mp { antecedent, implication } = step.justification {
                    let bump = rng.gen_range(1..=3usize);
                    step.justification = Justification::Mp {
                        antecedent,
                        implication: implication.wrapping_add(bump),
                    };
                } else {
                    step.justification = Justification::Mp {
                        antecedent: idx.wrapping_add(1),
                        implication: idx.wrapping_add(2),
                    };
                }
            }
            2 => {
                // Negate one statement token.
                let s = mutated.steps[idx].statement.clone();
                mutated.steps[idx].statement = s.negated();
            }
            3 => {
                // Replace with a different step's statement.
                let other = rng.gen_range(0..mutated.steps.len());
                if mutated.steps[other].statement != mutated.steps[idx].statement {
                    mutated.steps[idx].statement = mutated.steps[other].statement.clone();
                } else {
                    mutated.steps[idx].statement =
                        negate(&mutated.steps[idx].statement.clone());
                }
            }
            _ => {
                // Tamper with the declared decision.
                mutated.d_prime = negate(&mutated.d_prime);
            }
        }
        report.mutations += 1;
        let verdict = verify(system, &original.target, &mutated);
        if verdict.is_valid() {
            // Only acceptable if every statement (and the tail claim) is
            // untouched — a pure relabeling that still licenses each step.
            let statements_equal = mutated.d_prime == original.d_prime
                && mutated
                    .steps
                    .iter()
                    .zip(&original.steps)
                    .all(|(m, o)| m.statement == o.statement);
            if statements_equal {
                report.noop_accepted += 1;
            } else {
                report
                    .failures
                    .push(format!("content mutation accepted at step {idx} (kind {kind})"));
            }
        } else {
            report.rejected += 1;
        }
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSweepReport {
    pub cases: u32,
    pub decided: u32,
    pub exhausted: u32,
    pub max_degree: u64,
    pub over_two: u32,
}

fn degree_case(seed: u64, index: u32, fuel: u64) -> DegreeSweepReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (index as u64).wrapping_mul(0xd1b54a32d192ed03));
    let (system, fresh) = independence_variant(&mut rng);
    let mut report = DegreeSweepReport {
        cases: 0,
        decided: 0,
        exhausted: 0,
        max_degree: 0,
        over_two: 0,
    };
    let mut subjects = fresh;
    for _ in 0..3 {
        subjects.push(random_query(&mut rng, &system));
    }
    for subject in subjects {
        report.cases += 1;
        match unknowability_degree(&system, &subject, fuel, 2, 4).degree() {
            Some(k) => {
                report.decided += 1;
                report.max_degree = report.max_degree.max(k);
                if k > 2 {
                    report.over_two += 1;
                }
            }
            None => report.exhausted += 1,
        }
    }
    report
}

/// Unknowability sweep over independence-injected corpora.
pub fn degree_sweep(seed: u64, variants: u32, fuel: u64) -> DegreeSweepReport {
    let fold = |mut acc: DegreeSweepReport, r: DegreeSweepReport| {
        acc.cases += r.cases;
        acc.decided += r.decided;
        acc.exhausted += r.exhausted;
        acc.max_degree = acc.max_degree.max(r.max_degree);
        acc.over_two += r.over_two;
        acc
    };
    let zero = DegreeSweepReport {
        cases: 0,
        decided: 0,
        exhausted: 0,
        max_degree: 0,
        over_two: 0,
    };
    #[cfg(feature = "parallel")]
    {
        (0..variants)
            .into_par_iter()
            .map(|i| degree_case(seed, i, fuel))
            .collect::<Vec<_>>()
            .into_iter()
            .fold(zero, fold)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..variants).map(|i| degree_case(seed, i, fuel)).fold(zero, fold)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencySweepReport {
    pub corpora: u32,
    pub screened_consistent: u32,
    pub runs: u32,
    pub disjoint_throughout: u32,
}

impl ConsistencySweepReport {
    pub fn clean(&self) -> bool {
        self.runs == self.disjoint_throughout
    }
}

fn consistency_case(seed: u64, index: u32, fuel: u64) -> ConsistencySweepReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (index as u64).wrapping_mul(0xbf58476d1ce4e5b9));
    let system = random_consistent_corpus(&mut rng);
    let mut report = ConsistencySweepReport {
        corpora: 1,
        screened_consistent: 0,
        runs: 0,
        disjoint_throughout: 0,
    };
    match bounded_consistency_probe(&system, fuel) {
        ConsistencyReport::NoContradictionFound { .. } => report.screened_consistent += 1,
        ConsistencyReport::ContradictionWitness { .. } => return report,
    }
    // Saturate with queries and check the banks never intersected.
    for _ in 0..4 {
        let query = random_query(&mut rng, &system);
        let mut run = crate::prover::ProverRun::query(
            &system,
            query,
            QueryHint::Positive,
            crate::prover::identity_prepare(),
        );
        for _ in 0..fuel {
            if run.micro_step() != crate::prover::StepEvent::Progress {
                break;
            }
        }
        report.runs += 1;
        if run.state().first_contradiction().is_none() {
            report.disjoint_throughout += 1;
        }
    }
    report
}

/// Probe-screened corpora: instrumented saturation must keep the banks
/// disjoint on every one of them.
pub fn consistency_sweep(seed: u64, corpora: u32, fuel: u64) -> ConsistencySweepReport {
    let fold = |mut acc: ConsistencySweepReport, r: ConsistencySweepReport| {
        acc.corpora += r.corpora;
        acc.screened_consistent += r.screened_consistent;
        acc.runs += r.runs;
        acc.disjoint_throughout += r.disjoint_throughout;
        acc
    };
    let zero = ConsistencySweepReport {
        corpora: 0,
        screened_consistent: 0,
        runs: 0,
        disjoint_throughout: 0,
    };
    #[cfg(feature = "parallel")]
    {
        (0..corpora)
            .into_par_iter()
            .map(|i| consistency_case(seed, i, fuel))
            .collect::<Vec<_>>()
            .into_iter()
            .fold(zero, fold)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..corpora).map(|i| consistency_case(seed, i, fuel)).fold(zero, fold)
    }
}
