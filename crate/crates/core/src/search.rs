//! Dovetailed optimal search over Gödel-enumerated programs.
//!
//! [`dovetail`] is the generic operator: round-robin single-stepping over
//! a fixed task list, skipping halted tasks, stopping once a target
//! number of them have halted with valid status.
//!
//! [`dovetail_search`] is the search proper. Sweep `t` spawns the program
//! with Gödel index `t` (or the plant at that index) and then grants one
//! step to every live enumeration task in index order, giving the prover
//! task one step after each grant, so the prover and the collective stay
//! within one step of each other at all times. At the start of sweep `t`
//! (just after its spawn) exactly `t` programs exist and the one spawned
//! at sweep `s` has executed exactly `t - s` steps.
//!
//! When a candidate's machine halts with valid status, its output buffer
//! is read as a declared decision plus a serialized proof and gated
//! through the kernel; the verification is paid for step by step on the
//! candidate's subsequent grants (one step per proof step), so the
//! scheduler's accounting covers it. The first gate-passing candidate, or
//! the prover's own decision, ends the search.
//!
//! Candidate output wire format: byte 0 is the declared decision (0x00 =
//! the query, 0x01 = its negation), the rest is the kernel's proof step
//! serialization.

use crate::godel::program_at_index;
use crate::proof::{con_proof, parse_proof_steps, Proof};
use crate::prover::{identity_prepare, prove_default, ProverRun, QueryHint, StepEvent};
use crate::statement::{negate, Statement};
use crate::system::FormalSystem;
use crate::vm::{Program, VmState, VmStatus};
use std::collections::HashMap;

pub const DECISION_POSITIVE: u8 = 0x00;
pub const DECISION_NEGATIVE: u8 = 0x01;

/// Anything the dovetailer can single-step.
pub trait Steppable {
    fn step(&mut self) -> TaskStatus;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TaskStatus {
    Running,
    Halted { valid: bool },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DovetailOutcome {
    pub per_task_steps: Vec<u64>,
    /// Task indices in the order they halted (any status).
    pub completion_order: Vec<usize>,
    /// Task indices that halted valid, in halt order.
    pub valid_halts: Vec<usize>,
    pub total_steps: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("all tasks halted but only {valid} of the required {target} halted valid")]
pub struct AllHaltedBeforeTarget {
    pub valid: usize,
    pub target: usize,
}

/// Round-robin single-stepping with halted-task skipping; returns when
/// `target_halts` tasks have halted with valid status.
pub fn dovetail(
    tasks: &mut [Box<dyn Steppable + '_>],
    target_halts: usize,
) -> Result<DovetailOutcome, AllHaltedBeforeTarget> {
    assert!(
        target_halts >= 1 && target_halts <= tasks.len(),
        "target halt count must be within 1..=m"
    );
    let mut per_task_steps = vec![0u64; tasks.len()];
    let mut halted = vec![false; tasks.len()];
    let mut completion_order = Vec::new();
    let mut valid_halts = Vec::new();
    let mut total_steps = 0u64;
    loop {
        let mut any_running = false;
        for i in 0..tasks.len() {
            if halted[i] {
                continue;
            }
            any_running = true;
            per_task_steps[i] += 1;
            total_steps += 1;
            if let TaskStatus::Halted { valid } = tasks[i].step() {
                halted[i] = true;
                completion_order.push(i);
                if valid {
                    valid_halts.push(i);
                    if valid_halts.len() == target_halts {
                        return Ok(DovetailOutcome {
                            per_task_steps,
                            completion_order,
                            valid_halts,
                            total_steps,
                        });
                    }
                }
            }
        }
        if !any_running {
            return Err(AllHaltedBeforeTarget {
                valid: valid_halts.len(),
                target: target_halts,
            });
        }
    }
}

/// Parse a candidate output buffer against the query statement.
pub fn parse_candidate_output(bytes: &[u8], target: &Statement) -> Option<(Statement, Proof)> {
    let (&decision, rest) = bytes.split_first()?;
    let claimed = match decision {
        DECISION_POSITIVE => target.clone(),
        DECISION_NEGATIVE => negate(target),
        _ => return None,
    };
    let text = std::str::from_utf8(rest).ok()?;
    let steps = parse_proof_steps(text).ok()?;
    let d_prime = steps.last().expect("steps nonempty").statement.clone();
    Some((
        claimed.clone(),
        Proof {
            target: claimed,
            d_prime,
            steps,
        },
    ))
}

/// Build the wire bytes a winning candidate must emit.
pub fn encode_candidate_output(negative: bool, proof: &Proof) -> Vec<u8> {
    let mut out = vec![if negative {
        DECISION_NEGATIVE
    } else {
        DECISION_POSITIVE
    }];
    out.extend_from_slice(proof.serialize_steps().as_bytes());
    out
}

enum CandidatePhase {
    Vm(VmState),
    Gate { passed: bool, remaining: u64 },
}

/// One enumeration task: a machine run, then the metered gate check.
struct CandidateTask<'a> {
    system: &'a FormalSystem,
    target: &'a Statement,
    phase: CandidatePhase,
    vm_steps: u64,
    gate_steps: u64,
    pending: Option<(Statement, Proof)>,
    result: Option<(Statement, Proof)>,
}

impl<'a> CandidateTask<'a> {
    fn new(system: &'a FormalSystem, target: &'a Statement, program: Program) -> Self {
        CandidateTask {
            system,
            target,
            phase: CandidatePhase::Vm(VmState::new(program)),
            vm_steps: 0,
            gate_steps: 0,
            pending: None,
            result: None,
        }
    }

    fn steps(&self) -> u64 {
        self.vm_steps + self.gate_steps
    }

    fn step(&mut self) -> TaskStatus {
        match &mut self.phase {
            CandidatePhase::Vm(vm) => {
                vm.step();
                self.vm_steps += 1;
                match vm.status() {
                    VmStatus::Running => TaskStatus::Running,
                    VmStatus::Halted { valid: false } => TaskStatus::Halted { valid: false },
                    VmStatus::Halted { valid: true } => {
                        // The machine is done; the verdict is computed now
                        // and its cost paid out one step per grant.
                        let (passed, cost) =
                            match parse_candidate_output(vm.output(), self.target) {
                                Some((claimed, proof)) => {
                                    let ok = con_proof(self.system, &claimed, &proof);
                                    let cost = proof.len().max(1) as u64;
                                    if ok {
                                        self.pending = Some((claimed, proof));
                                    }
                                    (ok, cost)
                                }
                                None => (false, 1),
                            };
                        self.phase = CandidatePhase::Gate {
                            passed,
                            remaining: cost,
                        };
                        TaskStatus::Running
                    }
                }
            }
            CandidatePhase::Gate { passed, remaining } => {
                self.gate_steps += 1;
                *remaining -= 1;
                if *remaining == 0 {
                    let passed = *passed;
                    if passed {
                        self.result = self.pending.take();
                    }
                    TaskStatus::Halted { valid: passed }
                } else {
                    TaskStatus::Running
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Winner {
    Prover,
    Candidate { index: u64, planted: bool },
}

/// Scheduler bookkeeping asserted by tests and the bench harness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchLedger {
    /// Every live task spawned at sweep `s` had exactly `t - s` steps at
    /// the start of every sweep `t`.
    pub fairness_ok: bool,
    /// Largest |prover steps − collective steps| seen at a grant-pair
    /// boundary (1 at most, at termination).
    pub max_alternation_gap: u64,
}

#[derive(Debug, Clone)]
pub struct TerminatedSearch {
    pub winner: Winner,
    pub decision: Statement,
    pub proof: Proof,
    /// The prover's solo trace on the same query and fuel.
    pub phi_solo_steps: u64,
    pub phi_task_steps: u64,
    pub collective_steps: u64,
    pub total_steps: u64,
    /// The winner's own execution steps (machine steps for a candidate,
    /// prover steps when the prover wins).
    pub winner_exec_steps: u64,
    /// Kernel steps paid for the winner's gate; 0 when the prover wins —
    /// its decision is returned directly, not gated.
    pub verify_steps: u64,
    pub sweeps: u64,
    pub halted_valid: Vec<u64>,
    pub halted_invalid: Vec<u64>,
    pub ledger: SearchLedger,
    pub plants: Vec<u64>,
}

#[derive(Debug, Clone)]
pub enum SearchOutcome {
    Terminated(Box<TerminatedSearch>),
    Exhausted { total_steps: u64, sweeps: u64 },
}

impl SearchOutcome {
    pub fn terminated(&self) -> Option<&TerminatedSearch> {
        match self {
            SearchOutcome::Terminated(t) => Some(t),
            SearchOutcome::Exhausted { .. } => None,
        }
    }
}

/// Run the dovetailed search for a decision on `target`.
///
/// `plants` substitutes crafted programs at chosen Gödel indices (the
/// planted indices are recorded in the result). Invalid or gate-failing
/// candidates are logged and skipped; the search exhausts only when the
/// step budget runs out.
pub fn dovetail_search(
    system: &FormalSystem,
    target: &Statement,
    fuel: u64,
    plants: &[(u64, Program)],
) -> SearchOutcome {
    assert!(fuel >= 1, "search needs fuel");
    let mut plant_map: HashMap<u64, Program> = HashMap::new();
    for (index, program) in plants {
        assert!(*index >= 1, "plant index must be a Gödel index");
        let previous = plant_map.insert(*index, program.clone());
        assert!(previous.is_none(), "plant indices must be distinct");
    }
    let mut plant_indices: Vec<u64> = plant_map.keys().copied().collect();
    plant_indices.sort_unstable();

    let phi_solo_steps = prove_default(system, target, QueryHint::Positive, fuel)
        .meter()
        .steps;

    let mut prover = ProverRun::query(
        system,
        target.clone(),
        QueryHint::Positive,
        identity_prepare(),
    );
    let mut candidates: Vec<CandidateTask<'_>> = Vec::new();
    let mut live: Vec<usize> = Vec::new();
    let mut halted_invalid: Vec<u64> = Vec::new();
    let mut total_steps = 0u64;
    let mut collective_steps = 0u64;
    let mut phi_task_steps = 0u64;
    let mut sweep = 0u64;
    let mut fairness_ok = true;
    let mut max_gap = 0u64;

    let finish = |winner: Winner,
                  decision: Statement,
                  proof: Proof,
                  winner_exec: u64,
                  verify: u64,
                  halted_valid: Vec<u64>,
                  halted_invalid: Vec<u64>,
                  totals: (u64, u64, u64, u64),
                  fairness_ok: bool,
                  max_gap: u64,
                  plants: Vec<u64>| {
        let (total_steps, collective_steps, phi_task_steps, sweeps) = totals;
        SearchOutcome::Terminated(Box::new(TerminatedSearch {
            winner,
            decision,
            proof,
            phi_solo_steps,
            phi_task_steps,
            collective_steps,
            total_steps,
            winner_exec_steps: winner_exec,
            verify_steps: verify,
            sweeps,
            halted_valid,
            halted_invalid,
            ledger: SearchLedger {
                fairness_ok,
                max_alternation_gap: max_gap,
            },
            plants,
        }))
    };

    loop {
        sweep += 1;
        let program = plant_map
            .get(&sweep)
            .cloned()
            .unwrap_or_else(|| program_at_index(sweep));
        candidates.push(CandidateTask::new(system, target, program));
        live.push((sweep - 1) as usize);

        // Start-of-sweep fairness checkpoint.
        for &ci in &live {
            let id = ci as u64 + 1;
            if candidates[ci].steps() != sweep - id {
                fairness_ok = false;
            }
        }

        let mut li = 0;
        while li < live.len() {
            if total_steps + 2 > fuel {
                return SearchOutcome::Exhausted {
                    total_steps,
                    sweeps: sweep,
                };
            }
            let ci = live[li];
            let id = ci as u64 + 1;

            collective_steps += 1;
            total_steps += 1;
            match candidates[ci].step() {
                TaskStatus::Halted { valid } => {
                    live.remove(li);
                    if valid {
                        let gap = (phi_task_steps as i64 - collective_steps as i64).unsigned_abs();
                        let task = &mut candidates[ci];
                        let (decision, proof) = task.result.take().expect("gate stored result");
                        return finish(
                            Winner::Candidate {
                                index: id,
                                planted: plant_map.contains_key(&id),
                            },
                            decision,
                            proof,
                            task.vm_steps,
                            task.gate_steps,
                            vec![id],
                            halted_invalid,
                            (total_steps, collective_steps, phi_task_steps, sweep),
                            fairness_ok,
                            max_gap.max(gap),
                            plant_indices,
                        );
                    }
                    halted_invalid.push(id);
                }
                TaskStatus::Running => li += 1,
            }

            phi_task_steps += 1;
            total_steps += 1;
            if let Some(StepEvent::Decided) = prover.grant_step() {
                let (decision, proof) = prover.take_decision().expect("decision stored");
                let exec = phi_task_steps;
                return finish(
                    Winner::Prover,
                    decision,
                    proof,
                    exec,
                    0,
                    Vec::new(),
                    halted_invalid,
                    (total_steps, collective_steps, phi_task_steps, sweep),
                    fairness_ok,
                    max_gap,
                    plant_indices,
                );
            }
            let gap = (phi_task_steps as i64 - collective_steps as i64).unsigned_abs();
            if gap > max_gap {
                max_gap = gap;
            }
        }
    }
}

/// The Theorem-4 ledger for a terminated search.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct BoundReport {
    pub phi_steps: u64,
    pub phi_prime_steps: u64,
    /// Gödel index of the winning subprogram; 0 denotes the prover task.
    pub winner_id: u64,
    pub winner_planted: bool,
    pub verify_steps: u64,
    pub e: u64,
    #[serde(rename = "phi_C")]
    pub phi_c: u64,
    pub triangular: u64,
    pub bound: u64,
    pub holds: bool,
    pub r_statement: String,
    pub r_size: u64,
    pub plants: Vec<u64>,
}

impl BoundReport {
    /// The schedule's own tighter envelope: both the prover and the
    /// collective are individually capped by the smaller of the solo
    /// trace and the triangular sum.
    pub fn tight_holds(&self) -> bool {
        let per_side = self.phi_steps.min(self.triangular);
        self.phi_prime_steps <= per_side.saturating_mul(2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("search did not terminate")]
pub struct NotTerminated;

/// Compute the bound ledger from a terminated search.
pub fn bound_report(outcome: &SearchOutcome) -> Result<BoundReport, NotTerminated> {
    let t = outcome.terminated().ok_or(NotTerminated)?;
    let (winner_id, winner_planted) = match &t.winner {
        Winner::Prover => (0, false),
        Winner::Candidate { index, planted } => (*index, *planted),
    };
    let e = t.winner_exec_steps + t.verify_steps;
    let phi_c = winner_id + e;
    let triangular = u64::try_from(u128::from(phi_c) * u128::from(phi_c + 1) / 2)
        .unwrap_or(u64::MAX);
    let quadratic = u64::try_from((1 + u128::from(phi_c)) * (1 + u128::from(phi_c)))
        .unwrap_or(u64::MAX);
    let bound = t.phi_solo_steps.saturating_mul(2).min(quadratic);
    Ok(BoundReport {
        phi_steps: t.phi_solo_steps,
        phi_prime_steps: t.total_steps,
        winner_id,
        winner_planted,
        verify_steps: t.verify_steps,
        e,
        phi_c,
        triangular,
        bound,
        holds: t.total_steps <= bound,
        r_statement: t.decision.to_string(),
        r_size: t.proof.len() as u64,
        plants: t.plants.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::statement::parse;
    use crate::system::load_system;
    use crate::vm::emit_program;

    fn tiny() -> FormalSystem {
        load_system("axiom a\naxiom a => b\naxiom b => c\naxiom !d\n")
            .unwrap()
            .system
    }

    /// Halts valid after a fixed number of steps.
    struct Countdown {
        remaining: u64,
    }

    impl Steppable for Countdown {
        fn step(&mut self) -> TaskStatus {
            self.remaining -= 1;
            if self.remaining == 0 {
                TaskStatus::Halted { valid: true }
            } else {
                TaskStatus::Running
            }
        }
    }

    fn countdowns(times: &[u64]) -> Vec<Box<dyn Steppable>> {
        times
            .iter()
            .map(|&t| Box::new(Countdown { remaining: t }) as Box<dyn Steppable>)
            .collect()
    }

    // Hand simulation for tasks halting after [3,1,2] steps with c = 1:
    // grant t0 (1/3, running), grant t1 (1/1, halts valid) — the first
    // halt lands at global step 2, so the schedule stops there.
    #[test]
    fn dovetail_golden_trace() {
        let mut tasks = countdowns(&[3, 1, 2]);
        let out = dovetail(&mut tasks, 1).unwrap();
        assert_eq!(out.total_steps, 2);
        assert_eq!(out.per_task_steps, vec![1, 1, 0]);
        assert_eq!(out.completion_order, vec![1]);
        assert_eq!(out.valid_halts, vec![1]);
    }

    #[test]
    fn dovetail_all_tasks_runs_to_solo_times() {
        let times = [3u64, 1, 2];
        let mut tasks = countdowns(&times);
        let out = dovetail(&mut tasks, 3).unwrap();
        assert_eq!(out.per_task_steps, times.to_vec());
        assert_eq!(out.completion_order, vec![1, 2, 0]);
        assert_eq!(out.total_steps, 6);
    }

    #[test]
    fn dovetail_single_task_degenerates_to_solo_run() {
        let mut tasks = countdowns(&[5]);
        let out = dovetail(&mut tasks, 1).unwrap();
        assert_eq!(out.total_steps, 5);
        assert_eq!(out.per_task_steps, vec![5]);
    }

    struct InvalidHalt;

    impl Steppable for InvalidHalt {
        fn step(&mut self) -> TaskStatus {
            TaskStatus::Halted { valid: false }
        }
    }

    #[test]
    fn dovetail_reports_when_valid_halts_fall_short() {
        let mut tasks: Vec<Box<dyn Steppable>> = vec![Box::new(InvalidHalt), Box::new(InvalidHalt)];
        let err = dovetail(&mut tasks, 1).unwrap_err();
        assert_eq!(err.valid, 0);
        assert_eq!(err.target, 1);
    }

    #[test]
    fn prover_wins_without_plants() {
        let sys = tiny();
        let c = parse("c").unwrap();
        let outcome = dovetail_search(&sys, &c, 1_000_000, &[]);
        let t = outcome.terminated().expect("must terminate");
        assert_eq!(t.winner, Winner::Prover);
        assert_eq!(t.decision, c);
        assert!(crate::proof::con_proof(&sys, &t.decision, &t.proof));
        let report = bound_report(&outcome).unwrap();
        assert!(report.holds, "{report:?}");
        assert!(report.tight_holds(), "{report:?}");
        assert!(report.phi_prime_steps <= 2 * report.phi_steps);
        assert_eq!(report.winner_id, 0);
        assert_eq!(report.e, t.phi_task_steps);
        assert!(t.ledger.fairness_ok);
        assert!(t.ledger.max_alternation_gap <= 1);
    }

    fn plant_for_proof(sys: &FormalSystem, target: &Statement, negative: bool) -> Program {
        let outcome = prove_default(sys, target, QueryHint::Positive, 100_000);
        let proof = match outcome {
            crate::prover::ProverOutcome::Decided { proof, .. } => proof,
            other => panic!("target must be decidable for a plant: {other:?}"),
        };
        emit_program(&encode_candidate_output(negative, &proof))
    }

    #[test]
    fn planted_winner_beats_a_slow_prover() {
        // A long distractor chain keeps the prover busy while the plant
        // at index 5 emits a ready-made proof of the goal.
        let mut corpus = String::from("axiom d0\n");
        for i in 0..3_000 {
            corpus.push_str(&format!("axiom d{} => d{}\n", i, i + 1));
        }
        corpus.push_str("axiom g0\naxiom g0 => g1\naxiom g1 => g2\n");
        let sys = load_system(&corpus).unwrap().system;
        let goal = parse("g2").unwrap();
        let plant = plant_for_proof(&sys, &goal, false);
        let outcome = dovetail_search(&sys, &goal, 10_000_000, &[(5, plant)]);
        let t = outcome.terminated().expect("must terminate");
        assert_eq!(
            t.winner,
            Winner::Candidate {
                index: 5,
                planted: true
            }
        );
        let report = bound_report(&outcome).unwrap();
        assert_eq!(report.winner_id, 5);
        assert_eq!(report.e, t.winner_exec_steps + t.verify_steps);
        assert_eq!(report.phi_c, 5 + report.e);
        assert!(report.holds, "{report:?}");
        assert!(report.tight_holds(), "{report:?}");
        assert_eq!(report.plants, vec![5]);
        assert!(t.ledger.fairness_ok);
        assert!(t.ledger.max_alternation_gap <= 1);
        // The gate charged one step per proof step.
        assert_eq!(t.verify_steps, t.proof.len() as u64);
    }

    #[test]
    fn polarity_mismatch_plant_is_rejected() {
        // A slow corpus so the plant's gate check actually runs before
        // the prover decides; the declared decision is flipped, so the
        // gate must turn it away.
        let mut corpus = String::from("axiom d0\n");
        for i in 0..3_000 {
            corpus.push_str(&format!("axiom d{} => d{}\n", i, i + 1));
        }
        corpus.push_str("axiom g0\naxiom g0 => g1\naxiom g1 => g2\n");
        let sys = load_system(&corpus).unwrap().system;
        let goal = parse("g2").unwrap();
        let plant = plant_for_proof(&sys, &goal, true);
        let outcome = dovetail_search(&sys, &goal, 10_000_000, &[(2, plant)]);
        let t = outcome.terminated().expect("must terminate");
        assert_eq!(t.winner, Winner::Prover);
        assert!(t.halted_invalid.contains(&2));
        let report = bound_report(&outcome).unwrap();
        assert!(report.holds);
    }

    #[test]
    fn search_exhausts_on_tiny_budget() {
        let sys = tiny();
        let e = parse("e").unwrap();
        match dovetail_search(&sys, &e, 100, &[]) {
            SearchOutcome::Exhausted { total_steps, .. } => assert!(total_steps <= 100),
            SearchOutcome::Terminated(t) => panic!("must exhaust, got {:?}", t.winner),
        }
    }

    #[test]
    fn bound_report_requires_termination() {
        let sys = tiny();
        let e = parse("e").unwrap();
        let outcome = dovetail_search(&sys, &e, 100, &[]);
        assert_eq!(bound_report(&outcome), Err(NotTerminated));
    }

    #[test]
    fn bound_arithmetic_matches_definitions() {
        // winner_id 5, exec 20, verify 9: e = 29, phi_C = 34,
        // (1+phi_C)^2 = 1225, triangular = 595.
        let t = TerminatedSearch {
            winner: Winner::Candidate {
                index: 5,
                planted: true,
            },
            decision: parse("c").unwrap(),
            proof: Proof {
                target: parse("c").unwrap(),
                d_prime: parse("c").unwrap(),
                steps: vec![],
            },
            phi_solo_steps: 40,
            phi_task_steps: 30,
            collective_steps: 31,
            total_steps: 61,
            winner_exec_steps: 20,
            verify_steps: 9,
            sweeps: 7,
            halted_valid: vec![5],
            halted_invalid: vec![],
            ledger: SearchLedger {
                fairness_ok: true,
                max_alternation_gap: 1,
            },
            plants: vec![5],
        };
        let report = bound_report(&SearchOutcome::Terminated(Box::new(t))).unwrap();
        assert_eq!(report.e, 29);
        assert_eq!(report.phi_c, 34);
        assert_eq!(report.triangular, 34 * 35 / 2);
        assert_eq!(report.bound, 80.min(1225));
        assert_eq!(report.bound, 80);
        assert!(report.holds);
    }

    #[test]
    fn candidate_output_round_trip_and_rejection() {
        let sys = tiny();
        let c = parse("c").unwrap();
        let outcome = prove_default(&sys, &c, QueryHint::Positive, 10_000);
        let proof = crate::prover::extract_chain(&outcome).unwrap().clone();
        let bytes = encode_candidate_output(false, &proof);
        let (claimed, parsed) = parse_candidate_output(&bytes, &c).unwrap();
        assert_eq!(claimed, c);
        assert_eq!(parsed.steps, proof.steps);
        assert!(parse_candidate_output(b"", &c).is_none());
        assert!(parse_candidate_output(&[9, b'x'], &c).is_none());
        assert!(parse_candidate_output(&[0, 0xff, 0xfe], &c).is_none());
    }
}
