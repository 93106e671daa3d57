//! Seeded corpus and scenario generation for the bench harness and the
//! fuzz sweeps. Everything is driven by a ChaCha8 stream seeded from a
//! single `u64`, so every sweep is reproducible byte for byte.

use crate::godel::encode_statement;
use crate::proof::{con_proof, Justification, Proof, ProofStep};
use crate::search::{
    bound_report, dovetail_search, encode_candidate_output, parse_candidate_output, BoundReport,
};
use crate::statement::Statement;
use crate::system::FormalSystem;
use crate::vm::{emit_program, Program};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Chain corpus `x0 -> x1 -> … -> x<rungs>` with `redundancy` extra
/// implications per rung from earlier chain atoms, all deriving the same
/// statement. Atoms use single letters while they last. Exercises node
/// deduplication: every rung statement is re-derivable many times.
pub fn chain_family_corpus(rungs: usize, redundancy: usize) -> (FormalSystem, Statement) {
    let name = |i: usize| -> String {
        if rungs < 26 {
            ((b'a' + i as u8) as char).to_string()
        } else {
            format!("x{i}")
        }
    };
    let mut axioms = vec![Statement::atom(name(0))];
    for i in 0..rungs {
        axioms.push(Statement::implies(
            Statement::atom(name(i)),
            Statement::atom(name(i + 1)),
        ));
    }
    for i in 0..rungs {
        for back in 1..=redundancy {
            if back > i {
                break;
            }
            axioms.push(Statement::implies(
                Statement::atom(name(i - back)),
                Statement::atom(name(i + 1)),
            ));
        }
    }
    let target = Statement::atom(name(rungs));
    (FormalSystem::with_axioms(Some("chain".into()), axioms), target)
}

/// Evaluate a propositional statement under an atom truth assignment.
/// Meta atoms never occur in generated corpora.
fn eval_in_model(s: &Statement, truth: &dyn Fn(&str) -> bool) -> bool {
    match s {
        Statement::Atom(name) => truth(name),
        Statement::ConstTrue => true,
        Statement::ConstFalse => false,
        Statement::Not(inner) => !eval_in_model(inner, truth),
        Statement::Implies(lhs, rhs) => !eval_in_model(lhs, truth) || eval_in_model(rhs, truth),
        _ => unreachable!("generated corpora are propositional"),
    }
}

fn random_literal(rng: &mut ChaCha8Rng, atoms: &[String]) -> Statement {
    let atom = Statement::atom(atoms[rng.gen_range(0..atoms.len())].clone());
    if rng.gen_bool(0.3) {
        atom.negated()
    } else {
        atom
    }
}

fn random_axiom_shape(rng: &mut ChaCha8Rng, atoms: &[String]) -> Statement {
    match rng.gen_range(0..10u32) {
        0..=3 => random_literal(rng, atoms),
        4..=7 => Statement::implies(random_literal(rng, atoms), random_literal(rng, atoms)),
        8 => Statement::implies(
            random_literal(rng, atoms),
            Statement::implies(random_literal(rng, atoms), random_literal(rng, atoms)),
        ),
        _ => Statement::implies(
            Statement::implies(random_literal(rng, atoms), random_literal(rng, atoms)),
            random_literal(rng, atoms),
        ),
    }
}

/// Random corpus that is consistent by construction: a truth assignment
/// over the atoms is drawn first and only model-true axioms are kept, so
/// the deductive closure can never contain a statement and its negation.
pub fn random_consistent_corpus(rng: &mut ChaCha8Rng) -> FormalSystem {
    let n_atoms = rng.gen_range(4..=12usize);
    let atoms: Vec<String> = (0..n_atoms).map(|i| format!("p{i}")).collect();
    let model: Vec<bool> = (0..n_atoms).map(|_| rng.gen_bool(0.5)).collect();
    let truth = |name: &str| -> bool {
        let idx: usize = name[1..].parse().expect("generated atom");
        model[idx]
    };
    let n_axioms = rng.gen_range(5..=30usize);
    let mut axioms = Vec::with_capacity(n_axioms);
    while axioms.len() < n_axioms {
        let candidate = random_axiom_shape(rng, &atoms);
        if eval_in_model(&candidate, &truth) {
            axioms.push(candidate);
        }
    }
    FormalSystem::with_axioms(None, axioms)
}

/// Random query over the same atom vocabulary, any truth value.
pub fn random_query(rng: &mut ChaCha8Rng, system: &FormalSystem) -> Statement {
    let mut atoms: Vec<String> = Vec::new();
    for ax in &system.axioms {
        collect_atoms(ax, &mut atoms);
    }
    atoms.sort();
    atoms.dedup();
    if atoms.is_empty() {
        atoms.push("p0".into());
    }
    match rng.gen_range(0..6u32) {
        0..=2 => random_literal(rng, &atoms),
        3..=4 => Statement::implies(random_literal(rng, &atoms), random_literal(rng, &atoms)),
        _ => Statement::implies(
            random_literal(rng, &atoms),
            Statement::implies(random_literal(rng, &atoms), random_literal(rng, &atoms)),
        ),
    }
}

fn collect_atoms(s: &Statement, out: &mut Vec<String>) {
    match s {
        Statement::Atom(name) => out.push(name.clone()),
        Statement::Not(inner) => collect_atoms(inner, out),
        Statement::Implies(lhs, rhs) => {
            collect_atoms(lhs, out);
            collect_atoms(rhs, out);
        }
        _ => {}
    }
}

/// A consistent corpus extended with independence facts for fresh atoms
/// (`unprov(<code>)` axioms). Returns the system and the fresh subjects,
/// whose unknowability ladders resolve through the injected facts.
pub fn independence_variant(rng: &mut ChaCha8Rng) -> (FormalSystem, Vec<Statement>) {
    let base = random_consistent_corpus(rng);
    let n_fresh = rng.gen_range(1..=3usize);
    let fresh: Vec<Statement> = (0..n_fresh).map(|i| Statement::atom(format!("q{i}"))).collect();
    let facts = fresh.iter().map(|f| Statement::Unprovable {
        code: encode_statement(f).into_value(),
    });
    let system = base.extended(facts);
    (system, fresh)
}

/// Distractor-heavy corpus with a short goal chain at the end: the
/// saturation prover must grind through `distractors` chain axioms while
/// the goal `g<goal_len>` has a compact ready-made proof.
pub fn goal_chain_corpus(distractors: usize, goal_len: usize) -> (FormalSystem, Statement) {
    let mut axioms = Vec::with_capacity(distractors + goal_len + 2);
    axioms.push(Statement::atom("d0"));
    for i in 0..distractors {
        axioms.push(Statement::implies(
            Statement::atom(format!("d{i}")),
            Statement::atom(format!("d{}", i + 1)),
        ));
    }
    axioms.push(Statement::atom("g0"));
    for i in 0..goal_len {
        axioms.push(Statement::implies(
            Statement::atom(format!("g{i}")),
            Statement::atom(format!("g{}", i + 1)),
        ));
    }
    let target = Statement::atom(format!("g{goal_len}"));
    (FormalSystem::with_axioms(None, axioms), target)
}

/// Hand-assembled proof of the goal chain's end. `pad` prepends one
/// unused axiom step to reach an even length. Axiom indices follow the
/// layout of [`goal_chain_corpus`].
pub fn goal_chain_proof(distractors: usize, goal_len: usize, pad: bool) -> Proof {
    let g = |i: usize| Statement::atom(format!("g{i}"));
    let goal_axiom_base = distractors + 1;
    let mut steps = Vec::new();
    if pad {
        steps.push(ProofStep {
            statement: Statement::atom("d0"),
            justification: Justification::Axiom(0),
        });
    }
    steps.push(ProofStep {
        statement: g(0),
        justification: Justification::Axiom(goal_axiom_base),
    });
    for j in 0..goal_len {
        let antecedent = steps.len() - 1;
        steps.push(ProofStep {
            statement: Statement::implies(g(j), g(j + 1)),
            justification: Justification::Axiom(goal_axiom_base + 1 + j),
        });
        steps.push(ProofStep {
            statement: g(j + 1),
            justification: Justification::Mp {
                antecedent,
                implication: antecedent + 1,
            },
        });
    }
    let target = g(goal_len);
    Proof {
        target: target.clone(),
        d_prime: target,
        steps,
    }
}

#[derive(Debug, Clone)]
pub struct BenchScenario {
    pub id: u32,
    pub label: &'static str,
    pub system: FormalSystem,
    pub target: Statement,
    pub plants: Vec<(u64, Program)>,
    pub fuel: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ScenarioRow {
    pub scenario: u32,
    pub label: String,
    pub report: BoundReport,
    pub tight_holds: bool,
    pub ledger_ok: bool,
    pub gate_ok: bool,
}

const SCENARIO_FUEL: u64 = 10_000_000;

/// Upper bound on a goal-chain candidate's cost (machine plus gate) used
/// to size the distractor chain: at most 34 output bytes per proof line.
fn candidate_cost_upper(proof_len: u64) -> u64 {
    let output_bytes = 1 + proof_len * 34;
    2 * output_bytes + 1 + proof_len
}

fn planted_scenario(rng: &mut ChaCha8Rng, id: u32) -> BenchScenario {
    let winner_index = rng.gen_range(2..=200u64);
    let proof_len = rng.gen_range(3..=40u64);
    let pad = proof_len % 2 == 0;
    let goal_len = if pad {
        (proof_len as usize - 2) / 2
    } else {
        (proof_len as usize - 1) / 2
    };
    // Five times the candidate's worst-case finishing sweep keeps the
    // prover busy long enough for the plant to win.
    let distractors = (5 * (winner_index + candidate_cost_upper(proof_len))) as usize;
    let (system, target) = goal_chain_corpus(distractors, goal_len);
    let proof = goal_chain_proof(distractors, goal_len, pad);
    debug_assert!(con_proof(&system, &target, &proof));
    let program = emit_program(&encode_candidate_output(false, &proof));
    BenchScenario {
        id,
        label: "planted",
        system,
        target,
        plants: vec![(winner_index, program)],
        fuel: SCENARIO_FUEL,
    }
}

fn prover_scenario(rng: &mut ChaCha8Rng, id: u32) -> BenchScenario {
    // Small decidable corpus, no plants: the prover task wins and the
    // 2·|solo trace| arm of the bound is the binding one. Half of these
    // query a refuted axiom, whose proof has length 1.
    if rng.gen_bool(0.5) {
        let system = FormalSystem::with_axioms(
            Some("refute".into()),
            [
                Statement::atom("a"),
                Statement::implies(Statement::atom("a"), Statement::atom("b")),
                Statement::atom("d").negated(),
            ],
        );
        BenchScenario {
            id,
            label: "prover",
            system,
            target: Statement::atom("d"),
            plants: Vec::new(),
            fuel: SCENARIO_FUEL,
        }
    } else {
        let rungs = rng.gen_range(2..=8usize);
        let (system, target) = chain_family_corpus(rungs, 0);
        BenchScenario {
            id,
            label: "prover",
            system,
            target,
            plants: Vec::new(),
            fuel: SCENARIO_FUEL,
        }
    }
}

fn adversarial_scenario(rng: &mut ChaCha8Rng, id: u32) -> BenchScenario {
    // The plant emits a valid proof with the opposite declared decision;
    // the gate rejects it and the prover wins.
    let winner_index = rng.gen_range(2..=50u64);
    let goal_len = 2;
    let (system, target) = goal_chain_corpus(600, goal_len);
    let proof = goal_chain_proof(600, goal_len, false);
    let program = emit_program(&encode_candidate_output(true, &proof));
    BenchScenario {
        id,
        label: "adversarial",
        system,
        target,
        plants: vec![(winner_index, program)],
        fuel: SCENARIO_FUEL,
    }
}

/// The seeded scenario list: planted winners with a sprinkling of
/// prover-win and gate-rejection rows.
pub fn generate_scenarios(seed: u64, count: u32) -> Vec<BenchScenario> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|id| match id % 10 {
            8 => prover_scenario(&mut rng, id),
            9 => adversarial_scenario(&mut rng, id),
            _ => planted_scenario(&mut rng, id),
        })
        .collect()
}

/// Run one scenario end to end and collect the report row.
pub fn run_scenario(scenario: &BenchScenario) -> ScenarioRow {
    let outcome = dovetail_search(
        &scenario.system,
        &scenario.target,
        scenario.fuel,
        &scenario.plants,
    );
    let t = outcome
        .terminated()
        .expect("scenario budgets are ample enough to terminate");
    let report = bound_report(&outcome).expect("terminated search has a report");
    // Winner output round-trips the candidate wire format and passes the
    // gate, whoever won.
    let negative = t.decision != scenario.target;
    let bytes = encode_candidate_output(negative, &t.proof);
    let gate_ok = match parse_candidate_output(&bytes, &scenario.target) {
        Some((claimed, proof)) => con_proof(&scenario.system, &claimed, &proof),
        None => false,
    };
    ScenarioRow {
        scenario: scenario.id,
        label: scenario.label.to_string(),
        tight_holds: report.tight_holds(),
        ledger_ok: t.ledger.fairness_ok && t.ledger.max_alternation_gap <= 1,
        gate_ok,
        report,
    }
}

/// The bench CSV: one row per scenario.
pub fn rows_to_csv(rows: &[ScenarioRow]) -> String {
    let mut out = String::from("scenario,phi_steps,phi_prime_steps,winner_id,e,phi_C,bound,holds\n");
    for row in rows {
        let r = &row.report;
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            row.scenario,
            r.phi_steps,
            r.phi_prime_steps,
            r.winner_id,
            r.e,
            r.phi_c,
            r.bound,
            r.holds
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proof::verify;
    use crate::reference;
    use crate::search::Winner;

    #[test]
    fn chain_family_has_expected_axiom_count() {
        let (sys, target) = chain_family_corpus(25, 10);
        // 1 fact + 25 rungs + redundant: rung i gets min(i, 10) extras.
        let redundant: usize = (0..25).map(|i: usize| i.min(10)).sum();
        assert_eq!(sys.axioms.len(), 1 + 25 + redundant);
        assert_eq!(target.to_string(), "z");
        let closed = reference::closure(&sys, 100_000);
        assert!(closed.contains(&target));
    }

    #[test]
    fn random_corpora_are_model_consistent() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let sys = random_consistent_corpus(&mut rng);
            assert!(sys.axioms.len() <= 30);
            assert!(reference::find_contradiction(&sys, 50_000).is_none());
        }
    }

    #[test]
    fn goal_chain_proof_verifies() {
        for (goal_len, pad) in [(1, false), (3, true), (19, false), (19, true)] {
            let (sys, target) = goal_chain_corpus(50, goal_len);
            let proof = goal_chain_proof(50, goal_len, pad);
            assert!(verify(&sys, &target, &proof).is_valid(), "goal_len {goal_len}");
            let expected = 1 + 2 * goal_len + usize::from(pad);
            assert_eq!(proof.len(), expected);
        }
    }

    #[test]
    fn scenario_generation_is_deterministic() {
        let a = generate_scenarios(42, 10);
        let b = generate_scenarios(42, 10);
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.system, y.system);
            assert_eq!(x.target, y.target);
            assert_eq!(x.plants.len(), y.plants.len());
        }
    }

    #[test]
    fn planted_scenario_lets_the_plant_win() {
        let scenarios = generate_scenarios(11, 3);
        let row = run_scenario(&scenarios[0]);
        assert_eq!(row.label, "planted");
        assert!(row.report.winner_planted, "{:?}", row.report);
        assert!(row.report.holds);
        assert!(row.tight_holds);
        assert!(row.ledger_ok);
        assert!(row.gate_ok);
    }

    #[test]
    fn adversarial_scenario_rejects_the_plant() {
        let scenarios = generate_scenarios(3, 10);
        let adv = &scenarios[9];
        assert_eq!(adv.label, "adversarial");
        let outcome =
            dovetail_search(&adv.system, &adv.target, adv.fuel, &adv.plants);
        let t = outcome.terminated().unwrap();
        assert_eq!(t.winner, Winner::Prover);
        assert!(t.halted_invalid.contains(&adv.plants[0].0));
        let row = run_scenario(adv);
        assert!(row.report.holds && row.gate_ok);
    }

    #[test]
    fn csv_is_stable() {
        let scenarios = generate_scenarios(5, 2);
        let rows: Vec<ScenarioRow> = scenarios.iter().map(run_scenario).collect();
        let csv1 = rows_to_csv(&rows);
        let rows2: Vec<ScenarioRow> = scenarios.iter().map(run_scenario).collect();
        assert_eq!(csv1, rows_to_csv(&rows2));
        assert!(csv1.starts_with("scenario,phi_steps,phi_prime_steps,winner_id,e,phi_C,bound,holds\n"));
    }
}
