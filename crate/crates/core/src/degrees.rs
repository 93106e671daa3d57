//! Unprovability marking and the fuel-bounded degree operators.
//!
//! The unprovability mark is purely syntactic: `mark_unprovable(s)` is the
//! meta statement `unprov(<code of s>)`, read as "s has no proof from the
//! axioms". The engine can only decide such statements when the corpus
//! supplies the independence facts; everything else comes out `Exhausted`,
//! which is the honest bounded projection of an undecidable notion.
//!
//! The reachability degree of `s` is the least `n` such that the n-fold
//! mark of `s` is decided within the rung fuel. The unknowability degree
//! iterates reachability: each round re-embeds the previous result as the
//! statement `deg(<code of subject>)=<value>`, which the engine reflects
//! into its axioms once it has itself established it (every reflected
//! fact is logged in the run's [`ReflectionRecord`]). The iteration count
//! at which the value 0 is reached is the unknowability degree; by
//! construction a decided ladder never needs more than two rounds.

use crate::godel::encode_statement;
use crate::prover::{
    prove, prove_default, PrepareFn, PrepareResult, ProverOutcome, QueryHint, TraceMeter,
};
use crate::statement::Statement;
use crate::system::FormalSystem;

/// The unprovability mark of a statement. The system argument is kept for
/// signature symmetry with the degree operators; corpora never contain a
/// consistency meta-axiom, so there is nothing to subtract.
pub fn mark_unprovable(_system: &FormalSystem, s: &Statement) -> Statement {
    Statement::Unprovable {
        code: encode_statement(s).into_value(),
    }
}

/// n-fold composition of [`mark_unprovable`]; `n = 0` is the identity.
pub fn mark_unprovable_n(system: &FormalSystem, s: &Statement, n: u64) -> Statement {
    let mut out = s.clone();
    for _ in 0..n {
        out = mark_unprovable(system, &out);
    }
    out
}

/// Result of a degree computation. `ladder` lists the statements visited
/// (mark iterates for reachability, re-embedded subjects for
/// unknowability) and `meters` the prover meters in rung order.
#[derive(Debug, Clone)]
pub enum DegreeOutcome {
    Degree {
        n: u64,
        ladder: Vec<Statement>,
        meters: Vec<TraceMeter>,
        k_budget: u64,
    },
    Exhausted {
        ladder: Vec<Statement>,
        meters: Vec<TraceMeter>,
        k_budget: u64,
    },
}

impl DegreeOutcome {
    pub fn degree(&self) -> Option<u64> {
        match self {
            DegreeOutcome::Degree { n, .. } => Some(*n),
            DegreeOutcome::Exhausted { .. } => None,
        }
    }

    pub fn ladder(&self) -> &[Statement] {
        match self {
            DegreeOutcome::Degree { ladder, .. } | DegreeOutcome::Exhausted { ladder, .. } => {
                ladder
            }
        }
    }

    pub fn meters(&self) -> &[TraceMeter] {
        match self {
            DegreeOutcome::Degree { meters, .. } | DegreeOutcome::Exhausted { meters, .. } => {
                meters
            }
        }
    }

    pub fn total_steps(&self) -> u64 {
        self.meters().iter().map(|m| m.steps).sum()
    }
}

/// Least `n ≤ n_max` whose n-fold unprovability mark of `s` the prover
/// decides (either polarity) within `fuel` steps.
pub fn reachability_degree(
    system: &FormalSystem,
    s: &Statement,
    fuel: u64,
    n_max: u64,
) -> DegreeOutcome {
    assert!(fuel >= 1, "reachability needs fuel");
    let mut ladder = Vec::new();
    let mut meters = Vec::new();
    for n in 0..=n_max {
        let rung = mark_unprovable_n(system, s, n);
        ladder.push(rung.clone());
        let outcome = prove_default(system, &rung, QueryHint::Positive, fuel);
        meters.push(outcome.meter());
        if outcome.is_decided() {
            return DegreeOutcome::Degree {
                n,
                ladder,
                meters,
                k_budget: n_max,
            };
        }
    }
    DegreeOutcome::Exhausted {
        ladder,
        meters,
        k_budget: n_max,
    }
}

/// Facts the engine reflected into the axioms during an unknowability
/// run, in the order it established them.
#[derive(Debug, Clone, Default)]
pub struct ReflectionRecord {
    pub facts: Vec<Statement>,
}

/// Iterated reachability with reflection; also returns the provenance
/// record of reflected facts.
pub fn unknowability_degree_traced(
    system: &FormalSystem,
    s: &Statement,
    fuel: u64,
    n_max: u64,
    k_max: u64,
) -> (DegreeOutcome, ReflectionRecord) {
    assert!(fuel >= 1, "unknowability needs fuel");
    assert!(k_max >= 1, "unknowability needs at least one iteration");
    let mut record = ReflectionRecord::default();
    let mut subject = s.clone();
    let mut ladder = Vec::new();
    let mut meters = Vec::new();
    for k in 1..=k_max {
        let extended = system.extended(record.facts.iter().cloned());
        ladder.push(subject.clone());
        match reachability_degree(&extended, &subject, fuel, n_max) {
            DegreeOutcome::Degree {
                n,
                meters: rung_meters,
                ..
            } => {
                meters.extend(rung_meters);
                let fact = Statement::DegreeEq {
                    code: encode_statement(&subject).into_value(),
                    degree: n,
                };
                record.facts.push(fact.clone());
                if n == 0 {
                    return (
                        DegreeOutcome::Degree {
                            n: k,
                            ladder,
                            meters,
                            k_budget: k_max,
                        },
                        record,
                    );
                }
                subject = fact;
            }
            DegreeOutcome::Exhausted {
                meters: rung_meters,
                ..
            } => {
                meters.extend(rung_meters);
                return (
                    DegreeOutcome::Exhausted {
                        ladder,
                        meters,
                        k_budget: k_max,
                    },
                    record,
                );
            }
        }
    }
    (
        DegreeOutcome::Exhausted {
            ladder,
            meters,
            k_budget: k_max,
        },
        record,
    )
}

/// Iterated reachability with reflection: the returned degree is the
/// number of reachability applications until a value of 0.
pub fn unknowability_degree(
    system: &FormalSystem,
    s: &Statement,
    fuel: u64,
    n_max: u64,
    k_max: u64,
) -> DegreeOutcome {
    unknowability_degree_traced(system, s, fuel, n_max, k_max).0
}

/// The prover configured with the degree target as its prepared check:
/// computes the unknowability ladder for `s`, reflects the established
/// facts, and queries the final degree fact through a prepare hook whose
/// cost is the ladder's full step count. An unresolved ladder surfaces as
/// a diverged hook, which exhausts the run.
pub fn prove_degree_target(
    system: &FormalSystem,
    s: &Statement,
    fuel: u64,
    n_max: u64,
    k_max: u64,
) -> ProverOutcome {
    let (outcome, record) = unknowability_degree_traced(system, s, fuel, n_max, k_max);
    let spent = outcome.total_steps();
    let extended = system.extended(record.facts.iter().cloned());
    let final_fact = match &outcome {
        DegreeOutcome::Degree { .. } => {
            Some(record.facts.last().expect("degree run reflects a fact").clone())
        }
        DegreeOutcome::Exhausted { .. } => None,
    };
    let hook: PrepareFn<'_> = Box::new(move |_, _| match &final_fact {
        Some(fact) => PrepareResult::Ready {
            check: fact.clone(),
            cost: spent,
        },
        None => PrepareResult::Diverged { cost: spent },
    });
    // Budget: the ladder cost plus one more rung's worth for the final
    // bank query.
    prove(&extended, s, QueryHint::Positive, spent + fuel, hook)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::godel::{decode_statement_value, encode_statement};
    use crate::statement::parse;
    use crate::system::load_system;

    const TINY: &str = "axiom a\naxiom a => b\naxiom b => c\naxiom !d\n";
    // TINY plus the independence fact for `e` (code 5).
    const TINY_IND: &str = "axiom a\naxiom a => b\naxiom b => c\naxiom !d\naxiom unprov(5)\n";

    fn sys(text: &str) -> FormalSystem {
        load_system(text).unwrap().system
    }

    #[test]
    fn mark_is_the_encoded_meta_statement() {
        let tiny = sys(TINY);
        let a = parse("a").unwrap();
        let marked = mark_unprovable(&tiny, &a);
        assert_eq!(marked.to_string(), "unprov(1)");
        let twice = mark_unprovable(&tiny, &marked);
        match &twice {
            Statement::Unprovable { code } => {
                assert_eq!(decode_statement_value(code), Some(marked.clone()));
            }
            _ => panic!("mark must be the meta atom"),
        }
        assert_eq!(mark_unprovable_n(&tiny, &a, 0), a);
        assert_eq!(mark_unprovable_n(&tiny, &a, 1), marked);
        assert_eq!(mark_unprovable_n(&tiny, &a, 2), twice);
        assert_eq!(
            mark_unprovable_n(&tiny, &a, 3),
            mark_unprovable(&tiny, &twice)
        );
    }

    #[test]
    fn provable_statement_has_degree_zero() {
        let tiny = sys(TINY);
        let c = parse("c").unwrap();
        match reachability_degree(&tiny, &c, 10_000, 2) {
            DegreeOutcome::Degree { n, ladder, .. } => {
                assert_eq!(n, 0);
                assert_eq!(ladder, vec![c]);
            }
            other => panic!("expected degree, got {other:?}"),
        }
    }

    #[test]
    fn independence_axiom_gives_degree_one() {
        let ind = sys(TINY_IND);
        let e = parse("e").unwrap();
        match reachability_degree(&ind, &e, 10_000, 2) {
            DegreeOutcome::Degree { n, ladder, meters, .. } => {
                assert_eq!(n, 1);
                assert_eq!(ladder.len(), 2);
                assert_eq!(ladder[1].to_string(), "unprov(5)");
                // Rung 0 burned its whole fuel; rung 1 was an axiom hit.
                assert_eq!(meters[0].steps, 10_000);
                assert!(meters[1].steps < 10);
            }
            other => panic!("expected degree 1, got {other:?}"),
        }
    }

    #[test]
    fn unknown_statement_exhausts_every_rung() {
        let tiny = sys(TINY);
        let e = parse("e").unwrap();
        match reachability_degree(&tiny, &e, 500, 2) {
            DegreeOutcome::Exhausted { ladder, meters, .. } => {
                assert_eq!(ladder.len(), 3);
                assert!(meters.iter().all(|m| m.steps == 500));
            }
            other => panic!("expected exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn minimality_replay() {
        // A positive degree means every earlier rung exhausts under the
        // same fuel.
        let ind = sys(TINY_IND);
        let e = parse("e").unwrap();
        let fuel = 10_000;
        match reachability_degree(&ind, &e, fuel, 2) {
            DegreeOutcome::Degree { n, ladder, .. } => {
                assert!(n > 0);
                for rung in &ladder[..n as usize] {
                    assert!(!prove_default(&ind, rung, QueryHint::Positive, fuel).is_decided());
                }
            }
            other => panic!("expected degree, got {other:?}"),
        }
    }

    #[test]
    fn degree_stable_under_more_fuel() {
        let ind = sys(TINY_IND);
        let e = parse("e").unwrap();
        let small = reachability_degree(&ind, &e, 10_000, 2).degree();
        let large = reachability_degree(&ind, &e, 40_000, 2).degree();
        assert_eq!(small, large);
    }

    #[test]
    fn unknowability_of_provable_statement_is_one() {
        let tiny = sys(TINY);
        let c = parse("c").unwrap();
        let (outcome, record) = unknowability_degree_traced(&tiny, &c, 10_000, 2, 4);
        match outcome {
            DegreeOutcome::Degree { n, ladder, .. } => {
                assert_eq!(n, 1);
                assert_eq!(ladder, vec![c.clone()]);
            }
            other => panic!("expected degree 1, got {other:?}"),
        }
        assert_eq!(record.facts.len(), 1);
        let expected = Statement::DegreeEq {
            code: encode_statement(&c).into_value(),
            degree: 0,
        };
        assert_eq!(record.facts[0], expected);
    }

    #[test]
    fn unknowability_with_independence_fact_is_two() {
        let ind = sys(TINY_IND);
        let e = parse("e").unwrap();
        let (outcome, record) = unknowability_degree_traced(&ind, &e, 10_000, 2, 4);
        match outcome {
            DegreeOutcome::Degree { n, ladder, .. } => {
                assert_eq!(n, 2);
                assert_eq!(ladder.len(), 2);
                assert_eq!(ladder[1].to_string(), "deg(5)=1");
            }
            other => panic!("expected degree 2, got {other:?}"),
        }
        // Two reflections: the degree of e, then the degree of that fact.
        assert_eq!(record.facts.len(), 2);
        assert_eq!(record.facts[0].to_string(), "deg(5)=1");
    }

    #[test]
    fn undecidable_subject_exhausts() {
        let tiny = sys(TINY);
        let e = parse("e").unwrap();
        let outcome = unknowability_degree(&tiny, &e, 300, 2, 4);
        assert!(outcome.degree().is_none());
    }

    #[test]
    #[should_panic(expected = "at least one iteration")]
    fn zero_iteration_budget_panics() {
        let tiny = sys(TINY);
        let e = parse("e").unwrap();
        unknowability_degree(&tiny, &e, 100, 2, 0);
    }

    #[test]
    fn ladder_codes_decode_back() {
        let ind = sys(TINY_IND);
        let e = parse("e").unwrap();
        let outcome = reachability_degree(&ind, &e, 10_000, 2);
        for (i, rung) in outcome.ladder().iter().enumerate().skip(1) {
            match rung {
                Statement::Unprovable { code } => {
                    assert_eq!(
                        decode_statement_value(code).as_ref(),
                        Some(&outcome.ladder()[i - 1])
                    );
                }
                other => panic!("ladder rung {i} is not a mark: {other}"),
            }
        }
    }

    #[test]
    fn degree_target_query_decides_on_decidable_corpora() {
        let ind = sys(TINY_IND);
        for text in ["a", "c", "d", "e"] {
            let s = parse(text).unwrap();
            let outcome = prove_degree_target(&ind, &s, 10_000, 2, 4);
            assert!(outcome.is_decided(), "degree query for {text}");
        }
    }

    #[test]
    fn degree_target_query_exhausts_on_unknown_subject() {
        let tiny = sys(TINY);
        let e = parse("e").unwrap();
        let outcome = prove_degree_target(&tiny, &e, 300, 2, 4);
        assert!(!outcome.is_decided());
    }
}
