//! Naive reference semantics used as independent test oracles.
//!
//! Everything here is written for obviousness, not speed: plain
//! iterate-until-fixpoint over `BTreeSet`, no indexes, no sharing with the
//! prover's data structures. Tests compare the engine against these.

use crate::statement::{negate, Statement};
use crate::system::FormalSystem;
use std::collections::BTreeSet;

/// Deductive closure of the axioms (plus `T`) under ground modus ponens,
/// by repeated full passes until nothing new appears or `cap` statements
/// were derived.
pub fn closure(system: &FormalSystem, cap: usize) -> BTreeSet<Statement> {
    let mut proved: BTreeSet<Statement> = system.axioms.iter().cloned().collect();
    proved.insert(Statement::ConstTrue);
    loop {
        let mut fresh: Vec<Statement> = Vec::new();
        for stmt in &proved {
            if let Statement::Implies(lhs, rhs) = stmt {
                if proved.contains(lhs) && !proved.contains(rhs) {
                    fresh.push((**rhs).clone());
                }
            }
        }
        if fresh.is_empty() || proved.len() >= cap {
            return proved;
        }
        proved.extend(fresh);
    }
}

/// Statements refuted by the closure: everything whose negation is proved.
pub fn refuted(system: &FormalSystem, cap: usize) -> BTreeSet<Statement> {
    closure(system, cap).iter().map(negate).collect()
}

/// Whether the closure decides `s` in either polarity.
pub fn decides(system: &FormalSystem, s: &Statement, cap: usize) -> bool {
    let proved = closure(system, cap);
    proved.contains(s) || proved.contains(&negate(s))
}

/// First statement (in derivation-free set order) proved in both
/// polarities, if any; `None` means the closure is contradiction-free.
pub fn find_contradiction(system: &FormalSystem, cap: usize) -> Option<Statement> {
    let proved = closure(system, cap);
    proved
        .iter()
        .find(|s| proved.contains(&negate(s)))
        .cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::statement::parse;
    use crate::system::load_system;

    #[test]
    fn tiny_closure_matches_hand_computation() {
        let sys = load_system("axiom a\naxiom a => b\naxiom b => c\naxiom !d\n")
            .unwrap()
            .system;
        let closed = closure(&sys, 1000);
        for text in ["a", "b", "c", "!d", "a => b", "b => c", "T"] {
            assert!(closed.contains(&parse(text).unwrap()), "missing {text}");
        }
        assert_eq!(closed.len(), 7);
        assert!(find_contradiction(&sys, 1000).is_none());
    }

    #[test]
    fn direct_clash_detected() {
        let sys = load_system("axiom a\naxiom !a\n").unwrap().system;
        assert_eq!(find_contradiction(&sys, 100), Some(parse("a").unwrap()));
    }

    #[test]
    fn one_step_clash_detected() {
        let sys = load_system("axiom a\naxiom a => b\naxiom !b\n").unwrap().system;
        assert!(find_contradiction(&sys, 100).is_some());
    }
}
