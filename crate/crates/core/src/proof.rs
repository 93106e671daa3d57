//! The trusted proof checker.
//!
//! This module is the small verification core: a proof is a justified step
//! list, and [`verify`] re-checks every justification against the axiom
//! list with no help from the prover that built it. The serialization
//! here is the wire format candidate programs must emit and the CLI
//! prints: one step per line,
//!
//! ```text
//! <index>: <statement> ; <justification>
//! ```
//!
//! with justifications `axiom(<k>)`, `mp(<i>,<j>)` and `truth`.

use crate::statement::{negate, parse, Statement};
use crate::system::FormalSystem;
use std::fmt;

/// How a proof step is licensed.
///
/// `Mp { antecedent: i, implication: j }` requires step `j` to be the
/// implication from step `i`'s statement to this step's statement. `Truth`
/// licenses the constant `T` only; it is the one logical axiom every
/// system carries implicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Justification {
    Axiom(usize),
    Mp { antecedent: usize, implication: usize },
    Truth,
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::Axiom(k) => write!(f, "axiom({k})"),
            Justification::Mp {
                antecedent,
                implication,
            } => write!(f, "mp({antecedent},{implication})"),
            Justification::Truth => write!(f, "truth"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofStep {
    pub statement: Statement,
    pub justification: Justification,
}

/// A proof of `d_prime` for the query `target`, where `d_prime` is the
/// target or its negation and the final step states `d_prime`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Proof {
    pub target: Statement,
    pub d_prime: Statement,
    pub steps: Vec<ProofStep>,
}

impl Proof {
    /// Proof length `I`.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Chain view with the query statement prepended to the step
    /// statements. Display-only companion to the justified form.
    pub fn annotated_chain(&self) -> Vec<Statement> {
        let mut chain = Vec::with_capacity(self.steps.len() + 1);
        chain.push(self.target.clone());
        chain.extend(self.steps.iter().map(|s| s.statement.clone()));
        chain
    }

    /// Wire serialization of the step list.
    pub fn serialize_steps(&self) -> String {
        let mut out = String::new();
        for (i, step) in self.steps.iter().enumerate() {
            out.push_str(&format!("{i}: {} ; {}\n", step.statement, step.justification));
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyReason {
    BadAxiom,
    BadMp,
    WrongTarget,
    WrongTail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid {
        step_index: usize,
        reason: VerifyReason,
    },
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

fn invalid(step_index: usize, reason: VerifyReason) -> Verdict {
    Verdict::Invalid { step_index, reason }
}

/// Check a proof against a system and a query statement.
///
/// Valid iff the proof's target is the query, its tail states `d_prime`,
/// `d_prime` is the query or its negation, and every step is licensed by
/// its justification. Runs one pass over the steps; nothing is mutated.
pub fn verify(system: &FormalSystem, target: &Statement, proof: &Proof) -> Verdict {
    let last = proof.steps.len().saturating_sub(1);
    if proof.target != *target {
        return invalid(last, VerifyReason::WrongTarget);
    }
    if proof.d_prime != *target && proof.d_prime != negate(target) {
        return invalid(last, VerifyReason::WrongTarget);
    }
    match proof.steps.last() {
        None => return invalid(0, VerifyReason::WrongTail),
        Some(step) if step.statement != proof.d_prime => {
            return invalid(last, VerifyReason::WrongTail)
        }
        Some(_) => {}
    }
    for (i, step) in proof.steps.iter().enumerate() {
        match step.justification {
            Justification::Axiom(k) => {
                if system.axioms.get(k) != Some(&step.statement) {
                    return invalid(i, VerifyReason::BadAxiom);
                }
            }
            Justification::Truth => {
                if step.statement != Statement::ConstTrue {
                    return invalid(i, VerifyReason::BadAxiom);
                }
            }
            Justification::Mp {
                antecedent,
                implication,
            } => {
                if antecedent >= i || implication >= i {
                    return invalid(i, VerifyReason::BadMp);
                }
                let ok = match &proof.steps[implication].statement {
                    Statement::Implies(lhs, rhs) => {
                        **lhs == proof.steps[antecedent].statement && **rhs == step.statement
                    }
                    _ => false,
                };
                if !ok {
                    return invalid(i, VerifyReason::BadMp);
                }
            }
        }
    }
    Verdict::Valid
}

/// The search acceptance gate: the proof must verify against the claimed
/// decision and actually conclude it. `claimed` is the declared decision
/// statement (the query or its negation as announced by the candidate).
pub fn con_proof(system: &FormalSystem, claimed: &Statement, proof: &Proof) -> bool {
    verify(system, claimed, proof).is_valid() && proof.d_prime == *claimed
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProofParseError {
    #[error("line {line}: missing `{sep}` separator")]
    MissingSeparator { line: usize, sep: &'static str },
    #[error("line {line}: step index mismatch (expected {expected})")]
    IndexMismatch { line: usize, expected: usize },
    #[error("line {line}: bad statement: {source}")]
    Statement {
        line: usize,
        source: crate::statement::ParseError,
    },
    #[error("line {line}: bad justification `{text}`")]
    Justification { line: usize, text: String },
    #[error("empty proof")]
    Empty,
    #[error("proof is not valid utf-8")]
    NotUtf8,
}

fn parse_justification(text: &str) -> Option<Justification> {
    if text == "truth" {
        return Some(Justification::Truth);
    }
    if let Some(rest) = text.strip_prefix("axiom(").and_then(|r| r.strip_suffix(')')) {
        return rest.parse().ok().map(Justification::Axiom);
    }
    if let Some(rest) = text.strip_prefix("mp(").and_then(|r| r.strip_suffix(')')) {
        let (a, b) = rest.split_once(',')?;
        return Some(Justification::Mp {
            antecedent: a.parse().ok()?,
            implication: b.parse().ok()?,
        });
    }
    None
}

/// Parse the wire serialization back into a step list.
pub fn parse_proof_steps(text: &str) -> Result<Vec<ProofStep>, ProofParseError> {
    let mut steps = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        let (idx, rest) = line.split_once(": ").ok_or(ProofParseError::MissingSeparator {
            line: lineno,
            sep: ": ",
        })?;
        let expected = steps.len();
        if idx.parse::<usize>() != Ok(expected) {
            return Err(ProofParseError::IndexMismatch {
                line: lineno,
                expected,
            });
        }
        let (stmt_text, just_text) =
            rest.split_once(" ; ").ok_or(ProofParseError::MissingSeparator {
                line: lineno,
                sep: " ; ",
            })?;
        let statement = parse(stmt_text).map_err(|source| ProofParseError::Statement {
            line: lineno,
            source,
        })?;
        let justification =
            parse_justification(just_text).ok_or_else(|| ProofParseError::Justification {
                line: lineno,
                text: just_text.to_string(),
            })?;
        steps.push(ProofStep {
            statement,
            justification,
        });
    }
    if steps.is_empty() {
        return Err(ProofParseError::Empty);
    }
    Ok(steps)
}
