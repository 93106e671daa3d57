//! Formal systems: an ordered, duplicate-free axiom list plus the fixed
//! implicational-chaining rule, loaded from the corpus file format.
//!
//! Corpus format (UTF-8 text, one directive per line):
//!
//! ```text
//! # comment
//! name <identifier>
//! fuel <natural>
//! axiom <statement>
//! ```
//!
//! Blank lines are ignored. A repeated axiom is a warning, not an error.

use crate::proof::Proof;
use crate::statement::{parse, ParseError, Statement};
use std::fmt;

/// Fuel used when a corpus does not pin one.
pub const DEFAULT_FUEL: u64 = 10_000;

/// The deduction rule family. Only ground modus ponens over implication
/// statements is supported: from `S` and `S => Q`, derive `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RuleMode {
    #[default]
    ImplicationalChaining,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalSystem {
    pub name: Option<String>,
    pub axioms: Vec<Statement>,
    pub rule_mode: RuleMode,
    pub fuel_default: u64,
}

impl FormalSystem {
    /// Build a system from statements, deduplicating under canonical
    /// equality with first-occurrence order preserved.
    pub fn with_axioms(name: Option<String>, axioms: impl IntoIterator<Item = Statement>) -> Self {
        let mut seen = std::collections::HashSet::new();
        let mut list = Vec::new();
        for ax in axioms {
            if seen.insert(ax.clone()) {
                list.push(ax);
            }
        }
        FormalSystem {
            name,
            axioms: list,
            rule_mode: RuleMode::ImplicationalChaining,
            fuel_default: DEFAULT_FUEL,
        }
    }

    /// Copy of this system with extra axioms appended (deduplicated).
    /// Degree computations use this to reflect facts they established.
    pub fn extended(&self, extra: impl IntoIterator<Item = Statement>) -> FormalSystem {
        let mut sys = FormalSystem::with_axioms(
            self.name.clone(),
            self.axioms.iter().cloned().chain(extra),
        );
        sys.fuel_default = self.fuel_default;
        sys
    }

    /// Reprint the system in the corpus file format.
    pub fn to_corpus_text(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            out.push_str(&format!("name {name}\n"));
        }
        out.push_str(&format!("fuel {}\n", self.fuel_default));
        for ax in &self.axioms {
            out.push_str(&format!("axiom {ax}\n"));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {reason}")]
pub struct LoadError {
    pub line: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadWarning {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for LoadWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

#[derive(Debug, Clone)]
pub struct LoadedSystem {
    pub system: FormalSystem,
    pub warnings: Vec<LoadWarning>,
}

fn statement_error(line: usize, err: &ParseError) -> LoadError {
    LoadError {
        line,
        reason: err.to_string(),
    }
}

/// Parse a corpus file.
pub fn load_system(text: &str) -> Result<LoadedSystem, LoadError> {
    let mut name = None;
    let mut fuel = DEFAULT_FUEL;
    let mut axioms: Vec<Statement> = Vec::new();
    let mut warnings = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("axiom ") {
            let stmt = parse(rest.trim()).map_err(|e| statement_error(lineno, &e))?;
            if axioms.contains(&stmt) {
                warnings.push(LoadWarning {
                    line: lineno,
                    message: format!("duplicate axiom `{stmt}` ignored"),
                });
            } else {
                axioms.push(stmt);
            }
        } else if let Some(rest) = line.strip_prefix("name ") {
            let ident = rest.trim();
            if ident.is_empty()
                || !ident
                    .bytes()
                    .all(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || b == b'_')
            {
                return Err(LoadError {
                    line: lineno,
                    reason: format!("bad system name `{ident}`"),
                });
            }
            name = Some(ident.to_string());
        } else if let Some(rest) = line.strip_prefix("fuel ") {
            fuel = rest.trim().parse().map_err(|_| LoadError {
                line: lineno,
                reason: format!("bad fuel value `{}`", rest.trim()),
            })?;
        } else {
            return Err(LoadError {
                line: lineno,
                reason: format!("unknown directive `{line}`"),
            });
        }
    }

    let mut system = FormalSystem::with_axioms(name, axioms);
    system.fuel_default = fuel;
    Ok(LoadedSystem { system, warnings })
}

/// Outcome of the fuel-bounded contradiction probe. Global consistency is
/// undecidable; this reports what a bounded saturation run could find.
#[derive(Debug, Clone)]
pub enum ConsistencyReport {
    NoContradictionFound { fuel_used: u64 },
    ContradictionWitness {
        statement: Statement,
        proof_pos: Proof,
        proof_neg: Proof,
    },
}

impl ConsistencyReport {
    pub fn is_consistent_so_far(&self) -> bool {
        matches!(self, ConsistencyReport::NoContradictionFound { .. })
    }
}

/// Saturate for up to `fuel` steps looking for a statement derived in both
/// polarities. Exhaustion is an outcome, not an error: reaching the
/// closure or the fuel limit without a clash reports `NoContradictionFound`
/// with the steps actually spent.
pub fn bounded_consistency_probe(system: &FormalSystem, fuel: u64) -> ConsistencyReport {
    assert!(fuel >= 1, "probe needs fuel");
    crate::prover::consistency_probe_impl(system, fuel)
}
