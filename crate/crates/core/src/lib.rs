//! A deterministic reasoning engine: a fuel-bounded saturation prover
//! over an implicational statement language, a minimal trusted proof
//! kernel, unprovability-degree operators, and a dovetailed search that
//! races the prover against Gödel-enumerated candidate programs under
//! exact step accounting.
//!
//! All "time" is step counts — nothing here reads a clock — so every run
//! is reproducible byte for byte. Batch sweeps (benches, fuzz suites)
//! parallelize across independent runs behind the `parallel` feature;
//! see [`sweeps`].

pub mod degrees;
pub mod godel;
pub mod graph;
pub mod proof;
pub mod prover;
pub mod reference;
pub mod scenario;
pub mod search;
pub mod statement;
pub mod sweeps;
pub mod system;
pub mod vm;

pub use proof::{con_proof, verify, Justification, Proof, ProofStep, Verdict};
pub use prover::{prove, prove_default, ProverOutcome, ProverRun, QueryHint, TraceMeter};
pub use statement::{negate, parse, ParseError, Statement};
pub use system::{bounded_consistency_probe, load_system, ConsistencyReport, FormalSystem};
