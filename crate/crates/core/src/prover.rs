//! Forward-chaining saturation prover with exact step metering.
//!
//! The prover keeps two banks — `ts` for statements proved true, `fs` for
//! statements proved false — a FIFO frontier of statements awaiting
//! expansion, and the deduplicated deduction digraph. A statement enters
//! `fs` exactly when its negation enters `ts`, so the banks stay mirror
//! images and a contradiction shows up as a statement present in both.
//!
//! Execution is broken into micro steps so callers can interleave the
//! prover with other computations at single-step granularity. One micro
//! step is one primitive operation and costs exactly one meter step:
//!
//! * a frontier pop,
//! * a rule application attempt (one implication applied to one proved
//!   antecedent, or one antecedent lookup for a popped implication),
//! * a bank query for the prepared check statement.
//!
//! After each expansion the prepared check is queried against both banks,
//! hint bank first. A run with no query (saturation/probe mode) skips the
//! queries and reports when the closure is complete; a query run never
//! stops on its own — once saturated it keeps re-querying, burning fuel,
//! which is what the bounded outcome contract requires.

use crate::graph::{DeductionGraph, EdgeTag, NodeOrigin};
use crate::proof::{Justification, Proof, ProofStep};
use crate::statement::{negate, Statement};
use crate::system::{ConsistencyReport, FormalSystem};
use std::collections::{HashMap, HashSet, VecDeque};

/// Exact count of primitive prover operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize)]
pub struct TraceMeter {
    pub steps: u64,
}

/// Which bank the prepared check is queried against first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum QueryHint {
    #[default]
    Positive,
    Negative,
}

/// Result of the prepare hook: the statement to look for, plus the steps
/// the hook itself consumed (charged against the caller's fuel).
#[derive(Debug, Clone)]
pub enum PrepareResult {
    Ready { check: Statement, cost: u64 },
    Diverged { cost: u64 },
}

/// The prepare hook maps the query statement to the statement actually
/// searched for. It runs once per query run and is memoized.
pub type PrepareFn<'a> = Box<dyn FnMut(&FormalSystem, &Statement) -> PrepareResult + 'a>;

/// The default hook: search for the query itself, at no cost.
pub fn identity_prepare<'a>() -> PrepareFn<'a> {
    Box::new(|_, s| PrepareResult::Ready {
        check: s.clone(),
        cost: 0,
    })
}

#[derive(Debug, Clone)]
pub enum ProverOutcome {
    Decided {
        d_prime: Statement,
        proof: Proof,
        meter: TraceMeter,
    },
    Exhausted {
        meter: TraceMeter,
    },
}

impl ProverOutcome {
    pub fn is_decided(&self) -> bool {
        matches!(self, ProverOutcome::Decided { .. })
    }

    pub fn meter(&self) -> TraceMeter {
        match self {
            ProverOutcome::Decided { meter, .. } => *meter,
            ProverOutcome::Exhausted { meter } => *meter,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("outcome is not a decision")]
pub struct NotDecided;

/// Borrow the proof out of a decided outcome.
pub fn extract_chain(outcome: &ProverOutcome) -> Result<&Proof, NotDecided> {
    match outcome {
        ProverOutcome::Decided { proof, .. } => Ok(proof),
        ProverOutcome::Exhausted { .. } => Err(NotDecided),
    }
}

/// How a bank entry was derived. Premises are stored by statement; the
/// justified chain is linearized on demand.
#[derive(Debug, Clone)]
enum Derivation {
    Axiom(usize),
    Truth,
    Mp {
        antecedent: Statement,
        implication: Statement,
    },
}

/// Mutable saturation state: banks, frontier, digraph, bookkeeping.
#[derive(Debug, Default)]
pub struct ProverState {
    ts: HashMap<Statement, Derivation>,
    fs: HashSet<Statement>,
    impl_index: HashMap<Statement, Vec<Statement>>,
    frontier: VecDeque<Statement>,
    graph: DeductionGraph,
    frontier_pushes: u64,
    first_contradiction: Option<Statement>,
}

impl ProverState {
    pub fn ts_len(&self) -> usize {
        self.ts.len()
    }

    pub fn proved_true(&self, s: &Statement) -> bool {
        self.ts.contains_key(s)
    }

    pub fn proved_false(&self, s: &Statement) -> bool {
        self.fs.contains(s)
    }

    pub fn frontier_pushes(&self) -> u64 {
        self.frontier_pushes
    }

    /// First statement observed in both banks, in positive form. `None`
    /// on every run over a corpus whose reachable closure is clash-free.
    pub fn first_contradiction(&self) -> Option<&Statement> {
        self.first_contradiction.as_ref()
    }

    fn positive_form(t: &Statement) -> Statement {
        match t {
            Statement::Not(x) => (**x).clone(),
            Statement::ConstFalse => Statement::ConstTrue,
            other => other.clone(),
        }
    }

    /// Insert a statement with its derivation. Returns true when new.
    /// Re-derivations of an existing node only contribute graph edges.
    fn insert(&mut self, stmt: Statement, derivation: Derivation) -> bool {
        if self.ts.contains_key(&stmt) {
            if let Derivation::Mp {
                antecedent,
                implication,
            } = &derivation
            {
                let to = self.graph.node_id(&stmt).expect("bank statement has node");
                let from_a = self.graph.node_id(antecedent).expect("premise has node");
                let from_i = self.graph.node_id(implication).expect("premise has node");
                self.graph.insert_edge(from_a, to, EdgeTag::MpAntecedent);
                self.graph.insert_edge(from_i, to, EdgeTag::MpImplication);
            }
            return false;
        }
        let origin = match &derivation {
            Derivation::Axiom(k) => NodeOrigin::Axiom(*k),
            Derivation::Truth => NodeOrigin::TruthConst,
            Derivation::Mp { .. } => NodeOrigin::Derived,
        };
        let (to, _) = self.graph.insert_node(&stmt, origin);
        if let Derivation::Mp {
            antecedent,
            implication,
        } = &derivation
        {
            let from_a = self.graph.node_id(antecedent).expect("premise has node");
            let from_i = self.graph.node_id(implication).expect("premise has node");
            self.graph.insert_edge(from_a, to, EdgeTag::MpAntecedent);
            self.graph.insert_edge(from_i, to, EdgeTag::MpImplication);
        }
        if self.fs.contains(&stmt) && self.first_contradiction.is_none() {
            self.first_contradiction = Some(Self::positive_form(&stmt));
        }
        self.fs.insert(negate(&stmt));
        if let Statement::Implies(lhs, _) = &stmt {
            self.impl_index
                .entry((**lhs).clone())
                .or_default()
                .push(stmt.clone());
        }
        self.ts.insert(stmt.clone(), derivation);
        self.frontier.push_back(stmt);
        self.frontier_pushes += 1;
        true
    }

    /// Linearize the derivation of `stmt` into a justified chain:
    /// post-order over the premise DAG, each statement emitted once.
    fn chain_for(&self, stmt: &Statement) -> Vec<ProofStep> {
        enum Frame {
            Enter(Statement),
            Emit(Statement),
        }
        let mut steps: Vec<ProofStep> = Vec::new();
        let mut index_of: HashMap<Statement, usize> = HashMap::new();
        let mut scheduled: HashSet<Statement> = HashSet::new();
        let mut stack = vec![Frame::Enter(stmt.clone())];
        while let Some(frame) = stack.pop() {
            match frame {
                Frame::Enter(s) => {
                    if index_of.contains_key(&s) || !scheduled.insert(s.clone()) {
                        continue;
                    }
                    stack.push(Frame::Emit(s.clone()));
                    if let Some(Derivation::Mp {
                        antecedent,
                        implication,
                    }) = self.ts.get(&s)
                    {
                        stack.push(Frame::Enter(implication.clone()));
                        stack.push(Frame::Enter(antecedent.clone()));
                    }
                }
                Frame::Emit(s) => {
                    if index_of.contains_key(&s) {
                        continue;
                    }
                    let derivation = self.ts.get(&s).expect("chain statement is in bank");
                    let justification = match derivation {
                        Derivation::Axiom(k) => Justification::Axiom(*k),
                        Derivation::Truth => Justification::Truth,
                        Derivation::Mp {
                            antecedent,
                            implication,
                        } => Justification::Mp {
                            antecedent: index_of[antecedent],
                            implication: index_of[implication],
                        },
                    };
                    index_of.insert(s.clone(), steps.len());
                    steps.push(ProofStep {
                        statement: s,
                        justification,
                    });
                }
            }
        }
        steps
    }
}

#[derive(Debug)]
enum Pending {
    /// The popped statement is an implication; check whether its
    /// antecedent is already proved and fire if so.
    AntecedentLookup {
        antecedent: Statement,
        implication: Statement,
        consequent: Statement,
    },
    /// An indexed implication whose antecedent is the popped statement.
    Apply {
        antecedent: Statement,
        implication: Statement,
        consequent: Statement,
    },
}

#[derive(Debug)]
enum Phase {
    CheckFirst,
    CheckSecond,
    Pop,
    Expand { pending: VecDeque<Pending> },
}

/// What a micro step observed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepEvent {
    Progress,
    /// The prepared check was found in a bank; the decision is stored on
    /// the run.
    Decided,
    /// The prepare hook gave up; a bounded caller should exhaust.
    HookDiverged,
    /// Saturation-mode only: frontier empty, closure complete.
    Fixpoint,
}

/// A single prover execution over a borrowed immutable system.
pub struct ProverRun<'a> {
    system: &'a FormalSystem,
    state: ProverState,
    target: Option<Statement>,
    hint: QueryHint,
    hook: PrepareFn<'a>,
    check: Option<Statement>,
    phase: Phase,
    meter: TraceMeter,
    decision: Option<(Statement, Proof)>,
}

impl<'a> ProverRun<'a> {
    fn init_state(system: &FormalSystem) -> ProverState {
        let mut state = ProverState::default();
        for (k, ax) in system.axioms.iter().enumerate() {
            state.insert(ax.clone(), Derivation::Axiom(k));
        }
        state.insert(Statement::ConstTrue, Derivation::Truth);
        // The false constant gets a root node but no bank entry: it is
        // refuted from the start (negation of T), never proved.
        state
            .graph
            .insert_node(&Statement::ConstFalse, NodeOrigin::FalseConst);
        state
    }

    /// A query run: saturate and look for `prepare(target)` in the banks.
    pub fn query(
        system: &'a FormalSystem,
        target: Statement,
        hint: QueryHint,
        hook: PrepareFn<'a>,
    ) -> Self {
        ProverRun {
            system,
            state: Self::init_state(system),
            target: Some(target),
            hint,
            hook,
            check: None,
            phase: Phase::CheckFirst,
            meter: TraceMeter::default(),
            decision: None,
        }
    }

    /// A saturation run: no query, expansion only. Used by the
    /// consistency probe, the graph exporter and the dedup benchmarks.
    pub fn saturation(system: &'a FormalSystem) -> Self {
        ProverRun {
            system,
            state: Self::init_state(system),
            target: None,
            hint: QueryHint::Positive,
            hook: identity_prepare(),
            check: None,
            phase: Phase::Pop,
            meter: TraceMeter::default(),
            decision: None,
        }
    }

    pub fn meter(&self) -> TraceMeter {
        self.meter
    }

    pub fn state(&self) -> &ProverState {
        &self.state
    }

    /// Immutable copy of the deduction digraph.
    pub fn graph_snapshot(&self) -> DeductionGraph {
        self.state.graph.clone()
    }

    pub fn take_decision(&mut self) -> Option<(Statement, Proof)> {
        self.decision.take()
    }

    fn after_expand(&self) -> Phase {
        if self.target.is_some() {
            Phase::CheckFirst
        } else {
            Phase::Pop
        }
    }

    fn query_bank(&mut self, positive: bool) -> bool {
        let check = self.check.as_ref().expect("check prepared");
        if positive {
            if self.state.ts.contains_key(check) {
                let proof = Proof {
                    target: check.clone(),
                    d_prime: check.clone(),
                    steps: self.state.chain_for(check),
                };
                self.decision = Some((check.clone(), proof));
                return true;
            }
        } else {
            // fs membership means the negation is proved; the stored
            // chain concludes `!check`.
            if self.state.fs.contains(check) {
                let refutation = negate(check);
                let proof = Proof {
                    target: check.clone(),
                    d_prime: refutation.clone(),
                    steps: self.state.chain_for(&refutation),
                };
                self.decision = Some((refutation, proof));
                return true;
            }
        }
        false
    }

    /// Perform one primitive operation. Consumes exactly one meter step,
    /// plus the hook's declared cost the first time the check statement
    /// is prepared.
    pub fn micro_step(&mut self) -> StepEvent {
        loop {
            match &mut self.phase {
                Phase::CheckFirst => {
                    if self.check.is_none() {
                        let target = self.target.clone().expect("query run has target");
                        match (self.hook)(self.system, &target) {
                            PrepareResult::Ready { check, cost } => {
                                self.meter.steps += cost;
                                self.check = Some(check);
                            }
                            PrepareResult::Diverged { cost } => {
                                self.meter.steps += cost;
                                return StepEvent::HookDiverged;
                            }
                        }
                    }
                    self.meter.steps += 1;
                    let positive_first = self.hint == QueryHint::Positive;
                    if self.query_bank(positive_first) {
                        return StepEvent::Decided;
                    }
                    self.phase = Phase::CheckSecond;
                    return StepEvent::Progress;
                }
                Phase::CheckSecond => {
                    self.meter.steps += 1;
                    let positive_first = self.hint == QueryHint::Positive;
                    if self.query_bank(!positive_first) {
                        return StepEvent::Decided;
                    }
                    self.phase = Phase::Pop;
                    return StepEvent::Progress;
                }
                Phase::Pop => {
                    let Some(g) = self.state.frontier.pop_front() else {
                        if self.target.is_none() {
                            return StepEvent::Fixpoint;
                        }
                        // Saturated but undecided: keep re-checking. The
                        // query steps burn the remaining fuel.
                        self.phase = Phase::CheckFirst;
                        continue;
                    };
                    self.meter.steps += 1;
                    let mut pending = VecDeque::new();
                    if let Statement::Implies(lhs, rhs) = &g {
                        pending.push_back(Pending::AntecedentLookup {
                            antecedent: (**lhs).clone(),
                            implication: g.clone(),
                            consequent: (**rhs).clone(),
                        });
                    }
                    if let Some(impls) = self.state.impl_index.get(&g) {
                        for implication in impls.clone() {
                            let Statement::Implies(_, rhs) = &implication else {
                                unreachable!("index holds implications");
                            };
                            pending.push_back(Pending::Apply {
                                antecedent: g.clone(),
                                implication: implication.clone(),
                                consequent: (**rhs).clone(),
                            });
                        }
                    }
                    self.phase = if pending.is_empty() {
                        self.after_expand()
                    } else {
                        Phase::Expand { pending }
                    };
                    return StepEvent::Progress;
                }
                Phase::Expand { pending } => {
                    let item = pending.pop_front().expect("expand phase has work");
                    let done = pending.is_empty();
                    self.meter.steps += 1;
                    match item {
                        Pending::AntecedentLookup {
                            antecedent,
                            implication,
                            consequent,
                        } => {
                            if self.state.ts.contains_key(&antecedent) {
                                self.state.insert(
                                    consequent,
                                    Derivation::Mp {
                                        antecedent,
                                        implication,
                                    },
                                );
                            }
                        }
                        Pending::Apply {
                            antecedent,
                            implication,
                            consequent,
                        } => {
                            self.state.insert(
                                consequent,
                                Derivation::Mp {
                                    antecedent,
                                    implication,
                                },
                            );
                        }
                    }
                    if done {
                        self.phase = self.after_expand();
                    }
                    return StepEvent::Progress;
                }
            }
        }
    }

    /// Pop one frontier statement and run its whole expansion. Only
    /// meaningful on saturation runs; panics if the frontier is empty.
    pub fn saturate_step(&mut self) {
        assert!(
            !self.state.frontier.is_empty(),
            "saturate_step requires a non-empty frontier"
        );
        self.micro_step();
        while matches!(self.phase, Phase::Expand { .. }) {
            self.micro_step();
        }
    }

    /// Advance by exactly one metered step, driving through any internal
    /// phase transitions. Returns the decision when one lands.
    pub fn grant_step(&mut self) -> Option<StepEvent> {
        let before = self.meter.steps;
        loop {
            let event = self.micro_step();
            match event {
                StepEvent::Decided | StepEvent::HookDiverged | StepEvent::Fixpoint => {
                    return Some(event)
                }
                StepEvent::Progress => {
                    if self.meter.steps > before {
                        return None;
                    }
                }
            }
        }
    }
}

/// Run the prover to a decision or to fuel exhaustion.
///
/// The hint only orders the two bank queries. `Exhausted` always carries
/// `meter.steps == fuel`; a hook that diverges or overruns the budget
/// exhausts the run (without a check statement the loop would spin the
/// remaining fuel away regardless).
pub fn prove(
    system: &FormalSystem,
    target: &Statement,
    hint: QueryHint,
    fuel: u64,
    hook: PrepareFn<'_>,
) -> ProverOutcome {
    assert!(fuel >= 1, "prove needs fuel");
    let mut run = ProverRun::query(system, target.clone(), hint, hook);
    loop {
        if run.meter.steps >= fuel {
            return ProverOutcome::Exhausted {
                meter: TraceMeter { steps: fuel },
            };
        }
        match run.micro_step() {
            StepEvent::Decided => {
                if run.meter.steps > fuel {
                    return ProverOutcome::Exhausted {
                        meter: TraceMeter { steps: fuel },
                    };
                }
                let (d_prime, proof) = run.take_decision().expect("decision stored");
                return ProverOutcome::Decided {
                    d_prime,
                    proof,
                    meter: run.meter,
                };
            }
            StepEvent::HookDiverged => {
                return ProverOutcome::Exhausted {
                    meter: TraceMeter { steps: fuel },
                }
            }
            StepEvent::Fixpoint => unreachable!("query runs do not fixpoint"),
            StepEvent::Progress => {}
        }
    }
}

/// [`prove`] with the identity hook.
pub fn prove_default(
    system: &FormalSystem,
    target: &Statement,
    hint: QueryHint,
    fuel: u64,
) -> ProverOutcome {
    prove(system, target, hint, fuel, identity_prepare())
}

/// Saturation-only contradiction search; backs
/// [`crate::system::bounded_consistency_probe`].
pub(crate) fn consistency_probe_impl(system: &FormalSystem, fuel: u64) -> ConsistencyReport {
    let mut run = ProverRun::saturation(system);
    let witness = |state: &ProverState, s: &Statement| {
        let refutation = negate(s);
        ConsistencyReport::ContradictionWitness {
            statement: s.clone(),
            proof_pos: Proof {
                target: s.clone(),
                d_prime: s.clone(),
                steps: state.chain_for(s),
            },
            proof_neg: Proof {
                target: refutation.clone(),
                d_prime: refutation.clone(),
                steps: state.chain_for(&refutation),
            },
        }
    };
    if let Some(s) = run.state.first_contradiction.clone() {
        return witness(&run.state, &s);
    }
    loop {
        if run.meter.steps >= fuel {
            return ConsistencyReport::NoContradictionFound { fuel_used: fuel };
        }
        match run.micro_step() {
            StepEvent::Fixpoint => {
                return ConsistencyReport::NoContradictionFound {
                    fuel_used: run.meter.steps,
                }
            }
            StepEvent::Progress => {
                if let Some(s) = run.state.first_contradiction.clone() {
                    return witness(&run.state, &s);
                }
            }
            _ => unreachable!("saturation runs only progress or fixpoint"),
        }
    }
}

/// Saturate to closure (or until `max_steps`), returning the run for
/// inspection. Used by the graph exporter.
pub fn saturate_to_fixpoint(system: &FormalSystem, max_steps: u64) -> ProverRun<'_> {
    let mut run = ProverRun::saturation(system);
    while run.meter.steps < max_steps {
        if run.micro_step() == StepEvent::Fixpoint {
            break;
        }
    }
    run
}
