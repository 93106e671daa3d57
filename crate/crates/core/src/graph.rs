//! Deduplicated deduction digraph.
//!
//! Nodes are canonical statements with stable insertion-order ids; two
//! syntactically equivalent derivations share one node. Every modus-ponens
//! application contributes a pair of edges (antecedent and implication
//! premise) into the derived node, including re-derivations of an existing
//! node, with exact duplicate edges collapsed.

use crate::statement::Statement;
use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeOrigin {
    Axiom(usize),
    TruthConst,
    FalseConst,
    Derived,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeTag {
    MpAntecedent,
    MpImplication,
}

impl EdgeTag {
    fn label(self) -> &'static str {
        match self {
            EdgeTag::MpAntecedent => "mp-antecedent",
            EdgeTag::MpImplication => "mp-implication",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphNode {
    pub statement: Statement,
    pub origin: NodeOrigin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GraphEdge {
    pub from: usize,
    pub to: usize,
    pub tag: EdgeTag,
}

#[derive(Debug, Clone, Default)]
pub struct DeductionGraph {
    nodes: Vec<GraphNode>,
    index: HashMap<Statement, usize>,
    edges: Vec<GraphEdge>,
    edge_set: HashSet<GraphEdge>,
}

impl DeductionGraph {
    pub fn new() -> Self {
        DeductionGraph::default()
    }

    pub fn nodes(&self) -> &[GraphNode] {
        &self.nodes
    }

    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn node_id(&self, stmt: &Statement) -> Option<usize> {
        self.index.get(stmt).copied()
    }

    /// Root node ids: axioms and the truth constants.
    pub fn roots(&self) -> Vec<usize> {
        self.nodes
            .iter()
            .enumerate()
            .filter(|(_, n)| !matches!(n.origin, NodeOrigin::Derived))
            .map(|(i, _)| i)
            .collect()
    }

    /// Insert a statement node if absent; returns (id, inserted).
    pub fn insert_node(&mut self, stmt: &Statement, origin: NodeOrigin) -> (usize, bool) {
        if let Some(&id) = self.index.get(stmt) {
            return (id, false);
        }
        let id = self.nodes.len();
        self.nodes.push(GraphNode {
            statement: stmt.clone(),
            origin,
        });
        self.index.insert(stmt.clone(), id);
        (id, true)
    }

    pub fn insert_edge(&mut self, from: usize, to: usize, tag: EdgeTag) {
        let edge = GraphEdge { from, to, tag };
        if self.edge_set.insert(edge) {
            self.edges.push(edge);
        }
    }

    /// DOT rendering, nodes labeled by statement text and edges by
    /// justification tag. Node and edge order is insertion order, so the
    /// output is byte-stable across runs.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph deductions {\n");
        for (i, node) in self.nodes.iter().enumerate() {
            let shape = match node.origin {
                NodeOrigin::Derived => "ellipse",
                _ => "box",
            };
            let _ = writeln!(out, "  n{i} [label=\"{}\" shape={shape}];", node.statement);
        }
        for edge in &self.edges {
            let _ = writeln!(
                out,
                "  n{} -> n{} [label=\"{}\"];",
                edge.from,
                edge.to,
                edge.tag.label()
            );
        }
        out.push_str("}\n");
        out
    }

    /// One JSON record per node, with incoming edges inlined.
    pub fn to_json_lines(&self) -> String {
        let mut incoming: Vec<Vec<(usize, EdgeTag)>> = vec![Vec::new(); self.nodes.len()];
        for edge in &self.edges {
            incoming[edge.to].push((edge.from, edge.tag));
        }
        let mut out = String::new();
        for (i, node) in self.nodes.iter().enumerate() {
            let origin = match node.origin {
                NodeOrigin::Axiom(k) => format!("\"axiom({k})\""),
                NodeOrigin::TruthConst => "\"truth\"".to_string(),
                NodeOrigin::FalseConst => "\"false\"".to_string(),
                NodeOrigin::Derived => "\"derived\"".to_string(),
            };
            let inputs: Vec<String> = incoming[i]
                .iter()
                .map(|(from, tag)| format!("{{\"from\":{from},\"tag\":\"{}\"}}", tag.label()))
                .collect();
            let _ = writeln!(
                out,
                "{{\"id\":{i},\"statement\":\"{}\",\"origin\":{origin},\"in\":[{}]}}",
                node.statement,
                inputs.join(",")
            );
        }
        out
    }
}
