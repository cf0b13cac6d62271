use std::collections::BTreeSet;
use std::fmt::Debug;
use std::hash::Hash;

use lbg_core::{CoreError, Symbol};
use lbg_machine::explore::SILENT_CAP;
use lbg_machine::{external_states, Configuration, MachineDescription, MachineError, Runner};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TgraphError {
    #[error("{0} is not an external vertex")]
    NotExternal(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("bad final pattern: {0}")]
    BadPattern(String),
    #[error(transparent)]
    Machine(#[from] MachineError),
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl TgraphError {
    pub fn is_size_exceeded(&self) -> bool {
        matches!(
            self,
            TgraphError::Core(CoreError::SizeExceeded { .. })
                | TgraphError::Machine(MachineError::Core(CoreError::SizeExceeded { .. }))
        )
    }
}

/// Which configurations count as vertices of the transition graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ExternalityPolicy {
    /// External iff the control state has no silent rule.
    State,
    /// External iff no silent rule applies to the configuration.
    #[default]
    Configuration,
}

/// A graph whose edges are letters or ε, with a notion of external vertex.
pub trait ConfigurationGraph {
    type Vertex: Clone + Eq + Hash + Ord + Debug;

    /// All outgoing moves; `None` labels silent moves.
    fn moves(&self, v: &Self::Vertex) -> Result<Vec<(Option<Symbol>, Self::Vertex)>, TgraphError>;

    fn is_external(&self, v: &Self::Vertex) -> bool;

    fn name(&self, v: &Self::Vertex) -> String;

    /// Bound on vertices visited by one silent search.
    fn silent_cap(&self) -> usize {
        SILENT_CAP
    }
}

/// The configuration graph of a labeled machine.
pub struct MachineGraph<'m> {
    pub runner: Runner<'m>,
    pub policy: ExternalityPolicy,
    external: BTreeSet<Symbol>,
}

impl<'m> MachineGraph<'m> {
    pub fn new(machine: &'m MachineDescription, policy: ExternalityPolicy) -> MachineGraph<'m> {
        MachineGraph { runner: Runner::new(machine), policy, external: external_states(machine) }
    }

    pub fn machine(&self) -> &MachineDescription {
        self.runner.machine
    }

    pub fn initial(&self) -> Configuration {
        Configuration::initial_labeled(self.runner.machine.initial)
    }

    /// Parses a configuration in inline notation using this machine's
    /// state names.
    pub fn parse(&self, text: &str) -> Result<Configuration, TgraphError> {
        let states: Vec<Symbol> = self.runner.machine.states.iter().copied().collect();
        Configuration::parse(text, &states).ok_or_else(|| TgraphError::UnknownVertex(text.to_string()))
    }
}

impl ConfigurationGraph for MachineGraph<'_> {
    type Vertex = Configuration;

    fn moves(&self, v: &Configuration) -> Result<Vec<(Option<Symbol>, Configuration)>, TgraphError> {
        Ok(self.runner.step(v)?)
    }

    fn is_external(&self, v: &Configuration) -> bool {
        match self.policy {
            ExternalityPolicy::State => self.external.contains(&v.state),
            ExternalityPolicy::Configuration => !self.runner.has_epsilon_move(v),
        }
    }

    fn name(&self, v: &Configuration) -> String {
        v.to_string()
    }
}

/// A finite configuration graph given by its edge list. A vertex is
/// external when it has no silent out-edge.
#[derive(Clone, Debug, Default)]
pub struct ExplicitGraph {
    pub names: Vec<String>,
    pub edges: Vec<(usize, Option<Symbol>, usize)>,
}

impl ExplicitGraph {
    pub fn vertex(&mut self, name: &str) -> usize {
        match self.names.iter().position(|n| n == name) {
            Some(i) => i,
            None => {
                self.names.push(name.to_string());
                self.names.len() - 1
            }
        }
    }

    pub fn edge(&mut self, s: &str, label: Option<&str>, t: &str) -> &mut Self {
        let s = self.vertex(s);
        let t = self.vertex(t);
        self.edges.push((s, label.map(Symbol::new), t));
        self
    }

    pub fn find(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

impl ConfigurationGraph for ExplicitGraph {
    type Vertex = usize;

    fn moves(&self, v: &usize) -> Result<Vec<(Option<Symbol>, usize)>, TgraphError> {
        let mut out: Vec<(Option<Symbol>, usize)> =
            self.edges.iter().filter(|e| e.0 == *v).map(|e| (e.1, e.2)).collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    fn is_external(&self, v: &usize) -> bool {
        !self.edges.iter().any(|e| e.0 == *v && e.1.is_none())
    }

    fn name(&self, v: &usize) -> String {
        self.names[*v].clone()
    }
}

/// Five vertices: 1 -a-> 2 -ε-> 3 -ε-> 4 -b-> 5.
pub fn epsilon_chain_graph() -> ExplicitGraph {
    let mut g = ExplicitGraph::default();
    g.edge("1", Some("a"), "2").edge("2", None, "3").edge("3", None, "4").edge("4", Some("b"), "5");
    g
}
