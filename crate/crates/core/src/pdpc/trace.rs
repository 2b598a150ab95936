use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::Vertex;

/// One counting inequality evaluated while choosing a connector vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub label: String,
    /// Size of the forbidden set actually met.
    pub used: usize,
    /// Largest size the construction allows.
    pub bound: usize,
    /// Candidates of the requested color in the layer.
    pub available: usize,
}

impl BoundCheck {
    pub fn holds(&self) -> bool {
        self.used <= self.bound && self.used < self.available
    }
}

/// A named vertex chosen during a construction, with its cross partner when
/// it has one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Connector {
    pub role: String,
    pub vertex: Vertex,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partner: Option<Vertex>,
}

/// Recursion tree of a solve: one node per sub-weld the solver covered.
///
/// `pair_perm[i]` is the caller's index of canonical pair `i`; `swapped`
/// means sources and targets traded roles. Both are undone before a node
/// returns its paths.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveTrace {
    pub rank: usize,
    /// First vertex id of the sub-weld.
    pub region_start: Vertex,
    pub pairs: usize,
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branch: Option<String>,
    #[serde(default, skip_serializing_if = "is_false")]
    pub swapped: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub pair_perm: Vec<usize>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub layer_map: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub connectors: Vec<Connector>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bounds: Vec<BoundCheck>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<SolveTrace>,
}

fn is_false(b: &bool) -> bool {
    !*b
}

impl SolveTrace {
    pub fn new(rank: usize, region_start: Vertex, pairs: usize) -> Self {
        SolveTrace {
            rank,
            region_start,
            pairs,
            ..SolveTrace::default()
        }
    }

    /// Pre-order walk over the whole tree.
    pub fn nodes(&self) -> Vec<&SolveTrace> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(node) = stack.pop() {
            out.push(node);
            stack.extend(node.children.iter().rev());
        }
        out
    }

    pub fn all_bounds(&self) -> impl Iterator<Item = &BoundCheck> {
        self.nodes().into_iter().flat_map(|n| n.bounds.iter())
    }

    /// Label plus branch, e.g. `induction:6/6B.1`.
    pub fn full_label(&self) -> String {
        match &self.branch {
            Some(b) => format!("{}/{b}", self.label),
            None => self.label.clone(),
        }
    }

    pub(crate) fn connector(&mut self, role: impl Into<String>, vertex: Vertex, partner: Option<Vertex>) {
        self.connectors.push(Connector {
            role: role.into(),
            vertex,
            partner,
        });
    }

    pub(crate) fn layer(&mut self, role: &str, layer: usize) {
        self.layer_map.insert(role.to_string(), layer);
    }

    pub(crate) fn branch(&mut self, b: &str) {
        self.branch = Some(b.to_string());
    }
}
