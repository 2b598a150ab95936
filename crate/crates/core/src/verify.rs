//! Independent checks: path cover validity and the structural hypotheses a
//! weld must satisfy before the solver will accept it.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::base::{certify_leaf, OracleConfig};
use crate::graph::{is_bipartite_properly_colored, is_equitable, AssembledGraph, Vertex};
use crate::weld::{assemble, Leaf, WeldTree};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Offending path, absent for whole-cover problems.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair_index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub position: Option<usize>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub accepted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<Violation>,
}

impl Verdict {
    fn accept() -> Self {
        Verdict {
            accepted: true,
            violation: None,
        }
    }

    fn reject(pair_index: Option<usize>, position: Option<usize>, reason: String) -> Self {
        Verdict {
            accepted: false,
            violation: Some(Violation {
                pair_index,
                position,
                reason,
            }),
        }
    }
}

/// Accepts iff path `i` runs from `s_i` to `t_i` along edges of `g` and the
/// paths partition the vertex set. Reports the first violation found.
pub fn verify_pdpc(g: &AssembledGraph, pairs: &[(Vertex, Vertex)], cover: &[Vec<Vertex>]) -> Verdict {
    if cover.len() != pairs.len() {
        return Verdict::reject(
            None,
            None,
            format!("{} paths for {} pairs", cover.len(), pairs.len()),
        );
    }
    let n = g.num_vertices();
    let mut seen = vec![false; n];
    for (i, (path, &(s, t))) in cover.iter().zip(pairs).enumerate() {
        let (Some(&first), Some(&last)) = (path.first(), path.last()) else {
            return Verdict::reject(Some(i), None, "empty path".into());
        };
        if first != s {
            return Verdict::reject(Some(i), Some(0), format!("path starts at {first}, expected {s}"));
        }
        if last != t {
            return Verdict::reject(
                Some(i),
                Some(path.len() - 1),
                format!("path ends at {last}, expected {t}"),
            );
        }
        for (pos, &v) in path.iter().enumerate() {
            if v >= n {
                return Verdict::reject(Some(i), Some(pos), format!("vertex {v} out of range"));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Verdict::reject(Some(i), Some(pos), format!("vertex {v} visited twice"));
            }
            if pos > 0 && !g.is_edge(path[pos - 1], v) {
                return Verdict::reject(
                    Some(i),
                    Some(pos),
                    format!("{} -- {v} is not an edge", path[pos - 1]),
                );
            }
        }
    }
    if let Some(v) = seen.iter().position(|&x| !x) {
        let missing = seen.iter().filter(|&&x| !x).count();
        return Verdict::reject(
            None,
            None,
            format!("{missing} vertices uncovered, first is {v}"),
        );
    }
    Verdict::accept()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisCheck {
    /// JSON-style path of the node the check applies to.
    pub node: String,
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub checks: Vec<HypothesisCheck>,
}

impl HypothesisReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &HypothesisCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, node: &str, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(HypothesisCheck {
            node: node.to_string(),
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
    }
}

impl std::fmt::Display for HypothesisReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            write!(f, "{mark} {} {}", c.node, c.name)?;
            if !c.detail.is_empty() {
                write!(f, ": {}", c.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Reports, per node, layer count against rank, equal child sizes, leaf
/// parity and certification, then bipartiteness and equitability of the
/// assembled graph. Identical leaves are certified once.
pub fn check_theorem_hypotheses(tree: &WeldTree, config: &OracleConfig) -> HypothesisReport {
    let mut report = HypothesisReport::default();
    let mut certified: HashMap<&Leaf, Result<bool, String>> = HashMap::new();
    walk(tree, "$", config, &mut report, &mut certified);
    match assemble(tree) {
        Ok(g) => {
            let bip = is_bipartite_properly_colored(&g);
            report.push("$", "bipartite", bip, "");
            if tree.rank() >= 2 {
                let c = g.coloring();
                report.push(
                    "$",
                    "equitable",
                    is_equitable(&g),
                    format!("{} black, {} white", c.black_count, c.white_count),
                );
            }
        }
        Err(e) => report.push("$", "assembly", false, e.to_string()),
    }
    report
}

fn walk<'t>(
    tree: &'t WeldTree,
    path: &str,
    config: &OracleConfig,
    report: &mut HypothesisReport,
    certified: &mut HashMap<&'t Leaf, Result<bool, String>>,
) {
    match tree {
        WeldTree::Leaf(leaf) => {
            let n = leaf.colors.len();
            report.push(
                path,
                "leaf_parity",
                n == 1 || (n > 0 && n % 2 == 0),
                format!("{n} vertices"),
            );
            let result = certified.entry(leaf).or_insert_with(|| {
                leaf.to_graph()
                    .map_err(|e| e.to_string())
                    .and_then(|g| certify_leaf(&g, leaf.mode, config).map_err(|e| e.to_string()))
            });
            match result {
                Ok(ok) => report.push(path, "leaf_certified", *ok, ""),
                Err(e) => report.push(path, "leaf_certified", false, e.clone()),
            }
        }
        WeldTree::Node(node) => {
            let layers = node.children.len();
            report.push(
                path,
                "layer_count",
                layers >= node.rank,
                format!("{layers} layers at rank {}", node.rank),
            );
            let size = node.children.first().map(WeldTree::num_vertices).unwrap_or(0);
            let equal = node.children.iter().all(|c| c.num_vertices() == size);
            report.push(path, "equal_sizes", equal, "");
            let ranks = node.children.iter().all(|c| c.rank() + 1 == node.rank);
            report.push(path, "child_rank", ranks, "");
            for (i, child) in node.children.iter().enumerate() {
                walk(child, &format!("{path}.children[{i}]"), config, report, certified);
            }
        }
    }
}
