//! Constructive paired path covers for transposition-like welds.
//!
//! [`Solver`] recurses over the weld tree. A rank-`n` sub-weld with `n−1`
//! pairs is sorted into one of six layouts by where the endpoints sit, and
//! each layout is stitched together from covers of its layers. Fewer pairs
//! are padded up first; unused layers are threaded in last.

mod ctx;
mod dispatch;
mod extend;
mod induction;
mod path;
mod plan;
mod rank2;
mod rank3;
mod rank4;
mod reduce;
mod select;
mod stats;
mod trace;

use serde::Serialize;
use thiserror::Error;

use crate::base::{ham_path_between, OracleConfig, PairSpec, PathCover};
use crate::graph::{AssembledGraph, Color, Vertex};
use crate::verify::{check_theorem_hypotheses, HypothesisCheck, HypothesisReport};
use crate::weld::{assemble_regions, Region, WeldTree};

pub use extend::extend_through_empty_layers;
pub use reduce::reduce_pair_count;
pub use select::select_connector;
pub use stats::{LayerStats, SelectionState};
pub use trace::{BoundCheck, Connector, SolveTrace};

/// A single construction step that could not be carried out.
#[derive(Clone, Debug, Error, PartialEq, Eq, Serialize)]
pub enum StepError {
    #[error("counting bound broken at {label}: {used} forbidden, bound {bound}, {available} candidates")]
    Counting {
        label: String,
        used: usize,
        bound: usize,
        available: usize,
    },
    #[error("no admissible vertex at {label}: {forbidden} forbidden of {available}")]
    NoAdmissibleVertex {
        label: String,
        forbidden: usize,
        available: usize,
    },
    #[error("padding failed: {0}")]
    Padding(String),
    #[error("leaf has no Hamiltonian path from {s} to {t}")]
    LeafCertification { s: Vertex, t: Vertex },
    #[error("no layout matches: {0}")]
    Dispatch(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal error: {0}")]
    Internal(String),
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("weld does not meet the solver's hypotheses:\n{0}")]
    Hypothesis(Box<HypothesisReport>),
    #[error("invalid pairs: {0}")]
    Pairs(String),
    #[error("construction failed: {error}")]
    Construction {
        error: StepError,
        trace: Box<SolveTrace>,
    },
}

/// Solver bound to one assembled weld.
#[derive(Debug)]
pub struct Solver {
    graph: AssembledGraph,
    regions: Vec<Region>,
    leaves: Vec<Option<AssembledGraph>>,
    report: HypothesisReport,
}

impl Solver {
    pub fn new(tree: &WeldTree) -> Result<Self, SolveError> {
        Self::with_config(tree, &OracleConfig::default())
    }

    /// Checks the weld with `config` governing leaf certification.
    pub fn with_config(tree: &WeldTree, config: &OracleConfig) -> Result<Self, SolveError> {
        let mut report = check_theorem_hypotheses(tree, config);
        if tree.rank() < 2 {
            report.checks.push(HypothesisCheck {
                node: "$".into(),
                name: "rank".into(),
                passed: false,
                detail: format!("rank {} has no pairs to route", tree.rank()),
            });
        }
        if !report.passed() {
            return Err(SolveError::Hypothesis(Box::new(report)));
        }
        let (graph, regions) = assemble_regions(tree).map_err(|e| {
            let mut report = report.clone();
            report.checks.push(HypothesisCheck {
                node: "$".into(),
                name: "assembly".into(),
                passed: false,
                detail: e.to_string(),
            });
            SolveError::Hypothesis(Box::new(report))
        })?;
        let leaves = regions
            .iter()
            .map(|r| {
                (r.leaf_mode.is_some() && r.range.len() > 1)
                    .then(|| graph.induced_range(r.range.clone()))
            })
            .collect();
        Ok(Solver {
            graph,
            regions,
            leaves,
            report,
        })
    }

    pub fn graph(&self) -> &AssembledGraph {
        &self.graph
    }

    pub fn rank(&self) -> usize {
        self.regions[0].rank
    }

    pub fn hypotheses(&self) -> &HypothesisReport {
        &self.report
    }

    /// Covers the weld with paths joining exactly `rank − 1` pairs.
    pub fn solve(&self, pairs: &[(Vertex, Vertex)]) -> Result<(PathCover, SolveTrace), SolveError> {
        let k = self.rank() - 1;
        if pairs.len() != k {
            return Err(SolveError::Pairs(format!(
                "rank {} needs {k} pairs, got {}",
                self.rank(),
                pairs.len()
            )));
        }
        self.solve_fewer(pairs)
    }

    /// Like [`Solver::solve`] but accepts any number of pairs from one up to
    /// `rank − 1`.
    pub fn solve_fewer(&self, pairs: &[(Vertex, Vertex)]) -> Result<(PathCover, SolveTrace), SolveError> {
        let k = self.rank() - 1;
        if pairs.is_empty() || pairs.len() > k {
            return Err(SolveError::Pairs(format!(
                "between 1 and {k} pairs allowed, got {}",
                pairs.len()
            )));
        }
        PairSpec::new(pairs.to_vec())
            .validate(&self.graph)
            .map_err(|e| SolveError::Pairs(e.to_string()))?;
        let mut root = SolveTrace::default();
        match self.cover(0, pairs, &mut root) {
            Ok(paths) => Ok((PathCover { paths }, root.children.remove(0))),
            Err(error) => Err(SolveError::Construction {
                error,
                trace: Box::new(root.children.remove(0)),
            }),
        }
    }

    /// Covers region `rid` for `pairs`; the node for this call is appended to
    /// `parent` whether or not it succeeds.
    pub(crate) fn cover(
        &self,
        rid: usize,
        pairs: &[(Vertex, Vertex)],
        parent: &mut SolveTrace,
    ) -> Result<Vec<Vec<Vertex>>, StepError> {
        let region = &self.regions[rid];
        let mut node = SolveTrace::new(region.rank, region.range.start, pairs.len());
        let out = self.cover_oriented(rid, pairs, &mut node);
        parent.children.push(node);
        out
    }

    fn cover_oriented(
        &self,
        rid: usize,
        pairs: &[(Vertex, Vertex)],
        node: &mut SolveTrace,
    ) -> Result<Vec<Vec<Vertex>>, StepError> {
        let region = &self.regions[rid];
        let mut norm = Vec::with_capacity(pairs.len());
        let mut flipped = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if !region.range.contains(&a) || !region.range.contains(&b) {
                return Err(StepError::Internal(format!(
                    "pair ({a}, {b}) leaves region {:?}",
                    region.range
                )));
            }
            let flip = a != b && self.graph.color(a) == Color::White;
            if a != b && self.graph.color(a) == self.graph.color(b) {
                return Err(StepError::Internal(format!("pair ({a}, {b}) is monochromatic")));
            }
            norm.push(if flip { (b, a) } else { (a, b) });
            flipped.push(flip);
        }
        let mut paths = self.cover_normalized(rid, &norm, node)?;
        for (p, flip) in paths.iter_mut().zip(flipped) {
            if flip {
                p.reverse();
            }
        }
        Ok(paths)
    }

    fn cover_normalized(
        &self,
        rid: usize,
        pairs: &[(Vertex, Vertex)],
        node: &mut SolveTrace,
    ) -> Result<Vec<Vec<Vertex>>, StepError> {
        let region = &self.regions[rid];
        let k = pairs.len();
        if region.leaf_mode.is_some() {
            node.label = "leaf".into();
            let [(s, t)] = pairs else {
                return Err(StepError::Precondition(format!("a leaf takes one pair, got {k}")));
            };
            return self.leaf_path(rid, *s, *t).map(|p| vec![p]);
        }
        let n = region.rank - 1;
        if k == 0 || k > n {
            return Err(StepError::Precondition(format!("rank {} cannot take {k} pairs", region.rank)));
        }
        if pairs.iter().any(|&(a, b)| a == b) {
            return Err(StepError::Internal("degenerate pair in a multi-vertex region".into()));
        }
        if k < n {
            node.label = "reduce".into();
            let ((x, y), padded) = reduce::pad_once(&self.graph, region.range.clone(), pairs)?;
            node.connector("pad_source", x, Some(y));
            let mut paths = self.cover(rid, &padded, node)?;
            reduce::splice_once(&mut paths)?;
            return Ok(paths);
        }
        let ctx = ctx::Ctx {
            solver: self,
            region,
        };
        let mut paths = if region.rank == 2 {
            rank2::solve(&ctx, pairs[0], node)?
        } else {
            dispatch::solve(&ctx, pairs, node)?
        };
        ctx.extend(&mut paths, node)?;
        Ok(paths)
    }

    fn leaf_path(&self, rid: usize, s: Vertex, t: Vertex) -> Result<Vec<Vertex>, StepError> {
        let region = &self.regions[rid];
        if region.range.len() == 1 {
            return Ok(vec![s]);
        }
        let g = self.leaves[rid]
            .as_ref()
            .ok_or_else(|| StepError::Internal("leaf graph missing".into()))?;
        let off = region.range.start;
        match ham_path_between(g, s - off, t - off) {
            Ok(Some(p)) => Ok(p.into_iter().map(|v| v + off).collect()),
            _ => Err(StepError::LeafCertification { s, t }),
        }
    }
}

/// One-shot convenience: build a [`Solver`] and solve.
pub fn solve(tree: &WeldTree, pairs: &[(Vertex, Vertex)]) -> Result<(PathCover, SolveTrace), SolveError> {
    Solver::new(tree)?.solve(pairs)
}
