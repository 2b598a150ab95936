use std::ops::Range;

use crate::graph::{AssembledGraph, Color, Vertex};
use crate::weld::Region;

use super::extend::extend_through_empty_layers;
use super::select::select_connector;
use super::stats::LayerStats;
use super::trace::SolveTrace;
use super::{Solver, StepError};

/// One sub-weld being covered: layer arithmetic plus recursive calls into
/// its children.
pub(crate) struct Ctx<'a> {
    pub solver: &'a Solver,
    pub region: &'a Region,
}

impl<'a> Ctx<'a> {
    pub fn g(&self) -> &'a AssembledGraph {
        &self.solver.graph
    }

    pub fn rank(&self) -> usize {
        self.region.rank
    }

    pub fn num_layers(&self) -> usize {
        self.region.children.len()
    }

    pub fn child_len(&self) -> usize {
        self.region.child_len
    }

    pub fn layer(&self, v: Vertex) -> usize {
        (v - self.region.range.start) / self.region.child_len
    }

    pub fn range(&self, j: usize) -> Range<Vertex> {
        let start = self.region.range.start + j * self.region.child_len;
        start..start + self.region.child_len
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.g().color(v)
    }

    /// Matching partner of `v` in layer `j`.
    pub fn partner(&self, v: Vertex, j: usize) -> Result<Vertex, StepError> {
        let r = self.range(j);
        let adj = self.g().adj(v);
        let i = adj.partition_point(|&x| x < r.start);
        match adj.get(i) {
            Some(&x) if x < r.end => Ok(x),
            _ => Err(StepError::Internal(format!("vertex {v} has no neighbour in layer {j}"))),
        }
    }

    /// The `count` lowest layers outside `skip`.
    pub fn lowest_except(&self, skip: &[usize], count: usize) -> Result<Vec<usize>, StepError> {
        let out: Vec<usize> = (0..self.num_layers())
            .filter(|j| !skip.contains(j))
            .take(count)
            .collect();
        if out.len() < count {
            return Err(StepError::Precondition(format!(
                "need {count} layers besides {skip:?}, weld has {}",
                self.num_layers()
            )));
        }
        Ok(out)
    }

    pub fn sub(
        &self,
        j: usize,
        pairs: &[(Vertex, Vertex)],
        trace: &mut SolveTrace,
    ) -> Result<Vec<Vec<Vertex>>, StepError> {
        self.solver.cover(self.region.children[j], pairs, trace)
    }

    pub fn ham(
        &self,
        j: usize,
        a: Vertex,
        b: Vertex,
        trace: &mut SolveTrace,
    ) -> Result<Vec<Vertex>, StepError> {
        Ok(self.sub(j, &[(a, b)], trace)?.remove(0))
    }

    pub fn select(
        &self,
        j: usize,
        color: Color,
        forbidden: &[Vertex],
        bound: usize,
        label: &str,
        trace: &mut SolveTrace,
    ) -> Result<Vertex, StepError> {
        let (v, check) = select_connector(self.g(), self.range(j), color, forbidden, bound, label)?;
        trace.bounds.push(check);
        Ok(v)
    }

    /// Threads every layer no path touches into the cover.
    pub fn extend(&self, paths: &mut [Vec<Vertex>], trace: &mut SolveTrace) -> Result<(), StepError> {
        let mut used = vec![false; self.num_layers()];
        for v in paths.iter().flatten() {
            used[self.layer(*v)] = true;
        }
        let unused: Vec<usize> = (0..used.len()).filter(|&j| !used[j]).collect();
        extend_through_empty_layers(
            paths,
            &unused,
            |v, j| self.partner(v, j),
            |j, a, b| self.ham(j, a, b, trace),
        )
    }

    pub fn stats(&self, c: &Canon) -> LayerStats {
        LayerStats::new(self.num_layers(), &c.s, &c.t, |v| self.layer(v))
    }

    pub fn check_edge(&self, u: Vertex, v: Vertex) -> Result<(), StepError> {
        if self.g().is_edge(u, v) {
            Ok(())
        } else {
            Err(StepError::Internal(format!("{u} -- {v} is not an edge")))
        }
    }
}

/// Pairs relabelled for one construction: canonical pair `i` is caller pair
/// `perm[i]`, with source and target exchanged when `swapped`.
pub(crate) struct Canon {
    pub s: Vec<Vertex>,
    pub t: Vec<Vertex>,
    perm: Vec<usize>,
    swapped: bool,
}

impl Canon {
    pub fn new(
        pairs: &[(Vertex, Vertex)],
        perm: Vec<usize>,
        swapped: bool,
        trace: &mut SolveTrace,
    ) -> Self {
        let pick = |i: usize| {
            let (a, b) = pairs[i];
            if swapped {
                (b, a)
            } else {
                (a, b)
            }
        };
        let (s, t) = perm.iter().map(|&i| pick(i)).unzip();
        trace.pair_perm = perm.clone();
        trace.swapped = swapped;
        Canon { s, t, perm, swapped }
    }

    /// Identity order except pair `last` moved to the end.
    pub fn last(pairs: &[(Vertex, Vertex)], last: usize, swapped: bool, trace: &mut SolveTrace) -> Self {
        let n = pairs.len();
        let perm = (0..n).filter(|&i| i != last).chain([last]).collect();
        Canon::new(pairs, perm, swapped, trace)
    }

    pub fn n(&self) -> usize {
        self.s.len()
    }

    pub fn pair(&self, i: usize) -> (Vertex, Vertex) {
        (self.s[i], self.t[i])
    }

    pub fn finish(&self, paths: Vec<Vec<Vertex>>) -> Vec<Vec<Vertex>> {
        let mut out = vec![Vec::new(); paths.len()];
        for (i, mut p) in paths.into_iter().enumerate() {
            if self.swapped {
                p.reverse();
            }
            out[self.perm[i]] = p;
        }
        out
    }
}

/// Orients pairs source-first, swapped when asked.
pub(crate) fn oriented(pairs: &[(Vertex, Vertex)], swapped: bool) -> Vec<(Vertex, Vertex)> {
    pairs
        .iter()
        .map(|&(a, b)| if swapped { (b, a) } else { (a, b) })
        .collect()
}
