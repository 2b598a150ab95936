use std::collections::BTreeMap;

use crate::graph::Vertex;

use super::ctx::Ctx;
use super::path::insert_between;
use super::trace::SolveTrace;
use super::StepError;

enum Piece {
    Fixed(Vec<Vertex>),
    Solve { layer: usize, slot: usize },
}

struct Detour {
    after: Vertex,
    before: Vertex,
    segments: Vec<(usize, usize)>,
}

/// Paths described as concatenations of known vertex runs and pending
/// sub-weld paths, plus detours spliced into edges afterwards.
///
/// All pending requests for a layer go to that layer in one recursive call,
/// so they are covered jointly.
pub(crate) struct Plan {
    paths: Vec<Vec<Piece>>,
    detours: Vec<Detour>,
    requests: BTreeMap<usize, Vec<(Vertex, Vertex)>>,
}

impl Plan {
    pub fn new(n: usize) -> Self {
        Plan {
            paths: (0..n).map(|_| Vec::new()).collect(),
            detours: Vec::new(),
            requests: BTreeMap::new(),
        }
    }

    fn request(&mut self, layer: usize, a: Vertex, b: Vertex) -> usize {
        let reqs = self.requests.entry(layer).or_default();
        reqs.push((a, b));
        reqs.len() - 1
    }

    pub fn fixed(&mut self, i: usize, run: Vec<Vertex>) {
        self.paths[i].push(Piece::Fixed(run));
    }

    /// Appends a path of `layer` from `a` to `b` to path `i`.
    pub fn solve(&mut self, i: usize, layer: usize, a: Vertex, b: Vertex) {
        let slot = self.request(layer, a, b);
        self.paths[i].push(Piece::Solve { layer, slot });
    }

    /// After assembly, the edge `after`–`before` is replaced by a run through
    /// the listed `(layer, from, to)` segments.
    pub fn detour(&mut self, after: Vertex, before: Vertex, segments: &[(usize, Vertex, Vertex)]) {
        let segments = segments
            .iter()
            .map(|&(layer, a, b)| (layer, self.request(layer, a, b)))
            .collect();
        self.detours.push(Detour {
            after,
            before,
            segments,
        });
    }

    pub fn execute(self, ctx: &Ctx, trace: &mut SolveTrace) -> Result<Vec<Vec<Vertex>>, StepError> {
        let mut results: BTreeMap<usize, Vec<Vec<Vertex>>> = BTreeMap::new();
        for (&layer, reqs) in &self.requests {
            results.insert(layer, ctx.sub(layer, reqs, trace)?);
        }
        let mut take = |layer: usize, slot: usize| std::mem::take(&mut results.get_mut(&layer).unwrap()[slot]);
        let mut out = Vec::with_capacity(self.paths.len());
        for pieces in self.paths {
            let mut path: Vec<Vertex> = Vec::new();
            for piece in pieces {
                let run = match piece {
                    Piece::Fixed(run) => run,
                    Piece::Solve { layer, slot } => take(layer, slot),
                };
                join(ctx, &mut path, run)?;
            }
            out.push(path);
        }
        for d in self.detours {
            let mut seg = Vec::new();
            for (layer, slot) in d.segments {
                join(ctx, &mut seg, take(layer, slot))?;
            }
            let i = out
                .iter()
                .position(|p| p.contains(&d.after))
                .ok_or_else(|| StepError::Internal(format!("detour anchor {} is lost", d.after)))?;
            ctx.check_edge(d.after, seg[0])?;
            ctx.check_edge(*seg.last().unwrap(), d.before)?;
            insert_between(&mut out[i], d.after, d.before, seg)?;
        }
        Ok(out)
    }
}

fn join(ctx: &Ctx, path: &mut Vec<Vertex>, run: Vec<Vertex>) -> Result<(), StepError> {
    if let (Some(&a), Some(&b)) = (path.last(), run.first()) {
        ctx.check_edge(a, b)?;
    }
    path.extend(run);
    Ok(())
}
