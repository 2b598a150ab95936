use std::ops::Range;

use crate::graph::{AssembledGraph, Color, Vertex};

use super::StepError;

/// Adds one pair: the last pair `(s, t)` becomes `(s, y)` and `(x, t)` is
/// appended, where `x` is the lowest free black vertex of `range` with a
/// free white neighbour `y` in `range` (lowest such `y`).
///
/// Sources must be black.
pub(crate) fn pad_once(
    g: &AssembledGraph,
    range: Range<Vertex>,
    pairs: &[(Vertex, Vertex)],
) -> Result<((Vertex, Vertex), Vec<(Vertex, Vertex)>), StepError> {
    let Some(&(s, t)) = pairs.last() else {
        return Err(StepError::Padding("no pair to split".into()));
    };
    if pairs.iter().any(|&(a, b)| g.color(a) != Color::Black || g.color(b) != Color::White) {
        return Err(StepError::Padding("sources must be black and targets white".into()));
    }
    let used: Vec<Vertex> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    let free = |v: &Vertex| range.contains(v) && !used.contains(v);
    let found = range.clone().filter(|&v| g.color(v) == Color::Black && free(&v)).find_map(|x| {
        g.adj(x)
            .iter()
            .copied()
            .find(|y| free(y))
            .map(|y| (x, y))
    });
    let Some((x, y)) = found else {
        return Err(StepError::Padding("no free adjacent black-white pair".into()));
    };
    let mut out = pairs.to_vec();
    *out.last_mut().unwrap() = (s, y);
    out.push((x, t));
    Ok(((x, y), out))
}

/// Undoes [`pad_once`] on a cover: the last two paths are joined through
/// the padding edge.
pub(crate) fn splice_once(paths: &mut Vec<Vec<Vertex>>) -> Result<(), StepError> {
    let (Some(last), Some(prev)) = (paths.pop(), paths.last_mut()) else {
        return Err(StepError::Internal("splice needs two paths".into()));
    };
    prev.extend(last);
    Ok(())
}

/// Builds a cover for fewer than `k` pairs from a solver for exactly `k`.
///
/// Pads with fresh adjacent black–white endpoint pairs until there are `k`
/// pairs, solves, then splices each padding edge back. Sources must be
/// black and targets white.
pub fn reduce_pair_count<F>(
    g: &AssembledGraph,
    pairs: &[(Vertex, Vertex)],
    k: usize,
    solve_k: F,
) -> Result<Vec<Vec<Vertex>>, StepError>
where
    F: FnOnce(&[(Vertex, Vertex)]) -> Result<Vec<Vec<Vertex>>, StepError>,
{
    if pairs.is_empty() || pairs.len() > k {
        return Err(StepError::Precondition(format!(
            "{} pairs cannot be padded to {k}",
            pairs.len()
        )));
    }
    let mut padded = pairs.to_vec();
    while padded.len() < k {
        padded = pad_once(g, 0..g.num_vertices(), &padded)?.1;
    }
    let mut paths = solve_k(&padded)?;
    if paths.len() != k {
        return Err(StepError::Internal(format!("solver returned {} paths", paths.len())));
    }
    while paths.len() > pairs.len() {
        splice_once(&mut paths)?;
    }
    Ok(paths)
}
