use std::ops::Range;

use crate::graph::{AssembledGraph, Color, Vertex};

use super::trace::BoundCheck;
use super::StepError;

/// Lowest vertex of `color` in `layer` outside `forbidden`.
///
/// The forbidden vertices that actually lie in the layer with that color
/// are counted first; exceeding `bound` is a counting failure even when a
/// candidate would remain.
pub fn select_connector(
    g: &AssembledGraph,
    layer: Range<Vertex>,
    color: Color,
    forbidden: &[Vertex],
    bound: usize,
    label: &str,
) -> Result<(Vertex, BoundCheck), StepError> {
    let mut blocked: Vec<Vertex> = forbidden
        .iter()
        .copied()
        .filter(|v| layer.contains(v) && g.color(*v) == color)
        .collect();
    blocked.sort_unstable();
    blocked.dedup();
    let available = layer.clone().filter(|&v| g.color(v) == color).count();
    let check = BoundCheck {
        label: label.to_string(),
        used: blocked.len(),
        bound,
        available,
    };
    if check.used > bound {
        return Err(StepError::Counting {
            label: check.label,
            used: check.used,
            bound,
            available,
        });
    }
    match layer
        .filter(|&v| g.color(v) == color)
        .find(|v| blocked.binary_search(v).is_err())
    {
        Some(v) => Ok((v, check)),
        None => Err(StepError::NoAdmissibleVertex {
            label: check.label,
            forbidden: check.used,
            available,
        }),
    }
}
