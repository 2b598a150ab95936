use crate::graph::Vertex;

use super::ctx::{Canon, Ctx};
use super::stats::LayerStats;
use super::trace::SolveTrace;
use super::{induction, rank3, rank4, StepError};

/// Endpoint layout of `n` pairs over the layers of a weld.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Layout {
    /// No layer meets every pair.
    Spread,
    /// One layer holds every endpoint.
    Packed(usize),
    /// All sources in one layer, all targets in another.
    Opposed { sources: usize, targets: usize },
    /// One layer holds every source (or, swapped, every target), not all
    /// targets.
    OneSided { layer: usize, swapped: bool },
    /// One layer meets every pair without holding a full side.
    Hub(usize),
    /// Two layers meet every pair; neither holds all sources.
    TwoHubs(usize, usize),
}

impl Layout {
    pub fn number(self) -> usize {
        match self {
            Layout::Spread => 1,
            Layout::Packed(_) => 2,
            Layout::Opposed { .. } => 3,
            Layout::OneSided { .. } => 4,
            Layout::Hub(_) => 5,
            Layout::TwoHubs(..) => 6,
        }
    }
}

pub(crate) fn classify(st: &LayerStats) -> Result<Layout, StepError> {
    let n = st.s_layer.len();
    let full = st.full_layers();
    match full[..] {
        [] => Ok(Layout::Spread),
        [j] => {
            let all_s = st.sources[j].len() == n;
            let all_t = st.targets[j].len() == n;
            Ok(match (all_s, all_t) {
                (true, true) => Layout::Packed(j),
                (true, false) => Layout::OneSided { layer: j, swapped: false },
                (false, true) => Layout::OneSided { layer: j, swapped: true },
                (false, false) => Layout::Hub(j),
            })
        }
        [a, b] => Ok(if st.sources[a].len() == n {
            Layout::Opposed { sources: a, targets: b }
        } else if st.sources[b].len() == n {
            Layout::Opposed { sources: b, targets: a }
        } else {
            Layout::TwoHubs(a, b)
        }),
        _ => Err(StepError::Dispatch(format!(
            "{} layers meet every pair",
            full.len()
        ))),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Engine {
    Rank3,
    Rank4,
    General,
}

pub(crate) fn solve(
    ctx: &Ctx,
    pairs: &[(Vertex, Vertex)],
    trace: &mut SolveTrace,
) -> Result<Vec<Vec<Vertex>>, StepError> {
    let n = pairs.len();
    let layers = ctx.num_layers();
    let engine = match ctx.rank() {
        3 => Engine::Rank3,
        4 if ctx.child_len() <= 8 => Engine::Rank4,
        _ => Engine::General,
    };
    if engine == Engine::General {
        if n < 3 || layers < n + 1 || ctx.child_len() < 4 * n - 2 {
            return Err(StepError::Precondition(format!(
                "general construction needs at least {} layers of at least {} vertices, \
                 weld has {layers} of {}",
                n + 1,
                4 * n - 2,
                ctx.child_len()
            )));
        }
    }
    let (s, t): (Vec<Vertex>, Vec<Vertex>) = pairs.iter().copied().unzip();
    let st = LayerStats::new(layers, &s, &t, |v| ctx.layer(v));
    if !st.identities_hold() {
        return Err(StepError::Internal("layer statistics are inconsistent".into()));
    }
    let layout = classify(&st)?;
    let prefix = match engine {
        Engine::Rank3 => "rank3",
        Engine::Rank4 => "rank4",
        Engine::General => "induction",
    };
    trace.label = format!("{prefix}:{}", layout.number());
    match (engine, layout) {
        (_, Layout::Spread) => induction::spread(ctx, pairs, trace),
        (_, Layout::Packed(j)) => induction::packed(ctx, pairs, j, trace),
        (Engine::Rank3, Layout::Opposed { sources, targets }) => {
            rank3::opposed(ctx, pairs, sources, targets, trace)
        }
        (_, Layout::Opposed { sources, targets }) => {
            induction::opposed(ctx, pairs, sources, targets, trace)
        }
        (_, Layout::OneSided { layer, swapped }) => induction::one_sided(ctx, pairs, layer, swapped, trace),
        (Engine::Rank3, Layout::Hub(j)) => rank3::hub(ctx, pairs, j, trace),
        (Engine::Rank4, Layout::Hub(j)) => rank4::hub(ctx, pairs, j, trace),
        (Engine::General, Layout::Hub(j)) => induction::hub(ctx, pairs, j, trace),
        (Engine::Rank3, Layout::TwoHubs(a, b)) => rank3::two_hubs(ctx, pairs, a, b, trace),
        (Engine::Rank4, Layout::TwoHubs(a, b)) => rank4::two_hubs(ctx, pairs, a, b, trace),
        (Engine::General, Layout::TwoHubs(a, b)) => induction::two_hubs(ctx, pairs, a, b, trace),
    }
}

/// Identity relabelling, used by layouts with no distinguished pair.
pub(crate) fn identity(pairs: &[(Vertex, Vertex)], trace: &mut SolveTrace) -> Canon {
    Canon::new(pairs, (0..pairs.len()).collect(), false, trace)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn layout(s: &[Vertex], t: &[Vertex]) -> Layout {
        classify(&LayerStats::new(4, s, t, |v| v / 10)).unwrap()
    }

    #[test]
    fn classifies_all_six() {
        assert_eq!(layout(&[0, 10], &[21, 31]), Layout::Spread);
        assert_eq!(layout(&[0, 2], &[1, 3]), Layout::Packed(0));
        assert_eq!(layout(&[0, 2], &[11, 13]), Layout::Opposed { sources: 0, targets: 1 });
        assert_eq!(layout(&[0, 2], &[1, 13]), Layout::OneSided { layer: 0, swapped: false });
        assert_eq!(layout(&[10, 2], &[1, 3]), Layout::OneSided { layer: 0, swapped: true });
        assert_eq!(layout(&[0, 20, 30], &[1, 3, 5]).number(), 4);
        assert_eq!(layout(&[0, 20], &[31, 1]), Layout::Hub(0));
        assert_eq!(layout(&[0, 10], &[11, 1]), Layout::TwoHubs(0, 1));
    }
}
