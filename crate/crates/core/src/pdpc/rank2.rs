use crate::graph::Vertex;

use super::ctx::Ctx;
use super::trace::SolveTrace;
use super::StepError;

/// Hamiltonian path of a rank-2 weld between `s` and `t`, before the
/// untouched layers are threaded in.
pub(crate) fn solve(
    ctx: &Ctx,
    (s, t): (Vertex, Vertex),
    trace: &mut SolveTrace,
) -> Result<Vec<Vec<Vertex>>, StepError> {
    trace.label = "rank2".into();
    let (js, jt) = (ctx.layer(s), ctx.layer(t));
    if ctx.child_len() == 1 {
        trace.branch("single");
        ctx.check_edge(s, t)?;
        return Ok(vec![vec![s, t]]);
    }
    if js == jt {
        trace.branch("same");
        return Ok(vec![ctx.ham(js, s, t, trace)?]);
    }
    trace.branch("split");
    let v = ctx.select(js, ctx.color(t), &[], 0, "rank2.v", trace)?;
    let u = ctx.partner(v, jt)?;
    trace.connector("v", v, Some(u));
    let mut p = ctx.ham(js, s, v, trace)?;
    p.extend(ctx.ham(jt, u, t, trace)?);
    Ok(vec![p])
}
