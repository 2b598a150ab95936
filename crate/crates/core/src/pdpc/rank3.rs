//! Two pairs in a rank-3 weld: the layouts whose general construction needs
//! more room than rank-2 layers give.

use crate::graph::Vertex;

use super::ctx::{Canon, Ctx};
use super::dispatch::identity;
use super::path::{from, pos, pred, succ, upto};
use super::plan::Plan;
use super::trace::SolveTrace;
use super::StepError;

type Paths = Result<Vec<Vec<Vertex>>, StepError>;

/// Both sources in `l0`, both targets in `l1`.
pub(crate) fn opposed(
    ctx: &Ctx,
    pairs: &[(Vertex, Vertex)],
    l0: usize,
    l1: usize,
    trace: &mut SolveTrace,
) -> Paths {
    let c = identity(pairs, trace);
    let (s0, t0) = c.pair(0);
    let (s1, t1) = c.pair(1);
    let g3 = ctx.lowest_except(&[l0, l1], 1)?[0];
    for (role, j) in [("G1", l0), ("G2", l1), ("G3", g3)] {
        trace.layer(role, j);
    }
    let w = ctx.select(l0, ctx.color(t0), &[], 0, "rank3.opposed.v", trace)?;
    let bar = ctx.ham(l0, s0, w, trace)?;
    let v0 = pred(&bar, s1)?;
    let v1 = *bar.last().unwrap();
    trace.connector("v_1", v0, None);
    trace.connector("v_2", v1, None);
    let hat = ctx.ham(l1, ctx.partner(v0, l1)?, t0, trace)?;
    let v1s = ctx.partner(v1, l1)?;
    let (p, q) = (pos(&hat, v1s)?, pos(&hat, t1)?);
    let (lo, hi) = (p.min(q), p.max(q));
    if lo == 0 || hi + 1 >= hat.len() {
        return Err(StepError::Internal("second pair sits at an end of the layer path".into()));
    }
    let (x, y) = (hat[lo - 1], hat[hi + 1]);
    let mut seg = hat[lo..=hi].to_vec();
    if p > q {
        seg.reverse();
    }
    let mut rest = hat[..lo].to_vec();
    rest.extend_from_slice(&hat[hi + 1..]);
    let mut plan = Plan::new(2);
    plan.fixed(0, upto(&bar, v0)?);
    plan.fixed(0, rest);
    plan.detour(x, y, &[(g3, ctx.partner(x, g3)?, ctx.partner(y, g3)?)]);
    plan.fixed(1, from(&bar, s1)?);
    plan.fixed(1, seg);
    Ok(c.finish(plan.execute(ctx, trace)?))
}

/// `l0` holds the source of one pair and the target of the other; the
/// remaining endpoints sit in two further layers.
pub(crate) fn hub(ctx: &Ctx, pairs: &[(Vertex, Vertex)], l0: usize, trace: &mut SolveTrace) -> Paths {
    let first = if ctx.layer(pairs[0].0) == l0 { 0 } else { 1 };
    let c = Canon::new(pairs, vec![first, 1 - first], false, trace);
    let (s0, t0) = c.pair(0);
    let (s1, t1) = c.pair(1);
    let (g2, g3) = (ctx.layer(t0), ctx.layer(s1));
    for (role, j) in [("G1", l0), ("G2", g2), ("G3", g3)] {
        trace.layer(role, j);
    }
    if ctx.child_len() == 2 {
        trace.branch("5.small");
        let v = ctx.partner(s0, g3)?;
        let u = ctx.partner(v, g2)?;
        ctx.check_edge(u, t0)?;
        ctx.check_edge(s1, t1)?;
        return Ok(c.finish(vec![vec![s0, v, u, t0], vec![s1, t1]]));
    }
    trace.branch("5.large");
    let bar = ctx.ham(l0, s0, t1, trace)?;
    let (v, u) = (bar[1], bar[2]);
    trace.connector("v", v, None);
    trace.connector("u", u, None);
    let mut plan = Plan::new(2);
    plan.fixed(0, vec![s0, v]);
    plan.solve(0, g2, ctx.partner(v, g2)?, t0);
    plan.solve(1, g3, s1, ctx.partner(u, g3)?);
    plan.fixed(1, bar[2..].to_vec());
    Ok(c.finish(plan.execute(ctx, trace)?))
}

/// Each of two layers holds one source and the other pair's target.
pub(crate) fn two_hubs(
    ctx: &Ctx,
    pairs: &[(Vertex, Vertex)],
    j1: usize,
    j2: usize,
    trace: &mut SolveTrace,
) -> Paths {
    let (l0, l1) = (j1.min(j2), j1.max(j2));
    let first = if ctx.layer(pairs[0].0) == l0 { 0 } else { 1 };
    let c = Canon::new(pairs, vec![first, 1 - first], false, trace);
    let (s0, t0) = c.pair(0);
    let (s1, t1) = c.pair(1);
    let g3 = ctx.lowest_except(&[l0, l1], 1)?[0];
    for (role, j) in [("G1", l0), ("G2", l1), ("G3", g3)] {
        trace.layer(role, j);
    }
    let u1 = ctx.partner(t0, l0)?;
    let bar1 = ctx.ham(l0, s0, t1, trace)?;
    let bar2 = ctx.ham(l1, s1, t0, trace)?;
    let v2 = succ(&bar1, u1)?;
    let u2 = pred(&bar2, t0)?;
    trace.connector("u_1", u1, Some(t0));
    let mut plan = Plan::new(2);
    let mut p0 = upto(&bar1, u1)?;
    p0.push(t0);
    plan.fixed(0, p0);
    plan.fixed(1, upto(&bar2, u2)?);
    plan.solve(1, g3, ctx.partner(u2, g3)?, ctx.partner(v2, g3)?);
    plan.fixed(1, from(&bar1, v2)?);
    Ok(c.finish(plan.execute(ctx, trace)?))
}

