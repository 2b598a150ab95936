//! Three pairs in a rank-4 weld whose layers have at most eight vertices,
//! too small for the general hub layouts.

use crate::graph::Vertex;

use super::ctx::{oriented, Canon, Ctx};
use super::path::{from, pred, reversed, succ, upto};
use super::plan::Plan;
use super::trace::SolveTrace;
use super::StepError;

type Paths = Result<Vec<Vec<Vertex>>, StepError>;

fn missing(what: &str) -> StepError {
    StepError::Internal(format!("no pair {what}"))
}

/// `l0` meets all three pairs, holding two endpoints of one kind and one of
/// the other.
pub(crate) fn hub(ctx: &Ctx, pairs: &[(Vertex, Vertex)], l0: usize, trace: &mut SolveTrace) -> Paths {
    let s_in = pairs.iter().filter(|p| ctx.layer(p.0) == l0).count();
    let swapped = s_in < 2;
    let o = oriented(pairs, swapped);
    let in0 = |v: Vertex| ctx.layer(v) == l0;
    let p3 = (0..3)
        .find(|&i| in0(o[i].1) && !in0(o[i].0))
        .ok_or_else(|| missing("enters the hub layer"))?;
    let rest: Vec<usize> = (0..3).filter(|&i| i != p3).collect();
    trace.layer("G1", l0);
    if let Some(&p1) = rest.iter().find(|&&i| in0(o[i].1)) {
        let p2 = rest[0] + rest[1] - p1;
        let c = Canon::new(pairs, vec![p1, p2, p3], swapped, trace);
        trace.label = "rank4:5.1".into();
        hub_inner_target(ctx, &c, l0, trace)
    } else {
        trace.label = "rank4:5.2".into();
        let g2 = ctx.layer(o[p3].0);
        let (p1, p2) = match rest.iter().find(|&&i| ctx.layer(o[i].1) == g2) {
            Some(&p1) => (p1, rest[0] + rest[1] - p1),
            None => (rest[0], rest[1]),
        };
        let c = Canon::new(pairs, vec![p1, p2, p3], swapped, trace);
        hub_outer_targets(ctx, &c, l0, g2, trace)
    }
}

/// Hub layer holds `s1, s2, t1, t3`.
fn hub_inner_target(ctx: &Ctx, c: &Canon, l0: usize, trace: &mut SolveTrace) -> Paths {
    let [(s1, t1), (s2, t2), (s3, t3)] = [c.pair(0), c.pair(1), c.pair(2)];
    let g2 = ctx.layer(t2);
    trace.layer("G2", g2);
    let bar = ctx.sub(l0, &[(s1, t1), (s2, t3)], trace)?;
    let v3 = succ(&bar[1], s2)?;
    let mut plan = Plan::new(3);
    plan.fixed(0, bar[0].clone());
    plan.fixed(1, vec![s2]);
    if ctx.layer(s3) == g2 {
        trace.branch("5.1a");
        let g3 = ctx.lowest_except(&[l0, g2], 1)?[0];
        trace.layer("G3", g3);
        let v3s = ctx.partner(v3, g2)?;
        let hat = ctx.ham(g2, s3, t2, trace)?;
        let v2 = succ(&hat, v3s)?;
        trace.connector("v_3", v3, Some(v3s));
        trace.connector("v_2", v2, None);
        plan.solve(1, g3, ctx.partner(s2, g3)?, ctx.partner(v2, g3)?);
        plan.fixed(1, from(&hat, v2)?);
        plan.fixed(2, upto(&hat, v3s)?);
    } else {
        trace.branch("5.1b");
        let g3 = ctx.layer(s3);
        trace.layer("G3", g3);
        let v2 = ctx.partner(s2, g2)?;
        let hat = ctx.ham(g2, ctx.partner(v3, g2)?, t2, trace)?;
        let u3 = pred(&hat, v2)?;
        trace.connector("v_3", v3, None);
        trace.connector("u_3", u3, None);
        plan.fixed(1, from(&hat, v2)?);
        plan.solve(2, g3, s3, ctx.partner(u3, g3)?);
        plan.fixed(2, reversed(upto(&hat, u3)?));
    }
    plan.fixed(2, from(&bar[1], v3)?);
    Ok(c.finish(plan.execute(ctx, trace)?))
}

/// Hub layer holds `s1, s2, t3`; `s3` sits in `g2`.
fn hub_outer_targets(ctx: &Ctx, c: &Canon, l0: usize, g2: usize, trace: &mut SolveTrace) -> Paths {
    let [(s1, t1), (s2, t2), (s3, t3)] = [c.pair(0), c.pair(1), c.pair(2)];
    let (tc, sc) = (ctx.color(t1), ctx.color(s1));
    trace.layer("G2", g2);
    let mut plan = Plan::new(3);
    plan.fixed(1, vec![s2]);
    if ctx.layer(t1) == g2 {
        trace.branch("5.2a");
        let g3 = ctx.layer(t2);
        let g4 = ctx.lowest_except(&[l0, g2, g3], 1)?[0];
        trace.layer("G3", g3);
        trace.layer("G4", g4);
        let v1 = ctx.select(l0, tc, &[t3, ctx.partner(s3, l0)?], 2, "rank4.hub.v_1", trace)?;
        let u1 = ctx.partner(v1, g2)?;
        let bar = ctx.sub(l0, &[(s1, v1), (s2, t3)], trace)?;
        let v3 = succ(&bar[1], s2)?;
        let v3s = ctx.partner(v3, g3)?;
        let u3 = ctx.select(g3, sc, &[v3s, ctx.partner(t1, g3)?], 2, "rank4.hub.u_3", trace)?;
        let u3s = ctx.partner(u3, g2)?;
        trace.connector("v_1", v1, Some(u1));
        trace.connector("u_3", u3, Some(u3s));
        let mid = ctx.sub(g2, &[(u1, t1), (s3, u3s)], trace)?;
        let hat = ctx.ham(g3, v3s, t2, trace)?;
        let v2 = succ(&hat, u3)?;
        plan.fixed(0, bar[0].clone());
        plan.fixed(0, mid[0].clone());
        plan.solve(1, g4, ctx.partner(s2, g4)?, ctx.partner(v2, g4)?);
        plan.fixed(1, from(&hat, v2)?);
        plan.fixed(2, mid[1].clone());
        plan.fixed(2, reversed(upto(&hat, u3)?));
        plan.fixed(2, from(&bar[1], v3)?);
    } else if ctx.layer(t1) == ctx.layer(t2) {
        trace.branch("5.2b");
        let g3 = ctx.layer(t1);
        let g4 = ctx.lowest_except(&[l0, g2, g3], 1)?[0];
        trace.layer("G3", g3);
        trace.layer("G4", g4);
        let v1 = ctx.select(l0, tc, &[t3], 1, "rank4.hub.v_1", trace)?;
        let u1 = ctx.partner(v1, g3)?;
        let bar = ctx.sub(l0, &[(s1, v1), (s2, t3)], trace)?;
        let v3 = succ(&bar[1], s2)?;
        let hat = ctx.sub(g3, &[(u1, t1), (ctx.partner(v3, g3)?, t2)], trace)?;
        let u3 = pred(&hat[1], t2)?;
        trace.connector("v_1", v1, Some(u1));
        trace.connector("u_3", u3, None);
        plan.fixed(0, bar[0].clone());
        plan.fixed(0, hat[0].clone());
        plan.solve(1, g4, ctx.partner(s2, g4)?, ctx.partner(t2, g4)?);
        plan.fixed(1, vec![t2]);
        plan.solve(2, g2, s3, ctx.partner(u3, g2)?);
        plan.fixed(2, reversed(upto(&hat[1], u3)?));
        plan.fixed(2, from(&bar[1], v3)?);
    } else {
        trace.branch("5.2c");
        let (g3, g4) = (ctx.layer(t1), ctx.layer(t2));
        trace.layer("G3", g3);
        trace.layer("G4", g4);
        let v1 = ctx.select(l0, tc, &[t3], 1, "rank4.hub.v_1", trace)?;
        let u1 = ctx.partner(v1, g3)?;
        let bar = ctx.sub(l0, &[(s1, v1), (s2, t3)], trace)?;
        let v3 = succ(&bar[1], s2)?;
        let v2 = ctx.partner(s2, g4)?;
        let hat = ctx.ham(g4, ctx.partner(v3, g4)?, t2, trace)?;
        let u3 = pred(&hat, v2)?;
        trace.connector("v_1", v1, Some(u1));
        trace.connector("u_3", u3, None);
        plan.fixed(0, bar[0].clone());
        plan.solve(0, g3, u1, t1);
        plan.fixed(1, from(&hat, v2)?);
        plan.solve(2, g2, s3, ctx.partner(u3, g2)?);
        plan.fixed(2, reversed(upto(&hat, u3)?));
        plan.fixed(2, from(&bar[1], v3)?);
    }
    Ok(c.finish(plan.execute(ctx, trace)?))
}

/// Two layers meet all three pairs.
pub(crate) fn two_hubs(
    ctx: &Ctx,
    pairs: &[(Vertex, Vertex)],
    j1: usize,
    j2: usize,
    trace: &mut SolveTrace,
) -> Paths {
    let count = |j: usize| pairs.iter().filter(|p| ctx.layer(p.0) == j).count();
    let (l0, l1) = if count(j1) == 2 { (j1, j2) } else { (j2, j1) };
    let p3 = (0..3)
        .find(|&i| ctx.layer(pairs[i].1) == l0)
        .ok_or_else(|| missing("ends in the source-heavy layer"))?;
    let rest: Vec<usize> = (0..3).filter(|&i| i != p3).collect();
    let c = Canon::new(pairs, vec![rest[0], rest[1], p3], false, trace);
    let [(s1, t1), (s2, t2), (s3, t3)] = [c.pair(0), c.pair(1), c.pair(2)];
    let others = ctx.lowest_except(&[l0, l1], 2)?;
    let (g3, g4) = (others[0], others[1]);
    for (role, j) in [("G1", l0), ("G2", l1), ("G3", g3), ("G4", g4)] {
        trace.layer(role, j);
    }
    let tc = ctx.color(t1);
    let v1 = ctx.select(l0, tc, &[t3, ctx.partner(s3, l0)?], 2, "rank4.two_hubs.v_1", trace)?;
    let u1 = ctx.partner(v1, l1)?;
    let bar = ctx.sub(l0, &[(s1, v1), (s2, t3)], trace)?;
    let hat = ctx.sub(l1, &[(u1, t1), (s3, t2)], trace)?;
    let v3 = succ(&bar[1], s2)?;
    let u3 = pred(&hat[1], t2)?;
    trace.connector("v_1", v1, Some(u1));
    trace.connector("v_3", v3, None);
    trace.connector("u_3", u3, None);
    let mut plan = Plan::new(3);
    plan.fixed(0, bar[0].clone());
    plan.fixed(0, hat[0].clone());
    plan.fixed(1, vec![s2]);
    plan.solve(1, g3, ctx.partner(s2, g3)?, ctx.partner(t2, g3)?);
    plan.fixed(1, vec![t2]);
    plan.fixed(2, upto(&hat[1], u3)?);
    plan.solve(2, g4, ctx.partner(u3, g4)?, ctx.partner(v3, g4)?);
    plan.fixed(2, from(&bar[1], v3)?);
    Ok(c.finish(plan.execute(ctx, trace)?))
}
