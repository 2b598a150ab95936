//! Layout constructions valid for every rank, given enough layers and
//! large enough layers.

use crate::graph::{Color, Vertex};

use super::ctx::{oriented, Canon, Ctx};
use super::dispatch::identity;
use super::path::{containing, cut, from, pred, succ, upto};
use super::plan::Plan;
use super::stats::{LayerStats, SelectionState};
use super::trace::SolveTrace;
use super::StepError;

type Paths = Result<Vec<Vec<Vertex>>, StepError>;

/// Picks `v_i` in the source layer of every split pair `i` in `order` and
/// its partner `u_i` in the target layer. `v_i` avoids the targets and
/// earlier `v`s of its layer and the partners of the sources and earlier
/// `u`s of the target layer.
fn connectors(
    ctx: &Ctx,
    c: &Canon,
    st: &LayerStats,
    order: impl Iterator<Item = usize>,
    bound: usize,
    label: &str,
    trace: &mut SolveTrace,
) -> Result<(Vec<Option<Vertex>>, Vec<Option<Vertex>>), StepError> {
    let tc = ctx.color(c.t[0]);
    let mut v = vec![None; c.n()];
    let mut u = vec![None; c.n()];
    let mut sel = SelectionState::default();
    for i in order {
        let (j, jt) = (st.s_layer[i], st.t_layer[i]);
        if j == jt {
            continue;
        }
        let mut forbidden: Vec<Vertex> = st.targets[j].iter().map(|&p| c.t[p]).collect();
        forbidden.extend(sel.v_in(&ctx.range(j)));
        for &p in &st.sources[jt] {
            forbidden.push(ctx.partner(c.s[p], j)?);
        }
        for x in sel.u_in(&ctx.range(jt)) {
            forbidden.push(ctx.partner(x, j)?);
        }
        let vi = ctx.select(j, tc, &forbidden, bound, label, trace)?;
        let ui = ctx.partner(vi, jt)?;
        sel.push(vi, ui);
        trace.connector(format!("v{i}"), vi, Some(ui));
        v[i] = Some(vi);
        u[i] = Some(ui);
    }
    Ok((v, u))
}

fn get(x: Option<Vertex>) -> Result<Vertex, StepError> {
    x.ok_or_else(|| StepError::Internal("connector missing".into()))
}

/// No layer meets every pair: each split pair crosses once.
pub(crate) fn spread(ctx: &Ctx, pairs: &[(Vertex, Vertex)], trace: &mut SolveTrace) -> Paths {
    let c = identity(pairs, trace);
    let n = c.n();
    let st = ctx.stats(&c);
    let (v, u) = connectors(ctx, &c, &st, 0..n, (2 * n).saturating_sub(4), "spread", trace)?;
    let mut plan = Plan::new(n);
    for i in 0..n {
        let (js, jt) = (st.s_layer[i], st.t_layer[i]);
        if js == jt {
            plan.solve(i, js, c.s[i], c.t[i]);
        } else {
            plan.solve(i, js, c.s[i], get(v[i])?);
            plan.solve(i, jt, get(u[i])?, c.t[i]);
        }
    }
    Ok(c.finish(plan.execute(ctx, trace)?))
}

/// Every endpoint in layer `l0`.
pub(crate) fn packed(ctx: &Ctx, pairs: &[(Vertex, Vertex)], l0: usize, trace: &mut SolveTrace) -> Paths {
    let c = identity(pairs, trace);
    let n = c.n();
    let last = n - 1;
    let (sn, tn) = c.pair(last);
    trace.layer("G1", l0);
    let bar = ctx.sub(l0, &(0..last).map(|i| c.pair(i)).collect::<Vec<_>>(), trace)?;
    let a = containing(&bar, sn)?;
    let b = containing(&bar, tn)?;
    let mut plan = Plan::new(n);
    for i in (0..last).filter(|&i| i != a && i != b) {
        plan.fixed(i, bar[i].clone());
    }
    if a == b {
        trace.branch("2.same");
        let l2 = ctx.lowest_except(&[l0], 1)?[0];
        trace.layer("G2", l2);
        let p = &bar[a];
        let (ps, pt) = (p.iter().position(|&x| x == sn).unwrap(), p.iter().position(|&x| x == tn).unwrap());
        let (lo, hi) = (ps.min(pt), ps.max(pt));
        if lo == 0 || hi + 1 >= p.len() {
            return Err(StepError::Internal("pair endpoints sit at a path end".into()));
        }
        let (x, y) = (p[lo - 1], p[hi + 1]);
        let mut seg = p[lo..=hi].to_vec();
        if ps > pt {
            seg.reverse();
        }
        let mut rest = p[..lo].to_vec();
        rest.extend_from_slice(&p[hi + 1..]);
        plan.fixed(a, rest);
        plan.fixed(last, seg);
        plan.detour(x, y, &[(l2, ctx.partner(x, l2)?, ctx.partner(y, l2)?)]);
    } else {
        trace.branch("2.split");
        let others = ctx.lowest_except(&[l0], 2)?;
        let (l2, l3) = (others[0], others[1]);
        trace.layer("G2", l2);
        trace.layer("G3", l3);
        let pa = &bar[a];
        let vn = pred(pa, sn)?;
        let u1 = pred(pa, vn)?;
        let v1 = succ(pa, sn)?;
        let pb = &bar[b];
        let u2 = pred(pb, tn)?;
        let un = succ(pb, tn)?;
        let v2 = succ(pb, un)?;
        trace.connector("v_n", vn, None);
        trace.connector("u_n", un, None);
        plan.fixed(a, cut(pa, u1, v1)?);
        plan.fixed(b, cut(pb, u2, v2)?);
        plan.detour(u1, v1, &[(l2, ctx.partner(u1, l2)?, ctx.partner(v1, l2)?)]);
        plan.detour(u2, v2, &[(l2, ctx.partner(u2, l2)?, ctx.partner(v2, l2)?)]);
        plan.fixed(last, vec![sn, vn]);
        plan.solve(last, l3, ctx.partner(vn, l3)?, ctx.partner(un, l3)?);
        plan.fixed(last, vec![un, tn]);
    }
    Ok(c.finish(plan.execute(ctx, trace)?))
}

/// Lowest `count` vertices of `color` in layer `j`.
fn lowest_of(
    ctx: &Ctx,
    j: usize,
    color: Color,
    count: usize,
    label: &str,
    trace: &mut SolveTrace,
) -> Result<Vec<Vertex>, StepError> {
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let v = ctx.select(j, color, &out, count.saturating_sub(1), label, trace)?;
        out.push(v);
    }
    Ok(out)
}

/// All sources in `l0`, all targets in `l1`.
pub(crate) fn opposed(
    ctx: &Ctx,
    pairs: &[(Vertex, Vertex)],
    l0: usize,
    l1: usize,
    trace: &mut SolveTrace,
) -> Paths {
    let c = identity(pairs, trace);
    let n = c.n();
    let last = n - 1;
    let (sn, tn) = c.pair(last);
    let tc = ctx.color(tn);
    let others = ctx.lowest_except(&[l0, l1], 2)?;
    let (g3, g4) = (others[0], others[1]);
    for (role, j) in [("G1", l0), ("G2", l1), ("G3", g3), ("G4", g4)] {
        trace.layer(role, j);
    }
    let w = lowest_of(ctx, l0, tc, last, "opposed.w", trace)?;
    let bar = ctx.sub(l0, &(0..last).map(|i| (c.s[i], w[i])).collect::<Vec<_>>(), trace)?;
    let a = containing(&bar, sn)?;
    let mut v = w;
    let va = pred(&bar[a], sn)?;
    let vn = *bar[a].last().unwrap();
    v[a] = va;
    let mut first = bar.clone();
    first[a] = upto(&bar[a], va)?;
    let tail = from(&bar[a], sn)?;
    let mut hat_pairs = Vec::with_capacity(last);
    for i in 0..last {
        hat_pairs.push((ctx.partner(v[i], l1)?, c.t[i]));
    }
    let mut hat = ctx.sub(l1, &hat_pairs, trace)?;
    let b = containing(&hat, tn)?;
    let u0 = pred(&hat[b], tn)?;
    let un = succ(&hat[b], tn)?;
    let v0 = succ(&hat[b], un)?;
    hat[b] = cut(&hat[b], u0, v0)?;
    trace.connector("v_n", vn, None);
    trace.connector("u_n", un, None);
    let mut plan = Plan::new(n);
    for i in 0..last {
        plan.fixed(i, std::mem::take(&mut first[i]));
        plan.fixed(i, std::mem::take(&mut hat[i]));
    }
    plan.detour(u0, v0, &[(g3, ctx.partner(u0, g3)?, ctx.partner(v0, g3)?)]);
    plan.fixed(last, tail);
    plan.solve(last, g4, ctx.partner(vn, g4)?, ctx.partner(un, g4)?);
    plan.fixed(last, vec![un, tn]);
    Ok(c.finish(plan.execute(ctx, trace)?))
}

/// Every source in `l0` (every target when `swapped`), not every target.
pub(crate) fn one_sided(
    ctx: &Ctx,
    pairs: &[(Vertex, Vertex)],
    l0: usize,
    swapped: bool,
    trace: &mut SolveTrace,
) -> Paths {
    let o = oriented(pairs, swapped);
    let pick = o
        .iter()
        .position(|&(_, t)| ctx.layer(t) != l0)
        .ok_or_else(|| StepError::Internal("no target outside the source layer".into()))?;
    let c = Canon::last(pairs, pick, swapped, trace);
    let n = c.n();
    let last = n - 1;
    let (sn, tn) = c.pair(last);
    let st = ctx.stats(&c);
    let tc = ctx.color(tn);
    trace.layer("G1", l0);
    let mut v: Vec<Option<Vertex>> = vec![None; n];
    let mut chosen: Vec<Vertex> = st.targets[l0].iter().map(|&p| c.t[p]).collect();
    for i in (0..last).filter(|&i| st.t_layer[i] != l0) {
        let vi = ctx.select(l0, tc, &chosen, n.saturating_sub(2), "one_sided.v", trace)?;
        trace.connector(format!("v{i}"), vi, None);
        chosen.push(vi);
        v[i] = Some(vi);
    }
    let bar_pairs: Vec<_> = (0..last)
        .map(|i| (c.s[i], v[i].unwrap_or(c.t[i])))
        .collect();
    let mut bar = ctx.sub(l0, &bar_pairs, trace)?;
    let a = containing(&bar, sn)?;
    let mut plan = Plan::new(n);
    if st.t_layer[a] != l0 {
        trace.branch("4.sv");
        let va = pred(&bar[a], sn)?;
        let vn = *bar[a].last().unwrap();
        let tail = from(&bar[a], sn)?;
        bar[a] = upto(&bar[a], va)?;
        bar.push(tail);
        v[a] = Some(va);
        v[last] = Some(vn);
        for i in 0..n {
            plan.fixed(i, std::mem::take(&mut bar[i]));
            let jt = st.t_layer[i];
            if jt != l0 {
                plan.solve(i, jt, ctx.partner(get(v[i])?, jt)?, c.t[i]);
            }
        }
    } else {
        trace.branch("4.st");
        let vn = pred(&bar[a], sn)?;
        let u0 = pred(&bar[a], vn)?;
        let v0 = succ(&bar[a], sn)?;
        let gl = (0..ctx.num_layers())
            .find(|&j| j != l0 && st.targets[j].is_empty())
            .ok_or_else(|| StepError::Internal("every layer holds a target".into()))?;
        trace.layer("GL", gl);
        bar[a] = cut(&bar[a], u0, v0)?;
        for i in 0..last {
            plan.fixed(i, std::mem::take(&mut bar[i]));
            let jt = st.t_layer[i];
            if jt != l0 {
                plan.solve(i, jt, ctx.partner(get(v[i])?, jt)?, c.t[i]);
            }
        }
        plan.detour(u0, v0, &[(gl, ctx.partner(u0, gl)?, ctx.partner(v0, gl)?)]);
        let jt = st.t_layer[last];
        plan.fixed(last, vec![sn, vn]);
        plan.solve(last, jt, ctx.partner(vn, jt)?, tn);
    }
    Ok(c.finish(plan.execute(ctx, trace)?))
}

/// Queues the pieces of pairs `0..last`: the cover of `l0` plus the half in
/// the other layer.
fn hub_plan(
    c: &Canon,
    st: &LayerStats,
    l0: usize,
    bar: &mut [Vec<Vertex>],
    v: &[Option<Vertex>],
    u: &[Option<Vertex>],
    plan: &mut Plan,
) -> Result<(), StepError> {
    for i in 0..c.n() - 1 {
        let piece = std::mem::take(&mut bar[i]);
        let (js, jt) = (st.s_layer[i], st.t_layer[i]);
        if js == l0 && jt == l0 {
            plan.fixed(i, piece);
        } else if js == l0 {
            plan.fixed(i, piece);
            plan.solve(i, jt, get(u[i])?, c.t[i]);
        } else {
            plan.solve(i, js, c.s[i], get(v[i])?);
            plan.fixed(i, piece);
        }
    }
    Ok(())
}

/// One layer meets every pair but holds neither all sources nor all
/// targets.
pub(crate) fn hub(ctx: &Ctx, pairs: &[(Vertex, Vertex)], l0: usize, trace: &mut SolveTrace) -> Paths {
    let t_in = pairs.iter().filter(|p| ctx.layer(p.1) == l0).count();
    let swapped = t_in < 2;
    let o = oriented(pairs, swapped);
    let pick = o
        .iter()
        .position(|&(s, t)| ctx.layer(s) == l0 && ctx.layer(t) != l0)
        .ok_or_else(|| StepError::Internal("no pair leaves the hub layer".into()))?;
    let c = Canon::last(pairs, pick, swapped, trace);
    let n = c.n();
    let last = n - 1;
    let (sn, tn) = c.pair(last);
    let st = ctx.stats(&c);
    let sc = ctx.color(sn);
    trace.layer("G1", l0);
    let (v, u) = connectors(ctx, &c, &st, 0..last, 2 * n - 3, "hub", trace)?;
    let bar_pairs: Vec<_> = (0..last)
        .map(|i| match (st.s_layer[i] == l0, st.t_layer[i] == l0) {
            (true, true) => Ok((c.s[i], c.t[i])),
            (true, false) => Ok((c.s[i], get(v[i])?)),
            _ => Ok((get(u[i])?, c.t[i])),
        })
        .collect::<Result<_, StepError>>()?;
    let mut bar = ctx.sub(l0, &bar_pairs, trace)?;
    let a = containing(&bar, sn)?;
    let vn = pred(&bar[a], sn)?;
    let u0 = pred(&bar[a], vn)?;
    let v0 = succ(&bar[a], sn)?;
    bar[a] = cut(&bar[a], u0, v0)?;
    let mut plan = Plan::new(n);
    hub_plan(&c, &st, l0, &mut bar, &v, &u, &mut plan)?;
    let jt = st.t_layer[last];
    trace.layer("Gt", jt);
    trace.connector("v_n", vn, None);
    if let Some(l) = (0..ctx.num_layers()).find(|&j| st.w[j] == 0) {
        trace.branch("5a");
        trace.layer("L", l);
        let mut forbidden: Vec<Vertex> = st.sources[jt].iter().map(|&p| c.s[p]).collect();
        forbidden.extend((0..last).filter(|&i| st.t_layer[i] == jt).filter_map(|i| u[i]));
        forbidden.push(ctx.partner(ctx.partner(u0, l)?, jt)?);
        let un = ctx.select(jt, sc, &forbidden, 2 * n - 2, "hub.u_n", trace)?;
        trace.connector("u_n", un, None);
        plan.detour(u0, v0, &[(l, ctx.partner(u0, l)?, ctx.partner(v0, l)?)]);
        plan.fixed(last, vec![sn, vn]);
        plan.solve(last, l, ctx.partner(vn, l)?, ctx.partner(un, l)?);
        plan.solve(last, jt, un, tn);
    } else {
        trace.branch("5b");
        let (g2, q) = (0..ctx.num_layers())
            .filter(|&j| j != l0 && st.targets[j].is_empty())
            .find_map(|j| match st.sources[j][..] {
                [q] if q != a => Some((j, q)),
                _ => None,
            })
            .ok_or_else(|| StepError::Internal("no detour layer for the hub pair".into()))?;
        trace.layer("G2", g2);
        let forbidden = [c.s[q], ctx.partner(tn, g2)?];
        let x0 = ctx.select(g2, sc, &forbidden, 2, "hub.x_0", trace)?;
        let y0 = ctx.partner(x0, jt)?;
        trace.connector("x_0", x0, Some(y0));
        plan.detour(
            u0,
            v0,
            &[(g2, ctx.partner(u0, g2)?, x0), (jt, y0, ctx.partner(v0, jt)?)],
        );
        plan.fixed(last, vec![sn, vn]);
        plan.solve(last, jt, ctx.partner(vn, jt)?, tn);
    }
    Ok(c.finish(plan.execute(ctx, trace)?))
}

/// Two layers meet every pair and neither holds all sources.
pub(crate) fn two_hubs(
    ctx: &Ctx,
    pairs: &[(Vertex, Vertex)],
    j1: usize,
    j2: usize,
    trace: &mut SolveTrace,
) -> Paths {
    let (l0, l1) = (j1.min(j2), j1.max(j2));
    let pick = pairs
        .iter()
        .position(|&(s, _)| ctx.layer(s) == l0)
        .ok_or_else(|| StepError::Internal("no source in the lower hub".into()))?;
    let c = Canon::last(pairs, pick, false, trace);
    let n = c.n();
    let last = n - 1;
    let (sn, tn) = c.pair(last);
    let st = ctx.stats(&c);
    let tc = ctx.color(tn);
    let others = ctx.lowest_except(&[l0, l1], 2)?;
    let (g3, g4) = (others[0], others[1]);
    for (role, j) in [("G1", l0), ("G2", l1), ("G3", g3), ("G4", g4)] {
        trace.layer(role, j);
    }
    let (v, u) = connectors(ctx, &c, &st, 0..last, 2 * n - 2, "two_hubs", trace)?;
    // pieces in layer j: (s, v) when s is there, (u, t) otherwise
    let piece = |i: usize, j: usize| -> Result<(Vertex, Vertex), StepError> {
        if st.s_layer[i] == j {
            Ok((c.s[i], get(v[i])?))
        } else {
            Ok((get(u[i])?, c.t[i]))
        }
    };
    let bar_pairs = (0..last).map(|i| piece(i, l0)).collect::<Result<Vec<_>, _>>()?;
    let mut bar = ctx.sub(l0, &bar_pairs, trace)?;
    let a = containing(&bar, sn)?;
    let mut plan = Plan::new(n);
    let s_first = |i: usize| st.s_layer[i] == l0;
    if st.s_layer[a] == l0 {
        trace.branch("6A");
        let va = pred(&bar[a], sn)?;
        let vn = *bar[a].last().unwrap();
        let un = ctx.partner(vn, l1)?;
        trace.connector("v_n", vn, Some(un));
        let tail = from(&bar[a], sn)?;
        let head = upto(&bar[a], va)?;
        let idx: Vec<usize> = (0..last).filter(|&i| i != a).collect();
        let mut hat_pairs = idx.iter().map(|&i| piece(i, l1)).collect::<Result<Vec<_>, _>>()?;
        hat_pairs.push((un, tn));
        let mut hat = ctx.sub(l1, &hat_pairs, trace)?;
        let ta = c.t[a];
        let b = containing(&hat, ta)?;
        let x2 = pred(&hat[b], ta)?;
        let u1 = succ(&hat[b], ta)?;
        let y2 = succ(&hat[b], u1)?;
        hat[b] = cut(&hat[b], x2, y2)?;
        trace.connector("u_1", u1, None);
        let hat_last = hat.pop().unwrap();
        for (k, &i) in idx.iter().enumerate() {
            let (p, q) = (std::mem::take(&mut bar[i]), std::mem::take(&mut hat[k]));
            if s_first(i) {
                plan.fixed(i, p);
                plan.fixed(i, q);
            } else {
                plan.fixed(i, q);
                plan.fixed(i, p);
            }
        }
        plan.fixed(a, head);
        plan.solve(a, g3, ctx.partner(va, g3)?, ctx.partner(u1, g3)?);
        plan.fixed(a, vec![u1, ta]);
        plan.fixed(last, tail);
        plan.fixed(last, hat_last);
        plan.detour(x2, y2, &[(g4, ctx.partner(x2, g4)?, ctx.partner(y2, g4)?)]);
    } else {
        let vn = pred(&bar[a], sn)?;
        let x0 = pred(&bar[a], vn)?;
        let y0 = succ(&bar[a], sn)?;
        bar[a] = cut(&bar[a], x0, y0)?;
        plan.detour(x0, y0, &[(g3, ctx.partner(x0, g3)?, ctx.partner(y0, g3)?)]);
        let hat_pairs = (0..last).map(|i| piece(i, l1)).collect::<Result<Vec<_>, _>>()?;
        let mut hat = ctx.sub(l1, &hat_pairs, trace)?;
        let iota = containing(&hat, tn)?;
        trace.branch(if iota == a { "6B.1" } else { "6B.2" });
        let xi = pred(&hat[iota], tn)?;
        let un = succ(&hat[iota], tn)?;
        let yi = succ(&hat[iota], un)?;
        hat[iota] = cut(&hat[iota], xi, yi)?;
        let yis = ctx.partner(yi, g4)?;
        plan.detour(xi, yi, &[(g4, ctx.partner(xi, g4)?, yis)]);
        let forbidden = [ctx.partner(x0, g3)?, ctx.partner(yis, g3)?];
        let yn = ctx.select(g3, tc, &forbidden, 2, "two_hubs.y_n", trace)?;
        let xn = ctx.partner(yn, g4)?;
        trace.connector("v_n", vn, None);
        trace.connector("u_n", un, None);
        trace.connector("y_n", yn, Some(xn));
        for i in 0..last {
            let (p, q) = (std::mem::take(&mut bar[i]), std::mem::take(&mut hat[i]));
            if s_first(i) {
                plan.fixed(i, p);
                plan.fixed(i, q);
            } else {
                plan.fixed(i, q);
                plan.fixed(i, p);
            }
        }
        plan.fixed(last, vec![sn, vn]);
        plan.solve(last, g3, ctx.partner(vn, g3)?, yn);
        plan.solve(last, g4, xn, ctx.partner(un, g4)?);
        plan.fixed(last, vec![un, tn]);
    }
    Ok(c.finish(plan.execute(ctx, trace)?))
}
