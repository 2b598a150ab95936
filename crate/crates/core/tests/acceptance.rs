//! Acceptance run: one line per criterion, exit status non-zero if any
//! criterion fails. Every tolerance is exact: zero failures.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use weldpath::base::{brute_pdpc, certify_leaf, OracleConfig};
use weldpath::graph::{is_balanced, is_bipartite_properly_colored, is_equitable, AssembledGraph};
use weldpath::pdpc::{reduce_pair_count, SolveError, SolveTrace, Solver, StepError};
use weldpath::sweep::{all_instances, map, random_pairs};
use weldpath::verify::verify_pdpc;
use weldpath::weld::{
    assemble, complete_bipartite_leaf, kmm_weld, parse_weld_spec, serialize_weld_spec,
    transposition_graph, LaceabilityMode, Leaf, WeldTree,
};
use weldpath::{Color, Vertex};

type Pairs = Vec<(Vertex, Vertex)>;

/// Outcome of one solve: top-level label, counting checks seen, and any
/// failure.
struct Run {
    label: String,
    checks: usize,
    bad_checks: Vec<String>,
    error: Option<String>,
    cover: Option<Vec<Vec<Vertex>>>,
}

fn audit_bounds(trace: &SolveTrace) -> (usize, Vec<String>) {
    let mut checks = 0;
    let mut bad = Vec::new();
    for node in trace.nodes() {
        let n = node.rank.saturating_sub(1);
        for b in &node.bounds {
            checks += 1;
            if b.used > b.bound || b.used >= b.available || b.bound + 1 >= 2 * n.max(1) {
                bad.push(format!("{} used {} bound {} of {}", b.label, b.used, b.bound, b.available));
            }
        }
    }
    (checks, bad)
}

fn run(solver: &Solver, pairs: &[(Vertex, Vertex)], keep: bool) -> Run {
    match solver.solve(pairs) {
        Ok((cover, trace)) => {
            let (checks, bad_checks) = audit_bounds(&trace);
            let verdict = verify_pdpc(solver.graph(), pairs, &cover.paths);
            Run {
                label: trace.label.clone(),
                checks,
                bad_checks,
                error: verdict.violation.map(|v| format!("rejected: {}", v.reason)),
                cover: keep.then_some(cover.paths),
            }
        }
        Err(e) => {
            let (checks, bad_checks, label) = match &e {
                SolveError::Construction { trace, error } => {
                    let (c, mut b) = audit_bounds(trace);
                    if let StepError::Counting { .. } = error {
                        b.push(error.to_string());
                    }
                    (c, b, trace.label.clone())
                }
                _ => (0, Vec::new(), String::new()),
            };
            Run {
                label,
                checks,
                bad_checks,
                error: Some(e.to_string()),
                cover: None,
            }
        }
    }
}

#[derive(Default)]
struct Tally {
    instances: usize,
    failures: Vec<String>,
    checks: usize,
    bad_checks: Vec<String>,
    labels: BTreeMap<String, usize>,
}

impl Tally {
    fn add(&mut self, pairs: &[(Vertex, Vertex)], r: Run) {
        self.instances += 1;
        self.checks += r.checks;
        self.bad_checks.extend(r.bad_checks);
        if let Some(e) = r.error {
            self.failures.push(format!("{pairs:?}: {e}"));
        } else {
            *self.labels.entry(r.label).or_default() += 1;
        }
    }
}

struct Report {
    lines: Vec<(usize, bool, String)>,
    counting: Tally,
}

impl Report {
    fn record(&mut self, id: usize, pass: bool, detail: String) {
        let mark = if pass { "PASS" } else { "FAIL" };
        println!("criterion {id}: {mark}  {detail}");
        self.lines.push((id, pass, detail));
    }

    fn absorb_counting(&mut self, t: &Tally) {
        self.counting.checks += t.checks;
        self.counting.bad_checks.extend(t.bad_checks.iter().cloned());
    }
}

fn first_failures(v: &[String]) -> String {
    v.iter().take(3).cloned().collect::<Vec<_>>().join("; ")
}

fn solver_for(n: usize) -> Solver {
    Solver::new(&transposition_graph(n).unwrap()).unwrap()
}

fn rank3(report: &mut Report) {
    let start = Instant::now();
    let solver = solver_for(3);
    let g = solver.graph();
    let mut tally = Tally::default();
    let mut oracle_misses = 0;
    for pairs in all_instances(g, 2) {
        let r = run(&solver, &pairs, false);
        tally.add(&pairs, r);
        match brute_pdpc(g, &pairs, &OracleConfig::default()) {
            Ok(Some(c)) if verify_pdpc(g, &pairs, &c.paths).accepted => {}
            _ => oracle_misses += 1,
        }
    }
    let secs = start.elapsed().as_secs_f64();
    let pass = tally.instances == 18 && tally.failures.is_empty() && oracle_misses == 0 && secs < 1.0;
    report.absorb_counting(&tally);
    report.record(
        1,
        pass,
        format!(
            "rank 3 exhaustive: {} instances, {} failures, oracle confirmed {}, {secs:.3}s (limit 1s) {}",
            tally.instances,
            tally.failures.len(),
            tally.instances - oracle_misses,
            first_failures(&tally.failures)
        ),
    );
}

fn rank4(report: &mut Report) {
    let start = Instant::now();
    let solver = solver_for(4);
    let instances = all_instances(solver.graph(), 3);
    let runs = map(&instances, |p| run(&solver, p, false));
    let mut tally = Tally::default();
    for (p, r) in instances.iter().zip(runs) {
        tally.add(p, r);
    }
    let secs = start.elapsed().as_secs_f64();
    let pass = tally.instances == 290_400 && tally.failures.is_empty();
    report.absorb_counting(&tally);
    report.record(
        2,
        pass,
        format!(
            "rank 4 exhaustive: {} instances, {} failures, {secs:.1}s, labels {:?} {}",
            tally.instances,
            tally.failures.len(),
            tally.labels,
            first_failures(&tally.failures)
        ),
    );
}

/// Random endpoints placed by layer template: `(source layer, target
/// layer)` per pair.
fn templated(g: &AssembledGraph, template: &[(usize, usize)], rng: &mut ChaCha8Rng) -> Pairs {
    let layers = g.layer_ranges();
    let mut used = vec![false; g.num_vertices()];
    let mut pick = |layer: usize, color: Color, rng: &mut ChaCha8Rng| {
        let mut cands: Vec<Vertex> = layers[layer]
            .clone()
            .filter(|&v| g.color(v) == color && !used[v])
            .collect();
        cands.shuffle(rng);
        let v = cands[0];
        used[v] = true;
        v
    };
    template
        .iter()
        .map(|&(ls, lt)| (pick(ls, Color::Black, rng), pick(lt, Color::White, rng)))
        .collect()
}

fn rank5(report: &mut Report) {
    let start = Instant::now();
    let solver = solver_for(5);
    let g = solver.graph();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let random: Vec<Pairs> = (0..10_000).map(|_| random_pairs(g, 4, &mut rng)).collect();
    let templates: [&[(usize, usize)]; 6] = [
        &[(0, 1), (2, 3), (4, 4), (1, 2)],
        &[(0, 0), (0, 0), (0, 0), (0, 0)],
        &[(0, 1), (0, 1), (0, 1), (0, 1)],
        &[(0, 1), (0, 2), (0, 3), (0, 0)],
        &[(0, 0), (0, 1), (2, 0), (3, 0)],
        &[(0, 1), (0, 1), (1, 0), (1, 0)],
    ];
    let mut engineered = Vec::new();
    for t in templates {
        for _ in 0..50 {
            let mut relabel: Vec<usize> = (0..5).collect();
            relabel.shuffle(&mut rng);
            let moved: Vec<(usize, usize)> = t.iter().map(|&(a, b)| (relabel[a], relabel[b])).collect();
            let mut p = templated(g, &moved, &mut rng);
            p.shuffle(&mut rng);
            engineered.push(p);
        }
    }
    let mut random_tally = Tally::default();
    for (p, r) in random.iter().zip(map(&random, |p| run(&solver, p, false))) {
        random_tally.add(p, r);
    }
    let mut eng_tally = Tally::default();
    for (p, r) in engineered.iter().zip(map(&engineered, |p| run(&solver, p, false))) {
        eng_tally.add(p, r);
    }
    let mut labels = random_tally.labels.clone();
    for (k, v) in &eng_tally.labels {
        *labels.entry(k.clone()).or_default() += v;
    }
    let missing: Vec<usize> = (1..=6)
        .filter(|c| !labels.contains_key(&format!("induction:{c}")))
        .collect();
    let secs = start.elapsed().as_secs_f64();
    let pass = random_tally.failures.is_empty() && eng_tally.failures.is_empty() && missing.is_empty();
    report.absorb_counting(&random_tally);
    report.absorb_counting(&eng_tally);
    let mut failures = random_tally.failures.clone();
    failures.extend(eng_tally.failures.iter().cloned());
    report.record(
        3,
        pass,
        format!(
            "rank 5: {} random + {} engineered instances, {} failures, layouts missing {missing:?}, {secs:.1}s, random labels {:?} {}",
            random_tally.instances,
            eng_tally.instances,
            failures.len(),
            random_tally.labels,
            first_failures(&failures)
        ),
    );
}

fn laceability(report: &mut Report) {
    let cfg = OracleConfig::default();
    let mut ok = true;
    let mut detail = Vec::new();
    for m in 1..=3 {
        let g = assemble(&complete_bipartite_leaf(m).unwrap()).unwrap();
        let r = certify_leaf(&g, LaceabilityMode::HamiltonianLaceable, &cfg).unwrap();
        ok &= r;
        detail.push(format!("K{m},{m}={r}"));
    }
    let c6 = Leaf {
        colors: (0..6).map(|i| if i % 2 == 0 { Color::Black } else { Color::White }).collect(),
        edges: (0..6).map(|i| (i, (i + 1) % 6)).collect(),
        mode: LaceabilityMode::HamiltonianLaceable,
    }
    .to_graph()
    .unwrap();
    let c6_cert = certify_leaf(&c6, LaceabilityMode::HamiltonianLaceable, &cfg).unwrap();
    let antipodal = brute_pdpc(&c6, &[(0, 3)], &cfg).unwrap();
    ok &= !c6_cert && antipodal.is_none();
    detail.push(format!("C6={c6_cert}, C6 antipodal cover={}", antipodal.is_some()));
    report.record(4, ok, format!("leaf certification exact: {}", detail.join(", ")));
}

fn generated(report: &mut Report) {
    let mut checked = 0;
    let mut bad = Vec::new();
    let mut check = |name: String, tree: WeldTree| {
        let back = parse_weld_spec(&serialize_weld_spec(&tree)).unwrap();
        let g = assemble(&back).unwrap();
        checked += 1;
        if !is_bipartite_properly_colored(&g) || !is_equitable(&g) {
            bad.push(name);
        }
    };
    for n in 2..=5 {
        check(format!("transposition {n}"), transposition_graph(n).unwrap());
    }
    let mut kmm = 0;
    for seed in 0..40u64 {
        for rank in 2..=4 {
            let m = 1 + (seed as usize % 3);
            let layers = rank + (seed as usize % 2);
            if rank == 4 && m == 3 {
                continue;
            }
            check(format!("kmm {rank} {m} {layers} {seed}"), kmm_weld(rank, m, layers, seed).unwrap());
            kmm += 1;
        }
    }
    let pass = bad.is_empty() && kmm >= 100;
    report.record(
        5,
        pass,
        format!("generated graphs bipartite and equitable: {checked} checked ({kmm} kmm-welds), {} bad {bad:?}", bad.len()),
    );
}

fn reduction(report: &mut Report) {
    let solver = solver_for(4);
    let g = solver.graph();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let mut accepted = 0;
    let mut failures = Vec::new();
    for k in [1, 2] {
        for _ in 0..500 {
            let pairs = random_pairs(g, k, &mut rng);
            let res = reduce_pair_count(g, &pairs, 3, |p| {
                solver
                    .solve(p)
                    .map(|(c, _)| c.paths)
                    .map_err(|e| StepError::Internal(e.to_string()))
            });
            match res {
                Ok(paths) if verify_pdpc(g, &pairs, &paths).accepted => accepted += 1,
                Ok(_) => failures.push(format!("{pairs:?}: rejected")),
                Err(e) => failures.push(format!("{pairs:?}: {e}")),
            }
        }
    }
    report.record(
        6,
        failures.is_empty() && accepted == 1000,
        format!("pair-count reduction on rank 4: {accepted}/1000 accepted {}", first_failures(&failures)),
    );
}

/// Small welds: rank-2 welds of complete bipartite leaves and the rank-3
/// transposition graph.
fn small_corpus() -> Vec<(String, WeldTree)> {
    let mut out = vec![
        ("transposition 2".to_string(), transposition_graph(2).unwrap()),
        ("transposition 3".to_string(), transposition_graph(3).unwrap()),
    ];
    for (m, layers) in [(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 2), (2, 3), (3, 2)] {
        for seed in 0..3 {
            out.push((format!("kmm 2 {m} {layers} {seed}"), kmm_weld(2, m, layers, seed).unwrap()));
        }
    }
    out
}

fn oracle_agreement(report: &mut Report) {
    let cfg = OracleConfig::default();
    let mut solved = 0;
    let mut unbalanced = 0;
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    for (name, tree) in small_corpus() {
        let solver = Solver::new(&tree).unwrap();
        let g = solver.graph();
        assert!(g.num_vertices() <= 12);
        let k = tree.rank() - 1;
        for pairs in all_instances(g, k) {
            let ours = solver.solve(&pairs);
            let brute = brute_pdpc(g, &pairs, &cfg).unwrap();
            match (ours, brute) {
                (Ok((c, _)), Some(b))
                    if verify_pdpc(g, &pairs, &c.paths).accepted && verify_pdpc(g, &pairs, &b.paths).accepted =>
                {
                    solved += 1
                }
                (ours, brute) => failures.push(format!(
                    "{name} {pairs:?}: solver ok={} oracle found={}",
                    ours.is_ok(),
                    brute.is_some()
                )),
            }
        }
        let n = g.num_vertices();
        for _ in 0..50 {
            let count = rng.gen_range(1..=(n / 2).min(3));
            let mut vs: Vec<Vertex> = (0..n).collect();
            vs.shuffle(&mut rng);
            let pairs: Pairs = (0..count).map(|i| (vs[2 * i], vs[2 * i + 1])).collect();
            if is_balanced(g, &pairs).unwrap() {
                continue;
            }
            unbalanced += 1;
            if brute_pdpc(g, &pairs, &cfg).unwrap().is_some() {
                failures.push(format!("{name} {pairs:?}: cover found for unbalanced spec"));
            }
        }
    }
    report.record(
        7,
        failures.is_empty(),
        format!(
            "oracle agreement on welds of at most 12 vertices: {solved} solved and confirmed, {unbalanced} unbalanced specs all NONE, {} disagreements {}",
            failures.len(),
            first_failures(&failures)
        ),
    );
}

fn swap_adjacent(cover: &[Vec<Vertex>]) -> Option<Vec<Vec<Vertex>>> {
    let i = cover.iter().position(|p| p.len() >= 4)?;
    let mut c = cover.to_vec();
    c[i].swap(1, 2);
    Some(c)
}

fn drop_interior(cover: &[Vec<Vertex>]) -> Option<Vec<Vec<Vertex>>> {
    let i = cover.iter().position(|p| p.len() >= 3)?;
    let mut c = cover.to_vec();
    c[i].remove(1);
    Some(c)
}

/// Reverses `p[1..=j]` for the first `j` with `p[0]`–`p[j]` a non-edge, so
/// the vertex set and endpoints stay put and only one edge breaks.
fn non_edge_splice(g: &AssembledGraph, cover: &[Vec<Vertex>]) -> Option<Vec<Vec<Vertex>>> {
    for (i, p) in cover.iter().enumerate() {
        for j in 2..p.len().saturating_sub(1) {
            if !g.is_edge(p[0], p[j]) {
                let mut c = cover.to_vec();
                c[i][1..=j].reverse();
                return Some(c);
            }
        }
    }
    None
}

fn metamorphic(report: &mut Report) {
    let solver = solver_for(4);
    let g = solver.graph();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let mut covers = 0;
    let mut rejected = 0;
    let mut survived = Vec::new();
    while covers < 1000 {
        let pairs = random_pairs(g, 3, &mut rng);
        let r = run(&solver, &pairs, true);
        let Some(cover) = r.cover else { continue };
        if r.error.is_some() {
            continue;
        }
        covers += 1;
        let mutants = [
            ("swap", swap_adjacent(&cover)),
            ("drop", drop_interior(&cover)),
            ("splice", non_edge_splice(g, &cover)),
        ];
        for (name, m) in mutants {
            match m {
                Some(m) if !verify_pdpc(g, &pairs, &m).accepted => rejected += 1,
                Some(_) => survived.push(format!("{name} on {pairs:?}")),
                None => survived.push(format!("{name} not applicable on {pairs:?}")),
            }
        }
    }
    report.record(
        8,
        survived.is_empty() && rejected == 3000,
        format!("mutated covers rejected: {rejected}/3000 {}", first_failures(&survived)),
    );
}

fn counting(report: &mut Report) {
    let t = &report.counting;
    let pass = t.bad_checks.is_empty() && t.checks > 0;
    let detail = format!(
        "counting bounds over criteria 1-3: {} checks, {} violations {}",
        t.checks,
        t.bad_checks.len(),
        first_failures(&t.bad_checks)
    );
    report.record(9, pass, detail);
}

fn main() -> ExitCode {
    let mut report = Report {
        lines: Vec::new(),
        counting: Tally::default(),
    };
    rank3(&mut report);
    rank4(&mut report);
    rank5(&mut report);
    laceability(&mut report);
    generated(&mut report);
    reduction(&mut report);
    oracle_agreement(&mut report);
    metamorphic(&mut report);
    counting(&mut report);
    let failed: Vec<usize> = report.lines.iter().filter(|l| !l.1).map(|l| l.0).collect();
    if failed.is_empty() {
        println!("acceptance: all {} criteria pass", report.lines.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
