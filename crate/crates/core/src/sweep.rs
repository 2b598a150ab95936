//! Batch runs: exhaustive instance enumeration, seeded fuzzing, and a map
//! that fans out over threads when the `parallel` feature is on.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{AssembledGraph, Color, Vertex};
use crate::pdpc::{SolveError, Solver};
use crate::verify::verify_pdpc;
use crate::weld::{kmm_weld, transposition_graph, WeldTree};

pub fn map_seq<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_par<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

/// [`map_par`] when built with `parallel`, [`map_seq`] otherwise. Output
/// order matches input order either way.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        map_par(items, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_seq(items, f)
    }
}

fn combinations(items: &[Vertex], k: usize) -> Vec<Vec<Vertex>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for at in 0..=p.len() {
            let mut q = p.clone();
            q.insert(at, k - 1);
            out.push(q);
        }
    }
    out
}

/// Every choice of `k` black sources, `k` white targets and a bijection
/// between them. Sources are listed in increasing order.
pub fn all_instances(g: &AssembledGraph, k: usize) -> Vec<Vec<(Vertex, Vertex)>> {
    let blacks: Vec<Vertex> = (0..g.num_vertices()).filter(|&v| g.color(v) == Color::Black).collect();
    let whites: Vec<Vertex> = (0..g.num_vertices()).filter(|&v| g.color(v) == Color::White).collect();
    let perms = permutations(k);
    let ts = combinations(&whites, k);
    let mut out = Vec::new();
    for s in combinations(&blacks, k) {
        for t in &ts {
            for p in &perms {
                out.push((0..k).map(|i| (s[i], t[p[i]])).collect());
            }
        }
    }
    out
}

/// `k` distinct black sources and `k` distinct white targets, uniformly.
pub fn random_pairs(g: &AssembledGraph, k: usize, rng: &mut ChaCha8Rng) -> Vec<(Vertex, Vertex)> {
    let mut blacks: Vec<Vertex> = (0..g.num_vertices()).filter(|&v| g.color(v) == Color::Black).collect();
    let mut whites: Vec<Vertex> = (0..g.num_vertices()).filter(|&v| g.color(v) == Color::White).collect();
    let (s, _) = blacks.partial_shuffle(rng, k);
    let (t, _) = whites.partial_shuffle(rng, k);
    s.iter().copied().zip(t.iter().copied()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Transposition,
    KmmWeld,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzConfig {
    pub family: Family,
    pub instances: usize,
    pub seed: u64,
    /// Ranks are drawn from `2..=max_rank`.
    pub max_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzFailure {
    pub instance: usize,
    pub rank: usize,
    pub pairs: Vec<(Vertex, Vertex)>,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzReport {
    pub instances: usize,
    pub passed: usize,
    pub failures: Vec<FuzzFailure>,
    /// Count of top-level construction labels.
    pub histogram: BTreeMap<String, usize>,
}

/// Solves and verifies one instance; `Err` carries the reason it failed.
pub fn check_instance(solver: &Solver, pairs: &[(Vertex, Vertex)]) -> Result<String, String> {
    match solver.solve(pairs) {
        Ok((cover, trace)) => {
            let verdict = verify_pdpc(solver.graph(), pairs, &cover.paths);
            match verdict.violation {
                None => Ok(trace.full_label()),
                Some(v) => Err(format!("cover rejected: {}", v.reason)),
            }
        }
        Err(SolveError::Construction { error, trace }) => {
            Err(format!("{} ({})", error, trace.full_label()))
        }
        Err(e) => Err(e.to_string()),
    }
}

fn instance_rng(seed: u64, i: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i as u64);
    rng
}

/// Random welds of the chosen family with random pairs, every cover
/// verified. Instance `i` depends only on `seed` and `i`.
pub fn fuzz(config: &FuzzConfig) -> Result<FuzzReport, Error> {
    use rand::Rng;
    if config.max_rank < 2 {
        return Err(Error::Input("max rank must be at least 2".into()));
    }
    let max = match config.family {
        Family::Transposition => crate::weld::MAX_TRANSPOSITION_RANK.min(config.max_rank),
        Family::KmmWeld => config.max_rank,
    };
    let solvers: Vec<Option<Solver>> = match config.family {
        Family::Transposition => (0..=max)
            .map(|n| {
                if n < 2 {
                    return Ok(None);
                }
                let tree = transposition_graph(n)?;
                Ok(Some(Solver::new(&tree).map_err(|e| Error::Construction(e.to_string()))?))
            })
            .collect::<Result<_, Error>>()?,
        Family::KmmWeld => Vec::new(),
    };
    let ids: Vec<usize> = (0..config.instances).collect();
    let results = map(&ids, |&i| {
        let mut rng = instance_rng(config.seed, i);
        let rank = rng.gen_range(2..=max);
        let owned;
        let solver = match config.family {
            Family::Transposition => solvers[rank].as_ref().unwrap(),
            Family::KmmWeld => {
                let m = rng.gen_range(1..=2);
                let layers = rng.gen_range(rank..=rank + 1);
                let tree: WeldTree = match kmm_weld(rank, m, layers, rng.gen()) {
                    Ok(t) => t,
                    Err(e) => return (rank, Vec::new(), Err(e.to_string())),
                };
                owned = match Solver::new(&tree) {
                    Ok(s) => s,
                    Err(e) => return (rank, Vec::new(), Err(e.to_string())),
                };
                &owned
            }
        };
        let pairs = random_pairs(solver.graph(), rank - 1, &mut rng);
        let outcome = check_instance(solver, &pairs);
        (rank, pairs, outcome)
    });
    let mut report = FuzzReport {
        instances: config.instances,
        ..FuzzReport::default()
    };
    for (i, (rank, pairs, outcome)) in results.into_iter().enumerate() {
        match outcome {
            Ok(label) => {
                report.passed += 1;
                *report.histogram.entry(label).or_default() += 1;
            }
            Err(reason) => report.failures.push(FuzzFailure {
                instance: i,
                rank,
                pairs,
                reason,
            }),
        }
    }
    Ok(report)
}
