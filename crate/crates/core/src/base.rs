//! Exhaustive search: Hamiltonian paths inside leaves and a brute-force
//! paired path cover oracle for small graphs.
//!
//! Both share one depth-first engine. Neighbors are tried in ascending id
//! order, so results are deterministic. Pruning only removes branches that
//! provably cannot complete, so absence is a proof of non-existence.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{AssembledGraph, Color, Vertex};
use crate::weld::LaceabilityMode;

/// Default largest graph the oracle will search.
pub const DEFAULT_ORACLE_BOUND: usize = 16;

/// Environment variable overriding [`DEFAULT_ORACLE_BOUND`].
pub const ORACLE_BOUND_ENV: &str = "WELDPATH_ORACLE_BOUND";

/// Ordered endpoint pairs `(s_i, t_i)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairSpec {
    pub pairs: Vec<(Vertex, Vertex)>,
}

impl PairSpec {
    pub fn new(pairs: Vec<(Vertex, Vertex)>) -> Self {
        PairSpec { pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Checks range, distinctness of all endpoints, black sources and
    /// white targets.
    pub fn validate(&self, g: &AssembledGraph) -> Result<(), Error> {
        check_endpoints(g, &self.pairs)?;
        for (i, &(s, t)) in self.pairs.iter().enumerate() {
            if g.color(s) != Color::Black {
                return Err(Error::Input(format!("pair {i}: source {s} is not black")));
            }
            if g.color(t) != Color::White {
                return Err(Error::Input(format!("pair {i}: target {t} is not white")));
            }
        }
        Ok(())
    }
}

/// Vertex-disjoint paths, path `i` running from `s_i` to `t_i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathCover {
    pub paths: Vec<Vec<Vertex>>,
}

/// Oracle limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub bound: usize,
    /// Accept leaves above the bound without searching them.
    pub trust_leaves: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            bound: DEFAULT_ORACLE_BOUND,
            trust_leaves: false,
        }
    }
}

impl OracleConfig {
    /// Default config with the bound taken from `WELDPATH_ORACLE_BOUND` when set.
    pub fn from_env() -> Result<Self, Error> {
        let mut config = OracleConfig::default();
        if let Ok(raw) = std::env::var(ORACLE_BOUND_ENV) {
            config.bound = raw.trim().parse().map_err(|_| {
                Error::Input(format!("{ORACLE_BOUND_ENV} must be an integer, got {raw:?}"))
            })?;
        }
        Ok(config)
    }

    pub fn with_bound(bound: usize) -> Self {
        OracleConfig {
            bound,
            ..OracleConfig::default()
        }
    }
}

fn check_endpoints(g: &AssembledGraph, pairs: &[(Vertex, Vertex)]) -> Result<(), Error> {
    let mut seen = vec![false; g.num_vertices()];
    for &(s, t) in pairs {
        for v in [s, t] {
            g.check_vertex(v)?;
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::Input(format!("vertex {v} is used as an endpoint twice")));
            }
        }
    }
    Ok(())
}

/// Hamiltonian path from `s` to `t`, or `None` if there is none.
///
/// `s == t` is only satisfiable on a single-vertex graph, where the answer
/// is the trivial path `[s]`. No size bound applies.
pub fn ham_path_between(
    g: &AssembledGraph,
    s: Vertex,
    t: Vertex,
) -> Result<Option<Vec<Vertex>>, Error> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Ok((g.num_vertices() == 1).then(|| vec![s]));
    }
    Ok(Search::new(g, &[(s, t)]).run().map(|mut p| p.remove(0)))
}

/// Exhaustive paired path cover search. Endpoints may have any colors; the
/// answer is `None` exactly when no cover exists.
pub fn brute_pdpc(
    g: &AssembledGraph,
    pairs: &[(Vertex, Vertex)],
    config: &OracleConfig,
) -> Result<Option<PathCover>, Error> {
    if g.num_vertices() > config.bound {
        return Err(Error::OracleBound {
            vertices: g.num_vertices(),
            bound: config.bound,
        });
    }
    check_endpoints(g, pairs)?;
    if pairs.is_empty() {
        return Ok((g.num_vertices() == 0).then(PathCover::default));
    }
    Ok(Search::new(g, pairs).run().map(|paths| PathCover { paths }))
}

/// Checks the rank-1 promise of a leaf by searching every relevant pair.
///
/// Leaves above the oracle bound are refused unless `trust_leaves` is set,
/// in which case they are accepted unchecked.
pub fn certify_leaf(
    g: &AssembledGraph,
    mode: LaceabilityMode,
    config: &OracleConfig,
) -> Result<bool, Error> {
    let n = g.num_vertices();
    if n == 1 {
        return Ok(true);
    }
    if n > config.bound {
        if config.trust_leaves {
            return Ok(true);
        }
        return Err(Error::OracleBound {
            vertices: n,
            bound: config.bound,
        });
    }
    if n == 0 {
        return Ok(false);
    }
    let pairs: Vec<(Vertex, Vertex)> = match mode {
        LaceabilityMode::HamiltonianLaceable => {
            if !crate::graph::is_bipartite_properly_colored(g) {
                return Ok(false);
            }
            let black = (0..n).filter(|&v| g.color(v) == Color::Black);
            black
                .flat_map(|b| (0..n).filter(move |&w| g.color(w) == Color::White).map(move |w| (b, w)))
                .collect()
        }
        LaceabilityMode::HamiltonianConnected => (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect(),
    };
    if pairs.is_empty() {
        return Ok(false);
    }
    for (s, t) in pairs {
        if ham_path_between(g, s, t)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

const NONE: usize = usize::MAX;

struct Search<'a> {
    g: &'a AssembledGraph,
    pairs: &'a [(Vertex, Vertex)],
    /// Pair index owning each endpoint, `NONE` for interior vertices.
    owner: Vec<usize>,
    visited: Vec<bool>,
    unvisited: usize,
    paths: Vec<Vec<Vertex>>,
    comp: Vec<usize>,
    queue: VecDeque<Vertex>,
}

impl<'a> Search<'a> {
    fn new(g: &'a AssembledGraph, pairs: &'a [(Vertex, Vertex)]) -> Self {
        let n = g.num_vertices();
        let mut owner = vec![NONE; n];
        for (i, &(s, t)) in pairs.iter().enumerate() {
            owner[s] = i;
            owner[t] = i;
        }
        Search {
            g,
            pairs,
            owner,
            visited: vec![false; n],
            unvisited: n,
            paths: vec![Vec::new(); pairs.len()],
            comp: vec![NONE; n],
            queue: VecDeque::new(),
        }
    }

    fn run(mut self) -> Option<Vec<Vec<Vertex>>> {
        self.start(0).then_some(self.paths)
    }

    fn visit(&mut self, i: usize, v: Vertex) {
        self.visited[v] = true;
        self.unvisited -= 1;
        self.paths[i].push(v);
    }

    fn leave(&mut self, i: usize, v: Vertex) {
        self.visited[v] = false;
        self.unvisited += 1;
        self.paths[i].pop();
    }

    fn start(&mut self, i: usize) -> bool {
        if i == self.pairs.len() {
            return self.unvisited == 0;
        }
        let (s, t) = self.pairs[i];
        self.visit(i, s);
        let found = if s == t {
            self.start(i + 1)
        } else {
            self.step(i, s)
        };
        if !found {
            self.leave(i, s);
        }
        found
    }

    fn step(&mut self, i: usize, cur: Vertex) -> bool {
        let t = self.pairs[i].1;
        if !self.feasible(i, cur) {
            return false;
        }
        let g = self.g;
        for &nb in g.adj(cur) {
            if self.visited[nb] {
                continue;
            }
            if nb == t {
                self.visit(i, nb);
                if self.start(i + 1) {
                    return true;
                }
                self.leave(i, nb);
                continue;
            }
            if self.owner[nb] != NONE {
                continue;
            }
            self.visit(i, nb);
            if self.step(i, nb) {
                return true;
            }
            self.leave(i, nb);
        }
        false
    }

    /// Necessary conditions for completing path `i` from `cur` and all later
    /// paths: `t_i` reachable through free vertices, each later pair inside
    /// one component of the unvisited graph, and no component left without
    /// a path to cover it.
    fn feasible(&mut self, i: usize, cur: Vertex) -> bool {
        let g = self.g;
        let t = self.pairs[i].1;

        // Reachability of t through vertices that are not reserved endpoints.
        self.comp.fill(NONE);
        self.queue.clear();
        self.queue.push_back(cur);
        self.comp[cur] = 0;
        let mut reached = false;
        while let Some(v) = self.queue.pop_front() {
            for &nb in g.adj(v) {
                if self.visited[nb] || self.comp[nb] != NONE {
                    continue;
                }
                if nb == t {
                    reached = true;
                    break;
                }
                if self.owner[nb] != NONE {
                    continue;
                }
                self.comp[nb] = 0;
                self.queue.push_back(nb);
            }
            if reached {
                break;
            }
        }
        if !reached {
            return false;
        }

        // Components of the unvisited graph.
        self.comp.fill(NONE);
        let mut count = 0;
        for root in 0..g.num_vertices() {
            if self.visited[root] || self.comp[root] != NONE {
                continue;
            }
            self.comp[root] = count;
            self.queue.push_back(root);
            while let Some(v) = self.queue.pop_front() {
                for &nb in g.adj(v) {
                    if !self.visited[nb] && self.comp[nb] == NONE {
                        self.comp[nb] = count;
                        self.queue.push_back(nb);
                    }
                }
            }
            count += 1;
        }
        let mut served = vec![false; count];
        served[self.comp[t]] = true;
        for &(s, tt) in &self.pairs[i + 1..] {
            if self.comp[s] != self.comp[tt] {
                return false;
            }
            served[self.comp[s]] = true;
        }
        served.into_iter().all(|x| x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Color::{Black as B, White as W};

    fn cycle(n: usize) -> AssembledGraph {
        let colors = (0..n).map(|v| if v % 2 == 0 { B } else { W }).collect();
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        AssembledGraph::from_edges(colors, &edges).unwrap()
    }

    fn kmm(m: usize) -> AssembledGraph {
        let colors = (0..2 * m).map(|v| if v < m { B } else { W }).collect();
        let edges: Vec<_> = (0..m).flat_map(|b| (m..2 * m).map(move |w| (b, w))).collect();
        AssembledGraph::from_edges(colors, &edges).unwrap()
    }

    #[test]
    fn ham_paths() {
        let single = AssembledGraph::from_edges(vec![B], &[]).unwrap();
        assert_eq!(ham_path_between(&single, 0, 0).unwrap(), Some(vec![0]));
        assert_eq!(ham_path_between(&kmm(1), 0, 1).unwrap(), Some(vec![0, 1]));
        assert_eq!(ham_path_between(&cycle(6), 0, 3).unwrap(), None);
        assert_eq!(
            ham_path_between(&cycle(6), 0, 1).unwrap(),
            Some(vec![0, 5, 4, 3, 2, 1])
        );
        assert!(ham_path_between(&cycle(6), 0, 9).is_err());
    }

    #[test]
    fn brute_on_c4() {
        let c4 = cycle(4);
        let cfg = OracleConfig::default();
        let cover = brute_pdpc(&c4, &[(0, 3)], &cfg).unwrap().unwrap();
        assert_eq!(cover.paths, vec![vec![0, 1, 2, 3]]);
        let cover = brute_pdpc(&c4, &[(0, 1), (2, 3)], &cfg).unwrap().unwrap();
        assert_eq!(cover.paths, vec![vec![0, 1], vec![2, 3]]);
        // two black sources, two black... unbalanced: both endpoints black
        assert_eq!(brute_pdpc(&c4, &[(0, 2)], &cfg).unwrap(), None);
    }

    #[test]
    fn oracle_bound_is_enforced() {
        let big = cycle(18);
        assert!(matches!(
            brute_pdpc(&big, &[(0, 1)], &OracleConfig::default()),
            Err(Error::OracleBound { vertices: 18, bound: 16 })
        ));
        assert!(brute_pdpc(&big, &[(0, 1)], &OracleConfig::with_bound(24))
            .unwrap()
            .is_some());
    }

    #[test]
    fn leaf_certification() {
        let cfg = OracleConfig::default();
        for m in 1..=3 {
            assert!(certify_leaf(&kmm(m), LaceabilityMode::HamiltonianLaceable, &cfg).unwrap());
        }
        assert!(!certify_leaf(&cycle(6), LaceabilityMode::HamiltonianLaceable, &cfg).unwrap());
        assert!(!certify_leaf(&kmm(2), LaceabilityMode::HamiltonianConnected, &cfg).unwrap());
        let big = kmm(9);
        assert!(certify_leaf(&big, LaceabilityMode::HamiltonianLaceable, &cfg).is_err());
        let trusting = OracleConfig {
            trust_leaves: true,
            ..cfg
        };
        assert!(certify_leaf(&big, LaceabilityMode::HamiltonianLaceable, &trusting).unwrap());
    }

    #[test]
    fn pair_spec_validation() {
        let c4 = cycle(4);
        assert!(PairSpec::new(vec![(0, 1)]).validate(&c4).is_ok());
        assert!(PairSpec::new(vec![(1, 0)]).validate(&c4).is_err());
        assert!(PairSpec::new(vec![(0, 1), (0, 3)]).validate(&c4).is_err());
        let text = serde_json::to_string(&PairSpec::new(vec![(0, 1)])).unwrap();
        assert_eq!(text, r#"{"pairs":[[0,1]]}"#);
    }
}
