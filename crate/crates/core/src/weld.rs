//! Transposition-like graphs as recursive welds.
//!
//! A [`WeldTree`] is either an explicit rank-1 [`Leaf`] or a [`Node`] whose
//! children all have rank `rank - 1` and the same order, joined pairwise by
//! perfect matchings. [`assemble`] flattens a tree into an [`AssembledGraph`]
//! where every subtree occupies a contiguous id range.

use std::collections::{BTreeMap, HashMap};
use std::ops::Range;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::Error;
use crate::graph::{AssembledGraph, Color, Vertex};

/// Largest transposition graph rank the generator accepts (7! = 5040 vertices).
pub const MAX_TRANSPOSITION_RANK: usize = 7;

/// What a rank-1 leaf promises about Hamiltonian paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LaceabilityMode {
    /// A Hamiltonian path between every pair of vertices.
    #[serde(rename = "connected")]
    HamiltonianConnected,
    /// A Hamiltonian path between every black/white pair.
    #[serde(rename = "laceable")]
    HamiltonianLaceable,
}

impl LaceabilityMode {
    fn as_str(self) -> &'static str {
        match self {
            LaceabilityMode::HamiltonianConnected => "connected",
            LaceabilityMode::HamiltonianLaceable => "laceable",
        }
    }
}

/// An explicit rank-1 graph with local vertex ids `0..colors.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Leaf {
    pub colors: Vec<Color>,
    pub edges: Vec<(usize, usize)>,
    pub mode: LaceabilityMode,
}

impl Leaf {
    pub fn single(color: Color) -> Leaf {
        Leaf {
            colors: vec![color],
            edges: Vec::new(),
            mode: LaceabilityMode::HamiltonianConnected,
        }
    }

    pub fn to_graph(&self) -> Result<AssembledGraph, Error> {
        AssembledGraph::from_edges(self.colors.clone(), &self.edges)
    }
}

/// Pairwise perfect matchings between the children of a node.
///
/// Each unordered pair `(i, j)`, `i < j`, is stored once as a forward array
/// (vertex of layer `i` to its partner in layer `j`) together with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingMap {
    layers: usize,
    size: usize,
    forward: BTreeMap<(usize, usize), Vec<usize>>,
    inverse: BTreeMap<(usize, usize), Vec<usize>>,
}

impl MatchingMap {
    pub fn new(layers: usize, size: usize) -> Self {
        MatchingMap {
            layers,
            size,
            forward: BTreeMap::new(),
            inverse: BTreeMap::new(),
        }
    }

    pub fn layers(&self) -> usize {
        self.layers
    }

    pub fn layer_size(&self) -> usize {
        self.size
    }

    /// Records the matching between layers `i` and `j`: `partners[x]` is the
    /// local id in layer `j` matched to local id `x` of layer `i`.
    pub fn insert(&mut self, i: usize, j: usize, partners: Vec<usize>) -> Result<(), Error> {
        if i == j || i >= self.layers || j >= self.layers {
            return Err(Error::Construction(format!(
                "matching between layers {i} and {j} is not a valid layer pair"
            )));
        }
        if partners.len() != self.size {
            return Err(Error::Construction(format!(
                "matching {i}-{j} has {} entries, layers have {} vertices",
                partners.len(),
                self.size
            )));
        }
        let mut inv = vec![usize::MAX; self.size];
        for (x, &y) in partners.iter().enumerate() {
            if y >= self.size || inv[y] != usize::MAX {
                return Err(Error::Construction(format!(
                    "matching {i}-{j} is not a bijection (entry {x} -> {y})"
                )));
            }
            inv[y] = x;
        }
        let (key, fwd, bwd) = if i < j {
            ((i, j), partners, inv)
        } else {
            ((j, i), inv, partners)
        };
        self.forward.insert(key, fwd);
        self.inverse.insert(key, bwd);
        Ok(())
    }

    /// Partner of local vertex `x` of layer `i` inside layer `j`.
    pub fn partner(&self, i: usize, x: usize, j: usize) -> Option<usize> {
        if i < j {
            self.forward.get(&(i, j)).and_then(|m| m.get(x)).copied()
        } else {
            self.inverse.get(&(j, i)).and_then(|m| m.get(x)).copied()
        }
    }

    /// Forward arrays keyed by `(i, j)` with `i < j`.
    pub fn pairs(&self) -> impl Iterator<Item = ((usize, usize), &[usize])> {
        self.forward.iter().map(|(k, v)| (*k, v.as_slice()))
    }

    pub fn is_complete(&self) -> bool {
        self.forward.len() == self.layers * self.layers.saturating_sub(1) / 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub rank: usize,
    pub children: Vec<WeldTree>,
    pub matchings: MatchingMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeldTree {
    Leaf(Leaf),
    Node(Node),
}

impl WeldTree {
    pub fn rank(&self) -> usize {
        match self {
            WeldTree::Leaf(_) => 1,
            WeldTree::Node(n) => n.rank,
        }
    }

    pub fn num_vertices(&self) -> usize {
        match self {
            WeldTree::Leaf(l) => l.colors.len(),
            WeldTree::Node(n) => n.children.iter().map(WeldTree::num_vertices).sum(),
        }
    }

    /// Vertex colors in assembly order.
    pub fn colors(&self) -> Vec<Color> {
        let mut out = Vec::with_capacity(self.num_vertices());
        self.collect_colors(&mut out);
        out
    }

    fn collect_colors(&self, out: &mut Vec<Color>) {
        match self {
            WeldTree::Leaf(l) => out.extend_from_slice(&l.colors),
            WeldTree::Node(n) => n.children.iter().for_each(|c| c.collect_colors(out)),
        }
    }

    /// All leaves with their JSON-style paths, in assembly order.
    pub fn leaves(&self) -> Vec<(String, &Leaf)> {
        let mut out = Vec::new();
        self.collect_leaves("$".to_string(), &mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, path: String, out: &mut Vec<(String, &'a Leaf)>) {
        match self {
            WeldTree::Leaf(l) => out.push((path, l)),
            WeldTree::Node(n) => {
                for (i, c) in n.children.iter().enumerate() {
                    c.collect_leaves(format!("{path}.children[{i}]"), out);
                }
            }
        }
    }

    /// Structural validation: rank bookkeeping, layer counts, equal child
    /// orders, leaf parity and coloring, complete bijective matchings.
    pub fn validate(&self) -> Result<(), Error> {
        self.validate_at("$")
    }

    fn validate_at(&self, path: &str) -> Result<(), Error> {
        match self {
            WeldTree::Leaf(leaf) => validate_leaf(leaf, path),
            WeldTree::Node(node) => {
                if node.rank < 2 {
                    return Err(Error::spec(path, "internal node must have rank >= 2"));
                }
                if node.children.len() < node.rank {
                    return Err(Error::spec(
                        path,
                        format!(
                            "rank {} weld needs at least {} layers, found {}",
                            node.rank,
                            node.rank,
                            node.children.len()
                        ),
                    ));
                }
                let size = node.children[0].num_vertices();
                for (i, child) in node.children.iter().enumerate() {
                    let cpath = format!("{path}.children[{i}]");
                    if child.rank() + 1 != node.rank {
                        return Err(Error::spec(
                            &cpath,
                            format!("child rank {} under rank {}", child.rank(), node.rank),
                        ));
                    }
                    if child.num_vertices() != size {
                        return Err(Error::spec(
                            &cpath,
                            format!(
                                "layer has {} vertices, layer 0 has {size}",
                                child.num_vertices()
                            ),
                        ));
                    }
                    child.validate_at(&cpath)?;
                }
                let m = &node.matchings;
                if m.layers() != node.children.len() || m.layer_size() != size {
                    return Err(Error::spec(
                        format!("{path}.matchings"),
                        "matching map dimensions do not match the children",
                    ));
                }
                for i in 0..node.children.len() {
                    for j in i + 1..node.children.len() {
                        if !m.forward.contains_key(&(i, j)) {
                            return Err(Error::spec(
                                format!("{path}.matchings[\"{i}-{j}\"]"),
                                "missing matching",
                            ));
                        }
                    }
                }
                Ok(())
            }
        }
    }
}

fn validate_leaf(leaf: &Leaf, path: &str) -> Result<(), Error> {
    let n = leaf.colors.len();
    if n == 0 {
        return Err(Error::spec(path, "leaf has no vertices"));
    }
    if n > 1 && n % 2 == 1 {
        return Err(Error::spec(
            path,
            format!("leaf must be a single vertex or have an even number of vertices, found {n}"),
        ));
    }
    for &(u, v) in &leaf.edges {
        if u >= n || v >= n || u == v {
            return Err(Error::spec(
                format!("{path}.edges"),
                format!("bad edge [{u},{v}]"),
            ));
        }
        if leaf.colors[u] == leaf.colors[v] {
            return Err(Error::spec(
                format!("{path}.edges"),
                format!("edge [{u},{v}] joins two {} vertices", leaf.colors[u].as_str()),
            ));
        }
    }
    Ok(())
}

/// One subtree of an assembled weld: a contiguous vertex range.
#[derive(Clone, Debug)]
pub(crate) struct Region {
    pub rank: usize,
    pub range: Range<Vertex>,
    /// Region ids of the children, in layer order.
    pub children: Vec<usize>,
    pub child_len: usize,
    pub leaf_mode: Option<LaceabilityMode>,
}

/// Flattens a weld tree. Layers of the root become `layer_of`.
pub fn assemble(tree: &WeldTree) -> Result<AssembledGraph, Error> {
    assemble_regions(tree).map(|(g, _)| g)
}

pub(crate) fn assemble_regions(tree: &WeldTree) -> Result<(AssembledGraph, Vec<Region>), Error> {
    let mut colors = Vec::with_capacity(tree.num_vertices());
    let mut edges = Vec::new();
    let mut regions = Vec::new();
    lay_out(tree, &mut colors, &mut edges, &mut regions, "$")?;
    let layer_of = match tree {
        WeldTree::Leaf(_) => vec![0; colors.len()],
        WeldTree::Node(n) => {
            let len = n.children[0].num_vertices();
            (0..colors.len()).map(|v| v / len).collect()
        }
    };
    let g = AssembledGraph::new(colors, &edges, layer_of)?;
    Ok((g, regions))
}

fn lay_out(
    tree: &WeldTree,
    colors: &mut Vec<Color>,
    edges: &mut Vec<(Vertex, Vertex)>,
    regions: &mut Vec<Region>,
    path: &str,
) -> Result<usize, Error> {
    let start = colors.len();
    let id = regions.len();
    regions.push(Region {
        rank: tree.rank(),
        range: start..start,
        children: Vec::new(),
        child_len: 0,
        leaf_mode: None,
    });
    match tree {
        WeldTree::Leaf(leaf) => {
            validate_leaf(leaf, path)?;
            colors.extend_from_slice(&leaf.colors);
            edges.extend(leaf.edges.iter().map(|&(u, v)| (start + u, start + v)));
            regions[id].leaf_mode = Some(leaf.mode);
        }
        WeldTree::Node(node) => {
            if node.children.is_empty() {
                return Err(Error::spec(path, "node without children"));
            }
            let mut child_ids = Vec::with_capacity(node.children.len());
            let mut starts = Vec::with_capacity(node.children.len());
            for (i, child) in node.children.iter().enumerate() {
                starts.push(colors.len());
                child_ids.push(lay_out(
                    child,
                    colors,
                    edges,
                    regions,
                    &format!("{path}.children[{i}]"),
                )?);
            }
            let size = node.children[0].num_vertices();
            if node.children.iter().any(|c| c.num_vertices() != size) {
                return Err(Error::spec(path, "children have different vertex counts"));
            }
            if node.matchings.layer_size() != size || node.matchings.layers() != node.children.len()
            {
                return Err(Error::spec(
                    format!("{path}.matchings"),
                    "matching map dimensions do not match the children",
                ));
            }
            if !node.matchings.is_complete() {
                return Err(Error::spec(
                    format!("{path}.matchings"),
                    "a matching is missing for some layer pair",
                ));
            }
            for ((i, j), partners) in node.matchings.pairs() {
                for (x, &y) in partners.iter().enumerate() {
                    let (u, v) = (starts[i] + x, starts[j] + y);
                    if colors[u] == colors[v] {
                        return Err(Error::Construction(format!(
                            "{path}: matching {i}-{j} pairs vertex {x} of layer {i} with vertex {y} of layer {j}, both {}",
                            colors[u].as_str()
                        )));
                    }
                    edges.push((u, v));
                }
            }
            regions[id].children = child_ids;
            regions[id].child_len = size;
        }
    }
    regions[id].range = start..colors.len();
    Ok(id)
}

/// Single-vertex-leaf decomposition of the Cayley graph of `S_n` under all
/// transpositions.
///
/// Layer `i` of a rank-`r` node holds the permutations whose value at
/// position `r` is the `i`-th smallest value still free there. Vertex ids
/// order permutations lexicographically by `(π(n), π(n−1), …, π(1))`, which
/// keeps every layer contiguous. Color is parity: even permutations are black.
pub fn transposition_graph(n: usize) -> Result<WeldTree, Error> {
    if n == 0 || n > MAX_TRANSPOSITION_RANK {
        return Err(Error::Input(format!(
            "transposition graph rank must be in 1..={MAX_TRANSPOSITION_RANK}, got {n}"
        )));
    }
    let mut perms = permutations(n);
    perms.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    let index: HashMap<&[u8], usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    build_transposition(&perms, &index, 0..perms.len(), n)
}

fn build_transposition(
    perms: &[Vec<u8>],
    index: &HashMap<&[u8], usize>,
    range: Range<usize>,
    m: usize,
) -> Result<WeldTree, Error> {
    if m == 1 {
        let color = if is_even(&perms[range.start]) {
            Color::Black
        } else {
            Color::White
        };
        return Ok(WeldTree::Leaf(Leaf::single(color)));
    }
    let chunk = range.len() / m;
    let children = (0..m)
        .map(|k| {
            let lo = range.start + k * chunk;
            build_transposition(perms, index, lo..lo + chunk, m - 1)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut matchings = MatchingMap::new(m, chunk);
    for i in 0..m {
        for j in i + 1..m {
            let target = perms[range.start + j * chunk][m - 1];
            let lo_j = range.start + j * chunk;
            let partners = (0..chunk)
                .map(|x| {
                    let p = &perms[range.start + i * chunk + x];
                    let a = p[..m - 1].iter().position(|&val| val == target).ok_or_else(|| {
                        Error::Construction(format!(
                            "value {target} missing from the free positions of {p:?}"
                        ))
                    })?;
                    let mut q = p.clone();
                    q.swap(a, m - 1);
                    let id = index[q.as_slice()];
                    if !(lo_j..lo_j + chunk).contains(&id) {
                        return Err(Error::Construction(format!(
                            "cross edge from {p:?} leaves the expected layer {j}"
                        )));
                    }
                    Ok(id - lo_j)
                })
                .collect::<Result<Vec<_>, Error>>()?;
            matchings.insert(i, j, partners)?;
        }
    }
    Ok(WeldTree::Node(Node {
        rank: m,
        children,
        matchings,
    }))
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (1..=n as u8).collect();
    heap_permute(n, &mut cur, &mut out);
    out
}

fn heap_permute(k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
    if k <= 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..k {
        heap_permute(k - 1, cur, out);
        if i + 1 < k {
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
}

fn is_even(p: &[u8]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

/// `K_{m,m}` as a laceable leaf: ids `0..m` black, `m..2m` white.
pub fn complete_bipartite_leaf(m: usize) -> Result<WeldTree, Error> {
    if m == 0 {
        return Err(Error::Input("K_{m,m} needs m >= 1".into()));
    }
    let colors = (0..2 * m)
        .map(|v| if v < m { Color::Black } else { Color::White })
        .collect();
    let edges = (0..m)
        .flat_map(|b| (m..2 * m).map(move |w| (b, w)))
        .collect();
    Ok(WeldTree::Leaf(Leaf {
        colors,
        edges,
        mode: LaceabilityMode::HamiltonianLaceable,
    }))
}

/// Uniformly random color-respecting perfect matchings between every pair of
/// children, reproducible from `seed`.
pub fn random_matchings(children: &[WeldTree], seed: u64) -> Result<MatchingMap, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_matchings_with(children, &mut rng)
}

pub(crate) fn random_matchings_with(
    children: &[WeldTree],
    rng: &mut ChaCha8Rng,
) -> Result<MatchingMap, Error> {
    let size = children.first().map(WeldTree::num_vertices).unwrap_or(0);
    let split: Vec<(Vec<usize>, Vec<usize>)> = children
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let colors = c.colors();
            if colors.len() != size {
                return Err(Error::Construction(format!(
                    "child {i} has {} vertices, child 0 has {size}",
                    colors.len()
                )));
            }
            let black = (0..size).filter(|&v| colors[v] == Color::Black).collect();
            let white = (0..size).filter(|&v| colors[v] == Color::White).collect();
            Ok((black, white))
        })
        .collect::<Result<_, _>>()?;
    let mut map = MatchingMap::new(children.len(), size);
    for i in 0..children.len() {
        for j in i + 1..children.len() {
            let (bi, wi) = &split[i];
            let (bj, wj) = &split[j];
            if bi.len() != wj.len() || wi.len() != bj.len() {
                return Err(Error::Construction(format!(
                    "children {i} and {j} cannot be matched with opposite colors ({}/{} vs {}/{} black/white)",
                    bi.len(),
                    wi.len(),
                    bj.len(),
                    wj.len()
                )));
            }
            let mut partners = vec![0; size];
            let mut targets = wj.clone();
            targets.shuffle(rng);
            for (&x, &y) in bi.iter().zip(&targets) {
                partners[x] = y;
            }
            let mut targets = bj.clone();
            targets.shuffle(rng);
            for (&x, &y) in wi.iter().zip(&targets) {
                partners[x] = y;
            }
            map.insert(i, j, partners)?;
        }
    }
    Ok(map)
}

/// Weld of `K_{m,m}` leaves: every node of rank `r >= 2` has `layers`
/// children joined by seeded random matchings.
pub fn kmm_weld(rank: usize, m: usize, layers: usize, seed: u64) -> Result<WeldTree, Error> {
    if rank == 0 {
        return Err(Error::Input("rank must be >= 1".into()));
    }
    if rank >= 2 && layers < rank {
        return Err(Error::Input(format!(
            "a rank {rank} weld needs at least {rank} layers, got {layers}"
        )));
    }
    let leaf = complete_bipartite_leaf(m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    build_kmm(rank, &leaf, layers, &mut rng)
}

fn build_kmm(
    rank: usize,
    leaf: &WeldTree,
    layers: usize,
    rng: &mut ChaCha8Rng,
) -> Result<WeldTree, Error> {
    if rank == 1 {
        return Ok(leaf.clone());
    }
    let children = (0..layers)
        .map(|_| build_kmm(rank - 1, leaf, layers, rng))
        .collect::<Result<Vec<_>, _>>()?;
    let matchings = random_matchings_with(&children, rng)?;
    Ok(WeldTree::Node(Node {
        rank,
        children,
        matchings,
    }))
}

/// Serializes a tree into the weld-spec JSON document.
pub fn serialize_weld_spec(tree: &WeldTree) -> Value {
    match tree {
        WeldTree::Leaf(l) => json!({
            "rank": 1,
            "colors": l.colors,
            "edges": l.edges.iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
            "mode": l.mode.as_str(),
        }),
        WeldTree::Node(n) => {
            let matchings: Map<String, Value> = n
                .matchings
                .pairs()
                .map(|((i, j), p)| (format!("{i}-{j}"), json!(p)))
                .collect();
            json!({
                "rank": n.rank,
                "children": n.children.iter().map(serialize_weld_spec).collect::<Vec<_>>(),
                "matchings": matchings,
            })
        }
    }
}

/// Parses and validates a weld-spec JSON document.
pub fn parse_weld_spec(doc: &Value) -> Result<WeldTree, Error> {
    let tree = parse_at(doc, "$")?;
    tree.validate()?;
    Ok(tree)
}

pub fn parse_weld_spec_str(text: &str) -> Result<WeldTree, Error> {
    let doc: Value = serde_json::from_str(text)?;
    parse_weld_spec(&doc)
}

fn parse_at(doc: &Value, path: &str) -> Result<WeldTree, Error> {
    let obj = doc
        .as_object()
        .ok_or_else(|| Error::spec(path, "expected an object"))?;
    let rank = obj
        .get("rank")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::spec(path, "missing integer \"rank\""))? as usize;
    if rank == 1 {
        let colors = obj
            .get("colors")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::spec(path, "leaf needs a \"colors\" array"))?
            .iter()
            .enumerate()
            .map(|(i, c)| match c.as_str() {
                Some("black") => Ok(Color::Black),
                Some("white") => Ok(Color::White),
                _ => Err(Error::spec(
                    format!("{path}.colors[{i}]"),
                    "expected \"black\" or \"white\"",
                )),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let edges = match obj.get("edges") {
            None => Vec::new(),
            Some(v) => v
                .as_array()
                .ok_or_else(|| Error::spec(format!("{path}.edges"), "expected an array"))?
                .iter()
                .enumerate()
                .map(|(i, e)| parse_edge(e).ok_or_else(|| {
                    Error::spec(format!("{path}.edges[{i}]"), "expected [u, v]")
                }))
                .collect::<Result<Vec<_>, _>>()?,
        };
        let mode = match obj.get("mode").and_then(Value::as_str) {
            Some("laceable") => LaceabilityMode::HamiltonianLaceable,
            Some("connected") => LaceabilityMode::HamiltonianConnected,
            None if colors.len() == 1 => LaceabilityMode::HamiltonianConnected,
            _ => {
                return Err(Error::spec(
                    format!("{path}.mode"),
                    "expected \"laceable\" or \"connected\"",
                ))
            }
        };
        return Ok(WeldTree::Leaf(Leaf {
            colors,
            edges,
            mode,
        }));
    }
    if rank == 0 {
        return Err(Error::spec(path, "rank must be >= 1"));
    }
    let children = obj
        .get("children")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::spec(path, "node needs a \"children\" array"))?
        .iter()
        .enumerate()
        .map(|(i, c)| parse_at(c, &format!("{path}.children[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    if children.is_empty() {
        return Err(Error::spec(path, "node has no children"));
    }
    let size = children[0].num_vertices();
    let mut matchings = MatchingMap::new(children.len(), size);
    let raw = obj
        .get("matchings")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::spec(path, "node needs a \"matchings\" object"))?;
    for (key, value) in raw {
        let mpath = format!("{path}.matchings[\"{key}\"]");
        let (i, j) = key
            .split_once('-')
            .and_then(|(a, b)| Some((a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)))
            .filter(|(i, j)| i < j && *j < children.len())
            .ok_or_else(|| Error::spec(&mpath, "key must be \"i-j\" with i < j < layer count"))?;
        let partners = value
            .as_array()
            .ok_or_else(|| Error::spec(&mpath, "expected an array of partner ids"))?
            .iter()
            .map(|x| x.as_u64().map(|x| x as usize))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::spec(&mpath, "partner ids must be non-negative integers"))?;
        matchings
            .insert(i, j, partners)
            .map_err(|e| Error::spec(&mpath, e.to_string()))?;
    }
    Ok(WeldTree::Node(Node {
        rank,
        children,
        matchings,
    }))
}

fn parse_edge(e: &Value) -> Option<(usize, usize)> {
    let a = e.as_array()?;
    if a.len() != 2 {
        return None;
    }
    Some((a[0].as_u64()? as usize, a[1].as_u64()? as usize))
}
