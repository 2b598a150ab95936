//! Bipartite graph representation shared by every other module.
//!
//! Vertices are dense ids `0..num_vertices`. Each vertex carries an explicit
//! [`Color`] and the index of the top-level layer it belongs to. Layers occupy
//! contiguous id ranges in child order.

use std::fmt::Write as _;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Dense vertex identifier.
pub type Vertex = usize;

/// Side of the bipartition. `Black` is the first partite set, `White` the second.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Color::Black => "black",
            Color::White => "white",
        }
    }
}

/// Sizes of the two color classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub black_count: usize,
    pub white_count: usize,
}

/// A flattened, immutable bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssembledGraph {
    adjacency: Vec<Vec<Vertex>>,
    color: Vec<Color>,
    layer_of: Vec<usize>,
    layer_ranges: Vec<Range<Vertex>>,
}

impl AssembledGraph {
    /// Builds a graph from an edge list. Neighbor lists are sorted and
    /// deduplicated; loops and out-of-range ids are rejected. The coloring is
    /// stored as given: use [`is_bipartite_properly_colored`] to check it.
    ///
    /// `layer_of` may be empty, in which case every vertex sits in layer 0.
    pub fn new(
        colors: Vec<Color>,
        edges: &[(Vertex, Vertex)],
        layer_of: Vec<usize>,
    ) -> Result<Self, Error> {
        let n = colors.len();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    num_vertices: n,
                });
            }
            if u == v {
                return Err(Error::Input(format!("loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        let layer_of = if layer_of.is_empty() {
            vec![0; n]
        } else {
            layer_of
        };
        if layer_of.len() != n {
            return Err(Error::Input(format!(
                "layer_of has {} entries for {n} vertices",
                layer_of.len()
            )));
        }
        let layer_ranges = contiguous_ranges(&layer_of)?;
        Ok(AssembledGraph {
            adjacency,
            color: colors,
            layer_of,
            layer_ranges,
        })
    }

    /// Convenience constructor for a single-layer graph.
    pub fn from_edges(colors: Vec<Color>, edges: &[(Vertex, Vertex)]) -> Result<Self, Error> {
        Self::new(colors, edges, Vec::new())
    }

    pub fn num_vertices(&self) -> usize {
        self.color.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: Vertex) -> Result<&[Vertex], Error> {
        self.check_vertex(v)?;
        Ok(&self.adjacency[v])
    }

    /// Unchecked neighbor access for hot loops; panics on a bad id.
    #[inline]
    pub fn adj(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn color(&self, v: Vertex) -> Color {
        self.color[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.color
    }

    #[inline]
    pub fn layer_of(&self, v: Vertex) -> usize {
        self.layer_of[v]
    }

    pub fn layer_ranges(&self) -> &[Range<Vertex>] {
        &self.layer_ranges
    }

    pub fn is_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.num_vertices() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn coloring(&self) -> Coloring {
        let black_count = self.color.iter().filter(|c| **c == Color::Black).count();
        Coloring {
            black_count,
            white_count: self.color.len() - black_count,
        }
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), Error> {
        if v < self.num_vertices() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                num_vertices: self.num_vertices(),
            })
        }
    }

    /// Each undirected edge once, `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Induced subgraph on a contiguous id range, relabeled to start at 0.
    pub fn induced_range(&self, range: Range<Vertex>) -> AssembledGraph {
        let lo = range.start;
        let colors = self.color[range.clone()].to_vec();
        let adjacency = self.adjacency[range.clone()]
            .iter()
            .map(|list| {
                list.iter()
                    .filter(|v| range.contains(v))
                    .map(|v| v - lo)
                    .collect()
            })
            .collect();
        let n = range.len();
        AssembledGraph {
            adjacency,
            color: colors,
            layer_of: vec![0; n],
            layer_ranges: vec![0..n],
        }
    }

    /// DOT export: one `graph` block, each vertex tagged with its color and layer.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.num_vertices() {
            let _ = writeln!(
                out,
                "  {v} [color={}, layer={}];",
                self.color[v].as_str(),
                self.layer_of[v]
            );
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> GraphDocument {
        GraphDocument {
            num_vertices: self.num_vertices(),
            colors: self.color.clone(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
            layer_of: self.layer_of.clone(),
        }
    }
}

/// JSON form of an [`AssembledGraph`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub num_vertices: usize,
    pub colors: Vec<Color>,
    pub edges: Vec<[Vertex; 2]>,
    pub layer_of: Vec<usize>,
}

impl GraphDocument {
    pub fn into_graph(self) -> Result<AssembledGraph, Error> {
        if self.colors.len() != self.num_vertices {
            return Err(Error::Input(format!(
                "{} colors for {} vertices",
                self.colors.len(),
                self.num_vertices
            )));
        }
        let edges: Vec<_> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        AssembledGraph::new(self.colors, &edges, self.layer_of)
    }
}

fn contiguous_ranges(layer_of: &[usize]) -> Result<Vec<Range<Vertex>>, Error> {
    let mut ranges: Vec<Range<Vertex>> = Vec::new();
    for (v, &layer) in layer_of.iter().enumerate() {
        match ranges.len() {
            n if n == layer + 1 => ranges[layer].end = v + 1,
            n if n == layer => ranges.push(v..v + 1),
            _ => {
                return Err(Error::Input(format!(
                    "layers must occupy contiguous id ranges in order (vertex {v} in layer {layer})"
                )))
            }
        }
    }
    Ok(ranges)
}

/// Sorted neighbor list of `v`.
pub fn neighbors(g: &AssembledGraph, v: Vertex) -> Result<&[Vertex], Error> {
    g.neighbors(v)
}

/// True iff every edge joins a black vertex to a white vertex.
pub fn is_bipartite_properly_colored(g: &AssembledGraph) -> bool {
    g.edges().all(|(u, v)| g.color(u) != g.color(v))
}

/// True iff both color classes have the same size.
pub fn is_equitable(g: &AssembledGraph) -> bool {
    let c = g.coloring();
    c.black_count == c.white_count
}

/// Evaluates the necessary balance condition for a paired cover:
/// `|(S∪T)∩B| − |(S∪T)∩W| = 2(|B| − |W|)`.
pub fn is_balanced(g: &AssembledGraph, pairs: &[(Vertex, Vertex)]) -> Result<bool, Error> {
    let mut seen = vec![false; g.num_vertices()];
    let mut diff: i64 = 0;
    for &(s, t) in pairs {
        for v in [s, t] {
            g.check_vertex(v)?;
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::Input(format!("duplicate endpoint {v}")));
            }
            diff += match g.color(v) {
                Color::Black => 1,
                Color::White => -1,
            };
        }
    }
    let c = g.coloring();
    Ok(diff == 2 * (c.black_count as i64 - c.white_count as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Color::{Black as B, White as W};

    fn k2() -> AssembledGraph {
        AssembledGraph::from_edges(vec![B, W], &[(0, 1)]).unwrap()
    }

    fn path3() -> AssembledGraph {
        AssembledGraph::from_edges(vec![B, W, B], &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn neighbors_of_k2_and_isolated() {
        assert_eq!(k2().neighbors(0).unwrap(), &[1]);
        let g = AssembledGraph::from_edges(vec![B], &[]).unwrap();
        assert!(g.neighbors(0).unwrap().is_empty());
        assert!(matches!(
            g.neighbors(3),
            Err(Error::VertexOutOfRange { vertex: 3, .. })
        ));
    }

    #[test]
    fn proper_coloring() {
        assert!(is_bipartite_properly_colored(&k2()));
        for colors in [vec![B, W, B], vec![B, B, W], vec![W, W, W]] {
            let tri = AssembledGraph::from_edges(colors, &[(0, 1), (1, 2), (0, 2)]).unwrap();
            assert!(!is_bipartite_properly_colored(&tri));
        }
    }

    #[test]
    fn equitable() {
        assert!(is_equitable(&k2()));
        assert!(!is_equitable(&path3()));
    }

    #[test]
    fn balance_condition() {
        let c4 = AssembledGraph::from_edges(vec![B, W, B, W], &[(0, 1), (1, 2), (2, 3), (3, 0)])
            .unwrap();
        assert!(is_balanced(&c4, &[(0, 1)]).unwrap());
        assert!(!is_balanced(&c4, &[(1, 3)]).unwrap());
        // 2 black, 1 white: both endpoints black gives 2 - 0 = 2 * (2 - 1).
        assert!(is_balanced(&path3(), &[(0, 2)]).unwrap());
        assert!(is_balanced(&c4, &[(0, 1), (1, 2)]).is_err());
    }

    #[test]
    fn rejects_loops_and_bad_layers() {
        assert!(AssembledGraph::from_edges(vec![B, W], &[(1, 1)]).is_err());
        assert!(AssembledGraph::from_edges(vec![B, W], &[(0, 2)]).is_err());
        assert!(AssembledGraph::new(vec![B, W, B], &[], vec![0, 1, 0]).is_err());
        let g = AssembledGraph::new(vec![B, W, B, W], &[], vec![0, 0, 1, 1]).unwrap();
        assert_eq!(g.layer_ranges(), &[0..2, 2..4]);
    }

    #[test]
    fn exports() {
        let g = k2();
        let dot = g.to_dot();
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("0 [color=black, layer=0];"));
        assert!(dot.contains("0 -- 1;"));
        let doc = g.to_json();
        let text = serde_json::to_string(&doc).unwrap();
        assert_eq!(
            text,
            r#"{"num_vertices":2,"colors":["black","white"],"edges":[[0,1]],"layer_of":[0,0]}"#
        );
        let back: GraphDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back.into_graph().unwrap(), g);
    }
}
