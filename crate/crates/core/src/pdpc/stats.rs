use std::ops::Range;

use crate::graph::Vertex;

/// Where the endpoints of each pair sit, per layer.
///
/// `sources[j]` and `targets[j]` hold pair indices; `w[j]` counts pairs
/// with at least one endpoint in layer `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerStats {
    pub s_layer: Vec<usize>,
    pub t_layer: Vec<usize>,
    pub sources: Vec<Vec<usize>>,
    pub targets: Vec<Vec<usize>>,
    pub w: Vec<usize>,
}

impl LayerStats {
    pub fn new(
        num_layers: usize,
        s: &[Vertex],
        t: &[Vertex],
        layer: impl Fn(Vertex) -> usize,
    ) -> Self {
        let s_layer: Vec<usize> = s.iter().map(|&v| layer(v)).collect();
        let t_layer: Vec<usize> = t.iter().map(|&v| layer(v)).collect();
        let mut sources = vec![Vec::new(); num_layers];
        let mut targets = vec![Vec::new(); num_layers];
        let mut w = vec![0; num_layers];
        for i in 0..s.len() {
            sources[s_layer[i]].push(i);
            targets[t_layer[i]].push(i);
            w[s_layer[i]] += 1;
            if t_layer[i] != s_layer[i] {
                w[t_layer[i]] += 1;
            }
        }
        LayerStats {
            s_layer,
            t_layer,
            sources,
            targets,
            w,
        }
    }

    /// Sources of layer `j` whose target lies elsewhere.
    pub fn s_split(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.sources[j].iter().copied().filter(move |&i| self.t_layer[i] != j)
    }

    pub fn s_internal(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.sources[j].iter().copied().filter(move |&i| self.t_layer[i] == j)
    }

    pub fn t_split(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.targets[j].iter().copied().filter(move |&i| self.s_layer[i] != j)
    }

    pub fn t_internal(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.targets[j].iter().copied().filter(move |&i| self.s_layer[i] == j)
    }

    pub fn is_split(&self, i: usize) -> bool {
        self.s_layer[i] != self.t_layer[i]
    }

    /// Layers touched by every pair.
    pub fn full_layers(&self) -> Vec<usize> {
        let n = self.s_layer.len();
        (0..self.w.len()).filter(|&j| self.w[j] == n).collect()
    }

    /// `|S''_j| = |T''_j|` and `|S_j| + |T'_j| = |S'_j| + |T_j| = w_j` for
    /// every layer, and the `w_j` sum to one or two per pair.
    pub fn identities_hold(&self) -> bool {
        let per_layer = (0..self.w.len()).all(|j| {
            let s2 = self.s_internal(j).count();
            let t2 = self.t_internal(j).count();
            let s1 = self.s_split(j).count();
            let t1 = self.t_split(j).count();
            s2 == t2
                && self.sources[j].len() + t1 == self.w[j]
                && s1 + self.targets[j].len() == self.w[j]
        });
        let total: usize = self.w.iter().sum();
        let expected: usize = (0..self.s_layer.len())
            .map(|i| if self.is_split(i) { 2 } else { 1 })
            .sum();
        per_layer && total == expected
    }
}

/// Connector vertices chosen so far: `v` in the source-side layer, `u` its
/// cross partner.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SelectionState {
    pub chosen: Vec<(Vertex, Vertex)>,
}

impl SelectionState {
    pub fn push(&mut self, v: Vertex, u: Vertex) {
        self.chosen.push((v, u));
    }

    pub fn v_in(&self, range: &Range<Vertex>) -> Vec<Vertex> {
        self.chosen.iter().map(|p| p.0).filter(|v| range.contains(v)).collect()
    }

    pub fn u_in(&self, range: &Range<Vertex>) -> Vec<Vertex> {
        self.chosen.iter().map(|p| p.1).filter(|v| range.contains(v)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_on_mixed_pairs() {
        // layers of size 10; pair 0 inside layer 0, pair 1 split 0 -> 1,
        // pair 2 split 2 -> 0
        let st = LayerStats::new(3, &[0, 2, 21], &[1, 13, 5], |v| v / 10);
        assert_eq!(st.w, vec![3, 1, 1]);
        assert_eq!(st.s_split(0).collect::<Vec<_>>(), vec![1]);
        assert_eq!(st.t_split(0).collect::<Vec<_>>(), vec![2]);
        assert_eq!(st.full_layers(), vec![0]);
        assert!(st.identities_hold());
    }

    #[test]
    fn selection_state_filters_by_layer() {
        let mut sel = SelectionState::default();
        sel.push(3, 14);
        sel.push(5, 27);
        assert_eq!(sel.v_in(&(0..10)), vec![3, 5]);
        assert_eq!(sel.u_in(&(10..20)), vec![14]);
    }
}
