//! 3-uniform hypergraphs and their tight-component structure.

mod embed;
mod iterated;
mod tight;

pub use embed::{contains_red_copy, DEFAULT_EMBED_GUARD};
pub use iterated::{
    is_iterated_tripartite, iterated_tripartite_edge_table, max_iterated_tripartite_edges,
    recognize_iterated, Certificate, RecognizeOptions, DEFAULT_RECOGNITION_GUARD,
};
pub(crate) use tight::edge_pairs;
pub use tight::{
    forced_tripartition, is_tightly_connected, tight_components, TightComponentDecomposition,
    Tripartition,
};

use crate::{sort_triple, Error, Result, Triple, Vertex};
use std::collections::BTreeSet;

/// A 3-graph on vertices `0..num_vertices` with canonical sorted-triple edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThreeGraph {
    n: u32,
    edges: Vec<Triple>,
}

impl ThreeGraph {
    /// Builds a 3-graph, sorting each edge and dropping duplicates.
    pub fn new(num_vertices: u32, edges: impl IntoIterator<Item = [Vertex; 3]>) -> Result<Self> {
        let mut out = Vec::new();
        for [a, b, c] in edges {
            let t = sort_triple(a, b, c);
            if t[0] == t[1] || t[1] == t[2] {
                return Err(Error::invalid(format!("edge {t:?} repeats a vertex")));
            }
            if t[2] >= num_vertices {
                return Err(Error::invalid(format!(
                    "edge {t:?} out of range for {num_vertices} vertices"
                )));
            }
            out.push(t);
        }
        out.sort_unstable();
        out.dedup();
        Ok(ThreeGraph {
            n: num_vertices,
            edges: out,
        })
    }

    pub(crate) fn from_sorted_unchecked(n: u32, edges: Vec<Triple>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        ThreeGraph { n, edges }
    }

    pub fn empty(num_vertices: u32) -> Self {
        ThreeGraph {
            n: num_vertices,
            edges: Vec::new(),
        }
    }

    /// `K_n^(3)`.
    pub fn complete(n: u32) -> Self {
        let mut edges: Vec<Triple> = crate::combin::triples(n).collect();
        edges.sort_unstable();
        ThreeGraph { n, edges }
    }

    /// The Fano plane on `0..7`.
    pub fn fano() -> Self {
        ThreeGraph::new(
            7,
            [
                [0, 1, 2],
                [0, 3, 4],
                [0, 5, 6],
                [1, 3, 5],
                [1, 4, 6],
                [2, 3, 6],
                [2, 4, 5],
            ],
        )
        .expect("static edges are valid")
    }

    pub fn num_vertices(&self) -> u32 {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Triple] {
        &self.edges
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex, c: Vertex) -> bool {
        self.edges.binary_search(&sort_triple(a, b, c)).is_ok()
    }

    /// Vertices covered by at least one edge, ascending.
    pub fn support(&self) -> Vec<Vertex> {
        let set: BTreeSet<Vertex> = self.edges.iter().flatten().copied().collect();
        set.into_iter().collect()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.contains(&v)).count()
    }

    /// Edge-union of two graphs on the same vertex count.
    pub fn union(&self, other: &ThreeGraph) -> ThreeGraph {
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        edges.sort_unstable();
        edges.dedup();
        ThreeGraph {
            n: self.n.max(other.n),
            edges,
        }
    }

    /// Renumbers the support to `0..k`. Returns the compact graph and the map
    /// from compact index to original vertex.
    pub fn compacted(&self) -> (ThreeGraph, Vec<Vertex>) {
        let support = self.support();
        let edges = self
            .edges
            .iter()
            .map(|e| e.map(|v| support.binary_search(&v).expect("support covers edges") as u32))
            .collect::<Vec<_>>();
        let mut g = ThreeGraph {
            n: support.len() as u32,
            edges,
        };
        g.edges.sort_unstable();
        (g, support)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_canonicalises_and_validates() {
        let g = ThreeGraph::new(5, [[3, 1, 2], [2, 1, 3], [0, 1, 4]]).unwrap();
        assert_eq!(g.edges(), &[[0, 1, 4], [1, 2, 3]]);
        assert!(g.has_edge(2, 3, 1));
        assert!(ThreeGraph::new(3, [[0, 0, 1]]).is_err());
        assert!(ThreeGraph::new(3, [[0, 1, 3]]).is_err());
    }

    #[test]
    fn fano_is_linear() {
        let f = ThreeGraph::fano();
        for (i, e) in f.edges().iter().enumerate() {
            for g in &f.edges()[i + 1..] {
                let shared = e.iter().filter(|v| g.contains(v)).count();
                assert_eq!(shared, 1);
            }
        }
    }

    #[test]
    fn compacted_renumbers_support() {
        let g = ThreeGraph::new(10, [[2, 5, 9], [5, 7, 9]]).unwrap();
        let (c, map) = g.compacted();
        assert_eq!(map, vec![2, 5, 7, 9]);
        assert_eq!(c.edges(), &[[0, 1, 3], [1, 2, 3]]);
    }
}
