//! Constructive blue clique extraction.

use crate::coloring::TripleColoring;
use crate::hypergraph::{recognize_iterated, Certificate, RecognizeOptions};
use crate::verify::check_red_components_tripartite;
use crate::{Error, Result, Vertex};
use serde::Serialize;
use std::collections::VecDeque;

/// The red/blue graph on `vertices` (excluding `center`) in which `wx` has
/// the color of the triple `center w x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkGraph {
    pub center: Vertex,
    pub vertices: Vec<Vertex>,
    /// Red neighbours by position in `vertices`.
    pub red_adjacency: Vec<Vec<usize>>,
}

impl LinkGraph {
    pub fn is_red(&self, i: usize, j: usize) -> bool {
        self.red_adjacency[i].contains(&j)
    }

    pub fn red_edge_count(&self) -> usize {
        self.red_adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Two-coloring of the red edges by position, or a red edge closing an
    /// odd cycle.
    pub fn red_bipartition(&self) -> std::result::Result<Vec<u8>, (Vertex, Vertex)> {
        let mut side = vec![u8::MAX; self.vertices.len()];
        for s in 0..self.vertices.len() {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(x) = q.pop_front() {
                for &y in &self.red_adjacency[x] {
                    if side[y] == u8::MAX {
                        side[y] = 1 - side[x];
                        q.push_back(y);
                    } else if side[y] == side[x] {
                        return Err((self.vertices[x], self.vertices[y]));
                    }
                }
            }
        }
        Ok(side)
    }
}

/// Link graph of `center` within `vertices` (center removed if present).
pub fn link_graph(chi: &TripleColoring, center: Vertex, vertices: &[Vertex]) -> Result<LinkGraph> {
    let n = chi.num_vertices();
    if center >= n || vertices.iter().any(|&v| v >= n) {
        return Err(Error::invalid("vertex outside the coloring"));
    }
    let mut vs: Vec<Vertex> = vertices.iter().copied().filter(|&v| v != center).collect();
    vs.sort_unstable();
    vs.dedup();
    let mut adj = vec![Vec::new(); vs.len()];
    for j in 0..vs.len() {
        for i in 0..j {
            if chi.is_red(center, vs[i], vs[j]) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    Ok(LinkGraph {
        center,
        vertices: vs,
        red_adjacency: adj,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HalvingStep {
    pub center: Vertex,
    pub remaining: usize,
    pub kept: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HalvingExtraction {
    pub clique: Vec<Vertex>,
    pub trace: Vec<HalvingStep>,
}

/// Repeatedly takes the smallest remaining vertex `v`, two-colors the red
/// edges of its link graph, keeps the larger side of every red component
/// (ties to the side holding the component's smallest vertex) and recurses
/// on what is kept. Every red tight component must be tripartite.
pub fn extract_blue_clique_halving(chi: &TripleColoring) -> Result<HalvingExtraction> {
    let report = check_red_components_tripartite(chi);
    if let Some(bad) = report.violations().first() {
        return Err(Error::NotTripartite {
            edges: bad.edges.clone(),
        });
    }
    let mut rest: Vec<Vertex> = (0..chi.num_vertices()).collect();
    let mut clique = Vec::new();
    let mut trace = Vec::new();
    while let Some(&v) = rest.first() {
        let g = link_graph(chi, v, &rest[1..])?;
        let side = g.red_bipartition().map_err(|(a, b)| {
            Error::invalid(format!(
                "red link graph of {v} has an odd cycle through {a}, {b}"
            ))
        })?;
        let kept = keep_larger_sides(&g, &side);
        trace.push(HalvingStep {
            center: v,
            remaining: rest.len(),
            kept: kept.len(),
        });
        clique.push(v);
        rest = kept;
    }
    if !chi.is_blue_set(&clique) {
        return Err(Error::invalid("extracted set is not blue"));
    }
    Ok(HalvingExtraction { clique, trace })
}

fn keep_larger_sides(g: &LinkGraph, side: &[u8]) -> Vec<Vertex> {
    let k = g.vertices.len();
    let mut comp = vec![usize::MAX; k];
    let mut out = Vec::new();
    for s in 0..k {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = s;
        let mut members = vec![s];
        let mut q = VecDeque::from([s]);
        while let Some(x) = q.pop_front() {
            for &y in &g.red_adjacency[x] {
                if comp[y] == usize::MAX {
                    comp[y] = s;
                    members.push(y);
                    q.push_back(y);
                }
            }
        }
        // s is the smallest vertex of its component
        let same = members.iter().filter(|&&m| side[m] == side[s]).count();
        let keep = if 2 * same >= members.len() {
            side[s]
        } else {
            1 - side[s]
        };
        out.extend(
            members
                .into_iter()
                .filter(|&m| side[m] == keep)
                .map(|m| g.vertices[m]),
        );
    }
    out.sort_unstable();
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IteratedStep {
    pub depth: usize,
    pub part_sizes: Vec<usize>,
    /// Positions of the two parts recursed into.
    pub chosen: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IteratedExtraction {
    pub clique: Vec<Vertex>,
    pub certificate: Certificate,
    pub trace: Vec<IteratedStep>,
}

/// Finds a balanced certificate for the red graph and returns the union of
/// cliques extracted recursively from the two largest parts of every level.
/// A triple with two vertices in one part and one in another is never red,
/// so the union is blue. Leaves of the certificate hold no red triple and
/// are split into three contiguous near-equal chunks.
pub fn extract_blue_clique_iterated(
    chi: &TripleColoring,
    opts: RecognizeOptions,
) -> Result<IteratedExtraction> {
    let cert = recognize_iterated(
        &chi.red_graph(),
        RecognizeOptions {
            prefer_balanced: true,
            ..opts
        },
    )?
    .ok_or(Error::NotIteratedTripartite)?;
    let mut trace = Vec::new();
    let mut clique = descend(&cert, 0, &mut trace);
    clique.sort_unstable();
    if !chi.is_blue_set(&clique) {
        return Err(Error::invalid("extracted set is not blue"));
    }
    Ok(IteratedExtraction {
        clique,
        certificate: cert,
        trace,
    })
}

fn two_largest(sizes: &[usize]) -> [usize; 2] {
    let mut idx: Vec<usize> = (0..sizes.len()).collect();
    idx.sort_by_key(|&i| (std::cmp::Reverse(sizes[i]), i));
    let mut two = [idx[0], idx[1]];
    two.sort_unstable();
    two
}

fn descend(cert: &Certificate, depth: usize, trace: &mut Vec<IteratedStep>) -> Vec<Vertex> {
    if cert.vertices.len() <= 2 {
        return cert.vertices.clone();
    }
    let sizes: Vec<usize>;
    let chosen;
    let mut out = Vec::new();
    if cert.is_leaf() {
        let v = &cert.vertices;
        let (q, r) = (v.len() / 3, v.len() % 3);
        let lens: Vec<usize> = (0..3).map(|i| q + (i < r) as usize).collect();
        let mut chunks = Vec::new();
        let mut at = 0;
        for &l in &lens {
            chunks.push(Certificate::leaf(v[at..at + l].to_vec()));
            at += l;
        }
        sizes = lens;
        chosen = two_largest(&sizes);
        trace.push(IteratedStep {
            depth,
            part_sizes: sizes.clone(),
            chosen,
        });
        for &c in &chosen {
            out.extend(descend(&chunks[c], depth + 1, trace));
        }
    } else {
        sizes = cert.parts.iter().map(Vec::len).collect();
        chosen = two_largest(&sizes);
        trace.push(IteratedStep {
            depth,
            part_sizes: sizes.clone(),
            chosen,
        });
        for &c in &chosen {
            out.extend(descend(&cert.children[c], depth + 1, trace));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn link_graph_examples() {
        let g = link_graph(&TripleColoring::all_red(5), 0, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(g.vertices, vec![1, 2, 3, 4]);
        assert_eq!(g.red_edge_count(), 6);
        let mut chi = TripleColoring::all_blue(7);
        for w in (2..7).step_by(2) {
            for x in (w + 2..7).step_by(2) {
                chi.set_red([0, w, x], true);
            }
        }
        let g = link_graph(&chi, 0, &(0..7).collect::<Vec<_>>()).unwrap();
        assert_eq!(g.red_edge_count(), 3);
        assert!(g.is_red(1, 3)); // vertices 2 and 4
    }

    #[test]
    fn halving_on_all_blue() {
        let r = extract_blue_clique_halving(&TripleColoring::all_blue(7)).unwrap();
        assert_eq!(r.clique.len(), 7);
        let r = extract_blue_clique_halving(&TripleColoring::all_blue(1)).unwrap();
        assert_eq!(r.clique, vec![0]);
    }

    #[test]
    fn halving_rejects_non_tripartite() {
        let mut chi = TripleColoring::all_blue(6);
        for t in crate::combin::triples(4) {
            chi.set_red(t, true);
        }
        assert!(matches!(
            extract_blue_clique_halving(&chi),
            Err(Error::NotTripartite { .. })
        ));
    }

    #[test]
    fn halving_on_single_red_edge() {
        let chi = TripleColoring::from_red_triples(3, [[0, 1, 2]]).unwrap();
        let r = extract_blue_clique_halving(&chi).unwrap();
        assert_eq!(r.clique, vec![0, 1]);
    }

    #[test]
    fn iterated_on_all_blue() {
        for (n, want) in [(2u32, 2usize), (3, 2), (9, 4), (27, 8)] {
            let r = extract_blue_clique_iterated(
                &TripleColoring::all_blue(n),
                RecognizeOptions::default(),
            )
            .unwrap();
            assert_eq!(r.clique.len(), want, "n = {n}");
        }
    }

    #[test]
    fn iterated_rejects_k4() {
        let chi = TripleColoring::all_red(4);
        assert!(matches!(
            extract_blue_clique_iterated(&chi, RecognizeOptions::default()),
            Err(Error::NotIteratedTripartite)
        ));
    }
}
