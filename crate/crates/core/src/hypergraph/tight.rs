use super::ThreeGraph;
use crate::{Error, Result, Triple, Vertex};
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

/// Partition of an edge set into tight components.
///
/// Components are ordered by their smallest edge; edges inside a component
/// are sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TightComponentDecomposition {
    pub components: Vec<Vec<Triple>>,
    pub vertex_supports: Vec<Vec<Vertex>>,
}

impl TightComponentDecomposition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Component `i` as a graph on the parent's vertex count.
    pub fn component_graph(&self, i: usize, num_vertices: u32) -> ThreeGraph {
        ThreeGraph::from_sorted_unchecked(num_vertices, self.components[i].clone())
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

pub(crate) fn edge_pairs(e: &Triple) -> [(Vertex, Vertex); 3] {
    [(e[0], e[1]), (e[0], e[2]), (e[1], e[2])]
}

/// Union-find over edges; two edges are joined when they share two vertices.
pub fn tight_components(h: &ThreeGraph) -> TightComponentDecomposition {
    let edges = h.edges();
    let mut parent: Vec<usize> = (0..edges.len()).collect();
    let mut first_with_pair: HashMap<(Vertex, Vertex), usize> = HashMap::new();
    for (i, e) in edges.iter().enumerate() {
        for p in edge_pairs(e) {
            match first_with_pair.get(&p) {
                Some(&j) => {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
                None => {
                    first_with_pair.insert(p, i);
                }
            }
        }
    }
    let mut by_root: BTreeMap<usize, Vec<Triple>> = BTreeMap::new();
    for (i, e) in edges.iter().enumerate() {
        let r = find(&mut parent, i);
        by_root.entry(r).or_default().push(*e);
    }
    // roots are the minimum edge index of each class, so BTreeMap order is
    // order of smallest edge
    let components: Vec<Vec<Triple>> = by_root.into_values().collect();
    let vertex_supports = components
        .iter()
        .map(|c| {
            c.iter()
                .flatten()
                .copied()
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect()
        })
        .collect();
    TightComponentDecomposition {
        components,
        vertex_supports,
    }
}

/// True iff the edge set forms exactly one tight component. Edgeless graphs
/// are not tightly connected.
pub fn is_tightly_connected(h: &ThreeGraph) -> bool {
    tight_components(h).len() == 1
}

/// Labels in `{1, 2, 3}` for the covered vertices of a tripartite graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tripartition {
    pub part_of: BTreeMap<Vertex, u8>,
}

impl Tripartition {
    pub fn label(&self, v: Vertex) -> Option<u8> {
        self.part_of.get(&v).copied()
    }

    /// The three parts, each ascending.
    pub fn parts(&self) -> [Vec<Vertex>; 3] {
        let mut parts: [Vec<Vertex>; 3] = Default::default();
        for (&v, &l) in &self.part_of {
            parts[(l - 1) as usize].push(v);
        }
        parts
    }

    /// True iff every edge gets three distinct labels.
    pub fn is_valid_for(&self, edges: &[Triple]) -> bool {
        edges.iter().all(|e| {
            let ls = e.map(|v| self.label(v));
            match ls {
                [Some(a), Some(b), Some(c)] => a != b && b != c && a != c,
                _ => false,
            }
        })
    }
}

/// The tripartition of a tightly connected graph, if it has one.
///
/// The smallest edge is seeded with labels 1, 2, 3 in vertex order. Labels
/// then spread across edges that share two vertices: the third vertex gets
/// the remaining label. Tight connectivity makes the result unique up to
/// renaming the labels.
pub fn forced_tripartition(component: &ThreeGraph) -> Result<Option<Tripartition>> {
    let comps = tight_components(component);
    if comps.len() != 1 {
        return Err(Error::NotTightlyConnected {
            components: comps.len(),
        });
    }
    let edges = component.edges();
    let mut by_pair: HashMap<(Vertex, Vertex), Vec<usize>> = HashMap::new();
    for (i, e) in edges.iter().enumerate() {
        for p in edge_pairs(e) {
            by_pair.entry(p).or_default().push(i);
        }
    }
    let mut label: BTreeMap<Vertex, u8> = BTreeMap::new();
    let mut seen = vec![false; edges.len()];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    for (k, &v) in edges[0].iter().enumerate() {
        label.insert(v, k as u8 + 1);
    }
    while let Some(i) = queue.pop_front() {
        let e = edges[i];
        for (x, y) in edge_pairs(&e) {
            let (lx, ly) = (label[&x], label[&y]);
            if lx == ly {
                return Ok(None);
            }
            let want = 6 - lx - ly;
            for &j in &by_pair[&(x, y)] {
                let z = *edges[j].iter().find(|&&z| z != x && z != y).unwrap();
                match label.get(&z) {
                    Some(&lz) if lz != want => return Ok(None),
                    Some(_) => {}
                    None => {
                        label.insert(z, want);
                    }
                }
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
    }
    let tp = Tripartition { part_of: label };
    Ok(tp.is_valid_for(edges).then_some(tp))
}
