use crate::coloring::{PairColoring, TripleColoring};
use crate::hypergraph::{
    forced_tripartition, recognize_iterated, tight_components, RecognizeOptions, ThreeGraph,
    Tripartition, DEFAULT_RECOGNITION_GUARD,
};
use crate::{Error, Result, Triple, Vertex};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeSet, HashMap};

/// One red tight component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub index: usize,
    pub support: Vec<Vertex>,
    pub edges: Vec<Triple>,
    /// The three parts, or `None` when the component is not tripartite.
    pub tripartition: Option<[Vec<Vertex>; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RedStructureReport {
    pub num_vertices: u32,
    pub red_edges: usize,
    pub components: Vec<ComponentReport>,
}

impl RedStructureReport {
    /// Components with no tripartition.
    pub fn violations(&self) -> Vec<&ComponentReport> {
        self.components
            .iter()
            .filter(|c| c.tripartition.is_none())
            .collect()
    }

    pub fn passed(&self) -> bool {
        self.violations().is_empty()
    }
}

/// Edges, vertex support and forced tripartition of one component.
type ComponentParts = (Vec<Triple>, Vec<Vertex>, Option<Tripartition>);

fn tripartitions(chi: &TripleColoring) -> (u32, Vec<ComponentParts>) {
    let n = chi.num_vertices();
    let red = chi.red_graph();
    let d = tight_components(&red);
    let out = d
        .components
        .into_par_iter()
        .zip(d.vertex_supports)
        .map(|(edges, support)| {
            let g = ThreeGraph::from_sorted_unchecked(n, edges.clone());
            let tp = forced_tripartition(&g).expect("a tight component is tightly connected");
            (edges, support, tp)
        })
        .collect();
    (n, out)
}

/// Decomposes the red triples into tight components and finds the forced
/// tripartition of each.
pub fn check_red_components_tripartite(chi: &TripleColoring) -> RedStructureReport {
    let (n, comps) = tripartitions(chi);
    let red_edges = comps.iter().map(|c| c.0.len()).sum();
    let components = comps
        .into_iter()
        .enumerate()
        .map(|(index, (edges, support, tp))| ComponentReport {
            index,
            support,
            edges,
            tripartition: tp.map(|t| t.parts()),
        })
        .collect();
    RedStructureReport {
        num_vertices: n,
        red_edges,
        components,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PhiViolation {
    /// Two edges sharing two vertices whose color sets differ.
    Mismatch {
        component: usize,
        first: Triple,
        first_colors: Vec<u32>,
        second: Triple,
        second_colors: Vec<u32>,
    },
    /// A cross pair whose color is not the one assigned to its pair of parts.
    CrossLaw {
        component: usize,
        u: Vertex,
        v: Vertex,
        expected: u32,
        found: u32,
    },
    NotTripartite {
        component: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiConstancyReport {
    pub components: usize,
    /// `(c1, c2, c3)` per component when the cross law was checked and a
    /// tripartition exists; `c_k` colors pairs between the other two parts.
    pub part_colors: Vec<Option<[u32; 3]>>,
    pub violations: Vec<PhiViolation>,
}

impl PhiConstancyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn color_set(phi: &PairColoring, e: &Triple) -> Vec<u32> {
    let s: BTreeSet<u32> = [
        phi.color(e[0], e[1]),
        phi.color(e[1], e[2]),
        phi.color(e[0], e[2]),
    ]
    .into();
    s.into_iter().collect()
}

/// Checks that `{phi(xy), phi(yz), phi(xz)}` is the same set on every edge
/// of each red tight component. It suffices to compare edges that share two
/// vertices. With `cross_law`, additionally checks that every pair across
/// parts `i` and `j` of a component has color `c_k`, where the `c_k` are
/// read off the component's smallest edge.
pub fn check_phi_constancy(
    chi: &TripleColoring,
    phi: &PairColoring,
    cross_law: bool,
) -> Result<PhiConstancyReport> {
    if chi.num_vertices() != phi.num_vertices() {
        return Err(Error::invalid(format!(
            "triple coloring has {} vertices, pair coloring {}",
            chi.num_vertices(),
            phi.num_vertices()
        )));
    }
    let (_, comps) = tripartitions(chi);
    let per: Vec<(Option<[u32; 3]>, Vec<PhiViolation>)> = comps
        .par_iter()
        .enumerate()
        .map(|(ci, (edges, _, tp))| {
            let mut viol = Vec::new();
            let mut first_with_pair: HashMap<(Vertex, Vertex), usize> = HashMap::new();
            'edges: for (i, e) in edges.iter().enumerate() {
                for p in crate::hypergraph::edge_pairs(e) {
                    match first_with_pair.get(&p) {
                        Some(&j) => {
                            let (a, b) = (color_set(phi, &edges[j]), color_set(phi, e));
                            if a != b {
                                viol.push(PhiViolation::Mismatch {
                                    component: ci,
                                    first: edges[j],
                                    first_colors: a,
                                    second: *e,
                                    second_colors: b,
                                });
                                break 'edges;
                            }
                        }
                        None => {
                            first_with_pair.insert(p, i);
                        }
                    }
                }
            }
            if !cross_law {
                return (None, viol);
            }
            let Some(tp) = tp else {
                viol.push(PhiViolation::NotTripartite { component: ci });
                return (None, viol);
            };
            let e = edges[0];
            let mut c = [0u32; 3];
            for (x, y) in crate::hypergraph::edge_pairs(&e) {
                let k = 6 - tp.label(x).unwrap() - tp.label(y).unwrap();
                c[(k - 1) as usize] = phi.color(x, y);
            }
            let parts = tp.parts();
            'law: for i in 0..3 {
                for j in i + 1..3 {
                    let expected = c[3 - i - j];
                    for &u in &parts[i] {
                        for &v in &parts[j] {
                            let found = phi.color(u, v);
                            if found != expected {
                                let (u, v) = (u.min(v), u.max(v));
                                viol.push(PhiViolation::CrossLaw {
                                    component: ci,
                                    u,
                                    v,
                                    expected,
                                    found,
                                });
                                break 'law;
                            }
                        }
                    }
                }
            }
            (Some(c), viol)
        })
        .collect();
    let mut part_colors = Vec::with_capacity(per.len());
    let mut violations = Vec::new();
    for (c, v) in per {
        part_colors.push(c);
        violations.extend(v);
    }
    Ok(PhiConstancyReport {
        components: comps.len(),
        part_colors,
        violations,
    })
}

#[derive(Clone, Copy, Debug)]
pub struct PairwiseOptions {
    /// Guard on the number of red tight components.
    pub max_components: usize,
    /// Guard on the non-isolated vertices of one union.
    pub max_union_vertices: usize,
}

impl Default for PairwiseOptions {
    fn default() -> Self {
        PairwiseOptions {
            max_components: 1 << 20,
            max_union_vertices: DEFAULT_RECOGNITION_GUARD,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnionFailure {
    pub first: usize,
    pub second: usize,
    pub edges: Vec<Triple>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairwiseReport {
    pub components: usize,
    /// Whether each component alone is iterated tripartite.
    pub single_ok: Vec<bool>,
    /// Searched unions of components sharing a vertex, with the outcome.
    pub overlapping: Vec<(usize, usize, bool)>,
    /// Pairs of vertex-disjoint components. Their union is iterated
    /// tripartite iff both components are, so they need no search.
    pub disjoint_pairs: u64,
    /// Failing components (`first == second`) and failing overlapping unions.
    pub failures: Vec<UnionFailure>,
}

impl PairwiseReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Entry `[i][j]` is true iff the union of components `i` and `j` is
    /// iterated tripartite; the diagonal is each component alone.
    pub fn matrix(&self) -> Vec<Vec<bool>> {
        let mut m: Vec<Vec<bool>> = self
            .single_ok
            .iter()
            .map(|&a| self.single_ok.iter().map(|&b| a && b).collect())
            .collect();
        for &(i, j, ok) in &self.overlapping {
            m[i][j] = ok;
            m[j][i] = ok;
        }
        m
    }
}

fn union_is_iterated(n: u32, edges: Vec<Triple>, guard: usize) -> Result<bool> {
    let g = ThreeGraph::new(n, edges)?;
    let cert = recognize_iterated(
        &g,
        RecognizeOptions {
            max_vertices: guard,
            prefer_balanced: false,
        },
    )?;
    Ok(cert.is_some())
}

/// Runs iterated tripartite recognition on every red tight component and
/// on the union of every two components sharing a vertex. Tripartite
/// components need no search.
pub fn check_pairwise_unions_iterated(
    chi: &TripleColoring,
    opts: PairwiseOptions,
) -> Result<PairwiseReport> {
    let (n, comps) = tripartitions(chi);
    let k = comps.len();
    if k > opts.max_components {
        return Err(Error::TooLarge {
            size: k,
            limit: opts.max_components,
        });
    }
    let guard = opts.max_union_vertices;
    let single_ok: Vec<bool> = comps
        .par_iter()
        .map(|(edges, _, tp)| match tp {
            Some(_) => Ok(true),
            None => union_is_iterated(n, edges.clone(), guard),
        })
        .collect::<Result<_>>()?;
    let mut by_vertex: HashMap<Vertex, Vec<usize>> = HashMap::new();
    for (i, (_, support, _)) in comps.iter().enumerate() {
        for &v in support {
            by_vertex.entry(v).or_default().push(i);
        }
    }
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for list in by_vertex.values() {
        for (b, &j) in list.iter().enumerate() {
            for &i in &list[..b] {
                pairs.insert((i.min(j), i.max(j)));
            }
        }
    }
    let pairs: Vec<(usize, usize)> = pairs.into_iter().collect();
    let union_edges = |i: usize, j: usize| {
        let mut edges = comps[i].0.clone();
        edges.extend_from_slice(&comps[j].0);
        edges.sort_unstable();
        edges
    };
    let outcomes: Vec<bool> = pairs
        .par_iter()
        .map(|&(i, j)| union_is_iterated(n, union_edges(i, j), guard))
        .collect::<Result<_>>()?;
    let mut failures = Vec::new();
    for (i, ok) in single_ok.iter().enumerate() {
        if !ok {
            failures.push(UnionFailure {
                first: i,
                second: i,
                edges: comps[i].0.clone(),
            });
        }
    }
    let mut overlapping = Vec::with_capacity(pairs.len());
    for (&(i, j), ok) in pairs.iter().zip(outcomes) {
        overlapping.push((i, j, ok));
        if !ok {
            failures.push(UnionFailure {
                first: i,
                second: j,
                edges: union_edges(i, j),
            });
        }
    }
    let all_pairs = (k as u64) * (k as u64).saturating_sub(1) / 2;
    Ok(PairwiseReport {
        components: k,
        single_ok,
        disjoint_pairs: all_pairs - overlapping.len() as u64,
        overlapping,
        failures,
    })
}
