use crate::coloring::PairColoring;
use crate::combin::{pair_rank, pairs, triples_of};
use crate::rng::Stream;
use crate::{Error, Result, Triple, Vertex};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{HashSet, VecDeque};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BicliqueViolation {
    /// An edge of the class joining two vertices on the same side.
    OddCycle { color: u32, u: Vertex, v: Vertex },
    /// A cross pair of a component that does not have the class color.
    MissingEdge { color: u32, u: Vertex, v: Vertex },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BicliqueReport {
    pub classes_checked: usize,
    /// First violation of each failing class, by color.
    pub violations: Vec<BicliqueViolation>,
}

impl BicliqueReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that each color class is a vertex-disjoint union of complete
/// bipartite graphs.
pub fn check_biclique_structure(pc: &PairColoring) -> BicliqueReport {
    let n = pc.num_vertices();
    let palette = pc.palette().size() as usize;
    let mut classes: Vec<Vec<(Vertex, Vertex)>> = vec![Vec::new(); palette];
    for (u, v) in pairs(n) {
        classes[pc.color(u, v) as usize].push((u, v));
    }
    let violations: Vec<BicliqueViolation> = classes
        .par_iter()
        .enumerate()
        .filter_map(|(c, edges)| check_class(pc, c as u32, edges))
        .collect();
    BicliqueReport {
        classes_checked: palette,
        violations,
    }
}

fn check_class(
    pc: &PairColoring,
    color: u32,
    edges: &[(Vertex, Vertex)],
) -> Option<BicliqueViolation> {
    if edges.is_empty() {
        return None;
    }
    let n = pc.num_vertices() as usize;
    let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u as usize].push(v);
        adj[v as usize].push(u);
    }
    let mut side: Vec<i8> = vec![-1; n];
    for &(s, _) in edges {
        if side[s as usize] >= 0 {
            continue;
        }
        side[s as usize] = 0;
        let mut parts: [Vec<Vertex>; 2] = [vec![s], Vec::new()];
        let mut queue = VecDeque::from([s]);
        let mut edge_count = 0usize;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x as usize] {
                if side[y as usize] < 0 {
                    side[y as usize] = 1 - side[x as usize];
                    parts[side[y as usize] as usize].push(y);
                    queue.push_back(y);
                } else if side[y as usize] == side[x as usize] {
                    return Some(BicliqueViolation::OddCycle {
                        color,
                        u: x.min(y),
                        v: x.max(y),
                    });
                }
                if x < y {
                    edge_count += 1;
                }
            }
        }
        if edge_count != parts[0].len() * parts[1].len() {
            for &a in &parts[0] {
                for &b in &parts[1] {
                    if pc.color(a, b) != color {
                        return Some(BicliqueViolation::MissingEdge {
                            color,
                            u: a.min(b),
                            v: a.max(b),
                        });
                    }
                }
            }
        }
    }
    None
}

fn sorted_set(pc: &PairColoring, s: &[Vertex]) -> Result<Vec<Vertex>> {
    let mut v = s.to_vec();
    v.sort_unstable();
    v.dedup();
    if v.last().is_some_and(|&x| x >= pc.num_vertices()) {
        return Err(Error::invalid("subset has a vertex outside the coloring"));
    }
    Ok(v)
}

/// Triples inside `s` whose three pairs have distinct colors.
pub fn count_rainbow_triangles(pc: &PairColoring, s: &[Vertex]) -> Result<u64> {
    let v = sorted_set(pc, s)?;
    Ok(triples_of(&v)
        .filter(|t| pc.is_rainbow(t[0], t[1], t[2]))
        .count() as u64)
}

/// Greedy maximal set of pairwise edge-disjoint rainbow triangles inside
/// `s`, scanning triples in colex order.
pub fn edge_disjoint_rainbow_packing(pc: &PairColoring, s: &[Vertex]) -> Result<Vec<Triple>> {
    let v = sorted_set(pc, s)?;
    let mut used: HashSet<usize> = HashSet::new();
    let mut out = Vec::new();
    for t in triples_of(&v) {
        if !pc.is_rainbow(t[0], t[1], t[2]) {
            continue;
        }
        let ps = [
            pair_rank(t[0], t[1]),
            pair_rank(t[1], t[2]),
            pair_rank(t[0], t[2]),
        ];
        if ps.iter().any(|p| used.contains(p)) {
            continue;
        }
        used.extend(ps);
        out.push(t);
    }
    Ok(out)
}

/// A uniform `k`-subset of `0..n`, sorted, drawn by a partial shuffle on
/// stream `("rainbow-count", index)`.
pub fn sample_subset(n: u32, k: u32, seed: u64, index: u64) -> Vec<Vertex> {
    assert!(k <= n, "subset larger than the ground set");
    let mut s = Stream::derive(seed, "rainbow-count", index);
    let mut all: Vec<Vertex> = (0..n).collect();
    for i in 0..k as usize {
        let j = i + s.below((all.len() - i) as u64) as usize;
        all.swap(i, j);
    }
    let mut out = all[..k as usize].to_vec();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::Palette;

    fn pc(n: u32, colors: &[u32], size: u32) -> PairColoring {
        PairColoring::new(n, Palette::Indexed { size }, colors.to_vec()).unwrap()
    }

    #[test]
    fn triangle_class_is_odd_cycle() {
        let c = pc(3, &[0, 0, 0], 1);
        let r = check_biclique_structure(&c);
        assert!(matches!(
            r.violations[..],
            [BicliqueViolation::OddCycle { color: 0, .. }]
        ));
    }

    #[test]
    fn path_is_a_biclique() {
        // pairs in colex order: 01, 02, 12
        let c = pc(3, &[0, 1, 0], 2);
        assert!(check_biclique_structure(&c).passed());
    }

    #[test]
    fn paths_on_four_vertices_are_not_bicliques() {
        // 01 02 12 03 13 23; path 0-1-2-3 in color 0
        let c = pc(4, &[0, 1, 0, 1, 1, 0], 2);
        let r = check_biclique_structure(&c);
        assert_eq!(r.violations.len(), 2);
        assert!(r.violations.iter().any(|v| matches!(
            v,
            BicliqueViolation::MissingEdge {
                color: 0,
                u: 0,
                v: 3
            }
        )));
    }

    #[test]
    fn counting_and_packing() {
        let mono = PairColoring::monochromatic(6, 1);
        let all: Vec<Vertex> = (0..6).collect();
        assert_eq!(count_rainbow_triangles(&mono, &all).unwrap(), 0);
        assert!(edge_disjoint_rainbow_packing(&mono, &all)
            .unwrap()
            .is_empty());
        let k4 = pc(4, &[0, 1, 2, 3, 4, 5], 6);
        let all: Vec<Vertex> = (0..4).collect();
        assert_eq!(count_rainbow_triangles(&k4, &all).unwrap(), 4);
        assert_eq!(edge_disjoint_rainbow_packing(&k4, &all).unwrap().len(), 1);
        assert_eq!(count_rainbow_triangles(&k4, &[0, 1, 2]).unwrap(), 1);
        assert!(count_rainbow_triangles(&k4, &[0, 9]).is_err());
    }
}
