//! Recognition of iterated tripartite 3-graphs and the extremal count t(s).
//!
//! A 3-graph is iterated tripartite when it embeds in an iterated blowup of
//! an edge. Recognition searches, at each level, for a split of the vertex
//! set into three nonempty parts such that every edge inside the level either
//! meets all three parts or lies inside one part, and then recurses into the
//! parts. Allowing empty parts recognises the same family, so they are not
//! searched.

use super::ThreeGraph;
use crate::{Error, Result, Vertex};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

pub const DEFAULT_RECOGNITION_GUARD: usize = 15;

#[derive(Clone, Copy, Debug)]
pub struct RecognizeOptions {
    /// Largest number of non-isolated vertices accepted (at most 64).
    pub max_vertices: usize,
    /// Search every valid split at each level and keep the one whose part
    /// sizes are most even, instead of stopping at the first.
    pub prefer_balanced: bool,
}

impl Default for RecognizeOptions {
    fn default() -> Self {
        RecognizeOptions {
            max_vertices: DEFAULT_RECOGNITION_GUARD,
            prefer_balanced: false,
        }
    }
}

/// Recursive witness that a graph is iterated tripartite.
///
/// A leaf has no parts and no children. An internal node has three nonempty
/// parts, ordered by smallest vertex, and one child per part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub vertices: Vec<Vertex>,
    pub parts: Vec<Vec<Vertex>>,
    pub children: Vec<Certificate>,
}

impl Certificate {
    pub fn leaf(mut vertices: Vec<Vertex>) -> Self {
        vertices.sort_unstable();
        Certificate {
            vertices,
            parts: Vec::new(),
            children: Vec::new(),
        }
    }

    fn internal(mut children: Vec<Certificate>) -> Self {
        children.sort_by_key(|c| c.vertices.first().copied());
        let mut vertices: Vec<Vertex> = children.iter().flat_map(|c| c.vertices.clone()).collect();
        vertices.sort_unstable();
        Certificate {
            vertices,
            parts: children.iter().map(|c| c.vertices.clone()).collect(),
            children,
        }
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn depth(&self) -> usize {
        1 + self
            .children
            .iter()
            .map(Certificate::depth)
            .max()
            .unwrap_or(0)
    }

    /// Checks every structural invariant against `h`.
    pub fn validate(&self, h: &ThreeGraph) -> bool {
        let inside = |e: &[Vertex; 3]| e.iter().all(|v| self.vertices.binary_search(v).is_ok());
        if self.is_leaf() {
            return self.parts.is_empty()
                && (self.vertices.len() <= 2 || !h.edges().iter().any(inside));
        }
        if self.children.len() != 3 || self.parts.len() != 3 {
            return false;
        }
        let mut all: Vec<Vertex> = Vec::new();
        for (p, c) in self.parts.iter().zip(&self.children) {
            if p.is_empty() || *p != c.vertices {
                return false;
            }
            all.extend(p);
        }
        all.sort_unstable();
        if all != self.vertices {
            return false;
        }
        let part_of = |v: Vertex| self.parts.iter().position(|p| p.binary_search(&v).is_ok());
        for e in h.edges().iter().filter(|e| inside(e)) {
            let [a, b, c] = e.map(|v| part_of(v).unwrap());
            let crossing = a != b && b != c && a != c;
            let internal = a == b && b == c;
            if !crossing && !internal {
                return false;
            }
        }
        self.children.iter().all(|c| c.validate(h))
    }

    fn relabel(&mut self, map: &[Vertex]) {
        for v in &mut self.vertices {
            *v = map[*v as usize];
        }
        for p in &mut self.parts {
            for v in p.iter_mut() {
                *v = map[*v as usize];
            }
        }
        for c in &mut self.children {
            c.relabel(map);
        }
    }

    /// Adds an isolated vertex, descending into the smallest part.
    fn pad(&mut self, v: Vertex) {
        let pos = self.vertices.partition_point(|&x| x < v);
        self.vertices.insert(pos, v);
        if self.is_leaf() {
            return;
        }
        let k = (0..3).min_by_key(|&i| (self.parts[i].len(), i)).unwrap();
        self.children[k].pad(v);
        self.parts[k] = self.children[k].vertices.clone();
    }

    fn canonicalize(&mut self) {
        for c in &mut self.children {
            c.canonicalize();
        }
        if !self.is_leaf() {
            self.children.sort_by_key(|c| c.vertices.first().copied());
            self.parts = self.children.iter().map(|c| c.vertices.clone()).collect();
        }
    }
}

/// Recognition with default options.
pub fn is_iterated_tripartite(h: &ThreeGraph) -> Result<Option<Certificate>> {
    recognize_iterated(h, RecognizeOptions::default())
}

/// Returns a certificate covering all of `0..num_vertices` iff `h` is
/// iterated tripartite. Vertices outside the edge support are padded into
/// the smallest part at each level.
pub fn recognize_iterated(h: &ThreeGraph, opts: RecognizeOptions) -> Result<Option<Certificate>> {
    let (compact, map) = h.compacted();
    let k = compact.num_vertices() as usize;
    let limit = opts.max_vertices.min(64);
    if k > limit {
        return Err(Error::TooLarge { size: k, limit });
    }
    let edges: Vec<u64> = compact
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u64, |m, &v| m | (1 << v)))
        .collect();
    let mut rec = Recognizer {
        edges,
        balanced: opts.prefer_balanced,
        memo: HashMap::new(),
    };
    let full = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    let Some(mut cert) = rec.solve(full) else {
        return Ok(None);
    };
    cert.relabel(&map);
    let mut covered = vec![false; h.num_vertices() as usize];
    for &v in &map {
        covered[v as usize] = true;
    }
    for v in 0..h.num_vertices() {
        if !covered[v as usize] {
            cert.pad(v);
        }
    }
    cert.canonicalize();
    Ok(Some(cert))
}

struct Recognizer {
    edges: Vec<u64>,
    balanced: bool,
    memo: HashMap<u64, Option<Certificate>>,
}

fn mask_vertices(mask: u64) -> Vec<Vertex> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

fn balance_key(sizes: [u32; 3]) -> [u32; 3] {
    let mut s = sizes;
    s.sort_unstable_by(|a, b| b.cmp(a));
    s
}

impl Recognizer {
    fn solve(&mut self, mask: u64) -> Option<Certificate> {
        if let Some(hit) = self.memo.get(&mask) {
            return hit.clone();
        }
        let result = self.solve_uncached(mask);
        self.memo.insert(mask, result.clone());
        result
    }

    fn solve_uncached(&mut self, mask: u64) -> Option<Certificate> {
        let inside: Vec<u64> = self
            .edges
            .iter()
            .copied()
            .filter(|&e| e & !mask == 0)
            .collect();
        if mask.count_ones() <= 2 || inside.is_empty() {
            return Some(Certificate::leaf(mask_vertices(mask)));
        }
        let active = inside.iter().fold(0u64, |m, &e| m | e);
        let isolated = mask & !active;
        let search = SplitSearch::new(active, &inside);

        let mut best: Option<([u32; 3], Certificate)> = None;
        let balanced = self.balanced;
        search.run(&mut |parts: [u64; 3]| {
            let mut parts = parts;
            for v in mask_vertices(isolated) {
                let k = (0..3).min_by_key(|&i| (parts[i].count_ones(), i)).unwrap();
                parts[k] |= 1 << v;
            }
            let key = balance_key(parts.map(u64::count_ones));
            if let Some((bk, _)) = &best {
                if key >= *bk {
                    return false;
                }
            }
            let mut children = Vec::with_capacity(3);
            for p in parts {
                match self.solve(p) {
                    Some(c) => children.push(c),
                    None => return false,
                }
            }
            best = Some((key, Certificate::internal(children)));
            !balanced
        });
        best.map(|(_, c)| c)
    }
}

/// Enumerates 3-splits of the active vertices, one per unordered split,
/// where every edge is crossing or internal.
struct SplitSearch {
    order: Vec<Vertex>,
    /// For position `i`, the position pairs of edges whose last vertex is `i`.
    closing: Vec<Vec<(usize, usize)>>,
}

impl SplitSearch {
    fn new(active: u64, edges: &[u64]) -> Self {
        let verts = mask_vertices(active);
        let degree = |v: Vertex| edges.iter().filter(|&&e| e >> v & 1 == 1).count();
        let mut placed: u64 = 0;
        let mut order = Vec::with_capacity(verts.len());
        while order.len() < verts.len() {
            let next = verts
                .iter()
                .copied()
                .filter(|&v| placed >> v & 1 == 0)
                .max_by_key(|&v| {
                    let bit = 1u64 << v;
                    let closes = edges
                        .iter()
                        .filter(|&&e| e & bit != 0 && (e & !bit) & !placed == 0)
                        .count();
                    let touches = edges
                        .iter()
                        .filter(|&&e| e & bit != 0 && e & placed != 0)
                        .count();
                    (closes, touches, degree(v), std::cmp::Reverse(v))
                })
                .unwrap();
            placed |= 1 << next;
            order.push(next);
        }
        let mut pos = [usize::MAX; 64];
        for (i, &v) in order.iter().enumerate() {
            pos[v as usize] = i;
        }
        let mut closing = vec![Vec::new(); order.len()];
        for &e in edges {
            let mut ps: Vec<usize> = mask_vertices(e).iter().map(|&v| pos[v as usize]).collect();
            ps.sort_unstable();
            closing[ps[2]].push((ps[0], ps[1]));
        }
        SplitSearch { order, closing }
    }

    /// Calls `visit` with each valid split; stops when `visit` returns true.
    fn run(&self, visit: &mut dyn FnMut([u64; 3]) -> bool) {
        let mut labels = vec![0u8; self.order.len()];
        self.dfs(0, 0, &mut labels, visit);
    }

    fn dfs(
        &self,
        pos: usize,
        used: u8,
        labels: &mut [u8],
        visit: &mut dyn FnMut([u64; 3]) -> bool,
    ) -> bool {
        let k = self.order.len();
        if pos == k {
            if used < 3 {
                return false;
            }
            let mut parts = [0u64; 3];
            for (i, &l) in labels.iter().enumerate() {
                parts[l as usize] |= 1 << self.order[i];
            }
            return visit(parts);
        }
        if k - pos < (3 - used) as usize {
            return false;
        }
        for l in 0..(used + 1).min(3) {
            let ok = self.closing[pos].iter().all(|&(a, b)| {
                let (la, lb) = (labels[a], labels[b]);
                (la == lb && lb == l) || (la != lb && la != l && lb != l)
            });
            if ok {
                labels[pos] = l;
                if self.dfs(pos + 1, used.max(l + 1), labels, visit) {
                    return true;
                }
            }
        }
        false
    }
}

/// `t(s)`: the maximum number of edges of an iterated tripartite 3-graph on
/// `s` vertices.
pub fn max_iterated_tripartite_edges(s: u32) -> u64 {
    iterated_tripartite_edge_table(s)[s as usize]
}

/// `t(0..=max_s)` by the split recursion `t(s) = max a·b·c + t(a) + t(b) +
/// t(c)` over `a + b + c = s`, with `t(s) = 0` for `s <= 2`.
pub fn iterated_tripartite_edge_table(max_s: u32) -> Vec<u64> {
    let max_s = max_s as usize;
    let mut t = vec![0u64; max_s + 1];
    for s in 3..=max_s {
        let mut best = 0;
        for a in 1..=s / 3 {
            for b in a..=(s - a) / 2 {
                let c = s - a - b;
                let v = (a * b * c) as u64 + t[a] + t[b] + t[c];
                best = best.max(v);
            }
        }
        t[s] = best;
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_certificate() {
        let h = ThreeGraph::new(3, [[0, 1, 2]]).unwrap();
        let c = is_iterated_tripartite(&h).unwrap().unwrap();
        assert_eq!(c.parts, vec![vec![0], vec![1], vec![2]]);
        assert!(c.children.iter().all(Certificate::is_leaf));
        assert!(c.validate(&h));
    }

    #[test]
    fn k4_and_fano_rejected() {
        assert_eq!(
            is_iterated_tripartite(&ThreeGraph::complete(4)).unwrap(),
            None
        );
        assert_eq!(is_iterated_tripartite(&ThreeGraph::fano()).unwrap(), None);
    }

    #[test]
    fn nested_blowup_recognised() {
        // blowup 012 with a second edge inside part {0,3,4,5}
        let h =
            ThreeGraph::new(6, [[0, 1, 2], [3, 1, 2], [4, 1, 2], [5, 1, 2], [0, 3, 4]]).unwrap();
        let c = is_iterated_tripartite(&h).unwrap().unwrap();
        assert!(c.validate(&h));
        assert_eq!(c.depth(), 3);
    }

    #[test]
    fn isolated_vertices_are_padded() {
        let h = ThreeGraph::new(8, [[1, 3, 5]]).unwrap();
        let c = is_iterated_tripartite(&h).unwrap().unwrap();
        assert_eq!(c.vertices, (0..8).collect::<Vec<_>>());
        assert!(c.validate(&h));
        let e = ThreeGraph::empty(5);
        let c = is_iterated_tripartite(&e).unwrap().unwrap();
        assert!(c.is_leaf());
        assert_eq!(c.vertices.len(), 5);
    }

    #[test]
    fn guard_rejects_large_supports() {
        let h = ThreeGraph::complete(16);
        assert!(matches!(
            is_iterated_tripartite(&h),
            Err(Error::TooLarge {
                size: 16,
                limit: 15
            })
        ));
    }

    #[test]
    fn balanced_mode_prefers_even_split() {
        // two disjoint edges: a balanced top split is 2+2+2
        let h = ThreeGraph::new(6, [[0, 1, 2], [3, 4, 5]]).unwrap();
        let opts = RecognizeOptions {
            prefer_balanced: true,
            ..Default::default()
        };
        let c = recognize_iterated(&h, opts).unwrap().unwrap();
        assert!(c.validate(&h));
        assert!(c.parts.iter().all(|p| p.len() == 2), "{:?}", c.parts);
    }

    #[test]
    fn t_values() {
        let t = iterated_tripartite_edge_table(12);
        assert_eq!(&t[..6], &[0, 0, 0, 1, 2, 4]);
        assert_eq!(t[9], 30);
        assert!(t.windows(2).all(|w| w[1] >= w[0]));
    }
}
