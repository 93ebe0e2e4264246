use crate::coloring::TripleColoring;
use crate::combin::pair_rank;
use crate::rng::Stream;
use crate::{Error, Result, Vertex};
use fixedbitset::FixedBitSet;
use serde::Serialize;

#[derive(Clone, Copy, Debug)]
pub struct CliqueOptions {
    /// Largest `N` searched exactly when no size limit is given.
    pub max_n: u32,
    /// Stop as soon as a blue clique of this size is found.
    pub size_limit: Option<usize>,
}

impl Default for CliqueOptions {
    fn default() -> Self {
        CliqueOptions {
            max_n: 64,
            size_limit: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueResult {
    pub size: usize,
    pub witness: Vec<Vertex>,
    /// False when the search stopped early at the size limit.
    pub exhaustive: bool,
}

/// `blue[pair_rank(a, b)]` holds every `w` with `abw` blue.
fn blue_links(chi: &TripleColoring) -> Vec<FixedBitSet> {
    let n = chi.num_vertices();
    let mut out = Vec::with_capacity(crate::combin::choose2(n as u64) as usize);
    for b in 1..n {
        for a in 0..b {
            let mut s = FixedBitSet::with_capacity(n as usize);
            for w in 0..n {
                if w != a && w != b && !chi.is_red(a, b, w) {
                    s.insert(w as usize);
                }
            }
            out.push(s);
        }
    }
    out
}

struct Search {
    blue: Vec<FixedBitSet>,
    best: Vec<Vertex>,
    limit: usize,
    stopped: bool,
}

impl Search {
    fn done(&self) -> bool {
        self.best.len() >= self.limit
    }

    /// `q` is a blue clique; every `p` in `cand` forms blue triples with
    /// every pair of `q`.
    fn run(&mut self, q: &mut Vec<Vertex>, cand: FixedBitSet) {
        if self.done() {
            self.stopped = true;
            return;
        }
        let c = cand.count_ones(..);
        if q.len() + c <= self.best.len() {
            return;
        }
        let Some(red) = self.red_triple(q, &cand) else {
            let mut all: Vec<Vertex> = q.clone();
            all.extend(cand.ones().map(|v| v as Vertex));
            all.sort_unstable();
            self.best = all;
            return;
        };
        // some candidate of the red triple must go; branch on the first
        // one dropped
        let members: Vec<Vertex> = red
            .into_iter()
            .filter(|&x| cand.contains(x as usize))
            .collect();
        let mut cand = cand;
        let mut added = 0;
        for x in members {
            if !cand.contains(x as usize) {
                // already excluded by the vertices just added
                self.run(q, cand);
                break;
            }
            let mut without = cand.clone();
            without.set(x as usize, false);
            self.run(q, without);
            if self.done() {
                break;
            }
            cand.set(x as usize, false);
            for &a in q.iter() {
                cand.intersect_with(&self.blue[pair_rank(a, x)]);
            }
            q.push(x);
            added += 1;
        }
        q.truncate(q.len() - added);
    }

    /// A red triple inside `q` plus `cand` with at least two candidates.
    fn red_triple(&self, q: &[Vertex], cand: &FixedBitSet) -> Option<[Vertex; 3]> {
        let mut pool = cand.clone();
        for &v in q {
            pool.insert(v as usize);
        }
        let cs: Vec<usize> = cand.ones().collect();
        for (i, &b) in cs.iter().enumerate() {
            for &a in &cs[..i] {
                let mut red = pool.clone();
                red.difference_with(&self.blue[pair_rank(a as Vertex, b as Vertex)]);
                red.set(a, false);
                red.set(b, false);
                if let Some(w) = red.ones().next() {
                    return Some([a as Vertex, b as Vertex, w as Vertex]);
                }
            }
        }
        None
    }
}

/// Largest vertex set with every internal triple blue, by branch and
/// bound: while the candidate pool holds a red triple, one of its
/// candidates must be left out, and the search branches on which.
pub fn max_blue_clique_exact(chi: &TripleColoring, opts: CliqueOptions) -> Result<CliqueResult> {
    let n = chi.num_vertices();
    if n > opts.max_n && opts.size_limit.is_none() {
        return Err(Error::TooLarge {
            size: n as usize,
            limit: opts.max_n as usize,
        });
    }
    let mut s = Search {
        blue: blue_links(chi),
        best: Vec::new(),
        limit: opts.size_limit.unwrap_or(usize::MAX),
        stopped: false,
    };
    let mut all = FixedBitSet::with_capacity(n as usize);
    all.insert_range(..);
    s.run(&mut Vec::new(), all);
    debug_assert!(chi.is_blue_set(&s.best));
    Ok(CliqueResult {
        size: s.best.len(),
        exhaustive: !s.stopped,
        witness: s.best,
    })
}

/// Random-order greedy extension, repeated `restarts` times (stream
/// `"clique/greedy"`). The result is always a blue clique.
pub fn greedy_blue_clique(chi: &TripleColoring, restarts: usize, seed: u64) -> CliqueResult {
    let n = chi.num_vertices();
    let mut s = Stream::new(seed, "clique/greedy");
    let mut best: Vec<Vertex> = Vec::new();
    for _ in 0..restarts.max(1) {
        let mut order: Vec<Vertex> = (0..n).collect();
        s.shuffle(&mut order);
        let mut q: Vec<Vertex> = Vec::new();
        for v in order {
            let ok = q
                .iter()
                .enumerate()
                .all(|(i, &a)| q[..i].iter().all(|&b| !chi.is_red(a, b, v)));
            if ok {
                q.push(v);
            }
        }
        if q.len() > best.len() {
            best = q;
        }
    }
    best.sort_unstable();
    debug_assert!(chi.is_blue_set(&best));
    CliqueResult {
        size: best.len(),
        witness: best,
        exhaustive: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extremes() {
        let r =
            max_blue_clique_exact(&TripleColoring::all_blue(5), CliqueOptions::default()).unwrap();
        assert_eq!((r.size, r.exhaustive), (5, true));
        let r =
            max_blue_clique_exact(&TripleColoring::all_red(6), CliqueOptions::default()).unwrap();
        assert_eq!(r.size, 2);
        let r =
            max_blue_clique_exact(&TripleColoring::all_red(1), CliqueOptions::default()).unwrap();
        assert_eq!(r.size, 1);
        assert_eq!(
            greedy_blue_clique(&TripleColoring::all_blue(9), 1, 0).size,
            9
        );
    }

    #[test]
    fn size_guard() {
        let chi = TripleColoring::all_blue(70);
        assert!(max_blue_clique_exact(&chi, CliqueOptions::default()).is_err());
        let r = max_blue_clique_exact(
            &chi,
            CliqueOptions {
                size_limit: Some(10),
                ..CliqueOptions::default()
            },
        )
        .unwrap();
        assert!(r.size >= 10);
    }

    #[test]
    fn one_red_triple() {
        let chi = TripleColoring::from_red_triples(5, [[0, 2, 4]]).unwrap();
        let r = max_blue_clique_exact(&chi, CliqueOptions::default()).unwrap();
        assert_eq!(r.size, 4);
        assert!(chi.is_blue_set(&r.witness));
    }
}
