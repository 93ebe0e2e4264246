//! Binomials and colex ranking of pairs and triples.
//!
//! Colex order ranks `a < b` as `C(b,2) + a` and `a < b < c` as
//! `C(c,3) + C(b,2) + a`. Iterating `c`, then `b < c`, then `a < b` visits
//! ranks in increasing order.

use crate::{Triple, Vertex};

#[inline]
pub const fn choose2(n: u64) -> u64 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

#[inline]
pub const fn choose3(n: u64) -> u64 {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// Colex rank of the unordered pair `{u, v}`, `u != v`.
#[inline]
pub fn pair_rank(u: Vertex, v: Vertex) -> usize {
    debug_assert_ne!(u, v);
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    (choose2(b as u64) + a as u64) as usize
}

/// Colex rank of a sorted triple.
#[inline]
pub fn triple_rank(t: Triple) -> usize {
    debug_assert!(t[0] < t[1] && t[1] < t[2]);
    (choose3(t[2] as u64) + choose2(t[1] as u64) + t[0] as u64) as usize
}

/// Inverse of [`pair_rank`].
pub fn pair_unrank(rank: usize) -> (Vertex, Vertex) {
    let r = rank as u64;
    let mut b = ((((8 * r + 1) as f64).sqrt() + 1.0) / 2.0) as u64;
    while choose2(b) > r {
        b -= 1;
    }
    while choose2(b + 1) <= r {
        b += 1;
    }
    ((r - choose2(b)) as Vertex, b as Vertex)
}

/// Inverse of [`triple_rank`].
pub fn triple_unrank(rank: usize) -> Triple {
    let r = rank as u64;
    let mut c = ((6.0 * r as f64).cbrt() as u64).max(2);
    while choose3(c) > r {
        c -= 1;
    }
    while choose3(c + 1) <= r {
        c += 1;
    }
    let (a, b) = pair_unrank((r - choose3(c)) as usize);
    [a, b, c as Vertex]
}

/// All sorted triples of `0..n` in colex order.
pub fn triples(n: Vertex) -> impl Iterator<Item = Triple> {
    (2..n).flat_map(|c| (1..c).flat_map(move |b| (0..b).map(move |a| [a, b, c])))
}

/// All sorted triples of the given sorted vertex list, in colex order of
/// positions.
pub fn triples_of(vs: &[Vertex]) -> impl Iterator<Item = Triple> + '_ {
    (2..vs.len())
        .flat_map(move |k| (1..k).flat_map(move |j| (0..j).map(move |i| [vs[i], vs[j], vs[k]])))
}

/// All pairs `(a, b)`, `a < b < n`, in colex order.
pub fn pairs(n: Vertex) -> impl Iterator<Item = (Vertex, Vertex)> {
    (1..n).flat_map(|b| (0..b).map(move |a| (a, b)))
}
