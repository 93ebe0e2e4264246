//! r-trifference codes in `{1,2,3}^ell`.
//!
//! Words are packed two bits per symbol (`1 -> 01`, `2 -> 10`, `3 -> 11`).
//! Three symbols are pairwise distinct exactly when their codes XOR to zero,
//! so the trifference count of a triple is a popcount over XORed masks.

use crate::combin::choose3;
use crate::rng::Stream;
use crate::{Error, Result};
use rayon::prelude::*;
use std::collections::HashSet;

pub const DEFAULT_MAX_RETRIES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrifferenceCode {
    ell: usize,
    r: usize,
    words: Vec<Vec<u8>>,
    stride: usize,
    lo: Vec<u64>,
    hi: Vec<u64>,
    valid: Vec<u64>,
}

impl TrifferenceCode {
    /// Checks word length, alphabet and distinctness. The trifference
    /// property itself is checked by [`verify_code`].
    pub fn new(ell: usize, r: usize, words: Vec<Vec<u8>>) -> Result<Self> {
        if r > ell {
            return Err(Error::invalid(format!("r = {r} exceeds ell = {ell}")));
        }
        for (i, w) in words.iter().enumerate() {
            if w.len() != ell {
                return Err(Error::invalid(format!(
                    "word {i} has length {}, expected {ell}",
                    w.len()
                )));
            }
            if let Some(s) = w.iter().find(|s| !(1..=3).contains(*s)) {
                return Err(Error::invalid(format!("word {i} has symbol {s}")));
            }
        }
        let mut seen = HashSet::with_capacity(words.len());
        for (i, w) in words.iter().enumerate() {
            if !seen.insert(w.as_slice()) {
                return Err(Error::invalid(format!("word {i} is a duplicate")));
            }
        }
        let stride = ell.div_ceil(64).max(1);
        let mut lo = vec![0u64; stride * words.len()];
        let mut hi = vec![0u64; stride * words.len()];
        for (i, w) in words.iter().enumerate() {
            for (c, &s) in w.iter().enumerate() {
                let (q, b) = (i * stride + c / 64, c % 64);
                lo[q] |= ((s & 1) as u64) << b;
                hi[q] |= ((s >> 1) as u64) << b;
            }
        }
        let valid = (0..stride)
            .map(|q| {
                let bits = ell.saturating_sub(q * 64).min(64);
                if bits == 64 {
                    u64::MAX
                } else {
                    (1u64 << bits) - 1
                }
            })
            .collect();
        Ok(TrifferenceCode {
            ell,
            r,
            words,
            stride,
            lo,
            hi,
            valid,
        })
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn word(&self, i: usize) -> &[u8] {
        &self.words[i]
    }

    pub fn words(&self) -> &[Vec<u8>] {
        &self.words
    }

    /// Trifferent coordinates of words `i`, `j`, `k`.
    #[inline]
    pub fn trifference_count_of(&self, i: usize, j: usize, k: usize) -> usize {
        let (a, b, c) = (i * self.stride, j * self.stride, k * self.stride);
        (0..self.stride)
            .map(|q| {
                let x = self.lo[a + q] ^ self.lo[b + q] ^ self.lo[c + q];
                let y = self.hi[a + q] ^ self.hi[b + q] ^ self.hi[c + q];
                (!x & !y & self.valid[q]).count_ones() as usize
            })
            .sum()
    }

    /// 0-based coordinates where words `i` and `j` differ, ascending.
    pub fn difference_set_of(&self, i: usize, j: usize) -> Vec<usize> {
        let (a, b) = (i * self.stride, j * self.stride);
        let mut out = Vec::new();
        for q in 0..self.stride {
            let mut d = (self.lo[a + q] ^ self.lo[b + q]) | (self.hi[a + q] ^ self.hi[b + q]);
            while d != 0 {
                out.push(q * 64 + d.trailing_zeros() as usize);
                d &= d - 1;
            }
        }
        out
    }
}

/// Coordinates where the three words are pairwise distinct.
pub fn trifference_count(u: &[u8], v: &[u8], w: &[u8]) -> Result<usize> {
    if u.len() != v.len() || v.len() != w.len() {
        return Err(Error::invalid("word lengths differ"));
    }
    Ok(u.iter()
        .zip(v)
        .zip(w)
        .filter(|((a, b), c)| a != b && b != c && a != c)
        .count())
}

/// 0-based coordinates where `u` and `v` differ.
pub fn difference_set(u: &[u8], v: &[u8]) -> Result<Vec<usize>> {
    if u.len() != v.len() {
        return Err(Error::invalid("word lengths differ"));
    }
    if u == v {
        return Err(Error::invalid("identical words have no difference set"));
    }
    Ok((0..u.len()).filter(|&i| u[i] != v[i]).collect())
}

/// Outcome of the exhaustive triple check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeCheck {
    /// Triples with fewer than `r` trifferent coordinates.
    pub violations: u64,
    /// Lexicographically first violating triple of word indices.
    pub first_violation: Option<[usize; 3]>,
}

impl CodeCheck {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Exhaustive check of every triple of words, parallel over the first index.
pub fn verify_code(code: &TrifferenceCode) -> CodeCheck {
    let n = code.len();
    let r = code.r;
    let per_first: Vec<(u64, Option<[usize; 3]>)> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut count = 0u64;
            let mut first = None;
            for j in i + 1..n {
                for k in j + 1..n {
                    if code.trifference_count_of(i, j, k) < r {
                        count += 1;
                        first.get_or_insert([i, j, k]);
                    }
                }
            }
            (count, first)
        })
        .collect();
    CodeCheck {
        violations: per_first.iter().map(|p| p.0).sum(),
        first_violation: per_first.iter().find_map(|p| p.1),
    }
}

/// Samples `n` uniform words of length `ell` and keeps the first sample that
/// is an r-trifference code, resampling the whole code on failure.
pub fn generate_code(
    n: usize,
    ell: usize,
    r: usize,
    seed: u64,
    max_retries: usize,
) -> Result<TrifferenceCode> {
    if n < 3 {
        return Err(Error::invalid("a code needs at least 3 words"));
    }
    if r > ell {
        return Err(Error::invalid(format!("r = {r} exceeds ell = {ell}")));
    }
    let mut stream = Stream::new(seed, "trifference");
    let mut best = u64::MAX;
    for _ in 0..max_retries.max(1) {
        let words: Vec<Vec<u8>> = (0..n)
            .map(|_| (0..ell).map(|_| stream.below(3) as u8 + 1).collect())
            .collect();
        let code = match TrifferenceCode::new(ell, r, words) {
            Ok(c) => c,
            // duplicate words
            Err(_) => continue,
        };
        let check = verify_code(&code);
        if check.passed() {
            return Ok(code);
        }
        best = best.min(check.violations);
    }
    Err(Error::RetriesExhausted {
        attempts: max_retries.max(1),
        best_violations: best,
    })
}

/// Expected number of violating triples in a uniformly random code:
/// `C(n,3) * P[Bin(ell, 2/9) < r]`.
pub fn expected_violations(n: usize, ell: usize, r: usize) -> f64 {
    let p: f64 = 2.0 / 9.0;
    let mut term = (1.0 - p).powi(ell as i32);
    let mut tail = 0.0;
    for k in 0..r.min(ell + 1) {
        tail += term;
        term *= (ell - k) as f64 / (k + 1) as f64 * p / (1.0 - p);
    }
    choose3(n as u64) as f64 * tail
}

/// Smallest length at which a random code of `n` words has at most 0.05
/// expected violating triples, so whole-code resampling succeeds on the
/// first few attempts.
pub fn suggested_length(n: usize, r: usize) -> usize {
    (r.max(1)..)
        .find(|&ell| expected_violations(n, ell, r) <= 0.05)
        .expect("tail vanishes as ell grows")
}
