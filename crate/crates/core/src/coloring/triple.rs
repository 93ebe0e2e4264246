use crate::combin::{choose3, triple_rank, triple_unrank, triples_of};
use crate::hypergraph::ThreeGraph;
use crate::{sort_triple, Error, Result, Triple, Vertex};
use sha2::{Digest, Sha256};

/// Red/blue coloring of all triples of `0..n`: one bit per colex-ranked
/// triple, set for red.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleColoring {
    n: u32,
    bits: Vec<u64>,
}

impl TripleColoring {
    pub fn all_blue(n: u32) -> Self {
        let words = choose3(n as u64).div_ceil(64) as usize;
        TripleColoring {
            n,
            bits: vec![0; words],
        }
    }

    pub fn all_red(n: u32) -> Self {
        let total = choose3(n as u64);
        let mut c = TripleColoring::all_blue(n);
        for w in c.bits.iter_mut() {
            *w = u64::MAX;
        }
        let tail = (total % 64) as u32;
        if tail != 0 {
            *c.bits.last_mut().unwrap() = (1u64 << tail) - 1;
        }
        c
    }

    pub fn from_red_triples(n: u32, red: impl IntoIterator<Item = [Vertex; 3]>) -> Result<Self> {
        let mut c = TripleColoring::all_blue(n);
        for [a, b, d] in red {
            let t = sort_triple(a, b, d);
            if t[0] == t[1] || t[1] == t[2] || t[2] >= n {
                return Err(Error::invalid(format!("bad triple {t:?} for n = {n}")));
            }
            c.set_red(t, true);
        }
        Ok(c)
    }

    /// Rebuilds from the packed words; bits past `C(n,3)` must be clear.
    pub fn from_words(n: u32, bits: Vec<u64>) -> Result<Self> {
        let total = choose3(n as u64);
        if bits.len() as u64 != total.div_ceil(64) {
            return Err(Error::invalid(format!(
                "{} words for {total} triples",
                bits.len()
            )));
        }
        let tail = (total % 64) as u32;
        if tail != 0 && bits.last().unwrap() >> tail != 0 {
            return Err(Error::invalid("bits set past the last triple"));
        }
        Ok(TripleColoring { n, bits })
    }

    pub fn num_vertices(&self) -> u32 {
        self.n
    }

    pub fn words(&self) -> &[u64] {
        &self.bits
    }

    #[inline]
    pub fn is_red_sorted(&self, t: Triple) -> bool {
        let r = triple_rank(t);
        self.bits[r >> 6] >> (r & 63) & 1 == 1
    }

    #[inline]
    pub fn is_red(&self, a: Vertex, b: Vertex, c: Vertex) -> bool {
        self.is_red_sorted(sort_triple(a, b, c))
    }

    pub fn set_red(&mut self, t: Triple, red: bool) {
        let r = triple_rank(t);
        if red {
            self.bits[r >> 6] |= 1 << (r & 63);
        } else {
            self.bits[r >> 6] &= !(1 << (r & 63));
        }
    }

    pub fn red_count(&self) -> u64 {
        self.bits.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Red triples in colex order.
    pub fn red_triples(&self) -> Vec<Triple> {
        let mut out = Vec::new();
        for (i, &w) in self.bits.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let j = w.trailing_zeros() as usize;
                out.push(triple_unrank(i * 64 + j));
                w &= w - 1;
            }
        }
        out
    }

    /// The red triples as a 3-graph on `0..n`.
    pub fn red_graph(&self) -> ThreeGraph {
        let mut edges = self.red_triples();
        edges.sort_unstable();
        ThreeGraph::from_sorted_unchecked(self.n, edges)
    }

    /// True iff every triple inside `vs` is blue.
    pub fn is_blue_set(&self, vs: &[Vertex]) -> bool {
        let mut s = vs.to_vec();
        s.sort_unstable();
        s.dedup();
        let blue = triples_of(&s).all(|t| !self.is_red_sorted(t));
        blue
    }

    /// The coloring induced on `vs`, renumbered to `0..vs.len()` in the
    /// given order.
    pub fn restrict(&self, vs: &[Vertex]) -> TripleColoring {
        let k = vs.len() as u32;
        let mut out = TripleColoring::all_blue(k);
        for t in crate::combin::triples(k) {
            if self.is_red(vs[t[0] as usize], vs[t[1] as usize], vs[t[2] as usize]) {
                out.set_red(t, true);
            }
        }
        out
    }

    /// SHA-256 over `n` and the packed words, hex encoded.
    pub fn instance_hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(b"tripcol");
        h.update(self.n.to_le_bytes());
        for w in &self.bits {
            h.update(w.to_le_bytes());
        }
        hex::encode(h.finalize())
    }
}
