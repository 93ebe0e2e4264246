use super::{PairColoring, Palette, TripleColoring};
use crate::combin::{pairs, triples};
use crate::rng::Stream;
use crate::{Error, Result};

/// The coordinate-labeled alternative to the trifference-code coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltTightColoring {
    /// `phi(uv)` in `0..ell`.
    pub phi: PairColoring,
    /// `f(v)` in `{1,2,3}^ell`, one per vertex.
    pub strings: Vec<Vec<u8>>,
    pub chi: TripleColoring,
}

/// `phi` is uniform per pair (stream `"alt/phi"`, colex order) and each
/// vertex gets a uniform string (stream `"alt/strings"`, vertices ascending,
/// coordinates ascending). A triple is red iff `phi` is constant `i` on its
/// pairs and the three strings are pairwise distinct at coordinate `i`.
pub fn build_alt_tight_coloring(n: u32, ell: u32, seed: u64) -> Result<AltTightColoring> {
    if n < 3 || ell < 1 {
        return Err(Error::invalid("need n >= 3 and ell >= 1"));
    }
    let mut s = Stream::new(seed, "alt/phi");
    let colors = pairs(n).map(|_| s.below(ell as u64) as u32).collect();
    let phi = PairColoring::new(n, Palette::Indexed { size: ell }, colors)?;
    let mut s = Stream::new(seed, "alt/strings");
    let strings: Vec<Vec<u8>> = (0..n)
        .map(|_| (0..ell).map(|_| s.below(3) as u8 + 1).collect())
        .collect();
    let mut chi = TripleColoring::all_blue(n);
    for t in triples(n) {
        let i = phi.color(t[0], t[1]);
        if phi.color(t[1], t[2]) != i || phi.color(t[0], t[2]) != i {
            continue;
        }
        let [a, b, c] = t.map(|v| strings[v as usize][i as usize]);
        if a != b && b != c && a != c {
            chi.set_red(t, true);
        }
    }
    Ok(AltTightColoring { phi, strings, chi })
}
