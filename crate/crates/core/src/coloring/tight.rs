use super::{PairColoring, Palette, TripleColoring};
use crate::combin::{pairs, triples};
use crate::rng::Stream;
use crate::trifference::{verify_code, TrifferenceCode};
use crate::{Error, Result};

/// The tight coloring over a verified code.
///
/// Each pair `uv` picks `phi(uv)` uniformly from the coordinates where the
/// words of `u` and `v` differ (pairs in colex order, stream `"tight/phi"`).
/// A triple is red iff its three pairs picked the same coordinate. Colors of
/// `phi` are 0-based coordinates.
pub fn build_tight_coloring(
    code: &TrifferenceCode,
    seed: u64,
) -> Result<(PairColoring, TripleColoring)> {
    let check = verify_code(code);
    if let Some(triple) = check.first_violation {
        return Err(Error::UnverifiedCode { triple });
    }
    let n = code.len() as u32;
    let mut stream = Stream::new(seed, "tight/phi");
    let colors: Vec<u32> = pairs(n)
        .map(|(a, b)| {
            let diff = code.difference_set_of(a as usize, b as usize);
            diff[stream.below(diff.len() as u64) as usize] as u32
        })
        .collect();
    let phi = PairColoring::new(
        n,
        Palette::Indexed {
            size: code.ell() as u32,
        },
        colors,
    )?;
    let mut chi = TripleColoring::all_blue(n);
    for t in triples(n) {
        let c = phi.color(t[0], t[1]);
        if phi.color(t[1], t[2]) == c && phi.color(t[0], t[2]) == c {
            chi.set_red(t, true);
        }
    }
    Ok((phi, chi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trifference::{generate_code, suggested_length};

    #[test]
    fn forced_single_coordinate() {
        let code = TrifferenceCode::new(1, 1, vec![vec![1], vec![2], vec![3]]).unwrap();
        let (phi, chi) = build_tight_coloring(&code, 0).unwrap();
        assert!(phi.colors().iter().all(|&c| c == 0));
        assert_eq!(chi.red_triples(), vec![[0, 1, 2]]);
    }

    #[test]
    fn red_triples_are_trifferent_at_their_coordinate() {
        let code = generate_code(40, suggested_length(40, 1), 1, 4, 64).unwrap();
        let (phi, chi) = build_tight_coloring(&code, 9).unwrap();
        assert!(chi.red_count() > 0);
        for t in chi.red_triples() {
            let i = phi.color(t[0], t[1]) as usize;
            let mut s = t.map(|v| code.word(v as usize)[i]);
            s.sort_unstable();
            assert_eq!(s, [1, 2, 3]);
        }
        for t in triples(40) {
            let (a, b) = (phi.color(t[0], t[1]), phi.color(t[1], t[2]));
            if a != b {
                assert!(!chi.is_red_sorted(t));
            }
        }
    }

    #[test]
    fn rejects_unverified_code() {
        let code = TrifferenceCode::new(2, 1, vec![vec![1, 1], vec![1, 2], vec![2, 1]]).unwrap();
        assert!(matches!(
            build_tight_coloring(&code, 0),
            Err(Error::UnverifiedCode { .. })
        ));
    }

    #[test]
    fn reproducible() {
        let code = generate_code(30, suggested_length(30, 1), 1, 2, 64).unwrap();
        assert_eq!(
            build_tight_coloring(&code, 5).unwrap(),
            build_tight_coloring(&code, 5).unwrap()
        );
    }
}
