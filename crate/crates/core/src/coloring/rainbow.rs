use super::{AuxiliaryFunctions, PairColoring, Palette};
use crate::combin::pairs;
use crate::rng::Stream;
use crate::{Error, Result, Vertex};

/// Smallest palette parameter the biclique/rainbow guarantees are stated for.
pub const MIN_RAINBOW_A: u32 = 20;

/// Largest supported `ell`: `2^13` vertices, about 33.5M stored pair colors.
pub const MAX_RAINBOW_ELL: u32 = 13;

#[derive(Clone, Copy, Debug, Default)]
pub struct RainbowOptions {
    /// Accept `a < MIN_RAINBOW_A` for exhaustive micro-instances.
    pub allow_small_a: bool,
}

/// The per-level vertex colors `c_t(u)` in `0..a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexColors {
    ell: u32,
    n: u32,
    values: Vec<u32>,
}

impl VertexColors {
    /// `values[u * ell + t]` is `c_t(u)`.
    pub fn new(ell: u32, n: u32, values: Vec<u32>) -> Result<Self> {
        if values.len() != (ell as usize) * (n as usize) {
            return Err(Error::invalid("vertex color table has the wrong size"));
        }
        Ok(VertexColors { ell, n, values })
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn num_vertices(&self) -> u32 {
        self.n
    }

    pub fn get(&self, t: u32, u: Vertex) -> Option<u32> {
        (t < self.ell && u < self.n).then(|| self.values[(u * self.ell + t) as usize])
    }
}

/// Exponent of the largest power of two dividing `x`.
pub fn two_adic_valuation(x: u64) -> Result<u32> {
    if x == 0 {
        return Err(Error::invalid("2-adic valuation of 0 is undefined"));
    }
    Ok(x.trailing_zeros())
}

/// Color id `t * a + residue` of the pair `uv`, where `t = v2(u - v)` and the
/// residue is `(c_t(u) - c_t(v)) mod a`, negated when `floor(u / 2^t)` is
/// odd. Swapping `u` and `v` flips both the parity and the difference, so the
/// result is symmetric.
pub fn rainbow_color(u: Vertex, v: Vertex, colors: &VertexColors, a: u32) -> u32 {
    debug_assert_ne!(u, v);
    let t = (u as i64 - v as i64).unsigned_abs().trailing_zeros();
    let (cu, cv) = (
        colors.get(t, u).expect("level in range") as i64,
        colors.get(t, v).expect("level in range") as i64,
    );
    let diff = if (u >> t) & 1 == 0 { cu - cv } else { cv - cu };
    t * a + diff.rem_euclid(a as i64) as u32
}

/// The rainbow pair coloring on `2^ell` vertices with `ell * a` colors.
///
/// `c_t(u)` is drawn from stream `"rainbow/levels"`, vertices ascending and
/// levels ascending within a vertex.
pub fn build_rainbow_coloring(
    ell: u32,
    a: u32,
    seed: u64,
    opts: RainbowOptions,
) -> Result<(PairColoring, AuxiliaryFunctions)> {
    if ell == 0 || ell > MAX_RAINBOW_ELL {
        return Err(Error::invalid(format!(
            "ell must be in 1..={MAX_RAINBOW_ELL}, got {ell}"
        )));
    }
    if a == 0 || (a < MIN_RAINBOW_A && !opts.allow_small_a) {
        return Err(Error::invalid(format!(
            "a = {a} is below {MIN_RAINBOW_A}; pass allow_small_a to override"
        )));
    }
    let n = 1u32 << ell;
    let mut s = Stream::new(seed, "rainbow/levels");
    let values = (0..n * ell).map(|_| s.below(a as u64) as u32).collect();
    let colors = VertexColors::new(ell, n, values)?;
    let pc = pairs(n)
        .map(|(u, v)| rainbow_color(u, v, &colors, a))
        .collect();
    let phi = PairColoring::new(n, Palette::Rainbow { ell, a }, pc)?;
    let aux = AuxiliaryFunctions {
        vertex_colors: Some(colors),
        ..AuxiliaryFunctions::default()
    };
    Ok((phi, aux))
}
