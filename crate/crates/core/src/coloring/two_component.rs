use super::{PairColoring, TripleColoring, VertexColors};
use crate::combin::{choose2, pair_rank};
use crate::rng::Stream;
use crate::{Error, Result, Vertex};

/// The random auxiliary maps used by the constructions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AuxiliaryFunctions {
    /// `c_t(u)` of the rainbow coloring.
    pub vertex_colors: Option<VertexColors>,
    /// `f(v)` of the alternative tight coloring.
    pub vertex_strings: Option<Vec<Vec<u8>>>,
    /// `g(uv)` in `{1,2,3}` by colex pair rank.
    pub g: Vec<u8>,
    /// `f_1, f_2, f_3` with values in the pair palette, by colex pair rank.
    pub f: [Vec<u32>; 3],
}

/// Draws `g` (stream `"two-component/g"`) and `f_1..f_3` (streams
/// `"two-component/f1"` ..) uniformly, pairs in colex order.
pub fn sample_two_component_aux(aux: &mut AuxiliaryFunctions, n: u32, palette: u32, seed: u64) {
    let pairs = choose2(n as u64) as usize;
    let mut s = Stream::new(seed, "two-component/g");
    aux.g = (0..pairs).map(|_| s.below(3) as u8 + 1).collect();
    for k in 0..3 {
        let mut s = Stream::new(seed, &format!("two-component/f{}", k + 1));
        aux.f[k] = (0..pairs).map(|_| s.below(palette as u64) as u32).collect();
    }
}

/// Red iff, for `u < v < w` with `a = phi(uv)`, `b = phi(vw)`, `c = phi(uw)`:
/// the triangle is rainbow, `g = (1, 2, 3)` on `(uv, vw, uw)`,
/// `f_1(uw) = f_1(vw) = a`, `f_2(uv) = f_2(uw) = b` and
/// `f_3(uv) = f_3(vw) = c`.
pub fn two_component_from_aux(
    phi: &PairColoring,
    aux: &AuxiliaryFunctions,
) -> Result<TripleColoring> {
    let n = phi.num_vertices();
    let pairs = choose2(n as u64) as usize;
    if aux.g.len() != pairs || aux.f.iter().any(|f| f.len() != pairs) {
        return Err(Error::invalid("auxiliary maps do not cover every pair"));
    }
    let palette = phi.palette().size();
    if aux.f.iter().flatten().any(|&x| x >= palette) {
        return Err(Error::invalid(format!(
            "f values fall outside the pair palette of size {palette}"
        )));
    }
    let [f1, f2, f3] = &aux.f;
    let mut chi = TripleColoring::all_blue(n);
    for v in 1..n {
        for u in 0..v {
            let uv = pair_rank(u, v);
            if aux.g[uv] != 1 {
                continue;
            }
            let a = phi.color(u, v);
            for w in v + 1..n {
                let (vw, uw) = (pair_rank(v, w), pair_rank(u, w));
                if aux.g[vw] != 2 || aux.g[uw] != 3 {
                    continue;
                }
                let (b, c) = (phi.color(v, w), phi.color(u, w));
                if a == b || b == c || a == c {
                    continue;
                }
                if f1[uw] == a
                    && f1[vw] == a
                    && f2[uv] == b
                    && f2[uw] == b
                    && f3[uv] == c
                    && f3[vw] == c
                {
                    chi.set_red([u, v, w], true);
                }
            }
        }
    }
    Ok(chi)
}

/// Samples `g, f_1, f_2, f_3` into `aux` and builds the coloring.
pub fn build_two_component_coloring(
    phi: &PairColoring,
    aux: &mut AuxiliaryFunctions,
    seed: u64,
) -> Result<TripleColoring> {
    sample_two_component_aux(aux, phi.num_vertices(), phi.palette().size(), seed);
    two_component_from_aux(phi, aux)
}

/// Rewrites entries of `g` and `f` so that randomly chosen rainbow triangles
/// satisfy every red condition, skipping any triangle whose requirements
/// clash with an earlier plant. Produces dense red structure for stress
/// tests; the structural guarantees hold for every choice of `g` and `f`.
/// Returns the number of distinct planted triangles.
pub fn plant_red_triangles(
    phi: &PairColoring,
    aux: &mut AuxiliaryFunctions,
    attempts: usize,
    seed: u64,
) -> Result<usize> {
    let n = phi.num_vertices();
    if n < 3 {
        return Ok(0);
    }
    let pairs = choose2(n as u64) as usize;
    if aux.g.len() != pairs || aux.f.iter().any(|f| f.len() != pairs) {
        return Err(Error::invalid("sample the auxiliary maps before planting"));
    }
    // bit 0: g locked, bit k: f_k locked
    let mut locked = vec![0u8; pairs];
    let mut s = Stream::new(seed, "two-component/plant");
    let mut planted = std::collections::HashSet::new();
    for _ in 0..attempts {
        let mut t: Vec<Vertex> = Vec::with_capacity(3);
        while t.len() < 3 {
            let x = s.below(n as u64) as Vertex;
            if !t.contains(&x) {
                t.push(x);
            }
        }
        t.sort_unstable();
        let (u, v, w) = (t[0], t[1], t[2]);
        if !phi.is_rainbow(u, v, w) || planted.contains(&[u, v, w]) {
            continue;
        }
        let (uv, vw, uw) = (pair_rank(u, v), pair_rank(v, w), pair_rank(u, w));
        let (a, b, c) = (phi.color(u, v), phi.color(v, w), phi.color(u, w));
        let g_req = [(uv, 1u8), (vw, 2), (uw, 3)];
        let f_req = [
            (0, uw, a),
            (0, vw, a),
            (1, uv, b),
            (1, uw, b),
            (2, uv, c),
            (2, vw, c),
        ];
        let clash = g_req
            .iter()
            .any(|&(p, x)| locked[p] & 1 != 0 && aux.g[p] != x)
            || f_req
                .iter()
                .any(|&(k, p, x)| locked[p] & (2 << k) != 0 && aux.f[k][p] != x);
        if clash {
            continue;
        }
        for (p, x) in g_req {
            aux.g[p] = x;
            locked[p] |= 1;
        }
        for (k, p, x) in f_req {
            aux.f[k][p] = x;
            locked[p] |= 2 << k;
        }
        planted.insert([u, v, w]);
    }
    Ok(planted.len())
}
