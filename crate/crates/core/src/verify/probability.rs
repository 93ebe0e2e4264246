use crate::rng::Stream;
use crate::tree::Rational;
use crate::trifference::TrifferenceCode;
use crate::{Error, Result};
use num_rational::BigRational;
use num_traits::Zero;

fn check_index(code: &TrifferenceCode, idx: &[usize]) -> Result<()> {
    if let Some(&i) = idx.iter().find(|&&i| i >= code.len()) {
        return Err(Error::invalid(format!(
            "word {i} outside a code of {} words",
            code.len()
        )));
    }
    Ok(())
}

/// Probability that the uniform choices `phi(uv)`, `phi(vw)`, `phi(uw)`
/// coincide, each drawn from the coordinates where its two words differ:
/// `|c(uv) & c(vw) & c(uw)| / (|c(uv)| |c(vw)| |c(uw)|)`.
pub fn mono_triangle_probability(
    code: &TrifferenceCode,
    u: usize,
    v: usize,
    w: usize,
) -> Result<Rational> {
    check_index(code, &[u, v, w])?;
    if u == v || v == w || u == w {
        return Err(Error::invalid("the three words must be distinct"));
    }
    let sets = [
        code.difference_set_of(u, v),
        code.difference_set_of(v, w),
        code.difference_set_of(u, w),
    ];
    if sets.iter().any(Vec::is_empty) {
        return Err(Error::invalid("two of the words are equal"));
    }
    let common = sets[0]
        .iter()
        .filter(|x| sets[1].binary_search(x).is_ok() && sets[2].binary_search(x).is_ok())
        .count() as i128;
    let denom: i128 = sets.iter().map(|s| s.len() as i128).product();
    Ok(Rational::new(common, denom))
}

/// Expected number of monochromatic triangles among the words `s`.
pub fn expected_mono_triangles(code: &TrifferenceCode, s: &[usize]) -> Result<BigRational> {
    check_index(code, s)?;
    let mut total = BigRational::zero();
    for (c, &w) in s.iter().enumerate() {
        for (b, &v) in s[..c].iter().enumerate() {
            for &u in &s[..b] {
                let p = mono_triangle_probability(code, u, v, w)?;
                total += BigRational::new((*p.numer()).into(), (*p.denom()).into());
            }
        }
    }
    Ok(total)
}

/// Monte-Carlo estimate of [`mono_triangle_probability`] by redrawing the
/// three choices `trials` times (stream `"mono-sim"`).
pub fn simulate_mono_probability(
    code: &TrifferenceCode,
    (u, v, w): (usize, usize, usize),
    trials: u64,
    seed: u64,
) -> Result<f64> {
    check_index(code, &[u, v, w])?;
    let sets = [
        code.difference_set_of(u, v),
        code.difference_set_of(v, w),
        code.difference_set_of(u, w),
    ];
    if sets.iter().any(Vec::is_empty) {
        return Err(Error::invalid("two of the words are equal"));
    }
    let mut s = Stream::new(seed, "mono-sim");
    let mut hits = 0u64;
    for _ in 0..trials {
        let [a, b, c] = [0, 1, 2].map(|k| sets[k][s.below(sets[k].len() as u64) as usize]);
        hits += (a == b && b == c) as u64;
    }
    Ok(hits as f64 / trials.max(1) as f64)
}

/// Probability that a fixed rainbow triangle is red in the two-component
/// coloring over a palette of `colors` colors: `(1/27) colors^-6`.
pub fn two_component_red_probability(colors: u32) -> f64 {
    (colors as f64).powi(-6) / 27.0
}

/// Equal-tailed interval `[lo, hi]` holding a Poisson(`mean`) count with
/// probability at least `confidence`.
pub fn poisson_interval(mean: f64, confidence: f64) -> (u64, u64) {
    assert!(mean >= 0.0 && (0.0..1.0).contains(&confidence));
    let tail = (1.0 - confidence) / 2.0;
    let (mut lo, mut hi) = (None, None);
    let mut cdf = 0.0;
    let mut log_p = -mean;
    let mut k = 0u64;
    while hi.is_none() {
        cdf += log_p.exp();
        if lo.is_none() && cdf > tail {
            lo = Some(k);
        }
        if cdf >= 1.0 - tail {
            hi = Some(k);
        }
        k += 1;
        log_p += mean.ln() - (k as f64).ln();
        if mean == 0.0 {
            hi = Some(0);
        }
    }
    (lo.unwrap_or(0), hi.unwrap())
}
