use super::{NodeId, WeightedBinaryTree};
use num_rational::Ratio;
use num_traits::{One, Zero};
use std::cmp::Ordering;

pub type Rational = Ratio<i128>;

/// Optimum of the score LP and one optimizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScoreSolution {
    pub score: Rational,
    /// `f(v)` for every internal node, in preorder.
    pub assignment: Vec<(NodeId, Rational)>,
}

/// Internal nodes in greedy order: weight-zero nodes first, then by
/// decreasing `m / weight`, ties by preorder position.
fn greedy_order(t: &WeightedBinaryTree) -> Vec<(NodeId, i128, i128)> {
    let mut nodes: Vec<(usize, NodeId, i128, i128)> = t
        .internal_nodes()
        .into_iter()
        .enumerate()
        .map(|(pos, v)| {
            (
                pos,
                v,
                t.lca_triples(v) as i128,
                t.weight(v).unwrap() as i128,
            )
        })
        .collect();
    nodes.sort_by(|a, b| {
        let key = match (a.3 == 0, b.3 == 0) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            // a.m / a.w > b.m / b.w comes first
            (false, false) => (b.2 * a.3).cmp(&(a.2 * b.3)),
        };
        key.then(a.0.cmp(&b.0))
    });
    nodes.into_iter().map(|(_, v, m, w)| (v, m, w)).collect()
}

/// Minimizes `sum (1 - f(v)) m_v` subject to `sum f(v) (n_v - 2) <= budget`
/// and `0 <= f <= 1`, over internal nodes `v`.
pub fn min_score_given_weight(t: &WeightedBinaryTree, budget: Rational) -> ScoreSolution {
    assert!(budget >= Rational::zero(), "budget must be nonnegative");
    let mut left = budget;
    let mut score = Rational::zero();
    let mut f = std::collections::HashMap::new();
    for (v, m, w) in greedy_order(t) {
        let fv = if w == 0 {
            Rational::one()
        } else {
            let full = Rational::from_integer(w);
            if left >= full {
                left -= full;
                Rational::one()
            } else {
                let part = left / full;
                left = Rational::zero();
                part
            }
        };
        score += (Rational::one() - fv) * Rational::from_integer(m);
        f.insert(v, fv);
    }
    let assignment = t.internal_nodes().into_iter().map(|v| (v, f[&v])).collect();
    ScoreSolution { score, assignment }
}

/// Budgets at which the optimal score changes slope: the cumulative
/// weights along the greedy order, starting at 0.
pub fn score_breakpoints(t: &WeightedBinaryTree) -> Vec<Rational> {
    let mut out = vec![Rational::zero()];
    let mut acc = 0i128;
    for (_, _, w) in greedy_order(t) {
        if w > 0 {
            acc += w;
            out.push(Rational::from_integer(acc));
        }
    }
    out
}

/// Same objective with `f` restricted to `{0, 1}`, by knapsack DP.
pub fn min_score_integral(t: &WeightedBinaryTree, budget: u64) -> u64 {
    let items: Vec<(u64, u64)> = t
        .internal_nodes()
        .into_iter()
        .map(|v| (t.lca_triples(v), t.weight(v).unwrap()))
        .collect();
    let total_m: u64 = items.iter().map(|i| i.0).sum();
    let total_w: u64 = items.iter().map(|i| i.1).sum();
    let cap = budget.min(total_w) as usize;
    // best[c] = largest covered m with weight <= c
    let mut best = vec![0u64; cap + 1];
    for (m, w) in items {
        let w = w as usize;
        if w > cap {
            continue;
        }
        for c in (w..=cap).rev() {
            best[c] = best[c].max(best[c - w] + m);
        }
    }
    total_m - best[cap]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i128) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn balanced_four() {
        let t = WeightedBinaryTree::parse_nested("((0 1) (2 3))").unwrap();
        assert_eq!(min_score_given_weight(&t, r(0)).score, r(4));
        assert_eq!(min_score_given_weight(&t, r(1)).score, r(2));
        assert_eq!(min_score_given_weight(&t, r(2)).score, r(0));
        assert_eq!(score_breakpoints(&t), vec![r(0), r(2)]);
        assert_eq!(min_score_integral(&t, 1), 4);
        assert_eq!(min_score_integral(&t, 2), 0);
    }

    #[test]
    fn extremes() {
        let mut s = crate::rng::Stream::new(5, "score");
        for _ in 0..20 {
            let t = WeightedBinaryTree::random(12, &mut s);
            let total_w: u64 = t
                .internal_nodes()
                .iter()
                .map(|&v| t.weight(v).unwrap())
                .sum();
            assert_eq!(min_score_given_weight(&t, r(0)).score, r(220));
            assert_eq!(min_score_given_weight(&t, r(total_w as i128)).score, r(0));
        }
    }

    #[test]
    fn fractional_at_most_integral() {
        let mut s = crate::rng::Stream::new(6, "score");
        for _ in 0..20 {
            let t = WeightedBinaryTree::random(9, &mut s);
            for b in 0..30u64 {
                let frac = min_score_given_weight(&t, r(b as i128)).score;
                assert!(frac <= r(min_score_integral(&t, b) as i128));
            }
        }
    }
}
