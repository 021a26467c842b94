//! Barile-Macchia predicates evaluated straight from their definitions on
//! exponent vectors. [`BmTables`](super::BmTables) computes the same things
//! from precomputed bit-set tables; these are the slow reference versions.

use crate::bm::GenSubset;
use crate::ideals::{GeneratorOrder, MonomialIdeal};

fn lcm_eq(ideal: &MonomialIdeal, a: GenSubset, b: GenSubset) -> bool {
    ideal.lcm_of(a.iter()) == ideal.lcm_of(b.iter())
}

/// Members `m` of σ with `lcm(σ∖m) = lcm(σ)`.
pub fn bridges(ideal: &MonomialIdeal, sigma: GenSubset) -> GenSubset {
    sigma
        .iter()
        .filter(|&m| lcm_eq(ideal, sigma, sigma.without(m)))
        .fold(GenSubset::EMPTY, GenSubset::with)
}

/// Non-members `m` with `lcm(σ ∪ m) = lcm(σ)`.
pub fn gaps(ideal: &MonomialIdeal, sigma: GenSubset) -> GenSubset {
    GenSubset::full(ideal.len())
        .minus(sigma)
        .iter()
        .filter(|&m| lcm_eq(ideal, sigma, sigma.with(m)))
        .fold(GenSubset::EMPTY, GenSubset::with)
}

/// Gaps `g` such that every bridge `m` of σ ∪ g with `g > m` is already a
/// bridge of σ.
pub fn true_gaps(ideal: &MonomialIdeal, order: &GeneratorOrder, sigma: GenSubset) -> GenSubset {
    let old = bridges(ideal, sigma);
    gaps(ideal, sigma)
        .iter()
        .filter(|&g| {
            bridges(ideal, sigma.with(g))
                .iter()
                .all(|m| !order.greater(g, m) || old.contains(m))
        })
        .fold(GenSubset::EMPTY, GenSubset::with)
}

fn min_in(order: &GeneratorOrder, s: GenSubset) -> Option<usize> {
    s.iter().max_by_key(|&i| order.rank(i))
}

/// `sb(σ)`: the smallest bridge under ">".
pub fn smallest_bridge(
    ideal: &MonomialIdeal,
    order: &GeneratorOrder,
    sigma: GenSubset,
) -> Option<usize> {
    min_in(order, bridges(ideal, sigma))
}

/// σ has a bridge `b` with no true gap `g` satisfying `b > g`.
pub fn is_potentially_type2(
    ideal: &MonomialIdeal,
    order: &GeneratorOrder,
    sigma: GenSubset,
) -> bool {
    let tg = true_gaps(ideal, order, sigma);
    bridges(ideal, sigma)
        .iter()
        .any(|b| tg.iter().all(|g| !order.greater(b, g)))
}

/// The same test applied to `sb(σ)` only.
pub fn is_potentially_type2_sb(
    ideal: &MonomialIdeal,
    order: &GeneratorOrder,
    sigma: GenSubset,
) -> bool {
    match smallest_bridge(ideal, order, sigma) {
        None => false,
        Some(b) => true_gaps(ideal, order, sigma)
            .iter()
            .all(|g| !order.greater(b, g)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> MonomialIdeal {
        // <x1x2, x2x3, x1x3>, stored in that order.
        MonomialIdeal::from_supports(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    fn idx(i: &MonomialIdeal, name: &str) -> usize {
        i.generators()
            .iter()
            .position(|g| g.to_string() == name)
            .unwrap()
    }

    #[test]
    fn triangle_bridges_and_gaps() {
        let i = triangle();
        let all = GenSubset::full(3);
        assert_eq!(bridges(&i, all), all);
        let (a, b, c) = (idx(&i, "x1x2"), idx(&i, "x2x3"), idx(&i, "x1x3"));
        let s = GenSubset::from_indices(&[a, b]);
        assert_eq!(gaps(&i, s), GenSubset::singleton(c));
        assert_eq!(gaps(&i, GenSubset::EMPTY), GenSubset::EMPTY);
        // x1x2 > x2x3 > x1x3: adding x1x3 creates no new bridge below it.
        let order = GeneratorOrder::from_perm(vec![a, b, c]).unwrap();
        assert_eq!(true_gaps(&i, &order, s), GenSubset::singleton(c));
        // x1x3 > x2x3: x2x3 becomes a bridge below x1x3, so not a true gap.
        let order = GeneratorOrder::from_perm(vec![a, c, b]).unwrap();
        assert_eq!(true_gaps(&i, &order, s), GenSubset::EMPTY);
        assert_eq!(smallest_bridge(&i, &order, all), Some(b));
    }

    #[test]
    fn bridgeless_is_not_type2() {
        let i = triangle();
        let o = GeneratorOrder::identity(3);
        for s in 0..2 {
            assert!(!is_potentially_type2(&i, &o, GenSubset(s)));
        }
    }
}
