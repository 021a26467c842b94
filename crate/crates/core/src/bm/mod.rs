//! Barile-Macchia combinatorics for a monomial ideal with a generator order.

pub mod predicates;
mod split;
mod subset;
mod tables;

pub use split::{find_support_split, is_support_split};
pub use subset::GenSubset;
pub use tables::{BmTables, OrderMasks, BM_CAP};

use crate::betti::{BettiTable, TableKind};
use crate::error::{Error, Result};
use crate::graphs::{automorphisms, Graph};
use crate::ideals::{GeneratorOrder, Monomial, MonomialIdeal};

/// Largest generator count for exhaustive order search.
pub const ORDER_SEARCH_CAP: usize = 10;

fn check_order(ideal: &MonomialIdeal, order: &GeneratorOrder) -> Result<()> {
    if order.len() != ideal.len() {
        return Err(Error::InvalidOrder(format!(
            "order has {} entries for {} generators",
            order.len(),
            ideal.len()
        )));
    }
    Ok(())
}

pub fn is_bridge_friendly(ideal: &MonomialIdeal, order: &GeneratorOrder) -> Result<bool> {
    check_order(ideal, order)?;
    Ok(BmTables::new(ideal)?.is_bridge_friendly(order))
}

pub fn critical_sets(ideal: &MonomialIdeal, order: &GeneratorOrder) -> Result<Vec<GenSubset>> {
    check_order(ideal, order)?;
    Ok(BmTables::new(ideal)?.critical_sets(order))
}

/// `β_{r,d}(R/I)` = number of critical sets of size `r` whose lcm has
/// degree `d`. Only meaningful for bridge-friendly orders.
pub fn betti_from_critical(ideal: &MonomialIdeal, order: &GeneratorOrder) -> Result<BettiTable> {
    check_order(ideal, order)?;
    Ok(BmTables::new(ideal)?.betti(order))
}

pub fn shift_kind(b: &BettiTable, to: TableKind) -> BettiTable {
    b.shift_kind(to)
}

/// For all ordered triples of distinct generators `(m1, m2, m3)`: if some
/// variable lies in `m1` and `m3` but not `m2`, and another lies in `m2`
/// and `m3` but not `m1`, then `m3 > m1` or `m3 > m2`.
pub fn satisfies_sufficient_condition(
    ideal: &MonomialIdeal,
    order: &GeneratorOrder,
) -> Result<bool> {
    check_order(ideal, order)?;
    Ok(sufficient_condition_violation(ideal, order)?.is_none())
}

/// First triple `(m1, m2, m3)` violating the sufficient condition.
pub fn sufficient_condition_violation(
    ideal: &MonomialIdeal,
    order: &GeneratorOrder,
) -> Result<Option<(usize, usize, usize)>> {
    let s = ideal.polarized_masks()?;
    let g = ideal.len();
    for m1 in 0..g {
        for m2 in 0..g {
            if m2 == m1 {
                continue;
            }
            for m3 in 0..g {
                if m3 == m1 || m3 == m2 {
                    continue;
                }
                let y = s[m1] & s[m3] & !s[m2];
                let z = s[m2] & s[m3] & !s[m1];
                if y != 0 && z != 0 && !order.greater(m3, m1) && !order.greater(m3, m2) {
                    return Ok(Some((m1, m2, m3)));
                }
            }
        }
    }
    Ok(None)
}

/// Generator permutations of NI(G) induced by automorphisms of `g`.
pub fn generator_symmetries(g: &Graph, ideal: &MonomialIdeal) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = automorphisms(g)
        .into_iter()
        .filter_map(|phi| {
            ideal
                .generators()
                .iter()
                .map(|m| {
                    let img: Vec<usize> = m.support().iter().map(|&v| phi[v]).collect();
                    ideal.position(&Monomial::from_support(ideal.numvars(), &img))
                })
                .collect::<Option<Vec<usize>>>()
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// First bridge-friendly order in lexicographic permutation sequence.
pub fn find_bridge_friendly_order(
    ideal: &MonomialIdeal,
    symmetries: &[Vec<usize>],
) -> Result<Option<GeneratorOrder>> {
    if ideal.len() > ORDER_SEARCH_CAP {
        return Err(Error::TooLarge {
            what: "generator set for order search",
            size: ideal.len(),
            cap: ORDER_SEARCH_CAP,
        });
    }
    Ok(BmTables::new(ideal)?.find_bridge_friendly_order(symmetries))
}

/// (bridge-friendly orders, orders tested); all `g!` orders when
/// `symmetries` is empty.
pub fn count_bridge_friendly_orders(
    ideal: &MonomialIdeal,
    symmetries: &[Vec<usize>],
) -> Result<(u64, u64)> {
    if ideal.len() > ORDER_SEARCH_CAP {
        return Err(Error::TooLarge {
            what: "generator set for order search",
            size: ideal.len(),
            cap: ORDER_SEARCH_CAP,
        });
    }
    Ok(BmTables::new(ideal)?.count_bridge_friendly_orders(symmetries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{make_named, NamedGraph};
    use crate::ideals::closed_neighborhood_ideal;

    #[test]
    fn single_generator_satisfies_condition() {
        let i = MonomialIdeal::from_supports(2, &[vec![0, 1]]).unwrap();
        assert!(satisfies_sufficient_condition(&i, &GeneratorOrder::identity(1)).unwrap());
    }

    #[test]
    fn cycle_symmetries() {
        let c10 = make_named(NamedGraph::Cycle(10)).unwrap();
        let ni = closed_neighborhood_ideal(&c10).unwrap().ideal;
        assert_eq!(generator_symmetries(&c10, &ni).len(), 20);
    }

    #[test]
    fn order_length_checked() {
        let i = MonomialIdeal::from_supports(2, &[vec![0, 1]]).unwrap();
        assert!(matches!(
            is_bridge_friendly(&i, &GeneratorOrder::identity(2)),
            Err(Error::InvalidOrder(_))
        ));
    }
}
