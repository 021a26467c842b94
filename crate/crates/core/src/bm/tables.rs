use std::collections::HashMap;

use crate::betti::{BettiTable, TableKind};
use crate::bm::GenSubset;
use crate::error::{Error, Result};
use crate::ideals::{GeneratorOrder, MonomialIdeal};

/// Largest generator count for full subset enumeration.
pub const BM_CAP: usize = 20;

/// Order-independent per-subset data: lcm, bridges and gaps of every
/// σ ⊆ 𝒢(I), indexed by the bit pattern of σ.
#[derive(Debug, Clone)]
pub struct BmTables {
    g: usize,
    masks: Vec<u128>,
    lcm: Vec<u128>,
    bridges: Vec<u32>,
    gaps: Vec<u32>,
}

/// Per-order view: the bit-set of generators strictly below each generator.
#[derive(Debug, Clone)]
pub struct OrderMasks {
    below: Vec<u32>,
    rank: Vec<usize>,
}

impl OrderMasks {
    pub fn new(order: &GeneratorOrder) -> Self {
        OrderMasks {
            below: (0..order.len()).map(|i| order.below_mask(i)).collect(),
            rank: (0..order.len()).map(|i| order.rank(i)).collect(),
        }
    }

    /// Smallest member of a nonempty bit-set.
    fn min_of(&self, s: u32) -> usize {
        let mut best = usize::MAX;
        let mut best_rank = 0;
        let mut rest = s;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if best == usize::MAX || self.rank[i] > best_rank {
                best = i;
                best_rank = self.rank[i];
            }
        }
        best
    }
}

impl BmTables {
    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        Self::with_cap(ideal, BM_CAP)
    }

    pub fn with_cap(ideal: &MonomialIdeal, cap: usize) -> Result<Self> {
        let g = ideal.len();
        if g > cap || g > 31 {
            return Err(Error::TooLarge {
                what: "generator set",
                size: g,
                cap: cap.min(31),
            });
        }
        let masks = ideal.polarized_masks()?;
        let size = 1usize << g;
        let mut lcm = vec![0u128; size];
        for s in 1..size {
            let low = s.trailing_zeros() as usize;
            lcm[s] = lcm[s & (s - 1)] | masks[low];
        }
        let mut bridges = vec![0u32; size];
        let mut gaps = vec![0u32; size];
        for s in 0..size {
            let l = lcm[s];
            let mut b = 0u32;
            let mut gp = 0u32;
            for (m, &mm) in masks.iter().enumerate() {
                if s >> m & 1 == 1 {
                    if lcm[s ^ (1 << m)] == l {
                        b |= 1 << m;
                    }
                } else if mm & !l == 0 {
                    gp |= 1 << m;
                }
            }
            bridges[s] = b;
            gaps[s] = gp;
        }
        Ok(BmTables {
            g,
            masks,
            lcm,
            bridges,
            gaps,
        })
    }

    pub fn generator_count(&self) -> usize {
        self.g
    }

    pub fn subset_count(&self) -> usize {
        1 << self.g
    }

    pub fn masks(&self) -> &[u128] {
        &self.masks
    }

    pub fn lcm_mask(&self, s: GenSubset) -> u128 {
        self.lcm[s.0 as usize]
    }

    pub fn lcm_degree(&self, s: GenSubset) -> usize {
        self.lcm[s.0 as usize].count_ones() as usize
    }

    pub fn bridges(&self, s: GenSubset) -> GenSubset {
        GenSubset(self.bridges[s.0 as usize])
    }

    pub fn gaps(&self, s: GenSubset) -> GenSubset {
        GenSubset(self.gaps[s.0 as usize])
    }

    fn true_gaps_raw(&self, om: &OrderMasks, s: usize) -> u32 {
        let old = self.bridges[s];
        let mut out = 0u32;
        let mut rest = self.gaps[s];
        while rest != 0 {
            let g = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let new = self.bridges[s | (1 << g)] & !old;
            if new & om.below[g] == 0 {
                out |= 1 << g;
            }
        }
        out
    }

    pub fn true_gaps(&self, order: &GeneratorOrder, s: GenSubset) -> GenSubset {
        GenSubset(self.true_gaps_raw(&OrderMasks::new(order), s.0 as usize))
    }

    pub fn smallest_bridge(&self, order: &GeneratorOrder, s: GenSubset) -> Option<usize> {
        let b = self.bridges[s.0 as usize];
        (b != 0).then(|| OrderMasks::new(order).min_of(b))
    }

    /// Potentially type-2 test under the literal reading (some bridge
    /// dominates no true gap), and under the smallest-bridge reading.
    fn pt2_raw(&self, om: &OrderMasks, s: usize) -> (bool, bool, usize) {
        let b = self.bridges[s];
        if b == 0 {
            return (false, false, usize::MAX);
        }
        let tg = self.true_gaps_raw(om, s);
        let sb = om.min_of(b);
        let mut any = false;
        let mut rest = b;
        while rest != 0 {
            let m = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if tg & om.below[m] == 0 {
                any = true;
                break;
            }
        }
        (any, tg & om.below[sb] == 0, sb)
    }

    pub fn is_potentially_type2(&self, order: &GeneratorOrder, s: GenSubset) -> bool {
        self.pt2_raw(&OrderMasks::new(order), s.0 as usize).0
    }

    /// All potentially type-2 subsets with their smallest bridges.
    pub fn potentially_type2(&self, order: &GeneratorOrder) -> Vec<(GenSubset, usize)> {
        let om = OrderMasks::new(order);
        (0..self.subset_count())
            .filter_map(|s| {
                let (pt2, _, sb) = self.pt2_raw(&om, s);
                pt2.then_some((GenSubset(s as u32), sb))
            })
            .collect()
    }

    /// Subsets on which the two readings of "potentially type-2" differ.
    pub fn pt2_reading_disagreements(&self, order: &GeneratorOrder) -> Vec<GenSubset> {
        let om = OrderMasks::new(order);
        (0..self.subset_count())
            .filter(|&s| {
                let (any, sb, _) = self.pt2_raw(&om, s);
                any != sb
            })
            .map(|s| GenSubset(s as u32))
            .collect()
    }

    /// Bridge-friendliness via injectivity of σ ↦ σ∖sb(σ) on potentially
    /// type-2 sets. `seen` is scratch space reused across calls.
    fn bridge_friendly_with(&self, om: &OrderMasks, seen: &mut Scratch) -> bool {
        seen.next_generation(self.subset_count());
        for s in 0..self.subset_count() {
            let (pt2, _, sb) = self.pt2_raw(om, s);
            if pt2 && !seen.mark(s & !(1 << sb)) {
                return false;
            }
        }
        true
    }

    pub fn is_bridge_friendly(&self, order: &GeneratorOrder) -> bool {
        self.bridge_friendly_with(&OrderMasks::new(order), &mut Scratch::default())
    }

    /// Direct check: every potentially type-2 σ is type-2, i.e. every other
    /// potentially type-2 τ with τ∖sb(τ) = σ∖sb(σ) has sb(τ) > sb(σ).
    pub fn is_bridge_friendly_by_definition(&self, order: &GeneratorOrder) -> bool {
        let pt2 = self.potentially_type2(order);
        let mut by_rest: HashMap<u32, Vec<(GenSubset, usize)>> = HashMap::new();
        for &(s, sb) in &pt2 {
            by_rest.entry(s.0 & !(1 << sb)).or_default().push((s, sb));
        }
        pt2.iter().all(|&(s, sb)| {
            by_rest[&(s.0 & !(1 << sb))]
                .iter()
                .filter(|&&(t, _)| t != s)
                .all(|&(_, sbt)| {
                    assert_ne!(
                        sbt, sb,
                        "equal difference sets and equal sb force equal sets"
                    );
                    order.greater(sbt, sb)
                })
        })
    }

    /// Subsets with no bridge and no true gap, ∅ included.
    pub fn critical_sets(&self, order: &GeneratorOrder) -> Vec<GenSubset> {
        let om = OrderMasks::new(order);
        (0..self.subset_count())
            .filter(|&s| self.bridges[s] == 0 && self.true_gaps_raw(&om, s) == 0)
            .map(|s| GenSubset(s as u32))
            .collect()
    }

    /// Quotient Betti table counted from critical sets.
    pub fn betti(&self, order: &GeneratorOrder) -> BettiTable {
        let mut t = BettiTable::new(TableKind::Quotient);
        for s in self.critical_sets(order) {
            t.add(s.len(), self.lcm_degree(s), 1);
        }
        t
    }

    /// First order in lexicographic permutation sequence that is
    /// bridge-friendly. `symmetries` are generator permutations preserving
    /// the ideal; orders that are not lexicographically least in their
    /// orbit are skipped, which does not change the answer since the
    /// least orbit member comes first and shares the verdict.
    pub fn find_bridge_friendly_order(&self, symmetries: &[Vec<usize>]) -> Option<GeneratorOrder> {
        let mut found = None;
        self.scan_orders(symmetries, |order, bf| {
            if bf {
                found = Some(order.clone());
                false
            } else {
                true
            }
        });
        found
    }

    /// Counts (bridge-friendly, tested) over all orders, or over orbit
    /// representatives when `symmetries` is nonempty.
    pub fn count_bridge_friendly_orders(&self, symmetries: &[Vec<usize>]) -> (u64, u64) {
        let mut good = 0;
        let mut total = 0;
        self.scan_orders(symmetries, |_, bf| {
            total += 1;
            good += bf as u64;
            true
        });
        (good, total)
    }

    fn scan_orders(
        &self,
        symmetries: &[Vec<usize>],
        mut visit: impl FnMut(&GeneratorOrder, bool) -> bool,
    ) {
        let mut perm: Vec<usize> = (0..self.g).collect();
        let mut scratch = Scratch::default();
        loop {
            if symmetries.iter().all(|pi| !lex_less_image(&perm, pi)) {
                let order = GeneratorOrder::from_perm(perm.clone()).expect("valid permutation");
                let bf = self.bridge_friendly_with(&OrderMasks::new(&order), &mut scratch);
                if !visit(&order, bf) {
                    return;
                }
            }
            if !next_permutation(&mut perm) {
                return;
            }
        }
    }
}

/// Whether relabelling `perm` by `pi` gives a lexicographically smaller list.
fn lex_less_image(perm: &[usize], pi: &[usize]) -> bool {
    for &p in perm {
        let q = pi[p];
        if q != p {
            return q < p;
        }
    }
    false
}

fn next_permutation(a: &mut [usize]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| a[i] < a[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| a[j] > a[i]).unwrap();
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

/// Generation-stamped visited set, so repeated scans avoid clearing.
#[derive(Default)]
struct Scratch {
    stamp: Vec<u32>,
    generation: u32,
}

impl Scratch {
    fn next_generation(&mut self, size: usize) {
        if self.stamp.len() < size {
            self.stamp = vec![0; size];
            self.generation = 0;
        }
        self.generation += 1;
    }

    /// Marks `i`; false if it was already marked this generation.
    fn mark(&mut self, i: usize) -> bool {
        if self.stamp[i] == self.generation {
            return false;
        }
        self.stamp[i] = self.generation;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bm::predicates;
    use crate::graphs::{make_named, root_and_label, NamedGraph};
    use crate::ideals::{closed_neighborhood_ideal, tree_lex_order};

    #[test]
    fn permutations_in_lex_order() {
        let mut p = vec![0, 1, 2];
        let mut seen = vec![p.clone()];
        while next_permutation(&mut p) {
            seen.push(p.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[1], vec![0, 2, 1]);
        assert_eq!(seen[5], vec![2, 1, 0]);
    }

    #[test]
    fn tables_match_literal_predicates() {
        let i = MonomialIdeal::from_supports(
            5,
            &[
                vec![0, 1],
                vec![1, 2],
                vec![0, 2],
                vec![2, 3, 4],
                vec![1, 4],
            ],
        )
        .unwrap();
        let t = BmTables::new(&i).unwrap();
        let order = GeneratorOrder::from_perm(vec![3, 0, 4, 2, 1]).unwrap();
        for s in 0..32u32 {
            let s = GenSubset(s);
            assert_eq!(t.bridges(s), predicates::bridges(&i, s));
            assert_eq!(t.gaps(s), predicates::gaps(&i, s));
            assert_eq!(t.true_gaps(&order, s), predicates::true_gaps(&i, &order, s));
            assert_eq!(
                t.smallest_bridge(&order, s),
                predicates::smallest_bridge(&i, &order, s)
            );
            assert_eq!(
                t.is_potentially_type2(&order, s),
                predicates::is_potentially_type2(&i, &order, s)
            );
        }
    }

    #[test]
    fn path5_critical_sets() {
        let p5 = make_named(NamedGraph::Path(5)).unwrap();
        let ni = closed_neighborhood_ideal(&p5).unwrap().ideal;
        let order = tree_lex_order(&root_and_label(&p5, 0).unwrap(), &ni).unwrap();
        let t = BmTables::new(&ni).unwrap();
        assert!(t.is_bridge_friendly(&order));
        assert!(t.is_bridge_friendly_by_definition(&order));
        assert_eq!(t.critical_sets(&order).len(), 8);
        let b = t.betti(&order);
        assert_eq!(b.get(2, 4), 3);
        assert_eq!(b.get(3, 6), 0);
    }

    #[test]
    fn cap_enforced() {
        let supports: Vec<Vec<usize>> = (0..21).map(|i| vec![i]).collect();
        let i = MonomialIdeal::from_supports(21, &supports).unwrap();
        assert!(matches!(BmTables::new(&i), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn symmetry_reduction_keeps_first_witness() {
        // Triangle ideal: full S_3 symmetry on generators.
        let i = MonomialIdeal::from_supports(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let t = BmTables::new(&i).unwrap();
        let sym: Vec<Vec<usize>> = vec![
            vec![0, 1, 2],
            vec![1, 0, 2],
            vec![0, 2, 1],
            vec![2, 1, 0],
            vec![1, 2, 0],
            vec![2, 0, 1],
        ];
        assert_eq!(
            t.find_bridge_friendly_order(&sym),
            t.find_bridge_friendly_order(&[])
        );
        let (_, tested) = t.count_bridge_friendly_orders(&sym);
        assert_eq!(tested, 1);
    }
}
