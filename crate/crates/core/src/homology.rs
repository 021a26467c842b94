//! Betti numbers from the multigraded strands of the Taylor complex.
//!
//! Tensoring the Taylor resolution of `R/I` with the field kills every
//! differential coefficient that is a nonconstant monomial, so the complex
//! splits by lcm. For a fixed multidegree `L` the strand has one basis
//! element per subset σ with `lcm(σ) = L`, and `σ ↦ σ∖m` has coefficient
//! `±1` exactly when `lcm(σ∖m) = L`. Its homology in degree `i` is
//! `β_{i,L}(R/I)`.

use std::collections::HashMap;

use crate::betti::{BettiTable, TableKind};
use crate::error::{Error, Result};
use crate::ideals::{Monomial, MonomialIdeal};

pub const ORACLE_CAP: usize = 22;
pub const DEFAULT_PRIME: u64 = 32003;

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn check_prime(p: u64) -> Result<()> {
    if p > u32::MAX as u64 || !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

/// One multigraded strand of the reduced Taylor complex.
#[derive(Debug, Clone)]
pub struct StrandComplex {
    multidegree: Monomial,
    mask: u128,
    /// `basis[i]`: subsets of size `i` with lcm equal to the multidegree,
    /// ascending as bit-sets.
    basis: Vec<Vec<u32>>,
}

impl StrandComplex {
    pub fn multidegree(&self) -> &Monomial {
        &self.multidegree
    }

    pub fn degree(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn basis(&self, i: usize) -> &[u32] {
        self.basis.get(i).map_or(&[], Vec::as_slice)
    }

    pub fn top(&self) -> usize {
        self.basis.len().saturating_sub(1)
    }

    /// Matrix of `∂_i` with rows indexed by `basis(i-1)` and columns by
    /// `basis(i)`; the sign of dropping `m` is `(-1)^k` with `k` the
    /// position of `m` in σ.
    pub fn boundary(&self, i: usize, lcm: impl Fn(u32) -> u128) -> Vec<Vec<i64>> {
        if i == 0 {
            return Vec::new();
        }
        let rows = self.basis(i - 1);
        let cols = self.basis(i);
        let index: HashMap<u32, usize> = rows.iter().enumerate().map(|(k, &s)| (s, k)).collect();
        let mut mat = vec![vec![0i64; cols.len()]; rows.len()];
        for (c, &s) in cols.iter().enumerate() {
            let mut rest = s;
            let mut k = 0;
            while rest != 0 {
                let m = rest.trailing_zeros();
                rest &= rest - 1;
                let t = s & !(1 << m);
                if lcm(t) == self.mask {
                    mat[index[&t]][c] = if k % 2 == 0 { 1 } else { -1 };
                }
                k += 1;
            }
        }
        mat
    }
}

/// Rank of an integer matrix reduced mod `p`.
pub fn rank_mod_p(mat: &[Vec<i64>], p: u64) -> usize {
    if mat.is_empty() || mat[0].is_empty() {
        return 0;
    }
    let mut a: Vec<Vec<u64>> = mat
        .iter()
        .map(|row| row.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let (nr, nc) = (a.len(), a[0].len());
    let mut rank = 0;
    for col in 0..nc {
        let Some(piv) = (rank..nr).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = pow_mod(a[rank][col], p - 2, p);
        for x in a[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col];
                for (x, &y) in row[col..].iter_mut().zip(&pivot[col..]) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        rank += 1;
        if rank == nr {
            break;
        }
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Subset-indexed lcm masks of the polarized generators.
fn lcm_table(ideal: &MonomialIdeal) -> Result<Vec<u128>> {
    let g = ideal.len();
    if g > ORACLE_CAP {
        return Err(Error::TooLarge {
            what: "generator set for the homology oracle",
            size: g,
            cap: ORACLE_CAP,
        });
    }
    let masks = ideal.polarized_masks()?;
    let mut lcm = vec![0u128; 1 << g];
    for s in 1..lcm.len() {
        lcm[s] = lcm[s & (s - 1)] | masks[s.trailing_zeros() as usize];
    }
    Ok(lcm)
}

/// All strands, in order of first appearance of their multidegree.
pub fn strands(ideal: &MonomialIdeal) -> Result<Vec<StrandComplex>> {
    let lcm = lcm_table(ideal)?;
    let mut by_mask: HashMap<u128, usize> = HashMap::new();
    let mut out: Vec<StrandComplex> = Vec::new();
    for (s, &l) in lcm.iter().enumerate() {
        let id = *by_mask.entry(l).or_insert_with(|| {
            out.push(StrandComplex {
                multidegree: ideal.lcm_of(crate::bm::GenSubset(s as u32).iter()),
                mask: l,
                basis: Vec::new(),
            });
            out.len() - 1
        });
        let size = (s as u32).count_ones() as usize;
        let basis = &mut out[id].basis;
        if basis.len() <= size {
            basis.resize(size + 1, Vec::new());
        }
        basis[size].push(s as u32);
    }
    Ok(out)
}

/// `∂_{i-1} ∘ ∂_i = 0` for every strand, over the integers.
pub fn boundaries_square_to_zero(ideal: &MonomialIdeal) -> Result<bool> {
    let lcm = lcm_table(ideal)?;
    for st in strands(ideal)? {
        for i in 2..=st.top() {
            let d1 = st.boundary(i - 1, |s| lcm[s as usize]);
            let d2 = st.boundary(i, |s| lcm[s as usize]);
            if d1.is_empty() || d2.is_empty() {
                continue;
            }
            for row in &d1 {
                for c in 0..d2[0].len() {
                    let v: i64 = row.iter().zip(&d2).map(|(&a, r)| a * r[c]).sum();
                    if v != 0 {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Quotient Betti table `β_{i,j}(R/I)` over `F_p`.
pub fn betti_table_homology(ideal: &MonomialIdeal, p: u64) -> Result<BettiTable> {
    check_prime(p)?;
    let lcm = lcm_table(ideal)?;
    let mut table = BettiTable::new(TableKind::Quotient);
    for st in strands(ideal)? {
        let ranks: Vec<usize> = (0..=st.top() + 1)
            .map(|i| rank_mod_p(&st.boundary(i, |s| lcm[s as usize]), p))
            .collect();
        for i in 0..=st.top() {
            let dim = st.basis(i).len();
            let h = dim - ranks[i] - ranks[i + 1];
            table.add(i, st.degree(), h as u64);
        }
    }
    Ok(table)
}

/// Whether all generators have one degree `t` and `β_{i,j}(I) = 0` off the
/// line `j = i + t`.
pub fn has_linear_resolution(ideal: &MonomialIdeal, p: u64) -> Result<bool> {
    let Some(first) = ideal.generators().first() else {
        return Ok(true);
    };
    let t = first.degree() as usize;
    if ideal.generators().iter().any(|g| g.degree() as usize != t) {
        return Err(Error::MixedDegrees);
    }
    let table = betti_table_homology(ideal, p)?.shift_kind(TableKind::Ideal);
    let linear = table.entries().all(|(i, j, _)| j == i + t);
    Ok(linear)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, s: &[&[usize]]) -> MonomialIdeal {
        let v: Vec<Vec<usize>> = s.iter().map(|x| x.to_vec()).collect();
        MonomialIdeal::from_supports(n, &v).unwrap()
    }

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(32003) && !is_prime(1) && !is_prime(32001));
        let i = ideal(2, &[&[0, 1]]);
        assert_eq!(betti_table_homology(&i, 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn rank_small() {
        assert_eq!(rank_mod_p(&[vec![1, 1], vec![1, 1]], 7), 1);
        assert_eq!(rank_mod_p(&[vec![2, 0], vec![0, 1]], 2), 1);
        assert_eq!(rank_mod_p(&[vec![2, 0], vec![0, 1]], 3), 2);
    }

    #[test]
    fn koszul_pair() {
        let t = betti_table_homology(&ideal(4, &[&[0, 1], &[2, 3]]), DEFAULT_PRIME).unwrap();
        let e: Vec<_> = t.entries().collect();
        assert_eq!(e, vec![(0, 0, 1), (1, 2, 2), (2, 4, 1)]);
    }

    #[test]
    fn path3() {
        let t = betti_table_homology(&ideal(3, &[&[0, 1], &[1, 2]]), 2).unwrap();
        let e: Vec<_> = t.entries().collect();
        assert_eq!(e, vec![(0, 0, 1), (1, 2, 2), (2, 3, 1)]);
    }

    #[test]
    fn triangle_has_linear_resolution() {
        let tri = ideal(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert!(boundaries_square_to_zero(&tri).unwrap());
        let star = ideal(4, &[&[0, 1], &[0, 2], &[0, 3]]);
        assert!(has_linear_resolution(&star, DEFAULT_PRIME).unwrap());
        let mixed = ideal(3, &[&[0, 1], &[0, 1, 2]]);
        let mixed2 = ideal(4, &[&[0, 1], &[1, 2, 3]]);
        assert_eq!(mixed.len(), 1);
        assert_eq!(has_linear_resolution(&mixed2, 2), Err(Error::MixedDegrees));
    }
}
