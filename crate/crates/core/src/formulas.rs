//! Betti numbers of path-related ideals: the 3-path ideal of a path, the
//! auxiliary ideals `I_n`, and `NI(P_n)` by recursion and in closed form.
//!
//! Every `betti_*` function here returns the ideal-kind number `β_{r,d}(I)`.
//! Binomials follow the convention `C(a, b) = 0` whenever `a < 0`, `b < 0`
//! or `b > a`.

use crate::betti::{BettiTable, TableKind};
use crate::error::{Error, Result};
use crate::homology::betti_table_homology;
use crate::ideals::{intersect, MonomialIdeal};

pub fn binom(a: i64, b: i64) -> u64 {
    if a < 0 || b < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut r: u128 = 1;
    for i in 0..b {
        r = r * (a - i) as u128 / (i + 1) as u128;
    }
    r as u64
}

fn delta(a: i64, b: i64) -> u64 {
    (a == b) as u64
}

/// `l` with `d - r - offset = 2l`, if that difference is even.
fn solve_l(r: i64, d: i64, offset: i64) -> Option<i64> {
    let t = d - r - offset;
    (t.rem_euclid(2) == 0).then_some(t.div_euclid(2))
}

/// `β_{r,d}` of the 3-path ideal of `P_n`.
pub fn betti_j3_path(n: usize, r: i64, d: i64) -> Result<u64> {
    if n < 3 {
        return Err(Error::BadParams("J_3(P_n) needs n >= 3".into()));
    }
    let n = n as i64;
    if r < 0 {
        return Ok(0);
    }
    Ok(match solve_l(r, d, 3) {
        Some(l) if l >= 0 => binom(n - 3 * l - 3, r - l) * binom(n - 2 * l - r - 2, 2 * l - r + 1),
        _ => 0,
    })
}

/// `β_{r,d}(I_n)`.
pub fn betti_i_n(n: usize, r: i64, d: i64) -> u64 {
    let n = n as i64;
    if n < 2 || r < 0 || d < 0 {
        return 0;
    }
    let first = match solve_l(r, d, 3) {
        Some(l) if l >= -1 => binom(n - 2 * l - r - 3, 2 * l - r + 1) * binom(n - 3 * l - 3, r - l),
        _ => 0,
    };
    let second = match solve_l(r, d, 4) {
        Some(l) if l >= -1 => {
            binom(n - 2 * l - r - 4, 2 * l - r + 2) * binom(n - 3 * l - 5, r - l - 1)
        }
        _ => 0,
    };
    // d - r - 3 and d - r - 4 have opposite parity.
    debug_assert!(first == 0 || second == 0);
    first + second
}

fn check_path_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::BadParams("path formulas need n >= 3".into()));
    }
    Ok(())
}

/// `β_{r,d}(NI(P_n))` from the splitting recursion
/// `Σ_{i<k} [β_{r-i,d-2i}(⟨x_{n-2i-1}x_{n-2i}⟩) + β_{r-i,d-2i}(I_{n-2i-1})]
/// + [n odd] β_{r-k,d-2k}(⟨x_1⟩)`, `k = ⌊n/2⌋`.
pub fn betti_ni_path_recursive(n: usize, r: i64, d: i64) -> Result<u64> {
    check_path_n(n)?;
    let k = (n / 2) as i64;
    let mut total = 0;
    for i in 0..k {
        let (ri, di) = (r - i, d - 2 * i);
        total += ((ri, di) == (0, 2)) as u64;
        total += betti_i_n(n - 2 * i as usize - 1, ri, di);
    }
    if n % 2 == 1 && (r - k, d - 2 * k) == (0, 1) {
        total += 1;
    }
    Ok(total)
}

/// Terms outside the two binomial branches: the `⟨x_{n-2i-1}x_{n-2i}⟩`
/// contributions and the odd-`n` corner.
fn delta_terms(n: i64, k: i64, r: i64, d: i64) -> u64 {
    let corner = if n % 2 == 1 {
        delta(r, k) * delta(d, 2 * r + 1)
    } else {
        0
    };
    binom((k - r - 1).abs(), k - r - 1) * delta(d, 2 * r + 2) + corner
}

/// `β_{r,d}(NI(P_n))` in closed form: the two-branch expression with its
/// inner sums written out as finite binomial sums.
pub fn betti_ni_path_closed(n: usize, r: i64, d: i64) -> Result<u64> {
    check_path_n(n)?;
    if r < 0 || d < 0 {
        return Ok(0);
    }
    let n = n as i64;
    let k = n / 2;
    let mut total = delta_terms(n, k, r, d);
    let terms = (0..k).filter(|&i| r - i >= 0);
    if let Some(l) = solve_l(r, d, 3) {
        let pre = binom(n - 2 * l - r - 4, 2 * l - r + 1);
        if pre > 0 {
            let inner: u64 = terms
                .map(|i| {
                    let j = i / 2;
                    if i % 2 == 0 {
                        if l - j >= -1 {
                            binom(n - 3 * l - 4 - j, r - l - j)
                        } else {
                            0
                        }
                    } else if l - j >= 0 {
                        binom(n - 3 * l - 5 - j, r - l - 1 - j)
                    } else {
                        0
                    }
                })
                .sum();
            total += pre * inner;
        }
    } else if let Some(l) = solve_l(r, d, 4) {
        let pre = binom(n - 2 * l - r - 5, 2 * l - r + 2);
        if pre > 0 {
            let inner: u64 = terms
                .map(|i| {
                    let j = i / 2;
                    if l - j >= -1 {
                        binom(n - 3 * l - 6 - j, r - l - 1 - j)
                    } else {
                        0
                    }
                })
                .sum();
            total += pre * inner;
        }
    }
    Ok(total)
}

/// The closed formula with the hockey-stick collapse applied to
/// the inner sums. Kept to report where it departs from the recursion; the
/// value may be negative.
pub fn betti_ni_path_collapsed(n: usize, r: i64, d: i64) -> Result<i64> {
    check_path_n(n)?;
    let n = n as i64;
    let k = n / 2;
    let h = k / 2;
    let c = |a: i64, b: i64| binom(a, b) as i64;
    let mut total = delta_terms(n, k, r, d) as i64;
    if let Some(l) = solve_l(r, d, 3) {
        let keven = (k % 2 == 0) as i64;
        total += c(n - 2 * l - r - 4, 2 * l - r + 1)
            * (c(n - 3 * l - 4, r - l)
                + 2 * (c(n - 3 * l - 5, r - l - 1) - c(n - 3 * l - 4 - h, r - l - 1 - h))
                - keven * c(n - 3 * l - 4 - h, r - l - h));
    } else if let Some(l) = solve_l(r, d, 4) {
        let kodd = (k % 2 == 1) as i64;
        total += c(n - 2 * l - r - 5, 2 * l - r + 2)
            * (2 * (c(n - 3 * l - 5, r - l - 1) - c(n - 3 * l - 5 - h, r - l - 1 - h))
                + kodd * c(n - 3 * l - 6 - h, r - l - 1 - h));
    }
    Ok(total)
}

/// A point where the collapsed closed formula and the recursion differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormulaMismatch {
    pub n: usize,
    pub r: i64,
    pub d: i64,
    pub collapsed: i64,
    pub recursive: u64,
}

/// All `(n, r, d)` with `n` in range and `0 <= r, d <= n` where the collapsed
/// formula disagrees with the recursion.
pub fn collapsed_formula_mismatches(ns: std::ops::RangeInclusive<usize>) -> Vec<FormulaMismatch> {
    let mut out = Vec::new();
    for n in ns {
        for r in 0..=n as i64 {
            for d in 0..=n as i64 {
                let collapsed = betti_ni_path_collapsed(n, r, d).expect("n >= 3");
                let recursive = betti_ni_path_recursive(n, r, d).expect("n >= 3");
                if collapsed != recursive as i64 {
                    out.push(FormulaMismatch {
                        n,
                        r,
                        d,
                        collapsed,
                        recursive,
                    });
                }
            }
        }
    }
    out
}

/// Ideal-kind table of `NI(P_n)` from [`betti_ni_path_closed`].
pub fn path_table_closed(n: usize) -> Result<BettiTable> {
    path_table(n, betti_ni_path_closed)
}

pub fn path_table_recursive(n: usize) -> Result<BettiTable> {
    path_table(n, betti_ni_path_recursive)
}

fn path_table(n: usize, f: fn(usize, i64, i64) -> Result<u64>) -> Result<BettiTable> {
    let mut t = BettiTable::new(TableKind::Ideal);
    for r in 0..=n {
        for d in 0..=n {
            t.add(r, d, f(n, r as i64, d as i64)?);
        }
    }
    Ok(t)
}

/// A projective dimension or regularity with the kind it refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathInvariant {
    pub ideal: usize,
    pub quotient: usize,
}

/// `pdim(R/NI(P_n)) = ⌊(n+1)/2⌋`; the ideal's is one less.
pub fn pdim_path(n: usize) -> Result<PathInvariant> {
    if n == 0 {
        return Err(Error::BadParams("pdim_path needs n >= 1".into()));
    }
    let quotient = n.div_ceil(2);
    Ok(PathInvariant {
        ideal: quotient - 1,
        quotient,
    })
}

/// `reg(NI(P_n)) = ⌊n/2⌋ + 1`; the quotient's is `⌊n/2⌋`.
pub fn reg_path(n: usize) -> Result<PathInvariant> {
    if n < 2 {
        return Err(Error::BadParams("reg_path needs n >= 2".into()));
    }
    Ok(PathInvariant {
        ideal: n / 2 + 1,
        quotient: n / 2,
    })
}

/// Checks `β_{r,d}(I) = β_{r,d}(J) + β_{r,d}(K) + β_{r-1,d}(J ∩ K)` for all
/// `(r, d)` with the homology oracle over `F_p`.
pub fn verify_betti_splitting(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    k: &MonomialIdeal,
    p: u64,
) -> Result<bool> {
    if i.numvars() != j.numvars() || i.numvars() != k.numvars() {
        return Err(Error::MixedArity(j.numvars(), k.numvars()));
    }
    let disjoint = j.generators().iter().all(|g| k.position(g).is_none());
    let mut union: Vec<_> = j
        .generators()
        .iter()
        .chain(k.generators())
        .cloned()
        .collect();
    union.sort_by(|a, b| a.canonical_cmp(b));
    if !disjoint || union != i.generators() {
        return Err(Error::NotAPartition);
    }
    let ideal = |x: &MonomialIdeal| -> Result<BettiTable> {
        Ok(betti_table_homology(x, p)?.shift_kind(TableKind::Ideal))
    };
    let (bi, bj, bk) = (ideal(i)?, ideal(j)?, ideal(k)?);
    let bjk = ideal(&intersect(j, k)?)?;
    let max_i = [&bi, &bj, &bk, &bjk]
        .iter()
        .filter_map(|t| t.pdim())
        .max()
        .unwrap_or(0)
        + 1;
    let max_d = i.lcm_of(0..i.len()).degree() as usize;
    for r in 0..=max_i {
        for d in 0..=max_d {
            let rhs = bj.get(r, d) + bk.get(r, d) + if r > 0 { bjk.get(r - 1, d) } else { 0 };
            if bi.get(r, d) != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_convention() {
        assert_eq!(binom(0, 0), 1);
        assert_eq!(binom(5, -1), 0);
        assert_eq!(binom(-1, 0), 0);
        assert_eq!(binom(3, 4), 0);
        assert_eq!(binom(6, 3), 20);
        assert_eq!(binom(30, 15), 155_117_520);
    }

    #[test]
    fn j3_values() {
        assert_eq!(betti_j3_path(3, 0, 3).unwrap(), 1);
        assert_eq!(betti_j3_path(5, 0, 3).unwrap(), 3);
        assert_eq!(betti_j3_path(5, 1, 4).unwrap(), 2);
        assert!(betti_j3_path(2, 0, 3).is_err());
    }

    #[test]
    fn i_n_values() {
        for r in -1..4 {
            for d in -1..6 {
                assert_eq!(betti_i_n(1, r, d), 0);
            }
        }
        for n in 2..8 {
            assert_eq!(betti_i_n(n, 0, 2), 1);
        }
        assert_eq!(betti_i_n(4, 1, 4), 1);
    }

    #[test]
    fn recursion_values() {
        assert_eq!(betti_ni_path_recursive(3, 0, 2).unwrap(), 2);
        assert_eq!(betti_ni_path_recursive(3, 1, 3).unwrap(), 1);
        assert_eq!(betti_ni_path_recursive(5, 1, 4).unwrap(), 3);
        assert_eq!(betti_ni_path_recursive(7, 2, 6).unwrap(), 4);
        assert!(betti_ni_path_recursive(2, 0, 2).is_err());
    }

    #[test]
    fn closed_matches_recursion() {
        for n in 3..=14 {
            for r in 0..=n as i64 {
                for d in 0..=n as i64 {
                    assert_eq!(
                        betti_ni_path_closed(n, r, d).unwrap(),
                        betti_ni_path_recursive(n, r, d).unwrap(),
                        "n={n} r={r} d={d}"
                    );
                }
            }
        }
    }

    #[test]
    fn closed_corner_terms() {
        // n even: (k-1, 2k) comes from the delta term; n odd: (k, 2k+1).
        assert_eq!(betti_ni_path_closed(8, 3, 8).unwrap(), 1);
        assert_eq!(betti_ni_path_closed(9, 4, 9).unwrap(), 1);
    }

    #[test]
    fn collapsed_formula_mismatch_list_is_stable() {
        let m = collapsed_formula_mismatches(3..=14);
        assert_eq!(m.len(), 40);
        assert_eq!(
            m[0],
            FormulaMismatch {
                n: 4,
                r: 0,
                d: 2,
                collapsed: 3,
                recursive: 2
            }
        );
    }

    #[test]
    fn invariants() {
        assert_eq!(pdim_path(7).unwrap().quotient, 4);
        assert_eq!(pdim_path(4).unwrap().quotient, 2);
        assert_eq!(
            pdim_path(2).unwrap(),
            PathInvariant {
                ideal: 0,
                quotient: 1
            }
        );
        assert_eq!(reg_path(6).unwrap().ideal, 4);
        assert_eq!(
            reg_path(3).unwrap(),
            PathInvariant {
                ideal: 2,
                quotient: 1
            }
        );
        assert_eq!(
            reg_path(2).unwrap(),
            PathInvariant {
                ideal: 2,
                quotient: 1
            }
        );
    }
}
