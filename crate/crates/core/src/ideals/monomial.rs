use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A monomial as an exponent vector over `x1..xn`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    /// The monomial 1.
    pub fn one(numvars: usize) -> Self {
        Monomial::new(vec![0; numvars])
    }

    /// Squarefree monomial with the given support (0-based variables).
    pub fn from_support(numvars: usize, support: &[usize]) -> Self {
        let mut exps = vec![0; numvars];
        for &v in support {
            exps[v] = 1;
        }
        Monomial::new(exps)
    }

    pub fn numvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// `ord_{x_i}(m)`.
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }

    /// Support as a bit-set; only valid for at most 128 variables.
    pub fn support_mask(&self) -> u128 {
        debug_assert!(self.exps.len() <= 128);
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |m, (i, _)| m | (1u128 << i))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        check_arity(self, other)?;
        Ok(Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        ))
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn divide(&self, other: &Monomial) -> Result<Monomial> {
        check_arity(self, other)?;
        if !other.divides(self) {
            return Err(Error::BadParams(format!("{other} does not divide {self}")));
        }
        Ok(Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a - b)
                .collect(),
        ))
    }

    /// Canonical storage order: degree ascending, then exponent vector
    /// lexicographically descending (so `x1x2` precedes `x4x5`).
    pub fn canonical_cmp(&self, other: &Monomial) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

pub(crate) fn check_arity(a: &Monomial, b: &Monomial) -> Result<()> {
    if a.numvars() != b.numvars() {
        return Err(Error::MixedArity(a.numvars(), b.numvars()));
    }
    Ok(())
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => write!(f, "x{}", i + 1)?,
                _ => write!(f, "x{}^{}", i + 1, e)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_arithmetic() {
        let a = Monomial::new(vec![1, 1, 0]);
        let b = Monomial::new(vec![0, 2, 1]);
        assert_eq!(a.lcm(&b).unwrap(), Monomial::new(vec![1, 2, 1]));
        assert!(a.divides(&a.lcm(&b).unwrap()));
        assert_eq!(b.degree(), 3);
        assert!(!b.is_squarefree());
        assert_eq!(b.to_string(), "x2^2x3");
        assert_eq!(Monomial::one(3).to_string(), "1");
        assert_eq!(
            a.lcm(&b).unwrap().divide(&a).unwrap(),
            Monomial::new(vec![0, 1, 1])
        );
    }

    #[test]
    fn arity_mismatch() {
        let a = Monomial::one(2);
        let b = Monomial::one(3);
        assert_eq!(a.lcm(&b), Err(Error::MixedArity(2, 3)));
    }

    #[test]
    fn canonical_order() {
        let a = Monomial::from_support(5, &[0, 1]);
        let b = Monomial::from_support(5, &[3, 4]);
        let c = Monomial::from_support(5, &[1, 2, 3]);
        assert_eq!(a.canonical_cmp(&b), Ordering::Less);
        assert_eq!(b.canonical_cmp(&c), Ordering::Less);
    }
}
