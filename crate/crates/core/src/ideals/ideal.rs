use std::fmt;

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::ideals::monomial::{check_arity, Monomial};

/// A monomial ideal given by its minimal generators, stored in the canonical
/// order of [`Monomial::canonical_cmp`]. No generators means the zero ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    numvars: usize,
    generators: Vec<Monomial>,
}

/// Deduplicates, drops non-minimal monomials and sorts canonically.
pub fn minimalize(numvars: usize, ms: &[Monomial]) -> Result<MonomialIdeal> {
    for m in ms {
        if m.numvars() != numvars {
            return Err(Error::MixedArity(numvars, m.numvars()));
        }
    }
    let mut sorted = ms.to_vec();
    sorted.sort_by(|a, b| a.canonical_cmp(b));
    sorted.dedup();
    // Canonical order is degree-ascending, so a divisor always comes first.
    let mut kept: Vec<Monomial> = Vec::with_capacity(sorted.len());
    for m in sorted {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    Ok(MonomialIdeal {
        numvars,
        generators: kept,
    })
}

impl MonomialIdeal {
    pub fn new(numvars: usize, gens: &[Monomial]) -> Result<Self> {
        minimalize(numvars, gens)
    }

    /// Squarefree ideal from supports given as 0-based variable lists.
    pub fn from_supports(numvars: usize, supports: &[Vec<usize>]) -> Result<Self> {
        for s in supports {
            if let Some(&v) = s.iter().find(|&&v| v >= numvars) {
                return Err(Error::BadParams(format!(
                    "variable {v} out of range for {numvars} variables"
                )));
            }
        }
        let ms: Vec<Monomial> = supports
            .iter()
            .map(|s| Monomial::from_support(numvars, s))
            .collect();
        minimalize(numvars, &ms)
    }

    pub fn zero(numvars: usize) -> Self {
        MonomialIdeal {
            numvars,
            generators: Vec::new(),
        }
    }

    pub fn numvars(&self) -> usize {
        self.numvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> &Monomial {
        &self.generators[i]
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.generators.iter().position(|g| g == m)
    }

    /// `ord_{x_i}(I)`: minimum exponent of `x_i` over the generators.
    pub fn ord(&self, i: usize) -> u32 {
        self.generators
            .iter()
            .map(|g| g.exponent(i))
            .min()
            .unwrap_or(0)
    }

    /// lcm of the generators at the given indices; lcm(∅) = 1.
    pub fn lcm_of(&self, indices: impl IntoIterator<Item = usize>) -> Monomial {
        let mut exps = vec![0u32; self.numvars];
        for i in indices {
            for (e, &g) in exps.iter_mut().zip(self.generators[i].exponents()) {
                *e = (*e).max(g);
            }
        }
        Monomial::new(exps)
    }

    /// Squarefree bit-set encodings of the generators: `x_i^e` becomes the
    /// first `e` of the bits reserved for `x_i`. lcm becomes bitwise or and
    /// degree becomes popcount.
    pub fn polarized_masks(&self) -> Result<Vec<u128>> {
        let widths: Vec<u32> = (0..self.numvars)
            .map(|i| {
                self.generators
                    .iter()
                    .map(|g| g.exponent(i))
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let total: u32 = widths.iter().sum();
        if total > 128 {
            return Err(Error::TooLarge {
                what: "polarized variable count",
                size: total as usize,
                cap: 128,
            });
        }
        let mut offsets = Vec::with_capacity(self.numvars);
        let mut acc = 0u32;
        for &w in &widths {
            offsets.push(acc);
            acc += w;
        }
        Ok(self
            .generators
            .iter()
            .map(|g| {
                g.exponents()
                    .iter()
                    .zip(&offsets)
                    .fold(0u128, |m, (&e, &off)| {
                        if e == 0 {
                            m
                        } else {
                            m | (((1u128 << e) - 1) << off)
                        }
                    })
            })
            .collect())
    }

    /// Sum of two ideals over the same variables.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.numvars != other.numvars {
            return Err(Error::MixedArity(self.numvars, other.numvars));
        }
        let all: Vec<Monomial> = self
            .generators
            .iter()
            .chain(&other.generators)
            .cloned()
            .collect();
        minimalize(self.numvars, &all)
    }

    /// The ideal with every generator multiplied by `m`.
    pub fn times(&self, m: &Monomial) -> Result<MonomialIdeal> {
        let ms = self
            .generators
            .iter()
            .map(|g| {
                check_arity(g, m)?;
                Ok(Monomial::new(
                    g.exponents()
                        .iter()
                        .zip(m.exponents())
                        .map(|(a, b)| a + b)
                        .collect(),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        minimalize(self.numvars, &ms)
    }

    /// Same generators viewed in a ring with `numvars` variables.
    pub fn extend_vars(&self, numvars: usize) -> Result<MonomialIdeal> {
        if numvars < self.numvars {
            return Err(Error::BadParams("cannot drop variables".into()));
        }
        let ms: Vec<Monomial> = self
            .generators
            .iter()
            .map(|g| {
                let mut e = g.exponents().to_vec();
                e.resize(numvars, 0);
                Monomial::new(e)
            })
            .collect();
        minimalize(numvars, &ms)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

/// `I ∩ J` = minimalize of all pairwise lcms.
pub fn intersect(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MonomialIdeal> {
    if i.numvars != j.numvars {
        return Err(Error::MixedArity(i.numvars, j.numvars));
    }
    let mut ms = Vec::with_capacity(i.len() * j.len());
    for a in &i.generators {
        for b in &j.generators {
            ms.push(a.lcm(b)?);
        }
    }
    minimalize(i.numvars, &ms)
}

/// NI(G) together with which vertices produce each generator.
#[derive(Debug, Clone)]
pub struct NeighborhoodIdeal {
    pub ideal: MonomialIdeal,
    /// `witnesses[g]`: vertices `v` with `Supp(m_g) = N[v]`, ascending.
    pub witnesses: Vec<Vec<usize>>,
    /// `generator_of[v]`: index of `∏N[v]` if it is a minimal generator.
    pub generator_of: Vec<Option<usize>>,
}

pub fn closed_neighborhood_ideal(g: &Graph) -> Result<NeighborhoodIdeal> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidGraph("graph has no vertices".into()));
    }
    let nbhd: Vec<Monomial> = (0..n)
        .map(|v| Monomial::from_support(n, &g.closed_neighborhood(v)))
        .collect();
    let ideal = minimalize(n, &nbhd)?;
    let generator_of: Vec<Option<usize>> = nbhd.iter().map(|m| ideal.position(m)).collect();
    let mut witnesses = vec![Vec::new(); ideal.len()];
    for (v, gi) in generator_of.iter().enumerate() {
        if let Some(gi) = gi {
            witnesses[*gi].push(v);
        }
    }
    Ok(NeighborhoodIdeal {
        ideal,
        witnesses,
        generator_of,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathKind {
    Path,
    Cycle,
}

/// J_3 of a path or cycle: products of three consecutive variables.
pub fn three_path_ideal(kind: PathKind, n: usize) -> Result<MonomialIdeal> {
    if n < 3 {
        return Err(Error::BadParams("3-path ideal needs n >= 3".into()));
    }
    let count = match kind {
        PathKind::Path => n - 2,
        PathKind::Cycle => n,
    };
    let supports: Vec<Vec<usize>> = (0..count)
        .map(|i| vec![i, (i + 1) % n, (i + 2) % n])
        .collect();
    MonomialIdeal::from_supports(n, &supports)
}

/// I_n = ⟨x1x2, x2x3x4, …, x_{n-2}x_{n-1}x_n⟩ in n variables; I_1 = 0 and
/// I_2 = I_3 = ⟨x1x2⟩.
pub fn ideal_i_n(n: usize) -> Result<MonomialIdeal> {
    if n == 0 {
        return Err(Error::BadParams("I_n needs n >= 1".into()));
    }
    if n == 1 {
        return Ok(MonomialIdeal::zero(1));
    }
    let mut supports = vec![vec![0, 1]];
    for i in 1..n.saturating_sub(2) {
        supports.push(vec![i, i + 1, i + 2]);
    }
    MonomialIdeal::from_supports(n, &supports)
}

/// The two halves of `I_n = J_n + K_n`: `J_n = ⟨x1x2⟩` and `K_n` the 3-path
/// ideal on `x2..xn` (zero for n ≤ 3).
pub fn ideal_i_n_split(n: usize) -> Result<(MonomialIdeal, MonomialIdeal)> {
    let i = ideal_i_n(n)?;
    if n == 1 {
        return Ok((MonomialIdeal::zero(1), MonomialIdeal::zero(1)));
    }
    let x1x2 = Monomial::from_support(n, &[0, 1]);
    let j = MonomialIdeal::new(n, std::slice::from_ref(&x1x2))?;
    let rest: Vec<Monomial> = i
        .generators()
        .iter()
        .filter(|&g| g != &x1x2)
        .cloned()
        .collect();
    let k = MonomialIdeal::new(n, &rest)?;
    Ok((j, k))
}
