use crate::error::{Error, Result};
use crate::graphs::RootedTree;
use crate::ideals::{Monomial, MonomialIdeal};

/// A total order ">" on generator indices. `perm[0]` is the largest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorOrder {
    perm: Vec<usize>,
    rank: Vec<usize>,
}

impl GeneratorOrder {
    /// Order from generator indices listed largest first.
    pub fn from_perm(perm: Vec<usize>) -> Result<Self> {
        let g = perm.len();
        let mut rank = vec![usize::MAX; g];
        for (r, &i) in perm.iter().enumerate() {
            if i >= g {
                return Err(Error::InvalidOrder(format!(
                    "index {i} out of range 0..{g}"
                )));
            }
            if rank[i] != usize::MAX {
                return Err(Error::InvalidOrder(format!("index {i} repeated")));
            }
            rank[i] = r;
        }
        Ok(GeneratorOrder { perm, rank })
    }

    /// Storage order: generator 0 is largest.
    pub fn identity(g: usize) -> Self {
        GeneratorOrder {
            perm: (0..g).collect(),
            rank: (0..g).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    /// Generator indices, largest first.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// 0 for the largest generator.
    pub fn rank(&self, i: usize) -> usize {
        self.rank[i]
    }

    /// `a > b`.
    pub fn greater(&self, a: usize, b: usize) -> bool {
        self.rank[a] < self.rank[b]
    }

    /// Bit-set of generators strictly below `i`.
    pub fn below_mask(&self, i: usize) -> u32 {
        self.perm[self.rank[i] + 1..]
            .iter()
            .fold(0u32, |m, &j| m | (1 << j))
    }

    /// Order obtained by renaming generator `i` to `map[i]`.
    pub fn relabel(&self, map: &[usize]) -> GeneratorOrder {
        GeneratorOrder::from_perm(self.perm.iter().map(|&i| map[i]).collect())
            .expect("relabelling by a permutation")
    }
}

/// Checks that every generator support is some `N[v]` and returns, per
/// generator, the smallest such `v`.
fn neighborhood_vertices(t: &RootedTree, ideal: &MonomialIdeal) -> Result<Vec<usize>> {
    let g = t.base();
    if ideal.numvars() != g.n() {
        return Err(Error::IdealMismatch(format!(
            "{} variables for a tree on {} vertices",
            ideal.numvars(),
            g.n()
        )));
    }
    ideal
        .generators()
        .iter()
        .map(|m| {
            if !m.is_squarefree() {
                return Err(Error::IdealMismatch(format!("{m} is not squarefree")));
            }
            let s = m.support();
            (0..g.n())
                .find(|&v| g.closed_neighborhood(v) == s)
                .ok_or_else(|| Error::IdealMismatch(format!("{m} is not a closed neighborhood")))
        })
        .collect()
}

/// The lex order on generators induced by the rooted tree's vertex order.
///
/// Each support is listed smallest vertex first; the sequences are compared
/// entry by entry and the first larger vertex wins.
pub fn tree_lex_order(t: &RootedTree, ideal: &MonomialIdeal) -> Result<GeneratorOrder> {
    neighborhood_vertices(t, ideal)?;
    let keys: Vec<Vec<usize>> = ideal
        .generators()
        .iter()
        .map(|m| {
            let mut pos: Vec<usize> = m.support().iter().map(|&v| t.position(v)).collect();
            pos.sort_unstable_by(|a, b| b.cmp(a));
            pos
        })
        .collect();
    let mut perm: Vec<usize> = (0..ideal.len()).collect();
    perm.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    GeneratorOrder::from_perm(perm)
}

/// For `Supp(m) = N[v]`: the smallest such `v`, and the unique vertex `w`
/// of `Supp(m)` closest to the root.
pub fn generator_anchor(t: &RootedTree, m: &Monomial) -> Result<(usize, usize)> {
    let g = t.base();
    if m.numvars() != g.n() || !m.is_squarefree() {
        return Err(Error::NotANeighborhood);
    }
    let s = m.support();
    let v = (0..g.n())
        .find(|&v| g.closed_neighborhood(v) == s)
        .ok_or(Error::NotANeighborhood)?;
    let min_level = s.iter().map(|&u| t.level(u)).min().unwrap();
    let shallow: Vec<usize> = s
        .iter()
        .copied()
        .filter(|&u| t.level(u) == min_level)
        .collect();
    assert_eq!(
        shallow.len(),
        1,
        "closed neighborhood has a unique shallowest vertex"
    );
    Ok((v, shallow[0]))
}
