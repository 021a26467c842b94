//! Membership tests for known families: generic ideals, ideals with linear
//! quotients, and an obstruction to being a rooted-hypertree edge ideal.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::ideals::{closed_neighborhood_ideal, GeneratorOrder, Monomial, MonomialIdeal};

pub const LINEAR_QUOTIENTS_CAP: usize = 9;

/// Whenever two generators share the exponent of `x_i` and it exceeds
/// `ord_{x_i}(I)`, some third generator divides their lcm.
pub fn is_generic(ideal: &MonomialIdeal) -> bool {
    generic_violation(ideal).is_none()
}

/// `(variable, m, m')` witnessing non-genericity.
pub fn generic_violation(ideal: &MonomialIdeal) -> Option<(usize, usize, usize)> {
    let gens = ideal.generators();
    for x in 0..ideal.numvars() {
        let floor = ideal.ord(x);
        for a in 0..gens.len() {
            for b in a + 1..gens.len() {
                let e = gens[a].exponent(x);
                if e != gens[b].exponent(x) || e <= floor {
                    continue;
                }
                let l = gens[a].lcm(&gens[b]).expect("same arity");
                let covered = (0..gens.len()).any(|c| c != a && c != b && gens[c].divides(&l));
                if !covered {
                    return Some((x, a, b));
                }
            }
        }
    }
    None
}

/// An ordering `m_1, …, m_r` (as `perm`, first element first) with every
/// colon `(m_1, …, m_{i-1}) : m_i` generated by variables, found by
/// exhaustive search with prefix pruning.
pub fn has_linear_quotients(ideal: &MonomialIdeal) -> Result<Option<GeneratorOrder>> {
    let g = ideal.len();
    if g > LINEAR_QUOTIENTS_CAP {
        return Err(Error::TooLarge {
            what: "generator set for the linear quotients search",
            size: g,
            cap: LINEAR_QUOTIENTS_CAP,
        });
    }
    let gens = ideal.generators();
    // quot[j][i] = lcm(m_j, m_i) / m_i
    let quot: Vec<Vec<Monomial>> = (0..g)
        .map(|j| {
            (0..g)
                .map(|i| {
                    let l = gens[j].lcm(&gens[i]).expect("same arity");
                    l.divide(&gens[i]).expect("m_i divides the lcm")
                })
                .collect()
        })
        .collect();
    let mut prefix = Vec::with_capacity(g);
    let mut used = vec![false; g];
    if g == 0 || extend(&quot, &mut prefix, &mut used) {
        return Ok(Some(GeneratorOrder::from_perm(prefix)?));
    }
    Ok(None)
}

/// Colon of the prefix by `m_i` is generated by variables: each quotient is
/// divisible by some quotient of degree one.
fn colon_is_linear(quot: &[Vec<Monomial>], prefix: &[usize], i: usize) -> bool {
    let linear: Vec<&Monomial> = prefix
        .iter()
        .map(|&j| &quot[j][i])
        .filter(|q| q.degree() == 1)
        .collect();
    prefix
        .iter()
        .all(|&j| linear.iter().any(|v| v.divides(&quot[j][i])))
}

fn extend(quot: &[Vec<Monomial>], prefix: &mut Vec<usize>, used: &mut [bool]) -> bool {
    if prefix.len() == used.len() {
        return true;
    }
    for i in 0..used.len() {
        if used[i] || !colon_is_linear(quot, prefix, i) {
            continue;
        }
        used[i] = true;
        prefix.push(i);
        if extend(quot, prefix, used) {
            return true;
        }
        prefix.pop();
        used[i] = false;
    }
    false
}

/// A vertex of degree at least 5 whose neighbours all have degree 2 and
/// with every leaf at distance at least 3.
pub fn hypertree_obstruction(t: &Graph) -> Result<Option<usize>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    for x in 0..t.n() {
        if t.degree(x) < 5 || t.neighbors(x).iter().any(|&w| t.degree(w) != 2) {
            continue;
        }
        let dist = t.bfs_distances(x);
        let far = (0..t.n()).all(|v| !t.is_leaf(v) || dist[v].is_some_and(|d| d >= 3));
        if far {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub generic: bool,
    /// Generator indices in quotient order, first element first.
    pub linear_quotients: Option<Vec<usize>>,
    /// False when the ideal was above the search cap and nothing was tried.
    pub linear_quotients_exhaustive: bool,
    pub hypertree_obstruction_witness: Option<usize>,
    /// False for non-trees, where the obstruction is not evaluated.
    pub hypertree_checked: bool,
}

/// Runs all checks on `NI(g)`.
pub fn classify(g: &Graph) -> Result<ClassificationReport> {
    let ni = closed_neighborhood_ideal(g)?.ideal;
    let (linear_quotients, linear_quotients_exhaustive) = match has_linear_quotients(&ni) {
        Ok(o) => (o.map(|o| o.perm().to_vec()), true),
        Err(Error::TooLarge { .. }) => (None, false),
        Err(e) => return Err(e),
    };
    let tree = g.is_tree();
    Ok(ClassificationReport {
        generic: is_generic(&ni),
        linear_quotients,
        linear_quotients_exhaustive,
        hypertree_obstruction_witness: if tree {
            hypertree_obstruction(g)?
        } else {
            None
        },
        hypertree_checked: tree,
    })
}
