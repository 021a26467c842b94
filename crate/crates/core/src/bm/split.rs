use crate::bm::GenSubset;
use crate::error::Result;
use crate::ideals::{Monomial, MonomialIdeal};

fn support_masks(ideal: &MonomialIdeal) -> Vec<Vec<bool>> {
    ideal
        .generators()
        .iter()
        .map(|g| g.exponents().iter().map(|&e| e > 0).collect())
        .collect()
}

fn overlaps(a: &[bool], b: &[bool]) -> bool {
    a.iter().zip(b).any(|(&x, &y)| x && y)
}

fn has_private_variable(sup: &[Vec<bool>], m: usize) -> bool {
    (0..sup[m].len()).any(|x| sup[m][x] && sup.iter().enumerate().all(|(j, s)| j == m || !s[x]))
}

fn rest_ideal(ideal: &MonomialIdeal, a: GenSubset) -> Result<MonomialIdeal> {
    let rest: Vec<Monomial> = (0..ideal.len())
        .filter(|&i| !a.contains(i))
        .map(|i| ideal.generator(i).clone())
        .collect();
    MonomialIdeal::new(ideal.numvars(), &rest)
}

/// Whether `A` satisfies both split conditions: the supports of `A` and of
/// the remaining generators are disjoint, and every member of `A` has a
/// variable dividing no other generator.
pub fn is_support_split(ideal: &MonomialIdeal, a: GenSubset) -> bool {
    let sup = support_masks(ideal);
    for i in a.iter() {
        if !has_private_variable(&sup, i) {
            return false;
        }
        for j in 0..ideal.len() {
            if !a.contains(j) && overlaps(&sup[i], &sup[j]) {
                return false;
            }
        }
    }
    true
}

/// A maximal proper nonempty `A` satisfying [`is_support_split`], with the
/// ideal generated by the other generators.
///
/// Qualifying sets are unions of connected components of the
/// support-overlap graph in which every generator has a private variable.
/// When every component qualifies, the one with the largest least index is
/// left out so that `A` stays proper.
pub fn find_support_split(ideal: &MonomialIdeal) -> Result<Option<(GenSubset, MonomialIdeal)>> {
    let g = ideal.len();
    let sup = support_masks(ideal);
    let mut comp = vec![usize::MAX; g];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for s in 0..g {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut k = 0;
        while k < members.len() {
            let u = members[k];
            for w in 0..g {
                if comp[w] == usize::MAX && overlaps(&sup[u], &sup[w]) {
                    comp[w] = id;
                    members.push(w);
                }
            }
            k += 1;
        }
        members.sort_unstable();
        components.push(members);
    }
    let mut good: Vec<&Vec<usize>> = components
        .iter()
        .filter(|c| c.iter().all(|&m| has_private_variable(&sup, m)))
        .collect();
    if good.len() == components.len() {
        // Components are found in order of least member, so the last one
        // has the largest least index.
        good.pop();
    }
    let a = good
        .iter()
        .flat_map(|c| c.iter().copied())
        .fold(GenSubset::EMPTY, GenSubset::with);
    if a.is_empty() {
        return Ok(None);
    }
    Ok(Some((a, rest_ideal(ideal, a)?)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overlapping_supports_have_no_split() {
        let i = MonomialIdeal::from_supports(3, &[vec![0, 1], vec![1, 2]]).unwrap();
        assert!(find_support_split(&i).unwrap().is_none());
    }

    #[test]
    fn disjoint_supports_split_at_lowest() {
        let i = MonomialIdeal::from_supports(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        let (a, rest) = find_support_split(&i).unwrap().unwrap();
        assert_eq!(a.to_vec(), vec![0]);
        assert_eq!(i.generator(0).to_string(), "x1x2");
        assert_eq!(rest.to_string(), "<x3x4>");
        assert!(is_support_split(&i, a));
    }

    #[test]
    fn component_without_private_variables_is_kept() {
        // {x1x2, x2x3, x1x3} has no private variables; x4x5 does.
        let i = MonomialIdeal::from_supports(5, &[vec![0, 1], vec![1, 2], vec![0, 2], vec![3, 4]])
            .unwrap();
        let (a, rest) = find_support_split(&i).unwrap().unwrap();
        assert_eq!(a.len(), 1);
        assert_eq!(i.generator(a.to_vec()[0]).to_string(), "x4x5");
        assert_eq!(rest.len(), 3);
        assert!(!is_support_split(&i, GenSubset::full(4).minus(a)));
    }
}
