//! Independence number, matching number, chordality, bipartiteness and
//! automorphisms.
//!
//! Independence and matching numbers have two routes: a leaf-to-root
//! dynamic program for trees and an exhaustive branching search for any
//! graph up to [`EXHAUSTIVE_CAP`] vertices. Callers on trees get the DP; the
//! test suite checks that both routes agree.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graphs::Graph;

/// Largest vertex count accepted by the exhaustive searches.
pub const EXHAUSTIVE_CAP: usize = 24;

pub fn independence_number(g: &Graph) -> Result<usize> {
    if g.is_tree() {
        Ok(independence_number_tree(g))
    } else {
        independence_number_exhaustive(g)
    }
}

pub fn matching_number(g: &Graph) -> Result<usize> {
    if g.is_tree() {
        Ok(matching_number_tree(g))
    } else {
        matching_number_exhaustive(g)
    }
}

/// Post-order of the tree rooted at 0, with parents.
fn postorder(g: &Graph) -> (Vec<usize>, Vec<Option<usize>>) {
    let n = g.n();
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    let mut pre = Vec::with_capacity(n);
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        pre.push(u);
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(u);
                stack.push(w);
            }
        }
    }
    pre.reverse();
    (pre, parent)
}

/// Maximum independent set size of a tree (panics if `g` is not a tree).
pub fn independence_number_tree(g: &Graph) -> usize {
    assert!(g.is_tree(), "independence_number_tree needs a tree");
    let (post, parent) = postorder(g);
    // take[v]: best in subtree with v chosen; skip[v]: with v not chosen.
    let mut take = vec![1usize; g.n()];
    let mut skip = vec![0usize; g.n()];
    for &v in &post {
        if let Some(p) = parent[v] {
            take[p] += skip[v];
            skip[p] += take[v].max(skip[v]);
        }
    }
    take[0].max(skip[0])
}

/// Maximum matching size of a tree (panics if `g` is not a tree).
pub fn matching_number_tree(g: &Graph) -> usize {
    assert!(g.is_tree(), "matching_number_tree needs a tree");
    let (post, parent) = postorder(g);
    // unmatched[v]: best in subtree with v left free; gain[v]: what matching
    // v to its best child adds on top of that (0 or 1).
    let n = g.n();
    let mut unmatched = vec![0usize; n];
    let mut gain = vec![0usize; n];
    let mut best = vec![0usize; n];
    for &v in &post {
        best[v] = unmatched[v] + gain[v];
        if let Some(p) = parent[v] {
            unmatched[p] += best[v];
            gain[p] = gain[p].max(unmatched[v] + 1 - best[v]);
        }
    }
    best[0]
}

fn check_cap(g: &Graph) -> Result<()> {
    if g.n() > EXHAUSTIVE_CAP {
        return Err(Error::TooLarge {
            what: "graph for exhaustive search",
            size: g.n(),
            cap: EXHAUSTIVE_CAP,
        });
    }
    Ok(())
}

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect()
}

/// Exhaustive maximum independent set over vertex bit-sets.
pub fn independence_number_exhaustive(g: &Graph) -> Result<usize> {
    check_cap(g)?;
    fn go(cand: u32, adj: &[u32]) -> usize {
        if cand == 0 {
            return 0;
        }
        let v = cand.trailing_zeros() as usize;
        let rest = cand & !(1 << v);
        let with_v = 1 + go(rest & !adj[v], adj);
        let without_v = go(rest, adj);
        with_v.max(without_v)
    }
    let full = if g.n() == 32 {
        u32::MAX
    } else {
        (1u32 << g.n()) - 1
    };
    Ok(go(full, &masks(g)))
}

/// Exhaustive maximum matching: the lowest live vertex is either left
/// unmatched or matched to one of its live neighbours.
pub fn matching_number_exhaustive(g: &Graph) -> Result<usize> {
    check_cap(g)?;
    fn go(live: u32, adj: &[u32]) -> usize {
        if live == 0 {
            return 0;
        }
        let v = live.trailing_zeros() as usize;
        let rest = live & !(1 << v);
        let mut best = go(rest, adj);
        let mut nb = adj[v] & rest;
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            best = best.max(1 + go(rest & !(1 << w), adj));
        }
        best
    }
    let full = if g.n() == 32 {
        u32::MAX
    } else {
        (1u32 << g.n()) - 1
    };
    Ok(go(full, &masks(g)))
}

/// Chordality via maximum cardinality search and a perfect elimination check.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    // MCS numbers vertices n-1 down to 0; the reverse of the visit order is
    // a perfect elimination ordering iff g is chordal.
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        numbered[v] = true;
        visit.push(v);
        for &w in g.neighbors(v) {
            if !numbered[w] {
                weight[w] += 1;
            }
        }
    }
    let peo: Vec<usize> = visit.into_iter().rev().collect();
    let mut pos = vec![0usize; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &peo {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        if let Some(&u) = later.iter().min_by_key(|&&w| pos[w]) {
            if later.iter().any(|&w| w != u && !g.has_edge(u, w)) {
                return false;
            }
        }
    }
    true
}

pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.n();
    let mut color: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &w in g.neighbors(u) {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// All automorphisms of `g` as vertex permutations, by backtracking with
/// degree filtering. Intended for the small graphs used in order searches.
pub fn automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        g: &Graph,
        v: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = g.n();
        if v == n {
            out.push(map.clone());
            return;
        }
        for img in 0..n {
            if used[img] || g.degree(img) != g.degree(v) {
                continue;
            }
            let consistent = (0..v).all(|u| g.has_edge(u, v) == g.has_edge(map[u], img));
            if !consistent {
                continue;
            }
            map[v] = img;
            used[img] = true;
            extend(g, v + 1, map, used, out);
            used[img] = false;
        }
        map[v] = usize::MAX;
    }
    extend(g, 0, &mut map, &mut used, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{make_named, NamedGraph};

    #[test]
    fn small_values() {
        let p4 = make_named(NamedGraph::Path(4)).unwrap();
        assert_eq!(independence_number(&p4).unwrap(), 2);
        assert_eq!(matching_number(&p4).unwrap(), 2);
        let p7 = make_named(NamedGraph::Path(7)).unwrap();
        assert_eq!(matching_number(&p7).unwrap(), 3);
        let c5 = make_named(NamedGraph::Cycle(5)).unwrap();
        assert_eq!(independence_number(&c5).unwrap(), 2);
        let star = make_named(NamedGraph::Star(4)).unwrap();
        assert_eq!(matching_number(&star).unwrap(), 1);
        assert_eq!(independence_number(&star).unwrap(), 4);
    }

    #[test]
    fn exhaustive_cap() {
        let big = make_named(NamedGraph::Cycle(25)).unwrap();
        assert!(matches!(
            independence_number(&big),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn chordality() {
        assert!(!is_chordal(&make_named(NamedGraph::Cycle(4)).unwrap()));
        assert!(is_chordal(&make_named(NamedGraph::Cycle(3)).unwrap()));
        assert!(is_chordal(&make_named(NamedGraph::Spider(3, 2)).unwrap()));
        assert!(is_chordal(&make_named(NamedGraph::Complete(5)).unwrap()));
        // C_5 with one chord still has an induced C_4.
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        assert!(!is_chordal(&g));
    }

    #[test]
    fn bipartiteness() {
        assert!(is_bipartite(&make_named(NamedGraph::Cycle(10)).unwrap()));
        assert!(!is_bipartite(&make_named(NamedGraph::Cycle(5)).unwrap()));
        assert!(is_bipartite(&make_named(NamedGraph::Star(3)).unwrap()));
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(
            automorphisms(&make_named(NamedGraph::Cycle(10)).unwrap()).len(),
            20
        );
        assert_eq!(
            automorphisms(&make_named(NamedGraph::Path(5)).unwrap()).len(),
            2
        );
        assert_eq!(
            automorphisms(&make_named(NamedGraph::Star(3)).unwrap()).len(),
            6
        );
    }
}
