//! Non-isomorphic free trees.
//!
//! Rooted trees are produced as canonical level sequences by the
//! Beyer–Hedetniemi successor rule. Each is mapped to the canonical level
//! sequence of the same tree rooted at its centroid (larger code when there
//! are two centroids); distinct centroid codes are distinct free trees.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graphs::Graph;

pub const MAX_ENUMERATION_N: usize = 16;

/// Canonical identifier of a free tree: its centroid level sequence, one hex
/// digit per vertex.
pub type TreeCode = String;

/// Advances a level sequence (root level 0) to its successor.
fn next_rooted(levels: &mut [usize]) -> bool {
    let n = levels.len();
    let Some(p) = (0..n).rev().find(|&i| levels[i] > 1) else {
        return false;
    };
    let q = (0..p).rev().find(|&i| levels[i] == levels[p] - 1).unwrap();
    let d = p - q;
    for i in p..n {
        levels[i] = levels[i - d];
    }
    true
}

/// Builds the tree of a level sequence: parent of `i` is the last earlier
/// vertex one level up.
pub fn tree_from_levels(levels: &[usize]) -> Result<Graph> {
    if levels.is_empty() || levels[0] != 0 {
        return Err(Error::BadParams("level sequence must start at 0".into()));
    }
    let mut edges = Vec::with_capacity(levels.len() - 1);
    for i in 1..levels.len() {
        let parent = (0..i)
            .rev()
            .find(|&j| levels[j] + 1 == levels[i])
            .ok_or_else(|| Error::BadParams(format!("no parent for position {i}")))?;
        edges.push((parent, i));
    }
    Graph::new(levels.len(), &edges)
}

fn subtree_sizes(g: &Graph, root: usize) -> Vec<usize> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![root];
    parent[root] = root;
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        for &w in g.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                order.push(w);
            }
        }
        i += 1;
    }
    let mut size = vec![1usize; n];
    for &v in order.iter().rev() {
        if v != root {
            size[parent[v]] += size[v];
        }
    }
    size
}

/// Centroid vertices (one or two) of a tree.
pub fn centroids(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let size = subtree_sizes(g, 0);
    let mut out = Vec::new();
    for v in 0..n {
        // Largest component of T - v.
        let mut worst = n - size[v];
        for &w in g.neighbors(v) {
            if size[w] < size[v] {
                worst = worst.max(size[w]);
            }
        }
        if 2 * worst <= n {
            out.push(v);
        }
    }
    out
}

/// Canonical level sequence of `g` rooted at `root`: children ordered by
/// decreasing subtree sequence.
pub fn canonical_levels(g: &Graph, root: usize) -> Vec<usize> {
    fn encode(g: &Graph, v: usize, parent: usize, depth: usize) -> Vec<usize> {
        let mut kids: Vec<Vec<usize>> = g
            .neighbors(v)
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| encode(g, w, v, depth + 1))
            .collect();
        kids.sort_unstable_by(|a, b| b.cmp(a));
        let mut out = vec![depth];
        for k in kids {
            out.extend(k);
        }
        out
    }
    encode(g, root, usize::MAX, 0)
}

/// Canonical code of a free tree, stable under relabelling.
pub fn canonical_code(g: &Graph) -> Result<TreeCode> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let best = centroids(g)
        .into_iter()
        .map(|c| canonical_levels(g, c))
        .max()
        .unwrap();
    Ok(levels_to_code(&best))
}

fn levels_to_code(levels: &[usize]) -> TreeCode {
    levels
        .iter()
        .map(|&l| std::char::from_digit(l as u32, 36).unwrap())
        .collect()
}

pub fn code_to_levels(code: &str) -> Result<Vec<usize>> {
    code.chars()
        .map(|c| {
            c.to_digit(36)
                .map(|d| d as usize)
                .ok_or_else(|| Error::Parse(format!("bad tree code character {c:?}")))
        })
        .collect()
}

/// Tree for a canonical code; vertex 0 is a centroid.
pub fn tree_from_code(code: &str) -> Result<Graph> {
    tree_from_levels(&code_to_levels(code)?)
}

/// One representative per isomorphism class of free trees on `n` vertices,
/// sorted by canonical code. Vertex 0 of each tree is a centroid.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_tree_codes(n)?
        .iter()
        .map(|c| tree_from_code(c).expect("generated codes are valid"))
        .collect())
}

/// Canonical codes of all free trees on `n` vertices, sorted.
pub fn enumerate_tree_codes(n: usize) -> Result<Vec<TreeCode>> {
    if n == 0 || n > MAX_ENUMERATION_N {
        return Err(Error::BadParams(format!(
            "tree enumeration needs 1 <= n <= {MAX_ENUMERATION_N}"
        )));
    }
    let mut levels: Vec<usize> = (0..n).collect();
    let mut codes = BTreeSet::new();
    loop {
        let g = tree_from_levels(&levels)?;
        codes.insert(canonical_code(&g)?);
        if !next_rooted(&mut levels) {
            break;
        }
    }
    Ok(codes.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{make_named, NamedGraph};

    #[test]
    fn rooted_successor_counts() {
        // Rooted trees: 1, 1, 2, 4, 9, 20, 48.
        for (n, expected) in [(1, 1), (2, 1), (3, 2), (4, 4), (5, 9), (6, 20), (7, 48)] {
            let mut levels: Vec<usize> = (0..n).collect();
            let mut count = 1;
            while next_rooted(&mut levels) {
                count += 1;
            }
            assert_eq!(count, expected, "n = {n}");
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_trees(1).unwrap().len(), 1);
        assert_eq!(enumerate_trees(4).unwrap().len(), 2);
        assert_eq!(enumerate_trees(7).unwrap().len(), 11);
    }

    #[test]
    fn code_ignores_labelling() {
        let p5 = make_named(NamedGraph::Path(5)).unwrap();
        let shuffled = p5.relabel(&[3, 0, 4, 1, 2]).unwrap();
        assert_eq!(
            canonical_code(&p5).unwrap(),
            canonical_code(&shuffled).unwrap()
        );
        let star = make_named(NamedGraph::Star(4)).unwrap();
        assert_ne!(canonical_code(&p5).unwrap(), canonical_code(&star).unwrap());
    }

    #[test]
    fn bicentroid_path() {
        let p4 = make_named(NamedGraph::Path(4)).unwrap();
        assert_eq!(centroids(&p4), vec![1, 2]);
        assert_eq!(canonical_code(&p4).unwrap(), "0121");
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(enumerate_trees(0).is_err());
        assert!(enumerate_trees(17).is_err());
    }
}
