use crate::error::{Error, Result};
use crate::graphs::Graph;

/// A tree with a chosen root and the level-major vertex order
/// `x_1^0 > x_1^1 > x_2^1 > ... > x_1^2 > ...`.
///
/// Within a level, vertices are sorted by the position of their parent and
/// then by vertex index. `order[0]` is the root (the largest vertex);
/// `position` is the inverse permutation.
#[derive(Debug, Clone)]
pub struct RootedTree {
    base: Graph,
    root: usize,
    level: Vec<usize>,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    order: Vec<usize>,
    position: Vec<usize>,
}

impl RootedTree {
    pub fn new(g: &Graph, root: usize) -> Result<Self> {
        root_and_label(g, root)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn level(&self, v: usize) -> usize {
        self.level[v]
    }

    pub fn levels(&self) -> &[usize] {
        &self.level
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Children of `v`, in vertex order (largest first).
    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn vertex_order(&self) -> &[usize] {
        &self.order
    }

    /// Position in the vertex order; 0 is the root.
    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    /// `a > b` in the vertex order.
    pub fn vertex_greater(&self, a: usize, b: usize) -> bool {
        self.position[a] < self.position[b]
    }

    pub fn depth(&self) -> usize {
        self.level.iter().copied().max().unwrap_or(0)
    }
}

/// Roots `g` at `root`, computing levels, parents and the vertex order.
pub fn root_and_label(g: &Graph, root: usize) -> Result<RootedTree> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let n = g.n();
    if root >= n {
        return Err(Error::BadParams(format!("root {root} out of range 0..{n}")));
    }
    let dist = g.bfs_distances(root);
    let level: Vec<usize> = dist.iter().map(|d| d.expect("tree is connected")).collect();
    let mut parent = vec![None; n];
    for v in 0..n {
        if v != root {
            parent[v] = g
                .neighbors(v)
                .iter()
                .copied()
                .find(|&u| level[u] + 1 == level[v]);
        }
    }

    let parent_ref = &parent;
    let mut order = Vec::with_capacity(n);
    let mut position = vec![usize::MAX; n];
    order.push(root);
    position[root] = 0;
    let mut frontier = vec![root];
    while !frontier.is_empty() {
        let mut next: Vec<usize> = frontier
            .iter()
            .flat_map(|&p| {
                g.neighbors(p)
                    .iter()
                    .copied()
                    .filter(move |&c| parent_ref[c] == Some(p))
            })
            .collect();
        next.sort_by_key(|&c| (position[parent[c].unwrap()], c));
        for &c in &next {
            position[c] = order.len();
            order.push(c);
        }
        frontier = next;
    }

    let mut children = vec![Vec::new(); n];
    for &v in &order[1..] {
        children[parent[v].unwrap()].push(v);
    }

    Ok(RootedTree {
        base: g.clone(),
        root,
        level,
        parent,
        children,
        order,
        position,
    })
}
