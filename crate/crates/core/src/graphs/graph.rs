use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A finite simple graph on vertices `0..n`.
///
/// Adjacency lists are kept sorted and the edge list is stored with `i < j`
/// in lexicographic order, so two graphs built from the same edge set compare
/// equal regardless of input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        let mut list = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) has an endpoint outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            let e = (a.min(b), a.max(b));
            list.push(e);
            adj[a].push(b);
            adj[b].push(a);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::InvalidGraph(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of a vertex: its label, or `x{v+1}`.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => format!("x{}", v + 1),
        }
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.adj[v].len() == 1
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    /// `N[v]` in ascending vertex order.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = self.adj[v].clone();
        let pos = out.binary_search(&v).unwrap_err();
        out.insert(pos, v);
        out
    }

    /// BFS distances from `src`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have a distance");
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<usize> {
        if u >= self.n || v >= self.n {
            return Err(Error::BadParams(format!(
                "vertex out of range for a graph on {} vertices",
                self.n
            )));
        }
        self.bfs_distances(u)[v].ok_or(Error::Unreachable(u, v))
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// Subgraph induced on `keep`, relabelled to `0..keep.len()` in the
    /// order given. Returns the graph and the old index of each new vertex.
    pub fn induced_subgraph(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut new_index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            new_index[v] = i;
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(a, b)| new_index[a] != usize::MAX && new_index[b] != usize::MAX)
            .map(|&(a, b)| (new_index[a], new_index[b]))
            .collect();
        let mut g = Graph::new(keep.len(), &edges).expect("induced subgraph of a valid graph");
        if let Some(labels) = &self.labels {
            g.labels = Some(keep.iter().map(|&v| labels[v].clone()).collect());
        }
        (g, keep.to_vec())
    }

    /// Removes the given vertices; the rest keep their relative order.
    pub fn remove_vertices(&self, drop: &[usize]) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n).filter(|v| !drop.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(a, b)| (perm[a], perm[b]))
            .collect();
        Graph::new(self.n, &edges)
    }
}

/// Families accepted by [`make_named`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    /// `path(n)`: vertices `x1 - x2 - ... - xn`.
    Path(usize),
    /// `cycle(n)`, `n >= 3`.
    Cycle(usize),
    /// `star(k)` = K_{1,k}, centre is vertex 0.
    Star(usize),
    /// `spider(t, l)`: centre of degree `t`, each leg a path with `l` edges.
    Spider(usize, usize),
    /// Complete graph K_n.
    Complete(usize),
}

pub fn make_named(kind: NamedGraph) -> Result<Graph> {
    match kind {
        NamedGraph::Path(n) => {
            if n == 0 {
                return Err(Error::BadParams("path needs at least one vertex".into()));
            }
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::new(n, &edges)
        }
        NamedGraph::Cycle(n) => {
            if n < 3 {
                return Err(Error::BadParams(
                    "cycle needs at least three vertices".into(),
                ));
            }
            let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            edges.push((0, n - 1));
            Graph::new(n, &edges)
        }
        NamedGraph::Star(k) => {
            if k == 0 {
                return Err(Error::BadParams("star needs at least one leaf".into()));
            }
            let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
            Graph::new(k + 1, &edges)
        }
        NamedGraph::Spider(t, l) => {
            if t == 0 || l == 0 {
                return Err(Error::BadParams(
                    "spider needs t >= 1 legs of length >= 1".into(),
                ));
            }
            let n = 1 + t * l;
            let mut edges = Vec::with_capacity(n - 1);
            for leg in 0..t {
                let base = 1 + leg * l;
                edges.push((0, base));
                for j in 1..l {
                    edges.push((base + j - 1, base + j));
                }
            }
            Graph::new(n, &edges)
        }
        NamedGraph::Complete(n) => {
            if n == 0 {
                return Err(Error::BadParams("complete graph needs a vertex".into()));
            }
            let mut edges = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    edges.push((a, b));
                }
            }
            Graph::new(n, &edges)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            Graph::new(3, &[(1, 1)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(Error::InvalidGraph(_))
        ));
    }

    #[test]
    fn trees_and_cycles() {
        assert!(make_named(NamedGraph::Path(4)).unwrap().is_tree());
        assert!(!make_named(NamedGraph::Cycle(4)).unwrap().is_tree());
        assert!(Graph::new(1, &[]).unwrap().is_tree());
        assert!(!Graph::new(2, &[]).unwrap().is_tree());
    }

    #[test]
    fn distances() {
        let p5 = make_named(NamedGraph::Path(5)).unwrap();
        assert_eq!(p5.distance(0, 4).unwrap(), 4);
        assert_eq!(p5.distance(2, 2).unwrap(), 0);
        let two = Graph::new(2, &[]).unwrap();
        assert_eq!(two.distance(0, 1), Err(Error::Unreachable(0, 1)));
    }

    #[test]
    fn named_shapes() {
        let c3 = make_named(NamedGraph::Cycle(3)).unwrap();
        assert_eq!(c3.edge_count(), 3);
        let sp = make_named(NamedGraph::Spider(5, 3)).unwrap();
        assert_eq!(sp.n(), 16);
        assert!(sp.is_tree());
        assert_eq!(sp.degree(0), 5);
        assert!(make_named(NamedGraph::Spider(0, 3)).is_err());
        assert!(make_named(NamedGraph::Cycle(2)).is_err());
    }

    #[test]
    fn closed_neighborhood_is_sorted() {
        let g = Graph::new(4, &[(2, 0), (2, 3), (2, 1)]).unwrap();
        assert_eq!(g.closed_neighborhood(2), vec![0, 1, 2, 3]);
        assert_eq!(g.closed_neighborhood(3), vec![2, 3]);
    }
}
