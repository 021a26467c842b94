//! Tree-specific machinery: the maximal critical set construction, the
//! distance-class test for bridges and gaps, and the leaf recursion for
//! Betti tables.

use serde::{Deserialize, Serialize};

use crate::betti::{BettiTable, TableKind};
use crate::bm::{BmTables, GenSubset};
use crate::error::{Error, Result};
use crate::formulas::binom;
use crate::graphs::{independence_number_tree, root_and_label, Graph, RootedTree};
use crate::ideals::{closed_neighborhood_ideal, tree_lex_order, GeneratorOrder, NeighborhoodIdeal};

/// A rooted tree with NI(T) and its tree-lex order.
#[derive(Debug, Clone)]
pub struct TreeBm {
    pub tree: RootedTree,
    pub ni: NeighborhoodIdeal,
    pub order: GeneratorOrder,
}

impl TreeBm {
    pub fn new(g: &Graph, root: usize) -> Result<Self> {
        let tree = root_and_label(g, root)?;
        let ni = closed_neighborhood_ideal(g)?;
        let order = tree_lex_order(&tree, &ni.ideal)?;
        Ok(TreeBm { tree, ni, order })
    }

    pub fn graph(&self) -> &Graph {
        self.tree.base()
    }

    /// Index of `m(T, v)` if it is a minimal generator.
    pub fn generator(&self, v: usize) -> Option<usize> {
        self.ni.generator_of[v]
    }

    pub fn tables(&self) -> Result<BmTables> {
        BmTables::new(&self.ni.ideal)
    }

    /// Quotient Betti table counted from critical sets under tree-lex order.
    pub fn critical_betti(&self) -> Result<BettiTable> {
        Ok(self.tables()?.betti(&self.order))
    }
}

/// The output of the maximal critical set construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalWitness {
    pub sigma: Vec<usize>,
    pub v_sigma: Vec<usize>,
}

impl CriticalWitness {
    pub fn subset(&self) -> GenSubset {
        GenSubset::from_indices(&self.sigma)
    }
}

/// Builds σ: first `m(T,v)` for every leaf `v` carrying a generator, then,
/// from the deepest level up, `m(T,v)` for every other generator vertex
/// none of whose children is already represented in σ.
pub fn max_critical_set(ctx: &TreeBm) -> Result<CriticalWitness> {
    let t = &ctx.tree;
    let g = t.base();
    if g.n() < 2 {
        return Err(Error::BadParams(
            "the construction needs at least two vertices".into(),
        ));
    }
    let mut sigma = GenSubset::EMPTY;
    let mut v_sigma = Vec::new();
    let mut take = |v: usize, sigma: &mut GenSubset| {
        let m = ctx.generator(v).expect("only generator vertices are taken");
        // Both ends of K_2 give the same generator; count it once.
        if !sigma.contains(m) {
            *sigma = sigma.with(m);
            v_sigma.push(v);
        }
    };
    let order = t.vertex_order();
    for &v in order {
        if ctx.generator(v).is_some() && g.degree(v) == 1 {
            take(v, &mut sigma);
        }
    }
    let mut rest: Vec<usize> = order
        .iter()
        .copied()
        .filter(|&v| ctx.generator(v).is_some() && g.degree(v) != 1)
        .collect();
    rest.sort_by_key(|&v| (std::cmp::Reverse(t.level(v)), t.position(v)));
    for v in rest {
        let covered = t
            .children(v)
            .iter()
            .any(|&u| ctx.generator(u).is_some_and(|m| sigma.contains(m)));
        if !covered {
            take(v, &mut sigma);
        }
    }
    v_sigma.sort_unstable();
    Ok(CriticalWitness {
        sigma: sigma.to_vec(),
        v_sigma,
    })
}

/// Generators `m(T,u)` with `dist(u,v) = n` (or `<= n` when `cumulative`),
/// optionally intersected with σ.
pub fn m_at_distance(
    ctx: &TreeBm,
    v: usize,
    n: usize,
    sigma: Option<GenSubset>,
    cumulative: bool,
) -> GenSubset {
    let dist = ctx.graph().bfs_distances(v);
    let mut out = GenSubset::EMPTY;
    for (u, du) in dist.iter().enumerate() {
        let Some(du) = *du else { continue };
        let hit = if cumulative { du <= n } else { du == n };
        if let (true, Some(m)) = (hit, ctx.generator(u)) {
            out = out.with(m);
        }
    }
    match sigma {
        Some(s) => out.intersection(s),
        None => out,
    }
}

/// Number of neighbours `w` of `v` through which some `u` with
/// `m(T,u) ∈ σ ∖ {m(T,v)}` and `dist(u,v) <= 2` is reached.
pub fn p2_class_count(ctx: &TreeBm, sigma: GenSubset, v: usize) -> usize {
    let g = ctx.graph();
    let own = ctx.generator(v);
    let in_sigma = |u: usize| match ctx.generator(u) {
        Some(m) => Some(m) != own && sigma.contains(m),
        None => false,
    };
    g.neighbors(v)
        .iter()
        .filter(|&&w| in_sigma(w) || g.neighbors(w).iter().any(|&u| u != v && in_sigma(u)))
        .count()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Bridge,
    Gap,
    Neither,
}

/// Bridge/gap status of `m(T,v)` for σ from distance classes alone.
pub fn characterize(ctx: &TreeBm, sigma: GenSubset, v: usize) -> Result<Verdict> {
    let m = ctx.generator(v).ok_or(Error::NotAGenerator(v))?;
    let near = m_at_distance(ctx, v, 1, Some(sigma.without(m)), false);
    let full = p2_class_count(ctx, sigma, v) == ctx.graph().degree(v) && !near.is_empty();
    Ok(match (full, sigma.contains(m)) {
        (false, _) => Verdict::Neither,
        (true, true) => Verdict::Bridge,
        (true, false) => Verdict::Gap,
    })
}

/// `pdim(R/NI(T))` as the size of the constructed critical set.
pub fn pdim_tree(g: &Graph) -> Result<usize> {
    let ctx = TreeBm::new(g, 0)?;
    let w = max_critical_set(&ctx)?;
    debug_assert_eq!(w.v_sigma.len(), independence_number_tree(g));
    Ok(w.v_sigma.len())
}

/// A leaf `v1` whose neighbour `v` has `leaves.len() > 0` leaf neighbours
/// and exactly one other neighbour `u`, which itself has a leaf neighbour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafConfiguration {
    pub leaf: usize,
    pub support: usize,
    pub leaves: Vec<usize>,
    pub anchor: usize,
}

/// All qualifying configurations, one per support vertex, ordered by the
/// position of their first leaf in the vertex order from root 0.
pub fn find_configurations(g: &Graph) -> Result<Vec<LeafConfiguration>> {
    let t = root_and_label(g, 0)?;
    let mut out: Vec<LeafConfiguration> = Vec::new();
    for &v1 in t.vertex_order() {
        if !g.is_leaf(v1) {
            continue;
        }
        let v = g.neighbors(v1)[0];
        if out.iter().any(|c| c.support == v) {
            continue;
        }
        let (leaves, others): (Vec<usize>, Vec<usize>) =
            g.neighbors(v).iter().partition(|&&w| g.is_leaf(w));
        if others.len() != 1 {
            continue;
        }
        let u = others[0];
        if g.neighbors(u).iter().any(|&w| g.is_leaf(w)) {
            out.push(LeafConfiguration {
                leaf: v1,
                support: v,
                leaves,
                anchor: u,
            });
        }
    }
    Ok(out)
}

/// `β_{r,d}(T) = β_{r,d}(T') + Σ_{i=1..n} C(n,i) β_{r-i,d-i-1}(T')` applied
/// to a quotient table of `T'`.
pub fn apply_leaf_recursion(base: &BettiTable, leaf_count: usize) -> BettiTable {
    let base = base.shift_kind(TableKind::Quotient);
    let mut out = base.clone();
    for (r, d, v) in base.entries() {
        for i in 1..=leaf_count {
            out.add(r + i, d + i + 1, binom(leaf_count as i64, i as i64) * v);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecursionMode {
    /// Absent when the top-level tree has no configuration.
    Strict,
    /// Falls back to critical-set counting instead.
    Auto,
}

fn critical_table(g: &Graph) -> Result<BettiTable> {
    TreeBm::new(g, 0)?.critical_betti()
}

/// Quotient Betti table of NI(T) through repeated leaf recursion, with
/// critical-set counting for trees that have no configuration.
pub fn tree_betti_recursive(g: &Graph, mode: RecursionMode) -> Result<Option<BettiTable>> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let configs = find_configurations(g)?;
    let Some(c) = configs.first() else {
        return match mode {
            RecursionMode::Strict => Ok(None),
            RecursionMode::Auto => critical_table(g).map(Some),
        };
    };
    Ok(Some(recurse_with(g, c)?))
}

/// One recursion step at a chosen configuration.
pub fn recurse_with(g: &Graph, c: &LeafConfiguration) -> Result<BettiTable> {
    let mut drop = c.leaves.clone();
    drop.push(c.support);
    let (smaller, _) = g.remove_vertices(&drop);
    let base = tree_betti_recursive(&smaller, RecursionMode::Auto)?
        .expect("auto mode always yields a table");
    Ok(apply_leaf_recursion(&base, c.leaves.len()))
}
