use bmres::graphs::{enumerate_trees, Graph};
use bmres::tree_bm::{
    find_configurations, recurse_with, tree_betti_recursive, RecursionMode, TreeBm,
};

/// Attaches a new vertex to `u` carrying `k` new leaves.
fn attach(g: &Graph, u: usize, k: usize) -> Graph {
    let n = g.n();
    let mut edges = g.edges().to_vec();
    edges.push((u, n));
    for i in 0..k {
        edges.push((n, n + 1 + i));
    }
    Graph::new(n + 1 + k, &edges).unwrap()
}

fn constructed() -> Vec<Graph> {
    let mut out = Vec::new();
    for base_n in 2..=6 {
        for base in enumerate_trees(base_n).unwrap() {
            let Some(u) = (0..base_n).find(|&u| base.neighbors(u).iter().any(|&w| base.is_leaf(w)))
            else {
                continue;
            };
            for k in 1..=3 {
                out.push(attach(&base, u, k));
            }
        }
    }
    out
}

#[test]
fn recursion_matches_critical_cells() {
    let trees = constructed();
    assert!(trees.len() >= 5);
    for t in &trees {
        assert!(
            !find_configurations(t).unwrap().is_empty(),
            "{:?}",
            t.edges()
        );
        let rec = tree_betti_recursive(t, RecursionMode::Strict)
            .unwrap()
            .unwrap();
        let crit = TreeBm::new(t, 0).unwrap().critical_betti().unwrap();
        assert!(rec.diff(&crit).is_empty(), "{:?}", t.edges());
    }
}

#[test]
fn recursion_is_configuration_independent() {
    let mut checked = 0;
    for n in 4..=10 {
        for t in enumerate_trees(n).unwrap() {
            let configs = find_configurations(&t).unwrap();
            if configs.len() < 2 {
                continue;
            }
            let first = recurse_with(&t, &configs[0]).unwrap();
            for c in &configs[1..] {
                assert_eq!(recurse_with(&t, c).unwrap(), first, "{:?}", t.edges());
            }
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn auto_mode_always_answers() {
    for n in 1..=9 {
        for t in enumerate_trees(n).unwrap() {
            let auto = tree_betti_recursive(&t, RecursionMode::Auto)
                .unwrap()
                .unwrap();
            let crit = TreeBm::new(&t, 0).unwrap().critical_betti().unwrap();
            assert!(auto.diff(&crit).is_empty(), "{:?}", t.edges());
        }
    }
}
