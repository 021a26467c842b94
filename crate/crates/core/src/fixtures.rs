//! Built-in reference instances and the checks run by `verify-paper`.

use std::time::Instant;

use crate::bm::{
    self, count_bridge_friendly_orders, generator_symmetries, satisfies_sufficient_condition,
    sufficient_condition_violation, BmTables, GenSubset,
};
use crate::classify::{has_linear_quotients, hypertree_obstruction, is_generic};
use crate::error::Result;
use crate::formulas::{path_table_closed, path_table_recursive, pdim_path, verify_betti_splitting};
use crate::graphs::{enumerate_trees, is_chordal, make_named, Graph, NamedGraph};
use crate::homology::{betti_table_homology, DEFAULT_PRIME};
use crate::ideals::{
    closed_neighborhood_ideal, ideal_i_n, ideal_i_n_split, GeneratorOrder, Monomial, MonomialIdeal,
};
use crate::tree_bm::{apply_leaf_recursion, find_configurations, max_critical_set, TreeBm};

fn graph_1based(n: usize, edges: &[(usize, usize)]) -> Graph {
    let e: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    Graph::new(n, &e).expect("fixture graph is valid")
}

/// Six-vertex chordal graph whose NI is ⟨x1x2x5, x1x3x6, x2x3x4⟩.
pub fn chordal_six() -> Graph {
    graph_1based(
        6,
        &[
            (6, 1),
            (1, 3),
            (3, 6),
            (3, 2),
            (2, 4),
            (4, 3),
            (1, 5),
            (5, 2),
            (2, 1),
        ],
    )
}

/// Twelve-vertex tree rooted at x1 used for the maximal critical set.
pub fn tree_twelve() -> Graph {
    graph_1based(
        12,
        &[
            (7, 4),
            (4, 8),
            (8, 12),
            (4, 2),
            (2, 5),
            (5, 9),
            (2, 1),
            (1, 3),
            (3, 6),
            (10, 6),
            (6, 11),
        ],
    )
}

/// Nine-vertex chordal graph on x0..x8 with no bridge-friendly order.
pub fn chordal_nine() -> Graph {
    Graph::new(
        9,
        &[
            (7, 5),
            (5, 4),
            (4, 6),
            (6, 8),
            (5, 2),
            (2, 1),
            (1, 0),
            (6, 3),
            (3, 1),
            (2, 3),
            (3, 4),
            (4, 2),
        ],
    )
    .expect("fixture graph is valid")
}

fn ni(g: &Graph) -> MonomialIdeal {
    closed_neighborhood_ideal(g).expect("fixture ideal").ideal
}

fn gen_names(i: &MonomialIdeal, s: impl IntoIterator<Item = usize>) -> Vec<String> {
    let mut v: Vec<String> = s.into_iter().map(|k| i.generator(k).to_string()).collect();
    v.sort();
    v
}

fn sorted(xs: &[&str]) -> Vec<String> {
    let mut v: Vec<String> = xs.iter().map(|s| s.to_string()).collect();
    v.sort();
    v
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)*) => {
        if !$cond {
            return Err(format!($($fmt)*));
        }
    };
}

type Check = std::result::Result<(), String>;

fn lib<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

pub fn check_chordal_six() -> Check {
    let g = chordal_six();
    ensure!(is_chordal(&g), "graph is not chordal");
    let i = ni(&g);
    let names = gen_names(&i, 0..i.len());
    ensure!(
        names == sorted(&["x1x2x5", "x1x3x6", "x2x3x4"]),
        "NI = {names:?}"
    );
    let t = lib(BmTables::new(&i))?;
    let full = GenSubset::full(i.len());
    ensure!(
        t.bridges(full).is_empty(),
        "full set has bridges {}",
        t.bridges(full)
    );
    let (good, tested) = lib(count_bridge_friendly_orders(&i, &[]))?;
    ensure!(
        good == tested && tested == 6,
        "{good}/{tested} orders bridge-friendly"
    );
    let pos = |s: &[usize]| {
        i.position(&Monomial::from_support(6, s))
            .expect("generator")
    };
    let order = lib(GeneratorOrder::from_perm(vec![
        pos(&[0, 1, 4]),
        pos(&[0, 2, 5]),
        pos(&[1, 2, 3]),
    ]))?;
    ensure!(
        !lib(satisfies_sufficient_condition(&i, &order))?,
        "triple condition unexpectedly holds"
    );
    Ok(())
}

pub fn check_tree_lex_condition(max_n: usize) -> Check {
    for n in 1..=max_n {
        for g in lib(enumerate_trees(n))? {
            let ctx = lib(TreeBm::new(&g, 0))?;
            if let Some(v) = lib(sufficient_condition_violation(&ctx.ni.ideal, &ctx.order))? {
                return Err(format!("n = {n}, edges {:?}: triple {v:?}", g.edges()));
            }
        }
    }
    Ok(())
}

pub fn check_tree_twelve() -> Check {
    let g = tree_twelve();
    let ctx = lib(TreeBm::new(&g, 0))?;
    let w = lib(max_critical_set(&ctx))?;
    let labels: Vec<usize> = w.v_sigma.iter().map(|v| v + 1).collect();
    ensure!(labels == [2, 3, 7, 9, 10, 11, 12], "V_sigma = {labels:?}");
    let names = gen_names(&ctx.ni.ideal, w.sigma.iter().copied());
    let want = sorted(&[
        "x1x2x4x5", "x1x3x6", "x4x7", "x5x9", "x6x10", "x6x11", "x8x12",
    ]);
    ensure!(names == want, "sigma = {names:?}");
    let crit = lib(ctx.tables())?.critical_sets(&ctx.order);
    ensure!(crit.contains(&w.subset()), "sigma is not critical");
    Ok(())
}

pub fn check_chordal_nine() -> Check {
    let g = chordal_nine();
    ensure!(is_chordal(&g), "graph is not chordal");
    let i = ni(&g);
    let names = gen_names(&i, 0..i.len());
    let want = sorted(&[
        "x1x2",
        "x6x8",
        "x7x9",
        "x2x3x4x5x6",
        "x2x3x4x5x7",
        "x3x4x5x6x7",
    ]);
    ensure!(names == want, "NI = {names:?}");
    let (good, tested) = lib(count_bridge_friendly_orders(&i, &[]))?;
    ensure!(
        good == 0 && tested == 720,
        "{good}/{tested} orders bridge-friendly"
    );
    Ok(())
}

pub fn check_path_seven() -> Check {
    let p7 = lib(make_named(NamedGraph::Path(7)))?;
    let p5 = lib(make_named(NamedGraph::Path(5)))?;
    let b7 = lib(lib(TreeBm::new(&p7, 0))?.critical_betti())?;
    let b5 = lib(lib(TreeBm::new(&p5, 0))?.critical_betti())?;
    ensure!(b7.get(3, 6) == 4, "beta_3,6(P7) = {}", b7.get(3, 6));
    ensure!(
        b5.get(3, 6) == 0 && b5.get(2, 4) == 3,
        "P5 values {} {}",
        b5.get(3, 6),
        b5.get(2, 4)
    );
    ensure!(
        lib(find_configurations(&p7))?.is_empty(),
        "P7 has a leaf configuration"
    );
    let naive = apply_leaf_recursion(&b5, 1);
    ensure!(
        naive.get(3, 6) == 3,
        "naive recursion gives {}",
        naive.get(3, 6)
    );
    Ok(())
}

/// Closed form, recursion, critical cells and (up to `oracle_n`) homology
/// agree on `NI(P_n)`.
pub fn check_path_tables(max_n: usize, oracle_n: usize, primes: &[u64]) -> Check {
    for n in 3..=max_n {
        let closed = lib(path_table_closed(n))?;
        let rec = lib(path_table_recursive(n))?;
        ensure!(
            closed == rec,
            "n = {n}: closed vs recursion {:?}",
            closed.diff(&rec)
        );
        let g = lib(make_named(NamedGraph::Path(n)))?;
        let crit = lib(lib(TreeBm::new(&g, 0))?.critical_betti())?;
        let d = closed.diff(&crit);
        ensure!(d.is_empty(), "n = {n}: closed vs critical {d:?}");
        if n <= oracle_n {
            for &p in primes {
                let h = lib(betti_table_homology(&ni(&g), p))?;
                let d = crit.diff(&h);
                ensure!(d.is_empty(), "n = {n}, p = {p}: critical vs oracle {d:?}");
            }
        }
        let pd = lib(pdim_path(n))?;
        ensure!(
            crit.pdim() == Some(pd.quotient),
            "n = {n}: pdim {:?}",
            crit.pdim()
        );
    }
    Ok(())
}

pub fn check_splittings(range: std::ops::RangeInclusive<usize>, p: u64) -> Check {
    for n in range {
        let g = lib(make_named(NamedGraph::Path(n)))?;
        let whole = ni(&g);
        let j = lib(MonomialIdeal::new(
            n,
            &[Monomial::from_support(n, &[n - 2, n - 1])],
        ))?;
        let k = lib(lib(ideal_i_n(n - 1))?.extend_vars(n))?;
        ensure!(
            lib(verify_betti_splitting(&whole, &j, &k, p))?,
            "NI(P_{n}) split fails"
        );
        let i = lib(ideal_i_n(n))?;
        let (j, k) = lib(ideal_i_n_split(n))?;
        ensure!(
            lib(verify_betti_splitting(&i, &j, &k, p))?,
            "I_{n} split fails"
        );
    }
    Ok(())
}

pub fn check_classifications() -> Check {
    let path = |n: usize| lib(make_named(NamedGraph::Path(n))).map(|g| ni(&g));
    for n in 5..=10 {
        ensure!(!is_generic(&path(n)?), "NI(P_{n}) reported generic");
    }
    for n in 6..=9 {
        ensure!(
            lib(has_linear_quotients(&path(n)?))?.is_none(),
            "NI(P_{n}) has linear quotients"
        );
    }
    ensure!(is_generic(&path(4)?), "NI(P_4) reported non-generic");
    let spider = lib(make_named(NamedGraph::Spider(5, 3)))?;
    ensure!(
        lib(hypertree_obstruction(&spider))? == Some(0),
        "spider(5,3) has no obstruction"
    );
    Ok(())
}

pub fn check_cycle_ten() -> Check {
    let c10 = lib(make_named(NamedGraph::Cycle(10)))?;
    let i = ni(&c10);
    let sym = generator_symmetries(&c10, &i);
    ensure!(sym.len() == 20, "{} symmetries", sym.len());
    let found = lib(bm::find_bridge_friendly_order(&i, &sym))?;
    ensure!(
        found.is_none(),
        "bridge-friendly order {:?}",
        found.map(|o| o.perm().to_vec())
    );
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureOutcome {
    pub name: &'static str,
    pub error: Option<String>,
    pub millis: u128,
}

impl FixtureOutcome {
    pub fn passed(&self) -> bool {
        self.error.is_none()
    }
}

pub struct Fixture {
    pub name: &'static str,
    pub long: bool,
    pub run: fn() -> Check,
}

pub fn fixtures() -> Vec<Fixture> {
    vec![
        Fixture {
            name: "6-vertex chordal: bridge-friendly, bridgeless full set, triple condition fails",
            long: false,
            run: check_chordal_six,
        },
        Fixture {
            name: "tree-lex triple condition for all trees n <= 10",
            long: false,
            run: || check_tree_lex_condition(10),
        },
        Fixture {
            name: "12-vertex tree: maximal critical set",
            long: false,
            run: check_tree_twelve,
        },
        Fixture {
            name: "9-vertex chordal: 720/720 orders non-bridge-friendly",
            long: false,
            run: check_chordal_nine,
        },
        Fixture {
            name: "P_7 vs P_5: 4 != 0 + 3, no leaf configuration",
            long: false,
            run: check_path_seven,
        },
        Fixture {
            name: "path formulas: closed = recursion = critical = oracle, n <= 12",
            long: false,
            run: || check_path_tables(12, 12, &[DEFAULT_PRIME]),
        },
        Fixture {
            name: "Betti splittings of NI(P_n) and I_n, 4 <= n <= 10",
            long: false,
            run: || check_splittings(4..=10, DEFAULT_PRIME),
        },
        Fixture {
            name: "classification claims",
            long: false,
            run: check_classifications,
        },
        Fixture {
            name: "C_10 non-bridge-friendly",
            long: true,
            run: check_cycle_ten,
        },
    ]
}

/// Runs every fixture, including the long ones only when asked.
pub fn run_fixtures(long: bool) -> Vec<FixtureOutcome> {
    fixtures()
        .into_iter()
        .filter(|f| long || !f.long)
        .map(|f| {
            let start = Instant::now();
            let error = (f.run)().err();
            FixtureOutcome {
                name: f.name,
                error,
                millis: start.elapsed().as_millis(),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_fixtures_pass() {
        assert_eq!(check_chordal_six(), Ok(()));
        assert_eq!(check_tree_twelve(), Ok(()));
        assert_eq!(check_path_seven(), Ok(()));
        assert_eq!(check_chordal_nine(), Ok(()));
    }

    #[test]
    fn long_fixture_is_gated() {
        assert!(fixtures()
            .iter()
            .filter(|f| f.long)
            .all(|f| f.name.starts_with("C_10")));
    }
}
