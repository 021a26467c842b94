use bmres::bm::{find_bridge_friendly_order, BmTables};
use bmres::formulas::{betti_ni_path_closed, betti_ni_path_recursive};
use bmres::graphs::{enumerate_trees, make_named, NamedGraph};
use bmres::homology::{betti_table_homology, boundaries_square_to_zero, has_linear_resolution};
use bmres::ideals::{closed_neighborhood_ideal, MonomialIdeal};
use bmres::tree_bm::TreeBm;
use bmres::TableKind;

#[test]
fn trees_agree_with_homology_over_two_primes() {
    for n in 1..=9 {
        for g in enumerate_trees(n).unwrap() {
            let ctx = TreeBm::new(&g, 0).unwrap();
            let crit = ctx.critical_betti().unwrap();
            for p in [2, 32003] {
                let h = betti_table_homology(&ctx.ni.ideal, p).unwrap();
                assert!(crit.diff(&h).is_empty(), "tree {:?}, p = {p}", g.edges());
            }
        }
    }
}

#[test]
fn path_values_against_homology() {
    for n in 3..=12 {
        let g = make_named(NamedGraph::Path(n)).unwrap();
        let ni = closed_neighborhood_ideal(&g).unwrap().ideal;
        let h = betti_table_homology(&ni, 32003)
            .unwrap()
            .shift_kind(TableKind::Ideal);
        for r in 0..=n as i64 {
            for d in 0..=n as i64 {
                let want = h.get(r as usize, d as usize);
                assert_eq!(
                    betti_ni_path_recursive(n, r, d).unwrap(),
                    want,
                    "n={n} r={r} d={d}"
                );
                assert_eq!(
                    betti_ni_path_closed(n, r, d).unwrap(),
                    want,
                    "n={n} r={r} d={d}"
                );
            }
        }
    }
}

#[test]
fn complexes_are_complexes() {
    for n in 3..=8 {
        let g = make_named(NamedGraph::Cycle(n)).unwrap();
        let ni = closed_neighborhood_ideal(&g).unwrap().ideal;
        assert!(boundaries_square_to_zero(&ni).unwrap());
    }
}

#[test]
fn bridge_friendly_orders_give_betti_numbers() {
    // non-tree graphs where some order works
    for g in [
        make_named(NamedGraph::Cycle(5)).unwrap(),
        make_named(NamedGraph::Cycle(6)).unwrap(),
        make_named(NamedGraph::Complete(4)).unwrap(),
    ] {
        let ni = closed_neighborhood_ideal(&g).unwrap().ideal;
        if let Some(o) = find_bridge_friendly_order(&ni, &[]).unwrap() {
            let crit = BmTables::new(&ni).unwrap().betti(&o);
            let h = betti_table_homology(&ni, 2).unwrap();
            assert!(crit.diff(&h).is_empty(), "{ni}");
        }
    }
}

#[test]
fn linear_quotient_ideals_have_linear_resolutions() {
    let i = MonomialIdeal::from_supports(4, &[vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
    assert!(bmres::classify::has_linear_quotients(&i).unwrap().is_some());
    assert!(has_linear_resolution(&i, 32003).unwrap());
    for n in 2..=5 {
        let g = make_named(NamedGraph::Path(n)).unwrap();
        let ni = closed_neighborhood_ideal(&g).unwrap().ideal;
        if bmres::classify::has_linear_quotients(&ni)
            .unwrap()
            .is_some()
        {
            let h = betti_table_homology(&ni, 32003)
                .unwrap()
                .shift_kind(TableKind::Ideal);
            let top = ni
                .generators()
                .iter()
                .map(|m| m.degree() as usize)
                .max()
                .unwrap();
            assert_eq!(h.reg(), Some(top), "n = {n}");
        }
    }
}
