//! Slow cross-checks; run with `cargo test -- --ignored`.

use bmres::bm::{count_bridge_friendly_orders, generator_symmetries, BmTables};
use bmres::graphs::{make_named, NamedGraph};
use bmres::ideals::{closed_neighborhood_ideal, GeneratorOrder};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
#[ignore]
fn cycle_ten_no_order_without_symmetry_reduction() {
    let c10 = make_named(NamedGraph::Cycle(10)).unwrap();
    let i = closed_neighborhood_ideal(&c10).unwrap().ideal;
    let (good, tested) = count_bridge_friendly_orders(&i, &[]).unwrap();
    assert_eq!((good, tested), (0, 3_628_800));
    let sym = generator_symmetries(&c10, &i);
    let (good, tested) = count_bridge_friendly_orders(&i, &sym).unwrap();
    assert_eq!(good, 0);
    assert!(tested >= 3_628_800 / 20);
}

#[test]
#[ignore]
fn cycle_ten_sampled_orders_by_definition() {
    let c10 = make_named(NamedGraph::Cycle(10)).unwrap();
    let i = closed_neighborhood_ideal(&c10).unwrap().ideal;
    let t = BmTables::new(&i).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut perm: Vec<usize> = (0..10).collect();
    for _ in 0..200 {
        perm.shuffle(&mut rng);
        let o = GeneratorOrder::from_perm(perm.clone()).unwrap();
        assert!(!t.is_bridge_friendly_by_definition(&o));
        assert!(!t.is_bridge_friendly(&o));
    }
}
