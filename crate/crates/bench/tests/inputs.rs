use tangle::geometry::chain_contacts;
use tangle_bench::chain_pairs;

#[test]
fn pairs_are_reproducible() {
    assert_eq!(chain_pairs(7, 5, 6, 3), chain_pairs(7, 5, 6, 3));
    assert_ne!(chain_pairs(7, 5, 6, 3), chain_pairs(8, 5, 6, 3));
}

#[test]
fn chains_are_well_formed_and_meet() {
    let pairs = chain_pairs(1, 50, 8, 1);
    for (p, q) in &pairs {
        assert_eq!(p.len(), 8);
        assert!(p.windows(2).chain(q.windows(2)).all(|w| w[0] != w[1]));
    }
    // Chains of this length in a shared box nearly always meet.
    let meeting = pairs.iter().filter(|(p, q)| !chain_contacts(p, q).profile().disjoint).count();
    assert!(meeting > 40, "{meeting}");
}
