use readout_search::*;

fn small(seed: u64) -> GaConfig {
    GaConfig { seed, generations: 300, stall: 300, ..GaConfig::default() }
}

#[test]
fn population_stays_fixed() {
    let r = genetic_search(&small(1));
    assert_eq!(r.population_range, (100, 100));
}

#[test]
fn same_seed_same_archive() {
    let a = genetic_search(&small(7));
    let b = genetic_search(&small(7));
    assert_eq!(a.archive, b.archive);
    assert_eq!(a.history, b.history);
}

#[test]
fn archive_only_improves() {
    let r = genetic_search(&small(3));
    for w in r.history.windows(2) {
        assert!(w[1].1 < w[0].1);
    }
    for p in &r.archive {
        assert!(verify_protocol(p).unique);
        assert_eq!(fitness(p).0, r.best.unwrap());
    }
}
