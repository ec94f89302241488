//! Exhaustive oracle equivalences between independent routes.

use igraphs::census::{
    census_rows, count_I, count_Ic, count_P, tuple_counts_direct_prefixes, tuple_counts_fast,
    tuple_counts_for_n, TupleCounts,
};
use igraphs::graph::{build_igraph, is_gpg_tuple, tuples};
use igraphs::isomorphism::{are_isomorphic, class_counts, enumerate_classes};
use igraphs::{Convention, FactorSieve};

#[test]
fn fast_tuple_counts_match_direct_loop_up_to_2000() {
    let sieve = FactorSieve::new(2000).unwrap();
    let prefixes = tuple_counts_direct_prefixes(2000, 2000).unwrap();
    for direct in prefixes {
        let fast = tuple_counts_fast(direct.n_max, &sieve).unwrap();
        assert_eq!(fast, direct, "N={}", direct.n_max);
        assert!(direct.b <= direct.c && direct.c <= direct.a);
    }
}

#[test]
fn million_tuple_count() {
    // Independent 128-bit summation of T(floor(n/2)).
    let a: u128 = (3..=1_000_000u128).map(|n| (n / 2) * (n / 2 + 1) / 2).sum();
    assert_eq!(a, 41_666_791_666_749_999);
    let sieve = FactorSieve::new(1_000_000).unwrap();
    let t: TupleCounts = tuple_counts_fast(1_000_000, &sieve).unwrap();
    assert_eq!(t.a, a);
    assert!(t.b < t.c && t.c < t.a);
}

#[test]
fn per_n_contributions_are_ordered() {
    for n in 3..=300 {
        let (a, b, c) = tuple_counts_for_n(n);
        assert!(b <= c && c <= a, "n={n}");
        let m = n / 2;
        assert_eq!(a, m * (m + 1) / 2);
    }
}

#[test]
fn integrality_holds_to_a_million() {
    let sieve = FactorSieve::new(1_000_000).unwrap();
    let rows = census_rows(1_000_000, &sieve).unwrap();
    assert_eq!(rows.len(), 999_998);
    assert!(rows.iter().all(|r| r.record.ic_count <= r.record.i_count));
}

#[test]
fn inclusive_convention_overcounts_even_n() {
    // The closed forms count classes of the strict tuple set; with k = n/2 allowed
    // extra non-cubic classes appear exactly when n is even.
    let sieve = FactorSieve::new(100).unwrap();
    for n in 3..=14u64 {
        let total = class_counts(&enumerate_classes(n, Convention::Inclusive).unwrap()).total;
        let formula = count_I(n, &sieve).unwrap();
        if n % 2 == 0 {
            assert!(total > formula, "n={n}");
        } else {
            assert_eq!(total, formula, "n={n}");
        }
    }
}

#[test]
fn strict_partitions_match_all_three_formulas() {
    let sieve = FactorSieve::new(100).unwrap();
    for n in 3..=16u64 {
        let counts = class_counts(&enumerate_classes(n, Convention::Strict).unwrap());
        assert_eq!(counts.total, count_I(n, &sieve).unwrap(), "I({n})");
        assert_eq!(counts.connected, count_Ic(n, &sieve).unwrap(), "I_c({n})");
        assert_eq!(counts.gpg, count_P(n, &sieve).unwrap(), "P({n})");
    }
}

#[test]
fn gpg_classes_contain_a_petersen_member() {
    // A class flagged GPG by the gcd criterion contains a graph isomorphic to some P(n,k).
    for n in 3..=14u64 {
        let p = enumerate_classes(n, Convention::Strict).unwrap();
        let petersens: Vec<_> = tuples(n, Convention::Strict)
            .into_iter()
            .filter(|t| t.j() == 1)
            .map(|t| build_igraph(&t))
            .collect();
        for class in &p.classes {
            let flagged = class.iter().any(is_gpg_tuple);
            let g = build_igraph(&class[0]);
            let found = petersens.iter().any(|q| are_isomorphic(&g, q));
            assert_eq!(flagged, found, "n={n} class {class:?}");
        }
    }
}
