use std::time::Duration;

use zerosum::construct::match_inverse_structure;
use zerosum::group::GroupSpec;
use zerosum::search::{
    davenport, enumerate_extremal, enumerate_minimal_zero_sum, eta, exists_free_sequence,
    infinite_certificate, is_minimal_zero_sum, s_egz, s_kexp, s_l, s_leq, Decision, SearchConfig,
    SearchValue,
};
use zerosum::sequence::{has_zero_sum_in, LengthSet, Sequence};

fn g(s: &str) -> GroupSpec {
    s.parse().unwrap()
}

/// Zero-sum lengths of `terms` (coordinate lists) by subset enumeration.
fn zero_sum_lengths(f: &[u64], terms: &[Vec<u64>]) -> Vec<bool> {
    let mut seen = vec![false; terms.len() + 1];
    for mask in 1u32..1 << terms.len() {
        let mut sum = vec![0u64; f.len()];
        for (i, t) in terms.iter().enumerate() {
            if mask >> i & 1 == 1 {
                for j in 0..f.len() {
                    sum[j] = (sum[j] + t[j]) % f[j];
                }
            }
        }
        if sum.iter().all(|&c| c == 0) {
            seen[mask.count_ones() as usize] = true;
        }
    }
    seen
}

/// Longest `L`-free multiset length up to `limit`, by enumerating every
/// nondecreasing index list of each length.
fn brute_max_free(group: &GroupSpec, lengths: &LengthSet, limit: usize) -> Option<usize> {
    let elems: Vec<Vec<u64>> = group
        .elements()
        .unwrap()
        .map(|e| e.coords().to_vec())
        .collect();
    let f = group.factors().to_vec();
    let free = |idx: &[usize]| {
        let terms: Vec<_> = idx.iter().map(|&i| elems[i].clone()).collect();
        let z = zero_sum_lengths(&f, &terms);
        !(1..z.len()).any(|l| z[l] && lengths.contains(l as u64))
    };
    let mut best = 0;
    let mut frontier: Vec<Vec<usize>> = vec![vec![]];
    for len in 1..=limit {
        let mut next = Vec::new();
        for seq in &frontier {
            let start = seq.last().copied().unwrap_or(0);
            for x in start..elems.len() {
                let mut s = seq.clone();
                s.push(x);
                if free(&s) {
                    next.push(s);
                }
            }
        }
        if next.is_empty() {
            return Some(best);
        }
        best = len;
        frontier = next;
    }
    None
}

#[test]
fn matches_brute_force_on_small_groups() {
    let cases: Vec<(&str, LengthSet)> = vec![
        ("C5", LengthSet::interval(5).unwrap()),
        ("C5", LengthSet::singleton(5).unwrap()),
        ("C6", LengthSet::interval(6).unwrap()),
        ("C6", LengthSet::explicit([2, 3, 6]).unwrap()),
        ("C6", LengthSet::singleton(6).unwrap()),
        ("C2^2", LengthSet::interval(2).unwrap()),
        ("C2^2", LengthSet::singleton(2).unwrap()),
        ("C2^2", LengthSet::singleton(4).unwrap()),
        ("C2^3", LengthSet::interval(3).unwrap()),
        ("C2^3", LengthSet::explicit([2, 4]).unwrap()),
        ("C2xC4", LengthSet::explicit([2, 4]).unwrap()),
        ("C2xC4", LengthSet::interval(4).unwrap()),
        ("C2xC4", LengthSet::singleton(4).unwrap()),
        ("C3^2", LengthSet::interval(3).unwrap()),
        ("C3^2", LengthSet::interval(4).unwrap()),
        ("C3^2", LengthSet::singleton(3).unwrap()),
        ("C3^2", LengthSet::AllPositive),
    ];
    for (name, lengths) in cases {
        let group = g(name);
        assert!(!infinite_certificate(&group, &lengths), "{name} {lengths}");
        let expected =
            brute_max_free(&group, &lengths, 20).expect("finite within limit") as u64 + 1;
        for cfg in [
            SearchConfig::default(),
            SearchConfig {
                parallel_depth: 2,
                ..Default::default()
            },
            SearchConfig {
                symmetry_reduction: true,
                ..Default::default()
            },
        ] {
            let r = s_l(&group, &lengths, &cfg).unwrap();
            assert_eq!(
                r.value,
                SearchValue::Finite(expected),
                "{name} {lengths} {cfg:?}"
            );
            let w = r.witness.unwrap();
            assert_eq!(w.len() as u64, expected - 1);
            assert!(!has_zero_sum_in(&w, &lengths).unwrap());
        }
    }
}

#[test]
fn infinite_certificate_is_exact() {
    for (name, lengths) in [
        ("C3", LengthSet::interval(2).unwrap()),
        ("C2xC4", LengthSet::interval(3).unwrap()),
        ("C6", LengthSet::explicit([2, 4]).unwrap()),
        ("C3^2", LengthSet::singleton(4).unwrap()),
    ] {
        let group = g(name);
        assert!(infinite_certificate(&group, &lengths));
        assert_eq!(
            s_l(&group, &lengths, &SearchConfig::default())
                .unwrap()
                .value,
            SearchValue::Infinite
        );
        // a free sequence exists at every length checked
        assert_eq!(
            brute_max_free(&group, &lengths, 9),
            None,
            "{name} {lengths}"
        );
    }
}

#[test]
fn classical_constants() {
    let cfg = SearchConfig::default();
    let v = |r: zerosum::search::SearchResult| r.value.finite().unwrap();
    assert_eq!(v(davenport(&g("C2^3"), &cfg).unwrap()), 4);
    assert_eq!(v(davenport(&g("C2xC4"), &cfg).unwrap()), 5);
    assert_eq!(v(davenport(&g("C2xC6"), &cfg).unwrap()), 7);
    assert_eq!(v(davenport(&g("C3^3"), &cfg).unwrap()), 7);
    assert_eq!(v(eta(&g("C3^2"), &cfg).unwrap()), 7);
    assert_eq!(v(s_egz(&g("C3^2"), &cfg).unwrap()), 9);
    assert_eq!(v(s_egz(&g("C7"), &cfg).unwrap()), 13);
    assert_eq!(v(s_egz(&g("C4^2"), &cfg).unwrap()), 13);
    assert_eq!(v(s_kexp(&g("C2^3"), 3, &cfg).unwrap()), 9);
    assert_eq!(v(s_leq(&g("C4^2"), 4, &cfg).unwrap()), 10);
}

#[test]
fn budgets_report_unknown_with_lower_bound() {
    let cfg = SearchConfig {
        node_budget: 50,
        ..Default::default()
    };
    match s_leq(&g("C3^3"), 4, &cfg).unwrap().value {
        SearchValue::Unknown { lower_bound } => assert!(lower_bound >= 1),
        other => panic!("expected unknown, got {other:?}"),
    }
    let cfg = SearchConfig {
        time_budget: Some(Duration::from_nanos(1)),
        ..Default::default()
    };
    assert!(!s_leq(&g("C3^3"), 3, &cfg).unwrap().value.is_complete());
    assert!(s_leq(
        &g("C3"),
        2,
        &SearchConfig {
            node_budget: 0,
            ..Default::default()
        }
    )
    .is_err());
}

#[test]
fn parallel_results_are_deterministic() {
    let group = g("C3^3");
    let cfg = SearchConfig {
        parallel_depth: 3,
        ..Default::default()
    };
    let a = s_leq(&group, 5, &cfg).unwrap();
    let b = s_leq(&group, 5, &cfg).unwrap();
    assert_eq!(a.value, SearchValue::Finite(9));
    assert_eq!(a.witness, b.witness);
}

#[test]
fn extremal_sequences_are_inverse_shapes() {
    let group = g("C4^2");
    for k in 0..=3u64 {
        let len = 6 + k as usize;
        let lengths = LengthSet::interval(7 - k).unwrap();
        let set =
            enumerate_extremal(&group, &lengths, len, false, &SearchConfig::default()).unwrap();
        assert!(set.complete && !set.sequences.is_empty());
        for s in &set.sequences {
            assert!(match_inverse_structure(s, 4, k).unwrap(), "k={k} {s}");
        }
    }
}

#[test]
fn minimal_zero_sums_by_brute_force() {
    let group = g("C2xC4");
    let all = enumerate_minimal_zero_sum(&group, 4, false, &SearchConfig::default()).unwrap();
    let mut expected = 0;
    for a in 0..8 {
        for b in a..8 {
            for c in b..8 {
                for d in c..8 {
                    let s = Sequence::from_indices(&group, &[a, b, c, d]);
                    if is_minimal_zero_sum(&s).unwrap() {
                        expected += 1;
                    }
                }
            }
        }
    }
    assert_eq!(all.sequences.len(), expected);
    let orbits = enumerate_minimal_zero_sum(&group, 4, true, &SearchConfig::default());
    assert!(orbits.is_err() || orbits.unwrap().sequences.len() <= expected);
}

#[test]
fn decision_search() {
    let group = g("C3^2");
    let l = LengthSet::interval(3).unwrap();
    match exists_free_sequence(&group, &l, 6, &SearchConfig::default()).unwrap() {
        Decision::Exists(s) => assert!(s.len() == 6 && !has_zero_sum_in(&s, &l).unwrap()),
        other => panic!("{other:?}"),
    }
    assert!(matches!(
        exists_free_sequence(&group, &l, 7, &SearchConfig::default()).unwrap(),
        Decision::NoneExists
    ));
}
