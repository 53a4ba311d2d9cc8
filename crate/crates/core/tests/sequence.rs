use num_bigint::BigUint;
use proptest::prelude::*;
use zerosum::group::GroupSpec;
use zerosum::sequence::{
    count_subseq, feasibility, has_zero_sum_in, min_zero_sum_length, n_plus_minus,
    subsequence_sums, LengthSet, Sequence,
};

/// Sum and size of every index subset, with coordinates reduced directly.
fn subsets(g: &GroupSpec, s: &Sequence) -> Vec<(Vec<u64>, usize)> {
    let terms: Vec<_> = s.iter().map(|e| e.coords().to_vec()).collect();
    let f = g.factors();
    (0u32..1 << terms.len())
        .map(|mask| {
            let mut sum = vec![0u64; f.len()];
            for (i, t) in terms.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    for (j, c) in t.iter().enumerate() {
                        sum[j] = (sum[j] + c) % f[j];
                    }
                }
            }
            (sum, mask.count_ones() as usize)
        })
        .collect()
}

fn groups() -> impl Strategy<Value = GroupSpec> {
    prop::sample::select(vec!["C5", "C6", "C2^2", "C2^3", "C3^2", "C2xC4", "C4^2"])
        .prop_map(|s| s.parse::<GroupSpec>().unwrap())
}

fn group_and_seq(max_len: usize) -> impl Strategy<Value = (GroupSpec, Sequence)> {
    groups().prop_flat_map(move |g| {
        let n = g.order().unwrap() as usize;
        prop::collection::vec(0..n, 0..=max_len)
            .prop_map(move |idx| (g.clone(), Sequence::from_indices(&g, &idx)))
    })
}

proptest! {
    #[test]
    fn min_zero_sum_matches_subsets((g, s) in group_and_seq(11)) {
        let zero = vec![0u64; g.rank()];
        let expected = subsets(&g, &s).into_iter().filter(|(sum, k)| *k > 0 && *sum == zero).map(|(_, k)| k).min();
        prop_assert_eq!(min_zero_sum_length(&s).unwrap(), expected);
    }

    #[test]
    fn feasibility_matches_subsets((g, s) in group_and_seq(10)) {
        let table = feasibility(&s).unwrap();
        let all = subsets(&g, &s);
        for e in g.elements().unwrap() {
            let mut lengths: Vec<usize> = all.iter().filter(|(sum, _)| sum == e.coords()).map(|(_, k)| *k).collect();
            lengths.sort_unstable();
            lengths.dedup();
            prop_assert_eq!(table.lengths(&e), lengths);
        }
        let sums: std::collections::BTreeSet<Vec<u64>> = all.iter().filter(|(_, k)| *k > 0).map(|(s, _)| s.clone()).collect();
        let got: std::collections::BTreeSet<Vec<u64>> = subsequence_sums(&s).unwrap().iter().map(|e| e.coords().to_vec()).collect();
        prop_assert_eq!(got, sums);
    }

    #[test]
    fn counts_match_subsets((g, s) in group_and_seq(10), pick in any::<prop::sample::Index>()) {
        let elems: Vec<_> = g.elements().unwrap().collect();
        let target = pick.get(&elems);
        let all = subsets(&g, &s);
        for k in 0..=s.len() + 1 {
            let expected = all.iter().filter(|(sum, size)| *size == k && sum == target.coords()).count();
            prop_assert_eq!(count_subseq(&s, target, k).unwrap(), BigUint::from(expected));
        }
    }

    #[test]
    fn parity_split_matches_subsets((g, s) in group_and_seq(10), pick in any::<prop::sample::Index>()) {
        let Some(p) = g.p_group_prime() else { return Ok(()); };
        let elems: Vec<_> = g.elements().unwrap().collect();
        let target = pick.get(&elems);
        let all = subsets(&g, &s);
        let even = all.iter().filter(|(sum, k)| k % 2 == 0 && sum == target.coords()).count() as u64;
        let odd = all.iter().filter(|(sum, k)| k % 2 == 1 && sum == target.coords()).count() as u64;
        prop_assert_eq!(n_plus_minus(&s, target, p).unwrap(), (even % p, odd % p));
    }

    #[test]
    fn interval_queries((g, s) in group_and_seq(10), k in 1u64..8) {
        let zero = vec![0u64; g.rank()];
        let expected = subsets(&g, &s).into_iter().any(|(sum, size)| size >= 1 && size as u64 <= k && sum == zero);
        prop_assert_eq!(has_zero_sum_in(&s, &LengthSet::interval(k).unwrap()).unwrap(), expected);
    }

    #[test]
    fn text_round_trip((g, s) in group_and_seq(12)) {
        prop_assert_eq!(Sequence::parse(&g, &s.to_string()).unwrap(), s);
    }
}

#[test]
fn parity_congruence_at_davenport_length() {
    let g: GroupSpec = "C3^2".parse().unwrap();
    let s = Sequence::from_indices(&g, &[1, 2, 3, 4, 5]);
    for e in g.elements().unwrap() {
        let (plus, minus) = n_plus_minus(&s, &e, 3).unwrap();
        assert_eq!(plus, minus);
    }
    assert!(n_plus_minus(&s, &g.zero(), 4).is_err());
}

#[test]
fn length_set_display() {
    assert_eq!(LengthSet::interval(3).unwrap().to_string(), "[1,3]");
    assert_eq!(LengthSet::singleton(6).unwrap().to_string(), "{6}");
    assert_eq!(LengthSet::explicit([2, 5]).unwrap().to_string(), "{2,5}");
    assert!(LengthSet::interval(0).is_err());
}
