mod common;

use zerosum::construct::{
    build_inv2, build_lower_general, build_lowercnr, match_inverse_structure, verify_construction,
    Inv2Params, LowerCnrParams, LowerGeneralParams,
};
use zerosum::group::GroupSpec;
use zerosum::sequence::Sequence;

#[test]
fn homocyclic_construction_meets_its_bounds() {
    let mut checked = 0;
    for n in 2..=4u64 {
        for r in 2..=4usize {
            for k in 0..n {
                let params = LowerCnrParams::new(n, r, k).unwrap();
                if params.length() > 20 {
                    continue;
                }
                let s = build_lowercnr(params).unwrap();
                assert_eq!(s.len(), (1 << (r - 1)) * (n as usize - 1) + k as usize);
                let oracle = common::min_zero_sum(&s);
                assert!(
                    oracle.is_none_or(|m| m >= (2 * n - k) as usize),
                    "n={n} r={r} k={k}: {oracle:?}"
                );
                assert!(
                    verify_construction(&s, params.length(), params.min_zero_sum())
                        .unwrap()
                        .passed
                );
                checked += 1;
            }
        }
    }
    assert!(checked >= 15);
}

#[test]
fn general_construction_meets_its_bounds() {
    let mut checked = 0;
    for g in common::chains(64, 2) {
        let (d, e) = (g.d_star() as i64, g.exponent() as i64);
        for k in d - 2 * e + 1..=d - e {
            let params = LowerGeneralParams::new(g.clone(), k).unwrap();
            let s = build_lower_general(&params).unwrap();
            assert_eq!(s.len() as i64, d + k - 1, "{g} k={k}");
            let oracle = common::min_zero_sum(&s);
            assert!(
                oracle.is_none_or(|m| m as i64 > d - k),
                "{g} k={k}: {oracle:?}"
            );
            assert!(
                verify_construction(&s, params.length(), params.min_zero_sum())
                    .unwrap()
                    .passed
            );
            checked += 1;
        }
        assert!(LowerGeneralParams::new(g.clone(), d - e + 1).is_err());
    }
    assert!(checked > 50);
}

#[test]
fn inverse_family_members_match() {
    for n in 2..=5u64 {
        for k in 0..n {
            let s = build_inv2(n, k, &Inv2Params::Default).unwrap();
            let oracle = common::min_zero_sum(&s);
            assert!(oracle.is_none_or(|m| m as u64 >= 2 * n - k), "n={n} k={k}");
            assert!(match_inverse_structure(&s, n, k).unwrap(), "n={n} k={k}");
        }
    }
}

#[test]
fn non_members_are_rejected() {
    let g = GroupSpec::homocyclic(4, 2).unwrap();
    // contains zero
    let s = Sequence::parse(&g, "0,0^1; 1,0^3; 0,1^3; 1,1^1").unwrap();
    assert!(!match_inverse_structure(&s, 4, 2).unwrap());
    // wrong multiplicities
    let s = Sequence::parse(&g, "1,0^2; 0,1^3; 1,1^3").unwrap();
    assert!(!match_inverse_structure(&s, 4, 2).unwrap());
    assert!(match_inverse_structure(&s, 4, 1).is_err());
}

#[test]
fn printed_sequences_reparse() {
    for n in 2..=4u64 {
        for r in 2..=3usize {
            for k in 0..n {
                let s = build_lowercnr(LowerCnrParams::new(n, r, k).unwrap()).unwrap();
                assert_eq!(Sequence::parse(s.group(), &s.to_string()).unwrap(), s);
            }
        }
    }
}
