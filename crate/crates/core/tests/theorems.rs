mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zerosum::data::{Invariant, KnownValues};
use zerosum::group::GroupSpec;
use zerosum::search::{s_leq, SearchConfig};
use zerosum::sequence::Sequence;
use zerosum::theorems::{
    check_claim, claim_d_minus_two, claim_elementary_short, claim_p_group_short,
    conjecture_harness, short_zero_sum_guarantee, tg_squared_property, ElementaryCase,
    HarnessSource, TgMode, TheoremClaim, ValueSource,
};

fn g(s: &str) -> GroupSpec {
    s.parse().unwrap()
}

fn fast() -> SearchConfig {
    SearchConfig {
        symmetry_reduction: true,
        ..Default::default()
    }
}

#[test]
fn binomial_guarantee_on_random_sequences() {
    let group = g("C3^2");
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut checked = 0;
    while checked < 200 {
        let k = rng.random_range(4..=5u64);
        let len = (2 * 5 - k + 1) as usize;
        let idx: Vec<usize> = (0..len).map(|_| rng.random_range(0..9)).collect();
        let s = Sequence::from_indices(&group, &idx);
        if common::zero_sum_lengths(&s).iter().any(|&l| l > 5) {
            assert!(short_zero_sum_guarantee(&group, 5, k, &s).is_err());
            continue;
        }
        assert!(short_zero_sum_guarantee(&group, 5, k, &s).unwrap());
        let m = common::min_zero_sum(&s);
        assert!(m.is_some_and(|m| (m as u64) < k), "{s} k={k}");
        checked += 1;
    }
}

#[test]
fn binomial_guarantee_inactive_branch() {
    // C(4, 2) = 6 ≡ 0 (mod 2) on C2^3 with k = 3
    let group = g("C2^3");
    let s = Sequence::from_indices(&group, &[1, 2, 4, 7, 7, 1]);
    assert!(!short_zero_sum_guarantee(&group, 4, 3, &s).unwrap());
    assert!(short_zero_sum_guarantee(&g("C6^2"), 11, 7, &Sequence::empty(&g("C6^2"))).is_err());
}

fn desk_claims() -> Vec<TheoremClaim> {
    let cfg = fast();
    let mut claims = Vec::new();
    for name in ["C2^2", "C2^3", "C2^4", "C3^2", "C3^3", "C2xC4"] {
        let group = g(name);
        claims.push(claim_d_minus_two(&group, &cfg).unwrap());
        for k in group.exponent() + 1..=group.d_star() {
            if let Ok(c) = claim_p_group_short(&group, k) {
                claims.push(c);
            }
        }
    }
    for case in [
        ElementaryCase::PowerOfTwo { t: 1 },
        ElementaryCase::Diagonal { p: 2, d: 2 },
        ElementaryCase::Diagonal { p: 2, d: 3 },
        ElementaryCase::Diagonal { p: 3, d: 2 },
        ElementaryCase::Diagonal { p: 3, d: 3 },
    ] {
        claims.push(claim_elementary_short(case).unwrap());
    }
    claims
}

#[test]
fn active_claims_hold_under_search() {
    let mut active = 0;
    for claim in desk_claims() {
        assert!(claim.verifiable_at_desk);
        if !claim.active() {
            assert!(claim.hypotheses.iter().any(|h| !h.holds));
            continue;
        }
        active += 1;
        let check = check_claim(&claim, &fast()).unwrap();
        assert_eq!(
            check.bound_holds,
            Some(true),
            "{claim:?} computed {:?}",
            check.computed
        );
        if claim.equality {
            assert_eq!(check.equality_holds, Some(true), "{claim:?}");
        }
    }
    assert!(active >= 8);
}

#[test]
fn large_elementary_case_is_flags_only() {
    let c = claim_elementary_short(ElementaryCase::FourthPower { p: 5 }).unwrap();
    assert_eq!((c.group.as_str(), c.leq, c.bound), ("C5^4", 10, Some(24)));
    assert!(!c.verifiable_at_desk);
}

#[test]
fn lower_bound_regime_for_small_exponent_gap() {
    let cfg = fast();
    for name in ["C2^2", "C3^2", "C2xC4", "C4^2", "C2xC8", "C5^2"] {
        let group = g(name);
        let d = group.d_star();
        assert!(d < 2 * group.exponent());
        for leq in group.exponent()..=d {
            let v = s_leq(&group, leq, &cfg).unwrap().value.finite().unwrap();
            assert!(v >= 2 * d - leq, "{name} s≤{leq} = {v}");
        }
    }
}

#[test]
fn tg_squared_has_short_zero_sums() {
    let cfg = SearchConfig::default();
    let r = tg_squared_property(&g("C3^2"), TgMode::Exhaustive, &cfg).unwrap();
    assert!(r.complete && r.checked > 0 && r.violations == 0);
    let r = tg_squared_property(
        &g("C2^3"),
        TgMode::Sampled {
            trials: 500,
            seed: 4,
        },
        &cfg,
    )
    .unwrap();
    assert_eq!((r.checked, r.violations), (500, 0));
    let r = tg_squared_property(&g("C2^4"), TgMode::Exhaustive, &cfg).unwrap();
    assert!(r.complete && r.violations == 0);
    let r = tg_squared_property(
        &g("C4^2"),
        TgMode::Sampled {
            trials: 200,
            seed: 9,
        },
        &cfg,
    )
    .unwrap();
    assert_eq!((r.checked, r.violations), (200, 0));
    assert!(tg_squared_property(&g("C2xC4"), TgMode::Exhaustive, &cfg).is_err());
    assert!(tg_squared_property(&g("C2xC6"), TgMode::Exhaustive, &cfg).is_err());
    assert!(tg_squared_property(&g("C5"), TgMode::Exhaustive, &cfg).is_err());
}

#[test]
fn harness_on_bundled_rows() {
    let table = KnownValues::bundled();
    let r = conjecture_harness(&g("C5^3"), &HarnessSource::Bundled(&table)).unwrap();
    let values: Vec<u64> = r.rows.iter().map(|row| row.value.unwrap()).collect();
    assert_eq!(values, vec![14, 14, 15, 17, 18, 19, 24, 33]);
    assert!(r.rows.iter().all(|row| row.source == ValueSource::Bundled));
    assert_eq!(r.k_g, Some(7));
    assert_eq!(r.k_g_is_half, Some(true));
    assert_eq!(r.single_crossing, Some(true));
}

#[test]
fn harness_on_computed_rows() {
    let table = KnownValues::bundled();
    let group = g("C3^3");
    let r = conjecture_harness(&group, &HarnessSource::Computed(fast())).unwrap();
    assert_eq!(r.davenport, Some(7));
    for row in &r.rows {
        assert_eq!(row.source, ValueSource::Computed);
        assert_eq!(row.value, table.value(&group, Invariant::SLeq, row.leq));
    }
    assert_eq!(r.k_g, Some(4));
    assert_eq!(r.k_g_is_half, Some(true));
    assert_eq!(r.regimes_agree, Some(true));
    let kexp = r.kexp_rows.iter().find(|row| row.k == 2).unwrap();
    assert_eq!(kexp.value, table.value(&group, Invariant::SKexp, 2));
    assert_eq!(kexp.consistent, Some(true));

    let r = conjecture_harness(&g("C3^2"), &HarnessSource::Computed(fast())).unwrap();
    assert!(r.rows.iter().all(|row| row.value == Some(row.target)));
    assert_eq!(r.k_g, Some(3));
}

#[test]
fn harness_reports_gaps_without_guessing() {
    let table =
        KnownValues::parse("# version: 1\nC3^3; davenport; 0; 7; x\nC3^3; s_leq; 6; 8; x\n")
            .unwrap();
    let r = conjecture_harness(&g("C3^3"), &HarnessSource::Bundled(&table)).unwrap();
    assert_eq!(r.rows[0].holds, Some(true));
    assert_eq!(r.rows[1].source, ValueSource::Unknown);
    assert_eq!(r.k_g, None);
    assert_eq!(r.single_crossing, None);
}
