//! Binomial congruences and the `a_i` criterion for short zero-sum
//! subsequences of zero-sum sequences over `p`-groups.
//!
//! For a zero-sum `T` with `|T| ≥ 2k`,
//! `a_i = C(|T|−k, k−i) + (−1)^i·C(|T|−k+i−1, k−1)`, and if some `a_i` with
//! `i ∈ [1, 2k−D(G)]` is nonzero mod `p` then `T` has a zero-sum subsequence
//! of length at most `k − 1`. `i₀` is the least such `i`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::sequence::{min_zero_sum_length, n_plus_minus, Sequence};

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("{p} is not prime")))
    }
}

/// Exact `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(a, b) mod p` as the product of digitwise binomials in base `p`.
pub fn binom_mod_p(a: u64, b: u64, p: u64) -> Result<u64> {
    require_prime(p)?;
    Ok(lucas(a, b, p))
}

fn lucas(mut a: u64, mut b: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while b > 0 {
        let (ad, bd) = (a % p, b % p);
        if bd > ad {
            return 0;
        }
        acc = acc * small_binom_mod(ad, bd, p) % p;
        a /= p;
        b /= p;
    }
    acc
}

fn small_binom_mod(a: u64, b: u64, p: u64) -> u64 {
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..b {
        num = num * ((a - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    num * crate::arith::mod_pow(den, p - 2, p) % p
}

/// `C(a, b) mod p` for signed arguments: zero when `b < 0` or `b > a ≥ 0`.
fn binom_mod_signed(a: i64, b: i64, p: u64) -> u64 {
    if b < 0 || a < 0 || b > a {
        return 0;
    }
    lucas(a as u64, b as u64, p)
}

/// `n(n−1)…(n−j+1)/j!` for any integer `n`.
pub fn gen_binom(n: &BigInt, j: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..j {
        num *= n - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

fn binom_signed_exact(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || b > a {
        return BigInt::zero();
    }
    BigInt::from(binomial(a as u64, b as u64))
}

/// Exact `a_i(|T|, k)`.
pub fn a_i_exact(t_len: u64, k: u64, i: u64) -> BigInt {
    let m = t_len as i64 - k as i64;
    let (k, i) = (k as i64, i as i64);
    let sign = if i % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    binom_signed_exact(m, k - i) + sign * binom_signed_exact(m + i - 1, k - 1)
}

/// `a_i(|T|, k) mod p`, in `[0, p)`.
pub fn a_i_mod(t_len: u64, k: u64, i: u64, p: u64) -> u64 {
    let m = t_len as i64 - k as i64;
    let (k, i) = (k as i64, i as i64);
    let first = binom_mod_signed(m, k - i, p);
    let second = binom_mod_signed(m + i - 1, k - 1, p);
    if i % 2 == 0 {
        (first + second) % p
    } else {
        (first + p - second) % p
    }
}

fn window(t_len: u64, k: u64, d_g: u64) -> Result<u64> {
    if 2 * k < d_g + 2 {
        return Err(Error::InvalidInput(format!(
            "need 2k ≥ D + 2 for a nonempty index range; got k={k}, D={d_g}"
        )));
    }
    if t_len < 2 * k {
        return Err(Error::InvalidInput(format!(
            "need |T| ≥ 2k; got |T|={t_len}, k={k}"
        )));
    }
    Ok(2 * k - d_g)
}

/// Least `i ∈ [1, 2k−D]` with `a_i ≢ 0 (mod p)`.
pub fn compute_i0(t_len: u64, k: u64, p: u64, d_g: u64) -> Result<Option<u64>> {
    require_prime(p)?;
    let w = window(t_len, k, d_g)?;
    Ok((1..=w).find(|&i| a_i_mod(t_len, k, i, p) != 0))
}

/// Refined shape `k = c_1·p^{t+1} + d`, `u = u_1·p^t + u_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftedShape {
    pub t: u32,
    pub c1: u64,
    pub u1: u64,
    pub u2: u64,
}

/// Shape `k = c_1·p^t + 1`, `|T| − k = u_1·p^t + v_1` with `t ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitShape {
    pub t: u32,
    pub c1: u64,
    pub u1: u64,
    pub v1: u64,
}

/// `|T| − k = u·p + v` and `k = c·p + d`, with the refined shapes when
/// they exist. `group_d` is `D(G)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PDecomposition {
    pub p: u64,
    pub t_len: u64,
    pub k: u64,
    pub group_d: u64,
    pub u: u64,
    pub v: u64,
    pub c: u64,
    pub d: u64,
    pub lifted: Option<LiftedShape>,
    pub unit: Option<UnitShape>,
}

impl PDecomposition {
    pub fn new(p: u64, t_len: u64, k: u64, group_d: u64) -> Result<Self> {
        require_prime(p)?;
        if k == 0 || t_len < k {
            return Err(Error::InvalidInput(format!(
                "need 1 ≤ k ≤ |T|; got k={k}, |T|={t_len}"
            )));
        }
        let m = t_len - k;
        let (u, v, c, d) = (m / p, m % p, k / p, k % p);
        let lifted = (c > 0)
            .then(|| {
                let t = crate::arith::valuation(c, p);
                let pt = p.pow(t);
                let (c1, u1, u2) = (c / pt, u / pt, u % pt);
                (c1 < p && (1..p).contains(&u1)).then_some(LiftedShape { t, c1, u1, u2 })
            })
            .flatten();
        let unit = (k > 1)
            .then(|| {
                let t = crate::arith::valuation(k - 1, p);
                if t == 0 {
                    return None;
                }
                let pt = p.pow(t);
                let (c1, u1, v1) = ((k - 1) / pt, m / pt, m % pt);
                (c1 < p && (1..p).contains(&u1)).then_some(UnitShape { t, c1, u1, v1 })
            })
            .flatten();
        Ok(Self {
            p,
            t_len,
            k,
            group_d,
            u,
            v,
            c,
            d,
            lifted,
            unit,
        })
    }

    /// Builds the decomposition from lifted-shape parameters.
    #[allow(clippy::too_many_arguments)]
    pub fn from_lifted(
        p: u64,
        t: u32,
        c1: u64,
        u1: u64,
        u2: u64,
        d: u64,
        v: u64,
        group_d: u64,
    ) -> Result<Self> {
        let pt = p.pow(t);
        let k = c1 * pt * p + d;
        let u = u1 * pt + u2;
        Self::new(p, k + u * p + v, k, group_d)
    }

    pub fn window(&self) -> i64 {
        2 * self.k as i64 - self.group_d as i64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Prediction {
    Exact(u64),
    /// `i₀ = d − v + l₀·p` with `l₀` the least `l ≥ 1` making
    /// `C(u, c−l) + (−1)^{1+l}·C(u+l, c)` nonzero mod `p`; `None` if no
    /// such `l` exists up to `c + u + 1`.
    NeedsL0 {
        l0: Option<u64>,
        i0: Option<u64>,
    },
    LowerBound(u64),
    NoPrediction,
}

/// Closed-form `i₀` for `d ≥ v + 1`.
pub fn predict_i0(dec: &PDecomposition) -> Prediction {
    let PDecomposition { p, u, v, c, d, .. } = *dec;
    if d <= v {
        return Prediction::NoPrediction;
    }
    if lucas(u, c, p) == 0 {
        return Prediction::LowerBound(p + d - v);
    }
    let diff = d - v;
    if diff % 2 == 0 {
        Prediction::Exact(diff)
    } else if v + d != p {
        Prediction::Exact(diff + 1)
    } else {
        let l0 = (1..=c + u + 1).find(|&l| {
            let first = binom_mod_signed(u as i64, c as i64 - l as i64, p);
            let second = lucas(u + l, c, p);
            let val = if l % 2 == 1 {
                first + second
            } else {
                first + p - second
            };
            val % p != 0
        });
        Prediction::NeedsL0 {
            l0,
            i0: l0.map(|l| diff + l * p),
        }
    }
}

/// Whether `C(u_1, c_1−1) + (−1)^{p+d−v}·C(u_1+1, c_1) ≢ 0 (mod p)`, which
/// gives `i₀ ≤ p + d − v`.
pub fn check_lifted_bound(dec: &PDecomposition) -> Result<bool> {
    let s = lifted_for_bound(dec)?;
    let e = dec.p + dec.d - dec.v;
    let first = binom_mod_signed(s.u1 as i64, s.c1 as i64 - 1, dec.p);
    let second = lucas(s.u1 + 1, s.c1, dec.p);
    let val = if e.is_multiple_of(2) {
        first + second
    } else {
        first + dec.p - second
    };
    Ok(val % dec.p != 0)
}

/// Whether `u_1 + c_1 + 1 < p`, which implies the flag of [`check_lifted_bound`].
pub fn check_lifted_condition(dec: &PDecomposition) -> Result<bool> {
    let s = lifted_for_bound(dec)?;
    Ok(s.u1 + s.c1 + 1 < dec.p)
}

/// Whether `C(u_1, c_1−1) + C(u_1+1, c_1) ≢ 0 (mod p)` in the `k ≡ 1`
/// shape, which gives `i₀ = 2`.
pub fn check_unit_bound(dec: &PDecomposition) -> Result<bool> {
    let s = dec
        .unit
        .ok_or_else(|| Error::InvalidInput("k is not of the form c_1·p^t + 1 with t ≥ 1".into()))?;
    if dec.t_len < 2 * dec.k || dec.window() < 2 {
        return Err(Error::InvalidInput("need |T| ≥ 2k and 2k − D ≥ 2".into()));
    }
    let p = dec.p;
    let first = binom_mod_signed(s.u1 as i64, s.c1 as i64 - 1, p);
    Ok(!(first + lucas(s.u1 + 1, s.c1, p)).is_multiple_of(p))
}

fn lifted_for_bound(dec: &PDecomposition) -> Result<LiftedShape> {
    let s = dec
        .lifted
        .ok_or_else(|| Error::InvalidInput("k, |T| do not have the lifted shape".into()))?;
    if dec.d == 0 {
        return Err(Error::InvalidInput(
            "the i₀ ≤ p+d−v bound needs d ≥ 1".into(),
        ));
    }
    if dec.t_len < 2 * dec.k || dec.window() < (dec.p + dec.d - dec.v) as i64 {
        return Err(Error::InvalidInput(
            "need |T| ≥ 2k and 2k − D ≥ p + d − v".into(),
        ));
    }
    Ok(s)
}

/// Applies `c` passes of top-down "row `i+1` minus row `i`" to the
/// `(λ+1)×(k+3)` binomial matrix and compares with its closed form.
pub fn row_transform_verify(x: i64, c: u64, k: u64, u1: u64, u2: u64, lambda: u64) -> bool {
    let rows = lambda as usize + 1;
    let uppers: Vec<u64> = [c + u1, c + u2]
        .into_iter()
        .chain((0..=k).rev().map(|j| c + j))
        .collect();
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|j| {
            uppers
                .iter()
                .map(|&n| BigInt::from(binomial(n, j as u64)))
                .collect()
        })
        .collect();
    a[0][0] += BigInt::from(x);
    for _ in 0..c {
        for i in 0..rows - 1 {
            let (top, bottom) = a.split_at_mut(i + 1);
            for (b, t) in bottom[0].iter_mut().zip(&top[i]) {
                *b -= t;
            }
        }
    }
    let closed_uppers: Vec<u64> = [u2].into_iter().chain((0..=k).rev()).collect();
    (0..rows).all(|j| {
        let j64 = j as u64;
        let sign = if j % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        let first = BigInt::from(binomial(u1, j64))
            + sign * BigInt::from(x) * gen_binom(&BigInt::from(j64 as i64 + c as i64 - 1), j64);
        a[j][0] == first
            && closed_uppers
                .iter()
                .zip(&a[j][1..])
                .all(|(&n, entry)| *entry == BigInt::from(binomial(n, j64)))
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisFlags {
    pub lifted_bound: Option<bool>,
    pub lifted_condition: Option<bool>,
    pub unit_bound: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub p: u64,
    pub t_len: u64,
    pub k: u64,
    pub group_d: u64,
    pub a_values: Vec<(u64, u64)>,
    pub i0: Option<u64>,
    pub guarantees_short: bool,
    pub prediction: Prediction,
    pub flags: HypothesisFlags,
}

/// The `a_i` scan and hypothesis flags for `(|T|, k, p, D)`.
pub fn criterion_report(t_len: u64, k: u64, p: u64, group_d: u64) -> Result<CriterionReport> {
    require_prime(p)?;
    let w = window(t_len, k, group_d)?;
    let a_values: Vec<(u64, u64)> = (1..=w).map(|i| (i, a_i_mod(t_len, k, i, p))).collect();
    let i0 = a_values.iter().find(|(_, a)| *a != 0).map(|(i, _)| *i);
    let dec = PDecomposition::new(p, t_len, k, group_d)?;
    Ok(CriterionReport {
        p,
        t_len,
        k,
        group_d,
        a_values,
        i0,
        guarantees_short: i0.is_some(),
        prediction: predict_i0(&dec),
        flags: HypothesisFlags {
            lifted_bound: check_lifted_bound(&dec).ok(),
            lifted_condition: check_lifted_condition(&dec).ok(),
            unit_bound: check_unit_bound(&dec).ok(),
        },
    })
}

/// [`criterion_report`] for a concrete zero-sum `T` over a `p`-group.
pub fn zerosub_guarantee(t: &Sequence, k: u64, p: u64, group_d: u64) -> Result<CriterionReport> {
    if t.group().p_group_prime() != Some(p) {
        return Err(Error::InvalidInput(format!(
            "{} is not a {p}-group",
            t.group()
        )));
    }
    if !t.is_zero_sum() {
        return Err(Error::InvalidInput("T must be a zero-sum sequence".into()));
    }
    criterion_report(t.len() as u64, k, p, group_d)
}

/// Outcome counts of the closed-form `i₀` sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct I0SweepSummary {
    pub tuples: u64,
    pub exact_checked: u64,
    pub exact_mismatches: u64,
    pub needs_l0_checked: u64,
    pub needs_l0_mismatches: u64,
    /// Cases where `i₀ = l₀·p` (without the `d − v` offset) would have
    /// been wrong.
    pub needs_l0_uncorrected_mismatches: u64,
    pub lower_bound_checked: u64,
    pub lower_bound_violations: u64,
    pub lifted_checked: u64,
    pub lifted_violations: u64,
    pub condition_without_bound: u64,
    pub unit_checked: u64,
    pub unit_violations: u64,
}

impl I0SweepSummary {
    pub fn passed(&self) -> bool {
        self.exact_mismatches == 0
            && self.needs_l0_mismatches == 0
            && self.lower_bound_violations == 0
            && self.lifted_violations == 0
            && self.condition_without_bound == 0
            && self.unit_violations == 0
    }
}

/// Compares the closed forms with a direct `a_i` scan over every pair
/// `2k ≤ |T| ≤ max_t_len` with `2k ≥ p + 2`, for each prime in `primes`.
/// Predictions are checked when `d ≥ v + 1`; the shape checks when the
/// shape's `t` lies in `ts`. The group is taken to be `C_p`, so `D = p`.
pub fn sweep_i0(primes: &[u64], ts: &[u32], max_t_len: u64) -> Result<I0SweepSummary> {
    let mut s = I0SweepSummary::default();
    for &p in primes {
        require_prime(p)?;
        for k in (p + 3) / 2..=max_t_len / 2 {
            for t_len in 2 * k..=max_t_len {
                let dec = PDecomposition::new(p, t_len, k, p)?;
                if dec.d > dec.v {
                    sweep_one(&dec, ts, &mut s)?;
                }
                if dec.unit.is_some_and(|u| ts.contains(&u.t))
                    && check_unit_bound(&dec).unwrap_or(false)
                {
                    s.unit_checked += 1;
                    if compute_i0(t_len, k, p, p)? != Some(2) {
                        s.unit_violations += 1;
                    }
                }
            }
        }
    }
    Ok(s)
}

fn sweep_one(dec: &PDecomposition, ts: &[u32], s: &mut I0SweepSummary) -> Result<()> {
    s.tuples += 1;
    let i0 = compute_i0(dec.t_len, dec.k, dec.p, dec.group_d)?;
    let w = dec.window() as u64;
    let in_window = |pred: u64| (pred <= w).then_some(pred);
    match predict_i0(dec) {
        Prediction::Exact(pred) => {
            s.exact_checked += 1;
            if in_window(pred) != i0 {
                s.exact_mismatches += 1;
            }
        }
        Prediction::NeedsL0 { l0, i0: pred } => {
            s.needs_l0_checked += 1;
            if pred.and_then(in_window) != i0 {
                s.needs_l0_mismatches += 1;
            }
            if l0.map(|l| l * dec.p).and_then(in_window) != i0 {
                s.needs_l0_uncorrected_mismatches += 1;
            }
        }
        Prediction::LowerBound(bound) => {
            s.lower_bound_checked += 1;
            if i0.is_some_and(|i| i < bound) {
                s.lower_bound_violations += 1;
            }
        }
        Prediction::NoPrediction => {}
    }
    if !dec.lifted.is_some_and(|l| ts.contains(&l.t)) {
        return Ok(());
    }
    if let Ok(flag) = check_lifted_bound(dec) {
        if flag {
            s.lifted_checked += 1;
            if i0.is_none_or(|i| i > dec.p + dec.d - dec.v) {
                s.lifted_violations += 1;
            }
        }
        if check_lifted_condition(dec)? && !flag {
            s.condition_without_bound += 1;
        }
    }
    Ok(())
}

/// Random `(x, c, k, u_1, u_2, λ)` tuples checked with
/// [`row_transform_verify`]; returns the number of mismatches.
pub fn row_transform_suite(samples: usize, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .filter(|_| {
            let x = rng.random_range(-5..=5);
            let c = rng.random_range(1..=12);
            let k = rng.random_range(1..=12);
            let u1 = rng.random_range(1..=12);
            let u2 = rng.random_range(1..=12);
            let lambda = rng.random_range(1..=12);
            !row_transform_verify(x, c, k, u1, u2, lambda)
        })
        .count()
}

/// A uniformly random sequence of the given length.
pub fn random_sequence<R: Rng>(group: &GroupSpec, len: usize, rng: &mut R) -> Result<Sequence> {
    let n = group.checked_order(crate::group::DEFAULT_ENUMERATION_CAP)?;
    let idx: Vec<usize> = (0..len).map(|_| rng.random_range(0..n)).collect();
    Ok(Sequence::from_indices(group, &idx))
}

/// Random sequences over a `p`-group with `|S| ∈ [D, D+4]`, where `D` is
/// taken as `D*(G)`; counts the `(S, g)` pairs with `N_g^+ ≢ N_g^-`.
pub fn congruence_suite(group: &GroupSpec, samples: usize, seed: u64) -> Result<usize> {
    let p = group
        .p_group_prime()
        .ok_or_else(|| Error::UnsupportedGroup(format!("{group} is not a p-group")))?;
    let d = group.d_star() as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let elements: Vec<_> = group.elements()?.collect();
    let mut violations = 0;
    for _ in 0..samples {
        let len = rng.random_range(d..=d + 4);
        let s = random_sequence(group, len, &mut rng)?;
        for g in &elements {
            let (plus, minus) = n_plus_minus(&s, g, p)?;
            if plus != minus {
                violations += 1;
            }
        }
    }
    Ok(violations)
}

/// Random zero-sum `T` over a `p`-group meeting `|T| ≥ 2k ≥ D + 2`; counts
/// the cases where the criterion fires but `T` has no zero-sum
/// subsequence of length at most `k − 1`. Returns `(fired, violations)`.
pub fn criterion_suite(group: &GroupSpec, samples: usize, seed: u64) -> Result<(usize, usize)> {
    let p = group
        .p_group_prime()
        .ok_or_else(|| Error::UnsupportedGroup(format!("{group} is not a p-group")))?;
    let d = group.d_star();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k_min = (d + 3) / 2;
    let (mut fired, mut violations) = (0, 0);
    for _ in 0..samples {
        let k = rng.random_range(k_min..=k_min + 2);
        let len = rng.random_range(2 * k..=2 * k + 4) as usize;
        let mut t = random_sequence(group, len - 1, &mut rng)?;
        t.push(group.neg(&t.sigma())?)?;
        let report = zerosub_guarantee(&t, k, p, d)?;
        if report.guarantees_short {
            fired += 1;
            if min_zero_sum_length(&t)?.is_none_or(|m| m as u64 > k - 1) {
                violations += 1;
            }
        }
    }
    Ok((fired, violations))
}

/// `(−1)^j·C(n+j−1, j) = gen_binom(−n, j)`.
pub fn negation_identity(n: u64, j: u64) -> bool {
    let lhs = BigInt::from(binomial(n + j - 1, j));
    let lhs = if j.is_multiple_of(2) { lhs } else { -lhs };
    lhs == gen_binom(&-BigInt::from(n), j)
}

/// Residue of an exact integer in `[0, p)`.
pub fn residue(x: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = ((x % &m) + &m) % &m;
    debug_assert!(!r.is_negative());
    r.to_u64().expect("residue below p")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lucas_examples() {
        assert_eq!(binom_mod_p(7, 2, 3).unwrap(), 0);
        assert_eq!(binom_mod_p(9, 0, 5).unwrap(), 1);
        assert_eq!(binom_mod_p(5, 2, 7).unwrap(), 3);
        assert!(binom_mod_p(5, 2, 6).is_err());
    }

    #[test]
    fn generalized_binomials() {
        assert_eq!(gen_binom(&BigInt::from(-3), 2), BigInt::from(6));
        assert_eq!(gen_binom(&BigInt::from(5), 0), BigInt::one());
        assert_eq!(gen_binom(&BigInt::from(5), 2), BigInt::from(10));
        assert!(negation_identity(3, 2));
    }

    #[test]
    fn a_i_examples() {
        assert_eq!(a_i_exact(12, 6, 1), BigInt::zero());
        assert_eq!(a_i_exact(12, 6, 2), BigInt::from(36));
        assert_eq!(a_i_mod(6, 3, 2, 2), 1);
        assert_eq!(residue(&a_i_exact(6, 3, 2), 2), 1);
    }

    #[test]
    fn i0_examples() {
        assert_eq!(compute_i0(6, 3, 2, 3).unwrap(), Some(2));
        assert!(compute_i0(6, 3, 2, 5).is_err());
    }

    #[test]
    fn predictions() {
        let dec = PDecomposition::new(5, 14, 8, 5).unwrap();
        assert_eq!((dec.u, dec.v, dec.c, dec.d), (1, 1, 1, 3));
        assert_eq!(predict_i0(&dec), Prediction::Exact(2));
        let dec = PDecomposition::new(3, 15, 5, 3).unwrap();
        assert_eq!((dec.u, dec.v, dec.c, dec.d), (3, 1, 1, 2));
        assert_eq!(predict_i0(&dec), Prediction::LowerBound(4));
        let dec = PDecomposition::new(3, 8, 4, 3).unwrap();
        assert_eq!(predict_i0(&dec), Prediction::NoPrediction);
    }

    #[test]
    fn shape_checks() {
        // p = 5, t = 1, c_1 = u_1 = 1, u_2 = 1, d = 2, v = 0: k = 27, |T| = 57
        let dec = PDecomposition::from_lifted(5, 1, 1, 1, 1, 2, 0, 5).unwrap();
        assert_eq!((dec.k, dec.t_len), (27, 57));
        assert!(check_lifted_condition(&dec).unwrap());
        assert!(check_lifted_bound(&dec).unwrap());
        assert!(compute_i0(57, 27, 5, 5).unwrap().unwrap() <= 7);
        let dec = PDecomposition::new(2, 6, 3, 3).unwrap();
        assert_eq!(
            dec.unit,
            Some(UnitShape {
                t: 1,
                c1: 1,
                u1: 1,
                v1: 1
            })
        );
        assert!(check_unit_bound(&dec).unwrap());
        assert_eq!(compute_i0(6, 3, 2, 3).unwrap(), Some(2));
        let no_shape = PDecomposition::new(3, 10, 5, 3).unwrap();
        assert!(check_unit_bound(&no_shape).is_err());
    }

    #[test]
    fn row_transform_examples() {
        assert!(row_transform_verify(0, 1, 1, 2, 1, 1));
        assert!(row_transform_verify(0, 1, 1, 1, 1, 0));
        assert!(row_transform_verify(-3, 4, 5, 7, 2, 6));
    }
}
