//! Upper-bound theorems for `s_{≤k}` evaluated as hypothesis checkers, the
//! `Tg²` short zero-sum property, and the `k_G` threshold harness.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::data::{Invariant, KnownValues};
use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::modp::{binom_mod_p, PDecomposition};
use crate::search::{
    davenport, enumerate_minimal_zero_sum, is_minimal_zero_sum, s_kexp, s_leq, SearchConfig,
    SearchValue,
};
use crate::sequence::{count_subseq, min_zero_sum_length, Sequence};

/// Largest group order for which claims are marked checkable by search.
pub const DESK_ORDER: u64 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimKind {
    /// `s_{≤D−2}(G) ≤ D+2`, with equality in the `D = D*` regime.
    DMinusTwo,
    /// `s_{≤k−1}(G) ≤ 2D−k+1` for `p`-groups under binomial conditions.
    PGroupShort,
    /// `s_{≤k−1}(G) ≤ 2D−k+1` for the elementary `p`-group shapes.
    ElementaryShort,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DavenportSource {
    /// `D(G) = D*(G)` holds for the group's family.
    KnownFamily,
    /// Found by exhaustive search.
    Searched,
    /// `D*(G)` used without a proof that `D = D*`.
    AssumedDStar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
}

fn hyp(name: &str, holds: bool) -> Hypothesis {
    Hypothesis {
        name: name.to_string(),
        holds,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremClaim {
    pub kind: ClaimKind,
    pub group: String,
    /// The claim concerns `s_{≤leq}(G)`.
    pub leq: u64,
    pub davenport: u64,
    pub davenport_source: DavenportSource,
    pub hypotheses: Vec<Hypothesis>,
    /// Claimed upper bound, present only when every hypothesis holds.
    pub bound: Option<u64>,
    /// Whether the bound is also claimed to be attained.
    pub equality: bool,
    pub verifiable_at_desk: bool,
}

impl TheoremClaim {
    fn new(
        kind: ClaimKind,
        group: &GroupSpec,
        leq: u64,
        d: (u64, DavenportSource),
        hypotheses: Vec<Hypothesis>,
        bound: u64,
    ) -> Self {
        let active = hypotheses.iter().all(|h| h.holds);
        Self {
            kind,
            group: group.to_string(),
            leq,
            davenport: d.0,
            davenport_source: d.1,
            hypotheses,
            bound: active.then_some(bound),
            equality: false,
            verifiable_at_desk: group.order().is_some_and(|n| n <= DESK_ORDER),
        }
    }

    pub fn active(&self) -> bool {
        self.bound.is_some()
    }
}

/// `D(G)` from the known families, else by search, else `D*(G)`.
pub fn davenport_for_claims(
    group: &GroupSpec,
    cfg: &SearchConfig,
) -> Result<(u64, DavenportSource)> {
    if group.d_equals_dstar_known() {
        return Ok((group.d_star(), DavenportSource::KnownFamily));
    }
    if group.order().is_some_and(|n| n <= DESK_ORDER) {
        if let Some(d) = davenport(group, cfg)?.value.finite() {
            return Ok((d, DavenportSource::Searched));
        }
    }
    Ok((group.d_star(), DavenportSource::AssumedDStar))
}

fn is_c2_power(group: &GroupSpec, r: usize) -> bool {
    group.rank() == r && group.factors().iter().all(|&n| n == 2)
}

/// `s_{≤D−2}(G) ≤ D+2` for rank at least 2, `G` not `C_2^3` or `C_2^4`,
/// and `D−2 ≥ exp(G)`; attained when `D = D*` and `exp ≥ (D−1)/2`.
pub fn claim_d_minus_two(group: &GroupSpec, cfg: &SearchConfig) -> Result<TheoremClaim> {
    let d = davenport_for_claims(group, cfg)?;
    let (dv, exp) = (d.0, group.exponent());
    let hypotheses = vec![
        hyp("rank_at_least_2", group.rank() >= 2),
        hyp(
            "not_c2_cube_or_fourth_power",
            !is_c2_power(group, 3) && !is_c2_power(group, 4),
        ),
        hyp("d_minus_2_at_least_exp", dv >= exp + 2),
    ];
    let mut claim = TheoremClaim::new(
        ClaimKind::DMinusTwo,
        group,
        dv.saturating_sub(2),
        d,
        hypotheses,
        dv + 2,
    );
    claim.equality = claim.active()
        && dv == group.d_star()
        && d.1 != DavenportSource::AssumedDStar
        && 2 * exp + 1 >= dv;
    Ok(claim)
}

/// `|S| = 2D−k+1` with no zero-sum subsequence of length in `[D+1, |S|]`
/// and `C(D, k−1) ≢ 0 (mod p)` force a zero-sum subsequence of length at
/// most `k−1`. Returns whether the binomial condition holds.
pub fn short_zero_sum_guarantee(
    group: &GroupSpec,
    group_d: u64,
    k: u64,
    s: &Sequence,
) -> Result<bool> {
    let p = group
        .p_group_prime()
        .ok_or_else(|| Error::InvalidInput(format!("{group} is not a p-group")))?;
    if s.group() != group {
        return Err(Error::GroupMismatch);
    }
    if k < group.exponent() + 1 || k > group_d {
        return Err(Error::InvalidInput(format!(
            "k must lie in [exp+1, D] = [{}, {group_d}]",
            group.exponent() + 1
        )));
    }
    let len = 2 * group_d - k + 1;
    if s.len() as u64 != len {
        return Err(Error::InvalidInput(format!("need |S| = 2D−k+1 = {len}")));
    }
    let zero = group.zero();
    for i in group_d + 1..=len {
        if !count_subseq(s, &zero, i as usize)?.is_zero() {
            return Err(Error::InvalidInput(format!(
                "S has a zero-sum subsequence of length {i} > D"
            )));
        }
    }
    Ok(binom_mod_p(group_d, k - 1, p)? != 0)
}

/// Worst case over `|T| ∈ [2k, |S|]` of `2k − D ≥ p + d − v`.
fn window_holds_for_all_t(p: u64, k: u64, group_d: u64, s_len: u64) -> bool {
    let window = 2 * k as i64 - group_d as i64;
    let d = k % p;
    (2 * k..=s_len).all(|t| window >= (p + d - (t - k) % p) as i64)
}

/// `s_{≤k−1}(G) ≤ 2D−k+1` for a `p`-group with `k = c_1·p^{t+1}+d`.
pub fn claim_p_group_short(group: &GroupSpec, k: u64) -> Result<TheoremClaim> {
    let p = group
        .p_group_prime()
        .ok_or_else(|| Error::InvalidInput(format!("{group} is not a p-group")))?;
    let d = (group.d_star(), DavenportSource::KnownFamily);
    let dv = d.0;
    if k < group.exponent() + 1 || k > dv {
        return Err(Error::InvalidInput(format!(
            "k must lie in [exp+1, D] = [{}, {dv}]",
            group.exponent() + 1
        )));
    }
    let dec = PDecomposition::new(p, k, k, dv)?;
    if dec.c == 0 {
        return Err(Error::InvalidInput(format!(
            "k = {k} is not of the form c_1·p^(t+1)+d"
        )));
    }
    let t = crate::arith::valuation(dec.c, p);
    let c1 = dec.c / p.pow(t);
    if c1 >= p {
        return Err(Error::InvalidInput(format!(
            "k = {k} is not of the form c_1·p^(t+1)+d"
        )));
    }
    let s_len = 2 * dv - k + 1;
    let hypotheses = vec![
        hyp(
            "window_covers_p_plus_d_minus_v",
            window_holds_for_all_t(p, k, dv, s_len),
        ),
        hyp(
            "length_below_half_p_minus_1_times_p_power",
            2 * (2 * dv - 2 * k + 1) < (p - 1) * p.pow(t + 1),
        ),
        hyp(
            "binomial_d_k_minus_1_nonzero",
            binom_mod_p(dv, k - 1, p)? != 0,
        ),
    ];
    Ok(TheoremClaim::new(
        ClaimKind::PGroupShort,
        group,
        k - 1,
        d,
        hypotheses,
        s_len,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ElementaryCase {
    /// `C_2^r` with `r = 2^{t+1}−2` and `k−1 = 2^t`, `t ≥ 1`.
    PowerOfTwo { t: u32 },
    /// `C_p^4` with `k−1 = 2p`, `p ≥ 5`.
    FourthPower { p: u64 },
    /// `C_p^d` with `k−1 = (d−1)p ∈ [p, D]`.
    Diagonal { p: u64, d: usize },
}

impl ElementaryCase {
    /// The group and `k − 1`.
    pub fn shape(&self) -> Result<(GroupSpec, u64)> {
        let prime = |p: u64| {
            if crate::arith::is_prime(p) {
                Ok(())
            } else {
                Err(Error::InvalidInput(format!("{p} is not prime")))
            }
        };
        match *self {
            ElementaryCase::PowerOfTwo { t } => {
                if t == 0 || t > 5 {
                    return Err(Error::InvalidInput("t must lie in [1, 5]".into()));
                }
                let r = (1usize << (t + 1)) - 2;
                Ok((GroupSpec::homocyclic(2, r)?, 1 << t))
            }
            ElementaryCase::FourthPower { p } => {
                prime(p)?;
                if p < 5 {
                    return Err(Error::InvalidInput("p must be at least 5".into()));
                }
                Ok((GroupSpec::homocyclic(p, 4)?, 2 * p))
            }
            ElementaryCase::Diagonal { p, d } => {
                prime(p)?;
                let g = GroupSpec::homocyclic(p, d)?;
                let km1 = (d as u64).saturating_sub(1) * p;
                if km1 < p || km1 > g.d_star() {
                    return Err(Error::InvalidInput(format!(
                        "(d−1)p = {km1} is outside [p, D] = [{p}, {}]",
                        g.d_star()
                    )));
                }
                Ok((g, km1))
            }
        }
    }
}

/// `s_{≤k−1}(G) ≤ 2D−k+1` for the elementary shapes.
pub fn claim_elementary_short(case: ElementaryCase) -> Result<TheoremClaim> {
    let (group, km1) = case.shape()?;
    let d = (group.d_star(), DavenportSource::KnownFamily);
    let bound = 2 * d.0 - km1;
    let hypotheses = vec![hyp("elementary_shape", true)];
    Ok(TheoremClaim::new(
        ClaimKind::ElementaryShort,
        &group,
        km1,
        d,
        hypotheses,
        bound,
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimCheck {
    pub claim: TheoremClaim,
    pub computed: SearchValue,
    /// `None` when the search did not finish or the claim is inactive.
    pub bound_holds: Option<bool>,
    pub equality_holds: Option<bool>,
}

/// Computes `s_{≤leq}(G)` by search and compares it with the claim.
pub fn check_claim(claim: &TheoremClaim, cfg: &SearchConfig) -> Result<ClaimCheck> {
    let group: GroupSpec = claim.group.parse()?;
    let computed = s_leq(&group, claim.leq, cfg)?.value;
    let value = computed.finite();
    let bound_holds = claim.bound.zip(value).map(|(b, v)| v <= b);
    let equality_holds = if claim.equality {
        claim.bound.zip(value).map(|(b, v)| v == b)
    } else {
        None
    };
    Ok(ClaimCheck {
        claim: claim.clone(),
        computed,
        bound_holds,
        equality_holds,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TgMode {
    /// Every minimal zero-sum `T` up to automorphism, with every `g`.
    Exhaustive,
    /// Random minimal zero-sum `T` and random `g`.
    Sampled { trials: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TgReport {
    pub group: String,
    pub davenport: u64,
    pub checked: u64,
    pub violations: u64,
    pub complete: bool,
}

/// For `T` minimal zero-sum of length `D−1` and any `g`, `T·g²` has a
/// zero-sum subsequence of length at most `D−2`. Requires rank at least 2
/// and `G` not of the form `C_2 ⊕ C_{2m}`.
pub fn tg_squared_property(
    group: &GroupSpec,
    mode: TgMode,
    cfg: &SearchConfig,
) -> Result<TgReport> {
    let f = group.factors();
    if group.rank() < 2 || (group.rank() == 2 && f[0] == 2 && f[1].is_multiple_of(2)) {
        return Err(Error::InvalidInput(format!(
            "{group} must have rank ≥ 2 and not be C2 ⊕ C2m"
        )));
    }
    let (dv, _) = davenport_for_claims(group, cfg)?;
    let n = group.checked_order(crate::group::DEFAULT_ENUMERATION_CAP)?;
    let elements: Vec<_> = group.elements()?.collect();
    let mut report = TgReport {
        group: group.to_string(),
        davenport: dv,
        checked: 0,
        violations: 0,
        complete: true,
    };
    let check =
        |t: &Sequence, g: &crate::group::GroupElement, report: &mut TgReport| -> Result<()> {
            let mut s = t.clone();
            s.push_n(g.clone(), 2)?;
            report.checked += 1;
            if min_zero_sum_length(&s)?.is_none_or(|m| m as u64 > dv - 2) {
                report.violations += 1;
            }
            Ok(())
        };
    match mode {
        TgMode::Exhaustive => {
            let ts = enumerate_minimal_zero_sum(group, dv as usize - 1, true, cfg)?;
            report.complete = ts.complete;
            for t in &ts.sequences {
                for g in &elements {
                    check(t, g, &mut report)?;
                }
            }
        }
        TgMode::Sampled { trials, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let max_attempts = trials.saturating_mul(10_000);
            let mut attempts = 0;
            while (report.checked as usize) < trials {
                attempts += 1;
                if attempts > max_attempts {
                    report.complete = false;
                    break;
                }
                let idx: Vec<usize> = (0..dv as usize - 2)
                    .map(|_| rng.random_range(0..n))
                    .collect();
                let mut t = Sequence::from_indices(group, &idx);
                t.push(group.neg(&t.sigma())?)?;
                if !is_minimal_zero_sum(&t)? {
                    continue;
                }
                let g = &elements[rng.random_range(0..n)];
                check(&t, g, &mut report)?;
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ValueSource {
    Computed,
    Bundled,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdRow {
    pub j: u64,
    /// `D − j`.
    pub leq: u64,
    pub value: Option<u64>,
    /// `D + j`.
    pub target: u64,
    pub holds: Option<bool>,
    /// Whether `D − j ≥ (D+1)/2`, the regime where the bound is expected.
    pub predicted: bool,
    pub source: ValueSource,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KexpRow {
    pub k: u64,
    /// `k·exp(G)`.
    pub length: u64,
    pub value: Option<u64>,
    /// `2D − 1`.
    pub target: u64,
    /// Whether `k·exp ≥ (D+1)/2`, where `value ≤ 2D−1` is expected.
    pub upper_regime: bool,
    /// Whether the value sits on the expected side of `2D − 1`.
    pub consistent: Option<bool>,
    pub source: ValueSource,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub group: String,
    pub davenport: Option<u64>,
    pub davenport_source: ValueSource,
    pub rows: Vec<ThresholdRow>,
    /// Least `m` with `s_{≤D−j} ≤ D+j` for every `D−j ≥ m`; `None` when the
    /// table does not determine it.
    pub k_g: Option<u64>,
    /// Whether `k_G = (D+1)/2`.
    pub k_g_is_half: Option<bool>,
    /// Whether the `holds` column is true then false with one crossing.
    pub single_crossing: Option<bool>,
    /// Whether every row agrees with its `predicted` regime.
    pub regimes_agree: Option<bool>,
    /// `s_{≤D−2}(G) = D+1` where `exp < (D−1)/2`; `None` when it does not
    /// apply or the value is missing.
    pub d_minus_two_is_d_plus_one: Option<bool>,
    pub kexp_rows: Vec<KexpRow>,
}

#[derive(Clone, Debug)]
pub enum HarnessSource<'a> {
    Computed(SearchConfig),
    Bundled(&'a KnownValues),
}

/// Builds the `(j, s_{≤D−j}, D+j)` table for `D−j ∈ [exp, D−1]` and the
/// `s_{k·exp}` versus `2D−1` comparison for `k·exp ≤ D`.
pub fn conjecture_harness(group: &GroupSpec, source: &HarnessSource) -> Result<ConjectureReport> {
    let exp = group.exponent();
    let fetch = |inv: Invariant, param: u64| -> Result<(Option<u64>, ValueSource)> {
        match source {
            HarnessSource::Computed(cfg) => {
                let r = match inv {
                    Invariant::Davenport => davenport(group, cfg)?,
                    Invariant::SLeq => s_leq(group, param, cfg)?,
                    Invariant::SKexp => s_kexp(group, param, cfg)?,
                };
                Ok(match r.value {
                    SearchValue::Finite(v) => (Some(v), ValueSource::Computed),
                    _ => (None, ValueSource::Unknown),
                })
            }
            HarnessSource::Bundled(table) => Ok(match table.value(group, inv, param) {
                Some(v) => (Some(v), ValueSource::Bundled),
                None => (None, ValueSource::Unknown),
            }),
        }
    };
    let (davenport_value, davenport_source) = fetch(Invariant::Davenport, 0)?;
    let mut report = ConjectureReport {
        group: group.to_string(),
        davenport: davenport_value,
        davenport_source,
        rows: Vec::new(),
        k_g: None,
        k_g_is_half: None,
        single_crossing: None,
        regimes_agree: None,
        d_minus_two_is_d_plus_one: None,
        kexp_rows: Vec::new(),
    };
    let Some(dv) = davenport_value else {
        return Ok(report);
    };
    for j in 1..=dv.saturating_sub(exp) {
        let leq = dv - j;
        let (value, source) = fetch(Invariant::SLeq, leq)?;
        report.rows.push(ThresholdRow {
            j,
            leq,
            value,
            target: dv + j,
            holds: value.map(|v| v <= dv + j),
            predicted: 2 * leq > dv,
            source,
        });
    }
    report.k_g = threshold(&report.rows, exp);
    report.k_g_is_half = report.k_g.map(|k| 2 * k == dv + 1);
    report.single_crossing = single_crossing(&report.rows);
    report.regimes_agree = report
        .rows
        .iter()
        .map(|r| r.holds.map(|h| h == r.predicted))
        .collect::<Option<Vec<bool>>>()
        .map(|v| v.iter().all(|&b| b));
    if group.rank() >= 2 && dv >= exp + 2 && 2 * exp + 1 < dv && !is_c2_power(group, 4) {
        report.d_minus_two_is_d_plus_one = report
            .rows
            .iter()
            .find(|r| r.j == 2)
            .and_then(|r| r.value)
            .map(|v| v == dv + 1);
    }
    for k in 1..=dv / exp {
        let (value, source) = fetch(Invariant::SKexp, k)?;
        let upper_regime = 2 * k * exp > dv;
        report.kexp_rows.push(KexpRow {
            k,
            length: k * exp,
            value,
            target: 2 * dv - 1,
            upper_regime,
            consistent: value.map(|v| {
                if upper_regime {
                    v < 2 * dv
                } else {
                    v > 2 * dv - 1
                }
            }),
            source,
        });
    }
    Ok(report)
}

fn threshold(rows: &[ThresholdRow], exp: u64) -> Option<u64> {
    for r in rows {
        match r.holds? {
            true => {}
            false => return Some(r.leq + 1),
        }
    }
    Some(exp)
}

fn single_crossing(rows: &[ThresholdRow]) -> Option<bool> {
    let holds: Vec<bool> = rows.iter().map(|r| r.holds).collect::<Option<_>>()?;
    Some(holds.windows(2).all(|w| w[0] || !w[1]))
}
