//! Extremal sequence constructions and inverse-structure matching over
//! `C_n ⊕ C_n`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};
use crate::sequence::{min_zero_sum_length, Sequence};

/// Parameters of the recursive `C_n^r` construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerCnrParams {
    pub n: u64,
    pub r: usize,
    pub k: u64,
}

impl LowerCnrParams {
    pub fn new(n: u64, r: usize, k: u64) -> Result<Self> {
        if n < 2 || r < 2 || k >= n {
            return Err(Error::InvalidParams(format!(
                "need n ≥ 2, r ≥ 2, 0 ≤ k ≤ n−1; got n={n}, r={r}, k={k}"
            )));
        }
        Ok(Self { n, r, k })
    }

    /// `2^{r−1}(n−1) + k`.
    pub fn length(&self) -> usize {
        (1usize << (self.r - 1)) * (self.n as usize - 1) + self.k as usize
    }

    /// Every zero-sum subsequence is at least this long: `2n − k`.
    pub fn min_zero_sum(&self) -> usize {
        (2 * self.n - self.k) as usize
    }
}

/// Parameters of the construction over an arbitrary group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerGeneralParams {
    pub group: GroupSpec,
    pub k: i64,
}

impl LowerGeneralParams {
    /// Requires `exp(G) ≤ D*(G) − k ≤ 2·exp(G) − 1`.
    pub fn new(group: GroupSpec, k: i64) -> Result<Self> {
        let target = group.d_star() as i64 - k;
        let exp = group.exponent() as i64;
        if group.rank() == 0 || target < exp || target > 2 * exp - 1 {
            return Err(Error::InvalidParams(format!(
                "need exp ≤ D*−k ≤ 2exp−1 over {group}; got D*−k = {target}, exp = {exp}"
            )));
        }
        Ok(Self { group, k })
    }

    /// `D*(G) + k − 1`.
    pub fn length(&self) -> usize {
        (self.group.d_star() as i64 + self.k - 1) as usize
    }

    /// `D*(G) − k + 1`.
    pub fn min_zero_sum(&self) -> usize {
        (self.group.d_star() as i64 - self.k + 1) as usize
    }

    /// Multiplicity of `e_r`: `exp(G) + k − D*(H)` with `H` the sum of all
    /// but the last cyclic factor.
    pub fn x(&self) -> u64 {
        let f = self.group.factors();
        let d_star_h = 1 + f[..f.len() - 1].iter().map(|n| n - 1).sum::<u64>();
        (self.group.exponent() as i64 + self.k - d_star_h as i64) as u64
    }
}

fn coords(group: &GroupSpec, c: &[i64]) -> GroupElement {
    group
        .element(c)
        .expect("coordinate vector of matching rank")
}

/// `S_2 = e_1^{n−1}·e_2^{n−1}·(e_1+e_2)^k`, and for `r > 2`
/// `S_r = S_{r−1} · ((S_{r−1} minus g_0^k) + e_r)` with `g_0 = e_1 + e_2`.
pub fn build_lowercnr(p: LowerCnrParams) -> Result<Sequence> {
    let LowerCnrParams { n, r, k } = LowerCnrParams::new(p.n, p.r, p.k)?;
    let group = GroupSpec::homocyclic(n, r)?;
    let unit = |i: usize| {
        let mut c = vec![0i64; r];
        c[i] = 1;
        c
    };
    let mut blocks: Vec<Vec<i64>> = vec![unit(0), unit(1)];
    for level in 2..r {
        let shifted: Vec<Vec<i64>> = blocks
            .iter()
            .map(|b| {
                let mut c = b.clone();
                c[level] = 1;
                c
            })
            .collect();
        blocks.extend(shifted);
    }
    let mut g0 = vec![0i64; r];
    g0[0] = 1;
    g0[1] = 1;
    let mut s = Sequence::empty(&group);
    s.push_n(coords(&group, &g0), k as u32)?;
    for b in &blocks {
        s.push_n(coords(&group, b), (n - 1) as u32)?;
    }
    Ok(s)
}

/// `S = e_r^x · ∏_{i<r} e_i^{n_i−1}·(e_r − e_i)^{n_i−1}`.
pub fn build_lower_general(p: &LowerGeneralParams) -> Result<Sequence> {
    let p = LowerGeneralParams::new(p.group.clone(), p.k)?;
    let group = &p.group;
    let r = group.rank();
    let f = group.factors();
    let mut s = Sequence::empty(group);
    s.push_n(group.basis(r - 1), p.x() as u32)?;
    for (i, &ni) in f[..r - 1].iter().enumerate() {
        let ei = group.basis(i);
        let diff = group.sub(&group.basis(r - 1), &ei)?;
        s.push_n(ei, (ni - 1) as u32)?;
        s.push_n(diff, (ni - 1) as u32)?;
    }
    Ok(s)
}

/// Family parameters for [`build_inv2`].
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Inv2Params {
    /// `(0, …, 0, 1)` for `k ≤ 1`, `x = 1` for `k = n − 1`.
    #[default]
    Default,
    /// `x_1, …, x_n` with `Σ x_i ≡ 1 (mod n)`, for `k ≤ 1`.
    Xs(Vec<u64>),
    /// `x` with `gcd(x, n) = 1`, for `k = n − 1`.
    X(u64),
}

/// A member of the extremal family over `C_n ⊕ C_n` for the given `k`:
/// `k = 1` gives `e_1^{n−1}·∏(x_i e_1 + e_2)`, `k ∈ [2, n−2]` gives
/// `e_1^{n−1}·e_2^{n−1}·(e_1+e_2)^k`, `k = n−1` gives
/// `e_1^{n−1}·e_2^{n−1}·(x e_1+e_2)^k`, and `k = 0` gives the `k = 1` form
/// without its last term.
pub fn build_inv2(n: u64, k: u64, params: &Inv2Params) -> Result<Sequence> {
    if n < 2 || k >= n {
        return Err(Error::InvalidParams(format!(
            "need n ≥ 2 and k ≤ n−1; got n={n}, k={k}"
        )));
    }
    let group = GroupSpec::homocyclic(n, 2)?;
    let el = |a: u64, b: u64| coords(&group, &[a as i64, b as i64]);
    let mut s = Sequence::empty(&group);
    let use_x = k == n - 1 && (k >= 2 || matches!(params, Inv2Params::X(_)));
    if k <= 1 && !use_x {
        let xs = match params {
            Inv2Params::Default => {
                let mut v = vec![0; n as usize];
                v[n as usize - 1] = 1;
                v
            }
            Inv2Params::Xs(xs) => xs.clone(),
            Inv2Params::X(_) => {
                return Err(Error::InvalidParams("k ≤ 1 takes x_1..x_n".into()));
            }
        };
        if xs.len() != n as usize || xs.iter().any(|&x| x >= n) {
            return Err(Error::InvalidParams(format!(
                "need {n} values x_i in [0, n−1]"
            )));
        }
        if xs.iter().sum::<u64>() % n != 1 % n {
            return Err(Error::InvalidParams(
                "need x_1 + … + x_n ≡ 1 (mod n)".into(),
            ));
        }
        s.push_n(el(1, 0), (n - 1) as u32)?;
        let take = if k == 0 { n as usize - 1 } else { n as usize };
        for &x in &xs[..take] {
            s.push(el(x, 1))?;
        }
        return Ok(s);
    }
    let x = if use_x {
        match params {
            Inv2Params::Default => 1,
            Inv2Params::X(x) => *x,
            Inv2Params::Xs(_) => return Err(Error::InvalidParams("k = n−1 takes x".into())),
        }
    } else {
        if *params != Inv2Params::Default {
            return Err(Error::InvalidParams(
                "k in [2, n−2] takes no parameters".into(),
            ));
        }
        1
    };
    if x == 0 || x >= n || x.gcd(&n) != 1 {
        return Err(Error::InvalidParams(format!(
            "need x in [1, n−1] coprime to {n}, got {x}"
        )));
    }
    s.push_n(el(1, 0), (n - 1) as u32)?;
    s.push_n(el(0, 1), (n - 1) as u32)?;
    s.push_n(el(x, 1), k as u32)?;
    Ok(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub length: usize,
    pub expected_length: usize,
    pub min_zero_sum_length: Option<usize>,
    pub required_min: usize,
    pub length_ok: bool,
    pub min_ok: bool,
    pub passed: bool,
}

/// Checks `|S| = expected_length` and that every zero-sum subsequence has
/// length at least `min_zs` (a zero-sum free `S` passes).
pub fn verify_construction(
    s: &Sequence,
    expected_length: usize,
    min_zs: usize,
) -> Result<VerificationReport> {
    let actual = min_zero_sum_length(s)?;
    let length_ok = s.len() == expected_length;
    let min_ok = actual.is_none_or(|m| m >= min_zs);
    Ok(VerificationReport {
        length: s.len(),
        expected_length,
        min_zero_sum_length: actual,
        required_min: min_zs,
        length_ok,
        min_ok,
        passed: length_ok && min_ok,
    })
}

/// Whether `t`, read in the standard basis, is a family member for `k`.
fn in_family(t: &Sequence, n: u64, k: u64) -> bool {
    let group = t.group();
    let el = |a: u64, b: u64| coords(group, &[a as i64, b as i64]);
    let e1 = el(1, 0);
    let e2 = el(0, 1);
    let mut ok = false;
    if k == 1 && t.multiplicity(&e1) >= (n - 1) as u32 {
        let mut rest = t.clone();
        for _ in 0..n - 1 {
            rest.remove_one(&e1);
        }
        ok |= rest.len() == n as usize
            && rest.support().all(|g| g.coords()[1] == 1)
            && rest.iter().map(|g| g.coords()[0]).sum::<u64>() % n == 1 % n;
    }
    let head = |x: u64| {
        let mut s = Sequence::empty(group);
        s.push_n(e1.clone(), (n - 1) as u32).expect("same group");
        s.push_n(e2.clone(), (n - 1) as u32).expect("same group");
        s.push_n(el(x, 1), k as u32).expect("same group");
        s
    };
    if (2..=n.saturating_sub(2)).contains(&k) {
        ok |= *t == head(1);
    }
    if k == n - 1 {
        ok |= (1..n).filter(|x| x.gcd(&n) == 1).any(|x| *t == head(x));
    }
    ok
}

/// Whether some automorphism of `C_n ⊕ C_n` carries `S` onto a member of
/// the extremal family for `k`. For `k = 0` the test is applied to
/// `S·(−σ(S))` against the `k = 1` family.
pub fn match_inverse_structure(s: &Sequence, n: u64, k: u64) -> Result<bool> {
    let group = GroupSpec::homocyclic(n, 2)?;
    if *s.group() != group {
        return Err(Error::InvalidInput(format!(
            "sequence is over {}, expected {group}",
            s.group()
        )));
    }
    if k >= n || s.len() != (2 * n - 2 + k) as usize {
        return Err(Error::InvalidInput(format!(
            "need k ≤ n−1 and |S| = 2n−2+k; got k={k}, |S|={}",
            s.len()
        )));
    }
    if s.multiplicity(&group.zero()) > 0 {
        return Ok(false);
    }
    let (target, fam_k) = if k == 0 {
        let mut closed = s.clone();
        closed.push(group.neg(&s.sigma())?)?;
        (closed, 1)
    } else {
        (s.clone(), k)
    };
    Ok(group
        .automorphisms()?
        .iter()
        .any(|phi| in_family(&target.map(phi), n, fam_k)))
}
