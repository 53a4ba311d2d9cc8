//! Finite abelian groups in invariant-factor form.
//!
//! A [`GroupSpec`] is the chain `n_1 | n_2 | ... | n_r` presenting
//! `C_{n_1} ⊕ ... ⊕ C_{n_r}`. Elements are coordinate vectors with
//! `coords[i] ∈ [0, n_i)`. Every element also has a dense index in
//! `[0, |G|)`: the mixed-radix number with the first coordinate most
//! significant, so index order is lexicographic coordinate order and zero
//! has index 0.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::{factorize, prime_power_base};
use crate::error::{Error, Result};

/// Default cap on `|G|` for anything that enumerates the whole group.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

/// Cap on the number of automorphisms materialized at once.
pub const AUTOMORPHISM_CAP: f64 = 2.5e6;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupSpec {
    factors: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    coords: Vec<u64>,
}

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An automorphism of a homocyclic group `C_n^r`, given by the images of the
/// standard basis: `φ(e_i) = rows[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Automorphism {
    modulus: u64,
    rows: Vec<Vec<u64>>,
}

impl GroupSpec {
    /// Normal form of `C_{a_1} ⊕ ... ⊕ C_{a_m}` for arbitrary `a_i ≥ 2`.
    ///
    /// Splits every factor into prime powers and re-merges them into a
    /// divisibility chain (largest prime powers go to the last factor).
    pub fn new(raw_factors: &[i64]) -> Result<Self> {
        let mut by_prime: std::collections::BTreeMap<u64, Vec<u64>> = Default::default();
        for &a in raw_factors {
            if a < 2 {
                return Err(Error::InvalidFactor(a));
            }
            for (p, e) in factorize(a as u64) {
                by_prime.entry(p).or_default().push(p.pow(e));
            }
        }
        let rank = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = vec![1u64; rank];
        for powers in by_prime.values_mut() {
            powers.sort_unstable_by(|a, b| b.cmp(a));
            for (j, q) in powers.iter().enumerate() {
                factors[rank - 1 - j] *= q;
            }
        }
        Ok(Self { factors })
    }

    /// The trivial group (rank 0).
    pub fn trivial() -> Self {
        Self {
            factors: Vec::new(),
        }
    }

    /// `C_n^r`.
    pub fn homocyclic(n: u64, r: usize) -> Result<Self> {
        Self::new(&vec![n as i64; r])
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn exponent(&self) -> u64 {
        self.factors.last().copied().unwrap_or(1)
    }

    /// `|G|`, or `None` if it does not fit in a `u64`.
    pub fn order(&self) -> Option<u64> {
        self.factors
            .iter()
            .try_fold(1u64, |acc, &n| acc.checked_mul(n))
    }

    pub fn is_homocyclic(&self) -> bool {
        self.factors.windows(2).all(|w| w[0] == w[1])
    }

    /// The prime `p` if `G` is a nontrivial `p`-group.
    pub fn p_group_prime(&self) -> Option<u64> {
        prime_power_base(self.exponent())
    }

    /// `1 + Σ (n_i − 1)`.
    pub fn d_star(&self) -> u64 {
        1 + self.factors.iter().map(|n| n - 1).sum::<u64>()
    }

    /// True if `G` lies in one of the families for which `D(G) = D*(G)` is
    /// known. `false` means unknown, not unequal.
    pub fn d_equals_dstar_known(&self) -> bool {
        let f = &self.factors;
        let r = f.len();
        if r <= 2 || self.p_group_prime().is_some() {
            return true;
        }
        // p-group ⊕ cyclic of coprime order, with D(G') ≤ 2exp(G') − 1
        for (p, _) in factorize(self.exponent()) {
            let primary: Vec<i64> = f
                .iter()
                .map(|&n| p.pow(crate::arith::valuation(n, p)) as i64)
                .filter(|&q| q > 1)
                .collect();
            let complement_cyclic = factorize(self.exponent())
                .iter()
                .filter(|(q, _)| *q != p)
                .all(|&(q, _)| f.iter().filter(|&&n| n % q == 0).count() <= 1);
            if let Ok(g) = GroupSpec::new(&primary) {
                if complement_cyclic && g.d_star() < 2 * g.exponent() {
                    return true;
                }
            }
        }
        if r == 3 {
            // C_2 ⊕ C_2m ⊕ C_2n
            if f[0] == 2 {
                return true;
            }
            // C_3 ⊕ C_6m ⊕ C_6n
            if f[0] == 3 && f[1].is_multiple_of(6) {
                return true;
            }
            // C_2p^a ⊕ C_2p^b ⊕ C_2p^c
            if f.iter().all(|n| n % 2 == 0) {
                let odd: Vec<u64> = f.iter().map(|n| n / 2).filter(|&m| m > 1).collect();
                let bases: Vec<Option<u64>> = odd.iter().map(|&m| prime_power_base(m)).collect();
                if bases.iter().all(Option::is_some) && bases.windows(2).all(|w| w[0] == w[1]) {
                    return true;
                }
            }
        }
        // C_2^3 ⊕ C_2n
        r == 4 && f[..3] == [2, 2, 2]
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            coords: vec![0; self.rank()],
        }
    }

    /// Element from coordinates, each reduced into `[0, n_i)`.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.rank() {
            return Err(Error::GroupMismatch);
        }
        let coords = coords
            .iter()
            .zip(&self.factors)
            .map(|(&c, &n)| c.rem_euclid(n as i64) as u64)
            .collect();
        Ok(GroupElement { coords })
    }

    /// The `i`-th standard generator `e_{i+1}` (zero-based).
    pub fn basis(&self, i: usize) -> GroupElement {
        let mut coords = vec![0; self.rank()];
        coords[i] = 1 % self.factors[i];
        GroupElement { coords }
    }

    pub fn contains(&self, a: &GroupElement) -> bool {
        a.coords.len() == self.rank() && a.coords.iter().zip(&self.factors).all(|(c, n)| c < n)
    }

    fn check(&self, a: &GroupElement) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        let coords = a
            .coords
            .iter()
            .zip(&b.coords)
            .zip(&self.factors)
            .map(|((x, y), n)| (x + y) % n)
            .collect();
        Ok(GroupElement { coords })
    }

    pub fn neg(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        let coords = a
            .coords
            .iter()
            .zip(&self.factors)
            .map(|(x, n)| (n - x) % n)
            .collect();
        Ok(GroupElement { coords })
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.add(a, &self.neg(b)?)
    }

    pub fn scalar_mul(&self, c: i64, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        let coords = a
            .coords
            .iter()
            .zip(&self.factors)
            .map(|(&x, &n)| {
                let m = (c.rem_euclid(n as i64) as u128 * x as u128) % n as u128;
                m as u64
            })
            .collect();
        Ok(GroupElement { coords })
    }

    /// Least `m ≥ 1` with `m·a = 0`.
    pub fn order_of(&self, a: &GroupElement) -> Result<u64> {
        self.check(a)?;
        Ok(a.coords
            .iter()
            .zip(&self.factors)
            .fold(1, |acc, (&x, &n)| acc.lcm(&(n / n.gcd(&x)))))
    }

    pub fn index_of(&self, a: &GroupElement) -> usize {
        a.coords
            .iter()
            .zip(&self.factors)
            .fold(0usize, |acc, (&c, &n)| acc * n as usize + c as usize)
    }

    pub fn element_at(&self, mut index: usize) -> GroupElement {
        let mut coords = vec![0; self.rank()];
        for (c, &n) in coords.iter_mut().zip(&self.factors).rev() {
            *c = (index % n as usize) as u64;
            index /= n as usize;
        }
        GroupElement { coords }
    }

    /// `|G|` as `usize`, failing when the group exceeds `cap` elements.
    pub fn checked_order(&self, cap: u64) -> Result<usize> {
        match self.order() {
            Some(n) if n <= cap => Ok(n as usize),
            _ => Err(Error::ResourceLimit(format!(
                "group {self} has more than {cap} elements"
            ))),
        }
    }

    /// All elements in lexicographic coordinate order, zero first.
    pub fn elements(&self) -> Result<impl Iterator<Item = GroupElement> + '_> {
        self.elements_capped(DEFAULT_ENUMERATION_CAP)
    }

    pub fn elements_capped(&self, cap: u64) -> Result<impl Iterator<Item = GroupElement> + '_> {
        let n = self.checked_order(cap)?;
        Ok((0..n).map(move |i| self.element_at(i)))
    }

    /// Every automorphism of a homocyclic group, identity included.
    pub fn automorphisms(&self) -> Result<Vec<Automorphism>> {
        if !self.is_homocyclic() {
            return Err(Error::UnsupportedGroup(format!(
                "automorphisms are only enumerated for homocyclic groups, got {self}"
            )));
        }
        let r = self.rank();
        let n = self.exponent();
        let primes: Vec<u64> = factorize(n).into_iter().map(|(p, _)| p).collect();
        let mut estimate = (n as f64).powi((r * r) as i32);
        for &p in &primes {
            for i in 1..=r {
                estimate *= 1.0 - (p as f64).powi(-(i as i32));
            }
        }
        if estimate > AUTOMORPHISM_CAP {
            return Err(Error::ResourceLimit(format!(
                "{self} has about {estimate:.0} automorphisms"
            )));
        }
        let candidates: Vec<Vec<u64>> = (0..self.checked_order(DEFAULT_ENUMERATION_CAP)?)
            .map(|i| self.element_at(i).coords)
            .collect();
        let mut out = Vec::new();
        let mut rows = Vec::with_capacity(r);
        extend_basis(&candidates, &primes, r, &mut rows, &mut |rows| {
            out.push(Automorphism {
                modulus: n,
                rows: rows.to_vec(),
            })
        });
        Ok(out)
    }
}

fn extend_basis(
    candidates: &[Vec<u64>],
    primes: &[u64],
    r: usize,
    rows: &mut Vec<Vec<u64>>,
    emit: &mut dyn FnMut(&[Vec<u64>]),
) {
    if rows.len() == r {
        emit(rows);
        return;
    }
    for cand in candidates {
        if primes.iter().all(|&p| independent_mod_p(rows, cand, p)) {
            rows.push(cand.clone());
            extend_basis(candidates, primes, r, rows, emit);
            rows.pop();
        }
    }
}

/// Whether `cand` lies outside the span of `rows` over `F_p`.
fn independent_mod_p(rows: &[Vec<u64>], cand: &[u64], p: u64) -> bool {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .chain(std::iter::once(&cand.to_vec()))
        .map(|row| row.iter().map(|x| x % p).collect())
        .collect();
    let cols = cand.len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = crate::arith::mod_pow(m[rank][col], p - 2, p);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && row[col] != 0 {
                let f = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p * p - f * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank == m.len()
}

impl Automorphism {
    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, &x)| x == u64::from(i == j) % self.modulus)
        })
    }

    pub fn apply(&self, a: &GroupElement) -> GroupElement {
        let r = self.rows.len();
        let mut coords = vec![0u64; r];
        for (x, row) in a.coords.iter().zip(&self.rows) {
            for (c, y) in coords.iter_mut().zip(row) {
                *c = (*c + x * y) % self.modulus;
            }
        }
        GroupElement { coords }
    }

    /// The induced permutation of element indices.
    pub fn permutation(&self, group: &GroupSpec) -> Vec<u32> {
        (0..group.order().unwrap_or(0) as usize)
            .map(|i| group.index_of(&self.apply(&group.element_at(i))) as u32)
            .collect()
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "C1");
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.factors.len() {
            let n = self.factors[i];
            let run = self.factors[i..].iter().take_while(|&&m| m == n).count();
            parts.push(if run == 1 {
                format!("C{n}")
            } else {
                format!("C{n}^{run}")
            });
            i += run;
        }
        write!(f, "{}", parts.join("x"))
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Accepts `C3^3`, `C2xC4`, `C3^2 x C9` or a comma list `2,4`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty group spec".into()));
        }
        let bad = || Error::Parse(format!("cannot parse group spec '{s}'"));
        let parse_int = |t: &str| t.parse::<i64>().map_err(|_| bad());
        let mut raw = Vec::new();
        if compact.starts_with(['C', 'c']) {
            for part in compact.split(['x', 'X', '*']) {
                let body = part.strip_prefix(['C', 'c']).ok_or_else(bad)?;
                let (n, r) = match body.split_once('^') {
                    Some((n, r)) => (parse_int(n)?, parse_int(r)?),
                    None => (parse_int(body)?, 1),
                };
                if r < 0 {
                    return Err(bad());
                }
                if n == 1 {
                    continue;
                }
                raw.extend(std::iter::repeat_n(n, r as usize));
            }
        } else {
            for part in compact.split(',') {
                raw.push(parse_int(part)?);
            }
        }
        GroupSpec::new(&raw)
    }
}
