//! Sequences (finite multisets) over a group, zero-sum feasibility and
//! subsequence counting.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::group::{Automorphism, GroupElement, GroupSpec};

/// Default cap on `|G| · (|S| + 1)` for feasibility tables.
pub const FEASIBILITY_CAP: u64 = 1 << 28;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Sequence {
    group: GroupSpec,
    terms: BTreeMap<GroupElement, u32>,
}

impl Sequence {
    pub fn empty(group: &GroupSpec) -> Self {
        Self {
            group: group.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// Builds a sequence from `(element, multiplicity)` pairs. Repeated
    /// elements accumulate; zero multiplicities are dropped.
    pub fn from_terms<I>(group: &GroupSpec, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (GroupElement, u32)>,
    {
        let mut s = Self::empty(group);
        for (g, m) in terms {
            s.push_n(g, m)?;
        }
        Ok(s)
    }

    /// Builds a sequence from element indices, one term per index.
    pub fn from_indices(group: &GroupSpec, indices: &[usize]) -> Self {
        let mut terms = BTreeMap::new();
        for &i in indices {
            *terms.entry(group.element_at(i)).or_insert(0) += 1;
        }
        Self {
            group: group.clone(),
            terms,
        }
    }

    pub fn push(&mut self, g: GroupElement) -> Result<()> {
        self.push_n(g, 1)
    }

    pub fn push_n(&mut self, g: GroupElement, m: u32) -> Result<()> {
        if !self.group.contains(&g) {
            return Err(Error::GroupMismatch);
        }
        if m > 0 {
            *self.terms.entry(g).or_insert(0) += m;
        }
        Ok(())
    }

    /// Removes one copy of `g`; returns false if `g` is absent.
    pub fn remove_one(&mut self, g: &GroupElement) -> bool {
        match self.terms.get_mut(g) {
            Some(m) if *m > 1 => {
                *m -= 1;
                true
            }
            Some(_) => {
                self.terms.remove(g);
                true
            }
            None => false,
        }
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn terms(&self) -> &BTreeMap<GroupElement, u32> {
        &self.terms
    }

    /// `|S|`.
    pub fn len(&self) -> usize {
        self.terms.values().map(|&m| m as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `v_g(S)`.
    pub fn multiplicity(&self, g: &GroupElement) -> u32 {
        self.terms.get(g).copied().unwrap_or(0)
    }

    /// `h(S)`.
    pub fn max_multiplicity(&self) -> u32 {
        self.terms.values().copied().max().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = &GroupElement> {
        self.terms.keys()
    }

    /// Every term, repeated by multiplicity, in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = &GroupElement> {
        self.terms
            .iter()
            .flat_map(|(g, &m)| std::iter::repeat_n(g, m as usize))
    }

    /// Element indices of all terms, nondecreasing.
    pub fn indices(&self) -> Vec<usize> {
        self.iter().map(|g| self.group.index_of(g)).collect()
    }

    /// `σ(S)`.
    pub fn sigma(&self) -> GroupElement {
        let g = &self.group;
        self.terms.iter().fold(g.zero(), |acc, (x, &m)| {
            let mx = g.scalar_mul(m as i64, x).expect("term belongs to group");
            g.add(&acc, &mx).expect("term belongs to group")
        })
    }

    pub fn is_zero_sum(&self) -> bool {
        self.sigma() == self.group.zero()
    }

    pub fn map(&self, phi: &Automorphism) -> Sequence {
        let mut terms = BTreeMap::new();
        for (g, &m) in &self.terms {
            *terms.entry(phi.apply(g)).or_insert(0) += m;
        }
        Self {
            group: self.group.clone(),
            terms,
        }
    }

    /// Concatenation `S·T`.
    pub fn concat(&self, other: &Sequence) -> Result<Sequence> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        let mut out = self.clone();
        for (g, &m) in &other.terms {
            out.push_n(g.clone(), m)?;
        }
        Ok(out)
    }

    /// Parses the `coords^mult; ...` text format.
    pub fn parse(group: &GroupSpec, text: &str) -> Result<Sequence> {
        let mut s = Sequence::empty(group);
        for item in text.split(';').map(str::trim).filter(|t| !t.is_empty()) {
            let bad = || Error::Parse(format!("cannot parse sequence item '{item}'"));
            let (coords, mult) = match item.split_once('^') {
                Some((c, m)) => (c, m.trim().parse::<u32>().map_err(|_| bad())?),
                None => (item, 1),
            };
            let coords: Vec<i64> = coords
                .split(',')
                .map(|c| c.trim().parse::<i64>().map_err(|_| bad()))
                .collect::<Result<_>>()?;
            if coords.len() != group.rank() {
                return Err(Error::Parse(format!(
                    "item '{item}' has {} coordinates, group {group} has rank {}",
                    coords.len(),
                    group.rank()
                )));
            }
            s.push_n(group.element(&coords)?, mult)?;
        }
        Ok(s)
    }
}

impl fmt::Display for Sequence {
    /// Text format, terms in canonical element order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .terms
            .iter()
            .map(|(g, m)| {
                let c: Vec<String> = g.coords().iter().map(u64::to_string).collect();
                format!("{}^{m}", c.join(","))
            })
            .collect();
        write!(f, "{}", items.join("; "))
    }
}

/// The set `L` of admissible zero-sum lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LengthSet {
    /// `[1, k]`.
    Interval(u64),
    /// `{m}`.
    Singleton(u64),
    Explicit(BTreeSet<u64>),
    AllPositive,
}

impl LengthSet {
    pub fn interval(k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParams("interval [1,k] needs k ≥ 1".into()));
        }
        Ok(Self::Interval(k))
    }

    pub fn singleton(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParams("lengths must be positive".into()));
        }
        Ok(Self::Singleton(m))
    }

    pub fn explicit<I: IntoIterator<Item = u64>>(lengths: I) -> Result<Self> {
        let set: BTreeSet<u64> = lengths.into_iter().collect();
        if set.is_empty() || set.contains(&0) {
            return Err(Error::InvalidParams(
                "explicit length sets must be nonempty and positive".into(),
            ));
        }
        Ok(Self::Explicit(set))
    }

    pub fn contains(&self, l: u64) -> bool {
        match self {
            Self::Interval(k) => (1..=*k).contains(&l),
            Self::Singleton(m) => l == *m,
            Self::Explicit(set) => set.contains(&l),
            Self::AllPositive => l >= 1,
        }
    }

    /// Largest member, `None` for `AllPositive`.
    pub fn max(&self) -> Option<u64> {
        match self {
            Self::Interval(k) | Self::Singleton(k) => Some(*k),
            Self::Explicit(set) => set.last().copied(),
            Self::AllPositive => None,
        }
    }

    /// Members in `[1, bound]`.
    pub fn members_up_to(&self, bound: u64) -> Vec<u64> {
        (1..=bound).filter(|&l| self.contains(l)).collect()
    }
}

impl fmt::Display for LengthSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Interval(k) => write!(f, "[1,{k}]"),
            Self::Singleton(m) => write!(f, "{{{m}}}"),
            Self::Explicit(set) => {
                let items: Vec<String> = set.iter().map(u64::to_string).collect();
                write!(f, "{{{}}}", items.join(","))
            }
            Self::AllPositive => write!(f, "N+"),
        }
    }
}

/// `table[g][ℓ]`: some subsequence has sum `g` and length `ℓ`.
#[derive(Clone, Debug)]
pub struct FeasibilityTable {
    group: GroupSpec,
    max_len: usize,
    words: usize,
    bits: Vec<u64>,
}

impl FeasibilityTable {
    pub fn get(&self, g: &GroupElement, len: usize) -> bool {
        if len > self.max_len || !self.group.contains(g) {
            return false;
        }
        let row = self.group.index_of(g) * self.words;
        self.bits[row + len / 64] >> (len % 64) & 1 == 1
    }

    /// All `ℓ` with `table[g][ℓ]`.
    pub fn lengths(&self, g: &GroupElement) -> Vec<usize> {
        (0..=self.max_len).filter(|&l| self.get(g, l)).collect()
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }
}

/// For each index `i`, the index of `element_at(i) − x`.
pub(crate) fn minus_table(group: &GroupSpec, x: &GroupElement) -> Vec<usize> {
    let n = group.order().unwrap_or(0) as usize;
    (0..n)
        .map(|i| {
            let g = group.element_at(i);
            group.index_of(&group.sub(&g, x).expect("same group"))
        })
        .collect()
}

pub fn feasibility(s: &Sequence) -> Result<FeasibilityTable> {
    feasibility_capped(s, FEASIBILITY_CAP)
}

pub fn feasibility_capped(s: &Sequence, cap: u64) -> Result<FeasibilityTable> {
    let group = s.group();
    let n = group.checked_order(cap)?;
    let max_len = s.len();
    if (n as u64).saturating_mul(max_len as u64 + 1) > cap {
        return Err(Error::ResourceLimit(format!(
            "feasibility table {n} × {} exceeds {cap} cells",
            max_len + 1
        )));
    }
    let words = max_len / 64 + 1;
    let mut bits = vec![0u64; n * words];
    bits[0] = 1;
    let mut prev = bits.clone();
    for (x, &m) in s.terms() {
        let minus = minus_table(group, x);
        for _ in 0..m {
            prev.copy_from_slice(&bits);
            for (g, &mg) in minus.iter().enumerate().take(n) {
                let src = mg * words;
                let dst = g * words;
                let mut carry = 0u64;
                for w in 0..words {
                    let v = prev[src + w];
                    bits[dst + w] |= (v << 1) | carry;
                    carry = v >> 63;
                }
            }
        }
    }
    Ok(FeasibilityTable {
        group: group.clone(),
        max_len,
        words,
        bits,
    })
}

/// Least `ℓ ≥ 1` with a zero-sum subsequence of length `ℓ`; `None` if `S`
/// is zero-sum free.
pub fn min_zero_sum_length(s: &Sequence) -> Result<Option<usize>> {
    let t = feasibility(s)?;
    let zero = s.group().zero();
    Ok((1..=t.max_len).find(|&l| t.get(&zero, l)))
}

pub fn has_zero_sum_in(s: &Sequence, lengths: &LengthSet) -> Result<bool> {
    let t = feasibility(s)?;
    let zero = s.group().zero();
    Ok((1..=t.max_len).any(|l| t.get(&zero, l) && lengths.contains(l as u64)))
}

/// `Σ(S)`: sums of nonempty subsequences.
pub fn subsequence_sums(s: &Sequence) -> Result<BTreeSet<GroupElement>> {
    let t = feasibility(s)?;
    let group = s.group();
    Ok(group
        .elements()?
        .filter(|g| (1..=t.max_len).any(|l| t.get(g, l)))
        .collect())
}

/// Counts of index subsets by (sum index, length), exact.
pub fn count_table(s: &Sequence) -> Result<Vec<Vec<BigUint>>> {
    let group = s.group();
    let n = group.checked_order(FEASIBILITY_CAP)?;
    let len = s.len();
    let mut table = vec![vec![BigUint::zero(); len + 1]; n];
    table[0][0] = BigUint::one();
    let mut used = 0usize;
    for (x, &m) in s.terms() {
        let minus = minus_table(group, x);
        for _ in 0..m {
            used += 1;
            let prev = table.clone();
            for g in 0..n {
                for l in 1..=used {
                    let add = &prev[minus[g]][l - 1];
                    if !add.is_zero() {
                        table[g][l] += add;
                    }
                }
            }
        }
    }
    Ok(table)
}

/// `N_g^k(S)` over index subsets.
pub fn count_subseq(s: &Sequence, g: &GroupElement, k: usize) -> Result<BigUint> {
    if !s.group().contains(g) {
        return Err(Error::GroupMismatch);
    }
    if k > s.len() {
        return Ok(BigUint::zero());
    }
    let table = count_table(s)?;
    Ok(table[s.group().index_of(g)][k].clone())
}

/// `N_g^k(S) mod m`.
pub fn count_subseq_mod(s: &Sequence, g: &GroupElement, k: usize, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::InvalidInput("modulus must be positive".into()));
    }
    let group = s.group();
    if !group.contains(g) {
        return Err(Error::GroupMismatch);
    }
    if k > s.len() {
        return Ok(0);
    }
    let n = group.checked_order(FEASIBILITY_CAP)?;
    let mut table = vec![vec![0u64; k + 1]; n];
    table[0][0] = 1 % m;
    for (x, &mult) in s.terms() {
        let minus = minus_table(group, x);
        for _ in 0..mult {
            let prev = table.clone();
            for h in 0..n {
                for l in 1..=k {
                    table[h][l] = (table[h][l] + prev[minus[h]][l - 1]) % m;
                }
            }
        }
    }
    Ok(table[group.index_of(g)][k])
}

/// `(N_g^+ mod p, N_g^- mod p)`: even- and odd-length index subsets with sum
/// `g`, the empty subset counted as even.
pub fn n_plus_minus(s: &Sequence, g: &GroupElement, p: u64) -> Result<(u64, u64)> {
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    let group = s.group();
    if !group.contains(g) {
        return Err(Error::GroupMismatch);
    }
    let n = group.checked_order(FEASIBILITY_CAP)?;
    let mut even = vec![0u64; n];
    let mut odd = vec![0u64; n];
    even[0] = 1;
    for (x, &m) in s.terms() {
        let minus = minus_table(group, x);
        for _ in 0..m {
            let (pe, po) = (even.clone(), odd.clone());
            for h in 0..n {
                even[h] = (pe[h] + po[minus[h]]) % p;
                odd[h] = (po[h] + pe[minus[h]]) % p;
            }
        }
    }
    let i = group.index_of(g);
    Ok((even[i], odd[i]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c32() -> GroupSpec {
        "C3^2".parse().unwrap()
    }

    #[test]
    fn text_round_trip() {
        let g = c32();
        let s = Sequence::parse(&g, "1,0^2; 0,1^2; 1,1^1").unwrap();
        assert_eq!(s.len(), 5);
        assert_eq!(s.to_string(), "0,1^2; 1,0^2; 1,1^1");
        assert_eq!(Sequence::parse(&g, &s.to_string()).unwrap(), s);
        assert_eq!(Sequence::parse(&g, "").unwrap(), Sequence::empty(&g));
        assert!(Sequence::parse(&g, "1^2").is_err());
        assert!(Sequence::parse(&g, "1,a").is_err());
    }

    #[test]
    fn sigma_examples() {
        let g = c32();
        assert_eq!(Sequence::empty(&g).sigma(), g.zero());
        assert_eq!(Sequence::parse(&g, "1,0^3").unwrap().sigma(), g.zero());
        let s = Sequence::parse(&g, "1,0^2; 0,1; 1,1").unwrap();
        assert_eq!(s.sigma().coords(), &[0, 2]);
    }

    #[test]
    fn feasibility_examples() {
        let g = c32();
        let x = g.element(&[1, 2]).unwrap();
        let single = Sequence::from_terms(&g, [(x.clone(), 1)]).unwrap();
        let t = feasibility(&single).unwrap();
        for h in g.elements().unwrap() {
            for l in 0..=1 {
                let expected = (h == g.zero() && l == 0) || (h == x && l == 1);
                assert_eq!(t.get(&h, l), expected);
            }
        }
        let s = Sequence::parse(&g, "1,0^2; 0,1^2; 1,1").unwrap();
        assert_eq!(feasibility(&s).unwrap().lengths(&g.zero()), vec![0, 5]);
        assert_eq!(min_zero_sum_length(&s).unwrap(), Some(5));
        assert!(!has_zero_sum_in(&s, &LengthSet::Interval(4)).unwrap());
        assert!(has_zero_sum_in(&s, &LengthSet::Interval(5)).unwrap());
    }

    #[test]
    fn feasibility_wide_rows() {
        let g: GroupSpec = "C2".parse().unwrap();
        let s = Sequence::parse(&g, "1^130").unwrap();
        let lengths = feasibility(&s).unwrap().lengths(&g.zero());
        assert_eq!(lengths, (0..=130).step_by(2).collect::<Vec<_>>());
    }

    #[test]
    fn counting_examples() {
        let g: GroupSpec = "C3".parse().unwrap();
        let s = Sequence::parse(&g, "1^2; 2").unwrap();
        assert_eq!(count_subseq(&s, &g.zero(), 2).unwrap(), BigUint::from(2u32));
        assert_eq!(count_subseq(&s, &s.sigma(), 3).unwrap(), BigUint::one());
        assert_eq!(count_subseq(&s, &g.zero(), 4).unwrap(), BigUint::zero());
        assert_eq!(count_subseq_mod(&s, &g.zero(), 2, 2).unwrap(), 0);
        let c2: GroupSpec = "C2".parse().unwrap();
        let t = Sequence::parse(&c2, "1^2").unwrap();
        assert_eq!(n_plus_minus(&t, &c2.zero(), 2).unwrap(), (0, 0));
        assert!(n_plus_minus(&t, &c2.zero(), 4).is_err());
    }

    #[test]
    fn length_sets() {
        assert!(LengthSet::interval(0).is_err());
        assert!(LengthSet::explicit([0, 2]).is_err());
        let l = LengthSet::explicit([2, 5]).unwrap();
        assert_eq!(l.members_up_to(6), vec![2, 5]);
        assert_eq!(l.to_string(), "{2,5}");
        assert_eq!(LengthSet::AllPositive.max(), None);
    }
}
