#![allow(dead_code)]

use std::collections::BTreeSet;

use zerosum::group::GroupSpec;
use zerosum::sequence::Sequence;

/// Every invariant-factor chain `n_1 | … | n_r` with `r ≥ min_rank` and
/// order at most `max_order`.
pub fn chains(max_order: u64, min_rank: usize) -> Vec<GroupSpec> {
    fn extend(
        chain: &mut Vec<u64>,
        order: u64,
        max_order: u64,
        min_rank: usize,
        out: &mut Vec<GroupSpec>,
    ) {
        if chain.len() >= min_rank {
            let raw: Vec<i64> = chain.iter().map(|&x| x as i64).collect();
            out.push(GroupSpec::new(&raw).unwrap());
        }
        let last = chain.last().copied().unwrap_or(1);
        let mut m = if chain.is_empty() { 2 } else { last };
        while order * m <= max_order {
            if m % last == 0 {
                chain.push(m);
                extend(chain, order * m, max_order, min_rank, out);
                chain.pop();
            }
            m += 1;
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, max_order, min_rank, &mut out);
    out
}

/// Achievable `(sum, length)` pairs built term by term with plain sets.
pub fn zero_sum_lengths(s: &Sequence) -> BTreeSet<usize> {
    let g = s.group();
    let f = g.factors().to_vec();
    let mut reach: BTreeSet<(Vec<u64>, usize)> = BTreeSet::new();
    reach.insert((vec![0; f.len()], 0));
    for t in s.iter() {
        let add: Vec<_> = reach
            .iter()
            .map(|(sum, len)| {
                let next: Vec<u64> = sum
                    .iter()
                    .zip(t.coords())
                    .zip(&f)
                    .map(|((a, b), n)| (a + b) % n)
                    .collect();
                (next, len + 1)
            })
            .collect();
        reach.extend(add);
    }
    reach
        .into_iter()
        .filter(|(sum, len)| *len > 0 && sum.iter().all(|&c| c == 0))
        .map(|(_, l)| l)
        .collect()
}

pub fn min_zero_sum(s: &Sequence) -> Option<usize> {
    zero_sum_lengths(s).into_iter().next()
}
