use std::collections::BTreeMap;

use num_integer::Integer;
use proptest::prelude::*;
use zerosum::group::GroupSpec;

/// Element-order histogram of `C_{m_1} ⊕ … ⊕ C_{m_s}` from raw factors.
fn raw_order_histogram(raw: &[u64]) -> BTreeMap<u64, u64> {
    let mut hist = BTreeMap::new();
    let total: u64 = raw.iter().product();
    for mut idx in 0..total {
        let mut ord = 1u64;
        for &m in raw.iter().rev() {
            let c = idx % m;
            idx /= m;
            ord = ord.lcm(&(m / c.gcd(&m)));
        }
        *hist.entry(ord).or_insert(0) += 1;
    }
    hist
}

fn group_order_histogram(g: &GroupSpec) -> BTreeMap<u64, u64> {
    let mut hist = BTreeMap::new();
    for e in g.elements().unwrap() {
        *hist.entry(g.order_of(&e).unwrap()).or_insert(0) += 1;
    }
    hist
}

fn gl_order(n: u64, r: u32) -> u64 {
    // |GL_r(Z/p^a)| multiplied over prime powers of n
    let mut total = 1u64;
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        if m.is_multiple_of(p) {
            let mut pa = 1;
            while m.is_multiple_of(p) {
                m /= p;
                pa *= p;
            }
            let q = p.pow(r);
            let mut gl = 1u64;
            for i in 0..r {
                gl *= q - p.pow(i);
            }
            total *= gl * (pa / p).pow(r * r);
        }
        p += 1;
    }
    total
}

#[test]
fn automorphism_counts_match_gl_formula() {
    for (n, r) in [(2, 2), (2, 3), (3, 2), (4, 2), (5, 2), (6, 2), (3, 3)] {
        let g = GroupSpec::homocyclic(n, r as usize).unwrap();
        assert_eq!(
            g.automorphisms().unwrap().len() as u64,
            gl_order(n, r),
            "C{n}^{r}"
        );
    }
}

#[test]
fn parse_and_display() {
    let g: GroupSpec = "C6xC4".parse().unwrap();
    assert_eq!(g.factors(), &[2, 12]);
    assert_eq!(g.to_string(), "C2xC12");
    let g: GroupSpec = "C3^3".parse().unwrap();
    assert_eq!((g.rank(), g.exponent(), g.d_star()), (3, 3, 7));
    assert!("C0".parse::<GroupSpec>().is_err());
    assert!("D4".parse::<GroupSpec>().is_err());
}

proptest! {
    #[test]
    fn normal_form_is_isomorphic(raw in prop::collection::vec(2u64..=12, 1..=3)) {
        prop_assume!(raw.iter().product::<u64>() <= 2000);
        let g = GroupSpec::new(&raw.iter().map(|&x| x as i64).collect::<Vec<_>>()).unwrap();
        prop_assert_eq!(g.order(), Some(raw.iter().product()));
        prop_assert!(g.factors().windows(2).all(|w| w[1] % w[0] == 0));
        prop_assert!(g.factors().iter().all(|&n| n > 1));
        prop_assert_eq!(group_order_histogram(&g), raw_order_histogram(&raw));
    }

    #[test]
    fn arithmetic_laws(raw in prop::collection::vec(2u64..=9, 1..=3), a in any::<u64>(), b in any::<u64>(), c in -20i64..20) {
        let g = GroupSpec::new(&raw.iter().map(|&x| x as i64).collect::<Vec<_>>()).unwrap();
        let n = g.order().unwrap() as usize;
        let (x, y) = (g.element_at(a as usize % n), g.element_at(b as usize % n));
        prop_assert_eq!(g.add(&x, &y).unwrap(), g.add(&y, &x).unwrap());
        prop_assert_eq!(g.add(&x, &g.neg(&x).unwrap()).unwrap(), g.zero());
        prop_assert_eq!(g.index_of(&x), a as usize % n);
        let mut acc = g.zero();
        for _ in 0..c.unsigned_abs() {
            acc = g.add(&acc, &x).unwrap();
        }
        if c < 0 {
            acc = g.neg(&acc).unwrap();
        }
        prop_assert_eq!(g.scalar_mul(c, &x).unwrap(), acc);
        let ord = g.order_of(&x).unwrap();
        prop_assert_eq!(g.scalar_mul(ord as i64, &x).unwrap(), g.zero());
        prop_assert!((1..ord).all(|m| g.scalar_mul(m as i64, &x).unwrap() != g.zero()));
    }

    #[test]
    fn text_round_trip(raw in prop::collection::vec(2u64..=30, 1..=4)) {
        let g = GroupSpec::new(&raw.iter().map(|&x| x as i64).collect::<Vec<_>>()).unwrap();
        prop_assert_eq!(g.to_string().parse::<GroupSpec>().unwrap(), g);
    }
}

#[test]
fn automorphisms_are_homomorphic_bijections() {
    let g = GroupSpec::homocyclic(4, 2).unwrap();
    let elems: Vec<_> = g.elements().unwrap().collect();
    for phi in g.automorphisms().unwrap() {
        let perm = phi.permutation(&g);
        let mut seen = perm.clone();
        seen.sort_unstable();
        assert_eq!(seen, (0..elems.len() as u32).collect::<Vec<_>>());
        for a in &elems {
            for b in &elems {
                let lhs = phi.apply(&g.add(a, b).unwrap());
                let rhs = g.add(&phi.apply(a), &phi.apply(b)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
