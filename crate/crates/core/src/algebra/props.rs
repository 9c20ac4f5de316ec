use proptest::prelude::*;

use super::*;

const PRIMES: [u64; 8] = [3, 5, 7, 11, 13, 31, 61, 101];

fn zpoly(terms: &[((u32, u32), i64)]) -> MultiPoly<Integers> {
    let terms = terms.iter().map(|&((i, j), c)| (vec![i, j], c.into()));
    MultiPoly::from_terms(Integers, &["a", "b"], terms)
}

fn terms() -> impl Strategy<Value = Vec<((u32, u32), i64)>> {
    prop::collection::vec(((0u32..4, 0u32..4), -20i64..20), 0..6)
}

fn fpoly(k: PrimeField, cs: &[u64]) -> UniPoly<PrimeField> {
    UniPoly::new(k, cs.iter().map(|c| c % k.p()).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(x in terms(), y in terms(), z in terms()) {
        let (x, y, z) = (zpoly(&x), zpoly(&y), zpoly(&z));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.square(), x.mul(&x));
        prop_assert!(x.sub(&x).is_zero());
    }

    #[test]
    fn resultant_detects_common_factors(
        pi in 0usize..5,
        f in prop::collection::vec(((0u32..3, 0u32..3), 0u64..13), 1..6),
        g in prop::collection::vec(((0u32..3, 0u32..3), 0u64..13), 1..6),
    ) {
        let k = PrimeField::new(PRIMES[pi]).unwrap();
        let build = |t: &[((u32, u32), u64)]| {
            MultiPoly::from_terms(k, &["x", "y"], t.iter().map(|&((i, j), c)| (vec![i, j], c % k.p())))
        };
        let (f, g) = (build(&f), build(&g));
        prop_assume!(f.degree_in("x").unwrap_or(0) > 0 && g.degree_in("x").unwrap_or(0) > 0);
        let r = resultant(&f, &g, "x").unwrap();
        for c in k.elements() {
            let rc = r.specialize("y", &c).to_univariate("y").unwrap();
            let (fc, gc) = (f.specialize("y", &c).to_univariate("x").unwrap(), g.specialize("y", &c).to_univariate("x").unwrap());
            let lc_vanish = |p: &MultiPoly<PrimeField>| p.lc_in("x").specialize("y", &c).is_zero();
            let common = fc.gcd(&gc).degree().unwrap_or(1) > 0 || fc.is_zero() && gc.is_zero();
            prop_assert_eq!(rc.is_zero(), common || lc_vanish(&f) && lc_vanish(&g), "y = {}", c);
        }
    }

    #[test]
    fn roots_match_evaluation(pi in 0usize..8, cs in prop::collection::vec(0u64..1000, 1..10)) {
        let k = PrimeField::new(PRIMES[pi]).unwrap();
        let f = fpoly(k, &cs);
        prop_assume!(!f.is_zero());
        let found = roots_mod_p(&f).unwrap();
        let brute: Vec<u64> = k.elements().filter(|x| f.eval(x) == 0).collect();
        prop_assert_eq!(found.iter().map(|r| r.0).collect::<Vec<_>>(), brute);
        for (r, m) in found {
            let lin = fpoly(k, &[k.p() - r, 1]);
            prop_assert!(f.div_exact(&lin.pow(m as u64)).is_some());
            prop_assert!(f.div_exact(&lin.pow(m as u64 + 1)).is_none());
        }
    }

    #[test]
    fn ddf_buckets_multiply_back(pi in 0usize..8, cs in prop::collection::vec(0u64..1000, 2..10)) {
        let k = PrimeField::new(PRIMES[pi]).unwrap();
        let f = squarefree_part_mod_p(&fpoly(k, &cs));
        prop_assume!(f.degree().unwrap_or(0) > 0);
        let buckets = distinct_degree_split(&f).unwrap();
        let mut prod = UniPoly::constant(k, 1);
        for (d, b) in &buckets {
            prop_assert_eq!(b.degree().unwrap() % d, 0);
            prod = prod.mul(b);
        }
        prop_assert_eq!(prod, f.monic());
    }
}
