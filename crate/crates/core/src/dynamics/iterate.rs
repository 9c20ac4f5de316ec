#[cfg(test)]
use num_bigint::BigInt;

use super::DynamicsError;
use crate::algebra::{Integers, MultiPoly};

pub const MAX_ITERATE_DEPTH: usize = 8;

type ZPoly = MultiPoly<Integers>;

fn step(g: &ZPoly, h: &ZPoly, a: &ZPoly, b: &ZPoly) -> (ZPoly, ZPoly) {
    let g2 = g.square();
    let h2 = h.square();
    (g2.add(&a.mul(&h2)), g2.add(&b.mul(&h2)))
}

/// (g_n, h_n) in ℤ[a, b, x, y] with fⁿ(x:y) = (g_n : h_n).
pub fn iterate_polys(n: usize) -> Result<(ZPoly, ZPoly), DynamicsError> {
    if !(1..=MAX_ITERATE_DEPTH).contains(&n) {
        return Err(DynamicsError::DepthOutOfRange(n));
    }
    let vars = ["a", "b", "x", "y"];
    let v = |s: &str| ZPoly::var(Integers, &vars, s).unwrap();
    let (a, b) = (v("a"), v("b"));
    let mut g = v("x");
    let mut h = v("y");
    for _ in 0..n {
        (g, h) = step(&g, &h, &a, &b);
    }
    Ok((g, h))
}

/// The critical point an iterate starts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CriticalStart {
    /// (0:1)
    Zero,
    /// (1:0)
    Infinity,
}

/// (g_n, h_n) specialized at a critical point, in ℤ[a, b]. n = 0 gives the point itself.
pub fn iterates_at(start: CriticalStart, n: usize) -> (ZPoly, ZPoly) {
    let vars = ["a", "b"];
    let a = ZPoly::var(Integers, &vars, "a").unwrap();
    let b = ZPoly::var(Integers, &vars, "b").unwrap();
    let one = ZPoly::one(Integers, &vars);
    let zero = ZPoly::zero(Integers, &vars);
    let (mut g, mut h) = match start {
        CriticalStart::Zero => (zero, one),
        CriticalStart::Infinity => (one, zero),
    };
    for _ in 0..n {
        (g, h) = step(&g, &h, &a, &b);
    }
    (g, h)
}

#[cfg(test)]
pub(crate) fn eval_pair(p: &(ZPoly, ZPoly), values: &[BigInt]) -> (BigInt, BigInt) {
    (p.0.eval(values), p.1.eval(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Field, PrimeField, Ring};
    use crate::dynamics::{ProjPoint, QuadraticMorphism};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn first_iterate() {
        let (g, h) = iterate_polys(1).unwrap();
        assert_eq!(g.to_string(), "a*y^2 + x^2");
        assert_eq!(h.to_string(), "b*y^2 + x^2");
        assert_eq!(iterate_polys(0), Err(DynamicsError::DepthOutOfRange(0)));
        assert_eq!(iterate_polys(9), Err(DynamicsError::DepthOutOfRange(9)));
    }

    #[test]
    fn second_iterate_at_example() {
        let p = iterate_polys(2).unwrap();
        let vals: Vec<BigInt> = [-4, 2, 0, 1].iter().map(|&v| BigInt::from(v)).collect();
        let (g, h) = eval_pair(&p, &vals);
        assert_eq!(g, BigInt::from(0));
        assert!(h != BigInt::from(0));
    }

    #[test]
    fn homogeneous_of_degree_two_to_the_n() {
        for n in 1..=4 {
            let (g, _) = iterate_polys(n).unwrap();
            for (e, _) in g.terms() {
                // vars sorted: a, b, x, y
                assert_eq!(e[2] + e[3], 1 << n);
            }
        }
    }

    #[test]
    fn specialization_commutes_with_apply() {
        let k = PrimeField::new(11).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let polys: Vec<_> = (1..=6).map(|n| iterate_polys(n).unwrap()).collect();
        let mut tried = 0;
        while tried < 20 {
            let a = rng.gen_range(0..11u64);
            let b = rng.gen_range(0..11u64);
            if a == b {
                continue;
            }
            tried += 1;
            let f = QuadraticMorphism::chart_a(k, a, b).unwrap();
            for x in 0..=11u64 {
                let pt = if x == 11 { ProjPoint::Infinity } else { ProjPoint::Finite(x) };
                let (xv, yv) = if x == 11 { (1, 0) } else { (x, 1) };
                for (n, (g, h)) in polys.iter().enumerate() {
                    let gm = g.map(k, |c| k.from_int(c));
                    let hm = h.map(k, |c| k.from_int(c));
                    let vals = [a, b, xv, yv];
                    let got = crate::dynamics::normalize(&k, &gm.eval(&vals), &hm.eval(&vals));
                    assert_eq!(got, f.iterate(&pt, n + 1));
                }
            }
        }
        let _ = k.characteristic();
    }

    #[test]
    fn critical_iterates() {
        let (g, h) = iterates_at(CriticalStart::Zero, 1);
        assert_eq!((g.to_string(), h.to_string()), ("a".into(), "b".into()));
        let (g, h) = iterates_at(CriticalStart::Infinity, 2);
        assert_eq!(g.to_string(), "a + 1");
        assert_eq!(h.to_string(), "b + 1");
    }
}
