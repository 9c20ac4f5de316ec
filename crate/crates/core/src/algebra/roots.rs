//! Root finding over 𝔽_p and ℚ, and squarefree parts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::primes::large_primes;
use super::ring::{Field, Integers, PrimeField, Ring};
use super::unipoly::UniPoly;
use super::AlgebraError;

/// Below this size roots are found by evaluating at every residue.
pub const EXHAUSTIVE_ROOT_LIMIT: u64 = 10_000;

/// Roots in 𝔽_p with multiplicities, sorted by residue.
pub fn roots_mod_p(f: &UniPoly<PrimeField>) -> Result<Vec<(u64, usize)>, AlgebraError> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let fp = *f.ring();
    let mut roots = if fp.p() < EXHAUSTIVE_ROOT_LIMIT {
        fp.elements().filter(|x| fp.is_zero(&f.eval(x))).collect()
    } else {
        split_roots(f)
    };
    roots.sort_unstable();
    Ok(roots.into_iter().map(|r| (r, multiplicity(f, r))).collect())
}

fn multiplicity(f: &UniPoly<PrimeField>, r: u64) -> usize {
    let fp = *f.ring();
    let lin = UniPoly::new(fp, vec![fp.neg(&r), 1]);
    let mut g = f.clone();
    let mut k = 0;
    while let Some(q) = g.div_exact(&lin) {
        k += 1;
        g = q;
        if g.degree() == Some(0) {
            break;
        }
    }
    k
}

/// Roots via gcd with x^p − x and equal-degree splitting.
fn split_roots(f: &UniPoly<PrimeField>) -> Vec<u64> {
    let fp = *f.ring();
    let p = fp.p();
    let f = f.monic();
    let x = UniPoly::x(fp);
    let xp = x.pow_mod(p, &f);
    let g = f.gcd(&xp.sub(&x));
    let mut out = Vec::new();
    let mut stack = vec![g];
    let mut delta: u64 = 1;
    while let Some(h) = stack.pop() {
        match h.degree() {
            None | Some(0) => continue,
            Some(1) => {
                // x + c
                out.push(fp.neg(&h.coeff(0)));
                continue;
            }
            _ => {}
        }
        loop {
            let shifted = UniPoly::new(fp, vec![delta % p, 1]);
            delta = delta.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let w = shifted.pow_mod((p - 1) / 2, &h).sub(&UniPoly::constant(fp, 1));
            let d = h.gcd(&w);
            if let Some(k) = d.degree() {
                if k > 0 && Some(k) < h.degree() {
                    let other = h.div_exact(&d).expect("divisor");
                    stack.push(d);
                    stack.push(other);
                    break;
                }
            }
        }
    }
    out
}

/// Radical of a nonzero polynomial over 𝔽_p (product of its distinct monic irreducible factors).
pub fn squarefree_part_mod_p(f: &UniPoly<PrimeField>) -> UniPoly<PrimeField> {
    let fp = *f.ring();
    if f.degree().unwrap_or(0) == 0 {
        return UniPoly::constant(fp, 1);
    }
    let f = f.monic();
    let df = f.derivative();
    if df.is_zero() {
        return squarefree_part_mod_p(&pth_root(&f));
    }
    let g = f.gcd(&df);
    let h = f.div_exact(&g).expect("divides").monic();
    // Factors of multiplicity divisible by p are missing from h.
    let mut u = g;
    loop {
        let c = u.gcd(&h);
        if c.degree() == Some(0) {
            break;
        }
        u = u.div_exact(&c).expect("divides");
    }
    if u.degree().unwrap_or(0) == 0 {
        return h;
    }
    h.mul(&squarefree_part_mod_p(&pth_root(&u))).monic()
}

fn pth_root(f: &UniPoly<PrimeField>) -> UniPoly<PrimeField> {
    let p = f.ring().p() as usize;
    let cs: Vec<u64> = f.coeffs().iter().step_by(p).cloned().collect();
    UniPoly::new(*f.ring(), cs)
}

pub fn is_squarefree_mod_p(f: &UniPoly<PrimeField>) -> bool {
    match f.degree() {
        None => false,
        Some(0) => true,
        Some(_) => f.gcd(&f.derivative()).degree() == Some(0),
    }
}

/// Rational roots r/s with |r|, |s| ≤ `height`.
///
/// The search is complete whenever the trailing and leading coefficients
/// (after removing factors of x) are at most `height` in absolute value.
pub fn rational_roots(f: &UniPoly<Integers>, height: u64) -> Result<Vec<BigRational>, AlgebraError> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let mut out = Vec::new();
    let shift = f.coeffs().iter().position(|c| !c.is_zero()).unwrap();
    if shift > 0 {
        out.push(BigRational::zero());
    }
    let cs = &f.coeffs()[shift..];
    if cs.len() == 1 {
        return Ok(out);
    }
    let trailing = cs[0].abs();
    let leading = cs[cs.len() - 1].abs();
    let nums = small_divisors(&trailing, height);
    let dens = small_divisors(&leading, height);

    // A few word-sized primes used to discard candidates cheaply.
    let filters: Vec<(PrimeField, UniPoly<PrimeField>)> = large_primes()
        .take(3)
        .map(|p| {
            let fp = PrimeField::new(p).unwrap();
            (fp, UniPoly::new(fp, cs.iter().map(|c| fp.from_int(c)).collect()))
        })
        .collect();

    for s in &dens {
        for r in &nums {
            if r.gcd(s) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let rr = BigInt::from(*r) * sign;
                let ss = BigInt::from(*s);
                let passes = filters.iter().all(|(fp, poly)| {
                    let x = fp.div(&fp.from_int(&rr), &fp.from_int(&ss)).expect("s < p");
                    poly.eval(&x) == 0
                });
                if passes && homogeneous_eval(cs, &rr, &ss).is_zero() {
                    out.push(BigRational::new(rr, ss));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn small_divisors(n: &BigInt, height: u64) -> Vec<u64> {
    let limit = n.to_u64().map_or(height, |v| v.min(height));
    (1..=limit).filter(|d| (n % BigInt::from(*d)).is_zero()).collect()
}

/// Σ c_i r^i s^{d−i}.
fn homogeneous_eval(cs: &[BigInt], r: &BigInt, s: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    let mut s_pow = BigInt::one();
    // Horner in r with running powers of s.
    for (i, c) in cs.iter().enumerate().rev() {
        acc = acc * r + c * &s_pow;
        if i > 0 {
            s_pow *= s;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn golden_ratio_mod_small_primes() {
        let f5 = UniPoly::from_i64s(fp(5), &[1, 3, 1]);
        assert_eq!(roots_mod_p(&f5).unwrap(), vec![(1, 2)]);
        let f7 = UniPoly::from_i64s(fp(7), &[1, 3, 1]);
        assert!(roots_mod_p(&f7).unwrap().is_empty());
        let g7 = UniPoly::from_i64s(fp(7), &[-1, 0, 1]);
        assert_eq!(roots_mod_p(&g7).unwrap(), vec![(1, 1), (6, 1)]);
    }

    #[test]
    fn splitting_regime_matches_evaluation() {
        let p = 10007;
        let f = fp(p);
        // (x-3)(x-5)^2(x-10000)(x^2+1) ; -1 is a non-residue since p ≡ 3 mod 4.
        let lin = |r: i64| UniPoly::from_i64s(f, &[-r, 1]);
        let poly = lin(3).mul(&lin(5)).mul(&lin(5)).mul(&lin(10000)).mul(&UniPoly::from_i64s(f, &[1, 0, 1]));
        assert_eq!(roots_mod_p(&poly).unwrap(), vec![(3, 1), (5, 2), (10000, 1)]);
    }

    #[test]
    fn rational_roots_examples() {
        let f = UniPoly::from_i64s(Integers, &[-1, 2]);
        assert_eq!(rational_roots(&f, 10).unwrap(), vec![BigRational::new(1.into(), 2.into())]);
        let g = UniPoly::from_i64s(Integers, &[1, 0, 1]);
        assert!(rational_roots(&g, 10).unwrap().is_empty());
        // x (x + 4) (3x - 2)
        let h = UniPoly::from_i64s(Integers, &[0, -8, 10, 3]);
        let roots = rational_roots(&h, 10).unwrap();
        let expect: Vec<BigRational> =
            vec![BigRational::from_integer((-4).into()), BigRational::zero(), BigRational::new(2.into(), 3.into())];
        assert_eq!(roots, expect);
    }

    #[test]
    fn squarefree_part_handles_pth_powers() {
        let f = fp(3);
        let lin = UniPoly::from_i64s(f, &[1, 1]);
        let quad = UniPoly::from_i64s(f, &[1, 0, 1]);
        // (x+1)^3 (x^2+1)^2
        let poly = lin.pow(3).mul(&quad.pow(2));
        assert_eq!(squarefree_part_mod_p(&poly), lin.mul(&quad));
        assert!(!is_squarefree_mod_p(&poly));
        assert!(is_squarefree_mod_p(&lin.mul(&quad)));
    }
}
