//! Dense univariate polynomials.

use std::fmt;

use super::ring::{Field, Ring};

/// Coefficients are stored little-endian with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly<R: Ring> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: Ring> UniPoly<R> {
    pub fn new(ring: R, mut coeffs: Vec<R::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { ring, coeffs }
    }

    pub fn zero(ring: R) -> Self {
        UniPoly { ring, coeffs: Vec::new() }
    }

    pub fn constant(ring: R, c: R::Elem) -> Self {
        Self::new(ring, vec![c])
    }

    /// The monomial x.
    pub fn x(ring: R) -> Self {
        let coeffs = vec![ring.zero(), ring.one()];
        UniPoly { ring, coeffs }
    }

    pub fn from_i64s(ring: R, coeffs: &[i64]) -> Self {
        let cs = coeffs.iter().map(|&c| ring.from_i64(c)).collect();
        Self::new(ring, cs)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R::Elem> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> R::Elem {
        self.coeffs.last().cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn eval(&self, x: &R::Elem) -> R::Elem {
        let r = &self.ring;
        let mut acc = r.zero();
        for c in self.coeffs.iter().rev() {
            acc = r.add(&r.mul(&acc, x), c);
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let r = &self.ring;
        let n = self.coeffs.len().max(other.coeffs.len());
        let cs = (0..n).map(|i| r.add(&self.coeff(i), &other.coeff(i))).collect();
        Self::new(r.clone(), cs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let r = &self.ring;
        let n = self.coeffs.len().max(other.coeffs.len());
        let cs = (0..n).map(|i| r.sub(&self.coeff(i), &other.coeff(i))).collect();
        Self::new(r.clone(), cs)
    }

    pub fn neg(&self) -> Self {
        let cs = self.coeffs.iter().map(|c| self.ring.neg(c)).collect();
        Self::new(self.ring.clone(), cs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ring.clone());
        }
        let r = &self.ring;
        let mut cs = vec![r.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if r.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                cs[i + j] = r.add(&cs[i + j], &r.mul(a, b));
            }
        }
        Self::new(r.clone(), cs)
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let cs = self.coeffs.iter().map(|x| self.ring.mul(x, c)).collect();
        Self::new(self.ring.clone(), cs)
    }

    /// Multiply by x^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut cs = vec![self.ring.zero(); k];
        cs.extend(self.coeffs.iter().cloned());
        Self::new(self.ring.clone(), cs)
    }

    pub fn derivative(&self) -> Self {
        let r = &self.ring;
        let cs = self.coeffs.iter().enumerate().skip(1).map(|(i, c)| r.mul(&r.from_i64(i as i64), c)).collect();
        Self::new(r.clone(), cs)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(self.ring.clone(), self.ring.one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Coefficient-wise image in another ring.
    pub fn map<S: Ring>(&self, target: S, f: impl Fn(&R::Elem) -> S::Elem) -> UniPoly<S> {
        let cs = self.coeffs.iter().map(f).collect();
        UniPoly::new(target, cs)
    }
}

impl<F: Field> UniPoly<F> {
    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let r = &self.ring;
        let dd = d.degree().expect("division by zero polynomial");
        let inv = r.inv(&d.lc()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(r.clone()), self.clone());
        }
        let mut q = vec![r.zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = r.mul(&rem[i], &inv);
            if r.is_zero(&c) {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = r.sub(&rem[idx], &r.mul(&c, dc));
            }
            q[i - dd] = c;
        }
        rem.truncate(dd);
        (Self::new(r.clone(), q), Self::new(r.clone(), rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.ring.inv(&self.lc()).expect("nonzero");
        self.scale(&inv)
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Exact division; `None` when there is a remainder.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn mul_mod(&self, other: &Self, m: &Self) -> Self {
        self.mul(other).rem(m)
    }

    /// self^e mod m with e given as little-endian u64 limbs.
    pub fn pow_mod_limbs(&self, e: &[u64], m: &Self) -> Self {
        let mut acc = Self::constant(self.ring.clone(), self.ring.one()).rem(m);
        let base = self.rem(m);
        for limb in e.iter().rev() {
            for bit in (0..64).rev() {
                acc = acc.mul_mod(&acc, m);
                if (limb >> bit) & 1 == 1 {
                    acc = acc.mul_mod(&base, m);
                }
            }
        }
        acc
    }

    pub fn pow_mod(&self, e: u64, m: &Self) -> Self {
        self.pow_mod_limbs(&[e], m)
    }

    /// Resultant of two nonzero polynomials via the Euclidean algorithm.
    ///
    /// Agrees with the Sylvester determinant (rows of `self` first).
    pub fn resultant(&self, other: &Self) -> F::Elem {
        let r = &self.ring;
        let (Some(m), Some(n)) = (self.degree(), other.degree()) else {
            return r.zero();
        };
        if n == 0 {
            return r.pow(&other.lc(), m as u64);
        }
        if m == 0 {
            return r.pow(&self.lc(), n as u64);
        }
        // res(f, g) = (-1)^{mn} lc(g)^{m - deg r} res(g, r), r = f mod g.
        let rem = self.rem(other);
        let Some(k) = rem.degree() else {
            return r.zero();
        };
        let mut out = r.pow(&other.lc(), (m - k) as u64);
        if (m * n) % 2 == 1 {
            out = r.neg(&out);
        }
        r.mul(&out, &other.resultant(&rem))
    }
}

impl<R: Ring> fmt::Display for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mp = super::MultiPoly::from_univariate(self, "x");
        write!(f, "{mp}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Integers, PrimeField};

    #[test]
    fn div_rem_reconstructs() {
        let f = PrimeField::new(7).unwrap();
        let a = UniPoly::from_i64s(f, &[1, 2, 3, 4, 5]);
        let b = UniPoly::from_i64s(f, &[3, 0, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn gcd_of_products() {
        let f = PrimeField::new(13).unwrap();
        let u = UniPoly::from_i64s(f, &[1, 1]);
        let v = UniPoly::from_i64s(f, &[2, 0, 1]);
        let w = UniPoly::from_i64s(f, &[5, 1]);
        let g = u.mul(&v).gcd(&u.mul(&w));
        assert_eq!(g, u);
    }

    #[test]
    fn resultant_small() {
        let f = PrimeField::new(101).unwrap();
        // res(x^2 - 3, x - 1) = 1 - 3 = -2
        let a = UniPoly::from_i64s(f, &[-3, 0, 1]);
        let b = UniPoly::from_i64s(f, &[-1, 1]);
        assert_eq!(a.resultant(&b), f.from_i64(-2));
    }

    #[test]
    fn derivative_and_eval() {
        let p = UniPoly::from_i64s(Integers, &[1, 3, 1]);
        assert_eq!(p.derivative(), UniPoly::from_i64s(Integers, &[3, 2]));
        assert_eq!(p.eval(&2.into()), 11.into());
    }
}
