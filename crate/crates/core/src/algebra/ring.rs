//! Ring objects.
//!
//! A ring is a value (possibly carrying data such as a prime) that knows how to
//! operate on its elements. Elements are plain data.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::primes::is_prime;
use super::AlgebraError;

#[allow(clippy::wrong_self_convention)]
pub trait Ring: Clone + Debug + PartialEq + Eq + Hash + Send + Sync {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: &BigInt) -> Self::Elem;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    /// Exact quotient in an integral domain; `None` when `y` does not divide `x`.
    fn div_exact(&self, x: &Self::Elem, y: &Self::Elem) -> Option<Self::Elem>;
    fn format(&self, x: &Self::Elem) -> String;

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_int(&BigInt::from(n))
    }

    fn is_one(&self, x: &Self::Elem) -> bool {
        *x == self.one()
    }

    /// Whether `format` would print a leading minus sign.
    fn is_negative(&self, _x: &Self::Elem) -> bool {
        false
    }

    fn pow(&self, x: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = x.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

pub trait Field: Ring {
    fn inv(&self, x: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, x: &Self::Elem, y: &Self::Elem) -> Option<Self::Elem> {
        self.inv(y).map(|yi| self.mul(x, &yi))
    }

    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;
}

/// The integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_int(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn add(&self, x: &BigInt, y: &BigInt) -> BigInt {
        x + y
    }
    fn sub(&self, x: &BigInt, y: &BigInt) -> BigInt {
        x - y
    }
    fn mul(&self, x: &BigInt, y: &BigInt) -> BigInt {
        x * y
    }
    fn neg(&self, x: &BigInt) -> BigInt {
        -x
    }
    fn is_zero(&self, x: &BigInt) -> bool {
        x.is_zero()
    }
    fn is_one(&self, x: &BigInt) -> bool {
        x.is_one()
    }
    fn div_exact(&self, x: &BigInt, y: &BigInt) -> Option<BigInt> {
        if y.is_zero() {
            return None;
        }
        let (q, r) = x.div_rem(y);
        r.is_zero().then_some(q)
    }
    fn format(&self, x: &BigInt) -> String {
        x.to_string()
    }
    fn is_negative(&self, x: &BigInt) -> bool {
        x.is_negative()
    }
}

/// The rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_int(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn add(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x + y
    }
    fn sub(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x - y
    }
    fn mul(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x * y
    }
    fn neg(&self, x: &BigRational) -> BigRational {
        -x
    }
    fn is_zero(&self, x: &BigRational) -> bool {
        x.is_zero()
    }
    fn div_exact(&self, x: &BigRational, y: &BigRational) -> Option<BigRational> {
        self.div(x, y)
    }
    fn format(&self, x: &BigRational) -> String {
        x.to_string()
    }
    fn is_negative(&self, x: &BigRational) -> bool {
        x.is_negative()
    }
}

impl Field for Rationals {
    fn inv(&self, x: &BigRational) -> Option<BigRational> {
        (!x.is_zero()).then(|| x.recip())
    }
    fn characteristic(&self) -> u64 {
        0
    }
}

/// The prime field 𝔽_p for an odd prime p < 2^63.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, AlgebraError> {
        if p == 2 || p >= 1 << 63 || !is_prime(p) {
            return Err(AlgebraError::InvalidPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    /// Image of a rational number, `None` if p divides the denominator.
    pub fn from_rational(&self, q: &BigRational) -> Option<u64> {
        let d = self.from_int(q.denom());
        let n = self.from_int(q.numer());
        self.div(&n, &d)
    }

    /// Symmetric lift to (-p/2, p/2].
    pub fn lift_symmetric(&self, x: u64) -> i128 {
        if x > self.p / 2 {
            x as i128 - self.p as i128
        } else {
            x as i128
        }
    }

    pub fn elements(&self) -> std::ops::Range<u64> {
        0..self.p
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    #[inline]
    fn zero(&self) -> u64 {
        0
    }
    #[inline]
    fn one(&self) -> u64 {
        1
    }
    fn from_int(&self, n: &BigInt) -> u64 {
        let r = n.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue fits")
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }
    #[inline]
    fn add(&self, x: &u64, y: &u64) -> u64 {
        let s = *x as u128 + *y as u128;
        (s % self.p as u128) as u64
    }
    #[inline]
    fn sub(&self, x: &u64, y: &u64) -> u64 {
        if x >= y {
            x - y
        } else {
            self.p - (y - x)
        }
    }
    #[inline]
    fn mul(&self, x: &u64, y: &u64) -> u64 {
        ((*x as u128 * *y as u128) % self.p as u128) as u64
    }
    #[inline]
    fn neg(&self, x: &u64) -> u64 {
        if *x == 0 {
            0
        } else {
            self.p - x
        }
    }
    #[inline]
    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }
    fn div_exact(&self, x: &u64, y: &u64) -> Option<u64> {
        self.div(x, y)
    }
    fn format(&self, x: &u64) -> String {
        x.to_string()
    }
}

impl Field for PrimeField {
    fn inv(&self, x: &u64) -> Option<u64> {
        if *x == 0 {
            return None;
        }
        // Extended Euclid on i128 to stay clear of overflow.
        let (mut r0, mut r1) = (self.p as i128, *x as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        Some(s0.rem_euclid(self.p as i128) as u64)
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
}

/// Element x + y√d of a quadratic field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quad {
    pub x: BigRational,
    pub y: BigRational,
}

/// ℚ(√d) for a non-square integer d.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticField {
    d: BigInt,
}

impl QuadraticField {
    pub fn new(d: BigInt) -> Result<Self, AlgebraError> {
        if !d.is_negative() {
            let r = d.sqrt();
            if &r * &r == d {
                return Err(AlgebraError::SquareDiscriminant(d.to_string()));
            }
        }
        Ok(QuadraticField { d })
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    /// The generator √d.
    pub fn sqrt_d(&self) -> Quad {
        Quad { x: BigRational::zero(), y: BigRational::one() }
    }

    pub fn from_rational(&self, q: BigRational) -> Quad {
        Quad { x: q, y: BigRational::zero() }
    }

    pub fn elem(&self, x: BigRational, y: BigRational) -> Quad {
        Quad { x, y }
    }
}

impl Ring for QuadraticField {
    type Elem = Quad;

    fn zero(&self) -> Quad {
        Quad { x: BigRational::zero(), y: BigRational::zero() }
    }
    fn one(&self) -> Quad {
        Quad { x: BigRational::one(), y: BigRational::zero() }
    }
    fn from_int(&self, n: &BigInt) -> Quad {
        self.from_rational(BigRational::from_integer(n.clone()))
    }
    fn add(&self, u: &Quad, v: &Quad) -> Quad {
        Quad { x: &u.x + &v.x, y: &u.y + &v.y }
    }
    fn sub(&self, u: &Quad, v: &Quad) -> Quad {
        Quad { x: &u.x - &v.x, y: &u.y - &v.y }
    }
    fn mul(&self, u: &Quad, v: &Quad) -> Quad {
        let d = BigRational::from_integer(self.d.clone());
        Quad { x: &u.x * &v.x + d * &u.y * &v.y, y: &u.x * &v.y + &u.y * &v.x }
    }
    fn neg(&self, u: &Quad) -> Quad {
        Quad { x: -&u.x, y: -&u.y }
    }
    fn is_zero(&self, u: &Quad) -> bool {
        u.x.is_zero() && u.y.is_zero()
    }
    fn div_exact(&self, u: &Quad, v: &Quad) -> Option<Quad> {
        self.div(u, v)
    }
    fn format(&self, u: &Quad) -> String {
        if u.y.is_zero() {
            u.x.to_string()
        } else {
            format!("{} + {}*sqrt({})", u.x, u.y, self.d)
        }
    }
}

impl Field for QuadraticField {
    fn inv(&self, u: &Quad) -> Option<Quad> {
        if self.is_zero(u) {
            return None;
        }
        let d = BigRational::from_integer(self.d.clone());
        let norm = &u.x * &u.x - d * &u.y * &u.y;
        Some(Quad { x: &u.x / &norm, y: -&u.y / &norm })
    }
    fn characteristic(&self) -> u64 {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_rejects_two_and_composites() {
        assert!(PrimeField::new(2).is_err());
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(7).is_ok());
    }

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(101).unwrap();
        for x in 1..101 {
            let y = f.inv(&x).unwrap();
            assert_eq!(f.mul(&x, &y), 1);
        }
        assert_eq!(f.inv(&0), None);
    }

    #[test]
    fn quadratic_field_golden_ratio() {
        let k = QuadraticField::new(BigInt::from(5)).unwrap();
        // a = (-3 + √5)/2 satisfies a² + 3a + 1 = 0.
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let a = k.elem(BigRational::from_integer(BigInt::from(-3)) * &half, half);
        let val = k.add(&k.add(&k.mul(&a, &a), &k.mul(&k.from_i64(3), &a)), &k.one());
        assert!(k.is_zero(&val));
        let ai = k.inv(&a).unwrap();
        assert_eq!(k.mul(&a, &ai), k.one());
        assert!(QuadraticField::new(BigInt::from(4)).is_err());
    }
}
