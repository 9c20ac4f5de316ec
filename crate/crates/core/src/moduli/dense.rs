use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{Integers, MultiPoly, PrimeField, Ring, UniPoly};

/// A polynomial in ℤ[a, b] as a table: `coeffs[j][i]` is the coefficient of aⁱbʲ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensePoly<E> {
    pub coeffs: Vec<Vec<E>>,
}

impl DensePoly<BigInt> {
    pub fn new(p: &MultiPoly<Integers>) -> Self {
        let ia = p.var_index("a");
        let ib = p.var_index("b");
        assert!(p.support_vars().iter().all(|v| v == "a" || v == "b"), "expected a polynomial in a and b");
        let da = p.degree_in("a").unwrap_or(0) as usize;
        let db = p.degree_in("b").unwrap_or(0) as usize;
        let mut coeffs = vec![vec![BigInt::zero(); da + 1]; db + 1];
        for (e, c) in p.terms() {
            let i = ia.map_or(0, |k| e[k]) as usize;
            let j = ib.map_or(0, |k| e[k]) as usize;
            coeffs[j][i] = c.clone();
        }
        DensePoly { coeffs }
    }

    pub fn reduce(&self, k: &PrimeField) -> DensePoly<u64> {
        DensePoly { coeffs: self.coeffs.iter().map(|row| row.iter().map(|c| k.from_int(c)).collect()).collect() }
    }
}

impl DensePoly<u64> {
    /// The polynomial in b after setting a.
    pub fn at_a(&self, k: &PrimeField, a: u64) -> UniPoly<PrimeField> {
        let cs = self.coeffs.iter().map(|row| horner(k, row, a)).collect();
        UniPoly::new(*k, cs)
    }

    pub fn eval(&self, k: &PrimeField, a: u64, b: u64) -> u64 {
        let cs: Vec<u64> = self.coeffs.iter().map(|row| horner(k, row, a)).collect();
        horner(k, &cs, b)
    }
}

fn horner(k: &PrimeField, cs: &[u64], x: u64) -> u64 {
    cs.iter().rev().fold(0, |acc, c| k.add(&k.mul(&acc, &x), c))
}
