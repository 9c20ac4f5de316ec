//! Frobenius cycle types on the levels of the preimage tree over 𝔽_p.

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{distinct_degree_split, squarefree_part_mod_p, AlgebraError, PrimeField, Ring, UniPoly};
use crate::dynamics::{ProjPoint, QuadraticMorphism};

pub const MAX_FIBER_DEPTH: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonodromyError {
    #[error("basepoint {0} lies in the postcritical set")]
    BasepointPostcritical(String),
    #[error("depth {0} outside 1..={MAX_FIBER_DEPTH}")]
    DepthOutOfRange(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl MonodromyError {
    pub fn name(&self) -> &'static str {
        match self {
            MonodromyError::BasepointPostcritical(_) => "BasepointPostcritical",
            MonodromyError::DepthOutOfRange(_) => "DepthOutOfRange",
            MonodromyError::Algebra(e) => e.name(),
        }
    }
}

type Fp = UniPoly<PrimeField>;

/// Forward orbits of the two critical values.
pub fn postcritical_set(f: &QuadraticMorphism<PrimeField>) -> Vec<ProjPoint<u64>> {
    let k = f.field();
    let mut out: Vec<ProjPoint<u64>> = Vec::new();
    for crit in [ProjPoint::Finite(k.zero()), ProjPoint::Infinity] {
        for x in f.orbit(&f.apply(&crit), k.p() as usize + 2) {
            if !out.contains(&x) {
                out.push(x);
            }
        }
    }
    out
}

fn check_basepoint(f: &QuadraticMorphism<PrimeField>, c: &ProjPoint<u64>) -> Result<(), MonodromyError> {
    if postcritical_set(f).contains(c) {
        return Err(MonodromyError::BasepointPostcritical(c.to_string()));
    }
    Ok(())
}

/// Affine numerator and denominator of fⁿ, i.e. (gₙ(x, 1), hₙ(x, 1)).
fn iterate_pair(f: &QuadraticMorphism<PrimeField>, n: usize) -> (Fp, Fp) {
    let k = *f.field();
    let [p, q, r, s] = f.coefficients().map(|c| UniPoly::constant(k, c));
    let mut g = UniPoly::x(k);
    let mut h = UniPoly::constant(k, 1);
    for _ in 0..n {
        let (g2, h2) = (g.mul(&g), h.mul(&h));
        g = p.mul(&g2).add(&q.mul(&h2));
        h = r.mul(&g2).add(&s.mul(&h2));
    }
    (g, h)
}

/// gₙ − c·hₙ, or hₙ for c = ∞. Its roots are the level-n preimages of c.
pub fn fiber_polynomial(f: &QuadraticMorphism<PrimeField>, c: &ProjPoint<u64>, n: usize) -> Result<Fp, MonodromyError> {
    if n == 0 || n > MAX_FIBER_DEPTH {
        return Err(MonodromyError::DepthOutOfRange(n));
    }
    check_basepoint(f, c)?;
    let (g, h) = iterate_pair(f, n);
    Ok(match c {
        ProjPoint::Infinity => h,
        ProjPoint::Finite(c) => g.sub(&h.scale(c)),
    })
}

/// Cycle type of Frobenius on a set of 𝔽_p-conjugate roots, descending.
pub fn cycle_type(poly: &Fp) -> Result<Vec<usize>, MonodromyError> {
    let sf = squarefree_part_mod_p(poly);
    let mut out = Vec::new();
    for (d, bucket) in distinct_degree_split(&sf)? {
        let deg = bucket.degree().unwrap_or(0);
        out.extend(std::iter::repeat_n(d, deg / d));
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PreimageLevels {
    pub p: u64,
    pub coefficients: [u64; 4],
    pub basepoint: String,
    /// Entry n is the cycle type on level n; level 0 is the basepoint.
    pub levels: Vec<Vec<usize>>,
}

impl PreimageLevels {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

pub fn frobenius_cycles(
    f: &QuadraticMorphism<PrimeField>,
    c: &ProjPoint<u64>,
    max_depth: usize,
) -> Result<PreimageLevels, MonodromyError> {
    if max_depth == 0 || max_depth > MAX_FIBER_DEPTH {
        return Err(MonodromyError::DepthOutOfRange(max_depth));
    }
    check_basepoint(f, c)?;
    let mut levels = vec![vec![1]];
    for n in 1..=max_depth {
        levels.push(cycle_type(&fiber_polynomial(f, c, n)?)?);
    }
    Ok(PreimageLevels { p: f.field().p(), coefficients: *f.coefficients(), basepoint: c.to_string(), levels })
}
