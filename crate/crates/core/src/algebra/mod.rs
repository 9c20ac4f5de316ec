//! Exact arithmetic: rings, polynomials, resultants, roots.

mod ddf;
mod multipoly;
pub mod primes;
mod resultant;
mod ring;
mod roots;
mod unipoly;

#[cfg(test)]
mod props;

pub use ddf::distinct_degree_split;
pub use multipoly::{parse_rational, Exponents, MultiPoly, PolyRing};
pub use resultant::{bareiss_det, resultant, resultant_univariate_sylvester, resultant_zz_bivariate};
pub use ring::{Field, Integers, PrimeField, Quad, QuadraticField, Rationals, Ring};
pub use roots::{is_squarefree_mod_p, rational_roots, roots_mod_p, squarefree_part_mod_p, EXHAUSTIVE_ROOT_LIMIT};
pub use unipoly::UniPoly;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("variable {0} does not occur")]
    VariableAbsent(String),
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("{0} is not an odd prime below 2^63")]
    InvalidPrime(u64),
    #[error("{0} is a perfect square")]
    SquareDiscriminant(String),
    #[error("not univariate: {0}")]
    NotUnivariate(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl AlgebraError {
    pub fn name(&self) -> &'static str {
        match self {
            AlgebraError::ZeroPolynomial => "ZeroPolynomial",
            AlgebraError::VariableAbsent(_) => "VariableAbsent",
            AlgebraError::NotSquarefree => "NotSquarefree",
            AlgebraError::InvalidPrime(_) => "InvalidPrime",
            AlgebraError::SquareDiscriminant(_) => "SquareDiscriminant",
            AlgebraError::NotUnivariate(_) => "NotUnivariate",
            AlgebraError::Parse(_) => "ParseError",
        }
    }
}
