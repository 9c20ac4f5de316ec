//! Distinct-degree factorization over 𝔽_p.

use super::ring::PrimeField;
use super::roots::is_squarefree_mod_p;
use super::unipoly::UniPoly;
use super::AlgebraError;

/// Split a squarefree polynomial into buckets `(d, product of its monic irreducible
/// factors of degree d)`, ascending in d. The buckets multiply to the monic
/// associate of `f`.
pub fn distinct_degree_split(f: &UniPoly<PrimeField>) -> Result<Vec<(usize, UniPoly<PrimeField>)>, AlgebraError> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    if !is_squarefree_mod_p(f) {
        return Err(AlgebraError::NotSquarefree);
    }
    let fp = *f.ring();
    let p = fp.p();
    let x = UniPoly::x(fp);
    let mut rest = f.monic();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut d = 0;
    while let Some(deg) = rest.degree() {
        if deg == 0 {
            break;
        }
        d += 1;
        if deg < 2 * d {
            out.push((deg, rest.clone()));
            break;
        }
        h = h.pow_mod(p, &rest);
        let g = rest.gcd(&h.sub(&x));
        if g.degree().unwrap_or(0) > 0 {
            rest = rest.div_exact(&g).expect("divides");
            h = h.rem(&rest);
            out.push((d, g));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let f7 = PrimeField::new(7).unwrap();
        let a = UniPoly::from_i64s(f7, &[-1, 0, 1]);
        assert_eq!(distinct_degree_split(&a).unwrap(), vec![(1, a.clone())]);
        let b = UniPoly::from_i64s(f7, &[1, 0, 1]);
        assert_eq!(distinct_degree_split(&b).unwrap(), vec![(2, b.clone())]);
        let f5 = PrimeField::new(5).unwrap();
        let c = UniPoly::from_i64s(f5, &[0, -1, 0, 1]);
        assert_eq!(distinct_degree_split(&c).unwrap(), vec![(1, c.clone())]);
    }

    #[test]
    fn rejects_squares() {
        let f7 = PrimeField::new(7).unwrap();
        let a = UniPoly::from_i64s(f7, &[1, 2, 1]);
        assert_eq!(distinct_degree_split(&a), Err(AlgebraError::NotSquarefree));
    }
}
