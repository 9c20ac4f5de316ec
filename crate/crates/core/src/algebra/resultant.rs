//! Sylvester resultants.
//!
//! [`resultant`] works over any integral domain by fraction-free (Bareiss)
//! elimination on the Sylvester matrix. [`resultant_zz_bivariate`] handles the
//! common case of two polynomials in ℤ[a, b] by evaluation, interpolation and
//! Chinese remaindering; the two agree exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::multipoly::{MultiPoly, PolyRing};
use super::primes::large_primes;
use super::ring::{Field, Integers, PrimeField, Ring};
use super::unipoly::UniPoly;
use super::AlgebraError;

fn check_inputs<R: Ring>(f: &MultiPoly<R>, g: &MultiPoly<R>, var: &str) -> Result<(usize, usize), AlgebraError> {
    if f.is_zero() || g.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let m = f.degree_in(var).unwrap_or(0) as usize;
    let n = g.degree_in(var).unwrap_or(0) as usize;
    if m == 0 || n == 0 {
        return Err(AlgebraError::VariableAbsent(var.to_string()));
    }
    Ok((m, n))
}

/// Determinant by Bareiss fraction-free elimination.
pub fn bareiss_det<R: Ring>(ring: &R, mut m: Vec<Vec<R::Elem>>) -> R::Elem {
    let n = m.len();
    if n == 0 {
        return ring.one();
    }
    let mut negate = false;
    let mut prev = ring.one();
    for k in 0..n - 1 {
        if ring.is_zero(&m[k][k]) {
            match (k + 1..n).find(|&i| !ring.is_zero(&m[i][k])) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return ring.zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = ring.sub(&ring.mul(&m[i][j], &m[k][k]), &ring.mul(&m[i][k], &m[k][j]));
                m[i][j] = ring.div_exact(&num, &prev).expect("Bareiss division is exact");
            }
            m[i][k] = ring.zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        ring.neg(&d)
    } else {
        d
    }
}

/// Sylvester matrix of two coefficient lists (little-endian), rows of `f` first.
fn sylvester<E: Clone>(zero: &E, f: &[E], g: &[E]) -> Vec<Vec<E>> {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![zero.clone(); size];
        for (j, c) in f.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![zero.clone(); size];
        for (j, c) in g.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Resultant of `f` and `g` with respect to `var`, as a polynomial in the
/// remaining variables. Sign convention: Sylvester determinant, `f` rows first.
pub fn resultant<R: Ring>(f: &MultiPoly<R>, g: &MultiPoly<R>, var: &str) -> Result<MultiPoly<R>, AlgebraError> {
    check_inputs(f, g, var)?;
    let (f, g) = {
        let names: Vec<&str> = g.vars().iter().map(|s| s.as_str()).collect();
        let f2 = f.extend_vars(&names);
        let names: Vec<&str> = f2.vars().iter().map(|s| s.as_str()).collect();
        (f2.clone(), g.extend_vars(&names))
    };
    let fc = f.coefficients_in(var);
    let gc = g.coefficients_in(var);
    let rest: Vec<&str> = fc[0].vars().iter().map(|s| s.as_str()).collect();
    let ring = PolyRing::new(f.ring().clone(), &rest);
    let zero = ring.zero();
    let mat = sylvester(&zero, &fc, &gc);
    Ok(bareiss_det(&ring, mat))
}

/// Resultant of two univariate polynomials over a field, via Sylvester/Bareiss.
pub fn resultant_univariate_sylvester<F: Field>(f: &UniPoly<F>, g: &UniPoly<F>) -> F::Elem {
    let r = f.ring();
    if f.is_zero() || g.is_zero() {
        return r.zero();
    }
    let mat = sylvester(&r.zero(), f.coeffs(), g.coeffs());
    bareiss_det(r, mat)
}

/// Resultant in ℤ[a, b] eliminating `var`, by multimodular evaluation.
///
/// Exactly two variables may occur in total; the result is univariate in the other one.
pub fn resultant_zz_bivariate(
    f: &MultiPoly<Integers>,
    g: &MultiPoly<Integers>,
    var: &str,
) -> Result<MultiPoly<Integers>, AlgebraError> {
    let (m, n) = check_inputs(f, g, var)?;
    let mut names: Vec<String> = f.support_vars();
    names.extend(g.support_vars());
    names.sort();
    names.dedup();
    let others: Vec<String> = names.iter().filter(|v| *v != var).cloned().collect();
    if others.len() > 1 {
        return Err(AlgebraError::NotUnivariate(format!("more than two variables: {names:?}")));
    }
    let other = others.first().cloned().unwrap_or_else(|| if var == "a" { "t".into() } else { "a".into() });

    // Coefficients in `var` as dense integer polynomials in `other`.
    let to_dense = |p: &MultiPoly<Integers>| -> Vec<Vec<BigInt>> {
        p.coefficients_in(var).iter().map(|c| c.to_univariate(&other).expect("bivariate").into_coeffs()).collect()
    };
    let fd = to_dense(f);
    let gd = to_dense(g);
    let deg_other = |d: &Vec<Vec<BigInt>>| d.iter().map(|c| c.len().saturating_sub(1)).max().unwrap_or(0);
    let bound_deg = n * deg_other(&fd) + m * deg_other(&gd);

    // Hadamard-type bound: |coefficients| ≤ ‖f‖₁^n ‖g‖₁^m.
    let bound = num_traits::pow(f.norm1(), n) * num_traits::pow(g.norm1(), m);
    let target = bound * 2u32 + 1u32;

    let mut modulus = BigInt::one();
    let mut acc: Vec<BigInt> = vec![BigInt::zero(); bound_deg + 1];
    for p in large_primes() {
        if modulus > target {
            break;
        }
        let fp = PrimeField::new(p).expect("prime");
        let Some(res_p) = resultant_mod_p(&fp, &fd, &gd, bound_deg) else {
            continue;
        };
        crt_accumulate(&mut acc, &modulus, &res_p, p);
        modulus *= p;
    }
    // Symmetric representatives.
    let half = &modulus >> 1;
    let coeffs: Vec<BigInt> = acc
        .into_iter()
        .map(|c| {
            let c = c.mod_floor(&modulus);
            if c > half {
                c - &modulus
            } else {
                c
            }
        })
        .collect();
    let uni = UniPoly::new(Integers, coeffs);
    Ok(MultiPoly::from_univariate(&uni, &other))
}

fn resultant_mod_p(fp: &PrimeField, fd: &[Vec<BigInt>], gd: &[Vec<BigInt>], bound_deg: usize) -> Option<Vec<u64>> {
    let reduce = |d: &[Vec<BigInt>]| -> Vec<UniPoly<PrimeField>> {
        d.iter().map(|c| UniPoly::new(*fp, c.iter().map(|x| fp.from_int(x)).collect())).collect()
    };
    let fr = reduce(fd);
    let gr = reduce(gd);
    // Formal leading coefficients must survive reduction, else degrees drop.
    if fr.last().unwrap().is_zero() || gr.last().unwrap().is_zero() {
        return None;
    }
    let mut xs = Vec::with_capacity(bound_deg + 1);
    let mut ys = Vec::with_capacity(bound_deg + 1);
    let mut t: u64 = 0;
    while xs.len() <= bound_deg {
        if t >= fp.p() {
            return None;
        }
        let lf = fr.last().unwrap().eval(&t);
        let lg = gr.last().unwrap().eval(&t);
        if lf != 0 && lg != 0 {
            let fs = UniPoly::new(*fp, fr.iter().map(|c| c.eval(&t)).collect());
            let gs = UniPoly::new(*fp, gr.iter().map(|c| c.eval(&t)).collect());
            xs.push(t);
            ys.push(fs.resultant(&gs));
        }
        t += 1;
    }
    Some(interpolate(fp, &xs, &ys))
}

/// Newton interpolation over 𝔽_p; returns little-endian coefficients.
fn interpolate(fp: &PrimeField, xs: &[u64], ys: &[u64]) -> Vec<u64> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = fp.sub(&dd[i], &dd[i - 1]);
            let den = fp.sub(&xs[i], &xs[i - j]);
            dd[i] = fp.mul(&num, &fp.inv(&den).expect("distinct nodes"));
        }
    }
    // Horner on the Newton form.
    let mut poly = vec![0u64; n];
    poly[0] = dd[n - 1];
    for (len, i) in (1..).zip((0..n - 1).rev()) {
        // poly = poly * (x - xs[i]) + dd[i]
        let mut next = vec![0u64; n];
        for k in 0..len {
            next[k + 1] = fp.add(&next[k + 1], &poly[k]);
            next[k] = fp.sub(&next[k], &fp.mul(&poly[k], &xs[i]));
        }
        next[0] = fp.add(&next[0], &dd[i]);
        poly = next;
    }
    poly
}

fn crt_accumulate(acc: &mut [BigInt], modulus: &BigInt, res: &[u64], p: u64) {
    let pb = BigInt::from(p);
    let fp = PrimeField::new(p).expect("prime");
    let m_mod_p = fp.from_int(modulus);
    let inv = fp.inv(&m_mod_p).expect("coprime moduli");
    for (c, &r) in acc.iter_mut().zip(res) {
        // c' ≡ c mod M, c' ≡ r mod p.
        let c_mod_p = fp.from_int(c);
        let delta = fp.mul(&fp.sub(&r, &c_mod_p), &inv);
        *c = &*c + modulus * BigInt::from(delta);
        if c.is_negative() {
            *c = c.mod_floor(&(modulus * &pb));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zz(s: &str) -> MultiPoly<Integers> {
        MultiPoly::<Integers>::parse(s).unwrap()
    }

    #[test]
    fn linear_resultant() {
        let r = resultant(&zz("x - a"), &zz("x - b"), "x").unwrap();
        assert_eq!(r.to_string(), "a - b");
    }

    #[test]
    fn evaluation_property() {
        let r = resultant(&zz("x^2 - a"), &zz("x - 1"), "x").unwrap();
        assert_eq!(r.to_string(), "-a + 1");
    }

    #[test]
    fn variable_absent() {
        assert!(matches!(resultant(&zz("a + 1"), &zz("x - 1"), "x"), Err(AlgebraError::VariableAbsent(_))));
        assert!(matches!(
            resultant(&MultiPoly::zero(Integers, &["x"]), &zz("x"), "x"),
            Err(AlgebraError::ZeroPolynomial)
        ));
    }

    #[test]
    fn multimodular_matches_bareiss() {
        let cases = [
            ("a*b^2 + 3*b - a^3 + 7", "b^3 - 2*a*b + a^2 - 5"),
            ("17*b^4 - a^2*b + 11*a - 1", "b^2 + a^5*b - 9"),
            ("b - a", "b^2 + a"),
            ("b", "a^3 - 1 + b^2"),
        ];
        for (f, g) in cases {
            let f = zz(f);
            let g = zz(g);
            let r1 = resultant(&f, &g, "b").unwrap();
            let r2 = resultant_zz_bivariate(&f, &g, "b").unwrap();
            assert_eq!(r1.trim_vars(), r2.trim_vars(), "{f} / {g}");
        }
    }

    #[test]
    fn euclid_matches_sylvester_mod_p() {
        let fp = PrimeField::new(10007).unwrap();
        let f = UniPoly::from_i64s(fp, &[3, -1, 4, 1, -5, 9]);
        let g = UniPoly::from_i64s(fp, &[2, 6, -5, 3]);
        assert_eq!(f.resultant(&g), resultant_univariate_sylvester(&f, &g));
        assert_eq!(g.resultant(&f), resultant_univariate_sylvester(&g, &f));
    }
}
