use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{certify, FiberSolution, FieldDesc, ModuliError, ModuliPresentation, ZPoly};
use crate::algebra::{rational_roots, resultant_zz_bivariate, Integers, MultiPoly, Rationals, UniPoly};

/// The closed equations with content and powers of a − b removed, and a polynomial
/// in a vanishing at the a-coordinate of every solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eliminant {
    pub closed: [ZPoly; 2],
    pub poly: UniPoly<Integers>,
}

fn strip(e: &ZPoly) -> Result<ZPoly, ModuliError> {
    if e.is_zero() {
        return Err(ModuliError::NeedsManualElimination("a closed equation vanishes identically".into()));
    }
    let vars = ["a", "b"];
    let d = ZPoly::var(Integers, &vars, "a").unwrap().sub(&ZPoly::var(Integers, &vars, "b").unwrap());
    let mut e = e.primitive_part();
    while let Some(q) = e.div_exact(&d) {
        e = q;
    }
    Ok(e.primitive_part())
}

fn b_free(e: &ZPoly) -> bool {
    e.degree_in("b").unwrap_or(0) == 0
}

fn in_a(e: &ZPoly) -> UniPoly<Integers> {
    e.specialize("b", &BigInt::zero()).to_univariate("a").expect("only a remains")
}

fn to_q(f: &UniPoly<Integers>) -> UniPoly<Rationals> {
    f.map(Rationals, |c| BigRational::from_integer(c.clone()))
}

/// Clear denominators and content.
fn to_z(f: &UniPoly<Rationals>) -> UniPoly<Integers> {
    let l = f.coeffs().iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let cs: Vec<BigInt> = f.coeffs().iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect();
    let g = cs.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    let g = if g.is_zero() { BigInt::one() } else { g };
    UniPoly::new(Integers, cs.into_iter().map(|c| c / &g).collect())
}

pub fn eliminant(pres: &ModuliPresentation) -> Result<Eliminant, ModuliError> {
    let e1 = strip(&pres.closed[0].poly)?;
    let e2 = strip(&pres.closed[1].poly)?;
    let poly = match (b_free(&e1), b_free(&e2)) {
        (true, true) => {
            let g = to_q(&in_a(&e1)).gcd(&to_q(&in_a(&e2)));
            if g.degree().unwrap_or(0) > 0 {
                return Err(ModuliError::NeedsManualElimination(
                    "both closed equations are free of b and share a factor".into(),
                ));
            }
            UniPoly::constant(Integers, BigInt::one())
        }
        (true, false) => in_a(&e1),
        (false, true) => in_a(&e2),
        (false, false) => {
            let r = resultant_zz_bivariate(&e1, &e2, "b")?;
            if r.is_zero() {
                return Err(ModuliError::NeedsManualElimination("resultant in b vanishes identically".into()));
            }
            r.primitive_part().to_univariate("a").map_err(ModuliError::from)?
        }
    };
    Ok(Eliminant { closed: [e1, e2], poly })
}

fn at_a(e: &ZPoly, a: &BigRational) -> UniPoly<Rationals> {
    let q: MultiPoly<Rationals> = e.map(Rationals, |c| BigRational::from_integer(c.clone()));
    q.specialize("a", a).to_univariate("b").expect("only b remains")
}

/// Rational points with a-coordinate of height at most `height`.
pub fn solve_fiber_rational(pres: &ModuliPresentation, height: u64) -> Result<FiberSolution<BigRational>, ModuliError> {
    let elim = eliminant(pres)?;
    let k = Rationals;
    let open: Vec<MultiPoly<Rationals>> =
        pres.open.iter().map(|c| c.poly.map(k, |x| BigRational::from_integer(x.clone()))).collect();
    let mut points = Vec::new();
    let a_roots = if elim.poly.degree().unwrap_or(0) == 0 { Vec::new() } else { rational_roots(&elim.poly, height)? };
    for a in a_roots {
        let g = at_a(&elim.closed[0], &a).gcd(&at_a(&elim.closed[1], &a));
        if g.is_zero() {
            return Err(ModuliError::NeedsManualElimination(format!("both closed equations vanish at a = {a}")));
        }
        if g.degree() == Some(0) {
            continue;
        }
        for b in rational_roots(&to_z(&g), height)? {
            let ok =
                open.iter().all(|o| !o.eval_named(&[("a", a.clone()), ("b", b.clone())]).constant_term().is_zero());
            if ok && certify(&pres.scheme, pres.chart, &k, &a, &b) {
                points.push((a.clone(), b));
            }
        }
    }
    points.sort();
    Ok(FiberSolution { field: FieldDesc::Rationals, points, certified: true, eliminant: Some(elim.poly) })
}
