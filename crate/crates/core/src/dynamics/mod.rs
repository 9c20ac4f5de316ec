//! Quadratic morphisms of ℙ¹ with critical points 0 and ∞.

mod families;
mod iterate;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::algebra::Field;
use crate::mapping_scheme::MappingScheme;

pub use families::{recursion_family, Family, MAX_FAMILY_DEPTH};
pub use iterate::{iterate_polys, iterates_at, CriticalStart, MAX_ITERATE_DEPTH};

/// Orbits longer than this are reported as `Exceeded` unless a bound is given.
pub const DEFAULT_MAX_ORBIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DynamicsError {
    #[error("degenerate coefficients: {0}")]
    Degenerate(String),
    #[error("depth {0} outside the supported range")]
    DepthOutOfRange(usize),
    #[error("point outside the gluing domain: {0}")]
    OutsideGluingDomain(String),
    #[error("orbit of 0 did not close within {0} steps")]
    InfiniteOrbit(usize),
}

impl DynamicsError {
    pub fn name(&self) -> &'static str {
        match self {
            DynamicsError::Degenerate(_) => "DegenerateMorphism",
            DynamicsError::DepthOutOfRange(_) => "DepthOutOfRange",
            DynamicsError::OutsideGluingDomain(_) => "OutsideGluingDomain",
            DynamicsError::InfiniteOrbit(_) => "InfiniteOrbit",
        }
    }
}

/// A point of ℙ¹, normalized to (x:1) or (1:0).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProjPoint<E> {
    Finite(E),
    Infinity,
}

impl<E> ProjPoint<E> {
    pub fn is_infinity(&self) -> bool {
        matches!(self, ProjPoint::Infinity)
    }

    pub fn finite(&self) -> Option<&E> {
        match self {
            ProjPoint::Finite(x) => Some(x),
            ProjPoint::Infinity => None,
        }
    }

    pub fn map<F>(&self, f: impl FnOnce(&E) -> F) -> ProjPoint<F> {
        match self {
            ProjPoint::Finite(x) => ProjPoint::Finite(f(x)),
            ProjPoint::Infinity => ProjPoint::Infinity,
        }
    }
}

impl<E: fmt::Display> fmt::Display for ProjPoint<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjPoint::Finite(x) => write!(f, "{x}"),
            ProjPoint::Infinity => write!(f, "inf"),
        }
    }
}

/// Normalize (x:y) with (x, y) ≠ (0, 0).
pub fn normalize<F: Field>(field: &F, x: &F::Elem, y: &F::Elem) -> ProjPoint<F::Elem> {
    if field.is_zero(y) {
        ProjPoint::Infinity
    } else {
        ProjPoint::Finite(field.div(x, y).expect("nonzero"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Chart<E> {
    /// (x² + a)/(x² + b)
    A { a: E, b: E },
    /// (c x² + 1)/(d x² + 1)
    B { c: E, d: E },
    /// (α t x² + 1)/(β t x² + 1)
    T { alpha: E, beta: E, t: E },
}

/// f(x) = (p x² + q)/(r x² + s) in one of the normal-form charts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticMorphism<F: Field> {
    field: F,
    chart: Chart<F::Elem>,
    coeffs: [F::Elem; 4],
}

impl<F: Field> QuadraticMorphism<F> {
    pub fn new(field: F, chart: Chart<F::Elem>) -> Result<Self, DynamicsError> {
        let k = &field;
        let coeffs = match &chart {
            Chart::A { a, b } => {
                if a == b {
                    return Err(DynamicsError::Degenerate("a = b".into()));
                }
                [k.one(), a.clone(), k.one(), b.clone()]
            }
            Chart::B { c, d } => {
                if c == d {
                    return Err(DynamicsError::Degenerate("c = d".into()));
                }
                [c.clone(), k.one(), d.clone(), k.one()]
            }
            Chart::T { alpha, beta, t } => {
                if k.is_zero(t) || alpha == beta {
                    return Err(DynamicsError::Degenerate("t = 0 or α = β".into()));
                }
                [k.mul(alpha, t), k.one(), k.mul(beta, t), k.one()]
            }
        };
        Ok(QuadraticMorphism { field, chart, coeffs })
    }

    pub fn chart_a(field: F, a: F::Elem, b: F::Elem) -> Result<Self, DynamicsError> {
        Self::new(field, Chart::A { a, b })
    }

    pub fn chart_b(field: F, c: F::Elem, d: F::Elem) -> Result<Self, DynamicsError> {
        Self::new(field, Chart::B { c, d })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn chart(&self) -> &Chart<F::Elem> {
        &self.chart
    }

    /// (p, q, r, s) with f = (p x² + q y² : r x² + s y²).
    pub fn coefficients(&self) -> &[F::Elem; 4] {
        &self.coeffs
    }

    pub fn apply(&self, pt: &ProjPoint<F::Elem>) -> ProjPoint<F::Elem> {
        let k = &self.field;
        let [p, q, r, s] = &self.coeffs;
        match pt {
            ProjPoint::Infinity => normalize(k, p, r),
            ProjPoint::Finite(x) => {
                let x2 = k.mul(x, x);
                let num = k.add(&k.mul(p, &x2), q);
                let den = k.add(&k.mul(r, &x2), s);
                normalize(k, &num, &den)
            }
        }
    }

    pub fn iterate(&self, pt: &ProjPoint<F::Elem>, n: usize) -> ProjPoint<F::Elem> {
        (0..n).fold(pt.clone(), |x, _| self.apply(&x))
    }

    /// The covering involution x ↦ −x.
    pub fn sigma(&self, pt: &ProjPoint<F::Elem>) -> ProjPoint<F::Elem> {
        pt.map(|x| self.field.neg(x))
    }

    /// Forward orbit of `pt` (including `pt`) up to the first repetition, capped at `limit` points.
    pub fn orbit(&self, pt: &ProjPoint<F::Elem>, limit: usize) -> Vec<ProjPoint<F::Elem>> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        let mut x = pt.clone();
        while out.len() < limit && seen.insert(x.clone()) {
            out.push(x.clone());
            x = self.apply(&x);
        }
        out
    }

    /// Pair k > ℓ > 0 with f^k(0) = −f^ℓ(0).
    pub fn find_sign_relation(&self) -> Result<(usize, usize), DynamicsError> {
        let zero = ProjPoint::Finite(self.field.zero());
        let mut index = HashMap::new();
        let mut x = zero;
        for n in 0..=DEFAULT_MAX_ORBIT {
            if let Some(&m) = index.get(&x) {
                // The first repetition has the smallest possible m.
                return Ok(match m {
                    0 => (2 * n, n),
                    1 => unreachable!("f^n(0) = f(0) forces f^(n-1)(0) = 0"),
                    _ => (n - 1, m - 1),
                });
            }
            index.insert(x.clone(), n);
            x = self.apply(&x);
        }
        Err(DynamicsError::InfiniteOrbit(DEFAULT_MAX_ORBIT))
    }
}

/// Which critical point plays the role of P (the i-sequence) and which Q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CriticalMarking {
    /// P = 0, Q = ∞.
    Standard,
    /// P = ∞, Q = 0.
    Swapped,
}

impl CriticalMarking {
    pub fn points<E>(&self, zero: E) -> (ProjPoint<E>, ProjPoint<E>) {
        match self {
            CriticalMarking::Standard => (ProjPoint::Finite(zero), ProjPoint::Infinity),
            CriticalMarking::Swapped => (ProjPoint::Infinity, ProjPoint::Finite(zero)),
        }
    }
}

/// A finite postcritical orbit with its scheme; `points[x]` is the point of element x.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PostcriticalOrbit<E> {
    pub scheme: MappingScheme,
    pub points: Vec<ProjPoint<E>>,
}

impl<E> PostcriticalOrbit<E> {
    pub fn point_of(&self, name: &str) -> Option<&ProjPoint<E>> {
        self.scheme.index(name).map(|i| &self.points[i])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Postcritical<E> {
    Finite(PostcriticalOrbit<E>),
    Exceeded,
}

/// The strict forward orbits of f(P), f(Q) as a mapping scheme, P = 0 and Q = ∞.
pub fn postcritical_scheme<F: Field>(f: &QuadraticMorphism<F>, max_size: usize) -> Postcritical<F::Elem> {
    postcritical_scheme_marked(f, CriticalMarking::Standard, max_size)
}

pub fn postcritical_scheme_marked<F: Field>(
    f: &QuadraticMorphism<F>,
    marking: CriticalMarking,
    max_size: usize,
) -> Postcritical<F::Elem> {
    let (p, q) = marking.points(f.field().zero());
    let mut pts: Vec<ProjPoint<F::Elem>> = Vec::new();
    let mut index: HashMap<ProjPoint<F::Elem>, usize> = HashMap::new();
    let mut tau: Vec<usize> = Vec::new();
    let mut starts = [0usize; 2];
    for (slot, crit) in [p, q].iter().enumerate() {
        let mut x = f.apply(crit);
        let mut prev: Option<usize> = None;
        loop {
            let id = match index.get(&x) {
                Some(&id) => {
                    if let Some(pr) = prev {
                        tau[pr] = id;
                    }
                    if prev.is_none() {
                        starts[slot] = id;
                    }
                    break;
                }
                None => {
                    if pts.len() >= max_size {
                        return Postcritical::Exceeded;
                    }
                    pts.push(x.clone());
                    tau.push(usize::MAX);
                    index.insert(x.clone(), pts.len() - 1);
                    pts.len() - 1
                }
            };
            match prev {
                Some(pr) => tau[pr] = id,
                None => starts[slot] = id,
            }
            prev = Some(id);
            x = f.apply(&x);
        }
    }
    let names = (0..pts.len()).map(|x| format!("x{x}")).collect();
    let raw =
        MappingScheme::from_parts(names, tau, starts[0], starts[1]).expect("a postcritical orbit is a mapping scheme");
    let (canon, map) = raw.canonical_map();
    let mut points = vec![ProjPoint::Infinity; pts.len()];
    for (x, pt) in pts.into_iter().enumerate() {
        points[map[x]] = pt;
    }
    Postcritical::Finite(PostcriticalOrbit { scheme: canon, points })
}

/// (c, d) ↦ (d²/c³, d/c²), from chart B to chart A.
pub fn chart_glue<F: Field>(field: &F, c: &F::Elem, d: &F::Elem) -> Result<(F::Elem, F::Elem), DynamicsError> {
    if field.is_zero(c) || field.is_zero(d) || c == d {
        return Err(DynamicsError::OutsideGluingDomain("need c, d nonzero and c ≠ d".into()));
    }
    let c2 = field.mul(c, c);
    let c3 = field.mul(&c2, c);
    let a = field.div(&field.mul(d, d), &c3).expect("c ≠ 0");
    let b = field.div(d, &c2).expect("c ≠ 0");
    Ok((a, b))
}

/// Inverse of [`chart_glue`]: (a, b) ↦ (a/b², a²/b³).
pub fn chart_unglue<F: Field>(field: &F, a: &F::Elem, b: &F::Elem) -> Result<(F::Elem, F::Elem), DynamicsError> {
    if field.is_zero(a) || field.is_zero(b) || a == b {
        return Err(DynamicsError::OutsideGluingDomain("need a, b nonzero and a ≠ b".into()));
    }
    let b2 = field.mul(b, b);
    let b3 = field.mul(&b2, b);
    let c = field.div(a, &b2).expect("b ≠ 0");
    let d = field.div(&field.mul(a, a), &b3).expect("b ≠ 0");
    Ok((c, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Rationals, Ring};
    use crate::mapping_scheme::{Kind, SchemeClass};
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn fin(n: i64) -> ProjPoint<BigRational> {
        ProjPoint::Finite(q(n))
    }

    #[test]
    fn apply_examples() {
        let f = QuadraticMorphism::chart_a(Rationals, q(-4), q(2)).unwrap();
        assert_eq!(f.apply(&fin(0)), fin(-2));
        assert_eq!(f.apply(&ProjPoint::Infinity), fin(1));
        assert_eq!(f.apply(&fin(1)), fin(-1));
        assert!(QuadraticMorphism::chart_a(Rationals, q(1), q(1)).is_err());
    }

    #[test]
    fn not_all_occur_orbit() {
        let f = QuadraticMorphism::chart_a(Rationals, q(-4), q(2)).unwrap();
        let Postcritical::Finite(orbit) = postcritical_scheme(&f, 10) else { panic!() };
        assert_eq!(SchemeClass::of(&orbit.scheme), SchemeClass::new(Kind::A, 1, 2, 2, 2));
        assert_eq!(orbit.point_of("i1"), Some(&fin(-2)));
        assert_eq!(orbit.point_of("i2"), Some(&fin(0)));
        assert_eq!(orbit.point_of("j1"), Some(&fin(1)));
        assert_eq!(orbit.point_of("j2"), Some(&fin(-1)));
    }

    #[test]
    fn ramified_lift_over_sqrt5() {
        use crate::algebra::QuadraticField;
        let k = QuadraticField::new(5.into()).unwrap();
        // a = (-3 + √5)/2 is a root of a² + 3a + 1.
        let half = BigRational::new(1.into(), 2.into());
        let a = k.elem(q(-3) * &half, half.clone());
        assert!(k.is_zero(&k.add(&k.add(&k.mul(&a, &a), &k.mul(&k.from_i64(3), &a)), &k.one())));
        let f = QuadraticMorphism::chart_a(k.clone(), a.clone(), k.zero()).unwrap();
        let Postcritical::Finite(orbit) = postcritical_scheme(&f, 10) else { panic!() };
        assert_eq!(SchemeClass::of(&orbit.scheme), SchemeClass::new(Kind::B, 1, 1, 1, 3));
        assert_eq!(orbit.point_of("i1"), Some(&ProjPoint::Infinity));
        assert_eq!(orbit.point_of("j1"), Some(&ProjPoint::Finite(k.one())));
        assert_eq!(orbit.point_of("j2"), Some(&ProjPoint::Finite(k.add(&a, &k.one()))));
        assert_eq!(orbit.point_of("j3"), Some(&ProjPoint::Finite(k.zero())));
    }

    #[test]
    fn critical_fibers_are_single_points() {
        use crate::algebra::PrimeField;
        use rand::{Rng, SeedableRng};
        let k = PrimeField::new(13).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut done = 0;
        while done < 50 {
            let (a, b) = (rng.gen_range(0..13u64), rng.gen_range(0..13u64));
            let Ok(f) = QuadraticMorphism::chart_a(k, a, b) else { continue };
            done += 1;
            let zero = ProjPoint::Finite(0);
            let (f0, finf) = (f.apply(&zero), f.apply(&ProjPoint::Infinity));
            assert_ne!(f0, finf);
            let pts = k.elements().map(ProjPoint::Finite).chain([ProjPoint::Infinity]);
            for r in pts {
                assert_eq!(f.apply(&r) == f0, r == zero);
                assert_eq!(f.apply(&r) == finf, r.is_infinity());
            }
        }
    }

    #[test]
    fn exceeded_for_long_orbit() {
        // x²/(x²+1): ∞ ↦ 1 ↦ 1/2 ↦ 1/5 ↦ … never repeats over ℚ.
        let f = QuadraticMorphism::chart_a(Rationals, q(0), q(1)).unwrap();
        assert_eq!(postcritical_scheme(&f, 10), Postcritical::Exceeded);
    }

    #[test]
    fn sign_relation() {
        let f = QuadraticMorphism::chart_a(Rationals, q(-4), q(2)).unwrap();
        assert_eq!(f.find_sign_relation().unwrap(), (4, 2));
        let g = QuadraticMorphism::chart_a(Rationals, q(0), q(3)).unwrap();
        assert_eq!(g.find_sign_relation().unwrap(), (2, 1));
    }

    #[test]
    fn glue_examples() {
        let k = Rationals;
        assert!(chart_glue(&k, &q(1), &q(1)).is_err());
        let (a, b) = chart_glue(&k, &q(2), &q(1)).unwrap();
        assert_eq!(
            (a.clone(), b.clone()),
            (BigRational::new(1.into(), 8.into()), BigRational::new(1.into(), 4.into()))
        );
        assert_eq!(chart_unglue(&k, &a, &b).unwrap(), (q(2), q(1)));
        // The glued morphism is the conjugate of f_B by x ↦ (d/c) x.
        let fb = QuadraticMorphism::chart_b(k, q(2), q(1)).unwrap();
        let fa = QuadraticMorphism::chart_a(k, a, b).unwrap();
        let mu = BigRational::new(1.into(), 2.into());
        for x in -5..5 {
            let y = fin(x);
            let lhs = fa.apply(&y.map(|v| k.mul(v, &mu)));
            let rhs = fb.apply(&y).map(|v| k.mul(v, &mu));
            assert_eq!(lhs, rhs);
        }
    }
}
