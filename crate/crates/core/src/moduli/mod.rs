//! Equations for the moduli of Γ-marked quadratic morphisms, and their fibers.

mod dense;
mod rational;

use std::fmt;

use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{primes, AlgebraError, Integers, MultiPoly, PrimeField, Ring, UniPoly};
use crate::dynamics::{
    iterates_at, postcritical_scheme_marked, CriticalMarking, CriticalStart, Postcritical, QuadraticMorphism,
};
use crate::mapping_scheme::{Kind, MappingScheme, SchemeClass};

pub use dense::DensePoly;
pub use rational::{eliminant, solve_fiber_rational, Eliminant};

/// Largest prime accepted by the exhaustive solver.
pub const MAX_EXHAUSTIVE_PRIME: u64 = 10_000;
/// Largest prime accepted by the brute-force oracle.
pub const MAX_ORACLE_PRIME: u64 = 200;

type ZPoly = MultiPoly<Integers>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuliError {
    #[error("scheme has {0} elements, need at least 3")]
    TooSmall(usize),
    #[error("chart not available for this scheme: {0}")]
    ChartUnavailable(String),
    #[error("elimination degenerates: {0}")]
    NeedsManualElimination(String),
    #[error("prime {0} not supported here")]
    InvalidPrime(u64),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl ModuliError {
    pub fn name(&self) -> &'static str {
        match self {
            ModuliError::TooSmall(_) => "TooSmall",
            ModuliError::ChartUnavailable(_) => "ChartUnavailable",
            ModuliError::NeedsManualElimination(_) => "NeedsManualElimination",
            ModuliError::InvalidPrime(_) => "InvalidPrime",
            ModuliError::Algebra(e) => e.name(),
        }
    }
}

/// Direct: P = 0, Q = ∞, f(∞) = 1. Swapped: P = ∞, Q = 0, f(∞) = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChartChoice {
    Direct,
    Swapped,
}

impl ChartChoice {
    /// The chart used for s: direct unless j₂ ∈ {i₁, j₁}.
    pub fn for_scheme(s: &MappingScheme) -> ChartChoice {
        let j2 = s.j_n(2);
        if j2 != s.i1() && j2 != s.j1() {
            ChartChoice::Direct
        } else {
            ChartChoice::Swapped
        }
    }

    /// Whether every Γ-marked morphism has a normal form in this chart.
    pub fn covers(&self, s: &MappingScheme) -> bool {
        let second = match self {
            ChartChoice::Direct => s.j_n(2),
            ChartChoice::Swapped => s.i_n(2),
        };
        second != s.i1() && second != s.j1()
    }

    pub fn marking(&self) -> CriticalMarking {
        match self {
            ChartChoice::Direct => CriticalMarking::Standard,
            ChartChoice::Swapped => CriticalMarking::Swapped,
        }
    }

    fn start(&self, seq: Seq) -> CriticalStart {
        match (self, seq) {
            (ChartChoice::Direct, Seq::I) | (ChartChoice::Swapped, Seq::J) => CriticalStart::Zero,
            _ => CriticalStart::Infinity,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            ChartChoice::Direct => "direct",
            ChartChoice::Swapped => "swapped",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Seq {
    I,
    J,
}

/// i_n or j_n, i.e. fⁿ(P) or fⁿ(Q).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Term {
    pub seq: Seq,
    pub n: usize,
}

impl Term {
    fn i(n: usize) -> Term {
        Term { seq: Seq::I, n }
    }
    fn j(n: usize) -> Term {
        Term { seq: Seq::J, n }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.seq {
            Seq::I => 'i',
            Seq::J => 'j',
        };
        write!(f, "{c}{}", self.n)
    }
}

/// The two generating relations of a classified scheme.
pub fn generating_relations(class: &SchemeClass) -> [(Term, Term); 2] {
    let SchemeClass { kind, l, k, n, m } = *class;
    match kind {
        Kind::A => [(Term::i(l), Term::i(k + 1)), (Term::j(n), Term::j(m + 1))],
        Kind::B => [(Term::i(l), Term::j(m + 1)), (Term::j(n), Term::i(k + 1))],
        Kind::C => [(Term::i(l), Term::j(n)), (Term::i(k), Term::i(m + 1))],
    }
}

/// One closed or open condition g′h″ − g″h′ with the two iterates it compares.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition {
    pub lhs: Term,
    pub rhs: Term,
    pub poly: ZPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuliPresentation {
    pub scheme: MappingScheme,
    pub class: SchemeClass,
    pub chart: ChartChoice,
    pub closed: [Condition; 2],
    /// Pairwise distinctness; the last entry is a − b.
    pub open: Vec<Condition>,
}

struct IterateCache {
    chart: ChartChoice,
    i: Vec<(ZPoly, ZPoly)>,
    j: Vec<(ZPoly, ZPoly)>,
}

impl IterateCache {
    fn new(chart: ChartChoice, depth: usize) -> Self {
        let build = |seq| {
            let start = chart.start(seq);
            let mut out = vec![iterates_at(start, 0)];
            for _ in 0..depth {
                let (g, h) = out.last().unwrap();
                let (a, b) =
                    (ZPoly::var(Integers, &["a", "b"], "a").unwrap(), ZPoly::var(Integers, &["a", "b"], "b").unwrap());
                let (g2, h2) = (g.square(), h.square());
                out.push((g2.add(&a.mul(&h2)), g2.add(&b.mul(&h2))));
            }
            out
        };
        IterateCache { chart, i: build(Seq::I), j: build(Seq::J) }
    }

    fn get(&self, t: Term) -> &(ZPoly, ZPoly) {
        match t.seq {
            Seq::I => &self.i[t.n],
            Seq::J => &self.j[t.n],
        }
    }

    fn condition(&self, lhs: Term, rhs: Term) -> Condition {
        let (g1, h1) = self.get(lhs);
        let (g2, h2) = self.get(rhs);
        Condition { lhs, rhs, poly: g1.mul(h2).sub(&g2.mul(h1)) }
    }
}

/// The first iterate naming each element: i_t along the i-walk, else j_t.
pub fn element_terms(s: &MappingScheme) -> Vec<Term> {
    let mut out = vec![None; s.len()];
    for (t, &x) in s.walk(s.i1()).iter().enumerate() {
        out[x].get_or_insert(Term::i(t + 1));
    }
    for (t, &x) in s.walk(s.j1()).iter().enumerate() {
        out[x].get_or_insert(Term::j(t + 1));
    }
    out.into_iter().map(|t| t.expect("generated by i1 and j1")).collect()
}

pub fn moduli_equations(s: &MappingScheme) -> Result<ModuliPresentation, ModuliError> {
    moduli_equations_in_chart(s, ChartChoice::for_scheme(s))
}

pub fn moduli_equations_in_chart(s: &MappingScheme, chart: ChartChoice) -> Result<ModuliPresentation, ModuliError> {
    if s.len() < 3 {
        return Err(ModuliError::TooSmall(s.len()));
    }
    if !chart.covers(s) {
        return Err(ModuliError::ChartUnavailable(format!("{} chart for {}", chart.as_str(), SchemeClass::of(s))));
    }
    let class = SchemeClass::of(s);
    let rels = generating_relations(&class);
    let terms = element_terms(s);
    let depth = rels.iter().flat_map(|(x, y)| [x.n, y.n]).chain(terms.iter().map(|t| t.n)).max().unwrap();
    let cache = IterateCache::new(chart, depth);
    let closed = rels.map(|(x, y)| cache.condition(x, y));
    let mut open = Vec::new();
    for x in 0..s.len() {
        for y in x + 1..s.len() {
            open.push(cache.condition(terms[x], terms[y]));
        }
    }
    let vars = ["a", "b"];
    let a_minus_b = ZPoly::var(Integers, &vars, "a").unwrap().sub(&ZPoly::var(Integers, &vars, "b").unwrap());
    open.push(Condition { lhs: Term::i(0), rhs: Term::j(0), poly: a_minus_b });
    debug_assert!(open.iter().all(|c| !c.poly.is_zero()));
    debug_assert_eq!(cache.chart, chart);
    Ok(ModuliPresentation { scheme: s.clone(), class, chart, closed, open })
}

impl ModuliPresentation {
    pub fn to_json(&self) -> Value {
        let cond = |c: &Condition| json!({"relation": format!("{} = {}", c.lhs, c.rhs), "poly": c.poly.to_string()});
        let open: Vec<Value> = self
            .open
            .iter()
            .map(|c| {
                if c.lhs.n == 0 {
                    json!({"relation": "a != b", "poly": c.poly.to_string()})
                } else {
                    json!({"relation": format!("{} != {}", c.lhs, c.rhs), "poly": c.poly.to_string()})
                }
            })
            .collect();
        json!({
            "scheme": self.scheme,
            "class": self.class,
            "chart": self.chart.as_str(),
            "closed": self.closed.iter().map(cond).collect::<Vec<_>>(),
            "open": open,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("scheme {} chart {}\n", self.class, self.chart.as_str());
        for c in &self.closed {
            out.push_str(&format!("closed {} = {}: {}\n", c.lhs, c.rhs, c.poly));
        }
        out.push_str(&format!("open conditions: {}\n", self.open.len()));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldDesc {
    Prime(u64),
    Rationals,
}

/// Certified points (a, b) of one fiber, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberSolution<E> {
    pub field: FieldDesc,
    pub points: Vec<(E, E)>,
    pub certified: bool,
    /// The polynomial in a whose roots contain every a-coordinate, when one was computed.
    pub eliminant: Option<UniPoly<Integers>>,
}

impl<E: fmt::Display> FiberSolution<E> {
    pub fn to_json(&self) -> Value {
        let pts: Vec<Value> = self.points.iter().map(|(a, b)| json!([a.to_string(), b.to_string()])).collect();
        let mut v = match self.field {
            FieldDesc::Prime(p) => json!({"p": p}),
            FieldDesc::Rationals => json!({"field": "Q"}),
        };
        v["points"] = Value::Array(pts);
        v["certified"] = json!(self.certified);
        if let Some(e) = &self.eliminant {
            v["eliminant"] = json!(MultiPoly::from_univariate(e, "a").to_string());
        }
        v
    }
}

fn check_prime(p: u64, max: u64) -> Result<PrimeField, ModuliError> {
    if p > max {
        return Err(ModuliError::InvalidPrime(p));
    }
    PrimeField::new(p).map_err(|_| ModuliError::InvalidPrime(p))
}

/// Whether f_{a,b} in the given chart has postcritical orbit marked-isomorphic to s.
pub fn certify<F: crate::algebra::Field>(
    s: &MappingScheme,
    chart: ChartChoice,
    field: &F,
    a: &F::Elem,
    b: &F::Elem,
) -> bool {
    let Ok(f) = QuadraticMorphism::chart_a(field.clone(), a.clone(), b.clone()) else {
        return false;
    };
    match postcritical_scheme_marked(&f, chart.marking(), s.len()) {
        Postcritical::Finite(o) => o.scheme.is_marked_isomorphic(s),
        Postcritical::Exceeded => false,
    }
}

/// All (a, b) ∈ 𝔽_p² on the fiber: every a is scanned, b ranges over the common roots
/// of the closed equations, then the open conditions and the orbit are checked.
pub fn solve_fiber_mod_p(pres: &ModuliPresentation, p: u64) -> Result<FiberSolution<u64>, ModuliError> {
    let k = check_prime(p, MAX_EXHAUSTIVE_PRIME)?;
    let closed: Vec<_> = pres.closed.iter().map(|c| DensePoly::new(&c.poly).reduce(&k)).collect();
    let open: Vec<_> = pres.open.iter().map(|c| DensePoly::new(&c.poly).reduce(&k)).collect();
    let mut points = Vec::new();
    for a in k.elements() {
        let e1 = closed[0].at_a(&k, a);
        let e2 = closed[1].at_a(&k, a);
        let g = e1.gcd(&e2);
        let candidates: Vec<u64> = if g.is_zero() {
            k.elements().collect()
        } else if g.degree() == Some(0) {
            continue;
        } else {
            crate::algebra::roots_mod_p(&g)?.into_iter().map(|(r, _)| r).collect()
        };
        for b in candidates {
            let ok = open.iter().all(|o| !k.is_zero(&o.eval(&k, a, b)));
            if ok && certify(&pres.scheme, pres.chart, &k, &a, &b) {
                points.push((a, b));
            }
        }
    }
    Ok(FiberSolution { field: FieldDesc::Prime(p), points, certified: true, eliminant: None })
}

/// Every morphism over 𝔽_p in normal form, kept when its orbit is marked-isomorphic to s.
/// Uses no equations. In the swapped chart the scan runs over (cx²+1)/(dx²+1) with
/// P = 0, Q = ∞, reported as (a, b) = (d, c).
pub fn brute_force_oracle(s: &MappingScheme, p: u64) -> Result<FiberSolution<u64>, ModuliError> {
    let k = check_prime(p, MAX_ORACLE_PRIME)?;
    if s.len() < 3 {
        return Err(ModuliError::TooSmall(s.len()));
    }
    let chart = ChartChoice::for_scheme(s);
    let mut points = Vec::new();
    for u in k.elements() {
        for v in k.elements() {
            if u == v {
                continue;
            }
            let f = match chart {
                ChartChoice::Direct => QuadraticMorphism::chart_a(k, u, v),
                ChartChoice::Swapped => QuadraticMorphism::chart_b(k, u, v),
            }
            .expect("u ≠ v");
            if let Postcritical::Finite(o) = postcritical_scheme_marked(&f, CriticalMarking::Standard, s.len()) {
                if o.scheme.is_marked_isomorphic(s) {
                    points.push(match chart {
                        ChartChoice::Direct => (u, v),
                        ChartChoice::Swapped => (v, u),
                    });
                }
            }
        }
    }
    points.sort_unstable();
    Ok(FiberSolution { field: FieldDesc::Prime(p), points, certified: true, eliminant: None })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRow {
    pub p: u64,
    pub count: usize,
    /// The eliminant acquires extra repeated roots mod p; `None` without an eliminant.
    pub ramified: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub class: SchemeClass,
    pub rows: Vec<CountRow>,
}

impl CountTable {
    pub fn counts(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.count).collect()
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> =
            self.rows.iter().map(|r| json!({"p": r.p, "count": r.count, "ramified": r.ramified})).collect();
        json!({"class": self.class, "rows": rows})
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{:>6}  {:>5}  {}\n", "p", "count", "ramified");
        for r in &self.rows {
            let flag = match r.ramified {
                Some(true) => "yes",
                Some(false) => "no",
                None => "-",
            };
            out.push_str(&format!("{:>6}  {:>5}  {}\n", r.p, r.count, flag));
        }
        out
    }
}

/// Degree of gcd(f, f′) over ℚ, read off modulo a few large primes.
fn repeated_degree_over_q(f: &UniPoly<Integers>) -> usize {
    primes::large_primes()
        .take(3)
        .filter_map(|q| {
            let k = PrimeField::new(q).ok()?;
            let fq = reduce_uni(f, &k);
            (fq.degree() == f.degree()).then(|| fq.gcd(&fq.derivative()).degree().unwrap_or(0))
        })
        .min()
        .unwrap_or(0)
}

fn reduce_uni(f: &UniPoly<Integers>, k: &PrimeField) -> UniPoly<PrimeField> {
    f.map(*k, |c| k.from_int(c))
}

/// Flag p when the eliminant has more repeated roots mod p than over ℚ.
pub fn ramification_flag(eliminant: &UniPoly<Integers>, p: u64) -> Option<bool> {
    let k = PrimeField::new(p).ok()?;
    let fp = reduce_uni(eliminant, &k);
    if fp.is_zero() {
        return Some(true);
    }
    let here = fp.gcd(&fp.derivative()).degree().unwrap_or(0);
    Some(here > repeated_degree_over_q(eliminant))
}

/// Certified 𝔽_p counts per prime, in input order.
pub fn count_table(s: &MappingScheme, ps: &[u64]) -> Result<CountTable, ModuliError> {
    let pres = moduli_equations(s)?;
    let elim = if ps.is_empty() { None } else { eliminant(&pres).ok().map(|e| e.poly) };
    let rows = ps
        .par_iter()
        .map(|&p| {
            let sol = solve_fiber_mod_p(&pres, p)?;
            let ramified = elim.as_ref().and_then(|e| ramification_flag(e, p));
            Ok(CountRow { p, count: sol.points.len(), ramified })
        })
        .collect::<Result<Vec<_>, ModuliError>>()?;
    Ok(CountTable { class: pres.class, rows })
}

#[cfg(test)]
mod tests;
