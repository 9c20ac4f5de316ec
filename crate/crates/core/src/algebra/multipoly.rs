//! Sparse multivariate polynomials over a ring object.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ring::{Integers, Rationals, Ring};
use super::unipoly::UniPoly;
use super::AlgebraError;

pub type Exponents = Vec<u32>;

/// Variables are kept sorted by name; exponent vectors follow that order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly<R: Ring> {
    ring: R,
    vars: Arc<[String]>,
    terms: BTreeMap<Exponents, R::Elem>,
}

fn sorted_vars(names: &[&str]) -> Arc<[String]> {
    let mut v: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    v.sort();
    v.dedup();
    v.into()
}

fn graded_desc(a: &Exponents, b: &Exponents) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    db.cmp(&da).then_with(|| b.cmp(a))
}

impl<R: Ring> MultiPoly<R> {
    pub fn zero(ring: R, vars: &[&str]) -> Self {
        MultiPoly { ring, vars: sorted_vars(vars), terms: BTreeMap::new() }
    }

    pub fn constant(ring: R, vars: &[&str], c: R::Elem) -> Self {
        let mut p = Self::zero(ring, vars);
        let n = p.vars.len();
        p.insert_term(vec![0; n], c);
        p
    }

    pub fn one(ring: R, vars: &[&str]) -> Self {
        let c = ring.one();
        Self::constant(ring, vars, c)
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(ring: R, vars: &[&str], name: &str) -> Result<Self, AlgebraError> {
        let mut p = Self::zero(ring, vars);
        let idx = p.var_index(name).ok_or_else(|| AlgebraError::VariableAbsent(name.into()))?;
        let mut e = vec![0; p.vars.len()];
        e[idx] = 1;
        let one = p.ring.one();
        p.insert_term(e, one);
        Ok(p)
    }

    pub fn from_terms(ring: R, vars: &[&str], terms: impl IntoIterator<Item = (Exponents, R::Elem)>) -> Self {
        // Exponents are given in the order of `vars`, which need not be sorted.
        let mut p = Self::zero(ring, vars);
        let perm: Vec<usize> = vars.iter().map(|v| p.var_index(v).unwrap()).collect();
        for (e, c) in terms {
            let mut ee = vec![0; p.vars.len()];
            for (i, x) in e.into_iter().enumerate() {
                ee[perm[i]] += x;
            }
            p.add_term(ee, c);
        }
        p
    }

    fn with_parts(ring: R, vars: Arc<[String]>, terms: BTreeMap<Exponents, R::Elem>) -> Self {
        MultiPoly { ring, vars, terms }
    }

    fn insert_term(&mut self, e: Exponents, c: R::Elem) {
        if !self.ring.is_zero(&c) {
            self.terms.insert(e, c);
        }
    }

    fn add_term(&mut self, e: Exponents, c: R::Elem) {
        if self.ring.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let s = self.ring.add(old, &c);
                if self.ring.is_zero(&s) {
                    self.terms.remove(&e);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &R::Elem)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_term(&self) -> R::Elem {
        let z = vec![0; self.vars.len()];
        self.terms.get(&z).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn coeff(&self, e: &[u32]) -> R::Elem {
        self.terms.get(e).cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Degree in one variable; `None` for the zero polynomial.
    pub fn degree_in(&self, name: &str) -> Option<u32> {
        let i = self.var_index(name);
        self.terms.keys().map(|e| i.map_or(0, |i| e[i])).max()
    }

    /// Variables that actually occur.
    pub fn support_vars(&self) -> Vec<String> {
        (0..self.vars.len()).filter(|&i| self.terms.keys().any(|e| e[i] > 0)).map(|i| self.vars[i].clone()).collect()
    }

    /// Re-express over a superset of variables.
    pub fn extend_vars(&self, vars: &[&str]) -> Self {
        let mut all: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        all.extend_from_slice(vars);
        let target = sorted_vars(&all);
        if target == self.vars {
            return self.clone();
        }
        let map: Vec<usize> = self.vars.iter().map(|v| target.iter().position(|t| t == v).unwrap()).collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ee = vec![0; target.len()];
                for (i, &x) in e.iter().enumerate() {
                    ee[map[i]] = x;
                }
                (ee, c.clone())
            })
            .collect();
        Self::with_parts(self.ring.clone(), target, terms)
    }

    /// Drop variables that do not occur.
    pub fn trim_vars(&self) -> Self {
        let keep = self.support_vars();
        let idx: Vec<usize> = keep.iter().map(|v| self.var_index(v).unwrap()).collect();
        let terms = self.terms.iter().map(|(e, c)| (idx.iter().map(|&i| e[i]).collect(), c.clone())).collect();
        Self::with_parts(self.ring.clone(), keep.into(), terms)
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let ov: Vec<&str> = other.vars.iter().map(|s| s.as_str()).collect();
        let sv: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        (self.extend_vars(&ov), other.extend_vars(&sv))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.vars != other.vars {
            let (a, b) = self.aligned(other);
            return a.add(&b);
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), self.ring.neg(c))).collect();
        Self::with_parts(self.ring.clone(), self.vars.clone(), terms)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let mut out = Self::with_parts(self.ring.clone(), self.vars.clone(), BTreeMap::new());
        for (e, x) in &self.terms {
            out.insert_term(e.clone(), self.ring.mul(x, c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.vars != other.vars {
            let (a, b) = self.aligned(other);
            return a.mul(&b);
        }
        let r = &self.ring;
        let mut acc: HashMap<Exponents, R::Elem> = HashMap::with_capacity(self.terms.len() * other.terms.len() / 2 + 1);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                let prod = r.mul(c1, c2);
                match acc.get_mut(&e) {
                    Some(v) => *v = r.add(v, &prod),
                    None => {
                        acc.insert(e, prod);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !r.is_zero(c)).collect();
        Self::with_parts(r.clone(), self.vars.clone(), terms)
    }

    /// Cross terms once, doubled.
    pub fn square(&self) -> Self {
        let r = &self.ring;
        let terms: Vec<(&Exponents, &R::Elem)> = self.terms.iter().collect();
        let mut acc: HashMap<Exponents, R::Elem> = HashMap::with_capacity(terms.len() * terms.len() / 4 + 1);
        let mut bump = |e: Exponents, x: R::Elem| match acc.get_mut(&e) {
            Some(v) => *v = r.add(v, &x),
            None => {
                acc.insert(e, x);
            }
        };
        for (i, (e1, c1)) in terms.iter().enumerate() {
            bump(e1.iter().map(|x| 2 * x).collect(), r.mul(c1, c1));
            for (e2, c2) in &terms[i + 1..] {
                let prod = r.mul(c1, c2);
                bump(e1.iter().zip(e2.iter()).map(|(x, y)| x + y).collect(), r.add(&prod, &prod));
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !r.is_zero(c)).collect();
        Self::with_parts(r.clone(), self.vars.clone(), terms)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::with_parts(self.ring.clone(), self.vars.clone(), BTreeMap::new());
        acc.insert_term(vec![0; self.vars.len()], self.ring.one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// Substitute a constant for one variable; the variable is removed.
    pub fn specialize(&self, name: &str, value: &R::Elem) -> Self {
        let Some(i) = self.var_index(name) else {
            return self.clone();
        };
        let r = &self.ring;
        let vars: Vec<String> = self.vars.iter().filter(|v| *v != name).cloned().collect();
        let mut out = Self::with_parts(r.clone(), vars.into(), BTreeMap::new());
        let mut powers: Vec<R::Elem> = vec![r.one()];
        for (e, c) in &self.terms {
            let k = e[i] as usize;
            while powers.len() <= k {
                let next = r.mul(powers.last().unwrap(), value);
                powers.push(next);
            }
            let mut ee = e.clone();
            ee.remove(i);
            out.add_term(ee, r.mul(c, &powers[k]));
        }
        out
    }

    /// Substitute constants for all variables, given in sorted-variable order.
    pub fn eval(&self, values: &[R::Elem]) -> R::Elem {
        assert_eq!(values.len(), self.vars.len(), "one value per variable");
        let r = &self.ring;
        let mut acc = r.zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in values.iter().zip(e) {
                if k > 0 {
                    t = r.mul(&t, &r.pow(x, k as u64));
                }
            }
            acc = r.add(&acc, &t);
        }
        acc
    }

    /// Substitute constants for the named variables.
    pub fn eval_named(&self, values: &[(&str, R::Elem)]) -> Self {
        values.iter().fold(self.clone(), |p, (n, v)| p.specialize(n, v))
    }

    /// Coefficients as a polynomial in `name`: entry k is the coefficient of name^k.
    pub fn coefficients_in(&self, name: &str) -> Vec<Self> {
        let Some(i) = self.var_index(name) else {
            return vec![self.clone()];
        };
        let vars: Arc<[String]> = self.vars.iter().filter(|v| *v != name).cloned().collect::<Vec<_>>().into();
        let deg = self.degree_in(name).unwrap_or(0) as usize;
        let mut out: Vec<Self> =
            (0..=deg).map(|_| Self::with_parts(self.ring.clone(), vars.clone(), BTreeMap::new())).collect();
        if self.is_zero() {
            return out;
        }
        for (e, c) in &self.terms {
            let mut ee = e.clone();
            let k = ee.remove(i) as usize;
            out[k].insert_term(ee, c.clone());
        }
        out
    }

    /// Inverse of `coefficients_in`.
    pub fn from_coefficients_in(name: &str, coeffs: &[Self]) -> Self {
        let first = coeffs.first().expect("at least one coefficient");
        let mut names: Vec<&str> = first.vars.iter().map(|s| s.as_str()).collect();
        names.push(name);
        let target = sorted_vars(&names);
        let idx = target.iter().position(|v| v == name).unwrap();
        let mut out = Self::with_parts(first.ring.clone(), target, BTreeMap::new());
        for (k, c) in coeffs.iter().enumerate() {
            assert_eq!(c.vars, first.vars, "coefficients share variables");
            for (e, x) in &c.terms {
                let mut ee = e.clone();
                ee.insert(idx, k as u32);
                out.insert_term(ee, x.clone());
            }
        }
        out
    }

    /// Leading coefficient in `name`, as a polynomial in the others.
    pub fn lc_in(&self, name: &str) -> Self {
        self.coefficients_in(name).pop().expect("nonempty")
    }

    /// View as a univariate polynomial in `name`; fails if another variable occurs.
    pub fn to_univariate(&self, name: &str) -> Result<UniPoly<R>, AlgebraError> {
        let support = self.support_vars();
        if support.iter().any(|v| v != name) {
            return Err(AlgebraError::NotUnivariate(self.to_string()));
        }
        let i = self.var_index(name);
        let deg = self.degree_in(name).unwrap_or(0) as usize;
        let mut cs = vec![self.ring.zero(); if self.is_zero() { 0 } else { deg + 1 }];
        for (e, c) in &self.terms {
            let k = i.map_or(0, |i| e[i]) as usize;
            cs[k] = c.clone();
        }
        Ok(UniPoly::new(self.ring.clone(), cs))
    }

    /// Univariate view when exactly one variable (or none) occurs.
    pub fn as_univariate(&self) -> Result<(String, UniPoly<R>), AlgebraError> {
        let support = self.support_vars();
        match support.len() {
            0 => {
                let name = self.vars.first().cloned().unwrap_or_else(|| "x".into());
                Ok((name.clone(), self.to_univariate(&name)?))
            }
            1 => Ok((support[0].clone(), self.to_univariate(&support[0])?)),
            _ => Err(AlgebraError::NotUnivariate(self.to_string())),
        }
    }

    pub fn from_univariate(p: &UniPoly<R>, name: &str) -> Self {
        let mut out = Self::zero(p.ring().clone(), &[name]);
        for (k, c) in p.coeffs().iter().enumerate() {
            out.insert_term(vec![k as u32], c.clone());
        }
        out
    }

    /// Coefficient-wise image in another ring.
    pub fn map<S: Ring>(&self, target: S, f: impl Fn(&R::Elem) -> S::Elem) -> MultiPoly<S> {
        let mut out = MultiPoly::with_parts(target, self.vars.clone(), BTreeMap::new());
        for (e, c) in &self.terms {
            let v = f(c);
            out.insert_term(e.clone(), v);
        }
        out
    }

    /// Lex-largest term.
    fn leading_term(&self) -> Option<(&Exponents, &R::Elem)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if self.vars != d.vars {
            let (a, b) = self.aligned(d);
            return a.div_exact(&b);
        }
        let (de, dc) = d.leading_term()?;
        let r = &self.ring;
        let mut rem = self.clone();
        let mut q = Self::with_parts(r.clone(), self.vars.clone(), BTreeMap::new());
        while let Some((e, c)) = rem.leading_term() {
            if e.iter().zip(de).any(|(x, y)| x < y) {
                return None;
            }
            let qc = r.div_exact(c, dc)?;
            let qe: Exponents = e.iter().zip(de).map(|(x, y)| x - y).collect();
            for (e2, c2) in &d.terms {
                let te: Exponents = qe.iter().zip(e2).map(|(x, y)| x + y).collect();
                rem.add_term(te, r.neg(&r.mul(&qc, c2)));
            }
            q.insert_term(qe, qc);
        }
        Some(q)
    }

    /// Terms sorted in graded-lex descending order.
    pub fn sorted_terms(&self) -> Vec<(&Exponents, &R::Elem)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|a, b| graded_desc(a.0, b.0));
        ts
    }
}

impl<R: Ring> fmt::Display for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = self.ring.is_negative(c);
            let abs = if negative { self.ring.neg(c) } else { c.clone() };
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { self.vars[i].clone() } else { format!("{}^{}", self.vars[i], k) })
                .collect();
            let coeff = self.ring.format(&abs);
            if mono.is_empty() {
                write!(f, "{coeff}")?;
            } else if self.ring.is_one(&abs) {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", coeff, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl MultiPoly<Integers> {
    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide by the content and make the leading (graded-lex) coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        let lead = self.sorted_terms()[0].1.clone();
        if lead.is_negative() {
            c = -c;
        }
        let terms = self.terms.iter().map(|(e, x)| (e.clone(), x / &c)).collect();
        Self::with_parts(Integers, self.vars.clone(), terms)
    }

    /// Sum of absolute values of the coefficients.
    pub fn norm1(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).sum()
    }

    pub fn parse(s: &str) -> Result<Self, AlgebraError> {
        let q = MultiPoly::<Rationals>::parse(s)?;
        let mut terms = Vec::new();
        for (e, c) in q.terms() {
            if !c.is_integer() {
                return Err(AlgebraError::Parse(format!("non-integer coefficient {c}")));
            }
            terms.push((e.clone(), c.to_integer()));
        }
        Ok(Self::with_parts(Integers, q.vars.clone(), terms.into_iter().collect()))
    }
}

impl MultiPoly<Rationals> {
    /// Parse sums of terms like `3/2*a^2*b - b + 7`.
    pub fn parse(s: &str) -> Result<Self, AlgebraError> {
        let err = |m: &str| AlgebraError::Parse(format!("{m} in {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        // Split into signed terms.
        let mut raw_terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut prev = None;
        for (i, ch) in compact.char_indices() {
            let after_caret = prev == Some('^');
            prev = Some(ch);
            if (ch == '+' || ch == '-') && !after_caret {
                if !cur.is_empty() {
                    raw_terms.push((neg, std::mem::take(&mut cur)));
                } else if i > 0 {
                    return Err(err("dangling sign"));
                }
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(err("trailing sign"));
        }
        raw_terms.push((neg, cur));

        let mut parsed: Vec<(BigRational, Vec<(String, u32)>)> = Vec::new();
        let mut names: Vec<String> = Vec::new();
        for (neg, t) in raw_terms {
            let mut coeff = BigRational::one();
            let mut mono = Vec::new();
            for factor in t.split('*') {
                if factor.is_empty() {
                    return Err(err("empty factor"));
                }
                if factor.chars().next().unwrap().is_ascii_digit() {
                    let q = parse_rational(factor).ok_or_else(|| err("bad number"))?;
                    coeff *= q;
                } else {
                    let (name, exp) = match factor.split_once('^') {
                        Some((n, e)) => (n, e.parse::<u32>().map_err(|_| err("bad exponent"))?),
                        None => (factor, 1),
                    };
                    if !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                        return Err(err("bad variable name"));
                    }
                    names.push(name.to_string());
                    mono.push((name.to_string(), exp));
                }
            }
            if neg {
                coeff = -coeff;
            }
            parsed.push((coeff, mono));
        }
        let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let mut out = Self::zero(Rationals, &name_refs);
        for (c, mono) in parsed {
            let mut e = vec![0; out.vars.len()];
            for (n, k) in mono {
                let i = out.var_index(&n).unwrap();
                e[i] += k;
            }
            out.add_term(e, c);
        }
        Ok(out)
    }
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| BigRational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// The polynomial ring R[vars] as a ring object, for generic algorithms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing<R: Ring> {
    base: R,
    vars: Vec<String>,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R, vars: &[&str]) -> Self {
        PolyRing { base, vars: sorted_vars(vars).to_vec() }
    }

    fn names(&self) -> Vec<&str> {
        self.vars.iter().map(|s| s.as_str()).collect()
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = MultiPoly<R>;

    fn zero(&self) -> MultiPoly<R> {
        MultiPoly::zero(self.base.clone(), &self.names())
    }
    fn one(&self) -> MultiPoly<R> {
        MultiPoly::one(self.base.clone(), &self.names())
    }
    fn from_int(&self, n: &BigInt) -> MultiPoly<R> {
        MultiPoly::constant(self.base.clone(), &self.names(), self.base.from_int(n))
    }
    fn add(&self, x: &MultiPoly<R>, y: &MultiPoly<R>) -> MultiPoly<R> {
        x.add(y)
    }
    fn sub(&self, x: &MultiPoly<R>, y: &MultiPoly<R>) -> MultiPoly<R> {
        x.sub(y)
    }
    fn mul(&self, x: &MultiPoly<R>, y: &MultiPoly<R>) -> MultiPoly<R> {
        x.mul(y)
    }
    fn neg(&self, x: &MultiPoly<R>) -> MultiPoly<R> {
        x.neg()
    }
    fn is_zero(&self, x: &MultiPoly<R>) -> bool {
        x.is_zero()
    }
    fn div_exact(&self, x: &MultiPoly<R>, y: &MultiPoly<R>) -> Option<MultiPoly<R>> {
        x.div_exact(y)
    }
    fn format(&self, x: &MultiPoly<R>) -> String {
        x.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zz(s: &str) -> MultiPoly<Integers> {
        MultiPoly::<Integers>::parse(s).unwrap()
    }

    #[test]
    fn canonical_text() {
        let p = zz("1 + 3*a + a^2");
        assert_eq!(p.to_string(), "a^2 + 3*a + 1");
        let q = zz("b*a - a^2*b + 2 - b^3");
        assert_eq!(q.to_string(), "-a^2*b - b^3 + a*b + 2");
        assert_eq!(zz("x - x").to_string(), "0");
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["a^2 + 3*a + 1", "-a^2*b - b^3 + a*b + 2", "x^4 - 7"] {
            assert_eq!(zz(s).to_string(), s);
        }
        let q = MultiPoly::<Rationals>::parse("3/2*a - 1/3").unwrap();
        assert_eq!(q.to_string(), "3/2*a - 1/3");
    }

    #[test]
    fn exact_division() {
        let f = zz("a^2 - b^2");
        let g = zz("a - b");
        assert_eq!(f.div_exact(&g).unwrap(), zz("a + b"));
        assert!(zz("a^2 + b^2").div_exact(&g).is_none());
    }

    #[test]
    fn coefficients_roundtrip() {
        let f = zz("a^2*b^3 + 2*a*b - 7*b + a^5");
        let cs = f.coefficients_in("b");
        assert_eq!(cs.len(), 4);
        assert_eq!(cs[1].to_string(), "2*a - 7");
        assert_eq!(MultiPoly::from_coefficients_in("b", &cs), f);
    }

    #[test]
    fn specialize_and_eval() {
        let f = zz("a^2*b + b - 3");
        let g = f.specialize("a", &BigInt::from(2));
        assert_eq!(g.to_string(), "5*b - 3");
        assert_eq!(f.eval(&[BigInt::from(2), BigInt::from(1)]), BigInt::from(2));
    }
}
