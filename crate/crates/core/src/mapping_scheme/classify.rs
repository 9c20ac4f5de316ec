//! The three shapes of a mapping scheme and enumeration up to marked isomorphism.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{MappingScheme, SchemeError};

pub const MAX_ENUMERATION_SIZE: usize = 8;

/// A: the orbits of i1 and j1 are disjoint.
/// B: the j-orbit joins the i-orbit inside its cycle.
/// C: the j-orbit joins the i-orbit on its tail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    A,
    B,
    C,
}

/// Shape and parameters (ℓ, k, n, m) of the two generating relations:
/// A: i_ℓ = i_{k+1}, j_n = j_{m+1}; B: i_ℓ = j_{m+1}, j_n = i_{k+1}; C: i_ℓ = j_n, i_k = i_{m+1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchemeClass {
    pub kind: Kind,
    pub l: usize,
    pub k: usize,
    pub n: usize,
    pub m: usize,
}

impl fmt::Display for SchemeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?},({},{},{},{}))", self.kind, self.l, self.k, self.n, self.m)
    }
}

#[derive(Serialize, Deserialize)]
struct ClassJson {
    kind: Kind,
    params: [usize; 4],
}

impl Serialize for SchemeClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ClassJson { kind: self.kind, params: [self.l, self.k, self.n, self.m] }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchemeClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let c = ClassJson::deserialize(d)?;
        let [l, k, n, m] = c.params;
        let class = SchemeClass { kind: c.kind, l, k, n, m };
        if !class.is_valid() {
            return Err(serde::de::Error::custom(format!("invalid parameters {class}")));
        }
        Ok(class)
    }
}

impl SchemeClass {
    pub fn new(kind: Kind, l: usize, k: usize, n: usize, m: usize) -> Self {
        SchemeClass { kind, l, k, n, m }
    }

    pub fn is_valid(&self) -> bool {
        let SchemeClass { kind, l, k, n, m } = *self;
        match kind {
            Kind::A | Kind::B => 1 <= l && l <= k && 1 <= n && n <= m,
            Kind::C => 1 <= l && l < k && k <= m && n >= 1 && (l, n) != (1, 1),
        }
    }

    /// Number of elements of the scheme built from these parameters.
    pub fn size(&self) -> usize {
        match self.kind {
            Kind::A | Kind::B => self.k + self.m,
            Kind::C => self.m + self.n - 1,
        }
    }

    /// Classify a valid scheme.
    pub fn of(s: &MappingScheme) -> SchemeClass {
        let iseq = s.walk(s.i1());
        let big_k = iseq.len();
        let r = iseq.iter().position(|&x| x == s.tau(iseq[big_k - 1])).unwrap() + 1;
        let pos_in_i = |x: usize| iseq.iter().position(|&y| y == x).map(|p| p + 1);
        let jseq = s.walk(s.j1());
        match jseq.iter().position(|&x| pos_in_i(x).is_some()) {
            None => {
                let big_m = jseq.len();
                let sj = jseq.iter().position(|&x| x == s.tau(jseq[big_m - 1])).unwrap() + 1;
                SchemeClass::new(Kind::A, r, big_k, sj, big_m)
            }
            Some(p) => {
                let n = p + 1;
                let q = pos_in_i(jseq[p]).unwrap();
                if q < r {
                    SchemeClass::new(Kind::C, q, r, n, big_k)
                } else {
                    // q == r is excluded by the fiber axioms.
                    debug_assert!(q > r);
                    SchemeClass::new(Kind::B, r, q - 1, n, n + big_k - q)
                }
            }
        }
    }

    /// The scheme with these generating relations, named by rows and in walk order.
    pub fn build(&self) -> MappingScheme {
        assert!(self.is_valid(), "invalid parameters {self}");
        let SchemeClass { kind, l, k, n, m } = *self;
        let mut names: Vec<String> = Vec::new();
        let mut tau: Vec<usize> = Vec::new();
        let (i_row, j_row) = match kind {
            Kind::A | Kind::B => (k, m),
            Kind::C => (m, n - 1),
        };
        for t in 1..=i_row {
            names.push(format!("i{t}"));
        }
        for t in 1..=j_row {
            names.push(format!("j{t}"));
        }
        let i = |t: usize| t - 1;
        let j = |t: usize| i_row + t - 1;
        for t in 1..=i_row {
            tau.push(if t < i_row { i(t + 1) } else { 0 });
        }
        for t in 1..=j_row {
            tau.push(if t < j_row { j(t + 1) } else { 0 });
        }
        match kind {
            Kind::A => {
                tau[i(k)] = i(l);
                tau[j(m)] = j(n);
            }
            Kind::B => {
                tau[i(k)] = j(n);
                tau[j(m)] = i(l);
            }
            Kind::C => {
                tau[i(m)] = i(k);
                if n > 1 {
                    tau[j(n - 1)] = i(l);
                }
            }
        }
        let j1 = if kind == Kind::C && n == 1 { i(l) } else { j(1) };
        MappingScheme::from_parts(names, tau, 0, j1)
            .expect("classification parameters give a valid scheme")
            .in_walk_order()
    }
}

fn check_size(size: usize) -> Result<(), SchemeError> {
    if !(2..=MAX_ENUMERATION_SIZE).contains(&size) {
        return Err(SchemeError::SizeOutOfRange(size));
    }
    Ok(())
}

/// All schemes of the given size up to marked isomorphism, sorted by encoding.
///
/// Every scheme is isomorphic to one whose walk labels are 0..size: the i1-walk
/// 0 → 1 → … → K−1 → r, then j1 either an earlier label or the start of a
/// fresh walk K → … → size−1 → r'. These shapes are generated directly and
/// filtered by the axioms.
pub fn enumerate(size: usize) -> Result<Vec<MappingScheme>, SchemeError> {
    check_size(size)?;
    let mut out: BTreeMap<Vec<usize>, MappingScheme> = BTreeMap::new();
    for big_k in 1..=size {
        for r in 0..big_k {
            let mut base: Vec<usize> = (1..big_k).collect();
            base.push(r);
            let mut candidates: Vec<(Vec<usize>, usize)> = Vec::new();
            if big_k == size {
                for j1 in 1..size {
                    candidates.push((base.clone(), j1));
                }
            } else {
                for r2 in 0..size {
                    let mut tau = base.clone();
                    tau.extend(big_k + 1..size);
                    tau.push(r2);
                    candidates.push((tau, big_k));
                }
            }
            for (tau, j1) in candidates {
                let names = (0..size).map(|x| format!("x{x}")).collect();
                if let Ok(s) = MappingScheme::from_parts(names, tau, 0, j1) {
                    let c = s.canonical();
                    out.entry(c.encoding()).or_insert(c);
                }
            }
        }
    }
    Ok(out.into_values().collect())
}

/// All valid parameter tuples of the given size, built and deduplicated.
pub fn schemes_from_classification(size: usize) -> Result<Vec<MappingScheme>, SchemeError> {
    check_size(size)?;
    let mut out: BTreeMap<Vec<usize>, MappingScheme> = BTreeMap::new();
    for kind in [Kind::A, Kind::B, Kind::C] {
        for l in 1..=size {
            for k in 1..=size {
                for n in 1..=size {
                    for m in 1..=size {
                        let c = SchemeClass::new(kind, l, k, n, m);
                        if c.is_valid() && c.size() == size {
                            let s = c.build();
                            out.entry(s.encoding()).or_insert(s);
                        }
                    }
                }
            }
        }
    }
    Ok(out.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scheme(tau: &[(&str, &str)], i1: &str, j1: &str) -> MappingScheme {
        let mut elems: Vec<&str> = tau.iter().map(|(a, _)| *a).collect();
        elems.sort();
        MappingScheme::from_names(&elems, tau, i1, j1).unwrap()
    }

    #[test]
    fn known_examples() {
        let not_all = scheme(&[("i1", "i2"), ("i2", "i1"), ("j1", "j2"), ("j2", "j2")], "i1", "j1");
        assert_eq!(SchemeClass::of(&not_all), SchemeClass::new(Kind::A, 1, 2, 2, 2));
        let ram = scheme(&[("i1", "j1"), ("j1", "j2"), ("j2", "j3"), ("j3", "i1")], "i1", "j1");
        assert_eq!(SchemeClass::of(&ram), SchemeClass::new(Kind::B, 1, 1, 1, 3));
        let all = scheme(&[("i1", "i2"), ("i2", "i1"), ("j1", "j2"), ("j2", "j1")], "i1", "j1");
        assert_eq!(SchemeClass::of(&all), SchemeClass::new(Kind::A, 1, 2, 1, 2));
    }

    #[test]
    fn build_names_follow_rows() {
        let s = SchemeClass::new(Kind::B, 1, 1, 1, 3).build();
        assert_eq!(s.names(), &["i1", "j1", "j2", "j3"]);
        let c = SchemeClass::new(Kind::C, 2, 3, 1, 3).build();
        assert_eq!(c.name(c.j1()), "i2");
    }

    #[test]
    fn classify_inverts_build() {
        for size in 2..=7 {
            for s in schemes_from_classification(size).unwrap() {
                let c = SchemeClass::of(&s);
                assert_eq!(c.build(), s);
            }
        }
    }

    #[test]
    fn size_guard() {
        assert_eq!(enumerate(1), Err(SchemeError::SizeOutOfRange(1)));
        assert_eq!(enumerate(9), Err(SchemeError::SizeOutOfRange(9)));
    }

    #[test]
    fn size_four_contains_known_examples() {
        let all = enumerate(4).unwrap();
        let classes: Vec<SchemeClass> = all.iter().map(SchemeClass::of).collect();
        assert!(classes.contains(&SchemeClass::new(Kind::A, 1, 2, 2, 2)));
        assert!(classes.contains(&SchemeClass::new(Kind::B, 1, 1, 1, 3)));
    }
}
