//! Finite mapping schemes: a finite set with a self-map τ and two marked
//! elements i1, j1 generating it, with fibers of size at most two and the
//! marked elements having at most one preimage each.

mod classify;
mod extend;

use std::collections::{BTreeMap, HashMap};

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

pub use classify::{enumerate, schemes_from_classification, Kind, SchemeClass, MAX_ENUMERATION_SIZE};
pub use extend::ExtendedScheme;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemeError {
    #[error("i1 and j1 coincide ({0})")]
    DistinctnessViolation(String),
    #[error("element {0} is not in the forward orbit of i1 or j1")]
    GenerationViolation(String),
    #[error("element {0} has more than two preimages")]
    FiberViolation(String),
    #[error("marked element {0} has more than one preimage")]
    CriticalFiberViolation(String),
    #[error("size {0} outside the supported range 2..=8")]
    SizeOutOfRange(usize),
    #[error("malformed scheme: {0}")]
    Malformed(String),
}

impl SchemeError {
    pub fn name(&self) -> &'static str {
        match self {
            SchemeError::DistinctnessViolation(_) => "DistinctnessViolation",
            SchemeError::GenerationViolation(_) => "GenerationViolation",
            SchemeError::FiberViolation(_) => "FiberViolation",
            SchemeError::CriticalFiberViolation(_) => "CriticalFiberViolation",
            SchemeError::SizeOutOfRange(_) => "SizeOutOfRange",
            SchemeError::Malformed(_) => "MalformedScheme",
        }
    }
}

/// Unvalidated scheme data as read from JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawScheme {
    pub elements: Vec<String>,
    pub tau: BTreeMap<String, String>,
    pub i1: String,
    pub j1: String,
}

impl RawScheme {
    pub fn new(elements: &[&str], tau: &[(&str, &str)], i1: &str, j1: &str) -> Self {
        RawScheme {
            elements: elements.iter().map(|s| s.to_string()).collect(),
            tau: tau.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
            i1: i1.into(),
            j1: j1.into(),
        }
    }
}

/// A validated mapping scheme. Elements are indices into `names`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MappingScheme {
    names: Vec<String>,
    tau: Vec<usize>,
    i1: usize,
    j1: usize,
}

pub fn validate(raw: &RawScheme) -> Result<MappingScheme, SchemeError> {
    let mut index = HashMap::new();
    for (i, n) in raw.elements.iter().enumerate() {
        if index.insert(n.as_str(), i).is_some() {
            return Err(SchemeError::Malformed(format!("duplicate element {n}")));
        }
    }
    let lookup = |n: &str| index.get(n).copied().ok_or_else(|| SchemeError::Malformed(format!("unknown element {n}")));
    let mut tau = Vec::with_capacity(raw.elements.len());
    for n in &raw.elements {
        let img = raw.tau.get(n).ok_or_else(|| SchemeError::Malformed(format!("tau undefined on {n}")))?;
        tau.push(lookup(img)?);
    }
    if let Some(k) = raw.tau.keys().find(|k| !index.contains_key(k.as_str())) {
        return Err(SchemeError::Malformed(format!("tau defined on unknown element {k}")));
    }
    let i1 = lookup(&raw.i1)?;
    let j1 = lookup(&raw.j1)?;
    MappingScheme::from_parts(raw.elements.clone(), tau, i1, j1)
}

impl MappingScheme {
    /// Build from indices, checking all axioms.
    ///
    /// Checks run in the order: distinctness, fiber sizes, marked fibers, generation.
    pub fn from_parts(names: Vec<String>, tau: Vec<usize>, i1: usize, j1: usize) -> Result<Self, SchemeError> {
        let n = names.len();
        if tau.len() != n || tau.iter().any(|&t| t >= n) || i1 >= n || j1 >= n {
            return Err(SchemeError::Malformed("index out of range".into()));
        }
        if i1 == j1 {
            return Err(SchemeError::DistinctnessViolation(names[i1].clone()));
        }
        let mut fiber = vec![0usize; n];
        for &t in &tau {
            fiber[t] += 1;
        }
        if let Some(g) = (0..n).find(|&g| fiber[g] > 2) {
            return Err(SchemeError::FiberViolation(names[g].clone()));
        }
        for m in [i1, j1] {
            if fiber[m] > 1 {
                return Err(SchemeError::CriticalFiberViolation(names[m].clone()));
            }
        }
        let s = MappingScheme { names, tau, i1, j1 };
        let mut seen = vec![false; n];
        for start in [i1, j1] {
            for x in s.walk(start) {
                seen[x] = true;
            }
        }
        if let Some(g) = (0..n).find(|&g| !seen[g]) {
            return Err(SchemeError::GenerationViolation(s.names[g].clone()));
        }
        Ok(s)
    }

    /// Build from names; convenience for tests and examples.
    pub fn from_names(elements: &[&str], tau: &[(&str, &str)], i1: &str, j1: &str) -> Result<Self, SchemeError> {
        validate(&RawScheme::new(elements, tau, i1, j1))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn tau(&self, x: usize) -> usize {
        self.tau[x]
    }

    pub fn tau_map(&self) -> &[usize] {
        &self.tau
    }

    pub fn i1(&self) -> usize {
        self.i1
    }

    pub fn j1(&self) -> usize {
        self.j1
    }

    pub fn preimages(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&y| self.tau[y] == x).collect()
    }

    /// Distinct elements x, τx, τ²x, … up to the first repetition.
    pub fn walk(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            out.push(x);
            x = self.tau[x];
        }
        out
    }

    /// i_n = τ^{n−1}(i1), n ≥ 1.
    pub fn i_n(&self, n: usize) -> usize {
        (1..n).fold(self.i1, |x, _| self.tau[x])
    }

    /// j_n = τ^{n−1}(j1), n ≥ 1.
    pub fn j_n(&self, n: usize) -> usize {
        (1..n).fold(self.j1, |x, _| self.tau[x])
    }

    /// Elements in the order of the canonical walk: the i1-orbit, then new j1-orbit elements.
    pub fn walk_order(&self) -> Vec<usize> {
        let mut order = self.walk(self.i1);
        for x in self.walk(self.j1) {
            if !order.contains(&x) {
                order.push(x);
            }
        }
        order
    }

    /// Canonical encoding: [size, τ in walk labels…, label of j1].
    pub fn encoding(&self) -> Vec<usize> {
        let order = self.walk_order();
        let mut label = vec![0; self.len()];
        for (l, &x) in order.iter().enumerate() {
            label[x] = l;
        }
        let mut enc = Vec::with_capacity(self.len() + 2);
        enc.push(self.len());
        enc.extend(order.iter().map(|&x| label[self.tau[x]]));
        enc.push(label[self.j1]);
        enc
    }

    /// Isomorphism commuting with τ and fixing i1 and j1.
    pub fn is_marked_isomorphic(&self, other: &MappingScheme) -> bool {
        self.encoding() == other.encoding()
    }

    /// The same scheme with the roles of i1 and j1 exchanged.
    pub fn swapped(&self) -> MappingScheme {
        MappingScheme { names: self.names.clone(), tau: self.tau.clone(), i1: self.j1, j1: self.i1 }
    }

    /// Canonical representative with row-based names (i1, i2, …, j1, …) in walk order.
    pub fn canonical(&self) -> MappingScheme {
        SchemeClass::of(self).build()
    }

    /// The bijection from this scheme's elements to `canonical()`'s, by walk position.
    pub fn canonical_map(&self) -> (MappingScheme, Vec<usize>) {
        let canon = self.canonical();
        let mine = self.walk_order();
        let theirs = canon.walk_order();
        let mut map = vec![0; self.len()];
        for (a, b) in mine.into_iter().zip(theirs) {
            map[a] = b;
        }
        (canon, map)
    }

    /// Reorder elements into walk order, keeping names.
    pub fn in_walk_order(&self) -> MappingScheme {
        let order = self.walk_order();
        let mut pos = vec![0; self.len()];
        for (l, &x) in order.iter().enumerate() {
            pos[x] = l;
        }
        MappingScheme {
            names: order.iter().map(|&x| self.names[x].clone()).collect(),
            tau: order.iter().map(|&x| pos[self.tau[x]]).collect(),
            i1: pos[self.i1],
            j1: pos[self.j1],
        }
    }

    pub fn to_raw(&self) -> RawScheme {
        RawScheme {
            elements: self.names.clone(),
            tau: (0..self.len()).map(|x| (self.names[x].clone(), self.names[self.tau[x]].clone())).collect(),
            i1: self.names[self.i1].clone(),
            j1: self.names[self.j1].clone(),
        }
    }
}

/// Whether `a` is marked-isomorphic to `b` after exchanging i1 and j1 in `b`.
pub fn swap_equivalent(a: &MappingScheme, b: &MappingScheme) -> bool {
    a.is_marked_isomorphic(&b.swapped())
}

struct TauMap<'a>(&'a MappingScheme);

impl Serialize for TauMap<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let s = self.0;
        let mut m = serializer.serialize_map(Some(s.len()))?;
        for x in 0..s.len() {
            m.serialize_entry(&s.names[x], &s.names[s.tau[x]])?;
        }
        m.end()
    }
}

impl Serialize for MappingScheme {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut m = serializer.serialize_map(Some(4))?;
        m.serialize_entry("elements", &self.names)?;
        m.serialize_entry("tau", &TauMap(self))?;
        m.serialize_entry("i1", &self.names[self.i1])?;
        m.serialize_entry("j1", &self.names[self.j1])?;
        m.end()
    }
}

impl<'de> Deserialize<'de> for MappingScheme {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawScheme::deserialize(deserializer)?;
        validate(&raw).map_err(serde::de::Error::custom)
    }
}
