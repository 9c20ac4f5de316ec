//! The extended scheme Γ̃ ⊇ Γ with its involution σ and projection τ̃ onto Γ.

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::MappingScheme;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedScheme {
    base: MappingScheme,
    /// Γ̃; the first `base.len()` entries are the elements of Γ in order.
    names: Vec<String>,
    sigma: Vec<usize>,
    tau_tilde: Vec<usize>,
    i0: usize,
    j0: usize,
}

impl ExtendedScheme {
    pub fn new(s: &MappingScheme) -> ExtendedScheme {
        let n = s.len();
        let mut names: Vec<String> = s.names().to_vec();
        let mut tau_tilde: Vec<usize> = (0..n).map(|x| s.tau(x)).collect();
        let mut critical = |marked: usize, fresh: &str| match s.preimages(marked).first() {
            Some(&x) => x,
            None => {
                names.push(fresh.to_string());
                tau_tilde.push(marked);
                names.len() - 1
            }
        };
        let i0 = critical(s.i1(), "i0");
        let j0 = critical(s.j1(), "j0");
        let mut sigma: Vec<usize> = (0..names.len()).collect();
        for g in 0..n {
            if g == i0 || g == j0 {
                continue;
            }
            let fiber = s.preimages(s.tau(g));
            if let Some(&partner) = fiber.iter().find(|&&h| h != g) {
                sigma[g] = partner;
            } else {
                names.push(format!("s:{}", s.name(g)));
                tau_tilde.push(s.tau(g));
                let new = names.len() - 1;
                sigma.push(g);
                sigma[g] = new;
            }
        }
        ExtendedScheme { base: s.clone(), names, sigma, tau_tilde, i0, j0 }
    }

    pub fn base(&self) -> &MappingScheme {
        &self.base
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

    pub fn sigma(&self, x: usize) -> usize {
        self.sigma[x]
    }

    /// Image in Γ, as an index into the base scheme.
    pub fn tau_tilde(&self, x: usize) -> usize {
        self.tau_tilde[x]
    }

    pub fn i0(&self) -> usize {
        self.i0
    }

    pub fn j0(&self) -> usize {
        self.j0
    }

    /// Whether x belongs to Γ.
    pub fn in_base(&self, x: usize) -> bool {
        x < self.base.len()
    }

    /// σ-orbits, each listed once as (representative, partner).
    pub fn orbits(&self) -> Vec<(usize, usize)> {
        (0..self.len()).filter(|&x| x <= self.sigma[x]).map(|x| (x, self.sigma[x])).collect()
    }
}

struct NamedMap<'a>(&'a ExtendedScheme, &'a dyn Fn(usize) -> String);

impl Serialize for NamedMap<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut m = serializer.serialize_map(Some(self.0.len()))?;
        for x in 0..self.0.len() {
            m.serialize_entry(&self.0.names[x], &(self.1)(x))?;
        }
        m.end()
    }
}

impl Serialize for ExtendedScheme {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let sigma = |x: usize| self.names[self.sigma[x]].clone();
        let tt = |x: usize| self.base.name(self.tau_tilde[x]).to_string();
        let mut m = serializer.serialize_map(Some(6))?;
        m.serialize_entry("base", &self.base)?;
        m.serialize_entry("elements", &self.names)?;
        m.serialize_entry("i0", &self.names[self.i0])?;
        m.serialize_entry("j0", &self.names[self.j0])?;
        m.serialize_entry("sigma", &NamedMap(self, &sigma))?;
        m.serialize_entry("tauTilde", &NamedMap(self, &tt))?;
        m.end()
    }
}
