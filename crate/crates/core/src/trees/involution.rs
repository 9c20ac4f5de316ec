use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use serde::Serialize;

use super::{cluster_tree, stabilize, Edge, MarkedTree, PointConfig, RationalPoint, TreeError};
use crate::algebra::Rationals;
use crate::dynamics::{postcritical_scheme_marked, CriticalMarking, Postcritical, QuadraticMorphism};
use crate::mapping_scheme::{ExtendedScheme, MappingScheme};

/// An involution of a marked tree compatible with an involution of the mark labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeInvolution {
    pub tree: MarkedTree,
    pub vertex_map: Vec<usize>,
    pub index_map: BTreeMap<String, String>,
}

impl TreeInvolution {
    pub fn fixed_vertices(&self) -> Vec<usize> {
        (0..self.tree.len()).filter(|&v| self.vertex_map[v] == v).collect()
    }
}

fn sigma_names(ext: &ExtendedScheme) -> BTreeMap<String, String> {
    (0..ext.len()).map(|x| (ext.name(x).to_string(), ext.name(ext.sigma(x)).to_string())).collect()
}

/// The vertex involution induced by σ on the labels; i₀ and j₀ bound the fixed path.
pub fn involution_from_extension(tree: &MarkedTree, ext: &ExtendedScheme) -> Result<TreeInvolution, TreeError> {
    let index_map = sigma_names(ext);
    let labels: BTreeSet<&String> = index_map.keys().collect();
    for m in tree.marks().keys() {
        if !labels.contains(m) {
            return Err(TreeError::UnknownMark(m.clone()));
        }
    }
    if let Some(missing) = labels.iter().find(|l| tree.vertex_of(l).is_none()) {
        return Err(TreeError::UnresolvedMark(missing.to_string()));
    }
    let vertex_of = |m: &str| tree.vertex_of(m).unwrap();
    let n = tree.len();
    let mut vertex_map = vec![0; n];
    for (v, slot) in vertex_map.iter_mut().enumerate() {
        // Three marks in distinct directions from v have median v.
        let mut reps: Vec<&str> = tree.marks_at(v);
        for &(w, _) in tree.neighbors(v) {
            let comp: BTreeSet<usize> = tree.component(w, v).into_iter().collect();
            if let Some(m) = tree.marks().iter().find(|(_, x)| comp.contains(x)).map(|(m, _)| m.as_str()) {
                reps.push(m);
            }
        }
        if reps.len() < 3 {
            return Err(TreeError::Malformed(format!("vertex {v} is unstable")));
        }
        let im = |m: &str| vertex_of(&index_map[m]);
        *slot = tree.median(im(reps[0]), im(reps[1]), im(reps[2]));
    }
    for v in 0..n {
        if vertex_map[vertex_map[v]] != v {
            return Err(TreeError::NotEquivariant(format!("vertex {v} is not mapped back to itself")));
        }
    }
    for e in tree.edges() {
        if tree.thickness(vertex_map[e.u], vertex_map[e.v]) != Some(e.thickness) {
            return Err(TreeError::NotEquivariant(format!("edge {}-{} has no matching image", e.u, e.v)));
        }
    }
    for (m, &v) in tree.marks() {
        if vertex_of(&index_map[m]) != vertex_map[v] {
            return Err(TreeError::NotEquivariant(format!("mark {m}")));
        }
    }
    let fixed: BTreeSet<usize> = (0..n).filter(|&v| vertex_map[v] == v).collect();
    let spine: BTreeSet<usize> =
        tree.path(vertex_of(ext.name(ext.i0())), vertex_of(ext.name(ext.j0()))).into_iter().collect();
    if fixed != spine {
        return Err(TreeError::FixedLocusNotPath);
    }
    Ok(TreeInvolution { tree: tree.clone(), vertex_map, index_map })
}

/// Check that the points satisfy s(σγ) = −s(γ), then build the tree and its involution.
pub fn involution_from_config(cfg: &PointConfig, ext: &ExtendedScheme) -> Result<TreeInvolution, TreeError> {
    for (x, y) in sigma_names(ext) {
        let (Some(px), Some(py)) = (cfg.point(&x), cfg.point(&y)) else {
            return Err(TreeError::UnresolvedMark(if cfg.point(&x).is_none() { x } else { y }));
        };
        if *py != px.map(|z| -z) {
            return Err(TreeError::NotEquivariant(format!("{y} is not the negative of {x}")));
        }
    }
    involution_from_extension(&cluster_tree(cfg)?, ext)
}

/// The quotient tree, marked by Γ through τ̃. Fixed edges double in thickness.
pub fn sigma_quotient(inv: &TreeInvolution, ext: &ExtendedScheme) -> Result<MarkedTree, TreeError> {
    let t = &inv.tree;
    let sigma = &inv.vertex_map;
    let reps: Vec<usize> = (0..t.len()).filter(|&v| v <= sigma[v]).collect();
    let id: BTreeMap<usize, usize> = reps.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let orbit = |v: usize| id[&v.min(sigma[v])];
    let mut edges: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    for e in t.edges() {
        let (a, b) = (orbit(e.u), orbit(e.v));
        let fixed = sigma[e.u] == e.u && sigma[e.v] == e.v;
        let th = if fixed { 2 * e.thickness } else { e.thickness };
        edges.insert((a.min(b), a.max(b)), th);
    }
    let mut marks = BTreeMap::new();
    for x in 0..ext.len() {
        let label = ext.base().name(ext.tau_tilde(x)).to_string();
        let v = orbit(t.vertex_of(ext.name(x)).ok_or_else(|| TreeError::UnresolvedMark(ext.name(x).into()))?);
        if let Some(&w) = marks.get(&label) {
            if w != v {
                return Err(TreeError::NotEquivariant(format!("orbit of {} splits", ext.name(x))));
            }
        }
        marks.insert(label, v);
    }
    let edges = edges.into_iter().map(|((u, v), thickness)| Edge { u, v, thickness }).collect();
    MarkedTree::new(reps.len(), edges, marks)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientCheck {
    pub quotient: MarkedTree,
    pub stabilized: MarkedTree,
    pub isomorphic: bool,
}

/// Compare the σ-quotient of the Γ̃-tree with its stabilization to Γ.
pub fn quotient_vs_stabilize_check(cfg: &PointConfig, ext: &ExtendedScheme) -> Result<QuotientCheck, TreeError> {
    let inv = involution_from_config(cfg, ext)?;
    let quotient = sigma_quotient(&inv, ext)?;
    let keep: Vec<&str> = ext.base().names().iter().map(|s| s.as_str()).collect();
    let stabilized = stabilize(&inv.tree, &keep)?;
    let isomorphic = quotient.is_isomorphic(&stabilized);
    Ok(QuotientCheck { quotient, stabilized, isomorphic })
}

/// The Γ̃-configuration of a Γ-marked morphism: `point_of` gives s(γ) for γ ∈ Γ.
pub fn extended_config(
    ext: &ExtendedScheme,
    point_of: impl Fn(&str) -> RationalPoint,
    marking: CriticalMarking,
    p: u64,
) -> Result<PointConfig, TreeError> {
    let (cp, cq) = marking.points(num_rational::BigRational::zero());
    let mut pts = Vec::new();
    for x in 0..ext.len() {
        let pt = if x == ext.i0() {
            cp.clone()
        } else if x == ext.j0() {
            cq.clone()
        } else if ext.in_base(x) {
            point_of(ext.name(x))
        } else {
            point_of(ext.name(ext.sigma(x))).map(|z| -z)
        };
        if ext.in_base(x) && (x == ext.i0() || x == ext.j0()) && point_of(ext.name(x)) != pt {
            return Err(TreeError::NotEquivariant(format!("{} is not a critical point", ext.name(x))));
        }
        pts.push((ext.name(x).to_string(), pt));
    }
    PointConfig::new(pts, p)
}

/// Γ̃ and its configuration for f = (x² + a)/(x² + b), whose marked postcritical orbit must realize `s`.
pub fn morphism_config(
    s: &MappingScheme,
    marking: CriticalMarking,
    a: &num_rational::BigRational,
    b: &num_rational::BigRational,
    p: u64,
) -> Result<(ExtendedScheme, PointConfig), TreeError> {
    let f = QuadraticMorphism::chart_a(Rationals, a.clone(), b.clone())
        .map_err(|e| TreeError::Unrealized(e.to_string()))?;
    let orbit = match postcritical_scheme_marked(&f, marking, s.len()) {
        Postcritical::Finite(o) if o.scheme.is_marked_isomorphic(s) => o,
        _ => return Err(TreeError::Unrealized(format!("({a}, {b})"))),
    };
    let (_, map) = s.canonical_map();
    let ext = ExtendedScheme::new(s);
    let point_of = |name: &str| orbit.points[map[s.index(name).expect("name from Γ")]].clone();
    let cfg = extended_config(&ext, point_of, marking, p)?;
    Ok((ext, cfg))
}
