//! Stable marked trees of degenerating configurations on ℙ¹.

mod cluster;
mod forbidden;
mod involution;
mod stabilize;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use cluster::{cluster_tree, cross_ratio_type, valuation, CrossRatioType, PointConfig, RationalPoint};
pub use forbidden::{detect_forbidden, Forbidden, ForbiddenMarks};
pub use involution::{
    extended_config, involution_from_config, involution_from_extension, morphism_config, quotient_vs_stabilize_check,
    sigma_quotient, QuotientCheck, TreeInvolution,
};
pub use stabilize::stabilize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("cannot normalize configuration: {0}")]
    NormalizationFailure(String),
    #[error("two marks share a point: {0}")]
    NotInjective(String),
    #[error("prime {0} not supported")]
    InvalidPrime(u64),
    #[error("need at least 3 kept marks, got {0}")]
    TooFewMarks(usize),
    #[error("unknown mark {0}")]
    UnknownMark(String),
    #[error("involution not compatible with the tree: {0}")]
    NotEquivariant(String),
    #[error("fixed vertices do not form the path between the critical marks")]
    FixedLocusNotPath,
    #[error("mark {0} does not resolve to a vertex")]
    UnresolvedMark(String),
    #[error("points are not distinct")]
    NotDistinct,
    #[error("the morphism does not realize the scheme: {0}")]
    Unrealized(String),
    #[error("malformed tree: {0}")]
    Malformed(String),
}

impl TreeError {
    pub fn name(&self) -> &'static str {
        match self {
            TreeError::NormalizationFailure(_) => "NormalizationFailure",
            TreeError::NotInjective(_) => "NotInjective",
            TreeError::InvalidPrime(_) => "InvalidPrime",
            TreeError::TooFewMarks(_) => "TooFewMarks",
            TreeError::UnknownMark(_) => "UnknownMark",
            TreeError::NotEquivariant(_) => "NotEquivariant",
            TreeError::FixedLocusNotPath => "FixedLocusNotPath",
            TreeError::UnresolvedMark(_) => "UnresolvedMark",
            TreeError::NotDistinct => "NotDistinct",
            TreeError::Unrealized(_) => "Unrealized",
            TreeError::Malformed(_) => "MalformedTree",
        }
    }
}

/// Edge between two vertices, u < v, with its thickness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub thickness: u32,
}

/// A stable tree with marks indexed by strings. Vertices are 0..len.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MarkedTree {
    vertices: usize,
    edges: Vec<Edge>,
    marks: BTreeMap<String, usize>,
    #[serde(skip)]
    adj: Vec<Vec<(usize, u32)>>,
}

#[derive(Deserialize)]
struct TreeJson {
    vertices: usize,
    edges: Vec<Edge>,
    marks: BTreeMap<String, usize>,
}

impl<'de> Deserialize<'de> for MarkedTree {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let t = TreeJson::deserialize(d)?;
        MarkedTree::new(t.vertices, t.edges, t.marks).map_err(serde::de::Error::custom)
    }
}

impl MarkedTree {
    /// Checks that the graph is a tree, thicknesses are positive and every vertex is stable.
    pub fn new(vertices: usize, edges: Vec<Edge>, marks: BTreeMap<String, usize>) -> Result<Self, TreeError> {
        let t = Self::unchecked(vertices, edges, marks)?;
        for v in 0..t.vertices {
            if t.marks_at(v).len() + t.adj[v].len() < 3 {
                return Err(TreeError::Malformed(format!("vertex {v} is unstable")));
            }
        }
        Ok(t)
    }

    /// Same as `new` without the stability check.
    pub(crate) fn unchecked(
        vertices: usize,
        edges: Vec<Edge>,
        marks: BTreeMap<String, usize>,
    ) -> Result<Self, TreeError> {
        if vertices == 0 {
            return Err(TreeError::Malformed("no vertices".into()));
        }
        if edges.len() + 1 != vertices {
            return Err(TreeError::Malformed(format!("{vertices} vertices but {} edges", edges.len())));
        }
        let mut adj = vec![Vec::new(); vertices];
        let mut norm = Vec::with_capacity(edges.len());
        for e in edges {
            let (u, v) = (e.u.min(e.v), e.u.max(e.v));
            if v >= vertices || u == v {
                return Err(TreeError::Malformed(format!("bad edge {u}-{v}")));
            }
            if e.thickness == 0 {
                return Err(TreeError::Malformed(format!("edge {u}-{v} has thickness 0")));
            }
            adj[u].push((v, e.thickness));
            adj[v].push((u, e.thickness));
            norm.push(Edge { u, v, thickness: e.thickness });
        }
        norm.sort();
        for (name, &v) in &marks {
            if v >= vertices {
                return Err(TreeError::Malformed(format!("mark {name} on missing vertex {v}")));
            }
        }
        for a in &mut adj {
            a.sort();
        }
        let t = MarkedTree { vertices, edges: norm, marks, adj };
        if t.bfs_order(0).len() != vertices {
            return Err(TreeError::Malformed("not connected".into()));
        }
        Ok(t)
    }

    pub fn len(&self) -> usize {
        self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.vertices == 0
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn marks(&self) -> &BTreeMap<String, usize> {
        &self.marks
    }

    pub fn vertex_of(&self, mark: &str) -> Option<usize> {
        self.marks.get(mark).copied()
    }

    pub fn marks_at(&self, v: usize) -> Vec<&str> {
        self.marks.iter().filter(|(_, &w)| w == v).map(|(m, _)| m.as_str()).collect()
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, u32)] {
        &self.adj[v]
    }

    pub fn thickness(&self, u: usize, v: usize) -> Option<u32> {
        self.adj[u].iter().find(|(w, _)| *w == v).map(|&(_, t)| t)
    }

    pub fn is_stable(&self) -> bool {
        (0..self.vertices).all(|v| self.marks_at(v).len() + self.adj[v].len() >= 3)
    }

    fn bfs_order(&self, root: usize) -> Vec<usize> {
        let mut seen = vec![false; self.vertices];
        let mut order = vec![root];
        seen[root] = true;
        let mut q = VecDeque::from([root]);
        while let Some(u) = q.pop_front() {
            for &(w, _) in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                    q.push_back(w);
                }
            }
        }
        order
    }

    /// Parent pointers of the tree rooted at `root`.
    fn parents(&self, root: usize) -> Vec<Option<usize>> {
        let mut parent = vec![None; self.vertices];
        let mut seen = vec![false; self.vertices];
        seen[root] = true;
        let mut q = VecDeque::from([root]);
        while let Some(u) = q.pop_front() {
            for &(w, _) in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(u);
                    q.push_back(w);
                }
            }
        }
        parent
    }

    /// Vertices on the path from u to v, both included.
    pub fn path(&self, u: usize, v: usize) -> Vec<usize> {
        let parent = self.parents(u);
        let mut out = vec![v];
        let mut x = v;
        while x != u {
            x = parent[x].expect("connected");
            out.push(x);
        }
        out.reverse();
        out
    }

    /// Number of edges between u and v.
    pub fn distance(&self, u: usize, v: usize) -> usize {
        self.path(u, v).len() - 1
    }

    /// Sum of thicknesses along the path.
    pub fn weighted_distance(&self, u: usize, v: usize) -> u32 {
        self.path(u, v).windows(2).map(|w| self.thickness(w[0], w[1]).unwrap()).sum()
    }

    /// The common vertex of the three pairwise paths.
    pub fn median(&self, a: usize, b: usize, c: usize) -> usize {
        let pab: BTreeSet<usize> = self.path(a, b).into_iter().collect();
        let pbc: BTreeSet<usize> = self.path(b, c).into_iter().collect();
        let pac = self.path(a, c);
        *pac.iter().find(|x| pab.contains(x) && pbc.contains(x)).expect("trees have medians")
    }

    /// Vertices reachable from `start` without passing through `block`.
    pub(crate) fn component(&self, start: usize, block: usize) -> Vec<usize> {
        let mut seen = vec![false; self.vertices];
        seen[block] = true;
        seen[start] = true;
        let mut stack = vec![start];
        let mut out = vec![start];
        while let Some(u) = stack.pop() {
            for &(w, _) in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    out.push(w);
                    stack.push(w);
                }
            }
        }
        out
    }

    fn canonical_from(&self, v: usize, parent: Option<usize>) -> String {
        let mut children: Vec<String> = self.adj[v]
            .iter()
            .filter(|(w, _)| Some(*w) != parent)
            .map(|&(w, t)| format!("{t}:{}", self.canonical_from(w, Some(v))))
            .collect();
        children.sort();
        format!("[{}|{}]", self.marks_at(v).join(","), children.join(","))
    }

    /// A string equal for two trees exactly when they are isomorphic as marked trees.
    pub fn canonical_form(&self) -> String {
        let root = self.marks.values().next().copied().unwrap_or(0);
        self.canonical_from(root, None)
    }

    pub fn is_isomorphic(&self, other: &MarkedTree) -> bool {
        self.vertices == other.vertices
            && self.marks.keys().eq(other.marks.keys())
            && self.canonical_form() == other.canonical_form()
    }

    /// Relabel marks; labels mapped to the same name must sit on the same vertex.
    pub fn relabel(&self, f: impl Fn(&str) -> String) -> Result<MarkedTree, TreeError> {
        let mut marks = BTreeMap::new();
        for (m, &v) in &self.marks {
            let new = f(m);
            if let Some(&w) = marks.get(&new) {
                if w != v {
                    return Err(TreeError::NotInjective(new));
                }
            }
            marks.insert(new, v);
        }
        MarkedTree::unchecked(self.vertices, self.edges.clone(), marks)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph T {\n");
        for v in 0..self.vertices {
            let _ = writeln!(out, "  {v} [label=\"{{{}}}\"];", self.marks_at(v).join(", "));
        }
        for e in &self.edges {
            let _ = writeln!(out, "  {} -- {} [label=\"{}\"];", e.u, e.v, e.thickness);
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests;
