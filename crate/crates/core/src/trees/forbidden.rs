use serde::Serialize;

use super::{MarkedTree, TreeError};
use crate::mapping_scheme::ExtendedScheme;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Forbidden {
    Absent,
    PatternBone,
    #[serde(rename = "pattern_An")]
    PatternAn,
}

/// Labels of P̃₀, P̃₁, P̃₂, Q̃₀, Q̃₁.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenMarks {
    pub p0: String,
    pub p1: String,
    pub p2: Option<String>,
    pub q0: String,
    pub q1: String,
}

impl ForbiddenMarks {
    pub fn from_extension(ext: &ExtendedScheme) -> Self {
        let s = ext.base();
        ForbiddenMarks {
            p0: ext.name(ext.i0()).to_string(),
            p1: s.name(s.i1()).to_string(),
            p2: Some(s.name(s.i_n(2)).to_string()),
            q0: ext.name(ext.j0()).to_string(),
            q1: s.name(s.j1()).to_string(),
        }
    }
}

/// With m₁, m₂ the points where P̃₁, Q̃₁ leave the path P̃₀–Q̃₀: the bone pattern is
/// m₁ ≠ m₂ with m₁ on the P̃₀ side of m₂. The A_n pattern adds a branch vertex strictly
/// between m₁ and P̃₂ from which P̃₁ hangs.
pub fn detect_forbidden(t: &MarkedTree, marks: &ForbiddenMarks) -> Result<Forbidden, TreeError> {
    let v = |m: &str| t.vertex_of(m).ok_or_else(|| TreeError::UnresolvedMark(m.to_string()));
    let (p0, p1, q0, q1) = (v(&marks.p0)?, v(&marks.p1)?, v(&marks.q0)?, v(&marks.q1)?);
    let p2 = marks.p2.as_deref().map(v).transpose()?;
    let m1 = t.median(p0, q0, p1);
    let m2 = t.median(p0, q0, q1);
    if m1 == m2 || !t.path(p0, m2).contains(&m1) {
        return Ok(Forbidden::Absent);
    }
    if let Some(p2) = p2 {
        let w = t.median(m1, p1, p2);
        if w != m1 && w != p2 {
            return Ok(Forbidden::PatternAn);
        }
    }
    Ok(Forbidden::PatternBone)
}
