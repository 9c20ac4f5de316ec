//! Input files and argument values.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use num_rational::BigRational;
use pcfquad::algebra::parse_rational;
use pcfquad::algebra::primes::is_prime;
use pcfquad::dynamics::ProjPoint;
use pcfquad::mapping_scheme::{validate, Kind, MappingScheme, RawScheme, SchemeClass};
use pcfquad::moduli::ChartChoice;
use pcfquad::trees::{Edge, MarkedTree, PointConfig, RationalPoint};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::Value;

use crate::error::{usage, CliError};

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    serde_json::from_str(&read_text(path)?).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

pub fn read_scheme(path: &Path) -> Result<MappingScheme, CliError> {
    let raw: RawScheme = read_json(path)?;
    Ok(validate(&raw)?)
}

pub fn scheme_from_value(v: &Value) -> Result<MappingScheme, CliError> {
    let raw: RawScheme = serde_json::from_value(v.clone()).map_err(|e| CliError::Parse(e.to_string()))?;
    Ok(validate(&raw)?)
}

#[derive(Deserialize)]
struct TreeFile {
    vertices: usize,
    edges: Vec<Edge>,
    marks: BTreeMap<String, usize>,
}

pub fn read_tree(path: &Path) -> Result<MarkedTree, CliError> {
    let t: TreeFile = read_json(path)?;
    Ok(MarkedTree::new(t.vertices, t.edges, t.marks)?)
}

pub fn parse_rational_arg(s: &str) -> Result<BigRational, CliError> {
    parse_rational(s).ok_or_else(|| usage(format!("not a rational number: {s}")))
}

pub fn parse_point(s: &str) -> Result<RationalPoint, CliError> {
    match s.trim() {
        "inf" | "∞" => Ok(ProjPoint::Infinity),
        other => Ok(ProjPoint::Finite(parse_rational_arg(other)?)),
    }
}

/// Points file: `[["label", "value" | "inf"], ...]`.
pub fn read_points(path: &Path, p: u64) -> Result<PointConfig, CliError> {
    let raw: Vec<(String, String)> = read_json(path)?;
    let mut pts = Vec::with_capacity(raw.len());
    for (label, value) in raw {
        let x = match value.trim() {
            "inf" | "∞" => ProjPoint::Infinity,
            v => ProjPoint::Finite(
                parse_rational(v).ok_or_else(|| CliError::Parse(format!("point {label}: bad value {v}")))?,
            ),
        };
        pts.push((label, x));
    }
    Ok(PointConfig::new(pts, p)?)
}

/// `lo..hi` (inclusive) or a comma separated list; keeps the odd primes.
pub fn parse_primes(s: &str) -> Result<Vec<u64>, CliError> {
    let bad = || usage(format!("bad prime range: {s}"));
    let candidates: Vec<u64> = match s.split_once("..") {
        Some((lo, hi)) => {
            let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
            let hi: u64 = hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
            (lo..=hi).collect()
        }
        None => s.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect::<Result<_, _>>()?,
    };
    let primes: Vec<u64> = candidates.into_iter().filter(|&p| p > 2 && is_prime(p)).collect();
    if primes.is_empty() {
        return Err(usage(format!("no odd primes in {s}")));
    }
    Ok(primes)
}

pub fn parse_prime(p: u64) -> Result<u64, CliError> {
    if p > 2 && is_prime(p) {
        Ok(p)
    } else {
        Err(usage(format!("{p} is not an odd prime")))
    }
}

/// `A,1,2,2,2` or `(A,(1,2,2,2))`.
pub fn parse_class(s: &str) -> Result<SchemeClass, CliError> {
    let cleaned: String = s.chars().filter(|c| !"() ".contains(*c)).collect();
    let parts: Vec<&str> = cleaned.split(',').collect();
    let bad = || usage(format!("bad scheme class: {s}"));
    if parts.len() != 5 {
        return Err(bad());
    }
    let kind = match parts[0] {
        "A" | "a" => Kind::A,
        "B" | "b" => Kind::B,
        "C" | "c" => Kind::C,
        _ => return Err(bad()),
    };
    let n: Vec<usize> = parts[1..].iter().map(|x| x.parse().map_err(|_| bad())).collect::<Result<_, _>>()?;
    let class = SchemeClass::new(kind, n[0], n[1], n[2], n[3]);
    if !class.is_valid() {
        return Err(usage(format!("parameters out of range for kind {:?}: {s}", class.kind)));
    }
    Ok(class)
}

pub fn parse_chart(s: Option<&str>, scheme: &MappingScheme) -> Result<ChartChoice, CliError> {
    match s {
        None => Ok(ChartChoice::for_scheme(scheme)),
        Some("direct") => Ok(ChartChoice::Direct),
        Some("swapped") => Ok(ChartChoice::Swapped),
        Some(other) => Err(usage(format!("unknown chart {other}"))),
    }
}

pub fn chart_from_str(s: &str) -> Result<ChartChoice, CliError> {
    match s {
        "direct" => Ok(ChartChoice::Direct),
        "swapped" => Ok(ChartChoice::Swapped),
        other => Err(CliError::Parse(format!("unknown chart {other}"))),
    }
}

/// A solution document as written by `moduli solve`.
pub struct SolutionDoc {
    pub scheme: MappingScheme,
    pub chart: ChartChoice,
    /// `None` over ℚ.
    pub p: Option<u64>,
    pub points: Vec<(BigRational, BigRational)>,
}

pub fn read_solution(path: &Path) -> Result<SolutionDoc, CliError> {
    let v: Value = read_json(path)?;
    let field = |k: &str| v.get(k).ok_or_else(|| CliError::Parse(format!("{}: missing {k}", path.display())));
    let scheme = scheme_from_value(field("scheme")?)?;
    let chart = chart_from_str(field("chart")?.as_str().unwrap_or(""))?;
    let p = match v.get("p") {
        Some(p) => Some(p.as_u64().ok_or_else(|| CliError::Parse("p is not an integer".into()))?),
        None => None,
    };
    let pts: Vec<(String, String)> =
        serde_json::from_value(field("points")?.clone()).map_err(|e| CliError::Parse(e.to_string()))?;
    let points = pts
        .iter()
        .map(|(a, b)| match (parse_rational(a), parse_rational(b)) {
            (Some(a), Some(b)) => Ok((a, b)),
            _ => Err(CliError::Parse(format!("bad point ({a}, {b})"))),
        })
        .collect::<Result<_, _>>()?;
    Ok(SolutionDoc { scheme, chart, p, points })
}
