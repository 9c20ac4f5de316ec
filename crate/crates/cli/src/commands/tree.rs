use std::fs;

use pcfquad::trees::{
    cluster_tree, cross_ratio_type, detect_forbidden, morphism_config, quotient_vs_stabilize_check, stabilize,
    Forbidden, ForbiddenMarks, MarkedTree,
};
use serde_json::{json, Value};

use super::pretty;
use crate::error::{usage, CliError};
use crate::io::{
    parse_chart, parse_point, parse_prime, parse_primes, parse_rational_arg, read_points, read_scheme, read_solution,
    read_tree,
};
use crate::{Emit, TreeCmd};

fn emit_tree(t: &MarkedTree, emit: Emit) -> Result<String, CliError> {
    match emit {
        Emit::Json => Ok(pretty(&json!(t))),
        Emit::Dot => Ok(t.to_dot()),
        Emit::Text => Ok(t.canonical_form()),
    }
}

pub fn run(cmd: TreeCmd) -> Result<String, CliError> {
    match cmd {
        TreeCmd::Build { points, prime, emit } => {
            let cfg = read_points(&points, parse_prime(prime)?)?;
            emit_tree(&cluster_tree(&cfg)?, emit)
        }
        TreeCmd::Stabilize { tree, keep, emit } => {
            let t = read_tree(&tree)?;
            let keep: Vec<&str> = keep.iter().map(|s| s.as_str()).collect();
            emit_tree(&stabilize(&t, &keep)?, emit)
        }
        TreeCmd::QuotientCheck { scheme, point, prime, chart } => {
            let s = read_scheme(&scheme)?;
            let chart = parse_chart(chart.as_deref(), &s)?;
            let (a, b) = point.split_once(',').ok_or_else(|| usage(format!("expected a,b: {point}")))?;
            let (a, b) = (parse_rational_arg(a)?, parse_rational_arg(b)?);
            let (ext, cfg) = morphism_config(&s, chart.marking(), &a, &b, parse_prime(prime)?)?;
            let check = quotient_vs_stabilize_check(&cfg, &ext)?;
            Ok(pretty(&json!(check)))
        }
        TreeCmd::ForbiddenScan { corpus, primes } => forbidden_scan(&corpus, &parse_primes(&primes)?),
        TreeCmd::CrossRatio { points, prime } => {
            if points.len() != 4 {
                return Err(usage(format!("need 4 points, got {}", points.len())));
            }
            let pts = points.iter().map(|s| parse_point(s)).collect::<Result<Vec<_>, _>>()?;
            let t = cross_ratio_type([&pts[0], &pts[1], &pts[2], &pts[3]], parse_prime(prime)?)?;
            Ok(pretty(&json!({"type": t})))
        }
    }
}

fn forbidden_scan(dir: &std::path::Path, primes: &[u64]) -> Result<String, CliError> {
    let io_err = |source| CliError::Io { path: dir.display().to_string(), source };
    let mut files: Vec<_> =
        fs::read_dir(dir).map_err(io_err)?.map(|e| e.map(|e| e.path())).collect::<Result<_, _>>().map_err(io_err)?;
    files.retain(|p| p.extension().is_some_and(|e| e == "json"));
    files.sort();
    let mut entries: Vec<Value> = Vec::new();
    let mut violations = 0;
    for path in &files {
        let doc = read_solution(path)?;
        if doc.p.is_some() {
            continue;
        }
        for (a, b) in &doc.points {
            for &p in primes {
                let (ext, cfg) = morphism_config(&doc.scheme, doc.chart.marking(), a, b, p)?;
                let result = detect_forbidden(&cluster_tree(&cfg)?, &ForbiddenMarks::from_extension(&ext))?;
                if result != Forbidden::Absent {
                    violations += 1;
                }
                entries.push(json!({
                    "file": path.file_name().map(|n| n.to_string_lossy().into_owned()),
                    "point": [a.to_string(), b.to_string()],
                    "p": p,
                    "result": result,
                }));
            }
        }
    }
    Ok(pretty(&json!({"checked": entries.len(), "violations": violations, "entries": entries})))
}
