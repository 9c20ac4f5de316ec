use num_rational::BigRational;
use pcfquad::algebra::{Rationals, UniPoly};
use pcfquad::dynamics::QuadraticMorphism;
use pcfquad::mapping_scheme::{Kind, MappingScheme, SchemeClass};
use pcfquad::moduli::{count_table, eliminant, moduli_equations, solve_fiber_mod_p, solve_fiber_rational, ChartChoice};
use pcfquad::trees::{cluster_tree, morphism_config, quotient_vs_stabilize_check};
use serde_json::json;

use super::pretty;
use crate::error::{usage, CliError};
use crate::Emit;

type Check = (&'static str, fn() -> Result<bool, CliError>);

fn scheme(kind: Kind, l: usize, k: usize, n: usize, m: usize) -> MappingScheme {
    SchemeClass::new(kind, l, k, n, m).build()
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn a1222_rational() -> Result<bool, CliError> {
    let sol = solve_fiber_rational(&moduli_equations(&scheme(Kind::A, 1, 2, 2, 2))?, 10_000)?;
    Ok(sol.points == vec![(q(-4), q(2))])
}

fn a1222_counts() -> Result<bool, CliError> {
    let t = count_table(&scheme(Kind::A, 1, 2, 2, 2), &[3, 5, 7, 11, 13])?;
    Ok(t.counts() == vec![0, 1, 1, 1, 1])
}

fn b1113_factor() -> Result<bool, CliError> {
    let e = eliminant(&moduli_equations(&scheme(Kind::B, 1, 1, 1, 3))?)?;
    let f = e.poly.map(Rationals, |c| BigRational::from_integer(c.clone()));
    Ok(f.rem(&UniPoly::from_i64s(Rationals, &[1, 3, 1])).is_zero())
}

fn b1113_counts() -> Result<bool, CliError> {
    let t = count_table(&scheme(Kind::B, 1, 1, 1, 3), &[5, 7, 11, 13, 19])?;
    Ok(t.counts() == vec![1, 0, 2, 0, 2] && t.rows[0].ramified == Some(true))
}

fn a1212_empty() -> Result<bool, CliError> {
    let pres = moduli_equations(&scheme(Kind::A, 1, 2, 1, 2))?;
    if !solve_fiber_rational(&pres, 10_000)?.points.is_empty() {
        return Ok(false);
    }
    for p in (3..=50).filter(|&p| pcfquad::algebra::primes::is_prime(p)) {
        if !solve_fiber_mod_p(&pres, p)?.points.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn tree_at_three() -> Result<bool, CliError> {
    let s = scheme(Kind::A, 1, 2, 2, 2);
    let (ext, cfg) = morphism_config(&s, ChartChoice::Direct.marking(), &q(-4), &q(2), 3)?;
    let t = cluster_tree(&cfg)?;
    let check = quotient_vs_stabilize_check(&cfg, &ext)?;
    Ok(t.len() == 3 && check.isomorphic && check.quotient.len() == 2)
}

fn sign_relation() -> Result<bool, CliError> {
    let f = QuadraticMorphism::chart_a(Rationals, q(-4), q(2))?;
    Ok(f.find_sign_relation()? == (4, 2))
}

const CHECKS: &[Check] = &[
    ("A(1,2,2,2) over Q is {(-4, 2)}", a1222_rational),
    ("A(1,2,2,2) counts at 3..13 are 0 1 1 1 1", a1222_counts),
    ("B(1,1,1,3) eliminant has factor a^2 + 3a + 1", b1113_factor),
    ("B(1,1,1,3) counts at 5,7,11,13,19 are 1 0 2 0 2", b1113_counts),
    ("A(1,2,1,2) empty over Q and F_p, p <= 50", a1212_empty),
    ("(-4, 2) at p = 3: three components, quotient ok", tree_at_three),
    ("(-4, 2) sign relation is (4, 2)", sign_relation),
];

pub fn run(emit: Emit) -> Result<String, CliError> {
    let results: Vec<(&str, Result<bool, CliError>)> = CHECKS.iter().map(|(name, f)| (*name, f())).collect();
    let failed = results.iter().filter(|(_, r)| !matches!(r, Ok(true))).count();
    let out = match emit {
        Emit::Text => results
            .iter()
            .map(|(name, r)| match r {
                Ok(true) => format!("{name:<52} PASS\n"),
                Ok(false) => format!("{name:<52} FAIL\n"),
                Err(e) => format!("{name:<52} FAIL ({})\n", e.name()),
            })
            .collect(),
        Emit::Json => pretty(&json!(results
            .iter()
            .map(|(name, r)| json!({"check": name, "pass": matches!(r, Ok(true))}))
            .collect::<Vec<_>>())),
        Emit::Dot => return Err(usage("reproduce-paper has no dot output")),
    };
    if failed > 0 {
        let _ = std::io::Write::write_all(&mut std::io::stdout(), out.as_bytes());
        return Err(CliError::ChecksFailed(failed, results.len()));
    }
    Ok(out)
}
