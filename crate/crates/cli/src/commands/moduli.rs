use pcfquad::algebra::{PrimeField, Rationals};
use pcfquad::moduli::{
    certify, count_table, moduli_equations_in_chart, solve_fiber_mod_p, solve_fiber_rational, ModuliPresentation,
};
use serde_json::{json, Value};

use super::pretty;
use crate::error::{usage, CliError};
use crate::io::{parse_chart, parse_prime, parse_primes, read_scheme, read_solution};
use crate::{Emit, ModuliCmd};

fn with_origin(mut v: Value, pres: &ModuliPresentation) -> Value {
    v["scheme"] = json!(pres.scheme);
    v["chart"] = json!(pres.chart.as_str());
    v
}

pub fn run(cmd: ModuliCmd) -> Result<String, CliError> {
    match cmd {
        ModuliCmd::Eqs { scheme, chart, emit } => {
            let s = read_scheme(&scheme)?;
            let pres = moduli_equations_in_chart(&s, parse_chart(chart.as_deref(), &s)?)?;
            match emit {
                Emit::Json => Ok(pretty(&pres.to_json())),
                Emit::Text => Ok(pres.to_text()),
                Emit::Dot => Err(usage("eqs has no dot output")),
            }
        }
        ModuliCmd::Solve { scheme, mod_p, rational, height, chart } => {
            let s = read_scheme(&scheme)?;
            let pres = moduli_equations_in_chart(&s, parse_chart(chart.as_deref(), &s)?)?;
            let v = match (mod_p, rational) {
                (Some(p), false) => solve_fiber_mod_p(&pres, parse_prime(p)?)?.to_json(),
                (None, true) => solve_fiber_rational(&pres, height)?.to_json(),
                _ => return Err(usage("give exactly one of --mod-p and --rational")),
            };
            Ok(pretty(&with_origin(v, &pres)))
        }
        ModuliCmd::Count { scheme, primes, emit } => {
            let primes = parse_primes(&primes)?;
            let table = count_table(&read_scheme(&scheme)?, &primes)?;
            match emit {
                Emit::Json => Ok(pretty(&table.to_json())),
                Emit::Text => Ok(table.to_text()),
                Emit::Dot => Err(usage("count has no dot output")),
            }
        }
        ModuliCmd::Certify { solution } => {
            let doc = read_solution(&solution)?;
            for (a, b) in &doc.points {
                let ok = match doc.p {
                    None => certify(&doc.scheme, doc.chart, &Rationals, a, b),
                    Some(p) => {
                        let k = PrimeField::new(p)?;
                        let r = |x: &num_rational::BigRational| -> Option<u64> {
                            x.is_integer().then(|| pcfquad::algebra::Ring::from_int(&k, x.numer()))
                        };
                        match (r(a), r(b)) {
                            (Some(a), Some(b)) => certify(&doc.scheme, doc.chart, &k, &a, &b),
                            _ => false,
                        }
                    }
                };
                if !ok {
                    return Err(CliError::NotCertified(format!("({a}, {b})")));
                }
            }
            Ok(pretty(&json!({"certified": true, "points": doc.points.len()})))
        }
    }
}
