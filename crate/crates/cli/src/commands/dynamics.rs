use std::fmt::Display;

use num_rational::BigRational;
use pcfquad::algebra::{Field, PrimeField, Rationals, Ring};
use pcfquad::dynamics::{postcritical_scheme, Chart, Postcritical, ProjPoint, QuadraticMorphism};
use pcfquad::monodromy::frobenius_cycles;
use serde_json::{json, Value};

use super::pretty;
use crate::error::{usage, CliError};
use crate::io::{parse_point, parse_prime, parse_rational_arg};
use crate::{Emit, FrobeniusArgs, OrbitArgs};

fn reduce(k: &PrimeField, x: &BigRational) -> Result<u64, CliError> {
    let den = k.from_int(x.denom());
    let inv = k.inv(&den).ok_or_else(|| usage(format!("{x} has no reduction mod {}", k.p())))?;
    Ok(k.mul(&k.from_int(x.numer()), &inv))
}

fn chart_of(args: &OrbitArgs) -> Result<Chart<BigRational>, CliError> {
    match (&args.a, &args.b, &args.c, &args.d) {
        (Some(a), Some(b), None, None) => Ok(Chart::A { a: parse_rational_arg(a)?, b: parse_rational_arg(b)? }),
        (None, None, Some(c), Some(d)) => Ok(Chart::B { c: parse_rational_arg(c)?, d: parse_rational_arg(d)? }),
        _ => Err(usage("give either --a and --b, or --c and --d")),
    }
}

fn orbit_json<F: Field>(f: &QuadraticMorphism<F>, start: ProjPoint<F::Elem>, args: &OrbitArgs) -> Value
where
    F::Elem: Display,
{
    if args.postcritical {
        return match postcritical_scheme(f, args.limit) {
            Postcritical::Finite(o) => {
                let points: serde_json::Map<String, Value> =
                    o.scheme.names().iter().zip(&o.points).map(|(n, x)| (n.clone(), json!(x.to_string()))).collect();
                json!({"scheme": o.scheme, "points": points})
            }
            Postcritical::Exceeded => json!({"exceeded": args.limit}),
        };
    }
    json!(f.orbit(&start, args.limit).iter().map(|x| x.to_string()).collect::<Vec<_>>())
}

pub fn orbit(args: OrbitArgs) -> Result<String, CliError> {
    let chart = chart_of(&args)?;
    let start = parse_point(&args.start)?;
    let v = match args.prime {
        None => orbit_json(&QuadraticMorphism::new(Rationals, chart)?, start, &args),
        Some(p) => {
            let k = PrimeField::new(parse_prime(p)?)?;
            let r = |x: &BigRational| reduce(&k, x);
            let chart = match chart {
                Chart::A { a, b } => Chart::A { a: r(&a)?, b: r(&b)? },
                Chart::B { c, d } => Chart::B { c: r(&c)?, d: r(&d)? },
                Chart::T { .. } => unreachable!("not parsed"),
            };
            let start = match start {
                ProjPoint::Finite(x) => ProjPoint::Finite(r(&x)?),
                ProjPoint::Infinity => ProjPoint::Infinity,
            };
            orbit_json(&QuadraticMorphism::new(k, chart)?, start, &args)
        }
    };
    Ok(pretty(&v))
}

pub fn frobenius(args: FrobeniusArgs) -> Result<String, CliError> {
    let k = PrimeField::new(parse_prime(args.prime)?)?;
    let a = reduce(&k, &parse_rational_arg(&args.a)?)?;
    let b = reduce(&k, &parse_rational_arg(&args.b)?)?;
    let c = match parse_point(&args.basepoint)? {
        ProjPoint::Finite(x) => ProjPoint::Finite(reduce(&k, &x)?),
        ProjPoint::Infinity => ProjPoint::Infinity,
    };
    let f = QuadraticMorphism::chart_a(k, a, b)?;
    let lv = frobenius_cycles(&f, &c, args.depth)?;
    match args.emit {
        Emit::Json => Ok(pretty(&lv.to_json())),
        Emit::Text => Ok(lv
            .levels
            .iter()
            .enumerate()
            .map(|(n, t)| format!("{n}: {}\n", t.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")))
            .collect()),
        Emit::Dot => Err(usage("frobenius has no dot output")),
    }
}
