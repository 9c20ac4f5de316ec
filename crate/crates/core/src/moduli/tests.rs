use num_bigint::BigInt;
use num_rational::BigRational;

use super::*;
use crate::algebra::{Field, Rationals};
use crate::dynamics::chart_glue;
use crate::mapping_scheme::enumerate;

fn class(kind: Kind, l: usize, k: usize, n: usize, m: usize) -> MappingScheme {
    SchemeClass::new(kind, l, k, n, m).build()
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn rel(c: &Condition) -> String {
    format!("{} = {}", c.lhs, c.rhs)
}

#[test]
fn relations_of_examples() {
    let p = moduli_equations(&class(Kind::A, 1, 2, 2, 2)).unwrap();
    assert_eq!(p.chart, ChartChoice::Direct);
    assert_eq!([rel(&p.closed[0]), rel(&p.closed[1])], ["i1 = i3", "j2 = j3"]);
    let p = moduli_equations(&class(Kind::B, 1, 1, 1, 3)).unwrap();
    assert_eq!([rel(&p.closed[0]), rel(&p.closed[1])], ["i1 = j4", "j1 = i2"]);
    // 4 elements: 6 distinctness conditions and a - b.
    assert_eq!(p.open.len(), 7);
    assert_eq!(p.open.last().unwrap().poly.to_string(), "a - b");
}

#[test]
fn small_schemes_rejected() {
    for s in enumerate(2).unwrap() {
        assert_eq!(moduli_equations(&s), Err(ModuliError::TooSmall(2)));
    }
}

#[test]
fn closed_equations_vanish_at_known_point() {
    let p = moduli_equations(&class(Kind::A, 1, 2, 2, 2)).unwrap();
    for c in &p.closed {
        let v = c.poly.eval_named(&[("a", BigInt::from(-4)), ("b", BigInt::from(2))]);
        assert!(v.is_zero());
    }
    for c in &p.open {
        let v = c.poly.eval_named(&[("a", BigInt::from(-4)), ("b", BigInt::from(2))]);
        assert!(!v.is_zero());
    }
}

#[test]
fn not_all_occur_mod_p() {
    let p = moduli_equations(&class(Kind::A, 1, 2, 2, 2)).unwrap();
    assert_eq!(solve_fiber_mod_p(&p, 5).unwrap().points, vec![(1, 2)]);
    assert!(solve_fiber_mod_p(&p, 3).unwrap().points.is_empty());
    assert_eq!(solve_fiber_mod_p(&p, 2), Err(ModuliError::InvalidPrime(2)));
}

#[test]
fn all_occur_never() {
    let p = moduli_equations(&class(Kind::A, 1, 2, 1, 2)).unwrap();
    for prime in [3, 5, 7, 11, 13] {
        assert!(solve_fiber_mod_p(&p, prime).unwrap().points.is_empty());
    }
    assert!(solve_fiber_rational(&p, 100).unwrap().points.is_empty());
}

#[test]
fn rational_not_all_occur() {
    let p = moduli_equations(&class(Kind::A, 1, 2, 2, 2)).unwrap();
    let sol = solve_fiber_rational(&p, 100).unwrap();
    assert_eq!(sol.points, vec![(q(-4), q(2))]);
    assert_eq!(sol.to_json()["points"], serde_json::json!([["-4", "2"]]));
}

#[test]
fn ramified_lift_eliminant() {
    let p = moduli_equations(&class(Kind::B, 1, 1, 1, 3)).unwrap();
    let sol = solve_fiber_rational(&p, 100).unwrap();
    assert!(sol.points.is_empty());
    let e = sol.eliminant.unwrap().map(Rationals, |c| BigRational::from_integer(c.clone()));
    let factor = UniPoly::new(Rationals, vec![q(1), q(3), q(1)]);
    assert!(e.rem(&factor).is_zero());
}

#[test]
fn ramified_lift_oracle() {
    let s = class(Kind::B, 1, 1, 1, 3);
    let sol = brute_force_oracle(&s, 11).unwrap();
    assert_eq!(sol.points.len(), 2);
    assert!(sol.points.iter().all(|&(_, b)| b == 0));
    assert!(brute_force_oracle(&s, 7).unwrap().points.is_empty());
}

#[test]
fn count_tables() {
    let t = count_table(&class(Kind::A, 1, 2, 2, 2), &[3, 5, 7, 11, 13]).unwrap();
    assert_eq!(t.counts(), vec![0, 1, 1, 1, 1]);
    let t = count_table(&class(Kind::B, 1, 1, 1, 3), &[5, 7, 11, 13]).unwrap();
    assert_eq!(t.counts(), vec![1, 0, 2, 0]);
    assert_eq!(t.rows[0].ramified, Some(true));
    assert_eq!(t.rows[2].ramified, Some(false));
    assert!(count_table(&class(Kind::B, 1, 1, 1, 3), &[]).unwrap().rows.is_empty());
}

#[test]
fn oracle_matches_solver_small() {
    for size in 3..=4 {
        for s in enumerate(size).unwrap() {
            let pres = moduli_equations(&s).unwrap();
            for p in [3, 5, 7] {
                let a = solve_fiber_mod_p(&pres, p).unwrap().points;
                let b = brute_force_oracle(&s, p).unwrap().points;
                assert_eq!(a, b, "{} at {p}", SchemeClass::of(&s));
            }
        }
    }
}

#[test]
fn charts_agree_where_both_apply() {
    let k = PrimeField::new(13).unwrap();
    let mut checked = 0;
    for size in 3..=5 {
        for s in enumerate(size).unwrap() {
            if !(ChartChoice::Direct.covers(&s) && ChartChoice::Swapped.covers(&s)) {
                continue;
            }
            let direct = solve_fiber_mod_p(&moduli_equations_in_chart(&s, ChartChoice::Direct).unwrap(), 13).unwrap();
            let swapped = solve_fiber_mod_p(&moduli_equations_in_chart(&s, ChartChoice::Swapped).unwrap(), 13).unwrap();
            // (a', b') with P = ∞ is (c, d) = (b', a') with P = 0.
            let mut glued: Vec<(u64, u64)> =
                swapped.points.iter().map(|&(a, b)| chart_glue(&k, &b, &a).unwrap()).collect();
            glued.sort_unstable();
            assert_eq!(glued, direct.points, "{}", SchemeClass::of(&s));
            checked += direct.points.len();
        }
    }
    assert!(checked > 0);
    let _ = k.characteristic();
}

#[test]
fn certification_is_sound() {
    let k = Rationals;
    let s = class(Kind::A, 1, 2, 2, 2);
    assert!(certify(&s, ChartChoice::Direct, &k, &q(-4), &q(2)));
    assert!(!certify(&s, ChartChoice::Direct, &k, &q(-3), &q(2)));
}
