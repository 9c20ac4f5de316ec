use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use super::*;
use crate::algebra::Rationals;
use crate::dynamics::{postcritical_scheme, CriticalMarking, Postcritical, ProjPoint, QuadraticMorphism};
use crate::mapping_scheme::{ExtendedScheme, Kind, MappingScheme, SchemeClass};

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn fin(n: i64) -> RationalPoint {
    ProjPoint::Finite(q(n))
}

fn cfg(pts: &[(&str, RationalPoint)], p: u64) -> PointConfig {
    PointConfig::new(pts.iter().map(|(l, x)| (l.to_string(), x.clone())).collect(), p).unwrap()
}

fn tree(n: usize, edges: &[(usize, usize, u32)], marks: &[(&str, usize)]) -> MarkedTree {
    MarkedTree::new(
        n,
        edges.iter().map(|&(u, v, thickness)| Edge { u, v, thickness }).collect(),
        marks.iter().map(|&(m, v)| (m.to_string(), v)).collect(),
    )
    .unwrap()
}

fn partition(t: &MarkedTree) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> =
        (0..t.len()).map(|v| t.marks_at(v).into_iter().map(String::from).collect()).collect();
    out.retain(|c| !c.is_empty());
    out.sort();
    out
}

fn not_all_occur() -> (ExtendedScheme, PointConfig) {
    let s = SchemeClass::new(Kind::A, 1, 2, 2, 2).build();
    let ext = ExtendedScheme::new(&s);
    let f = QuadraticMorphism::chart_a(Rationals, q(-4), q(2)).unwrap();
    let Postcritical::Finite(orbit) = postcritical_scheme(&f, 10) else { panic!() };
    let point_of = |name: &str| orbit.point_of(name).unwrap().clone();
    let c = extended_config(&ext, point_of, CriticalMarking::Standard, 3).unwrap();
    (ext, c)
}

#[test]
fn three_points_give_one_vertex() {
    let t = cluster_tree(&cfg(&[("1", fin(0)), ("2", fin(7)), ("3", ProjPoint::Infinity)], 7)).unwrap();
    assert_eq!(t.len(), 1);
    assert_eq!(t.marks_at(0).len(), 3);
}

#[test]
fn config_errors() {
    let two = vec![("a".to_string(), fin(0)), ("b".to_string(), fin(1))];
    assert!(matches!(PointConfig::new(two, 3), Err(TreeError::NormalizationFailure(_))));
    let dup = vec![("a".to_string(), fin(0)), ("b".to_string(), fin(1)), ("c".to_string(), fin(1))];
    assert!(matches!(PointConfig::new(dup, 3), Err(TreeError::NotInjective(_))));
    let ok = vec![("a".to_string(), fin(0)), ("b".to_string(), fin(1)), ("c".to_string(), fin(2))];
    assert_eq!(PointConfig::new(ok.clone(), 2), Err(TreeError::InvalidPrime(2)));
    assert_eq!(PointConfig::new(ok, 9), Err(TreeError::InvalidPrime(9)));
}

#[test]
fn not_all_occur_tree() {
    let (_, c) = not_all_occur();
    assert_eq!(c.point("s:i1"), Some(&fin(2)));
    assert_eq!(c.point("j0"), Some(&ProjPoint::Infinity));
    let t = cluster_tree(&c).unwrap();
    assert_eq!(t.len(), 3);
    assert_eq!(t.marks_at(0), vec!["i2", "j0"]);
    let mut leaves: Vec<Vec<&str>> = vec![t.marks_at(1), t.marks_at(2)];
    leaves.sort();
    assert_eq!(leaves, vec![vec!["i1", "j1"], vec!["j2", "s:i1"]]);
    assert!(t.edges().iter().all(|e| e.thickness == 1));
}

#[test]
fn nested_valuations_at_five() {
    // v(p - 0) = 1, v(p² - 0) = 2, v(p² - p) = 1: {0, p²} splits off from p one level down.
    let t = cluster_tree(&cfg(&[("a", fin(0)), ("b", fin(5)), ("c", fin(25)), ("d", fin(1))], 5)).unwrap();
    assert_eq!(t.len(), 2);
    assert_eq!(partition(&t), vec![vec!["a".to_string(), "c".to_string()], vec!["b".to_string(), "d".to_string()]]);
    assert_eq!(t.edges()[0].thickness, 1);
    let t = cluster_tree(&cfg(
        &[("inf", ProjPoint::Infinity), ("a", fin(0)), ("b", fin(5)), ("c", fin(125)), ("d", fin(1))],
        5,
    ))
    .unwrap();
    assert_eq!(t.len(), 3);
    let th: Vec<u32> = t.edges().iter().map(|e| e.thickness).collect();
    assert_eq!(th, vec![1, 2]);
    assert_eq!(t.marks_at(2), vec!["a", "c"]);
}

#[test]
fn stabilize_examples() {
    let (_, c) = not_all_occur();
    let t = cluster_tree(&c).unwrap();
    let all: Vec<&str> = c.labels().iter().map(|s| s.as_str()).collect();
    assert!(stabilize(&t, &all).unwrap().is_isomorphic(&t));
    let s = stabilize(&t, &["i1", "i2", "j1", "j2"]).unwrap();
    assert_eq!(s.len(), 2);
    assert_eq!(s.edges()[0].thickness, 1);
    assert_eq!(partition(&s), vec![vec!["i1".to_string(), "j1".to_string()], vec!["i2".to_string(), "j2".to_string()]]);

    let chain = tree(3, &[(0, 1, 2), (1, 2, 3)], &[("a", 0), ("b", 0), ("m", 1), ("c", 2), ("d", 2)]);
    let s = stabilize(&chain, &["a", "b", "c", "d"]).unwrap();
    assert_eq!(s.len(), 2);
    assert_eq!(s.edges()[0].thickness, 5);

    assert_eq!(stabilize(&chain, &["a", "b"]), Err(TreeError::TooFewMarks(2)));
    assert_eq!(stabilize(&chain, &["a", "b", "zz"]), Err(TreeError::UnknownMark("zz".into())));
}

#[test]
fn involution_and_quotient() {
    let (ext, c) = not_all_occur();
    let inv = involution_from_config(&c, &ext).unwrap();
    assert_eq!(inv.fixed_vertices(), vec![0]);
    assert_eq!(inv.vertex_map, vec![0, 2, 1]);
    let quot = sigma_quotient(&inv, &ext).unwrap();
    assert_eq!(quot.len(), 2);
    assert_eq!(quot.edges()[0].thickness, 1);
    assert_eq!(
        partition(&quot),
        vec![vec!["i1".to_string(), "j1".to_string()], vec!["i2".to_string(), "j2".to_string()]]
    );
    let check = quotient_vs_stabilize_check(&c, &ext).unwrap();
    assert!(check.isomorphic);
}

#[test]
fn single_vertex_involution_is_identity() {
    let s = MappingScheme::from_names(&["x", "y", "z"], &[("x", "y"), ("y", "z"), ("z", "y")], "x", "z").unwrap();
    let ext = ExtendedScheme::new(&s);
    let labels: Vec<String> = ext.names().to_vec();
    let t = MarkedTree::new(1, vec![], labels.iter().map(|l| (l.clone(), 0)).collect()).unwrap();
    let inv = involution_from_extension(&t, &ext).unwrap();
    assert_eq!(inv.vertex_map, vec![0]);
    let quot = sigma_quotient(&inv, &ext).unwrap();
    assert_eq!(quot.len(), 1);
    let names: Vec<&String> = quot.marks().keys().collect();
    assert_eq!(names, s.names().iter().collect::<Vec<_>>());
}

#[test]
fn fixed_edges_double() {
    // i0 at 0 and j0 at ∞ on two fixed vertices; everything else is paired off.
    let s = SchemeClass::new(Kind::A, 1, 2, 2, 2).build();
    let ext = ExtendedScheme::new(&s);
    let name = |x: usize| ext.name(x).to_string();
    let (i0, j0) = (ext.i0(), ext.j0());
    let mut marks = BTreeMap::new();
    marks.insert(name(i0), 1);
    marks.insert(name(j0), 0);
    for (k, (a, b)) in ext.orbits().into_iter().filter(|&(a, b)| a != b).enumerate() {
        marks.insert(name(a), k % 2);
        marks.insert(name(b), k % 2);
    }
    let t = MarkedTree::new(2, vec![Edge { u: 0, v: 1, thickness: 3 }], marks).unwrap();
    let inv = involution_from_extension(&t, &ext).unwrap();
    assert_eq!(inv.fixed_vertices(), vec![0, 1]);
    let quot = sigma_quotient(&inv, &ext).unwrap();
    assert_eq!(quot.edges()[0].thickness, 6);
}

#[test]
fn non_equivariant_config_rejected() {
    let (ext, c) = not_all_occur();
    let moved: Vec<(String, RationalPoint)> =
        c.iter().map(|(l, x)| (l.to_string(), if l == "s:i1" { fin(5) } else { x.clone() })).collect();
    let c = PointConfig::new(moved, 3).unwrap();
    assert!(matches!(involution_from_config(&c, &ext), Err(TreeError::NotEquivariant(_))));
}

#[test]
fn fixed_locus_must_be_spine() {
    // Two leaves swapped by σ are fine; a fixed leaf off the spine is not.
    let (ext, c) = not_all_occur();
    let t = cluster_tree(&c).unwrap();
    let bad = t.relabel(|m| match m {
        "i2" => "s:i1".into(),
        "s:i1" => "i2".into(),
        other => other.into(),
    });
    let bad = bad.unwrap();
    assert!(involution_from_extension(&bad, &ext).is_err());
}

#[test]
fn bone_detection() {
    // P0 - x - Q0 spine, P1 hangs off x, Q1 off Q0's vertex.
    let t = tree(
        5,
        &[(0, 1, 1), (1, 2, 1), (1, 3, 1), (2, 4, 1)],
        &[("P0", 0), ("u", 0), ("Q0", 2), ("P1", 3), ("v", 3), ("Q1", 4), ("w", 4)],
    );
    let marks = ForbiddenMarks { p0: "P0".into(), p1: "P1".into(), p2: None, q0: "Q0".into(), q1: "Q1".into() };
    assert_eq!(detect_forbidden(&t, &marks), Ok(Forbidden::PatternBone));
    let flipped = ForbiddenMarks { p1: "Q1".into(), q1: "P1".into(), ..marks.clone() };
    assert_eq!(detect_forbidden(&t, &flipped), Ok(Forbidden::Absent));
    let with_p2 = ForbiddenMarks { p2: Some("v".into()), ..marks.clone() };
    assert_eq!(detect_forbidden(&t, &with_p2), Ok(Forbidden::PatternBone));
    let missing = ForbiddenMarks { q1: "nope".into(), ..marks };
    assert_eq!(detect_forbidden(&t, &missing), Err(TreeError::UnresolvedMark("nope".into())));
}

#[test]
fn an_detection() {
    // Branch off the spine at 1 toward 3, P1 hangs at 3, P2 sits at 4 further out.
    let t = tree(
        6,
        &[(0, 1, 1), (1, 2, 1), (1, 3, 1), (3, 4, 1), (2, 5, 1)],
        &[("P0", 0), ("u", 0), ("Q0", 5), ("z", 5), ("P1", 3), ("P2", 4), ("y", 4), ("Q1", 2)],
    );
    let marks =
        ForbiddenMarks { p0: "P0".into(), p1: "P1".into(), p2: Some("P2".into()), q0: "Q0".into(), q1: "Q1".into() };
    assert_eq!(detect_forbidden(&t, &marks), Ok(Forbidden::PatternAn));
}

#[test]
fn single_vertex_has_no_pattern() {
    let t = tree(1, &[], &[("P0", 0), ("P1", 0), ("P2", 0), ("Q0", 0), ("Q1", 0)]);
    let marks =
        ForbiddenMarks { p0: "P0".into(), p1: "P1".into(), p2: Some("P2".into()), q0: "Q0".into(), q1: "Q1".into() };
    assert_eq!(detect_forbidden(&t, &marks), Ok(Forbidden::Absent));
}

#[test]
fn not_all_occur_has_no_pattern() {
    let (ext, c) = not_all_occur();
    let t = cluster_tree(&c).unwrap();
    let marks = ForbiddenMarks::from_extension(&ext);
    assert_eq!(marks.p0, "i2");
    assert_eq!(marks.q0, "j0");
    assert_eq!(detect_forbidden(&t, &marks), Ok(Forbidden::Absent));
}

#[test]
fn cross_ratio_examples() {
    let inf = ProjPoint::Infinity;
    assert_eq!(cross_ratio_type([&fin(0), &fin(1), &inf, &fin(3)], 7), Ok(CrossRatioType::Generic));
    let pts = [fin(0), fin(5), inf.clone(), fin(1)];
    assert_eq!(cross_ratio_type([&pts[0], &pts[1], &pts[2], &pts[3]], 5), Ok(CrossRatioType::Split12_34));
    let t = cluster_tree(&cfg(&[("1", pts[0].clone()), ("2", pts[1].clone()), ("3", inf.clone()), ("4", fin(1))], 5))
        .unwrap();
    assert_eq!(partition(&t), vec![vec!["1".to_string(), "2".to_string()], vec!["3".to_string(), "4".to_string()]]);
    assert_eq!(cross_ratio_type([&fin(0), &fin(0), &inf, &fin(1)], 5), Err(TreeError::NotDistinct));
}

fn split_pairs(t: CrossRatioType) -> Option<[[usize; 2]; 2]> {
    match t {
        CrossRatioType::Generic => None,
        CrossRatioType::Split12_34 => Some([[0, 1], [2, 3]]),
        CrossRatioType::Split13_24 => Some([[0, 2], [1, 3]]),
        CrossRatioType::Split14_23 => Some([[0, 3], [1, 2]]),
    }
}

fn normalize_pairs(mut pairs: [[usize; 2]; 2]) -> [[usize; 2]; 2] {
    for pr in &mut pairs {
        pr.sort();
    }
    pairs.sort();
    pairs
}

#[test]
fn cross_ratio_permutations() {
    let pts = [fin(0), fin(5), ProjPoint::Infinity, fin(1)];
    let base = split_pairs(cross_ratio_type([&pts[0], &pts[1], &pts[2], &pts[3]], 5).unwrap()).unwrap();
    let perms = [[1, 0, 2, 3], [2, 3, 0, 1], [0, 2, 1, 3], [3, 1, 2, 0], [1, 2, 3, 0], [2, 0, 3, 1]];
    for perm in perms {
        let t = cross_ratio_type([&pts[perm[0]], &pts[perm[1]], &pts[perm[2]], &pts[perm[3]]], 5).unwrap();
        let pairs = split_pairs(t).unwrap().map(|pr| pr.map(|i| perm[i]));
        assert_eq!(normalize_pairs(pairs), normalize_pairs(base), "{perm:?}");
    }
}

#[test]
fn json_and_dot() {
    let (_, c) = not_all_occur();
    let t = cluster_tree(&c).unwrap();
    let js = serde_json::to_string(&t).unwrap();
    let back: MarkedTree = serde_json::from_str(&js).unwrap();
    assert_eq!(back, t);
    let dot = t.to_dot();
    assert!(dot.starts_with("graph T {"));
    assert!(dot.contains("0 -- 1 [label=\"1\"]"));
    let unstable = r#"{"vertices":2,"edges":[{"u":0,"v":1,"thickness":1}],"marks":{"a":0,"b":0,"c":1}}"#;
    assert!(serde_json::from_str::<MarkedTree>(unstable).is_err());
}

#[test]
fn median_and_paths() {
    let t = tree(4, &[(0, 1, 2), (1, 2, 3), (1, 3, 1)], &[("a", 0), ("b", 0), ("c", 2), ("d", 2), ("e", 3), ("f", 3)]);
    assert_eq!(t.median(0, 2, 3), 1);
    assert_eq!(t.path(0, 2), vec![0, 1, 2]);
    assert_eq!(t.weighted_distance(0, 2), 5);
    assert_eq!(t.distance(2, 3), 2);
}

fn mobius(pt: &RationalPoint, m: [i64; 4]) -> RationalPoint {
    let [a, b, c, d] = m.map(q);
    match pt {
        ProjPoint::Infinity => {
            if c.is_zero() {
                ProjPoint::Infinity
            } else {
                ProjPoint::Finite(a / c)
            }
        }
        ProjPoint::Finite(z) => {
            let den = &c * z + &d;
            if den.is_zero() {
                ProjPoint::Infinity
            } else {
                ProjPoint::Finite((a * z + b) / den)
            }
        }
    }
}

fn config_strategy() -> impl Strategy<Value = (u64, Vec<RationalPoint>)> {
    (prop::sample::select(vec![3u64, 5, 7]), prop::collection::btree_set((-200i64..200, 1i64..4), 3..8)).prop_map(
        |(p, set)| {
            let pts: Vec<RationalPoint> = set
                .into_iter()
                .map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .map(ProjPoint::Finite)
                .collect();
            (p, pts)
        },
    )
}

fn labeled(pts: &[RationalPoint], p: u64) -> Option<PointConfig> {
    if pts.len() < 3 {
        return None;
    }
    let v: Vec<(String, RationalPoint)> = pts.iter().enumerate().map(|(i, x)| (format!("m{i}"), x.clone())).collect();
    PointConfig::new(v, p).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mobius_invariance((p, pts) in config_strategy(), m in prop::array::uniform4(-9i64..10)) {
        let det = m[0] * m[3] - m[1] * m[2];
        prop_assume!(det != 0 && det % p as i64 != 0);
        let Some(c) = labeled(&pts, p) else { return Ok(()) };
        let moved: Vec<RationalPoint> = pts.iter().map(|x| mobius(x, m)).collect();
        let c2 = labeled(&moved, p).unwrap();
        let t1 = cluster_tree(&c).unwrap();
        let t2 = cluster_tree(&c2).unwrap();
        prop_assert!(t1.is_stable());
        prop_assert!(t1.is_isomorphic(&t2), "{}\n{}", t1.to_dot(), t2.to_dot());
    }

    #[test]
    fn stabilize_is_functorial((p, pts) in config_strategy(), drop1 in any::<u16>(), drop2 in any::<u16>()) {
        let Some(c) = labeled(&pts, p) else { return Ok(()) };
        let t = cluster_tree(&c).unwrap();
        let all: Vec<&str> = c.labels().iter().map(|s| s.as_str()).collect();
        let mid: Vec<&str> = all.iter().enumerate().filter(|(i, _)| *i < 3 || drop1 >> i & 1 == 0).map(|(_, l)| *l).collect();
        let small: Vec<&str> = mid.iter().enumerate().filter(|(i, _)| *i < 3 || drop2 >> i & 1 == 0).map(|(_, l)| *l).collect();
        let once = stabilize(&t, &small).unwrap();
        let twice = stabilize(&stabilize(&t, &mid).unwrap(), &small).unwrap();
        prop_assert!(once.is_stable());
        prop_assert!(once.is_isomorphic(&twice));
        // Stabilizing the tree equals the tree of the sub-configuration.
        let sub: Vec<(String, RationalPoint)> =
            small.iter().map(|l| (l.to_string(), c.point(l).unwrap().clone())).collect();
        let direct = cluster_tree(&PointConfig::new(sub, p).unwrap()).unwrap();
        prop_assert!(once.is_isomorphic(&direct));
    }
}
