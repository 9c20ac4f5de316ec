use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{Edge, MarkedTree, TreeError};
use crate::algebra::primes::is_prime;
use crate::dynamics::ProjPoint;

pub type RationalPoint = ProjPoint<BigRational>;

/// Marked points of ℙ¹(ℚ) together with an odd prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfig {
    labels: Vec<String>,
    points: Vec<RationalPoint>,
    p: u64,
}

impl PointConfig {
    pub fn new(points: Vec<(String, RationalPoint)>, p: u64) -> Result<Self, TreeError> {
        if p == 2 || !is_prime(p) {
            return Err(TreeError::InvalidPrime(p));
        }
        if points.len() < 3 {
            return Err(TreeError::NormalizationFailure(format!("{} points, need 3", points.len())));
        }
        let mut seen_labels = BTreeSet::new();
        let mut seen_points = BTreeSet::new();
        for (l, x) in &points {
            if !seen_labels.insert(l.clone()) {
                return Err(TreeError::Malformed(format!("label {l} repeated")));
            }
            if !seen_points.insert(x.clone()) {
                return Err(TreeError::NotInjective(l.clone()));
            }
        }
        let (labels, points) = points.into_iter().unzip();
        Ok(PointConfig { labels, points, p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn points(&self) -> &[RationalPoint] {
        &self.points
    }

    pub fn point(&self, label: &str) -> Option<&RationalPoint> {
        self.labels.iter().position(|l| l == label).map(|i| &self.points[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &RationalPoint)> {
        self.labels.iter().map(|s| s.as_str()).zip(&self.points)
    }
}

fn int_valuation(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.clone();
    let mut k = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return k;
        }
        n = q;
        k += 1;
    }
}

/// v_p of a nonzero rational.
pub fn valuation(x: &BigRational, p: u64) -> i64 {
    assert!(!x.is_zero(), "valuation of 0");
    let p = BigInt::from(p);
    int_valuation(x.numer(), &p) - int_valuation(x.denom(), &p)
}

/// The stable tree of the configuration. A point at ∞ sits on the root; otherwise the
/// first point is moved to ∞ by z ↦ 1/(z − z₀). Vertices are numbered breadth-first.
pub fn cluster_tree(cfg: &PointConfig) -> Result<MarkedTree, TreeError> {
    let n = cfg.len();
    let inf = cfg.points.iter().position(|x| x.is_infinity()).unwrap_or(0);
    let finite: Vec<(usize, BigRational)> = match &cfg.points[inf] {
        ProjPoint::Infinity => {
            cfg.points.iter().enumerate().filter_map(|(i, x)| x.finite().map(|z| (i, z.clone()))).collect()
        }
        ProjPoint::Finite(z0) => (0..n)
            .filter(|&i| i != inf)
            .map(|i| (i, BigRational::one() / (cfg.points[i].finite().unwrap() - z0)))
            .collect(),
    };
    let m = finite.len();
    let mut val = vec![vec![i64::MAX; m]; m];
    for a in 0..m {
        for b in a + 1..m {
            let v = valuation(&(&finite[a].1 - &finite[b].1), cfg.p);
            val[a][b] = v;
            val[b][a] = v;
        }
    }
    let depth = |cl: &[usize]| {
        cl.iter().flat_map(|&a| cl.iter().filter(move |&&b| b != a).map(move |&b| (a, b))).map(|(a, b)| val[a][b]).min()
    };
    let mut marks = BTreeMap::new();
    let mut edges = Vec::new();
    marks.insert(cfg.labels[inf].clone(), 0);
    let mut next = 1;
    let mut queue: VecDeque<(Vec<usize>, usize, i64)> = VecDeque::new();
    let root_depth = depth(&(0..m).collect::<Vec<_>>()).expect("at least two finite points");
    queue.push_back(((0..m).collect(), 0, root_depth));
    while let Some((cl, vertex, d)) = queue.pop_front() {
        // Classes of the relation v > d, ordered by their first member.
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &x in &cl {
            match classes.iter_mut().find(|c| val[c[0]][x] > d) {
                Some(c) => c.push(x),
                None => classes.push(vec![x]),
            }
        }
        for c in classes {
            if c.len() == 1 {
                marks.insert(cfg.labels[finite[c[0]].0].clone(), vertex);
            } else {
                let dc = depth(&c).unwrap();
                let child = next;
                next += 1;
                edges.push(Edge { u: vertex, v: child, thickness: (dc - d) as u32 });
                queue.push_back((c, child, dc));
            }
        }
    }
    MarkedTree::new(next, edges, marks)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CrossRatioType {
    Generic,
    #[serde(rename = "split_12_34")]
    Split12_34,
    #[serde(rename = "split_13_24")]
    Split13_24,
    #[serde(rename = "split_14_23")]
    Split14_23,
}

fn coords(x: &RationalPoint) -> (BigRational, BigRational) {
    match x {
        ProjPoint::Finite(z) => (z.clone(), BigRational::one()),
        ProjPoint::Infinity => (BigRational::one(), BigRational::zero()),
    }
}

/// Which pairs collide mod p, read off λ = (p1−p3)(p2−p4)/((p1−p4)(p2−p3)).
pub fn cross_ratio_type(pts: [&RationalPoint; 4], p: u64) -> Result<CrossRatioType, TreeError> {
    if p == 2 || !is_prime(p) {
        return Err(TreeError::InvalidPrime(p));
    }
    let c: Vec<_> = pts.iter().map(|x| coords(x)).collect();
    let det = |i: usize, j: usize| &c[i].0 * &c[j].1 - &c[j].0 * &c[i].1;
    let (d13, d24, d14, d23) = (det(0, 2), det(1, 3), det(0, 3), det(1, 2));
    if [&d13, &d24, &d14, &d23, &det(0, 1), &det(2, 3)].iter().any(|d| d.is_zero()) {
        return Err(TreeError::NotDistinct);
    }
    let lambda = (d13 * d24) / (d14 * d23);
    let v = valuation(&lambda, p);
    Ok(if v > 0 {
        CrossRatioType::Split13_24
    } else if v < 0 {
        CrossRatioType::Split14_23
    } else if valuation(&(lambda - BigRational::one()), p) > 0 {
        CrossRatioType::Split12_34
    } else {
        CrossRatioType::Generic
    })
}
