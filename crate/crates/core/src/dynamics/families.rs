use super::DynamicsError;
use crate::algebra::{Integers, MultiPoly};

pub const MAX_FAMILY_DEPTH: usize = 8;

type ZPoly = MultiPoly<Integers>;

/// g_n, and h_n where the recursion has one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    pub g: ZPoly,
    pub h: Option<ZPoly>,
}

/// Iterates of the one-parameter families (αtx²+1)/(βtx²+1) at 0:
/// case 1 is β = 0, case 2 is α = 0 (with (g, h) swapped roles), case 3 is α, β ≠ 0.
pub fn recursion_family(case: u8, n: usize) -> Result<Family, DynamicsError> {
    if n > MAX_FAMILY_DEPTH {
        return Err(DynamicsError::DepthOutOfRange(n));
    }
    match case {
        1 => {
            let vars = ["t"];
            let t = ZPoly::var(Integers, &vars, "t").unwrap();
            let one = ZPoly::one(Integers, &vars);
            let mut g = ZPoly::zero(Integers, &vars);
            for _ in 0..n {
                g = t.mul(&g.square()).add(&one);
            }
            Ok(Family { g, h: None })
        }
        2 => {
            let vars = ["t"];
            let t = ZPoly::var(Integers, &vars, "t").unwrap();
            let mut g = ZPoly::zero(Integers, &vars);
            let mut h = ZPoly::one(Integers, &vars);
            for _ in 0..n {
                let h2 = h.square();
                (g, h) = (h2.clone(), t.mul(&g.square()).add(&h2));
            }
            Ok(Family { g, h: Some(h) })
        }
        3 => {
            let vars = ["alpha", "beta", "t"];
            let v = |s: &str| ZPoly::var(Integers, &vars, s).unwrap();
            let at = v("alpha").mul(&v("t"));
            let bt = v("beta").mul(&v("t"));
            let mut g = ZPoly::zero(Integers, &vars);
            let mut h = ZPoly::one(Integers, &vars);
            for _ in 0..n {
                let g2 = g.square();
                let h2 = h.square();
                (g, h) = (at.mul(&g2).add(&h2), bt.mul(&g2).add(&h2));
            }
            Ok(Family { g, h: Some(h) })
        }
        _ => Err(DynamicsError::Degenerate(format!("unknown case {case}"))),
    }
}
