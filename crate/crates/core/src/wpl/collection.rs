//! Collections of sheaves: exceptional sequences, vertex-like families,
//! Ext-quivers, the canonical tilting collection and its star-shaped duals,
//! perpendicular categories of exceptional torsion sheaves.

use num_bigint::BigUint;
use serde::Serialize;

use super::{from_arc, hom_ext, to_arc, Point, SheafClass, WplData};
use crate::error::{Error, Result};
use crate::lgroup::{self, LElement, Weights};
use crate::quiver::Quiver;
use crate::serial::{self, SerialCat};

/// `O`, then `O(b x_i)` for every point `i` and `1 <= b < r_i`, then `O(c)`.
pub fn canonical_collection(w: &Weights) -> Vec<SheafClass> {
    let mut out = vec![SheafClass::LineBundle(LElement::zero(w))];
    for (k, &r) in w.as_slice().iter().enumerate() {
        for b in 1..r {
            let mut raw = vec![0; w.len()];
            raw[k] = b as i64;
            out.push(SheafClass::LineBundle(lgroup::normalize(w, 0, &raw).expect("length matches")));
        }
    }
    out.push(SheafClass::LineBundle(LElement::c(w)));
    out
}

/// Every member is exceptional and nothing maps backwards, in any degree.
pub fn is_exceptional_sequence(data: &WplData, c: &[SheafClass]) -> Result<bool> {
    for (p, e) in c.iter().enumerate() {
        if hom_ext(data, e, e)? != (1, 0) {
            return Ok(false);
        }
        for f in &c[p + 1..] {
            if hom_ext(data, f, e)? != (0, 0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Scalar endomorphisms and no Homs between distinct members. Higher
/// morphisms vanish since every class sits in a hereditary heart.
pub fn is_vertex_like(data: &WplData, c: &[SheafClass]) -> Result<bool> {
    for (p, e) in c.iter().enumerate() {
        if hom_ext(data, e, e)?.0 != 1 {
            return Ok(false);
        }
        for (q, f) in c.iter().enumerate() {
            if p != q && hom_ext(data, e, f)?.0 != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Quiver on the members with `dim Ext^1(t_j, t_i)` arrows `i -> j`.
pub fn ext_quiver_of(data: &WplData, c: &[SheafClass]) -> Result<Quiver> {
    if !is_vertex_like(data, c)? {
        return Err(Error::NotVertexLike);
    }
    let mut arrows = Vec::new();
    for i in 0..c.len() {
        for j in 0..c.len() {
            let (_, ext) = hom_ext(data, &c[j], &c[i])?;
            arrows.extend(std::iter::repeat((i, j)).take(ext as usize));
        }
    }
    Quiver::new(c.iter().map(SheafClass::to_string).collect(), arrows)
}

/// The right perpendicular category of an exceptional torsion sheaf `E`
/// of length `m` at `x_i`: sheaves on the line with `r_i` lowered to `r_i - m`,
/// times `A_{m-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorsionPerp {
    pub weights: Weights,
    pub point: usize,
    /// Position of the point in the new weights; `None` if its weight dropped to one.
    pub new_index: Option<usize>,
    /// Simples of the `A_{m-1}` factor: `tau S, ..., tau^{m-1} S` for `S` the top of `E`.
    pub line_factor: Vec<SheafClass>,
    /// Simples of the shrunken tube at the point, in cyclic order.
    pub tube_factor: Vec<SheafClass>,
}

pub fn perp_exceptional_torsion(data: &WplData, e: &SheafClass) -> Result<TorsionPerp> {
    data.check(e)?;
    let not_exceptional = || Error::NotExceptionalTorsion(e.to_string());
    let SheafClass::TorsionW { point, len, .. } = e else {
        return Err(not_exceptional());
    };
    let r = data.weights().weight(*point)?;
    if *len >= r as usize {
        return Err(not_exceptional());
    }
    let arc = to_arc(data, e)?.expect("torsion");
    let emb = serial::perp_arc(&arc)?;
    let p = Point::Weighted(*point);
    let mut tube_factor = Vec::new();
    let mut line_factor = Vec::new();
    for f in &emb.factors {
        let target = match f.cat {
            SerialCat::Cycle(_) => &mut tube_factor,
            SerialCat::Line(_) => &mut line_factor,
        };
        target.extend(f.simples.iter().map(|a| from_arc(&p, a)));
    }
    let new_r = r - *len as u32;
    let mut rs = data.weights().as_slice().to_vec();
    let new_index = if new_r == 1 {
        rs.remove(point - 1);
        None
    } else {
        rs[point - 1] = new_r;
        Some(*point)
    };
    Ok(TorsionPerp {
        weights: Weights::new(rs)?,
        point: *point,
        new_index,
        line_factor,
        tube_factor,
    })
}

fn central_binomial(r: u32) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for k in 1..=r {
        acc = acc * BigUint::from(r + k) / BigUint::from(k);
    }
    acc
}

/// Number of big thick subcategories: the product of `C(2 r_i, r_i) / 2`.
pub fn count_big(w: &Weights) -> BigUint {
    w.as_slice()
        .iter()
        .map(|&r| central_binomial(r) / BigUint::from(2u32))
        .product()
}

/// The star-shaped exceptional sequences of line bundles cut out of the
/// canonical collection at heights `b_i`, with their dual vertex-like families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarCollection {
    /// `O` and `O(b x_i)` for `1 <= b <= b_i`.
    pub left: Vec<SheafClass>,
    /// `S(i, b)` for `1 <= b <= b_i`, then `O`.
    pub left_dual: Vec<SheafClass>,
    /// `O(b x_i)` for `b_i < b < r_i`, then `O(c)`.
    pub right: Vec<SheafClass>,
    /// `S(i, j)` for `b_i + 2 <= j <= r_i`, then `O(c - sum (r_i - b_i - 1) x_i)`.
    pub right_dual: Vec<SheafClass>,
}

pub fn star_collection(data: &WplData, b: &[u32]) -> Result<StarCollection> {
    let w = data.weights();
    if b.len() != w.len() {
        return Err(Error::LengthMismatch {
            expected: w.len(),
            got: b.len(),
        });
    }
    let lb = |k: usize, v: i64| -> SheafClass {
        let mut raw = vec![0; w.len()];
        raw[k] = v;
        SheafClass::LineBundle(lgroup::normalize(w, 0, &raw).expect("length matches"))
    };
    let zero = SheafClass::LineBundle(LElement::zero(w));
    let mut left = vec![zero.clone()];
    let mut left_dual = Vec::new();
    let mut right = Vec::new();
    let mut right_dual = Vec::new();
    let mut shift = Vec::with_capacity(w.len());
    for (k, (&r, &bk)) in w.as_slice().iter().zip(b).enumerate() {
        if bk >= r {
            return Err(Error::InvalidClass(format!(
                "star height {bk} at x{} must be below the weight {r}",
                k + 1
            )));
        }
        let i = k + 1;
        left.extend((1..=bk).map(|v| lb(k, v as i64)));
        for v in 1..=bk {
            left_dual.push(SheafClass::simple(w, i, v as i64)?);
        }
        right.extend((bk + 1..r).map(|v| lb(k, v as i64)));
        for j in bk + 2..=r {
            right_dual.push(SheafClass::simple(w, i, j as i64)?);
        }
        shift.push(-((r - bk - 1) as i64));
    }
    left_dual.push(zero);
    right.push(SheafClass::LineBundle(LElement::c(w)));
    right_dual.push(SheafClass::LineBundle(lgroup::normalize(w, 1, &shift)?));
    Ok(StarCollection {
        left,
        left_dual,
        right,
        right_dual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(r: &[u32]) -> WplData {
        WplData::new(Weights::new(r.to_vec()).unwrap(), vec![]).unwrap()
    }

    #[test]
    fn canonical_shapes() {
        let d = data(&[2, 3]);
        assert_eq!(canonical_collection(d.weights()).len(), 5);
        let p1 = data(&[]);
        let c = canonical_collection(p1.weights());
        assert_eq!(c.iter().map(|f| f.to_string()).collect::<Vec<_>>(), ["O(0)", "O(c)"]);
        for r in [&[2, 2, 2, 2][..], &[3, 3, 3, 3][..]] {
            let d = data(r);
            assert!(is_exceptional_sequence(&d, &canonical_collection(d.weights())).unwrap());
        }
    }

    #[test]
    fn kronecker_pair() {
        let d = data(&[2, 2, 2, 2]);
        let l = d.parse_class("O(-c+x1+x2+x3+x4)").unwrap();
        let o = d.parse_class("O(0)").unwrap();
        let pair = [l.clone(), o.clone()];
        assert!(is_vertex_like(&d, &pair).unwrap());
        assert!(is_exceptional_sequence(&d, &pair).unwrap());
        assert!(!is_exceptional_sequence(&d, &[o, l]).unwrap());
        // Two arrows O -> L: the Kronecker quiver with its vertices listed in reverse.
        assert_eq!(ext_quiver_of(&d, &pair).unwrap().arrows(), &[(1, 0), (1, 0)]);
    }

    #[test]
    fn star_quiver() {
        let d = data(&[3, 3, 3, 3]);
        let star = star_collection(&d, &[1, 1, 1, 1]).unwrap();
        let names: Vec<String> = star.left_dual.iter().map(|f| f.to_string()).collect();
        assert_eq!(names, ["S(1,1)", "S(2,1)", "S(3,1)", "S(4,1)", "O(0)"]);
        let q = ext_quiver_of(&d, &star.left_dual).unwrap();
        let mut arrows = q.arrows().to_vec();
        arrows.sort();
        assert_eq!(arrows, vec![(4, 0), (4, 1), (4, 2), (4, 3)]);
    }

    #[test]
    fn single_simple_and_long_arc() {
        let d = data(&[3]);
        let s = [d.parse_class("S(1,1)").unwrap()];
        assert_eq!(ext_quiver_of(&d, &s).unwrap().arrows().len(), 0);
        let long = [d.parse_class("S(1,1)[4]").unwrap()];
        assert!(!is_vertex_like(&d, &long).unwrap());
        assert!(!is_exceptional_sequence(&d, &long).unwrap());
        assert_eq!(ext_quiver_of(&d, &long), Err(Error::NotVertexLike));
    }

    #[test]
    fn perp_weight_reduction() {
        let d = data(&[3, 3, 3, 3]);
        let p = perp_exceptional_torsion(&d, &d.parse_class("S(1,1)").unwrap()).unwrap();
        assert_eq!(p.weights.as_slice(), &[2, 3, 3, 3]);
        assert!(p.line_factor.is_empty());

        let d = data(&[5]);
        let p = perp_exceptional_torsion(&d, &d.parse_class("S(1,2)[2]").unwrap()).unwrap();
        assert_eq!(p.weights.as_slice(), &[3]);
        assert_eq!(p.line_factor, vec![d.parse_class("S(1,1)").unwrap()]);
        assert_eq!(p.tube_factor.len(), 3);

        let d = data(&[2]);
        let p = perp_exceptional_torsion(&d, &d.parse_class("S(1,1)").unwrap()).unwrap();
        assert!(p.weights.is_empty());
        assert_eq!(p.new_index, None);
        assert!(p.line_factor.is_empty());
        let q = ext_quiver_of(&d, &p.tube_factor).unwrap();
        assert!(q.same_arrows(&Quiver::cycle(1)));

        assert!(matches!(
            perp_exceptional_torsion(&d, &d.parse_class("S(1,1)[2]").unwrap()),
            Err(Error::NotExceptionalTorsion(_))
        ));
        assert!(matches!(
            perp_exceptional_torsion(&d, &d.parse_class("O(0)").unwrap()),
            Err(Error::NotExceptionalTorsion(_))
        ));
    }

    #[test]
    fn big_counts() {
        let n = |r: &[u32]| count_big(&Weights::new(r.to_vec()).unwrap());
        assert_eq!(n(&[2]), BigUint::from(3u32));
        assert_eq!(n(&[2, 3]), BigUint::from(30u32));
        assert_eq!(n(&[3, 3, 3, 3]), BigUint::from(10000u32));
        assert_eq!(n(&[]), BigUint::from(1u32));
    }
}
