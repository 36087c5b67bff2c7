//! Line bundles and indecomposable torsion sheaves on a weighted projective line.
//!
//! A torsion sheaf at the weighted point `x_i` is an arc in the tube `U_{r_i}`;
//! `S(i, j)` is the simple quotient of `O(j x_i)` by `O((j-1) x_i)`, and the
//! arc `S(i, j)[l]` has composition factors `S(i, j), S(i, j-1), ...` from top
//! to socle. At a declared ordinary point `y` the torsion sheaves form a tube
//! of rank one.

mod classify;
mod collection;

pub use classify::{classify_generated, Classification};
pub use collection::{
    canonical_collection, count_big, ext_quiver_of, is_exceptional_sequence, is_vertex_like,
    perp_exceptional_torsion, star_collection, StarCollection, TorsionPerp,
};

use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lgroup::{self, LElement, Weights};
use crate::serial::{self, Arc, SerialCat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WplData {
    weights: Weights,
    ordinary: Vec<String>,
}

#[derive(Deserialize)]
struct ConfigDoc {
    weights: Vec<u32>,
    #[serde(default)]
    ordinary: Vec<String>,
}

fn looks_weighted(label: &str) -> bool {
    let digits = label.strip_prefix('x').unwrap_or(label);
    !digits.is_empty() && digits.chars().all(|c| c.is_ascii_digit())
}

impl WplData {
    pub fn new(weights: Weights, ordinary: Vec<String>) -> Result<WplData> {
        for (k, y) in ordinary.iter().enumerate() {
            if y.is_empty() || !y.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(Error::InvalidWeights(format!(
                    "ordinary point label `{y}` must be a non-empty word"
                )));
            }
            if looks_weighted(y) {
                return Err(Error::InvalidWeights(format!(
                    "ordinary point label `{y}` clashes with weighted point names"
                )));
            }
            if ordinary[..k].contains(y) {
                return Err(Error::InvalidWeights(format!("ordinary point `{y}` declared twice")));
            }
        }
        Ok(WplData { weights, ordinary })
    }

    /// Reads `{"weights": [r1, ...], "ordinary": ["y1", ...]}`.
    pub fn from_json(text: &str) -> Result<WplData> {
        let doc: ConfigDoc = serde_json::from_str(text)
            .map_err(|e| Error::parse(text.trim(), format!("bad weight config: {e}")))?;
        WplData::new(Weights::new(doc.weights)?, doc.ordinary)
    }

    pub fn weights(&self) -> &Weights {
        &self.weights
    }

    pub fn ordinary(&self) -> &[String] {
        &self.ordinary
    }

    /// Parses `x3` or `3` as a weighted point, anything else as a declared ordinary label.
    pub fn point(&self, text: &str) -> Result<Point> {
        let t = text.trim();
        if looks_weighted(t) {
            let i: usize = t.trim_start_matches('x').parse().map_err(|_| Error::UnknownPoint(t.into()))?;
            self.weights.weight(i)?;
            return Ok(Point::Weighted(i));
        }
        if self.ordinary.iter().any(|y| y == t) {
            Ok(Point::Ordinary(t.into()))
        } else {
            Err(Error::UnknownPoint(t.into()))
        }
    }

    fn check_point(&self, p: &Point) -> Result<()> {
        match p {
            Point::Weighted(i) => self.weights.weight(*i).map(|_| ()),
            Point::Ordinary(y) if self.ordinary.contains(y) => Ok(()),
            Point::Ordinary(y) => Err(Error::UnknownPoint(y.clone())),
        }
    }

    /// Checks that a class is well formed over this model.
    pub fn check(&self, f: &SheafClass) -> Result<()> {
        let bad = || Error::ModelMismatch(f.to_string());
        match f {
            SheafClass::LineBundle(l) => {
                let ok = l.b.len() == self.weights.len()
                    && l.b.iter().zip(self.weights.as_slice()).all(|(&b, &r)| (0..r as i64).contains(&b));
                ok.then_some(()).ok_or_else(bad)
            }
            SheafClass::TorsionW { point, top, len } => {
                let r = self.weights.weight(*point).map_err(|_| bad())?;
                (*top < r && *len >= 1).then_some(()).ok_or_else(bad)
            }
            SheafClass::TorsionO { label, len } => {
                (self.ordinary.contains(label) && *len >= 1).then_some(()).ok_or_else(bad)
            }
        }
    }

    /// Parses `O(expr)`, `S(i,j)`, `S(i,j)[l]`, `T(y)` or `T(y)[l]`.
    pub fn parse_class(&self, text: &str) -> Result<SheafClass> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |msg: &str| Error::parse(text, msg);
        let (head, len) = match s.strip_suffix(']').and_then(|r| r.rsplit_once('[')) {
            Some((head, l)) => {
                let l: usize = l.parse().map_err(|_| bad("length must be a positive integer"))?;
                if l == 0 {
                    return Err(bad("length must be a positive integer"));
                }
                (head.to_string(), Some(l))
            }
            None => (s.clone(), None),
        };
        let (kind, inner) = head
            .split_once('(')
            .and_then(|(k, r)| r.strip_suffix(')').map(|r| (k, r)))
            .ok_or_else(|| bad("expected O(...), S(i,j) or T(y)"))?;
        match kind {
            "O" if len.is_none() => Ok(SheafClass::LineBundle(lgroup::parse(&self.weights, inner)?)),
            "S" => {
                let (i, j) = inner.split_once(',').ok_or_else(|| bad("S needs a point and a residue"))?;
                let i: usize = i.trim_start_matches('x').parse().map_err(|_| bad("point index must be a positive integer"))?;
                let j: i64 = j.parse().map_err(|_| bad("residue must be an integer"))?;
                let r = self
                    .weights
                    .weight(i)
                    .map_err(|_| Error::parse(text, format!("no weighted point x{i}")))?;
                Ok(SheafClass::TorsionW {
                    point: i,
                    top: j.rem_euclid(r as i64) as u32,
                    len: len.unwrap_or(1),
                })
            }
            "T" => {
                if !self.ordinary.iter().any(|y| y == inner) {
                    return Err(Error::parse(text, format!("`{inner}` is not a declared ordinary point")));
                }
                Ok(SheafClass::TorsionO {
                    label: inner.to_string(),
                    len: len.unwrap_or(1),
                })
            }
            _ => Err(bad("expected O(...), S(i,j) or T(y)")),
        }
    }

    fn omega(&self) -> LElement {
        lgroup::omega(&self.weights)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Point {
    /// 1-based index of a weighted point.
    Weighted(usize),
    Ordinary(String),
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Weighted(i) => write!(f, "x{i}"),
            Point::Ordinary(y) => write!(f, "{y}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SheafClass {
    LineBundle(LElement),
    /// Arc at the weighted point `x_point` (1-based) with the given top residue.
    TorsionW { point: usize, top: u32, len: usize },
    TorsionO { label: String, len: usize },
}

impl SheafClass {
    pub fn rank(&self) -> u32 {
        match self {
            SheafClass::LineBundle(_) => 1,
            _ => 0,
        }
    }

    pub fn is_torsion(&self) -> bool {
        self.rank() == 0
    }

    pub fn support(&self) -> Option<Point> {
        match self {
            SheafClass::LineBundle(_) => None,
            SheafClass::TorsionW { point, .. } => Some(Point::Weighted(*point)),
            SheafClass::TorsionO { label, .. } => Some(Point::Ordinary(label.clone())),
        }
    }

    /// The simple `S(i, j)` at a weighted point.
    pub fn simple(w: &Weights, i: usize, j: i64) -> Result<SheafClass> {
        let r = w.weight(i)? as i64;
        Ok(SheafClass::TorsionW {
            point: i,
            top: j.rem_euclid(r) as u32,
            len: 1,
        })
    }
}

impl fmt::Display for SheafClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SheafClass::LineBundle(l) => write!(f, "O({l})"),
            SheafClass::TorsionW { point, top, len: 1 } => write!(f, "S({point},{top})"),
            SheafClass::TorsionW { point, top, len } => write!(f, "S({point},{top})[{len}]"),
            SheafClass::TorsionO { label, len } => write!(f, "T({label})[{len}]"),
        }
    }
}

impl Serialize for SheafClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The torsion class as an arc in its tube.
pub fn to_arc(data: &WplData, f: &SheafClass) -> Result<Option<Arc>> {
    data.check(f)?;
    Ok(match f {
        SheafClass::LineBundle(_) => None,
        SheafClass::TorsionW { point, top, len } => {
            let r = data.weights.weight(*point)? as usize;
            Some(Arc::new(SerialCat::Cycle(r), *top as usize, *len)?)
        }
        SheafClass::TorsionO { len, .. } => Some(Arc::new(SerialCat::Cycle(1), 0, *len)?),
    })
}

/// Inverse of [`to_arc`] for arcs in the tube at `point`.
pub fn from_arc(point: &Point, a: &Arc) -> SheafClass {
    match point {
        Point::Weighted(i) => SheafClass::TorsionW {
            point: *i,
            top: a.top as u32,
            len: a.len,
        },
        Point::Ordinary(y) => SheafClass::TorsionO {
            label: y.clone(),
            len: a.len,
        },
    }
}

/// `dim Hom(O, O(l))` for `l` in normal form.
fn h(l: &LElement) -> i64 {
    if l.a >= 0 {
        l.a + 1
    } else {
        0
    }
}

fn lb_dims(data: &WplData, l: &LElement, m: &LElement) -> Result<(i64, i64)> {
    let w = &data.weights;
    let hom = h(&lgroup::sub(w, m, l)?);
    let ext = h(&lgroup::sub(w, &lgroup::add(w, l, &data.omega())?, m)?);
    Ok((hom, ext))
}

fn lb_euler(data: &WplData, l: &LElement, m: &LElement) -> Result<i64> {
    lb_dims(data, l, m).map(|(h, e)| h - e)
}

/// `chi(O(l), S(i, j))` from the defining sequence of `S(i, j)`.
fn euler_lb_simple(data: &WplData, l: &LElement, i: usize, j: i64) -> Result<i64> {
    let x = LElement::x(&data.weights, i)?;
    let upper = x.scale(&data.weights, j)?;
    let lower = x.scale(&data.weights, j - 1)?;
    Ok(lb_euler(data, l, &upper)? - lb_euler(data, l, &lower)?)
}

fn hom_lb_torsion(data: &WplData, l: &LElement, t: &SheafClass) -> Result<i64> {
    match t {
        SheafClass::TorsionW { point, top, len } => (0..*len as i64)
            .map(|k| euler_lb_simple(data, l, *point, *top as i64 - k))
            .sum(),
        SheafClass::TorsionO { len, .. } => Ok(*len as i64),
        SheafClass::LineBundle(_) => unreachable!("torsion argument expected"),
    }
}

fn to_nat(v: i64) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::NonNegativityViolation(v))
}

/// `(dim Hom(f, g), dim Ext^1(f, g))`.
pub fn hom_ext(data: &WplData, f: &SheafClass, g: &SheafClass) -> Result<(u64, u64)> {
    data.check(f)?;
    data.check(g)?;
    use SheafClass::*;
    match (f, g) {
        (LineBundle(l), LineBundle(m)) => {
            let (hom, ext) = lb_dims(data, l, m)?;
            Ok((to_nat(hom)?, to_nat(ext)?))
        }
        (LineBundle(l), t) => Ok((to_nat(hom_lb_torsion(data, l, t)?)?, 0)),
        (t, LineBundle(m)) => {
            let ext = hom_lb_torsion(data, m, &tau_sheaf(data, t)?)?;
            Ok((0, to_nat(ext)?))
        }
        _ => {
            if f.support() != g.support() {
                return Ok((0, 0));
            }
            let (a, b) = (to_arc(data, f)?.expect("torsion"), to_arc(data, g)?.expect("torsion"));
            let (hom, ext) = serial::dims(&a, &b)?;
            Ok((hom as u64, ext as u64))
        }
    }
}

pub fn euler(data: &WplData, f: &SheafClass, g: &SheafClass) -> Result<i64> {
    let (h, e) = hom_ext(data, f, g)?;
    Ok(h as i64 - e as i64)
}

/// The Auslander-Reiten translation: shift by `omega` on line bundles,
/// tube translation on torsion.
pub fn tau_sheaf(data: &WplData, f: &SheafClass) -> Result<SheafClass> {
    data.check(f)?;
    Ok(match f {
        SheafClass::LineBundle(l) => SheafClass::LineBundle(lgroup::add(&data.weights, l, &data.omega())?),
        SheafClass::TorsionW { point, top, len } => {
            let r = data.weights.weight(*point)?;
            SheafClass::TorsionW {
                point: *point,
                top: (top + r - 1) % r,
                len: *len,
            }
        }
        SheafClass::TorsionO { .. } => f.clone(),
    })
}

/// `sigma_x`: tensoring with `O(x)` for the point `x`.
pub fn sigma_twist(data: &WplData, point: &Point, f: &SheafClass) -> Result<SheafClass> {
    data.check_point(point)?;
    data.check(f)?;
    let w = &data.weights;
    Ok(match (point, f) {
        (Point::Weighted(i), SheafClass::LineBundle(l)) => {
            SheafClass::LineBundle(lgroup::add(w, l, &LElement::x(w, *i)?)?)
        }
        (Point::Ordinary(_), SheafClass::LineBundle(l)) => SheafClass::LineBundle(lgroup::add(w, l, &LElement::c(w))?),
        (Point::Weighted(i), SheafClass::TorsionW { point, top, len }) if point == i => {
            let r = w.weight(*i)?;
            SheafClass::TorsionW {
                point: *point,
                top: (top + 1) % r,
                len: *len,
            }
        }
        _ => f.clone(),
    })
}

/// `c_x`: `sigma_x` iterated `w(x)` times, i.e. the shift by `c` on line
/// bundles and the identity on torsion.
pub fn c_twist(data: &WplData, point: &Point, f: &SheafClass) -> Result<SheafClass> {
    data.check_point(point)?;
    data.check(f)?;
    Ok(match f {
        SheafClass::LineBundle(l) => SheafClass::LineBundle(lgroup::add(&data.weights, l, &LElement::c(&data.weights))?),
        _ => f.clone(),
    })
}

/// The class of the length-`m` torsion quotient of `O(l)` supported at `point`.
pub fn top_m(data: &WplData, point: &Point, l: &LElement, m: usize) -> Result<SheafClass> {
    data.check_point(point)?;
    data.check(&SheafClass::LineBundle(l.clone()))?;
    if m == 0 {
        return Err(Error::InvalidClass("Top length must be positive".into()));
    }
    Ok(match point {
        Point::Weighted(i) => SheafClass::TorsionW {
            point: *i,
            top: l.b[i - 1] as u32,
            len: m,
        },
        Point::Ordinary(y) => SheafClass::TorsionO {
            label: y.clone(),
            len: m,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(r: &[u32]) -> WplData {
        WplData::new(Weights::new(r.to_vec()).unwrap(), vec!["y".into()]).unwrap()
    }

    fn cls(d: &WplData, s: &str) -> SheafClass {
        d.parse_class(s).unwrap()
    }

    #[test]
    fn line_bundle_examples() {
        for r in [&[][..], &[2][..], &[2, 3][..], &[2, 2, 2, 2][..]] {
            let d = data(r);
            assert_eq!(hom_ext(&d, &cls(&d, "O(0)"), &cls(&d, "O(c)")).unwrap(), (2, 0));
            assert_eq!(euler(&d, &cls(&d, "O(0)"), &cls(&d, "O(c)")).unwrap(), 2);
        }
        let d = data(&[2, 2, 2, 2]);
        let l = cls(&d, "O(-c+x1+x2+x3+x4)");
        assert_eq!(hom_ext(&d, &l, &cls(&d, "O(0)")).unwrap(), (0, 2));
    }

    #[test]
    fn torsion_examples() {
        let d = data(&[3, 3, 3, 3]);
        assert_eq!(hom_ext(&d, &cls(&d, "O(0)"), &cls(&d, "S(1,3)")).unwrap(), (1, 0));
        assert_eq!(hom_ext(&d, &cls(&d, "O(0)"), &cls(&d, "S(1,1)")).unwrap(), (0, 0));
        assert_eq!(hom_ext(&d, &cls(&d, "S(1,1)"), &cls(&d, "O(0)")).unwrap(), (0, 1));
        assert_eq!(hom_ext(&d, &cls(&d, "S(1,1)"), &cls(&d, "S(2,1)")).unwrap(), (0, 0));
        assert_eq!(hom_ext(&d, &cls(&d, "T(y)"), &cls(&d, "T(y)")).unwrap(), (1, 1));
        assert_eq!(hom_ext(&d, &cls(&d, "O(x1)"), &cls(&d, "T(y)[2]")).unwrap(), (2, 0));
        let sphere = cls(&d, "S(2,0)[3]");
        assert_eq!(euler(&d, &sphere, &sphere).unwrap(), 0);
    }

    #[test]
    fn tau_and_twists() {
        let d = data(&[2, 3]);
        assert_eq!(tau_sheaf(&d, &cls(&d, "O(0)")).unwrap(), cls(&d, "O(-2c+x1+2x2)"));
        assert_eq!(tau_sheaf(&d, &cls(&d, "S(1,1)")).unwrap(), cls(&d, "S(1,0)"));
        assert_eq!(tau_sheaf(&d, &cls(&d, "T(y)[3]")).unwrap(), cls(&d, "T(y)[3]"));
        let x1 = d.point("x1").unwrap();
        assert_eq!(sigma_twist(&d, &x1, &cls(&d, "O(0)")).unwrap(), cls(&d, "O(x1)"));
        assert_eq!(sigma_twist(&d, &x1, &cls(&d, "S(1,1)")).unwrap(), cls(&d, "S(1,0)"));
        assert_eq!(sigma_twist(&d, &x1, &cls(&d, "S(2,1)")).unwrap(), cls(&d, "S(2,1)"));
        let y = d.point("y").unwrap();
        assert_eq!(sigma_twist(&d, &y, &cls(&d, "O(x2)")).unwrap(), cls(&d, "O(c+x2)"));
        assert_eq!(c_twist(&d, &x1, &cls(&d, "S(2,1)[4]")).unwrap(), cls(&d, "S(2,1)[4]"));
        assert_eq!(d.point("x3"), Err(Error::UnknownPoint("x3".into())));
        assert_eq!(d.point("z"), Err(Error::UnknownPoint("z".into())));
    }

    #[test]
    fn top_is_the_simple_quotient() {
        let d = data(&[3, 4]);
        let l = lgroup::parse(d.weights(), "-c+2x1+3x2").unwrap();
        let p = d.point("2").unwrap();
        assert_eq!(top_m(&d, &p, &l, 1).unwrap(), cls(&d, "S(2,3)"));
        let x1 = LElement::x(d.weights(), 1).unwrap();
        for j in -4..8 {
            let lj = x1.scale(d.weights(), j).unwrap();
            assert_eq!(
                top_m(&d, &Point::Weighted(1), &lj, 1).unwrap(),
                SheafClass::simple(d.weights(), 1, j).unwrap()
            );
        }
    }

    #[test]
    fn literals() {
        let d = data(&[2, 3]);
        for s in ["O(-3c+x1+x2)", "S(1,0)", "S(2,1)[4]", "T(y)[2]", "O(0)"] {
            assert_eq!(cls(&d, s).to_string(), s);
        }
        assert_eq!(cls(&d, "S(2,4)"), cls(&d, "S(2,1)"));
        for s in ["S(3,1)", "T(z)", "S(1,1)[0]", "P(0)", "O(0)[2]", "O(x3)"] {
            assert!(matches!(d.parse_class(s), Err(Error::Parse { .. })), "{s}");
        }
        assert!(WplData::new(Weights::new(vec![2]).unwrap(), vec!["x1".into()]).is_err());
        let cfg = WplData::from_json(r#"{"weights":[2,3],"ordinary":["y"]}"#).unwrap();
        assert_eq!(cfg, d);
        assert!(WplData::from_json(r#"{"weights":[1]}"#).is_err());
    }
}
