//! The grading group `L` of a weighted projective line: generated by `c` and
//! `x_1, ..., x_p` subject to `r_i x_i = c`. Elements are kept in normal form
//! `a c + sum b_i x_i` with `0 <= b_i < r_i`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Weights(Vec<u32>);

impl Weights {
    pub fn new(r: Vec<u32>) -> Result<Weights> {
        if let Some(bad) = r.iter().find(|&&x| x < 2) {
            return Err(Error::InvalidWeights(format!("every weight must be at least 2, got {bad}")));
        }
        Ok(Weights(r))
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Number of weighted points.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Weight of the `i`-th point, 1-based.
    pub fn weight(&self, i: usize) -> Result<u32> {
        i.checked_sub(1)
            .and_then(|k| self.0.get(k).copied())
            .ok_or_else(|| Error::UnknownPoint(format!("x{i}")))
    }
}

impl TryFrom<Vec<u32>> for Weights {
    type Error = Error;
    fn try_from(r: Vec<u32>) -> Result<Weights> {
        Weights::new(r)
    }
}

impl From<Weights> for Vec<u32> {
    fn from(w: Weights) -> Vec<u32> {
        w.0
    }
}

impl fmt::Display for Weights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An element of `L` in normal form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LElement {
    pub a: i64,
    pub b: Vec<i64>,
}

impl LElement {
    pub fn zero(w: &Weights) -> LElement {
        LElement { a: 0, b: vec![0; w.len()] }
    }

    pub fn c(w: &Weights) -> LElement {
        LElement { a: 1, b: vec![0; w.len()] }
    }

    /// The generator `x_i`, 1-based.
    pub fn x(w: &Weights, i: usize) -> Result<LElement> {
        w.weight(i)?;
        let mut b = vec![0; w.len()];
        b[i - 1] = 1;
        normalize(w, 0, &b)
    }

    fn check(&self, w: &Weights) -> Result<()> {
        let ok = self.b.len() == w.len()
            && self.b.iter().zip(w.as_slice()).all(|(&b, &r)| (0..r as i64).contains(&b));
        if ok {
            Ok(())
        } else {
            Err(Error::WeightMismatch)
        }
    }

    /// Multiplies by an integer.
    pub fn scale(&self, w: &Weights, k: i64) -> Result<LElement> {
        self.check(w)?;
        let b: Vec<i64> = self.b.iter().map(|&x| x * k).collect();
        normalize(w, self.a * k, &b)
    }
}

impl fmt::Display for LElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(i64, String)> = Vec::new();
        if self.a != 0 {
            terms.push((self.a, "c".into()));
        }
        for (i, &b) in self.b.iter().enumerate() {
            if b != 0 {
                terms.push((b, format!("x{}", i + 1)));
            }
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (coef, sym)) in terms.iter().enumerate() {
            let sign = if *coef < 0 {
                "-"
            } else if k > 0 {
                "+"
            } else {
                ""
            };
            let mag = coef.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}{sym}")?;
            } else {
                write!(f, "{sign}{mag}{sym}")?;
            }
        }
        Ok(())
    }
}

pub fn normalize(w: &Weights, raw_a: i64, raw_b: &[i64]) -> Result<LElement> {
    if raw_b.len() != w.len() {
        return Err(Error::LengthMismatch {
            expected: w.len(),
            got: raw_b.len(),
        });
    }
    let mut a = raw_a;
    let b = raw_b
        .iter()
        .zip(w.as_slice())
        .map(|(&x, &r)| {
            let r = r as i64;
            a += x.div_euclid(r);
            x.rem_euclid(r)
        })
        .collect();
    Ok(LElement { a, b })
}

pub fn add(w: &Weights, u: &LElement, v: &LElement) -> Result<LElement> {
    u.check(w)?;
    v.check(w)?;
    let b: Vec<i64> = u.b.iter().zip(&v.b).map(|(x, y)| x + y).collect();
    normalize(w, u.a + v.a, &b)
}

pub fn neg(w: &Weights, u: &LElement) -> Result<LElement> {
    u.scale(w, -1)
}

pub fn sub(w: &Weights, u: &LElement, v: &LElement) -> Result<LElement> {
    add(w, u, &neg(w, v)?)
}

/// The dualizing element `-2c + sum (r_i - 1) x_i`.
pub fn omega(w: &Weights) -> LElement {
    LElement {
        a: -2,
        b: w.as_slice().iter().map(|&r| r as i64 - 1).collect(),
    }
}

/// Parses expressions such as `2c + x1 - 3x2`, `-c+x1+x2` or `0`.
pub fn parse(w: &Weights, text: &str) -> Result<LElement> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::parse(text, "empty expression"));
    }
    if s == "0" {
        return Ok(LElement::zero(w));
    }
    let mut a = 0i64;
    let mut b = vec![0i64; w.len()];
    let bytes = s.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let start = pos;
        let mut sign = 1i64;
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            if bytes[pos] == b'-' {
                sign = -1;
            }
            pos += 1;
        } else if start > 0 {
            return Err(Error::parse(&s[start..], "expected `+` or `-` between terms"));
        }
        let num_start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let coef: i64 = if pos == num_start {
            1
        } else {
            s[num_start..pos]
                .parse()
                .map_err(|_| Error::parse(&s[num_start..pos], "coefficient out of range"))?
        };
        let term_end = s[pos..]
            .find(|ch| ch == '+' || ch == '-')
            .map_or(s.len(), |k| pos + k);
        let sym = &s[pos..term_end];
        let token = &s[start..term_end];
        match sym {
            "c" => a += sign * coef,
            "" => return Err(Error::parse(token, "constant terms other than 0 are not group elements")),
            _ => {
                let idx: usize = sym
                    .strip_prefix('x')
                    .and_then(|d| d.parse().ok())
                    .ok_or_else(|| Error::parse(token, "expected `c` or `x<i>`"))?;
                if idx == 0 || idx > w.len() {
                    return Err(Error::parse(
                        token,
                        format!("no weighted point x{idx} among {} points", w.len()),
                    ));
                }
                b[idx - 1] += sign * coef;
            }
        }
        pos = term_end;
    }
    normalize(w, a, &b)
}
