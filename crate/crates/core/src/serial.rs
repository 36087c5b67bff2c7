//! Serial categories: representations of the linear quiver `A_n` and the tube
//! `U_n` of nilpotent representations of the oriented `n`-cycle.
//!
//! Every indecomposable is uniserial and is recorded as an [`Arc`]: its top
//! simple and its length. Composition factors read from top to socle are
//! `top, top - 1, top - 2, ...` (indices mod `n` in a tube), so that
//! `tau S_j = S_{j-1}` and `S^[i]` is an extension of its top `S` by
//! `tau S^[i-1]`. On `A_n` the interval module `M(i, j)` (supported on
//! `i..=j`) has top `j` and length `j - i + 1`.
//!
//! Hom and Ext tables are combinatorial here; [`Arc::realize`] builds the
//! matrix representation so that [`crate::nilrep`] can check them.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::nilrep::Rep;
use crate::quiver::Quiver;

/// Largest tube rank accepted by [`enumerate_thick`].
pub const MAX_ENUM_CYCLE: usize = 6;
/// Largest linear rank accepted by [`enumerate_thick`].
pub const MAX_ENUM_LINE: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SerialCat {
    /// `A_n`; `Line(0)` is the zero category.
    Line(usize),
    /// The tube `U_n`, `n >= 1`.
    Cycle(usize),
}

impl SerialCat {
    pub fn rank(self) -> usize {
        match self {
            SerialCat::Line(n) | SerialCat::Cycle(n) => n,
        }
    }

    fn validate(self) -> Result<()> {
        match self {
            SerialCat::Cycle(0) => Err(Error::InvalidArc("a tube has rank at least 1".into())),
            _ => Ok(()),
        }
    }

    pub fn quiver(self) -> Quiver {
        match self {
            SerialCat::Line(n) => Quiver::linear(n),
            SerialCat::Cycle(n) => Quiver::cycle(n),
        }
    }

    /// Quiver index of a vertex: residues for tubes, `1..=n` for lines.
    fn vertex_index(self, v: usize) -> usize {
        match self {
            SerialCat::Line(_) => v - 1,
            SerialCat::Cycle(_) => v,
        }
    }

    /// All simple objects, in vertex order.
    pub fn simples(self) -> Vec<Arc> {
        match self {
            SerialCat::Line(n) => (1..=n).map(|v| Arc { cat: self, top: v, len: 1 }).collect(),
            SerialCat::Cycle(n) => (0..n).map(|v| Arc { cat: self, top: v, len: 1 }).collect(),
        }
    }

    /// Every indecomposable of length at most `max_len`, sorted.
    pub fn arcs_up_to(self, max_len: usize) -> Vec<Arc> {
        let mut out = Vec::new();
        match self {
            SerialCat::Line(n) => {
                for top in 1..=n {
                    for len in 1..=top.min(max_len) {
                        out.push(Arc { cat: self, top, len });
                    }
                }
            }
            SerialCat::Cycle(n) => {
                for top in 0..n {
                    for len in 1..=max_len {
                        out.push(Arc { cat: self, top, len });
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// The arcs recorded in a thick-subcategory signature.
    pub fn signature_arcs(self) -> Vec<Arc> {
        self.arcs_up_to(self.rank())
    }
}

impl fmt::Display for SerialCat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SerialCat::Line(n) => write!(f, "A({n})"),
            SerialCat::Cycle(n) => write!(f, "U({n})"),
        }
    }
}

impl Serialize for SerialCat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// An indecomposable object of a serial category.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub cat: SerialCat,
    pub top: usize,
    pub len: usize,
}

impl Arc {
    pub fn new(cat: SerialCat, top: usize, len: usize) -> Result<Arc> {
        cat.validate()?;
        if len == 0 {
            return Err(Error::InvalidArc("length must be positive".into()));
        }
        match cat {
            SerialCat::Cycle(n) if top >= n => {
                Err(Error::InvalidArc(format!("top {top} is not a residue mod {n}")))
            }
            SerialCat::Line(n) if top == 0 || top > n || len > top => Err(Error::InvalidArc(
                format!("arc (top {top}, length {len}) does not fit in A_{n}"),
            )),
            _ => Ok(Arc { cat, top, len }),
        }
    }

    /// The interval module `M(i, j)` of `A_n`.
    pub fn interval(n: usize, i: usize, j: usize) -> Result<Arc> {
        if i == 0 || i > j {
            return Err(Error::InvalidArc(format!("M({i},{j}) is not an interval")));
        }
        Arc::new(SerialCat::Line(n), j, j - i + 1)
    }

    /// `(i, j)` such that this arc is `M(i, j)`; only meaningful on lines.
    pub fn interval_bounds(&self) -> (usize, usize) {
        (self.top + 1 - self.len, self.top)
    }

    /// Composition factors from top to socle, as vertices.
    pub fn factors(&self) -> Vec<usize> {
        (0..self.len).map(|k| self.shift(self.top, k)).collect()
    }

    /// `v - k` in the vertex set of the category.
    fn shift(&self, v: usize, k: usize) -> usize {
        match self.cat {
            SerialCat::Line(_) => v - k,
            SerialCat::Cycle(n) => (v + n - k % n) % n,
        }
    }

    pub fn socle(&self) -> usize {
        self.shift(self.top, self.len - 1)
    }

    /// Multiplicity of each simple, indexed like the category's quiver.
    pub fn dim_vector(&self) -> Vec<usize> {
        let mut d = vec![0; self.cat.rank()];
        for v in self.factors() {
            d[self.cat.vertex_index(v)] += 1;
        }
        d
    }

    /// The bottom segment of length `j`, i.e. the unique subobject of that length.
    pub fn bottom(&self, j: usize) -> Arc {
        debug_assert!(j >= 1 && j <= self.len);
        Arc {
            cat: self.cat,
            top: self.shift(self.top, self.len - j),
            len: j,
        }
    }

    /// Stacks `self` on top of `below`, if `below` starts right under our socle.
    pub fn stack(&self, below: &Arc) -> Option<Arc> {
        if self.cat != below.cat {
            return None;
        }
        let next = match self.cat {
            SerialCat::Line(_) => self.socle().checked_sub(1)?,
            SerialCat::Cycle(_) => self.shift(self.socle(), 1),
        };
        (next == below.top).then_some(Arc {
            cat: self.cat,
            top: self.top,
            len: self.len + below.len,
        })
    }

    /// Matrix realization: basis `e_0..e_{len-1}` with `e_k` at the `k`-th
    /// composition factor, and the arrow into `e_k`'s vertex sending `e_k` to `e_{k+1}`.
    pub fn realize(&self) -> Rep {
        let q = self.cat.quiver();
        let factors = self.factors();
        let idx: Vec<usize> = factors.iter().map(|&v| self.cat.vertex_index(v)).collect();
        let mut dims = vec![0; q.vertex_count()];
        let mut local = Vec::with_capacity(idx.len());
        for &i in &idx {
            local.push(dims[i]);
            dims[i] += 1;
        }
        let mut mats: Vec<Matrix> = q
            .arrows()
            .iter()
            .map(|&(s, t)| Matrix::zeros(dims[s], dims[t]))
            .collect();
        let one = BigRational::from_integer(BigInt::from(1));
        for k in 0..idx.len().saturating_sub(1) {
            let (t, s) = (idx[k], idx[k + 1]);
            let a = q
                .arrows()
                .iter()
                .position(|&arrow| arrow == (s, t))
                .expect("consecutive factors are joined by an arrow");
            mats[a].set(local[k + 1], local[k], one.clone());
        }
        Rep::new(q, dims, mats).expect("arc realizations are nilpotent")
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.cat {
            SerialCat::Cycle(_) => write!(f, "{}:arc({},{})", self.cat, self.top, self.len),
            SerialCat::Line(_) => {
                let (i, j) = self.interval_bounds();
                write!(f, "{}:arc({},{})", self.cat, i, j)
            }
        }
    }
}

impl Serialize for Arc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Arc {
    type Err = Error;

    /// `U(n):arc(top,len)` or `A(n):arc(i,j)`.
    fn from_str(s: &str) -> Result<Arc> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |msg: &str| Error::parse(s, msg);
        let (cat, arc) = compact
            .split_once(':')
            .ok_or_else(|| bad("expected `U(n):arc(top,len)` or `A(n):arc(i,j)`"))?;
        let kind = cat.chars().next().ok_or_else(|| bad("missing category"))?;
        let n: usize = cat[1..]
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| bad("category must look like U(n) or A(n)"))?
            .parse()
            .map_err(|_| bad("category rank must be a natural number"))?;
        let inner = arc
            .strip_prefix("arc(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| bad("arc must look like arc(a,b)"))?;
        let (a, b) = inner.split_once(',').ok_or_else(|| bad("arc needs two numbers"))?;
        let a: usize = a.parse().map_err(|_| bad("arc entries must be natural numbers"))?;
        let b: usize = b.parse().map_err(|_| bad("arc entries must be natural numbers"))?;
        match kind {
            'U' => Arc::new(SerialCat::Cycle(n), a, b),
            'A' => Arc::interval(n, a, b),
            _ => Err(bad("category must be U or A")),
        }
    }
}

/// The Auslander-Reiten translation of a tube: `top` moves back by one.
pub fn tau(a: &Arc) -> Result<Arc> {
    match a.cat {
        SerialCat::Line(_) => Err(Error::NoTranslationForLine),
        SerialCat::Cycle(n) => Ok(Arc {
            top: (a.top + n - 1) % n,
            ..*a
        }),
    }
}

/// Inverse translation on a tube; identity on lines.
pub fn tau_inverse(a: &Arc) -> Arc {
    match a.cat {
        SerialCat::Line(_) => *a,
        SerialCat::Cycle(n) => Arc {
            top: (a.top + 1) % n,
            ..*a
        },
    }
}

fn hom_count(x: &Arc, y: &Arc) -> usize {
    // A map X -> Y is determined up to scalar by its image, which is a top
    // segment of X and a bottom segment of Y of the same length.
    (1..=x.len.min(y.len))
        .filter(|&j| y.bottom(j).top == x.top)
        .count()
}

fn euler_count(x: &Arc, y: &Arc) -> i64 {
    let (dx, dy) = (x.dim_vector(), y.dim_vector());
    let n = dx.len();
    let diag: i64 = dx.iter().zip(&dy).map(|(&a, &b)| (a * b) as i64).sum();
    // One arrow v -> v + 1 per vertex, wrapping around on a tube.
    let arrows = match x.cat {
        SerialCat::Line(_) => n.saturating_sub(1),
        SerialCat::Cycle(_) => n,
    };
    let off: i64 = (0..arrows).map(|s| (dx[(s + 1) % n] * dy[s]) as i64).sum();
    diag - off
}

/// `(dim Hom(x, y), dim Ext^1(x, y))`.
pub fn dims(x: &Arc, y: &Arc) -> Result<(usize, usize)> {
    if x.cat != y.cat {
        return Err(Error::CategoryMismatch);
    }
    let hom = hom_count(x, y);
    let ext = hom as i64 - euler_count(x, y);
    if ext < 0 {
        return Err(Error::NonNegativityViolation(ext));
    }
    Ok((hom, ext as usize))
}

fn orthogonal(x: &Arc, y: &Arc) -> bool {
    matches!(dims(x, y), Ok((0, 0)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ArcClass {
    Exceptional,
    SphereLike,
    Neither,
}

pub fn classify_arc(a: &Arc) -> ArcClass {
    match a.cat {
        SerialCat::Line(_) => ArcClass::Exceptional,
        SerialCat::Cycle(n) => match a.len.cmp(&n) {
            std::cmp::Ordering::Less => ArcClass::Exceptional,
            std::cmp::Ordering::Equal => ArcClass::SphereLike,
            std::cmp::Ordering::Greater => ArcClass::Neither,
        },
    }
}

/// One factor of a product decomposition, realized inside an ambient category.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub cat: SerialCat,
    /// Image of each simple of `cat`, in the factor's vertex order.
    pub simples: Vec<Arc>,
}

/// A fully faithful embedding of a product of serial categories, described by
/// where the simples go.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub ambient: SerialCat,
    pub factors: Vec<Factor>,
}

impl Embedding {
    /// Image of an arc of factor `factor`: the iterated extension of the mapped
    /// composition factors, stacked in the same order.
    pub fn map_arc(&self, factor: usize, a: &Arc) -> Result<Arc> {
        let f = self
            .factors
            .get(factor)
            .ok_or_else(|| Error::InvalidArc(format!("no factor {factor}")))?;
        if a.cat != f.cat {
            return Err(Error::CategoryMismatch);
        }
        let mut parts = a.factors().into_iter().map(|v| f.simples[f.cat.vertex_index(v)]);
        let first = parts.next().expect("arcs are non-empty");
        parts.try_fold(first, |acc, next| {
            acc.stack(&next).ok_or_else(|| {
                Error::Invariant(format!("embedded simples {acc} and {next} do not stack"))
            })
        })
    }

    pub fn mapped_simples(&self) -> Vec<Arc> {
        self.factors.iter().flat_map(|f| f.simples.iter().copied()).collect()
    }

    /// Pairwise Hom-orthogonal bricks.
    pub fn is_vertex_like(&self) -> bool {
        is_vertex_like_family(&self.mapped_simples())
    }

    /// Ext-quiver of the mapped simples, labelled by their literals.
    pub fn ext_quiver(&self) -> Quiver {
        family_ext_quiver(&self.mapped_simples())
    }

    /// Disjoint union of the factors' defining quivers, labelled like [`Self::ext_quiver`].
    pub fn expected_quiver(&self) -> Quiver {
        let labels: Vec<String> = self.mapped_simples().iter().map(Arc::to_string).collect();
        let mut arrows = Vec::new();
        let mut offset = 0;
        for f in &self.factors {
            let k = f.simples.len();
            match f.cat {
                SerialCat::Cycle(_) => arrows.extend((0..k).map(|i| (offset + i, offset + (i + 1) % k))),
                SerialCat::Line(_) => arrows.extend((1..k).map(|i| (offset + i - 1, offset + i))),
            }
            offset += k;
        }
        Quiver::new(labels, arrows).expect("labels of distinct arcs are distinct")
    }
}

/// Bricks with no Homs between distinct members.
pub fn is_vertex_like_family(family: &[Arc]) -> bool {
    family.iter().enumerate().all(|(i, x)| {
        family.iter().enumerate().all(|(j, y)| {
            let hom = hom_count(x, y);
            if i == j {
                hom == 1
            } else {
                hom == 0
            }
        })
    })
}

fn family_ext_quiver(family: &[Arc]) -> Quiver {
    let labels: Vec<String> = family.iter().map(Arc::to_string).collect();
    let mut arrows = Vec::new();
    for (i, x) in family.iter().enumerate() {
        for (j, y) in family.iter().enumerate() {
            let (_, ext) = dims(y, x).expect("family lives in one category");
            arrows.extend(std::iter::repeat((i, j)).take(ext));
        }
    }
    Quiver::new(labels, arrows).expect("labels of distinct arcs are distinct")
}

/// Right perpendicular category of an exceptional arc (or of a sphere-like
/// arc in a tube), as an embedding of `U_{n-m} x A_{m-1}` resp. `A_{n-m} x A_{m-1}`.
pub fn perp_arc(e: &Arc) -> Result<Embedding> {
    let (cat, t, m) = (e.cat, e.top, e.len);
    let simple = |v: usize| Arc { cat, top: v, len: 1 };
    let factors = match cat {
        SerialCat::Cycle(n) => {
            if m > n {
                return Err(Error::InvalidArc(format!(
                    "{e} is neither exceptional nor sphere-like"
                )));
            }
            let mut factors = Vec::new();
            if m < n {
                // tau^{-1}S, ..., tau^{m+1}S, then S^[m+1], cyclically ordered.
                let mut simples: Vec<Arc> = (0..n - m - 1).map(|k| simple((t + 1 + k) % n)).collect();
                simples.push(Arc { cat, top: t, len: m + 1 });
                factors.push(Factor {
                    cat: SerialCat::Cycle(n - m),
                    simples,
                });
            }
            // tau^{m-1}S, ..., tau S.
            factors.push(Factor {
                cat: SerialCat::Line(m - 1),
                simples: (1..m).map(|k| simple((t + n * m - m + k) % n)).collect(),
            });
            factors
        }
        SerialCat::Line(n) => {
            let (p, q) = e.interval_bounds();
            let outer = (1..=n - m)
                .map(|k| {
                    if k + 1 < p {
                        simple(k)
                    } else if k + 1 == p {
                        Arc { cat, top: q, len: m + 1 }
                    } else {
                        simple(k + m)
                    }
                })
                .collect();
            vec![
                Factor {
                    cat: SerialCat::Line(n - m),
                    simples: outer,
                },
                Factor {
                    cat: SerialCat::Line(m - 1),
                    simples: (1..m).map(|k| simple(p - 1 + k)).collect(),
                },
            ]
        }
    };
    Ok(Embedding { ambient: cat, factors })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Shape {
    /// Rank of the tube factor, if any.
    pub cycle: Option<usize>,
    /// Ranks of the linear factors, sorted.
    pub lines: Vec<usize>,
}

/// A thick subcategory of a serial category.
///
/// It is stored as the right orthogonal of `left_generators`; the signature,
/// the simples and the embedding are derived from that.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThickDesc {
    pub cat: SerialCat,
    pub left_generators: Vec<Arc>,
    /// Member arcs of length at most the rank, sorted.
    pub signature: Vec<Arc>,
    pub simples: Vec<Arc>,
    pub shape: Shape,
    pub embedding: Embedding,
}

impl ThickDesc {
    /// The right orthogonal of the given arcs.
    pub fn right_orthogonal_of(cat: SerialCat, left_generators: Vec<Arc>) -> Result<ThickDesc> {
        if left_generators.iter().any(|g| g.cat != cat) {
            return Err(Error::CategoryMismatch);
        }
        let signature = orth_signature(cat, &left_generators);
        let members: HashSet<Arc> = signature.iter().copied().collect();
        let simples: Vec<Arc> = signature
            .iter()
            .filter(|a| (1..a.len).all(|j| !members.contains(&a.bottom(j))))
            .copied()
            .collect();
        let embedding = embedding_from_simples(cat, &simples)?;
        let shape = Shape {
            cycle: embedding.factors.iter().find_map(|f| match f.cat {
                SerialCat::Cycle(s) => Some(s),
                SerialCat::Line(_) => None,
            }),
            lines: {
                let mut v: Vec<usize> = embedding
                    .factors
                    .iter()
                    .filter_map(|f| match f.cat {
                        SerialCat::Line(k) => Some(k),
                        SerialCat::Cycle(_) => None,
                    })
                    .collect();
                v.sort_unstable();
                v
            },
        };
        Ok(ThickDesc {
            cat,
            left_generators,
            signature,
            simples,
            shape,
            embedding,
        })
    }

    /// Arcs of length at most the rank that are orthogonal to every simple,
    /// i.e. the signature of the right perpendicular subcategory.
    pub fn right_perp_signature(&self) -> Vec<Arc> {
        orth_signature(self.cat, &self.simples)
    }
}

fn orth_signature(cat: SerialCat, gens: &[Arc]) -> Vec<Arc> {
    cat.signature_arcs()
        .into_iter()
        .filter(|x| gens.iter().all(|g| orthogonal(g, x)))
        .collect()
}

/// Orders the simples of a thick subcategory into factors, following
/// `Ext^1(s_{k+1}, s_k) = k` along each component.
fn embedding_from_simples(cat: SerialCat, simples: &[Arc]) -> Result<Embedding> {
    let k = simples.len();
    let ext = |a: usize, b: usize| dims(&simples[a], &simples[b]).map(|d| d.1);
    // next[a] = b with Ext^1(b, a) != 0, prev[a] = b with Ext^1(a, b) != 0.
    let mut next = vec![None; k];
    let mut prev = vec![None; k];
    for a in 0..k {
        for b in 0..k {
            match ext(b, a)? {
                0 => {}
                1 if next[a].is_none() && prev[b].is_none() => {
                    next[a] = Some(b);
                    prev[b] = Some(a);
                }
                _ => {
                    return Err(Error::Invariant(format!(
                        "simples of a serial subcategory must form lines and cycles, \
                         got extra Ext between {} and {}",
                        simples[b], simples[a]
                    )))
                }
            }
        }
    }
    let mut used = vec![false; k];
    let mut lines = Vec::new();
    for start in (0..k).filter(|&a| prev[a].is_none()) {
        let mut chain = Vec::new();
        let mut cur = Some(start);
        while let Some(a) = cur {
            used[a] = true;
            chain.push(simples[a]);
            cur = next[a];
        }
        lines.push(Factor {
            cat: SerialCat::Line(chain.len()),
            simples: chain,
        });
    }
    let mut cycles = Vec::new();
    while let Some(start) = (0..k).find(|&a| !used[a]) {
        let mut chain = Vec::new();
        let mut cur = start;
        loop {
            used[cur] = true;
            chain.push(simples[cur]);
            cur = next[cur].expect("unused simples lie on cycles");
            if cur == start {
                break;
            }
        }
        cycles.push(Factor {
            cat: SerialCat::Cycle(chain.len()),
            simples: chain,
        });
    }
    if cycles.len() > 1 {
        return Err(Error::Invariant(
            "a thick subcategory of a tube has at most one tube factor".into(),
        ));
    }
    lines.sort_by(|a, b| (a.simples.len(), &a.simples).cmp(&(b.simples.len(), &b.simples)));
    cycles.extend(lines);
    Ok(Embedding {
        ambient: cat,
        factors: cycles,
    })
}

/// Does `x` lie in `t`? Tested as orthogonality to the left generators.
pub fn membership(t: &ThickDesc, x: &Arc) -> Result<bool> {
    if x.cat != t.cat {
        return Err(Error::CategoryMismatch);
    }
    Ok(t.left_generators.iter().all(|g| orthogonal(g, x)))
}

pub fn shape_of_thick(t: &ThickDesc) -> (bool, Vec<usize>) {
    (t.shape.cycle.is_some(), t.shape.lines.clone())
}

fn check_bound(c: SerialCat) -> Result<()> {
    c.validate()?;
    match c {
        SerialCat::Cycle(n) if n > MAX_ENUM_CYCLE => Err(Error::BoundExceeded(format!(
            "tubes are enumerated up to rank {MAX_ENUM_CYCLE}, got {n}"
        ))),
        SerialCat::Line(n) if n > MAX_ENUM_LINE => Err(Error::BoundExceeded(format!(
            "linear quivers are enumerated up to rank {MAX_ENUM_LINE}, got {n}"
        ))),
        _ => Ok(()),
    }
}

/// Every thick subcategory, sorted by signature.
///
/// Each one is produced as the right orthogonal of a subcategory `<A', E>`
/// with `E` exceptional or sphere-like and `A'` a thick subcategory of the
/// perpendicular of `E`, recursively; duplicates are removed by signature.
pub fn enumerate_thick(c: SerialCat) -> Result<Vec<ThickDesc>> {
    check_bound(c)?;
    let mut cache = HashMap::new();
    let lists = generating_lists(c, &mut cache)?;
    let mut out = lists
        .into_iter()
        .map(|gens| ThickDesc::right_orthogonal_of(c, gens))
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| a.signature.cmp(&b.signature));
    Ok(out)
}

/// One generating list per thick subcategory of `c`.
fn generating_lists(
    c: SerialCat,
    cache: &mut HashMap<SerialCat, Vec<Vec<Arc>>>,
) -> Result<Vec<Vec<Arc>>> {
    if let Some(hit) = cache.get(&c) {
        return Ok(hit.clone());
    }
    // Signatures as bitsets over the signature arcs; the enumeration bounds keep them under 64.
    let sig = c.signature_arcs();
    debug_assert!(sig.len() <= 64);
    let mut masks: HashMap<Arc, u64> = HashMap::new();
    let mut mask_of = |g: &Arc| -> u64 {
        *masks.entry(*g).or_insert_with(|| {
            sig.iter()
                .enumerate()
                .filter(|(_, x)| orthogonal(g, x))
                .fold(0, |m, (k, _)| m | 1 << k)
        })
    };
    let mut seen: HashSet<u64> = HashSet::new();
    let mut lists = vec![Vec::new()];
    seen.insert(u64::MAX);
    for &e in &sig {
        let emb = perp_arc(&e)?;
        let mut combos: Vec<Vec<Arc>> = vec![Vec::new()];
        for (i, f) in emb.factors.iter().enumerate() {
            let mapped = generating_lists(f.cat, cache)?
                .iter()
                .map(|g| g.iter().map(|a| emb.map_arc(i, a)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            combos = combos
                .iter()
                .flat_map(|prefix| {
                    mapped.iter().map(move |m| {
                        let mut v = prefix.clone();
                        v.extend_from_slice(m);
                        v
                    })
                })
                .collect();
        }
        for mut gens in combos {
            gens.push(e);
            let key = gens.iter().fold(u64::MAX, |m, g| m & mask_of(g));
            if seen.insert(key) {
                lists.push(gens);
            }
        }
    }
    cache.insert(c, lists.clone());
    Ok(lists)
}

/// The smallest thick subcategory containing `gens`.
pub fn thick_closure(c: SerialCat, gens: &[Arc]) -> Result<ThickDesc> {
    if gens.iter().any(|g| g.cat != c) {
        return Err(Error::CategoryMismatch);
    }
    let mut best: Option<ThickDesc> = None;
    for t in enumerate_thick(c)? {
        let contains = gens.iter().all(|g| membership(&t, g).unwrap_or(false));
        if contains && best.as_ref().map_or(true, |b| t.signature.len() < b.signature.len()) {
            best = Some(t);
        }
    }
    Ok(best.expect("the whole category contains every arc"))
}

/// Signatures as sets, for callers that compare subcategories.
pub fn signature_set(t: &ThickDesc) -> BTreeSet<Arc> {
    t.signature.iter().copied().collect()
}
