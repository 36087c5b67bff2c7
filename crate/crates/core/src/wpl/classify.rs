//! Sufficient criteria for a generated thick subcategory to be big or
//! quiver-like. Anything not covered is reported as undetermined.

use serde::Serialize;

use super::{ext_quiver_of, from_arc, hom_ext, is_vertex_like, to_arc, Point, SheafClass, WplData};
use crate::error::Result;
use crate::lgroup::{self, LElement};
use crate::quiver::{Quiver, QuiverJson};
use crate::serial::{self, Arc, ArcClass, SerialCat, MAX_ENUM_CYCLE};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// Contains the line bundle `bundle`, and `witness` is a sphere-like torsion
    /// sheaf in the subcategory or a line bundle differing from `bundle` by `c`.
    Big { bundle: SheafClass, witness: SheafClass },
    QuiverLike(Quiver),
    /// Generated by the simples of its torsion part followed by a vertex-like
    /// torsion-free part with no maps into them.
    SplitThenQuiverLike {
        torsion: Vec<SheafClass>,
        free: Vec<SheafClass>,
        quiver: Quiver,
    },
    Undetermined,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum ClassificationJson<'a> {
    Big { bundle: &'a SheafClass, witness: &'a SheafClass },
    QuiverLike { quiver: QuiverJson },
    SplitThenQuiverLike {
        torsion: &'a [SheafClass],
        free: &'a [SheafClass],
        quiver: QuiverJson,
    },
    Undetermined,
}

impl Serialize for Classification {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Classification::Big { bundle, witness } => ClassificationJson::Big { bundle, witness },
            Classification::QuiverLike(q) => ClassificationJson::QuiverLike { quiver: q.to_json() },
            Classification::SplitThenQuiverLike { torsion, free, quiver } => {
                ClassificationJson::SplitThenQuiverLike {
                    torsion,
                    free,
                    quiver: quiver.to_json(),
                }
            }
            Classification::Undetermined => ClassificationJson::Undetermined,
        }
        .serialize(s)
    }
}

fn is_sphere_like(data: &WplData, f: &SheafClass) -> Result<bool> {
    Ok(match to_arc(data, f)? {
        Some(a) => serial::classify_arc(&a) == ArcClass::SphereLike,
        None => false,
    })
}

pub fn classify_generated(data: &WplData, g: &[SheafClass]) -> Result<Classification> {
    for f in g {
        data.check(f)?;
    }
    let free: Vec<SheafClass> = g.iter().filter(|f| !f.is_torsion()).cloned().collect();
    let torsion: Vec<SheafClass> = g.iter().filter(|f| f.is_torsion()).cloned().collect();

    if let Some(bundle) = free.first() {
        if let Some(s) = torsion.iter().find(|f| is_sphere_like(data, f).unwrap_or(false)) {
            return Ok(Classification::Big {
                bundle: bundle.clone(),
                witness: s.clone(),
            });
        }
        let c = LElement::c(data.weights());
        for f in &free {
            let SheafClass::LineBundle(l) = f else { continue };
            let twisted = SheafClass::LineBundle(lgroup::add(data.weights(), l, &c)?);
            if free.contains(&twisted) {
                return Ok(Classification::Big {
                    bundle: f.clone(),
                    witness: twisted,
                });
            }
        }
    }

    if is_vertex_like(data, g)? {
        return Ok(Classification::QuiverLike(ext_quiver_of(data, g)?));
    }

    // Close the torsion part point by point inside its tube.
    let mut points: Vec<Point> = Vec::new();
    for f in &torsion {
        let p = f.support().expect("torsion has a support");
        if !points.contains(&p) {
            points.push(p);
        }
    }
    let mut simples = Vec::new();
    for p in &points {
        let arcs: Vec<Arc> = torsion
            .iter()
            .filter(|f| f.support().as_ref() == Some(p))
            .map(|f| to_arc(data, f).map(|a| a.expect("torsion")))
            .collect::<Result<_>>()?;
        let cat = arcs[0].cat;
        if cat.rank() > MAX_ENUM_CYCLE {
            return Ok(Classification::Undetermined);
        }
        let closure = serial::thick_closure(cat, &arcs)?;
        if let Some(bundle) = free.first() {
            if let Some(s) = closure.embedding.factors.iter().find(|f| matches!(f.cat, SerialCat::Cycle(_))) {
                let whole = Arc::new(s.cat, s.cat.rank() - 1, s.cat.rank())?;
                let sphere = closure.embedding.map_arc(0, &whole)?;
                debug_assert_eq!(serial::classify_arc(&sphere), ArcClass::SphereLike);
                return Ok(Classification::Big {
                    bundle: bundle.clone(),
                    witness: from_arc(p, &sphere),
                });
            }
        }
        simples.extend(closure.simples.iter().map(|a| from_arc(p, a)));
    }

    if !is_vertex_like(data, &free)? {
        return Ok(Classification::Undetermined);
    }
    for f in &free {
        for s in &simples {
            if hom_ext(data, f, s)?.0 != 0 {
                return Ok(Classification::Undetermined);
            }
        }
    }
    let family: Vec<SheafClass> = simples.iter().chain(&free).cloned().collect();
    if !is_vertex_like(data, &family)? {
        return Ok(Classification::Undetermined);
    }
    Ok(Classification::SplitThenQuiverLike {
        quiver: ext_quiver_of(data, &family)?,
        torsion: simples,
        free,
    })
}
