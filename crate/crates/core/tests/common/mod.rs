#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use wpc_core::lgroup::{normalize, Weights};
use wpc_core::nilrep::Rep;
use wpc_core::quiver::Quiver;
use wpc_core::wpl::{SheafClass, WplData};
use wpc_core::Matrix;

pub fn model(r: &[u32], ordinary: &[&str]) -> WplData {
    WplData::new(
        Weights::new(r.to_vec()).unwrap(),
        ordinary.iter().map(|s| s.to_string()).collect(),
    )
    .unwrap()
}

pub fn random_line_bundle(rng: &mut ChaCha8Rng, w: &Weights) -> SheafClass {
    let a = rng.gen_range(-3..=3);
    let b: Vec<i64> = w.as_slice().iter().map(|&r| rng.gen_range(-(r as i64)..2 * r as i64)).collect();
    SheafClass::LineBundle(normalize(w, a, &b).unwrap())
}

/// Line bundles, torsion at weighted points (including non-exceptional
/// lengths) and torsion at the declared ordinary points.
pub fn random_class(rng: &mut ChaCha8Rng, d: &WplData) -> SheafClass {
    let w = d.weights();
    let kinds = 1 + usize::from(!w.is_empty()) + usize::from(!d.ordinary().is_empty());
    let mut k = rng.gen_range(0..kinds);
    if k == 0 {
        return random_line_bundle(rng, w);
    }
    if !w.is_empty() {
        if k == 1 {
            let point = rng.gen_range(1..=w.len());
            let r = w.weight(point).unwrap();
            return SheafClass::TorsionW {
                point,
                top: rng.gen_range(0..r),
                len: rng.gen_range(1..=2 * r as usize + 1),
            };
        }
        k -= 1;
    }
    debug_assert_eq!(k, 1);
    let label = d.ordinary()[rng.gen_range(0..d.ordinary().len())].clone();
    SheafClass::TorsionO {
        label,
        len: rng.gen_range(1..=3),
    }
}

/// A random nilpotent representation of the oriented `n`-cycle. Basis vectors
/// get random heights and arrows only lower the height, which forces nilpotency.
pub fn random_cycle_rep(rng: &mut ChaCha8Rng, n: usize, total: usize) -> Rep {
    let q = Quiver::cycle(n);
    let mut dims = vec![0; n];
    let mut heights: Vec<Vec<usize>> = vec![Vec::new(); n];
    for _ in 0..total {
        let v = rng.gen_range(0..n);
        dims[v] += 1;
        heights[v].push(rng.gen_range(0..=total));
    }
    let mats = q
        .arrows()
        .iter()
        .map(|&(s, t)| {
            let mut entries = Vec::with_capacity(dims[s] * dims[t]);
            for r in 0..dims[s] {
                for c in 0..dims[t] {
                    let allowed = heights[s][r] < heights[t][c];
                    entries.push(if allowed { rng.gen_range(-1..=2) } else { 0 });
                }
            }
            Matrix::from_ints(dims[s], dims[t], &entries)
        })
        .collect();
    Rep::new(q, dims, mats).expect("height-lowering maps are nilpotent")
}
