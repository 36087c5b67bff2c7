mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wpc_core::lgroup::{self, LElement};
use wpc_core::serial::{self, ArcClass};
use wpc_core::wpl::{self, Point, SheafClass};

const WEIGHTS: [&[u32]; 5] = [&[], &[2], &[2, 3], &[2, 2, 2, 2], &[3, 4, 5]];

#[test]
fn serre_duality_and_vanishing() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for r in WEIGHTS {
        let d = common::model(r, &["y", "z"]);
        for _ in 0..300 {
            let f = common::random_class(&mut rng, &d);
            let g = common::random_class(&mut rng, &d);
            let (_, ext) = wpl::hom_ext(&d, &f, &g).unwrap();
            let tf = wpl::tau_sheaf(&d, &f).unwrap();
            assert_eq!(ext, wpl::hom_ext(&d, &g, &tf).unwrap().0, "{f} {g}");
            if f.is_torsion() && !g.is_torsion() {
                assert_eq!(wpl::hom_ext(&d, &f, &g).unwrap().0, 0);
                assert_eq!(wpl::hom_ext(&d, &g, &f).unwrap().1, 0);
            }
        }
    }
}

#[test]
fn line_bundles_see_each_sphere_once() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for r in WEIGHTS {
        let d = common::model(r, &["y"]);
        let w = d.weights();
        let mut spheres = vec![SheafClass::TorsionO { label: "y".into(), len: 1 }];
        for i in 1..=w.len() {
            let ri = w.weight(i).unwrap();
            spheres.extend((0..ri).map(|top| SheafClass::TorsionW { point: i, top, len: ri as usize }));
        }
        for _ in 0..50 {
            let l = common::random_line_bundle(&mut rng, w);
            for s in &spheres {
                assert_eq!(wpl::hom_ext(&d, &l, s).unwrap(), (1, 0), "{l} {s}");
                let arc = wpl::to_arc(&d, s).unwrap().unwrap();
                assert_eq!(serial::classify_arc(&arc), ArcClass::SphereLike);
                assert_eq!(wpl::euler(&d, s, s).unwrap(), 0);
            }
        }
    }
}

#[test]
fn euler_is_additive_along_defining_sequences() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for r in WEIGHTS {
        let d = common::model(r, &["y"]);
        let w = d.weights();
        for _ in 0..20 {
            let probe = common::random_class(&mut rng, &d);
            let lb = common::random_line_bundle(&mut rng, w);
            let SheafClass::LineBundle(lam) = &lb else { unreachable!() };
            for i in 1..=w.len() {
                let ri = w.weight(i).unwrap() as i64;
                let x = LElement::x(w, i).unwrap();
                for j in -ri..=2 * ri {
                    // 0 -> O((j-1)x) -> O(jx) -> S(i,j) -> 0
                    let upper = SheafClass::LineBundle(x.scale(w, j).unwrap());
                    let lower = SheafClass::LineBundle(x.scale(w, j - 1).unwrap());
                    let s = SheafClass::simple(w, i, j).unwrap();
                    assert_eq!(
                        wpl::euler(&d, &lb, &upper).unwrap(),
                        wpl::euler(&d, &lb, &lower).unwrap() + wpl::euler(&d, &lb, &s).unwrap()
                    );
                }
                for m in 1..=2 * ri as usize {
                    // 0 -> O(lam - m x) -> O(lam) -> Top^[m] -> 0
                    let shifted = lgroup::sub(w, lam, &x.scale(w, m as i64).unwrap()).unwrap();
                    let top = wpl::top_m(&d, &Point::Weighted(i), lam, m).unwrap();
                    let lower = SheafClass::LineBundle(shifted);
                    assert_eq!(
                        wpl::euler(&d, &probe, &lb).unwrap(),
                        wpl::euler(&d, &probe, &lower).unwrap() + wpl::euler(&d, &probe, &top).unwrap(),
                        "probe {probe}, {lb}, m = {m}"
                    );
                    assert_eq!(
                        wpl::euler(&d, &lb, &probe).unwrap(),
                        wpl::euler(&d, &lower, &probe).unwrap() + wpl::euler(&d, &top, &probe).unwrap()
                    );
                }
            }
            let y = Point::Ordinary("y".into());
            let c = LElement::c(w);
            let lower = SheafClass::LineBundle(lgroup::sub(w, lam, &c).unwrap());
            let top = wpl::top_m(&d, &y, lam, 1).unwrap();
            assert_eq!(
                wpl::euler(&d, &probe, &lb).unwrap(),
                wpl::euler(&d, &probe, &lower).unwrap() + wpl::euler(&d, &probe, &top).unwrap()
            );
        }
    }
}

#[test]
fn twists_commute() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for r in WEIGHTS {
        let d = common::model(r, &["y"]);
        let mut points: Vec<Point> = (1..=d.weights().len()).map(Point::Weighted).collect();
        points.push(Point::Ordinary("y".into()));
        for _ in 0..100 {
            let f = common::random_class(&mut rng, &d);
            let p = &points[rng.gen_range(0..points.len())];
            let q = &points[rng.gen_range(0..points.len())];
            assert_eq!(
                wpl::c_twist(&d, p, &wpl::tau_sheaf(&d, &f).unwrap()).unwrap(),
                wpl::tau_sheaf(&d, &wpl::c_twist(&d, p, &f).unwrap()).unwrap()
            );
            assert_eq!(
                wpl::sigma_twist(&d, p, &wpl::sigma_twist(&d, q, &f).unwrap()).unwrap(),
                wpl::sigma_twist(&d, q, &wpl::sigma_twist(&d, p, &f).unwrap()).unwrap()
            );
            // Twists are autoequivalences, so they preserve Hom and Ext.
            let g = common::random_class(&mut rng, &d);
            let (fp, gp) = (wpl::sigma_twist(&d, p, &f).unwrap(), wpl::sigma_twist(&d, p, &g).unwrap());
            assert_eq!(wpl::hom_ext(&d, &f, &g).unwrap(), wpl::hom_ext(&d, &fp, &gp).unwrap());
        }
    }
}

#[test]
fn canonical_collections_are_exceptional() {
    fn vectors(p: usize) -> Vec<Vec<u32>> {
        if p == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for v in vectors(p - 1) {
            let lo = v.last().copied().unwrap_or(2);
            for r in lo..=5 {
                let mut v = v.clone();
                v.push(r);
                out.push(v);
            }
        }
        out
    }
    for p in 0..=4 {
        for r in vectors(p) {
            let d = common::model(&r, &[]);
            let c = wpl::canonical_collection(d.weights());
            assert_eq!(c.len(), 2 + r.iter().map(|&x| x as usize - 1).sum::<usize>());
            assert!(wpl::is_exceptional_sequence(&d, &c).unwrap(), "{r:?}");
        }
    }
}

fn heights(r: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &ri in r {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..ri).map(move |b| {
                    let mut v = v.clone();
                    v.push(b);
                    v
                })
            })
            .collect();
    }
    out
}

#[test]
fn star_collections_and_their_duals() {
    for r in [&[2][..], &[3, 3][..], &[2, 3, 4][..], &[3, 3, 3, 3][..]] {
        let d = common::model(r, &[]);
        for b in heights(r) {
            let s = wpl::star_collection(&d, &b).unwrap();
            assert!(wpl::is_exceptional_sequence(&d, &s.left).unwrap());
            assert!(wpl::is_exceptional_sequence(&d, &s.right).unwrap());
            for dual in [&s.left_dual, &s.right_dual] {
                assert!(wpl::is_vertex_like(&d, dual).unwrap(), "{r:?} {b:?}");
                // One line bundle in the middle, every simple tied to it by a single arrow chain.
                let q = wpl::ext_quiver_of(&d, dual).unwrap();
                assert!(q.is_connected());
                assert!(q.is_acyclic());
                assert_eq!(q.arrows().len(), q.vertex_count() - 1);
            }
            assert_eq!(s.left.len(), s.left_dual.len());
            assert_eq!(s.right.len(), s.right_dual.len());
        }
    }
}

#[test]
fn perp_of_torsion_is_a_smaller_tube_times_a_line() {
    for r in [&[2][..], &[5][..], &[3, 4][..]] {
        let d = common::model(r, &[]);
        let w = d.weights();
        for i in 1..=w.len() {
            let ri = w.weight(i).unwrap();
            for top in 0..ri {
                for len in 1..ri as usize {
                    let e = SheafClass::TorsionW { point: i, top, len };
                    let p = wpl::perp_exceptional_torsion(&d, &e).unwrap();
                    let new_r = ri - len as u32;
                    match p.new_index {
                        Some(k) => assert_eq!(p.weights.weight(k).unwrap(), new_r),
                        None => assert_eq!(new_r, 1),
                    }
                    assert_eq!(p.weights.len() + usize::from(p.new_index.is_none()), w.len());
                    assert_eq!(p.line_factor.len(), len - 1);
                    assert_eq!(p.tube_factor.len(), new_r as usize);
                    for t in p.line_factor.iter().chain(&p.tube_factor) {
                        assert_eq!(wpl::hom_ext(&d, &e, t).unwrap(), (0, 0));
                    }
                    let family: Vec<SheafClass> = p.tube_factor.iter().chain(&p.line_factor).cloned().collect();
                    assert!(wpl::is_vertex_like(&d, &family).unwrap());
                }
                let sphere = SheafClass::TorsionW { point: i, top, len: ri as usize };
                assert!(wpl::perp_exceptional_torsion(&d, &sphere).is_err());
            }
        }
    }
}
