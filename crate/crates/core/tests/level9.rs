use ninecong_core::algebra::{parse_rational, Ring, Q};
use ninecong_core::diophantine::{local_solubility, search_points, LocalVerdict};
use ninecong_core::modular9::{forget_on_model, int_matrix, twisted_model, universal_model, CubicPairModel, ProjPt};
use ninecong_core::verify::{case, verify_paper, CaseKind};
use ninecong_core::Sign;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

mod common;

use common::{gamma, projective_points, tangent_plane, F, P};

#[test]
fn forgetful_map_is_projective_and_tangent_independent() {
    let mut rng = StdRng::seed_from_u64(9);
    let mut tested = 0;
    let mut models = 0;
    while tested < 20 {
        let (a, b) = (F::new(rng.gen_range(0..P as i64)), F::new(rng.gen_range(0..P as i64)));
        let sign = if rng.gen_bool(0.5) { Sign::Direct } else { Sign::Reverse };
        let Ok(m) = twisted_model(&a, &b, sign) else { continue };
        models += 1;
        assert!(models < 200, "too few usable points");
        let pts = projective_points(&m);
        if pts.is_empty() {
            continue;
        }
        let p = &pts[rng.gen_range(0..pts.len())];
        let Ok(rs) = forget_on_model(&m, p) else { continue };

        let lam = F::new(rng.gen_range(1..P as i64));
        let scaled = ProjPt::new(std::array::from_fn(|i| p.coords()[i].mul(&lam)));
        assert!(forget_on_model(&m, &scaled).unwrap().proportional(&rs));

        // another direction in the tangent plane: mu * Q + nu * P
        let [g1, g2] = m.gradients(p);
        let plane = tangent_plane(&g1, &g2);
        assert_eq!(plane.len(), 2, "point {p} is smooth, so the tangent plane is 2-dimensional");
        let tangent: Vec<[F; 4]> = plane.into_iter().filter(|q| !ProjPt::new(*q).proportional(p)).collect();
        let q = tangent[0];
        let (mu, nu) = (F::new(rng.gen_range(1..P as i64)), F::new(rng.gen_range(0..P as i64)));
        let q2: [F; 4] = std::array::from_fn(|i| q[i].mul(&mu).add(&p.coords()[i].mul(&nu)));
        let [h1, h2] = gamma(&m, p, &q2);
        assert_eq!(h2.mul(&rs.s), h1.scale_int(3).mul(&rs.r), "direction changed (r : s) at {p}");
        for other in &tangent[1..] {
            let [k1, k2] = gamma(&m, p, other);
            assert_eq!(k2.mul(&rs.s), k1.scale_int(3).mul(&rs.r));
        }
        tested += 1;
    }
}

#[test]
fn search_is_monotone_in_height() {
    let a = parse_rational("-1").unwrap();
    let b = parse_rational("0").unwrap();
    let models = [
        universal_model(),
        twisted_model(&a, &b, Sign::Direct).unwrap(),
        twisted_model(&a, &b, Sign::Reverse).unwrap(),
    ];
    for m in &models {
        let mut prev = search_points(m, 1);
        for h in 2..=4 {
            let cur = search_points(m, h);
            assert!(cur.scanned > prev.scanned);
            for p in &prev.points {
                assert!(cur.contains(p), "{p} lost at height {h}");
                assert!(m.contains(p));
            }
            prev = cur;
        }
    }
}

fn rational_case_points(id: &str) -> (CubicPairModel, Vec<ProjPt<Q>>) {
    let c = case(id).unwrap();
    let CaseKind::Rational { a, b, matrix, points, .. } = c.kind else { panic!("{id} is not over Q") };
    let model = twisted_model(&parse_rational(a).unwrap(), &parse_rational(b).unwrap(), c.sign).unwrap();
    let m = int_matrix(&matrix);
    let pts = points.iter().map(|(x, _)| ProjPt::from_ints(*x).apply(&m)).collect();
    (model, pts)
}

#[test]
fn global_points_are_never_excluded_locally() {
    for id in ["ex-47775-direct", "ex-201-reverse"] {
        let (model, pts) = rational_case_points(id);
        for p in &pts {
            assert!(model.contains(p), "{id}: {p} is not on the model");
        }
        for p in [5, 7, 11, 13, 17] {
            let r = local_solubility(&model, p, 3).unwrap();
            assert!(!matches!(r.verdict, LocalVerdict::NoPointsToDepth(_)), "{id} at p = {p}: {r}");
        }
    }
}

#[test]
fn verify_paper_json_is_deterministic() {
    let skip = ["examples", "diophantine"];
    let first = verify_paper(&skip).unwrap().to_json();
    let second = verify_paper(&skip).unwrap().to_json();
    assert_eq!(serde_json::to_string(&first).unwrap(), serde_json::to_string(&second).unwrap());
    assert_eq!(first["counts"]["skipped"], 7);
    assert_eq!(first["passed"], true);
}
