//! The elliptic surfaces over `Q(T)` birational to `Z(9)` and `Z^-(9)`, the
//! section `(0, 0)` on them, and specialization checks against the genus-one
//! curves they come from.

mod reduce;

pub use reduce::{
    nagell_reduce, project_quadric_intersection, quartic_invariants, quartic_jacobian, PlaneCubicWithPoint,
    QuadricIntersectionWithPoint,
};

use crate::algebra::{Poly, RatFun, Ring, Vars, Q};
use crate::elliptic::{Curve, Point};
use crate::error::{Error, Result};
use crate::families3::Sign;
use crate::modular9::twisted_forms;

const DIRECT_COEFFS: [&str; 5] =
    ["6*T^2 + 3*T + 2", "-(16*T^4 + 12*T^3 + 9*T^2 + 6*T + 1)", "T^2*(T + 1)*(4*T^3 + 9*T + 9)", "0", "0"];
const REVERSE_COEFFS: [&str; 5] =
    ["12*T^3 + 3*T^2 - 6", "-3*(T + 1)*(T^3 - 1)*(9*T^2 + 2*T + 1)", "(T - 1)^3*(T^3 - 1)*(4*T^3 - 3*T - 7)", "0", "0"];

/// A Weierstrass curve over `Q(T)` with the point `(0, 0)` on it.
#[derive(Clone, Debug, PartialEq)]
pub struct EllipticSurface {
    pub curve: Curve<RatFun>,
    pub sign: Sign,
}

impl EllipticSurface {
    pub fn section(&self) -> Point<RatFun> {
        Point::Affine(RatFun::zero(), RatFun::zero())
    }

    /// The fiber at `T = t0`.
    pub fn specialize(&self, t0: &Q) -> Result<Curve<Q>> {
        self.curve.specialize(t0)
    }
}

fn ratfun(src: &str) -> RatFun {
    let v = Vars::new(&["T"]);
    RatFun::from_poly(&Poly::parse(src, &v).unwrap(), "T").unwrap()
}

/// The surface for direct (`Z(9)`) or reverse (`Z^-(9)`) congruences.
pub fn surface(sign: Sign) -> EllipticSurface {
    let src = match sign {
        Sign::Direct => DIRECT_COEFFS,
        Sign::Reverse => REVERSE_COEFFS,
    };
    let [a1, a2, a3, a4, a6] = src.map(ratfun);
    let curve = Curve::new(a1, a2, a3, a4, a6).expect("nonzero discriminant");
    EllipticSurface { curve, sign }
}

/// Multiples of the section on one fiber.
#[derive(Clone, Debug, PartialEq)]
pub struct SectionMultiples {
    pub sign: Sign,
    pub t0: Q,
    pub fiber: Curve<Q>,
    /// `n P` for `n = 1..=n_max`.
    pub multiples: Vec<Point<Q>>,
}

impl SectionMultiples {
    /// Smallest `n` with `n P = O`, if any.
    pub fn order(&self) -> Option<usize> {
        self.multiples.iter().position(Point::is_infinity).map(|i| i + 1)
    }

    /// Rational torsion points have order at most 12, and specialization at a good
    /// fiber is injective on torsion, so a section with no `n <= 12` killing it on
    /// one fiber has infinite order.
    pub fn infinite_order_certificate(&self) -> bool {
        self.multiples.len() >= 12 && self.order().is_none()
    }
}

/// Computes `n (0, 0)` on the fiber at `t0` for `n = 1..=n_max`.
pub fn section_multiples(s: &EllipticSurface, n_max: usize, t0: &Q) -> Result<SectionMultiples> {
    let fiber = s.specialize(t0)?;
    let p = Point::Affine(Q::zero(), Q::zero());
    let mut multiples = Vec::with_capacity(n_max);
    let mut acc = Point::Infinity;
    for _ in 0..n_max {
        acc = fiber.add(&acc, &p);
        multiples.push(acc.clone());
    }
    Ok(SectionMultiples { sign: s.sign, t0: t0.clone(), fiber, multiples })
}

/// Smallest integer `t >= from` giving a good fiber.
pub fn first_good_fiber(s: &EllipticSurface, from: i64) -> i64 {
    (from..).find(|&t| s.specialize(&Q::from_integer(t.into())).is_ok()).unwrap()
}

fn proof_vars() -> Vars {
    Vars::new(&["T", "u", "v", "w", "s"])
}

fn pp(src: &str) -> Poly {
    Poly::parse(src, &proof_vars()).unwrap()
}

const G0: &str = "u^2 + 3*u*v + 3*v^2 + 9*u*w + 6*T*v*w + 3*(T^2 - 12*T + 24)*w^2";
const G1: &str = "T^3 - 9*T^2 + 36*T - 36";
const H0: &str = "v^2*w - (T - 1)*u*w^2 + 2*(T - 6)*v*w^2 + (T^2 - 24*T + 48)*w^3";
const H1: &str = "u + (T^2 - 6*T + 12)*v - 3*(T - 2)*(T - 6)*w";
const Q1: &str = "3*u^2 - u*v - 3*u*w + 2*(3*T - 1)*u*s - 6*v*w - 3*(2*T - 3)*v*s + 2*w^2 \
    - 3*T^2*w*s + 9*T^2*s^2";
const Q2: &str = "3*(T - 2)*u^2 + 3*u*v + u*w - 2*v^2 - 6*(2*T - 3)*v*w + 3*(6*T - 1)*v*s \
    + 9*T^2*w*s + 3*T^3*s^2";

/// `F_i` at the parametrized point, with `a, b` also in terms of `T, u, v, w, s`.
fn pulled_back(sign: Sign) -> [Poly; 2] {
    let images: [&str; 6] = match sign {
        Sign::Direct => ["12*s - 3*w^2", "u*s + 2*w^3", "6*v*s - 3*w^3", "2*s*T - w^2", "w", "1"],
        Sign::Reverse => ["3*u*s - 3*w^2", "3*v*s^2 - 3*u*w*s + 2*w^3", "-3*s^2*T - w^2", "s - w", "2*w", "1"],
    };
    let images: Vec<Poly> = images.iter().map(|s| pp(s)).collect();
    let (f1, f2) = twisted_forms(sign);
    [f1, f2].map(|f| f.substitute_all(&images).unwrap().with_vars(&proof_vars()).unwrap())
}

/// The four expansions used to pass from the level-9 models to genus-one curves
/// over `Q(T)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SubstitutionReport {
    pub sign: Sign,
    pub identities: Vec<(String, bool)>,
}

impl SubstitutionReport {
    pub fn passed(&self) -> bool {
        self.identities.iter().all(|(_, ok)| *ok)
    }
}

pub fn theorem4_substitution_check(sign: Sign) -> SubstitutionReport {
    let [e1, e2] = pulled_back(sign);
    let s = pp("s");
    let identities = match sign {
        Sign::Direct => {
            let rhs1 = s.pow(2).scale_int(12).mul(&pp(G0).add(&s.mul(&pp(G1)).scale_int(4)));
            let rhs2 = s.pow(2).scale_int(36).mul(&pp(H0).add(&s.mul(&pp(H1)).scale_int(4)));
            vec![
                ("F1+ = 12 s^2 (g0 + 4 s g1)".to_string(), e1 == rhs1),
                ("F2+ = 36 s^2 (h0 + 4 s h1)".to_string(), e2 == rhs2),
            ]
        }
        Sign::Reverse => {
            let c = s.pow(3).scale_int(9);
            let rhs1 = c.mul(&pp(Q1));
            let rhs2 = c.mul(&pp("w").mul(&pp(Q1)).sub(&s.mul(&pp(Q2))));
            vec![("F1- = 9 s^3 q1".to_string(), e1 == rhs1), ("F2- = 9 s^3 (w q1 - s q2)".to_string(), e2 == rhs2)]
        }
    };
    SubstitutionReport { sign, identities }
}

fn at_t(f: &str, t0: &Q, names: &[&str]) -> Poly {
    pp(f).specialize("T", t0).with_vars(&Vars::new(names)).unwrap()
}

/// The plane cubic `g0 h1 - g1 h0` in `(u : v : w)` at `T = t0`, with its point
/// `(12 : t0 - 6 : -1)`.
pub fn direct_cubic(t0: &Q) -> Result<PlaneCubicWithPoint> {
    let uvw = ["u", "v", "w"];
    let cubic = at_t(G0, t0, &uvw).mul(&at_t(H1, t0, &uvw)).sub(&at_t(G1, t0, &uvw).mul(&at_t(H0, t0, &uvw)));
    let point = [Q::from_integer(12.into()), t0.sub(&Q::from_integer(6.into())), Q::from_integer((-1).into())];
    PlaneCubicWithPoint::new(cubic, point)
}

/// The quadrics `q1 = q2 = 0` in `(u : v : w : s)` at `T = t0`, with the point
/// `(2 : 1 : 1 : 0)`.
pub fn reverse_quadrics(t0: &Q) -> Result<QuadricIntersectionWithPoint> {
    let uvws = ["u", "v", "w", "s"];
    let pt = [2, 1, 1, 0].map(|k: i64| Q::from_integer(k.into()));
    QuadricIntersectionWithPoint::new(at_t(Q1, t0, &uvws), at_t(Q2, t0, &uvws), pt)
}

/// Weierstrass model of the genus-one curve from the proof at `T = t0`.
pub fn proof_curve(sign: Sign, t0: &Q) -> Result<Curve<Q>> {
    match sign {
        Sign::Direct => nagell_reduce(&direct_cubic(t0)?),
        Sign::Reverse => nagell_reduce(&project_quadric_intersection(&reverse_quadrics(t0)?)?),
    }
}

/// Parameter on the surface matching the parameter `t0` of the curve from the proof.
/// The printed surfaces are the reductions after `T <- 2T + 3` (direct) and
/// `T <- (2T - 3)/(2T + 1)` (reverse), so the surface parameter is the preimage.
pub fn surface_parameter(sign: Sign, t0: &Q) -> Option<Q> {
    let two = Q::from_integer(2.into());
    let three = Q::from_integer(3.into());
    match sign {
        // t0 = 2T + 3
        Sign::Direct => Some(t0.sub(&three) / two),
        // t0 = (2T - 3)/(2T + 1), so T = (t0 + 3) / (2 (1 - t0))
        Sign::Reverse => {
            let den = Q::one().sub(t0).mul(&two);
            (!den.is_zero()).then(|| t0.add(&three) / den)
        }
    }
}

/// One specialization comparing `j` of the proof's genus-one curve with `j` of the
/// printed surface.
#[derive(Clone, Debug, PartialEq)]
pub struct JEvidence {
    pub sign: Sign,
    pub t0: Q,
    pub surface_t: Q,
    pub j_curve: Q,
    pub j_surface: Q,
}

impl JEvidence {
    pub fn matches(&self) -> bool {
        self.j_curve == self.j_surface
    }
}

/// Compares `j` at one proof parameter `t0`.
pub fn j_evidence_at(sign: Sign, t0: &Q) -> Result<JEvidence> {
    let e = proof_curve(sign, t0)?;
    let surface_t = surface_parameter(sign, t0)
        .ok_or_else(|| Error::BadSpecialization(format!("no surface parameter for {t0}")))?;
    let fiber = surface(sign).specialize(&surface_t)?;
    Ok(JEvidence { sign, t0: t0.clone(), surface_t, j_curve: e.j(), j_surface: fiber.j() })
}

/// `j`-comparisons at the first `count` integers `t0 >= 1` where both sides are
/// good, skipping degenerate ones.
pub fn j_evidence(sign: Sign, count: usize) -> Vec<JEvidence> {
    (1i64..200).filter_map(|t| j_evidence_at(sign, &Q::from_integer(t.into())).ok()).take(count).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, qf};

    #[test]
    fn section_lies_on_both_surfaces() {
        for sign in [Sign::Direct, Sign::Reverse] {
            let s = surface(sign);
            assert!(s.curve.contains(&s.section()));
            assert!(!s.curve.invariants().disc.is_zero());
        }
    }

    #[test]
    fn reverse_fiber_at_zero() {
        let e = surface(Sign::Reverse).specialize(&q(0)).unwrap();
        assert_eq!(e.coeffs(), &[q(-6), q(3), q(-7), q(0), q(0)]);
    }

    #[test]
    fn substitution_identities() {
        for sign in [Sign::Direct, Sign::Reverse] {
            let r = theorem4_substitution_check(sign);
            assert_eq!(r.identities.len(), 2);
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn sections_have_infinite_order() {
        for sign in [Sign::Direct, Sign::Reverse] {
            let s = surface(sign);
            let t = first_good_fiber(&s, 2);
            let m = section_multiples(&s, 12, &q(t)).unwrap();
            assert!(m.infinite_order_certificate());
        }
    }

    #[test]
    fn j_matches_at_specializations() {
        for sign in [Sign::Direct, Sign::Reverse] {
            let ev = j_evidence(sign, 3);
            assert_eq!(ev.len(), 3);
            for e in ev {
                assert!(e.matches(), "{e:?}");
            }
        }
    }

    #[test]
    fn substitution_direction_is_locked() {
        // reading the substitutions the other way round breaks j-equality
        let forward = |sign: Sign, t: &Q| -> Q {
            match sign {
                Sign::Direct => t.mul(&q(2)).add(&q(3)),
                Sign::Reverse => t.mul(&q(2)).sub(&q(3)) / t.mul(&q(2)).add(&q(1)),
            }
        };
        for sign in [Sign::Direct, Sign::Reverse] {
            for e in j_evidence(sign, 3) {
                let wrong = surface(sign).specialize(&forward(sign, &e.t0)).unwrap();
                assert_ne!(wrong.j(), e.j_curve);
            }
        }
    }

    #[test]
    fn bad_parameters_match_bad_fibers() {
        // at T = 1 the marked point (12 : -5 : -1) is a singular point of the cubic,
        // and T = 1, 2, 3 all land on singular fibers of the surface
        let c = direct_cubic(&q(1)).unwrap();
        assert_eq!(c.point, [q(12), q(-5), q(-1)]);
        for n in ["u", "v", "w"] {
            assert!(c.cubic.partial(n).eval(&c.point, Q::clone).is_zero());
        }
        for t in 1..=3 {
            assert_eq!(proof_curve(Sign::Direct, &q(t)), Err(Error::SingularCubic));
            let st = surface_parameter(Sign::Direct, &q(t)).unwrap();
            assert!(surface(Sign::Direct).specialize(&st).is_err());
        }
    }

    #[test]
    fn reverse_pair_at_two() {
        let c = project_quadric_intersection(&reverse_quadrics(&q(2)).unwrap()).unwrap();
        assert_eq!(c.cubic.total_degree(), Some(3));
        let r = j_evidence_at(Sign::Reverse, &q(2)).unwrap();
        assert_eq!(r.surface_t, qf(-5, 2));
        assert!(r.matches());
        let d = j_evidence_at(Sign::Direct, &q(4)).unwrap();
        assert_eq!(d.surface_t, qf(1, 2));
        assert!(d.matches());
    }
}
