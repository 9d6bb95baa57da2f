//! Weierstrass models of genus-one curves with a rational point: plane cubics by
//! projection from the point to a double cover of `P^1`, and intersections of two
//! quadrics in `P^3` by projection to a plane cubic.

use crate::algebra::{Poly, Ring, Vars, Q};
use crate::elliptic::Curve;
use crate::error::{Error, Result};

/// A ternary cubic form with a marked rational point on it.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneCubicWithPoint {
    pub cubic: Poly,
    pub point: [Q; 3],
}

impl PlaneCubicWithPoint {
    pub fn new(cubic: Poly, point: [Q; 3]) -> Result<Self> {
        if cubic.vars().len() != 3 || !cubic.is_homogeneous() || cubic.total_degree() != Some(3) {
            return Err(Error::SingularCubic);
        }
        if point.iter().all(Ring::is_zero) || !cubic.eval(&point, Q::clone).is_zero() {
            return Err(Error::NotOnModel);
        }
        Ok(PlaneCubicWithPoint { cubic, point })
    }
}

/// Two quadratic forms in four variables with a marked common rational zero.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadricIntersectionWithPoint {
    pub q1: Poly,
    pub q2: Poly,
    pub point: [Q; 4],
}

impl QuadricIntersectionWithPoint {
    pub fn new(q1: Poly, q2: Poly, point: [Q; 4]) -> Result<Self> {
        for q in [&q1, &q2] {
            if q.vars().len() != 4 || !q.is_homogeneous() || q.total_degree() != Some(2) {
                return Err(Error::DegenerateProjection);
            }
            if !q.eval(&point, Q::clone).is_zero() {
                return Err(Error::NotOnModel);
            }
        }
        Ok(QuadricIntersectionWithPoint { q1, q2, point })
    }
}

/// Invertible matrix whose last column is `p`, the other columns being standard
/// basis vectors.
fn frame_with_last_column(p: &[Q]) -> Vec<Vec<Q>> {
    let n = p.len();
    let k = p.iter().position(|c| !c.is_zero()).expect("nonzero point");
    let others: Vec<usize> = (0..n).filter(|&i| i != k).collect();
    (0..n)
        .map(|i| {
            let mut row: Vec<Q> = others.iter().map(|&j| if i == j { Q::one() } else { Q::zero() }).collect();
            row.push(p[i].clone());
            row
        })
        .collect()
}

/// `f(M x)` over the same variables.
fn linear_substitute(f: &Poly, m: &[Vec<Q>]) -> Poly {
    let vars = f.vars().clone();
    let xs: Vec<Poly> = vars.names().iter().map(|n| Poly::var(&vars, n)).collect();
    let images: Vec<Poly> = m
        .iter()
        .map(|row| row.iter().zip(&xs).fold(Poly::zero_in(&vars), |acc, (c, x)| acc.add(&x.scale(c))))
        .collect();
    f.substitute_all(&images).unwrap().with_vars(&vars).unwrap()
}

/// `I` and `J` of the binary quartic `a x^4 + b x^3 z + c x^2 z^2 + d x z^3 + e z^4`.
pub fn quartic_invariants(g: &[Q; 5]) -> (Q, Q) {
    let [a, b, c, d, e] = g;
    let i = a.mul(e).scale_int(12).sub(&b.mul(d).scale_int(3)).add(&c.pow(2));
    let j = a
        .mul(c)
        .mul(e)
        .scale_int(72)
        .add(&b.mul(c).mul(d).scale_int(9))
        .sub(&a.mul(&d.pow(2)).scale_int(27))
        .sub(&e.mul(&b.pow(2)).scale_int(27))
        .sub(&c.pow(3).scale_int(2));
    (i, j)
}

/// Jacobian `y^2 = x^3 - 27 I x - 27 J` of `y^2 = g(x)`.
pub fn quartic_jacobian(g: &[Q; 5]) -> Result<Curve<Q>> {
    let (i, j) = quartic_invariants(g);
    Curve::short(i.scale_int(-27), j.scale_int(-27)).map_err(|_| Error::SingularCubic)
}

/// Weierstrass model of a smooth plane cubic with a rational point.
///
/// Lines through the point `P` meet the cubic in two further points; these
/// coincide over the four roots of a binary quartic `g`, so the cubic is birational
/// to `y^2 = g`, whose Jacobian is returned.
pub fn nagell_reduce(c: &PlaneCubicWithPoint) -> Result<Curve<Q>> {
    let m = frame_with_last_column(&c.point);
    let f = linear_substitute(&c.cubic, &m);
    let names = f.vars().names().to_vec();
    let (x, y, z) = (names[0].as_str(), names[1].as_str(), names[2].as_str());
    // f = z^2 L(x, y) + z Q(x, y) + C(x, y)
    let (_, by_z) = f.coefficients_in(&[z]);
    let part = |k: u32| -> Poly {
        by_z.iter()
            .find(|(mono, _)| mono.exps()[0] == k)
            .map(|(_, p)| p.clone())
            .unwrap_or_else(|| Poly::zero_in(&Vars::new(&[x, y])))
    };
    if !part(3).is_zero() {
        return Err(Error::NotOnModel);
    }
    let (l, q, cc) = (part(2), part(1), part(0));
    if l.is_zero() {
        return Err(Error::SingularCubic);
    }
    let g = q.mul(&q).sub(&l.mul(&cc).scale_int(4));
    let coeffs: [Q; 5] = std::array::from_fn(|k| g.coefficient_of(&[(x, 4 - k as u32), (y, k as u32)]));
    quartic_jacobian(&coeffs)
}

/// Plane cubic birational to a smooth intersection of two quadrics, by projection
/// from the marked point; the image of the tangent line at the point is the marked
/// point of the cubic.
pub fn project_quadric_intersection(qi: &QuadricIntersectionWithPoint) -> Result<PlaneCubicWithPoint> {
    let m = frame_with_last_column(&qi.point);
    let q1 = linear_substitute(&qi.q1, &m);
    let q2 = linear_substitute(&qi.q2, &m);
    let names = q1.vars().names().to_vec();
    let s = names[3].as_str();
    let plane = Vars::new(&names[..3]);
    // q_i = s L_i + Q_i with L_i linear, Q_i quadratic in the first three variables
    let split = |q: &Poly| -> (Poly, Poly) {
        let (_, by_s) = q.coefficients_in(&[s]);
        let mut parts = [Poly::zero_in(&plane), Poly::zero_in(&plane), Poly::zero_in(&plane)];
        for (mono, p) in by_s {
            parts[mono.exps()[0] as usize] = p.with_vars(&plane).unwrap();
        }
        debug_assert!(parts[2].is_zero());
        (parts[1].clone(), parts[0].clone())
    };
    let (l1, r1) = split(&q1);
    let (l2, r2) = split(&q2);
    let lin = |l: &Poly| -> [Q; 3] { std::array::from_fn(|i| l.coefficient_of(&[(names[i].as_str(), 1)])) };
    let (a, b) = (lin(&l1), lin(&l2));
    let tangent = [
        a[1].mul(&b[2]).sub(&a[2].mul(&b[1])),
        a[2].mul(&b[0]).sub(&a[0].mul(&b[2])),
        a[0].mul(&b[1]).sub(&a[1].mul(&b[0])),
    ];
    if tangent.iter().all(Ring::is_zero) {
        return Err(Error::DegenerateProjection);
    }
    let cubic = l1.mul(&r2).sub(&l2.mul(&r1));
    if cubic.is_zero() || cubic.total_degree() != Some(3) {
        return Err(Error::DegenerateProjection);
    }
    PlaneCubicWithPoint::new(cubic, tangent).map_err(|_| Error::DegenerateProjection)
}
