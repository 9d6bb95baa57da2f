//! Models of `X_E(9)`, `X_E^-(9)` for curves `y^2 + 3 t_E xy + (t_E^3 - Delta) y = x^3`,
//! the linear maps relating them to the general cubic pairs, and the Hessian of the
//! pencil spanned by a cubic pair.

use std::collections::BTreeMap;

use crate::algebra::{linalg, Frac, Monomial, Poly, Ring, Vars};
use crate::error::{Error, Result};
use crate::families3::{cusp_form, Sign};

use super::twisted::twisted_forms;
use super::universal::hessian;
use super::{specialize_params, CubicPairModel, Provenance};

const F0: &str = "u^3 + Delta*v^3 + Delta^2*w^3 + 6*Delta*u*v*w";
const F1: &str = "3*(u^2*v + Delta*v^2*w + Delta*w^2*u)";
const F2: &str = "3*(u^2*w + v^2*u + Delta*w^2*v)";

fn torsion_vars() -> Vars {
    Vars::new(&["tE", "Delta", "u", "v", "w", "s"])
}

fn uvws() -> Vars {
    Vars::new(&["u", "v", "w", "s"])
}

/// The pair of cubics over `[tE, Delta, u, v, w, s]`.
fn torsion_forms(sign: Sign) -> (Poly, Poly) {
    let v = torsion_vars();
    let p = |s: &str| Poly::parse(s, &v).unwrap();
    let (f0, f1, f2, te, s3) = (p(F0), p(F1), p(F2), p("tE"), p("s^3"));
    match sign {
        Sign::Direct => (f0.sub(&te.mul(&f1)).sub(&s3), f1.sub(&te.mul(&f2))),
        Sign::Reverse => {
            (f0.add(&te.mul(&f1)).sub(&s3.scale_int(9)), p("Delta").mul(&f2).add(&te.mul(&s3).scale_int(9)))
        }
    }
}

/// `X(9)` in the coordinates `(u, v, w, s)` used for curves with a 3-torsion point.
pub fn universal_torsion_model() -> CubicPairModel {
    let v = uvws();
    CubicPairModel::new(
        Poly::parse("u^2*v + v^2*w + w^2*u - s^3", &v).unwrap(),
        Poly::parse("u^2*w + v^2*u + w^2*v", &v).unwrap(),
        Provenance::Torsion { sign: None, t_e: String::new(), delta: String::new() },
    )
    .unwrap()
}

/// The model of `X_E(9)` or `X_E^-(9)` in `(u, v, w, s)` for
/// `E: y^2 + 3 t_E xy + (t_E^3 - Delta) y = x^3`.
pub fn torsion_model<K: Ring>(t_e: &K, delta: &K, sign: Sign) -> Result<CubicPairModel<K>> {
    if delta.is_zero() || t_e.pow(3) == *delta {
        return Err(Error::SingularCurve);
    }
    let (g1, g2) = torsion_forms(sign);
    let main = ["u", "v", "w", "s"];
    let params = [t_e.clone(), delta.clone()];
    CubicPairModel::new(
        specialize_params(&g1, &main, &params),
        specialize_params(&g2, &main, &params),
        Provenance::Torsion { sign: Some(sign), t_e: t_e.to_string(), delta: delta.to_string() },
    )
}

/// `(u, v, w, s) = M (x, y, z, t)`, entries in `Q[tE, Delta]`.
pub fn section5_matrix(sign: Sign) -> Vec<Vec<Poly>> {
    let rows: [[&str; 4]; 4] = match sign {
        Sign::Direct => [
            ["1", "-3*tE^2", "12*Delta*tE - 3*tE^4", "36*Delta*tE^3 - 9*tE^6"],
            ["0", "-12*tE", "24*Delta + 12*tE^3", "-216*Delta*tE^2"],
            ["0", "-12", "36*tE^2", "-144*Delta*tE - 72*tE^4"],
            ["1", "9*tE^2", "-36*Delta*tE + 9*tE^4", "96*Delta^2 + 132*Delta*tE^3 + 15*tE^6"],
        ],
        Sign::Reverse => [
            ["Delta*tE", "-12*Delta^2 + 12*Delta*tE^3", "-4*Delta^2 + 7*Delta*tE^3", "-12*Delta^2*tE^2 + 3*Delta*tE^5"],
            ["-2*Delta", "0", "-6*Delta*tE^2", "18*Delta*tE^4"],
            ["tE^2", "0", "4*Delta*tE - tE^4", "-16*Delta^2 + 8*Delta*tE^3 - tE^6"],
            ["-Delta*tE", "-4*Delta^2 + 4*Delta*tE^3", "-4*Delta^2 + Delta*tE^3", "12*Delta^2*tE^2 - 3*Delta*tE^5"],
        ],
    };
    let v = Vars::new(&["tE", "Delta"]);
    rows.iter().map(|r| r.iter().map(|e| Poly::parse(e, &v).unwrap()).collect()).collect()
}

/// Comparison of the 3-torsion models with the general cubic pairs.
#[derive(Clone, Debug)]
pub struct BridgeReport {
    pub sign: Sign,
    pub determinant: Poly,
    pub expected_determinant: Poly,
    /// `G_i = m_i1 F_1 + m_i2 F_2`, where `G_i` are the transformed torsion-model
    /// cubics; `None` if they are not in the span.
    pub change_of_basis: Option<[[Frac; 2]; 2]>,
    pub invertible: bool,
}

impl BridgeReport {
    pub fn determinant_ok(&self) -> bool {
        self.determinant == self.expected_determinant
    }

    pub fn passed(&self) -> bool {
        self.determinant_ok() && self.change_of_basis.is_some() && self.invertible
    }
}

/// Checks, over `Q(t_E, Delta)`, that the printed matrix has the printed determinant
/// and carries the torsion model onto the general model for
/// `a = -24 Delta t_E - 3 t_E^4`, `b = 16 Delta^2 + 40 Delta t_E^3 - 2 t_E^6`.
pub fn section5_bridge(sign: Sign) -> BridgeReport {
    let pv = Vars::new(&["tE", "Delta"]);
    let m = section5_matrix(sign);
    let determinant = linalg::det(&m);
    let expected = match sign {
        Sign::Direct => "-2^10*3^3*(tE^3 - Delta)^3",
        Sign::Reverse => "2^10*Delta^3*(tE^3 - Delta)^4",
    };
    let expected_determinant = Poly::parse(expected, &pv).unwrap();

    let v = Vars::new(&["tE", "Delta", "x", "y", "z", "t"]);
    let var = |n: &str| Poly::var(&v, n);
    let xs: Vec<Poly> = ["x", "y", "z", "t"].iter().map(|n| var(n)).collect();
    let lifted = |p: &Poly| p.with_vars(&v).unwrap();
    let mut images = vec![var("tE"), var("Delta")];
    for row in &m {
        images.push(row.iter().zip(&xs).fold(Poly::zero_in(&v), |acc, (c, x)| acc.add(&lifted(c).mul(x))));
    }
    let (t1, t2) = torsion_forms(sign);
    let g = [t1.substitute_all(&images).unwrap(), t2.substitute_all(&images).unwrap()];

    let a = Poly::parse("-24*Delta*tE - 3*tE^4", &v).unwrap();
    let b = Poly::parse("16*Delta^2 + 40*Delta*tE^3 - 2*tE^6", &v).unwrap();
    let mut ab_images = vec![a, b];
    ab_images.extend(xs.iter().cloned());
    let (f1, f2) = twisted_forms(sign);
    let f = [f1.substitute_all(&ab_images).unwrap(), f2.substitute_all(&ab_images).unwrap()];

    let change_of_basis = span_coefficients(&g, &f);
    let invertible =
        change_of_basis.as_ref().is_some_and(|c| !c[0][0].mul(&c[1][1]).sub(&c[0][1].mul(&c[1][0])).is_zero());
    BridgeReport { sign, determinant, expected_determinant, change_of_basis, invertible }
}

/// Coefficients, in the parameters, of the coordinate monomials of `f`.
fn coordinate_coeffs(f: &Poly) -> BTreeMap<Monomial, Poly> {
    f.coefficients_in(&["x", "y", "z", "t"]).1
}

/// Solves `g_i = c_i1 f_1 + c_i2 f_2` with `c` in the fraction field of the
/// parameter ring, by Cramer's rule on two monomials and then an exact check.
fn span_coefficients(g: &[Poly; 2], f: &[Poly; 2]) -> Option<[[Frac; 2]; 2]> {
    let cf = [coordinate_coeffs(&f[0]), coordinate_coeffs(&f[1])];
    let pv = Vars::new(&["tE", "Delta"]);
    let zero = Poly::zero_in(&pv);
    let at = |map: &BTreeMap<Monomial, Poly>, m: &Monomial| map.get(m).cloned().unwrap_or_else(|| zero.clone());
    let monos: Vec<Monomial> = cf[0].keys().chain(cf[1].keys()).cloned().collect();
    let (m1, m2, det) = monos.iter().enumerate().find_map(|(i, m1)| {
        monos[i + 1..].iter().find_map(|m2| {
            let d = at(&cf[0], m1).mul(&at(&cf[1], m2)).sub(&at(&cf[0], m2).mul(&at(&cf[1], m1)));
            (!d.is_zero()).then(|| (m1.clone(), m2.clone(), d))
        })
    })?;
    let v = f[0].vars().clone();
    let lift = |p: &Poly| p.with_vars(&v).unwrap();
    let mut out: Vec<[Frac; 2]> = Vec::new();
    for gi in g {
        let cg = coordinate_coeffs(gi);
        let alpha = at(&cg, &m1).mul(&at(&cf[1], &m2)).sub(&at(&cg, &m2).mul(&at(&cf[1], &m1)));
        let beta = at(&cf[0], &m1).mul(&at(&cg, &m2)).sub(&at(&cf[0], &m2).mul(&at(&cg, &m1)));
        let lhs = lift(&det).mul(gi);
        let rhs = lift(&alpha).mul(&f[0]).add(&lift(&beta).mul(&f[1]));
        if lhs != rhs {
            return None;
        }
        let simplify = |n: Poly| {
            let fr = Frac::new(n, det.clone());
            fr.to_poly().map(Frac::from_poly).unwrap_or(fr)
        };
        out.push([simplify(alpha), simplify(beta)]);
    }
    let [r0, r1]: [[Frac; 2]; 2] = out.try_into().ok()?;
    Some([r0, r1])
}

/// `det H(3r F_1 - s F_2) = f(r, s) D(x, y, z, t)` with `a = -27 c4`, `b = -54 c6`.
#[derive(Clone, Debug)]
pub struct PencilFactorization {
    pub sign: Sign,
    pub cusp_form: Poly,
    /// The quartic cofactor `D`, over `[c4, c6, r, s, x, y, z, t]`.
    pub quotient: Poly,
}

/// Computes the Hessian determinant of the pencil spanned by the cubic pair and
/// divides it by the cusp form of the level-3 base.
pub fn hessian_pencil_factorization(sign: Sign) -> Result<PencilFactorization> {
    let v = Vars::new(&["c4", "c6", "r", "s", "x", "y", "z", "t"]);
    let var = |n: &str| Poly::var(&v, n);
    let mut images = vec![var("c4").scale_int(-27), var("c6").scale_int(-54)];
    images.extend(["x", "y", "z", "t"].iter().map(|n| var(n)));
    let (f1, f2) = twisted_forms(sign);
    let f1 = f1.substitute_all(&images)?;
    let f2 = f2.substitute_all(&images)?;
    let pencil = var("r").mul(&f1).scale_int(3).sub(&var("s").mul(&f2));
    let det = linalg::det(&hessian(&pencil, &["x", "y", "z", "t"]));
    let f = cusp_form(sign).with_vars(&v)?;
    let quotient = det.exact_divide(&f).map_err(|e| Error::FactorizationFailed(e.to_string()))?;
    let quartic = quotient.homogeneous_degree_in(&["x", "y", "z", "t"]) == Some(4);
    let free_of_rs = quotient.degree_in("r") == 0 && quotient.degree_in("s") == 0;
    if !quartic || !free_of_rs {
        return Err(Error::FactorizationFailed(format!("quotient is not a quartic form in x, y, z, t: {quotient}")));
    }
    Ok(PencilFactorization { sign, cusp_form: f, quotient })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;

    #[test]
    fn torsion_models_as_printed() {
        let u = universal_torsion_model();
        assert_eq!(u.f1().coefficient_of(&[("s", 3)]), q(-1));
        let d = torsion_model(&q(1), &q(2), Sign::Direct).unwrap();
        assert_eq!(d.f1().coefficient_of(&[("s", 3)]), q(-1));
        assert_eq!(d.f2().coefficient_of(&[("s", 3)]), q(0));
        let r = torsion_model(&q(1), &q(2), Sign::Reverse).unwrap();
        // Delta f_2 + 9 t_E s^3 with Delta = 2, t_E = 1
        assert_eq!(r.f2().coefficient_of(&[("s", 3)]), q(9));
        assert_eq!(r.f2().coefficient_of(&[("u", 2), ("w", 1)]), q(6));
        assert_eq!(torsion_model(&q(1), &q(1), Sign::Direct), Err(Error::SingularCurve));
        assert_eq!(torsion_model(&q(1), &q(0), Sign::Reverse), Err(Error::SingularCurve));
    }

    fn frac(s: &str) -> Frac {
        Frac::from_poly(Poly::parse(s, &Vars::new(&["tE", "Delta"])).unwrap())
    }

    #[test]
    fn direct_bridge() {
        let r = section5_bridge(Sign::Direct);
        assert!(r.determinant_ok(), "det = {}", r.determinant);
        let c = r.change_of_basis.clone().expect("not in span");
        // coefficients found independently by computer algebra
        assert_eq!(c[0][0], frac("-72*(Delta - tE^3)*(4*Delta - tE^3)"));
        assert_eq!(c[0][1], frac("72*tE*(Delta - tE^3)"));
        assert_eq!(c[1][0], frac("-216*tE^2*(Delta - tE^3)"));
        assert_eq!(c[1][1], frac("72*(Delta - tE^3)"));
        assert!(r.passed());
    }

    #[test]
    fn reverse_bridge() {
        let r = section5_bridge(Sign::Reverse);
        assert!(r.determinant_ok(), "det = {}", r.determinant);
        let c = r.change_of_basis.clone().expect("not in span");
        assert_eq!(c[0][0], frac("4*Delta^2*tE^2*(Delta - tE^3)*(10*Delta - tE^3)"));
        assert_eq!(c[0][1], frac("-4*Delta^2*(Delta - tE^3)*(2*Delta + tE^3)"));
        assert_eq!(c[1][0], frac("-4*Delta^3*(Delta - tE^3)*(4*Delta + 5*tE^3)"));
        assert_eq!(c[1][1], frac("12*Delta^3*tE*(Delta - tE^3)"));
        assert!(r.passed());
    }

    #[test]
    fn pencil_hessians_factor() {
        for sign in [Sign::Direct, Sign::Reverse] {
            let r = hessian_pencil_factorization(sign).unwrap();
            assert!(!r.quotient.is_zero());
        }
    }
}
