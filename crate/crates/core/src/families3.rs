//! Families of curves 3-congruent to a given curve: the Hesse-polynomial families
//! over `Y_E(3)` and `Y_E^-(3)`, and the simpler families available when the curve
//! has a rational 3-torsion point.

use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer;
use num_traits::Signed;

use crate::algebra::{Field, Frac, Poly, Ring, Vars, Q};
use crate::elliptic::{Curve, Point};
use crate::error::{Error, Result};

/// Direct congruences preserve the Weil pairing, reverse ones invert it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Direct,
    Reverse,
}

impl Sign {
    pub fn name(self) -> &'static str {
        match self {
            Sign::Direct => "direct",
            Sign::Reverse => "reverse",
        }
    }

    pub fn parse(s: &str) -> Result<Sign> {
        match s {
            "direct" | "+" => Ok(Sign::Direct),
            "reverse" | "-" => Ok(Sign::Reverse),
            _ => Err(Error::Parse(format!("sign must be direct or reverse, got {s:?}"))),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Projective point `(r : s)` on the level-3 base curve.
#[derive(Clone, Debug, PartialEq)]
pub struct HessePoint<K> {
    pub r: K,
    pub s: K,
}

impl<K: Field> HessePoint<K> {
    pub fn new(r: K, s: K) -> Self {
        assert!(!(r.is_zero() && s.is_zero()), "(0 : 0) is not a projective point");
        HessePoint { r, s }
    }

    pub fn proportional(&self, other: &Self) -> bool {
        self.r.mul(&other.s) == self.s.mul(&other.r)
    }
}

impl HessePoint<Q> {
    /// Coprime integers with `r > 0`, or `(0 : 1)`.
    pub fn normalized(&self) -> Self {
        if self.r.is_zero() {
            return HessePoint { r: Q::zero(), s: Q::one() };
        }
        let l = self.r.denom().lcm(self.s.denom());
        let (rn, sn) =
            ((&self.r * Q::from_integer(l.clone())).to_integer(), (&self.s * Q::from_integer(l)).to_integer());
        let mut g = rn.gcd(&sn);
        if rn.is_negative() {
            g = -g;
        }
        HessePoint { r: Q::from_integer(rn / &g), s: Q::from_integer(sn / &g) }
    }
}

impl<K: Ring> fmt::Display for HessePoint<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} : {})", self.r, self.s)
    }
}

/// The coefficient polynomials of the level-3 family in variables `c4, c6, r, s`:
/// `A = a_num / den^a_exp`, `B = b_num / den^b_exp`.
#[derive(Clone, Debug)]
pub struct HessePolys {
    pub a_num: Poly,
    pub b_num: Poly,
    pub den: Poly,
    pub a_exp: u32,
    pub b_exp: u32,
}

pub fn hesse_vars() -> Vars {
    Vars::new(&["c4", "c6", "r", "s"])
}

const A_PLUS: &str = "c4*r^4 + 4*c6*r^3*s + 6*c4^2*r^2*s^2 + 4*c4*c6*r*s^3 - (3*c4^3 - 4*c6^2)*s^4";
const B_PLUS: &str = "c6*r^6 + 6*c4^2*r^5*s + 15*c4*c6*r^4*s^2 + 20*c6^2*r^3*s^3 \
     + 15*c4^2*c6*r^2*s^4 + 6*(3*c4^4 - 2*c4*c6^2)*r*s^5 + (9*c4^3*c6 - 8*c6^3)*s^6";
const F_PLUS: &str = "r^4 - 6*c4*r^2*s^2 - 8*c6*r*s^3 - 3*c4^2*s^4";

pub fn hesse_polys(sign: Sign) -> &'static HessePolys {
    static DIRECT: OnceLock<HessePolys> = OnceLock::new();
    static REVERSE: OnceLock<HessePolys> = OnceLock::new();
    let v = hesse_vars();
    let p = |s: &str| Poly::parse(s, &v).unwrap();
    match sign {
        Sign::Direct => {
            DIRECT.get_or_init(|| HessePolys { a_num: p(A_PLUS), b_num: p(B_PLUS), den: p("1"), a_exp: 0, b_exp: 0 })
        }
        Sign::Reverse => REVERSE.get_or_init(|| HessePolys {
            a_num: p(F_PLUS).scale(&Q::from_integer((-4).into())),
            b_num: p(B_PLUS).scale(&Q::from_integer((-8).into())),
            den: p("c4^3 - c6^2"),
            a_exp: 1,
            b_exp: 2,
        }),
    }
}

/// Form whose roots are the cusps of the level-3 base.
pub fn cusp_form(sign: Sign) -> Poly {
    let v = hesse_vars();
    match sign {
        Sign::Direct => Poly::parse(F_PLUS, &v).unwrap(),
        Sign::Reverse => Poly::parse(A_PLUS, &v).unwrap(),
    }
}

/// `(A(r,s), B(r,s))` with the level-3 coefficient formulas.
pub fn hesse_ab<K: Field>(c4: &K, c6: &K, pt: &HessePoint<K>, sign: Sign) -> Result<(K, K)> {
    let hp = hesse_polys(sign);
    let point = [c4.clone(), c6.clone(), pt.r.clone(), pt.s.clone()];
    let ev = |f: &Poly| f.eval(&point, K::from_rational);
    let den = ev(&hp.den);
    let a = ev(&hp.a_num).div(&den.pow(hp.a_exp)).ok_or(Error::SingularCurve)?;
    let b = ev(&hp.b_num).div(&den.pow(hp.b_exp)).ok_or(Error::SingularCurve)?;
    Ok((a, b))
}

/// `y^2 = x^3 - 27 A(r,s) x - 54 B(r,s)`, the member of the family 3-congruent to
/// `y^2 = x^3 - 27 c4 x - 54 c6` over the point `(r : s)`.
pub fn hesse_family<K: Field>(c4: &K, c6: &K, pt: &HessePoint<K>, sign: Sign) -> Result<Curve<K>> {
    let (a, b) = hesse_ab(c4, c6, pt, sign)?;
    Curve::short(a.scale_int(-27), b.scale_int(-54)).map_err(|_| Error::SingularFiber)
}

/// `y^2 + 3 t xy + (t^3 - Delta^(+-1)) y = x^3`.
pub fn torsion3_family<K: Field>(delta: &K, t: &K, sign: Sign) -> Result<Curve<K>> {
    let d = match sign {
        Sign::Direct => delta.clone(),
        Sign::Reverse => delta.inv().ok_or(Error::SingularCurve)?,
    };
    Curve::new(t.scale_int(3), K::zero(), t.pow(3).sub(&d), K::zero(), K::zero()).map_err(|_| Error::SingularFiber)
}

/// `y^2 + a1 xy + a3 y = x^3`, which has `(0, 0)` as a point of order 3.
#[derive(Clone, Debug, PartialEq)]
pub struct Torsion3Curve {
    pub a1: Q,
    pub a3: Q,
}

impl Torsion3Curve {
    pub fn new(a1: Q, a3: Q) -> Result<Self> {
        let c = Torsion3Curve { a1, a3 };
        if c.disc().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(c)
    }

    /// `a3^3 (a1^3 - 27 a3)`.
    pub fn disc(&self) -> Q {
        self.a3.pow(3).mul(&self.a1.pow(3).sub(&self.a3.scale_int(27)))
    }

    pub fn curve(&self) -> Curve<Q> {
        Curve::new(self.a1.clone(), Q::zero(), self.a3.clone(), Q::zero(), Q::zero()).unwrap()
    }
}

/// A curve in 3-torsion form together with the change of coordinates
/// `(x, y) = (x' + r, y' + s x' + t)` from it to the original model.
#[derive(Clone, Debug, PartialEq)]
pub struct TorsionForm {
    pub form: Torsion3Curve,
    pub r: Q,
    pub s: Q,
    pub t: Q,
}

/// Coefficients after `x = x' + r`, `y = y' + s x' + t`.
pub fn transform<K: Ring>(e: &Curve<K>, r: &K, s: &K, t: &K) -> [K; 5] {
    let [a1, a2, a3, a4, a6] = e.coeffs().clone();
    let n1 = a1.add(&s.scale_int(2));
    let n2 = a2.sub(&s.mul(&a1)).add(&r.scale_int(3)).sub(&s.mul(s));
    let n3 = a3.add(&r.mul(&a1)).add(&t.scale_int(2));
    let n4 = a4
        .sub(&s.mul(&a3))
        .add(&r.mul(&a2).scale_int(2))
        .sub(&t.add(&r.mul(s)).mul(&a1))
        .add(&r.mul(r).scale_int(3))
        .sub(&s.mul(t).scale_int(2));
    let n6 = a6
        .add(&r.mul(&a4))
        .add(&r.mul(r).mul(&a2))
        .add(&r.pow(3))
        .sub(&t.mul(&a3))
        .sub(&t.mul(t))
        .sub(&r.mul(t).mul(&a1));
    [n1, n2, n3, n4, n6]
}

/// Moves a rational 3-torsion point to `(0, 0)` and removes the `x^2`, `x` and
/// constant terms.
pub fn to_torsion_form(e: &Curve<Q>, pt: &Point<Q>) -> Result<TorsionForm> {
    let Point::Affine(x0, y0) = pt else {
        return Err(Error::NotThreeTorsion);
    };
    if !e.contains(pt) || !e.mul(pt, 3).is_infinity() {
        return Err(Error::NotThreeTorsion);
    }
    let zero = Q::zero();
    let shifted = transform(e, x0, &zero, y0);
    if shifted[2].is_zero() {
        return Err(Error::NotThreeTorsion);
    }
    let s = shifted[3].div(&shifted[2]).unwrap();
    let shifted_curve =
        Curve::new(shifted[0].clone(), shifted[1].clone(), shifted[2].clone(), shifted[3].clone(), shifted[4].clone())?;
    let c = transform(&shifted_curve, &zero, &s, &zero);
    if !(c[1].is_zero() && c[3].is_zero() && c[4].is_zero()) {
        return Err(Error::NotThreeTorsion);
    }
    Ok(TorsionForm { form: Torsion3Curve::new(c[0].clone(), c[2].clone())?, r: x0.clone(), s, t: y0.clone() })
}

/// Checks symbolically that `T' = (3 a3/(delta - a1), a3 (zeta delta - a1)/(delta - a1))`
/// is a point of order 3 on `y^2 + a1 xy + a3 y = x^3`, working modulo
/// `delta^3 - (a1^3 - 27 a3)` and `zeta^2 + zeta + 1`.
///
/// Returns `(on_curve, order_three)`.
pub fn second_torsion_generator_check() -> (bool, bool) {
    let v = Vars::new(&["delta", "zeta", "a1", "a3"]);
    let p = |s: &str| Poly::parse(s, &v).unwrap();
    let rels = [p("delta^3 - a1^3 + 27*a3"), p("zeta^2 + zeta + 1")];
    let reduce = |f: &Poly| -> Poly {
        let mut r = f.clone();
        for g in &rels {
            r = r.div_rem(g).1;
        }
        r
    };
    let (x, y, w) = (p("3*a3"), p("a3*(zeta*delta - a1)"), p("delta - a1"));
    let (a1, a3) = (p("a1"), p("a3"));
    // curve equation times w^3
    let on_curve = y.mul(&y).mul(&w).add(&a1.mul(&x).mul(&y).mul(&w)).add(&a3.mul(&y).mul(&w).mul(&w)).sub(&x.pow(3));
    // the tangent at T' meets the curve only at T' (flex condition), times w^4
    let n = x.mul(&x).scale_int(3).sub(&a1.mul(&y).mul(&w));
    let d = y.scale_int(2).add(&a1.mul(&x)).add(&a3.mul(&w));
    let flex = n.mul(&n).add(&a1.mul(&n).mul(&d).mul(&w)).sub(&x.mul(&w).mul(&d).mul(&d).scale_int(3));
    let not_two_torsion = !reduce(&d).is_zero() && !reduce(&w).is_zero();
    (reduce(&on_curve).is_zero(), reduce(&flex).is_zero() && not_two_torsion)
}

/// Compares the 3-torsion family with the Hesse family at
/// `(r, s) = (a1^2 t - a1^3 a3 + 36 a3^2, t - a1 a3)` (direct) or
/// `((a1^3 a3 - 36 a3^2) t + 2 a1^2, a1 a3 t + 2)` (reverse), for a generic curve
/// `y^2 + a1 xy + a3 y = x^3` with discriminant `Delta = a3^3 (a1^3 - 27 a3)`.
///
/// Returns the polynomial `u` in `Q[a1, a3]` with `c4' = u^4 c4` and `c6' = u^6 c6`,
/// where primes refer to the Hesse-family member, or `None` if no such `u` exists.
pub fn torsion3_hesse_scaling(sign: Sign) -> Option<Poly> {
    let v = Vars::new(&["a1", "a3", "t"]);
    let fr = |s: &str| Frac::from_poly(Poly::parse(s, &v).unwrap());
    let e = Curve::new(fr("a1"), Frac::zero(), fr("a3"), Frac::zero(), Frac::zero()).ok()?;
    let inv = e.invariants();
    let (r, s) = match sign {
        Sign::Direct => (fr("a1^2*t - a1^3*a3 + 36*a3^2"), fr("t - a1*a3")),
        Sign::Reverse => (fr("(a1^3*a3 - 36*a3^2)*t + 2*a1^2"), fr("a1*a3*t + 2")),
    };
    // family over Y_E(3) uses c4, c6 of E scaled to y^2 = x^3 - 27 c4 x - 54 c6
    let hesse = hesse_family(&inv.c4, &inv.c6, &HessePoint::new(r, s), sign).ok()?;
    let tors = torsion3_family(&inv.disc, &fr("t"), sign).ok()?;
    let (ih, it) = (hesse.invariants(), tors.invariants());
    let u2 = ih.c6.mul(&it.c4).div(&ih.c4.mul(&it.c6))?.to_poly()?;
    let u = u2.sqrt_exact()?;
    let u2f = Frac::from_poly(u2);
    let ok = ih.c4 == it.c4.mul(&u2f.mul(&u2f)) && ih.c6 == it.c6.mul(&u2f.pow(3));
    ok.then(|| u.with_vars(&Vars::new(&["a1", "a3"])).unwrap_or(u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, qf};

    #[test]
    fn identity_fiber_is_the_curve() {
        let (c4, c6) = (q(5), q(-7));
        let e = hesse_family(&c4, &c6, &HessePoint::new(q(1), q(0)), Sign::Direct).unwrap();
        assert_eq!(e, Curve::short(q(-27 * 5), q(54 * 7)).unwrap());
    }

    #[test]
    fn reverse_at_zero_one() {
        let (c4, c6) = (q(5), q(-7));
        let d = c4.pow(3).sub(&c6.pow(2));
        let (a, b) = hesse_ab(&c4, &c6, &HessePoint::new(q(0), q(1)), Sign::Reverse).unwrap();
        assert_eq!(a, q(12).mul(&c4.pow(2)).div(&d).unwrap());
        let num = q(9).mul(&c4.pow(3)).mul(&c6).sub(&q(8).mul(&c6.pow(3)));
        assert_eq!(b, q(-8).mul(&num).div(&d.pow(2)).unwrap());
    }

    #[test]
    fn cusp_forms_at_one_zero() {
        let pt = [q(5), q(-7), q(1), q(0)];
        assert_eq!(cusp_form(Sign::Direct).eval(&pt, |c| c.clone()), q(1));
        assert_eq!(cusp_form(Sign::Reverse).eval(&pt, |c| c.clone()), q(5));
    }

    #[test]
    fn normalization_of_hesse_points() {
        let p = HessePoint::new(qf(-2, 3), qf(4, 5)).normalized();
        assert_eq!((p.r, p.s), (q(5), q(-6)));
        let p = HessePoint::new(q(0), q(-3)).normalized();
        assert_eq!((p.r, p.s), (q(0), q(1)));
    }

    #[test]
    fn torsion_family_fibers() {
        let e = torsion3_family(&q(1), &q(0), Sign::Direct).unwrap();
        assert_eq!(e, Curve::new(q(0), q(0), q(-1), q(0), q(0)).unwrap());
        assert_eq!(torsion3_family(&q(8), &q(2), Sign::Direct), Err(Error::SingularFiber));
        assert_eq!(torsion3_family(&qf(1, 8), &q(2), Sign::Reverse), Err(Error::SingularFiber));
    }

    #[test]
    fn torsion_form_of_a1_a3_shape() {
        let e = Curve::new(q(0), q(0), q(-1), q(0), q(0)).unwrap();
        let tf = to_torsion_form(&e, &Point::Affine(q(0), q(0))).unwrap();
        assert_eq!((tf.form.a1.clone(), tf.form.a3.clone()), (q(0), q(-1)));
        // oracle: the discriminant from the b-invariants
        assert_eq!(tf.form.disc(), e.invariants().disc);
        assert_eq!(tf.form.disc(), q(-27));
    }

    #[test]
    fn non_torsion_point_rejected() {
        // y^2 = x^3 + 1 has (2, 3) of order 6
        let e = Curve::short(q(0), q(1)).unwrap();
        assert_eq!(to_torsion_form(&e, &Point::Affine(q(2), q(3))), Err(Error::NotThreeTorsion));
        assert_eq!(to_torsion_form(&e, &Point::Infinity), Err(Error::NotThreeTorsion));
        let tf = to_torsion_form(&e, &Point::Affine(q(0), q(1))).unwrap();
        assert!(crate::elliptic::is_isomorphic(&e, &tf.form.curve()).is_some());
    }

    #[test]
    fn torsion_family_matches_hesse_family() {
        let v = Vars::new(&["a1", "a3"]);
        for (sign, expected) in [(Sign::Direct, "72*a3"), (Sign::Reverse, "12*a3")] {
            let u = torsion3_hesse_scaling(sign).expect("isomorphic");
            assert_eq!(u, Poly::parse(expected, &v).unwrap());
        }
    }

    #[test]
    fn second_generator_is_three_torsion() {
        assert_eq!(second_torsion_generator_check(), (true, true));
    }
}
