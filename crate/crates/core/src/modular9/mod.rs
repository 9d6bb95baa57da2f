//! Level 9: the universal curve `X(9)` in `P^3` with its symmetry group, the
//! twisted models `X_E(9)`, `X_E^-(9)`, the forgetful maps down to level 3, and
//! the models available when `E` has a rational 3-torsion point.

mod bridge;
mod tangent;
mod twisted;
mod universal;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::algebra::{parse_rational_list, Poly, Ring, Vars, Q};
use crate::error::{Error, Result};
use crate::families3::Sign;

pub use bridge::{
    hessian_pencil_factorization, section5_bridge, section5_matrix, torsion_model, universal_torsion_model,
    BridgeReport, PencilFactorization,
};
pub use tangent::{forget9, forget_on_model, lambda_at, nine_congruent_curve, tangent_expansion, TangentExpansion};
pub use twisted::{scale_identities, twisted_forms, twisted_model, ScaleIdentity};
pub use universal::{
    geom_identity_check, hess_id_check, hessian, lambda_matrix, sl2_action, sl2_action_check, universal_forget,
    universal_model, GeomReport, Sl2Action, Sl2Report,
};

/// Where a cubic pair came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// `X(9)` in coordinates `(a, b, c, d)`.
    Universal,
    /// `X_E(9)` or `X_E^-(9)` for `y^2 = x^3 + ax + b`; the coefficients are kept as text.
    Twisted { sign: Sign, a: String, b: String },
    /// Models in `(u, v, w, s)` for curves with a rational 3-torsion point; `None` is
    /// the untwisted `X(9)`.
    Torsion { sign: Option<Sign>, t_e: String, delta: String },
    /// Image of another model under a linear change of coordinates.
    Transformed(Box<Provenance>),
}

/// A curve in `P^3` cut out by two cubic forms.
#[derive(Clone, Debug, PartialEq)]
pub struct CubicPairModel<R: Ring = Q> {
    f1: Poly<R>,
    f2: Poly<R>,
    provenance: Provenance,
}

impl<R: Ring> CubicPairModel<R> {
    pub fn new(f1: Poly<R>, f2: Poly<R>, provenance: Provenance) -> Result<Self> {
        if f1.vars() != f2.vars() || f1.vars().len() != 4 {
            return Err(Error::VariableMismatch(format!(
                "cubic pair needs two forms in the same four variables, got {:?} and {:?}",
                f1.vars(),
                f2.vars()
            )));
        }
        for f in [&f1, &f2] {
            if !f.is_homogeneous() || f.total_degree() != Some(3) {
                return Err(Error::Parse(format!("not a cubic form: {f}")));
            }
        }
        Ok(CubicPairModel { f1, f2, provenance })
    }

    pub fn f1(&self) -> &Poly<R> {
        &self.f1
    }

    pub fn f2(&self) -> &Poly<R> {
        &self.f2
    }

    pub fn forms(&self) -> [&Poly<R>; 2] {
        [&self.f1, &self.f2]
    }

    pub fn vars(&self) -> &Vars {
        self.f1.vars()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn eval(&self, p: &ProjPt<R>) -> [R; 2] {
        [self.f1.eval(&p.0, R::clone), self.f2.eval(&p.0, R::clone)]
    }

    pub fn contains(&self, p: &ProjPt<R>) -> bool {
        self.eval(p).iter().all(Ring::is_zero)
    }

    /// Gradients of both forms at `p`.
    pub fn gradients(&self, p: &ProjPt<R>) -> [[R; 4]; 2] {
        let names = self.vars().names().to_vec();
        let grad = |f: &Poly<R>| -> [R; 4] { std::array::from_fn(|i| f.partial(&names[i]).eval(&p.0, R::clone)) };
        [grad(&self.f1), grad(&self.f2)]
    }

    /// The model `{F_i(M x) = 0}`, so that `x` lies on the result iff `M x` lies on
    /// `self`.
    pub fn transform(&self, m: &[Vec<R>]) -> CubicPairModel<R> {
        assert!(m.len() == 4 && m.iter().all(|r| r.len() == 4), "need a 4x4 matrix");
        let vars = self.vars().clone();
        let xs: Vec<Poly<R>> = vars.names().iter().map(|n| Poly::var(&vars, n)).collect();
        let images: Vec<Poly<R>> = m
            .iter()
            .map(|row| row.iter().zip(&xs).fold(Poly::zero_in(&vars), |acc, (c, x)| acc.add(&x.scale(c))))
            .collect();
        let f1 = self.f1.substitute_all(&images).unwrap().with_vars(&vars).unwrap();
        let f2 = self.f2.substitute_all(&images).unwrap().with_vars(&vars).unwrap();
        CubicPairModel { f1, f2, provenance: Provenance::Transformed(Box::new(self.provenance.clone())) }
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> CubicPairModel<S> {
        CubicPairModel { f1: self.f1.map_coeffs(&f), f2: self.f2.map_coeffs(&f), provenance: self.provenance.clone() }
    }
}

/// A point of `P^3`, kept as a representative vector.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjPt<K>(pub [K; 4]);

impl<K: Ring> ProjPt<K> {
    pub fn new(coords: [K; 4]) -> Self {
        assert!(coords.iter().any(|c| !c.is_zero()), "(0 : 0 : 0 : 0) is not a projective point");
        ProjPt(coords)
    }

    pub fn coords(&self) -> &[K; 4] {
        &self.0
    }

    /// All 2x2 minors of the two representatives vanish.
    pub fn proportional(&self, other: &Self) -> bool {
        (0..4).all(|i| (i + 1..4).all(|j| self.0[i].mul(&other.0[j]) == self.0[j].mul(&other.0[i])))
    }

    /// `M p`.
    pub fn apply(&self, m: &[Vec<K>]) -> ProjPt<K> {
        ProjPt(std::array::from_fn(|i| m[i].iter().zip(&self.0).fold(K::zero(), |acc, (a, x)| acc.add(&a.mul(x)))))
    }
}

impl ProjPt<Q> {
    pub fn from_ints(c: [i64; 4]) -> Self {
        ProjPt::new(c.map(|x| Q::from_integer(x.into())))
    }

    /// Coprime integer coordinates with the first nonzero one positive.
    pub fn normalized(&self) -> Self {
        let l = self.0.iter().fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.0.iter().map(|c| (c * Q::from_integer(l.clone())).to_integer()).collect();
        let mut g = ints.iter().fold(BigInt::from(0), |acc, n| acc.gcd(n));
        if ints.iter().find(|n| !n.is_zero()).is_some_and(|n| n.is_negative()) {
            g = -g;
        }
        ProjPt(std::array::from_fn(|i| Q::from_integer(&ints[i] / &g)))
    }

    /// Parses `"x,y,z,t"` with exact rational entries.
    pub fn parse(src: &str) -> Result<Self> {
        let v = parse_rational_list(src)?;
        let coords: [Q; 4] = v.try_into().map_err(|_| Error::Parse(format!("expected four coordinates in {src:?}")))?;
        if coords.iter().all(Ring::is_zero) {
            return Err(Error::Parse("all coordinates are zero".into()));
        }
        Ok(ProjPt(coords))
    }
}

impl<K: Ring> fmt::Display for ProjPt<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z, t] = &self.0;
        write!(f, "({x} : {y} : {z} : {t})")
    }
}

/// Evaluates the non-coordinate variables of `f` (in their order) at `params`,
/// leaving a polynomial in the coordinates `main`.
pub(crate) fn specialize_params<K: Ring>(f: &Poly, main: &[&str], params: &[K]) -> Poly<K> {
    let (_, coeffs) = f.coefficients_in(main);
    Poly::from_terms(&Vars::new(main), coeffs.into_iter().map(|(m, c)| (m, c.eval(params, K::from_rational))))
}

/// Parses a 4x4 matrix from 16 comma-separated rationals in row order.
pub fn parse_matrix(src: &str) -> Result<Vec<Vec<Q>>> {
    let v = parse_rational_list(src)?;
    if v.len() != 16 {
        return Err(Error::Parse(format!("expected 16 matrix entries, got {}", v.len())));
    }
    Ok(v.chunks(4).map(<[Q]>::to_vec).collect())
}

/// Matrix with integer entries.
pub fn int_matrix(rows: &[[i64; 4]; 4]) -> Vec<Vec<Q>> {
    rows.iter().map(|r| r.iter().map(|&x| Q::from_integer(x.into())).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;

    #[test]
    fn normalization_is_canonical() {
        let p = ProjPt::new([q(0), q(-4), crate::algebra::qf(2, 3), q(6)]);
        let n = p.normalized();
        assert_eq!(n, ProjPt::from_ints([0, 6, -1, -9]));
        assert_eq!(n.normalized(), n);
        assert!(n.proportional(&p));
        assert_eq!(ProjPt::parse("0, -4, 2/3, 6").unwrap(), p);
        assert!(ProjPt::parse("0,0,0,0").is_err());
    }

    #[test]
    fn transform_pulls_points_back() {
        let u = universal_model();
        // swapping a and d
        let m = int_matrix(&[[0, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 0]]);
        let moved = u.transform(&m);
        let p = ProjPt::from_ints([0, 0, 0, 1]);
        assert!(!u.contains(&p));
        assert!(u.contains(&p.apply(&m)));
        assert!(moved.contains(&p));
    }
}
