//! The cubic pairs `F_1, F_2` cutting out `X_E(9)` and `X_E^-(9)` for
//! `E: y^2 = x^3 + ax + b`.

use std::sync::OnceLock;

use crate::algebra::{Poly, Ring, Vars};
use crate::error::{Error, Result};
use crate::families3::Sign;

use super::{specialize_params, CubicPairModel, Provenance};

const F1_PLUS: &str = "x^2*t + 6*x*y*z + 6*b*x*t^2 + 6*y^3 - 9*a*y^2*t + 6*a^2*y*t^2 - 3*b*z^3 \
     + 3*a^2*z^2*t + 9*a*b*z*t^2 - (a^3 - 12*b^2)*t^3";
const F2_PLUS: &str = "x^2*z + 6*x*y^2 - 6*a*x*y*t + 2*a^2*x*t^2 - 9*a*y^2*z - 18*b*y*z^2 \
     + 12*a^2*y*z*t + a^2*z^3 + 9*a*b*z^2*t - 3*a^3*z*t^2 + a^2*b*t^3";
const F1_MINUS: &str = "9*x^2*y + 3*x^2*z - 6*a*x*y*t + 6*b*x*t^2 - 6*a*y^3 + 27*b*y^2*t \
     + 3*a*y*z^2 + 18*b*y*z*t + 3*a^2*y*t^2 + a*z^3 + 3*b*z^2*t + a^2*z*t^2 - a*b*t^3";
const F2_MINUS: &str = "x^3 + 6*a*x*y*z + 18*b*x*y*t + 3*a*x*z^2 + 6*b*x*z*t + a^2*x*t^2 \
     + 9*b*y^3 + 6*a^2*y^2*t - 9*b*y*z^2 + 6*a^2*y*z*t - 3*a*b*y*t^2 - 4*b*z^3 \
     + 2*a^2*z^2*t + 2*b^2*t^3";

/// Variables of the generic forms: the curve coefficients, then the coordinates.
pub(crate) fn generic_vars() -> Vars {
    Vars::new(&["a", "b", "x", "y", "z", "t"])
}

#[cfg(test)]
pub(crate) fn coord_vars() -> Vars {
    Vars::new(&["x", "y", "z", "t"])
}

/// `(F_1, F_2)` with `a, b` left as variables, over `[a, b, x, y, z, t]`.
pub fn twisted_forms(sign: Sign) -> &'static (Poly, Poly) {
    static DIRECT: OnceLock<(Poly, Poly)> = OnceLock::new();
    static REVERSE: OnceLock<(Poly, Poly)> = OnceLock::new();
    let parse = |a: &str, b: &str| {
        let v = generic_vars();
        (Poly::parse(a, &v).unwrap(), Poly::parse(b, &v).unwrap())
    };
    match sign {
        Sign::Direct => DIRECT.get_or_init(|| parse(F1_PLUS, F2_PLUS)),
        Sign::Reverse => REVERSE.get_or_init(|| parse(F1_MINUS, F2_MINUS)),
    }
}

/// The model for `y^2 = x^3 + ax + b` with `a, b` in any coefficient ring.
pub fn twisted_model<K: Ring>(a: &K, b: &K, sign: Sign) -> Result<CubicPairModel<K>> {
    let disc = a.pow(3).scale_int(4).add(&b.pow(2).scale_int(27));
    if disc.is_zero() {
        return Err(Error::SingularCurve);
    }
    let specialize = |f: &Poly| specialize_params(f, &["x", "y", "z", "t"], &[a.clone(), b.clone()]);
    let (f1, f2) = twisted_forms(sign);
    let provenance = Provenance::Twisted { sign, a: a.to_string(), b: b.to_string() };
    CubicPairModel::new(specialize(f1), specialize(f2), provenance)
}

/// One weighted-homogeneity identity
/// `F(l^2 a, l^3 b; l^wx x, l^wy y, l^wz z, t) = l^k F(a, b; x, y, z, t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaleIdentity {
    pub name: &'static str,
    pub weights: [u32; 4],
    pub exponent: u32,
    pub holds: bool,
}

/// Checks the four weighted-homogeneity identities satisfied by the cubic pairs,
/// exactly in `Q[l, a, b, x, y, z, t]`.
pub fn scale_identities() -> Vec<ScaleIdentity> {
    let cases: [(&'static str, Sign, bool, [u32; 4], u32); 4] = [
        ("F1+", Sign::Direct, true, [3, 2, 1, 0], 6),
        ("F2+", Sign::Direct, false, [3, 2, 1, 0], 7),
        ("F1-", Sign::Reverse, true, [2, 1, 1, 0], 5),
        ("F2-", Sign::Reverse, false, [2, 1, 1, 0], 6),
    ];
    cases
        .into_iter()
        .map(|(name, sign, first, weights, exponent)| {
            let (f1, f2) = twisted_forms(sign);
            let f = if first { f1 } else { f2 };
            ScaleIdentity { name, weights, exponent, holds: check_scaling(f, weights, exponent) }
        })
        .collect()
}

pub(crate) fn check_scaling(f: &Poly, weights: [u32; 4], exponent: u32) -> bool {
    let v = Vars::new(&["l", "a", "b", "x", "y", "z", "t"]);
    let l = Poly::var(&v, "l");
    let names = ["a", "b", "x", "y", "z", "t"];
    let w = [2, 3, weights[0], weights[1], weights[2], weights[3]];
    let images: Vec<Poly> = names.iter().zip(w).map(|(n, k)| Poly::var(&v, n).mul(&l.pow(k))).collect();
    let lhs = f.substitute_all(&images).unwrap();
    let rhs = f.with_vars(&v).unwrap().mul(&l.pow(exponent));
    lhs == rhs
}
