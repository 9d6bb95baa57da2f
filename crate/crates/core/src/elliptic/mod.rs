//! Weierstrass curves over `Q`, prime fields and `Q(T)`: invariants, group law,
//! isomorphism testing, reduction and traces of Frobenius.

mod curve;
mod fp;

pub use curve::{compare, is_isomorphic, parse_curve, Curve, Invariants, Isomorphism, Point};
pub use fp::{ap, reduce_mod_p, FpCurve, AP_CAP};
