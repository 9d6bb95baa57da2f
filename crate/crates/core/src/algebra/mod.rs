//! Exact arithmetic kernel: rationals, cyclotomic numbers, prime fields, sparse
//! polynomials, `Q(T)` and the linear algebra built on them.

pub mod cyclo;
pub mod frac;
pub mod ideal;
pub mod linalg;
mod parse;
pub mod poly;
pub mod ratfun;
pub mod scalar;

pub use cyclo::{Cyc3, Cyc9, CycScalar};
pub use frac::Frac;
pub use ideal::{cofactor_solve, cofactor_solve_many, in_ideal};
pub use linalg::{det, det4};
pub use poly::{Monomial, Poly, Vars};
pub use ratfun::{RatFun, UPoly};
pub use scalar::{parse_rational, parse_rational_list, q, qf, qi, Field, Fp, Ring, Q};
