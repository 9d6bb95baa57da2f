//! Exact constructions for 9-congruent elliptic curves: level-9 modular curve
//! models, forgetful maps to level 3, elliptic surfaces over `Q(T)`, and the
//! numerical checks (traces of Frobenius, point search, local solubility) used to
//! validate them.

pub mod algebra;
pub mod diophantine;
pub mod elliptic;
pub mod error;
pub mod families3;
pub mod modular9;
pub mod surfaces;
pub mod verify;

pub use error::{Error, Result};
pub use families3::Sign;
