use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable `{0}` has no image in the substitution")]
    MissingVariable(String),

    #[error("variable lists do not match: {0}")]
    VariableMismatch(String),

    #[error("not divisible; remainder {remainder}")]
    NotDivisible { remainder: String },

    #[error("no cofactors of degree {degree} express the polynomial in the ideal")]
    NotInIdeal { degree: u32 },

    #[error("singular curve: discriminant vanishes")]
    SingularCurve,

    #[error("prime {0} divides the discriminant or a denominator of the model")]
    BadReduction(u64),

    #[error("prime {p} exceeds the point-counting cap {cap}")]
    PrimeTooLarge { p: u64, cap: u64 },

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("parameter lies on a cusp: the family member is singular")]
    SingularFiber,

    #[error("point is not a rational 3-torsion point")]
    NotThreeTorsion,

    #[error("Jacobian has rank below 2 at the point")]
    SingularPoint,

    #[error("expected a short Weierstrass model y^2 = x^3 + ax + b")]
    NotShortModel,

    #[error("point does not lie on the model")]
    NotOnModel,

    #[error("every row of the tangent matrix is proportional to the point")]
    DegenerateLambda,

    #[error("the tangent expansion has gamma_1 = gamma_2 = 0 (cusp or flex)")]
    CuspPoint,

    #[error("Hessian determinant is not divisible by the cusp form: {0}")]
    FactorizationFailed(String),

    #[error("bad specialization: {0}")]
    BadSpecialization(String),

    #[error("plane cubic is singular or reducible")]
    SingularCubic,

    #[error("projection from the marked point does not give a plane cubic")]
    DegenerateProjection,

    #[error("local solubility needs a prime p <= 97 and depth 1..=6, got p = {p}, depth = {depth}")]
    LocalRange { p: u64, depth: u32 },

    #[error("example `{0}` has no printed equations")]
    UnknownEquations(String),

    #[error("unknown example `{0}`")]
    UnknownExample(String),

    #[error("parse error: {0}")]
    Parse(String),
}
