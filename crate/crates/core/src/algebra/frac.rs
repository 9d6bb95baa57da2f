//! Unreduced fractions of multivariate polynomials, for checking identities between
//! rational expressions in several variables. Equality is tested by cross
//! multiplication, so no gcd computation is needed.

use std::fmt;

use super::poly::Poly;
use super::scalar::{Field, Ring, Q};

#[derive(Clone)]
pub struct Frac {
    num: Poly<Q>,
    den: Poly<Q>,
}

impl Frac {
    pub fn new(num: Poly<Q>, den: Poly<Q>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Frac { num, den }
    }

    pub fn from_poly(p: Poly<Q>) -> Self {
        Frac { num: p, den: Poly::one() }
    }

    pub fn numerator(&self) -> &Poly<Q> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<Q> {
        &self.den
    }

    /// The polynomial equal to this fraction, if the denominator divides the numerator.
    pub fn to_poly(&self) -> Option<Poly<Q>> {
        self.num.exact_divide(&self.den).ok()
    }
}

impl PartialEq for Frac {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Ring for Frac {
    fn zero() -> Self {
        Frac::from_poly(Poly::zero())
    }
    fn one() -> Self {
        Frac::from_poly(Poly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Frac { num: self.num.add(&o.num), den: self.den.clone() };
        }
        Frac { num: self.num.mul(&o.den).add(&o.num.mul(&self.den)), den: self.den.mul(&o.den) }
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        Frac { num: self.num.mul(&o.num), den: self.den.mul(&o.den) }
    }
    fn neg(&self) -> Self {
        Frac { num: self.num.neg(), den: self.den.clone() }
    }
    fn from_rational(q: &Q) -> Self {
        Frac::from_poly(Poly::constant(q.clone()))
    }
}

impl Field for Frac {
    fn inv(&self) -> Option<Self> {
        (!self.num.is_zero()).then(|| Frac { num: self.den.clone(), den: self.num.clone() })
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

impl fmt::Debug for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::Vars;

    #[test]
    fn cross_multiplied_equality() {
        let v = Vars::new(&["x", "y"]);
        let p = |s: &str| Poly::parse(s, &v).unwrap();
        let a = Frac::new(p("x^2 - y^2"), p("x - y"));
        let b = Frac::from_poly(p("x + y"));
        assert_eq!(a, b);
        assert_eq!(a.to_poly(), Some(p("x + y")));
        let c = a.inv().unwrap().mul(&b);
        assert_eq!(c, Frac::one());
    }
}
