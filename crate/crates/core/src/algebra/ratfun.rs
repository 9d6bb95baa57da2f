//! Univariate polynomials over `Q` and the rational function field `Q(T)`.

use std::fmt;

use super::poly::{Monomial, Poly, Vars};
use super::scalar::{Field, Ring, Q};

/// Dense univariate polynomial, coefficients in ascending degree, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly(Vec<Q>);

impl UPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly(coeffs)
    }

    pub fn constant(c: Q) -> Self {
        UPoly::new(vec![c])
    }

    pub fn x() -> Self {
        UPoly(vec![Q::zero(), Q::one()])
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Q {
        self.0.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.0.iter().rev().fold(Q::zero(), |acc, c| acc.mul(x).add(c))
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        UPoly::new(
            (0..n)
                .map(|i| {
                    let a = self.0.get(i).cloned().unwrap_or_else(Q::zero);
                    let b = o.0.get(i).cloned().unwrap_or_else(Q::zero);
                    a.add(&b)
                })
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        UPoly(self.0.iter().map(|c| c.neg()).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return UPoly::default();
        }
        let mut out = vec![Q::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UPoly::new(out)
    }

    pub fn scale(&self, c: &Q) -> Self {
        UPoly::new(self.0.iter().map(|x| x.mul(c)).collect())
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.lead().inv().unwrap();
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (UPoly::default(), self.clone());
        }
        let mut quot = vec![Q::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].mul(&lead_inv);
            if !c.is_zero() {
                for (i, di) in d.0.iter().enumerate() {
                    rem[k + i] = rem[k + i].sub(&c.mul(di));
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UPoly::new(quot), UPoly::new(rem))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().inv().unwrap())
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Converts a polynomial in the single variable `name` (or a constant).
    pub fn from_poly(p: &Poly<Q>, name: &str) -> Option<Self> {
        let idx = p.vars().index_of(name);
        let mut coeffs: Vec<Q> = Vec::new();
        for (m, c) in p.terms() {
            let e = m.exps();
            let mut k = 0;
            for (i, &x) in e.iter().enumerate() {
                if Some(i) == idx {
                    k = x as usize;
                } else if x != 0 {
                    return None;
                }
            }
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Q::zero());
            }
            coeffs[k] = c.clone();
        }
        Some(UPoly::new(coeffs))
    }

    pub fn to_poly(&self, name: &str) -> Poly<Q> {
        let vars = Vars::new(&[name]);
        Poly::from_terms(&vars, self.0.iter().enumerate().map(|(k, c)| (Monomial::new(vec![k as u32]), c.clone())))
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly("T"))
    }
}

/// Element of `Q(T)`: coprime numerator and monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: UPoly,
    den: UPoly,
}

impl RatFun {
    pub fn new(num: UPoly, den: UPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFun { num, den: UPoly::constant(Q::one()) };
        }
        let g = num.gcd(&den);
        let (n, _) = num.div_rem(&g);
        let (d, _) = den.div_rem(&g);
        let l = d.lead().inv().unwrap();
        RatFun { num: n.scale(&l), den: d.scale(&l) }
    }

    pub fn from_upoly(p: UPoly) -> Self {
        RatFun { num: p, den: UPoly::constant(Q::one()) }
    }

    /// Converts a polynomial in the variable `name`; `None` if other variables occur.
    pub fn from_poly(p: &Poly<Q>, name: &str) -> Option<Self> {
        UPoly::from_poly(p, name).map(Self::from_upoly)
    }

    pub fn t() -> Self {
        Self::from_upoly(UPoly::x())
    }

    pub fn numerator(&self) -> &UPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// Value at `T = x`, or `None` at a pole.
    pub fn eval(&self, x: &Q) -> Option<Q> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x).mul(&d.inv().unwrap()))
        }
    }
}

impl Ring for RatFun {
    fn zero() -> Self {
        Self::from_upoly(UPoly::default())
    }
    fn one() -> Self {
        Self::from_upoly(UPoly::constant(Q::one()))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return RatFun::new(self.num.add(&o.num), self.den.clone());
        }
        RatFun::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        RatFun::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }
    fn neg(&self) -> Self {
        RatFun { num: self.num.neg(), den: self.den.clone() }
    }
    fn from_rational(q: &Q) -> Self {
        Self::from_upoly(UPoly::constant(q.clone()))
    }
}

impl Field for RatFun {
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(RatFun::new(self.den.clone(), self.num.clone()))
        }
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num.to_poly("T"))
        } else {
            write!(f, "({})/({})", self.num.to_poly("T"), self.den.to_poly("T"))
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::q;

    fn up(c: &[i64]) -> UPoly {
        UPoly::new(c.iter().map(|&x| q(x)).collect())
    }

    #[test]
    fn gcd_and_division() {
        // (T-1)(T+2) and (T-1)(T-3)
        let a = up(&[-2, 1, 1]);
        let b = up(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), up(&[-1, 1]));
        let (qq, r) = a.div_rem(&up(&[-1, 1]));
        assert_eq!(qq, up(&[2, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn normal_form_is_canonical() {
        let f = RatFun::new(up(&[1, 1]), up(&[-3, 2]));
        let k = up(&[5, 0, 7]);
        let g = RatFun::new(up(&[1, 1]).mul(&k), up(&[-3, 2]).mul(&k));
        assert_eq!(f, g);
        assert_eq!(f.denominator().lead(), q(1));
        assert_eq!(f.mul(&f.inv().unwrap()), RatFun::one());
        assert_eq!(f.eval(&q(2)), Some(crate::algebra::scalar::qf(3, 1)));
        assert_eq!(f.eval(&crate::algebra::scalar::qf(3, 2)), None);
    }
}
