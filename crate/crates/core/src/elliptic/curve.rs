use std::fmt;

use num_traits::Signed;

use crate::algebra::scalar::{parse_rational, rational_root};
use crate::algebra::{Field, RatFun, Ring, Q};
use crate::error::{Error, Result};

/// Long Weierstrass model `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`.
#[derive(Clone, PartialEq)]
pub struct Curve<K> {
    a: [K; 5],
}

/// `c4`, `c6` and the discriminant; `j = c4^3 / disc` is kept as a pair.
#[derive(Clone, Debug, PartialEq)]
pub struct Invariants<K> {
    pub c4: K,
    pub c6: K,
    pub disc: K,
}

impl<K: Ring> Invariants<K> {
    pub fn j_pair(&self) -> (K, K) {
        (self.c4.pow(3), self.disc.clone())
    }
}

impl<K: Field> Invariants<K> {
    pub fn j(&self) -> K {
        self.c4.pow(3).div(&self.disc).expect("nonzero discriminant")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Point<K> {
    Infinity,
    Affine(K, K),
}

impl<K> Point<K> {
    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }
}

impl<K: Ring> Curve<K> {
    pub fn new(a1: K, a2: K, a3: K, a4: K, a6: K) -> Result<Self> {
        let c = Curve { a: [a1, a2, a3, a4, a6] };
        if c.invariants().disc.is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(c)
    }

    /// `y^2 = x^3 + a x + b`.
    pub fn short(a: K, b: K) -> Result<Self> {
        Self::new(K::zero(), K::zero(), K::zero(), a, b)
    }

    pub fn coeffs(&self) -> &[K; 5] {
        &self.a
    }

    pub fn a1(&self) -> &K {
        &self.a[0]
    }
    pub fn a2(&self) -> &K {
        &self.a[1]
    }
    pub fn a3(&self) -> &K {
        &self.a[2]
    }
    pub fn a4(&self) -> &K {
        &self.a[3]
    }
    pub fn a6(&self) -> &K {
        &self.a[4]
    }

    pub fn is_short(&self) -> bool {
        self.a[0].is_zero() && self.a[1].is_zero() && self.a[2].is_zero()
    }

    pub fn invariants(&self) -> Invariants<K> {
        let [a1, a2, a3, a4, a6] = &self.a;
        let b2 = a1.mul(a1).add(&a2.scale_int(4));
        let b4 = a4.scale_int(2).add(&a1.mul(a3));
        let b6 = a3.mul(a3).add(&a6.scale_int(4));
        let b8 = a1
            .mul(a1)
            .mul(a6)
            .add(&a2.mul(a6).scale_int(4))
            .sub(&a1.mul(a3).mul(a4))
            .add(&a2.mul(a3).mul(a3))
            .sub(&a4.mul(a4));
        let c4 = b2.mul(&b2).sub(&b4.scale_int(24));
        let c6 = b2.pow(3).neg().add(&b2.mul(&b4).scale_int(36)).sub(&b6.scale_int(216));
        let disc = b2
            .mul(&b2)
            .mul(&b8)
            .neg()
            .sub(&b4.pow(3).scale_int(8))
            .sub(&b6.mul(&b6).scale_int(27))
            .add(&b2.mul(&b4).mul(&b6).scale_int(9));
        Invariants { c4, c6, disc }
    }

    /// `y^2 = x^3 - 27 c4 x - 54 c6`, isomorphic to `self` via `(x, y) -> (36x + 3b2, 216y + 108(a1 x + a3))`.
    pub fn short_model(&self) -> Curve<K> {
        let inv = self.invariants();
        Curve::short(inv.c4.scale_int(-27), inv.c6.scale_int(-54)).expect("nonsingular")
    }

    /// Left side minus right side of the equation at `(x, y)`.
    pub fn eval(&self, x: &K, y: &K) -> K {
        let [a1, a2, a3, a4, a6] = &self.a;
        let lhs = y.mul(y).add(&a1.mul(x).mul(y)).add(&a3.mul(y));
        let rhs = x.pow(3).add(&a2.mul(x).mul(x)).add(&a4.mul(x)).add(a6);
        lhs.sub(&rhs)
    }

    pub fn contains(&self, p: &Point<K>) -> bool {
        match p {
            Point::Infinity => true,
            Point::Affine(x, y) => self.eval(x, y).is_zero(),
        }
    }

    pub fn map<L: Ring>(&self, f: impl Fn(&K) -> L) -> Curve<L> {
        Curve { a: [f(&self.a[0]), f(&self.a[1]), f(&self.a[2]), f(&self.a[3]), f(&self.a[4])] }
    }

    pub fn neg_point(&self, p: &Point<K>) -> Point<K> {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine(x, y) => Point::Affine(x.clone(), y.neg().sub(&self.a[0].mul(x)).sub(&self.a[2])),
        }
    }
}

impl<K: Field> Curve<K> {
    /// Chord-tangent addition.
    pub fn add(&self, p: &Point<K>, q: &Point<K>) -> Point<K> {
        let (x1, y1, x2, y2) = match (p, q) {
            (Point::Infinity, _) => return q.clone(),
            (_, Point::Infinity) => return p.clone(),
            (Point::Affine(x1, y1), Point::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let [a1, a2, a3, a4, a6] = &self.a;
        let (lambda, nu) = if x1 == x2 {
            let denom = y1.add(y2).add(&a1.mul(x2)).add(a3);
            if denom.is_zero() {
                return Point::Infinity;
            }
            let d = y1.scale_int(2).add(&a1.mul(x1)).add(a3);
            let num_l = x1.mul(x1).scale_int(3).add(&a2.mul(x1).scale_int(2)).add(a4).sub(&a1.mul(y1));
            let num_n = x1.pow(3).neg().add(&a4.mul(x1)).add(&a6.scale_int(2)).sub(&a3.mul(y1));
            let inv = d.inv().unwrap();
            (num_l.mul(&inv), num_n.mul(&inv))
        } else {
            let inv = x2.sub(x1).inv().unwrap();
            (y2.sub(y1).mul(&inv), y1.mul(x2).sub(&y2.mul(x1)).mul(&inv))
        };
        let x3 = lambda.mul(&lambda).add(&a1.mul(&lambda)).sub(a2).sub(x1).sub(x2);
        let y3 = lambda.add(a1).mul(&x3).neg().sub(&nu).sub(a3);
        Point::Affine(x3, y3)
    }

    /// `n * p` by double-and-add; negative `n` uses the inverse point.
    pub fn mul(&self, p: &Point<K>, n: i64) -> Point<K> {
        let mut base = if n < 0 { self.neg_point(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = Point::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.add(&base, &base);
            }
        }
        acc
    }

    pub fn j(&self) -> K {
        self.invariants().j()
    }
}

impl Curve<Q> {
    /// Quadratic twist by `d`, returned in short form.
    pub fn quadratic_twist(&self, d: &Q) -> Curve<Q> {
        let s = self.short_model();
        Curve::short(s.a4().mul(&d.pow(2)), s.a6().mul(&d.pow(3))).expect("d is nonzero")
    }

    /// Scales to a model with integral coefficients via `a_i -> u^i a_i`.
    pub fn integral_model(&self) -> Curve<Q> {
        use num_integer::Integer;
        let mut u = num_bigint::BigInt::from(1);
        loop {
            let uq = Q::from_integer(u.clone());
            let scaled = self.scale_by(&uq);
            if scaled.a.iter().all(|c| c.is_integer()) {
                return scaled;
            }
            let den = self.a.iter().fold(num_bigint::BigInt::from(1), |acc, c| acc.lcm(c.denom()));
            u *= den;
        }
    }

    /// The model with `a_i` replaced by `u^i a_i` (the image under `(x, y) -> (u^2 x, u^3 y)`).
    pub fn scale_by(&self, u: &Q) -> Curve<Q> {
        let w = [1u32, 2, 3, 4, 6];
        Curve { a: std::array::from_fn(|i| self.a[i].mul(&Ring::pow(u, w[i]))) }
    }
}

impl Curve<RatFun> {
    /// Evaluates the coefficients at `T = t0`.
    pub fn specialize(&self, t0: &Q) -> Result<Curve<Q>> {
        let mut out = Vec::with_capacity(5);
        for c in &self.a {
            out.push(c.eval(t0).ok_or_else(|| Error::BadSpecialization(format!("pole at T = {t0}")))?);
        }
        let [a1, a2, a3, a4, a6]: [Q; 5] = out.try_into().unwrap();
        Curve::new(a1, a2, a3, a4, a6).map_err(|_| Error::BadSpecialization(format!("singular fiber at T = {t0}")))
    }
}

/// Result of comparing two curves over `Q`.
#[derive(Clone, Debug, PartialEq)]
pub enum Isomorphism {
    /// `c4' = u^4 c4`, `c6' = u^6 c6` with the given positive `u`.
    Scaling(Q),
    /// Both curves have `j = 0` or `j = 1728` but differ by a twist that is not a
    /// scaling; `ratio` is `c6'/c6` (for `j = 0`) or `c4'/c4` (for `j = 1728`).
    TwistOnly { j: Q, ratio: Q },
}

/// Finds `u` with `c4(E2) = u^4 c4(E1)` and `c6(E2) = u^6 c6(E1)`.
pub fn is_isomorphic(e1: &Curve<Q>, e2: &Curve<Q>) -> Option<Q> {
    match compare(e1, e2)? {
        Isomorphism::Scaling(u) => Some(u),
        Isomorphism::TwistOnly { .. } => None,
    }
}

/// As [`is_isomorphic`], but also reports twists for `j` in `{0, 1728}`.
pub fn compare(e1: &Curve<Q>, e2: &Curve<Q>) -> Option<Isomorphism> {
    let (i1, i2) = (e1.invariants(), e2.invariants());
    if i1.j() != i2.j() {
        return None;
    }
    let u = if i1.c6.is_zero() {
        let r = i2.c4.div(&i1.c4)?;
        return Some(match rational_root(&r, 4) {
            Some(u) => Isomorphism::Scaling(Signed::abs(&u)),
            None => Isomorphism::TwistOnly { j: Q::from_integer(1728.into()), ratio: r },
        });
    } else if i1.c4.is_zero() {
        let r = i2.c6.div(&i1.c6)?;
        return Some(match rational_root(&r, 6) {
            Some(u) => Isomorphism::Scaling(Signed::abs(&u)),
            None => Isomorphism::TwistOnly { j: Q::zero(), ratio: r },
        });
    } else {
        // u^2 = (c6'/c6) / (c4'/c4)
        let u2 = i2.c6.mul(&i1.c4).div(&i1.c6.mul(&i2.c4))?;
        rational_root(&u2, 2)?
    };
    let u = Signed::abs(&u);
    (i2.c4 == i1.c4.mul(&Ring::pow(&u, 4)) && i2.c6 == i1.c6.mul(&Ring::pow(&u, 6))).then_some(Isomorphism::Scaling(u))
}

/// Parses `[a1,a2,a3,a4,a6]` or `short:[a,b]` with exact rational entries.
pub fn parse_curve(src: &str) -> Result<Curve<Q>> {
    let s = src.trim();
    let (short, body) = match s.strip_prefix("short:") {
        Some(rest) => (true, rest.trim()),
        None => (false, s),
    };
    let inner = body
        .strip_prefix('[')
        .and_then(|b| b.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("curve must be bracketed: {src}")))?;
    let vals = inner
        .split(',')
        .map(|t| parse_rational(t.trim()).ok_or_else(|| Error::Parse(format!("bad rational {t:?}"))))
        .collect::<Result<Vec<Q>>>()?;
    match (short, vals.as_slice()) {
        (true, [a, b]) => Curve::short(a.clone(), b.clone()),
        (false, [a1, a2, a3, a4, a6]) => Curve::new(a1.clone(), a2.clone(), a3.clone(), a4.clone(), a6.clone()),
        _ => Err(Error::Parse(format!("wrong number of coefficients in {src}"))),
    }
}

impl<K: Ring> fmt::Display for Curve<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.a.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl<K: Ring> fmt::Debug for Curve<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Curve{self}")
    }
}

impl<K: Ring> fmt::Display for Point<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Infinity => write!(f, "O"),
            Point::Affine(x, y) => write!(f, "({x}, {y})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, qf};

    #[test]
    fn invariants_of_standard_curves() {
        let e = Curve::short(q(-1), q(0)).unwrap();
        let i = e.invariants();
        assert_eq!((i.c4.clone(), i.c6.clone(), i.disc.clone()), (q(48), q(0), q(64)));
        assert_eq!(i.j(), q(1728));
        let e = Curve::short(q(0), q(1)).unwrap();
        let i = e.invariants();
        assert_eq!((i.c4, i.c6, i.disc), (q(0), q(-864), q(-432)));
    }

    #[test]
    fn singular_model_rejected() {
        assert_eq!(Curve::short(q(0), q(0)), Err(Error::SingularCurve));
        assert_eq!(Curve::short(q(-3), q(2)), Err(Error::SingularCurve));
    }

    #[test]
    fn three_torsion_on_a1_a3_shape() {
        // y^2 - y = x^3
        let e = Curve::new(q(0), q(0), q(-1), q(0), q(0)).unwrap();
        let t = Point::Affine(q(0), q(0));
        assert!(e.contains(&t));
        assert!(!e.mul(&t, 2).is_infinity());
        assert!(e.mul(&t, 3).is_infinity());
    }

    #[test]
    fn scaling_isomorphism() {
        let e = Curve::short(q(-7), q(10)).unwrap();
        let f = Curve::short(q(-7 * 16), q(10 * 64)).unwrap();
        assert_eq!(is_isomorphic(&e, &e), Some(q(1)));
        assert_eq!(is_isomorphic(&e, &f), Some(q(2)));
        assert_eq!(is_isomorphic(&f, &e), Some(qf(1, 2)));
        let tw = e.quadratic_twist(&q(-1));
        assert_eq!(is_isomorphic(&e, &tw), None);
    }

    #[test]
    fn j_zero_twists_reported() {
        let e = Curve::short(q(0), q(1)).unwrap();
        let f = Curve::short(q(0), q(2)).unwrap();
        assert!(matches!(compare(&e, &f), Some(Isomorphism::TwistOnly { .. })));
        let g = Curve::short(q(0), q(64)).unwrap();
        assert_eq!(is_isomorphic(&e, &g), Some(q(2)));
    }

    #[test]
    fn parses_both_formats() {
        let e = parse_curve("[0,0,1,-1,0]").unwrap();
        assert_eq!(e.a3(), &q(1));
        let s = parse_curve("short:[-1, 1/2]").unwrap();
        assert_eq!(s.a6(), &qf(1, 2));
        assert!(parse_curve("[1,2]").is_err());
        assert!(parse_curve("short:[0,0]").is_err());
    }

    #[test]
    fn short_model_is_isomorphic() {
        let e = parse_curve("[1,-1,1,-29,53]").unwrap();
        assert!(is_isomorphic(&e, &e.short_model()).is_some());
    }
}
