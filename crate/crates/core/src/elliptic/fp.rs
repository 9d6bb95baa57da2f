use crate::algebra::scalar::{is_prime, mul_mod, rational_mod};
use crate::algebra::Q;
use crate::error::{Error, Result};

use super::curve::Curve;

/// Largest prime accepted by the naive point counter.
pub const AP_CAP: u64 = 100_000;

/// Long Weierstrass model over `Z/p` for a prime `p` chosen at run time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpCurve {
    p: u64,
    a: [u64; 5],
}

impl FpCurve {
    pub fn new(p: u64, a: [u64; 5]) -> Result<Self> {
        let c = FpCurve { p, a: a.map(|x| x % p) };
        if c.disc() == 0 {
            return Err(Error::BadReduction(p));
        }
        Ok(c)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> [u64; 5] {
        self.a
    }

    fn m(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.p)
    }

    fn s(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }

    pub fn disc(&self) -> u64 {
        let p = self.p;
        let [a1, a2, a3, a4, a6] = self.a;
        let b2 = (self.m(a1, a1) + self.m(4, a2)) % p;
        let b4 = (self.m(2, a4) + self.m(a1, a3)) % p;
        let b6 = (self.m(a3, a3) + self.m(4, a6)) % p;
        let mut b8 = (self.m(self.m(a1, a1), a6) + self.m(self.m(4, a2), a6)) % p;
        b8 = self.s(b8, self.m(self.m(a1, a3), a4));
        b8 = (b8 + self.m(self.m(a2, a3), a3)) % p;
        b8 = self.s(b8, self.m(a4, a4));
        let mut d = 0;
        d = self.s(d, self.m(self.m(b2, b2), b8));
        d = self.s(d, self.m(8, self.m(self.m(b4, b4), b4)));
        d = self.s(d, self.m(27, self.m(b6, b6)));
        (d + self.m(9, self.m(self.m(b2, b4), b6))) % p
    }

    /// Number of affine solutions plus the point at infinity.
    pub fn count_points(&self) -> u64 {
        (self.p as i64 + 1 - self.ap()) as u64
    }

    /// `a_p = p + 1 - #E(F_p)`.
    pub fn ap(&self) -> i64 {
        let p = self.p;
        let [a1, a2, a3, a4, a6] = self.a;
        if p == 2 {
            let mut n = 1i64;
            for x in 0..2 {
                for y in 0..2 {
                    let lhs = (y * y + a1 * x * y + a3 * y) % 2;
                    let rhs = (x * x * x + a2 * x * x + a4 * x + a6) % 2;
                    n += (lhs == rhs) as i64;
                }
            }
            return 3 - n;
        }
        let chi = residue_table(p);
        // y^2 + h y = f  <=>  (2y + h)^2 = h^2 + 4f
        let mut sum = 0i64;
        for x in 0..p {
            let h = (self.m(a1, x) + a3) % p;
            let x2 = self.m(x, x);
            let f = (self.m(x2, x) + self.m(a2, x2) + self.m(a4, x) + a6) % p;
            let d = (self.m(h, h) + self.m(4, f)) % p;
            sum += chi[d as usize] as i64;
        }
        -sum
    }

    /// All affine points, in increasing `(x, y)` order.
    pub fn affine_points(&self) -> Vec<(u64, u64)> {
        let p = self.p;
        let [a1, a2, a3, a4, a6] = self.a;
        let mut out = Vec::new();
        for x in 0..p {
            let x2 = self.m(x, x);
            let f = (self.m(x2, x) + self.m(a2, x2) + self.m(a4, x) + a6) % p;
            for y in 0..p {
                let lhs = (self.m(y, y) + self.m(self.m(a1, x), y) + self.m(a3, y)) % p;
                if lhs == f {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

/// Legendre symbol table `chi[n]` for `0 <= n < p`.
fn residue_table(p: u64) -> Vec<i8> {
    let mut chi = vec![-1i8; p as usize];
    chi[0] = 0;
    for y in 1..p {
        chi[mul_mod(y, y, p) as usize] = 1;
    }
    chi
}

/// Coefficientwise reduction; fails if a denominator or the discriminant of the
/// given model vanishes mod `p`.
pub fn reduce_mod_p(e: &Curve<Q>, p: u64) -> Result<FpCurve> {
    let mut a = [0u64; 5];
    for (slot, c) in a.iter_mut().zip(e.coeffs()) {
        *slot = rational_mod(c, p).ok_or(Error::BadReduction(p))?;
    }
    FpCurve::new(p, a)
}

/// Trace of Frobenius at an odd prime of good reduction for the given model.
pub fn ap(e: &Curve<Q>, p: u64) -> Result<i64> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if p > AP_CAP {
        return Err(Error::PrimeTooLarge { p, cap: AP_CAP });
    }
    Ok(reduce_mod_p(e, p)?.ap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;

    #[test]
    fn small_traces() {
        let e = Curve::short(q(0), q(1)).unwrap();
        assert_eq!(ap(&e, 5), Ok(0));
        let f = Curve::short(q(-1), q(0)).unwrap();
        assert_eq!(ap(&f, 3), Ok(0));
        assert_eq!(ap(&f, 2), Err(Error::NotOddPrime(2)));
        assert_eq!(ap(&f, 9), Err(Error::NotOddPrime(9)));
        assert_eq!(ap(&f, 100_003), Err(Error::PrimeTooLarge { p: 100_003, cap: AP_CAP }));
    }

    #[test]
    fn reduction_errors() {
        let f = Curve::short(q(-1), q(0)).unwrap();
        assert_eq!(reduce_mod_p(&f, 2), Err(Error::BadReduction(2)));
        let e = Curve::short(q(0), q(1)).unwrap();
        let r = reduce_mod_p(&e, 5).unwrap();
        assert_eq!(r.disc(), (5 - 432 % 5));
        assert_eq!(r.affine_points().len() + 1, r.count_points() as usize);
    }
}
