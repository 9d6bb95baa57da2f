//! Coefficient domains: the [`Ring`] and [`Field`] abstractions, exact rationals and
//! prime-field elements.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
pub type Q = BigRational;

/// A commutative ring with unit whose elements carry no external context.
///
/// Methods are named like the `std::ops` traits; generic code should not import those
/// traits so that method calls resolve here.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Image of a rational number. Panics if the denominator is not invertible.
    fn from_rational(q: &Q) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Q::from_integer(BigInt::from(n)))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn scale_int(&self, n: i64) -> Self {
        self.mul(&Self::from_int(n))
    }
}

pub trait Field: Ring {
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }
}

impl Ring for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(q: &Q) -> Self {
        q.clone()
    }
    fn from_int(n: i64) -> Self {
        Q::from_integer(BigInt::from(n))
    }
}

impl Field for Q {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: BigInt) -> Q {
    Q::from_integer(n)
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

/// Parses comma-separated rationals, optionally wrapped in brackets.
pub fn parse_rational_list(src: &str) -> crate::error::Result<Vec<Q>> {
    let body = src.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
    body.split(',')
        .map(|x| parse_rational(x).ok_or_else(|| crate::error::Error::Parse(format!("bad rational {x:?}"))))
        .collect()
}

/// Residue of a rational modulo `m`, or `None` when the denominator is not a unit.
pub fn rational_mod(q: &Q, m: u64) -> Option<u64> {
    let mb = BigInt::from(m);
    let n = q.numer().mod_floor(&mb).to_u64()?;
    let d = q.denom().mod_floor(&mb).to_u64()?;
    let dinv = inv_mod(d, m)?;
    Some(mul_mod(n, dinv, m))
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Inverse modulo any `m` (not necessarily prime), if `gcd(a, m) = 1`.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let g = (a as i128).extended_gcd(&(m as i128));
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.rem_euclid(m as i128) as u64)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes in `[lo, hi]`.
pub fn primes_between(lo: u64, hi: u64) -> Vec<u64> {
    if hi < 2 {
        return Vec::new();
    }
    let n = hi as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (lo.max(2) as usize..=n).filter(|&k| sieve[k]).map(|k| k as u64).collect()
}

/// Exact `k`-th root of a rational, if it exists.
pub fn rational_root(x: &Q, k: u32) -> Option<Q> {
    if k == 0 {
        return None;
    }
    if x.is_negative() && k.is_multiple_of(2) {
        return None;
    }
    let root_int = |n: &BigInt| -> Option<BigInt> {
        let r = n.nth_root(k);
        if r.pow(k) == *n {
            Some(r)
        } else {
            None
        }
    };
    let n = root_int(x.numer())?;
    let d = root_int(x.denom())?;
    Some(Q::new(n, d))
}

/// Element of the prime field `Z/P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn modulus() -> u64 {
        P
    }

    pub fn all() -> impl Iterator<Item = Self> {
        (0..P).map(Fp)
    }

    /// Square root when one exists (Tonelli-Shanks is overkill at this size).
    pub fn sqrt(self) -> Option<Self> {
        if self.0 == 0 {
            return Some(self);
        }
        (1..P).map(Fp).find(|r| r.mul(r) == self)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Ring for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, other: &Self) -> Self {
        Fp((self.0 + other.0) % P)
    }
    fn sub(&self, other: &Self) -> Self {
        Fp((self.0 + P - other.0) % P)
    }
    fn mul(&self, other: &Self) -> Self {
        Fp(mul_mod(self.0, other.0, P))
    }
    fn neg(&self) -> Self {
        Fp((P - self.0) % P)
    }
    fn from_rational(q: &Q) -> Self {
        Fp(rational_mod(q, P).expect("denominator divisible by the field characteristic"))
    }
    fn from_int(n: i64) -> Self {
        Fp::new(n)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(Fp(pow_mod(self.0, P - 2, P)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parsing_and_roots() {
        assert_eq!(parse_rational("-6/4"), Some(qf(-3, 2)));
        assert_eq!(parse_rational("17"), Some(q(17)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(rational_root(&qf(-8, 27), 3), Some(qf(-2, 3)));
        assert_eq!(rational_root(&q(-16), 4), None);
        assert_eq!(rational_root(&q(12), 2), None);
    }

    #[test]
    fn modular_helpers() {
        assert_eq!(rational_mod(&qf(1, 2), 7), Some(4));
        assert_eq!(rational_mod(&qf(1, 7), 7), None);
        assert_eq!(inv_mod(3, 10), Some(7));
        assert_eq!(primes_between(1, 20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert!(is_prime(97) && !is_prime(91));
    }

    #[test]
    fn prime_field_inverse() {
        for x in Fp::<13>::all().skip(1) {
            assert_eq!(x.mul(&x.inv().unwrap()), Fp::one());
        }
        assert_eq!(Fp::<7>::new(-1).value(), 6);
    }
}
