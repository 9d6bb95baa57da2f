//! Elements of `Q[zeta]/(Phi_M(zeta))` for `M` in {3, 9}.

use std::fmt;

use super::linalg;
use super::scalar::{Field, Ring, Q};

/// Cyclotomic number with `phi(M)` rational coordinates in the power basis `1, zeta, ...`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycScalar<const M: u32> {
    coords: Vec<Q>,
}

pub type Cyc3 = CycScalar<3>;
pub type Cyc9 = CycScalar<9>;

impl<const M: u32> CycScalar<M> {
    /// Degree of the field, `phi(M)`.
    pub const fn degree() -> usize {
        match M {
            3 => 2,
            9 => 6,
            _ => panic!("cyclotomic level must be 3 or 9"),
        }
    }

    /// Low coefficients of the monic `Phi_M`: `zeta^d = -sum(low[i] zeta^i)`.
    fn phi_low() -> &'static [i64] {
        match M {
            3 => &[1, 1],
            9 => &[1, 0, 0, 1, 0, 0],
            _ => unreachable!(),
        }
    }

    pub fn from_coords(coords: Vec<Q>) -> Self {
        assert_eq!(coords.len(), Self::degree(), "wrong number of coordinates");
        CycScalar { coords }
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    /// `zeta^k` for any integer `k`.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(M as i64) as usize;
        Self::reduce(&{
            let mut v = vec![Q::zero(); k + 1];
            v[k] = Q::one();
            v
        })
    }

    pub fn zeta() -> Self {
        Self::zeta_pow(1)
    }

    /// Reduces a coefficient vector of arbitrary length modulo `Phi_M`.
    fn reduce(raw: &[Q]) -> Self {
        let d = Self::degree();
        let low = Self::phi_low();
        let mut buf = raw.to_vec();
        if buf.len() < d {
            buf.resize(d, Q::zero());
        }
        for k in (d..buf.len()).rev() {
            let c = std::mem::replace(&mut buf[k], Q::zero());
            if c.is_zero() {
                continue;
            }
            for (i, &l) in low.iter().enumerate() {
                if l != 0 {
                    let t = c.scale_int(l);
                    buf[k - d + i] = buf[k - d + i].sub(&t);
                }
            }
        }
        buf.truncate(d);
        CycScalar { coords: buf }
    }

    /// Matrix of multiplication by `self` in the power basis (columns are images of `zeta^j`).
    fn mult_matrix(&self) -> Vec<Vec<Q>> {
        let d = Self::degree();
        let mut cols = Vec::with_capacity(d);
        for j in 0..d {
            cols.push(self.mul(&Self::zeta_pow(j as i64)).coords);
        }
        (0..d).map(|i| (0..d).map(|j| cols[j][i].clone()).collect()).collect()
    }

    /// Field norm down to `Q`.
    pub fn norm(&self) -> Q {
        linalg::det(&self.mult_matrix())
    }
}

impl<const M: u32> Ring for CycScalar<M> {
    fn zero() -> Self {
        CycScalar { coords: vec![Q::zero(); Self::degree()] }
    }
    fn one() -> Self {
        let mut c = vec![Q::zero(); Self::degree()];
        c[0] = Q::one();
        CycScalar { coords: c }
    }
    fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
    fn add(&self, other: &Self) -> Self {
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a.add(b)).collect();
        CycScalar { coords }
    }
    fn sub(&self, other: &Self) -> Self {
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a.sub(b)).collect();
        CycScalar { coords }
    }
    fn mul(&self, other: &Self) -> Self {
        let d = Self::degree();
        let mut raw = vec![Q::zero(); 2 * d - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] = raw[i + j].add(&a.mul(b));
                }
            }
        }
        Self::reduce(&raw)
    }
    fn neg(&self) -> Self {
        CycScalar { coords: self.coords.iter().map(|c| c.neg()).collect() }
    }
    fn from_rational(q: &Q) -> Self {
        let mut c = vec![Q::zero(); Self::degree()];
        c[0] = q.clone();
        CycScalar { coords: c }
    }
}

impl<const M: u32> Field for CycScalar<M> {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let mut rhs = vec![Q::zero(); Self::degree()];
        rhs[0] = Q::one();
        let sol = linalg::solve(self.mult_matrix(), vec![rhs]).pop()??;
        Some(CycScalar { coords: sol })
    }
}

impl<const M: u32> fmt::Debug for CycScalar<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<const M: u32> fmt::Display for CycScalar<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            parts.push(match i {
                0 => format!("{c}"),
                1 => format!("{c}*zeta{M}"),
                _ => format!("{c}*zeta{M}^{i}"),
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "({})", parts.join(" + "))
        }
    }
}

macro_rules! forward_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<const M: u32> std::ops::$tr for &CycScalar<M> {
            type Output = CycScalar<M>;
            fn $m(self, rhs: Self) -> CycScalar<M> {
                Ring::$m(self, rhs)
            }
        }
    )*};
}
forward_ops!(Add add, Sub sub, Mul mul);

impl<const M: u32> std::ops::Neg for &CycScalar<M> {
    type Output = CycScalar<M>;
    fn neg(self) -> CycScalar<M> {
        Ring::neg(self)
    }
}
