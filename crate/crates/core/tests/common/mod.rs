//! Independent finite-field helpers shared by the integration tests.
#![allow(dead_code)]

use ninecong_core::algebra::{Field, Fp, Ring};
use ninecong_core::modular9::{CubicPairModel, ProjPt};

/// Naive trace through the Legendre symbol, computed independently of the point counter.
pub fn legendre_trace(a: i64, b: i64, p: i64) -> i64 {
    let chi = |v: i64| -> i64 {
        let v = v.rem_euclid(p);
        if v == 0 {
            return 0;
        }
        let mut r = 1i64;
        let (mut base, mut e) = (v, (p - 1) / 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        if r == 1 {
            1
        } else {
            -1
        }
    };
    -(0..p).map(|x| chi(x * x % p * x + a * x + b)).sum::<i64>()
}

pub const P: u64 = 31;
pub type F = Fp<P>;

pub fn projective_points(m: &CubicPairModel<F>) -> Vec<ProjPt<F>> {
    let mut out = Vec::new();
    let all: Vec<F> = F::all().collect();
    let (zero, one) = (F::zero(), F::one());
    for &x in &all {
        for &y in &all {
            for &z in &all {
                out.push(ProjPt::new([x, y, z, one]));
            }
            out.push(ProjPt::new([x, y, one, zero]));
        }
        out.push(ProjPt::new([x, one, zero, zero]));
    }
    out.push(ProjPt::new([one, zero, zero, zero]));
    out.retain(|p| m.contains(p));
    out
}

/// Coefficient of `l^2` in `F_i(P + l Q)`, read off from `l = 1` and `l = -1`
/// (the expansion has no constant or linear term).
pub fn gamma(m: &CubicPairModel<F>, p: &ProjPt<F>, q: &[F; 4]) -> [F; 2] {
    let at = |l: F| m.eval(&ProjPt::new(std::array::from_fn(|i| p.coords()[i].add(&q[i].mul(&l)))));
    let (plus, minus) = (at(F::one()), at(F::one().neg()));
    let half = F::from_int(2).inv().unwrap();
    [plus[0].add(&minus[0]).mul(&half), plus[1].add(&minus[1]).mul(&half)]
}

/// A basis of the common kernel of the two gradients, by row reduction.
pub fn tangent_plane(g1: &[F; 4], g2: &[F; 4]) -> Vec<[F; 4]> {
    let mut rows = [*g1, *g2];
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..4 {
        let Some(k) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else { continue };
        rows.swap(r, k);
        let inv = rows[r][c].inv().unwrap();
        rows[r] = rows[r].map(|x| x.mul(&inv));
        for k in 0..rows.len() {
            if k != r && !rows[k][c].is_zero() {
                let f = rows[k][c];
                rows[k] = std::array::from_fn(|i| rows[k][i].sub(&rows[r][i].mul(&f)));
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    (0..4)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = [F::zero(); 4];
            v[free] = F::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = rows[row][free].neg();
            }
            v
        })
        .collect()
}
