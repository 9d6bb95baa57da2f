//! The universal curve `X(9) = {a^2 b + b^2 c + c^2 a = ab^2 + bc^2 + ca^2 - d^3 = 0}`,
//! its map to the `t`-line of the Hesse pencil, and its `SL_2(Z/9)` symmetries.

use crate::algebra::linalg::{self, mat_mul};
use crate::algebra::{cofactor_solve_many, in_ideal, Cyc3, Cyc9, Field, Poly, Ring, Vars};
use crate::error::Result;

use super::{CubicPairModel, ProjPt, Provenance};

const X9_F1: &str = "a^2*b + b^2*c + c^2*a";
const X9_F2: &str = "a*b^2 + b*c^2 + c*a^2 - d^3";
/// Numerator and denominator of the forgetful map `t = -(a^3+b^3+c^3+6abc)/(3d^3)`.
const FORGET_NUM: &str = "-(a^3 + b^3 + c^3 + 6*a*b*c)";
const FORGET_DEN: &str = "3*d^3";

fn abcd() -> Vars {
    Vars::new(&["a", "b", "c", "d"])
}

pub fn universal_model() -> CubicPairModel {
    let v = abcd();
    CubicPairModel::new(Poly::parse(X9_F1, &v).unwrap(), Poly::parse(X9_F2, &v).unwrap(), Provenance::Universal)
        .unwrap()
}

/// The `t`-coordinate of the image of `p` on the Hesse pencil; `None` is `t = infinity`.
pub fn universal_forget<K: Field>(p: &ProjPt<K>) -> Option<K> {
    let v = abcd();
    let num = Poly::parse(FORGET_NUM, &v).unwrap().eval(&p.0, K::from_rational);
    let den = Poly::parse(FORGET_DEN, &v).unwrap().eval(&p.0, K::from_rational);
    num.div(&den)
}

/// Matrix of second partial derivatives with respect to `names`.
pub fn hessian<R: Ring>(f: &Poly<R>, names: &[&str]) -> Vec<Vec<Poly<R>>> {
    let first: Vec<Poly<R>> = names.iter().map(|n| f.partial(n)).collect();
    first.iter().map(|g| names.iter().map(|n| g.partial(n)).collect()).collect()
}

/// Parity of a permutation of `0..n` given as a list.
fn is_even(p: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            inversions += (p[i] > p[j]) as usize;
        }
    }
    inversions % 2 == 0
}

/// The alternating matrix `L_ij = g1_k g2_l - g1_l g2_k`, `(i,j,k,l)` an even
/// permutation, built from two gradient vectors. Its rows span the tangent line.
pub(crate) fn lambda_from_gradients<R: Ring>(g1: &[R], g2: &[R]) -> Vec<Vec<R>> {
    (0..4)
        .map(|i| {
            (0..4)
                .map(|j| {
                    if i == j {
                        return R::zero();
                    }
                    let rest: Vec<usize> = (0..4).filter(|&x| x != i && x != j).collect();
                    let (k, l) =
                        if is_even(&[i, j, rest[0], rest[1]]) { (rest[0], rest[1]) } else { (rest[1], rest[0]) };
                    g1[k].mul(&g2[l]).sub(&g1[l].mul(&g2[k]))
                })
                .collect()
        })
        .collect()
}

/// The tangent matrix of a cubic pair as a matrix of quartic forms.
pub fn lambda_matrix<R: Ring>(model: &CubicPairModel<R>) -> Vec<Vec<Poly<R>>> {
    let names = model.vars().names().to_vec();
    let g1: Vec<Poly<R>> = names.iter().map(|n| model.f1().partial(n)).collect();
    let g2: Vec<Poly<R>> = names.iter().map(|n| model.f2().partial(n)).collect();
    lambda_from_gradients(&g1, &g2)
}

/// `det H(t F_1 - F_2) = -48 (t^3 - 1)(a^3 + b^3 + c^3 - 3abc) d` in `Q[t, a, b, c, d]`.
pub fn hess_id_check() -> bool {
    let v = Vars::new(&["t", "a", "b", "c", "d"]);
    let m = universal_model();
    let f1 = m.f1().with_vars(&v).unwrap();
    let f2 = m.f2().with_vars(&v).unwrap();
    let pencil = Poly::var(&v, "t").mul(&f1).sub(&f2);
    let det = linalg::det(&hessian(&pencil, &["a", "b", "c", "d"]));
    let expected = Poly::parse("-48*(t^3 - 1)*(a^3 + b^3 + c^3 - 3*a*b*c)*d", &v).unwrap();
    det == expected
}

/// Outcome of the congruence `L H(F_i) L = gamma_i D (x_i x_j) mod (F_1, F_2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeomReport {
    /// Matrix entries checked, over both forms.
    pub entries: usize,
    /// Degree of the cofactors found.
    pub cofactor_degree: u32,
}

/// Verifies the tangent-matrix congruence on `X(9)` with
/// `gamma_1 = -18 d^3`, `gamma_2 = 6(a^3 + b^3 + c^3 + 6abc)`, `D = (a^3+b^3+c^3-3abc) d`,
/// by solving for cofactors of every entry.
pub fn geom_identity_check() -> Result<GeomReport> {
    let v = abcd();
    let m = universal_model();
    let lam = lambda_matrix(&m);
    let p = |s: &str| Poly::parse(s, &v).unwrap();
    let d = p("(a^3 + b^3 + c^3 - 3*a*b*c)*d");
    let gammas = [p("-18*d^3"), p("6*(a^3 + b^3 + c^3 + 6*a*b*c)")];
    let xs: Vec<Poly> = ["a", "b", "c", "d"].iter().map(|n| Poly::var(&v, n)).collect();
    let mut targets = Vec::new();
    for (f, gamma) in m.forms().into_iter().zip(&gammas) {
        let h = hessian(f, &["a", "b", "c", "d"]);
        let lhl = mat_mul(&mat_mul(&lam, &h), &lam);
        let scale = gamma.mul(&d);
        for i in 0..4 {
            for j in 0..4 {
                targets.push(lhl[i][j].sub(&scale.mul(&xs[i]).mul(&xs[j])));
            }
        }
    }
    let degree = 6;
    let basis = [m.f1().clone(), m.f2().clone()];
    for r in cofactor_solve_many(&targets, &basis, degree) {
        r?;
    }
    Ok(GeomReport { entries: targets.len(), cofactor_degree: degree })
}

/// The generators of the `SL_2(Z/9)` action on `P^3` and of the kernel of reduction
/// to `SL_2(Z/3)`, acting by `x -> M x`.
#[derive(Clone, Debug)]
pub struct Sl2Action {
    pub rho_s: Vec<Vec<Cyc9>>,
    pub rho_t: Vec<Vec<Cyc9>>,
    pub kernel: [Vec<Vec<Cyc3>>; 3],
}

pub fn sl2_action() -> Sl2Action {
    let z = |k: i64| Cyc9::zeta_pow(k);
    let e = |i: i64, j: i64| z(i).sub(&z(j));
    let (p, q, r, w) = (e(1, 8), e(7, 2), e(4, 5), e(3, 6));
    let rho_s = vec![
        vec![p.clone(), q.clone(), r.clone(), w.clone()],
        vec![q.clone(), r.clone(), p.clone(), w.clone()],
        vec![r, p, q, w.clone()],
        vec![w.clone(), w.clone(), w, Cyc9::zero()],
    ];
    let diag = [1, 4, 7, 6];
    let rho_t = (0..4).map(|i| (0..4).map(|j| if i == j { z(diag[i]) } else { Cyc9::zero() }).collect()).collect();

    let c = |n: i64| Cyc3::from_int(n);
    let w3 = Cyc3::zeta();
    let one = c(1);
    let zero = c(0);
    let scale_d = vec![
        vec![one.clone(), zero.clone(), zero.clone(), zero.clone()],
        vec![zero.clone(), one.clone(), zero.clone(), zero.clone()],
        vec![zero.clone(), zero.clone(), one.clone(), zero.clone()],
        vec![zero.clone(), zero.clone(), zero.clone(), w3.clone()],
    ];
    let rotate = vec![
        vec![zero.clone(), one.clone(), zero.clone(), zero.clone()],
        vec![zero.clone(), zero.clone(), one.clone(), zero.clone()],
        vec![one.clone(), zero.clone(), zero.clone(), zero.clone()],
        vec![zero.clone(), zero.clone(), zero.clone(), one.clone()],
    ];
    let mix = vec![
        vec![w3.clone(), one.clone(), one.clone(), zero.clone()],
        vec![one.clone(), w3.clone(), one.clone(), zero.clone()],
        vec![one.clone(), one.clone(), w3.clone(), zero.clone()],
        vec![zero.clone(), zero.clone(), zero, w3.sub(&one)],
    ];
    Sl2Action { rho_s, rho_t, kernel: [scale_d, rotate, mix] }
}

/// Named pass/fail results for the symmetry checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Report {
    pub checks: Vec<(String, bool)>,
}

impl Sl2Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect()
    }
}

fn preserves_ideal<K: Field>(m: &[Vec<K>]) -> bool {
    let model = universal_model().map_coeffs(K::from_rational);
    let moved = model.transform(m);
    let basis = [model.f1().clone(), model.f2().clone()];
    let ok = moved.forms().into_iter().all(|f| in_ideal(f, &basis));
    ok
}

fn is_symmetric<K: Ring>(m: &[Vec<K>]) -> bool {
    (0..m.len()).all(|i| (0..i).all(|j| m[i][j] == m[j][i]))
}

/// `M^3` is a scalar matrix.
fn has_projective_order_3<K: Ring>(m: &[Vec<K>]) -> bool {
    let cube = mat_mul(&mat_mul(m, m), m);
    let c = cube[0][0].clone();
    !c.is_zero() && (0..4).all(|i| (0..4).all(|j| if i == j { cube[i][j] == c } else { cube[i][j].is_zero() }))
}

/// The forgetful map is unchanged by `m`, modulo the ideal of `X(9)`.
fn forget_invariant<K: Field>(m: &[Vec<K>]) -> bool {
    let v = abcd();
    let model = universal_model().map_coeffs(K::from_rational);
    let num = Poly::parse(FORGET_NUM, &v).unwrap().map_coeffs(K::from_rational);
    let den = Poly::parse(FORGET_DEN, &v).unwrap().map_coeffs(K::from_rational);
    let xs: Vec<Poly<K>> = ["a", "b", "c", "d"].iter().map(|n| Poly::var(&v, n)).collect();
    let images: Vec<Poly<K>> =
        m.iter().map(|row| row.iter().zip(&xs).fold(Poly::zero_in(&v), |acc, (c, x)| acc.add(&x.scale(c)))).collect();
    let num_g = num.substitute_all(&images).unwrap();
    let den_g = den.substitute_all(&images).unwrap();
    let diff = num_g.mul(&den).sub(&num.mul(&den_g));
    in_ideal(&diff, &[model.f1().clone(), model.f2().clone()])
}

/// Checks that the generators preserve the ideal of `X(9)`, that the printed
/// matrices are symmetric, that the kernel generators have order 3 in `PGL_4`, and
/// that the forgetful map is invariant under the kernel.
pub fn sl2_action_check() -> Sl2Report {
    let act = sl2_action();
    let mut checks = vec![
        ("rho(S) symmetric".to_string(), is_symmetric(&act.rho_s)),
        ("rho(T) symmetric".to_string(), is_symmetric(&act.rho_t)),
        ("rho(S) invertible".to_string(), !linalg::det(&act.rho_s).is_zero()),
        ("rho(S) preserves ideal".to_string(), preserves_ideal(&act.rho_s)),
        ("rho(T) preserves ideal".to_string(), preserves_ideal(&act.rho_t)),
    ];
    for (i, g) in act.kernel.iter().enumerate() {
        let n = i + 1;
        checks.push((format!("kernel generator {n} preserves ideal"), preserves_ideal(g)));
        checks.push((format!("kernel generator {n} has order 3"), has_projective_order_3(g)));
        checks.push((format!("forgetful map invariant under kernel generator {n}"), forget_invariant(g)));
    }
    Sl2Report { checks }
}
