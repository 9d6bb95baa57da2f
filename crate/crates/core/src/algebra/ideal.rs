//! Membership in ideals generated by homogeneous forms, by linear algebra on
//! coefficient vectors.

use std::collections::HashMap;

use super::linalg;
use super::poly::{Monomial, Poly, Vars};
use super::scalar::{Field, Ring};
use crate::error::{Error, Result};

/// Writes `g = sum(A_i * basis_i)` with homogeneous cofactors `A_i` of degree
/// `deg(g) - deg(basis_i)`.
///
/// `degree_bound` caps the cofactor degree; a bound below the degree needed for
/// homogeneous cofactors yields [`Error::NotInIdeal`] immediately.
pub fn cofactor_solve<R: Field>(g: &Poly<R>, basis: &[Poly<R>], degree_bound: u32) -> Result<Vec<Poly<R>>> {
    cofactor_solve_many(std::slice::from_ref(g), basis, degree_bound).pop().unwrap()
}

/// Batched form of [`cofactor_solve`]: all targets must be homogeneous of one
/// common degree, so a single elimination serves every right-hand side.
pub fn cofactor_solve_many<R: Field>(
    targets: &[Poly<R>],
    basis: &[Poly<R>],
    degree_bound: u32,
) -> Vec<Result<Vec<Poly<R>>>> {
    assert!(!basis.is_empty(), "empty ideal basis");
    let vars = common_vars(targets, basis);
    let targets: Vec<Poly<R>> = targets.iter().map(|t| t.with_vars(&vars).unwrap()).collect();
    let basis: Vec<Poly<R>> = basis.iter().map(|b| b.with_vars(&vars).unwrap()).collect();
    let basis_degs: Vec<u32> = basis
        .iter()
        .map(|b| {
            assert!(b.is_homogeneous(), "ideal generators must be homogeneous");
            b.total_degree().expect("zero ideal generator")
        })
        .collect();

    let Some(d) = targets.iter().find_map(Poly::total_degree) else {
        // every target is zero
        return targets.iter().map(|_| Ok(basis.iter().map(|_| Poly::zero_in(&vars)).collect())).collect();
    };
    for t in &targets {
        assert!(t.is_zero() || (t.is_homogeneous() && t.total_degree() == Some(d)));
    }
    let min_deg = *basis_degs.iter().min().unwrap();
    if d < min_deg || d - min_deg > degree_bound {
        return targets
            .iter()
            .map(|t| if t.is_zero() { zero_cofactors(&vars, basis.len()) } else { not_in(d, min_deg) })
            .collect();
    }

    let n = vars.len();
    let rows = Monomial::all_of_degree(n, d);
    let row_of: HashMap<&Monomial, usize> = rows.iter().enumerate().map(|(i, m)| (m, i)).collect();

    // one unknown per (generator, cofactor monomial)
    let mut unknowns: Vec<(usize, Monomial)> = Vec::new();
    for (i, &bd) in basis_degs.iter().enumerate() {
        if bd <= d {
            for m in Monomial::all_of_degree(n, d - bd) {
                unknowns.push((i, m));
            }
        }
    }
    let ncols = unknowns.len();
    let mut matrix = vec![vec![R::zero(); ncols + targets.len()]; rows.len()];
    for (col, (i, m)) in unknowns.iter().enumerate() {
        let shifted = Poly::monomial(&vars, m.clone(), R::one()).mul(&basis[*i]);
        for (mono, c) in shifted.terms() {
            matrix[row_of[mono]][col] = c.clone();
        }
    }
    for (k, t) in targets.iter().enumerate() {
        for (mono, c) in t.terms() {
            matrix[row_of[mono]][ncols + k] = c.clone();
        }
    }
    let pivots = linalg::row_reduce(&mut matrix, ncols);

    (0..targets.len())
        .map(|k| {
            let col = ncols + k;
            if (pivots.len()..rows.len()).any(|r| !matrix[r][col].is_zero()) {
                return not_in(d, min_deg);
            }
            let mut cofactors: Vec<Vec<(Monomial, R)>> = vec![Vec::new(); basis.len()];
            for (r, &pc) in pivots.iter().enumerate() {
                let v = &matrix[r][col];
                if !v.is_zero() {
                    let (i, m) = &unknowns[pc];
                    cofactors[*i].push((m.clone(), v.clone()));
                }
            }
            Ok(cofactors.into_iter().map(|terms| Poly::from_terms(&vars, terms)).collect())
        })
        .collect()
}

fn not_in<T>(d: u32, min_deg: u32) -> Result<T> {
    Err(Error::NotInIdeal { degree: d.saturating_sub(min_deg) })
}

fn zero_cofactors<R: Ring>(vars: &Vars, k: usize) -> Result<Vec<Poly<R>>> {
    Ok((0..k).map(|_| Poly::zero_in(vars)).collect())
}

fn common_vars<R: Ring>(targets: &[Poly<R>], basis: &[Poly<R>]) -> Vars {
    targets.iter().chain(basis).map(|p| p.vars().clone()).find(|v| !v.is_empty()).unwrap_or_else(Vars::empty)
}

/// True iff `g` lies in the ideal generated by `basis` with cofactors of the expected
/// homogeneous degree.
pub fn in_ideal<R: Field>(g: &Poly<R>, basis: &[Poly<R>]) -> bool {
    let d = g.total_degree().unwrap_or(0);
    cofactor_solve(g, basis, d).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::Q;

    fn setup() -> (Vars, Poly, Poly) {
        let v = Vars::new(&["a", "b", "c", "d"]);
        let f1 = Poly::parse("a^2*b + b^2*c + c^2*a", &v).unwrap();
        let f2 = Poly::parse("a*b^2 + b*c^2 + c*a^2 - d^3", &v).unwrap();
        (v, f1, f2)
    }

    #[test]
    fn trivial_memberships() {
        let (v, f1, f2) = setup();
        let sol = cofactor_solve(&f1, &[f1.clone(), f2.clone()], 0).unwrap();
        assert_eq!(sol[0], Poly::<Q>::one());
        assert!(sol[1].is_zero());
        let x = Poly::var(&v, "a");
        let g = x.mul(&f2);
        let sol = cofactor_solve(&g, &[f1.clone(), f2.clone()], 1).unwrap();
        assert!(sol[0].is_zero());
        assert_eq!(sol[1], x);
    }

    #[test]
    fn non_member_is_reported() {
        let (v, f1, f2) = setup();
        let g = Poly::parse("a^3", &v).unwrap();
        assert_eq!(cofactor_solve(&g, &[f1, f2], 0), Err(Error::NotInIdeal { degree: 0 }));
    }

    #[test]
    fn batched_solutions_reconstruct_targets() {
        let (v, f1, f2) = setup();
        let x = Poly::parse("a - 2*d", &v).unwrap();
        let y = Poly::parse("3*c + b", &v).unwrap();
        let targets = vec![x.mul(&f1).add(&y.mul(&f2)), y.mul(&f1), Poly::parse("d^4", &v).unwrap()];
        let out = cofactor_solve_many(&targets, &[f1.clone(), f2.clone()], 1);
        for (t, r) in targets.iter().zip(&out).take(2) {
            let c = r.as_ref().unwrap();
            assert_eq!(&c[0].mul(&f1).add(&c[1].mul(&f2)), t);
        }
        assert!(out[2].is_err());
    }
}
