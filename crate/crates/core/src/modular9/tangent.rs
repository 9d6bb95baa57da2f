//! Tangent-line expansions on cubic pairs and the forgetful map from level 9 to
//! level 3 that they define.

use crate::algebra::{Field, Poly, Ring, Vars};
use crate::elliptic::Curve;
use crate::error::{Error, Result};
use crate::families3::{hesse_family, HessePoint, Sign};

use super::universal::lambda_from_gradients;
use super::{twisted_model, CubicPairModel, ProjPt};

/// `F_i(P + l Q) = gamma_i l^2 + delta_i l^3` along the tangent line at `P`.
#[derive(Clone, Debug, PartialEq)]
pub struct TangentExpansion<K> {
    pub point: ProjPt<K>,
    pub direction: ProjPt<K>,
    pub gamma: [K; 2],
    pub delta: [K; 2],
}

/// The tangent matrix at a point of the model. All entries vanish iff the Jacobian
/// has rank below 2 there.
pub fn lambda_at<K: Ring>(model: &CubicPairModel<K>, p: &ProjPt<K>) -> Vec<Vec<K>> {
    let [g1, g2] = model.gradients(p);
    lambda_from_gradients(&g1, &g2)
}

/// Expands both forms along `P + l Q`, where `Q` is the first row of the tangent
/// matrix at `P` that is not proportional to `P`.
pub fn tangent_expansion<K: Ring>(model: &CubicPairModel<K>, p: &ProjPt<K>) -> Result<TangentExpansion<K>> {
    if !model.contains(p) {
        return Err(Error::NotOnModel);
    }
    let lam = lambda_at(model, p);
    if lam.iter().flatten().all(Ring::is_zero) {
        return Err(Error::SingularPoint);
    }
    let q = lam
        .iter()
        .filter(|row| row.iter().any(|c| !c.is_zero()))
        .map(|row| ProjPt(std::array::from_fn(|i| row[i].clone())))
        .find(|q| !q.proportional(p))
        .ok_or(Error::DegenerateLambda)?;

    let lv = Vars::new(&["l"]);
    let l = Poly::var(&lv, "l");
    let line: Vec<Poly<K>> = (0..4).map(|i| Poly::constant_in(&lv, p.0[i].clone()).add(&l.scale(&q.0[i]))).collect();
    let mut gamma = Vec::new();
    let mut delta = Vec::new();
    for f in model.forms() {
        let e = f.substitute_all(&line)?.with_vars(&lv)?;
        let c = |k: u32| e.coefficient_of(&[("l", k)]);
        // P is on the model and Q is tangent, so the expansion starts at l^2
        assert!(c(0).is_zero() && c(1).is_zero(), "tangent expansion has low-order terms");
        gamma.push(c(2));
        delta.push(c(3));
    }
    Ok(TangentExpansion {
        point: p.clone(),
        direction: q,
        gamma: [gamma[0].clone(), gamma[1].clone()],
        delta: [delta[0].clone(), delta[1].clone()],
    })
}

/// `(r : s) = (gamma_2 : 3 gamma_1)` for a point on a model of `X_E(9)` or
/// `X_E^-(9)` (or any model obtained from one by a linear change of
/// coordinates, after pulling the point back).
pub fn forget_on_model<K: Field>(model: &CubicPairModel<K>, p: &ProjPt<K>) -> Result<HessePoint<K>> {
    let exp = tangent_expansion(model, p)?;
    let [g1, g2] = exp.gamma;
    if g1.is_zero() && g2.is_zero() {
        return Err(Error::CuspPoint);
    }
    Ok(HessePoint::new(g2, g1.scale_int(3)))
}

fn short_coeffs<K: Field>(e: &Curve<K>) -> Result<(K, K)> {
    if !e.is_short() {
        return Err(Error::NotShortModel);
    }
    Ok((e.a4().clone(), e.a6().clone()))
}

/// Image on `X_E(3)` (or `X_E^-(3)`) of a point of the level-9 model of
/// `E: y^2 = x^3 + ax + b`.
pub fn forget9<K: Field>(e: &Curve<K>, p: &ProjPt<K>, sign: Sign) -> Result<HessePoint<K>> {
    let (a, b) = short_coeffs(e)?;
    forget_on_model(&twisted_model(&a, &b, sign)?, p)
}

/// The curve 9-congruent to `E` attached to a point of its level-9 model, via the
/// level-3 family with `c4 = -a/27`, `c6 = -b/54`.
pub fn nine_congruent_curve<K: Field>(e: &Curve<K>, p: &ProjPt<K>, sign: Sign) -> Result<Curve<K>> {
    let (a, b) = short_coeffs(e)?;
    let rs = forget9(e, p, sign)?;
    let c4 = a.div(&K::from_int(-27)).unwrap();
    let c6 = b.div(&K::from_int(-54)).unwrap();
    hesse_family(&c4, &c6, &rs, sign)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, Fp, Q};
    use crate::modular9::{universal_forget, universal_model};

    fn points_mod_p<const P: u64>(m: &CubicPairModel<Fp<P>>) -> Vec<ProjPt<Fp<P>>> {
        let mut out = Vec::new();
        for a in Fp::<P>::all() {
            for b in Fp::<P>::all() {
                for c in Fp::<P>::all() {
                    let pt = ProjPt([a, b, c, Fp::one()]);
                    if m.contains(&pt) {
                        out.push(pt);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn gamma_ratio_is_the_universal_forgetful_map() {
        let m = universal_model().map_coeffs(Fp::<31>::from_rational);
        let pts = points_mod_p(&m);
        assert!(pts.len() > 5);
        let mut tested = 0;
        for p in &pts {
            let Ok(exp) = tangent_expansion(&m, p) else { continue };
            let [g1, g2] = exp.gamma;
            if g1.is_zero() {
                continue;
            }
            assert_eq!(Some(g2.div(&g1).unwrap()), universal_forget(p));
            tested += 1;
        }
        assert!(tested > 0);
    }

    #[test]
    fn rejects_long_models() {
        let e = Curve::new(q(1), q(0), q(0), q(0), q(1)).unwrap();
        let p = ProjPt::from_ints([1, 0, 0, 0]);
        assert_eq!(forget9::<Q>(&e, &p, Sign::Direct), Err(Error::NotShortModel));
    }
}
