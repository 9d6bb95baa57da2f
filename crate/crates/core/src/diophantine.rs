//! Rational points of bounded height on cubic-pair models, and bounded-depth
//! searches for `p`-adic points.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::algebra::scalar::is_prime;
use crate::algebra::{Poly, Ring, Vars, Q};
use crate::error::{Error, Result};
use crate::modular9::{CubicPairModel, ProjPt};

/// A form scaled to coprime integer coefficients, as `(exponents, coefficient)`.
struct IntForm(Vec<([u32; 4], BigInt)>);

impl IntForm {
    fn new(f: &Poly) -> Self {
        let l = f.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let terms: Vec<([u32; 4], BigInt)> = f
            .terms()
            .map(|(m, c)| {
                let e = m.exps();
                ([e[0], e[1], e[2], e[3]], (c * Q::from_integer(l.clone())).to_integer())
            })
            .collect();
        let content = terms.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c));
        IntForm(terms.into_iter().map(|(e, c)| (e, c / &content)).collect())
    }

    fn eval(&self, x: &[i64; 4]) -> BigInt {
        self.0.iter().map(|(e, c)| (0..4).fold(c.clone(), |acc, i| acc * BigInt::from(x[i]).pow(e[i]))).sum()
    }
}

/// Points found by [`search_points`].
#[derive(Clone, Debug, PartialEq)]
pub struct SearchResult {
    pub height: u64,
    /// Normalized (coprime, first nonzero coordinate positive), in scan order.
    pub points: Vec<ProjPt<Q>>,
    pub scanned: u64,
}

impl SearchResult {
    pub fn contains(&self, p: &ProjPt<Q>) -> bool {
        let n = p.normalized();
        self.points.contains(&n)
    }
}

fn first_nonzero_positive(x: &[i64; 4]) -> bool {
    x.iter().find(|c| **c != 0).is_some_and(|c| *c > 0)
}

fn primitive(x: &[i64; 4]) -> bool {
    x.iter().fold(0i64, |g, c| g.gcd(c)) == 1
}

/// All points `(x : y : z : t)` with coprime integer coordinates of absolute value
/// at most `h` on both forms, one representative per sign class, in lexicographic
/// order of the normalized coordinates.
pub fn search_points(model: &CubicPairModel, h: u64) -> SearchResult {
    let h = h as i64;
    let forms = [IntForm::new(model.f1()), IntForm::new(model.f2())];
    let per_lead: Vec<(Vec<[i64; 4]>, u64)> = (-h..=h)
        .into_par_iter()
        .map(|a| {
            let mut found = Vec::new();
            let mut scanned = 0;
            for b in -h..=h {
                for c in -h..=h {
                    for d in -h..=h {
                        let x = [a, b, c, d];
                        if !first_nonzero_positive(&x) || !primitive(&x) {
                            continue;
                        }
                        scanned += 1;
                        if forms.iter().all(|f| f.eval(&x).is_zero()) {
                            found.push(x);
                        }
                    }
                }
            }
            (found, scanned)
        })
        .collect();
    let scanned = per_lead.iter().map(|(_, s)| s).sum();
    let points = per_lead
        .into_iter()
        .flat_map(|(f, _)| f)
        .map(ProjPt::from_ints)
        .inspect(|p| debug_assert!(model.contains(p)))
        .collect();
    SearchResult { height: h as u64, points, scanned }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// A polynomial in the three chart variables with coefficients reduced mod `p`.
struct ModForm(Vec<([u32; 3], u64)>);

impl ModForm {
    fn new(g: &Poly, p: u64) -> Self {
        let pb = BigInt::from(p);
        ModForm(
            g.terms()
                .map(|(m, c)| {
                    let e = m.exps();
                    ([e[0], e[1], e[2]], c.numer().mod_floor(&pb).to_u64().unwrap())
                })
                .filter(|(_, c)| *c != 0)
                .collect(),
        )
    }

    fn eval(&self, y: &[u64; 3], p: u64) -> u64 {
        self.0.iter().fold(0, |acc, (e, c)| {
            let t = (0..3).fold(*c, |t, i| (0..e[i]).fold(t, |t, _| mul_mod(t, y[i], p)));
            (acc + t) % p
        })
    }

    fn partial(&self, i: usize, p: u64) -> ModForm {
        ModForm(
            self.0
                .iter()
                .filter(|(e, _)| e[i] > 0)
                .map(|(e, c)| {
                    let mut e2 = *e;
                    e2[i] -= 1;
                    (e2, mul_mod(*c, e[i] as u64 % p, p))
                })
                .filter(|(_, c)| *c != 0)
                .collect(),
        )
    }
}

/// Outcome of a local solubility search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalVerdict {
    /// A point of `P^3(Z)` whose class mod `p^depth` lifts to a `Q_p`-point: after
    /// rescaling, the Jacobian of the forms has rank 2 mod `p` there.
    Soluble { witness: [BigInt; 4] },
    /// Every residue class dies by this depth.
    NoPointsToDepth(u32),
    /// Singular classes still survive at the maximal depth.
    Undetermined { surviving: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalReport {
    pub p: u64,
    pub depth: u32,
    pub verdict: LocalVerdict,
}

impl fmt::Display for LocalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.verdict {
            LocalVerdict::Soluble { witness } => {
                let [x, y, z, t] = witness;
                write!(f, "soluble at {}: ({x} : {y} : {z} : {t}) lifts, depth {}", self.p, self.depth)
            }
            LocalVerdict::NoPointsToDepth(k) => write!(f, "no Q_{}-point found to depth {k}", self.p),
            LocalVerdict::Undetermined { surviving } => {
                write!(f, "undetermined at {} to depth {}: {surviving} singular classes survive", self.p, self.depth)
            }
        }
    }
}

fn chart_vars() -> Vars {
    Vars::new(&["y1", "y2", "y3"])
}

/// Divides by the gcd of the (integer) coefficients.
fn primitive_part(g: &Poly) -> Poly {
    let content = g.terms().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c.numer()));
    if content.is_zero() {
        return g.clone();
    }
    g.scale(&Q::new(1.into(), content))
}

/// The residue disc `x = a + diag(b) y` with `y` in `Z_p^3` placed in `slots`,
/// and the forms pulled back to it.
struct Disc {
    forms: [Poly; 2],
    a: [BigInt; 4],
    b: [BigInt; 4],
    slots: [usize; 3],
    depth: u32,
}

impl Disc {
    /// Points of `P^3(Z_p)` whose first unit coordinate is `lead`, scaled to 1.
    fn chart(model: &CubicPairModel, lead: usize, p: u64) -> Disc {
        let slots: [usize; 3] = std::array::from_fn(|k| if k < lead { k } else { k + 1 });
        let a: [BigInt; 4] = std::array::from_fn(|i| BigInt::from((i == lead) as u8));
        let b: [BigInt; 4] = std::array::from_fn(|i| match i.cmp(&lead) {
            std::cmp::Ordering::Less => BigInt::from(p),
            std::cmp::Ordering::Equal => BigInt::zero(),
            std::cmp::Ordering::Greater => BigInt::one(),
        });
        let v = chart_vars();
        let images: Vec<Poly> = (0..4)
            .map(|i| {
                let base = Poly::constant_in(&v, Q::from_integer(a[i].clone()));
                match slots.iter().position(|&j| j == i) {
                    Some(k) => base.add(&Poly::var(&v, v.names()[k].as_str()).scale(&Q::from_integer(b[i].clone()))),
                    None => base,
                }
            })
            .collect();
        let forms = model.forms().map(|f| primitive_part(&f.substitute_all(&images).unwrap().with_vars(&v).unwrap()));
        Disc { forms, a, b, slots, depth: 1 }
    }

    fn point(&self, y: &[u64; 3]) -> [BigInt; 4] {
        let mut x = self.a.clone();
        for (k, &i) in self.slots.iter().enumerate() {
            x[i] += &self.b[i] * BigInt::from(y[k]);
        }
        x
    }

    /// The sub-disc `y = y0 + p y'`.
    fn child(&self, y0: &[u64; 3], p: u64) -> Disc {
        let v = chart_vars();
        let pq = Q::from_integer(p.into());
        let images: Vec<Poly> = (0..3)
            .map(|k| {
                Poly::constant_in(&v, Q::from_integer(y0[k].into()))
                    .add(&Poly::var(&v, v.names()[k].as_str()).scale(&pq))
            })
            .collect();
        let forms = self.forms.clone().map(|f| primitive_part(&f.substitute_all(&images).unwrap()));
        Disc {
            forms,
            a: self.point(y0),
            b: self.b.clone().map(|c| c * BigInt::from(p)),
            slots: self.slots,
            depth: self.depth + 1,
        }
    }
}

enum Step {
    Smooth([BigInt; 4]),
    Refine(Vec<[u64; 3]>),
}

fn scan(disc: &Disc, p: u64) -> Step {
    let g = disc.forms.clone().map(|f| ModForm::new(&f, p));
    let grads: [[ModForm; 3]; 2] = [0, 1].map(|i| std::array::from_fn(|k| g[i].partial(k, p)));
    let mut singular = Vec::new();
    for n in 0..p * p * p {
        let y = [n % p, (n / p) % p, n / (p * p)];
        if g.iter().any(|f| f.eval(&y, p) != 0) {
            continue;
        }
        let j: Vec<[u64; 3]> = grads.iter().map(|row| std::array::from_fn(|k| row[k].eval(&y, p))).collect();
        let rank2 = (0..3).any(|k| {
            (k + 1..3).any(|l| !(mul_mod(j[0][k], j[1][l], p) + p - mul_mod(j[0][l], j[1][k], p)).is_multiple_of(p))
        });
        if rank2 {
            return Step::Smooth(disc.point(&y));
        }
        singular.push(y);
    }
    Step::Refine(singular)
}

/// Searches for `Q_p`-points by splitting `P^3(Z_p)` into residue discs. A disc
/// whose rescaled forms have a common zero mod `p` with Jacobian of rank 2 holds a
/// point by Hensel's lemma; discs with only singular zeros are refined, at most
/// `k_max` times along any branch.
pub fn local_solubility(model: &CubicPairModel, p: u64, k_max: u32) -> Result<LocalReport> {
    if !is_prime(p) || p > 97 || !(1..=6).contains(&k_max) {
        return Err(Error::LocalRange { p, depth: k_max });
    }
    let mut frontier: Vec<Disc> = (0..4).map(|lead| Disc::chart(model, lead, p)).collect();
    let mut depth = 1;
    loop {
        let mut singular = Vec::new();
        for disc in &frontier {
            match scan(disc, p) {
                Step::Smooth(witness) => {
                    return Ok(LocalReport { p, depth, verdict: LocalVerdict::Soluble { witness } });
                }
                Step::Refine(ys) => singular.extend(ys.into_iter().map(|y| (disc, y))),
            }
        }
        if singular.is_empty() {
            return Ok(LocalReport { p, depth, verdict: LocalVerdict::NoPointsToDepth(depth) });
        }
        if depth == k_max {
            let verdict = LocalVerdict::Undetermined { surviving: singular.len() };
            return Ok(LocalReport { p, depth, verdict });
        }
        frontier = singular.into_iter().map(|(d, y)| d.child(&y, p)).collect();
        depth += 1;
    }
}
