//! Sparse multivariate polynomials over a [`Ring`], with dense exponent vectors and
//! graded-lex monomial order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use super::scalar::{Field, Ring, Q};
use crate::error::{Error, Result};

/// Ordered list of variable names shared by a family of polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Vars(names.iter().map(|s| s.as_ref().to_string()).collect())
    }

    pub fn empty() -> Self {
        Vars(Arc::from(Vec::new()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    /// `self` followed by the names of `other` not already present.
    pub fn join(&self, other: &Vars) -> Vars {
        let mut names: Vec<String> = self.0.to_vec();
        for n in other.0.iter() {
            if !names.contains(n) {
                names.push(n.clone());
            }
        }
        Vars(names.into())
    }
}

impl fmt::Debug for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.0[..])
    }
}

/// Exponent vector. Ordered by total degree, then lexicographically in variable order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps.into_boxed_slice())
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n].into_boxed_slice())
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(Monomial::new)
    }

    /// All monomials of total degree `d` in `n` variables, ascending.
    pub fn all_of_degree(n: usize, d: u32) -> Vec<Monomial> {
        fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if prefix.len() + 1 == n {
                prefix.push(d);
                out.push(Monomial::new(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in 0..=d {
                prefix.push(e);
                rec(n, d - e, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            if d == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(n, d, &mut Vec::with_capacity(n), &mut out);
        out.sort();
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial. A polynomial over the empty variable list is a constant and
/// combines with polynomials over any list.
#[derive(Clone)]
pub struct Poly<R = Q> {
    vars: Vars,
    terms: BTreeMap<Monomial, R>,
}

impl<R: Ring> Poly<R> {
    pub fn zero_in(vars: &Vars) -> Self {
        Poly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant_in(vars: &Vars, c: R) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(vars.len()), c);
        }
        Poly { vars: vars.clone(), terms }
    }

    pub fn constant(c: R) -> Self {
        Self::constant_in(&Vars::empty(), c)
    }

    /// The variable `name` as a polynomial. Panics if it is not in `vars`.
    pub fn var(vars: &Vars, name: &str) -> Self {
        let i = vars.index_of(name).unwrap_or_else(|| panic!("unknown variable {name}"));
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, Monomial::new(e), R::one())
    }

    pub fn monomial(vars: &Vars, m: Monomial, c: R) -> Self {
        assert_eq!(m.0.len(), vars.len());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { vars: vars.clone(), terms }
    }

    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Monomial, R)>) -> Self {
        let mut acc: BTreeMap<Monomial, R> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.0.len(), vars.len());
            add_into(&mut acc, m, c);
        }
        Poly { vars: vars.clone(), terms: acc }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &R)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> R {
        self.terms.get(m).cloned().unwrap_or_else(R::zero)
    }

    /// Coefficient of the monomial given by `(name, exponent)` pairs.
    pub fn coefficient_of(&self, exps: &[(&str, u32)]) -> R {
        let mut e = vec![0; self.vars.len()];
        for (name, k) in exps {
            match self.vars.index_of(name) {
                Some(i) => e[i] = *k,
                None if *k == 0 => {}
                None => return R::zero(),
            }
        }
        self.coefficient(&Monomial::new(e))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_value(&self) -> Option<R> {
        if self.is_constant() {
            Some(self.terms.values().next().cloned().unwrap_or_else(R::zero))
        } else {
            None
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &R)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, name: &str) -> u32 {
        match self.vars.index_of(name) {
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    /// Common degree of all terms in the named variables, if the polynomial is homogeneous
    /// in them.
    pub fn homogeneous_degree_in(&self, names: &[&str]) -> Option<u32> {
        let idx: Vec<usize> = names.iter().filter_map(|n| self.vars.index_of(n)).collect();
        let mut degs = self.terms.keys().map(|m| idx.iter().map(|&i| m.0[i]).sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero_in(&self.vars);
        }
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, x)| {
                let y = x.mul(c);
                (!y.is_zero()).then(|| (m.clone(), y))
            })
            .collect();
        Poly { vars: self.vars.clone(), terms }
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::from_terms(&self.vars, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Re-expresses the polynomial over a larger (or reordered) variable list.
    pub fn with_vars(&self, target: &Vars) -> Result<Self> {
        if self.vars == *target {
            return Ok(self.clone());
        }
        let map: Vec<Option<usize>> = self.vars.names().iter().map(|n| target.index_of(n)).collect();
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &k) in m.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => e[j] = k,
                    None => {
                        return Err(Error::VariableMismatch(format!(
                            "{} is not among {:?}",
                            self.vars.names()[i],
                            target
                        )))
                    }
                }
            }
            add_into(&mut terms, Monomial::new(e), c.clone());
        }
        Ok(Poly { vars: target.clone(), terms })
    }

    fn aligned<'a>(&'a self, other: &'a Self) -> (std::borrow::Cow<'a, Self>, std::borrow::Cow<'a, Self>) {
        use std::borrow::Cow;
        if self.vars == other.vars {
            (Cow::Borrowed(self), Cow::Borrowed(other))
        } else if self.vars.is_empty() {
            (Cow::Owned(self.with_vars(&other.vars).unwrap()), Cow::Borrowed(other))
        } else if other.vars.is_empty() {
            (Cow::Borrowed(self), Cow::Owned(other.with_vars(&self.vars).unwrap()))
        } else {
            panic!("variable lists differ: {:?} vs {:?}", self.vars, other.vars)
        }
    }

    pub fn partial(&self, name: &str) -> Self {
        let Some(i) = self.vars.index_of(name) else {
            return Self::zero_in(&self.vars);
        };
        let terms = self.terms.iter().filter(|(m, _)| m.0[i] > 0).map(|(m, c)| {
            let mut e = m.0.to_vec();
            let k = e[i];
            e[i] -= 1;
            (Monomial::new(e), c.scale_int(k as i64))
        });
        Self::from_terms(&self.vars, terms)
    }

    /// Evaluates at a point (one value per variable) in another ring.
    pub fn eval<S: Ring>(&self, point: &[S], coeff: impl Fn(&R) -> S) -> S {
        assert_eq!(point.len(), self.vars.len(), "point has wrong dimension");
        let mut powers: Vec<Vec<S>> = point.iter().map(|p| vec![S::one(), p.clone()]).collect();
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            let mut t = coeff(c);
            for (i, &k) in m.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= k as usize {
                    let next = pw.last().unwrap().mul(&pw[1]);
                    pw.push(next);
                }
                t = t.mul(&pw[k as usize]);
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Substitutes images for variables by position. Images must share one variable list
    /// (constants over the empty list are allowed anywhere).
    pub fn substitute_all(&self, images: &[Poly<R>]) -> Result<Poly<R>> {
        assert_eq!(images.len(), self.vars.len());
        let mut target: Option<Vars> = None;
        for img in images {
            if img.vars.is_empty() {
                continue;
            }
            match &target {
                None => target = Some(img.vars.clone()),
                Some(t) if *t == img.vars => {}
                Some(t) => return Err(Error::VariableMismatch(format!("{:?} vs {:?}", t, img.vars))),
            }
        }
        let target = target.unwrap_or_else(Vars::empty);
        let images: Vec<Poly<R>> = images.iter().map(|p| p.with_vars(&target)).collect::<Result<_>>()?;
        let one = Poly::constant_in(&target, R::one());
        Ok(self.eval(&images, |c| one.scale(c)))
    }

    /// Substitutes by name; every variable of `self` needs an image.
    pub fn substitute(&self, assignment: &HashMap<String, Poly<R>>) -> Result<Poly<R>> {
        let images = self
            .vars
            .names()
            .iter()
            .map(|n| assignment.get(n).cloned().ok_or_else(|| Error::MissingVariable(n.clone())))
            .collect::<Result<Vec<_>>>()?;
        self.substitute_all(&images)
    }

    /// Sets one variable to a constant, removing it from the variable list.
    pub fn specialize(&self, name: &str, value: &R) -> Self {
        let Some(i) = self.vars.index_of(name) else {
            return self.clone();
        };
        let names: Vec<&String> =
            self.vars.names().iter().enumerate().filter(|(j, _)| *j != i).map(|(_, n)| n).collect();
        let vars = Vars::new(&names);
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = m.0.to_vec();
            let k = e.remove(i);
            let t = c.mul(&value.pow(k));
            add_into(&mut terms, Monomial::new(e), t);
        }
        Poly { vars, terms }
    }

    /// Splits into main variables `names` with coefficients polynomials in the remaining
    /// variables.
    pub fn coefficients_in(&self, names: &[&str]) -> (Vars, BTreeMap<Monomial, Poly<R>>) {
        let main: Vec<usize> =
            names.iter().map(|n| self.vars.index_of(n).unwrap_or_else(|| panic!("unknown variable {n}"))).collect();
        let rest_idx: Vec<usize> = (0..self.vars.len()).filter(|i| !main.contains(i)).collect();
        let rest = Vars::new(&rest_idx.iter().map(|&i| &self.vars.names()[i]).collect::<Vec<_>>());
        let mut out: BTreeMap<Monomial, Poly<R>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key = Monomial::new(main.iter().map(|&i| m.0[i]).collect());
            let sub = Monomial::new(rest_idx.iter().map(|&i| m.0[i]).collect());
            let entry = out.entry(key).or_insert_with(|| Poly::zero_in(&rest));
            add_into(&mut entry.terms, sub, c.clone());
        }
        out.retain(|_, p| !p.terms.is_empty());
        (rest, out)
    }

    /// Largest power of `name` dividing every term.
    pub fn min_degree_in(&self, name: &str) -> u32 {
        match self.vars.index_of(name) {
            Some(i) => self.terms.keys().map(|m| m.0[i]).min().unwrap_or(0),
            None => 0,
        }
    }
}

impl<R: Field> Poly<R> {
    /// Multivariate division by a single divisor; `(quotient, remainder)` with the
    /// remainder having no term divisible by the leading monomial of `g`.
    pub fn div_rem(&self, g: &Poly<R>) -> (Poly<R>, Poly<R>) {
        let (f, g) = self.aligned(g);
        let (lm, lc) = g.leading_term().expect("division by zero polynomial");
        let lc_inv = lc.inv().unwrap();
        let mut rem = f.into_owned();
        let mut quot = Poly::zero_in(&rem.vars);
        let mut out = Poly::zero_in(&rem.vars);
        while let Some((m, c)) = rem.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            match m.checked_div(lm) {
                Some(shift) => {
                    let factor = c.mul(&lc_inv);
                    let t = Poly::monomial(&rem.vars, shift, factor);
                    rem = rem.sub(&t.mul(&g));
                    quot = quot.add(&t);
                }
                None => {
                    rem.terms.remove(&m);
                    out.terms.insert(m, c);
                }
            }
        }
        (quot, out)
    }

    /// Returns `q` with `self = q * g`, or the nonzero remainder as a witness.
    pub fn exact_divide(&self, g: &Poly<R>) -> Result<Poly<R>> {
        assert!(!g.is_zero(), "division by zero polynomial");
        let (q, r) = self.div_rem(g);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible { remainder: r.to_string() })
        }
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.inv().unwrap()),
            None => self.clone(),
        }
    }
}

impl Poly<Q> {
    /// Exact square root, if `self` is the square of a polynomial (the root with
    /// positive leading coefficient).
    pub fn sqrt_exact(&self) -> Option<Poly<Q>> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let (lm, lc) = self.leading_term()?;
        let half: Option<Vec<u32>> = lm.0.iter().map(|&e| (e % 2 == 0).then_some(e / 2)).collect();
        let lead = Monomial::new(half?);
        let lead_c = super::scalar::rational_root(lc, 2)?;
        let lead_term = Poly::monomial(&self.vars, lead.clone(), lead_c.clone());
        let twice = lead_c.scale_int(2);
        let mut root = lead_term;
        for _ in 0..=self.terms.len() * 2 {
            let rem = self.sub(&root.mul(&root));
            let Some((m, c)) = rem.leading_term() else {
                return Some(root);
            };
            let shift = m.checked_div(&lead)?;
            if shift >= lead {
                return None;
            }
            root = root.add(&Poly::monomial(&self.vars, shift, c.div(&twice)?));
        }
        None
    }
}

fn add_into<R: Ring>(terms: &mut BTreeMap<Monomial, R>, m: Monomial, c: R) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let s = o.get().add(&c);
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly::zero_in(&Vars::empty())
    }
    fn one() -> Self {
        Poly::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let mut terms = a.terms.clone();
        for (m, c) in &b.terms {
            add_into(&mut terms, m.clone(), c.clone());
        }
        Poly { vars: a.vars.clone(), terms }
    }
    fn sub(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let mut terms = a.terms.clone();
        for (m, c) in &b.terms {
            add_into(&mut terms, m.clone(), c.neg());
        }
        Poly { vars: a.vars.clone(), terms }
    }
    fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let mut acc: HashMap<Monomial, R> = HashMap::with_capacity(a.terms.len() * b.terms.len());
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let m = ma.mul(mb);
                let t = ca.mul(cb);
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(t);
                    }
                    std::collections::hash_map::Entry::Occupied(mut o) => {
                        let s = o.get().add(&t);
                        *o.get_mut() = s;
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Poly { vars: a.vars.clone(), terms }
    }
    fn neg(&self) -> Self {
        Poly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }
    fn from_rational(q: &Q) -> Self {
        Poly::constant(R::from_rational(q))
    }
}

impl<R: Ring> PartialEq for Poly<R> {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        if self.vars.is_empty() || other.vars.is_empty() {
            let (a, b) = self.aligned(other);
            return a.terms == b.terms;
        }
        false
    }
}

impl<R: Ring> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Canonical text form: terms in descending monomial order, `c*x^2*y` with exact
/// rational coefficients, unit coefficients omitted.
impl<R: Ring> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mut factors: Vec<String> = Vec::new();
            for (i, &k) in m.0.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(self.vars.names()[i].clone()),
                    _ => factors.push(format!("{}^{}", self.vars.names()[i], k)),
                }
            }
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<R: Ring> std::ops::$tr for &Poly<R> {
            type Output = Poly<R>;
            fn $m(self, rhs: Self) -> Poly<R> {
                Ring::$m(self, rhs)
            }
        }
        impl<R: Ring> std::ops::$tr for Poly<R> {
            type Output = Poly<R>;
            fn $m(self, rhs: Self) -> Poly<R> {
                Ring::$m(&self, &rhs)
            }
        }
    )*};
}
forward_ops!(Add add, Sub sub, Mul mul);

impl<R: Ring> std::ops::Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Ring::neg(self)
    }
}

impl<R: Ring> std::ops::Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Ring::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::q;

    fn p(src: &str, vars: &Vars) -> Poly {
        Poly::parse(src, vars).unwrap()
    }

    #[test]
    fn grlex_leading_term() {
        let v = Vars::new(&["x", "y"]);
        let f = p("x + y^2 + 3", &v);
        let (m, c) = f.leading_term().unwrap();
        assert_eq!(m.exps(), &[0, 2]);
        assert_eq!(*c, q(1));
        assert_eq!(f.to_string(), "y^2 + x + 3");
    }

    #[test]
    fn substitution_examples() {
        let v = Vars::new(&["x", "y"]);
        let t = Vars::new(&["t"]);
        let f = p("x + y", &v);
        let img = vec![p("t^2", &t), Poly::constant(q(1))];
        assert_eq!(f.substitute_all(&img).unwrap(), p("t^2 + 1", &t));

        let mut assignment = HashMap::new();
        assignment.insert("x".to_string(), p("t", &t));
        assert_eq!(f.substitute(&assignment), Err(Error::MissingVariable("y".into())));
    }

    #[test]
    fn exact_division() {
        let v = Vars::new(&["x", "y"]);
        let f = p("x^2 - y^2", &v);
        assert_eq!(f.exact_divide(&p("x - y", &v)).unwrap(), p("x + y", &v));
        assert_eq!(f.exact_divide(&f).unwrap(), Poly::constant_in(&v, q(1)));
        match p("x^2 + y", &v).exact_divide(&p("x - y", &v)) {
            Err(Error::NotDivisible { remainder }) => assert_ne!(remainder, "0"),
            other => panic!("expected NotDivisible, got {other:?}"),
        }
    }

    #[test]
    fn constants_broadcast() {
        let v = Vars::new(&["x"]);
        let f = p("x + 1", &v);
        let g = &f + &Poly::constant(q(2));
        assert_eq!(g, p("x + 3", &v));
        assert_eq!(Poly::<Q>::constant(q(5)), Poly::constant_in(&v, q(5)));
    }

    #[test]
    fn splitting_and_partials() {
        let v = Vars::new(&["a", "x", "y"]);
        let f = p("a*x^2 + 3*a^2*x*y - y^2", &v);
        let (rest, parts) = f.coefficients_in(&["x", "y"]);
        assert_eq!(rest, Vars::new(&["a"]));
        assert_eq!(parts.len(), 3);
        assert_eq!(f.partial("x"), p("2*a*x + 3*a^2*y", &v));
        assert_eq!(f.homogeneous_degree_in(&["x", "y"]), Some(2));
        assert_eq!(f.specialize("a", &q(2)).to_string(), "2*x^2 + 12*x*y - y^2");
    }

    #[test]
    fn square_roots() {
        let v = Vars::new(&["x", "y"]);
        let r = p("3*x^2 - x*y + 2/3*y - 5", &v);
        assert_eq!(r.mul(&r).sqrt_exact(), Some(r.clone()));
        assert_eq!(p("x^2 + y", &v).sqrt_exact(), None);
        assert_eq!(p("2*x^2", &v).sqrt_exact(), None);
    }

    #[test]
    fn monomials_of_degree() {
        assert_eq!(Monomial::all_of_degree(4, 3).len(), 20);
        assert_eq!(Monomial::all_of_degree(4, 6).len(), 84);
        assert_eq!(Monomial::all_of_degree(0, 0).len(), 1);
    }
}
