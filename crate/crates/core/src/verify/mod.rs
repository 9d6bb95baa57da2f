//! Trace-of-Frobenius congruence checks, reproduction of the worked examples, and
//! the full verification run.

mod examples;

pub use examples::{case, reproduce, CaseKind, CaseReport, ExampleCase, Stage, CASE_IDS};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::scalar::primes_between;
use crate::algebra::Q;
use crate::diophantine::{local_solubility, LocalVerdict};
use crate::elliptic::{ap, Curve, AP_CAP};
use crate::error::{Error, Result};
use crate::families3::Sign;
use crate::modular9::{
    geom_identity_check, hess_id_check, hessian_pencil_factorization, scale_identities, section5_bridge,
    sl2_action_check, twisted_model,
};
use crate::surfaces::{first_good_fiber, j_evidence, section_multiples, surface, theorem4_substitution_check};

/// `a_p` of both curves at one prime good for both models.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApRow {
    pub p: u64,
    pub ap1: i64,
    pub ap2: i64,
    pub congruent: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CongruenceReport {
    pub e1: Curve<Q>,
    pub e2: Curve<Q>,
    pub modulus: u64,
    pub bound: u64,
    pub rows: Vec<ApRow>,
    /// Odd primes up to the bound where either model has bad reduction.
    pub skipped: Vec<u64>,
    pub all_congruent: bool,
    /// First prime with `a_p(E1) != a_p(E2)`; isogenous curves have equal traces.
    pub isogeny_excluded: Option<u64>,
}

impl CongruenceReport {
    /// No prime was tested, so `all_congruent` holds vacuously.
    pub fn vacuous(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn first_failure(&self) -> Option<&ApRow> {
        self.rows.iter().find(|r| !r.congruent)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": 1,
            "e1": self.e1.to_string(),
            "e2": self.e2.to_string(),
            "modulus": self.modulus,
            "bound": self.bound,
            "rows": self.rows.iter().map(|r| json!({
                "p": r.p, "ap1": r.ap1, "ap2": r.ap2, "congruent": r.congruent,
            })).collect::<Vec<_>>(),
            "skipped": self.skipped,
            "all_congruent": self.all_congruent,
            "vacuous": self.vacuous(),
            "isogeny_excluded": self.isogeny_excluded,
        })
    }
}

/// Compares `a_p(E1)` and `a_p(E2)` modulo `n` at the odd primes `p <= bound` good
/// for both given models. `p = 2` is not tested.
pub fn verify_congruence(e1: &Curve<Q>, e2: &Curve<Q>, n: u64, bound: u64) -> Result<CongruenceReport> {
    if bound > AP_CAP {
        return Err(Error::PrimeTooLarge { p: bound, cap: AP_CAP });
    }
    let traces: Vec<(u64, Option<(i64, i64)>)> = primes_between(3, bound)
        .into_par_iter()
        .map(|p| match (ap(e1, p), ap(e2, p)) {
            (Ok(a), Ok(b)) => (p, Some((a, b))),
            _ => (p, None),
        })
        .collect();
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for (p, t) in traces {
        match t {
            Some((ap1, ap2)) => rows.push(ApRow { p, ap1, ap2, congruent: (ap1 - ap2).rem_euclid(n as i64) == 0 }),
            None => skipped.push(p),
        }
    }
    let all_congruent = rows.iter().all(|r| r.congruent);
    let isogeny_excluded = rows.iter().find(|r| r.ap1 != r.ap2).map(|r| r.p);
    Ok(CongruenceReport {
        e1: e1.clone(),
        e2: e2.clone(),
        modulus: n,
        bound,
        rows,
        skipped,
        all_congruent,
        isogeny_excluded,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ItemStatus {
    Pass,
    Fail(String),
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummaryItem {
    pub module: &'static str,
    pub name: String,
    pub status: ItemStatus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationSummary {
    pub items: Vec<SummaryItem>,
}

impl VerificationSummary {
    /// Every item that was run passed.
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| !matches!(i.status, ItemStatus::Fail(_)))
    }

    pub fn count(&self, f: impl Fn(&ItemStatus) -> bool) -> usize {
        self.items.iter().filter(|i| f(&i.status)).count()
    }

    pub fn to_json(&self) -> Value {
        let items: Vec<Value> = self
            .items
            .iter()
            .map(|i| {
                let (status, detail) = match &i.status {
                    ItemStatus::Pass => ("pass", None),
                    ItemStatus::Fail(d) => ("fail", Some(d.clone())),
                    ItemStatus::Skipped => ("skipped", None),
                };
                json!({ "module": i.module, "name": i.name, "status": status, "detail": detail })
            })
            .collect();
        json!({
            "schema": 1,
            "passed": self.passed(),
            "counts": {
                "pass": self.count(|s| *s == ItemStatus::Pass),
                "fail": self.count(|s| matches!(s, ItemStatus::Fail(_))),
                "skipped": self.count(|s| *s == ItemStatus::Skipped),
            },
            "items": items,
        })
    }
}

type Check = Box<dyn Fn() -> std::result::Result<(), String> + Send + Sync>;

fn check(ok: bool, detail: impl Into<String>) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail.into())
    }
}

/// Module names accepted by `skip`.
pub const MODULES: [&str; 4] = ["modular9", "surfaces", "diophantine", "examples"];

fn checks() -> Vec<(&'static str, String, Check)> {
    let mut out: Vec<(&'static str, String, Check)> = Vec::new();
    let signs = [Sign::Direct, Sign::Reverse];

    out.push((
        "modular9",
        "hessian pencil identity".into(),
        Box::new(|| check(hess_id_check(), "determinant differs")),
    ));
    for (k, s) in scale_identities().into_iter().enumerate() {
        out.push((
            "modular9",
            format!("scaling identity {}", s.name),
            Box::new(move || check(scale_identities()[k].holds, "weighted scaling fails")),
        ));
    }
    for sign in signs {
        out.push((
            "modular9",
            format!("hessian factorization {sign}"),
            Box::new(move || hessian_pencil_factorization(sign).map(|_| ()).map_err(|e| e.to_string())),
        ));
        out.push((
            "modular9",
            format!("torsion-model bridge {sign}"),
            Box::new(move || {
                let r = section5_bridge(sign);
                check(
                    r.passed(),
                    format!("determinant ok: {}, span found: {}", r.determinant_ok(), r.change_of_basis.is_some()),
                )
            }),
        ));
    }
    out.push((
        "modular9",
        "tangent-matrix identity".into(),
        Box::new(|| geom_identity_check().map(|_| ()).map_err(|e| e.to_string())),
    ));
    out.push((
        "modular9",
        "SL2(Z/9) action".into(),
        Box::new(|| {
            let r = sl2_action_check();
            check(r.passed(), r.failures().join(", "))
        }),
    ));

    for sign in signs {
        out.push((
            "surfaces",
            format!("substitution identities {sign}"),
            Box::new(move || {
                let r = theorem4_substitution_check(sign);
                let bad: Vec<&str> = r.identities.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect();
                check(bad.is_empty(), bad.join(", "))
            }),
        ));
        out.push((
            "surfaces",
            format!("section of infinite order {sign}"),
            Box::new(move || {
                let s = surface(sign);
                let t = Q::from_integer(first_good_fiber(&s, 2).into());
                let m = section_multiples(&s, 12, &t).map_err(|e| e.to_string())?;
                check(m.infinite_order_certificate(), format!("order {:?} at T = {t}", m.order()))
            }),
        ));
        for k in 0..3 {
            out.push((
                "surfaces",
                format!("j evidence {sign} #{}", k + 1),
                Box::new(move || {
                    let ev = j_evidence(sign, 3);
                    let e = ev.get(k).ok_or("not enough good specializations")?;
                    check(e.matches(), format!("t0 = {}: {} vs {}", e.t0, e.j_curve, e.j_surface))
                }),
            ));
        }
    }

    out.push((
        "diophantine",
        "47775z1 reverse model has no 7-adic point".into(),
        Box::new(|| {
            let a = Q::from_integer((-41489280).into());
            let b = Q::from_integer(102867483600i64.into());
            let m = twisted_model(&a, &b, Sign::Reverse).map_err(|e| e.to_string())?;
            let r = local_solubility(&m, 7, 6).map_err(|e| e.to_string())?;
            check(matches!(r.verdict, LocalVerdict::NoPointsToDepth(_)), r.to_string())
        }),
    ));

    for id in CASE_IDS {
        out.push((
            "examples",
            format!("example {id}"),
            Box::new(move || {
                let r = reproduce(&case(id).map_err(|e| e.to_string())?);
                check(r.passed(), r.failures().join("; "))
            }),
        ));
    }
    out
}

/// Runs every identity check, surface check and worked example, skipping the
/// listed modules. Items run in parallel; the order of the summary is fixed.
pub fn verify_paper(skip: &[&str]) -> Result<VerificationSummary> {
    for s in skip {
        if !MODULES.contains(s) {
            return Err(Error::Parse(format!("unknown module {s:?}; expected one of {MODULES:?}")));
        }
    }
    let items = checks()
        .into_par_iter()
        .map(|(module, name, f)| {
            let status = if skip.contains(&module) {
                ItemStatus::Skipped
            } else {
                match f() {
                    Ok(()) => ItemStatus::Pass,
                    Err(d) => ItemStatus::Fail(d),
                }
            };
            SummaryItem { module, name, status }
        })
        .collect();
    Ok(VerificationSummary { items })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::parse_curve;

    #[test]
    fn curve_against_itself() {
        let e = parse_curve("[0,-1,1,-32013,2215478]").unwrap();
        let r = verify_congruence(&e, &e, 9, 200).unwrap();
        assert!(r.all_congruent && !r.vacuous());
        assert_eq!(r.isogeny_excluded, None);
        // 47775 = 3 * 5^2 * 7^2 * 13
        assert_eq!(r.skipped, vec![3, 5, 7, 13]);
    }

    #[test]
    fn unrelated_curves_differ() {
        let e = parse_curve("[0,-1,1,-32013,2215478]").unwrap();
        let f = parse_curve("[0,0,1,-1,0]").unwrap();
        let r = verify_congruence(&e, &f, 9, 200).unwrap();
        assert!(!r.all_congruent);
        assert!(r.first_failure().is_some());
    }

    #[test]
    fn empty_range_is_vacuous() {
        let e = parse_curve("[0,0,1,-1,0]").unwrap();
        let r = verify_congruence(&e, &e, 9, 2).unwrap();
        assert!(r.vacuous() && r.all_congruent);
    }

    #[test]
    fn unknown_skip_module() {
        assert!(verify_paper(&["nope"]).is_err());
    }
}
