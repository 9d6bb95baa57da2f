//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{gamma, legendre_trace, projective_points, tangent_plane, F, P};
use ninecong_core::algebra::{q, Fp, Ring};
use ninecong_core::diophantine::{local_solubility, search_points, LocalVerdict};
use ninecong_core::elliptic::{ap, Curve, Point};
use ninecong_core::modular9::{
    forget_on_model, geom_identity_check, hess_id_check, hessian_pencil_factorization, scale_identities,
    section5_bridge, sl2_action_check, twisted_model, universal_model, ProjPt,
};
use ninecong_core::surfaces::{first_good_fiber, j_evidence, section_multiples, surface, theorem4_substitution_check};
use ninecong_core::verify::{case, reproduce, CaseReport};
use ninecong_core::Sign;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Wall-clock limits per criterion.
const IDENTITY_LIMIT: Duration = Duration::from_secs(300);
const EXAMPLE_LIMIT: Duration = Duration::from_secs(120);
/// Depth first tried for the 7-adic check, and the most it may escalate to.
const LOCAL_DEPTH: u32 = 3;
const LOCAL_MAX_DEPTH: u32 = 6;
/// Points tested for the forgetful-map invariance property.
const FORGET_POINTS: usize = 20;
/// j-invariant agreements required per sign.
const J_SPECIALIZATIONS: usize = 3;

const SIGNS: [Sign; 2] = [Sign::Direct, Sign::Reverse];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn identities() -> Outcome {
    let start = Instant::now();
    ensure(hess_id_check(), "hessian pencil determinant")?;
    for s in scale_identities() {
        ensure(s.holds, format!("scaling identity {}", s.name))?;
    }
    for sign in SIGNS {
        hessian_pencil_factorization(sign).map_err(|e| format!("hessian factorization {sign}: {e}"))?;
        let b = section5_bridge(sign);
        ensure(b.passed(), format!("torsion-model bridge {sign}"))?;
        let t = theorem4_substitution_check(sign);
        ensure(t.passed(), format!("substitution identities {sign}"))?;
    }
    geom_identity_check().map_err(|e| format!("tangent-matrix identity: {e}"))?;
    let sl2 = sl2_action_check();
    ensure(sl2.passed(), format!("SL2 action: {}", sl2.failures().join(", ")))?;
    let took = start.elapsed();
    ensure(took < IDENTITY_LIMIT, format!("took {took:?}, limit {IDENTITY_LIMIT:?}"))?;
    Ok(format!("all exact, {:.1}s", took.as_secs_f64()))
}

fn run_case(id: &str, limit: Option<Duration>) -> Result<CaseReport, String> {
    let start = Instant::now();
    let r = reproduce(&case(id).map_err(|e| e.to_string())?);
    if !r.passed() {
        return Err(format!("{id}: {}", r.failures().join("; ")));
    }
    if let Some(limit) = limit {
        let took = start.elapsed();
        ensure(took < limit, format!("{id} took {took:?}, limit {limit:?}"))?;
    }
    Ok(r)
}

fn stage_count(r: &CaseReport, prefix: &str) -> usize {
    r.stages.iter().filter(|s| s.name.starts_with(prefix)).count()
}

fn rational_example(id: &str) -> Outcome {
    let r = run_case(id, Some(EXAMPLE_LIMIT))?;
    let points = stage_count(&r, "point ");
    let congruences = stage_count(&r, "congruence");
    let witnesses = stage_count(&r, "non-isogeny");
    ensure(stage_count(&r, "search height") == 1 && points > 0, format!("{id}: missing search stages"))?;
    ensure(congruences > 0 && witnesses > 0, format!("{id}: missing congruence stages"))?;
    Ok(format!("{id}: {points} points mapped, {congruences} congruent pairs, {witnesses} non-isogeny witnesses"))
}

fn local_evidence() -> Outcome {
    let a = q(-41489280);
    let b = q(102867483600);
    let m = twisted_model(&a, &b, Sign::Reverse).map_err(|e| e.to_string())?;
    for depth in LOCAL_DEPTH..=LOCAL_MAX_DEPTH {
        let r = local_solubility(&m, 7, depth).map_err(|e| e.to_string())?;
        match r.verdict {
            LocalVerdict::NoPointsToDepth(k) => return Ok(format!("NoPointsToDepth({k})")),
            LocalVerdict::Soluble { .. } => return Err(format!("found a smooth 7-adic point: {r}")),
            LocalVerdict::Undetermined { .. } => continue,
        }
    }
    Err(format!("undetermined up to depth {LOCAL_MAX_DEPTH}"))
}

fn several(ids: &[&str]) -> Outcome {
    let mut out = Vec::new();
    for id in ids {
        let r = run_case(id, None)?;
        ensure(stage_count(&r, "non-isogeny") > 0, format!("{id}: no non-isogeny witness"))?;
        out.push(format!("{id}: {} stages", r.stages.len()));
    }
    Ok(out.join(", "))
}

fn surfaces() -> Outcome {
    let mut out = Vec::new();
    for sign in SIGNS {
        let s = surface(sign);
        ensure(s.curve.contains(&s.section()), format!("(0,0) is not on the {sign} surface"))?;
        let t = q(first_good_fiber(&s, 2));
        let m = section_multiples(&s, 12, &t).map_err(|e| e.to_string())?;
        ensure(m.infinite_order_certificate(), format!("{sign}: a multiple of (0,0) is O at T = {t}"))?;
        let ev = j_evidence(sign, J_SPECIALIZATIONS);
        ensure(ev.len() >= J_SPECIALIZATIONS, format!("{sign}: only {} good specializations", ev.len()))?;
        for e in &ev {
            ensure(e.matches(), format!("{sign} t0 = {}: j {} vs {}", e.t0, e.j_curve, e.j_surface))?;
        }
        let ts: Vec<String> = ev.iter().map(|e| e.t0.to_string()).collect();
        out.push(format!("{sign}: certificate at T = {t}, j equal at t0 = {}", ts.join(",")));
    }
    Ok(out.join("; "))
}

fn properties() -> Outcome {
    let mut rng = StdRng::seed_from_u64(2024);

    // Hasse bound, with the trace checked against a Legendre-symbol sum
    let mut traces = 0;
    for _ in 0..30 {
        let (a, b) = (rng.gen_range(-60i64..60), rng.gen_range(-60i64..60));
        let Ok(e) = Curve::short(q(a), q(b)) else { continue };
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 97, 101, 997] {
            let Ok(t) = ap(&e, p) else { continue };
            ensure(t * t <= 4 * p as i64, format!("a_{p} = {t} on [{a},{b}]"))?;
            ensure(t == legendre_trace(a, b, p as i64), format!("a_{p} on [{a},{b}] differs from the Legendre sum"))?;
            traces += 1;
        }
    }

    // associativity over F_101
    let mut triples = 0;
    while triples < 200 {
        let Ok(e) = Curve::short(Fp::<101>::new(rng.gen_range(0..101)), Fp::<101>::new(rng.gen_range(0..101))) else {
            continue;
        };
        let pts: Vec<Point<Fp<101>>> = Fp::<101>::all()
            .flat_map(|x| Fp::<101>::all().map(move |y| Point::Affine(x, y)))
            .filter(|p| e.contains(p))
            .collect();
        if pts.is_empty() {
            continue;
        }
        for _ in 0..20 {
            let [p1, p2, p3] = [0; 3].map(|_| &pts[rng.gen_range(0..pts.len())]);
            ensure(e.add(&e.add(p1, p2), p3) == e.add(p1, &e.add(p2, p3)), "group law is not associative")?;
            triples += 1;
        }
    }

    // forgetful map: projective scaling and choice of tangent direction
    let mut tested = 0;
    let mut attempts = 0;
    while tested < FORGET_POINTS {
        attempts += 1;
        ensure(attempts < 500, "too few smooth points over F_31")?;
        let sign = if rng.gen_bool(0.5) { Sign::Direct } else { Sign::Reverse };
        let Ok(m) = twisted_model(&F::new(rng.gen_range(0..P as i64)), &F::new(rng.gen_range(0..P as i64)), sign)
        else {
            continue;
        };
        let pts = projective_points(&m);
        if pts.is_empty() {
            continue;
        }
        let p = &pts[rng.gen_range(0..pts.len())];
        let Ok(rs) = forget_on_model(&m, p) else { continue };
        let lam = F::new(rng.gen_range(1..P as i64));
        let scaled = ProjPt::new(p.coords().map(|c| c.mul(&lam)));
        ensure(
            forget_on_model(&m, &scaled).is_ok_and(|r| r.proportional(&rs)),
            format!("scaling {p} changed (r : s)"),
        )?;
        let [g1, g2] = m.gradients(p);
        for dir in tangent_plane(&g1, &g2) {
            if ProjPt::new(dir).proportional(p) {
                continue;
            }
            let nu = F::new(rng.gen_range(0..P as i64));
            let d: [F; 4] = std::array::from_fn(|i| dir[i].add(&p.coords()[i].mul(&nu)));
            let [h1, h2] = gamma(&m, p, &d);
            ensure(h2.mul(&rs.s) == h1.scale_int(3).mul(&rs.r), format!("tangent direction changed (r : s) at {p}"))?;
        }
        tested += 1;
    }

    // search monotonicity
    let model = universal_model();
    let mut prev = search_points(&model, 1);
    for h in 2..=3 {
        let cur = search_points(&model, h);
        ensure(prev.points.iter().all(|p| cur.contains(p)), format!("a point was lost at height {h}"))?;
        prev = cur;
    }
    Ok(format!(
        "{traces} traces, {triples} associativity triples, {tested} forgetful-map points, search up to height 3"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 symbolic identities", identities),
        ("2 example over Q, direct", || rational_example("ex-47775-direct")),
        ("3 example over Q, reverse", || rational_example("ex-201-reverse")),
        ("4 local insolubility at 7", local_evidence),
        ("5 examples over Q(T)", || several(&["ex-qt-direct", "ex-qt-reverse"])),
        ("6 printed triples", || several(&["triple-4650", "triple-27606"])),
        ("7 elliptic surfaces", surfaces),
        ("8 property suites", properties),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {name:<28} [{secs:.1}s] {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name:<28} [{secs:.1}s] {detail}");
            }
        }
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
