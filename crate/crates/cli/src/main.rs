use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use ninecong_core::algebra::{parse_rational, Q};
use ninecong_core::diophantine::{local_solubility, search_points, LocalVerdict};
use ninecong_core::elliptic::{parse_curve, Curve, Point};
use ninecong_core::modular9::{forget9, nine_congruent_curve, parse_matrix, twisted_model, ProjPt};
use ninecong_core::surfaces::{section_multiples, surface};
use ninecong_core::verify::{case, reproduce, verify_congruence, verify_paper, ItemStatus};
use ninecong_core::{Error, Sign};

/// Level-9 modular curve models and checks for 9-congruent elliptic curves.
#[derive(Parser)]
#[command(name = "ninecong", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The two cubics cutting out the level-9 model of `y^2 = x^3 + ax + b`.
    Model {
        #[arg(long)]
        curve: String,
        #[arg(long, default_value = "direct")]
        sign: String,
    },
    /// Image of a point on the level-9 model in the level-3 base, and the congruent curve.
    Forget {
        #[arg(long)]
        curve: String,
        #[arg(long, default_value = "direct")]
        sign: String,
        #[arg(long)]
        point: String,
    },
    /// Compares traces of Frobenius of two curves modulo n.
    Verify {
        #[arg(long)]
        e1: String,
        #[arg(long)]
        e2: String,
        #[arg(long = "mod", default_value_t = 9)]
        modulus: u64,
        #[arg(long, default_value_t = 1000)]
        bound: u64,
    },
    /// Rational points of bounded height on the level-9 model.
    Search {
        #[arg(long)]
        curve: String,
        #[arg(long, default_value = "direct")]
        sign: String,
        #[arg(long)]
        height: u64,
        /// 16 comma-separated entries, row by row; searches on the forms F(Mx).
        #[arg(long)]
        matrix: Option<String>,
    },
    /// Bounded-depth search for p-adic points on the level-9 model.
    Local {
        #[arg(long)]
        curve: String,
        #[arg(long, default_value = "direct")]
        sign: String,
        #[arg(short = 'p')]
        p: u64,
        #[arg(long, default_value_t = 3)]
        depth: u32,
    },
    /// The elliptic surface for direct or reverse congruences.
    Surface {
        #[arg(long, default_value = "direct")]
        sign: String,
        #[arg(long)]
        specialize: Option<String>,
        #[arg(long, default_value_t = 12)]
        multiples: usize,
    },
    /// Runs one worked example end to end.
    Reproduce {
        #[arg(long = "case")]
        id: String,
    },
    /// Runs every identity check and worked example.
    VerifyPaper {
        /// Module to skip: modular9, surfaces, diophantine or examples.
        #[arg(long)]
        skip: Vec<String>,
        /// Also write the JSON summary to this file.
        #[arg(long)]
        json: Option<std::path::PathBuf>,
    },
}

fn short_coeffs(src: &str) -> Result<(Curve<Q>, Q, Q), Error> {
    let e = parse_curve(src)?;
    if !e.is_short() {
        return Err(Error::NotShortModel);
    }
    let (a, b) = (e.a4().clone(), e.a6().clone());
    Ok((e, a, b))
}

fn point_json(p: &Point<Q>) -> Value {
    match p {
        Point::Infinity => json!("O"),
        Point::Affine(x, y) => json!([x.to_string(), y.to_string()]),
    }
}

fn run(cli: Cli) -> Result<(Value, bool), Error> {
    let out = match cli.command {
        Command::Model { curve, sign } => {
            let sign = Sign::parse(&sign)?;
            let (e, a, b) = short_coeffs(&curve)?;
            let m = twisted_model(&a, &b, sign)?;
            json!({
                "schema": 1,
                "curve": e.to_string(),
                "sign": sign.name(),
                "variables": m.vars().names(),
                "f1": m.f1().to_string(),
                "f2": m.f2().to_string(),
            })
        }
        Command::Forget { curve, sign, point } => {
            let sign = Sign::parse(&sign)?;
            let (e, _, _) = short_coeffs(&curve)?;
            let p = ProjPt::parse(&point)?;
            let rs = forget9(&e, &p, sign)?;
            let c = nine_congruent_curve(&e, &p, sign)?;
            json!({
                "schema": 1,
                "curve": e.to_string(),
                "sign": sign.name(),
                "point": p.to_string(),
                "r": rs.r.to_string(),
                "s": rs.s.to_string(),
                "congruent_curve": c.to_string(),
                "congruent_curve_integral": c.integral_model().to_string(),
            })
        }
        Command::Verify { e1, e2, modulus, bound } => {
            let r = verify_congruence(&parse_curve(&e1)?, &parse_curve(&e2)?, modulus, bound)?;
            let ok = r.all_congruent;
            return Ok((r.to_json(), ok));
        }
        Command::Search { curve, sign, height, matrix } => {
            let sign = Sign::parse(&sign)?;
            let (e, a, b) = short_coeffs(&curve)?;
            let mut m = twisted_model(&a, &b, sign)?;
            if let Some(src) = &matrix {
                m = m.transform(&parse_matrix(src)?);
            }
            let r = search_points(&m, height);
            json!({
                "schema": 1,
                "curve": e.to_string(),
                "sign": sign.name(),
                "transformed": matrix.is_some(),
                "height": r.height,
                "scanned": r.scanned,
                "points": r.points.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            })
        }
        Command::Local { curve, sign, p, depth } => {
            let sign = Sign::parse(&sign)?;
            let (e, a, b) = short_coeffs(&curve)?;
            let r = local_solubility(&twisted_model(&a, &b, sign)?, p, depth)?;
            let (verdict, witness) = match &r.verdict {
                LocalVerdict::Soluble { witness } => {
                    ("soluble", Some(witness.iter().map(|c| c.to_string()).collect::<Vec<_>>()))
                }
                LocalVerdict::NoPointsToDepth(_) => ("no_points_to_depth", None),
                LocalVerdict::Undetermined { .. } => ("undetermined", None),
            };
            json!({
                "schema": 1,
                "curve": e.to_string(),
                "sign": sign.name(),
                "p": r.p,
                "depth": r.depth,
                "verdict": verdict,
                "witness": witness,
                "summary": r.to_string(),
            })
        }
        Command::Surface { sign, specialize, multiples } => {
            let sign = Sign::parse(&sign)?;
            let s = surface(sign);
            let mut out = json!({
                "schema": 1,
                "sign": sign.name(),
                "coefficients": s.curve.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "section": ["0", "0"],
            });
            if let Some(src) = specialize {
                let t0 = parse_rational(&src).ok_or_else(|| Error::Parse(format!("not a rational number: {src}")))?;
                let m = section_multiples(&s, multiples, &t0)?;
                out["specialization"] = json!({
                    "t": t0.to_string(),
                    "fiber": m.fiber.to_string(),
                    "multiples": m.multiples.iter().map(point_json).collect::<Vec<_>>(),
                    "order": m.order(),
                    "infinite_order_certificate": m.infinite_order_certificate(),
                });
            }
            out
        }
        Command::Reproduce { id } => {
            let r = reproduce(&case(&id)?);
            let ok = r.passed();
            return Ok((r.to_json(), ok));
        }
        Command::VerifyPaper { skip, json: path } => {
            let skip: Vec<&str> = skip.iter().map(String::as_str).collect();
            let s = verify_paper(&skip)?;
            for i in &s.items {
                let status = match &i.status {
                    ItemStatus::Pass => "PASS".to_string(),
                    ItemStatus::Fail(d) => format!("FAIL ({d})"),
                    ItemStatus::Skipped => "SKIP".to_string(),
                };
                eprintln!("{status:<6} {:<12} {}", i.module, i.name);
            }
            let v = s.to_json();
            if let Some(path) = path {
                let text = serde_json::to_string_pretty(&v).expect("serializable");
                if let Err(e) = std::fs::write(&path, text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return Ok((v, false));
                }
            }
            return Ok((v, s.passed()));
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((v, ok)) => {
            println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
