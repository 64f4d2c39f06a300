//! Command dispatch and JSON reports.
//!
//! Every command prints a single JSON document to standard output with the
//! shape `{command, inputs, seed, verdict, certificate?, evidence?}` and
//! exits 0 for positive decisions, 1 for negative ones, and 2 for errors,
//! exhausted budgets, and inconclusive outcomes. Polynomials in reports are
//! canonical strings accepted by the expression parser; rationals are
//! `p/q` strings; every run is deterministic in the seed.

use clap::{Args, Parser, Subcommand};
use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::decide;
use crate::eigenlevel;
use crate::exactla::RatMatrix;
use crate::factor;
use crate::gb::Budget;
use crate::jsonio;
use crate::ncpoly::NCPoly;
use crate::parser;
use crate::quasiconvex;
use crate::rat::{fmt_rat, parse_rat};
use crate::unipoly::UniPoly;
use crate::Rat;

#[derive(Parser)]
#[command(
    name = "freebert",
    about = "Exact computations with polynomials in noncommuting variables",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Number of variables; expressions may use x1..x<nvars>.
    #[arg(short = 'd', long = "nvars")]
    nvars: u32,
    /// Seed for every randomized probe in this run.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of sampled probes for randomized evidence.
    #[arg(long, default_value_t = 20)]
    samples: usize,
    /// Search effort level for factorization subproblems.
    #[arg(long, default_value_t = 24)]
    budget: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an expression and echo its canonical form.
    Parse {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Sum, difference, and product of two polynomials.
    Arith {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        lhs: String,
        #[arg(allow_hyphen_values = true)]
        rhs: String,
    },
    /// Factor into irreducibles over the rationals.
    Factor {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Composite test plus factorization behavior of sampled shifts f - c.
    Bertini {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Stable association of two polynomials, factor by factor.
    StableAssoc {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        f1: String,
        #[arg(allow_hyphen_values = true)]
        f2: String,
    },
    /// Eigenlevel-set containment certificate: a with f a = a h, g = p(h).
    EigCert {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Eigenlevel-set coincidence: intertwiner a with f a = a g, both ways.
    EigEquiv {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Whether lambda is an eigenvalue of f at a matrix tuple (JSON file).
    EigMember {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        tuple_file: String,
    },
    /// Compare characteristic polynomials of f(X) and g(X) on random tuples.
    DetProfile {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        /// Matrix size of the sampled tuples.
        #[arg(long, default_value_t = 2)]
        size: usize,
    },
    /// Classify weak quasiconvexity of a symmetric polynomial.
    WqcClassify {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Linear pencil whose positivity locus is 1 - f >= 0, for concave
    /// quadratic f.
    Lmi {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Evaluate f at a matrix tuple (JSON file).
    Eval {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        f: String,
        tuple_file: String,
    },
}

/// Entry point used by the binary: parses the process arguments, prints one
/// JSON document, and returns the exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    run_command(cli.command)
}

fn run_command(cmd: Command) -> i32 {
    let label = command_label(&cmd);
    match dispatch(cmd) {
        Ok((doc, code)) => {
            emit(&doc);
            code
        }
        Err(message) => {
            emit(&json!({ "command": label, "error": message }));
            2
        }
    }
}

/// Best-effort report printing: a consumer that closes the pipe early (e.g.
/// `freebert ... | head`) must not panic the process or change its exit code.
fn emit(doc: &Value) {
    use std::io::Write;
    let text = serde_json::to_string_pretty(doc).expect("report");
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
    let _ = out.flush();
}

fn command_label(cmd: &Command) -> &'static str {
    match cmd {
        Command::Parse { .. } => "parse",
        Command::Arith { .. } => "arith",
        Command::Factor { .. } => "factor",
        Command::Bertini { .. } => "bertini",
        Command::StableAssoc { .. } => "stable-assoc",
        Command::EigCert { .. } => "eig-cert",
        Command::EigEquiv { .. } => "eig-equiv",
        Command::EigMember { .. } => "eig-member",
        Command::DetProfile { .. } => "det-profile",
        Command::WqcClassify { .. } => "wqc-classify",
        Command::Lmi { .. } => "lmi",
        Command::Eval { .. } => "eval",
    }
}

fn parse_poly(text: &str, d: u32) -> Result<NCPoly, String> {
    parser::parse(text, d).map_err(|e| format!("cannot parse `{text}`: {e}"))
}

fn poly(f: &NCPoly) -> Value {
    Value::String(parser::print(f))
}

fn uni(p: &UniPoly) -> Value {
    Value::String(parser::print_uni(p))
}

fn matrix(m: &RatMatrix) -> Value {
    json!(jsonio::matrix_to_rows(m))
}

fn weighted(ells: &[(Rat, NCPoly)]) -> Value {
    Value::Array(
        ells.iter()
            .map(|(w, l)| json!({ "weight": fmt_rat(w), "poly": parser::print(l) }))
            .collect(),
    )
}

fn report(
    command: &str,
    inputs: Value,
    seed: u64,
    verdict: &str,
    certificate: Option<Value>,
    evidence: Option<Value>,
) -> Value {
    let mut m = Map::new();
    m.insert("command".into(), json!(command));
    m.insert("inputs".into(), inputs);
    m.insert("seed".into(), json!(seed));
    m.insert("verdict".into(), json!(verdict));
    if let Some(c) = certificate {
        m.insert("certificate".into(), c);
    }
    if let Some(e) = evidence {
        m.insert("evidence".into(), e);
    }
    Value::Object(m)
}

fn read_tuple(path: &str) -> Result<eigenlevel::MatrixTuple, String> {
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("cannot read `{path}`: {e}"))?;
    jsonio::tuple_from_json(&text).map_err(|e| format!("`{path}`: {e}"))
}

fn dispatch(cmd: Command) -> Result<(Value, i32), String> {
    match cmd {
        Command::Parse { common, expr } => {
            let f = parse_poly(&expr, common.nvars)?;
            let doc = report(
                "parse",
                json!({ "expr": expr, "nvars": common.nvars }),
                common.seed,
                "OK",
                Some(json!({
                    "canonical": parser::print(&f),
                    "degree": f.deg(),
                    "terms": f.num_terms(),
                })),
                None,
            );
            Ok((doc, 0))
        }
        Command::Arith { common, lhs, rhs } => {
            let a = parse_poly(&lhs, common.nvars)?;
            let b = parse_poly(&rhs, common.nvars)?;
            let doc = report(
                "arith",
                json!({ "lhs": lhs, "rhs": rhs, "nvars": common.nvars }),
                common.seed,
                "OK",
                Some(json!({
                    "sum": poly(&(&a + &b)),
                    "difference": poly(&(&a - &b)),
                    "product": poly(&(&a * &b)),
                })),
                None,
            );
            Ok((doc, 0))
        }
        Command::Factor { common, expr } => {
            let f = parse_poly(&expr, common.nvars)?;
            let inputs = json!({ "expr": expr, "nvars": common.nvars });
            let mut budget = Budget::from_level(common.budget);
            match factor::factor(&f, &mut budget) {
                Ok(fac) => {
                    let cert = json!({
                        "unit": fmt_rat(&fac.unit),
                        "factors": fac.factors.iter().map(|g| poly(g)).collect::<Vec<_>>(),
                    });
                    let (verdict, code) = match fac.factors.len() {
                        0 => ("UNIT", 1),
                        1 => ("IRREDUCIBLE", 1),
                        _ => ("FACTORED", 0),
                    };
                    Ok((
                        report("factor", inputs, common.seed, verdict, Some(cert), None),
                        code,
                    ))
                }
                Err(e) => Ok((
                    report(
                        "factor",
                        inputs,
                        common.seed,
                        "BUDGET_EXCEEDED",
                        None,
                        Some(json!({ "reason": e.0 })),
                    ),
                    2,
                )),
            }
        }
        Command::Bertini { common, expr } => {
            let f = parse_poly(&expr, common.nvars)?;
            let inputs = json!({ "expr": expr, "nvars": common.nvars });
            let rep = decide::bertini_report(&f, common.samples, common.seed, common.budget);
            let evidence: Vec<Value> = rep
                .evidence
                .iter()
                .map(|(l, o)| match o {
                    decide::LambdaOutcome::Factors { left, right } => json!({
                        "lambda": fmt_rat(l),
                        "outcome": "FACTORS",
                        "left": poly(left),
                        "right": poly(right),
                    }),
                    decide::LambdaOutcome::Irreducible => {
                        json!({ "lambda": fmt_rat(l), "outcome": "IRREDUCIBLE" })
                    }
                    decide::LambdaOutcome::Inconclusive { reason } => json!({
                        "lambda": fmt_rat(l),
                        "outcome": "INCONCLUSIVE",
                        "reason": reason,
                    }),
                })
                .collect();
            let (verdict, code) = if rep.decomposition.composite {
                ("COMPOSITE", 0)
            } else {
                ("NOT_COMPOSITE", 1)
            };
            let cert = json!({
                "composite": rep.decomposition.composite,
                "outer": uni(&rep.decomposition.p),
                "inner": poly(&rep.decomposition.h),
            });
            Ok((
                report(
                    "bertini",
                    inputs,
                    common.seed,
                    verdict,
                    Some(cert),
                    Some(json!(evidence)),
                ),
                code,
            ))
        }
        Command::StableAssoc { common, f1, f2 } => {
            let a = parse_poly(&f1, common.nvars)?;
            let b = parse_poly(&f2, common.nvars)?;
            let inputs = json!({ "f1": f1, "f2": f2, "nvars": common.nvars });
            stable_assoc_report(inputs, &a, &b, common.seed, common.budget)
        }
        Command::EigCert { common, f, g } => {
            let fp = parse_poly(&f, common.nvars)?;
            let gp = parse_poly(&g, common.nvars)?;
            let inputs = json!({ "f": f, "g": g, "nvars": common.nvars });
            match eigenlevel::eig_cert(&fp, &gp, common.seed) {
                Ok(cert) => Ok((
                    report(
                        "eig-cert",
                        inputs,
                        common.seed,
                        "INCLUDED",
                        Some(json!({
                            "a": poly(&cert.a),
                            "h": poly(&cert.h),
                            "p": uni(&cert.p),
                        })),
                        None,
                    ),
                    0,
                )),
                Err(stage) => Ok((
                    report(
                        "eig-cert",
                        inputs,
                        common.seed,
                        "NOT_INCLUDED",
                        None,
                        Some(json!({ "stage": stage.to_string() })),
                    ),
                    1,
                )),
            }
        }
        Command::EigEquiv { common, f, g } => {
            let fp = parse_poly(&f, common.nvars)?;
            let gp = parse_poly(&g, common.nvars)?;
            let inputs = json!({ "f": f, "g": g, "nvars": common.nvars });
            match eigenlevel::eig_equiv(&fp, &gp, common.seed) {
                Ok(w) => Ok((
                    report(
                        "eig-equiv",
                        inputs,
                        common.seed,
                        "EQUIVALENT",
                        Some(json!({ "a": poly(&w.a), "reversed": w.reversed })),
                        None,
                    ),
                    0,
                )),
                Err(ne) => Ok((
                    report(
                        "eig-equiv",
                        inputs,
                        common.seed,
                        "NOT_EQUIVALENT",
                        None,
                        Some(json!({
                            "forward": ne.forward.to_string(),
                            "backward": ne.backward.to_string(),
                        })),
                    ),
                    1,
                )),
            }
        }
        Command::EigMember {
            common,
            f,
            lambda,
            tuple_file,
        } => {
            let fp = parse_poly(&f, common.nvars)?;
            let l = parse_rat(&lambda).map_err(|e| format!("lambda: {e}"))?;
            let x = read_tuple(&tuple_file)?;
            if x.d() != common.nvars {
                return Err(format!(
                    "tuple has {} matrices but nvars is {}",
                    x.d(),
                    common.nvars
                ));
            }
            let inputs = json!({
                "f": f,
                "lambda": lambda,
                "tuple_file": tuple_file,
                "nvars": common.nvars,
            });
            let member = eigenlevel::eig_member(&fp, &x, &l);
            let verdict = if member { "MEMBER" } else { "NOT_MEMBER" };
            let cert = json!({
                "char_poly": uni(&eigenlevel::char_poly(&eigenlevel::eval(&fp, &x))),
            });
            Ok((
                report("eig-member", inputs, common.seed, verdict, Some(cert), None),
                if member { 0 } else { 1 },
            ))
        }
        Command::DetProfile {
            common,
            f,
            g,
            size,
        } => {
            let fp = parse_poly(&f, common.nvars)?;
            let gp = parse_poly(&g, common.nvars)?;
            let inputs = json!({ "f": f, "g": g, "size": size, "nvars": common.nvars });
            let profile =
                eigenlevel::det_profile_equal(&fp, &gp, size, common.samples, common.seed);
            let evidence = profile.witness.as_ref().map(|(x, pf, pg)| {
                json!({
                    "tuple": x.mats().iter().map(matrix).collect::<Vec<_>>(),
                    "char_poly_f": uni(pf),
                    "char_poly_g": uni(pg),
                })
            });
            let verdict = if profile.equal { "EQUAL" } else { "DIFFERENT" };
            Ok((
                report(
                    "det-profile",
                    inputs,
                    common.seed,
                    verdict,
                    Some(json!({ "trials": profile.trials, "size": profile.n })),
                    evidence,
                ),
                if profile.equal { 0 } else { 1 },
            ))
        }
        Command::WqcClassify { common, expr } => {
            let f = parse_poly(&expr, common.nvars)?;
            if !quasiconvex::is_symmetric(&f) {
                return Err("weak quasiconvexity needs a symmetric polynomial".to_string());
            }
            if !f.constant_term().is_zero() {
                return Err("weak quasiconvexity needs a zero constant term".to_string());
            }
            let inputs = json!({ "expr": expr, "nvars": common.nvars });
            let verdict = quasiconvex::wqc_classify(&f, common.seed, common.samples.max(50));
            let (cert, evidence, code) = match &verdict {
                quasiconvex::WqcVerdict::Sohs { squares } => (
                    Some(json!({ "squares": weighted(squares) })),
                    None,
                    0,
                ),
                quasiconvex::WqcVerdict::CaseA { p, ell0, ells, mu } => (
                    Some(json!({
                        "p": uni(p),
                        "ell0": poly(ell0),
                        "ells": weighted(ells),
                        "mu": mu.as_ref().map(fmt_rat),
                    })),
                    None,
                    0,
                ),
                quasiconvex::WqcVerdict::CaseB { p, ell } => (
                    Some(json!({ "p": uni(p), "ell": poly(ell) })),
                    None,
                    0,
                ),
                quasiconvex::WqcVerdict::NotWqc { reason, witness } => {
                    let w = match witness {
                        quasiconvex::WqcWitness::Scalar(tau) => json!({
                            "point": tau.iter().map(fmt_rat).collect::<Vec<_>>(),
                        }),
                        quasiconvex::WqcWitness::Tuple(x) => json!({
                            "tuple": x.mats().iter().map(matrix).collect::<Vec<_>>(),
                        }),
                    };
                    (None, Some(json!({ "reason": reason, "witness": w })), 1)
                }
                quasiconvex::WqcVerdict::Inconclusive { trials, note } => (
                    None,
                    Some(json!({ "trials": trials, "note": note })),
                    2,
                ),
            };
            Ok((
                report(
                    "wqc-classify",
                    inputs,
                    common.seed,
                    verdict.label(),
                    cert,
                    evidence,
                ),
                code,
            ))
        }
        Command::Lmi { common, expr } => {
            let f = parse_poly(&expr, common.nvars)?;
            let inputs = json!({ "expr": expr, "nvars": common.nvars });
            match quasiconvex::concave_quad_decompose(&f) {
                Some(cq) => {
                    let pencil = quasiconvex::build_lmi(&cq.ell0, &cq.ells);
                    Ok((
                        report(
                            "lmi",
                            inputs,
                            common.seed,
                            "OK",
                            Some(json!({
                                "pencil": pencil.iter().map(matrix).collect::<Vec<_>>(),
                                "ell0": poly(&cq.ell0),
                                "ells": weighted(&cq.ells),
                            })),
                            None,
                        ),
                        0,
                    ))
                }
                None => Err(
                    "no concave quadratic decomposition: the input must be symmetric of \
                     degree at most 2 with positive semidefinite quadratic part"
                        .to_string(),
                ),
            }
        }
        Command::Eval { common, f, tuple_file } => {
            let fp = parse_poly(&f, common.nvars)?;
            let x = read_tuple(&tuple_file)?;
            if x.d() != common.nvars {
                return Err(format!(
                    "tuple has {} matrices but nvars is {}",
                    x.d(),
                    common.nvars
                ));
            }
            let inputs = json!({ "f": f, "tuple_file": tuple_file, "nvars": common.nvars });
            let value = eigenlevel::eval(&fp, &x);
            Ok((
                report(
                    "eval",
                    inputs,
                    common.seed,
                    "OK",
                    Some(json!({
                        "value": matrix(&value),
                        "char_poly": uni(&eigenlevel::char_poly(&value)),
                    })),
                    None,
                ),
                0,
            ))
        }
    }
}

/// Stable association, lifted from irreducibles to arbitrary inputs by
/// factoring both sides and greedily matching factors: every factor of one
/// side must pair with a distinct stably-associated factor of the other.
fn stable_assoc_report(
    inputs: Value,
    a: &NCPoly,
    b: &NCPoly,
    seed: u64,
    budget_level: u32,
) -> Result<(Value, i32), String> {
    let mut budget = Budget::from_level(budget_level);
    let fa = factor::factor(a, &mut budget).map_err(|e| format!("factoring f1: {}", e.0))?;
    let fb = factor::factor(b, &mut budget).map_err(|e| format!("factoring f2: {}", e.0))?;
    if fa.factors.len() != fb.factors.len() {
        let doc = report(
            "stable-assoc",
            inputs,
            seed,
            "NOT_ASSOCIATED",
            None,
            Some(json!({
                "reason": format!(
                    "different factor counts: {} vs {}",
                    fa.factors.len(),
                    fb.factors.len()
                ),
            })),
        );
        return Ok((doc, 1));
    }
    let mut used = vec![false; fb.factors.len()];
    let mut pairs = Vec::new();
    for (i, fi) in fa.factors.iter().enumerate() {
        let mut matched = None;
        for (j, gj) in fb.factors.iter().enumerate() {
            if used[j] {
                continue;
            }
            if let Some(w) = decide::stable_association(fi, gj) {
                used[j] = true;
                matched = Some((j, w));
                break;
            }
        }
        match matched {
            Some((j, w)) => pairs.push(json!({
                "factor_f1": poly(fi),
                "factor_f2": poly(&fb.factors[j]),
                "g1": poly(&w.g1),
                "g2": poly(&w.g2),
            })),
            None => {
                let doc = report(
                    "stable-assoc",
                    inputs,
                    seed,
                    "NOT_ASSOCIATED",
                    None,
                    Some(json!({
                        "reason": format!(
                            "factor {} of f1 has no stably associated partner",
                            i + 1
                        ),
                        "factor": poly(fi),
                    })),
                );
                return Ok((doc, 1));
            }
        }
    }
    let doc = report(
        "stable-assoc",
        inputs,
        seed,
        "STABLY_ASSOCIATED",
        Some(json!({ "pairs": pairs })),
        None,
    );
    Ok((doc, 0))
}
