use std::ffi::OsString;
use std::io::Read;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use super::parse::{parse_map, parse_polynomial};
use super::render::{render_diagram, Format};
use crate::bounds::{collapse_to_two_vars, pullback_compose, verify_bound, BoundObject, BoundReport};
use crate::constructions::{
    dkr_sharp_2d, faran_cubics, filledsharp_search, sharp_extend, whitney, Extender,
};
use crate::diagram::NewtonDiagram;
use crate::enumeration::{exhaustive_bound_verify, Theorem};
use crate::error::{Error, Result};
use crate::poly::{class_membership, divide_by_s, homogenize_and_flip, MultiIndex, Polynomial, VarStyle};
use crate::quadrics::{map_of_positive_polynomial, positive_polynomial_of_map, real_polynomial_of_map, verify_quadric_map};
use crate::transforms::{fill_level_2d, reduce_3d_step, Metric, ReduceStep, TransformReceipt};

#[derive(Parser, Debug)]
#[command(name = "sharpdeg", about = "Newton diagrams, degree bounds and monomial hyperquadric maps")]
pub struct Cli {
    /// Emit transform receipts.
    #[arg(long, global = true)]
    pub trace: bool,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Class membership and diagram statistics of a polynomial.
    Analyze {
        poly: String,
        /// Also write the diagram as JSON to this path.
        #[arg(long)]
        emit_diagram: Option<String>,
    },
    /// Build a member of a sharp family.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Check every applicable degree bound for a polynomial or a `map ...`.
    VerifyBounds { object: String },
    /// Exhaustive sweep for a node-count theorem (T3.4 or T5.2).
    Enumerate {
        theorem: String,
        #[arg(long, default_value_t = 3)]
        dmax: u32,
        /// Allow the slow sizes.
        #[arg(long)]
        long_running: bool,
    },
    /// Draw a diagram JSON file (`-` reads stdin).
    Render {
        file: String,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Map to real polynomial, or positive polynomial to sphere map.
    Convert { object: String },
}

#[derive(Subcommand, Debug)]
pub enum Family {
    /// Whitney-type member in `n` variables of degree `d`.
    Whitney {
        n: usize,
        d: u32,
        /// Comma separated monomials replaced at each step, e.g. "x3,x1 x3".
        #[arg(long)]
        choices: Option<String>,
    },
    /// The two-variable cubic.
    Faran2,
    /// The three-variable cubic with seven terms.
    Faran3,
    /// Two-variable sharp member of odd degree `d`.
    Dkr { d: u32 },
    /// Replace the degree-d term `m` of `p` by `m g`.
    Extend {
        poly: String,
        monomial: String,
        /// `s`, or `faran3` optionally followed by a permutation such as `faran3:210`.
        #[arg(default_value = "s")]
        with: String,
    },
    /// Sharp three-variable members with maximal support.
    Filledsharp {
        d: u32,
        #[arg(long)]
        long_running: bool,
    },
}

/// Run with the given arguments and return the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let mut out = String::new();
    let code = match dispatch(&cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            if cli.json {
                println!("{}", json!({ "error": e.to_string(), "exit_code": e.exit_code() }));
            } else {
                eprintln!("error: {e}");
            }
            return e.exit_code();
        }
    };
    print!("{out}");
    code
}

fn emit(cli: &Cli, out: &mut String, value: Value, text: String) {
    if cli.json {
        out.push_str(&serde_json::to_string_pretty(&value).expect("json"));
        out.push('\n');
    } else {
        out.push_str(&text);
    }
}

fn dispatch(cli: &Cli, out: &mut String) -> Result<i32> {
    match &cli.command {
        Command::Analyze { poly, emit_diagram } => analyze(cli, out, poly, emit_diagram.as_deref()),
        Command::Generate { family } => generate(cli, out, family),
        Command::VerifyBounds { object } => verify(cli, out, object),
        Command::Enumerate { theorem, dmax, long_running } => {
            let th: Theorem = theorem.parse()?;
            let cert = exhaustive_bound_verify(th, *dmax, *long_running)?;
            let mut text = format!("{} sweep\n  d  supports  min  bound\n", th.tag());
            for l in &cert.levels {
                text.push_str(&format!("{:>3} {:>9} {:>4} {:>6}\n", l.d, l.support_count, l.min_nodes, l.bound));
            }
            text.push_str(if cert.holds() { "holds\n" } else { "VIOLATED\n" });
            emit(cli, out, serde_json::to_value(&cert).expect("json"), text);
            Ok(if cert.holds() { 0 } else { 1 })
        }
        Command::Render { file, format } => {
            let text = if file == "-" {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Input(e.to_string()))?;
                s
            } else {
                std::fs::read_to_string(file).map_err(|e| Error::Input(format!("{file}: {e}")))?
            };
            let v: Value = serde_json::from_str(&text).map_err(|e| Error::Input(e.to_string()))?;
            let diag = NewtonDiagram::from_json(&v)?;
            let pic = render_diagram(&diag, *format)?;
            emit(cli, out, json!({ "format": format!("{format:?}").to_lowercase(), "output": pic }), pic.clone());
            Ok(0)
        }
        Command::Convert { object } => convert(cli, out, object),
    }
}

fn analyze(cli: &Cli, out: &mut String, text: &str, emit_diagram: Option<&str>) -> Result<i32> {
    let p = parse_polynomial(text)?;
    let n = p.n_vars();
    let rep = class_membership(&p, n);
    let mut value = json!({ "polynomial": p, "class": rep });
    let mut lines = vec![
        format!("polynomial: {p}"),
        format!("n = {n}, degree = {}, N(p) = {}", rep.degree, rep.monomial_count),
        format!("in SI: {}, in SH: {}", rep.in_i, rep.in_h),
    ];
    if rep.in_i {
        let big_p = homogenize_and_flip(&p)?;
        let q = divide_by_s(&big_p)?;
        let diag = NewtonDiagram::of(&q, rep.degree)?;
        let support = diag.support();
        let mut stats = json!({
            "points": diag.len(),
            "nodes": diag.node_count(),
            "support_size": support.size()?,
            "connected": support.is_connected(),
            "p_degree": rep.p_degree,
            "N(P)": rep.projective_count,
        });
        lines.push(format!("P = {big_p}"));
        lines.push(format!("Q = {q}"));
        lines.push(format!(
            "diagram: {} points, {} nodes, support size {}, connected {}",
            diag.len(),
            diag.node_count(),
            support.size()?,
            support.is_connected()
        ));
        if n == 2 {
            let sc = diag.weighted_surface_count_2d()?;
            stats["SC"] = json!(sc.to_string());
            lines.push(format!("SC = {sc}"));
        }
        if n == 2 || n == 3 {
            let oh = support.has_overhang()?;
            stats["overhang"] = json!(oh);
            lines.push(format!("overhang: {}", oh.map_or("none".to_string(), |m| format!("{m:?}"))));
        }
        if n <= 3 {
            lines.push(render_diagram(&diag, Format::Ascii)?.trim_end().to_string());
        }
        value["diagram"] = diag.to_json();
        value["stats"] = stats;
        if let Some(path) = emit_diagram {
            std::fs::write(path, serde_json::to_string_pretty(&diag.to_json()).expect("json"))
                .map_err(|e| Error::Input(format!("{path}: {e}")))?;
        }
        if cli.trace {
            let receipts = trace_receipts(&diag)?;
            for r in &receipts {
                lines.push(format!(
                    "receipt {}: {:?} {} -> {} (change {}, bound {})",
                    r.op, r.metric, r.metric_before, r.metric_after, r.delta_actual, r.delta_bound
                ));
            }
            value["receipts"] = serde_json::to_value(&receipts).expect("json");
        }
    }
    lines.push(String::new());
    emit(cli, out, value, lines.join("\n"));
    Ok(0)
}

/// Level fills in two variables, the reduction chain in three.
fn trace_receipts(diag: &NewtonDiagram) -> Result<Vec<TransformReceipt>> {
    let mut receipts = Vec::new();
    match diag.n() {
        2 => {
            let mut cur = diag.clone();
            for k in 0..diag.d() {
                match fill_level_2d(&cur, k, Metric::Sc) {
                    Ok(r) => {
                        cur = r.after.clone();
                        receipts.push(r);
                    }
                    Err(Error::Precondition(_)) => {}
                    Err(e) => return Err(e),
                }
            }
        }
        3 if diag.support().is_connected() => {
            let mut cur = diag.clone();
            for _ in 0..64 {
                match reduce_3d_step(&cur) {
                    Ok(ReduceStep::SliceOffFace { receipt, .. }) | Ok(ReduceStep::FillLevel { receipt, .. }) => {
                        cur = receipt.after.clone();
                        receipts.push(receipt);
                    }
                    Ok(ReduceStep::Terminal) | Err(Error::Precondition(_)) => break,
                    Err(e) => return Err(e),
                }
            }
        }
        _ => {}
    }
    Ok(receipts)
}

fn parse_monomial(text: &str, n: usize) -> Result<MultiIndex> {
    let m = super::parse::parse_polynomial_with(text, Some(n))?;
    match m.leading_term() {
        Some((e, _)) if m.term_count() == 1 => Ok(e.clone()),
        _ => Err(Error::Input(format!("{text:?} is not a single monomial"))),
    }
}

fn generate(cli: &Cli, out: &mut String, family: &Family) -> Result<i32> {
    let polys: Vec<Polynomial> = match family {
        Family::Whitney { n, d, choices } => {
            let parsed = match choices {
                Some(c) => Some(c.split(',').map(|m| parse_monomial(m.trim(), *n)).collect::<Result<Vec<_>>>()?),
                None => None,
            };
            vec![whitney(*n, *d, parsed.as_deref())?]
        }
        Family::Faran2 => vec![faran_cubics().0],
        Family::Faran3 => vec![faran_cubics().1],
        Family::Dkr { d } => vec![dkr_sharp_2d(*d)?],
        Family::Extend { poly, monomial, with } => {
            let p = parse_polynomial(poly)?;
            let m = parse_monomial(monomial, p.n_vars())?;
            let g = parse_extender(with)?;
            vec![sharp_extend(&p, &m, g)?]
        }
        Family::Filledsharp { d, long_running } => {
            let res = filledsharp_search(*d, *long_running)?;
            let mut text = format!("{} result(s) at d = {d}\n", res.results.len());
            for p in &res.results {
                text.push_str(&format!("{p}\n"));
            }
            emit(cli, out, serde_json::to_value(&res).expect("json"), text);
            return Ok(0);
        }
    };
    let text: String = polys.iter().map(|p| format!("{p}\n")).collect();
    let value = json!(polys
        .iter()
        .map(|p| json!({ "polynomial": p, "class": class_membership(p, p.n_vars()) }))
        .collect::<Vec<_>>());
    emit(cli, out, value, text);
    Ok(0)
}

fn parse_extender(text: &str) -> Result<Extender> {
    match text {
        "s" => Ok(Extender::S),
        "faran3" => Ok(Extender::Faran3([0, 1, 2])),
        t if t.starts_with("faran3:") => {
            let digits: Vec<usize> = t[7..].chars().filter_map(|c| c.to_digit(10).map(|d| d as usize)).collect();
            let mut sorted = digits.clone();
            sorted.sort();
            if sorted != [0, 1, 2] {
                return Err(Error::Input(format!("{t:?}: expected a permutation of 012")));
            }
            Ok(Extender::Faran3([digits[0], digits[1], digits[2]]))
        }
        t => Err(Error::Input(format!("unknown extender {t:?}; expected s or faran3[:perm]"))),
    }
}

fn report_text(r: &BoundReport) -> String {
    let mut s = format!("n = {}, N = {}, degree = {}\n", r.n, r.term_count, r.actual_degree);
    s.push_str("tag       bound    formula                  licence      ok    sharp\n");
    for c in &r.checks {
        s.push_str(&format!(
            "{:<9} {:<8} {:<24} {:<12} {:<5} {}\n",
            c.bound.tag,
            c.bound.value.to_string(),
            c.bound.formula,
            format!("{:?}", c.licence).to_lowercase(),
            c.satisfied,
            c.sharp
        ));
    }
    for n in &r.notes {
        s.push_str(&format!("note: {n}\n"));
    }
    s
}

fn verify(cli: &Cli, out: &mut String, object: &str) -> Result<i32> {
    let trimmed = object.trim_start();
    let (report, mut value, mut text) = if trimmed.starts_with("map") {
        let f = parse_map(trimmed)?;
        let r = verify_bound(&BoundObject::Map(f))?;
        let t = report_text(&r);
        (r.clone(), json!({ "report": r }), t)
    } else {
        let p = parse_polynomial(trimmed)?;
        let r = verify_bound(&BoundObject::Polynomial(p.clone()))?;
        let mut t = report_text(&r);
        let mut v = json!({ "report": r });
        // the homogeneous reductions, when they apply
        let big_p = if p.style() == VarStyle::Projective && p.is_homogeneous() { p.clone() } else { homogenize_and_flip(&p)? };
        if big_p.n_vars() >= 4 {
            match pullback_compose(&big_p) {
                Ok(res) => {
                    t.push_str(&format!("pullback: {} (p-degree {} >= {})\n", res.composed, res.accounting.composed_p_degree, res.accounting.degree_lower_bound));
                    v["pullback"] = serde_json::to_value(&res).expect("json");
                }
                Err(e @ Error::Contradiction(_)) => return Err(e),
                Err(e) => t.push_str(&format!("pullback skipped: {e}\n")),
            }
        }
        if big_p.n_vars() >= 3 {
            match collapse_to_two_vars(&big_p) {
                Ok(res) => {
                    t.push_str(&format!("collapse: {} (p-degree {})\n", res.collapsed, res.collapsed_p_degree));
                    v["collapse"] = serde_json::to_value(&res).expect("json");
                }
                Err(e @ Error::Contradiction(_)) => return Err(e),
                Err(e) => t.push_str(&format!("collapse skipped: {e}\n")),
            }
        }
        (r, v, t)
    };
    let violations = report.violations().len();
    value["violations"] = json!(violations);
    if violations > 0 {
        text.push_str(&format!("{violations} bound(s) VIOLATED\n"));
    }
    emit(cli, out, value, text);
    Ok(if violations > 0 { 1 } else { 0 })
}

fn convert(cli: &Cli, out: &mut String, object: &str) -> Result<i32> {
    let trimmed = object.trim_start();
    if trimmed.starts_with("map") {
        let f = parse_map(trimmed)?;
        let real = real_polynomial_of_map(&f);
        let ok = verify_quadric_map(&f);
        let mut text = format!("real polynomial: {real}\nvanishes on the source form: {ok}\n");
        let mut value = json!({ "map": f, "real_polynomial": real, "verified": ok });
        if let Ok(p) = positive_polynomial_of_map(&f) {
            text.push_str(&format!("affine polynomial: {p}\n"));
            value["affine_polynomial"] = json!(p);
        }
        emit(cli, out, value, text);
        Ok(0)
    } else {
        let p = parse_polynomial(trimmed)?;
        let f = map_of_positive_polynomial(&p)?;
        emit(cli, out, json!({ "map": f, "text": f.to_string() }), format!("{f}\n"));
        Ok(0)
    }
}
