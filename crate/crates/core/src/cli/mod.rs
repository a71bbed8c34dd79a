//! The `petal` command-line front end.
//!
//! ```text
//! petal [--format csv|json|svg] [--out PATH] [--samples N] [--tol X] <command>
//!   radius --class ID [--alpha A] [--beta B] [--k K] [--n N] [--c C] [--d D]
//!   boundary --curve gamma0..gamma7
//!   extremal --id ID (--coeffs N | --eval RE,IM)
//!   verify --scope all|radii|inclusions|geometry
//!   inclusion-geometry
//! ```
//!
//! Exit codes: 0 success, 1 a verification claim failed or a computation
//! broke down, 2 invalid arguments.

mod curves;
mod format;
mod svg;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::json;

pub use curves::Curve;
pub use format::num as format_number;

use crate::error::Error;
use crate::extremal::{cauchy_coefficients, f0_coefficients, ClosedForm, FunctionSpec};
use crate::kernel::ComplexValue;
use crate::petal::{inclusion_geometry, ConicSpec};
use crate::radii::{radius, radius_f, ClassId, NamedClass, RadiusResult, RatioClass};
use crate::verify::{run_suite, Scope, SuiteOptions};

#[derive(Debug, Parser)]
#[command(
    name = "petal",
    version,
    about = "Radius constants and geometry of the petal-shaped starlike class"
)]
pub struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output to PATH instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Boundary sample count.
    #[arg(long, global = true, default_value_t = 4096)]
    pub samples: usize,
    /// Oracle bisection tolerance.
    #[arg(long, global = true, default_value_t = 1e-6)]
    pub tol: f64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Radius constant for a class paired with the petal class.
    Radius(ClassArgs),
    /// Sample one of the curves gamma0..gamma7.
    Boundary {
        /// gamma0..gamma7, also accepted as γ0 or g0
        #[arg(long)]
        curve: String,
    },
    /// Taylor coefficients or point values of an extremal function.
    Extremal(ExtremalArgs),
    /// Run the verification suite.
    Verify {
        /// all, radii, inclusions or geometry
        #[arg(long, default_value = "all")]
        scope: String,
    },
    /// Thresholds and conics of the inclusion relations.
    InclusionGeometry,
}

#[derive(Debug, Args, Default)]
pub struct Params {
    /// Order parameter for s-alpha, k-alpha, cs-n and booth
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    /// Upper bound parameter for m-beta
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    /// Conic parameter for k-st
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<f64>,
    /// Fold count for s-n, cs-n, janowski and the ratio classes
    #[arg(long)]
    pub n: Option<u32>,
    /// Janowski parameter C
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<f64>,
    /// Janowski parameter D
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ClassArgs {
    /// s-alpha, m-beta, k-st, k-alpha, s-n, cs-n, janowski, lemniscate, rl,
    /// cardioid, exponential, crescent, booth, f, f1, f2, f3
    #[arg(long)]
    pub class: String,
    #[command(flatten)]
    pub params: Params,
}

#[derive(Debug, Args)]
pub struct ExtremalArgs {
    /// f0, table1-f1, table1-f2, table1-f3, lemniscate, rl, cardioid,
    /// exponential, crescent, booth, s-n, cs-n, f1, f2, f3, janowski
    #[arg(long)]
    pub id: String,
    /// Print the Taylor coefficients a_1..a_N.
    #[arg(long, conflicts_with = "eval")]
    pub coeffs: Option<usize>,
    /// Print f(z) and zf'(z)/f(z) at z = RE,IM.
    #[arg(long, allow_hyphen_values = true)]
    pub eval: Option<String>,
    #[command(flatten)]
    pub params: Params,
}

/// Failure of a command, mapped onto an exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) => 2,
            Self::Library(e) => match e {
                Error::Domain { .. }
                | Error::BranchCut { .. }
                | Error::Unknown { .. }
                | Error::Contract(_)
                | Error::Unsupported(_) => 2,
                _ => 1,
            },
            Self::Io(_) => 1,
        }
    }
}

/// Rendered output and the exit code it implies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub exit_code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, exit_code: 0 }
    }
}

fn need<T>(value: Option<T>, flag: &str, class: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("'{class}' requires --{flag}")))
}

fn class_from_args(id: &str, p: &Params) -> Result<ClassId, CliError> {
    let class = match id {
        "s-alpha" => ClassId::SAlpha {
            alpha: need(p.alpha, "alpha", id)?,
        },
        "m-beta" => ClassId::MBeta {
            beta: need(p.beta, "beta", id)?,
        },
        "k-st" => ClassId::KSt {
            k: need(p.k, "k", id)?,
        },
        "k-alpha" => ClassId::KAlpha {
            alpha: p.alpha.unwrap_or(0.0),
        },
        "s-n" => ClassId::Sn {
            n: p.n.unwrap_or(1),
        },
        "cs-n" => ClassId::CSn {
            n: p.n.unwrap_or(1),
            alpha: p.alpha.unwrap_or(0.0),
        },
        "janowski" => ClassId::JanowskiN {
            n: p.n.unwrap_or(1),
            c: need(p.c, "c", id)?,
            d: need(p.d, "d", id)?,
        },
        "lemniscate" => ClassId::Named(NamedClass::Lemniscate),
        "rl" => ClassId::Named(NamedClass::Rl),
        "cardioid" => ClassId::Named(NamedClass::Cardioid),
        "exponential" => ClassId::Named(NamedClass::Exponential),
        "crescent" => ClassId::Named(NamedClass::Crescent),
        "booth" => ClassId::Named(NamedClass::Booth {
            alpha: need(p.alpha, "alpha", id)?,
        }),
        "f" => ClassId::F,
        "f1" | "f2" | "f3" => ClassId::Ratio {
            kind: match id {
                "f1" => RatioClass::F1,
                "f2" => RatioClass::F2,
                _ => RatioClass::F3,
            },
            n: p.n.unwrap_or(1),
        },
        other => {
            return Err(Error::Unknown {
                kind: "class",
                name: other.to_string(),
            }
            .into())
        }
    };
    class.validate()?;
    Ok(class)
}

fn function_from_args(id: &str, p: &Params) -> Result<FunctionSpec, CliError> {
    let n = p.n.unwrap_or(1);
    let form = match id {
        "f0" => ClosedForm::F0Petal,
        "table1-f1" => ClosedForm::Table1F1,
        "table1-f2" => ClosedForm::Table1F2,
        "table1-f3" => ClosedForm::Table1F3,
        "lemniscate" => ClosedForm::LemniscateExt,
        "rl" => ClosedForm::RlExt,
        "cardioid" => ClosedForm::CardioidExt,
        "exponential" => ClosedForm::ExpExt,
        "crescent" => ClosedForm::CrescentExt,
        "booth" => ClosedForm::BoothExt {
            alpha: need(p.alpha, "alpha", id)?,
        },
        "s-n" => ClosedForm::SnExt { n },
        "cs-n" => ClosedForm::CsnExt {
            n,
            alpha: p.alpha.unwrap_or(0.0),
        },
        "f1" => ClosedForm::F1Pair { n },
        "f2" => ClosedForm::F2Pair { n },
        "f3" => ClosedForm::F3Pair { n },
        "janowski" => ClosedForm::JanowskiExt {
            n,
            c: need(p.c, "c", id)?,
            d: need(p.d, "d", id)?,
        },
        other => {
            return Err(Error::Unknown {
                kind: "function",
                name: other.to_string(),
            }
            .into())
        }
    };
    form.validate()?;
    Ok(form.into())
}

fn radius_json(r: &RadiusResult) -> serde_json::Value {
    json!({
        "class": r.subject().id(),
        "source": r.source_class.id(),
        "target": r.target_class.id(),
        "params": r.params,
        "value": r.value,
        "method": r.method,
        "sharp": r.sharp,
        "ref": r.reference,
    })
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn unsupported_format(cmd: &str, f: Format) -> CliError {
    CliError::Usage(format!("{cmd} does not support --format {f:?}").to_lowercase())
}

fn cmd_radius(args: &ClassArgs, format: Option<Format>) -> Result<Output, CliError> {
    let class = class_from_args(&args.class, &args.params)?;
    let result = match class {
        ClassId::F => radius_f(),
        other => radius(other)?,
    };
    let text = match format.unwrap_or(Format::Json) {
        Format::Json => pretty(&radius_json(&result)),
        Format::Csv => {
            let params: Vec<String> = result
                .params
                .iter()
                .map(|(k, v)| format!("{k}={}", format::num(*v)))
                .collect();
            format::csv(
                "class,params,value,method,sharp,ref",
                [vec![
                    result.subject().id().to_string(),
                    params.join(";"),
                    format::num(result.value),
                    serde_json::to_value(result.method)
                        .ok()
                        .and_then(|v| v.as_str().map(str::to_string))
                        .unwrap_or_default(),
                    result.sharp.to_string(),
                    result.reference.clone(),
                ]],
            )
        }
        f => return Err(unsupported_format("radius", f)),
    };
    Ok(Output::ok(text))
}

fn cmd_boundary(curve: &str, samples: usize, format: Option<Format>) -> Result<Output, CliError> {
    if samples < 4 {
        return Err(CliError::Usage(format!(
            "--samples must be at least 4, got {samples}"
        )));
    }
    let curve: Curve = curve.parse()?;
    let points = curve.sample(samples)?;
    let text = match format.unwrap_or(Format::Csv) {
        Format::Csv => format::csv(
            "theta_or_param,re,im",
            points
                .iter()
                .map(|(t, w)| vec![format::num(*t), format::num(w.re), format::num(w.im)]),
        ),
        Format::Json => {
            let rows: Vec<_> = points
                .iter()
                .map(|(t, w)| json!({"param": t, "re": w.re, "im": w.im}))
                .collect();
            pretty(&json!({"curve": format!("gamma{}", curve.index()), "points": rows}))
        }
        Format::Svg => {
            let petal: Vec<ComplexValue> = Curve::Petal
                .sample(samples)?
                .into_iter()
                .map(|(_, w)| w)
                .collect();
            let curve_pts: Vec<ComplexValue> = points.iter().map(|(_, w)| *w).collect();
            let mut layers = vec![svg::Layer {
                points: &petal,
                stroke: "black",
                closed: true,
            }];
            if curve != Curve::Petal {
                if curve == Curve::SectorRays {
                    let half = curve_pts.len() / 2;
                    layers.push(svg::Layer {
                        points: &curve_pts[..half],
                        stroke: "#c0392b",
                        closed: false,
                    });
                    layers.push(svg::Layer {
                        points: &curve_pts[half..],
                        stroke: "#c0392b",
                        closed: false,
                    });
                } else {
                    layers.push(svg::Layer {
                        points: &curve_pts,
                        stroke: "#c0392b",
                        closed: curve.is_closed(),
                    });
                }
            }
            svg::render(&layers)
        }
    };
    Ok(Output::ok(text))
}

/// All eight curves overlaid in one static SVG.
pub fn figure_svg(samples: usize) -> crate::Result<String> {
    const STROKES: [&str; 8] = [
        "black", "#2471a3", "#2471a3", "#c0392b", "#d68910", "#7d3c98", "#229954", "#229954",
    ];
    let sampled = Curve::ALL
        .iter()
        .map(|c| {
            Ok(c.sample(samples)?
                .into_iter()
                .map(|(_, w)| w)
                .collect::<Vec<_>>())
        })
        .collect::<crate::Result<Vec<_>>>()?;
    let mut layers = Vec::new();
    for ((curve, pts), stroke) in Curve::ALL.iter().zip(&sampled).zip(STROKES) {
        if *curve == Curve::SectorRays {
            let half = pts.len() / 2;
            layers.push(svg::Layer {
                points: &pts[..half],
                stroke,
                closed: false,
            });
            layers.push(svg::Layer {
                points: &pts[half..],
                stroke,
                closed: false,
            });
        } else {
            layers.push(svg::Layer {
                points: pts,
                stroke,
                closed: curve.is_closed(),
            });
        }
    }
    Ok(svg::render(&layers))
}

fn parse_point(s: &str) -> Result<ComplexValue, CliError> {
    let bad = || CliError::Usage(format!("--eval expects RE,IM, got '{s}'"));
    let (re, im) = s.split_once(',').ok_or_else(bad)?;
    let re: f64 = re.trim().parse().map_err(|_| bad())?;
    let im: f64 = im.trim().parse().map_err(|_| bad())?;
    Ok(ComplexValue::new(re, im))
}

fn cmd_extremal(args: &ExtremalArgs, format: Option<Format>) -> Result<Output, CliError> {
    let f = function_from_args(&args.id, &args.params)?;
    let format = format.unwrap_or(Format::Csv);
    if format == Format::Svg {
        return Err(unsupported_format("extremal", format));
    }
    if let Some(n) = args.coeffs {
        if n == 0 {
            return Err(CliError::Usage("--coeffs must be at least 1".into()));
        }
        let (exact, approx): (Option<Vec<String>>, Vec<f64>) = if args.id == "f0" {
            let s = f0_coefficients::<BigRational>(n)?;
            let approx = f0_coefficients::<f64>(n)?.into_coeffs();
            (
                Some(s.coeffs().iter().map(|c| c.to_string()).collect()),
                approx,
            )
        } else {
            (None, cauchy_coefficients(&f, n)?)
        };
        let text = match format {
            Format::Csv => match &exact {
                Some(ex) => format::csv(
                    "k,exact,value",
                    (1..=n).map(|k| vec![k.to_string(), ex[k].clone(), format::num(approx[k])]),
                ),
                None => format::csv(
                    "k,value",
                    (1..=n).map(|k| vec![k.to_string(), format::num(approx[k])]),
                ),
            },
            _ => pretty(&json!({
                "id": args.id,
                "exact": exact.map(|e| e[1..].to_vec()),
                "coefficients": approx[1..].to_vec(),
            })),
        };
        return Ok(Output::ok(text));
    }
    let Some(point) = &args.eval else {
        return Err(CliError::Usage(
            "extremal needs --coeffs N or --eval RE,IM".into(),
        ));
    };
    let z = parse_point(point)?;
    let w = f.evaluate(z)?;
    let q = f.log_derivative(z)?;
    let text = match format {
        Format::Csv => format::csv(
            "z_re,z_im,f_re,f_im,logderiv_re,logderiv_im",
            [[z.re, z.im, w.re, w.im, q.re, q.im]
                .map(format::num)
                .to_vec()],
        ),
        _ => pretty(&json!({
            "id": args.id,
            "z": [z.re, z.im],
            "f": [w.re, w.im],
            "log_derivative": [q.re, q.im],
        })),
    };
    Ok(Output::ok(text))
}

fn cmd_verify(scope: &str, cli: &Cli) -> Result<Output, CliError> {
    let scope: Scope = scope.parse()?;
    let opts = SuiteOptions {
        samples: cli.samples,
        r_tol: cli.tol,
        ..SuiteOptions::default()
    };
    let rows = run_suite(scope, &opts)?;
    let all_passed = rows.iter().all(|r| r.passed);
    let text = match cli.format.unwrap_or(Format::Csv) {
        Format::Csv => format::csv(
            "claim,claimed,oracle,diff,passed",
            rows.iter().map(|r| {
                vec![
                    r.claim.clone(),
                    format::num(r.claimed),
                    format::num(r.oracle),
                    format::num(r.abs_diff),
                    r.passed.to_string(),
                ]
            }),
        ),
        Format::Json => pretty(&serde_json::to_value(&rows).map_err(|e| {
            CliError::Library(Error::Computation(format!("cannot serialize reports: {e}")))
        })?),
        f => return Err(unsupported_format("verify", f)),
    };
    Ok(Output {
        text,
        exit_code: if all_passed { 0 } else { 1 },
    })
}

fn cmd_inclusion_geometry(format: Option<Format>) -> Result<Output, CliError> {
    let geo = inclusion_geometry();
    let ellipse = geo.ellipse_at(geo.k_min)?;
    let text = match format.unwrap_or(Format::Json) {
        Format::Json => {
            let mut v = serde_json::to_value(geo).map_err(|e| {
                CliError::Library(Error::Computation(format!(
                    "cannot serialize geometry: {e}"
                )))
            })?;
            v["ellipse_at_k_min"] = serde_json::to_value(ellipse).unwrap_or_default();
            pretty(&v)
        }
        Format::Csv => {
            let ConicSpec::Parabola {
                focus_param,
                vertex,
            } = geo.parabola
            else {
                unreachable!("inclusion geometry always carries a parabola")
            };
            let ConicSpec::Sector { half_angle } = geo.sector else {
                unreachable!("inclusion geometry always carries a sector")
            };
            let ConicSpec::Ellipse {
                center,
                semi_x,
                semi_y,
            } = ellipse
            else {
                unreachable!("ellipse_at returns an ellipse")
            };
            let rows = [
                ("alpha_max", geo.alpha_max),
                ("beta_min", geo.beta_min),
                ("k_min", geo.k_min),
                ("gamma_min", geo.gamma_min),
                ("tangent_param", geo.tangent_param),
                ("parabola_focus_param", focus_param),
                ("parabola_vertex", vertex),
                ("sector_half_angle", half_angle),
                ("ellipse_center", center),
                ("ellipse_semi_x", semi_x),
                ("ellipse_semi_y", semi_y),
            ];
            format::csv(
                "name,value",
                rows.iter()
                    .map(|(k, v)| vec![k.to_string(), format::num(*v)]),
            )
        }
        f => return Err(unsupported_format("inclusion-geometry", f)),
    };
    Ok(Output::ok(text))
}

/// Runs a parsed command and renders its output without writing it anywhere.
pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    if !(cli.tol > 0.0 && cli.tol < 0.5) {
        return Err(CliError::Usage(format!(
            "--tol must lie in (0, 0.5), got {}",
            cli.tol
        )));
    }
    match &cli.command {
        Command::Radius(args) => cmd_radius(args, cli.format),
        Command::Boundary { curve } => cmd_boundary(curve, cli.samples, cli.format),
        Command::Extremal(args) => cmd_extremal(args, cli.format),
        Command::Verify { scope } => cmd_verify(scope, cli),
        Command::InclusionGeometry => cmd_inclusion_geometry(cli.format),
    }
}

/// Parses `args`, runs the command, writes the output and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = execute(&cli).and_then(|out| {
        match &cli.out {
            Some(path) => std::fs::write(path, &out.text)?,
            None => std::io::stdout().lock().write_all(out.text.as_bytes())?,
        }
        Ok(out.exit_code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Result<Output, CliError> {
        let cli = Cli::try_parse_from(std::iter::once("petal").chain(args.iter().copied()))
            .map_err(|e| CliError::Usage(e.to_string()))?;
        execute(&cli)
    }

    #[test]
    fn radius_json_fields() {
        let out = run(&["radius", "--class", "lemniscate"]).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        assert!((v["value"].as_f64().unwrap() - 0.985_928).abs() < 1e-6);
        assert_eq!(v["class"], "lemniscate");
        assert_eq!(v["method"], "closed_form");
        for key in ["params", "sharp", "ref"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        let k = run(&["radius", "--class", "k-st", "--k", "1"]).unwrap();
        assert!(k.text.contains("0.52109530549"));
        let b = run(&["radius", "--class", "booth", "--alpha", "0"]).unwrap();
        assert!(b.text.contains("0.881373587"));
    }

    #[test]
    fn radius_usage_errors() {
        let e = run(&["radius", "--class", "nope"]).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        let e = run(&["radius", "--class", "s-alpha"]).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        let e = run(&["radius", "--class", "s-alpha", "--alpha", "1.5"]).unwrap_err();
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn boundary_rows() {
        let out = run(&["boundary", "--curve", "gamma0", "--samples", "4"]).unwrap();
        let lines: Vec<&str> = out.text.lines().collect();
        assert_eq!(lines[0], "theta_or_param,re,im");
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[1], "0,1.88137358702,0");
        let svg = run(&["boundary", "--curve", "gamma4", "--format", "svg"]).unwrap();
        assert!(svg.text.starts_with("<svg"));
    }

    #[test]
    fn extremal_outputs() {
        let out = run(&["extremal", "--id", "f0", "--coeffs", "6"]).unwrap();
        let exact: Vec<&str> = out
            .text
            .lines()
            .skip(1)
            .map(|l| l.split(',').nth(1).unwrap())
            .collect();
        assert_eq!(exact, ["1", "1", "1/2", "1/9", "-1/72", "-1/225"]);
        let f2 = run(&["extremal", "--id", "table1-f2", "--eval", "0.5,0"]).unwrap();
        assert!(f2.text.lines().nth(1).unwrap().starts_with("0.5,0,0.55,0,"));
        let zero = run(&["extremal", "--id", "f0", "--eval", "0,0"]).unwrap();
        assert_eq!(zero.text.lines().nth(1).unwrap(), "0,0,0,0,1,0");
        let e = run(&["extremal", "--id", "f0", "--eval", "1,0"]).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        let neg = run(&["extremal", "--id", "f0", "--eval", "-0.3,0.2"]).unwrap();
        assert_eq!(neg.exit_code, 0);
    }

    #[test]
    fn verify_inclusions() {
        let out = run(&["verify", "--scope", "inclusions"]).unwrap();
        assert_eq!(out.exit_code, 0);
        assert_eq!(out.text.lines().count(), 6);
        assert!(run(&["verify", "--scope", "bogus"]).is_err());
    }

    #[test]
    fn inclusion_geometry_csv() {
        let out = run(&["inclusion-geometry", "--format", "csv"]).unwrap();
        assert!(out.text.contains("k_min,2.13459265711"));
    }
}
