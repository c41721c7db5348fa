//! Command-line front end: `solve`, `split-system`, `oracle`, `bench`.
//!
//! Exit codes: 0 success, 2 input error (parse failure, bad flags), 3 degree
//! outside what the command supports.

mod bench;
pub mod record;

use std::io::{BufRead, Write};

use clap::{Args, Parser, Subcommand};

use crate::oracle::{find_roots, max_pair_distance, OracleConfig};
use crate::parser::{parse_with_variable, ParseError, ParsedPolynomial};
use crate::poly::{depress_cubic, depress_quartic, RealPolynomial, RootSet};
use crate::split::{
    cubic_naive_split_residual, cubic_omega_split_residual, naive_cubic_reduction,
    quadratic_split_residual, quartic_resolvent, quartic_split_residual, solve, SolveError,
    SplitAnsatz,
};
use record::{
    root_records, DepressedRecord, Diagnostics, Method, OracleSummary, OutputRecord,
    PolynomialEcho, SplitRecord, SplitSystemRecord,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DEGREE: i32 = 3;

pub const DEFAULT_TOLERANCE: f64 = 1e-8;

pub const NAIVE_SIGN_NOTE: &str = "the naive imaginary equation is written y^3 - 3x^2 y - a y, \
     which is -Im(z^3 + a z + b); the sign flip does not change where it vanishes";

#[derive(Debug, Parser)]
#[command(
    name = "splitroots",
    version,
    about = "Closed-form roots of real polynomials of degree 1-4 by real/imaginary splitting"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Relative residual threshold used when flagging roots in reports.
    #[arg(long, global = true, default_value = "1e-8", value_name = "REAL")]
    pub tolerance: f64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve a polynomial of degree 1-4 in closed form.
    Solve(SolveArgs),
    /// Evaluate the split real/imaginary system at a point.
    SplitSystem(SplitArgs),
    /// Solve with the iterative oracle only (any degree >= 1).
    Oracle(ExprArg),
    /// Time the closed-form solver against the oracle.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct ExprArg {
    /// Polynomial such as "z^3 - 7z + 6"; omit or pass "-" to read one per line from stdin.
    #[arg(allow_hyphen_values = true)]
    pub expr: Option<String>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub expr: ExprArg,
    /// Include depressed coefficients, the quartic resolvent and split residuals.
    #[arg(long)]
    pub show_depressed: bool,
    /// Also run the oracle and report the largest root pairing distance.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Args)]
pub struct SplitArgs {
    #[command(flatten)]
    pub expr: ExprArg,
    /// Real coordinate of the evaluation point.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub x: f64,
    /// Second coordinate: the imaginary part, or the omega coefficient for cubics.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub y: f64,
    /// Remove the second-highest term of a cubic or quartic first.
    #[arg(long)]
    pub auto_depress: bool,
    /// Print the naive cubic reduction or the quartic resolvent.
    #[arg(long)]
    pub reduce: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Polynomials per degree.
    #[arg(long, default_value_t = 10_000)]
    pub n: usize,
    /// Restrict to one degree (2, 3 or 4).
    #[arg(long)]
    pub degree: Option<usize>,
    #[arg(long, default_value_t = crate::corpus::DEFAULT_SEED)]
    pub seed: u64,
}

/// Runs the CLI with explicit streams and returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let ctx = Context {
        json: cli.json,
        tolerance: cli.tolerance,
    };
    let result = match &cli.command {
        Command::Solve(a) => {
            for_each_expr(&a.expr, stdin, out, err, |e, o, w| ctx.solve(a, e, o, w))
        }
        Command::SplitSystem(a) => for_each_expr(&a.expr, stdin, out, err, |e, o, w| {
            ctx.split_system(a, e, o, w)
        }),
        Command::Oracle(a) => for_each_expr(a, stdin, out, err, |e, o, w| ctx.oracle(e, o, w)),
        Command::Bench(a) => bench::run(a, ctx.json, out, err),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e}");
        EXIT_INPUT
    })
}

type CmdResult = std::io::Result<i32>;

fn for_each_expr<F>(
    arg: &ExprArg,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
    mut f: F,
) -> CmdResult
where
    F: FnMut(&str, &mut dyn Write, &mut dyn Write) -> CmdResult,
{
    match arg.expr.as_deref() {
        Some(e) if e != "-" => f(e, out, err),
        _ => {
            let mut code = EXIT_OK;
            let mut first = true;
            for line in stdin.lines() {
                let line = line?;
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                if !first {
                    writeln!(out)?;
                }
                first = false;
                code = code.max(f(line, out, err)?);
            }
            Ok(code)
        }
    }
}

struct Context {
    json: bool,
    tolerance: f64,
}

fn report_parse_error(e: &ParseError, source: &str, err: &mut dyn Write) -> CmdResult {
    writeln!(err, "error: {e}")?;
    for line in e.render(source).lines() {
        writeln!(err, "  {line}")?;
    }
    Ok(EXIT_INPUT)
}

fn parse_or_report(expr: &str, err: &mut dyn Write) -> Result<ParsedPolynomial, CmdResult> {
    parse_with_variable(expr).map_err(|e| report_parse_error(&e, expr, err))
}

fn unsupported_degree(degree: usize, err: &mut dyn Write) -> CmdResult {
    if degree == 0 {
        writeln!(
            err,
            "error: degree 0 is not supported: a nonzero constant has no roots"
        )?;
    } else {
        writeln!(err, "error: {}", SolveError::UnsupportedDegree { degree })?;
    }
    Ok(EXIT_DEGREE)
}

fn write_json<T: serde::Serialize>(value: &T, out: &mut dyn Write) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

fn fmt_root(re: f64, im: f64) -> String {
    let sign = if im < 0.0 { '-' } else { '+' };
    format!("{re:>17.12} {sign} {:.12}i", im.abs())
}

fn write_roots(record: &OutputRecord, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "polynomial: {}", record.polynomial.text)?;
    writeln!(out, "method: {}", record.method.as_str())?;
    writeln!(out, "roots:")?;
    for r in &record.roots {
        let flag = if r.within_tolerance {
            ""
        } else {
            "  (exceeds tolerance)"
        };
        writeln!(
            out,
            "  {}  residual {:.3e}  {}{flag}",
            fmt_root(r.re, r.im),
            r.residual,
            r.branch_tag
        )?;
    }
    Ok(())
}

/// Split residuals of each root of `p` against its depressed form.
fn split_diagnostics(p: &RealPolynomial, set: &RootSet, order: &[usize]) -> Diagnostics {
    let m = p.monic();
    match p.degree() {
        2 => Diagnostics {
            depressed_coefficients: None,
            resolvent_coefficients: None,
            split_residuals: order
                .iter()
                .map(|&i| {
                    let z = set.roots[i];
                    let r = quadratic_split_residual(m.coeff(1), m.coeff(0), z.re, z.im);
                    SplitRecord::new("quadratic-xiy", z.re, z.im, r)
                })
                .collect(),
        },
        3 => {
            let dc = depress_cubic(&m).expect("degree 3");
            let ansatz = SplitAnsatz::OMEGA;
            Diagnostics {
                depressed_coefficients: Some(dc.into()),
                resolvent_coefficients: None,
                split_residuals: order
                    .iter()
                    .map(|&i| {
                        let (x, y) = ansatz.decompose(set.roots[i] + dc.shift);
                        let r = cubic_omega_split_residual(dc.a, dc.b, x, y);
                        SplitRecord::new("cubic-omega", x, y, r)
                    })
                    .collect(),
            }
        }
        4 => {
            let dq = depress_quartic(&m).expect("degree 4");
            Diagnostics {
                depressed_coefficients: Some(dq.into()),
                resolvent_coefficients: Some(quartic_resolvent(&dq)),
                split_residuals: order
                    .iter()
                    .map(|&i| {
                        let z = set.roots[i] + dq.shift;
                        let r = quartic_split_residual(dq.a, dq.b, dq.c, z.re, z.im);
                        SplitRecord::new("quartic-xiy", z.re, z.im, r)
                    })
                    .collect(),
            }
        }
        _ => Diagnostics {
            depressed_coefficients: None,
            resolvent_coefficients: None,
            split_residuals: Vec::new(),
        },
    }
}

fn write_diagnostics(d: &Diagnostics, out: &mut dyn Write) -> std::io::Result<()> {
    match d.depressed_coefficients {
        Some(DepressedRecord {
            a,
            b,
            c: Some(c),
            shift,
        }) => writeln!(
            out,
            "depressed: z^4 + a z^2 + b z + c with a = {a}, b = {b}, c = {c}, shift = {shift}"
        )?,
        Some(DepressedRecord {
            a,
            b,
            c: None,
            shift,
        }) => writeln!(
            out,
            "depressed: z^3 + a z + b with a = {a}, b = {b}, shift = {shift}"
        )?,
        None => writeln!(out, "depressed: not applicable below degree 3")?,
    }
    if let Some(r) = d.resolvent_coefficients {
        writeln!(
            out,
            "resolvent in t = x^2: ({}, {}, {}, {})",
            r[0],
            r[1] + 0.0,
            r[2] + 0.0,
            r[3] + 0.0
        )?;
    }
    writeln!(out, "split residuals:")?;
    for s in &d.split_residuals {
        writeln!(
            out,
            "  {:<12} x = {:>17.12}  y = {:>17.12}  real {:.3e}  imag {:.3e}",
            s.system,
            s.x + 0.0,
            s.y + 0.0,
            s.real_part,
            s.imag_part
        )?;
    }
    Ok(())
}

impl Context {
    fn solve(
        &self,
        args: &SolveArgs,
        expr: &str,
        out: &mut dyn Write,
        err: &mut dyn Write,
    ) -> CmdResult {
        let parsed = match parse_or_report(expr, err) {
            Ok(p) => p,
            Err(code) => return code,
        };
        let p = parsed.polynomial;
        let set = match solve(&p) {
            Ok(s) => s,
            Err(_) => return unsupported_degree(p.degree(), err),
        };
        let tags: Vec<String> = set.branch_tags.iter().map(|t| t.to_string()).collect();
        let (order, roots) = root_records(&p, &set, &tags, self.tolerance);
        let diagnostics = args
            .show_depressed
            .then(|| split_diagnostics(&p, &set, &order));
        let oracle = if args.oracle {
            let res = find_roots(&p, &OracleConfig::default()).expect("degree >= 1");
            let dist = max_pair_distance(&set.roots, &res.roots).expect("equal lengths");
            Some(OracleSummary {
                converged: res.converged,
                iterations_used: res.iterations_used,
                max_pair_distance: Some(dist),
            })
        } else {
            None
        };
        let record = OutputRecord {
            polynomial: PolynomialEcho::new(&p, parsed.variable.unwrap_or('z')),
            method: Method::SplitClosedForm,
            residual_tolerance: self.tolerance,
            roots,
            diagnostics,
            oracle,
        };
        if self.json {
            write_json(&record, out)?;
            return Ok(EXIT_OK);
        }
        write_roots(&record, out)?;
        if let Some(d) = &record.diagnostics {
            write_diagnostics(d, out)?;
        }
        if let Some(o) = &record.oracle {
            writeln!(
                out,
                "oracle: converged = {}, iterations = {}, max pairing distance = {:.3e}",
                o.converged,
                o.iterations_used,
                o.max_pair_distance.unwrap_or(0.0)
            )?;
        }
        Ok(EXIT_OK)
    }

    fn oracle(&self, expr: &str, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
        let parsed = match parse_or_report(expr, err) {
            Ok(p) => p,
            Err(code) => return code,
        };
        let p = parsed.polynomial;
        if p.degree() == 0 {
            return unsupported_degree(0, err);
        }
        let res = find_roots(&p, &OracleConfig::default()).expect("degree >= 1");
        let set = RootSet {
            residuals: res.roots.iter().map(|&z| p.evaluate(z).abs()).collect(),
            roots: res.roots.clone(),
            branch_tags: Vec::new(),
        };
        let tags = vec!["oracle".to_string(); set.len()];
        let (_, roots) = root_records(&p, &set, &tags, self.tolerance);
        let record = OutputRecord {
            polynomial: PolynomialEcho::new(&p, parsed.variable.unwrap_or('z')),
            method: Method::Oracle,
            residual_tolerance: self.tolerance,
            roots,
            diagnostics: None,
            oracle: Some(OracleSummary {
                converged: res.converged,
                iterations_used: res.iterations_used,
                max_pair_distance: None,
            }),
        };
        if self.json {
            write_json(&record, out)?;
        } else {
            write_roots(&record, out)?;
            writeln!(
                out,
                "oracle: converged = {}, iterations = {}",
                res.converged, res.iterations_used
            )?;
        }
        Ok(EXIT_OK)
    }

    fn split_system(
        &self,
        args: &SplitArgs,
        expr: &str,
        out: &mut dyn Write,
        err: &mut dyn Write,
    ) -> CmdResult {
        let parsed = match parse_or_report(expr, err) {
            Ok(p) => p,
            Err(code) => return code,
        };
        let p = parsed.polynomial;
        let degree = p.degree();
        if !(2..=4).contains(&degree) {
            return unsupported_degree(degree, err);
        }
        let m = p.monic();
        if degree >= 3 && m.coeff(degree - 1) != 0.0 && !args.auto_depress {
            writeln!(
                err,
                "error: the degree-{} term is nonzero; pass --auto-depress to remove it first",
                degree - 1
            )?;
            return Ok(EXIT_INPUT);
        }
        let (x, y) = (args.x, args.y);
        let mut record = SplitSystemRecord {
            polynomial: PolynomialEcho::new(&p, parsed.variable.unwrap_or('z')),
            depressed: None,
            x,
            y,
            systems: Vec::new(),
            naive_reduction: None,
            resolvent_coefficients: None,
            note: None,
        };
        match degree {
            2 => {
                let r = quadratic_split_residual(m.coeff(1), m.coeff(0), x, y);
                record
                    .systems
                    .push(SplitRecord::new("quadratic-xiy", x, y, r));
            }
            3 => {
                let dc = depress_cubic(&m).expect("degree 3");
                if args.auto_depress {
                    record.depressed = Some(dc.into());
                }
                let naive = cubic_naive_split_residual(dc.a, dc.b, x, y);
                let omega = cubic_omega_split_residual(dc.a, dc.b, x, y);
                record
                    .systems
                    .push(SplitRecord::new("cubic-naive-xiy", x, y, naive));
                record
                    .systems
                    .push(SplitRecord::new("cubic-omega", x, y, omega));
                record.note = Some(NAIVE_SIGN_NOTE.to_string());
                if args.reduce {
                    record.naive_reduction = Some(naive_cubic_reduction(dc.a, dc.b));
                }
            }
            _ => {
                let dq = depress_quartic(&m).expect("degree 4");
                if args.auto_depress {
                    record.depressed = Some(dq.into());
                }
                let r = quartic_split_residual(dq.a, dq.b, dq.c, x, y);
                record
                    .systems
                    .push(SplitRecord::new("quartic-xiy", x, y, r));
                if args.reduce {
                    record.resolvent_coefficients = Some(quartic_resolvent(&dq));
                }
            }
        }
        if self.json {
            write_json(&record, out)?;
            return Ok(EXIT_OK);
        }
        writeln!(out, "polynomial: {}", record.polynomial.text)?;
        if let Some(d) = record.depressed {
            match d.c {
                Some(c) => writeln!(
                    out,
                    "depressed: a = {}, b = {}, c = {c}, shift = {}",
                    d.a, d.b, d.shift
                )?,
                None => writeln!(
                    out,
                    "depressed: a = {}, b = {}, shift = {}",
                    d.a, d.b, d.shift
                )?,
            }
        }
        writeln!(out, "point: x = {x}, y = {y}")?;
        for s in &record.systems {
            let (real_eq, imag_eq) = match s.system.as_str() {
                "quadratic-xiy" => ("x^2 - y^2 + a x + b", "2 x y + a y"),
                "cubic-naive-xiy" => ("x^3 - 3 x y^2 + a x + b", "y^3 - 3 x^2 y - a y"),
                "cubic-omega" => (
                    "x^3 - y^3 + 3x^2 y/2 - 3x y^2/2 + a y/2 + a x + b",
                    "3 x y^2 + 3 x^2 y + a y",
                ),
                _ => (
                    "x^4 + y^4 - 6x^2 y^2 + a x^2 - a y^2 + b x + c",
                    "4 x^3 y - 4 x y^3 + 2 a x y + b y",
                ),
            };
            writeln!(out, "{}:", s.system)?;
            writeln!(out, "  real: {real_eq} = {:.6e}", s.real_part)?;
            writeln!(out, "  imag: {imag_eq} = {:.6e}", s.imag_part)?;
        }
        if let Some(n) = record.naive_reduction {
            writeln!(
                out,
                "naive reduction c3 x^3 + c1 x + c0 = 0: ({}, {}, {})",
                n.c3,
                n.c1 + 0.0,
                n.c0 + 0.0
            )?;
        }
        if let Some(r) = record.resolvent_coefficients {
            writeln!(
                out,
                "resolvent in t = x^2: ({}, {}, {}, {})",
                r[0],
                r[1] + 0.0,
                r[2] + 0.0,
                r[3] + 0.0
            )?;
        }
        if let Some(note) = &record.note {
            writeln!(out, "note: {note}")?;
        }
        Ok(EXIT_OK)
    }
}
