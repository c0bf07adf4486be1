//! `ramanujan`: evaluate `J_n(a)`, its approximants and bounds, reproduce the
//! reference tables and run the identity suite.

mod format;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ramanujan_core::approximants::asymptotic_window_contains;
use ramanujan_core::verify::reproduce_table_with;
use ramanujan_core::{
    bound, bound_asymptotic, j_integral, run_suite, ApproxReport, BoundForm, IntegralParams,
    Parity, SuiteProfile, TableRow, DEFAULT_TOL,
};

use format::{sci, sig15, sink};

#[derive(Parser, Debug)]
#[command(name = "ramanujan", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// J_n(a) by quadrature.
    Eval {
        #[command(flatten)]
        index: Index,
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[command(flatten)]
        common: Common,
    },
    /// J, T, ε, bound and estimate side by side.
    Approx {
        #[command(flatten)]
        index: Index,
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Remainder bound B_n(a) and, for n ≥ 2, the large-k estimate.
    Bound {
        #[command(flatten)]
        index: Index,
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        /// Weight in front of each G_n term.
        #[arg(long, value_enum, default_value_t = FormArg::Theta)]
        form: FormArg,
        #[command(flatten)]
        common: Common,
    },
    /// Reproduce one of the three reference tables.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        id: u8,
        #[command(flatten)]
        common: Common,
    },
    /// Run the identity suite; exits 2 if any check fails.
    Verify {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = true)]
struct Index {
    /// Full index n; parity follows from n.
    #[arg(long, conflicts_with_all = ["k", "parity"])]
    n: Option<u32>,
    /// Half index k, used with --parity.
    #[arg(long, requires = "parity")]
    k: Option<u32>,
    #[arg(long, requires = "k")]
    parity: Option<Parity>,
}

impl Index {
    fn n(&self) -> u32 {
        match (self.n, self.k, self.parity) {
            (Some(n), _, _) => n,
            (None, Some(k), Some(p)) => p.index(k),
            _ => unreachable!("clap enforces the index group"),
        }
    }
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, default_value_t = DEFAULT_TOL, allow_negative_numbers = true)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FormArg {
    Theta,
    Majorant,
}

impl From<FormArg> for BoundForm {
    fn from(f: FormArg) -> Self {
        match f {
            FormArg::Theta => BoundForm::Theta,
            FormArg::Majorant => BoundForm::Majorant,
        }
    }
}

#[derive(Serialize)]
struct EvalOutput {
    n: u32,
    a: f64,
    tol: f64,
    value: f64,
    abs_error_estimate: f64,
    evaluations: u64,
}

#[derive(Serialize)]
struct BoundOutput {
    n: u32,
    a: f64,
    form: BoundForm,
    bound: f64,
    estimate: Option<f64>,
}

#[derive(Serialize)]
struct TableOutput {
    id: u8,
    rows: Vec<TableRow>,
}

/// Exit status of a successful run.
enum Outcome {
    Done,
    SuiteFailed,
}

type Failure = Box<dyn std::error::Error>;

fn usage_hint(command: &str) -> String {
    format!("usage: ramanujan {command} --help")
}

fn check_tol(tol: f64) -> Result<(), Failure> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(format!("domain error: tol must be positive and finite, got {tol}").into())
    }
}

fn text_lines(w: &mut dyn Write, pairs: &[(&str, String)]) -> std::io::Result<()> {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    for (key, value) in pairs {
        writeln!(w, "{key:<width$}  {value}")?;
    }
    Ok(())
}

fn csv_writer(w: Box<dyn Write>) -> csv::Writer<Box<dyn Write>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(w)
}

fn json_line(w: &mut dyn Write, value: &impl Serialize) -> Result<(), Failure> {
    serde_json::to_writer(&mut *w, value)?;
    writeln!(w)?;
    Ok(())
}

fn run(cmd: Command) -> Result<Outcome, Failure> {
    match cmd {
        Command::Eval { index, a, common } => {
            check_tol(common.tol)?;
            let params = IntegralParams::new(index.n(), a).with_tol(common.tol);
            let q = j_integral(&params)?;
            let out = EvalOutput {
                n: params.n,
                a,
                tol: common.tol,
                value: q.value,
                abs_error_estimate: q.abs_error_estimate,
                evaluations: q.evaluations,
            };
            let mut w = sink(common.out.as_deref())?;
            match common.format {
                Format::Text => writeln!(w, "{}", sig15(out.value))?,
                Format::Csv => {
                    let mut c = csv_writer(w);
                    c.write_record(["n", "a", "value", "abs_error_estimate"])?;
                    c.write_record([
                        out.n.to_string(),
                        a.to_string(),
                        sci(out.value),
                        sci(out.abs_error_estimate),
                    ])?;
                    c.flush()?;
                    return Ok(Outcome::Done);
                }
                Format::Json => json_line(&mut w, &out)?,
            }
            w.flush()?;
        }
        Command::Approx { index, a, common } => {
            check_tol(common.tol)?;
            let params = IntegralParams::new(index.n(), a).with_tol(common.tol);
            let r = ApproxReport::compute(&params)?;
            let mut w = sink(common.out.as_deref())?;
            match common.format {
                Format::Text => {
                    let mut pairs = vec![
                        ("J", sig15(r.j_quad)),
                        ("T", sig15(r.t_value)),
                        ("epsilon", sig15(r.epsilon)),
                        ("bound", sig15(r.bound)),
                    ];
                    if let Some(e) = r.estimate {
                        pairs.push(("estimate", sig15(e)));
                    }
                    pairs.push(("residual", sig15(r.residual)));
                    text_lines(&mut w, &pairs)?;
                }
                Format::Csv => {
                    let mut c = csv_writer(w);
                    c.write_record([
                        "n", "a", "j", "t", "epsilon", "bound", "estimate", "residual",
                    ])?;
                    c.write_record([
                        params.n.to_string(),
                        a.to_string(),
                        sci(r.j_quad),
                        sci(r.t_value),
                        sci(r.epsilon),
                        sci(r.bound),
                        r.estimate.map(sci).unwrap_or_default(),
                        sci(r.residual),
                    ])?;
                    c.flush()?;
                    return Ok(Outcome::Done);
                }
                Format::Json => json_line(&mut w, &r)?,
            }
            w.flush()?;
        }
        Command::Bound {
            index,
            a,
            form,
            common,
        } => {
            check_tol(common.tol)?;
            let n = index.n();
            let form = BoundForm::from(form);
            let value = bound(n, a, form)?;
            let k = n / 2;
            let estimate = if k >= 1 {
                if !asymptotic_window_contains(k, a) {
                    eprintln!(
                        "warning: a = {a} lies outside [pi/k, k] for k = {k}; the estimate is unreliable"
                    );
                }
                Some(bound_asymptotic(k, a)?)
            } else {
                None
            };
            let out = BoundOutput {
                n,
                a,
                form,
                bound: value,
                estimate,
            };
            let mut w = sink(common.out.as_deref())?;
            match common.format {
                Format::Text => {
                    let mut pairs = vec![("bound", sig15(value))];
                    if let Some(e) = estimate {
                        pairs.push(("estimate", sig15(e)));
                    }
                    text_lines(&mut w, &pairs)?;
                }
                Format::Csv => {
                    let mut c = csv_writer(w);
                    c.write_record(["n", "a", "bound", "estimate"])?;
                    c.write_record([
                        n.to_string(),
                        a.to_string(),
                        sci(value),
                        estimate.map(sci).unwrap_or_default(),
                    ])?;
                    c.flush()?;
                    return Ok(Outcome::Done);
                }
                Format::Json => json_line(&mut w, &out)?,
            }
            w.flush()?;
        }
        Command::Table { id, common } => {
            check_tol(common.tol)?;
            let rows = reproduce_table_with(id, common.tol)?;
            let mut w = sink(common.out.as_deref())?;
            match common.format {
                Format::Text => {
                    writeln!(
                        w,
                        "{:>4} {:>5} {:>22} {:>22}",
                        "k", "a", "script_j", "bound"
                    )?;
                    for r in &rows {
                        writeln!(
                            w,
                            "{:>4} {:>5} {:>22} {:>22}",
                            r.k,
                            r.a,
                            sig15(r.script_j),
                            sig15(r.bound)
                        )?;
                    }
                }
                Format::Csv => {
                    let mut c = csv_writer(w);
                    c.write_record(["k", "a", "script_j", "bound"])?;
                    for r in &rows {
                        c.write_record([
                            r.k.to_string(),
                            r.a.to_string(),
                            sci(r.script_j),
                            sci(r.bound),
                        ])?;
                    }
                    c.flush()?;
                    return Ok(Outcome::Done);
                }
                Format::Json => json_line(&mut w, &TableOutput { id, rows })?,
            }
            w.flush()?;
        }
        Command::Verify { common } => {
            check_tol(common.tol)?;
            let report = run_suite(&SuiteProfile {
                tol: common.tol,
                ..SuiteProfile::default()
            });
            let mut w = sink(common.out.as_deref())?;
            match common.format {
                Format::Text => {
                    for c in &report.checks {
                        let tag = if c.passed { "pass" } else { "FAIL" };
                        write!(
                            w,
                            "{tag} {} residual={} tolerance={}",
                            c.name,
                            sig15(c.residual),
                            sig15(c.tolerance)
                        )?;
                        if let Some(e) = &c.error {
                            write!(w, " error={e}")?;
                        }
                        writeln!(w)?;
                    }
                    let failed = report.failures().count();
                    writeln!(
                        w,
                        "overall {}: {} checks, {failed} failed",
                        if report.overall { "pass" } else { "FAIL" },
                        report.checks.len()
                    )?;
                }
                Format::Csv => {
                    let mut c = csv_writer(w);
                    c.write_record(["name", "residual", "tolerance", "passed"])?;
                    for check in &report.checks {
                        c.write_record([
                            check.name.clone(),
                            sci(check.residual),
                            sci(check.tolerance),
                            check.passed.to_string(),
                        ])?;
                    }
                    c.flush()?;
                    return Ok(if report.overall {
                        Outcome::Done
                    } else {
                        Outcome::SuiteFailed
                    });
                }
                Format::Json => json_line(&mut w, &report)?,
            }
            w.flush()?;
            if !report.overall {
                return Ok(Outcome::SuiteFailed);
            }
        }
    }
    Ok(Outcome::Done)
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Eval { .. } => "eval",
        Command::Approx { .. } => "approx",
        Command::Bound { .. } => "bound",
        Command::Table { .. } => "table",
        Command::Verify { .. } => "verify",
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let name = command_name(&cli.command);
    match run(cli.command) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::SuiteFailed) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            eprintln!("{}", usage_hint(name));
            ExitCode::from(1)
        }
    }
}
