//! Command-line front end.
//!
//! [`run`] parses arguments, executes one command and returns everything
//! it would print together with the exit status, so the binary stays a
//! two-line wrapper and the whole surface is testable in-process.
//!
//! Exit codes: 0 success, 1 usage error, 2 size-cap refusal,
//! 3 verification failure.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::bivs::bivs_count_with;
use crate::bivs::{
    bivs_bar_family, bivs_closed_form_matrix, bivs_genfunc_with, bivs_theorem_matrix,
};
use crate::bounds::{bracket_with, fekete_sandwich_with, table_one_with, TABLE_CSV_HEADER};
use crate::ivs::ivs_count_with;
use crate::ivs::{ivs_bar_triple, ivs_closed_form_matrix, ivs_genfunc_with, ivs_theorem_matrix};
use crate::oracle::{brute_bivs, brute_ivs, brute_mosaics};
use crate::poly::GenFunc;
use crate::{Axis, Caps, Error, Form, Mode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "hardsquare",
    version,
    about = "Exact independent vertex set enumeration on grid graphs"
)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "HARDSQUARE_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Ivs,
    Bivs,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Ivs => Mode::Ivs,
            ModeArg::Bivs => Mode::Bivs,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum FormArg {
    #[default]
    ColumnSum,
    CornerEntry,
}

impl From<FormArg> for Form {
    fn from(f: FormArg) -> Form {
        match f {
            FormArg::ColumnSum => Form::ColumnSum,
            FormArg::CornerEntry => Form::CornerEntry,
        }
    }
}

#[derive(clap::Args, Debug)]
struct GridArgs {
    #[arg(long, value_enum)]
    mode: ModeArg,
    /// Grid width (bar length of the transfer matrix).
    #[arg(short = 'm')]
    m: usize,
    /// Grid height (number of transfer steps).
    #[arg(short = 'n')]
    n: usize,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Lift all size caps.
    #[arg(long)]
    allow_large: bool,
    /// Override the width cap of this command.
    #[arg(long)]
    max_width: Option<usize>,
}

impl GridArgs {
    fn caps(&self) -> Caps {
        caps_for(self.allow_large, self.max_width)
    }
}

fn caps_for(allow_large: bool, max_width: Option<usize>) -> Caps {
    let mut caps = if allow_large {
        Caps::unlimited()
    } else {
        Caps::default()
    };
    if let Some(w) = max_width {
        caps.ivs_genfunc = w;
        caps.ivs_count = w;
        caps.bivs_genfunc = w;
        caps.bivs_count = w;
    }
    caps
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact number of (bipartite) independent vertex sets.
    Count(GridArgs),
    /// Generating function P(z) or Q(x, y).
    Genfunc {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, value_enum, default_value_t)]
        form: FormArg,
    },
    /// Lower and upper bounds on the growth constant from one grid.
    Bounds {
        #[command(flatten)]
        grid: GridArgs,
        /// Decimal places printed.
        #[arg(long, default_value_t = 6)]
        precision: u32,
    },
    /// sigma(G_nxn) and its 1/n^2 and 1/(n+1)^2 roots for n = 1..=max_n.
    Table {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        allow_large: bool,
    },
    /// Cross-checks engines, matrix forms and brute force.
    Verify {
        /// Restrict to one mode (default: both).
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        /// Largest grid area m*n exercised.
        #[arg(long)]
        max_area: Option<usize>,
        /// Also check the Fekete sandwich inequalities.
        #[arg(long)]
        fekete: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// Captured result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn ok(stdout: String) -> Self {
        CliOutput {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        CliOutput {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

fn from_error(e: Error) -> CliOutput {
    let code = if e.is_cap() { EXIT_CAP } else { EXIT_USAGE };
    CliOutput::fail(code, format!("error: {e}\n"))
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput::fail(EXIT_USAGE, text)
            } else {
                CliOutput::ok(text)
            };
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.threads {
        if t == 0 {
            return CliOutput::fail(EXIT_USAGE, "error: --threads must be positive\n".into());
        }
        pool = pool.num_threads(t);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => return CliOutput::fail(EXIT_USAGE, format!("error: {e}\n")),
    };
    pool.install(|| execute(cli.command))
}

fn execute(command: Command) -> CliOutput {
    let result = match command {
        Command::Count(grid) => cmd_count(&grid),
        Command::Genfunc { grid, form } => cmd_genfunc(&grid, form.into()),
        Command::Bounds { grid, precision } => cmd_bounds(&grid, precision),
        Command::Table {
            max_n,
            format,
            allow_large,
        } => cmd_table(max_n, format, &caps_for(allow_large, None)),
        Command::Verify {
            mode,
            max_area,
            fekete,
            format,
        } => return cmd_verify(mode.map(Mode::from), max_area, fekete, format),
    };
    result.map(CliOutput::ok).unwrap_or_else(from_error)
}

fn json_line(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string(value).expect("serialisable output");
    s.push('\n');
    s
}

fn cmd_count(grid: &GridArgs) -> Result<String, Error> {
    let caps = grid.caps();
    let mode = Mode::from(grid.mode);
    let count = match mode {
        Mode::Ivs => ivs_count_with(grid.m, grid.n, &caps)?,
        Mode::Bivs => bivs_count_with(grid.m, grid.n, &caps)?,
    };
    Ok(match grid.format {
        Format::Text => format!("{count}\n"),
        Format::Json => json_line(&json!({
            "mode": mode, "m": grid.m, "n": grid.n, "count": count,
        })),
        Format::Csv => format!("mode,m,n,count\n{mode},{},{},{count}\n", grid.m, grid.n),
    })
}

fn form_name(form: Form) -> &'static str {
    match form {
        Form::ColumnSum => "column-sum",
        Form::CornerEntry => "corner-entry",
    }
}

fn cmd_genfunc(grid: &GridArgs, form: Form) -> Result<String, Error> {
    let caps = grid.caps();
    let mode = Mode::from(grid.mode);
    let g = match mode {
        Mode::Ivs => GenFunc::Ivs(ivs_genfunc_with(grid.m, grid.n, form, &caps)?),
        Mode::Bivs => GenFunc::Bivs(bivs_genfunc_with(grid.m, grid.n, form, &caps)?),
    };
    Ok(match grid.format {
        Format::Text => format!("{g}\n"),
        Format::Json => json_line(&json!({
            "mode": mode, "m": grid.m, "n": grid.n, "form": form_name(form), "coefficients": g,
        })),
        Format::Csv => {
            let mut out = String::new();
            match &g {
                GenFunc::Ivs(p) => {
                    out.push_str("d,k\n");
                    for (d, k) in p.terms() {
                        let _ = writeln!(out, "{d},{k}");
                    }
                }
                GenFunc::Bivs(q) => {
                    out.push_str("c,d,k\n");
                    for (c, d, k) in q.terms() {
                        let _ = writeln!(out, "{c},{d},{k}");
                    }
                }
            }
            out
        }
    })
}

fn cmd_bounds(grid: &GridArgs, precision: u32) -> Result<String, Error> {
    if precision >= crate::bounds::ROOT_DIGITS {
        return Err(Error::Parse(format!(
            "precision must be below {}",
            crate::bounds::ROOT_DIGITS
        )));
    }
    let b = bracket_with(Mode::from(grid.mode), grid.m, grid.n, &grid.caps())?;
    let lower = b.lower.round_half_even(precision);
    let upper = b.upper.round_half_even(precision);
    Ok(match grid.format {
        Format::Text => format!("count {}\nlower {lower}\nupper {upper}\n", b.count),
        Format::Json => json_line(&json!({
            "mode": b.mode, "m": b.m, "n": b.n, "count": b.count, "lower": lower, "upper": upper,
        })),
        Format::Csv => format!(
            "mode,m,n,count,lower,upper\n{},{},{},{},{lower},{upper}\n",
            b.mode, b.m, b.n, b.count
        ),
    })
}

fn cmd_table(max_n: usize, format: Format, caps: &Caps) -> Result<String, Error> {
    let rows = table_one_with(max_n, caps)?;
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str(TABLE_CSV_HEADER);
            out.push('\n');
            for r in &rows {
                out.push_str(&r.csv());
                out.push('\n');
            }
        }
        Format::Text => {
            let width = rows.last().map_or(5, |r| r.sigma.to_string().len()).max(5);
            let _ = writeln!(
                out,
                "{:>3}  {:>width$}  {:>6}  {:>9}",
                "n", "sigma", "1/n^2", "1/(n+1)^2"
            );
            for r in &rows {
                let (a, b) = (format!("{:.3}", r.root_n2), format!("{:.3}", r.root_n1sq));
                let _ = writeln!(
                    out,
                    "{:>3}  {:>width$}  {a:>6}  {b:>9}",
                    r.n,
                    r.sigma.to_string()
                );
            }
        }
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "sigma": r.sigma,
                        "root_n2": format!("{:.3}", r.root_n2),
                        "root_n1sq": format!("{:.3}", r.root_n1sq),
                    })
                })
                .collect();
            out = json_line(&rows);
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct Check {
    name: String,
    passed: bool,
    detail: String,
}

struct Report {
    checks: Vec<Check>,
}

impl Report {
    fn record(&mut self, name: String, outcome: Result<Option<String>, Error>) {
        let (passed, detail) = match outcome {
            Ok(None) => (true, String::new()),
            Ok(Some(d)) => (true, d),
            Err(e) => (false, e.to_string()),
        };
        self.checks.push(Check {
            name,
            passed,
            detail,
        });
    }

    fn equal<T: PartialEq>(&mut self, name: String, a: Result<T, Error>, b: Result<T, Error>) {
        let outcome = match (a, b) {
            (Ok(a), Ok(b)) if a == b => Ok(None),
            (Ok(_), Ok(_)) => Err(Error::Inconsistent("values differ".into())),
            (Err(e), _) | (_, Err(e)) => Err(e),
        };
        self.record(name, outcome);
    }
}

fn grids(max_area: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=max_area).flat_map(move |m| (1..=max_area / m).map(move |n| (m, n)))
}

fn verify_mode(report: &mut Report, mode: Mode, max_area: usize, fekete: bool) {
    // Grid sizes are already bounded by the brute-force guards.
    let caps = Caps::unlimited();
    let (matrix_width, brute_area, mosaic_area) = match mode {
        Mode::Ivs => (8, crate::oracle::IVS_AREA_GUARD, 9),
        Mode::Bivs => (5, crate::oracle::BIVS_AREA_GUARD, 6),
    };
    for m in 1..=matrix_width.min(max_area) {
        let name = format!("{mode} matrix forms width {m}");
        match mode {
            Mode::Ivs => {
                let t = ivs_theorem_matrix(m);
                report.equal(name.clone(), t.clone(), ivs_bar_triple(m).map(|x| x.sum()));
                report.equal(name, t, ivs_closed_form_matrix(m));
            }
            Mode::Bivs => {
                let t = bivs_theorem_matrix(m);
                report.equal(name.clone(), t.clone(), bivs_bar_family(m).map(|x| x.sum()));
                report.equal(name, t, bivs_closed_form_matrix(m));
            }
        }
    }
    for (m, n) in grids(max_area.min(brute_area)) {
        let genfunc = |form| match mode {
            Mode::Ivs => ivs_genfunc_with(m, n, form, &caps).map(GenFunc::Ivs),
            Mode::Bivs => bivs_genfunc_with(m, n, form, &caps).map(GenFunc::Bivs),
        };
        let brute = match mode {
            Mode::Ivs => brute_ivs(m, n).map(GenFunc::Ivs),
            Mode::Bivs => brute_bivs(m, n).map(GenFunc::Bivs),
        };
        let column = genfunc(Form::ColumnSum);
        report.equal(format!("{mode} oracle {m}x{n}"), column.clone(), brute);
        report.equal(
            format!("{mode} forms {m}x{n}"),
            column.clone(),
            genfunc(Form::CornerEntry),
        );
        if mode == Mode::Bivs {
            let projected = column.map(|g| match g {
                GenFunc::Bivs(q) => GenFunc::Ivs(q.project_y_zero()),
                other => other,
            });
            let ivs = ivs_genfunc_with(m, n, Form::ColumnSum, &caps).map(GenFunc::Ivs);
            report.equal(
                format!("bivs projection Q(z,0)=P(z) {m}x{n}"),
                projected,
                ivs,
            );
        }
    }
    for (m, n) in grids(max_area.min(mosaic_area)) {
        let brute = match mode {
            Mode::Ivs => brute_ivs(m, n).map(GenFunc::Ivs),
            Mode::Bivs => brute_bivs(m, n).map(GenFunc::Bivs),
        };
        report.equal(
            format!("{mode} mosaic conversion {m}x{n}"),
            brute_mosaics(mode, m, n),
            brute,
        );
    }
    if fekete {
        for axis in [Axis::Rows, Axis::Cols] {
            for (total, fixed) in grids(max_area) {
                // total = first + second + 1, the widest grid of the sandwich.
                for first in 1..total.saturating_sub(1) {
                    let second = total - 1 - first;
                    // A passing witness already names its grids.
                    match fekete_sandwich_with(mode, axis, first, second, fixed, &caps) {
                        Ok(w) => report.record("fekete".into(), Ok(Some(w.to_string()))),
                        Err(e) => report.record(
                            format!("{mode} fekete {axis:?} {first}+{second} fixed {fixed}"),
                            Err(e),
                        ),
                    }
                }
            }
        }
    }
}

fn cmd_verify(
    mode: Option<Mode>,
    max_area: Option<usize>,
    fekete: bool,
    format: Format,
) -> CliOutput {
    let modes = match mode {
        Some(m) => vec![m],
        None => vec![Mode::Ivs, Mode::Bivs],
    };
    let mut report = Report { checks: Vec::new() };
    for mode in modes {
        let default_area = if mode == Mode::Ivs { 16 } else { 9 };
        verify_mode(&mut report, mode, max_area.unwrap_or(default_area), fekete);
    }
    let failed = report.checks.iter().filter(|c| !c.passed).count();
    let mut out = String::new();
    match format {
        Format::Json => {
            out = json_line(&json!({
                "checks": report.checks, "failed": failed, "total": report.checks.len(),
            }));
        }
        Format::Csv => {
            out.push_str("check,status,detail\n");
            for c in &report.checks {
                let status = if c.passed { "pass" } else { "FAIL" };
                let _ = writeln!(out, "{},{status},{}", c.name, c.detail.replace(',', ";"));
            }
        }
        Format::Text => {
            for c in &report.checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                if c.detail.is_empty() {
                    let _ = writeln!(out, "{status} {}", c.name);
                } else {
                    let _ = writeln!(out, "{status} {}: {}", c.name, c.detail);
                }
            }
            let _ = writeln!(out, "{} checks, {failed} failed", report.checks.len());
        }
    }
    CliOutput {
        code: if failed == 0 { EXIT_OK } else { EXIT_VERIFY },
        stdout: out,
        stderr: String::new(),
    }
}
