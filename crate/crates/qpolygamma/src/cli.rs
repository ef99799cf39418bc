//! Command-line front end: evaluate functions, emit tables, run
//! verification suites, print bounds.
//!
//! Exit codes: 0 on success or all-pass, 1 when any verification case
//! fails, 2 on usage or domain errors. Values are printed with 17
//! significant digits so CSV output round-trips bit-for-bit.

use crate::error::{Error, Result};
use crate::qcore::{
    classify, log_q_gamma, q_digamma, q_polygamma, Branch, Certified, DerivOrder, QParam,
    SeriesPolicy,
};
use crate::theorems::{
    batir_function, digamma_bounds, proof_inequality_sides, remark2_value, series_identity_lhs,
    theorem1_value, theorem2_value, Theorem2Kind,
};
use crate::verify::{
    check_cm_theorem1, check_identities, check_monotone, check_sandwich, CMOrder, CheckCase,
    CheckReport, GridSpec, MonotoneFn, Spacing,
};
use clap::{Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::fs;
use std::io::Write;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "qpg",
    about = "Evaluate q-gamma / q-polygamma functions and verify their proven inequalities",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one function at a single point
    Eval {
        #[arg(long = "fn", value_enum)]
        function: FnSelector,
        #[arg(long, default_value_t = 1.0)]
        q: f64,
        #[arg(long)]
        x: f64,
        /// Derivative order for --fn polygamma
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[command(flatten)]
        policy: PolicyArgs,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<String>,
    },
    /// Evaluate one function over a grid and emit a table
    Table {
        #[arg(long = "fn", value_enum)]
        function: FnSelector,
        #[arg(long, default_value_t = 1.0)]
        q: f64,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[command(flatten)]
        policy: PolicyArgs,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<String>,
    },
    /// Run a verification suite and report margins
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        q: f64,
        /// Highest derivative order of the complete-monotonicity pattern
        #[arg(long, default_value_t = 4)]
        kmax: u32,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        policy: PolicyArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<String>,
    },
    /// Print the sharp double bounds around psi_q at a point
    Bounds {
        #[arg(long)]
        q: f64,
        #[arg(long)]
        x: f64,
        #[command(flatten)]
        policy: PolicyArgs,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FnSelector {
    Loggamma,
    Digamma,
    Polygamma,
    Theorem1,
    Phi,
    Varphi,
    #[value(name = "phi_sub")]
    PhiSub,
    Theta,
    Remark2,
    Batir,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
    Plain,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Suite {
    Cm,
    Monotone,
    Sandwich,
    Identities,
    Proof,
    All,
}

#[derive(clap::Args, Debug, Clone, Copy)]
struct PolicyArgs {
    /// Relative truncation tolerance
    #[arg(long = "rel-tol", default_value_t = 1e-13)]
    rel_tol: f64,
    /// Absolute truncation tolerance floor
    #[arg(long = "abs-tol", default_value_t = 1e-300)]
    abs_tol: f64,
    /// Series term cap
    #[arg(long = "max-terms", default_value_t = 1_000_000)]
    max_terms: usize,
}

impl PolicyArgs {
    fn build(&self) -> Result<SeriesPolicy> {
        SeriesPolicy::new(self.rel_tol, self.abs_tol, self.max_terms)
    }
}

#[derive(clap::Args, Debug, Clone, Copy)]
struct GridArgs {
    #[arg(long, default_value_t = 0.05)]
    xmin: f64,
    #[arg(long, default_value_t = 30.0)]
    xmax: f64,
    #[arg(long, default_value_t = 64)]
    n: usize,
    /// Logarithmic spacing (default); pass --log=false for linear
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    log: bool,
}

impl GridArgs {
    fn build(&self) -> Result<GridSpec> {
        let spacing = if self.log {
            Spacing::Logarithmic
        } else {
            Spacing::Linear
        };
        GridSpec::new(self.xmin, self.xmax, self.n, spacing)
    }
}

/// Parse the argument list, run the selected subcommand, and translate
/// the outcome into the exit-code contract.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return EXIT_OK;
            }
            eprintln!("{}", first_line(&e.to_string()));
            return EXIT_USAGE;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("qpg: {e}");
            EXIT_USAGE
        }
    }
}

fn first_line(s: &str) -> &str {
    s.lines().next().unwrap_or(s)
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Eval {
            function,
            q,
            x,
            m,
            policy,
            format,
            out,
        } => {
            let p = classify(q)?;
            let policy = policy.build()?;
            let c = eval_function(function, &p, m, x, &policy)?;
            let text = render_rows(format, &p, m_for(function, m), &[(x, c)]);
            write_out(out.as_deref(), &text)?;
            Ok(EXIT_OK)
        }
        Command::Table {
            function,
            q,
            grid,
            m,
            policy,
            format,
            out,
        } => {
            let p = classify(q)?;
            let policy = policy.build()?;
            let grid = grid.build()?;
            let text = emit_table(function, &p, &grid, m, &policy, format)?;
            write_out(out.as_deref(), &text)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            suite,
            q,
            kmax,
            grid,
            policy,
            format,
            out,
        } => {
            let p = classify(q)?;
            let policy = policy.build()?;
            let grid = grid.build()?;
            let reports = run_suites(suite, &p, &grid, kmax, &policy)?;
            let text = render_reports(format, &reports);
            write_out(out.as_deref(), &text)?;
            let all_pass = reports.iter().all(|r| r.passed);
            Ok(if all_pass { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Bounds {
            q,
            x,
            policy,
            format,
            out,
        } => {
            let p = classify(q)?;
            let policy = policy.build()?;
            let b = digamma_bounds(&p, x, &policy)?;
            let v = q_digamma(&p, x, &policy)?;
            let text = render_bounds(format, &p, x, b.lower, v.value, b.upper);
            write_out(out.as_deref(), &text)?;
            Ok(EXIT_OK)
        }
    }
}

/// The polygamma selector is the only one that uses --m.
fn m_for(function: FnSelector, m: u32) -> Option<u32> {
    match function {
        FnSelector::Polygamma => Some(m),
        _ => None,
    }
}

/// Evaluate one function over the grid and render the table text:
/// one row per grid point, deterministic, values at 17 significant
/// digits so parsing them back reproduces the f64 bits.
fn emit_table(
    function: FnSelector,
    p: &QParam,
    grid: &GridSpec,
    m: u32,
    policy: &SeriesPolicy,
    format: Format,
) -> Result<String> {
    let mut rows = Vec::with_capacity(grid.n_points);
    for &x in &grid.points() {
        rows.push((x, eval_function(function, p, m, x, policy)?));
    }
    Ok(render_rows(format, p, m_for(function, m), &rows))
}

fn eval_function(
    function: FnSelector,
    p: &QParam,
    m: u32,
    x: f64,
    policy: &SeriesPolicy,
) -> Result<Certified> {
    match function {
        FnSelector::Loggamma => log_q_gamma(p, x, policy),
        FnSelector::Digamma => q_digamma(p, x, policy),
        FnSelector::Polygamma => q_polygamma(p, DerivOrder::new(m), x, policy),
        FnSelector::Theorem1 => theorem1_value(p, x, policy),
        FnSelector::Phi => theorem2_value(Theorem2Kind::PhiSuper, p, x, policy),
        FnSelector::Varphi => theorem2_value(Theorem2Kind::VarphiSuper, p, x, policy),
        FnSelector::PhiSub => theorem2_value(Theorem2Kind::PhiSub, p, x, policy),
        FnSelector::Theta => theorem2_value(Theorem2Kind::ThetaSub, p, x, policy),
        FnSelector::Remark2 => remark2_value(p, x, policy),
        FnSelector::Batir => batir_function(x),
    }
}

/// 17 significant digits: enough for f64 to round-trip exactly.
fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

fn render_rows(format: Format, p: &QParam, m: Option<u32>, rows: &[(f64, Certified)]) -> String {
    match format {
        Format::Csv => {
            let mut s = String::from("q,x,value,err_bound,terms\n");
            for (x, c) in rows {
                s.push_str(&format!(
                    "{},{},{},{},{}\n",
                    p.q(),
                    x,
                    fmt17(c.value),
                    fmt17(c.err_bound),
                    c.terms_used
                ));
            }
            s
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|(x, c)| {
                    let mut obj = serde_json::json!({
                        "q": p.q(),
                        "x": x,
                        "value": c.value,
                        "err_bound": c.err_bound,
                        "terms": c.terms_used,
                    });
                    if let Some(m) = m {
                        obj["m"] = serde_json::json!(m);
                    }
                    obj
                })
                .collect();
            let v = if items.len() == 1 {
                items.into_iter().next().unwrap()
            } else {
                serde_json::Value::Array(items)
            };
            format!(
                "{}\n",
                serde_json::to_string_pretty(&v).expect("serializes")
            )
        }
        Format::Plain => {
            let mut s = String::new();
            for (x, c) in rows {
                s.push_str(&format!(
                    "q={} x={} value={} err_bound={:.3e} terms={}\n",
                    p.q(),
                    x,
                    fmt17(c.value),
                    c.err_bound,
                    c.terms_used
                ));
            }
            s
        }
    }
}

fn render_bounds(format: Format, p: &QParam, x: f64, lower: f64, value: f64, upper: f64) -> String {
    let margin_lower = value - lower;
    let margin_upper = upper - value;
    match format {
        Format::Plain => format!(
            "q={} x={}\nlower = {}\nvalue = {}\nupper = {}\nmargin_lower = {:.6e}\nmargin_upper = {:.6e}\nsandwich: {}\n",
            p.q(),
            x,
            fmt17(lower),
            fmt17(value),
            fmt17(upper),
            margin_lower,
            margin_upper,
            if margin_lower > 0.0 && margin_upper > 0.0 { "lower < value < upper" } else { "VIOLATED" },
        ),
        Format::Csv => format!(
            "q,x,lower,value,upper,margin_lower,margin_upper\n{},{},{},{},{},{},{}\n",
            p.q(),
            x,
            fmt17(lower),
            fmt17(value),
            fmt17(upper),
            fmt17(margin_lower),
            fmt17(margin_upper)
        ),
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&serde_json::json!({
                "q": p.q(),
                "x": x,
                "lower": lower,
                "value": value,
                "upper": upper,
                "margin_lower": margin_lower,
                "margin_upper": margin_upper,
            }))
            .expect("serializes")
        ),
    }
}

/// The proof-side inequality has no grid; run it over the pinned index
/// range and report one case per index plus the antisymmetry residual.
fn proof_report(p: &QParam) -> Result<CheckReport> {
    let q = p.q();
    let mut cases = Vec::new();
    for i in 3..=60u32 {
        let s = proof_inequality_sides(i, q)?;
        let margin = s.upper - s.lower;
        cases.push(CheckCase {
            label: format!("proof i={i:02}"),
            q,
            x: f64::from(i),
            margin,
            err_budget: 0.0,
            pass: margin > 0.0,
        });
    }
    let resid = crate::theorems::antisymmetric_coeff_sum(5, q)?;
    cases.push(CheckCase {
        label: "proof antisymmetry".into(),
        q,
        x: 5.0,
        margin: 1e-10 - resid.abs(),
        err_budget: 1e-10,
        pass: resid.abs() < 1e-10,
    });
    let lhs = series_identity_lhs(p, 2.0, None)?;
    let t = theorem1_value(p, 2.0, &SeriesPolicy::default())?;
    let rhs = t.value / (p.ln_q() * p.ln_q());
    let rel = (lhs - rhs).abs() / rhs.abs();
    cases.push(CheckCase {
        label: "proof double-sum".into(),
        q,
        x: 2.0,
        margin: 1e-8 - rel,
        err_budget: 1e-8,
        pass: rel < 1e-8,
    });
    Ok(CheckReport::assemble("proof", q, None, cases))
}

fn run_suites(
    suite: Suite,
    p: &QParam,
    grid: &GridSpec,
    kmax: u32,
    policy: &SeriesPolicy,
) -> Result<Vec<CheckReport>> {
    let monotone_fns: Vec<MonotoneFn> = match p.branch() {
        Branch::SuperUnit => vec![
            MonotoneFn::Phi,
            MonotoneFn::Varphi,
            MonotoneFn::Remark2,
            MonotoneFn::Batir,
        ],
        Branch::SubUnit => vec![
            MonotoneFn::PhiSub,
            MonotoneFn::Theta,
            MonotoneFn::Remark2,
            MonotoneFn::Batir,
        ],
        Branch::Classical => vec![MonotoneFn::Remark2, MonotoneFn::Batir],
    };
    let merged_monotone = |p: &QParam| -> Result<CheckReport> {
        let mut cases = Vec::new();
        for f in &monotone_fns {
            cases.extend(check_monotone(*f, p, grid, policy)?.cases);
        }
        Ok(CheckReport::assemble("monotone", p.q(), None, cases))
    };
    match suite {
        Suite::Cm => Ok(vec![check_cm_theorem1(
            p,
            grid,
            CMOrder::new(kmax)?,
            policy,
        )?]),
        Suite::Monotone => Ok(vec![merged_monotone(p)?]),
        Suite::Sandwich => Ok(vec![check_sandwich(p, grid, policy)?]),
        Suite::Identities => Ok(vec![check_identities(p, grid, policy)?]),
        Suite::Proof => Ok(vec![proof_report(p)?]),
        Suite::All => {
            let mut reports = vec![
                check_cm_theorem1(p, grid, CMOrder::new(kmax)?, policy)?,
                merged_monotone(p)?,
                check_sandwich(p, grid, policy)?,
                check_identities(p, grid, policy)?,
            ];
            // the proof-side inequality is a q > 1 statement
            if p.branch() == Branch::SuperUnit {
                reports.push(proof_report(p)?);
            }
            Ok(reports)
        }
    }
}

fn render_reports(format: Format, reports: &[CheckReport]) -> String {
    match format {
        Format::Json => {
            if reports.len() == 1 {
                format!("{}\n", reports[0].to_json())
            } else {
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(reports).expect("reports serialize")
                )
            }
        }
        Format::Csv => {
            let mut s = String::from("suite,label,q,x,margin,err_budget,pass\n");
            for r in reports {
                for c in &r.cases {
                    s.push_str(&format!(
                        "{},{},{},{},{},{},{}\n",
                        r.suite_name,
                        c.label,
                        c.q,
                        c.x,
                        fmt17(c.margin),
                        fmt17(c.err_budget),
                        c.pass
                    ));
                }
            }
            s
        }
        Format::Plain => {
            let mut s = String::new();
            for r in reports {
                s.push_str(&format!(
                    "[{}] suite {} (q={}): {} cases, worst margin {:.6e}\n",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.suite_name,
                    r.q,
                    r.cases.len(),
                    r.worst_margin
                ));
                for c in r.cases.iter().filter(|c| !c.pass) {
                    s.push_str(&format!(
                        "  FAIL {} q={} x={} margin={:.6e}\n",
                        c.label, c.q, c.x, c.margin
                    ));
                }
            }
            s
        }
    }
}

fn write_out(out: Option<&str>, text: &str) -> Result<()> {
    match out {
        None => {
            print!("{text}");
            std::io::stdout().flush().ok();
            Ok(())
        }
        Some(path) => {
            fs::write(path, text).map_err(|e| Error::Domain(format!("cannot write {path}: {e}")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cli(args: &[&str]) -> i32 {
        run(std::iter::once("qpg").chain(args.iter().copied()))
    }

    #[test]
    fn emit_table_shape_and_positivity() {
        let p = classify(2.0).unwrap();
        let grid = GridSpec::new(0.5, 5.0, 3, Spacing::Logarithmic).unwrap();
        let text = emit_table(
            FnSelector::Theorem1,
            &p,
            &grid,
            1,
            &SeriesPolicy::default(),
            Format::Csv,
        )
        .unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4); // header + 3 rows
        for row in &lines[1..] {
            let value: f64 = row.split(',').nth(2).unwrap().parse().unwrap();
            assert!(value > 0.0);
        }
        // wrong branch is an error, surfaced as exit 2 by the CLI
        assert!(emit_table(
            FnSelector::PhiSub,
            &p,
            &grid,
            1,
            &SeriesPolicy::default(),
            Format::Csv
        )
        .is_err());
    }

    #[test]
    fn eval_rows_round_trip() {
        let p = classify(0.5).unwrap();
        let policy = SeriesPolicy::default();
        let c = q_digamma(&p, 1.0, &policy).unwrap();
        let text = render_rows(Format::Csv, &p, None, &[(1.0, c)]);
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "q,x,value,err_bound,terms");
        let row: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(row[0], "0.5");
        assert_eq!(row[1], "1");
        let back: f64 = row[2].parse().unwrap();
        assert_eq!(back.to_bits(), c.value.to_bits());
        let back_err: f64 = row[3].parse().unwrap();
        assert_eq!(back_err.to_bits(), c.err_bound.to_bits());
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(
            run_cli(&["eval", "--fn", "nope", "--q", "2", "--x", "1"]),
            2
        );
        assert_eq!(
            run_cli(&["eval", "--fn", "digamma", "--q", "-1", "--x", "1"]),
            2
        );
        assert_eq!(run_cli(&["nosuchcommand"]), 2);
    }

    #[test]
    fn branch_mismatch_exits_two() {
        assert_eq!(
            run_cli(&["table", "--fn", "phi_sub", "--q", "2", "--n", "4"]),
            2
        );
    }

    #[test]
    fn verify_pass_and_fail_exit_codes() {
        assert_eq!(
            run_cli(&[
                "verify",
                "--suite",
                "identities",
                "--q",
                "2",
                "--n",
                "8",
                "--out",
                "/dev/null"
            ]),
            0
        );
        // impossible tolerance: every case fails, exit 1
        assert_eq!(
            run_cli(&[
                "verify",
                "--suite",
                "monotone",
                "--q",
                "2",
                "--n",
                "6",
                "--rel-tol",
                "1e-30",
                "--max-terms",
                "3",
                "--out",
                "/dev/null"
            ]),
            1
        );
    }
}
