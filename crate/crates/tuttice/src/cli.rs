//! Command-line surface: parse a polymatroid description, run one
//! computation, and emit JSON (default) or plain text. Exit codes: 0 on
//! success, 1 when verification fails, 2 on input errors.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::activity::{
    activity_record, dawson_partition, external_polynomial_with_order,
    internal_polynomial_with_order, DawsonInterval, ElementOrder,
};
use crate::checks::{self, CheckStatus, Level, VerifyConfig};
use crate::core::{parse_polymatroid, subset_elements, Polymatroid, Subset};
use crate::corpus;
use crate::error::Error;
use crate::lattice::{count_grid, count_lattice_points, enumerate_bases};
use crate::poly::{qpoly, qprime};
use crate::subdivision::{coefficient_check, face_poset, top_degree_faces};
use crate::tutte;

#[derive(Debug, Parser)]
#[command(
    name = "tuttice",
    version,
    about = "Lattice-point counting invariants of polymatroids and the Tutte polynomial"
)]
struct Cli {
    /// Input file with a polymatroid description; stdin when omitted.
    #[arg(short = 'i', long = "input", global = true)]
    input: Option<PathBuf>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Natural,
    Reversed,
}

impl OrderArg {
    fn build(self, n: usize) -> ElementOrder {
        match self {
            OrderArg::Natural => ElementOrder::natural(n),
            OrderArg::Reversed => ElementOrder::reversed(n),
        }
    }

    fn label(self) -> &'static str {
        match self {
            OrderArg::Natural => "natural",
            OrderArg::Reversed => "reversed",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the integer bases of the polymatroid.
    Bases,
    /// Count the lattice points of the Minkowski sum at fixed scales.
    Count {
        #[arg(long)]
        t: i64,
        #[arg(long)]
        u: i64,
    },
    /// The full count matrix for 0 <= t, u <= the given bounds.
    Grid {
        #[arg(long)]
        t: i64,
        #[arg(long)]
        u: i64,
    },
    /// The count polynomial in the binomial basis.
    Qpoly,
    /// The transformed count polynomial Q'(x, y).
    Qprime,
    /// The Tutte polynomial of a matroid, by a selectable strategy.
    Tutte {
        /// One of: lattice, corank-nullity, activity.
        #[arg(long, default_value = tutte::DEFAULT_STRATEGY)]
        method: String,
    },
    /// Per-base activity records and the activity polynomials.
    Activity {
        #[arg(long, value_enum, default_value_t = OrderArg::Natural)]
        order: OrderArg,
    },
    /// The Dawson partition of the power set.
    Dawson {
        #[arg(long, value_enum, default_value_t = OrderArg::Natural)]
        order: OrderArg,
    },
    /// Top-degree cells of the mixed subdivision.
    Topdeg {
        #[arg(long, value_enum, default_value_t = OrderArg::Natural)]
        order: OrderArg,
    },
    /// The face poset with its cube decomposition and coefficient table.
    Poset {
        #[arg(long, value_enum, default_value_t = OrderArg::Natural)]
        order: OrderArg,
    },
    /// Replay the verification checks against the input (or a corpus).
    Verify {
        #[arg(long, value_enum, default_value_t = LevelArg::Quick)]
        level: LevelArg,
        /// Truncation order of the series comparison.
        #[arg(long = "series-order", default_value_t = 6)]
        series_order: usize,
        /// Run over a built-in corpus instead of an input: "builtin"
        /// (uniform n <= 6, connected graphs on <= 5 vertices, the running
        /// example and its doubled polymatroid) or "example" (just the
        /// last two).
        #[arg(long)]
        corpus: Option<String>,
    },
}

/// Run with explicit streams; returns the exit code.
pub fn run_from<I, S>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are success, not usage errors.
            return if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                2
            } else {
                let _ = write!(stdout, "{e}");
                0
            };
        }
    };
    match dispatch(cli, stdin, stdout) {
        Ok(code) => code,
        Err(err) => {
            let obj = json!({"error": {"kind": err.kind(), "message": err.to_string()}});
            let _ = writeln!(stderr, "{obj}");
            2
        }
    }
}

/// Entry point used by the binary: real stdin/stdout/stderr.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let mut stdin = std::io::stdin();
    let mut stdout = std::io::stdout();
    let mut stderr = std::io::stderr();
    run_from(args, &mut stdin, &mut stdout, &mut stderr)
}

fn dispatch(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, Error> {
    // The corpus form of verify needs no input.
    if let Command::Verify {
        level,
        series_order,
        corpus: Some(ref which),
    } = cli.command
    {
        return verify_corpus(which, level, series_order, cli.format, out);
    }

    let text = read_input(cli.input.as_deref(), stdin)?;
    let m = parse_polymatroid(&text)?;

    match cli.command {
        Command::Bases => {
            let bases: Vec<Vec<i64>> = enumerate_bases(&m)
                .into_iter()
                .map(|b| b.into_coords())
                .collect();
            match cli.format {
                Format::Json => emit(
                    out,
                    json!({"n": m.n(), "count": bases.len(), "bases": bases}),
                ),
                Format::Pretty => {
                    for b in &bases {
                        writeln_out(out, &row_string(b))?;
                    }
                    Ok(())
                }
            }?;
        }
        Command::Count { t, u } => {
            check_scales(t, u)?;
            let count = count_lattice_points(&m, t, u)?;
            match cli.format {
                Format::Json => emit(out, json!({"t": t, "u": u, "count": count}))?,
                Format::Pretty => writeln_out(out, &count.to_string())?,
            }
        }
        Command::Grid { t, u } => {
            check_scales(t, u)?;
            let grid = count_grid(&m, t, u)?;
            match cli.format {
                Format::Json => emit(out, json!({"t_max": t, "u_max": u, "grid": grid}))?,
                Format::Pretty => {
                    for row in &grid {
                        let cells: Vec<String> = row.iter().map(u64::to_string).collect();
                        writeln_out(out, &cells.join(" "))?;
                    }
                }
            }
        }
        Command::Qpoly => {
            let form = qpoly(&m)?;
            match cli.format {
                Format::Json => {
                    let coeffs: Vec<Value> = form
                        .sorted_coefficients()
                        .into_iter()
                        .map(|(i, j, c)| json!({"i": i, "j": j, "c": bigint_json(&c)}))
                        .collect();
                    emit(
                        out,
                        json!({"n": m.n(), "coefficients": coeffs, "pretty": form.pretty()}),
                    )?;
                }
                Format::Pretty => writeln_out(out, &form.pretty())?,
            }
        }
        Command::Qprime => {
            let q = qprime(&m)?;
            match cli.format {
                Format::Json => emit(out, q.to_json())?,
                Format::Pretty => writeln_out(out, &q.pretty())?,
            }
        }
        Command::Tutte { method } => {
            let strategy = tutte::strategy(&method).ok_or_else(|| {
                Error::InvalidParams(format!(
                    "unknown method {method:?}; available: {}",
                    tutte::strategies()
                        .iter()
                        .map(|s| s.name())
                        .collect::<Vec<_>>()
                        .join(", ")
                ))
            })?;
            let t = strategy.compute(&m)?;
            match cli.format {
                Format::Json => {
                    let mut obj = t.to_json();
                    obj["method"] = json!(strategy.name());
                    emit(out, obj)?;
                }
                Format::Pretty => writeln_out(out, &t.pretty())?,
            }
        }
        Command::Activity { order } => {
            let ord = order.build(m.n());
            let records: Vec<Value> = enumerate_bases(&m)
                .into_iter()
                .map(|b| {
                    let rec = activity_record(&m, &b, &ord).expect("enumerated base");
                    json!({
                        "base": rec.base.coords(),
                        "internal_active": subset_json(rec.internal_active),
                        "external_active": subset_json(rec.external_active),
                        "internal_inactive": rec.internal_inactive(m.n()),
                        "external_inactive": rec.external_inactive(m.n()),
                    })
                })
                .collect();
            let internal = internal_polynomial_with_order(&m, &ord);
            let external = external_polynomial_with_order(&m, &ord);
            match cli.format {
                Format::Json => emit(
                    out,
                    json!({
                        "order": order.label(),
                        "records": records,
                        "internal_polynomial": internal.pretty("xi"),
                        "external_polynomial": external.pretty("eta"),
                    }),
                )?,
                Format::Pretty => {
                    for r in &records {
                        writeln_out(out, &r.to_string())?;
                    }
                    writeln_out(out, &format!("internal: {}", internal.pretty("xi")))?;
                    writeln_out(out, &format!("external: {}", external.pretty("eta")))?;
                }
            }
        }
        Command::Dawson { order } => {
            let ord = order.build(m.n());
            let intervals = dawson_partition(&m, &ord)?;
            match cli.format {
                Format::Json => emit(
                    out,
                    json!({
                        "order": order.label(),
                        "intervals": intervals.iter().map(interval_json).collect::<Vec<_>>(),
                    }),
                )?,
                Format::Pretty => {
                    for iv in &intervals {
                        writeln_out(
                            out,
                            &format!(
                                "[{}, {}] from basis {}",
                                set_string(iv.lower),
                                set_string(iv.upper),
                                set_string(iv.basis)
                            ),
                        )?;
                    }
                }
            }
        }
        Command::Topdeg { order } => {
            let ord = order.build(m.n());
            let faces = top_degree_faces(&m, &ord)?;
            let rows: Vec<Value> = faces
                .iter()
                .map(|f| {
                    json!({
                        "x": subset_json(f.partition.x()),
                        "y": subset_json(f.partition.y()),
                        "base": f.base.coords(),
                        "i": f.dims.0,
                        "j": f.dims.1,
                    })
                })
                .collect();
            match cli.format {
                Format::Json => emit(out, json!({"order": order.label(), "faces": rows}))?,
                Format::Pretty => {
                    for f in &faces {
                        writeln_out(
                            out,
                            &format!(
                                "X={} Y={} base={} dims=({},{})",
                                set_string(f.partition.x()),
                                set_string(f.partition.y()),
                                row_string(f.base.coords()),
                                f.dims.0,
                                f.dims.1
                            ),
                        )?;
                    }
                }
            }
        }
        Command::Poset { order } => {
            let ord = order.build(m.n());
            let poset = face_poset(&m, &ord)?;
            let report = coefficient_check(&m)?;
            let faces: Vec<Value> = poset
                .faces
                .iter()
                .map(|f| {
                    json!({
                        "x": subset_json(f.partition.x()),
                        "y": subset_json(f.partition.y()),
                        "base": f.base.coords(),
                        "i": f.dims.0,
                        "j": f.dims.1,
                    })
                })
                .collect();
            let cubes: Vec<Value> = poset
                .cubes
                .iter()
                .map(|c| {
                    json!({
                        "interval": interval_json(&c.interval),
                        "dim": c.dim,
                        "vertices": c.vertices,
                    })
                })
                .collect();
            let elements: Vec<Value> = poset
                .elements
                .iter()
                .map(|e| {
                    json!({
                        "x": subset_json(e.x),
                        "y": subset_json(e.y),
                        "basis": subset_json(e.basis),
                        "i": e.dims.0,
                        "j": e.dims.1,
                        "cube": e.cube,
                    })
                })
                .collect();
            let coefficients: Vec<Value> = report
                .entries
                .iter()
                .map(|e| {
                    json!({
                        "i": e.i,
                        "j": e.j,
                        "coefficient": bigint_json(&e.coefficient),
                        "cells": e.cell_count,
                        "magnitude_ok": e.magnitude_ok,
                        "sign_ok": e.sign_ok,
                    })
                })
                .collect();
            match cli.format {
                Format::Json => emit(
                    out,
                    json!({
                        "order": order.label(),
                        "faces": faces,
                        "cubes": cubes,
                        "elements": elements,
                        "coefficients": coefficients,
                        "all_match": report.all_match,
                    }),
                )?,
                Format::Pretty => {
                    writeln_out(
                        out,
                        &format!(
                            "{} faces, {} cubes, {} elements, coefficients match: {}",
                            poset.faces.len(),
                            poset.cubes.len(),
                            poset.elements.len(),
                            report.all_match
                        ),
                    )?;
                }
            }
        }
        Command::Verify {
            level,
            series_order,
            corpus: None,
        } => {
            let cfg = VerifyConfig {
                level: match level {
                    LevelArg::Quick => Level::Quick,
                    LevelArg::Full => Level::Full,
                },
                series_order,
            };
            let report = checks::verify(&m, &cfg);
            write_verify_report(&report, level, cli.format, out)?;
            return Ok(if report.passed() { 0 } else { 1 });
        }
        Command::Verify { corpus: Some(_), .. } => unreachable!("handled above"),
    }
    Ok(0)
}

fn verify_corpus(
    which: &str,
    level: LevelArg,
    series_order: usize,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, Error> {
    let mut members: Vec<(String, Polymatroid, Vec<&'static str>)> = Vec::new();
    match which {
        "builtin" => {
            for (name, m) in corpus::default_matroid_corpus() {
                members.push((name, m, vec![]));
            }
        }
        "example" => {
            members.push(("example".into(), corpus::example_matroid(), vec![]));
        }
        other => {
            return Err(Error::InvalidParams(format!(
                "unknown corpus {other:?}; available: builtin, example"
            )))
        }
    }
    // The doubled polymatroid is the known counterexample: sign alternation
    // must fail, and coverage must fail at full level.
    let mut doubled_expected = vec!["sign-alternation"];
    if level == LevelArg::Full {
        doubled_expected.push("coverage");
    }
    members.push(("example-doubled".into(), corpus::example_doubled(), doubled_expected));

    let cfg = VerifyConfig {
        level: match level {
            LevelArg::Quick => Level::Quick,
            LevelArg::Full => Level::Full,
        },
        series_order,
    };
    let mut rows = Vec::new();
    let mut all_ok = true;
    for (name, m, expected_failures) in &members {
        let report = checks::verify(m, &cfg);
        let failed: Vec<&str> = report
            .results
            .iter()
            .filter(|r| r.status == CheckStatus::Fail)
            .map(|r| r.name)
            .collect();
        let ok = failed == *expected_failures;
        all_ok &= ok;
        rows.push(json!({
            "name": name,
            "ok": ok,
            "failed": failed,
            "expected_failures": expected_failures,
        }));
    }
    match format {
        Format::Json => emit(
            out,
            json!({"corpus": which, "passed": all_ok, "members": rows}),
        )?,
        Format::Pretty => {
            for row in &rows {
                writeln_out(
                    out,
                    &format!(
                        "{} {}",
                        if row["ok"].as_bool().unwrap() { "PASS" } else { "FAIL" },
                        row["name"].as_str().unwrap()
                    ),
                )?;
            }
            writeln_out(out, &format!("overall: {}", if all_ok { "PASS" } else { "FAIL" }))?;
        }
    }
    Ok(if all_ok { 0 } else { 1 })
}

fn write_verify_report(
    report: &checks::VerificationReport,
    level: LevelArg,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), Error> {
    match format {
        Format::Json => {
            let rows: Vec<Value> = report
                .results
                .iter()
                .map(|r| {
                    json!({
                        "name": r.name,
                        "statement": r.statement,
                        "status": match r.status {
                            CheckStatus::Pass => "pass",
                            CheckStatus::Fail => "fail",
                            CheckStatus::Skipped => "skipped",
                        },
                        "detail": r.detail,
                    })
                })
                .collect();
            emit(
                out,
                json!({
                    "level": match level { LevelArg::Quick => "quick", LevelArg::Full => "full" },
                    "passed": report.passed(),
                    "checks": rows,
                }),
            )
        }
        Format::Pretty => {
            for r in &report.results {
                let tag = match r.status {
                    CheckStatus::Pass => "PASS",
                    CheckStatus::Fail => "FAIL",
                    CheckStatus::Skipped => "SKIP",
                };
                let mut line = format!("{tag} {} - {}", r.name, r.statement);
                if let Some(detail) = &r.detail {
                    line.push_str(&format!(" [{detail}]"));
                }
                writeln_out(out, &line)?;
            }
            writeln_out(
                out,
                &format!("overall: {}", if report.passed() { "PASS" } else { "FAIL" }),
            )
        }
    }
}

fn read_input(path: Option<&std::path::Path>, stdin: &mut dyn Read) -> Result<String, Error> {
    let mut text = String::new();
    match path {
        Some(p) => {
            text = std::fs::read_to_string(p)
                .map_err(|e| Error::InvalidParams(format!("cannot read {}: {e}", p.display())))?;
        }
        None => {
            stdin
                .read_to_string(&mut text)
                .map_err(|e| Error::InvalidParams(format!("cannot read stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn check_scales(t: i64, u: i64) -> Result<(), Error> {
    if t < 0 || u < 0 {
        return Err(Error::InvalidParams(
            "scale parameters must be nonnegative".into(),
        ));
    }
    Ok(())
}

fn emit(out: &mut dyn Write, value: Value) -> Result<(), Error> {
    writeln_out(out, &value.to_string())
}

fn writeln_out(out: &mut dyn Write, line: &str) -> Result<(), Error> {
    writeln!(out, "{line}").map_err(|e| Error::Internal(format!("write failed: {e}")))
}

fn subset_json(s: Subset) -> Vec<usize> {
    subset_elements(s).collect()
}

fn set_string(s: Subset) -> String {
    crate::core::subset_to_string(s)
}

fn row_string(coords: &[i64]) -> String {
    coords
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn interval_json(iv: &DawsonInterval) -> Value {
    json!({
        "lower": subset_json(iv.lower),
        "upper": subset_json(iv.upper),
        "basis": subset_json(iv.basis),
    })
}

fn bigint_json(c: &num_bigint::BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}
