//! `seqkit`: exact-arithmetic sequence toolkit.
//!
//! Subcommands expose series reversion, the convolutional recurrence
//! engine, Riordan/recursive-matrix constructions, Patalan sequences, and
//! an offline OEIS b-file verification harness. All output is
//! deterministic: identical invocations produce byte-identical bytes.

mod bfile;
mod literal;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use seqkit_core::convrec::{
    solve_reversion_recurrence, solve_reversion_recurrence_zero, PolynomialReversionProblem,
};
use seqkit_core::patalan::patalan_sequence;
use seqkit_core::rational::{display_rat, parse_rat, Rat};
use seqkit_core::riordan::{
    a_sequence, dual_riordan, recursive_matrix_window, riordan_build, RiordanArray,
};
use seqkit_core::serialize::{matrix_to_json, series_to_json};
use seqkit_core::PowerSeries;

use verify::CheckStatus;

#[derive(Parser)]
#[command(name = "seqkit", version, about = "Exact power series and Riordan array toolkit")]
struct Cli {
    /// Emit JSON instead of plain text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compositional inverse of a series with zero constant term
    Revert {
        /// Series literal, e.g. "0,1,-1"
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, default_value_t = 32)]
        order: usize,
    },
    /// Reversion via the convolutional recurrence
    Recur {
        /// Polynomial B as comma-separated coefficients
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Rational root of B to seed with; omitted means B(0) = 0
        #[arg(long, allow_hyphen_values = true)]
        root: Option<String>,
        #[arg(long, default_value_t = 32)]
        order: usize,
    },
    /// Lower-triangular Riordan array R(g, f)
    Riordan {
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
    /// Doubly infinite recursive matrix window for D(g, f)
    Recmat {
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        /// Window covers indices -halfwidth ..= halfwidth
        #[arg(long, default_value_t = 4)]
        halfwidth: usize,
    },
    /// Dual Riordan array R*(g, f)
    Dual {
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
    /// A-sequence of a Riordan array
    Aseq {
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
    /// Patalan numbers for parameter p
    Patalan {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 32)]
        order: usize,
    },
    /// Verify computed sequences against OEIS b-file fixtures
    VerifyOeis {
        #[arg(long, default_value = "./fixtures")]
        fixtures: PathBuf,
        /// Number of terms to compare per sequence
        #[arg(long, default_value_t = 20)]
        terms: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.cmd {
        Cmd::Revert { poly, order } => {
            let f = literal::parse_series(&poly, order)?;
            let rev = f.revert().map_err(|e| e.to_string())?;
            print_series(&rev, cli.json);
        }
        Cmd::Recur { poly, root, order } => {
            let b = parse_coeffs(&poly)?;
            let terms = match root {
                None => solve_reversion_recurrence_zero(&b, order),
                Some(r) => {
                    let root = parse_rat(&r).ok_or_else(|| format!("bad rational {r:?}"))?;
                    solve_reversion_recurrence(&PolynomialReversionProblem {
                        poly: b,
                        root,
                        order,
                    })
                }
            }
            .map_err(|e| e.to_string())?;
            print_terms(&terms, cli.json);
        }
        Cmd::Riordan { g, f, order } => {
            let arr = build_array(&g, &f, order)?;
            print_array(&arr, cli.json);
        }
        Cmd::Recmat { g, f, halfwidth } => {
            let order = 2 * halfwidth + 1;
            let g = literal::parse_series(&g, order)?;
            let f = literal::parse_series(&f, order)?;
            let w = recursive_matrix_window(&g, &f, halfwidth).map_err(|e| e.to_string())?;
            let m = w.to_matrix();
            if cli.json {
                println!("{}", matrix_to_json(&m));
            } else {
                for i in 0..m.rows() as i64 {
                    let n = i + m.row_offset;
                    let row: Vec<String> = (0..m.cols() as i64)
                        .map(|j| display_rat(m.get(n, j + m.col_offset)))
                        .collect();
                    println!("{n}: {}", row.join(" "));
                }
            }
        }
        Cmd::Dual { g, f, order } => {
            // the dual realizes one order fewer than its inputs
            let gs = literal::parse_series(&g, order + 1)?;
            let fs = literal::parse_series(&f, order + 1)?;
            let dual = dual_riordan(&gs, &fs).map_err(|e| e.to_string())?;
            if cli.json {
                let mut obj = serde_json::Map::new();
                obj.insert("g".into(), series_to_json(&gs));
                obj.insert("f".into(), series_to_json(&fs));
                obj.insert("dual_g".into(), series_to_json(dual.g()));
                obj.insert("dual_f".into(), series_to_json(dual.f()));
                println!("{}", serde_json::Value::Object(obj));
            } else {
                println!("g:      {}", series_line(&gs));
                println!("f:      {}", series_line(&fs));
                println!("dual g: {}", series_line(dual.g()));
                println!("dual f: {}", series_line(dual.f()));
            }
        }
        Cmd::Aseq { g, f, order } => {
            let arr = build_array(&g, &f, order)?;
            let a = a_sequence(&arr, order).map_err(|e| e.to_string())?;
            print_terms(&a, cli.json);
        }
        Cmd::Patalan { p, order } => {
            let terms = patalan_sequence(p, order).map_err(|e| e.to_string())?;
            print_terms(&terms, cli.json);
        }
        Cmd::VerifyOeis { fixtures, terms } => {
            let report = verify::run_verification(&fixtures, terms).map_err(|e| e.to_string())?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            } else {
                for check in &report.checks {
                    let status = match check.status {
                        CheckStatus::Pass => "pass",
                        CheckStatus::Fail => "FAIL",
                        CheckStatus::Skipped => "skipped",
                    };
                    match check.first_mismatch {
                        Some(i) => println!("{:<24} {status} (first mismatch at {i})", check.name),
                        None => println!("{:<24} {status}", check.name),
                    }
                }
                println!("overall: {}", if report.overall { "pass" } else { "FAIL" });
            }
            if !report.overall {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_coeffs(input: &str) -> Result<Vec<Rat>, String> {
    input
        .split(',')
        .map(|tok| parse_rat(tok).ok_or_else(|| format!("bad rational {:?}", tok.trim())))
        .collect()
}

fn build_array(g: &str, f: &str, order: usize) -> Result<RiordanArray, String> {
    let g = literal::parse_series(g, order)?;
    let f = literal::parse_series(f, order)?;
    riordan_build(&g, &f, order).map_err(|e| e.to_string())
}

fn series_line(s: &PowerSeries) -> String {
    s.coeffs()
        .iter()
        .map(display_rat)
        .collect::<Vec<_>>()
        .join(" ")
}

fn print_series(s: &PowerSeries, json: bool) {
    if json {
        println!("{}", series_to_json(s));
    } else {
        for (n, c) in s.coeffs().iter().enumerate() {
            println!("{n} {}", display_rat(c));
        }
    }
}

fn print_terms(terms: &[Rat], json: bool) {
    if json {
        let items: Vec<serde_json::Value> = terms
            .iter()
            .map(|r| serde_json::Value::String(display_rat(r)))
            .collect();
        println!("{}", serde_json::Value::Array(items));
    } else {
        for (n, c) in terms.iter().enumerate() {
            println!("{n} {}", display_rat(c));
        }
    }
}

fn print_array(arr: &RiordanArray, json: bool) {
    if json {
        let rows: Vec<serde_json::Value> = arr
            .entries()
            .iter()
            .map(|row| {
                serde_json::Value::Array(
                    row.iter()
                        .map(|r| serde_json::Value::String(display_rat(r)))
                        .collect(),
                )
            })
            .collect();
        println!("{}", serde_json::Value::Array(rows));
    } else {
        for row in arr.entries() {
            println!("{}", row.iter().map(display_rat).collect::<Vec<_>>().join(" "));
        }
    }
}
