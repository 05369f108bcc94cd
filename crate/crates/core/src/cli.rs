//! Command-line front end. `main.rs` only forwards to [`execute`].

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::format::{
    class_from_str, class_to_json, hodge_diamond_csv, hodge_to_json, jacobians_to_json,
    poly_to_json, ranks_from_str, ranks_to_csv, ranks_to_json, report_to_json, report_to_text,
};
use crate::jacobians::decompose;
use crate::lambda::MotiveClass;
use crate::laurent::LaurentInt;
use crate::macdonald::{sym_power_bruteforce, sym_power_curve, sym_power_ranks};
use crate::moduli::{n0_even, n0_odd_report, odd_degree, pair_moduli, StageValue};
use crate::realizations::{betti, hodge, level_per_weight};
use crate::series::{big_f, FMode};
use crate::verify::{self, Suite};

/// Overrides the default truncation order `8g` of the even pipeline.
pub const ORDER_ENV: &str = "MOTIVE_FORGE_ORDER";

#[derive(Parser, Debug)]
#[command(name = "motive-forge", version, about = "Exact computations with motives of curves and their moduli")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Class of the n-th symmetric power of a genus-g curve, or graded ranks.
    SymPower(SymPowerArgs),
    /// Moduli of pairs and of stable bundles.
    #[command(subcommand)]
    Moduli(ModuliCommand),
    /// Betti or Hodge realization of a class read from a file or stdin.
    Realize(RealizeArgs),
    /// Isogeny decomposition of the i-th intermediate jacobian of N0(2,1).
    Jacobians(JacobiansArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// The three-exponent coefficient function.
    BigF(BigFArgs),
}

#[derive(Args, Debug)]
struct SymPowerArgs {
    #[arg(long)]
    genus: u32,
    #[arg(short = 'n')]
    n: usize,
    /// Graded ranks of X as JSON; switches to the rank computation.
    #[arg(long)]
    ranks: Option<String>,
    /// Use the enumeration oracle for --ranks.
    #[arg(long, requires = "ranks")]
    bruteforce: bool,
}

#[derive(Subcommand, Debug)]
enum ModuliCommand {
    /// Class of M_i(d) after i flips.
    Pairs {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        degree: i64,
        #[arg(long)]
        index: i64,
    },
    /// Class of N0(2,1) or the even-degree pipeline report.
    N0 {
        #[arg(long)]
        genus: u32,
        #[arg(long, value_enum)]
        parity: Parity,
        #[arg(long)]
        order: Option<i64>,
        /// Odd degree for the flip chain (default 4g-3).
        #[arg(long)]
        degree: Option<i64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Parity {
    Odd,
    Even,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("kind").required(true).args(["betti", "hodge"])))]
struct RealizeArgs {
    #[arg(long)]
    betti: bool,
    #[arg(long)]
    hodge: bool,
    /// Also report the level of each weight.
    #[arg(long)]
    level: bool,
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct JacobiansArgs {
    #[arg(long)]
    genus: u32,
    #[arg(long)]
    index: u32,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: Suite,
    /// Inclusive range such as `1..3`.
    #[arg(long, value_parser = parse_range, default_value = "2..3")]
    genus_range: (u32, u32),
}

#[derive(Args, Debug)]
struct BigFArgs {
    #[arg(long)]
    genus: u32,
    /// Three exponents, comma separated: `0,1,2`.
    #[arg(long, value_parser = parse_exps, allow_hyphen_values = true)]
    exps: [i64; 3],
    #[arg(long, value_enum, default_value_t = Mode::Closed)]
    mode: Mode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Series,
    Closed,
}

fn parse_range(s: &str) -> std::result::Result<(u32, u32), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let a: u32 = a.trim().parse().map_err(|_| format!("bad range start {a:?}"))?;
    let b: u32 = b.trim().trim_start_matches('=').parse().map_err(|_| format!("bad range end {b:?}"))?;
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}

fn parse_exps(s: &str) -> std::result::Result<[i64; 3], String> {
    let v: Vec<i64> = s
        .split(',')
        .map(|p| p.trim().parse().map_err(|_| format!("bad exponent {p:?}")))
        .collect::<std::result::Result<_, _>>()?;
    v.try_into().map_err(|v: Vec<i64>| format!("expected 3 exponents, got {}", v.len()))
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code: 0 on success, 1 on computation errors or failed
/// checks, 2 on usage errors.
pub fn execute<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let (text, code) = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return match e {
                Error::InvalidInput(_) | Error::Parse(_) | Error::DegenerateDenominator(_) => 2,
                _ => 1,
            };
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, text.as_bytes()).map_err(|e| e.to_string()),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return 1;
    }
    code
}

fn default_order(g: u32) -> Result<i64> {
    match std::env::var(ORDER_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("{ORDER_ENV}={v:?} is not an integer"))),
        Err(_) => Ok(8 * g as i64),
    }
}

fn json_text(v: &Value) -> String {
    format!("{v}\n")
}

fn class_out(x: &MotiveClass, format: Format) -> String {
    match format {
        Format::Json => json_text(&class_to_json(x)),
        Format::Text => format!("{x}\n"),
        Format::Csv => {
            let mut s = String::from("lambda,exponent,coefficient\n");
            for (a, b, c) in x.monomials() {
                s.push_str(&format!("{a},{b},{c}\n"));
            }
            s
        }
    }
}

fn poly_csv(p: &LaurentInt, header: &str) -> String {
    let mut s = format!("{header}\n");
    for (e, c) in p.terms() {
        s.push_str(&format!("{e},{c}\n"));
    }
    s
}

fn run(cli: &Cli) -> Result<(String, i32)> {
    let f = cli.format;
    let text = match &cli.command {
        Command::SymPower(a) => match &a.ranks {
            None => class_out(&sym_power_curve(a.genus, a.n)?, f),
            Some(r) => {
                let b = ranks_from_str(r)?;
                let ranks = if a.bruteforce { sym_power_bruteforce(&b, a.n)? } else { sym_power_ranks(&b, a.n) };
                match f {
                    Format::Json => json_text(&ranks_to_json(&ranks)),
                    Format::Csv => ranks_to_csv(&ranks),
                    Format::Text => format!("{}\n", ranks.to_laurent().render("t", "")),
                }
            }
        },
        Command::Moduli(ModuliCommand::Pairs { genus, degree, index }) => {
            class_out(&pair_moduli(*genus, *degree, *index)?, f)
        }
        Command::Moduli(ModuliCommand::N0 { genus, parity: Parity::Odd, degree, .. }) => {
            let d = degree.unwrap_or_else(|| odd_degree(*genus));
            let report = n0_odd_report(*genus, d)?;
            if let Some(StageValue::Diff(diff)) = report.stage("route_diff") {
                if !diff.is_empty() {
                    return Err(Error::Integrity(format!(
                        "flip chain and closed form disagree in {} weight(s)",
                        diff.len()
                    )));
                }
            }
            let class = report.class("n0_chain").expect("report carries the chain class");
            class_out(class, f)
        }
        Command::Moduli(ModuliCommand::N0 { genus, parity: Parity::Even, order, degree }) => {
            if let Some(d) = degree {
                if *d != 4 * *genus as i64 - 2 {
                    return Err(Error::InvalidInput(format!(
                        "the even pipeline runs at degree 4g-2 = {}, got {d}",
                        4 * *genus as i64 - 2
                    )));
                }
            }
            let order = match order {
                Some(o) => *o,
                None => default_order(*genus)?,
            };
            let report = n0_even(*genus, order)?;
            match f {
                Format::Json => json_text(&report_to_json(&report)),
                Format::Text => report_to_text(&report),
                Format::Csv => {
                    let mut s = String::from("stage,lambda,exponent,coefficient\n");
                    for st in &report.stages {
                        if let StageValue::Class(c) = &st.value {
                            for (a, b, k) in c.monomials() {
                                s.push_str(&format!("{},{a},{b},{k}\n", st.name));
                            }
                        }
                    }
                    s
                }
            }
        }
        Command::Realize(a) => realize(a, f)?,
        Command::Jacobians(a) => {
            let d = decompose(a.genus, a.index)?;
            match f {
                Format::Json => json_text(&jacobians_to_json(&d)),
                Format::Csv => {
                    let mut s = String::from("alpha,multiplicity\n");
                    for (al, m) in &d.factors {
                        s.push_str(&format!("{al},{m}\n"));
                    }
                    s
                }
                Format::Text => {
                    let parts: Vec<String> =
                        d.factors.iter().map(|(al, m)| format!("(J^{al} Jac C)^{m}")).collect();
                    let rhs = if parts.is_empty() { "0".to_string() } else { parts.join(" x ") };
                    format!("J^{} N0 ~ {rhs}\n", d.index)
                }
            }
        }
        Command::Verify(a) => {
            let report = verify::run(a.suite, a.genus_range.0..=a.genus_range.1);
            let code = if report.passed() { 0 } else { 1 };
            let text = match f {
                Format::Json => json_text(&report.to_json()),
                Format::Text => report.to_text(),
                Format::Csv => {
                    let mut s = String::from("name,status\n");
                    for c in &report.checks {
                        s.push_str(&format!("{},{}\n", c.name, c.status.as_str()));
                    }
                    s
                }
            };
            return Ok((text, code));
        }
        Command::BigF(a) => {
            let mode = match a.mode {
                Mode::Series => FMode::Series,
                Mode::Closed => FMode::Closed,
            };
            class_out(&big_f(a.exps[0], a.exps[1], a.exps[2], a.genus, mode)?, f)
        }
    };
    Ok((text, 0))
}

fn realize(a: &RealizeArgs, f: Format) -> Result<String> {
    let input = match &a.input {
        Some(p) => fs::read_to_string(p).map_err(|e| Error::InvalidInput(format!("{}: {e}", p.display())))?,
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::InvalidInput(format!("stdin: {e}")))?;
            s
        }
    };
    let x = class_from_str(&input)?;
    let levels = a.level.then(|| level_per_weight(&x));
    Ok(match f {
        Format::Json => {
            let mut v = if a.betti { poly_to_json(&betti(&x), "t") } else { hodge_to_json(&hodge(&x)) };
            if let Some(levels) = &levels {
                let m: Map<String, Value> = levels.iter().map(|(w, l)| (w.to_string(), json!(l))).collect();
                v["levels"] = Value::Object(m);
            }
            json_text(&v)
        }
        Format::Text => {
            let mut s = if a.betti {
                format!("{}\n", betti(&x).render("t", ""))
            } else {
                format!("{}\n", hodge(&x))
            };
            for (w, l) in levels.iter().flatten() {
                s.push_str(&format!("level weight {w}: {l}\n"));
            }
            s
        }
        Format::Csv => {
            let mut s = if a.betti { poly_csv(&betti(&x), "degree,rank") } else { hodge_diamond_csv(&x) };
            if let Some(levels) = &levels {
                s.push_str("weight,level\n");
                for (w, l) in levels {
                    s.push_str(&format!("{w},{l}\n"));
                }
            }
            s
        }
    })
}
