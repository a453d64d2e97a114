//! `sgp`: numerical semigroups, Feng-Rao distances and GHW bound tables.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error, 3 search budget
//! exceeded (the best bound found is printed and marked uncertified).

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use sgp_core::fengrao::DEFAULT_MAX_NODES;
use sgp_core::{
    classical_fr, div_set_multi, feng_rao_number, generalized_fr, hierarchy_table, new_divisors_via_apery,
    render_strip, Budget, Dim2Semigroup, Error, Format, Layer, NumericalSemigroup, StripSpec,
};

const EXIT_USAGE: u8 = 1;
const EXIT_DOMAIN: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "sgp", version, about = "Numerical semigroups and generalized Feng-Rao distances")]
struct Cli {
    /// Worker threads for searches.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..=256))]
    threads: u16,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Gens {
    /// Generators, comma separated.
    #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
    gens: Vec<i64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Md,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DrawFormat {
    Text,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Genus, conductor, Frobenius number, gaps and minimal generators.
    Info {
        #[command(flatten)]
        gens: Gens,
    },
    /// The Apéry set Ap(S, n).
    Apery {
        #[command(flatten)]
        gens: Gens,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// D(x1, ..., xk), the union of the divisor sets of the given integers.
    Divisors {
        #[command(flatten)]
        gens: Gens,
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        of: Vec<i64>,
    },
    /// D(mbar + n) \ D(mbar) for mbar >= 2c - 1.
    NewDivisors {
        #[command(flatten)]
        gens: Gens,
        #[arg(long)]
        mbar: i64,
        #[arg(long)]
        n: i64,
    },
    /// Classical Feng-Rao distance δ_FR(m).
    Fr {
        #[command(flatten)]
        gens: Gens,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
    },
    /// Generalized Feng-Rao distance δ_FR^r(m) with a witness.
    Frgen {
        #[command(flatten)]
        gens: Gens,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(short, long, value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
        /// Largest configuration element to examine.
        #[arg(long)]
        max_element: Option<i64>,
    },
    /// The Feng-Rao number E(S, r).
    Frnumber {
        #[command(flatten)]
        gens: Gens,
        #[arg(short, long, value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
    },
    /// GFR and Griesmer order bounds on the r-th generalized Hamming weight.
    GhwTable {
        #[command(flatten)]
        gens: Gens,
        #[arg(short, long, value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
        /// Field size.
        #[arg(short, long)]
        q: i64,
        /// Code length, adds the dimension row k_m.
        #[arg(long)]
        n: Option<i64>,
        /// Inclusive range LO:HI of m.
        #[arg(long, value_parser = parse_range)]
        m_range: (i64, i64),
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        /// Subtract this from the printed m labels (Markdown only).
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        label_offset: i64,
    },
    /// Draw an integer strip with highlighted layers.
    Draw {
        #[command(flatten)]
        gens: Gens,
        #[arg(long, allow_hyphen_values = true)]
        origin: i64,
        /// Inclusive row range LO:HI.
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        rows: (i64, i64),
        /// NAME=V1,V2,... or `ground` for the ground at the origin.
        #[arg(long, value_parser = parse_layer, allow_hyphen_values = true)]
        layer: Vec<LayerArg>,
        #[arg(long, value_enum, default_value_t = DrawFormat::Text)]
        format: DrawFormat,
    },
    /// Brute-force reference implementations.
    #[command(hide = true, subcommand)]
    Oracle(OracleCommand),
}

#[derive(Subcommand)]
enum OracleCommand {
    Contains {
        #[command(flatten)]
        gens: Gens,
        #[arg(long, allow_hyphen_values = true)]
        x: i64,
    },
    Apery {
        #[command(flatten)]
        gens: Gens,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    Divisors {
        #[command(flatten)]
        gens: Gens,
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        of: Vec<i64>,
    },
    Frgen {
        #[command(flatten)]
        gens: Gens,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(short, long, value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
        #[arg(long)]
        window: i64,
    },
}

#[derive(Clone)]
enum LayerArg {
    Ground,
    Values(String, Vec<i64>),
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s.split_once(':').ok_or_else(|| format!("expected LO:HI, got `{s}`"))?;
    let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("`{t}`: {e}"));
    Ok((parse(lo)?, parse(hi)?))
}

fn parse_layer(s: &str) -> Result<LayerArg, String> {
    if s == "ground" {
        return Ok(LayerArg::Ground);
    }
    let (name, values) = s.split_once('=').ok_or_else(|| format!("expected NAME=V1,V2,..., got `{s}`"))?;
    if name.is_empty() {
        return Err("layer name is empty".into());
    }
    let values = values
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<i64>().map_err(|e| format!("`{t}`: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LayerArg::Values(name.to_string(), values))
}

/// Failures that are not usage errors.
enum Failure {
    Domain(Error),
    /// The oracle window did not certify its answer.
    Uncertified(serde_json::Value, String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes") + "\n"
}

fn budget(threads: u16) -> Result<Budget, String> {
    let max_nodes = match std::env::var("SGP_BUDGET") {
        Ok(v) => v.trim().parse::<u64>().map_err(|e| format!("SGP_BUDGET=`{v}` is not a node count: {e}"))?,
        Err(_) => DEFAULT_MAX_NODES,
    };
    Ok(Budget { max_nodes, max_element: None, threads: threads as usize })
}

fn semigroup(gens: &Gens) -> Result<NumericalSemigroup, Error> {
    NumericalSemigroup::from_generators(&gens.gens)
}

fn run(cli: Cli, budget: Budget) -> Result<String, Failure> {
    Ok(match cli.command {
        Command::Info { gens } => {
            let s = semigroup(&gens)?;
            to_json(&json!({
                "descriptor": s.descriptor(),
                "embedding_dimension": s.embedding_dimension(),
                "symmetric": s.is_symmetric(),
            }))
        }
        Command::Apery { gens, n } => {
            let s = semigroup(&gens)?;
            let elements = s.apery(n);
            to_json(&json!({ "n": n, "count": elements.len(), "elements": elements }))
        }
        Command::Divisors { gens, of } => {
            let s = semigroup(&gens)?;
            let d = div_set_multi(&s, &of)?;
            to_json(&json!({ "targets": d.targets(), "count": d.len(), "elements": d.elements() }))
        }
        Command::NewDivisors { gens, mbar, n } => {
            let s = semigroup(&gens)?;
            let (elements, method) = match Dim2Semigroup::from_semigroup(&s) {
                Ok(s2) => (s2.new_divisors(mbar, n)?, "rectangles"),
                Err(_) => (new_divisors_via_apery(&s, mbar, n)?, "apery"),
            };
            to_json(&json!({
                "mbar": mbar,
                "n": n,
                "method": method,
                "count": elements.len(),
                "elements": elements,
            }))
        }
        Command::Fr { gens, m } => to_json(&classical_fr(&semigroup(&gens)?, m)?),
        Command::Frgen { gens, m, r, max_element } => {
            let s = semigroup(&gens)?;
            let budget = Budget { max_element, ..budget };
            to_json(&generalized_fr(&s, m, r as usize, &budget)?)
        }
        Command::Frnumber { gens, r } => to_json(&feng_rao_number(&semigroup(&gens)?, r as usize, &budget)?),
        Command::GhwTable { gens, r, q, n, m_range, format, label_offset } => {
            let s = semigroup(&gens)?;
            let table = hierarchy_table(&s, r as usize, q, m_range, n, &budget)?;
            match format {
                TableFormat::Csv => table.to_csv(),
                TableFormat::Json => to_json(&table),
                TableFormat::Md => {
                    let mut out = table.to_markdown(label_offset);
                    if label_offset != 0 {
                        out.push_str(&format!("\nm labels shifted by -{label_offset}\n"));
                    }
                    if !table.skipped.is_empty() {
                        let gaps: Vec<String> = table.skipped.iter().map(i64::to_string).collect();
                        out.push_str(&format!("\nskipped gaps: {}\n", gaps.join(" ")));
                    }
                    out
                }
            }
        }
        Command::Draw { gens, origin, rows, layer, format } => {
            let (a, b) = match gens.gens.as_slice() {
                &[a, b] => (a, b),
                _ => return Err(Error::BadStrip("draw needs exactly two generators a,b".into()).into()),
            };
            let layers = layer
                .into_iter()
                .map(|l| match l {
                    LayerArg::Ground => sgp_core::ground_layer(a, b, origin),
                    LayerArg::Values(name, values) => Layer::new(name, values),
                })
                .collect();
            let spec = StripSpec { a, b, origin, rows, layers };
            let format = match format {
                DrawFormat::Text => Format::Text,
                DrawFormat::Svg => Format::Svg,
            };
            render_strip(&spec, format)?
        }
        Command::Oracle(cmd) => run_oracle(cmd)?,
    })
}

fn run_oracle(cmd: OracleCommand) -> Result<String, Failure> {
    use sgp_oracle::{naive_apery, naive_contains, naive_divisors, naive_generalized_fr};
    // The oracle has no input validation of its own.
    let check = |gens: &Gens| semigroup(gens).map(|_| ());
    Ok(match cmd {
        OracleCommand::Contains { gens, x } => {
            check(&gens)?;
            to_json(&json!({ "x": x, "member": naive_contains(&gens.gens, x) }))
        }
        OracleCommand::Apery { gens, n } => {
            check(&gens)?;
            let elements = naive_apery(&gens.gens, n);
            to_json(&json!({ "n": n, "count": elements.len(), "elements": elements }))
        }
        OracleCommand::Divisors { gens, of } => {
            check(&gens)?;
            let elements = naive_divisors(&gens.gens, &of);
            to_json(&json!({ "targets": of, "count": elements.len(), "elements": elements }))
        }
        OracleCommand::Frgen { gens, m, r, window } => {
            let s = semigroup(&gens)?;
            if !s.contains(m) {
                return Err(Error::NotInSemigroup(m).into());
            }
            match naive_generalized_fr(&gens.gens, m, r as usize, window) {
                Ok(fr) => to_json(&json!({ "m": m, "r": r, "value": fr.value, "witness": fr.witness })),
                Err(e) => {
                    let value = json!({
                        "m": m,
                        "r": r,
                        "uncertified": true,
                        "value": e.uncertified.as_ref().map(|f| f.value),
                        "witness": e.uncertified.as_ref().map(|f| f.witness.clone()),
                        "window_needed": e.needed,
                    });
                    return Err(Failure::Uncertified(value, e.to_string()));
                }
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let budget = match budget(cli.threads) {
        Ok(b) => b,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(cli, budget) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(Error::BudgetExceeded { best_bound, witness, explored })) => {
            print!(
                "{}",
                to_json(&json!({
                    "uncertified": true,
                    "best_bound": best_bound,
                    "witness": witness,
                    "explored": explored,
                }))
            );
            eprintln!(
                "error: search budget exhausted after {explored} nodes; {best_bound} is an uncertified upper bound"
            );
            ExitCode::from(EXIT_BUDGET)
        }
        Err(Failure::Uncertified(value, msg)) => {
            print!("{}", to_json(&value));
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_BUDGET)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_DOMAIN)
        }
    }
}
