//! Command-line interface: build catalog systems, run the verification
//! harness, print dimension tables, emit quiver DOT and export structure
//! constants.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use superlie::catalog::{self, FamilySpec};
use superlie::export::ExportTable;
use superlie::quiver::{self, LabelMode};
use superlie::rational;
use superlie::superalgebra;
use superlie::system::GrsSystem;
use superlie::verify;

#[derive(Parser)]
#[command(
    name = "superlie",
    about = "Simple Lie superalgebras from generalized root systems",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a system and print root counts, base and parities.
    Build {
        /// Family: A, B, C, D, D21a, F4, G3
        family: String,
        /// Family parameters (m n for A/B/D, n for C, none otherwise)
        params: Vec<i64>,
        /// Parameter a for D(2,1;a), as an integer or p/q
        #[arg(long)]
        a: Option<String>,
    },
    /// Run the lemma harness on one instance or the default set.
    Verify {
        family: Option<String>,
        params: Vec<i64>,
        #[arg(long)]
        a: Option<String>,
        /// Run every instance of the default set
        #[arg(long)]
        all: bool,
    },
    /// Table of root counts and algebra dimensions.
    Dims {
        #[arg(long)]
        all: bool,
    },
    /// Emit the positive-system quiver as DOT.
    Quiver {
        family: String,
        params: Vec<i64>,
        #[arg(long)]
        a: Option<String>,
        /// Output format (only dot)
        #[arg(long, default_value = "dot")]
        format: String,
        /// Node labels: base | epsdelta
        #[arg(long, default_value = "base")]
        labels: String,
    },
    /// Export the structure-constant table as JSON.
    Export {
        family: String,
        params: Vec<i64>,
        #[arg(long)]
        a: Option<String>,
        /// Output file
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_spec(family: &str, params: &[i64], a: Option<&str>) -> Result<FamilySpec, String> {
    let need = |n: usize| -> Result<(), String> {
        if params.len() == n {
            Ok(())
        } else {
            Err(format!(
                "family {family} takes {n} positional parameter(s), got {}",
                params.len()
            ))
        }
    };
    let nonneg = |v: i64| -> Result<u32, String> {
        u32::try_from(v).map_err(|_| format!("parameter {v} must be non-negative"))
    };
    let spec = match family {
        "A" => {
            need(2)?;
            FamilySpec::A {
                m: nonneg(params[0])?,
                n: nonneg(params[1])?,
            }
        }
        "B" => {
            need(2)?;
            FamilySpec::B {
                m: nonneg(params[0])?,
                n: nonneg(params[1])?,
            }
        }
        "C" => {
            need(1)?;
            FamilySpec::C {
                n: nonneg(params[0])?,
            }
        }
        "D" => {
            need(2)?;
            FamilySpec::D {
                m: nonneg(params[0])?,
                n: nonneg(params[1])?,
            }
        }
        "D21a" => {
            need(0)?;
            let a = a.ok_or("D21a requires --a")?;
            let a = rational::parse(a).ok_or(format!("cannot parse a = {a:?}"))?;
            FamilySpec::D21a { a }
        }
        "F4" => {
            need(0)?;
            FamilySpec::F4
        }
        "G3" => {
            need(0)?;
            FamilySpec::G3
        }
        other => {
            return Err(format!(
                "unknown family {other:?} (A, B, C, D, D21a, F4, G3)"
            ))
        }
    };
    spec.validate().map_err(|e| e.to_string())?;
    Ok(spec)
}

fn build_sys(spec: &FamilySpec) -> Result<GrsSystem, String> {
    catalog::build(spec).map_err(|e| e.to_string())
}

fn cmd_build(spec: &FamilySpec) -> Result<(), String> {
    let sys = build_sys(spec)?;
    let even = sys
        .positive_ids()
        .filter(|&i| sys.parity_id(i) == 0)
        .count();
    let odd = sys
        .positive_ids()
        .filter(|&i| sys.parity_id(i) == 1)
        .count();
    println!("{}", spec.label());
    println!("R+ even={even} odd={odd}");
    let labels = sys.space().labels();
    let base: Vec<String> = (0..sys.base_len())
        .map(|i| {
            let tag = if sys.is_isotropic_id(sys.base_ids()[i]) {
                "isotropic odd"
            } else if sys.base_parity(i) == 1 {
                "real odd"
            } else {
                "even"
            };
            format!("{} ({tag})", sys.base_root(i).pretty(labels))
        })
        .collect();
    println!("base: {}", base.join(", "));
    println!(
        "|R|={} |Π|={} dim 𝔤 = {}",
        sys.len(),
        sys.base_len(),
        sys.len() + sys.base_len()
    );
    Ok(())
}

fn run_reports(spec: &FamilySpec, prefix: &str, failures: &mut usize) -> Result<(), String> {
    let reports = verify::verify_instance(spec).map_err(|e| e.to_string())?;
    for r in &reports {
        println!("{prefix}{}", r.render());
        *failures += r.failures.len();
    }
    Ok(())
}

fn cmd_verify(spec: Option<FamilySpec>, all: bool) -> Result<bool, String> {
    let mut failures = 0usize;
    if all {
        for spec in catalog::default_instances() {
            println!("== {}", spec.label());
            run_reports(&spec, "  ", &mut failures)?;
        }
    } else {
        let spec = spec.ok_or("verify needs a family or --all")?;
        run_reports(&spec, "", &mut failures)?;
    }
    println!("failures: {failures}");
    Ok(failures == 0)
}

fn cmd_dims() -> Result<(), String> {
    println!("{:<14} {:>5} {:>5} {:>6}", "family", "|R0|", "|R1|", "dim");
    for spec in catalog::default_instances() {
        let sys = build_sys(&spec)?;
        let even = 2 * sys
            .positive_ids()
            .filter(|&i| sys.parity_id(i) == 0)
            .count();
        let odd = 2 * sys
            .positive_ids()
            .filter(|&i| sys.parity_id(i) == 1)
            .count();
        println!(
            "{:<14} {:>5} {:>5} {:>6}",
            spec.label(),
            even,
            odd,
            sys.len() + sys.base_len()
        );
    }
    Ok(())
}

fn cmd_quiver(spec: &FamilySpec, format: &str, labels: &str) -> Result<(), String> {
    if format != "dot" {
        return Err(format!("unsupported format {format:?} (only dot)"));
    }
    let mode = match labels {
        "base" => LabelMode::Base,
        "epsdelta" => LabelMode::EpsDelta,
        other => return Err(format!("unsupported labels {other:?} (base | epsdelta)")),
    };
    let sys = build_sys(spec)?;
    let graph = quiver::build_quiver(&sys);
    print!("{}", quiver::emit_dot(&graph, &sys, mode));
    Ok(())
}

fn cmd_export(spec: &FamilySpec, out: &PathBuf) -> Result<(), String> {
    let sys = build_sys(spec)?;
    let basis = superalgebra::generate(&sys).map_err(|e| e.to_string())?;
    let table = superalgebra::structure_constants(&sys, &basis).map_err(|e| e.to_string())?;
    let export = ExportTable::from_table(spec, &table);
    std::fs::write(out, export.to_json()).map_err(|e| e.to_string())?;
    println!("wrote {} (dim {})", out.display(), table.dim);
    Ok(())
}

fn run() -> Result<bool, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Build { family, params, a } => {
            cmd_build(&parse_spec(&family, &params, a.as_deref())?)?;
            Ok(true)
        }
        Command::Verify {
            family,
            params,
            a,
            all,
        } => {
            let spec = match family {
                Some(f) => Some(parse_spec(&f, &params, a.as_deref())?),
                None => None,
            };
            cmd_verify(spec, all)
        }
        Command::Dims { all } => {
            if !all {
                return Err("dims requires --all".into());
            }
            cmd_dims()?;
            Ok(true)
        }
        Command::Quiver {
            family,
            params,
            a,
            format,
            labels,
        } => {
            cmd_quiver(
                &parse_spec(&family, &params, a.as_deref())?,
                &format,
                &labels,
            )?;
            Ok(true)
        }
        Command::Export {
            family,
            params,
            a,
            out,
        } => {
            cmd_export(&parse_spec(&family, &params, a.as_deref())?, &out)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
