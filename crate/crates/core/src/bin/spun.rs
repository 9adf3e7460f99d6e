use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use spun::chart::CoordinateChart;
use spun::flat::{FlatJson, LinearSystemJson};
use spun::lap::{eta_inverse_lift, l_ap_equations, l_ap_flat};
use spun::rational::{self, format_rational, RationalVector};
use spun::reduction::{run_reduction_with, PointConfig, ReductionOptions, DEFAULT_RETRY_BUDGET};
use spun::verify;

const FAIL: u8 = 1;
const USAGE: u8 = 2;
const LATTICE_CAP: usize = 100;

#[derive(Parser)]
#[command(name = "spun", version, about = "Exact Spun(d) algebra and the distinct-distance flat reduction")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run the algebra, group, flat and m-term property suites.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=6))]
        dim: u64,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, hide = true)]
        inject_sign_fault: bool,
    },
    /// Print the d equations of L_ap and its canonical basis.
    Flat {
        #[arg(long)]
        dim: usize,
        /// Comma-separated rationals, e.g. 1,0,3/5
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the reduction on a point configuration file.
    Reduce {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Report destination; stdout when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_RETRY_BUDGET)]
        retries: u32,
        /// Lift the dimension guard (2..=4).
        #[arg(long)]
        allow_large: bool,
    },
    /// Write the grid {0..side-1}^d as a point configuration.
    GenLattice {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        side: usize,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Lift the cap of 100 points.
        #[arg(long)]
        allow_large: bool,
    },
    /// Lift a chart point to the J_d element with first coordinate 1.
    EtaInverse {
        #[arg(long)]
        dim: usize,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: USAGE,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify {
            dim,
            trials,
            seed,
            inject_sign_fault,
        } => cmd_verify(dim as usize, trials, seed, inject_sign_fault),
        Command::Flat { dim, a, p, format } => cmd_flat(dim, &a, &p, format),
        Command::Reduce {
            input,
            seed,
            output,
            retries,
            allow_large,
        } => cmd_reduce(&input, seed, output.as_ref(), retries, allow_large),
        Command::GenLattice {
            dim,
            side,
            output,
            allow_large,
        } => cmd_gen_lattice(dim, side, output.as_ref(), allow_large),
        Command::EtaInverse { dim, y, format } => cmd_eta_inverse(dim, &y, format),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn threads() -> Result<Option<usize>, Failure> {
    match std::env::var("SPUN_THREADS") {
        Err(_) => Ok(None),
        Ok(s) if s.trim().is_empty() => Ok(None),
        Ok(s) => s
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&t| t > 0)
            .map(Some)
            .ok_or_else(|| usage(format!("SPUN_THREADS must be a positive integer, got {s:?}"))),
    }
}

fn cmd_verify(dim: usize, trials: usize, seed: u64, fault: bool) -> Result<u8, Failure> {
    if fault {
        spun::blade::set_sign_fault(true);
    }
    let suites = verify::run_all(dim, trials, seed);
    let mut ok = true;
    for s in &suites {
        print!("{s}");
        ok &= s.ok();
    }
    println!("{}", if ok { "all checks passed" } else { "some checks FAILED" });
    Ok(if ok { 0 } else { FAIL })
}

/// Parses a comma-separated rational vector, reporting the byte column of a
/// bad entry.
fn parse_point(flag: &str, s: &str, len: usize) -> Result<RationalVector, Failure> {
    match rational::parse_vector(s) {
        Ok(v) if v.len() == len => Ok(v),
        Ok(v) => Err(usage(format!("--{flag}: expected {len} entries, got {}", v.len()))),
        Err((i, e)) => {
            let col: usize = s.split(',').take(i).map(|p| p.len() + 1).sum();
            Err(usage(format!("--{flag}: entry {} at column {col}: {e}", i + 1)))
        }
    }
}

fn check_dim(dim: usize, lo: usize, hi: usize) -> Result<(), Failure> {
    if (lo..=hi).contains(&dim) {
        Ok(())
    } else {
        Err(usage(format!("dimension {dim} outside supported range {lo}..={hi}")))
    }
}

#[derive(Serialize)]
struct FlatOutput {
    dimension: usize,
    variables: Vec<String>,
    system: LinearSystemJson,
    flat: FlatJson,
    cross_check: bool,
}

fn cmd_flat(dim: usize, a: &str, p: &str, format: Format) -> Result<u8, Failure> {
    check_dim(dim, 2, spun::blade::MAX_DIM)?;
    let a = parse_point("a", a, dim)?;
    let p = parse_point("p", p, dim)?;
    let chart = CoordinateChart::new(dim);
    let labels: Vec<String> = (0..chart.len()).map(|i| chart.label(i)).collect();
    let sys = l_ap_equations(&a, &p).map_err(|e| usage(e.to_string()))?;
    let flat = l_ap_flat(&a, &p).map_err(|e| usage(e.to_string()))?;
    let agree = sys.solution_set() == flat;
    match format {
        Format::Text => {
            println!("{}", sys.render(&labels).join("; "));
            let fj = FlatJson::from(&flat);
            println!("L_ap: dimension {}", flat.dim().unwrap_or(0));
            if let Some(base) = &fj.base {
                println!("  base: ({})", base.join(", "));
            }
            for d in &fj.directions {
                println!("  direction: ({})", d.join(", "));
            }
            println!(
                "cross-check against F_ap ∩ H_1: {}",
                if agree { "PASS" } else { "FAIL" }
            );
        }
        Format::Json => {
            let out = FlatOutput {
                dimension: dim,
                variables: labels.clone(),
                system: LinearSystemJson::new(&sys, labels),
                flat: FlatJson::from(&flat),
                cross_check: agree,
            };
            println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
        }
    }
    Ok(if agree { 0 } else { FAIL })
}

fn write_or_print(output: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_reduce(
    input: &PathBuf,
    seed: u64,
    output: Option<&PathBuf>,
    retries: u32,
    allow_large: bool,
) -> Result<u8, Failure> {
    let text = fs::read_to_string(input)
        .map_err(|e| usage(format!("cannot read {}: {e}", input.display())))?;
    let config = PointConfig::from_json_str(&text)
        .map_err(|e| usage(format!("{}: {e}", input.display())))?;
    if !allow_large {
        check_dim(config.dim(), 2, 4).map_err(|f| usage(format!("{} (use --allow-large)", f.message)))?;
    }
    let opts = ReductionOptions {
        threads: threads()?,
        retry_budget: retries,
        ..Default::default()
    };
    let report = run_reduction_with(&config, seed, &opts).map_err(|e| Failure {
        code: FAIL,
        message: e.to_string(),
    })?;
    write_or_print(output, &report.to_json_string())?;
    let summary = report.summary();
    if output.is_some() {
        print!("{summary}");
    } else {
        eprint!("{summary}");
    }
    Ok(if report.all_pass() { 0 } else { FAIL })
}

fn cmd_gen_lattice(dim: usize, side: usize, output: Option<&PathBuf>, allow_large: bool) -> Result<u8, Failure> {
    check_dim(dim, 2, spun::blade::MAX_DIM)?;
    if side < 2 {
        return Err(usage("side must be at least 2"));
    }
    let count = side.checked_pow(dim as u32);
    if !allow_large && count.map_or(true, |c| c > LATTICE_CAP) {
        return Err(usage(format!(
            "{side}^{dim} points exceeds the cap of {LATTICE_CAP} (use --allow-large)"
        )));
    }
    let config = PointConfig::lattice(dim, side).map_err(|e| usage(e.to_string()))?;
    write_or_print(output, &config.to_json_string())?;
    Ok(0)
}

#[derive(Serialize)]
struct LiftOutput {
    dimension: usize,
    element: String,
    z0_coordinates: Vec<String>,
    norm: String,
}

fn cmd_eta_inverse(dim: usize, y: &str, format: Format) -> Result<u8, Failure> {
    check_dim(dim, 2, spun::blade::MAX_DIM)?;
    let y = parse_point("y", y, dim * (dim + 1) / 2)?;
    let j = eta_inverse_lift(dim, &y).map_err(|e| usage(e.to_string()))?;
    match format {
        Format::Text => {
            println!("j = {}", j.value());
            println!("N(j) = {}", format_rational(j.normsq()));
        }
        Format::Json => {
            let out = LiftOutput {
                dimension: dim,
                element: j.value().to_string(),
                z0_coordinates: j.value().z0_coordinates().iter().map(format_rational).collect(),
                norm: format_rational(j.normsq()),
            };
            println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
        }
    }
    Ok(0)
}
