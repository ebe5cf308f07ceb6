use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::json;
use sl3_fusion::oracle::EvaluationParams;
use sl3_fusion::{
    graded_character_closed, graded_decompose_oracle, graded_multiplicity, irrep_character, lr_coefficient,
    run_sweep, tensor_decompose, weyl_dim, Check, DecompositionJson, DominantWeight, GradedDecomposition,
    SweepConfig,
};

/// Environment variable holding the default `--jobs` for `verify`.
const JOBS_ENV: &str = "SL3_FUSION_JOBS";

#[derive(Parser)]
#[command(name = "sl3-fusion", version, about = "Graded characters of sl3 fusion products")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of V(λ).
    Dim {
        #[arg(required = true, allow_negative_numbers = true, num_args = 2, value_names = ["L1", "L2"])]
        lambda: Vec<i64>,
    },
    /// Formal character of V(λ).
    Char {
        #[arg(required = true, allow_negative_numbers = true, num_args = 2, value_names = ["L1", "L2"])]
        lambda: Vec<i64>,
    },
    /// Decomposition of V(λ) ⊗ V(μ).
    Tensor {
        #[arg(required = true, allow_negative_numbers = true, num_args = 4, value_names = ["L1", "L2", "M1", "M2"])]
        weights: Vec<i64>,
    },
    /// Graded decomposition of the fusion product V(λ) ∗ V(μ).
    FusionChar {
        #[arg(required = true, allow_negative_numbers = true, num_args = 4, value_names = ["L1", "L2", "M1", "M2"])]
        weights: Vec<i64>,
        /// Compute with the evaluation-module oracle instead of the closed form.
        #[arg(long)]
        oracle: bool,
        /// Evaluation points for the oracle.
        #[arg(long, value_name = "Z1,Z2", allow_hyphen_values = true)]
        z: Option<String>,
    },
    /// Graded multiplicity polynomial of V(ν) in V(λ) ∗ V(μ).
    GradedMult {
        #[arg(required = true, allow_negative_numbers = true, num_args = 6, value_names = ["L1", "L2", "M1", "M2", "N1", "N2"])]
        weights: Vec<i64>,
    },
    /// Littlewood–Richardson coefficient of V(η) in V(λ) ⊗ V(μ).
    Lr {
        #[arg(required = true, allow_negative_numbers = true, num_args = 6, value_names = ["L1", "L2", "M1", "M2", "E1", "E2"])]
        weights: Vec<i64>,
    },
    /// Run the cross-check sweep; exits 1 on any failure.
    Verify {
        #[arg(long, default_value_t = 2)]
        max: u32,
        #[arg(long = "oracle-bound", default_value_t = 100)]
        oracle_bound: u64,
        #[arg(long)]
        jobs: Option<usize>,
        /// Evaluation points, repeatable; defaults to 0,1 and 2,5.
        #[arg(long, value_name = "Z1,Z2", allow_hyphen_values = true)]
        z: Vec<String>,
        /// Restrict to the named checks, repeatable.
        #[arg(long = "check", value_name = "NAME")]
        checks: Vec<String>,
    },
}

fn weights(raw: &[i64]) -> Result<Vec<DominantWeight>> {
    raw.chunks(2)
        .map(|c| Ok(DominantWeight::try_from([c[0], c[1]])?))
        .collect()
}

fn parse_z(s: &str) -> Result<EvaluationParams> {
    let (a, b) = s.split_once(',').context("--z expects two rationals separated by a comma")?;
    let parse = |t: &str| t.trim().parse::<BigRational>().with_context(|| format!("bad rational {t:?}"));
    Ok(EvaluationParams::new(parse(a)?, parse(b)?)?)
}

fn parse_check(s: &str) -> Result<Check> {
    serde_json::from_value(json!(s)).with_context(|| format!("unknown check {s:?}"))
}

fn map_text(m: &BTreeMap<DominantWeight, u64>) -> String {
    let body: Vec<String> = m.iter().rev().map(|(k, v)| format!("{k}:{v}")).collect();
    format!("{{{}}}", body.join(","))
}

fn decomposition_output(format: Format, l: DominantWeight, m: DominantWeight, d: &GradedDecomposition) -> String {
    match format {
        Format::Text => d.to_text(),
        Format::Json => DecompositionJson::new(l, m, d).to_json(),
        Format::Latex => d.to_latex(),
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let format = cli.format;
    let out = match cli.command {
        Command::Dim { lambda } => {
            let l = weights(&lambda)?[0];
            match format {
                Format::Json => json!({"lambda": l, "dim": weyl_dim(l)}).to_string(),
                _ => weyl_dim(l).to_string(),
            }
        }
        Command::Char { lambda } => {
            let l = weights(&lambda)?[0];
            let ch = irrep_character(l);
            // Highest weight first, then by depth below it.
            let mut terms: Vec<_> = ch.iter().collect();
            terms.sort_by_key(|(w, _)| ((l.weight() - *w).height(), std::cmp::Reverse(*w)));
            match format {
                Format::Text => {
                    let body: Vec<String> = terms.iter().map(|(w, n)| format!("{w}:{n}")).collect();
                    format!("{{{}}}", body.join(","))
                }
                Format::Json => {
                    let terms: Vec<_> = terms.iter().map(|(w, n)| json!({"weight": w, "mult": n})).collect();
                    json!({"lambda": l, "weights": terms}).to_string()
                }
                Format::Latex => {
                    let terms: Vec<String> = terms
                        .iter()
                        .map(|&(w, n)| {
                            let c = if n == 1 { String::new() } else { n.to_string() };
                            format!("{c}e^{{({},{})}}", w.c1, w.c2)
                        })
                        .collect();
                    terms.join(" + ")
                }
            }
        }
        Command::Tensor { weights: raw } => {
            let w = weights(&raw)?;
            let t = tensor_decompose(w[0], w[1])?;
            match format {
                Format::Text => map_text(&t),
                _ => {
                    let mut d = GradedDecomposition::new();
                    for (nu, n) in &t {
                        d.add_term(*nu, 0, *n);
                    }
                    decomposition_output(format, w[0], w[1], &d)
                }
            }
        }
        Command::FusionChar { weights: raw, oracle, z } => {
            let w = weights(&raw)?;
            let z = z.as_deref().map(parse_z).transpose()?;
            if z.is_some() && !oracle {
                bail!("--z only applies together with --oracle");
            }
            let d = if oracle {
                graded_decompose_oracle(w[0], w[1], &z.unwrap_or_default())?
            } else {
                graded_character_closed(w[0], w[1])
            };
            decomposition_output(format, w[0], w[1], &d)
        }
        Command::GradedMult { weights: raw } => {
            let w = weights(&raw)?;
            let p = graded_multiplicity(w[0], w[1], w[2]);
            match format {
                Format::Text => p.to_string(),
                Format::Json => json!({"lambda": w[0], "mu": w[1], "nu": w[2], "coeffs": p.coeffs()}).to_string(),
                Format::Latex => p.to_latex(),
            }
        }
        Command::Lr { weights: raw } => {
            let w = weights(&raw)?;
            let c = lr_coefficient(w[0], w[1], w[2]);
            match format {
                Format::Json => json!({"lambda": w[0], "mu": w[1], "eta": w[2], "coefficient": c}).to_string(),
                _ => c.to_string(),
            }
        }
        Command::Verify { max, oracle_bound, jobs, z, checks } => {
            let mut cfg = SweepConfig {
                max_coord: max,
                oracle_dim_bound: oracle_bound,
                ..SweepConfig::default()
            };
            if !z.is_empty() {
                cfg.evaluation_params = z.iter().map(|s| parse_z(s)).collect::<Result<_>>()?;
            }
            if !checks.is_empty() {
                cfg.checks = checks.iter().map(|s| parse_check(s)).collect::<Result<BTreeSet<_>>>()?;
            }
            cfg.parallelism = match jobs {
                Some(j) => j,
                None => match std::env::var(JOBS_ENV) {
                    Ok(v) => v.parse().with_context(|| format!("{JOBS_ENV}={v:?} is not a positive integer"))?,
                    Err(_) => std::thread::available_parallelism().map_or(1, |n| n.get()),
                },
            };
            if cfg.parallelism == 0 || oracle_bound == 0 {
                bail!("--jobs and --oracle-bound must be positive");
            }
            let report = run_sweep(&cfg);
            let text = match format {
                Format::Json => report.to_json(),
                _ => report.to_text().trim_end().to_string(),
            };
            println!("{text}");
            return Ok(if report.is_success() { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
    };
    println!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
