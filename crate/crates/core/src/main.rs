//! Command-line front end: certified `c_n` enclosures, every closed-form
//! bound, the brute-force oracle, the divisor-lattice application, and the
//! table/figure reproduction documents.

use clap::{Parser, Subcommand, ValueEnum};
use hong_loewy::bounds::Thm31Variant;
use hong_loewy::cache::ResultCache;
use hong_loewy::error::Error;
use hong_loewy::report::{self, DocFormat, ReportConfig};
use hong_loewy::{charpoly, lattice, oracle, roots};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "hong-loewy",
    version,
    about = "Certified enclosures and closed-form bounds for the Hong-Loewy numbers c_n"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,

    /// Printed decimal digits (fractional digits in tables, relative
    /// enclosure digits elsewhere)
    #[arg(long, global = true, default_value_t = 10)]
    digits: u32,

    /// Working precision for interval evaluation of the bounds
    #[arg(long, global = true, default_value_t = 512)]
    precision_bits: u32,

    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,

    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// JSON cache for c_n enclosures and charpoly coefficients
    #[arg(long, global = true)]
    cache_path: Option<PathBuf>,

    /// Which form of the upper bound to evaluate
    #[arg(long, global = true, value_enum, default_value_t = VariantArg::AsStated)]
    variant: VariantArg,

    /// Allow the n = 7 exact oracle scan (2,097,152 matrices)
    #[arg(long, global = true)]
    allow_large: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    /// The published statement (reproduces the reference table)
    AsStated,
    /// The tighter radicand from the derivation chain
    Strict,
}

#[derive(Subcommand)]
enum Cmd {
    /// Certified enclosure of c_n
    Cn {
        #[arg(long)]
        n: usize,
    },
    /// All closed-form bounds for one n (a single table row)
    Bounds {
        #[arg(long)]
        n: usize,
    },
    /// Exact coefficients of the characteristic polynomial p_n
    Charpoly {
        #[arg(long)]
        n: usize,
    },
    /// Brute-force scan of K_n with exact confirmation
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        shards: u64,
    },
    /// Divisor-lattice eigenvalue bound for S = {1..n} with f = identity
    Lattice {
        #[arg(long)]
        n: u64,
    },
    /// Reproduce the reference table for a range of n
    Table1 {
        #[arg(long, default_value_t = 2)]
        from: usize,
        #[arg(long, default_value_t = 10)]
        to: usize,
    },
    /// Emit error-figure data with fitted log-slopes
    Figures {
        #[arg(long, default_value_t = 3)]
        from: usize,
        #[arg(long, default_value_t = 50)]
        to: usize,
    },
    /// Run the verification battery; exits 1 on any failed check
    Verify {
        #[arg(long, default_value_t = 2)]
        from: usize,
        #[arg(long, default_value_t = 20)]
        to: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Domain(_) | Error::Refused(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn config(cli: &Cli) -> ReportConfig {
    ReportConfig {
        digits: cli.digits,
        precision_bits: cli.precision_bits,
        variant: match cli.variant {
            VariantArg::AsStated => Thm31Variant::AsStated,
            VariantArg::Strict => Thm31Variant::Strict,
        },
        cache_path: cli.cache_path.clone(),
    }
}

fn doc_format(cli: &Cli) -> DocFormat {
    match cli.format {
        FormatArg::Csv => DocFormat::Csv,
        FormatArg::Json => DocFormat::Json,
    }
}

fn run(cli: &Cli) -> hong_loewy::Result<ExitCode> {
    match &cli.cmd {
        Cmd::Cn { n } => {
            let cached = match &cli.cache_path {
                Some(p) => ResultCache::load(p)?.get_cn(*n, cli.digits),
                None => None,
            };
            let (lo, hi) = match cached {
                Some(pair) => pair,
                None => {
                    let r = roots::compute_cn(*n, cli.digits)?;
                    if let Some(p) = &cli.cache_path {
                        let mut cache = ResultCache::load(p)?;
                        cache.put_cn(&r, cli.precision_bits)?;
                        cache.save()?;
                    }
                    (r.cn_lo, r.cn_hi)
                }
            };
            let frac = cli.digits as usize;
            let decimal = report::decimal_from_bounds(&lo, &hi, frac)
                .unwrap_or_else(|| report::decimal_fixed(&lo, frac));
            match cli.format {
                FormatArg::Csv => {
                    println!("n,cn_lo,cn_hi,decimal");
                    println!("{n},{lo},{hi},{decimal}");
                }
                FormatArg::Json => {
                    println!(
                        "{}",
                        json!({
                            "n": n,
                            "cn_lo": lo.to_string(),
                            "cn_hi": hi.to_string(),
                            "decimal": decimal,
                        })
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Bounds { n } => {
            let doc = report::emit_table1(*n, *n, &config(cli), doc_format(cli))?;
            print!("{doc}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Charpoly { n } => {
            let p = charpoly::charpoly_recurrence(*n)?;
            match cli.format {
                FormatArg::Csv => {
                    println!("degree,coefficient");
                    for (k, c) in p.coeffs().iter().enumerate() {
                        println!("{k},{c}");
                    }
                }
                FormatArg::Json => {
                    let coeffs: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
                    println!("{}", json!({ "n": n, "coefficients": coeffs }));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Oracle { n, shards } => {
            let r = oracle::brute_force_cn(*n, cli.digits, *shards, cli.allow_large)?;
            let frac = cli.digits as usize;
            let decimal = report::decimal_from_bounds(&r.cn_lo, &r.cn_hi, frac)
                .unwrap_or_else(|| report::decimal_fixed(&r.cn_lo, frac));
            match cli.format {
                FormatArg::Csv => {
                    println!("n,decimal,argmin_bits,matrices_scanned,exact_confirmations");
                    println!(
                        "{},{},{},{},{}",
                        r.n,
                        decimal,
                        r.argmin.bits(),
                        r.matrices_scanned,
                        r.exact_confirmations
                    );
                }
                FormatArg::Json => {
                    println!(
                        "{}",
                        json!({
                            "n": r.n,
                            "cn_lo": r.cn_lo.to_string(),
                            "cn_hi": r.cn_hi.to_string(),
                            "decimal": decimal,
                            "argmin_bits": r.argmin.bits(),
                            "argmin_rows": r.argmin.to_dense(),
                            "matrices_scanned": r.matrices_scanned,
                            "exact_confirmations": r.exact_confirmations,
                        })
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Lattice { n } => {
            let r = lattice::gcd_matrix_bound_identity(*n, cli.digits, cli.precision_bits)?;
            let (blo, bhi) = r.bound.to_f64_pair();
            let (llo, lhi) = r.lambda_min.to_f64_pair();
            match cli.format {
                FormatArg::Csv => {
                    println!("n,bound_lo,bound_hi,lambda_min_lo,lambda_min_hi,holds");
                    println!("{n},{blo:e},{bhi:e},{llo:e},{lhi:e},{}", r.holds);
                }
                FormatArg::Json => {
                    println!(
                        "{}",
                        json!({
                            "n": n,
                            "bound": [blo, bhi],
                            "lambda_min": [llo, lhi],
                            "holds": r.holds,
                        })
                    );
                }
            }
            Ok(if r.holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::Table1 { from, to } => {
            let doc = report::emit_table1(*from, *to, &config(cli), doc_format(cli))?;
            print!("{doc}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Figures { from, to } => {
            let doc = report::emit_error_figures(*from, *to, &config(cli), doc_format(cli))?;
            print!("{doc}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { from, to } => {
            let checks = report::verify_range(*from, *to, &config(cli))?;
            let mut all_ok = true;
            for c in &checks {
                let status = if c.ok { "ok  " } else { "FAIL" };
                if c.detail.is_empty() {
                    println!("{status} {}", c.name);
                } else {
                    println!("{status} {} ({})", c.name, c.detail);
                }
                all_ok &= c.ok;
            }
            println!(
                "{} checks, {}",
                checks.len(),
                if all_ok {
                    "all passed"
                } else {
                    "FAILURES above"
                }
            );
            Ok(if all_ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}
