use clap::{Parser, Subcommand};
use splitcubic_cli::output::{self, Format};
use splitcubic_cli::scan::{self, ScanConfig};
use splitcubic_cli::tables;
use splitcubic_core::poly::discriminant;
use splitcubic_core::thue::PrimitiveSolution;
use splitcubic_core::{cubic, resolvent, thue, Int};
use std::io::Write;
use std::process::ExitCode;
use std::str::FromStr;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "splitcubic",
    version,
    about = "Exact splitting-field overlap computations for X^3 + mX + m",
    after_help = "Exit codes: 0 success, 1 verification failure, 2 usage error."
)]
struct Cli {
    /// Output format: pretty, json (JSON lines, big integers as strings),
    /// or csv.
    #[arg(long, global = true)]
    format: Option<String>,
    /// Optional TOML config file (m_range, n_range, y_bound, format);
    /// command-line flags win.
    #[arg(long, global = true)]
    config: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Galois group, discriminants, and reality of the splitting field.
    Classify {
        #[arg(allow_hyphen_values = true)]
        m: String,
    },
    /// Decide whether f_m and f_n have the same splitting field.
    Isom {
        #[arg(allow_hyphen_values = true)]
        m: String,
        #[arg(allow_hyphen_values = true)]
        n: String,
    },
    /// Every admissible Thue row (lambda, (x, y), n) for the parameter m.
    Enumerate {
        #[arg(allow_hyphen_values = true)]
        m: String,
        #[arg(long)]
        y_bound: Option<u64>,
    },
    /// The primitive solutions pairing m with itself.
    SelfPairs {
        #[arg(allow_hyphen_values = true)]
        m: String,
    },
    /// Survey ranges for overlapping pairs via the square condition.
    Scan {
        /// Inclusive range lo..hi for the first parameter.
        #[arg(long, allow_hyphen_values = true)]
        m_range: Option<String>,
        /// Inclusive range lo..hi for the second parameter.
        #[arg(long, allow_hyphen_values = true)]
        n_range: Option<String>,
        #[arg(long)]
        y_bound: Option<u64>,
        /// Use the totally-real survey defaults (-200000..-7).
        #[arg(long)]
        real: bool,
    },
    /// Run the certificate suite over a range of m.
    Verify {
        #[arg(long, default_value = "-50..50", allow_hyphen_values = true)]
        m_range: String,
        #[arg(long)]
        y_bound: Option<u64>,
    },
    /// Recompute the reference tables and diff against the embedded rows.
    Tables {
        /// Scan the full survey ranges instead of the reduced real range.
        #[arg(long)]
        full: bool,
    },
}

#[derive(serde::Deserialize, Default)]
struct FileConfig {
    m_range: Option<String>,
    n_range: Option<String>,
    y_bound: Option<u64>,
    format: Option<String>,
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn parse_int(s: &str) -> Result<Int, String> {
    Int::from_str(s).map_err(|_| format!("'{s}' is not an integer"))
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("range '{s}' must look like lo..hi"))?;
    let lo: i64 = lo
        .trim()
        .parse()
        .map_err(|_| format!("bad range bound '{lo}'"))?;
    let hi: i64 = hi
        .trim()
        .parse()
        .map_err(|_| format!("bad range bound '{hi}'"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let file_cfg = match &cli.config {
        None => FileConfig::default(),
        Some(path) => match std::fs::read_to_string(path) {
            Err(e) => return usage(&format!("cannot read config {}: {e}", path.display())),
            Ok(text) => match toml::from_str(&text) {
                Err(e) => return usage(&format!("bad config file: {e}")),
                Ok(cfg) => cfg,
            },
        },
    };
    let format = match cli
        .format
        .clone()
        .or(file_cfg.format.clone())
        .unwrap_or_else(|| "pretty".into())
        .parse::<Format>()
    {
        Ok(f) => f,
        Err(e) => return usage(&e),
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();

    match cli.command {
        Cmd::Classify { m } => {
            let m = match parse_int(&m) {
                Ok(v) => v,
                Err(e) => return usage(&e),
            };
            let class = match cubic::classify(&m) {
                Ok(c) => c,
                Err(e) => return usage(&e.to_string()),
            };
            let report = output::ClassifyReport {
                disc_f: discriminant(&cubic::f_poly(&m)).expect("cubic"),
                disc_big_form: discriminant(&cubic::big_form_poly(&m)).expect("cubic"),
                totally_real: cubic::is_totally_real(&m).expect("m nonzero"),
                m,
                class,
            };
            output::write_records(&mut out, format, &[report]).ok();
        }
        Cmd::Isom { m, n } => {
            let (m, n) = match (parse_int(&m), parse_int(&n)) {
                (Ok(m), Ok(n)) => (m, n),
                (Err(e), _) | (_, Err(e)) => return usage(&e),
            };
            let report = match resolvent::isom_test(&m, &n) {
                Ok(r) => r,
                Err(e) => return usage(&e.to_string()),
            };
            output::write_records(&mut out, format, &[report]).ok();
        }
        Cmd::Enumerate { m, y_bound } => {
            let m = match parse_int(&m) {
                Ok(v) => v,
                Err(e) => return usage(&e),
            };
            let y_bound = y_bound.or(file_cfg.y_bound).unwrap_or(1000);
            let rows = match thue::enumerate_overlaps(&m, y_bound) {
                Ok(r) => r,
                Err(e) => return usage(&e.to_string()),
            };
            output::write_records(&mut out, format, &rows).ok();
        }
        Cmd::SelfPairs { m } => {
            let m = match parse_int(&m) {
                Ok(v) => v,
                Err(e) => return usage(&e),
            };
            let sols: Vec<PrimitiveSolution> = match thue::self_pair_solutions(&m) {
                Ok(s) => s,
                Err(e) => return usage(&e.to_string()),
            };
            let rows: Vec<output::SelfPairRow> = sols
                .into_iter()
                .map(|solution| output::SelfPairRow {
                    m: m.clone(),
                    solution,
                })
                .collect();
            output::write_records(&mut out, format, &rows).ok();
        }
        Cmd::Scan {
            m_range,
            n_range,
            y_bound,
            real,
        } => {
            let defaults = if real {
                ScanConfig::real_range()
            } else {
                ScanConfig::default()
            };
            let mut cfg = defaults;
            let ranges = [
                (m_range.or(file_cfg.m_range.clone()), &mut cfg.m_range),
                (n_range.or(file_cfg.n_range.clone()), &mut cfg.n_range),
            ];
            for (src, dst) in ranges {
                if let Some(s) = src {
                    match parse_range(&s) {
                        Ok(r) => *dst = r,
                        Err(e) => return usage(&e),
                    }
                }
            }
            if let Some(y) = y_bound.or(file_cfg.y_bound) {
                cfg.y_bound = y;
            }
            if let Err(e) = cfg.validate() {
                return usage(&e);
            }
            let rows = scan::scan(&cfg);
            output::write_records(&mut out, format, &rows).ok();
        }
        Cmd::Verify { m_range, y_bound } => {
            let (lo, hi) = match parse_range(&m_range) {
                Ok(r) => r,
                Err(e) => return usage(&e),
            };
            let y_bound = y_bound.or(file_cfg.y_bound).unwrap_or(1000);
            let ok = tables::run_verify(lo, hi, y_bound, &mut out);
            writeln!(
                out,
                "verify: {}",
                if ok { "all checks passed" } else { "FAILED" }
            )
            .ok();
            if !ok {
                return ExitCode::from(EXIT_VERIFY_FAILED);
            }
        }
        Cmd::Tables { full } => {
            let reports = [
                tables::check_enumeration_blocks(1000),
                tables::check_integer_pairs(1000),
                tables::check_imaginary_rows(),
                tables::check_real_rows(full),
            ];
            let mut ok = true;
            for r in &reports {
                writeln!(out, "{}", r.summary()).ok();
                ok &= r.passed();
            }
            writeln!(
                out,
                "tables: {}",
                if ok { "all reproduced" } else { "FAILED" }
            )
            .ok();
            if !ok {
                return ExitCode::from(EXIT_VERIFY_FAILED);
            }
        }
    }
    ExitCode::SUCCESS
}
