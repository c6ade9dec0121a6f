//! `lonesum` command-line tool.
//!
//! Exit codes: 0 lonesum / success, 1 not lonesum (or ambiguous/infeasible
//! margins), 2 search budget exceeded, 3 enumeration limit exceeded,
//! 64 usage error, 65 malformed matrix input, 66 unreadable input file.

use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lonesum::bijection::BoundedPermutation;
use lonesum::oracle::Criterion;
use lonesum::report::{self, CountQuery, Payload, SeriesQuery, Verdict};
use lonesum::weak::DEFAULT_BUDGET;
use lonesum::{Error, QMatrix, Symbol};

const EXIT_LIMIT: u8 = 3;
const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;
const EXIT_NO_INPUT: u8 = 66;

#[derive(Parser)]
#[command(
    name = "lonesum",
    version,
    about = "Lonesum matrices: detection, reconstruction, counting and search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Print the JSON payload instead of plain text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a matrix is strongly (or weakly) lonesum.
    Check {
        /// Matrix file in the text format, or `-` for standard input.
        file: String,
        /// Use row and column structure vectors instead of sums.
        #[arg(long)]
        weak: bool,
        /// Node budget for the weak search (default: $LONESUM_BUDGET or 10^8).
        #[arg(long)]
        budget: Option<u64>,
        #[command(flatten)]
        out: Output,
    },
    /// Rebuild the unique matrix with the given row and column sums.
    Reconstruct {
        #[arg(long)]
        q: Symbol,
        /// Comma-separated row sums.
        #[arg(long, value_delimiter = ',', required = true)]
        rows: Vec<u64>,
        /// Comma-separated column sums.
        #[arg(long, value_delimiter = ',', required = true)]
        cols: Vec<u64>,
        #[command(flatten)]
        out: Output,
    },
    /// Count q-ary lonesum matrices.
    Count {
        #[arg(long)]
        q: u32,
        /// Number of rows (defaults to n with --symmetric).
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: usize,
        /// Count symmetric n x n matrices.
        #[arg(long, conflicts_with = "stairs")]
        symmetric: bool,
        /// Count binary matrices with j + 1 stairs.
        #[arg(long, value_name = "J")]
        stairs: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Print generating-function coefficients as a table (m, n, value).
    Series {
        #[arg(long)]
        q: u32,
        #[arg(long, default_value_t = 8)]
        order: usize,
        /// Expand the single-variable series for column count K.
        #[arg(long, value_name = "K", conflicts_with = "symmetric")]
        fixed_index: Option<usize>,
        /// Expand the symmetric-matrix series.
        #[arg(long)]
        symmetric: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Map binary lonesum matrices to bounded permutations and back.
    Bijection {
        #[command(subcommand)]
        direction: Direction,
    },
    /// Weak lonesum search with cycle and small-submatrix diagnostics.
    WeakSearch {
        file: String,
        #[arg(long)]
        budget: Option<u64>,
        #[command(flatten)]
        out: Output,
    },
    /// Brute-force enumeration report (JSON).
    Oracle {
        #[arg(long)]
        q: Symbol,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Group by structure vectors instead of sums.
        #[arg(long, conflicts_with = "symmetric")]
        weak: bool,
        /// Enumerate symmetric matrices (requires m = n).
        #[arg(long)]
        symmetric: bool,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand)]
enum Direction {
    /// Matrix file to a one-line permutation (1-based images).
    ToPerm {
        file: String,
        #[command(flatten)]
        out: Output,
    },
    /// Permutation images to the matrix, in the text format.
    FromPerm {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// The images σ(1) .. σ(m+n).
        #[arg(required = true, num_args = 1..)]
        images: Vec<usize>,
        #[command(flatten)]
        out: Output,
    },
}

/// A failure with its exit code and message.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => EXIT_DATA,
            Error::NotLonesum => 1,
            Error::BudgetExceeded { .. } => 2,
            Error::LimitExceeded { .. } => EXIT_LIMIT,
            Error::Domain(_) => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn read_matrix(path: &str) -> Result<QMatrix, Failure> {
    let text = if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure {
            code: EXIT_NO_INPUT,
            message: format!("cannot read standard input: {e}"),
        })?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure {
            code: EXIT_NO_INPUT,
            message: format!("cannot read {path}: {e}"),
        })?
    };
    Ok(QMatrix::parse(&text)?)
}

fn budget(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("LONESUM_BUDGET") {
        Ok(v) => v.trim().parse().map_err(|_| Failure {
            code: EXIT_USAGE,
            message: format!("LONESUM_BUDGET must be a nonnegative integer, got '{v}'"),
        }),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn exit_code(p: &Payload) -> u8 {
    match p.verdict {
        Verdict::Lonesum | Verdict::Unique | Verdict::Ok => 0,
        Verdict::NotLonesum | Verdict::Ambiguous | Verdict::Infeasible => 1,
        Verdict::BudgetExceeded => 2,
    }
}

fn verdict_text(v: Verdict) -> &'static str {
    match v {
        Verdict::Lonesum => "lonesum",
        Verdict::NotLonesum => "not lonesum",
        Verdict::BudgetExceeded => "budget exceeded",
        Verdict::Unique => "unique",
        Verdict::Ambiguous => "ambiguous",
        Verdict::Infeasible => "infeasible",
        Verdict::Ok => "ok",
    }
}

/// Prints a matrix given as a serialized `{q, m, n, rows}` value in the text format.
fn matrix_text(v: &serde_json::Value) -> String {
    let rows: Vec<String> = v["rows"]
        .as_array()
        .map(|rs| {
            rs.iter()
                .map(|r| {
                    r.as_array()
                        .map(|xs| {
                            xs.iter()
                                .map(|x| x.to_string())
                                .collect::<Vec<_>>()
                                .join(" ")
                        })
                        .unwrap_or_default()
                })
                .collect()
        })
        .unwrap_or_default();
    format!("{} {} {}\n{}", v["q"], v["m"], v["n"], rows.join("\n"))
}

fn emit(p: &Payload, json: bool, plain: impl FnOnce(&Payload) -> String) -> u8 {
    let text = if json { p.to_json() } else { plain(p) };
    // A closed pipe (e.g. `| head`) is not an error for a report writer.
    let mut stdout = io::stdout().lock();
    let _ = writeln!(stdout, "{text}").and_then(|()| stdout.flush());
    exit_code(p)
}

fn cert(p: &Payload) -> &serde_json::Value {
    p.certificate.as_ref().unwrap_or(&serde_json::Value::Null)
}

fn weak_text(p: &Payload) -> String {
    let c = cert(p);
    let mut lines = vec![
        verdict_text(p.verdict).to_string(),
        format!("nodes {}", c["nodes"]),
    ];
    if !c["alternative"].is_null() {
        lines.push("alternative".to_string());
        lines.push(matrix_text(&c["alternative"]));
    }
    let search = &c["search"];
    if !search.is_null() {
        match search["cycle"]["cells"].as_array() {
            Some(cells) => lines.push(format!(
                "cycle a={} b={} cells {}",
                search["cycle"]["a"],
                search["cycle"]["b"],
                cells
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            )),
            None => lines.push("cycle none".to_string()),
        }
        if search["small_forbidden"].is_null() {
            lines.push("small forbidden submatrix none".to_string());
        } else {
            lines.push(format!(
                "small forbidden submatrix rows {} cols {}",
                search["small_forbidden"]["rows"], search["small_forbidden"]["cols"]
            ));
        }
    }
    lines.join("\n")
}

fn run(cli: Cli) -> Result<u8, Failure> {
    Ok(match cli.command {
        Command::Check {
            file,
            weak,
            budget: b,
            out,
        } => {
            let m = read_matrix(&file)?;
            if weak {
                let p = report::check_weak(&m, budget(b)?);
                emit(&p, out.json, weak_text)
            } else {
                let p = report::check_strong(&m);
                emit(&p, out.json, |p| {
                    let c = cert(p);
                    match p.verdict {
                        Verdict::NotLonesum => format!(
                            "not lonesum\nwitness rows {} cols {} entries {}",
                            c["rows"], c["cols"], c["entries"]
                        ),
                        _ => "lonesum".to_string(),
                    }
                })
            }
        }
        Command::Reconstruct { q, rows, cols, out } => {
            let p = report::reconstruct(q, rows, cols)?;
            emit(&p, out.json, |p| match p.verdict {
                Verdict::Unique => format!("unique\n{}", matrix_text(cert(p))),
                v => verdict_text(v).to_string(),
            })
        }
        Command::Count {
            q,
            m,
            n,
            symmetric,
            stairs,
            out,
        } => {
            let query = if symmetric {
                if m.is_some_and(|m| m != n) {
                    return Err(Failure {
                        code: EXIT_USAGE,
                        message: "--symmetric needs m = n".to_string(),
                    });
                }
                CountQuery::Symmetric { n }
            } else {
                let m = m.ok_or_else(|| Failure {
                    code: EXIT_USAGE,
                    message: "--m is required".to_string(),
                })?;
                match stairs {
                    Some(j) => CountQuery::Stairs { m, n, j },
                    None => CountQuery::Lonesum { m, n },
                }
            };
            let p = report::count(q, query)?;
            emit(&p, out.json, |p| p.count.clone().unwrap_or_default())
        }
        Command::Series {
            q,
            order,
            fixed_index,
            symmetric,
            out,
        } => {
            let query = match (fixed_index, symmetric) {
                (Some(k), _) => SeriesQuery::FixedIndex(k),
                (None, true) => SeriesQuery::Symmetric,
                (None, false) => SeriesQuery::Lonesum,
            };
            let p = report::series(q, order, query)?;
            emit(&p, out.json, |p| {
                let mut lines = vec!["m\tn\tvalue".to_string()];
                for row in cert(p)["coefficients"].as_array().into_iter().flatten() {
                    lines.push(format!(
                        "{}\t{}\t{}",
                        row["m"],
                        row["n"],
                        row["value"].as_str().unwrap_or("")
                    ));
                }
                lines.join("\n")
            })
        }
        Command::Bijection { direction } => match direction {
            Direction::ToPerm { file, out } => {
                let p = report::to_permutation(&read_matrix(&file)?)?;
                emit(&p, out.json, |p| {
                    let images = cert(p)["permutation"]
                        .as_array()
                        .cloned()
                        .unwrap_or_default();
                    images
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                })
            }
            Direction::FromPerm { m, n, images, out } => {
                let perm = BoundedPermutation::new(m, n, images)?;
                let p = report::from_permutation(&perm)?;
                emit(&p, out.json, |p| matrix_text(cert(p)))
            }
        },
        Command::WeakSearch {
            file,
            budget: b,
            out,
        } => {
            let m = read_matrix(&file)?;
            let p = report::weak_search(&m, budget(b)?);
            emit(&p, out.json, weak_text)
        }
        Command::Oracle {
            q,
            m,
            n,
            weak,
            symmetric,
            out,
        } => {
            let criterion = if symmetric {
                Criterion::Symmetric
            } else if weak {
                Criterion::Weak
            } else {
                Criterion::Strong
            };
            let p = report::oracle(q, m, n, criterion)?;
            emit(&p, out.json, |p| {
                serde_json::to_string_pretty(cert(p)).expect("reports serialize")
            })
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("lonesum: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
