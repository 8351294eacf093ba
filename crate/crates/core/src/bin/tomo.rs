//! Command-line front end.
//!
//! Exit codes: 0 feasible/valid, 1 infeasible/invalid, 2 input error,
//! 3 resource limit.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tomo::io::{
    gen_planted, parse_instance, parse_solution, parse_three_color, render, write_instance,
    write_rec, write_solution, AnyInstance, RenderFormat,
};
use tomo::oracle::{oracle_enumerate, oracle_solve, OracleLimits, OracleOutcome, Problem};
use tomo::reductions::{pad_to_k, t1_invert, t2_zero_pad, t3_one_pad, three_color_to_rec};
use tomo::solvers::{solve, Method, SolveStatus};
use tomo::{verify_rec, verify_wrec, Error};

#[derive(Parser)]
#[command(name = "tomo", version, about = "Binary matrix reconstruction under window constraints")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance file
    Solve {
        file: PathBuf,
        #[arg(long, default_value = "auto")]
        method: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        max_nodes: Option<u64>,
    },
    /// Check a solution against an instance
    Verify { instance: PathBuf, solution: PathBuf },
    /// Run the exact search solver
    Oracle {
        file: PathBuf,
        #[arg(long, value_name = "CAP")]
        enumerate: Option<usize>,
        #[arg(long)]
        max_nodes: Option<u64>,
    },
    /// Apply a reduction
    Reduce {
        #[arg(value_enum)]
        kind: ReduceKind,
        file: PathBuf,
    },
    /// Apply an instance transformation
    Transform {
        #[arg(value_enum)]
        kind: TransformKind,
        #[arg(long)]
        k: Option<usize>,
        file: PathBuf,
    },
    /// Generate a planted instance and its witness
    Gen {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        nu: usize,
        #[arg(long)]
        t: u8,
        #[arg(long)]
        density: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out_prefix: Option<String>,
    },
    /// Render a solution file
    Render {
        solution: PathBuf,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReduceKind {
    ThreeColor,
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformKind {
    Invert,
    ZeroPad,
    OnePad,
    PadK,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Pgm,
}

enum Verdict {
    Yes,
    No,
    Limit,
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, bytes: &[u8]) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, bytes),
        None => io::stdout().write_all(bytes),
    }
    .map_err(|e| Error::Input(format!("write failed: {e}")))
}

fn limits(max_nodes: Option<u64>) -> Result<OracleLimits, Error> {
    let mut lim = OracleLimits::default();
    if let Ok(v) = std::env::var("TOMO_MAX_NODES") {
        lim.max_nodes = v
            .parse()
            .map_err(|_| Error::Input(format!("TOMO_MAX_NODES={v:?} is not a number")))?;
    }
    if let Some(n) = max_nodes {
        lim.max_nodes = n;
    }
    Ok(lim)
}

fn problem(inst: &AnyInstance) -> Problem<'_> {
    match inst {
        AnyInstance::Rec(r) => Problem::Rec(r),
        AnyInstance::WRec(w) => Problem::WRec(w),
    }
}

fn run(cmd: Command) -> Result<Verdict, Error> {
    match cmd {
        Command::Solve {
            file,
            method,
            out,
            max_nodes,
        } => {
            let method: Method = method.parse()?;
            let lim = limits(max_nodes)?;
            let status = match parse_instance(&read(&file)?)? {
                AnyInstance::Rec(inst) => {
                    let res = solve(&inst, method, lim)?;
                    eprintln!("method: {}", res.method);
                    res.status
                }
                AnyInstance::WRec(inst) => {
                    if !matches!(method, Method::Auto | Method::Oracle) {
                        return Err(Error::Input(format!(
                            "method {method} applies to REC instances only"
                        )));
                    }
                    eprintln!("method: oracle");
                    match oracle_solve(&inst, lim)? {
                        OracleOutcome::Feasible(x) => SolveStatus::Feasible(x),
                        OracleOutcome::Infeasible => SolveStatus::Infeasible,
                        OracleOutcome::Limit => SolveStatus::OracleLimit,
                    }
                }
            };
            Ok(match status {
                SolveStatus::Feasible(x) => {
                    emit(out.as_deref(), write_solution(&x).as_bytes())?;
                    Verdict::Yes
                }
                SolveStatus::Infeasible => {
                    eprintln!("infeasible");
                    Verdict::No
                }
                SolveStatus::OracleLimit => {
                    eprintln!("oracle limit reached");
                    Verdict::Limit
                }
            })
        }
        Command::Verify { instance, solution } => {
            let inst = parse_instance(&read(&instance)?)?;
            let x = parse_solution(&read(&solution)?)?;
            let report = match &inst {
                AnyInstance::Rec(r) => verify_rec(r, &x)?,
                AnyInstance::WRec(w) => verify_wrec(w, &x)?,
            };
            if report.is_feasible() {
                println!("valid");
                Ok(Verdict::Yes)
            } else {
                print!("{report}");
                Ok(Verdict::No)
            }
        }
        Command::Oracle {
            file,
            enumerate,
            max_nodes,
        } => {
            let inst = parse_instance(&read(&file)?)?;
            let lim = limits(max_nodes)?;
            match enumerate {
                Some(cap) => match oracle_enumerate(problem(&inst), lim, cap) {
                    Ok(all) => {
                        eprintln!("{} solution(s)", all.len());
                        let text: String = all.iter().map(write_solution).collect();
                        emit(None, text.as_bytes())?;
                        Ok(if all.is_empty() { Verdict::No } else { Verdict::Yes })
                    }
                    Err(Error::Resource(msg)) => {
                        eprintln!("{msg}");
                        Ok(Verdict::Limit)
                    }
                    Err(e) => Err(e),
                },
                None => match oracle_solve(problem(&inst), lim)? {
                    OracleOutcome::Feasible(x) => {
                        emit(None, write_solution(&x).as_bytes())?;
                        Ok(Verdict::Yes)
                    }
                    OracleOutcome::Infeasible => {
                        eprintln!("infeasible");
                        Ok(Verdict::No)
                    }
                    OracleOutcome::Limit => {
                        eprintln!("oracle limit reached");
                        Ok(Verdict::Limit)
                    }
                },
            }
        }
        Command::Reduce { kind, file } => match kind {
            ReduceKind::ThreeColor => {
                let tc = parse_three_color(&read(&file)?)?;
                emit(None, write_rec(&three_color_to_rec(&tc)?).as_bytes())?;
                Ok(Verdict::Yes)
            }
        },
        Command::Transform { kind, k, file } => {
            let inst = parse_instance(&read(&file)?)?;
            let need_k = || k.ok_or_else(|| Error::Input("--k is required".into()));
            let out = match (kind, inst) {
                (TransformKind::Invert, AnyInstance::WRec(w)) => AnyInstance::WRec(t1_invert(&w)?),
                (TransformKind::ZeroPad, AnyInstance::WRec(w)) => {
                    AnyInstance::WRec(t2_zero_pad(&w, need_k()?)?)
                }
                (TransformKind::OnePad, AnyInstance::WRec(w)) => {
                    AnyInstance::WRec(t3_one_pad(&w, need_k()?)?)
                }
                (TransformKind::PadK, AnyInstance::Rec(r)) => {
                    AnyInstance::Rec(pad_to_k(&r, need_k()?)?)
                }
                (TransformKind::PadK, _) => {
                    return Err(Error::Input("pad-k expects a REC instance".into()))
                }
                _ => return Err(Error::Input("this transform expects a WREC instance".into())),
            };
            emit(None, write_instance(&out).as_bytes())?;
            Ok(Verdict::Yes)
        }
        Command::Gen {
            m,
            n,
            k,
            nu,
            t,
            density,
            seed,
            out_prefix,
        } => {
            let (inst, witness) = gen_planted(m, n, k, nu, t, density, seed)?;
            match out_prefix {
                Some(prefix) => {
                    emit(Some(Path::new(&format!("{prefix}.rec"))), write_rec(&inst).as_bytes())?;
                    emit(
                        Some(Path::new(&format!("{prefix}.sol"))),
                        write_solution(&witness).as_bytes(),
                    )?;
                }
                None => {
                    let text = write_rec(&inst) + &write_solution(&witness);
                    emit(None, text.as_bytes())?;
                }
            }
            Ok(Verdict::Yes)
        }
        Command::Render {
            solution,
            format,
            out,
        } => {
            let x = parse_solution(&read(&solution)?)?;
            let format = match format {
                Format::Ascii => RenderFormat::Ascii,
                Format::Pgm => RenderFormat::Pgm,
            };
            emit(out.as_deref(), &render(&x, format))?;
            Ok(Verdict::Yes)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Verdict::Yes) => ExitCode::from(0),
        Ok(Verdict::No) => ExitCode::from(1),
        Ok(Verdict::Limit) => ExitCode::from(3),
        Err(Error::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
