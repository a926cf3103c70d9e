//! `smc`: command-line front end for the signed max cut solver.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};
use sha2::{Digest, Sha256};
use signed_maxcut::format::{join_list, parse_instance, serialize, Instance};
use signed_maxcut::fpt::{self, SolveOptions, DEFAULT_MAX_MARKED};
use signed_maxcut::generate::{self, FocParams, Generated};
use signed_maxcut::kernel::{self, Verdict};
use signed_maxcut::{oracle, BalanceWitness, Error};

#[derive(Parser)]
#[command(
    name = "smc",
    version,
    about = "Signed Max Cut above the quarter bound"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test whether the graph is balanced.
    Balance { file: PathBuf },
    /// Print the quarter bound 4*pt(G).
    Bound { file: PathBuf },
    /// Decide whether beta(G) >= pt(G) + k/4 and report the exact beta.
    Solve {
        file: PathBuf,
        /// Overrides the parameter stored in the file.
        #[arg(long, allow_negative_numbers = true)]
        k: Option<i64>,
        /// Cross-check the answer by brute force.
        #[arg(long)]
        check_oracle: bool,
        /// Vertex limit for --check-oracle.
        #[arg(long, default_value_t = oracle::DEFAULT_LIMIT)]
        oracle_limit: usize,
        /// Refuse to enumerate more marked vertices than this.
        #[arg(long, default_value_t = DEFAULT_MAX_MARKED)]
        max_marked: usize,
    },
    /// Shrink the instance to an equivalent one with O(k^3) vertices.
    Kernelize {
        file: PathBuf,
        /// Overrides the parameter stored in the file.
        #[arg(long, allow_negative_numbers = true)]
        k: Option<i64>,
        /// Kernel destination; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print every rule application to standard error.
        #[arg(long)]
        trace: bool,
    },
    /// Exact beta by exhaustive search.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = oracle::DEFAULT_LIMIT)]
        limit: usize,
    },
    /// Write a random connected instance.
    #[command(subcommand)]
    Gen(Gen),
}

#[derive(Subcommand)]
enum Gen {
    /// G(n, p) with negative edges drawn with probability `neg`.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        neg: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long, allow_negative_numbers = true)]
        k: Option<i64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Planted forest of all-negative cliques plus attachment vertices.
    Foc {
        #[arg(long)]
        cliques: usize,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        s_count: usize,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long)]
        seed: u64,
        /// Sign probability at attachment edges; below 1 the graph is also
        /// switched on a random set.
        #[arg(long, default_value_t = 1.0)]
        neg: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Input(String),
    Mismatch(String),
    Other(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Other(e.into())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Mismatch(m)) => {
            eprintln!("oracle mismatch: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn read(path: &Path) -> Result<(Vec<u8>, Instance), Failure> {
    let bytes = fs::read(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let text = std::str::from_utf8(&bytes)
        .map_err(|_| Failure::Input(format!("{}: not UTF-8", path.display())))?;
    let inst =
        parse_instance(text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok((bytes, inst))
}

fn parameter(flag: Option<i64>, inst: &Instance) -> Result<i64, Failure> {
    flag.or(inst.k).ok_or_else(|| {
        Failure::Usage("no parameter: pass --k or add a `k` line to the file".into())
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .context("writing to stdout"),
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Balance { file } => {
            let (_, inst) = read(&file)?;
            match inst.graph.is_balanced() {
                BalanceWitness::Balanced { switch_set } => {
                    println!("balanced W={}", join_list(&switch_set))
                }
                BalanceWitness::Unbalanced { cycle } => {
                    println!("unbalanced cycle={}", join_list(&cycle))
                }
            }
        }
        Command::Bound { file } => {
            let (_, inst) = read(&file)?;
            let q = inst.graph.quarter_bound();
            println!("ptq={} pt={}/4 components={}", q.ptq, q.ptq, q.components);
        }
        Command::Solve {
            file,
            k,
            check_oracle,
            oracle_limit,
            max_marked,
        } => {
            let (_, inst) = read(&file)?;
            let k = parameter(k, &inst)?;
            let opts = SolveOptions {
                exact_beta: true,
                max_marked,
            };
            let r = fpt::solve_with(&inst.graph, k, &opts)?;
            let beta = r.beta.ok_or_else(|| anyhow!("solver returned no beta"))?;
            println!("answer={} beta={beta} route={}", yes_no(r.answer), r.route);
            if check_oracle {
                let want = oracle::beta_with_limit(&inst.graph, oracle_limit)?;
                let answer = 4 * want as i64 >= inst.graph.ptq() + k;
                if want != beta || answer != r.answer {
                    return Err(Failure::Mismatch(format!(
                        "solver answer={} beta={beta}, oracle answer={} beta={want}",
                        yes_no(r.answer),
                        yes_no(answer)
                    )));
                }
                eprintln!("oracle agrees: beta={want}");
            }
        }
        Command::Kernelize {
            file,
            k,
            out,
            trace,
        } => {
            let (bytes, inst) = read(&file)?;
            let k = parameter(k, &inst)?;
            let outcome = kernel::kernelize(&inst.graph, k)?;
            if trace {
                for app in &outcome.one_way {
                    eprintln!("{app}");
                }
                for app in &outcome.two_way {
                    eprintln!("{app}");
                }
            }
            match outcome.verdict {
                Verdict::Yes(reason) => println!("answer=yes reason={reason}"),
                Verdict::Kernel(kern) => {
                    let ids: Vec<_> = kern.graph.vertices().collect();
                    let compact: Vec<_> = kern
                        .s
                        .iter()
                        .map(|v| ids.binary_search(v).map(|i| i as u32 + 1))
                        .collect::<Result<_, _>>()
                        .map_err(|_| anyhow!("marked vertex missing from kernel"))?;
                    let comments = [
                        format!("kernel-of {}", hex::encode(Sha256::digest(&bytes))),
                        format!("S {}", join_list(&compact)),
                    ];
                    let (text, _) = serialize(&kern.graph, Some(kern.k), &comments);
                    emit(out.as_deref(), &text)?;
                    let summary = format!(
                        "kernel n={} k={} bound=B(k)={}",
                        kern.graph.vertex_count(),
                        kern.k,
                        kern.bound
                    );
                    if out.is_some() {
                        println!("{summary}");
                    } else {
                        eprintln!("{summary}");
                    }
                }
            }
        }
        Command::Oracle { file, limit } => {
            let (_, inst) = read(&file)?;
            println!("beta={}", oracle::beta_with_limit(&inst.graph, limit)?);
        }
        Command::Gen(Gen::Random {
            n,
            p,
            neg,
            seed,
            k,
            out,
        }) => {
            check_probability("p", p)?;
            check_probability("neg", neg)?;
            let g = generate::random(n, p, neg, seed)?;
            let head = format!("gen random n={n} p={p} neg={neg} seed={seed}");
            write_generated(&g, head, k, out.as_deref())?;
        }
        Command::Gen(Gen::Foc {
            cliques,
            size,
            s_count,
            k,
            seed,
            neg,
            out,
        }) => {
            check_probability("neg", neg)?;
            if size == 0 {
                return Err(Failure::Usage("--size must be at least 1".into()));
            }
            if cliques == 0 && s_count == 0 {
                return Err(Failure::Usage(
                    "need at least one clique or attachment vertex".into(),
                ));
            }
            let params = FocParams {
                cliques,
                size,
                s_count,
                neg,
                seed,
            };
            let g = generate::foc(&params)?;
            let head = format!(
                "gen foc cliques={cliques} size={size} s-count={s_count} neg={neg} seed={seed}"
            );
            write_generated(&g, head, Some(k), out.as_deref())?;
        }
    }
    Ok(())
}

fn check_probability(name: &str, x: f64) -> Result<(), Failure> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Failure::Usage(format!(
            "--{name} must lie in [0, 1], got {x}"
        )))
    }
}

fn write_generated(g: &Generated, head: String, k: Option<i64>, out: Option<&Path>) -> Outcome {
    let comments = [
        head,
        format!("seed-used={} attempts={}", g.seed, g.attempts),
    ];
    let (text, _) = serialize(&g.graph, k, &comments);
    emit(out, &text)?;
    Ok(())
}
