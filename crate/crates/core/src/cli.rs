//! Command-line front end.
//!
//! Reports go to stdout as `key: value` lines and are byte-stable for fixed inputs and seeds; a
//! one-line human summary goes to stderr. Exit codes: 0 success, 1 a NonMember verdict or a
//! failure found, 2 usage, input or parse errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use crate::classes::{self, CheckConfig, ClassVerdict, Status};
use crate::error::Error;
use crate::io::{self, format_number, format_vector, Block};
use crate::par;
use crate::tcp::{self, SolverConfig, TcpSolution};
use crate::tensor::{Matrix, Tensor};
use crate::verify::{self, SuiteConfig, SUITES};

#[derive(Debug, Parser)]
#[command(name = "tensorcp", version, about = "Semipositive tensor classes and tensor complementarity problems")]
struct Cli {
    /// Worker threads for the parallel paths (0 = library default).
    #[arg(long, global = true, env = "TENSORCP_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct CheckArgs {
    /// Simplex mesh density; verdicts hold up to resolution 1/GRID.
    #[arg(long, default_value_t = 32)]
    grid: usize,
    #[arg(long, default_value_t = 200)]
    refine: usize,
    #[arg(long, default_value_t = 1e-9)]
    tol_pos: f64,
    #[arg(long, default_value_t = 1e-9)]
    tol_neg: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl CheckArgs {
    fn config(&self) -> CheckConfig {
        CheckConfig {
            grid_resolution: self.grid,
            refine_iters: self.refine,
            tol_pos: self.tol_pos,
            tol_neg: self.tol_neg,
            seed: self.seed,
        }
    }
}

#[derive(Debug, clap::Args)]
struct SolverArgs {
    #[arg(long, default_value_t = 25)]
    starts: usize,
    #[arg(long, default_value_t = 100)]
    iters: usize,
    #[arg(long, default_value_t = 1.0)]
    damping: f64,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long, default_value_t = 1e-8)]
    dedupe: f64,
    #[arg(long = "solver-seed", default_value_t = 0)]
    solver_seed: u64,
}

impl SolverArgs {
    fn config(&self) -> SolverConfig {
        SolverConfig {
            newton_starts: self.starts,
            newton_iters: self.iters,
            damping: self.damping,
            tol_residual: self.tol,
            dedupe_radius: self.dedupe,
            seed: self.solver_seed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Semipositive,
    StrictSemipositive,
    Semimonotone,
    StrictSemimonotone,
    P0,
    P,
    R0,
    R,
    QFalsify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Operand {
    Matrix,
    Tensor,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate M u^(r-1).
    Eval {
        #[arg(long)]
        tensor: PathBuf,
        /// Components of u, e.g. "1 1".
        #[arg(long = "vec", allow_hyphen_values = true)]
        vector: String,
    },
    /// Run a class checker.
    #[command(group(ArgGroup::new("input").required(true).args(["tensor", "matrix"])))]
    Classify {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        tensor: Option<PathBuf>,
        #[arg(long)]
        matrix: Option<PathBuf>,
        #[command(flatten)]
        check: CheckArgs,
        #[command(flatten)]
        solver: SolverArgs,
        /// Number of q vectors tried by q-falsify.
        #[arg(long, default_value_t = 100)]
        q_samples: usize,
    },
    /// Print the majorization matrix m_{ij..j}.
    Majorize {
        #[arg(long)]
        tensor: PathBuf,
    },
    /// General product A * B of a matrix or tensor A with a matrix or tensor B.
    Product {
        /// How to read the left operand file.
        #[arg(long, value_enum)]
        left: Operand,
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        /// Also write the result tensor to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve TCP(q, M) or LCP(q, A) by support enumeration.
    #[command(group(ArgGroup::new("problem").required(true).args(["tcp", "lcp"])))]
    #[command(group(ArgGroup::new("input").required(true).args(["tensor", "matrix"])))]
    Solve {
        #[arg(long)]
        tcp: bool,
        #[arg(long)]
        lcp: bool,
        #[arg(long)]
        tensor: Option<PathBuf>,
        #[arg(long)]
        matrix: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Run a randomized property suite (or "all").
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        /// Write one file per counterexample here.
        #[arg(long)]
        dump_dir: Option<PathBuf>,
        #[command(flatten)]
        check: CheckArgs,
    },
}

enum Failure {
    Usage(String),
    Input(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

type Outcome = std::result::Result<(String, String, i32), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn blocks(path: &Path) -> Result<Vec<Block>, Failure> {
    io::parse_blocks(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// First tensor block of the file; an order-2 tensor is also accepted as a matrix block.
fn load_tensor(path: &Path) -> Result<Tensor, Failure> {
    for b in blocks(path)? {
        match b {
            Block::Tensor(t) => return Ok(t),
            Block::Matrix(m) => return Ok(Tensor::from_matrix(&m)),
            Block::Vector(_) => {}
        }
    }
    Err(Failure::Usage(format!("{}: no tensor block", path.display())))
}

fn load_matrix(path: &Path) -> Result<Matrix, Failure> {
    for b in blocks(path)? {
        match b {
            Block::Matrix(m) => return Ok(m),
            Block::Tensor(t) if t.order() == 2 => return Ok(t.to_matrix().expect("order 2")),
            _ => {}
        }
    }
    Err(Failure::Usage(format!("{}: no matrix block", path.display())))
}

fn numbers(text: &str, what: &str) -> Result<Vec<f64>, Failure> {
    io::parse_number_list(text).map_err(|e| Failure::Usage(format!("--{what}: {e}")))
}

fn verdict_report(kind: &str, v: &ClassVerdict, out: &mut String) {
    let _ = writeln!(out, "kind: {kind}");
    let _ = writeln!(out, "status: {}", v.status.as_str());
    if let Some(w) = &v.witness {
        let _ = writeln!(out, "witness: {}", format_vector(w));
    }
    if let Some(c) = &v.certificate_values {
        let _ = writeln!(out, "certificate: {}", format_vector(c));
    }
    if let Some(r) = v.resolution {
        let _ = writeln!(out, "resolution: {}", format_number(r));
    }
}

fn check_config_line(c: &CheckConfig) -> String {
    format!(
        "config: grid={} refine={} tol_pos={} tol_neg={}\nseed: {}\n",
        c.grid_resolution,
        c.refine_iters,
        format_number(c.tol_pos),
        format_number(c.tol_neg),
        c.seed
    )
}

fn solver_config_line(c: &SolverConfig) -> String {
    format!(
        "solver: starts={} iters={} damping={} tol={} dedupe={} seed={}\n",
        c.newton_starts,
        c.newton_iters,
        format_number(c.damping),
        format_number(c.tol_residual),
        format_number(c.dedupe_radius),
        c.seed
    )
}

fn solutions_report(sols: &[TcpSolution], out: &mut String) {
    let _ = writeln!(out, "solutions: {}", sols.len());
    for (i, s) in sols.iter().enumerate() {
        let k = i + 1;
        let _ = writeln!(out, "solution.{k}.u: {}", format_vector(&s.u));
        let _ = writeln!(out, "solution.{k}.w: {}", format_vector(&s.w));
        let _ = writeln!(out, "solution.{k}.support: {}", s.support);
        let _ = writeln!(out, "solution.{k}.residual: {}", format_number(s.residual));
    }
}

fn classify(kind: Kind, tensor: Option<PathBuf>, matrix: Option<PathBuf>, check: CheckConfig, solver: SolverConfig, q_samples: usize) -> Outcome {
    check.validate()?;
    solver.validate()?;
    let path = tensor.as_deref().or(matrix.as_deref()).expect("input group is required");
    let name = kind.to_possible_value().expect("no skipped variants").get_name().to_string();
    let mut out = String::new();
    let verdict = match kind {
        Kind::Semimonotone | Kind::StrictSemimonotone => {
            let a = load_matrix(path)?;
            if kind == Kind::Semimonotone {
                classes::check_semimonotone(&a)
            } else {
                classes::check_strictly_semimonotone(&a)
            }
        }
        Kind::QFalsify => {
            let m = load_tensor(path)?;
            let rep = classes::q_falsifier(&m, q_samples, &solver)?;
            let _ = writeln!(out, "kind: {name}");
            let _ = writeln!(out, "samples: {}", rep.samples);
            let _ = writeln!(out, "unsolved: {}", rep.failures.len());
            for q in &rep.failures {
                let _ = writeln!(out, "q: {}", format_vector(q));
            }
            out.push_str(&solver_config_line(&solver));
            let code = i32::from(!rep.failures.is_empty());
            let summary = if code == 1 {
                format!("not Q: {} of {} sampled q had no solution", rep.failures.len(), rep.samples)
            } else {
                format!("no evidence against Q in {} samples", rep.samples)
            };
            return Ok((out, summary, code));
        }
        _ => {
            let m = load_tensor(path)?;
            match kind {
                Kind::Semipositive => classes::check_semipositive(&m, &check),
                Kind::StrictSemipositive => classes::check_strictly_semipositive(&m, &check),
                Kind::P0 => classes::check_p0(&m, &check),
                Kind::P => classes::check_p(&m, &check),
                Kind::R0 => classes::check_r0(&m, &solver)?,
                Kind::R => classes::check_r(&m, &solver)?,
                _ => unreachable!(),
            }
        }
    };
    verdict_report(&name, &verdict, &mut out);
    match kind {
        Kind::Semimonotone | Kind::StrictSemimonotone => {}
        Kind::R0 | Kind::R => out.push_str(&solver_config_line(&solver)),
        _ => out.push_str(&check_config_line(&check)),
    }
    let summary = match verdict.status {
        Status::NonMember => format!("{name}: NonMember (witness found)"),
        Status::MemberExact => format!("{name}: member (exact)"),
        Status::MemberUpToResolution => format!("{name}: member up to search resolution (no witness found)"),
    };
    Ok((out, summary, i32::from(verdict.status == Status::NonMember)))
}

fn dispatch(cmd: Command) -> Outcome {
    match cmd {
        Command::Eval { tensor, vector } => {
            let m = load_tensor(&tensor)?;
            let u = numbers(&vector, "vec")?;
            let v = m.contract(&u)?;
            Ok((format!("result: {}\n", format_vector(&v)), format!("evaluated M u^{}", m.order() - 1), 0))
        }
        Command::Classify { kind, tensor, matrix, check, solver, q_samples } => {
            classify(kind, tensor, matrix, check.config(), solver.config(), q_samples)
        }
        Command::Majorize { tensor } => {
            let m = load_tensor(&tensor)?;
            let maj = m.majorization();
            let out = format!("matrix: {maj}\nrow_diagonal: {}\n", m.is_row_diagonal());
            Ok((out, format!("majorization of a {}x{} tensor", m.order(), m.dim()), 0))
        }
        Command::Product { left, a, b, out: out_path } => {
            let lhs = match left {
                Operand::Matrix => Tensor::from_matrix(&load_matrix(&a)?),
                Operand::Tensor => load_tensor(&a)?,
            };
            let rhs = load_tensor(&b)?;
            let prod = lhs.shao_product(&rhs)?;
            let mut out = format!("order: {}\ndim: {}\nnnz: {}\n", prod.order(), prod.dim(), prod.nnz());
            for (t, v) in prod.entries() {
                let idx: Vec<String> = t.iter().map(|i| i.to_string()).collect();
                let _ = writeln!(out, "entry: {} {}", idx.join(" "), format_number(v));
            }
            if let Some(p) = out_path {
                std::fs::write(&p, io::write_tensor(&prod))
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display())))?;
            }
            Ok((out, format!("product has order {} and {} nonzeros", prod.order(), prod.nnz()), 0))
        }
        Command::Solve { tcp: _, lcp, tensor, matrix, q, solver } => {
            let path = tensor.as_deref().or(matrix.as_deref()).expect("input group is required");
            let q = numbers(&q, "q")?;
            let mut out = String::new();
            if lcp {
                let a = load_matrix(path)?;
                let rep = tcp::solve_lcp_with_diagnostics(&a, &q)?;
                let _ = writeln!(out, "problem: lcp");
                solutions_report(&rep.solutions, &mut out);
                let _ = writeln!(out, "singular_supports: {}", rep.singular_supports.len());
                let n = rep.solutions.len();
                Ok((out, format!("LCP: {n} solution(s), exact enumeration"), 0))
            } else {
                let m = load_tensor(path)?;
                let cfg = solver.config();
                let rep = tcp::solve_tcp_with_diagnostics(&m, &q, &cfg)?;
                let d = &rep.diagnostics;
                let _ = writeln!(out, "problem: tcp");
                solutions_report(&rep.solutions, &mut out);
                let _ = writeln!(out, "completeness: found set");
                let _ = writeln!(
                    out,
                    "diagnostics: supports={} starts={} converged={} singular_jacobians={} singular_supports={} line_search_failures={} rejected={}",
                    d.supports, d.starts, d.converged, d.singular_jacobians, d.singular_supports, d.line_search_failures, d.rejected
                );
                out.push_str(&solver_config_line(&cfg));
                let n = rep.solutions.len();
                Ok((out, format!("TCP: {n} solution(s) found (not proven complete)"), 0))
            }
        }
        Command::Verify { suite, trials, dump_dir, check } => {
            let seed = check.seed;
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            let cfg = SuiteConfig { trials, seed, check: check.config(), ..Default::default() };
            let mut out = String::new();
            let mut summary = Vec::new();
            let mut failures = 0;
            for name in names {
                let rep = verify::run_suite(name, &cfg)?;
                out.push_str(&rep.to_text());
                failures += rep.failures;
                summary.push(format!("{name}: {}/{} failed in {:.2?}", rep.failures, rep.trials, rep.wall_time));
                if let Some(dir) = &dump_dir {
                    std::fs::create_dir_all(dir)
                        .map_err(|e| Failure::Usage(format!("cannot create {}: {e}", dir.display())))?;
                    for c in &rep.counterexamples {
                        let p = dir.join(format!("{name}-trial{}.txt", c.trial));
                        std::fs::write(&p, &c.dump)
                            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display())))?;
                        let _ = writeln!(out, "dump: {}", p.display());
                    }
                }
            }
            out.push_str(&check_config_line(&cfg.check));
            Ok((out, summary.join("; "), i32::from(failures > 0)))
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    if let Some(n) = cli.threads.filter(|&n| n > 0) {
        if !par::set_threads(n) {
            let _ = writeln!(err, "note: thread pool already initialized; --threads ignored");
        }
    }
    match dispatch(cli.command) {
        Ok((report, summary, code)) => {
            let _ = write!(out, "{report}");
            let _ = writeln!(err, "{summary}");
            code
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Input(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
