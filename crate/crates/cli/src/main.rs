//! `rlpart`: command-line front end.
//!
//! JSON goes to stdout, logs to stderr. Exit codes: 0 yes, 1 no, 2 usage
//! or input error, 3 unsupported parameters, 4 a size cap was exceeded.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use rlpart::approx::{approx_vertex, ExactOct};
use rlpart::brute::{brute_min_edge_del, brute_min_vertex_del};
use rlpart::edge::solve_edge;
use rlpart::gen::{gen_rl_graph, plant_edge_noise, plant_vertex_noise, GENERATOR};
use rlpart::kernel::{build_toct_instances, toct_decide_brute, write_kernel_dir};
use rlpart::recognition::recognize_rl;
use rlpart::report::Report;
use rlpart::vertex::{decide_vertex_22, solve_vertex};
use rlpart::{parse_edge_list, Error, Graph, RLParams};

#[derive(Parser)]
#[command(name = "rlpart", version, about = "Deletion to (r,l)-graphs")]
struct Cli {
    /// Log without timestamps, so stderr is reproducible too.
    #[arg(long, global = true, default_value_t = true, action = ArgAction::Set)]
    deterministic: bool,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact minimum deletion set of size at most k.
    Solve(SolveArgs),
    /// Is the graph an (r,l)-graph?
    Recognize(RecognizeArgs),
    /// Approximate vertex deletion.
    Approx(ApproxArgs),
    /// Write the kernel instances of a vertex (2,2) instance.
    Kernelize(KernelArgs),
    /// Generate a planted instance.
    Gen(GenArgs),
    /// Exhaustive minimum, optionally checked against the solver.
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Mode {
    Vertex,
    Edge,
}

#[derive(Clone, Copy, ValueEnum)]
enum OctOracle {
    Exact,
}

#[derive(Args)]
struct Params {
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..=2))]
    r: u8,
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..=2))]
    l: u8,
}

impl Params {
    fn get(&self) -> Result<RLParams, Fail> {
        Ok(RLParams::new(self.r as usize, self.l as usize)?)
    }
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, value_enum)]
    mode: Mode,
    #[command(flatten)]
    params: Params,
    #[arg(short, allow_negative_numbers = true)]
    k: i64,
    /// Edge-list file, or `-` for stdin.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "exact")]
    oct_oracle: OctOracle,
    /// Vertex (2,2): return any solution of size at most k instead of a
    /// minimum one. Faster on large inputs.
    #[arg(long)]
    any: bool,
}

#[derive(Args)]
struct RecognizeArgs {
    #[command(flatten)]
    params: Params,
    #[arg(long)]
    input: PathBuf,
}

#[derive(Args)]
struct ApproxArgs {
    #[command(flatten)]
    params: Params,
    #[arg(short, allow_negative_numbers = true)]
    k: i64,
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "exact")]
    oct_oracle: OctOracle,
}

#[derive(Args)]
struct KernelArgs {
    #[arg(short, allow_negative_numbers = true)]
    k: i64,
    #[arg(long)]
    input: PathBuf,
    /// Output directory.
    #[arg(long)]
    out: PathBuf,
    /// Also decide every instance exhaustively and report the OR.
    #[arg(long)]
    decide: bool,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Noise {
    Vertex,
    Edge,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    params: Params,
    /// Number of noise vertices or edge flips.
    #[arg(long, default_value_t = 0)]
    plant: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Probability of an edge between two parts.
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    #[arg(long, value_enum, default_value = "vertex")]
    noise: Noise,
    /// Edge-list path; the sidecar goes to `<out>.json`.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, value_enum)]
    mode: Mode,
    #[command(flatten)]
    params: Params,
    #[arg(long)]
    input: PathBuf,
    /// Run the exact solver too; exit 1 if the sizes differ.
    #[arg(long)]
    check: bool,
}

/// A failure with its exit code.
struct Fail {
    code: u8,
    msg: String,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        let code = match e {
            Error::CapExceeded { .. } => 4,
            _ => 2,
        };
        Fail { code, msg: e.to_string() }
    }
}

impl From<io::Error> for Fail {
    fn from(e: io::Error) -> Fail {
        Fail { code: 2, msg: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> Fail {
    Fail { code: 2, msg: msg.into() }
}

fn unsupported(msg: impl Into<String>) -> Fail {
    Fail { code: 3, msg: msg.into() }
}

fn budget(k: i64) -> Result<usize, Fail> {
    usize::try_from(k).map_err(|_| usage(format!("k must be non-negative, got {k}")))
}

fn read_graph(path: &Path) -> Result<Graph, Fail> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?
    };
    Ok(parse_edge_list(&text)?)
}

fn emit<T: Serialize>(value: &T) -> Result<(), Fail> {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, value).map_err(io::Error::other)?;
    writeln!(out)?;
    Ok(())
}

fn ms(t: Instant) -> u64 {
    t.elapsed().as_millis() as u64
}

fn exit_for(yes: bool) -> u8 {
    if yes {
        0
    } else {
        1
    }
}

fn solve(a: &SolveArgs) -> Result<u8, Fail> {
    let k = budget(a.k)?;
    let params = a.params.get()?;
    let OctOracle::Exact = a.oct_oracle;
    let g = read_graph(&a.input)?;
    let t = Instant::now();
    match a.mode {
        Mode::Vertex => {
            let res = match (params.r, params.l) {
                (2, 2) if a.any => decide_vertex_22(&g, k),
                (2, 2) | (2, 1) | (1, 2) => solve_vertex(&g, params, k)?,
                _ => return Err(unsupported(format!("vertex deletion to {params} is not supported"))),
            };
            emit(&Report::from_result(res.as_ref(), ms(t)))?;
            Ok(exit_for(res.is_some()))
        }
        Mode::Edge => {
            let res = match (params.r, params.l) {
                (2, 1) | (1, 2) => solve_edge(&g, params, k)?,
                (2, 2) => return Err(unsupported("edge (2,2): open problem per source paper")),
                _ => return Err(unsupported(format!("edge deletion to {params} is not supported"))),
            };
            emit(&Report::from_result(res.as_ref(), ms(t)))?;
            Ok(exit_for(res.is_some()))
        }
    }
}

fn recognize(a: &RecognizeArgs) -> Result<u8, Fail> {
    let params = a.params.get()?;
    let g = read_graph(&a.input)?;
    let t = Instant::now();
    let p = recognize_rl(&g, params);
    emit(&Report::<usize>::from_partition(p.as_ref(), ms(t)))?;
    Ok(exit_for(p.is_some()))
}

fn approx(a: &ApproxArgs) -> Result<u8, Fail> {
    let k = budget(a.k)?;
    let params = a.params.get()?;
    let OctOracle::Exact = a.oct_oracle;
    let g = read_graph(&a.input)?;
    let t = Instant::now();
    let res = match (params.r, params.l) {
        (2, 2) | (2, 1) | (1, 2) => approx_vertex(&g, params, k, &ExactOct)?,
        _ => return Err(unsupported(format!("approximation for {params} is not supported"))),
    };
    emit(&Report::from_result(res.as_ref(), ms(t)))?;
    Ok(exit_for(res.is_some()))
}

#[derive(Serialize)]
struct KernelSummary {
    k: usize,
    instance_count: usize,
    out: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    answer: Option<rlpart::report::Answer>,
    elapsed_ms: u64,
}

fn kernelize(a: &KernelArgs) -> Result<u8, Fail> {
    let k = budget(a.k)?;
    let g = read_graph(&a.input)?;
    let t = Instant::now();
    let hs = build_toct_instances(&g, k)?;
    write_kernel_dir(&a.out, k, &hs)?;
    let mut answer = None;
    if a.decide {
        let mut yes = false;
        for h in &hs {
            if toct_decide_brute(h)? {
                yes = true;
                break;
            }
        }
        answer = Some(if yes { rlpart::report::Answer::Yes } else { rlpart::report::Answer::No });
    }
    emit(&KernelSummary {
        k,
        instance_count: hs.len(),
        out: a.out.display().to_string(),
        answer,
        elapsed_ms: ms(t),
    })?;
    Ok(match answer {
        Some(rlpart::report::Answer::No) => 1,
        _ => 0,
    })
}

#[derive(Serialize)]
struct ParamsJson {
    r: usize,
    l: usize,
}

#[derive(Serialize)]
struct Sidecar {
    seed: u64,
    params: ParamsJson,
    n: usize,
    m: usize,
    /// Kept as text so every JSON number stays an integer.
    p: String,
    noise: Noise,
    planted_k: usize,
    generator: &'static str,
}

fn gen(a: &GenArgs) -> Result<u8, Fail> {
    let params = a.params.get()?;
    if !(0.0..=1.0).contains(&a.p) {
        return Err(usage(format!("p must lie in [0, 1], got {}", a.p)));
    }
    let base = gen_rl_graph(a.seed, a.n, params, a.p);
    let pg = match a.noise {
        Noise::Vertex => plant_vertex_noise(&base, a.seed, a.plant),
        Noise::Edge => plant_edge_noise(&base, a.seed, a.plant),
    };
    fs::write(&a.out, pg.graph.to_edge_list())?;
    let sidecar = Sidecar {
        seed: a.seed,
        params: ParamsJson {
            r: params.r,
            l: params.l,
        },
        n: pg.graph.n(),
        m: pg.graph.m(),
        p: a.p.to_string(),
        noise: a.noise,
        planted_k: pg.planted_k,
        generator: GENERATOR,
    };
    let mut side = a.out.clone().into_os_string();
    side.push(".json");
    fs::write(&side, serde_json::to_string_pretty(&sidecar).map_err(io::Error::other)? + "\n")?;
    emit(&sidecar)?;
    Ok(0)
}

#[derive(Serialize)]
struct OracleReport<T> {
    mode: Mode,
    params: ParamsJson,
    minimum: Option<usize>,
    deleted: Vec<T>,
    #[serde(skip_serializing_if = "Option::is_none")]
    solver_minimum: Option<Option<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agrees: Option<bool>,
}

fn oracle(a: &OracleArgs) -> Result<u8, Fail> {
    let params = a.params.get()?;
    let g = read_graph(&a.input)?;
    let pj = || ParamsJson {
        r: params.r,
        l: params.l,
    };
    let checked = |brute: Option<usize>, solver: Option<usize>| {
        if a.check {
            (Some(solver), Some(brute == solver))
        } else {
            (None, None)
        }
    };
    let agrees = match a.mode {
        Mode::Vertex => {
            let (size, deleted) = brute_min_vertex_del(&g, params)?;
            let solver = if a.check {
                match (params.r, params.l) {
                    (2, 2) | (2, 1) | (1, 2) => solve_vertex(&g, params, g.n())?.map(|r| r.size),
                    _ => return Err(unsupported(format!("no vertex solver for {params}"))),
                }
            } else {
                None
            };
            let (solver_minimum, agrees) = checked(Some(size), solver);
            emit(&OracleReport {
                mode: a.mode,
                params: pj(),
                minimum: Some(size),
                deleted,
                solver_minimum,
                agrees,
            })?;
            agrees
        }
        Mode::Edge => {
            let best = brute_min_edge_del(&g, params)?;
            let solver = if a.check {
                match (params.r, params.l) {
                    (2, 1) | (1, 2) => solve_edge(&g, params, g.m())?.map(|r| r.size),
                    (2, 2) => return Err(unsupported("edge (2,2): open problem per source paper")),
                    _ => return Err(unsupported(format!("no edge solver for {params}"))),
                }
            } else {
                None
            };
            let minimum = best.as_ref().map(|b| b.0);
            let (solver_minimum, agrees) = checked(minimum, solver);
            emit(&OracleReport {
                mode: a.mode,
                params: pj(),
                minimum,
                deleted: best.map(|b| b.1).unwrap_or_default(),
                solver_minimum,
                agrees,
            })?;
            agrees
        }
    };
    Ok(if agrees == Some(false) { 1 } else { 0 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut logger = env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"));
    if cli.deterministic {
        logger.format_timestamp(None);
    }
    logger.init();
    if let Ok(v) = std::env::var("RLPART_THREADS") {
        match v.parse::<usize>() {
            Ok(n) if n > 0 => rlpart::util::set_threads(n),
            _ => {
                eprintln!("error: RLPART_THREADS must be a positive integer, got `{v}`");
                return ExitCode::from(2);
            }
        }
    }
    let res = match &cli.cmd {
        Command::Solve(a) => solve(a),
        Command::Recognize(a) => recognize(a),
        Command::Approx(a) => approx(a),
        Command::Kernelize(a) => kernelize(a),
        Command::Gen(a) => gen(a),
        Command::Oracle(a) => oracle(a),
    };
    match res {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
