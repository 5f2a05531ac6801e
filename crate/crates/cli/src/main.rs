//! `chordal`: generate instances, run the coloring and independent set
//! algorithms centrally or in the simulator, verify solutions, sweep sizes.

mod bench;
mod report;
mod solve;

use chordal_local::io::{parse_graph, parse_solution, write_graph};
use chordal_local::{gen, Error, Graph};
use clap::{Args, Parser, Subcommand};
use report::{Format, Row, HEADER};
use solve::{Algorithm, Job, Mode};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "chordal", version, about = "Distributed approximation on chordal graphs")]
struct Cli {
    /// Directory for files not given an explicit `--out`.
    #[arg(long, env = "CHORDAL_OUT_DIR", global = true)]
    out_dir: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph: `chordal N`, `interval N`, `path N`,
    /// `caterpillar SPINE LEGS`, `spider LEGS LEN` or `clique M`.
    Gen {
        #[arg(required = true, num_args = 1.., value_name = "SPEC")]
        spec: Vec<String>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        max_clique: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run an algorithm on a graph file, verify it and report one row.
    Run {
        algorithm: Algorithm,
        /// `[MODE] GRAPH`; the mode may also come from `--mode`.
        #[arg(required = true, num_args = 1..=2, value_name = "ARGS")]
        target: Vec<String>,
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        #[command(flatten)]
        common: Common,
        /// Solution file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also append the row to this CSV file.
        #[arg(long)]
        append: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Check a solution file against a graph file.
    Verify {
        graph: PathBuf,
        solution: PathBuf,
        /// Also require a ratio of at most `1 + eps`.
        #[arg(long)]
        eps: Option<f64>,
    },
    /// Sweep sizes and seeds on generated instances and emit one CSV.
    Bench {
        algorithm: Algorithm,
        #[arg(long, value_delimiter = ',', default_values_t = [128, 256, 512, 1024])]
        sizes: Vec<usize>,
        /// Seeds `1..=SEEDS` per size.
        #[arg(long, default_value_t = 5)]
        seeds: u64,
        #[arg(long, value_enum, default_value_t = Mode::Local)]
        mode: Mode,
        #[arg(long, default_value_t = 8)]
        max_clique: usize,
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Common {
    /// Accuracy; 0.5 for mvc and 0.4 otherwise when absent.
    #[arg(long)]
    eps: Option<f64>,
    /// Simulator round cap for local runs; the algorithm's own bound when absent.
    #[arg(long)]
    round_cap: Option<u32>,
    /// Recheck structural invariants and compare local runs with central ones.
    #[arg(long)]
    debug_invariants: bool,
}

impl Common {
    fn job(&self, algorithm: Algorithm, mode: Mode) -> Job {
        Job { algorithm, mode, eps: self.eps.unwrap_or(algorithm.default_eps()), round_cap: self.round_cap, debug: self.debug_invariants }
    }
}

enum Failure {
    Usage(String),
    Io(PathBuf, std::io::Error),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Io(..) => 9,
            Failure::Core(e) => match e {
                Error::ParseError { .. } => 3,
                Error::NotChordal | Error::NotInterval | Error::NotProperInterval => 4,
                Error::BadEpsilon(_) | Error::EpsilonTooSmall { .. } => 5,
                Error::RoundCapExceeded { .. } => 6,
                Error::VerificationFailed(_) | Error::UnknownNode(_) => 7,
                Error::BadSpec(_) => 8,
                _ => 1,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) => m.clone(),
            Failure::Io(p, e) => format!("{}: {e}", p.display()),
            Failure::Core(e) => e.to_string(),
        }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

fn read(path: &Path) -> Outcome<String> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.into(), e))
}

fn write(path: &Path, text: &str) -> Outcome<()> {
    fs::write(path, text).map_err(|e| Failure::Io(path.into(), e))
}

fn load_graph(path: &Path) -> Outcome<Graph> {
    Ok(parse_graph(&read(path)?)?)
}

/// Explicit path, else `name` under the output directory, else nothing.
fn destination(explicit: Option<PathBuf>, dir: &Option<PathBuf>, name: &str) -> Option<PathBuf> {
    explicit.or_else(|| dir.as_ref().map(|d| d.join(name)))
}

fn generate(spec: &[String], seed: u64, max_clique: usize) -> Outcome<(Graph, String)> {
    let bad = || Error::BadSpec(spec.join(" "));
    let nums: Vec<usize> = spec[1..].iter().map(|s| s.parse::<usize>().map_err(|_| bad())).collect::<Result<_, _>>()?;
    if nums.contains(&0) {
        return Err(bad().into());
    }
    let g = match (spec[0].as_str(), nums.as_slice()) {
        ("chordal", &[n]) => gen::gen_chordal(n, seed, max_clique),
        ("interval", &[n]) => gen::gen_interval(n, seed),
        ("path", &[n]) => gen::gen_path(n),
        ("caterpillar", &[spine, legs]) => gen::gen_caterpillar(spine, legs),
        ("spider", &[legs, len]) => gen::gen_spider(legs, len),
        ("clique", &[m]) => {
            let mut g = Graph::new();
            for a in 1..=m as u32 {
                g.add_node(a);
                for b in a + 1..=m as u32 {
                    g.add_edge(a, b);
                }
            }
            g
        }
        _ => return Err(bad().into()),
    };
    let mut name = spec.join("-");
    match spec[0].as_str() {
        "chordal" => name += &format!("-s{seed}-w{max_clique}"),
        "interval" => name += &format!("-s{seed}"),
        _ => {}
    }
    Ok((g, name + ".el"))
}

fn row(instance: String, g: &Graph, job: &Job, out: &solve::Outcome, v: &solve::Verdict) -> Row {
    Row {
        instance,
        algorithm: job.algorithm.name(),
        mode: job.mode.name(),
        n: g.n(),
        m: g.m(),
        eps: job.eps,
        k: out.k,
        d: out.d,
        result: v.result,
        oracle: v.oracle,
        ratio: v.ratio,
        rounds: out.rounds,
        layers: out.layers,
        wall_ms: out.wall.as_millis(),
    }
}

fn execute(cli: Cli) -> Outcome<()> {
    let dir = cli.out_dir;
    match cli.cmd {
        Command::Gen { spec, seed, max_clique, out } => {
            let (g, name) = generate(&spec, seed, max_clique)?;
            match destination(out, &dir, &name) {
                Some(path) => write(&path, &write_graph(&g))?,
                None => print!("{}", write_graph(&g)),
            }
        }
        Command::Run { algorithm, target, mode, common, out, append, format } => {
            let (positional, graph_path) = match target.as_slice() {
                [g] => (None, PathBuf::from(g)),
                [m, g] => {
                    let m = <Mode as clap::ValueEnum>::from_str(m, true).map_err(|_| Failure::Usage(format!("unknown mode `{m}`")))?;
                    (Some(m), PathBuf::from(g))
                }
                _ => unreachable!("clap bounds the argument count"),
            };
            let mode = match (positional, mode) {
                (Some(a), Some(b)) if a != b => return Err(Failure::Usage("conflicting modes".into())),
                (a, b) => a.or(b).unwrap_or(Mode::Central),
            };
            let g = load_graph(&graph_path)?;
            let job = common.job(algorithm, mode);
            let outcome = solve::solve(&g, &job)?;
            let text = solve::solution_text(&outcome.solution);
            let stem = graph_path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            // The reported ratio comes from the solution as read back from disk.
            let stored = match destination(out, &dir, &format!("{stem}.{}.{}.sol", algorithm.name(), mode.name())) {
                Some(path) => {
                    write(&path, &text)?;
                    read(&path)?
                }
                None => text,
            };
            let verdict = solve::verify(&g, &parse_solution(&stored)?, Some(job.eps))?;
            let row = row(graph_path.display().to_string(), &g, &job, &outcome, &verdict);
            print!("{}", row.render(format));
            if let Some(path) = append {
                let mut f = fs::OpenOptions::new().create(true).append(true).open(&path).map_err(|e| Failure::Io(path.clone(), e))?;
                let fresh = f.metadata().map(|m| m.len() == 0).unwrap_or(true);
                let line = if fresh { format!("{HEADER}\n{}\n", row.csv()) } else { format!("{}\n", row.csv()) };
                f.write_all(line.as_bytes()).map_err(|e| Failure::Io(path, e))?;
            }
        }
        Command::Verify { graph, solution, eps } => {
            let g = load_graph(&graph)?;
            let sol = parse_solution(&read(&solution)?)?;
            let v = solve::verify(&g, &sol, eps)?;
            println!("ok result={} oracle={} ratio={:.6}", v.result, v.oracle, v.ratio);
        }
        Command::Bench { algorithm, sizes, seeds, mode, max_clique, common, out } => {
            let job = common.job(algorithm, mode);
            let mut csv = format!("{HEADER}\n");
            let mut rows = Vec::new();
            for &n in &sizes {
                for seed in 1..=seeds {
                    let (g, name) = match algorithm {
                        Algorithm::MisInterval => (gen::gen_interval(n, seed), format!("interval-{n}-s{seed}")),
                        _ => (gen::gen_chordal(n, seed, max_clique), format!("chordal-{n}-s{seed}-w{max_clique}")),
                    };
                    let outcome = solve::solve(&g, &job)?;
                    let verdict = solve::verify(&g, &outcome.solution, Some(job.eps))?;
                    let r = row(name, &g, &job, &outcome, &verdict);
                    csv += &format!("{}\n", r.csv());
                    rows.push(r);
                }
            }
            csv += &bench::summary(algorithm, &rows);
            match destination(out, &dir, &format!("bench-{}-{}.csv", algorithm.name(), mode.name())) {
                Some(path) => write(&path, &csv)?,
                None => print!("{csv}"),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
