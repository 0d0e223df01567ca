//! Command-line front end for `altermatic-core`.
//!
//! [`run`] parses arguments, executes one subcommand, writes a report and returns the exit
//! code: 0 success, 1 verification failure, 2 usage or parse error, 3 resource cap.

pub mod error;
pub mod formats;
pub mod report;
mod selftest;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::time::Instant;

use altermatic_core::proof::{self, AuditOutcome};
use altermatic_core::{
    alt_min, alt_sigma, chromatic_number, complete_uniform, kneser_graph, lower_bound, random_hypergraph,
    schrijver_hypergraph, verify_theorem, AltMinOptions, AltReport, Coloring, Hypergraph, Limits, LinearOrder,
    Parallelism,
};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

pub use error::{CliError, CliResult, EXIT_FAILURE, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE};
use report::{echo_command, InputDigest, RunReport};

/// Orderings drawn by `altbound`/`verify` when `n` is too large for exhaustive search and
/// no mode was given.
pub const DEFAULT_SAMPLES: usize = 64;

#[derive(Debug, Parser)]
#[command(name = "altermatic", version, about = "Altermatic lower bounds and coloring audits for general Kneser graphs")]
struct Cli {
    /// Emit a JSON report instead of `key: value` lines.
    #[arg(long, global = true)]
    json: bool,
    /// Evaluate orderings on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a generated hypergraph file.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Exact chromatic number of KG(H) with a witness coloring.
    Chromatic {
        #[command(flatten)]
        input: HypergraphArg,
        /// Also write the witness coloring to this file (`-` for stdout).
        #[arg(short = 'o', long)]
        output: Option<String>,
    },
    /// Alternation number and bound for one ordering.
    Altsigma {
        #[command(flatten)]
        input: HypergraphArg,
        #[arg(short = 'k')]
        k: usize,
        /// Vertex ordering as a permutation, e.g. "3 1 2"; identity if omitted.
        #[arg(long)]
        sigma: Option<String>,
    },
    /// Minimum alternation over orderings and the resulting lower bound.
    Altbound {
        #[command(flatten)]
        input: HypergraphArg,
        #[arg(short = 'k')]
        k: usize,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Compare the lower bound with the exact chromatic number; exit 0 iff it holds.
    Verify {
        #[command(flatten)]
        input: HypergraphArg,
        #[arg(short = 'k')]
        k: usize,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Search a coloring for two disjoint edges of the same color.
    Audit {
        #[command(flatten)]
        input: HypergraphArg,
        #[arg(short = 'k')]
        k: usize,
        /// Coloring file, one color per edge.
        #[arg(short = 'c', long = "coloring")]
        coloring: String,
        #[arg(long)]
        sigma: Option<String>,
        /// Maximum number of walk steps (default from the environment).
        #[arg(long)]
        step_cap: Option<u64>,
    },
    /// Run the built-in example and oracle checks.
    Selftest,
}

#[derive(Debug, Args)]
struct HypergraphArg {
    /// Hypergraph file (`-` for stdin).
    #[arg(short = 'H', long = "hypergraph")]
    hypergraph: String,
}

#[derive(Debug, Args)]
struct ModeArgs {
    /// Search all orderings.
    #[arg(long, conflicts_with = "samples")]
    exhaustive: bool,
    /// Search the identity plus this many random orderings.
    #[arg(long)]
    samples: Option<usize>,
    /// Seed for sampled orderings.
    #[arg(long, requires = "samples")]
    seed: Option<u64>,
}

#[derive(Debug, Subcommand)]
enum Family {
    /// All r-subsets of [m].
    Kneser {
        #[arg(short = 'm')]
        m: usize,
        #[arg(short = 'r')]
        r: usize,
        #[arg(short = 'o', long, default_value = "-")]
        output: String,
    },
    /// r-subsets of [m] with no two cyclically adjacent elements.
    Schrijver {
        #[arg(short = 'm')]
        m: usize,
        #[arg(short = 'r')]
        r: usize,
        #[arg(short = 'o', long, default_value = "-")]
        output: String,
    },
    /// Distinct random edges with sizes in a range.
    Random {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'e')]
        e: usize,
        /// Edge size range `A..B` (inclusive).
        #[arg(long, value_parser = parse_range)]
        sizes: (usize, usize),
        #[arg(long)]
        seed: u64,
        #[arg(short = 'o', long, default_value = "-")]
        output: String,
    },
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: usize = a.trim().parse().map_err(|_| format!("bad lower size {a:?}"))?;
    let b: usize = b.trim().parse().map_err(|_| format!("bad upper size {b:?}"))?;
    if a == 0 || a > b {
        return Err(format!("need 1 <= A <= B, got {a}..{b}"));
    }
    Ok((a, b))
}

/// Runs one command line. `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let echo = echo_command(
        &args
            .iter()
            .skip(1)
            .map(|a| a.to_string_lossy().into_owned())
            .collect::<Vec<_>>(),
    );
    let mut session = Session {
        stdin,
        stdin_used: false,
        limits: Limits::from_env(),
        parallelism: if cli.sequential { Parallelism::Sequential } else { Parallelism::Parallel },
        inputs: Vec::new(),
        seed: None,
    };
    let started = Instant::now();
    let outcome = execute(&cli.command, &mut session, stdout);
    match outcome {
        Ok(Outcome { results, code, emit }) => {
            if emit {
                let elapsed = started.elapsed().as_secs_f64() * 1e3;
                let report = RunReport::new(echo, session.inputs, session.seed, results, elapsed);
                let text = if cli.json { report.to_json() } else { report.to_text() };
                if let Err(e) = stdout.write_all(text.as_bytes()) {
                    let _ = writeln!(stderr, "error: writing report: {e}");
                    return EXIT_USAGE;
                }
            }
            code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

struct Session<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
    limits: Limits,
    parallelism: Parallelism,
    inputs: Vec<InputDigest>,
    seed: Option<u64>,
}

impl Session<'_> {
    fn read_input(&mut self, role: &str, path: &str) -> CliResult<String> {
        let mut bytes = Vec::new();
        if path == "-" {
            if self.stdin_used {
                return Err(CliError::Usage("only one input may come from stdin".into()));
            }
            self.stdin_used = true;
            self.stdin
                .read_to_end(&mut bytes)
                .map_err(|e| CliError::Io("stdin".into(), e))?;
        } else {
            bytes = std::fs::read(path).map_err(|e| CliError::Io(path.to_string(), e))?;
        }
        self.inputs.push(InputDigest::new(role, path, &bytes));
        String::from_utf8(bytes).map_err(|_| CliError::Parse {
            source_name: path.to_string(),
            line: 0,
            message: "input is not UTF-8".into(),
        })
    }

    fn hypergraph(&mut self, path: &str) -> CliResult<Hypergraph> {
        let text = self.read_input("hypergraph", path)?;
        formats::parse_hypergraph(&text, display_name(path), self.limits.vertex_cap)
    }

    fn coloring(&mut self, path: &str, expected_len: usize) -> CliResult<Coloring> {
        let text = self.read_input("coloring", path)?;
        formats::parse_coloring(&text, display_name(path), expected_len)
    }

    fn alt_options(&mut self, n: usize, mode: &ModeArgs) -> AltMinOptions {
        let base = if mode.exhaustive {
            AltMinOptions::exhaustive()
        } else if let Some(count) = mode.samples {
            let seed = mode.seed.unwrap_or(0);
            self.seed = Some(seed);
            AltMinOptions::sampled(count, seed)
        } else if n <= self.limits.factorial_cap {
            AltMinOptions::exhaustive()
        } else {
            self.seed = Some(0);
            AltMinOptions::sampled(DEFAULT_SAMPLES, 0)
        };
        base.with_factorial_cap(self.limits.factorial_cap)
            .with_parallelism(self.parallelism)
    }
}

fn display_name(path: &str) -> &str {
    if path == "-" {
        "<stdin>"
    } else {
        path
    }
}

struct Outcome {
    results: Value,
    code: u8,
    /// False when the command already wrote its primary output to stdout.
    emit: bool,
}

impl Outcome {
    fn ok(results: Value) -> Self {
        Outcome { results, code: EXIT_OK, emit: true }
    }
}

fn write_target(path: &str, text: &str, stdout: &mut dyn Write) -> CliResult<()> {
    if path == "-" {
        stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io("stdout".into(), e))
    } else {
        std::fs::write(path, text).map_err(|e| CliError::Io(path.to_string(), e))
    }
}

fn parse_sigma(sigma: Option<&str>, n: usize) -> CliResult<LinearOrder> {
    match sigma {
        None => Ok(LinearOrder::identity(n)),
        Some(s) => {
            let order = LinearOrder::parse(s).map_err(|e| CliError::Usage(format!("--sigma: {e}")))?;
            if order.n() != n {
                return Err(CliError::Usage(format!(
                    "--sigma has {} entries but the hypergraph has {n} vertices",
                    order.n()
                )));
            }
            Ok(order)
        }
    }
}

fn alt_json(r: &AltReport) -> Value {
    json!({
        "n": r.n,
        "k": r.k,
        "sigma_mode": r.sigma_mode,
        "sigma": r.sigma.as_slice(),
        "alt": r.alt_value,
        "witness": {
            "word": r.witness.to_word(),
            "red_vertices": r.sigma.to_vertices(r.witness.reds()).to_vec(),
            "blue_vertices": r.sigma.to_vertices(r.witness.blues()).to_vec(),
        },
        "orderings_searched": r.orderings_searched,
    })
}

fn execute(cmd: &Command, s: &mut Session<'_>, stdout: &mut dyn Write) -> CliResult<Outcome> {
    match cmd {
        Command::Gen { family } => {
            let (h, output) = match family {
                Family::Kneser { m, r, output } => (complete_uniform(*m, *r)?, output),
                Family::Schrijver { m, r, output } => (schrijver_hypergraph(*m, *r)?, output),
                Family::Random { n, e, sizes, seed, output } => {
                    s.seed = Some(*seed);
                    (random_hypergraph(*n, *e, sizes.0..=sizes.1, *seed)?, output)
                }
            };
            write_target(output, &formats::serialize_hypergraph(&h), stdout)?;
            Ok(Outcome {
                results: json!({ "n": h.n(), "edge_count": h.edge_count(), "output": output }),
                code: EXIT_OK,
                emit: output != "-",
            })
        }
        Command::Chromatic { input, output } => {
            let h = s.hypergraph(&input.hypergraph)?;
            let (chi, coloring) = chromatic_number(&kneser_graph(&h));
            if let Some(path) = output {
                write_target(path, &formats::serialize_coloring(&coloring), stdout)?;
                if path == "-" {
                    return Ok(Outcome { results: Value::Null, code: EXIT_OK, emit: false });
                }
            }
            Ok(Outcome::ok(json!({
                "kneser_vertices": h.edge_count(),
                "chi": chi,
                "coloring": coloring.as_slice(),
            })))
        }
        Command::Altsigma { input, k, sigma } => {
            let h = s.hypergraph(&input.hypergraph)?;
            let sigma = parse_sigma(sigma.as_deref(), h.n())?;
            let r = alt_sigma(&h, &sigma, *k)?;
            let mut v = alt_json(&r);
            v["bound"] = json!(r.bound);
            Ok(Outcome::ok(v))
        }
        Command::Altbound { input, k, mode } => {
            let h = s.hypergraph(&input.hypergraph)?;
            let opts = s.alt_options(h.n(), mode);
            let r = alt_min(&h, *k, &opts)?;
            let mut v = alt_json(&r);
            v["lower_bound"] = json!(lower_bound(&h, *k, &r));
            Ok(Outcome::ok(v))
        }
        Command::Verify { input, k, mode } => {
            let h = s.hypergraph(&input.hypergraph)?;
            let opts = s.alt_options(h.n(), mode);
            let ver = verify_theorem(&h, *k, &opts)?;
            let mut v = alt_json(&ver.report);
            v["lower_bound"] = json!(ver.bound);
            v["chi"] = json!(ver.chi);
            v["holds"] = json!(ver.holds);
            v["tight"] = json!(ver.tight);
            v["repro"] = match &ver.repro {
                None => Value::Null,
                Some(b) => json!({
                    "hypergraph": formats::serialize_hypergraph(&b.hypergraph),
                    "sigma": b.sigma.as_slice(),
                    "witness": b.witness.to_word(),
                    "k": b.k,
                }),
            };
            Ok(Outcome {
                results: v,
                code: if ver.holds { EXIT_OK } else { EXIT_FAILURE },
                emit: true,
            })
        }
        Command::Audit { input, k, coloring, sigma, step_cap } => {
            let h = s.hypergraph(&input.hypergraph)?;
            let c = s.coloring(coloring, h.edge_count())?;
            let sigma = parse_sigma(sigma.as_deref(), h.n())?;
            let cap = step_cap.unwrap_or(s.limits.step_cap);
            let r = proof::audit(&h, &c, *k, &sigma, cap)?;
            let edges = h.edges();
            let outcome = match &r.outcome {
                AuditOutcome::Witness(w) => json!({
                    "outcome": "witness",
                    "kind": w.kind,
                    "color": w.color,
                    "edge_a": { "index": w.edge_a + 1, "vertices": edges[w.edge_a].to_vec() },
                    "edge_b": { "index": w.edge_b + 1, "vertices": edges[w.edge_b].to_vec() },
                    "context": w.context.to_word(),
                    "verified": w.verify(&h, &c),
                }),
                AuditOutcome::ProperWithinBound => json!({ "outcome": "proper_within_bound" }),
            };
            Ok(Outcome::ok(json!({
                "n": h.n(),
                "k": k,
                "sigma": sigma.as_slice(),
                "alt_sigma": r.alt_i,
                "palette_bound": r.palette_bound,
                "max_color": r.max_color,
                "steps": r.steps,
                "result": outcome,
            })))
        }
        Command::Selftest => {
            let checks = selftest::run_all(s.parallelism);
            let failed = checks.iter().filter(|c| !c.pass).count();
            Ok(Outcome {
                results: json!({
                    "checks": checks,
                    "passed": checks.len() - failed,
                    "failed": failed,
                }),
                code: if failed == 0 { EXIT_OK } else { EXIT_FAILURE },
                emit: true,
            })
        }
    }
}
