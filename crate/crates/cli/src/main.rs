//! `lasvegas`: seeded, reproducible command-line access to the machines and
//! constructions of `lasvegas-core`.
//!
//! Exit codes: 0 ok, 1 usage or malformed input, 2 recognized failure or no
//! equilibrium found, 3 fuel exhausted.

use std::io::{self, Read, Write};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde::de::DeserializeOwned;
use serde_json::{json, Map, Value};

use lasvegas_core::apps::{
    ivt_trisect, nash_solve, nash_verify, rdiv, rdiv_machine_input, rdiv_stream, AucMachine, BimatrixGame, IvtMachine,
    PwlFunction, RdivResult, TrisectOutcome,
};
use lasvegas_core::choice::{ldl_search, majority_vote, LdlOutcome, MajorityOutcome};
use lasvegas_core::engine::{
    lv_compose, lv_estimate_success, lv_run, FixedInput, RunOutcome, SuccessEstimate, WwklMachine,
};
use lasvegas_core::formats::{ComposeJson, MajorityJson, RdivJson, SvcQuery, TreeJson};
use lasvegas_core::foundations::{
    advice_sample, parse_rational, AdviceBits, AdviceSeed, AdviceSpace, SignedDigitStream,
};
use lasvegas_core::sets::{product_amplify, svc_interval, CoTree, SvcTable, Word};
use lasvegas_core::{Dyadic, Error, Rational, RunBudget};

const SCHEMAS: &str = "\
Input formats (files, or - for standard input):
  tree      {\"excluded\": [\"00\", \"1011\"]}
  game      {\"A\": [[\"1\",\"-1\"],[\"-1\",\"1/2\"]], \"B\": [[\"-1\",\"1\"],[\"1\",\"-1\"]]}
  function  {\"breakpoints\": [[\"0\",\"-1\"],[\"2/5\",\"0\"],[\"3/5\",\"0\"],[\"1\",\"1\"]]}
  svc       {\"epsilon\": \"1/2\", \"word\": \"01\", \"depth\": 10}
  rdiv      {\"x\": \"1/3\", \"y\": \"2/3\"}
  compose   {\"f\": <tree>, \"g\": <tree>}
  oracle    {\"depth\": 3, \"outputs\": {\"000\": \"1/3\", \"111\": null}}
Rationals are \"p/q\" strings. Every output carries the global configuration.
Exit codes: 0 ok, 1 usage, 2 failed / not found, 3 exhausted.";

#[derive(Parser, Debug)]
#[command(name = "lasvegas", version, about = "Las Vegas machines over infinite objects", after_help = SCHEMAS)]
struct Cli {
    #[command(flatten)]
    config: GlobalConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, serde::Serialize)]
struct GlobalConfig {
    /// Seed for all sampled advice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Step budget per run.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    fuel: u64,
    /// Requested output precision k (results within 2^-k).
    #[arg(long, global = true, default_value_t = 30)]
    precision_bits: u32,
    /// Number of Monte Carlo trials.
    #[arg(long, global = true, default_value_t = 10_000)]
    trials: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Estimate the probability of sampling a path through a tree.
    Wwkl {
        #[arg(long)]
        tree: String,
        /// Path length to produce (defaults to the longest excluded word).
        #[arg(long)]
        out_len: Option<usize>,
    },
    /// Find and verify a Nash equilibrium of a bimatrix game.
    Nash {
        #[arg(long)]
        game: String,
    },
    /// Robust division x / max(x, y) on [0,1], exactly and from digit streams.
    Rdiv {
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        y: Option<String>,
        /// JSON input instead of --x/--y.
        #[arg(long, conflicts_with_all = ["x", "y"])]
        input: Option<String>,
    },
    /// Locate a zero of a piecewise-linear function on [0,1].
    Ivt {
        #[arg(long)]
        function: String,
        /// Fix the first advice bit (0: guess a point, 1: trisect).
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        advice_b: Option<u8>,
        /// Run deterministic trisection instead of the probabilistic machine.
        #[arg(long, conflicts_with = "advice_b")]
        trisect: bool,
    },
    /// Interval of the Smith-Volterra-Cantor embedding below a word.
    Svc {
        #[arg(long)]
        epsilon: Option<String>,
        #[arg(long, default_value = "")]
        word: String,
        #[arg(long)]
        depth: Option<usize>,
        /// JSON query instead of flags.
        #[arg(long, conflicts_with_all = ["epsilon", "depth"])]
        query: Option<String>,
    },
    /// Search a word below which the tree has relative measure at least 1 - 2^-k.
    Density {
        #[arg(long)]
        tree: String,
        #[arg(long)]
        k: u32,
    },
    /// Interleaved product of two trees (measure 1 - (1-a)(1-b)).
    Amplify {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Majority vote over a finite advice oracle; output within 2^-k.
    Majority {
        #[arg(long)]
        oracle: String,
        #[arg(long)]
        k: u32,
    },
    /// Success-frequency estimate of a machine over sampled advice.
    Estimate {
        #[arg(value_enum)]
        machine: Selector,
        /// Machine input: tree (wwkl), rdiv, function (ivt) or compose JSON.
        #[arg(long)]
        config: String,
        /// Output symbols each run must produce.
        #[arg(long)]
        out_len: Option<usize>,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum Selector {
    Wwkl,
    Rdiv,
    Ivt,
    Compose,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(s) => f.write_str(s),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

type Outcome = Result<(Value, u8), CliError>;

const OK: u8 = 0;
const FAILED: u8 = 2;
const EXHAUSTED: u8 = 3;

fn read_source(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Usage(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{path}: {e}")))
    }
}

fn load<T: DeserializeOwned>(path: &str) -> Result<T, CliError> {
    serde_json::from_str(&read_source(path)?).map_err(|e| CliError::Usage(format!("{path}: {e}")))
}

fn rational(s: &str) -> Result<Rational, CliError> {
    Ok(parse_rational(s)?)
}

fn interval_json(lo: &Rational, hi: &Rational) -> Value {
    json!({"lo": lo.to_string(), "hi": hi.to_string()})
}

fn run_json<O>(outcome: &RunOutcome<O>, last: impl Fn(&O) -> Value) -> (Value, u8) {
    let mut v = json!({"outcome": outcome.kind(), "symbols": outcome.output().len()});
    if let Some(o) = outcome.output().last() {
        v["last"] = last(o);
    }
    let code = match outcome {
        RunOutcome::Succeeding { steps, .. } => {
            v["steps"] = json!(steps);
            OK
        }
        RunOutcome::Failed { step, .. } => {
            v["step"] = json!(step);
            FAILED
        }
        RunOutcome::Exhausted { .. } => EXHAUSTED,
    };
    (v, code)
}

fn estimate_json(e: &SuccessEstimate) -> Value {
    serde_json::to_value(e).expect("estimate serializes")
}

/// The sampled advice with its first bit forced.
struct ForcedFirst<'a> {
    b: bool,
    rest: &'a dyn AdviceBits,
}

impl AdviceBits for ForcedFirst<'_> {
    fn bit(&self, i: usize) -> bool {
        if i == 0 {
            self.b
        } else {
            self.rest.bit(i)
        }
    }
}

fn default_len(t: &CoTree) -> usize {
    t.max_excluded_len().max(1)
}

fn run(cmd: &Command, cfg: &GlobalConfig) -> Outcome {
    let seed = AdviceSeed::new(cfg.seed);
    let fuel = RunBudget(cfg.fuel);
    let k = cfg.precision_bits;
    match cmd {
        Command::Wwkl { tree, out_len } => {
            let t: CoTree = load::<TreeJson>(tree)?.into();
            let len = out_len.unwrap_or_else(|| default_len(&t));
            let exact = t.measure_exact();
            let e = lv_estimate_success(&WwklMachine, &Arc::new(t), cfg.trials, seed, fuel, len)?;
            let mut v = estimate_json(&e);
            v["wilson99"] = json!([e.wilson_lo.to_string(), e.wilson_hi.to_string()]);
            v["exact"] = json!(exact.to_string());
            v["out_len"] = json!(len);
            Ok((v, OK))
        }
        Command::Nash { game } => {
            let g: BimatrixGame = load(game)?;
            match nash_solve(&g) {
                Some(s) => {
                    let support = |v: &[Rational]| {
                        v.iter()
                            .enumerate()
                            .filter(|(_, q)| !q.is_zero())
                            .map(|(i, _)| i)
                            .collect::<Vec<_>>()
                    };
                    let v = json!({
                        "status": "found",
                        "x": s.x().iter().map(|q| q.to_string()).collect::<Vec<_>>(),
                        "y": s.y().iter().map(|q| q.to_string()).collect::<Vec<_>>(),
                        "verified": nash_verify(&g, &s)?,
                        "support": [support(s.x()), support(s.y())],
                    });
                    Ok((v, OK))
                }
                None => Ok((json!({"status": "not_found"}), FAILED)),
            }
        }
        Command::Rdiv { x, y, input } => {
            let (x, y) = match (input, x, y) {
                (Some(path), _, _) => {
                    let j: RdivJson = load(path)?;
                    (rational(&j.x)?, rational(&j.y)?)
                }
                (None, Some(x), Some(y)) => (rational(x)?, rational(y)?),
                _ => return Err(CliError::Usage("rdiv needs --x and --y, or --input".into())),
            };
            let exact = rdiv(&x, &y)?;
            let mut xs = SignedDigitStream::from_rational(&x)?;
            let mut ys = SignedDigitStream::from_rational(&y)?;
            let result = rdiv_stream(&mut xs, &mut ys, k, fuel);
            let o = result.outcome();
            let stream = json!({
                "value": o.value.to_rational().to_string(),
                "mind_changes": o.mind_changes,
                "witness_precision": o.witness_precision,
            });
            let (status, code) = match result {
                RdivResult::Settled(_) => ("settled", OK),
                RdivResult::Exhausted(_) => ("exhausted", EXHAUSTED),
            };
            let v = json!({
                "x": x.to_string(), "y": y.to_string(), "value": exact.to_string(),
                "status": status, "stream": stream,
            });
            Ok((v, code))
        }
        Command::Ivt {
            function,
            advice_b,
            trisect,
        } => {
            let f: PwlFunction = load(function)?;
            if *trisect {
                return Ok(match ivt_trisect(&f, k, fuel)? {
                    TrisectOutcome::Zero(z) => (json!({"outcome": "zero", "value": z.to_rational().to_string()}), OK),
                    TrisectOutcome::Stalled(i) => (
                        json!({"outcome": "stalled", "interval": interval_json(&i.lo, &i.hi)}),
                        EXHAUSTED,
                    ),
                });
            }
            if !f.has_sign_change() {
                return Err(CliError::Usage("f(0) and f(1) must have opposite signs".into()));
            }
            let sample = advice_sample(&AdviceSpace::CantorSpace, seed)?;
            let raw = sample.raw();
            let b = advice_b.map_or_else(|| raw.bit(0), |b| b == 1);
            let advice = ForcedFirst { b, rest: raw };
            let out = lv_run(&IvtMachine, Arc::new(f), &advice, k as usize + 1, fuel);
            let (mut v, code) = run_json(&out, |i| interval_json(&i.lo, &i.hi));
            v["advice_b"] = json!(u8::from(b));
            Ok((v, code))
        }
        Command::Svc {
            epsilon,
            word,
            depth,
            query,
        } => {
            let q = match query {
                Some(path) => load::<SvcQuery>(path)?,
                None => SvcQuery {
                    epsilon: epsilon
                        .clone()
                        .ok_or_else(|| CliError::Usage("svc needs --epsilon or --query".into()))?,
                    word: word.parse()?,
                    depth: depth.unwrap_or(word.len()),
                },
            };
            let eps: Dyadic = q.epsilon.parse()?;
            let table = SvcTable::new(eps.clone())?;
            let iv = svc_interval(q.word.bits(), &eps)?;
            let depth = q.depth.max(q.word.len());
            let v = json!({
                "epsilon": eps.to_rational().to_string(),
                "word": q.word,
                "lo": iv.lo.to_string(),
                "hi": iv.hi.to_string(),
                "depth": depth,
                "remaining_length": table.remaining_length(depth).to_string(),
                "remaining_below": table.remaining_below(q.word.bits(), depth).to_string(),
                "gap": table.gap(q.word.len()).to_string(),
            });
            Ok((v, OK))
        }
        Command::Density { tree, k } => {
            let t: CoTree = load::<TreeJson>(tree)?.into();
            Ok(match ldl_search(&t, *k, fuel) {
                LdlOutcome::Certified(w) => (
                    json!({"word": w.word, "relative_measure": w.relative_measure.to_rational().to_string(), "rejected": w.rejected}),
                    OK,
                ),
                LdlOutcome::Exhausted { guess, rejected } => (
                    json!({"status": "exhausted", "guess": guess, "rejected": rejected}),
                    EXHAUSTED,
                ),
            })
        }
        Command::Amplify { left, right } => {
            let a: CoTree = load::<TreeJson>(left)?.into();
            let b: CoTree = load::<TreeJson>(right)?.into();
            let p = product_amplify(&a, &b);
            let v = json!({
                "excluded": TreeJson::from(&p).excluded,
                "measure": p.measure_exact().to_string(),
                "left_measure": a.measure_exact().to_string(),
                "right_measure": b.measure_exact().to_string(),
            });
            Ok((v, OK))
        }
        Command::Majority { oracle, k } => {
            let o: MajorityJson = load(oracle)?;
            let centers = o.centers(*k)?;
            let depth = o.depth;
            let ask = |w: &[bool]| -> Option<Dyadic> {
                if w.len() < depth {
                    return None;
                }
                centers.get(&Word::from(&w[..depth])).cloned()
            };
            Ok(match majority_vote(&ask, *k, depth) {
                MajorityOutcome::Value { value, depth, support } => (
                    json!({"value": value.to_rational().to_string(), "depth": depth, "support": support}),
                    OK,
                ),
                MajorityOutcome::Exhausted => (json!({"status": "exhausted"}), EXHAUSTED),
            })
        }
        Command::Estimate {
            machine,
            config,
            out_len,
        } => {
            let e = match machine {
                Selector::Wwkl => {
                    let t: CoTree = load::<TreeJson>(config)?.into();
                    let len = out_len.unwrap_or_else(|| default_len(&t));
                    lv_estimate_success(&WwklMachine, &Arc::new(t), cfg.trials, seed, fuel, len)?
                }
                Selector::Rdiv => {
                    let j: RdivJson = load(config)?;
                    let input = rdiv_machine_input(&rational(&j.x)?, &rational(&j.y)?);
                    let len = out_len.unwrap_or(k as usize + 1);
                    lv_estimate_success(&AucMachine::default(), &input, cfg.trials, seed, fuel, len)?
                }
                Selector::Ivt => {
                    let f: PwlFunction = load(config)?;
                    let len = out_len.unwrap_or(k as usize + 1);
                    lv_estimate_success(&IvtMachine, &Arc::new(f), cfg.trials, seed, fuel, len)?
                }
                Selector::Compose => {
                    let j: ComposeJson = load(config)?;
                    let (f, g): (CoTree, CoTree) = (j.f.into(), j.g.into());
                    let len = out_len.unwrap_or_else(|| default_len(&f).max(default_len(&g)));
                    let h = lv_compose(FixedInput::<_, bool>::new(WwklMachine, Arc::new(f)), WwklMachine);
                    lv_estimate_success(&h, &Arc::new(g), cfg.trials, seed, fuel, len)?
                }
            };
            Ok((estimate_json(&e), OK))
        }
    }
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn render(payload: &Map<String, Value>, format: OutputFormat) -> Result<Vec<u8>, CliError> {
    match format {
        OutputFormat::Json => {
            let mut out = serde_json::to_vec_pretty(payload).expect("payload serializes");
            out.push(b'\n');
            Ok(out)
        }
        OutputFormat::Csv => {
            let mut flat: Vec<(String, String)> = Vec::new();
            for (key, v) in payload {
                match v {
                    Value::Object(inner) => flat.extend(inner.iter().map(|(k, v)| (format!("{key}.{k}"), csv_cell(v)))),
                    other => flat.push((key.clone(), csv_cell(other))),
                }
            }
            let mut w = csv::Writer::from_writer(Vec::new());
            let io_err = |e: csv::Error| CliError::Usage(e.to_string());
            w.write_record(flat.iter().map(|(k, _)| k)).map_err(io_err)?;
            w.write_record(flat.iter().map(|(_, v)| v)).map_err(io_err)?;
            w.into_inner().map_err(|e| CliError::Usage(e.to_string()))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = run(&cli.command, &cli.config).and_then(|(value, code)| {
        let mut payload = match value {
            Value::Object(m) => m,
            other => Map::from_iter([("result".to_string(), other)]),
        };
        payload.insert(
            "config".into(),
            serde_json::to_value(&cli.config).expect("config serializes"),
        );
        Ok((render(&payload, cli.config.output)?, code))
    });
    match result {
        Ok((bytes, code)) => {
            let mut out = io::stdout().lock();
            if out.write_all(&bytes).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
