use std::process::ExitCode;
use std::time::Instant;

use blchang_core::algebra::PointBounds;
use blchang_core::checker::{
    check_equation, default_source, find_counterexample, resolve, verify_claims_suite, Budget, Config, Equation,
    OutputMode, Verdict,
};
use blchang_core::embedding::{
    chang_fragment, chang_into_rotation, check_embedding, find_embedding, partial_subalgebra, EmbeddingMap,
    SearchBudget, SearchOutcome,
};
use blchang_core::formula::{self, evaluate};
use blchang_core::{Chain, ChainElement, Descriptor, Rational, Valuation};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

const SYNTAX_HELP: &str = "\
Algebras:
  G(k) MV(k) GodStd LukStd ProdStd Canc C V omega*V, and ordinal sums A ++ B
  (run `blchang algebra list`).

Elements:
  0 and 1 always name the bottom and top.
  rationals          1/2, 3/5           G(k), MV(k), GodStd, LukStd, Canc
  Chang              a3, b3             C (a_n co-infinitesimal, b_n infinitesimal)
  rotation           pos 1/8, neg 1/8   V
  sum components     c2:3/5, top        A ++ B, omega*V, ProdStd

Formulas:
  p & q   p -> q   !p   p /\\ q   p \\/ q   oplus(p,q)   uplus(p,q)
  p <-> q   pow(p,n)   nsum(n,p)   nuplus(n,p)   0   1";

#[derive(Parser)]
#[command(name = "blchang", version, about = "Exact evaluation and identity checking on BL-chains", after_help = SYNTAX_HELP)]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Seed for random valuations (decimal or 0x-hex).
    #[arg(long, global = true, default_value = "0xB1C", value_parser = parse_seed)]
    seed: u64,
    /// Random valuations per check.
    #[arg(long, global = true, default_value_t = 10_000)]
    samples: u64,
    /// Largest denominator of grid and random rationals.
    #[arg(long = "denom-bound", global = true, default_value_t = 64)]
    denom_bound: u32,
    /// Largest Chang index enumerated.
    #[arg(long = "chang-bound", global = true, default_value_t = 50)]
    chang_bound: u64,
    /// One JSON record per line.
    #[arg(long, global = true)]
    machine: bool,
    /// Report wall-clock times (makes output non-reproducible).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a formula under an assignment.
    Eval {
        algebra: String,
        formula: String,
        /// Assignments `var=element`.
        bindings: Vec<String>,
    },
    /// Check an equation, schema or formula on a chain (exit 0 holds, 1 fails).
    Check {
        algebra: String,
        /// Built-in equation or schema name, `lhs = rhs`, or a formula (compared with 1).
        target: String,
    },
    /// Search for a counterexample by iterative deepening, then random sampling.
    Counterexample { algebra: String, target: String },
    /// Run every claim of the regression suite (exit 0 iff all as expected).
    Suite,
    /// Embed a finite partial subalgebra into a target chain.
    Embed {
        source: String,
        /// Comma-separated elements; `a0..a5` expands to a0, a1, ..., a5.
        carrier: String,
        target: String,
        /// Candidate denominators for rational targets.
        #[arg(long, default_value_t = 16)]
        denom: u32,
        /// Candidate Chang indices.
        #[arg(long, default_value_t = 16)]
        chang: u64,
        /// Highest omega-sum component tried.
        #[arg(long, default_value_t = 3)]
        components: usize,
        #[arg(long = "max-nodes", default_value_t = 1_000_000)]
        max_nodes: u64,
        /// Ratio of the closed-form Chang-into-V map.
        #[arg(long, default_value = "1/2")]
        ratio: String,
    },
    /// List or describe chains.
    Algebra {
        #[command(subcommand)]
        command: AlgebraCommand,
    },
}

#[derive(Subcommand)]
enum AlgebraCommand {
    List,
    Describe { descriptor: String },
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let r = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    r.map_err(|e| e.to_string())
}

type Fallible = Result<ExitCode, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let o = &cli.opts;
    let config = Config {
        seed: o.seed,
        sample_count: o.samples,
        denominator_bound: o.denom_bound,
        chang_index_bound: o.chang_bound,
        output_mode: if o.machine {
            OutputMode::Machine
        } else {
            OutputMode::Human
        },
        timing: o.timing,
    };
    let result = match cli.command {
        Command::Eval {
            algebra,
            formula,
            bindings,
        } => cmd_eval(&config, &algebra, &formula, &bindings),
        Command::Check { algebra, target } => cmd_check(&config, &algebra, &target, false),
        Command::Counterexample { algebra, target } => cmd_check(&config, &algebra, &target, true),
        Command::Suite => cmd_suite(&config),
        Command::Embed {
            source,
            carrier,
            target,
            denom,
            chang,
            components,
            max_nodes,
            ratio,
        } => {
            let budget = SearchBudget {
                denom,
                chang,
                components,
                max_nodes,
            };
            cmd_embed(&config, &source, &carrier, &target, budget, &ratio)
        }
        Command::Algebra { command } => match command {
            AlgebraCommand::List => cmd_list(&config),
            AlgebraCommand::Describe { descriptor } => cmd_describe(&config, &descriptor),
        },
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn chain(text: &str) -> Result<Chain, String> {
    Chain::parse(text).map_err(|e| e.to_string())
}

fn emit(config: &Config, record: Value, human: String) {
    match config.output_mode {
        OutputMode::Machine => println!("{record}"),
        OutputMode::Human => println!("{human}"),
    }
}

fn cmd_eval(config: &Config, algebra: &str, text: &str, bindings: &[String]) -> Fallible {
    let c = chain(algebra)?;
    let f = formula::parse(text).map_err(|e| e.to_string())?;
    let mut v = Valuation::new();
    for b in bindings {
        let (name, value) = b
            .split_once('=')
            .ok_or_else(|| format!("binding `{b}` is not of the form var=element"))?;
        let x = c.parse_element(value).map_err(|e| e.to_string())?;
        v.set(name.trim(), x);
    }
    let value = evaluate(&f, &c, &v).map_err(|e| e.to_string())?;
    emit(
        config,
        json!({
            "algebra": c.to_string(),
            "formula": f.to_string(),
            "valuation": v.to_string(),
            "value": value.to_string(),
        }),
        value.to_string(),
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(config: &Config, algebra: &str, target: &str, search: bool) -> Fallible {
    let c = chain(algebra)?;
    let e = resolve(target).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let verdict = if search {
        find_counterexample(&e, &c, &Budget::from_config(config))
    } else {
        let src = default_source(&c, config, e.vars.len());
        check_equation(&e, &c, &src)
    }
    .map_err(|e| e.to_string())?;
    let elapsed = config.timing.then(|| start.elapsed().as_millis() as u64);
    report_verdict(config, &e, &c, &verdict, elapsed);
    Ok(if verdict.holds() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn report_verdict(config: &Config, e: &Equation, c: &Chain, verdict: &Verdict, elapsed: Option<u64>) {
    let (name, source, checked, decided, witness, lhs, rhs) = match verdict {
        Verdict::Holds {
            checked,
            source,
            decided,
        } => (
            "holds",
            Some(source.clone()),
            Some(*checked),
            Some(*decided),
            None,
            None,
            None,
        ),
        Verdict::Fails { valuation, lhs, rhs } => (
            "fails",
            None,
            None,
            None,
            Some(valuation.to_string()),
            Some(lhs.to_string()),
            Some(rhs.to_string()),
        ),
    };
    let mut human = format!("{} [{e}] on {c}: {verdict}", e.name);
    if let Some(ms) = elapsed {
        human.push_str(&format!(" [{ms} ms]"));
    }
    emit(
        config,
        json!({
            "claim": e.name,
            "equation": e.to_string(),
            "algebra": c.to_string(),
            "source": source,
            "verdict": name,
            "decided": decided,
            "checked": checked,
            "witness": witness,
            "lhs": lhs,
            "rhs": rhs,
            "elapsed_ms": elapsed,
        }),
        human,
    );
}

fn cmd_suite(config: &Config) -> Fallible {
    let report = verify_claims_suite(config);
    match config.output_mode {
        OutputMode::Machine => print!("{}", report.render_machine()),
        OutputMode::Human => print!("{}", report.render_human()),
    }
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// `a0..a5` expands to `a0, ..., a5`; anything else is one element.
fn expand_carrier(c: &Chain, spec: &str) -> Result<Vec<ChainElement>, String> {
    let mut out = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let range = item.split_once("..").and_then(|(lo, hi)| {
            let split = |s: &str| {
                let i = s.find(|ch: char| ch.is_ascii_digit())?;
                Some((s[..i].to_string(), s[i..].parse::<u64>().ok()?))
            };
            let (p, a) = split(lo)?;
            let (q, b) = split(hi)?;
            (!p.is_empty() && (q.is_empty() || q == p)).then_some((p, a, b))
        });
        match range {
            Some((prefix, a, b)) => {
                for i in a..=b {
                    out.push(c.parse_element(&format!("{prefix}{i}")).map_err(|e| e.to_string())?);
                }
            }
            None => out.push(c.parse_element(item).map_err(|e| e.to_string())?),
        }
    }
    Ok(out)
}

fn cmd_embed(
    config: &Config,
    source: &str,
    carrier: &str,
    target: &str,
    budget: SearchBudget,
    ratio: &str,
) -> Fallible {
    let s = chain(source)?;
    let t = chain(target)?;
    let elements = expand_carrier(&s, carrier)?;
    let p = partial_subalgebra(&s, &elements).map_err(|e| e.to_string())?;
    let start = Instant::now();

    // Chang fragments {a0..an, b0..bn} into V have a closed-form map.
    let mut closed_form = None;
    if *s.descriptor() == Descriptor::Chang && *t.descriptor() == Descriptor::v() && p.len() % 2 == 0 {
        let n = (p.len() / 2 - 1) as u64;
        let ratio: Rational = ratio.parse().map_err(|e| format!("bad ratio: {e:?}"))?;
        if chang_fragment(n).map_err(|e| e.to_string())?.carrier() == p.carrier() {
            let m = chang_into_rotation(n, &ratio).map_err(|e| e.to_string())?;
            if check_embedding(&m, &p, &t).map_err(|e| e.to_string())?.is_ok() {
                closed_form = Some((m, format!("closed form, ratio {ratio}")));
            }
        }
    }
    let found = match closed_form {
        Some(found) => Ok(found),
        None => match find_embedding(&p, &t, &budget).map_err(|e| e.to_string())? {
            SearchOutcome::Found(m) => Ok((m, format!("search, denom<={}, chang<={}", budget.denom, budget.chang))),
            SearchOutcome::NotFoundUpToBudget {
                candidates,
                nodes,
                exhausted,
                decided,
            } => Err((candidates, nodes, exhausted, decided)),
        },
    };
    let elapsed = config.timing.then(|| start.elapsed().as_millis() as u64);
    let base = json!({
        "source": s.to_string(),
        "carrier": p.carrier().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "target": t.to_string(),
        "elapsed_ms": elapsed,
    });
    match found {
        Ok((m, method)) => {
            let mut record = base;
            record["verdict"] = json!("found");
            record["method"] = json!(method);
            record["map"] = json!(map_pairs(&m));
            emit(config, record, format!("{m} ({method})"));
            Ok(ExitCode::SUCCESS)
        }
        Err((candidates, nodes, exhausted, decided)) => {
            let mut record = base;
            record["verdict"] = json!("not-found");
            record["candidates"] = json!(candidates);
            record["nodes"] = json!(nodes);
            record["exhausted"] = json!(exhausted);
            record["decided"] = json!(decided);
            let scope = if decided {
                "no embedding exists".to_string()
            } else {
                format!(
                    "not found up to budget (denom<={}, chang<={}, components<={}; {candidates} candidates, {nodes} nodes{})",
                    budget.denom,
                    budget.chang,
                    budget.components,
                    if exhausted { "" } else { ", node limit hit" }
                )
            };
            emit(config, record, scope);
            Ok(ExitCode::from(1))
        }
    }
}

fn map_pairs(m: &EmbeddingMap) -> Vec<[String; 2]> {
    m.pairs.iter().map(|(x, y)| [x.to_string(), y.to_string()]).collect()
}

const CATALOGUE: &[(&str, &str)] = &[
    ("G(k)", "finite Gödel chain {0, 1/(k-1), ..., 1}"),
    ("MV(k)", "finite Łukasiewicz chain {0, 1/(k-1), ..., 1}"),
    ("GodStd", "standard Gödel chain on [0,1]"),
    ("LukStd", "standard MV-chain [0,1] (Łukasiewicz)"),
    ("ProdStd", "standard product chain, as G(2) ++ Canc"),
    (
        "Canc",
        "standard cancellative hoop (0,1] under multiplication; unbounded",
    ),
    ("C", "Chang's MV-algebra {a_n} ∪ {b_n}"),
    ("V", "disconnected rotation of Canc"),
    ("omega*V", "ordinal sum of countably many copies of V"),
    ("A ++ B", "ordinal sum, A below B"),
];

fn cmd_list(config: &Config) -> Fallible {
    for (name, about) in CATALOGUE {
        emit(
            config,
            json!({"descriptor": name, "description": about}),
            format!("{name:<10} {about}"),
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_describe(config: &Config, text: &str) -> Fallible {
    let c = chain(text)?;
    let bounds = PointBounds {
        denom: Some(4),
        chang: Some(2),
        components: 2,
    };
    let sample: Vec<String> = c
        .sample_points(&bounds)
        .iter()
        .take(16)
        .map(|x| x.to_string())
        .collect();
    let components: Option<Vec<String>> = c.components().map(|cs| cs.iter().map(|x| x.to_string()).collect());
    let record = json!({
        "descriptor": c.to_string(),
        "bounded": c.is_bounded(),
        "size": c.size(),
        "mv": c.is_mv(),
        "top": c.top().to_string(),
        "bottom": c.bottom().map(|b| b.to_string()),
        "components": components,
        "sample": sample,
    });
    let mut human = format!("{c}\n");
    human.push_str(&format!(
        "  size:       {}\n",
        c.size().map_or("infinite".to_string(), |n| n.to_string())
    ));
    human.push_str(&format!("  bounded:    {}\n", c.is_bounded()));
    human.push_str(&format!("  MV-chain:   {}\n", c.is_mv()));
    human.push_str(&format!("  top:        {}\n", c.top()));
    if let Some(b) = c.bottom() {
        human.push_str(&format!("  bottom:     {b}\n"));
    }
    if let Some(cs) = &components {
        human.push_str(&format!("  components: {}\n", cs.join(", ")));
    }
    human.push_str(&format!("  sample:     {}", sample.join(", ")));
    emit(config, record, human);
    Ok(ExitCode::SUCCESS)
}
