//! Command-line front end. [`run`] takes arguments and streams so it can be
//! driven from tests; the `condorcet` binary is a thin wrapper around it.
//!
//! Exit codes: 0 unique winner or success, 1 input error, 2 tied winners,
//! 3 audit found violations.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::axioms::audit::{audit, default_magnitudes, default_sample_pool, AuditConfig, Mode};
use crate::axioms::AxiomId;
use crate::classify::{classify, expected_winner_fig1};
use crate::methods::{select, MethodId, SelectionResult, Stage};
use crate::profiles::{debord_realize, margins_of_profile, parse_ballots, Parity};
use crate::tournament::{parse_tournament, WeightedTournament};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_TIE: i32 = 2;
pub const EXIT_VIOLATIONS: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "condorcet", version, about = "Weighted tournament methods, axiom checks and audits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tally a ballot file and report the winners.
    Tally {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "mwsl")]
        method: MethodId,
        /// Print a JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Name the class of a four- or five-candidate tournament.
    Classify {
        #[command(flatten)]
        input: Input,
    },
    /// Check methods against axioms over a space of tournaments.
    Audit(AuditArgs),
    /// Write a ballot profile whose margins are exactly the tournament's.
    Realize {
        #[command(flatten)]
        input: Input,
        /// Parity of the margins; inferred from the tournament when omitted.
        #[arg(long)]
        parity: Option<Parity>,
    },
    /// Explain a method's selection stage by stage.
    Explain {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "mwsl")]
        method: MethodId,
    },
}

#[derive(Args, Debug)]
struct Input {
    /// Input file; standard input when omitted or `-`.
    file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct AuditArgs {
    #[arg(long, default_value_t = 4)]
    candidates: usize,
    /// Comma-separated method names.
    #[arg(long, value_delimiter = ',')]
    methods: Option<Vec<MethodId>>,
    /// Comma-separated axiom names.
    #[arg(long, value_delimiter = ',')]
    axioms: Option<Vec<AxiomId>>,
    /// `exhaustive` (up to 4 candidates) or `sample`.
    #[arg(long)]
    mode: Option<Mode>,
    /// Exhaustive: one magnitude per pair. Sample: the pool to draw from.
    #[arg(long, value_delimiter = ',')]
    magnitudes: Option<Vec<i64>>,
    #[arg(long, default_value_t = 100_000)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Draw purely at random instead of leading with one tournament per class.
    #[arg(long)]
    no_stratify: bool,
    /// Directory for report.json and the counterexample tournaments.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print the JSON report instead of the table.
    #[arg(long)]
    json: bool,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return EXIT_INPUT;
            }
            let _ = write!(stdout, "{}", e.render());
            return EXIT_OK;
        }
    };
    let result = match cli.command {
        Command::Tally { input, method, json } => tally(&input, stdin, stdout, method, json),
        Command::Classify { input } => cmd_classify(&input, stdin, stdout),
        Command::Audit(args) => cmd_audit(&args, stdout),
        Command::Realize { input, parity } => realize(&input, stdin, stdout, parity),
        Command::Explain { input, method } => explain(&input, stdin, stdout, method),
    };
    match result {
        Ok(code) => code,
        Err(Failure(message)) => {
            let _ = writeln!(stderr, "error: {message}");
            EXIT_INPUT
        }
    }
}

fn read_input(input: &Input, stdin: &mut dyn Read) -> Result<String, Failure> {
    match &input.file {
        Some(path) if path.as_os_str() != "-" => {
            fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
        }
        _ => {
            let mut text = String::new();
            stdin.read_to_string(&mut text)?;
            Ok(text)
        }
    }
}

fn read_tournament(input: &Input, stdin: &mut dyn Read) -> Result<WeightedTournament, Failure> {
    Ok(parse_tournament(&read_input(input, stdin)?)?)
}

fn winner_code(r: &SelectionResult) -> i32 {
    if r.unique().is_some() {
        EXIT_OK
    } else {
        EXIT_TIE
    }
}

fn trace_json(t: &WeightedTournament, r: &SelectionResult) -> Value {
    r.trace
        .steps
        .iter()
        .map(|s| {
            let scores: serde_json::Map<String, Value> =
                s.scores.iter().map(|&(c, v)| (t.label(c).to_string(), json!(v))).collect();
            json!({"stage": s.stage.describe(), "scores": scores, "kept": t.names(s.kept)})
        })
        .collect()
}

fn tally(input: &Input, stdin: &mut dyn Read, out: &mut dyn Write, method: MethodId, as_json: bool) -> CmdResult {
    let profile = parse_ballots(&read_input(input, stdin)?)?;
    let t = margins_of_profile(&profile);
    let r = select(method, &t);
    if as_json {
        let margins: Vec<Vec<i64>> = t.candidates().map(|a| t.candidates().map(|b| t.margin(a, b)).collect()).collect();
        let report = json!({
            "candidates": t.labels(),
            "voters": profile.voter_count(),
            "margins": margins,
            "method": method.name(),
            "winners": t.names(r.winners),
            "trace": trace_json(&t, &r),
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
        return Ok(winner_code(&r));
    }
    writeln!(out, "{} voters, {} candidates", profile.voter_count(), t.len())?;
    writeln!(out, "margins:\n{t}")?;
    for c in t.candidates() {
        let losses = t.loss_profile(c);
        writeln!(
            out,
            "{}: {} wins, {} losses, smallest loss {}, worst loss {}",
            t.label(c),
            t.wins(c),
            t.losses(c),
            losses.smallest(),
            losses.worst()
        )?;
    }
    write_stages(out, &t, &r)?;
    writeln!(out, "{}: {}", method, winners_line(&t, &r))?;
    Ok(winner_code(&r))
}

fn winners_line(t: &WeightedTournament, r: &SelectionResult) -> String {
    match r.unique() {
        Some(w) => format!("winner {}", t.label(w)),
        None => format!("tie between {}", t.names(r.winners).join(", ")),
    }
}

fn write_stages(out: &mut dyn Write, t: &WeightedTournament, r: &SelectionResult) -> std::io::Result<()> {
    for (i, s) in r.trace.steps.iter().enumerate() {
        let scores: Vec<String> = s.scores.iter().map(|&(c, v)| format!("{} {v}", t.label(c))).collect();
        write!(out, "stage {}: {}", i + 1, s.stage.describe())?;
        if !scores.is_empty() {
            write!(out, " ({})", scores.join(", "))?;
        }
        writeln!(out, " keeps {}", t.names(s.kept).join(", "))?;
    }
    Ok(())
}

fn cmd_classify(input: &Input, stdin: &mut dyn Read, out: &mut dyn Write) -> CmdResult {
    let t = read_tournament(input, stdin)?;
    let class = classify(&t)?;
    if t.len() == 4 {
        let w = expected_winner_fig1(&class, &t)?;
        writeln!(out, "{}, expected winner {}", class.label, t.label(w))?;
    } else {
        writeln!(out, "{}", class.label)?;
    }
    writeln!(out, "roles: {}", class.describe_roles(&t))?;
    Ok(EXIT_OK)
}

fn audit_config(args: &AuditArgs) -> AuditConfig {
    let k = args.candidates;
    let mode = args.mode.unwrap_or(if k <= 4 { Mode::Exhaustive } else { Mode::Sample });
    let (methods, axioms) = if k <= 4 {
        (AuditConfig::table1().methods, AxiomId::TABLE1.to_vec())
    } else {
        let m = vec![MethodId::Copeland, MethodId::Minimax, MethodId::Mwsl, MethodId::Cgm, MethodId::Clm];
        (m, AxiomId::TABLE2.to_vec())
    };
    let magnitudes = args.magnitudes.clone().unwrap_or_else(|| match mode {
        Mode::Exhaustive => default_magnitudes(k),
        Mode::Sample => default_sample_pool(),
    });
    AuditConfig {
        methods: args.methods.clone().unwrap_or(methods),
        axioms: args.axioms.clone().unwrap_or(axioms),
        candidates: k,
        mode,
        magnitudes,
        samples: args.samples,
        seed: args.seed,
        stratify: !args.no_stratify,
    }
}

fn cmd_audit(args: &AuditArgs, out: &mut dyn Write) -> CmdResult {
    let report = audit(&audit_config(args))?;
    if let Some(dir) = &args.out {
        report.write_to_dir(dir)?;
    }
    if args.json {
        write!(out, "{}", report.to_json_string())?;
    } else {
        writeln!(
            out,
            "{} tournaments on {} candidates ({})",
            report.tournaments_checked, report.candidates, report.mode
        )?;
        write!(out, "{}", report.render_table())?;
        for cell in report.violations() {
            let ce = cell.counterexample.as_ref().expect("violations carry a witness");
            writeln!(out, "{}", ce.describe())?;
        }
    }
    Ok(if report.violations().next().is_some() {
        EXIT_VIOLATIONS
    } else {
        EXIT_OK
    })
}

fn realize(input: &Input, stdin: &mut dyn Read, out: &mut dyn Write, parity: Option<Parity>) -> CmdResult {
    let t = read_tournament(input, stdin)?;
    let parity = parity.unwrap_or_else(|| {
        let odd = t.pairs().map(|(a, b)| t.margin(a, b)).find(|m| m % 2 != 0).is_some();
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    });
    let profile = debord_realize(&t, parity)?;
    write!(out, "{}", profile.to_text())?;
    Ok(EXIT_OK)
}

fn explain(input: &Input, stdin: &mut dyn Read, out: &mut dyn Write, method: MethodId) -> CmdResult {
    let t = read_tournament(input, stdin)?;
    let r = select(method, &t);
    writeln!(out, "{method} on {}", t.labels().join(", "))?;
    write_stages(out, &t, &r)?;
    match r.trace.decided_at() {
        Some(Stage::Pattern) => writeln!(out, "the tournament has the fixed counterexample shape")?,
        Some(stage) => writeln!(out, "decided by {}", stage.describe())?,
        None => writeln!(out, "no stage separates the remaining candidates")?,
    }
    writeln!(out, "{}", winners_line(&t, &r))?;
    Ok(winner_code(&r))
}
