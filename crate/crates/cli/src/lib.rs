//! The `dnc` command line. `run` takes parsed arguments and writes to
//! the given streams so the binary stays a thin shell.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dnc_core::checker::check_json;
use dnc_core::engine::{prove, Certificate, DerivationJson, SearchConfig, SearchResult};
use dnc_core::harness::{run_corollary_experiment, run_theorem1_experiment, run_variant_experiment, ExperimentOptions};
use dnc_core::semantics::find_kripke_countermodel;
use dnc_core::syntax::{parse_formula_checked, parse_sequent, Formula, Sequent};
use dnc_core::translate::{expand, TranslationMethod, Variant};
use dnc_core::Logic;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_EXHAUSTED: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "dnc", version, about = "Classical logic inside constructive logic, by double negation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Translate a core formula.
    Translate {
        #[arg(long, value_enum, default_value_t = Method::Dowek)]
        method: Method,
        formula: String,
    },
    /// Search for a derivation of a sequent such as `A, B |- C`.
    /// Classical constructors are expanded first.
    Prove {
        #[arg(long, value_enum, default_value_t = LogicArg::Constructive)]
        logic: LogicArg,
        #[arg(long, default_value_t = SearchConfig::DEFAULT_MAX_DEPTH)]
        depth: usize,
        #[arg(long = "max-inst", default_value_t = SearchConfig::DEFAULT_MAX_INSTANTIATIONS)]
        max_inst: usize,
        #[arg(long, value_enum, default_value_t = Emit::Tree)]
        emit: Emit,
        sequent: String,
    },
    /// Check a derivation in JSON form.
    Check {
        #[arg(long, value_enum, default_value_t = LogicArg::Constructive)]
        logic: LogicArg,
        derivation: PathBuf,
    },
    /// Look for a finite Kripke model whose root does not force a
    /// propositional formula.
    Countermodel {
        #[arg(long = "max-worlds", default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..=12))]
        max_worlds: u64,
        formula: String,
    },
    /// Run an experiment and write `report.json`.
    Experiment(ExperimentArgs),
}

#[derive(Args, Debug)]
pub struct ExperimentArgs {
    #[arg(value_enum)]
    pub kind: ExperimentKind,
    /// Comma-separated atoms of the corpus.
    #[arg(long, default_value = "P,Q", value_delimiter = ',')]
    pub atoms: Vec<String>,
    #[arg(long = "max-size", default_value_t = 7)]
    pub max_size: usize,
    #[arg(long, default_value_t = SearchConfig::DEFAULT_MAX_DEPTH)]
    pub depth: usize,
    #[arg(long = "max-inst", default_value_t = SearchConfig::DEFAULT_MAX_INSTANTIATIONS)]
    pub max_inst: usize,
    /// Variant experiment only.
    #[arg(long, value_enum, default_value_t = VariantArg::After)]
    pub method: VariantArg,
    /// Corollary experiment: a hypothesis; repeat for several.
    #[arg(long = "hyp")]
    pub hypotheses: Vec<String>,
    /// Corollary experiment: the goal.
    #[arg(long)]
    pub goal: Option<String>,
    /// Check the derivation of every n-th provable record; 0 disables.
    #[arg(long = "check-every", default_value_t = 1)]
    pub check_every: usize,
    /// Include wall-clock time in the report.
    #[arg(long)]
    pub timing: bool,
    #[arg(long, default_value = "report.json")]
    pub out: PathBuf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Method {
    Dowek,
    Kgg,
    Before,
    After,
    Light,
}

impl From<Method> for TranslationMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Dowek => TranslationMethod::Dowek,
            Method::Kgg => TranslationMethod::Kgg,
            Method::Before => TranslationMethod::BeforeOnly,
            Method::After => TranslationMethod::AfterOnly,
            Method::Light => TranslationMethod::Light,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum LogicArg {
    Classical,
    Constructive,
}

impl From<LogicArg> for Logic {
    fn from(l: LogicArg) -> Self {
        match l {
            LogicArg::Classical => Logic::Classical,
            LogicArg::Constructive => Logic::Constructive,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Tree,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ExperimentKind {
    Theorem1,
    Variant,
    Corollary,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum VariantArg {
    Before,
    After,
}

/// Input problems: bad syntax, unreadable files, unusable options.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn formula(text: &str) -> Result<Formula, InputError> {
    Ok(parse_formula_checked(text)?)
}

fn expanded(s: Sequent) -> Sequent {
    Sequent::new(s.antecedent.iter().map(expand).collect(), s.succedent.iter().map(expand).collect())
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, InputError> {
    match command {
        Command::Translate { method, formula: text } => {
            let f = formula(&text)?;
            writeln!(out, "{}", TranslationMethod::from(method).apply(&f)?)?;
            Ok(EXIT_OK)
        }
        Command::Prove { logic, depth, max_inst, emit, sequent } => {
            let seq = expanded(parse_sequent(&sequent)?);
            let mut config = SearchConfig::new(logic.into()).with_depth(depth);
            config.max_instantiations_per_branch = max_inst;
            let result = prove(&seq, &config)?;
            writeln!(out, "{}", result.verdict())?;
            Ok(match result {
                SearchResult::Provable(d) => {
                    match emit {
                        Emit::Tree => write!(out, "{}", d.render_tree())?,
                        Emit::Json => writeln!(out, "{}", serde_json::to_string_pretty(&d.to_json())?)?,
                    }
                    EXIT_OK
                }
                SearchResult::Refuted(c) => {
                    let doc = match c {
                        Certificate::Valuation(v) => serde_json::to_string_pretty(&v)?,
                        Certificate::Kripke(m) => serde_json::to_string_pretty(&m.to_json())?,
                    };
                    writeln!(out, "{doc}")?;
                    EXIT_REFUTED
                }
                SearchResult::Exhausted(b) => {
                    writeln!(out, "no derivation within depth {} and {} instantiations per branch", b.max_depth, b.max_instantiations)?;
                    EXIT_EXHAUSTED
                }
            })
        }
        Command::Check { logic, derivation } => {
            let text = fs::read_to_string(&derivation).map_err(|e| InputError(format!("{}: {e}", derivation.display())))?;
            let doc: DerivationJson = serde_json::from_str(&text)?;
            let report = check_json(&doc, logic.into());
            writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            Ok(if report.valid { EXIT_OK } else { EXIT_REFUTED })
        }
        Command::Countermodel { max_worlds, formula: text } => {
            let f = expand(&formula(&text)?);
            match find_kripke_countermodel(&f, max_worlds as usize)? {
                Some(m) => {
                    writeln!(out, "{}", serde_json::to_string_pretty(&m.to_json())?)?;
                    Ok(EXIT_OK)
                }
                None => {
                    writeln!(out, "no countermodel with at most {max_worlds} worlds")?;
                    Ok(EXIT_EXHAUSTED)
                }
            }
        }
        Command::Experiment(args) => experiment(args, out),
    }
}

fn experiment(args: ExperimentArgs, out: &mut dyn Write) -> Result<i32, InputError> {
    let opts = ExperimentOptions {
        depth: args.depth,
        max_instantiations: args.max_inst,
        check_every: args.check_every,
        timing: args.timing,
    };
    let atoms: Vec<String> = args.atoms.iter().map(|a| a.trim().to_string()).filter(|a| !a.is_empty()).collect();
    let (json, table) = match args.kind {
        ExperimentKind::Theorem1 | ExperimentKind::Variant => {
            for a in &atoms {
                if !matches!(formula(a)?, Formula::Atom(_, ref args) if args.is_empty()) {
                    return Err(InputError(format!("`{a}` is not a propositional atom")));
                }
            }
            let report = match args.kind {
                ExperimentKind::Theorem1 => run_theorem1_experiment(&atoms, args.max_size, &opts)?,
                _ => {
                    let variant = match args.method {
                        VariantArg::Before => Variant::BeforeOnly,
                        VariantArg::After => Variant::AfterOnly,
                    };
                    run_variant_experiment(variant, &atoms, args.max_size, &opts)?
                }
            };
            (report.to_json(), report.table())
        }
        ExperimentKind::Corollary => {
            let goal = args.goal.as_deref().ok_or_else(|| InputError("corollary needs --goal".into()))?;
            let hyps = args.hypotheses.iter().map(|h| formula(h)).collect::<Result<Vec<_>, _>>()?;
            let record = run_corollary_experiment(&hyps, &formula(goal)?, &opts)?;
            (record.to_json(), record.table())
        }
    };
    fs::write(&args.out, json + "\n").map_err(|e| InputError(format!("{}: {e}", args.out.display())))?;
    write!(out, "{table}")?;
    writeln!(out, "report written to {}", args.out.display())?;
    Ok(EXIT_OK)
}
