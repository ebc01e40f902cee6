//! Experiments over formula corpora. Each item is searched on its own,
//! items may run in parallel, and records come back in enumeration order
//! so a report depends only on its inputs.

pub mod fixtures;

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::checker::check_derivation;
use crate::engine::{prove, ProveError, SearchConfig, SearchResult, Verdict};
use crate::syntax::{enumerate_formulas, Connective, Formula, Sequent};
use crate::translate::{classicize, erase_classical, expand, translate_dowek, translate_variant, TranslateError, Variant};
use crate::Logic;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExperimentOptions {
    /// First-order search bounds; propositional items are decided.
    pub depth: usize,
    pub max_instantiations: usize,
    /// Check the derivation behind every `n`-th provable record; 0 skips
    /// checking.
    pub check_every: usize,
    /// Record wall-clock time. Off by default so reports are reproducible.
    pub timing: bool,
}

impl Default for ExperimentOptions {
    fn default() -> Self {
        ExperimentOptions {
            depth: SearchConfig::DEFAULT_MAX_DEPTH,
            max_instantiations: SearchConfig::DEFAULT_MAX_INSTANTIATIONS,
            check_every: 1,
            timing: false,
        }
    }
}

impl ExperimentOptions {
    fn config(&self, logic: Logic) -> SearchConfig {
        let mut c = SearchConfig::new(logic).with_depth(self.depth);
        c.max_instantiations_per_branch = self.max_instantiations;
        c
    }
}

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error(transparent)]
    Prove(#[from] ProveError),
    #[error(transparent)]
    Translate(#[from] TranslateError),
    #[error("{0}")]
    Input(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Corpus {
    pub atoms: Vec<String>,
    pub max_size: usize,
    pub formulas: usize,
}

/// One formula: the classical verdict on it and the constructive verdict
/// on its translation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub formula: String,
    pub translation: String,
    pub classical: Verdict,
    pub constructive: Verdict,
    pub agree: bool,
    /// Whether the derivations behind the provable verdicts passed the
    /// checker; absent when nothing was checked.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derivations_valid: Option<bool>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub records: usize,
    pub agreements: usize,
    pub disagreements: usize,
    pub classical_provable: usize,
    pub constructive_provable: usize,
    pub derivations_checked: usize,
    pub derivations_invalid: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub method: String,
    pub corpus: Corpus,
    pub depth: usize,
    pub max_instantiations: usize,
    pub summary: Summary,
    /// Formulas whose two verdicts differ, in corpus order.
    pub disagreements: Vec<String>,
    pub records: Vec<Record>,
    /// First-order examples run alongside the corpus.
    pub extra: Vec<Record>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

impl ExperimentReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Summary, disagreements and extra records as an aligned text table.
    pub fn table(&self) -> String {
        let s = &self.summary;
        let mut out = String::new();
        let _ = writeln!(out, "experiment  {} ({})", self.experiment, self.method);
        let _ = writeln!(
            out,
            "corpus      atoms {{{}}}, size <= {}, {} formulas",
            self.corpus.atoms.join(","),
            self.corpus.max_size,
            self.corpus.formulas
        );
        let _ = writeln!(out, "classical provable      {:>8}", s.classical_provable);
        let _ = writeln!(out, "constructive provable   {:>8}", s.constructive_provable);
        let _ = writeln!(out, "agreements              {:>8}", s.agreements);
        let _ = writeln!(out, "disagreements           {:>8}", s.disagreements);
        let _ = writeln!(out, "derivations checked     {:>8} ({} invalid)", s.derivations_checked, s.derivations_invalid);
        let rows: Vec<&Record> = self
            .records
            .iter()
            .filter(|r| !r.agree)
            .take(20)
            .chain(self.extra.iter())
            .collect();
        if !rows.is_empty() {
            let width = rows.iter().map(|r| r.formula.len()).max().unwrap_or(0).max(7);
            let _ = writeln!(out);
            let _ = writeln!(out, "{:<width$}  {:<10} {:<12} agree", "formula", "classical", "constructive");
            for r in rows {
                let _ = writeln!(out, "{:<width$}  {:<10} {:<12} {}", r.formula, r.classical, r.constructive, r.agree);
            }
        }
        if s.disagreements > 20 {
            let _ = writeln!(out, "... {} more disagreements in the JSON report", s.disagreements - 20);
        }
        if let Some(ms) = self.runtime_ms {
            let _ = writeln!(out, "runtime     {ms} ms");
        }
        out
    }
}

#[cfg(feature = "parallel")]
fn map_ordered<T: Sync, R: Send>(items: &[T], f: impl Fn(usize, &T) -> R + Sync + Send) -> Vec<R> {
    use rayon::prelude::*;
    items.par_iter().enumerate().map(|(i, x)| f(i, x)).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_ordered<T, R>(items: &[T], f: impl Fn(usize, &T) -> R) -> Vec<R> {
    items.iter().enumerate().map(|(i, x)| f(i, x)).collect()
}

fn valid(r: &SearchResult, logic: Logic) -> Option<bool> {
    r.derivation().map(|d| check_derivation(d, logic).valid)
}

fn compare(
    formula: &Formula,
    translation: Formula,
    opts: &ExperimentOptions,
    check: bool,
) -> Result<Record, HarnessError> {
    let classical = prove(&Sequent::goal(formula.clone()), &opts.config(Logic::Classical))?;
    let constructive = prove(&Sequent::goal(translation.clone()), &opts.config(Logic::Constructive))?;
    let derivations_valid = if check {
        match (valid(&classical, Logic::Classical), valid(&constructive, Logic::Constructive)) {
            (None, None) => None,
            (a, b) => Some(a.unwrap_or(true) && b.unwrap_or(true)),
        }
    } else {
        None
    };
    Ok(Record {
        formula: formula.to_string(),
        translation: translation.to_string(),
        classical: classical.verdict(),
        constructive: constructive.verdict(),
        agree: classical.is_provable() == constructive.is_provable(),
        derivations_valid,
    })
}

fn summarize(records: &[Record], extra: &[Record]) -> Summary {
    let mut s = Summary::default();
    for r in records.iter().chain(extra) {
        s.records += 1;
        if r.agree {
            s.agreements += 1;
        } else {
            s.disagreements += 1;
        }
        s.classical_provable += usize::from(r.classical == Verdict::Provable);
        s.constructive_provable += usize::from(r.constructive == Verdict::Provable);
        if let Some(ok) = r.derivations_valid {
            s.derivations_checked += 1;
            s.derivations_invalid += usize::from(!ok);
        }
    }
    s
}

fn run_corpus(
    experiment: &str,
    method: &str,
    atoms: &[String],
    max_size: usize,
    opts: &ExperimentOptions,
    translate: impl Fn(&Formula) -> Result<Formula, TranslateError> + Sync + Send,
    extra: &[Formula],
) -> Result<ExperimentReport, HarnessError> {
    let start = Instant::now();
    let names: Vec<&str> = atoms.iter().map(String::as_str).collect();
    let corpus: Vec<Formula> = enumerate_formulas(&names, max_size, &Connective::ALL).collect();
    let item = |i: usize, f: &Formula| {
        let check = opts.check_every > 0 && i.is_multiple_of(opts.check_every);
        compare(f, translate(f)?, opts, check)
    };
    let records = map_ordered(&corpus, item).into_iter().collect::<Result<Vec<_>, _>>()?;
    let extra = map_ordered(extra, |_, f| compare(f, translate(f)?, opts, opts.check_every > 0))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let summary = summarize(&records, &extra);
    let disagreements = records.iter().chain(&extra).filter(|r| !r.agree).map(|r| r.formula.clone()).collect();
    Ok(ExperimentReport {
        experiment: experiment.to_string(),
        method: method.to_string(),
        corpus: Corpus { atoms: atoms.to_vec(), max_size, formulas: corpus.len() },
        depth: opts.depth,
        max_instantiations: opts.max_instantiations,
        summary,
        disagreements,
        records,
        extra,
        runtime_ms: opts.timing.then(|| start.elapsed().as_millis() as u64),
    })
}

/// Classical provability of each corpus formula against constructive
/// provability of its main translation.
pub fn run_theorem1_experiment(
    atoms: &[String],
    max_size: usize,
    opts: &ExperimentOptions,
) -> Result<ExperimentReport, HarnessError> {
    run_corpus("theorem1", "dowek", atoms, max_size, opts, translate_dowek, &[])
}

/// The same comparison for a translation that places double negations
/// only before or only after the connectives. The before-only run also
/// carries the first-order counterexample.
pub fn run_variant_experiment(
    variant: Variant,
    atoms: &[String],
    max_size: usize,
    opts: &ExperimentOptions,
) -> Result<ExperimentReport, HarnessError> {
    let extra = match variant {
        Variant::BeforeOnly => vec![fixtures::formula(fixtures::BEFORE_ONLY_COUNTEREXAMPLE)],
        Variant::AfterOnly => vec![],
    };
    let method = variant.method().name();
    run_corpus("variant", method, atoms, max_size, opts, |f| translate_variant(variant, f), &extra)
}

/// Verdicts for hypotheses `H1..Hn` and a goal `A`. A goal that already
/// uses classical constructors is taken as its own translation, which
/// allows mixed goals; its classical reading forgets the markers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryRecord {
    pub hypotheses: Vec<String>,
    pub goal: String,
    /// `H1, ..., Hn |- A`, classically.
    pub classical: Verdict,
    /// `||H1||, ..., ||Hn|| |- ||A||`, constructively.
    pub translated_sequent: Verdict,
    /// `|- ||H1|| =>c ... =>c ||Hn|| =>c ||A||`, constructively.
    pub corollary: Verdict,
    /// `|- H1 => ... => Hn => ||A||`, constructively.
    pub plain_hypotheses: Verdict,
    pub derivations_valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

pub fn run_corollary_experiment(
    hypotheses: &[Formula],
    goal: &Formula,
    opts: &ExperimentOptions,
) -> Result<CorollaryRecord, HarnessError> {
    let start = Instant::now();
    if let Some(h) = hypotheses.iter().find(|h| !h.is_core()) {
        return Err(HarnessError::Input(format!("hypothesis `{h}` must be written with core constructors")));
    }
    let goal_c = if goal.is_core() { classicize(goal)? } else { goal.clone() };
    let hyps_c = hypotheses.iter().map(classicize).collect::<Result<Vec<_>, _>>()?;
    let chain = |hs: &[Formula], g: Formula, classical: bool| {
        hs.iter().rev().fold(g, |acc, h| if classical { Formula::imp_c(h.clone(), acc) } else { Formula::imp(h.clone(), acc) })
    };

    let classical_seq = Sequent::new(hypotheses.to_vec(), vec![erase_classical(goal)]);
    let translated_seq = Sequent::new(hyps_c.iter().map(expand).collect(), vec![expand(&goal_c)]);
    let corollary_seq = Sequent::goal(expand(&chain(&hyps_c, goal_c.clone(), true)));
    let plain_seq = Sequent::goal(chain(hypotheses, expand(&goal_c), false));

    let classical = prove(&classical_seq, &opts.config(Logic::Classical))?;
    let constructive: Vec<SearchResult> = [translated_seq, corollary_seq, plain_seq]
        .iter()
        .map(|s| prove(s, &opts.config(Logic::Constructive)))
        .collect::<Result<_, _>>()?;
    let derivations_valid = opts.check_every == 0
        || (valid(&classical, Logic::Classical).unwrap_or(true)
            && constructive.iter().all(|r| valid(r, Logic::Constructive).unwrap_or(true)));
    Ok(CorollaryRecord {
        hypotheses: hypotheses.iter().map(Formula::to_string).collect(),
        goal: goal.to_string(),
        classical: classical.verdict(),
        translated_sequent: constructive[0].verdict(),
        corollary: constructive[1].verdict(),
        plain_hypotheses: constructive[2].verdict(),
        derivations_valid,
        runtime_ms: opts.timing.then(|| start.elapsed().as_millis() as u64),
    })
}

impl CorollaryRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialize")
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "hypotheses          {}", self.hypotheses.join(" ; "));
        let _ = writeln!(out, "goal                {}", self.goal);
        let _ = writeln!(out, "classical H |- A    {}", self.classical);
        let _ = writeln!(out, "||H|| |- ||A||      {}", self.translated_sequent);
        let _ = writeln!(out, "||H|| =>c ||A||     {}", self.corollary);
        let _ = writeln!(out, "H => ||A||          {}", self.plain_hypotheses);
        let _ = writeln!(out, "derivations valid   {}", self.derivations_valid);
        if let Some(ms) = self.runtime_ms {
            let _ = writeln!(out, "runtime             {ms} ms");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fixtures::formula;

    fn atoms(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    fn record<'a>(r: &'a ExperimentReport, f: &str) -> &'a Record {
        let f = formula(f).to_string();
        r.records.iter().chain(&r.extra).find(|x| x.formula == f).expect("formula in corpus")
    }

    #[test]
    fn theorem1_small_corpus() {
        let r = run_theorem1_experiment(&atoms(&["P"]), 4, &ExperimentOptions::default()).unwrap();
        assert_eq!(r.summary.disagreements, 0);
        assert_eq!(r.summary.derivations_invalid, 0);
        assert_eq!(r.summary.derivations_checked, r.summary.classical_provable);
        let p = record(&r, "P");
        assert_eq!((p.classical, p.constructive, p.agree), (Verdict::Refuted, Verdict::Refuted, true));
        let em = record(&r, "P \\/ ~P");
        assert_eq!((em.classical, em.constructive), (Verdict::Provable, Verdict::Provable));
        let bot = record(&r, "F");
        assert_eq!((bot.classical, bot.constructive), (Verdict::Refuted, Verdict::Refuted));
    }

    #[test]
    fn after_only_disagrees_on_excluded_middle() {
        let r = run_variant_experiment(Variant::AfterOnly, &atoms(&["P"]), 4, &ExperimentOptions::default()).unwrap();
        assert!(r.disagreements.contains(&formula("P \\/ ~P").to_string()));
        let imp = record(&r, "P => P");
        assert!(imp.agree && imp.classical == Verdict::Provable);
    }

    #[test]
    fn before_only_carries_the_first_order_counterexample() {
        let r = run_variant_experiment(Variant::BeforeOnly, &atoms(&["P"]), 2, &ExperimentOptions::default()).unwrap();
        let x = record(&r, fixtures::BEFORE_ONLY_COUNTEREXAMPLE);
        assert_eq!((x.classical, x.constructive), (Verdict::Provable, Verdict::Exhausted));
    }

    #[test]
    fn reports_are_reproducible() {
        let opts = ExperimentOptions::default();
        let a = run_theorem1_experiment(&atoms(&["P", "Q"]), 4, &opts).unwrap().to_json();
        let b = run_theorem1_experiment(&atoms(&["P", "Q"]), 4, &opts).unwrap().to_json();
        assert_eq!(a, b);
        assert!(!a.contains("runtime_ms"));
    }

    #[test]
    fn corollary_examples() {
        let opts = ExperimentOptions::default();
        let r = run_corollary_experiment(&[formula("P")], &formula("P"), &opts).unwrap();
        assert_eq!((r.classical, r.translated_sequent, r.corollary), (Verdict::Provable, Verdict::Provable, Verdict::Provable));

        let r = run_corollary_experiment(&[formula("P /\\ Q")], &formula("P"), &opts).unwrap();
        assert_eq!(r.classical, Verdict::Provable);
        assert_eq!(r.translated_sequent, Verdict::Refuted);
        assert_eq!(r.corollary, Verdict::Provable);
        assert!(r.derivations_valid);
    }
}
