//! Proof search for the classical multi-succedent calculus and its
//! single-succedent constructive restriction.
//!
//! Search runs in internal calculi that terminate (contraction absorbed
//! into the rules, a repetition check for the constructive side) and
//! the result is then elaborated into the output rule set, where
//! contraction and weakening are explicit.

mod classical;
mod constructive;
mod countermodel;
mod decide;
mod derivation;
mod elaborate;
mod intern;

use std::fmt;
use std::str::FromStr;

pub use derivation::{Derivation, DerivationJson, FormatError, Rule, SequentJson, Side};

use crate::semantics::{kripke_forces, BooleanValuation, KripkeModel};
use crate::syntax::{check_arities, Formula, Sequent, SyntaxError};
use crate::Logic;
use classical::Classical;
use constructive::{Constructive, Outcome};
use intern::{fresh_constant, Budget, Fid, Interner};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum TermUniversePolicy {
    /// Closed subterms of the current sequent (eigenvariables included),
    /// or a single fresh constant when there are none.
    #[default]
    SubtermsPlusFresh,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SearchConfig {
    pub logic: Logic,
    /// Choice points allowed along one branch of a first-order search.
    /// Invertible steps are free; every sequent to which only
    /// non-invertible rules apply costs one. Propositional search is not
    /// bounded.
    pub max_depth: usize,
    pub max_instantiations_per_branch: usize,
    pub term_universe_policy: TermUniversePolicy,
}

impl SearchConfig {
    pub const DEFAULT_MAX_DEPTH: usize = 40;
    pub const DEFAULT_MAX_INSTANTIATIONS: usize = 6;

    pub fn new(logic: Logic) -> SearchConfig {
        SearchConfig {
            logic,
            max_depth: Self::DEFAULT_MAX_DEPTH,
            max_instantiations_per_branch: Self::DEFAULT_MAX_INSTANTIATIONS,
            term_universe_policy: TermUniversePolicy::SubtermsPlusFresh,
        }
    }

    pub fn classical() -> SearchConfig {
        Self::new(Logic::Classical)
    }

    pub fn constructive() -> SearchConfig {
        Self::new(Logic::Constructive)
    }

    pub fn with_depth(mut self, max_depth: usize) -> SearchConfig {
        self.max_depth = max_depth;
        self
    }
}

/// Evidence that a propositional sequent has no proof.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Makes every hypothesis true and every conclusion false.
    Valuation(BooleanValuation),
    /// Its root forces every hypothesis and not the conclusion.
    Kripke(KripkeModel),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_depth: usize,
    pub max_instantiations: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchResult {
    Provable(Derivation),
    Refuted(Certificate),
    Exhausted(Bounds),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Provable,
    Refuted,
    Exhausted,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Provable => "provable",
            Verdict::Refuted => "refuted",
            Verdict::Exhausted => "exhausted",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl SearchResult {
    pub fn verdict(&self) -> Verdict {
        match self {
            SearchResult::Provable(_) => Verdict::Provable,
            SearchResult::Refuted(_) => Verdict::Refuted,
            SearchResult::Exhausted(_) => Verdict::Exhausted,
        }
    }

    pub fn is_provable(&self) -> bool {
        matches!(self, SearchResult::Provable(_))
    }

    pub fn derivation(&self) -> Option<&Derivation> {
        match self {
            SearchResult::Provable(d) => Some(d),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ProveError {
    #[error("constructive sequents have at most one succedent formula, got {0}")]
    Mode(usize),
    #[error("formula `{0}` contains classical constructors; expand it first")]
    NotCore(String),
    #[error("formula `{0}` is not propositional")]
    Quantifier(String),
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("max_depth must be at least 1")]
    Config,
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl FromStr for Logic {
    type Err = String;

    fn from_str(s: &str) -> Result<Logic, String> {
        match s {
            "classical" => Ok(Logic::Classical),
            "constructive" => Ok(Logic::Constructive),
            _ => Err(format!("unknown logic `{s}` (expected classical or constructive)")),
        }
    }
}

fn ids(it: &mut Interner, fs: &[Formula]) -> Vec<Fid> {
    let mut v: Vec<Fid> = fs.iter().map(|f| it.intern(f)).collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Searches for a derivation of `sequent`.
///
/// Propositional sequents are decided: the answer is `Provable` or
/// `Refuted` with a certificate. First-order sequents yield `Provable`
/// or `Exhausted`; the search deepens the instantiation budget from 0 up
/// to the configured maximum.
pub fn prove(sequent: &Sequent, config: &SearchConfig) -> Result<SearchResult, ProveError> {
    if config.max_depth == 0 {
        return Err(ProveError::Config);
    }
    if let Some(f) = sequent.formulas().find(|f| !f.is_core()) {
        return Err(ProveError::NotCore(f.to_string()));
    }
    check_arities(sequent.formulas())?;
    if config.logic == Logic::Constructive && sequent.succedent.len() > 1 {
        return Err(ProveError::Mode(sequent.succedent.len()));
    }
    let propositional = sequent.is_propositional();
    let fresh = fresh_constant(sequent.formulas());
    let bounds = Bounds { max_depth: config.max_depth, max_instantiations: config.max_instantiations_per_branch };
    let budgets: Vec<Budget> = if propositional {
        vec![Budget::UNLIMITED]
    } else {
        let depth = u32::try_from(config.max_depth).unwrap_or(u32::MAX - 1);
        (0..=config.max_instantiations_per_branch.min(u32::MAX as usize - 1))
            .map(|inst| Budget { depth, inst: inst as u32 })
            .collect()
    };
    let mut it = Interner::default();
    let ante = ids(&mut it, &sequent.antecedent);
    let succ = ids(&mut it, &sequent.succedent);
    let ante_fs = sequent.antecedent.clone();
    match config.logic {
        Logic::Classical => {
            for b in budgets {
                let mut s = Classical::new(&mut it, !propositional, fresh.clone());
                if let Some(p) = s.search(ante.clone(), succ.clone(), b) {
                    return Ok(SearchResult::Provable(elaborate::classical(
                        &it,
                        &p,
                        ante_fs,
                        sequent.succedent.clone(),
                    )));
                }
                if propositional {
                    let (gamma, _) = s.open_leaf.take().expect("failed propositional search leaves an open branch");
                    let mut v = BooleanValuation::new();
                    for a in sequent.formulas().flat_map(Formula::atoms) {
                        v.set(&a, false);
                    }
                    for id in gamma {
                        let f = it.formula(id);
                        if f.is_atomic() {
                            v.set(f, true);
                        }
                    }
                    return Ok(SearchResult::Refuted(Certificate::Valuation(v)));
                }
                if !s.hit_limit {
                    break;
                }
            }
            Ok(SearchResult::Exhausted(bounds))
        }
        Logic::Constructive => {
            let goal = succ.first().copied();
            for b in budgets {
                let mut s = Constructive::new(&mut it, !propositional, fresh.clone());
                match s.search(ante.clone(), goal, b) {
                    Outcome::Proved(p) => {
                        return Ok(SearchResult::Provable(elaborate::constructive(
                            &it,
                            &p,
                            ante_fs,
                            sequent.succedent.first().cloned(),
                        )));
                    }
                    Outcome::Failed(_) if propositional => {
                        return refute_constructive(sequent).map(|m| SearchResult::Refuted(Certificate::Kripke(m)));
                    }
                    Outcome::Failed(_) => {}
                }
                if !s.hit_limit {
                    break;
                }
            }
            Ok(SearchResult::Exhausted(bounds))
        }
    }
}

fn refute_constructive(sequent: &Sequent) -> Result<KripkeModel, ProveError> {
    let goal = sequent.succedent.first();
    let disagree = || ProveError::Internal(format!("no countermodel for `{sequent}` although search failed"));
    let m = countermodel::kripke_countermodel(&sequent.antecedent, goal).ok_or_else(disagree)?;
    let forces = |f: &Formula| kripke_forces(&m, 0, f).map_err(|e| ProveError::Internal(e.to_string()));
    for f in &sequent.antecedent {
        if !forces(f)? {
            return Err(disagree());
        }
    }
    if let Some(g) = goal {
        if forces(g)? {
            return Err(disagree());
        }
    }
    Ok(m)
}

/// Decides provability of a propositional core formula without going
/// through [`prove`]: truth tables for classical logic, the
/// contraction-free calculus `G4ip` for constructive logic.
pub fn decide_propositional(logic: Logic, f: &Formula) -> Result<bool, ProveError> {
    if !f.is_quantifier_free() {
        return Err(ProveError::Quantifier(f.to_string()));
    }
    if !f.is_core() {
        return Err(ProveError::NotCore(f.to_string()));
    }
    Ok(match logic {
        Logic::Classical => crate::semantics::find_boolean_countermodel(f)
            .map_err(|e| ProveError::Internal(e.to_string()))?
            .is_none(),
        Logic::Constructive => {
            let mut g4 = decide::G4::default();
            let id = g4.add(f);
            g4.provable(&[], id)
        }
    })
}

#[cfg(test)]
mod tests;
