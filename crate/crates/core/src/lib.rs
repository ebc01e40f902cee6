//! Classical connectives and quantifiers defined inside constructive
//! logic by double negation, together with cut-free sequent provers for
//! classical and constructive first-order logic, an independent
//! derivation checker, and semantic oracles.

pub mod checker;
pub mod engine;
pub mod harness;
pub mod semantics;
pub mod syntax;
pub mod translate;

/// Which notion of provability is meant: multi-succedent classical
/// sequents, or the restriction to at most one succedent formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Logic {
    Classical,
    Constructive,
}

impl Logic {
    pub fn name(self) -> &'static str {
        match self {
            Logic::Classical => "classical",
            Logic::Constructive => "constructive",
        }
    }
}

impl std::fmt::Display for Logic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}
