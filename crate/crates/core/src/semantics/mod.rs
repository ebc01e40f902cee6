//! Boolean and Kripke semantics for propositional core formulas.

mod boolean;
mod kripke;

pub use boolean::{eval_boolean, find_boolean_countermodel, BooleanValuation};
pub use kripke::{find_kripke_countermodel, kripke_forces, KripkeJson, KripkeModel};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SemanticsError {
    #[error("quantified formula `{0}` has no propositional semantics")]
    Quantifier(String),
    #[error("formula `{0}` contains classical constructors; expand it first")]
    NotCore(String),
    #[error("valuation does not assign atom `{0}`")]
    MissingAtom(String),
    #[error("invalid Kripke model: {0}")]
    InvalidModel(String),
}
