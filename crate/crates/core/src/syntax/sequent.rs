use std::fmt;

use super::formula::Formula;

/// A two-sided sequent. Both sides are multisets: order carries no
/// meaning but duplicates do.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Sequent {
    pub antecedent: Vec<Formula>,
    pub succedent: Vec<Formula>,
}

impl Sequent {
    pub fn new(antecedent: Vec<Formula>, succedent: Vec<Formula>) -> Sequent {
        Sequent { antecedent, succedent }
    }

    /// `|- f`
    pub fn goal(f: Formula) -> Sequent {
        Sequent::new(Vec::new(), vec![f])
    }

    pub fn formulas(&self) -> impl Iterator<Item = &Formula> {
        self.antecedent.iter().chain(&self.succedent)
    }

    pub fn is_propositional(&self) -> bool {
        self.formulas().all(Formula::is_propositional)
    }

    pub fn is_core(&self) -> bool {
        self.formulas().all(Formula::is_core)
    }

    pub fn has_free(&self, x: &str) -> bool {
        self.formulas().any(|f| f.has_free(x))
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |xs: &[Formula]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        let (l, r) = (side(&self.antecedent), side(&self.succedent));
        match (l.is_empty(), r.is_empty()) {
            (true, true) => write!(f, "|-"),
            (true, false) => write!(f, "|- {r}"),
            (false, true) => write!(f, "{l} |-"),
            (false, false) => write!(f, "{l} |- {r}"),
        }
    }
}
