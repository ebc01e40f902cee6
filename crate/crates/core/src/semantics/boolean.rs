use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::SemanticsError;
use crate::syntax::Formula;

/// Truth assignment keyed by the printed form of each atom.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BooleanValuation {
    pub values: BTreeMap<String, bool>,
}

impl BooleanValuation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, atom: &Formula, value: bool) {
        self.values.insert(atom.to_string(), value);
    }

    pub fn with(mut self, atom: &str, value: bool) -> Self {
        self.values.insert(atom.to_string(), value);
        self
    }

    pub fn get(&self, atom: &Formula) -> Option<bool> {
        self.values.get(&atom.to_string()).copied()
    }
}

pub(crate) fn require_propositional(f: &Formula) -> Result<(), SemanticsError> {
    if !f.is_quantifier_free() {
        return Err(SemanticsError::Quantifier(f.to_string()));
    }
    if !f.is_core() {
        return Err(SemanticsError::NotCore(f.to_string()));
    }
    Ok(())
}

pub fn eval_boolean(f: &Formula, v: &BooleanValuation) -> Result<bool, SemanticsError> {
    require_propositional(f)?;
    eval(f, v)
}

fn eval(f: &Formula, v: &BooleanValuation) -> Result<bool, SemanticsError> {
    Ok(match f {
        Formula::Atom(..) => v.get(f).ok_or_else(|| SemanticsError::MissingAtom(f.to_string()))?,
        Formula::Top => true,
        Formula::Bot => false,
        Formula::Not(a) => !eval(a, v)?,
        Formula::And(a, b) => eval(a, v)? && eval(b, v)?,
        Formula::Or(a, b) => eval(a, v)? || eval(b, v)?,
        Formula::Imp(a, b) => !eval(a, v)? || eval(b, v)?,
        _ => unreachable!("checked propositional"),
    })
}

/// Exhaustive search over all assignments to the atoms of `f`; the first
/// falsifying one in binary counting order (first atom is the low bit).
pub fn find_boolean_countermodel(f: &Formula) -> Result<Option<BooleanValuation>, SemanticsError> {
    require_propositional(f)?;
    let atoms = f.atoms();
    for bits in 0u64..(1u64 << atoms.len()) {
        let mut v = BooleanValuation::new();
        for (i, a) in atoms.iter().enumerate() {
            v.set(a, bits >> i & 1 == 1);
        }
        if !eval(f, &v)? {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;
    use crate::translate::translate_dowek;

    fn p(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn evaluation_examples() {
        let off = BooleanValuation::new().with("P", false);
        let on = BooleanValuation::new().with("P", true);
        assert!(eval_boolean(&p("P \\/ ~P"), &off).unwrap());
        assert!(!eval_boolean(&p("F"), &off).unwrap());
        assert!(!eval_boolean(&p("F"), &BooleanValuation::new()).unwrap());
        assert!(eval_boolean(&p("~~P"), &on).unwrap());
    }

    #[test]
    fn evaluation_errors() {
        assert!(matches!(
            eval_boolean(&p("forall x. P(x)"), &BooleanValuation::new()),
            Err(SemanticsError::Quantifier(_))
        ));
        assert!(matches!(eval_boolean(&p("P /\\ Q"), &BooleanValuation::new().with("P", true)), Err(SemanticsError::MissingAtom(a)) if a == "Q"));
    }

    #[test]
    fn countermodel_examples() {
        assert_eq!(find_boolean_countermodel(&p("P")).unwrap(), Some(BooleanValuation::new().with("P", false)));
        assert_eq!(find_boolean_countermodel(&p("P \\/ ~P")).unwrap(), None);
        let t = translate_dowek(&p("P \\/ ~P")).unwrap();
        assert_eq!(find_boolean_countermodel(&t).unwrap(), None);
    }
}
