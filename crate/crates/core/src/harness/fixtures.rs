//! Named formulas from the worked examples, as parser input.

use crate::syntax::{parse_formula, Formula};

pub const EXCLUDED_MIDDLE: &str = "P \\/ ~P";

/// The after-only translation of excluded middle.
pub const EXCLUDED_MIDDLE_AFTER_ONLY: &str = "~~P \\/ ~~~~~P";

/// Hypothesis and goal of `P /\c Q |- P`.
pub const AND_C_HYPOTHESIS: &str = "P /\\c Q";
pub const AND_C_GOAL: &str = "P";

/// Classically provable; its before-only translation is not
/// constructively provable.
pub const BEFORE_ONLY_COUNTEREXAMPLE: &str = "(forall x. (P(x) /\\ Q)) => forall x. P(x)";

/// The union of two finite sets is finite.
pub const FINITE_UNION_AXIOM: &str = "forall x. forall y. (F(x) => F(y) => F(cup(x, y)))";

/// If the union of two sets is infinite then one of them is.
pub const FINITE_UNION_GOAL: &str = "forall a. forall b. (~F(cup(a, b)) => ~F(a) \\/ ~F(b))";

/// The goal with only the disjunction classical.
pub const FINITE_UNION_MIXED_GOAL: &str = "forall a. forall b. (~F(cup(a, b)) => ~F(a) \\/c ~F(b))";

pub fn formula(text: &str) -> Formula {
    parse_formula(text).unwrap_or_else(|e| panic!("fixture `{text}` does not parse: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::translate::{translate_variant, Variant};

    #[test]
    fn fixtures_parse() {
        for s in [
            EXCLUDED_MIDDLE,
            EXCLUDED_MIDDLE_AFTER_ONLY,
            AND_C_HYPOTHESIS,
            AND_C_GOAL,
            BEFORE_ONLY_COUNTEREXAMPLE,
            FINITE_UNION_AXIOM,
            FINITE_UNION_GOAL,
            FINITE_UNION_MIXED_GOAL,
        ] {
            formula(s);
        }
    }

    #[test]
    fn after_only_excluded_middle_matches() {
        let t = translate_variant(Variant::AfterOnly, &formula(EXCLUDED_MIDDLE)).unwrap();
        assert_eq!(t, formula(EXCLUDED_MIDDLE_AFTER_ONLY));
    }
}
