//! Terms, formulas, sequents and their concrete ASCII syntax.

mod enumerate;
mod formula;
mod parse;
mod print;
mod sequent;
mod subst;
mod term;

pub use enumerate::{enumerate_formulas, Connective, FormulaEnumerator};
pub use formula::{BinOp, Formula, Quant, View};
pub use parse::{check_arities, parse_formula, parse_formula_checked, parse_sequent, parse_term, ParseError, SyntaxError, RESERVED};
pub use print::print_formula;
pub use sequent::Sequent;
pub use subst::{alpha_equal, fresh_name, substitute};
pub use term::{Ident, Term};

pub fn free_variables(f: &Formula) -> std::collections::BTreeSet<Ident> {
    f.free_variables()
}
