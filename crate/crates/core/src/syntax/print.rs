use std::fmt;

use super::formula::{BinOp, Formula, View};
use super::parse::is_ident_char;

const PREC_IMP: u8 = 1;
const PREC_OR: u8 = 2;
const PREC_AND: u8 = 3;
const PREC_NOT: u8 = 4;

fn prec(op: BinOp) -> u8 {
    match op {
        BinOp::Imp | BinOp::ImpC => PREC_IMP,
        BinOp::Or | BinOp::OrC => PREC_OR,
        BinOp::And | BinOp::AndC => PREC_AND,
    }
}

/// Renders a formula in the ASCII grammar accepted by `parse_formula`.
pub fn print_formula(f: &Formula) -> String {
    let mut out = String::new();
    write_formula(&mut out, f, 0, true);
    out
}

/// `open_right` is true when nothing follows this subformula before the
/// enclosing parenthesis or the end of input; a bare quantifier is only
/// safe there.
fn write_formula(out: &mut String, f: &Formula, min_prec: u8, open_right: bool) {
    let parens = match f.view() {
        View::Quant(..) => !open_right,
        View::Binary(op, ..) => prec(op) < min_prec,
        _ => false,
    };
    if parens {
        out.push('(');
        write_formula(out, f, 0, true);
        out.push(')');
        return;
    }
    match f.view() {
        View::Atom(p, args) => {
            out.push_str(p);
            if !args.is_empty() {
                out.push('(');
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        out.push_str(", ");
                    }
                    out.push_str(&a.to_string());
                }
                out.push(')');
            }
        }
        View::Const(c) => out.push_str(match c {
            Formula::Top => "T",
            Formula::Bot => "F",
            Formula::TopC => "Tc",
            _ => "Fc",
        }),
        View::Unary { classical, arg } => {
            let mut inner = String::new();
            write_formula(&mut inner, arg, PREC_NOT, open_right);
            if classical {
                out.push_str("~c ");
            } else {
                out.push('~');
                // keep `~` + `c...` from lexing as the classical negation
                let mut cs = inner.chars();
                if cs.next() == Some('c') && !cs.next().is_some_and(is_ident_char) {
                    out.push(' ');
                }
            }
            out.push_str(&inner);
        }
        View::Binary(op, a, b) => {
            let p = prec(op);
            let (lmin, rmin) = if p == PREC_IMP { (p + 1, p) } else { (p, p + 1) };
            write_formula(out, a, lmin, false);
            out.push(' ');
            out.push_str(op.token());
            out.push(' ');
            write_formula(out, b, rmin, open_right);
        }
        View::Quant(q, x, body) => {
            out.push_str(q.keyword());
            out.push(' ');
            out.push_str(x);
            out.push_str(". ");
            write_formula(out, body, 0, true);
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_formula(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_formula, Term};

    #[test]
    fn examples() {
        let pp = Formula::atom("P");
        assert_eq!(print_formula(&Formula::or(pp.clone(), Formula::not(pp.clone()))), "P \\/ ~P");
        assert_eq!(print_formula(&Formula::not_c(pp.clone())), "~c P");
        let all = Formula::forall("x", Formula::pred("P", vec![Term::var("x")]));
        assert_eq!(print_formula(&all), "forall x. P(x)");
    }

    #[test]
    fn quantifiers_in_operand_position_get_parentheses() {
        for s in [
            "(forall x. P(x)) /\\ Q",
            "~(forall x. P(x)) \\/ Q",
            "Q => forall x. P(x)",
            "(exists x. P(x)) => Q",
            "~forall x. P(x)",
            "(P => Q) => R",
            "P /\\ (Q /\\ R)",
            "~ c",
            "~~~P",
            "~c ~c c",
            "P(c()) \\/c Q(f(x, y))",
        ] {
            let f = parse_formula(s).unwrap();
            assert_eq!(print_formula(&f), s);
            assert_eq!(parse_formula(&print_formula(&f)).unwrap(), f);
        }
    }
}
