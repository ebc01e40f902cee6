use std::collections::BTreeSet;
use std::sync::Arc;

use super::formula::{Formula, View};
use super::term::{Ident, Term};

/// Appends primes to `base` until `taken` rejects the candidate no longer.
pub fn fresh_name(base: &str, taken: impl Fn(&str) -> bool) -> Ident {
    let mut name = format!("{base}'");
    while taken(&name) {
        name.push('\'');
    }
    name.into()
}

/// Capture-avoiding substitution of `t` for the free occurrences of `x`.
pub fn substitute(f: &Formula, x: &str, t: &Term) -> Formula {
    if !f.has_free(x) {
        return f.clone();
    }
    let tvars = t.variables();
    subst_rec(f, x, t, &tvars)
}

fn subst_rec(f: &Formula, x: &str, t: &Term, tvars: &BTreeSet<Ident>) -> Formula {
    match f.view() {
        View::Atom(p, args) => Formula::Atom(p.clone(), args.iter().map(|a| a.substitute(x, t)).collect()),
        View::Const(c) => c.clone(),
        View::Unary { classical, arg } => {
            let inner = Arc::new(subst_rec(arg, x, t, tvars));
            if classical {
                Formula::NotC(inner)
            } else {
                Formula::Not(inner)
            }
        }
        View::Binary(op, a, b) => Formula::binary(
            op,
            Arc::new(subst_rec(a, x, t, tvars)),
            Arc::new(subst_rec(b, x, t, tvars)),
        ),
        View::Quant(q, y, body) => {
            if &**y == x || !body.has_free(x) {
                return f.clone();
            }
            if tvars.contains(y) {
                let fresh = fresh_name(y, |n| {
                    n == x || tvars.contains(n) || body.has_free(n)
                });
                let renamed = subst_rec(body, y, &Term::Var(fresh.clone()), &BTreeSet::from([fresh.clone()]));
                Formula::quant(q, fresh, Arc::new(subst_rec(&renamed, x, t, tvars)))
            } else {
                Formula::quant(q, y.clone(), Arc::new(subst_rec(body, x, t, tvars)))
            }
        }
    }
}

/// Equality up to consistent renaming of bound variables.
pub fn alpha_equal(f: &Formula, g: &Formula) -> bool {
    alpha_rec(f, g, &mut Vec::new(), &mut Vec::new())
}

fn alpha_rec(f: &Formula, g: &Formula, lf: &mut Vec<Ident>, lg: &mut Vec<Ident>) -> bool {
    match (f.view(), g.view()) {
        (View::Atom(p, xs), View::Atom(q, ys)) => {
            p == q && xs.len() == ys.len() && xs.iter().zip(ys).all(|(s, t)| term_alpha(s, t, lf, lg))
        }
        (View::Const(a), View::Const(b)) => a == b,
        (View::Unary { classical: c1, arg: a }, View::Unary { classical: c2, arg: b }) => {
            c1 == c2 && alpha_rec(a, b, lf, lg)
        }
        (View::Binary(o1, a1, b1), View::Binary(o2, a2, b2)) => {
            o1 == o2 && alpha_rec(a1, a2, lf, lg) && alpha_rec(b1, b2, lf, lg)
        }
        (View::Quant(q1, x, a), View::Quant(q2, y, b)) => {
            if q1 != q2 {
                return false;
            }
            lf.push(x.clone());
            lg.push(y.clone());
            let eq = alpha_rec(a, b, lf, lg);
            lf.pop();
            lg.pop();
            eq
        }
        _ => false,
    }
}

fn term_alpha(s: &Term, t: &Term, lf: &[Ident], lg: &[Ident]) -> bool {
    match (s, t) {
        (Term::Var(x), Term::Var(y)) => {
            let ix = lf.iter().rposition(|b| b == x);
            let iy = lg.iter().rposition(|b| b == y);
            match (ix, iy) {
                (Some(i), Some(j)) => i == j,
                (None, None) => x == y,
                _ => false,
            }
        }
        (Term::Fun(f, xs), Term::Fun(g, ys)) => {
            f == g && xs.len() == ys.len() && xs.iter().zip(ys).all(|(a, b)| term_alpha(a, b, lf, lg))
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    fn p(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn direct_replacement() {
        let f = p("P(x) /\\ Q");
        let t = Term::app("f", vec![Term::var("a")]);
        assert_eq!(substitute(&f, "x", &t), p("P(f(a)) /\\ Q"));
    }

    #[test]
    fn bound_occurrence_untouched() {
        let f = p("forall x. P(x)");
        assert_eq!(substitute(&f, "x", &Term::var("a")), f);
    }

    #[test]
    fn capture_is_avoided() {
        let f = p("forall y. P(x)");
        let out = substitute(&f, "x", &Term::var("y"));
        assert_eq!(out, p("forall y'. P(y)"));
    }

    #[test]
    fn capture_avoidance_renames_inside_body() {
        let f = p("forall y. R(x, y)");
        let out = substitute(&f, "x", &Term::var("y"));
        assert_eq!(out, p("forall y'. R(y, y')"));
    }

    #[test]
    fn alpha_examples() {
        assert!(alpha_equal(&p("forall x. P(x)"), &p("forall y. P(y)")));
        assert!(!alpha_equal(&p("forall x. P(x)"), &p("forall x. Q(x)")));
        assert!(alpha_equal(&p("P"), &p("P")));
        assert!(!alpha_equal(&p("forall x. P(x, y)"), &p("forall y. P(y, y)")));
        assert!(!alpha_equal(&p("forall x. P(x)"), &p("forallc x. P(x)")));
    }

    #[test]
    fn free_variable_examples() {
        let names = |s: &str| p(s).free_variables().iter().map(|v| v.to_string()).collect::<Vec<_>>();
        assert_eq!(names("P(x) /\\ forall x. Q(x)"), vec!["x"]);
        assert!(names("forall x. P(x)").is_empty());
        assert_eq!(names("P(x, y) => exists y. R(y)"), vec!["x", "y"]);
    }
}
