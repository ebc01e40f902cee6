use std::collections::BTreeSet;
use std::sync::Arc;

use super::term::{Ident, Term};

/// A first-order formula over the constructive connectives, plus a
/// separate constructor for each classical connective and quantifier.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(Ident, Vec<Term>),
    Top,
    Bot,
    Not(Arc<Formula>),
    And(Arc<Formula>, Arc<Formula>),
    Or(Arc<Formula>, Arc<Formula>),
    Imp(Arc<Formula>, Arc<Formula>),
    Forall(Ident, Arc<Formula>),
    Exists(Ident, Arc<Formula>),
    TopC,
    BotC,
    NotC(Arc<Formula>),
    AndC(Arc<Formula>, Arc<Formula>),
    OrC(Arc<Formula>, Arc<Formula>),
    ImpC(Arc<Formula>, Arc<Formula>),
    ForallC(Ident, Arc<Formula>),
    ExistsC(Ident, Arc<Formula>),
}

/// Binary connectives, core and classical.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BinOp {
    And,
    Or,
    Imp,
    AndC,
    OrC,
    ImpC,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quant {
    Forall,
    Exists,
    ForallC,
    ExistsC,
}

impl BinOp {
    pub fn is_classical(self) -> bool {
        matches!(self, BinOp::AndC | BinOp::OrC | BinOp::ImpC)
    }

    pub fn token(self) -> &'static str {
        match self {
            BinOp::And => "/\\",
            BinOp::Or => "\\/",
            BinOp::Imp => "=>",
            BinOp::AndC => "/\\c",
            BinOp::OrC => "\\/c",
            BinOp::ImpC => "=>c",
        }
    }
}

impl Quant {
    pub fn is_classical(self) -> bool {
        matches!(self, Quant::ForallC | Quant::ExistsC)
    }

    pub fn keyword(self) -> &'static str {
        match self {
            Quant::Forall => "forall",
            Quant::Exists => "exists",
            Quant::ForallC => "forallc",
            Quant::ExistsC => "existsc",
        }
    }
}

/// A borrowed, shape-level view of a formula node.
pub enum View<'a> {
    Atom(&'a Ident, &'a [Term]),
    Const(&'a Formula),
    Unary { classical: bool, arg: &'a Arc<Formula> },
    Binary(BinOp, &'a Arc<Formula>, &'a Arc<Formula>),
    Quant(Quant, &'a Ident, &'a Arc<Formula>),
}

impl Formula {
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(name.into(), Vec::new())
    }

    pub fn pred(name: &str, args: Vec<Term>) -> Formula {
        Formula::Atom(name.into(), args)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Formula) -> Formula {
        Formula::Not(Arc::new(a))
    }

    pub fn not_n(a: Formula, n: usize) -> Formula {
        (0..n).fold(a, |acc, _| Formula::not(acc))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Arc::new(a), Arc::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Arc::new(a), Arc::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Arc::new(a), Arc::new(b))
    }

    /// `(a => b) /\ (b => a)`
    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::and(Formula::imp(a.clone(), b.clone()), Formula::imp(b, a))
    }

    pub fn forall(x: &str, a: Formula) -> Formula {
        Formula::Forall(x.into(), Arc::new(a))
    }

    pub fn exists(x: &str, a: Formula) -> Formula {
        Formula::Exists(x.into(), Arc::new(a))
    }

    pub fn not_c(a: Formula) -> Formula {
        Formula::NotC(Arc::new(a))
    }

    pub fn and_c(a: Formula, b: Formula) -> Formula {
        Formula::AndC(Arc::new(a), Arc::new(b))
    }

    pub fn or_c(a: Formula, b: Formula) -> Formula {
        Formula::OrC(Arc::new(a), Arc::new(b))
    }

    pub fn imp_c(a: Formula, b: Formula) -> Formula {
        Formula::ImpC(Arc::new(a), Arc::new(b))
    }

    pub fn forall_c(x: &str, a: Formula) -> Formula {
        Formula::ForallC(x.into(), Arc::new(a))
    }

    pub fn exists_c(x: &str, a: Formula) -> Formula {
        Formula::ExistsC(x.into(), Arc::new(a))
    }

    pub fn binary(op: BinOp, a: Arc<Formula>, b: Arc<Formula>) -> Formula {
        match op {
            BinOp::And => Formula::And(a, b),
            BinOp::Or => Formula::Or(a, b),
            BinOp::Imp => Formula::Imp(a, b),
            BinOp::AndC => Formula::AndC(a, b),
            BinOp::OrC => Formula::OrC(a, b),
            BinOp::ImpC => Formula::ImpC(a, b),
        }
    }

    pub fn quant(q: Quant, x: Ident, a: Arc<Formula>) -> Formula {
        match q {
            Quant::Forall => Formula::Forall(x, a),
            Quant::Exists => Formula::Exists(x, a),
            Quant::ForallC => Formula::ForallC(x, a),
            Quant::ExistsC => Formula::ExistsC(x, a),
        }
    }

    pub fn view(&self) -> View<'_> {
        match self {
            Formula::Atom(p, args) => View::Atom(p, args),
            Formula::Top | Formula::Bot | Formula::TopC | Formula::BotC => View::Const(self),
            Formula::Not(a) => View::Unary { classical: false, arg: a },
            Formula::NotC(a) => View::Unary { classical: true, arg: a },
            Formula::And(a, b) => View::Binary(BinOp::And, a, b),
            Formula::Or(a, b) => View::Binary(BinOp::Or, a, b),
            Formula::Imp(a, b) => View::Binary(BinOp::Imp, a, b),
            Formula::AndC(a, b) => View::Binary(BinOp::AndC, a, b),
            Formula::OrC(a, b) => View::Binary(BinOp::OrC, a, b),
            Formula::ImpC(a, b) => View::Binary(BinOp::ImpC, a, b),
            Formula::Forall(x, a) => View::Quant(Quant::Forall, x, a),
            Formula::Exists(x, a) => View::Quant(Quant::Exists, x, a),
            Formula::ForallC(x, a) => View::Quant(Quant::ForallC, x, a),
            Formula::ExistsC(x, a) => View::Quant(Quant::ExistsC, x, a),
        }
    }

    pub fn is_atomic(&self) -> bool {
        matches!(self, Formula::Atom(..))
    }

    /// True iff no classical constructor occurs anywhere in the formula.
    pub fn is_core(&self) -> bool {
        match self.view() {
            View::Atom(..) => true,
            View::Const(c) => matches!(c, Formula::Top | Formula::Bot),
            View::Unary { classical, arg } => !classical && arg.is_core(),
            View::Binary(op, a, b) => !op.is_classical() && a.is_core() && b.is_core(),
            View::Quant(q, _, a) => !q.is_classical() && a.is_core(),
        }
    }

    /// True iff no quantifier (core or classical) occurs.
    pub fn is_quantifier_free(&self) -> bool {
        match self.view() {
            View::Atom(..) | View::Const(_) => true,
            View::Unary { arg, .. } => arg.is_quantifier_free(),
            View::Binary(_, a, b) => a.is_quantifier_free() && b.is_quantifier_free(),
            View::Quant(..) => false,
        }
    }

    /// Core and quantifier-free.
    pub fn is_propositional(&self) -> bool {
        self.is_core() && self.is_quantifier_free()
    }

    /// Node count: atoms, constants, connectives and quantifiers each count one.
    pub fn size(&self) -> usize {
        match self.view() {
            View::Atom(..) | View::Const(_) => 1,
            View::Unary { arg, .. } => 1 + arg.size(),
            View::Binary(_, a, b) => 1 + a.size() + b.size(),
            View::Quant(_, _, a) => 1 + a.size(),
        }
    }

    pub fn free_variables(&self) -> BTreeSet<Ident> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<Ident>, out: &mut BTreeSet<Ident>) {
        match self.view() {
            View::Atom(_, args) => {
                let mut vars = BTreeSet::new();
                args.iter().for_each(|t| t.collect_variables(&mut vars));
                out.extend(vars.into_iter().filter(|v| !bound.contains(v)));
            }
            View::Const(_) => {}
            View::Unary { arg, .. } => arg.collect_free(bound, out),
            View::Binary(_, a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            View::Quant(_, x, a) => {
                bound.push(x.clone());
                a.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn has_free(&self, x: &str) -> bool {
        match self.view() {
            View::Atom(_, args) => args.iter().any(|t| t.contains_var(x)),
            View::Const(_) => false,
            View::Unary { arg, .. } => arg.has_free(x),
            View::Binary(_, a, b) => a.has_free(x) || b.has_free(x),
            View::Quant(_, y, a) => &**y != x && a.has_free(x),
        }
    }

    /// Every variable name occurring anywhere, bound or free.
    pub fn all_variables(&self, out: &mut BTreeSet<Ident>) {
        match self.view() {
            View::Atom(_, args) => args.iter().for_each(|t| t.collect_variables(out)),
            View::Const(_) => {}
            View::Unary { arg, .. } => arg.all_variables(out),
            View::Binary(_, a, b) => {
                a.all_variables(out);
                b.all_variables(out);
            }
            View::Quant(_, x, a) => {
                out.insert(x.clone());
                a.all_variables(out);
            }
        }
    }

    /// Distinct atomic subformulas in first-occurrence order.
    pub fn atoms(&self) -> Vec<Formula> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut Vec<Formula>) {
        match self.view() {
            View::Atom(..) => {
                if !out.contains(self) {
                    out.push(self.clone());
                }
            }
            View::Const(_) => {}
            View::Unary { arg, .. } => arg.collect_atoms(out),
            View::Binary(_, a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
            View::Quant(_, _, a) => a.collect_atoms(out),
        }
    }

    /// Terms occurring in atoms that mention no bound variable, outermost first.
    pub fn closed_subterms(&self, out: &mut Vec<Term>) {
        self.closed_subterms_in(&mut Vec::new(), out)
    }

    fn closed_subterms_in(&self, bound: &mut Vec<Ident>, out: &mut Vec<Term>) {
        match self.view() {
            View::Atom(_, args) => {
                let mut all = Vec::new();
                args.iter().for_each(|t| t.subterms(&mut all));
                for t in all {
                    if !bound.iter().any(|b| t.contains_var(b)) && !out.contains(&t) {
                        out.push(t);
                    }
                }
            }
            View::Const(_) => {}
            View::Unary { arg, .. } => arg.closed_subterms_in(bound, out),
            View::Binary(_, a, b) => {
                a.closed_subterms_in(bound, out);
                b.closed_subterms_in(bound, out);
            }
            View::Quant(_, x, a) => {
                bound.push(x.clone());
                a.closed_subterms_in(bound, out);
                bound.pop();
            }
        }
    }

    /// Function symbols with their arities, in occurrence order.
    pub fn function_symbols(&self, out: &mut Vec<(Ident, usize)>) {
        fn walk_term(t: &Term, out: &mut Vec<(Ident, usize)>) {
            if let Term::Fun(f, args) = t {
                out.push((f.clone(), args.len()));
                args.iter().for_each(|a| walk_term(a, out));
            }
        }
        match self.view() {
            View::Atom(_, args) => args.iter().for_each(|t| walk_term(t, out)),
            View::Const(_) => {}
            View::Unary { arg, .. } => arg.function_symbols(out),
            View::Binary(_, a, b) => {
                a.function_symbols(out);
                b.function_symbols(out);
            }
            View::Quant(_, _, a) => a.function_symbols(out),
        }
    }
}
