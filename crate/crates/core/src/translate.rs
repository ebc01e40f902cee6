//! Double-negation translations of classical formulas into constructive
//! ones.
//!
//! `classicize` replaces every connective and quantifier by its classical
//! counterpart; `expand` then unfolds the classical constructors into
//! core formulas:
//!
//! ```text
//! Tc       = ~~T
//! Fc       = ~~F
//! ~c A     = ~~~~~A
//! A *c B   = ~~((~~A) * (~~B))      for * in /\ \/ =>
//! Qc x. A  = ~~(Q x. ~~A)           for Q in forall exists
//! ```
//!
//! The composition of the two is the main translation. The other methods
//! (the Kolmogorov-Gödel-Gentzen translation, the before-only and
//! after-only placements of double negations, and the light translation
//! that drops the outermost double negation) map core formulas to core
//! formulas directly.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::syntax::{BinOp, Formula, Quant, Sequent, View};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TranslateError {
    #[error("expected a core formula, found classical constructor in `{0}`")]
    ClassicalInput(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TranslationMethod {
    Dowek,
    Kgg,
    BeforeOnly,
    AfterOnly,
    Light,
}

impl TranslationMethod {
    pub const ALL: [TranslationMethod; 5] = [
        TranslationMethod::Dowek,
        TranslationMethod::Kgg,
        TranslationMethod::BeforeOnly,
        TranslationMethod::AfterOnly,
        TranslationMethod::Light,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TranslationMethod::Dowek => "dowek",
            TranslationMethod::Kgg => "kgg",
            TranslationMethod::BeforeOnly => "before",
            TranslationMethod::AfterOnly => "after",
            TranslationMethod::Light => "light",
        }
    }

    pub fn apply(self, f: &Formula) -> Result<Formula, TranslateError> {
        match self {
            TranslationMethod::Dowek => translate_dowek(f),
            TranslationMethod::Kgg => translate_kgg(f),
            TranslationMethod::BeforeOnly => translate_variant(Variant::BeforeOnly, f),
            TranslationMethod::AfterOnly => translate_variant(Variant::AfterOnly, f),
            TranslationMethod::Light => translate_light(f),
        }
    }
}

impl fmt::Display for TranslationMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TranslationMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "dowek" => Ok(TranslationMethod::Dowek),
            "kgg" => Ok(TranslationMethod::Kgg),
            "before" | "before_only" => Ok(TranslationMethod::BeforeOnly),
            "after" | "after_only" => Ok(TranslationMethod::AfterOnly),
            "light" => Ok(TranslationMethod::Light),
            _ => Err(format!("unknown translation `{s}` (expected dowek, kgg, before, after or light)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    BeforeOnly,
    AfterOnly,
}

impl Variant {
    pub fn method(self) -> TranslationMethod {
        match self {
            Variant::BeforeOnly => TranslationMethod::BeforeOnly,
            Variant::AfterOnly => TranslationMethod::AfterOnly,
        }
    }
}

fn require_core(f: &Formula) -> Result<(), TranslateError> {
    if f.is_core() {
        Ok(())
    } else {
        Err(TranslateError::ClassicalInput(f.to_string()))
    }
}

fn nn(f: Formula) -> Formula {
    Formula::not_n(f, 2)
}

fn classical_op(op: BinOp) -> BinOp {
    match op {
        BinOp::And => BinOp::AndC,
        BinOp::Or => BinOp::OrC,
        BinOp::Imp => BinOp::ImpC,
        other => other,
    }
}

fn core_op(op: BinOp) -> BinOp {
    match op {
        BinOp::AndC => BinOp::And,
        BinOp::OrC => BinOp::Or,
        BinOp::ImpC => BinOp::Imp,
        other => other,
    }
}

fn core_quant(q: Quant) -> Quant {
    match q {
        Quant::ForallC => Quant::Forall,
        Quant::ExistsC => Quant::Exists,
        other => other,
    }
}

/// Replaces every connective and quantifier of a core formula by its
/// classical constructor; atoms are left alone.
pub fn classicize(f: &Formula) -> Result<Formula, TranslateError> {
    require_core(f)?;
    Ok(classicize_rec(f))
}

fn classicize_rec(f: &Formula) -> Formula {
    match f.view() {
        View::Atom(..) => f.clone(),
        View::Const(Formula::Top) => Formula::TopC,
        View::Const(_) => Formula::BotC,
        View::Unary { arg, .. } => Formula::not_c(classicize_rec(arg)),
        View::Binary(op, a, b) => {
            Formula::binary(classical_op(op), Arc::new(classicize_rec(a)), Arc::new(classicize_rec(b)))
        }
        View::Quant(q, x, a) => {
            let q = if q == Quant::Forall { Quant::ForallC } else { Quant::ExistsC };
            Formula::quant(q, x.clone(), Arc::new(classicize_rec(a)))
        }
    }
}

/// Forgets which constructors are classical: `Tc` becomes `T`, `/\\c`
/// becomes `/\\`, and so on. Core formulas come back unchanged.
pub fn erase_classical(f: &Formula) -> Formula {
    match f.view() {
        View::Atom(..) => f.clone(),
        View::Const(Formula::TopC) => Formula::Top,
        View::Const(Formula::BotC) => Formula::Bot,
        View::Const(c) => c.clone(),
        View::Unary { arg, .. } => Formula::not(erase_classical(arg)),
        View::Binary(op, a, b) => Formula::binary(core_op(op), Arc::new(erase_classical(a)), Arc::new(erase_classical(b))),
        View::Quant(q, x, a) => Formula::quant(core_quant(q), x.clone(), Arc::new(erase_classical(a))),
    }
}

/// Unfolds every classical constructor into its double-negation
/// definition. Core subformulas come back unchanged, so mixed formulas
/// are accepted.
pub fn expand(f: &Formula) -> Formula {
    match f.view() {
        View::Atom(..) => f.clone(),
        View::Const(Formula::TopC) => nn(Formula::Top),
        View::Const(Formula::BotC) => nn(Formula::Bot),
        View::Const(c) => c.clone(),
        View::Unary { classical: true, arg } => Formula::not_n(expand(arg), 5),
        View::Unary { classical: false, arg } => Formula::not(expand(arg)),
        View::Binary(op, a, b) if op.is_classical() => nn(Formula::binary(
            core_op(op),
            Arc::new(nn(expand(a))),
            Arc::new(nn(expand(b))),
        )),
        View::Binary(op, a, b) => Formula::binary(op, Arc::new(expand(a)), Arc::new(expand(b))),
        View::Quant(q, x, a) if q.is_classical() => {
            nn(Formula::quant(core_quant(q), x.clone(), Arc::new(nn(expand(a)))))
        }
        View::Quant(q, x, a) => Formula::quant(q, x.clone(), Arc::new(expand(a))),
    }
}

/// `expand(classicize(f))`
pub fn translate_dowek(f: &Formula) -> Result<Formula, TranslateError> {
    Ok(expand(&classicize(f)?))
}

pub fn translate_kgg(f: &Formula) -> Result<Formula, TranslateError> {
    require_core(f)?;
    Ok(kgg_rec(f))
}

fn kgg_rec(f: &Formula) -> Formula {
    match f.view() {
        View::Atom(..) | View::Const(_) => nn(f.clone()),
        View::Unary { arg, .. } => nn(Formula::not(kgg_rec(arg))),
        View::Binary(op, a, b) => nn(Formula::binary(op, Arc::new(kgg_rec(a)), Arc::new(kgg_rec(b)))),
        View::Quant(q, x, a) => nn(Formula::quant(q, x.clone(), Arc::new(kgg_rec(a)))),
    }
}

/// Double negations only in front of each connective and quantifier
/// (`BeforeOnly`), or only on the immediate subformulas (`AfterOnly`).
pub fn translate_variant(variant: Variant, f: &Formula) -> Result<Formula, TranslateError> {
    require_core(f)?;
    Ok(match variant {
        Variant::BeforeOnly => before_rec(f),
        Variant::AfterOnly => after_rec(f),
    })
}

fn before_rec(f: &Formula) -> Formula {
    match f.view() {
        View::Atom(..) => f.clone(),
        View::Const(_) => nn(f.clone()),
        View::Unary { arg, .. } => nn(Formula::not(before_rec(arg))),
        View::Binary(op, a, b) => nn(Formula::binary(op, Arc::new(before_rec(a)), Arc::new(before_rec(b)))),
        View::Quant(q, x, a) => nn(Formula::quant(q, x.clone(), Arc::new(before_rec(a)))),
    }
}

fn after_rec(f: &Formula) -> Formula {
    match f.view() {
        View::Atom(..) | View::Const(_) => f.clone(),
        View::Unary { arg, .. } => Formula::not(nn(after_rec(arg))),
        View::Binary(op, a, b) => Formula::binary(op, Arc::new(nn(after_rec(a))), Arc::new(nn(after_rec(b)))),
        View::Quant(q, x, a) => Formula::quant(q, x.clone(), Arc::new(nn(after_rec(a)))),
    }
}

/// The main translation with the outermost double negation removed.
/// Subformulas go through `translate_dowek`, not through this function.
pub fn translate_light(f: &Formula) -> Result<Formula, TranslateError> {
    require_core(f)?;
    let full = |a: &Formula| expand(&classicize_rec(a));
    Ok(match f.view() {
        View::Atom(..) | View::Const(_) => f.clone(),
        View::Unary { arg, .. } => Formula::not_n(full(arg), 3),
        View::Binary(op, a, b) => Formula::binary(op, Arc::new(nn(full(a))), Arc::new(nn(full(b)))),
        View::Quant(q, x, a) => Formula::quant(q, x.clone(), Arc::new(nn(full(a)))),
    })
}

/// `|G|, ~|D| |-` for the sequent `G |- D`.
pub fn light_sequent(s: &Sequent) -> Result<Sequent, TranslateError> {
    let mut ante = s.antecedent.iter().map(translate_light).collect::<Result<Vec<_>, _>>()?;
    for d in &s.succedent {
        ante.push(Formula::not(translate_light(d)?));
    }
    Ok(Sequent::new(ante, vec![]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    fn p(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn classicize_examples() {
        assert_eq!(classicize(&p("P")).unwrap(), p("P"));
        assert_eq!(classicize(&p("P \\/ ~P")).unwrap(), p("P \\/c ~c P"));
        assert_eq!(classicize(&p("forall x. P(x) => Q")).unwrap(), p("forallc x. P(x) =>c Q"));
        assert!(classicize(&p("~F(a) \\/c ~F(b)")).is_err());
    }

    #[test]
    fn expand_constants_and_negation() {
        assert_eq!(expand(&p("Tc")), p("~~T"));
        assert_eq!(expand(&p("Fc")), p("~~F"));
        assert_eq!(expand(&p("~c A")), p("~~~~~A"));
        assert_eq!(expand(&p("A /\\c B")), p("~~(~~A /\\ ~~B)"));
        assert_eq!(expand(&p("existsc x. A(x)")), p("~~exists x. ~~A(x)"));
    }

    #[test]
    fn expand_leaves_core_alone() {
        let f = p("forall x. P(x) \\/ ~Q");
        assert_eq!(expand(&f), f);
    }

    #[test]
    fn dowek_examples() {
        assert_eq!(translate_dowek(&p("P")).unwrap(), p("P"));
        assert_eq!(translate_dowek(&p("F")).unwrap(), p("~~F"));
    }

    #[test]
    fn kgg_examples() {
        assert_eq!(translate_kgg(&p("P")).unwrap(), p("~~P"));
        assert_eq!(translate_kgg(&p("P \\/ ~P")).unwrap(), p("~~(~~P \\/ ~~~~~P)"));
        assert_eq!(translate_kgg(&p("T")).unwrap(), p("~~T"));
    }

    #[test]
    fn variant_examples() {
        assert_eq!(translate_variant(Variant::AfterOnly, &p("P \\/ ~P")).unwrap(), p("~~P \\/ ~~~~~P"));
        assert_eq!(translate_variant(Variant::BeforeOnly, &p("~A")).unwrap(), p("~~~A"));
        assert_eq!(
            translate_variant(Variant::BeforeOnly, &p("(forall x. P(x) /\\ Q) => forall x. P(x)")).unwrap(),
            p("~~((~~forall x. ~~(P(x) /\\ Q)) => (~~forall x. P(x)))")
        );
        assert_eq!(translate_variant(Variant::BeforeOnly, &p("P \\/ ~P")).unwrap(), p("~~(P \\/ ~~~P)"));
        assert_eq!(translate_variant(Variant::AfterOnly, &p("T /\\ F")).unwrap(), p("~~T /\\ ~~F"));
    }

    #[test]
    fn light_examples() {
        assert_eq!(translate_light(&p("P")).unwrap(), p("P"));
        assert_eq!(translate_light(&p("T")).unwrap(), p("T"));
        assert_eq!(translate_light(&p("P \\/ Q")).unwrap(), p("~~P \\/ ~~Q"));
    }

    #[test]
    fn light_sequent_example() {
        let s = crate::syntax::parse_sequent("P /\\ Q |- P, ~Q").unwrap();
        let l = light_sequent(&s).unwrap();
        assert_eq!(l.to_string(), "~~P /\\ ~~Q, ~P, ~~~~Q |-");
    }

    #[test]
    fn erase_undoes_classicize() {
        for s in ["P", "T", "~(P /\\ Q) => exists x. R(x) \\/ F"] {
            assert_eq!(erase_classical(&classicize(&p(s)).unwrap()), p(s));
        }
        assert_eq!(erase_classical(&p("~F(a) \\/c ~c Fc")), p("~F(a) \\/ ~F"));
    }

    #[test]
    fn non_core_input_is_rejected() {
        for m in TranslationMethod::ALL {
            assert!(m.apply(&p("P /\\c Q")).is_err(), "{m}");
        }
    }

    #[test]
    fn method_names_round_trip() {
        for m in TranslationMethod::ALL {
            assert_eq!(m.name().parse::<TranslationMethod>().unwrap(), m);
        }
        assert!("goedel".parse::<TranslationMethod>().is_err());
    }
}
