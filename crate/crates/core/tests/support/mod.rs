//! Backward derivation builder for hand-written fixtures. Premises are
//! computed from the rule schemas directly; nothing here calls the
//! prover or the checker.

#![allow(dead_code)]

use std::path::PathBuf;

use rand::Rng;

use dnc_core::engine::{Derivation, Rule};
use dnc_core::syntax::{substitute, Formula, Ident, Sequent, Term};
use dnc_core::Logic;

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join("derivations")
}

fn nn(f: Formula) -> Formula {
    Formula::not(Formula::not(f))
}

/// The main translation written straight from the definitions of the
/// classical constructors, without going through `classicize`/`expand`.
pub fn oracle_dowek(f: &Formula) -> Formula {
    let wrap = |a: &Formula| nn(oracle_dowek(a));
    match f {
        Formula::Atom(..) => f.clone(),
        Formula::Top => nn(Formula::Top),
        Formula::Bot => nn(Formula::Bot),
        Formula::Not(a) => Formula::not_n(oracle_dowek(a), 5),
        Formula::And(a, b) => nn(Formula::and(wrap(a), wrap(b))),
        Formula::Or(a, b) => nn(Formula::or(wrap(a), wrap(b))),
        Formula::Imp(a, b) => nn(Formula::imp(wrap(a), wrap(b))),
        Formula::Forall(x, a) => nn(Formula::forall(x, wrap(a))),
        Formula::Exists(x, a) => nn(Formula::exists(x, wrap(a))),
        _ => panic!("oracle takes core formulas only"),
    }
}

/// The light translation, same treatment.
pub fn oracle_light(f: &Formula) -> Formula {
    let wrap = |a: &Formula| nn(oracle_dowek(a));
    match f {
        Formula::Atom(..) | Formula::Top | Formula::Bot => f.clone(),
        Formula::Not(a) => Formula::not_n(oracle_dowek(a), 3),
        Formula::And(a, b) => Formula::and(wrap(a), wrap(b)),
        Formula::Or(a, b) => Formula::or(wrap(a), wrap(b)),
        Formula::Imp(a, b) => Formula::imp(wrap(a), wrap(b)),
        Formula::Forall(x, a) => Formula::forall(x, wrap(a)),
        Formula::Exists(x, a) => Formula::exists(x, wrap(a)),
        _ => panic!("oracle takes core formulas only"),
    }
}

/// A uniformly shaped random core formula over `P`, `Q` with exactly
/// `size` nodes.
pub fn random_formula(rng: &mut impl Rng, size: usize) -> Formula {
    assert!(size >= 1);
    if size == 1 {
        return match rng.gen_range(0..4) {
            0 => Formula::atom("P"),
            1 => Formula::atom("Q"),
            2 => Formula::Top,
            _ => Formula::Bot,
        };
    }
    if size == 2 || rng.gen_range(0..4) == 0 {
        return Formula::not(random_formula(rng, size - 1));
    }
    let left = rng.gen_range(1..size - 1);
    let (a, b) = (random_formula(rng, left), random_formula(rng, size - 1 - left));
    match rng.gen_range(0..3) {
        0 => Formula::and(a, b),
        1 => Formula::or(a, b),
        _ => Formula::imp(a, b),
    }
}

fn position(xs: &[Formula], f: &Formula, what: &str) -> usize {
    xs.iter().position(|x| x == f).unwrap_or_else(|| panic!("`{f}` is not in the {what}"))
}

fn drop(xs: &[Formula], i: usize) -> Vec<Formula> {
    let mut v = xs.to_vec();
    v.remove(i);
    v
}

fn plus(xs: &[Formula], fs: &[&Formula]) -> Vec<Formula> {
    let mut v = xs.to_vec();
    v.extend(fs.iter().map(|f| (*f).clone()));
    v
}

/// A chain of unary steps from `start` up to the current open sequent.
pub struct Tac {
    logic: Logic,
    goal: Sequent,
    trail: Vec<Derivation>,
}

impl Tac {
    pub fn new(logic: Logic, goal: Sequent) -> Tac {
        Tac { logic, goal, trail: Vec::new() }
    }

    pub fn goal(&self) -> &Sequent {
        &self.goal
    }

    fn push(mut self, rule: Rule, principal: usize, next: Sequent) -> Tac {
        self.trail.push(Derivation::new(self.goal.clone(), rule, Some(principal), vec![]));
        self.goal = next;
        self
    }

    fn last(mut self, f: impl FnOnce(Derivation) -> Derivation) -> Tac {
        let d = self.trail.pop().expect("a step to annotate");
        self.trail.push(f(d));
        self
    }

    pub fn close(self, leaf: Derivation) -> Derivation {
        assert_eq!(leaf.conclusion, self.goal, "leaf does not match the open sequent");
        self.trail.into_iter().rev().fold(leaf, |inner, mut d| {
            d.premises = vec![inner];
            d
        })
    }

    pub fn step(self, rule: Rule, f: &Formula) -> Tac {
        let (g, d) = (&self.goal.antecedent, &self.goal.succedent);
        let left = || position(g, f, "antecedent");
        let right = || position(d, f, "succedent");
        let (p, next) = match (rule, f) {
            (Rule::ContrL, _) => (left(), Sequent::new(plus(g, &[f]), d.clone())),
            (Rule::WeakL, _) => (left(), Sequent::new(drop(g, left()), d.clone())),
            (Rule::WeakR, _) => (right(), Sequent::new(g.clone(), drop(d, right()))),
            (Rule::ContrR, _) => (right(), Sequent::new(g.clone(), plus(d, &[f]))),
            (Rule::NegL, Formula::Not(a)) => (left(), Sequent::new(drop(g, left()), plus(d, &[a]))),
            (Rule::NegR, Formula::Not(a)) => (right(), Sequent::new(plus(g, &[a]), drop(d, right()))),
            (Rule::AndL, Formula::And(a, b)) => (left(), Sequent::new(plus(&drop(g, left()), &[a, b]), d.clone())),
            (Rule::OrR1, Formula::Or(a, _)) => (right(), Sequent::new(g.clone(), plus(&drop(d, right()), &[a]))),
            (Rule::OrR2, Formula::Or(_, b)) => (right(), Sequent::new(g.clone(), plus(&drop(d, right()), &[b]))),
            (Rule::ImpR, Formula::Imp(a, b)) => (right(), Sequent::new(plus(g, &[a]), plus(&drop(d, right()), &[b]))),
            _ => panic!("{rule} does not apply to `{f}` as a unary step"),
        };
        self.push(rule, p, next)
    }

    /// `n` alternating `neg_l`/`neg_r` steps peeling `f`, starting with
    /// `first`.
    pub fn negations(mut self, first: Rule, f: &Formula, n: usize) -> Tac {
        let mut left = first == Rule::NegL;
        let mut f = f.clone();
        for _ in 0..n {
            self = if left { self.step(Rule::NegL, &f) } else { self.step(Rule::NegR, &f) };
            f = match &f {
                Formula::Not(a) => (**a).clone(),
                _ => panic!("`{f}` is not a negation"),
            };
            left = !left;
        }
        self
    }

    pub fn forall_l(self, f: &Formula, t: Term) -> Tac {
        let Formula::Forall(x, a) = f else { panic!("`{f}` is not universal") };
        let p = position(&self.goal.antecedent, f, "antecedent");
        let next = Sequent::new(plus(&drop(&self.goal.antecedent, p), &[&substitute(a, x, &t)]), self.goal.succedent.clone());
        self.push(Rule::ForallL, p, next).last(|d| d.with_witness(t))
    }

    pub fn exists_r(self, f: &Formula, t: Term) -> Tac {
        let Formula::Exists(x, a) = f else { panic!("`{f}` is not existential") };
        let p = position(&self.goal.succedent, f, "succedent");
        let next = Sequent::new(self.goal.antecedent.clone(), plus(&drop(&self.goal.succedent, p), &[&substitute(a, x, &t)]));
        self.push(Rule::ExistsR, p, next).last(|d| d.with_witness(t))
    }

    pub fn forall_r(self, f: &Formula, y: &str) -> Tac {
        let Formula::Forall(x, a) = f else { panic!("`{f}` is not universal") };
        let p = position(&self.goal.succedent, f, "succedent");
        let inst = substitute(a, x, &Term::var(y));
        let next = Sequent::new(self.goal.antecedent.clone(), plus(&drop(&self.goal.succedent, p), &[&inst]));
        let y: Ident = y.into();
        self.push(Rule::ForallR, p, next).last(|d| d.with_eigenvariable(y))
    }

    pub fn exists_l(self, f: &Formula, y: &str) -> Tac {
        let Formula::Exists(x, a) = f else { panic!("`{f}` is not existential") };
        let p = position(&self.goal.antecedent, f, "antecedent");
        let inst = substitute(a, x, &Term::var(y));
        let next = Sequent::new(plus(&drop(&self.goal.antecedent, p), &[&inst]), self.goal.succedent.clone());
        let y: Ident = y.into();
        self.push(Rule::ExistsL, p, next).last(|d| d.with_eigenvariable(y))
    }

    /// Weakens everything except one copy of `f` on each side, then
    /// closes with the axiom.
    pub fn axiom(mut self, f: &Formula) -> Derivation {
        while self.goal.antecedent.len() > 1 || self.goal.antecedent[0] != *f {
            let k = self.goal.antecedent.iter().position(|x| x != f).unwrap_or(0);
            let w = self.goal.antecedent[k].clone();
            self = self.step(Rule::WeakL, &w);
        }
        while self.goal.succedent.len() > 1 || self.goal.succedent[0] != *f {
            let k = self.goal.succedent.iter().position(|x| x != f).unwrap_or(0);
            let w = self.goal.succedent[k].clone();
            self = self.step(Rule::WeakR, &w);
        }
        let leaf = Derivation::new(self.goal.clone(), Rule::Axiom, None, vec![]);
        self.close(leaf)
    }

    /// A two-premise rule; `k` builds both premises from their open
    /// sequents.
    pub fn split(self, rule: Rule, f: &Formula, k: impl FnOnce(Tac, Tac) -> (Derivation, Derivation)) -> Derivation {
        let (g, d) = (self.goal.antecedent.clone(), self.goal.succedent.clone());
        let (p, first, second) = match (rule, f) {
            (Rule::AndR, Formula::And(a, b)) => {
                let p = position(&d, f, "succedent");
                let rest = drop(&d, p);
                (p, Sequent::new(g.clone(), plus(&rest, &[a])), Sequent::new(g.clone(), plus(&rest, &[b])))
            }
            (Rule::OrL, Formula::Or(a, b)) => {
                let p = position(&g, f, "antecedent");
                let rest = drop(&g, p);
                (p, Sequent::new(plus(&rest, &[a]), d.clone()), Sequent::new(plus(&rest, &[b]), d.clone()))
            }
            (Rule::ImpL, Formula::Imp(a, b)) => {
                let p = position(&g, f, "antecedent");
                let rest = drop(&g, p);
                let left_succ = if self.logic == Logic::Constructive { vec![(**a).clone()] } else { plus(&d, &[a]) };
                (p, Sequent::new(rest.clone(), left_succ), Sequent::new(plus(&rest, &[b]), d.clone()))
            }
            _ => panic!("{rule} does not apply to `{f}` as a binary step"),
        };
        let (d1, d2) = k(Tac::new(self.logic, first), Tac::new(self.logic, second));
        let node = Derivation::new(self.goal.clone(), rule, Some(p), vec![d1, d2]);
        let leaf_goal = node.conclusion.clone();
        let mut t = self;
        t.goal = leaf_goal;
        t.close(node)
    }
}
