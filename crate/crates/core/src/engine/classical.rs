//! Multi-succedent search over sets. Every propositional rule is
//! invertible and consumes its principal formula, so propositional
//! search needs no backtracking. Quantifier instances are added next to
//! the formula they come from, with backtracking over the choice of
//! formula and term under the instantiation budget.

use std::collections::HashMap;
use std::rc::Rc;

use super::intern::{contains, with, without, Budget, Fid, Interner, Node, Proof, Step};
use crate::syntax::Term;

type Key = (Vec<Fid>, Vec<Fid>);

pub(crate) struct Classical<'a> {
    it: &'a mut Interner,
    first_order: bool,
    fresh: Term,
    proved: HashMap<Key, Rc<Proof>>,
    failed: HashMap<Key, Budget>,
    pub hit_limit: bool,
    /// The last saturated sequent left open; in propositional search this
    /// is the branch that made the root fail.
    pub open_leaf: Option<Key>,
}

impl<'a> Classical<'a> {
    pub fn new(it: &'a mut Interner, first_order: bool, fresh: Term) -> Self {
        Classical {
            it,
            first_order,
            fresh,
            proved: HashMap::new(),
            failed: HashMap::new(),
            hit_limit: false,
            open_leaf: None,
        }
    }

    fn left(&self, gamma: &[Fid], a: Fid) -> Vec<Fid> {
        if matches!(self.it.node(a), Node::Top) {
            gamma.to_vec()
        } else {
            with(gamma, a)
        }
    }

    fn right(&self, delta: &[Fid], a: Fid) -> Vec<Fid> {
        if matches!(self.it.node(a), Node::Bot) {
            delta.to_vec()
        } else {
            with(delta, a)
        }
    }

    pub fn search(&mut self, gamma: Vec<Fid>, delta: Vec<Fid>, budget: Budget) -> Option<Rc<Proof>> {
        let Some(b) = budget.spend() else {
            self.hit_limit = true;
            return None;
        };
        if let Some(&f) = gamma.iter().find(|&&f| contains(&delta, f)) {
            return Some(Proof::leaf(Step::Axiom(f)));
        }
        if let Some(&f) = gamma.iter().find(|&&f| matches!(self.it.node(f), Node::Bot)) {
            return Some(Proof::leaf(Step::BotL(f)));
        }
        if let Some(&g) = delta.iter().find(|&&g| matches!(self.it.node(g), Node::Top)) {
            return Some(Proof::leaf(Step::TopR(g)));
        }
        for &f in &gamma {
            let rest = without(&gamma, f);
            match self.it.node(f).clone() {
                Node::Not(a) => {
                    let d = self.right(&delta, a);
                    return self.unary(Step::NegL(f), rest, d, b);
                }
                Node::And(a, c) => {
                    let g = self.left(&self.left(&rest, a), c);
                    return self.unary(Step::AndL(f), g, delta, b);
                }
                Node::Or(a, c) => {
                    let first = (self.left(&rest, a), delta.clone());
                    let second = (self.left(&rest, c), delta);
                    return self.binary(Step::OrL(f), first, second, b);
                }
                Node::Imp(a, c) => {
                    let first = (rest.clone(), self.right(&delta, a));
                    let second = (self.left(&rest, c), delta);
                    return self.binary(Step::ImpL(f), first, second, b);
                }
                Node::Exists(..) => {
                    let y = self.it.eigenvariable(f, &gamma, &delta);
                    let inst = self.it.instantiate(f, &Term::Var(y.clone()));
                    let g = self.left(&rest, inst);
                    return self.unary(Step::ExistsL(f, y), g, delta, b);
                }
                _ => {}
            }
        }
        for &f in &delta {
            let rest = without(&delta, f);
            match self.it.node(f).clone() {
                Node::Not(a) => {
                    let g = self.left(&gamma, a);
                    return self.unary(Step::NegR(f), g, rest, b);
                }
                Node::And(a, c) => {
                    let first = (gamma.clone(), self.right(&rest, a));
                    let second = (gamma, self.right(&rest, c));
                    return self.binary(Step::AndR(f), first, second, b);
                }
                Node::Or(a, c) => {
                    let d = self.right(&self.right(&rest, a), c);
                    return self.unary(Step::OrR(f), gamma, d, b);
                }
                Node::Imp(a, c) => {
                    let g = self.left(&gamma, a);
                    let d = self.right(&rest, c);
                    return self.unary(Step::ImpR(f), g, d, b);
                }
                Node::Forall(..) => {
                    let y = self.it.eigenvariable(f, &gamma, &delta);
                    let inst = self.it.instantiate(f, &Term::Var(y.clone()));
                    let d = self.right(&rest, inst);
                    return self.unary(Step::ForallR(f, y), gamma, d, b);
                }
                _ => {}
            }
        }
        if !self.first_order {
            self.open_leaf = Some((gamma, delta));
            return None;
        }
        self.instances(gamma, delta, b)
    }

    fn unary(&mut self, step: Step, gamma: Vec<Fid>, delta: Vec<Fid>, b: Budget) -> Option<Rc<Proof>> {
        let p = self.search(gamma, delta, b)?;
        Some(Proof::node(step, vec![p]))
    }

    fn binary(&mut self, step: Step, first: Key, second: Key, b: Budget) -> Option<Rc<Proof>> {
        let p1 = self.search(first.0, first.1, b)?;
        let p2 = self.search(second.0, second.1, b)?;
        Some(Proof::node(step, vec![p1, p2]))
    }

    fn instances(&mut self, gamma: Vec<Fid>, delta: Vec<Fid>, b: Budget) -> Option<Rc<Proof>> {
        let key = (gamma, delta);
        if let Some(p) = self.proved.get(&key) {
            return Some(p.clone());
        }
        if self.failed.get(&key).is_some_and(|known| known.covers(b)) {
            return None;
        }
        let (gamma, delta) = (&key.0, &key.1);
        let universe = self.it.universe(gamma, delta, &self.fresh);
        let mut found = None;
        'outer: for &f in gamma {
            if !matches!(self.it.node(f), Node::Forall(..)) {
                continue;
            }
            for t in &universe {
                let inst = self.it.instantiate(f, t);
                if contains(gamma, inst) {
                    continue;
                }
                let Some(bi) = b.instantiated() else {
                    self.hit_limit = true;
                    break 'outer;
                };
                let g = self.left(gamma, inst);
                if let Some(p) = self.search(g, delta.clone(), bi) {
                    found = Some(Proof::node(Step::ForallL(f, t.clone()), vec![p]));
                    break 'outer;
                }
            }
        }
        if found.is_none() {
            'outer: for &f in delta {
                if !matches!(self.it.node(f), Node::Exists(..)) {
                    continue;
                }
                for t in &universe {
                    let inst = self.it.instantiate(f, t);
                    if contains(delta, inst) {
                        continue;
                    }
                    let Some(bi) = b.instantiated() else {
                        self.hit_limit = true;
                        break 'outer;
                    };
                    let d = self.right(delta, inst);
                    if let Some(p) = self.search(gamma.clone(), d, bi) {
                        found = Some(Proof::node(Step::ExistsR(f, t.clone()), vec![p]));
                        break 'outer;
                    }
                }
            }
        }
        match &found {
            Some(p) => {
                self.proved.insert(key, p.clone());
            }
            None => {
                self.failed.insert(key, b);
            }
        }
        found
    }
}
