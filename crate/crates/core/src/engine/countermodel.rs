//! Kripke countermodels for propositional sequents that have no
//! constructive proof. A one-world model is tried first; otherwise the
//! worlds are prime theories over the subformulas of the sequent,
//! ordered by inclusion, with entailment decided by `G4`.

use std::collections::BTreeSet;

use super::decide::{G4, G};
use crate::semantics::{eval_boolean, BooleanValuation, KripkeModel};
use crate::syntax::Formula;

pub(crate) fn kripke_countermodel(ante: &[Formula], goal: Option<&Formula>) -> Option<KripkeModel> {
    one_world(ante, goal).or_else(|| canonical(ante, goal))
}

fn one_world(ante: &[Formula], goal: Option<&Formula>) -> Option<KripkeModel> {
    let mut atoms: Vec<Formula> = Vec::new();
    for f in ante.iter().chain(goal) {
        for a in f.atoms() {
            if !atoms.contains(&a) {
                atoms.push(a);
            }
        }
    }
    if atoms.len() > 16 {
        return None;
    }
    for bits in 0u32..(1 << atoms.len()) {
        let mut v = BooleanValuation::new();
        for (i, a) in atoms.iter().enumerate() {
            v.set(a, bits >> i & 1 == 1);
        }
        let holds = |f: &Formula| eval_boolean(f, &v).expect("propositional");
        if ante.iter().all(holds) && !goal.is_some_and(holds) {
            let world: BTreeSet<String> =
                atoms.iter().enumerate().filter(|&(i, _)| bits >> i & 1 == 1).map(|(_, a)| a.to_string()).collect();
            return KripkeModel::new(vec!["w0".into()], &[], vec![world]).ok();
        }
    }
    None
}

struct Canonical {
    g4: G4,
    sub: Vec<u32>,
}

impl Canonical {
    fn closure(&mut self, theory: &[u32]) -> Vec<u32> {
        let sub = self.sub.clone();
        sub.into_iter().filter(|&phi| self.g4.provable(theory, phi)).collect()
    }

    /// A prime, deductively closed (relative to the subformulas) extension
    /// of `theory` that still does not entail `avoid`.
    fn prime_extend(&mut self, theory: &[u32], avoid: u32) -> Vec<u32> {
        let mut x = self.closure(theory);
        loop {
            let split = x.iter().find_map(|&phi| match self.g4.node(phi) {
                G::Or(a, b) if !x.contains(&a) && !x.contains(&b) => Some((a, b)),
                _ => None,
            });
            let Some((a, b)) = split else { return x };
            let with_a = [x.as_slice(), &[a]].concat();
            x = if !self.g4.provable(&with_a, avoid) {
                self.closure(&with_a)
            } else {
                let with_b = [x.as_slice(), &[b]].concat();
                self.closure(&with_b)
            };
        }
    }
}

fn canonical(ante: &[Formula], goal: Option<&Formula>) -> Option<KripkeModel> {
    let mut g4 = G4::default();
    let hyps: Vec<u32> = ante.iter().map(|f| g4.add(f)).collect();
    let target = match goal {
        Some(f) => g4.add(f),
        None => g4.mk(G::Bot),
    };
    let bot = g4.mk(G::Bot);
    let mut sub = BTreeSet::new();
    let mut stack: Vec<u32> = hyps.iter().copied().chain([target, bot]).collect();
    while let Some(id) = stack.pop() {
        if sub.insert(id) {
            match g4.node(id) {
                G::And(a, b) | G::Or(a, b) | G::Imp(a, b) => stack.extend([a, b]),
                _ => {}
            }
        }
    }
    let mut c = Canonical { g4, sub: sub.into_iter().collect() };
    let root = c.prime_extend(&hyps, target);
    if root.contains(&target) {
        return None;
    }
    let mut worlds = vec![root];
    let mut next = 0;
    while next < worlds.len() {
        let x = worlds[next].clone();
        next += 1;
        for phi in c.sub.clone() {
            if let G::Imp(a, b) = c.g4.node(phi) {
                if x.contains(&phi) {
                    continue;
                }
                let y = c.prime_extend(&[x.as_slice(), &[a]].concat(), b);
                if !worlds.contains(&y) {
                    worlds.push(y);
                }
            }
        }
    }
    let names = (0..worlds.len()).map(|i| format!("w{i}")).collect();
    let mut order = Vec::new();
    for (i, x) in worlds.iter().enumerate() {
        for (j, y) in worlds.iter().enumerate() {
            if i != j && x.iter().all(|phi| y.contains(phi)) {
                order.push((i, j));
            }
        }
    }
    let valuation = worlds
        .iter()
        .map(|x| {
            x.iter()
                .filter_map(|&phi| match c.g4.node(phi) {
                    G::Atom(k) => Some(c.g4.atom(k).to_string()),
                    _ => None,
                })
                .collect()
        })
        .collect();
    KripkeModel::new(names, &order, valuation).ok()
}
