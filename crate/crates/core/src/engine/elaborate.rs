//! Rewrites an internal proof into the output calculus. The sequents
//! of the output carry every formula occurrence explicitly; whatever the
//! internal calculus left implicit (dropped `T` hypotheses, duplicate
//! occurrences, kept principals) becomes weakening and contraction.

use super::derivation::{Derivation, Rule};
use super::intern::{Interner, Proof, Step};
use crate::syntax::{substitute, Formula, Sequent, Term};

fn position(xs: &[Formula], f: &Formula) -> usize {
    xs.iter().position(|g| g == f).unwrap_or_else(|| panic!("elaboration lost track of `{f}`"))
}

fn removed(xs: &[Formula], i: usize) -> Vec<Formula> {
    let mut out = xs.to_vec();
    out.remove(i);
    out
}

fn plus(xs: &[Formula], extra: &[&Formula]) -> Vec<Formula> {
    let mut out = xs.to_vec();
    out.extend(extra.iter().map(|f| (*f).clone()));
    out
}

fn instance(q: &Formula, t: &Term) -> Formula {
    match q {
        Formula::Forall(x, body) | Formula::Exists(x, body) => substitute(body, x, t),
        _ => unreachable!("quantifier step on `{q}`"),
    }
}

fn parts(f: &Formula) -> (&Formula, &Formula) {
    match f {
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => (a, b),
        _ => unreachable!("binary step on `{f}`"),
    }
}

fn negated(f: &Formula) -> &Formula {
    match f {
        Formula::Not(a) => a,
        _ => unreachable!("negation step on `{f}`"),
    }
}

/// `A |- A` reached from `ante |- succ` by weakening away everything but
/// `ante[i]` and `succ[j]`.
fn weakened_axiom(ante: Vec<Formula>, succ: Vec<Formula>, i: usize, j: usize) -> Derivation {
    let mut steps = Vec::new();
    let (mut ante, mut succ, mut i, mut j) = (ante, succ, i, j);
    while ante.len() > 1 {
        let k = if i + 1 == ante.len() { ante.len() - 2 } else { ante.len() - 1 };
        steps.push((Sequent::new(ante.clone(), succ.clone()), Rule::WeakL, k));
        ante.remove(k);
        if k < i {
            i -= 1;
        }
    }
    while succ.len() > 1 {
        let k = if j + 1 == succ.len() { succ.len() - 2 } else { succ.len() - 1 };
        steps.push((Sequent::new(ante.clone(), succ.clone()), Rule::WeakR, k));
        succ.remove(k);
        if k < j {
            j -= 1;
        }
    }
    let mut d = Derivation::new(Sequent::new(ante, succ), Rule::Axiom, None, Vec::new());
    for (conclusion, rule, k) in steps.into_iter().rev() {
        d = Derivation::new(conclusion, rule, Some(k), vec![d]);
    }
    d
}

pub(crate) fn constructive(it: &Interner, p: &Proof, ante: Vec<Formula>, goal: Option<Formula>) -> Derivation {
    let succ: Vec<Formula> = goal.iter().cloned().collect();
    let seq = Sequent::new(ante.clone(), succ.clone());
    let rec = |k: usize, ante: Vec<Formula>, goal: Option<Formula>| constructive(it, &p.premises[k], ante, goal);
    match &p.step {
        Step::Axiom(id) => {
            let i = position(&ante, it.formula(*id));
            weakened_axiom(ante, succ, i, 0)
        }
        Step::BotL(id) => Derivation::new(seq, Rule::BotL, Some(position(&ante, it.formula(*id))), vec![]),
        Step::TopR(_) => Derivation::new(seq, Rule::TopR, Some(0), vec![]),
        Step::AndL(id) => {
            let i = position(&ante, it.formula(*id));
            let (a, b) = parts(&ante[i]);
            let prem = plus(&removed(&ante, i), &[a, b]);
            Derivation::new(seq, Rule::AndL, Some(i), vec![rec(0, prem, goal)])
        }
        Step::OrL(id) => {
            let i = position(&ante, it.formula(*id));
            let (a, b) = parts(&ante[i]);
            let rest = removed(&ante, i);
            let left = rec(0, plus(&rest, &[a]), goal.clone());
            let right = rec(1, plus(&rest, &[b]), goal);
            Derivation::new(seq, Rule::OrL, Some(i), vec![left, right])
        }
        Step::ExistsL(id, y) => {
            let i = position(&ante, it.formula(*id));
            let inst = instance(&ante[i], &Term::Var(y.clone()));
            let prem = plus(&removed(&ante, i), &[&inst]);
            Derivation::new(seq, Rule::ExistsL, Some(i), vec![rec(0, prem, goal)]).with_eigenvariable(y.clone())
        }
        Step::ImpL(id) => {
            let f = it.formula(*id);
            let i = position(&ante, f);
            let (a, b) = parts(f);
            let wide = plus(&ante, &[f]);
            let left = rec(0, ante.clone(), Some(a.clone()));
            let right = rec(1, plus(&ante, &[b]), goal);
            let inner = Derivation::new(Sequent::new(wide, succ), Rule::ImpL, Some(ante.len()), vec![left, right]);
            Derivation::new(seq, Rule::ContrL, Some(i), vec![inner])
        }
        Step::NegL(id) => {
            let f = it.formula(*id);
            let i = position(&ante, f);
            let wide = plus(&ante, &[f]);
            let neg = Derivation::new(
                Sequent::new(wide, vec![]),
                Rule::NegL,
                Some(ante.len()),
                vec![rec(0, ante.clone(), Some(negated(f).clone()))],
            );
            let contr = Derivation::new(Sequent::new(ante, vec![]), Rule::ContrL, Some(i), vec![neg]);
            if succ.is_empty() {
                contr
            } else {
                Derivation::new(seq, Rule::WeakR, Some(0), vec![contr])
            }
        }
        Step::ForallL(id, t) => {
            let f = it.formula(*id);
            let i = position(&ante, f);
            let wide = plus(&ante, &[f]);
            let prem = plus(&ante, &[&instance(f, t)]);
            let inner = Derivation::new(Sequent::new(wide, succ), Rule::ForallL, Some(ante.len()), vec![rec(0, prem, goal)])
                .with_witness(t.clone());
            Derivation::new(seq, Rule::ContrL, Some(i), vec![inner])
        }
        Step::AndR(_) => {
            let (a, b) = parts(&succ[0]);
            let left = rec(0, ante.clone(), Some(a.clone()));
            let right = rec(1, ante, Some(b.clone()));
            Derivation::new(seq, Rule::AndR, Some(0), vec![left, right])
        }
        Step::OrR1 | Step::OrR2 => {
            let (a, b) = parts(&succ[0]);
            let (rule, pick) = if matches!(p.step, Step::OrR1) { (Rule::OrR1, a) } else { (Rule::OrR2, b) };
            Derivation::new(seq, rule, Some(0), vec![rec(0, ante, Some(pick.clone()))])
        }
        Step::ImpR(_) => {
            let (a, b) = parts(&succ[0]);
            Derivation::new(seq, Rule::ImpR, Some(0), vec![rec(0, plus(&ante, &[a]), Some(b.clone()))])
        }
        Step::NegR(_) => {
            let a = negated(&succ[0]);
            Derivation::new(seq, Rule::NegR, Some(0), vec![rec(0, plus(&ante, &[a]), None)])
        }
        Step::ForallR(_, y) => {
            let inst = instance(&succ[0], &Term::Var(y.clone()));
            Derivation::new(seq, Rule::ForallR, Some(0), vec![rec(0, ante, Some(inst))]).with_eigenvariable(y.clone())
        }
        Step::ExistsR(_, t) => {
            let inst = instance(&succ[0], t);
            Derivation::new(seq, Rule::ExistsR, Some(0), vec![rec(0, ante, Some(inst))]).with_witness(t.clone())
        }
        Step::WeakR => Derivation::new(seq, Rule::WeakR, Some(0), vec![rec(0, ante, None)]),
        Step::OrR(_) => unreachable!("multi-succedent step in a constructive proof"),
    }
}

pub(crate) fn classical(it: &Interner, p: &Proof, ante: Vec<Formula>, succ: Vec<Formula>) -> Derivation {
    let seq = Sequent::new(ante.clone(), succ.clone());
    let rec = |k: usize, ante: Vec<Formula>, succ: Vec<Formula>| classical(it, &p.premises[k], ante, succ);
    let left_of = |id| position(&ante, it.formula(id));
    let right_of = |id| position(&succ, it.formula(id));
    match &p.step {
        Step::Axiom(id) => {
            let (i, j) = (left_of(*id), right_of(*id));
            weakened_axiom(ante, succ, i, j)
        }
        Step::BotL(id) => Derivation::new(seq, Rule::BotL, Some(left_of(*id)), vec![]),
        Step::TopR(id) => Derivation::new(seq, Rule::TopR, Some(right_of(*id)), vec![]),
        Step::NegL(id) => {
            let i = left_of(*id);
            let prem = (removed(&ante, i), plus(&succ, &[negated(&ante[i])]));
            Derivation::new(seq, Rule::NegL, Some(i), vec![rec(0, prem.0, prem.1)])
        }
        Step::AndL(id) => {
            let i = left_of(*id);
            let (a, b) = parts(&ante[i]);
            Derivation::new(seq, Rule::AndL, Some(i), vec![rec(0, plus(&removed(&ante, i), &[a, b]), succ.clone())])
        }
        Step::OrL(id) => {
            let i = left_of(*id);
            let (a, b) = parts(&ante[i]);
            let rest = removed(&ante, i);
            let left = rec(0, plus(&rest, &[a]), succ.clone());
            let right = rec(1, plus(&rest, &[b]), succ.clone());
            Derivation::new(seq, Rule::OrL, Some(i), vec![left, right])
        }
        Step::ImpL(id) => {
            let i = left_of(*id);
            let (a, b) = parts(&ante[i]);
            let rest = removed(&ante, i);
            let left = rec(0, rest.clone(), plus(&succ, &[a]));
            let right = rec(1, plus(&rest, &[b]), succ.clone());
            Derivation::new(seq, Rule::ImpL, Some(i), vec![left, right])
        }
        Step::ExistsL(id, y) => {
            let i = left_of(*id);
            let inst = instance(&ante[i], &Term::Var(y.clone()));
            Derivation::new(seq, Rule::ExistsL, Some(i), vec![rec(0, plus(&removed(&ante, i), &[&inst]), succ.clone())])
                .with_eigenvariable(y.clone())
        }
        Step::ForallL(id, t) => {
            let f = it.formula(*id);
            let i = left_of(*id);
            let wide = plus(&ante, &[f]);
            let prem = plus(&ante, &[&instance(f, t)]);
            let inner = Derivation::new(Sequent::new(wide, succ.clone()), Rule::ForallL, Some(ante.len()), vec![rec(0, prem, succ)])
                .with_witness(t.clone());
            Derivation::new(seq, Rule::ContrL, Some(i), vec![inner])
        }
        Step::NegR(id) => {
            let j = right_of(*id);
            let a = negated(&succ[j]);
            Derivation::new(seq, Rule::NegR, Some(j), vec![rec(0, plus(&ante, &[a]), removed(&succ, j))])
        }
        Step::AndR(id) => {
            let j = right_of(*id);
            let (a, b) = parts(&succ[j]);
            let rest = removed(&succ, j);
            let left = rec(0, ante.clone(), plus(&rest, &[a]));
            let right = rec(1, ante.clone(), plus(&rest, &[b]));
            Derivation::new(seq, Rule::AndR, Some(j), vec![left, right])
        }
        Step::OrR(id) => {
            // contraction, then one disjunct from each copy
            let j = right_of(*id);
            let f = succ[j].clone();
            let (a, b) = parts(&f);
            let s2 = plus(&succ, &[&f]);
            let m = succ.len();
            let s3 = plus(&removed(&s2, j), &[a]);
            let s4 = plus(&removed(&s3, m - 1), &[b]);
            let second = Derivation::new(Sequent::new(ante.clone(), s3), Rule::OrR2, Some(m - 1), vec![rec(0, ante.clone(), s4)]);
            let first = Derivation::new(Sequent::new(ante.clone(), s2), Rule::OrR1, Some(j), vec![second]);
            Derivation::new(seq, Rule::ContrR, Some(j), vec![first])
        }
        Step::ImpR(id) => {
            let j = right_of(*id);
            let (a, b) = parts(&succ[j]);
            Derivation::new(seq, Rule::ImpR, Some(j), vec![rec(0, plus(&ante, &[a]), plus(&removed(&succ, j), &[b]))])
        }
        Step::ForallR(id, y) => {
            let j = right_of(*id);
            let inst = instance(&succ[j], &Term::Var(y.clone()));
            Derivation::new(seq, Rule::ForallR, Some(j), vec![rec(0, ante.clone(), plus(&removed(&succ, j), &[&inst]))])
                .with_eigenvariable(y.clone())
        }
        Step::ExistsR(id, t) => {
            let f = it.formula(*id);
            let j = right_of(*id);
            let wide = plus(&succ, &[f]);
            let prem = plus(&succ, &[&instance(f, t)]);
            let inner = Derivation::new(Sequent::new(ante.clone(), wide), Rule::ExistsR, Some(succ.len()), vec![rec(0, ante, prem)])
                .with_witness(t.clone());
            Derivation::new(seq, Rule::ContrR, Some(j), vec![inner])
        }
        Step::OrR1 | Step::OrR2 | Step::WeakR => unreachable!("single-succedent step in a classical proof"),
    }
}
