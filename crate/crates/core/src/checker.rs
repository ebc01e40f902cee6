//! Derivation checking. Each node is matched against its rule schema on
//! its own; the checker uses the syntax module and the derivation data
//! types and nothing from the search.

use serde::Serialize;

use crate::engine::{Derivation, DerivationJson, Rule, Side};
use crate::syntax::{alpha_equal, substitute, Formula, Sequent, Term};
use crate::Logic;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Premise indices leading from the root to the offending node.
    pub path: Vec<usize>,
    pub rule: String,
    pub description: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    fn from_violations(violations: Vec<Violation>) -> CheckReport {
        CheckReport { valid: violations.is_empty(), violations }
    }
}

pub fn check_derivation(d: &Derivation, mode: Logic) -> CheckReport {
    let mut out = Vec::new();
    walk(d, mode, &mut Vec::new(), &mut out);
    CheckReport::from_violations(out)
}

/// Checks a derivation in wire form. Nodes that do not even decode (an
/// unknown rule such as `cut`, an unparsable formula) are violations.
pub fn check_json(doc: &DerivationJson, mode: Logic) -> CheckReport {
    match Derivation::from_json(doc) {
        Ok(d) => check_derivation(&d, mode),
        Err(e) => CheckReport::from_violations(vec![Violation { path: e.path, rule: e.rule, description: e.message }]),
    }
}

fn walk(d: &Derivation, mode: Logic, path: &mut Vec<usize>, out: &mut Vec<Violation>) {
    for description in check_node(d, mode) {
        out.push(Violation { path: path.clone(), rule: d.rule.name().to_string(), description });
    }
    for (i, p) in d.premises.iter().enumerate() {
        path.push(i);
        walk(p, mode, path, out);
        path.pop();
    }
}

fn sorted(xs: &[Formula]) -> Vec<&Formula> {
    let mut v: Vec<&Formula> = xs.iter().collect();
    v.sort();
    v
}

/// Multiset equality of `actual` with `base` plus `extra`.
fn same(actual: &[Formula], base: &[Formula], extra: &[&Formula]) -> bool {
    let mut expected: Vec<&Formula> = base.iter().chain(extra.iter().copied()).collect();
    expected.sort();
    sorted(actual) == expected
}

/// `actual` is `base` plus one occurrence alpha-equal to `inst`.
fn same_with_instance(actual: &[Formula], base: &[Formula], inst: &Formula) -> bool {
    (0..actual.len()).any(|k| {
        alpha_equal(&actual[k], inst) && {
            let mut rest = actual.to_vec();
            rest.remove(k);
            same(&rest, base, &[])
        }
    })
}

fn without(xs: &[Formula], i: usize) -> Vec<Formula> {
    let mut v = xs.to_vec();
    v.remove(i);
    v
}

fn check_node(d: &Derivation, mode: Logic) -> Vec<String> {
    let mut errs = Vec::new();
    let rule = d.rule;
    let concl = &d.conclusion;
    if mode == Logic::Constructive {
        if concl.succedent.len() > 1 {
            errs.push(format!("{} succedent formulas in a constructive derivation", concl.succedent.len()));
        }
        if rule == Rule::ContrR {
            errs.push("contr_r cannot occur in a constructive derivation".into());
        }
    }
    if d.premises.len() != rule.premise_count() {
        errs.push(format!("expected {} premises, found {}", rule.premise_count(), d.premises.len()));
    }
    match (&d.witness, rule.takes_witness()) {
        (None, true) => errs.push("missing witness term".into()),
        (Some(_), false) => errs.push("witness term on a rule that takes none".into()),
        _ => {}
    }
    match (&d.eigenvariable, rule.takes_eigenvariable()) {
        (None, true) => errs.push("missing eigenvariable".into()),
        (Some(_), false) => errs.push("eigenvariable on a rule that takes none".into()),
        _ => {}
    }
    if !errs.is_empty() {
        return errs;
    }
    let (gamma, delta) = (&concl.antecedent, &concl.succedent);
    if rule == Rule::Axiom {
        if d.principal.is_some() {
            errs.push("the axiom has no principal formula".into());
        }
        if !(gamma.len() == 1 && delta.len() == 1 && gamma[0] == delta[0]) {
            errs.push(format!("`{concl}` is not of the form A |- A"));
        }
        return errs;
    }
    let side = rule.principal_side().expect("non-axiom rules have a principal");
    let pool = if side == Side::Left { gamma } else { delta };
    let Some(p) = d.principal.filter(|&p| p < pool.len()) else {
        errs.push(match d.principal {
            None => "missing principal index".into(),
            Some(p) => format!("principal index {p} out of range"),
        });
        return errs;
    };
    let principal = &pool[p];
    let rest = without(pool, p);
    let prem = |k: usize| -> &Sequent { &d.premises[k].conclusion };
    let shape_err = |what: &str| format!("principal formula `{principal}` is not {what}");
    let mut need = |ok: bool, msg: &str| {
        if !ok {
            errs.push(msg.to_string());
        }
    };

    match rule {
        Rule::Axiom => unreachable!(),
        Rule::ContrL => {
            need(same(&prem(0).antecedent, gamma, &[principal]), "premise antecedent must add one copy of the principal");
            need(same(&prem(0).succedent, delta, &[]), "premise succedent must equal the conclusion's");
        }
        Rule::ContrR => {
            need(same(&prem(0).antecedent, gamma, &[]), "premise antecedent must equal the conclusion's");
            need(same(&prem(0).succedent, delta, &[principal]), "premise succedent must add one copy of the principal");
        }
        Rule::WeakL => {
            need(same(&prem(0).antecedent, &rest, &[]), "premise antecedent must drop the principal");
            need(same(&prem(0).succedent, delta, &[]), "premise succedent must equal the conclusion's");
        }
        Rule::WeakR => {
            need(same(&prem(0).antecedent, gamma, &[]), "premise antecedent must equal the conclusion's");
            need(same(&prem(0).succedent, &rest, &[]), "premise succedent must drop the principal");
        }
        Rule::TopR => need(*principal == Formula::Top, &shape_err("T")),
        Rule::BotL => need(*principal == Formula::Bot, &shape_err("F")),
        Rule::NegL => match principal {
            Formula::Not(a) => {
                need(same(&prem(0).antecedent, &rest, &[]), "premise antecedent must drop the principal");
                need(same(&prem(0).succedent, delta, &[a]), "premise succedent must add the negated formula");
            }
            _ => need(false, &shape_err("a negation")),
        },
        Rule::NegR => match principal {
            Formula::Not(a) => {
                need(same(&prem(0).antecedent, gamma, &[a]), "premise antecedent must add the negated formula");
                need(same(&prem(0).succedent, &rest, &[]), "premise succedent must drop the principal");
            }
            _ => need(false, &shape_err("a negation")),
        },
        Rule::AndL => match principal {
            Formula::And(a, b) => {
                need(same(&prem(0).antecedent, &rest, &[a, b]), "premise antecedent must replace A /\\ B by A, B");
                need(same(&prem(0).succedent, delta, &[]), "premise succedent must equal the conclusion's");
            }
            _ => need(false, &shape_err("a conjunction")),
        },
        Rule::AndR => match principal {
            Formula::And(a, b) => {
                for (k, part) in [(0, a), (1, b)] {
                    need(same(&prem(k).antecedent, gamma, &[]), "premise antecedent must equal the conclusion's");
                    need(
                        same(&prem(k).succedent, &rest, &[part]),
                        &format!("premise {k} succedent must replace the principal by its {} conjunct", ["left", "right"][k]),
                    );
                }
            }
            _ => need(false, &shape_err("a conjunction")),
        },
        Rule::OrL => match principal {
            Formula::Or(a, b) => {
                for (k, part) in [(0, a), (1, b)] {
                    need(
                        same(&prem(k).antecedent, &rest, &[part]),
                        &format!("premise {k} antecedent must replace the principal by its {} disjunct", ["left", "right"][k]),
                    );
                    need(same(&prem(k).succedent, delta, &[]), "premise succedent must equal the conclusion's");
                }
            }
            _ => need(false, &shape_err("a disjunction")),
        },
        Rule::OrR1 | Rule::OrR2 => match principal {
            Formula::Or(a, b) => {
                let part = if rule == Rule::OrR1 { a } else { b };
                need(same(&prem(0).antecedent, gamma, &[]), "premise antecedent must equal the conclusion's");
                need(same(&prem(0).succedent, &rest, &[part]), "premise succedent must replace the principal by the chosen disjunct");
            }
            _ => need(false, &shape_err("a disjunction")),
        },
        Rule::ImpL => match principal {
            Formula::Imp(a, b) => {
                need(same(&prem(0).antecedent, &rest, &[]), "left premise antecedent must drop the principal");
                if mode == Logic::Constructive {
                    need(
                        prem(0).succedent.len() == 1 && prem(0).succedent[0] == **a,
                        "left premise succedent must be exactly the antecedent of the implication",
                    );
                } else {
                    need(same(&prem(0).succedent, delta, &[a]), "left premise succedent must add the antecedent of the implication");
                }
                need(same(&prem(1).antecedent, &rest, &[b]), "right premise antecedent must replace the principal by its consequent");
                need(same(&prem(1).succedent, delta, &[]), "right premise succedent must equal the conclusion's");
            }
            _ => need(false, &shape_err("an implication")),
        },
        Rule::ImpR => match principal {
            Formula::Imp(a, b) => {
                need(same(&prem(0).antecedent, gamma, &[a]), "premise antecedent must add the antecedent of the implication");
                need(same(&prem(0).succedent, &rest, &[b]), "premise succedent must replace the principal by its consequent");
            }
            _ => need(false, &shape_err("an implication")),
        },
        Rule::ForallL | Rule::ExistsR => {
            let t = d.witness.as_ref().expect("checked above");
            let body = match (rule, principal) {
                (Rule::ForallL, Formula::Forall(x, a)) | (Rule::ExistsR, Formula::Exists(x, a)) => Some((x, a)),
                _ => None,
            };
            match body {
                Some((x, a)) => {
                    let inst = substitute(a, x, t);
                    if rule == Rule::ForallL {
                        need(
                            same_with_instance(&prem(0).antecedent, &rest, &inst),
                            &format!("premise antecedent must replace the principal by `{inst}`"),
                        );
                        need(same(&prem(0).succedent, delta, &[]), "premise succedent must equal the conclusion's");
                    } else {
                        need(same(&prem(0).antecedent, gamma, &[]), "premise antecedent must equal the conclusion's");
                        need(
                            same_with_instance(&prem(0).succedent, &rest, &inst),
                            &format!("premise succedent must replace the principal by `{inst}`"),
                        );
                    }
                }
                None => need(false, &shape_err(if rule == Rule::ForallL { "universal" } else { "existential" })),
            }
        }
        Rule::ForallR | Rule::ExistsL => {
            let y = d.eigenvariable.as_ref().expect("checked above");
            let body = match (rule, principal) {
                (Rule::ForallR, Formula::Forall(x, a)) | (Rule::ExistsL, Formula::Exists(x, a)) => Some((x, a)),
                _ => None,
            };
            match body {
                Some((x, a)) => {
                    need(!concl.has_free(y), &format!("eigenvariable `{y}` occurs free in the conclusion"));
                    let inst = substitute(a, x, &Term::Var(y.clone()));
                    if rule == Rule::ExistsL {
                        need(
                            same_with_instance(&prem(0).antecedent, &rest, &inst),
                            &format!("premise antecedent must replace the principal by `{inst}`"),
                        );
                        need(same(&prem(0).succedent, delta, &[]), "premise succedent must equal the conclusion's");
                    } else {
                        need(same(&prem(0).antecedent, gamma, &[]), "premise antecedent must equal the conclusion's");
                        need(
                            same_with_instance(&prem(0).succedent, &rest, &inst),
                            &format!("premise succedent must replace the principal by `{inst}`"),
                        );
                    }
                }
                None => need(false, &shape_err(if rule == Rule::ForallR { "universal" } else { "existential" })),
            }
        }
    }
    errs
}

/// Rewrites every constructive `imp_l` whose left premise drops the
/// conclusion's succedent into the classical shape, by weakening that
/// succedent back in on the left premise.
pub fn to_classical(d: &Derivation) -> Derivation {
    let mut out = d.clone();
    out.premises = d.premises.iter().map(to_classical).collect();
    if out.rule == Rule::ImpL && out.premises.len() == 2 {
        let delta = out.conclusion.succedent.clone();
        let left = &out.premises[0];
        if !delta.is_empty() && left.conclusion.succedent.len() == 1 {
            let ante = left.conclusion.antecedent.clone();
            let mut node = out.premises[0].clone();
            let mut succ = left.conclusion.succedent.clone();
            for f in &delta {
                succ.push(f.clone());
                let k = succ.len() - 1;
                node = Derivation::new(Sequent::new(ante.clone(), succ.clone()), Rule::WeakR, Some(k), vec![node]);
            }
            out.premises[0] = node;
        }
    }
    out
}
