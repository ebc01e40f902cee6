use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::syntax::{parse_formula, parse_term, Formula, Ident, Sequent, Term};

/// The rules of the cut-free sequent calculus. There is no cut.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    Axiom,
    ContrL,
    ContrR,
    WeakL,
    WeakR,
    TopR,
    BotL,
    NegL,
    NegR,
    AndL,
    AndR,
    OrL,
    OrR1,
    OrR2,
    ImpL,
    ImpR,
    ForallL,
    ForallR,
    ExistsL,
    ExistsR,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Rule {
    pub const ALL: [Rule; 20] = [
        Rule::Axiom,
        Rule::ContrL,
        Rule::ContrR,
        Rule::WeakL,
        Rule::WeakR,
        Rule::TopR,
        Rule::BotL,
        Rule::NegL,
        Rule::NegR,
        Rule::AndL,
        Rule::AndR,
        Rule::OrL,
        Rule::OrR1,
        Rule::OrR2,
        Rule::ImpL,
        Rule::ImpR,
        Rule::ForallL,
        Rule::ForallR,
        Rule::ExistsL,
        Rule::ExistsR,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Axiom => "axiom",
            Rule::ContrL => "contr_l",
            Rule::ContrR => "contr_r",
            Rule::WeakL => "weak_l",
            Rule::WeakR => "weak_r",
            Rule::TopR => "top_r",
            Rule::BotL => "bot_l",
            Rule::NegL => "neg_l",
            Rule::NegR => "neg_r",
            Rule::AndL => "and_l",
            Rule::AndR => "and_r",
            Rule::OrL => "or_l",
            Rule::OrR1 => "or_r1",
            Rule::OrR2 => "or_r2",
            Rule::ImpL => "imp_l",
            Rule::ImpR => "imp_r",
            Rule::ForallL => "forall_l",
            Rule::ForallR => "forall_r",
            Rule::ExistsL => "exists_l",
            Rule::ExistsR => "exists_r",
        }
    }

    /// Which side the principal index points into; `None` for the axiom.
    pub fn principal_side(self) -> Option<Side> {
        match self {
            Rule::Axiom => None,
            Rule::ContrL | Rule::WeakL | Rule::BotL | Rule::NegL | Rule::AndL | Rule::OrL | Rule::ImpL => {
                Some(Side::Left)
            }
            Rule::ForallL | Rule::ExistsL => Some(Side::Left),
            _ => Some(Side::Right),
        }
    }

    pub fn premise_count(self) -> usize {
        match self {
            Rule::Axiom | Rule::TopR | Rule::BotL => 0,
            Rule::AndR | Rule::OrL | Rule::ImpL => 2,
            _ => 1,
        }
    }

    pub fn takes_witness(self) -> bool {
        matches!(self, Rule::ForallL | Rule::ExistsR)
    }

    pub fn takes_eigenvariable(self) -> bool {
        matches!(self, Rule::ForallR | Rule::ExistsL)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Rule {
    type Err = String;

    fn from_str(s: &str) -> Result<Rule, String> {
        Rule::ALL.into_iter().find(|r| r.name() == s).ok_or_else(|| format!("unknown rule `{s}`"))
    }
}

/// A derivation tree. `principal` indexes the antecedent or the
/// succedent of `conclusion`, depending on the rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub conclusion: Sequent,
    pub rule: Rule,
    pub premises: Vec<Derivation>,
    pub principal: Option<usize>,
    pub witness: Option<Term>,
    pub eigenvariable: Option<Ident>,
}

impl Derivation {
    pub fn new(conclusion: Sequent, rule: Rule, principal: Option<usize>, premises: Vec<Derivation>) -> Derivation {
        Derivation { conclusion, rule, premises, principal, witness: None, eigenvariable: None }
    }

    pub fn with_witness(mut self, t: Term) -> Derivation {
        self.witness = Some(t);
        self
    }

    pub fn with_eigenvariable(mut self, y: Ident) -> Derivation {
        self.eigenvariable = Some(y);
        self
    }

    pub fn node_count(&self) -> usize {
        1 + self.premises.iter().map(Derivation::node_count).sum::<usize>()
    }

    pub fn height(&self) -> usize {
        1 + self.premises.iter().map(Derivation::height).max().unwrap_or(0)
    }

    pub fn rules_used(&self, out: &mut Vec<Rule>) {
        if !out.contains(&self.rule) {
            out.push(self.rule);
        }
        self.premises.iter().for_each(|p| p.rules_used(out));
    }

    /// The node reached by following premise indices from the root.
    pub fn at(&self, path: &[usize]) -> Option<&Derivation> {
        match path.split_first() {
            None => Some(self),
            Some((&i, rest)) => self.premises.get(i)?.at(rest),
        }
    }

    pub fn at_mut(&mut self, path: &[usize]) -> Option<&mut Derivation> {
        match path.split_first() {
            None => Some(self),
            Some((&i, rest)) => self.premises.get_mut(i)?.at_mut(rest),
        }
    }

    /// Paths of every node, root first, depth-first.
    pub fn paths(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        fn go(d: &Derivation, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            out.push(path.clone());
            for (i, p) in d.premises.iter().enumerate() {
                path.push(i);
                go(p, path, out);
                path.pop();
            }
        }
        go(self, &mut Vec::new(), &mut out);
        out
    }

    pub fn to_json(&self) -> DerivationJson {
        DerivationJson {
            rule: self.rule.name().to_string(),
            conclusion: SequentJson {
                ante: self.conclusion.antecedent.iter().map(Formula::to_string).collect(),
                succ: self.conclusion.succedent.iter().map(Formula::to_string).collect(),
            },
            principal: self.principal,
            witness: self.witness.as_ref().map(Term::to_string),
            eigen: self.eigenvariable.as_ref().map(|y| y.to_string()),
            premises: self.premises.iter().map(Derivation::to_json).collect(),
        }
    }

    pub fn from_json(doc: &DerivationJson) -> Result<Derivation, FormatError> {
        from_json_at(doc, &mut Vec::new())
    }

    /// Indented text rendering, conclusion first.
    pub fn render_tree(&self) -> String {
        let mut out = String::new();
        fn go(d: &Derivation, depth: usize, out: &mut String) {
            let mut note = d.rule.name().to_string();
            if let Some(t) = &d.witness {
                note.push_str(&format!(" t={t}"));
            }
            if let Some(y) = &d.eigenvariable {
                note.push_str(&format!(" y={y}"));
            }
            out.push_str(&format!("{}{}   [{}]\n", "  ".repeat(depth), d.conclusion, note));
            d.premises.iter().for_each(|p| go(p, depth + 1, out));
        }
        go(self, 0, &mut out);
        out
    }
}

/// Wire form of a derivation node. Field names and order are fixed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationJson {
    pub rule: String,
    pub conclusion: SequentJson,
    pub principal: Option<usize>,
    pub witness: Option<String>,
    pub eigen: Option<String>,
    pub premises: Vec<DerivationJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequentJson {
    pub ante: Vec<String>,
    pub succ: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("at node {path:?}: {message}")]
pub struct FormatError {
    pub path: Vec<usize>,
    pub rule: String,
    pub message: String,
}

fn from_json_at(doc: &DerivationJson, path: &mut Vec<usize>) -> Result<Derivation, FormatError> {
    let err = |path: &Vec<usize>, message: String| FormatError { path: path.clone(), rule: doc.rule.clone(), message };
    let rule: Rule = doc.rule.parse().map_err(|m| err(path, m))?;
    let formulas = |xs: &[String]| -> Result<Vec<Formula>, FormatError> {
        xs.iter().map(|s| parse_formula(s).map_err(|e| err(path, format!("formula `{s}`: {e}")))).collect()
    };
    let conclusion = Sequent::new(formulas(&doc.conclusion.ante)?, formulas(&doc.conclusion.succ)?);
    let witness = match &doc.witness {
        Some(s) => Some(parse_term(s).map_err(|e| err(path, format!("witness `{s}`: {e}")))?),
        None => None,
    };
    let eigenvariable = match &doc.eigen {
        Some(s) => match parse_term(s) {
            Ok(Term::Var(y)) => Some(y),
            _ => return Err(err(path, format!("eigenvariable `{s}` is not a variable"))),
        },
        None => None,
    };
    let mut premises = Vec::with_capacity(doc.premises.len());
    for (i, p) in doc.premises.iter().enumerate() {
        path.push(i);
        premises.push(from_json_at(p, path)?);
        path.pop();
    }
    Ok(Derivation { conclusion, rule, premises, principal: doc.principal, witness, eigenvariable })
}
