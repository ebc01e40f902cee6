use std::collections::HashMap;
use std::rc::Rc;

use crate::syntax::{fresh_name, substitute, Formula, Ident, Term};

pub(crate) type Fid = u32;

/// One layer of an interned core formula.
#[derive(Clone, Debug)]
pub(crate) enum Node {
    Atom,
    Top,
    Bot,
    Not(Fid),
    And(Fid, Fid),
    Or(Fid, Fid),
    Imp(Fid, Fid),
    Forall(Ident),
    Exists(Ident),
}

/// Hash-consing table so that search works on small integer ids.
#[derive(Default)]
pub(crate) struct Interner {
    formulas: Vec<Formula>,
    nodes: Vec<Node>,
    ids: HashMap<Formula, Fid>,
}

impl Interner {
    pub fn intern(&mut self, f: &Formula) -> Fid {
        if let Some(&id) = self.ids.get(f) {
            return id;
        }
        let node = match f {
            Formula::Atom(..) => Node::Atom,
            Formula::Top => Node::Top,
            Formula::Bot => Node::Bot,
            Formula::Not(a) => Node::Not(self.intern(a)),
            Formula::And(a, b) => Node::And(self.intern(a), self.intern(b)),
            Formula::Or(a, b) => Node::Or(self.intern(a), self.intern(b)),
            Formula::Imp(a, b) => Node::Imp(self.intern(a), self.intern(b)),
            Formula::Forall(x, _) => Node::Forall(x.clone()),
            Formula::Exists(x, _) => Node::Exists(x.clone()),
            _ => panic!("classical constructor reached the prover: {f}"),
        };
        let id = self.formulas.len() as Fid;
        self.formulas.push(f.clone());
        self.nodes.push(node);
        self.ids.insert(f.clone(), id);
        id
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn node(&self, id: Fid) -> &Node {
        &self.nodes[id as usize]
    }

    pub fn formula(&self, id: Fid) -> &Formula {
        &self.formulas[id as usize]
    }

    /// The body of the quantified formula `id` with `t` for its bound variable.
    pub fn instantiate(&mut self, id: Fid, t: &Term) -> Fid {
        let inst = match self.formula(id) {
            Formula::Forall(x, body) | Formula::Exists(x, body) => substitute(body, x, t),
            f => panic!("not a quantifier: {f}"),
        };
        self.intern(&inst)
    }

    fn has_free(&self, ids: &[Fid], x: &str) -> bool {
        ids.iter().any(|&id| self.formula(id).has_free(x))
    }

    /// Eigenvariable for opening the quantifier `id`: its own bound name
    /// when that is not free in the sequent, otherwise a primed variant.
    pub fn eigenvariable(&self, id: Fid, left: &[Fid], right: &[Fid]) -> Ident {
        let x = match self.node(id) {
            Node::Forall(x) | Node::Exists(x) => x.clone(),
            _ => panic!("not a quantifier"),
        };
        let taken = |n: &str| self.has_free(left, n) || self.has_free(right, n);
        if taken(&x) {
            fresh_name(&x, taken)
        } else {
            x
        }
    }

    /// Closed subterms of the sequent in first-occurrence order, or the
    /// supplied fresh constant when there are none.
    pub fn universe(&self, left: &[Fid], right: &[Fid], fresh: &Term) -> Vec<Term> {
        let mut out = Vec::new();
        for &id in left.iter().chain(right) {
            self.formula(id).closed_subterms(&mut out);
        }
        if out.is_empty() {
            out.push(fresh.clone());
        }
        out
    }
}

/// A constant symbol not used anywhere in `formulas`.
pub(crate) fn fresh_constant<'a>(formulas: impl IntoIterator<Item = &'a Formula>) -> Term {
    let mut names = std::collections::BTreeSet::new();
    let mut syms = Vec::new();
    for f in formulas {
        f.all_variables(&mut names);
        f.function_symbols(&mut syms);
    }
    names.extend(syms.into_iter().map(|(s, _)| s));
    let name = if names.contains("c") { fresh_name("c", |n| names.contains(n)) } else { "c".into() };
    Term::Fun(name, Vec::new())
}

/// Resource bound for one branch. `u32::MAX` means unbounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Budget {
    pub depth: u32,
    pub inst: u32,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget { depth: u32::MAX, inst: u32::MAX };

    pub fn covers(self, other: Budget) -> bool {
        self.depth >= other.depth && self.inst >= other.inst
    }

    /// Pays for one rule application, or `None` when the depth is spent.
    pub fn spend(self) -> Option<Budget> {
        match self.depth {
            0 => None,
            u32::MAX => Some(self),
            d => Some(Budget { depth: d - 1, ..self }),
        }
    }

    pub fn instantiated(self) -> Option<Budget> {
        match self.inst {
            0 => None,
            u32::MAX => Some(self),
            n => Some(Budget { inst: n - 1, ..self }),
        }
    }
}

/// A derivation in the internal search calculus. Formulas are named by
/// id; the sequents are implicit and recomputed during elaboration.
#[derive(Debug)]
pub(crate) struct Proof {
    pub step: Step,
    pub premises: Vec<Rc<Proof>>,
}

#[derive(Clone, Debug)]
pub(crate) enum Step {
    Axiom(Fid),
    BotL(Fid),
    TopR(Fid),
    NegL(Fid),
    NegR(Fid),
    AndL(Fid),
    AndR(Fid),
    OrL(Fid),
    OrR1,
    OrR2,
    /// Classical disjunction on the right: both disjuncts at once.
    OrR(Fid),
    ImpL(Fid),
    ImpR(Fid),
    ForallL(Fid, Term),
    ForallR(Fid, Ident),
    ExistsL(Fid, Ident),
    ExistsR(Fid, Term),
    /// Single-succedent only: discard the goal.
    WeakR,
}

impl Proof {
    pub fn leaf(step: Step) -> Rc<Proof> {
        Rc::new(Proof { step, premises: Vec::new() })
    }

    pub fn node(step: Step, premises: Vec<Rc<Proof>>) -> Rc<Proof> {
        Rc::new(Proof { step, premises })
    }
}

/// Sorted-set insertion.
pub(crate) fn with(set: &[Fid], id: Fid) -> Vec<Fid> {
    let mut out = set.to_vec();
    if let Err(k) = out.binary_search(&id) {
        out.insert(k, id);
    }
    out
}

pub(crate) fn without(set: &[Fid], id: Fid) -> Vec<Fid> {
    let mut out = set.to_vec();
    if let Ok(k) = out.binary_search(&id) {
        out.remove(k);
    }
    out
}

pub(crate) fn contains(set: &[Fid], id: Fid) -> bool {
    set.binary_search(&id).is_ok()
}
