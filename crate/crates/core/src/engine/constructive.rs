//! Single-succedent search. Invertible rules are applied eagerly and
//! drop their principal formula; at a saturated sequent the remaining
//! left rules keep it, so termination relies on a check for sequents
//! that repeat along the current branch.

use std::collections::HashMap;
use std::rc::Rc;

use super::intern::{contains, with, without, Budget, Fid, Interner, Node, Proof, Step};
use crate::syntax::Term;

type Key = (Vec<Fid>, Option<Fid>);

/// No repeated sequent was involved in a failure.
const NO_LOOP: usize = usize::MAX;

pub(crate) enum Outcome {
    Proved(Rc<Proof>),
    Failed(Failure),
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Failure {
    /// Lowest branch height of a repeated sequent the failure depended
    /// on; it is cached only when that lies inside the failed subtree.
    floor: usize,
    /// Some alternative below was cut off by the budget.
    bounded: bool,
}

impl Failure {
    const CLEAN: Failure = Failure { floor: NO_LOOP, bounded: false };
    const BOUNDED: Failure = Failure { floor: NO_LOOP, bounded: true };

    fn join(self, other: Failure) -> Failure {
        Failure { floor: self.floor.min(other.floor), bounded: self.bounded || other.bounded }
    }
}

pub(crate) struct Constructive<'a> {
    it: &'a mut Interner,
    first_order: bool,
    fresh: Term,
    tables: Option<TruthTables>,
    on_branch: HashMap<Key, usize>,
    proved: HashMap<Key, Rc<Proof>>,
    failed: HashMap<Key, Budget>,
    /// Set when some alternative was cut off by the budget.
    pub hit_limit: bool,
}

impl<'a> Constructive<'a> {
    pub fn new(it: &'a mut Interner, first_order: bool, fresh: Term) -> Self {
        let tables = if first_order { None } else { TruthTables::new(it) };
        Constructive {
            it,
            first_order,
            fresh,
            tables,
            on_branch: HashMap::new(),
            proved: HashMap::new(),
            failed: HashMap::new(),
            hit_limit: false,
        }
    }

    /// Adds a hypothesis; `T` carries no information and is dropped.
    fn assume(&self, gamma: &[Fid], a: Fid) -> Vec<Fid> {
        if matches!(self.it.node(a), Node::Top) {
            gamma.to_vec()
        } else {
            with(gamma, a)
        }
    }

    pub fn search(&mut self, gamma: Vec<Fid>, goal: Option<Fid>, b: Budget) -> Outcome {
        if let Some(g) = goal {
            if contains(&gamma, g) {
                return Outcome::Proved(Proof::leaf(Step::Axiom(g)));
            }
            if matches!(self.it.node(g), Node::Top) {
                return Outcome::Proved(Proof::leaf(Step::TopR(g)));
            }
        }
        if let Some(&f) = gamma.iter().find(|&&f| matches!(self.it.node(f), Node::Bot)) {
            return Outcome::Proved(Proof::leaf(Step::BotL(f)));
        }
        for &f in &gamma {
            match self.it.node(f).clone() {
                Node::And(a, c) => {
                    let rest = self.assume(&self.assume(&without(&gamma, f), a), c);
                    return self.unary(Step::AndL(f), rest, goal, b);
                }
                Node::Or(a, c) => {
                    let rest = without(&gamma, f);
                    let left = self.assume(&rest, a);
                    let right = self.assume(&rest, c);
                    return self.binary(Step::OrL(f), (left, goal), (right, goal), b);
                }
                Node::Exists(..) => {
                    let y = self.it.eigenvariable(f, &gamma, goal.as_slice());
                    let inst = self.it.instantiate(f, &Term::Var(y.clone()));
                    let rest = self.assume(&without(&gamma, f), inst);
                    return self.unary(Step::ExistsL(f, y), rest, goal, b);
                }
                _ => {}
            }
        }
        if let Some(g) = goal {
            match self.it.node(g).clone() {
                Node::And(a, c) => return self.binary(Step::AndR(g), (gamma.clone(), Some(a)), (gamma, Some(c)), b),
                Node::Imp(a, c) => {
                    let ctx = self.assume(&gamma, a);
                    return self.unary(Step::ImpR(g), ctx, Some(c), b);
                }
                Node::Not(a) => {
                    let ctx = self.assume(&gamma, a);
                    return self.unary(Step::NegR(g), ctx, None, b);
                }
                Node::Forall(..) => {
                    let y = self.it.eigenvariable(g, &gamma, &[g]);
                    let inst = self.it.instantiate(g, &Term::Var(y.clone()));
                    return self.unary(Step::ForallR(g, y), gamma, Some(inst), b);
                }
                _ => {}
            }
        }
        self.saturated(gamma, goal, b)
    }

    fn unary(&mut self, step: Step, gamma: Vec<Fid>, goal: Option<Fid>, b: Budget) -> Outcome {
        match self.search(gamma, goal, b) {
            Outcome::Proved(p) => Outcome::Proved(Proof::node(step, vec![p])),
            failed => failed,
        }
    }

    fn binary(&mut self, step: Step, first: Key, second: Key, b: Budget) -> Outcome {
        let p1 = match self.search(first.0, first.1, b) {
            Outcome::Proved(p) => p,
            failed => return failed,
        };
        match self.search(second.0, second.1, b) {
            Outcome::Proved(p2) => Outcome::Proved(Proof::node(step, vec![p1, p2])),
            failed => failed,
        }
    }

    fn saturated(&mut self, gamma: Vec<Fid>, goal: Option<Fid>, b: Budget) -> Outcome {
        let key = (gamma, goal);
        if let Some(p) = self.proved.get(&key) {
            return Outcome::Proved(p.clone());
        }
        if let Some(&known) = self.failed.get(&key) {
            if known.covers(b) {
                let bounded = known != Budget::UNLIMITED;
                return Outcome::Failed(Failure { floor: NO_LOOP, bounded });
            }
        }
        if let Some(&h) = self.on_branch.get(&key) {
            return Outcome::Failed(Failure { floor: h, bounded: false });
        }
        if let Some(t) = &mut self.tables {
            if !t.classically_valid(self.it, &key.0, key.1) {
                return Outcome::Failed(Failure::CLEAN);
            }
        }
        // Only choice points are charged; the invertible steps above
        // always shrink the sequent.
        let Some(rest) = b.spend() else {
            self.hit_limit = true;
            return Outcome::Failed(Failure::BOUNDED);
        };
        let height = self.on_branch.len();
        self.on_branch.insert(key.clone(), height);
        let out = self.alternatives(&key.0, key.1, rest, height);
        self.on_branch.remove(&key);
        match &out {
            Outcome::Proved(p) => {
                self.proved.insert(key, p.clone());
            }
            Outcome::Failed(failure) if failure.floor >= height => {
                let spent = if failure.bounded { b } else { Budget::UNLIMITED };
                let keep = self.failed.get(&key).is_some_and(|known| !spent.covers(*known));
                if !keep {
                    self.failed.insert(key, spent);
                }
            }
            Outcome::Failed(_) => {}
        }
        out
    }

    /// The non-invertible rules, left before right, lowest id first.
    fn alternatives(&mut self, gamma: &[Fid], goal: Option<Fid>, b: Budget, height: usize) -> Outcome {
        let mut failure = Failure::CLEAN;
        // With an empty succedent, `~A` on the left is invertible: any
        // proof of `G, ~A |-` also proves `G, ~A |- A`. So the first
        // attempt that fails without depending on an enclosing repeated
        // sequent settles the node. The newest negation is tried first;
        // older ones tend to be quantified formulas already opened. For
        // first-order search a failure at the budget also settles it,
        // which trades completeness at the bound for speed.
        if goal.is_none() {
            for &f in gamma.iter().rev() {
                if let Node::Not(a) = *self.it.node(f) {
                    match self.search(gamma.to_vec(), Some(a), b) {
                        Outcome::Proved(p) => return Outcome::Proved(Proof::node(Step::NegL(f), vec![p])),
                        Outcome::Failed(f) if f.floor > height => return Outcome::Failed(failure.join(f)),
                        Outcome::Failed(f) => failure = failure.join(f),
                    }
                }
            }
        }
        macro_rules! attempt {
            ($e:expr) => {
                match $e {
                    Outcome::Proved(p) => Some(p),
                    Outcome::Failed(f) => {
                        failure = failure.join(f);
                        None
                    }
                }
            };
        }
        // Every left negation discards the goal, so together they amount
        // to proving the sequent with the goal weakened away.
        if goal.is_some() && gamma.iter().any(|&f| matches!(self.it.node(f), Node::Not(_))) {
            if let Some(p) = attempt!(self.search(gamma.to_vec(), None, b)) {
                return Outcome::Proved(Proof::node(Step::WeakR, vec![p]));
            }
        }
        let universe = if self.first_order { self.it.universe(gamma, goal.as_slice(), &self.fresh) } else { Vec::new() };
        for &f in gamma {
            match self.it.node(f).clone() {
                Node::Imp(a, c) => {
                    if contains(gamma, c) {
                        continue;
                    }
                    if let Some(p1) = attempt!(self.search(gamma.to_vec(), Some(a), b)) {
                        let ctx = self.assume(gamma, c);
                        if let Some(p2) = attempt!(self.search(ctx, goal, b)) {
                            return Outcome::Proved(Proof::node(Step::ImpL(f), vec![p1, p2]));
                        }
                    }
                }
                Node::Forall(..) if self.first_order => {
                    for t in &universe {
                        let inst = self.it.instantiate(f, t);
                        if contains(gamma, inst) {
                            continue;
                        }
                        let Some(bi) = b.instantiated() else {
                            self.hit_limit = true;
                            failure.bounded = true;
                            break;
                        };
                        let ctx = self.assume(gamma, inst);
                        if let Some(p) = attempt!(self.search(ctx, goal, bi)) {
                            return Outcome::Proved(Proof::node(Step::ForallL(f, t.clone()), vec![p]));
                        }
                    }
                }
                _ => {}
            }
        }
        if let Some(g) = goal {
            match self.it.node(g).clone() {
                Node::Or(a, c) => {
                    if let Some(p) = attempt!(self.search(gamma.to_vec(), Some(a), b)) {
                        return Outcome::Proved(Proof::node(Step::OrR1, vec![p]));
                    }
                    if let Some(p) = attempt!(self.search(gamma.to_vec(), Some(c), b)) {
                        return Outcome::Proved(Proof::node(Step::OrR2, vec![p]));
                    }
                }
                Node::Exists(..) if self.first_order => {
                    for t in &universe {
                        let Some(bi) = b.instantiated() else {
                            self.hit_limit = true;
                            failure.bounded = true;
                            break;
                        };
                        let inst = self.it.instantiate(g, t);
                        if let Some(p) = attempt!(self.search(gamma.to_vec(), Some(inst), bi)) {
                            return Outcome::Proved(Proof::node(Step::ExistsR(g, t.clone()), vec![p]));
                        }
                    }
                }
                _ => {}
            }
        }
        Outcome::Failed(failure)
    }
}

/// Truth tables of interned formulas over at most six atoms, packed one
/// row per bit. A sequent that is not even classically valid can be
/// rejected without search.
struct TruthTables {
    all: u64,
    atoms: HashMap<Fid, u64>,
    cache: HashMap<Fid, u64>,
}

impl TruthTables {
    fn new(it: &Interner) -> Option<TruthTables> {
        let mut atom_ids = Vec::new();
        let mut id = 0;
        while (id as usize) < it.len() {
            if matches!(it.node(id), Node::Atom) {
                atom_ids.push(id);
            }
            id += 1;
        }
        if atom_ids.len() > 6 {
            return None;
        }
        let rows = 1u32 << atom_ids.len();
        let all = if rows == 64 { u64::MAX } else { (1u64 << rows) - 1 };
        let atoms = atom_ids
            .iter()
            .enumerate()
            .map(|(i, &a)| (a, (0..rows).filter(|r| r >> i & 1 == 1).fold(0u64, |m, r| m | 1 << r)))
            .collect();
        Some(TruthTables { all, atoms, cache: HashMap::new() })
    }

    fn table(&mut self, it: &Interner, id: Fid) -> u64 {
        if let Some(&t) = self.cache.get(&id) {
            return t;
        }
        let t = match *it.node(id) {
            Node::Atom => self.atoms[&id],
            Node::Top => self.all,
            Node::Bot => 0,
            Node::Not(a) => !self.table(it, a) & self.all,
            Node::And(a, b) => self.table(it, a) & self.table(it, b),
            Node::Or(a, b) => self.table(it, a) | self.table(it, b),
            Node::Imp(a, b) => (!self.table(it, a) | self.table(it, b)) & self.all,
            Node::Forall(..) | Node::Exists(..) => unreachable!("propositional search only"),
        };
        self.cache.insert(id, t);
        t
    }

    fn classically_valid(&mut self, it: &Interner, gamma: &[Fid], goal: Option<Fid>) -> bool {
        let hyps = gamma.iter().fold(self.all, |m, &f| m & self.table(it, f));
        let concl = goal.map_or(0, |g| self.table(it, g));
        hyps & !concl == 0
    }
}
