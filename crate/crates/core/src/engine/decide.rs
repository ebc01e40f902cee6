//! Dyckhoff's contraction-free calculus for propositional intuitionistic
//! logic. It terminates without loop checking because every rule makes
//! the sequent smaller in a multiset ordering. Kept separate from the
//! main constructive search so the two can be compared.

use std::collections::HashMap;

use crate::syntax::Formula;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum G {
    Atom(u32),
    Top,
    Bot,
    And(u32, u32),
    Or(u32, u32),
    Imp(u32, u32),
}

#[derive(Default)]
pub(crate) struct G4 {
    nodes: Vec<G>,
    ids: HashMap<G, u32>,
    atoms: Vec<Formula>,
    atom_ids: HashMap<Formula, u32>,
    memo: HashMap<(Vec<u32>, u32), bool>,
}

impl G4 {
    pub fn mk(&mut self, g: G) -> u32 {
        if let Some(&id) = self.ids.get(&g) {
            return id;
        }
        let id = self.nodes.len() as u32;
        self.nodes.push(g);
        self.ids.insert(g, id);
        id
    }

    pub fn node(&self, id: u32) -> G {
        self.nodes[id as usize]
    }

    pub fn atom(&self, k: u32) -> &Formula {
        &self.atoms[k as usize]
    }

    /// Converts a propositional core formula, reading `~A` as `A => F`.
    pub fn add(&mut self, f: &Formula) -> u32 {
        let g = match f {
            Formula::Atom(..) => {
                let next = self.atoms.len() as u32;
                let k = *self.atom_ids.entry(f.clone()).or_insert(next);
                if k == next {
                    self.atoms.push(f.clone());
                }
                G::Atom(k)
            }
            Formula::Top => G::Top,
            Formula::Bot => G::Bot,
            Formula::Not(a) => {
                let a = self.add(a);
                let bot = self.mk(G::Bot);
                G::Imp(a, bot)
            }
            Formula::And(a, b) => G::And(self.add(a), self.add(b)),
            Formula::Or(a, b) => G::Or(self.add(a), self.add(b)),
            Formula::Imp(a, b) => G::Imp(self.add(a), self.add(b)),
            _ => panic!("not a propositional core formula: {f}"),
        };
        self.mk(g)
    }

    pub fn provable(&mut self, ctx: &[u32], goal: u32) -> bool {
        let mut ctx = ctx.to_vec();
        ctx.sort_unstable();
        ctx.dedup();
        self.prove(ctx, goal)
    }

    fn prove(&mut self, ctx: Vec<u32>, goal: u32) -> bool {
        let key = (ctx, goal);
        if let Some(&known) = self.memo.get(&key) {
            return known;
        }
        let result = self.step(&key.0, goal);
        self.memo.insert(key, result);
        result
    }

    fn step(&mut self, ctx: &[u32], goal: u32) -> bool {
        let has = |x: u32| ctx.binary_search(&x).is_ok();
        if has(goal) || matches!(self.node(goal), G::Top) || ctx.iter().any(|&f| self.node(f) == G::Bot) {
            return true;
        }
        let swap = |out: &[u32], drop: u32, add: &[u32]| -> Vec<u32> {
            let mut v: Vec<u32> = out.iter().copied().filter(|&x| x != drop).collect();
            v.extend_from_slice(add);
            v.sort_unstable();
            v.dedup();
            v
        };
        for &f in ctx {
            match self.node(f) {
                G::Top => return self.prove(swap(ctx, f, &[]), goal),
                G::And(a, b) => return self.prove(swap(ctx, f, &[a, b]), goal),
                G::Or(a, b) => {
                    return self.prove(swap(ctx, f, &[a]), goal) && self.prove(swap(ctx, f, &[b]), goal);
                }
                G::Imp(a, b) => match self.node(a) {
                    G::Atom(_) if has(a) => return self.prove(swap(ctx, f, &[b]), goal),
                    G::Top => return self.prove(swap(ctx, f, &[b]), goal),
                    G::Bot => return self.prove(swap(ctx, f, &[]), goal),
                    G::And(c, d) => {
                        let inner = self.mk(G::Imp(d, b));
                        let curried = self.mk(G::Imp(c, inner));
                        return self.prove(swap(ctx, f, &[curried]), goal);
                    }
                    G::Or(c, d) => {
                        let left = self.mk(G::Imp(c, b));
                        let right = self.mk(G::Imp(d, b));
                        return self.prove(swap(ctx, f, &[left, right]), goal);
                    }
                    _ => {}
                },
                _ => {}
            }
        }
        match self.node(goal) {
            G::And(a, b) => return self.prove(ctx.to_vec(), a) && self.prove(ctx.to_vec(), b),
            G::Imp(a, b) => return self.prove(swap(ctx, u32::MAX, &[a]), b),
            G::Or(a, b) if self.prove(ctx.to_vec(), a) || self.prove(ctx.to_vec(), b) => return true,
            _ => {}
        }
        for &f in ctx {
            if let G::Imp(a, b) = self.node(f) {
                if let G::Imp(_, d) = self.node(a) {
                    let db = self.mk(G::Imp(d, b));
                    if self.prove(swap(ctx, f, &[db]), a) && self.prove(swap(ctx, f, &[b]), goal) {
                        return true;
                    }
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    fn valid(s: &str) -> bool {
        let mut g4 = G4::default();
        let f = g4.add(&parse_formula(s).unwrap());
        g4.provable(&[], f)
    }

    #[test]
    fn textbook_cases() {
        assert!(valid("P => P"));
        assert!(!valid("P \\/ ~P"));
        assert!(valid("~~(P \\/ ~P)"));
        assert!(!valid("~~P => P"));
        assert!(valid("~~~P => ~P"));
        assert!(!valid("((P => Q) => P) => P"));
        assert!(valid("~~(((P => Q) => P) => P)"));
        assert!(valid("(P \\/ Q => R) => (P => R) /\\ (Q => R)"));
        assert!(!valid("(~(P /\\ Q)) => ~P \\/ ~Q"));
        assert!(!valid("~~P \\/ ~~~~~P"));
    }
}
