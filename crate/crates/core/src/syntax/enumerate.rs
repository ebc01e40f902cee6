use std::sync::Arc;

use super::formula::Formula;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Connective {
    Top,
    Bot,
    Not,
    And,
    Or,
    Imp,
}

impl Connective {
    pub const ALL: [Connective; 6] =
        [Connective::Top, Connective::Bot, Connective::Not, Connective::And, Connective::Or, Connective::Imp];
}

/// Streams every propositional core formula over the given atoms and
/// connectives by increasing node count. Within a size, atoms come
/// first in the given order, then `T`, `F`, negations, and the binary
/// connectives `/\`, `\/`, `=>` split by left-operand size.
pub struct FormulaEnumerator {
    atoms: Vec<Formula>,
    connectives: Vec<Connective>,
    max_size: usize,
    levels: Vec<Arc<Vec<Formula>>>,
    size: usize,
    index: usize,
}

impl FormulaEnumerator {
    fn has(&self, c: Connective) -> bool {
        self.connectives.contains(&c)
    }

    fn build_level(&self, size: usize) -> Vec<Formula> {
        let mut out = Vec::new();
        if size == 1 {
            out.extend(self.atoms.iter().cloned());
            if self.has(Connective::Top) {
                out.push(Formula::Top);
            }
            if self.has(Connective::Bot) {
                out.push(Formula::Bot);
            }
            return out;
        }
        let level = |s: usize| &self.levels[s - 1];
        if self.has(Connective::Not) {
            out.extend(level(size - 1).iter().map(|f| Formula::not(f.clone())));
        }
        type Build = fn(Formula, Formula) -> Formula;
        let binary: [(Connective, Build); 3] =
            [(Connective::And, Formula::and), (Connective::Or, Formula::or), (Connective::Imp, Formula::imp)];
        for (c, mk) in binary {
            if !self.has(c) {
                continue;
            }
            for left in 1..size - 1 {
                for a in level(left).iter() {
                    for b in level(size - 1 - left).iter() {
                        out.push(mk(a.clone(), b.clone()));
                    }
                }
            }
        }
        out
    }

    /// All formulas of exactly `size` nodes.
    pub fn level(&mut self, size: usize) -> Arc<Vec<Formula>> {
        while self.levels.len() < size {
            let next = self.build_level(self.levels.len() + 1);
            self.levels.push(Arc::new(next));
        }
        self.levels[size - 1].clone()
    }
}

impl Iterator for FormulaEnumerator {
    type Item = Formula;

    fn next(&mut self) -> Option<Formula> {
        while self.size <= self.max_size {
            let level = self.level(self.size);
            if let Some(f) = level.get(self.index) {
                self.index += 1;
                return Some(f.clone());
            }
            self.size += 1;
            self.index = 0;
        }
        None
    }
}

pub fn enumerate_formulas(atoms: &[&str], max_size: usize, connectives: &[Connective]) -> FormulaEnumerator {
    assert!(max_size >= 1, "max_size must be at least 1");
    FormulaEnumerator {
        atoms: atoms.iter().map(|a| Formula::atom(a)).collect(),
        connectives: connectives.to_vec(),
        max_size,
        levels: Vec::new(),
        size: 1,
        index: 0,
    }
}
