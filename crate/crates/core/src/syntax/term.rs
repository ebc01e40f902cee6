use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// Identifier for variables, function symbols and predicate symbols.
pub type Ident = Arc<str>;

/// A first-order term. Constants are zero-argument function applications.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(Ident),
    Fun(Ident, Vec<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.into())
    }

    pub fn constant(name: &str) -> Term {
        Term::Fun(name.into(), Vec::new())
    }

    pub fn app(name: &str, args: Vec<Term>) -> Term {
        Term::Fun(name.into(), args)
    }

    pub fn variables(&self) -> BTreeSet<Ident> {
        let mut out = BTreeSet::new();
        self.collect_variables(&mut out);
        out
    }

    pub(crate) fn collect_variables(&self, out: &mut BTreeSet<Ident>) {
        match self {
            Term::Var(x) => {
                out.insert(x.clone());
            }
            Term::Fun(_, args) => args.iter().for_each(|a| a.collect_variables(out)),
        }
    }

    pub fn contains_var(&self, x: &str) -> bool {
        match self {
            Term::Var(y) => &**y == x,
            Term::Fun(_, args) => args.iter().any(|a| a.contains_var(x)),
        }
    }

    pub fn substitute(&self, x: &str, t: &Term) -> Term {
        match self {
            Term::Var(y) if &**y == x => t.clone(),
            Term::Var(_) => self.clone(),
            Term::Fun(f, args) => Term::Fun(f.clone(), args.iter().map(|a| a.substitute(x, t)).collect()),
        }
    }

    /// Every subterm, outermost first.
    pub fn subterms(&self, out: &mut Vec<Term>) {
        out.push(self.clone());
        if let Term::Fun(_, args) = self {
            args.iter().for_each(|a| a.subterms(out));
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(x) => write!(f, "{x}"),
            Term::Fun(name, args) => {
                write!(f, "{name}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
        }
    }
}
