use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::formula::{BinOp, Formula, Quant};
use super::sequent::Sequent;
use super::term::{Ident, Term};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}: expected {}, found {}", self.position, self.expected.join(" or "), self.found)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    Comma,
    Dot,
    Turnstile,
    Not { classical: bool },
    Bin(BinOp),
    Quant(Quant),
    Const(Formula),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Turnstile => "`|-`".into(),
            Tok::Not { classical: false } => "`~`".into(),
            Tok::Not { classical: true } => "`~c`".into(),
            Tok::Bin(op) => format!("`{}`", op.token()),
            Tok::Quant(q) => format!("`{}`", q.keyword()),
            Tok::Const(Formula::Top) => "`T`".into(),
            Tok::Const(Formula::Bot) => "`F`".into(),
            Tok::Const(Formula::TopC) => "`Tc`".into(),
            Tok::Const(_) => "`Fc`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

pub(crate) fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

pub(crate) fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

/// Names that cannot be used as bare atoms or variables.
pub const RESERVED: &[&str] = &["T", "F", "Tc", "Fc", "forall", "exists", "forallc", "existsc"];

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let at = |i: usize| chars.get(i).map(|&(_, c)| c);
    // a trailing `c` marks a classical operator unless an identifier continues
    let classical_suffix = |i: usize| at(i) == Some('c') && !at(i + 1).is_some_and(is_ident_char);
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let two = (c, at(i + 1));
        let (tok, len) = match two {
            ('(', _) => (Tok::LParen, 1),
            (')', _) => (Tok::RParen, 1),
            (',', _) => (Tok::Comma, 1),
            ('.', _) => (Tok::Dot, 1),
            ('|', Some('-')) => (Tok::Turnstile, 2),
            ('~', _) => {
                if classical_suffix(i + 1) {
                    (Tok::Not { classical: true }, 2)
                } else {
                    (Tok::Not { classical: false }, 1)
                }
            }
            ('/', Some('\\')) => {
                if classical_suffix(i + 2) {
                    (Tok::Bin(BinOp::AndC), 3)
                } else {
                    (Tok::Bin(BinOp::And), 2)
                }
            }
            ('\\', Some('/')) => {
                if classical_suffix(i + 2) {
                    (Tok::Bin(BinOp::OrC), 3)
                } else {
                    (Tok::Bin(BinOp::Or), 2)
                }
            }
            ('=', Some('>')) => {
                if classical_suffix(i + 2) {
                    (Tok::Bin(BinOp::ImpC), 3)
                } else {
                    (Tok::Bin(BinOp::Imp), 2)
                }
            }
            (c, _) if is_ident_start(c) => {
                let mut j = i;
                while at(j).is_some_and(is_ident_char) {
                    j += 1;
                }
                let word: String = chars[i..j].iter().map(|&(_, c)| c).collect();
                let followed_by_paren = {
                    let mut k = j;
                    while at(k).is_some_and(char::is_whitespace) {
                        k += 1;
                    }
                    at(k) == Some('(')
                };
                let tok = match word.as_str() {
                    "forall" => Tok::Quant(Quant::Forall),
                    "exists" => Tok::Quant(Quant::Exists),
                    "forallc" => Tok::Quant(Quant::ForallC),
                    "existsc" => Tok::Quant(Quant::ExistsC),
                    "T" if !followed_by_paren => Tok::Const(Formula::Top),
                    "F" if !followed_by_paren => Tok::Const(Formula::Bot),
                    "Tc" if !followed_by_paren => Tok::Const(Formula::TopC),
                    "Fc" if !followed_by_paren => Tok::Const(Formula::BotC),
                    _ => Tok::Ident(word),
                };
                (tok, j - i)
            }
            (c, _) => {
                return Err(ParseError {
                    position: pos,
                    expected: vec!["a formula token".into()],
                    found: format!("character `{c}`"),
                })
            }
        };
        toks.push((tok, pos));
        i += len;
    }
    toks.push((Tok::Eof, src.len()));
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let (tok, position) = &self.toks[self.pos];
        ParseError {
            position: *position,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: tok.describe(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        if let Tok::Quant(_) = self.peek() {
            return self.quantified();
        }
        self.implication()
    }

    fn quantified(&mut self) -> Result<Formula, ParseError> {
        let Tok::Quant(q) = self.bump() else { unreachable!() };
        let x = self.identifier()?;
        self.expect(Tok::Dot, "`.`")?;
        let body = self.formula()?;
        Ok(Formula::quant(q, x, Arc::new(body)))
    }

    fn identifier(&mut self) -> Result<Ident, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                Ok(name.into())
            }
            _ => Err(self.error(&["identifier"])),
        }
    }

    /// An operand position: quantifiers extend as far right as possible.
    fn operand(&mut self, next: fn(&mut Self) -> Result<Formula, ParseError>) -> Result<Formula, ParseError> {
        if let Tok::Quant(_) = self.peek() {
            self.quantified()
        } else {
            next(self)
        }
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        match self.peek() {
            Tok::Bin(op @ (BinOp::Imp | BinOp::ImpC)) => {
                let op = *op;
                self.bump();
                let rhs = self.operand(Self::implication)?;
                Ok(Formula::binary(op, Arc::new(lhs), Arc::new(rhs)))
            }
            _ => Ok(lhs),
        }
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.conjunction()?;
        while let Tok::Bin(op @ (BinOp::Or | BinOp::OrC)) = self.peek() {
            let op = *op;
            self.bump();
            let rhs = self.operand(Self::conjunction)?;
            lhs = Formula::binary(op, Arc::new(lhs), Arc::new(rhs));
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while let Tok::Bin(op @ (BinOp::And | BinOp::AndC)) = self.peek() {
            let op = *op;
            self.bump();
            let rhs = self.operand(Self::unary)?;
            lhs = Formula::binary(op, Arc::new(lhs), Arc::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Not { classical } => {
                self.bump();
                let arg = Arc::new(self.operand(Self::unary)?);
                Ok(if classical { Formula::NotC(arg) } else { Formula::Not(arg) })
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Const(c) => {
                self.bump();
                Ok(c)
            }
            Tok::LParen => {
                self.bump();
                let f = self.formula()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(f)
            }
            Tok::Ident(name) => {
                self.bump();
                let args = if *self.peek() == Tok::LParen { self.arguments()? } else { Vec::new() };
                Ok(Formula::Atom(name.into(), args))
            }
            _ => Err(self.error(&["atom", "`T`", "`F`", "`~`", "`(`", "quantifier"])),
        }
    }

    fn arguments(&mut self) -> Result<Vec<Term>, ParseError> {
        self.expect(Tok::LParen, "`(`")?;
        let mut args = Vec::new();
        if *self.peek() == Tok::RParen {
            self.bump();
            return Ok(args);
        }
        loop {
            args.push(self.term()?);
            match self.peek() {
                Tok::Comma => {
                    self.bump();
                }
                Tok::RParen => {
                    self.bump();
                    return Ok(args);
                }
                _ => return Err(self.error(&["`,`", "`)`"])),
            }
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let name = match self.peek().clone() {
            Tok::Ident(name) => name,
            // `T(..)`/`F(..)` are lexed as identifiers; bare ones are reserved
            _ => return Err(self.error(&["term"])),
        };
        self.bump();
        if *self.peek() == Tok::LParen {
            Ok(Term::Fun(name.into(), self.arguments()?))
        } else {
            Ok(Term::Var(name.into()))
        }
    }

    fn formula_list(&mut self, stop: &Tok) -> Result<Vec<Formula>, ParseError> {
        let mut out = Vec::new();
        if self.peek() == stop {
            return Ok(out);
        }
        loop {
            out.push(self.formula()?);
            if *self.peek() == Tok::Comma {
                self.bump();
            } else {
                return Ok(out);
            }
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            Err(self.error(&["end of input", "binary connective"]))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SyntaxError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("function symbol `{name}` used with {first} and {second} arguments")]
    Arity { name: String, first: usize, second: usize },
}

/// Rejects inconsistent function-symbol arities across a set of formulas.
pub fn check_arities<'a>(formulas: impl IntoIterator<Item = &'a Formula>) -> Result<(), SyntaxError> {
    let mut seen: HashMap<Ident, usize> = HashMap::new();
    let mut syms = Vec::new();
    for f in formulas {
        f.function_symbols(&mut syms);
    }
    for (name, n) in syms {
        match seen.get(&name) {
            Some(&m) if m != n => {
                return Err(SyntaxError::Arity { name: name.to_string(), first: m, second: n });
            }
            _ => {
                seen.insert(name, n);
            }
        }
    }
    Ok(())
}

pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let f = p.formula()?;
    p.finish()?;
    Ok(f)
}

/// Parses a single first-order term such as `x`, `c()` or `f(x, g(y))`.
pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let t = p.term()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error(&["end of input"]));
    }
    Ok(t)
}

/// Parses a formula and checks function-symbol arities.
pub fn parse_formula_checked(text: &str) -> Result<Formula, SyntaxError> {
    let f = parse_formula(text)?;
    check_arities([&f])?;
    Ok(f)
}

/// Parses `A, B |- C, D`; either side may be empty. Input without a
/// turnstile is read as a single succedent formula.
pub fn parse_sequent(text: &str) -> Result<Sequent, SyntaxError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let has_turnstile = p.toks.iter().any(|(t, _)| *t == Tok::Turnstile);
    let seq = if has_turnstile {
        let ante = p.formula_list(&Tok::Turnstile)?;
        p.expect(Tok::Turnstile, "`|-`")?;
        let succ = p.formula_list(&Tok::Eof)?;
        Sequent::new(ante, succ)
    } else {
        let f = p.formula()?;
        Sequent::new(Vec::new(), vec![f])
    };
    p.finish()?;
    check_arities(seq.antecedent.iter().chain(&seq.succedent))?;
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn excluded_middle() {
        assert_eq!(p("P \\/ ~P"), Formula::or(Formula::atom("P"), Formula::not(Formula::atom("P"))));
    }

    #[test]
    fn classical_tokens() {
        assert_eq!(p("P \\/c ~c P"), Formula::or_c(Formula::atom("P"), Formula::not_c(Formula::atom("P"))));
    }

    #[test]
    fn precedence() {
        let (pp, q, r) = (Formula::atom("P"), Formula::atom("Q"), Formula::atom("R"));
        assert_eq!(p("P /\\ Q => R"), Formula::imp(Formula::and(pp.clone(), q.clone()), r.clone()));
        assert_eq!(p("P \\/ Q /\\ R"), Formula::or(pp.clone(), Formula::and(q.clone(), r.clone())));
        assert_eq!(p("P => Q => R"), Formula::imp(pp.clone(), Formula::imp(q.clone(), r.clone())));
        assert_eq!(p("P /\\ Q /\\ R"), Formula::and(Formula::and(pp.clone(), q.clone()), r.clone()));
        assert_eq!(p("~P /\\ Q"), Formula::and(Formula::not(pp.clone()), q));
    }

    #[test]
    fn quantifier_scope_is_maximal() {
        let f = p("forall x. P(x) /\\ Q");
        assert_eq!(f, Formula::forall("x", Formula::and(Formula::pred("P", vec![Term::var("x")]), Formula::atom("Q"))));
        let g = p("Q /\\ exists y. R(y) => Q");
        assert!(matches!(g, Formula::And(..)));
        let h = p("~forall x. P(x) \\/ Q");
        assert!(matches!(h, Formula::Not(..)));
    }

    #[test]
    fn predicate_named_f_with_arguments() {
        let f = p("F(cup(a, b)) => F");
        assert_eq!(
            f,
            Formula::imp(
                Formula::pred("F", vec![Term::app("cup", vec![Term::var("a"), Term::var("b")])]),
                Formula::Bot
            )
        );
    }

    #[test]
    fn classical_suffix_needs_boundary() {
        // `~cP` negates the atom `cP`
        assert_eq!(p("~cP"), Formula::not(Formula::atom("cP")));
        assert_eq!(p("~ c"), Formula::not(Formula::atom("c")));
        assert_eq!(p("Tc /\\c Fc"), Formula::and_c(Formula::TopC, Formula::BotC));
    }

    #[test]
    fn errors_report_position_and_expectations() {
        let e = parse_formula("P /\\").unwrap_err();
        assert_eq!(e.position, 4);
        assert!(e.expected.iter().any(|x| x.contains("atom")));
        let e = parse_formula("P Q").unwrap_err();
        assert_eq!(e.position, 2);
        let e = parse_formula("(P").unwrap_err();
        assert_eq!(e.expected, vec!["`)`".to_string()]);
        assert!(parse_formula("P # Q").is_err());
        assert!(parse_formula("forall . P").is_err());
    }

    #[test]
    fn sequents() {
        let s = parse_sequent("A, B |- C, D").unwrap();
        assert_eq!((s.antecedent.len(), s.succedent.len()), (2, 2));
        let s = parse_sequent("|- P(x, f(a))").unwrap();
        assert_eq!((s.antecedent.len(), s.succedent.len()), (0, 1));
        let s = parse_sequent("P |-").unwrap();
        assert_eq!((s.antecedent.len(), s.succedent.len()), (1, 0));
        let s = parse_sequent("P \\/ ~P").unwrap();
        assert_eq!((s.antecedent.len(), s.succedent.len()), (0, 1));
    }

    #[test]
    fn arity_mismatch_is_rejected() {
        assert!(matches!(parse_sequent("P(f(a)) |- P(f(a, b))"), Err(SyntaxError::Arity { .. })));
        assert!(parse_formula_checked("P(f(a)) /\\ Q(f(b))").is_ok());
    }
}
