//! Parsers for the formula languages and the equational language.
//!
//! The canonical ASCII grammar: atoms `P(x,y,z)`, `in(x,y)`, `x=y`; `~f`;
//! `(f | g)`; sugar `&`, `->`, `<->`; quantifiers `Ex. f` / `Ax. f` binding
//! weakest to the right; modal `<1>f`, `[2]f`; FOL variables `v0 v1 ...`.
//! Equational terms use `+`, prefix `-`, unary `f g h` and variables `X0 X1
//! ...`; an equation is `t1 = t2`. Whitespace is insignificant everywhere.

use crate::error::SyntaxError;
use crate::syntax::ast::{Ast, EqTerm, Equation, Formula, Lang, UnOp, VarIx};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Word(String),
    LParen,
    RParen,
    Comma,
    Dot,
    Tilde,
    Pipe,
    Amp,
    Arrow,
    Iff,
    Eq,
    Plus,
    Minus,
    Dia(u8),
    Box(u8),
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    equational: bool,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str, equational: bool) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
            equational,
        }
    }

    fn error(&self, msg: impl Into<String>) -> SyntaxError {
        SyntaxError::parse(self.pos, msg)
    }

    fn tokens(mut self) -> Result<Vec<(Tok, usize)>, SyntaxError> {
        let mut out = Vec::new();
        while self.pos < self.src.len() {
            let start = self.pos;
            let c = self.src[self.pos];
            match c {
                b' ' | b'\t' | b'\n' | b'\r' => {
                    self.pos += 1;
                    continue;
                }
                b'(' => {
                    self.pos += 1;
                    out.push((Tok::LParen, start));
                }
                b')' => {
                    self.pos += 1;
                    out.push((Tok::RParen, start));
                }
                b',' => {
                    self.pos += 1;
                    out.push((Tok::Comma, start));
                }
                b'.' => {
                    self.pos += 1;
                    out.push((Tok::Dot, start));
                }
                b'~' => {
                    self.pos += 1;
                    out.push((Tok::Tilde, start));
                }
                b'|' => {
                    self.pos += 1;
                    out.push((Tok::Pipe, start));
                }
                b'&' => {
                    self.pos += 1;
                    out.push((Tok::Amp, start));
                }
                b'=' => {
                    self.pos += 1;
                    out.push((Tok::Eq, start));
                }
                b'+' => {
                    self.pos += 1;
                    out.push((Tok::Plus, start));
                }
                b'-' => {
                    if self.src.get(self.pos + 1) == Some(&b'>') {
                        self.pos += 2;
                        out.push((Tok::Arrow, start));
                    } else {
                        self.pos += 1;
                        out.push((Tok::Minus, start));
                    }
                }
                b'<' => {
                    if self.src.get(self.pos + 1) == Some(&b'-')
                        && self.src.get(self.pos + 2) == Some(&b'>')
                    {
                        self.pos += 3;
                        out.push((Tok::Iff, start));
                    } else if let (Some(d), Some(b'>')) =
                        (self.src.get(self.pos + 1), self.src.get(self.pos + 2))
                    {
                        let i = d.wrapping_sub(b'0');
                        if !(1..=3).contains(&i) {
                            return Err(self.error("modal index must be 1, 2 or 3"));
                        }
                        self.pos += 3;
                        out.push((Tok::Dia(i), start));
                    } else {
                        return Err(self.error("unexpected '<'"));
                    }
                }
                b'[' => {
                    if let (Some(d), Some(b']')) =
                        (self.src.get(self.pos + 1), self.src.get(self.pos + 2))
                    {
                        let i = d.wrapping_sub(b'0');
                        if !(1..=3).contains(&i) {
                            return Err(self.error("modal index must be 1, 2 or 3"));
                        }
                        self.pos += 3;
                        out.push((Tok::Box(i), start));
                    } else {
                        return Err(self.error("unexpected '['"));
                    }
                }
                c if c.is_ascii_alphanumeric() => {
                    if self.equational {
                        // Single-letter operators; `X<digits>` variables.
                        match c {
                            b'f' | b'g' | b'h' => {
                                self.pos += 1;
                                out.push((Tok::Word((c as char).to_string()), start));
                            }
                            b'X' => {
                                self.pos += 1;
                                let d0 = self.pos;
                                while self.pos < self.src.len()
                                    && self.src[self.pos].is_ascii_digit()
                                {
                                    self.pos += 1;
                                }
                                if self.pos == d0 {
                                    return Err(self.error("expected digits after 'X'"));
                                }
                                let w = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                                out.push((Tok::Word(w.to_string()), start));
                            }
                            _ => return Err(self.error(format!("unexpected '{}'", c as char))),
                        }
                    } else {
                        while self.pos < self.src.len()
                            && self.src[self.pos].is_ascii_alphanumeric()
                        {
                            self.pos += 1;
                        }
                        let w = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                        out.push((Tok::Word(w.to_string()), start));
                    }
                }
                other => return Err(self.error(format!("unexpected byte '{}'", other as char))),
            }
        }
        Ok(out)
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    lang: Lang,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(_, p)| *p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), SyntaxError> {
        let pos = self.here();
        match self.bump() {
            Some(got) if got == t => Ok(()),
            _ => Err(SyntaxError::parse(pos, format!("expected {what}"))),
        }
    }

    fn err(&self, msg: impl Into<String>) -> SyntaxError {
        SyntaxError::parse(self.here(), msg.into())
    }

    fn violation(&self, msg: impl Into<String>) -> SyntaxError {
        SyntaxError::language_violation(self.lang, msg)
    }

    fn var_of_word(&self, w: &str) -> Option<VarIx> {
        if self.lang == Lang::Fol {
            let rest = w.strip_prefix('v')?;
            if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            rest.parse::<u32>().ok()
        } else {
            match w {
                "x" => Some(0),
                "y" => Some(1),
                "z" => Some(2),
                _ => None,
            }
        }
    }

    // <-> : right-associative, lowest precedence.
    fn formula(&mut self) -> Result<Formula, SyntaxError> {
        let lhs = self.imp()?;
        if self.peek() == Some(&Tok::Iff) {
            self.bump();
            let rhs = self.formula()?;
            Ok(Formula::iff(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn imp(&mut self) -> Result<Formula, SyntaxError> {
        let lhs = self.disj()?;
        if self.peek() == Some(&Tok::Arrow) {
            self.bump();
            let rhs = self.imp()?;
            Ok(Formula::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn disj(&mut self) -> Result<Formula, SyntaxError> {
        let mut lhs = self.conj()?;
        while self.peek() == Some(&Tok::Pipe) {
            self.bump();
            let rhs = self.conj()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn conj(&mut self) -> Result<Formula, SyntaxError> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Tok::Amp) {
            self.bump();
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, SyntaxError> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::Tilde) => Ok(Formula::not(self.unary()?)),
            Some(Tok::Dia(i)) => {
                if self.lang != Lang::Modal {
                    return Err(self.violation("modal operators are not available"));
                }
                Ok(Formula::diamond(i, self.unary()?))
            }
            Some(Tok::Box(i)) => {
                if self.lang != Lang::Modal {
                    return Err(self.violation("modal operators are not available"));
                }
                Ok(Formula::box_(i, self.unary()?))
            }
            Some(Tok::LParen) => {
                let f = self.formula()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(f)
            }
            Some(Tok::Word(w)) => self.word(w, pos),
            _ => Err(SyntaxError::parse(pos, "expected a formula")),
        }
    }

    fn word(&mut self, w: String, pos: usize) -> Result<Formula, SyntaxError> {
        // Quantifier words: E/A followed by a variable name.
        if (w.starts_with('E') || w.starts_with('A')) && w.len() > 1 {
            if self.lang == Lang::Modal {
                return Err(self.violation("quantifiers are not available in the modal language"));
            }
            let v = self
                .var_of_word(&w[1..])
                .ok_or_else(|| SyntaxError::parse(pos, format!("unknown variable '{}'", &w[1..])))?;
            self.expect(Tok::Dot, "'.' after quantifier")?;
            let body = self.formula()?;
            return Ok(if w.starts_with('E') {
                Formula::exists(v, body)
            } else {
                Formula::forall(v, body)
            });
        }
        match w.as_str() {
            "P" => {
                if !matches!(self.lang, Lang::Fmd3 | Lang::Mixed3) {
                    return Err(self.violation("atom P(x,y,z) is not available"));
                }
                self.expect(Tok::LParen, "'('")?;
                let a = self.var()?;
                self.expect(Tok::Comma, "','")?;
                let b = self.var()?;
                self.expect(Tok::Comma, "','")?;
                let c = self.var()?;
                self.expect(Tok::RParen, "')'")?;
                if (a, b, c) != (0, 1, 2) {
                    return Err(self.violation("the only ternary atom is P(x,y,z)"));
                }
                Ok(Formula::atom_p(self.lang))
            }
            "in" => {
                if !matches!(self.lang, Lang::L3 | Lang::Fol | Lang::Mixed3) {
                    return Err(self.violation("atom in(..) is not available"));
                }
                self.expect(Tok::LParen, "'('")?;
                let a = self.var()?;
                self.expect(Tok::Comma, "','")?;
                let b = self.var()?;
                self.expect(Tok::RParen, "')'")?;
                if self.lang != Lang::Fol && (a, b) != (0, 1) {
                    return Err(self.violation("the only membership atom is in(x,y)"));
                }
                Ok(Formula::atom_in(self.lang, a, b))
            }
            "p" if self.lang == Lang::Modal => Ok(Formula::atom_modal()),
            _ => {
                if let Some(u) = self.var_of_word(&w) {
                    // Equality atom `u = v`.
                    if !matches!(self.lang, Lang::L3 | Lang::Fol | Lang::Mixed3) {
                        return Err(self.violation("equality is not available"));
                    }
                    self.expect(Tok::Eq, "'='")?;
                    let v = self.var()?;
                    Ok(Formula::atom_eq(self.lang, u, v))
                } else {
                    Err(SyntaxError::parse(pos, format!("unknown symbol '{w}'")))
                }
            }
        }
    }

    fn var(&mut self) -> Result<VarIx, SyntaxError> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::Word(w)) => self
                .var_of_word(&w)
                .ok_or_else(|| SyntaxError::parse(pos, format!("expected a variable, got '{w}'"))),
            _ => Err(SyntaxError::parse(pos, "expected a variable")),
        }
    }

    // ----- equational terms -----

    fn term(&mut self) -> Result<EqTerm, SyntaxError> {
        let mut lhs = self.term_unary()?;
        while self.peek() == Some(&Tok::Plus) {
            self.bump();
            let rhs = self.term_unary()?;
            lhs = EqTerm::plus(lhs, rhs);
        }
        Ok(lhs)
    }

    fn term_unary(&mut self) -> Result<EqTerm, SyntaxError> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::Minus) => Ok(EqTerm::minus(self.term_unary()?)),
            Some(Tok::Word(w)) => match w.as_str() {
                "f" => Ok(EqTerm::apply(UnOp::F, self.term_unary()?)),
                "g" => Ok(EqTerm::apply(UnOp::G, self.term_unary()?)),
                "h" => Ok(EqTerm::apply(UnOp::H, self.term_unary()?)),
                _ => {
                    if let Some(rest) = w.strip_prefix('X') {
                        let i = rest.parse::<u32>().map_err(|_| {
                            SyntaxError::parse(pos, "expected digits after 'X'")
                        })?;
                        Ok(EqTerm::var(i))
                    } else {
                        Err(SyntaxError::parse(pos, format!("unknown term symbol '{w}'")))
                    }
                }
            },
            Some(Tok::LParen) => {
                let t = self.term()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(t)
            }
            _ => Err(SyntaxError::parse(pos, "expected a term")),
        }
    }
}

/// Parse a formula of the given language.
pub fn parse_formula(lang: Lang, text: &str) -> Result<Formula, SyntaxError> {
    let toks = Lexer::new(text, false).tokens()?;
    let mut p = Parser {
        toks,
        pos: 0,
        lang,
        end: text.len(),
    };
    let f = p.formula()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input after formula"));
    }
    Ok(f)
}

/// Parse an equation `t1 = t2` of the equational language.
pub fn parse_equation(text: &str) -> Result<Equation, SyntaxError> {
    let toks = Lexer::new(text, true).tokens()?;
    let mut p = Parser {
        toks,
        pos: 0,
        lang: Lang::Fmd3, // unused in term mode
        end: text.len(),
    };
    let lhs = p.term()?;
    p.expect(Tok::Eq, "'='")?;
    let rhs = p.term()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input after equation"));
    }
    Ok(Equation::new(lhs, rhs))
}

/// Parse a bare equational term.
pub fn parse_term(text: &str) -> Result<EqTerm, SyntaxError> {
    let toks = Lexer::new(text, true).tokens()?;
    let mut p = Parser {
        toks,
        pos: 0,
        lang: Lang::Fmd3,
        end: text.len(),
    };
    let t = p.term()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input after term"));
    }
    Ok(t)
}

/// Parse with a textual language tag; `eq` selects the equational language.
pub fn parse_tagged(tag: &str, text: &str) -> Result<Ast, SyntaxError> {
    if tag == "eq" {
        return Ok(Ast::Equation(parse_equation(text)?));
    }
    let lang = Lang::from_tag(tag)
        .ok_or_else(|| SyntaxError::parse(0, format!("unknown language tag '{tag}'")))?;
    Ok(Ast::Formula(parse_formula(lang, text)?))
}
