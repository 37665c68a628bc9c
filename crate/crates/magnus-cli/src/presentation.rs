//! Parser and printer for group presentations:
//!
//! ```text
//! group NAME { gens: t a b; rels: t^3, [a,t]*b^3, a = b^2; class: 2 }
//! ```
//!
//! Words use `*` for concatenation, `^` for integer powers, `[u,v]` for
//! commutators; `u = v` is sugar for the relator u * v^-1, and the literal
//! `1` is the empty word.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
#[error("{line}:{col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Gen(usize),
    Comm(Word, Word),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub base: Atom,
    pub exp: i64,
}

pub type Word = Vec<Factor>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationAst {
    pub name: String,
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
    pub class: Option<usize>,
}

pub fn invert_word(w: &Word) -> Word {
    w.iter()
        .rev()
        .map(|f| Factor {
            base: f.base.clone(),
            exp: -f.exp,
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Colon,
    Semi,
    Comma,
    Caret,
    Star,
    Eq,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

type Spanned = (Tok, usize, usize);

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            col: self.col,
            msg: msg.into(),
        }
    }

    fn bump(&mut self) -> Option<u8> {
        let b = *self.src.get(self.pos)?;
        self.pos += 1;
        if b == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(b)
    }

    fn tokens(mut self) -> Result<Vec<Spanned>, ParseError> {
        let mut out = Vec::new();
        loop {
            while let Some(&b) = self.src.get(self.pos) {
                if b.is_ascii_whitespace() {
                    self.bump();
                } else if b == b'#' {
                    while let Some(&c) = self.src.get(self.pos) {
                        if c == b'\n' {
                            break;
                        }
                        self.bump();
                    }
                } else {
                    break;
                }
            }
            let (line, col) = (self.line, self.col);
            let Some(&b) = self.src.get(self.pos) else {
                return Ok(out);
            };
            let tok = match b {
                b'{' => {
                    self.bump();
                    Tok::LBrace
                }
                b'}' => {
                    self.bump();
                    Tok::RBrace
                }
                b'[' => {
                    self.bump();
                    Tok::LBracket
                }
                b']' => {
                    self.bump();
                    Tok::RBracket
                }
                b':' => {
                    self.bump();
                    Tok::Colon
                }
                b';' => {
                    self.bump();
                    Tok::Semi
                }
                b',' => {
                    self.bump();
                    Tok::Comma
                }
                b'^' => {
                    self.bump();
                    Tok::Caret
                }
                b'*' => {
                    self.bump();
                    Tok::Star
                }
                b'=' => {
                    self.bump();
                    Tok::Eq
                }
                b'-' | b'0'..=b'9' => {
                    let neg = b == b'-';
                    if neg {
                        self.bump();
                        if !self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                            return Err(self.error("expected digits after '-'"));
                        }
                    }
                    let mut v: i64 = 0;
                    while let Some(&c) = self.src.get(self.pos) {
                        if !c.is_ascii_digit() {
                            break;
                        }
                        v = v
                            .checked_mul(10)
                            .and_then(|v| v.checked_add((c - b'0') as i64))
                            .ok_or_else(|| self.error("integer literal overflows"))?;
                        self.bump();
                    }
                    Tok::Int(if neg { -v } else { v })
                }
                b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                    let start = self.pos;
                    while let Some(&c) = self.src.get(self.pos) {
                        if c.is_ascii_alphanumeric() || c == b'_' {
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    Tok::Ident(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
                }
                other => {
                    return Err(self.error(format!("unexpected character '{}'", other as char)))
                }
            };
            out.push((tok, line, col));
        }
    }
}

struct Parser {
    toks: Vec<Spanned>,
    at: usize,
    gens: Vec<String>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _, _)| t)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.at.min(self.toks.len().saturating_sub(1)))
            .map(|&(_, l, c)| (l, c))
            .unwrap_or((1, 1))
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(t, _, _)| t.clone());
        self.at += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ParseError> {
        match self.next() {
            Some(t) if t == want => Ok(()),
            Some(t) => {
                self.at -= 1;
                Err(self.error(format!("expected {what}, found {t:?}")))
            }
            None => Err(self.error(format!("expected {what}, found end of input"))),
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, ParseError> {
        match self.next() {
            Some(Tok::Ident(s)) => Ok(s),
            _ => {
                self.at -= 1;
                Err(self.error(format!("expected {what}")))
            }
        }
    }

    fn gen_index(&self, name: &str) -> Result<usize, ParseError> {
        self.gens
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| self.error(format!("undeclared generator '{name}'")))
    }

    fn atom(&mut self) -> Result<Atom, ParseError> {
        match self.next() {
            Some(Tok::Ident(name)) => Ok(Atom::Gen(self.gen_index(&name)?)),
            Some(Tok::LBracket) => {
                let left = self.word()?;
                self.expect(Tok::Comma, "',' inside the commutator")?;
                let right = self.word()?;
                self.expect(Tok::RBracket, "']' closing the commutator")?;
                Ok(Atom::Comm(left, right))
            }
            _ => {
                self.at -= 1;
                Err(self.error("expected a generator or '['"))
            }
        }
    }

    fn factor(&mut self) -> Result<Option<Factor>, ParseError> {
        // The literal 1 denotes the empty word.
        if let Some(Tok::Int(1)) = self.peek() {
            self.next();
            return Ok(None);
        }
        let base = self.atom()?;
        let exp = if let Some(Tok::Caret) = self.peek() {
            self.next();
            match self.next() {
                Some(Tok::Int(e)) => {
                    if e == 0 {
                        self.at -= 1;
                        return Err(self.error("zero power"));
                    }
                    e
                }
                _ => {
                    self.at -= 1;
                    return Err(self.error("expected an integer exponent after '^'"));
                }
            }
        } else {
            1
        };
        Ok(Some(Factor { base, exp }))
    }

    fn word(&mut self) -> Result<Word, ParseError> {
        let mut out = Word::new();
        if let Some(f) = self.factor()? {
            out.push(f);
        }
        while let Some(Tok::Star) = self.peek() {
            self.next();
            if let Some(f) = self.factor()? {
                out.push(f);
            }
        }
        Ok(out)
    }

    fn relator(&mut self) -> Result<Word, ParseError> {
        let lhs = self.word()?;
        if let Some(Tok::Eq) = self.peek() {
            self.next();
            let rhs = self.word()?;
            let mut out = lhs;
            out.extend(invert_word(&rhs));
            Ok(out)
        } else {
            Ok(lhs)
        }
    }
}

pub fn parse_presentation(text: &str) -> Result<PresentationAst, ParseError> {
    let toks = Lexer::new(text).tokens()?;
    let mut p = Parser {
        toks,
        at: 0,
        gens: Vec::new(),
    };
    let kw = p.ident("keyword 'group'")?;
    if kw != "group" {
        p.at -= 1;
        return Err(p.error("expected keyword 'group'"));
    }
    let name = p.ident("group name")?;
    p.expect(Tok::LBrace, "'{'")?;
    let mut relators: Vec<Word> = Vec::new();
    let mut class = None;
    let mut saw_gens = false;
    let mut saw_rels = false;
    loop {
        match p.peek() {
            Some(Tok::RBrace) => {
                p.next();
                break;
            }
            Some(Tok::Ident(section)) => {
                let section = section.clone();
                p.next();
                p.expect(Tok::Colon, "':' after the section name")?;
                match section.as_str() {
                    "gens" => {
                        if saw_gens {
                            return Err(p.error("duplicate gens section"));
                        }
                        saw_gens = true;
                        while let Some(Tok::Ident(_)) = p.peek() {
                            let g = p.ident("generator")?;
                            if p.gens.contains(&g) {
                                return Err(p.error(format!("duplicate generator '{g}'")));
                            }
                            p.gens.push(g);
                        }
                        if p.gens.is_empty() {
                            return Err(p.error("at least one generator is required"));
                        }
                        p.expect(Tok::Semi, "';' ending the gens section")?;
                    }
                    "rels" => {
                        if saw_rels {
                            return Err(p.error("duplicate rels section"));
                        }
                        saw_rels = true;
                        if !saw_gens {
                            return Err(p.error("rels section before gens"));
                        }
                        if !matches!(p.peek(), Some(Tok::Semi)) {
                            loop {
                                let r = p.relator()?;
                                if !r.is_empty() {
                                    relators.push(r);
                                }
                                if let Some(Tok::Comma) = p.peek() {
                                    p.next();
                                } else {
                                    break;
                                }
                            }
                        }
                        p.expect(Tok::Semi, "';' ending the rels section")?;
                    }
                    "class" => {
                        if class.is_some() {
                            return Err(p.error("duplicate class section"));
                        }
                        match p.next() {
                            Some(Tok::Int(c)) if c >= 1 => class = Some(c as usize),
                            _ => {
                                p.at -= 1;
                                return Err(p.error("expected a positive class"));
                            }
                        }
                        p.expect(Tok::Semi, "';' ending the class section")?;
                    }
                    other => return Err(p.error(format!("unknown section '{other}'"))),
                }
            }
            _ => return Err(p.error("expected a section or '}'")),
        }
    }
    if !saw_gens {
        return Err(p.error("missing gens section"));
    }
    if p.at != p.toks.len() {
        return Err(p.error("trailing input after '}'"));
    }
    Ok(PresentationAst {
        name,
        generators: p.gens,
        relators,
        class,
    })
}

fn print_word(ast: &PresentationAst, w: &Word, out: &mut String) {
    if w.is_empty() {
        out.push('1');
        return;
    }
    for (i, f) in w.iter().enumerate() {
        if i > 0 {
            out.push('*');
        }
        match &f.base {
            Atom::Gen(g) => out.push_str(&ast.generators[*g]),
            Atom::Comm(l, r) => {
                out.push('[');
                print_word(ast, l, out);
                out.push(',');
                print_word(ast, r, out);
                out.push(']');
            }
        }
        if f.exp != 1 {
            out.push('^');
            out.push_str(&f.exp.to_string());
        }
    }
}

impl fmt::Display for PresentationAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "group {} {{ gens:", self.name)?;
        for g in &self.generators {
            write!(f, " {g}")?;
        }
        write!(f, "; rels: ")?;
        let mut first = true;
        for r in &self.relators {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            let mut s = String::new();
            print_word(self, r, &mut s);
            write!(f, "{s}")?;
        }
        write!(f, ";")?;
        if let Some(c) = self.class {
            write!(f, " class: {c};")?;
        }
        write!(f, " }}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_three_group_presentation() {
        let text = "group T { gens: t a b; rels: t^3, a^9, b^9, [a,b], [a,t]*b^3, [b,t]*a^3; }";
        let ast = parse_presentation(text).unwrap();
        assert_eq!(ast.generators, vec!["t", "a", "b"]);
        assert_eq!(ast.relators.len(), 6);
        assert_eq!(ast.class, None);
    }

    #[test]
    fn empty_rels_is_a_free_object_request() {
        let ast = parse_presentation("group F { gens: x y; rels: ; class: 3; }").unwrap();
        assert!(ast.relators.is_empty());
        assert_eq!(ast.class, Some(3));
    }

    #[test]
    fn equation_sugar_expands() {
        let ast = parse_presentation("group G { gens: t a; rels: [a,t] = a^3; }").unwrap();
        assert_eq!(ast.relators.len(), 1);
        let r = &ast.relators[0];
        assert_eq!(r.len(), 2);
        assert_eq!(r[1].exp, -3);
    }

    #[test]
    fn unclosed_bracket_errors_with_position() {
        let err = parse_presentation("group G { gens: a b; rels: [a,b; }").unwrap_err();
        assert!(err.msg.contains("']'"), "{err}");
        assert_eq!(err.line, 1);
    }

    #[test]
    fn undeclared_generator_rejected() {
        let err = parse_presentation("group G { gens: a; rels: b^2; }").unwrap_err();
        assert!(err.msg.contains("undeclared"), "{err}");
    }

    #[test]
    fn zero_power_rejected() {
        let err = parse_presentation("group G { gens: a; rels: a^0; }").unwrap_err();
        assert!(err.msg.contains("zero power"), "{err}");
    }

    #[test]
    fn print_parse_roundtrip_on_builtin_texts() {
        for text in [
            "group T { gens: t a b; rels: t^3, a^9, b^9, [a,b], [a,t]*b^3, [b,t]*a^3; }",
            "group Gp { gens: t a; rels: [a,t] = a^3, t^3, a^9; }",
            "group F { gens: x y; rels: ; class: 3; }",
            "group W { gens: x y; rels: [[y,x],x], [[y,x],y]^-2; class: 3; }",
        ] {
            let ast = parse_presentation(text).unwrap();
            let printed = ast.to_string();
            let reparsed = parse_presentation(&printed).unwrap();
            assert_eq!(ast, reparsed, "{printed}");
        }
    }
}
