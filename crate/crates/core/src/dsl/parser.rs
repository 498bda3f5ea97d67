//! Lexer and fail-fast recursive-descent parser for `.qwc` programs.

use std::fmt;

use num_complex::Complex64;
use thiserror::Error;

use super::{Circuit, Element, MeasureWindow, Source, Stmt, MAX_REPEAT_DEPTH};
use crate::elements::QPlate;
use crate::state::Spin;

/// First error found in a program. `line` and `column` are 1-based and point
/// at the offending token (or at the last token when input ends early).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message} (at `{token}`)")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub token: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Kind {
    Ident(String),
    Number(String),
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    DotDot,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Ident(s) | Kind::Number(s) => f.write_str(s),
            Kind::LParen => f.write_str("("),
            Kind::RParen => f.write_str(")"),
            Kind::LBrace => f.write_str("{"),
            Kind::RBrace => f.write_str("}"),
            Kind::Comma => f.write_str(","),
            Kind::DotDot => f.write_str(".."),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: Kind,
    line: usize,
    column: usize,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            chars: text.chars().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn peek2(&self) -> Option<char> {
        let mut it = self.chars.clone();
        it.next();
        it.next()
    }

    fn error(line: usize, column: usize, message: &str, token: String) -> ParseError {
        ParseError {
            line,
            column,
            message: message.to_string(),
            token,
        }
    }

    fn digits(&mut self, text: &mut String) -> usize {
        let mut n = 0;
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            text.push(c);
            self.bump();
            n += 1;
        }
        n
    }

    /// `-? digits ('.' digits)? ([eE] [+-]? digits)?`, stopping before `..`.
    fn number(&mut self, line: usize, column: usize) -> Result<Kind, ParseError> {
        let mut text = String::new();
        let malformed = |lexer: &mut Self, mut text: String| {
            while let Some(c) = lexer.peek().filter(|c| c.is_ascii_alphanumeric() || *c == '.' || *c == '_') {
                text.push(c);
                lexer.bump();
            }
            Err(Self::error(line, column, "malformed number", text))
        };
        if self.peek() == Some('-') {
            text.push('-');
            self.bump();
        }
        if self.digits(&mut text) == 0 {
            return malformed(self, text);
        }
        if self.peek() == Some('.') && self.peek2() != Some('.') {
            text.push('.');
            self.bump();
            if self.digits(&mut text) == 0 {
                return malformed(self, text);
            }
        }
        if matches!(self.peek(), Some('e' | 'E')) {
            text.push(self.bump().unwrap());
            if let Some(sign @ ('+' | '-')) = self.peek() {
                text.push(sign);
                self.bump();
            }
            if self.digits(&mut text) == 0 {
                return malformed(self, text);
            }
        }
        if self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
            return malformed(self, text);
        }
        Ok(Kind::Number(text))
    }

    fn tokens(mut self) -> Result<Vec<Token>, ParseError> {
        let mut out = Vec::new();
        while let Some(c) = self.peek() {
            let (line, column) = (self.line, self.column);
            let kind = match c {
                c if c.is_whitespace() => {
                    self.bump();
                    continue;
                }
                '#' => {
                    while self.peek().is_some_and(|c| c != '\n') {
                        self.bump();
                    }
                    continue;
                }
                '(' | ')' | '{' | '}' | ',' => {
                    self.bump();
                    match c {
                        '(' => Kind::LParen,
                        ')' => Kind::RParen,
                        '{' => Kind::LBrace,
                        '}' => Kind::RBrace,
                        _ => Kind::Comma,
                    }
                }
                '.' => {
                    self.bump();
                    if self.peek() != Some('.') {
                        return Err(Self::error(line, column, "unexpected character", ".".into()));
                    }
                    self.bump();
                    Kind::DotDot
                }
                '-' | '0'..='9' => self.number(line, column)?,
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let mut word = String::new();
                    while let Some(c) = self.peek().filter(|c| c.is_ascii_alphanumeric() || *c == '_') {
                        word.push(c);
                        self.bump();
                    }
                    Kind::Ident(word)
                }
                other => {
                    return Err(Self::error(line, column, "unexpected character", other.to_string()));
                }
            };
            out.push(Token { kind, line, column });
        }
        Ok(out)
    }
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self, expected: &str) -> PResult<Token> {
        match self.tokens.get(self.pos) {
            Some(tok) => {
                self.pos += 1;
                Ok(tok.clone())
            }
            None => Err(self.at_end(&format!("expected {expected}, found end of input"))),
        }
    }

    fn at_end(&self, message: &str) -> ParseError {
        match self.tokens.last() {
            Some(tok) => ParseError {
                line: tok.line,
                column: tok.column,
                message: message.to_string(),
                token: tok.kind.to_string(),
            },
            None => ParseError {
                line: 1,
                column: 1,
                message: message.to_string(),
                token: String::new(),
            },
        }
    }

    fn error_at(tok: &Token, message: impl Into<String>) -> ParseError {
        ParseError {
            line: tok.line,
            column: tok.column,
            message: message.into(),
            token: tok.kind.to_string(),
        }
    }

    fn expect(&mut self, kind: Kind) -> PResult<Token> {
        let tok = self.next(&format!("`{kind}`"))?;
        if tok.kind == kind {
            Ok(tok)
        } else {
            Err(Self::error_at(&tok, format!("expected `{kind}`")))
        }
    }

    fn keyword(&mut self, word: &str) -> PResult<Token> {
        let tok = self.next(&format!("`{word}`"))?;
        match &tok.kind {
            Kind::Ident(w) if w == word => Ok(tok),
            _ => Err(Self::error_at(&tok, format!("expected `{word}`"))),
        }
    }

    fn integer(&mut self) -> PResult<(i64, Token)> {
        let tok = self.next("an integer")?;
        match &tok.kind {
            Kind::Number(text) if !text.contains(['.', 'e', 'E']) => text
                .parse::<i64>()
                .map(|v| (v, tok.clone()))
                .map_err(|_| Self::error_at(&tok, "integer out of range")),
            _ => Err(Self::error_at(&tok, "expected an integer")),
        }
    }

    fn real(&mut self) -> PResult<(f64, Token)> {
        let tok = self.next("a number")?;
        match &tok.kind {
            Kind::Number(text) => match text.parse::<f64>() {
                Ok(v) if v.is_finite() => Ok((v, tok.clone())),
                _ => Err(Self::error_at(&tok, "number out of range")),
            },
            _ => Err(Self::error_at(&tok, "expected a number")),
        }
    }

    fn complex(&mut self) -> PResult<Complex64> {
        self.expect(Kind::LParen)?;
        let (re, _) = self.real()?;
        self.expect(Kind::Comma)?;
        let (im, _) = self.real()?;
        self.expect(Kind::RParen)?;
        Ok(Complex64::new(re, im))
    }

    fn source(&mut self) -> PResult<Source> {
        self.keyword("source")?;
        let tok = self.next("`R`, `L` or `super`")?;
        match &tok.kind {
            Kind::Ident(w) if w == "R" || w == "L" => {
                let spin = if w == "R" { Spin::R } else { Spin::L };
                let (m, _) = self.integer()?;
                Ok(Source::Basis { spin, m })
            }
            Kind::Ident(w) if w == "super" => {
                self.expect(Kind::LParen)?;
                let r = self.complex()?;
                self.expect(Kind::Comma)?;
                let l = self.complex()?;
                self.expect(Kind::RParen)?;
                let (m, _) = self.integer()?;
                if r.norm_sqr() == 0.0 && l.norm_sqr() == 0.0 {
                    return Err(Self::error_at(&tok, "superposition has no nonzero coefficient"));
                }
                Ok(Source::Superposition { r, l, m })
            }
            _ => Err(Self::error_at(&tok, "expected `R`, `L` or `super`")),
        }
    }

    fn element(&mut self, tok: &Token, word: &str) -> PResult<Element> {
        Ok(match word {
            "qwp" => Element::Qwp { degrees: self.real()?.0 },
            "hwp" => Element::Hwp { degrees: self.real()?.0 },
            "qp" => {
                let (q, qtok) = self.real()?;
                let plate = QPlate::new(q)
                    .map_err(|_| Self::error_at(&qtok, "q-plate charge needs 2q to be a positive integer"))?;
                Element::QPlate(plate)
            }
            "spinflip" => Element::SpinFlip,
            "holo" => Element::Hologram(self.integer()?.0),
            "hadamard" => Element::Hadamard,
            _ => return Err(Self::error_at(tok, format!("unknown keyword `{word}`"))),
        })
    }

    /// Statements up to `}` (inside a block) or up to `measure`/end of input.
    fn stmts(&mut self, depth: usize) -> PResult<Vec<Stmt>> {
        let mut out = Vec::new();
        loop {
            let Some(tok) = self.peek().cloned() else {
                return Ok(out);
            };
            match &tok.kind {
                Kind::RBrace if depth > 0 => return Ok(out),
                Kind::RBrace => return Err(Self::error_at(&tok, "unmatched `}`")),
                Kind::Ident(w) if w == "measure" => return Ok(out),
                Kind::Ident(w) if w == "repeat" => {
                    self.pos += 1;
                    if depth >= MAX_REPEAT_DEPTH {
                        return Err(Self::error_at(
                            &tok,
                            format!("repeat blocks nest deeper than {MAX_REPEAT_DEPTH}"),
                        ));
                    }
                    let (count, ctok) = self.integer()?;
                    if count < 1 || count > i64::from(u32::MAX) {
                        return Err(Self::error_at(&ctok, "repeat count must be between 1 and 4294967295"));
                    }
                    let open = self.expect(Kind::LBrace)?;
                    let body = self.stmts(depth + 1)?;
                    match self.peek() {
                        Some(t) if t.kind == Kind::RBrace => self.pos += 1,
                        _ => return Err(Self::error_at(&open, "unclosed `{`")),
                    }
                    out.push(Stmt::Repeat { count: count as u32, body });
                }
                Kind::Ident(w) => {
                    self.pos += 1;
                    let w = w.clone();
                    out.push(Stmt::Element(self.element(&tok, &w)?));
                }
                _ => return Err(Self::error_at(&tok, "expected an element, `repeat` or `measure`")),
            }
        }
    }

    fn measure(&mut self) -> PResult<Option<MeasureWindow>> {
        if self.peek().is_none() {
            return Ok(None);
        }
        self.keyword("measure")?;
        let (m_min, _) = self.integer()?;
        self.expect(Kind::DotDot)?;
        let (m_max, max_tok) = self.integer()?;
        if m_min > m_max {
            return Err(Self::error_at(&max_tok, "measure window is inverted"));
        }
        if let Some(tok) = self.peek() {
            return Err(Self::error_at(tok, "unexpected input after `measure`"));
        }
        Ok(Some(MeasureWindow { m_min, m_max }))
    }
}

/// Parses a `.qwc` program, stopping at the first error.
pub fn parse(text: &str) -> Result<Circuit, ParseError> {
    let tokens = Lexer::new(text).tokens()?;
    let mut parser = Parser { tokens, pos: 0 };
    let source = parser.source()?;
    let body = parser.stmts(0)?;
    let measure = parser.measure()?;
    Ok(Circuit { source, body, measure })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn err(text: &str) -> ParseError {
        parse(text).expect_err(text)
    }

    #[test]
    fn graybox_program() {
        let c = parse("source R 0\nrepeat 3 { qwp 0 hwp 22.5 qp 0.5 spinflip }\nmeasure -3..3").unwrap();
        assert_eq!(c.source, Source::Basis { spin: Spin::R, m: 0 });
        assert_eq!(c.measure, Some(MeasureWindow { m_min: -3, m_max: 3 }));
        let Stmt::Repeat { count, body } = &c.body[0] else { panic!() };
        assert_eq!(*count, 3);
        assert_eq!(
            body,
            &vec![
                Stmt::Element(Element::Qwp { degrees: 0.0 }),
                Stmt::Element(Element::Hwp { degrees: 22.5 }),
                Stmt::Element(Element::QPlate(QPlate::new(0.5).unwrap())),
                Stmt::Element(Element::SpinFlip),
            ]
        );
    }

    #[test]
    fn minimal_program() {
        let c = parse("source R 0").unwrap();
        assert!(c.body.is_empty() && c.measure.is_none());
    }

    #[test]
    fn superposition_source_with_comments_and_crlf() {
        let c = parse("# start\r\nsource super((1,0),(0,-1.5e0)) -2 # tail\r\nhadamard\r\n").unwrap();
        assert_eq!(
            c.source,
            Source::Superposition {
                r: Complex64::new(1.0, 0.0),
                l: Complex64::new(0.0, -1.5),
                m: -2
            }
        );
        assert_eq!(c.body, vec![Stmt::Element(Element::Hadamard)]);
    }

    #[test]
    fn bad_charge_points_at_number() {
        let e = err("source R 0\nqp 0.3");
        assert_eq!((e.line, e.column, e.token.as_str()), (2, 4, "0.3"));
    }

    #[test]
    fn unknown_keyword() {
        let e = err("source R 0\n  mirror 3");
        assert_eq!((e.line, e.column), (2, 3));
        assert!(e.message.contains("mirror"));
    }

    #[test]
    fn malformed_numbers() {
        let e = err("source R 0\nhwp 2.x");
        assert_eq!((e.line, e.column, e.token.as_str()), (2, 5, "2.x"));
        let e = err("source R 0\nholo 12abc");
        assert_eq!((e.line, e.column, e.token.as_str()), (2, 6, "12abc"));
        let e = err("source R 0\nholo 1.5");
        assert_eq!((e.line, e.column), (2, 6));
    }

    #[test]
    fn braces() {
        let e = err("source R 0\nrepeat 2 {\n hadamard\n");
        assert_eq!((e.line, e.column, e.token.as_str()), (2, 10, "{"));
        let e = err("source R 0\nhadamard }");
        assert_eq!((e.line, e.column), (2, 10));
    }

    #[test]
    fn nesting_and_counts() {
        let deep = format!("source R 0 {} hadamard {}", "repeat 1 { ".repeat(8), "} ".repeat(8));
        assert!(parse(&deep).is_ok());
        let too_deep = format!("source R 0 {} hadamard {}", "repeat 1 { ".repeat(9), "} ".repeat(9));
        let e = err(&too_deep);
        assert_eq!(e.column, 11 + 11 * 8 + 1);
        let e = err("source R 0\nrepeat 0 { hadamard }");
        assert_eq!((e.line, e.column), (2, 8));
    }

    #[test]
    fn empty_input() {
        let e = err("");
        assert_eq!((e.line, e.column), (1, 1));
        let e = err("   # nothing\n");
        assert_eq!((e.line, e.column), (1, 1));
    }
}
