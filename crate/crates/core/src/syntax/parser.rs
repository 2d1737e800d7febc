//! Recursive descent parser for the ASCII concrete syntax of PML.
//!
//! Precedence, tightest first: `~` and the modalities, `&`, `|`, `->` (right
//! associative), `<->`. `&`, `|` and `<->` associate to the left.

use super::pml::PmlFormula;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Atom(String),
    PoisonAtom(usize),
    True,
    False,
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
    Diamond(usize),
    Box(usize),
    PoisonDiamond(usize),
    PoisonBox(usize),
    UDiamond,
    UBox,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Eof => "end of input".to_string(),
            Tok::Atom(a) => format!("atom `{a}`"),
            other => format!("`{}`", other.text()),
        }
    }

    fn text(&self) -> String {
        match self {
            Tok::Atom(a) => a.clone(),
            Tok::PoisonAtom(_) => "#p".into(),
            Tok::True => "true".into(),
            Tok::False => "false".into(),
            Tok::Not => "~".into(),
            Tok::And => "&".into(),
            Tok::Or => "|".into(),
            Tok::Implies => "->".into(),
            Tok::Iff => "<->".into(),
            Tok::LParen => "(".into(),
            Tok::RParen => ")".into(),
            Tok::Diamond(_) => "<>".into(),
            Tok::Box(_) => "[]".into(),
            Tok::PoisonDiamond(_) => "<#>".into(),
            Tok::PoisonBox(_) => "[#]".into(),
            Tok::UDiamond => "<U>".into(),
            Tok::UBox => "[U]".into(),
            Tok::Eof => String::new(),
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Pos {
    line: usize,
    column: usize,
}

fn error(pos: Pos, message: impl Into<String>) -> Error {
    Error::Syntax {
        line: pos.line,
        column: pos.column,
        message: message.into(),
    }
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    pos: Pos,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            chars: text.chars().peekable(),
            pos: Pos { line: 1, column: 1 },
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.pos.line += 1;
            self.pos.column = 1;
        } else {
            self.pos.column += 1;
        }
        Some(c)
    }

    fn expect(&mut self, want: char, start: Pos) -> Result<()> {
        match self.bump() {
            Some(c) if c == want => Ok(()),
            Some(c) => Err(error(
                start,
                format!("malformed operator: expected `{want}`, found `{c}`"),
            )),
            None => Err(error(start, format!("malformed operator: expected `{want}`"))),
        }
    }

    /// A one-based index, returned zero-based; `None` if no digits follow.
    fn index(&mut self, start: Pos) -> Result<Option<usize>> {
        let mut digits = String::new();
        while let Some(c) = self.chars.peek().copied().filter(char::is_ascii_digit) {
            digits.push(c);
            self.bump();
        }
        if digits.is_empty() {
            return Ok(None);
        }
        match digits.parse::<usize>() {
            Ok(k) if k >= 1 => Ok(Some(k - 1)),
            _ => Err(error(start, format!("modal index `{digits}` must be ≥1"))),
        }
    }

    fn tokens(mut self) -> Result<Vec<(Tok, Pos)>> {
        let mut out = Vec::new();
        loop {
            while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
                self.bump();
            }
            let start = self.pos;
            let Some(c) = self.bump() else {
                out.push((Tok::Eof, start));
                return Ok(out);
            };
            let tok = match c {
                '~' => Tok::Not,
                '&' => Tok::And,
                '|' => Tok::Or,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '-' => {
                    self.expect('>', start)?;
                    Tok::Implies
                }
                '<' => match self.chars.peek().copied() {
                    Some('>') => {
                        self.bump();
                        Tok::Diamond(0)
                    }
                    Some('-') => {
                        self.bump();
                        self.expect('>', start)?;
                        Tok::Iff
                    }
                    Some('#') => {
                        self.bump();
                        let i = self.index(start)?.unwrap_or(0);
                        self.expect('>', start)?;
                        Tok::PoisonDiamond(i)
                    }
                    Some('U') => {
                        self.bump();
                        self.expect('>', start)?;
                        Tok::UDiamond
                    }
                    Some(d) if d.is_ascii_digit() => {
                        let i = self.index(start)?.unwrap_or(0);
                        self.expect('>', start)?;
                        Tok::Diamond(i)
                    }
                    _ => return Err(error(start, "unrecognised operator starting with `<`")),
                },
                '[' => match self.chars.peek().copied() {
                    Some(']') => {
                        self.bump();
                        Tok::Box(0)
                    }
                    Some('#') => {
                        self.bump();
                        let i = self.index(start)?.unwrap_or(0);
                        self.expect(']', start)?;
                        Tok::PoisonBox(i)
                    }
                    Some('U') => {
                        self.bump();
                        self.expect(']', start)?;
                        Tok::UBox
                    }
                    Some(d) if d.is_ascii_digit() => {
                        let i = self.index(start)?.unwrap_or(0);
                        self.expect(']', start)?;
                        Tok::Box(i)
                    }
                    _ => return Err(error(start, "unrecognised operator starting with `[`")),
                },
                '#' => {
                    self.expect('p', start)?;
                    if self.chars.peek() == Some(&'_') {
                        self.bump();
                        match self.index(start)? {
                            Some(i) => Tok::PoisonAtom(i),
                            None => return Err(error(start, "expected index after `#p_`")),
                        }
                    } else {
                        Tok::PoisonAtom(0)
                    }
                }
                c if c.is_ascii_lowercase() => {
                    let mut name = String::from(c);
                    while let Some(c) = self
                        .chars
                        .peek()
                        .copied()
                        .filter(|c| c.is_ascii_alphanumeric() || *c == '_')
                    {
                        name.push(c);
                        self.bump();
                    }
                    match name.as_str() {
                        "true" => Tok::True,
                        "false" => Tok::False,
                        _ => Tok::Atom(name),
                    }
                }
                other => return Err(error(start, format!("unexpected character `{other}`"))),
            };
            out.push((tok, start));
        }
    }
}

struct Parser {
    tokens: Vec<(Tok, Pos)>,
    cursor: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.cursor].0
    }

    fn pos(&self) -> Pos {
        self.tokens[self.cursor].1
    }

    fn advance(&mut self) -> Tok {
        let tok = self.tokens[self.cursor].0.clone();
        if tok != Tok::Eof {
            self.cursor += 1;
        }
        tok
    }

    fn iff(&mut self) -> Result<PmlFormula> {
        let mut lhs = self.implies()?;
        while *self.peek() == Tok::Iff {
            self.advance();
            lhs = lhs.iff(self.implies()?);
        }
        Ok(lhs)
    }

    fn implies(&mut self) -> Result<PmlFormula> {
        let lhs = self.or()?;
        if *self.peek() == Tok::Implies {
            self.advance();
            return Ok(lhs.implies(self.implies()?));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<PmlFormula> {
        let mut lhs = self.and()?;
        while *self.peek() == Tok::Or {
            self.advance();
            lhs = lhs.or(self.and()?);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<PmlFormula> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::And {
            self.advance();
            lhs = lhs.and(self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<PmlFormula> {
        let pos = self.pos();
        Ok(match self.advance() {
            Tok::Not => self.unary()?.not(),
            Tok::Diamond(i) => self.unary()?.diamond_i(i),
            Tok::Box(i) => self.unary()?.box_i(i),
            Tok::PoisonDiamond(i) => self.unary()?.poison_diamond_i(i),
            Tok::PoisonBox(i) => self.unary()?.poison_box_i(i),
            Tok::UDiamond => self.unary()?.u_diamond(),
            Tok::UBox => self.unary()?.u_box(),
            Tok::Atom(a) => PmlFormula::Atom(a),
            Tok::PoisonAtom(i) => PmlFormula::PoisonAtom(i),
            Tok::True => PmlFormula::True,
            Tok::False => PmlFormula::False,
            Tok::LParen => {
                let inner = self.iff()?;
                let close = self.pos();
                match self.advance() {
                    Tok::RParen => inner,
                    other => return Err(error(close, format!("expected `)`, found {}", other.describe()))),
                }
            }
            other => return Err(error(pos, format!("expected formula, found {}", other.describe()))),
        })
    }
}

/// Parses a PML formula. Unindexed modalities and `#p` refer to pair 0.
pub fn parse_pml(text: &str) -> Result<PmlFormula> {
    let tokens = Lexer::new(text).tokens()?;
    let mut parser = Parser { tokens, cursor: 0 };
    let formula = parser.iff()?;
    let pos = parser.pos();
    match parser.peek() {
        Tok::Eof => Ok(formula),
        other => Err(error(pos, format!("unexpected {} after formula", other.describe()))),
    }
}
