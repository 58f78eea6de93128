//! Textual notation for canonical forms.
//!
//! ```text
//! expr  := '±' term | term
//! term  := number ['*'] | '*' | '(' expr ')' | '{' opts '|' opts '}'
//! opts  := [expr (',' expr)*]
//! number := ['-'] digits ['/' digits]     (denominator a power of two)
//! ```
//!
//! `n*` binds tighter than `±`, so `±2*` reads as `±(2*)`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use thiserror::Error;

use super::{CanonicalForm, GameStore};
use crate::dyadic::Dyadic;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl GameStore {
    /// Renders `g` in the notation above.
    pub fn display(&self, g: CanonicalForm) -> String {
        let mut out = String::new();
        self.write_game(&mut out, g);
        out
    }

    fn write_game(&self, out: &mut String, g: CanonicalForm) {
        if let Some(x) = self.as_number(g) {
            let _ = write!(out, "{x}");
            return;
        }
        let node = self.node(g);
        if let ([l], [r]) = (&*node.left, &*node.right) {
            if l == r {
                if let Some(x) = self.as_number(*l) {
                    if x != Dyadic::ZERO {
                        let _ = write!(out, "{x}");
                    }
                    out.push('*');
                    return;
                }
            }
            if *r == self.neg(*l) {
                out.push('±');
                let bare = self.as_number(*l).is_some_and(|x| x >= Dyadic::ZERO) || self.is_braced(*l);
                if bare {
                    self.write_game(out, *l);
                } else {
                    out.push('(');
                    self.write_game(out, *l);
                    out.push(')');
                }
                return;
            }
        }
        out.push('{');
        self.write_options(out, &node.left);
        out.push('|');
        self.write_options(out, &node.right);
        out.push('}');
    }

    /// Rendered as a general `{...|...}` form.
    fn is_braced(&self, g: CanonicalForm) -> bool {
        if self.is_number(g) {
            return false;
        }
        match (self.left_options(g), self.right_options(g)) {
            ([l], [r]) => !(l == r && self.is_number(*l)) && *r != self.neg(*l),
            _ => true,
        }
    }

    fn write_options(&self, out: &mut String, options: &[CanonicalForm]) {
        let mut rendered: Vec<(u8, Option<Dyadic>, String)> = options
            .iter()
            .map(|&g| {
                let x = self.as_number(g);
                (u8::from(x.is_none()), x, self.display(g))
            })
            .collect();
        rendered.sort();
        for (i, (_, _, s)) in rendered.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(s);
        }
    }

    /// Parses the notation above into a canonical form.
    pub fn parse(&self, text: &str) -> Result<CanonicalForm, ParseError> {
        let mut parser = Parser { store: self, text, pos: 0 };
        let g = parser.expr()?;
        parser.skip_ws();
        if parser.pos != text.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(g)
    }
}

struct Parser<'a> {
    store: &'a GameStore,
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> ParseError {
        ParseError { position: self.pos, message: message.to_string() }
    }

    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek().filter(|c| c.is_whitespace()) {
            self.pos += c.len_utf8();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&alloc::format!("expected `{c}`")))
        }
    }

    fn expr(&mut self) -> Result<CanonicalForm, ParseError> {
        self.skip_ws();
        let plus_minus = if self.rest().starts_with("+-") {
            self.pos += 2;
            true
        } else {
            self.eat('±')
        };
        let g = self.term()?;
        Ok(if plus_minus { self.store.switch(g) } else { g })
    }

    fn term(&mut self) -> Result<CanonicalForm, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let g = self.expr()?;
                self.expect(')')?;
                Ok(g)
            }
            Some('{') => {
                self.pos += 1;
                let left = self.options('|')?;
                self.expect('|')?;
                let right = self.options('}')?;
                self.expect('}')?;
                Ok(self.store.construct(&left, &right))
            }
            Some('*') => {
                self.pos += 1;
                Ok(self.store.star())
            }
            Some(c) if c == '-' || c.is_ascii_digit() => {
                let x = self.number()?;
                let g = self.store.number(x);
                if self.peek() == Some('*') {
                    self.pos += 1;
                    Ok(self.store.construct(&[g], &[g]))
                } else {
                    Ok(g)
                }
            }
            Some(_) => Err(self.error("expected a game")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn options(&mut self, terminator: char) -> Result<Vec<CanonicalForm>, ParseError> {
        let mut out = Vec::new();
        self.skip_ws();
        if self.peek() == Some(terminator) {
            return Ok(out);
        }
        loop {
            out.push(self.expr()?);
            if !self.eat(',') {
                return Ok(out);
            }
        }
    }

    fn number(&mut self) -> Result<Dyadic, ParseError> {
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        let digits = |p: &mut Self| {
            let from = p.pos;
            while p.peek().is_some_and(|c| c.is_ascii_digit()) {
                p.pos += 1;
            }
            p.pos > from
        };
        if !digits(self) {
            return Err(self.error("expected digits"));
        }
        if self.peek() == Some('/') {
            self.pos += 1;
            if !digits(self) {
                return Err(self.error("expected denominator"));
            }
        }
        self.text[start..self.pos]
            .parse::<Dyadic>()
            .map_err(|e| ParseError { position: start, message: e.to_string() })
    }
}
