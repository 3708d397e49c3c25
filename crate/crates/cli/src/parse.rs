//! Expression language for cobar words, Hochschild cochains, differential
//! forms and polyvector fields.
//!
//! ```text
//! words    := sum of [coeff '*'] (word | '1') | coeff
//! word     := '[' slot ('|' slot)* ']'       slot := ['s^-1'] id
//! cochain  := sum of [coeff '*'] '<' [slot ('|' slot)*] ';' slot '>' | '0'
//! form     := sum of factors [' ' 'dx' ('^' 'dy')*]
//! vector   := sum of factors [' ' 'd/dx' (' ^ ' 'd/dy')*]
//! factors  := factor ('*' factor)*          factor := coeff | var ['^' n]
//! ```
//!
//! Syntax is checked before names are resolved, so a malformed expression
//! reports a position even when it also names unknown generators.

use std::sync::Arc;

use ncpoisson::gerstenhaber::Cochain;
use ncpoisson::hkr::{var_names, PolyForm, PolyVector};
use ncpoisson::tensor::{render_lin, Alphabet, FreeElement, Poly, Word};
use ncpoisson::{q, Q};

use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Words,
    Cochain,
    Form,
    Vector,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Ast {
    Words(FreeElement),
    Cochain(Arc<Alphabet>, Cochain),
    Form(PolyForm),
    Vector(PolyVector),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Expression {
    pub source: String,
    pub ast: Ast,
}

impl Expression {
    pub fn render(&self) -> String {
        match &self.ast {
            Ast::Words(x) => x.render(),
            Ast::Cochain(a, f) => render_cochain(a, f),
            Ast::Form(x) => x.render(),
            Ast::Vector(x) => x.render(),
        }
    }
}

/// Names that expressions resolve against.
#[derive(Clone, Debug, Default)]
pub struct Scope {
    pub alphabet: Option<Arc<Alphabet>>,
    pub var_count: usize,
}

pub fn parse_expression(text: &str, kind: Kind, scope: &Scope) -> Result<Expression> {
    let alphabet = || scope.alphabet.clone().ok_or_else(|| CliError::Usage(String::from("no coalgebra selected")));
    let ast = match kind {
        Kind::Words => {
            let a = alphabet()?;
            let p = parse_words(text, &a)?;
            Ast::Words(FreeElement::new(a, p))
        }
        Kind::Cochain => {
            let a = alphabet()?;
            let f = parse_cochain(text, &a)?;
            Ast::Cochain(a, f)
        }
        Kind::Form => Ast::Form(parse_form(text, scope.var_count)?),
        Kind::Vector => Ast::Vector(parse_vector(text, scope.var_count)?),
    };
    Ok(Expression { source: text.to_string(), ast })
}

/// `c*<x1|x2;a>`, with `<;a>` for arity zero.
pub fn render_cochain(alpha: &Alphabet, f: &Cochain) -> String {
    render_lin(f, |(xs, a)| {
        let ins: Vec<&str> = xs.iter().map(|&i| alpha.get(i).id.as_str()).collect();
        format!("<{};{}>", ins.join("|"), alpha.get(*a).id)
    })
}

pub fn parse_words(text: &str, alpha: &Alphabet) -> Result<Poly> {
    let mut cur = Cursor::new(text);
    let raw = cur.sum(|c| {
        let coef = c.leading_coefficient()?;
        let word = match coef {
            Some(_) if !c.eat('*') => Vec::new(),
            _ => c.word_atom()?,
        };
        Ok((coef.unwrap_or_else(|| q(1)), word))
    })?;
    let mut out = Poly::zero();
    for (c, (k, names)) in raw {
        let letters = names.iter().map(|(_, n)| resolve(alpha, n)).collect::<Result<Vec<_>>>()?;
        out.add_term(Word(letters), c * k);
    }
    Ok(out)
}

pub fn parse_cochain(text: &str, alpha: &Alphabet) -> Result<Cochain> {
    let mut cur = Cursor::new(text);
    let raw = cur.sum(|c| {
        let coef = c.leading_coefficient()?;
        if coef.as_ref().is_some_and(|x| *x == q(0)) && !c.eat('*') {
            return Ok(None);
        }
        if coef.is_some() {
            c.expect('*')?;
        }
        c.skip_ws();
        c.expect('<')?;
        let mut ins = Vec::new();
        c.skip_ws();
        if !c.eat(';') {
            loop {
                ins.push(c.slot()?);
                c.skip_ws();
                if c.eat(';') {
                    break;
                }
                c.expect('|')?;
            }
        }
        let out = c.slot()?;
        c.skip_ws();
        c.expect('>')?;
        Ok(Some((coef.unwrap_or_else(|| q(1)), (ins, out))))
    })?;
    let mut f = Cochain::zero();
    for (c, (k, (ins, out))) in raw.into_iter().filter_map(|(c, t)| t.map(|t| (c, t))) {
        let xs = ins.iter().map(|n| resolve(alpha, n)).collect::<Result<Vec<_>>>()?;
        f.add_term((xs, resolve(alpha, &out)?), c * k);
    }
    Ok(f)
}

pub fn parse_form(text: &str, var_count: usize) -> Result<PolyForm> {
    let terms = graded_terms(text, var_count, false)?;
    let mut out = PolyForm::zero(var_count);
    for (c, exps, idx) in terms {
        out = out.plus(&PolyForm::term(var_count, c, &exps, &idx));
    }
    Ok(out)
}

pub fn parse_vector(text: &str, var_count: usize) -> Result<PolyVector> {
    let terms = graded_terms(text, var_count, true)?;
    let mut out = PolyVector::zero(var_count);
    for (c, exps, idx) in terms {
        out = out.plus(&PolyVector::term(var_count, c, &exps, &idx));
    }
    Ok(out)
}

fn resolve(alpha: &Alphabet, name: &str) -> Result<usize> {
    alpha.lookup(name).map_err(|_| CliError::UnknownGenerator(name.to_string()))
}

type GradedTerm = (Q, Vec<u32>, Vec<usize>);

fn graded_terms(text: &str, m: usize, vector: bool) -> Result<Vec<GradedTerm>> {
    let names = var_names(m);
    let var = |s: &str| names.iter().position(|n| n == s);
    let mut cur = Cursor::new(text);
    let raw = cur.sum(|c| {
        let start = c.pos;
        let mut coef = q(1);
        let mut exps = vec![0u32; m];
        let mut factors = 0;
        loop {
            c.skip_ws();
            if c.at_basis(vector, &var) {
                break;
            }
            if let Some(n) = c.number()? {
                coef *= n;
            } else {
                let p = c.pos;
                let Some(id) = c.word() else { return Err(CliError::parse(c.pos, "expected a factor")) };
                let v = var(&id).ok_or_else(|| CliError::parse(p, format!("unknown variable `{id}`")))?;
                let e = if c.eat('^') {
                    c.integer()?.ok_or_else(|| CliError::parse(c.pos, "expected an exponent"))?
                } else {
                    1
                };
                exps[v] += e;
            }
            factors += 1;
            if !c.eat('*') {
                break;
            }
        }
        c.skip_ws();
        let mut idx = Vec::new();
        if c.at_basis(vector, &var) {
            loop {
                idx.push(c.basis_element(vector, &var)?);
                let save = c.pos;
                c.skip_ws();
                if c.eat('^') {
                    continue;
                }
                c.pos = save;
                break;
            }
        }
        if factors == 0 && idx.is_empty() {
            return Err(CliError::parse(start, "expected a term"));
        }
        Ok((coef, (exps, idx)))
    })?;
    Ok(raw.into_iter().map(|(s, (c, (e, i)))| (s * c, e, i)).collect())
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        Cursor { chars: text.chars().collect(), pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_at(&self, k: usize) -> Option<char> {
        self.chars.get(self.pos + k).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, ch: char) -> bool {
        if self.peek() == Some(ch) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        let n = s.chars().count();
        if self.chars.len() >= self.pos + n && self.chars[self.pos..self.pos + n].iter().copied().eq(s.chars()) {
            self.pos += n;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, ch: char) -> Result<()> {
        if self.eat(ch) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{ch}`")))
        }
    }

    fn unexpected(&self, what: &str) -> CliError {
        match self.peek() {
            Some(c) => CliError::parse(self.pos, format!("expected {what}, found `{c}`")),
            None => CliError::parse(self.pos, format!("expected {what}, found end of input")),
        }
    }

    /// Signed sum of terms; the sign is folded into the returned scalar.
    fn sum<T>(&mut self, mut term: impl FnMut(&mut Cursor) -> Result<T>) -> Result<Vec<(Q, T)>> {
        let mut out = Vec::new();
        self.skip_ws();
        if self.peek().is_none() {
            return Err(CliError::parse(self.pos, "empty expression"));
        }
        let mut sign = if self.eat('-') { q(-1) } else { q(1) };
        loop {
            out.push((sign, term(self)?));
            self.skip_ws();
            if self.peek().is_none() {
                return Ok(out);
            }
            sign = if self.eat('+') {
                q(1)
            } else if self.eat('-') {
                q(-1)
            } else {
                return Err(self.unexpected("`+` or `-`"));
            };
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn integer(&mut self) -> Result<Option<u32>> {
        let p = self.pos;
        match self.digits() {
            None => Ok(None),
            Some(d) => d.parse().map(Some).map_err(|_| CliError::parse(p, "integer out of range")),
        }
    }

    /// `p` or `p/q`.
    fn number(&mut self) -> Result<Option<Q>> {
        let p = self.pos;
        let Some(num) = self.digits() else { return Ok(None) };
        let mut text = num;
        if self.peek() == Some('/') && self.peek_at(1).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
            let den = self.digits().unwrap_or_default();
            if den.chars().all(|c| c == '0') {
                return Err(CliError::parse(p, "zero denominator"));
            }
            text = format!("{text}/{den}");
        }
        text.parse::<Q>().map(Some).map_err(|_| CliError::parse(p, "malformed number"))
    }

    /// A number at the start of a term, unless it is the unit word `1`
    /// standing alone.
    fn leading_coefficient(&mut self) -> Result<Option<Q>> {
        self.skip_ws();
        self.number()
    }

    /// `[slot|..]` or `1`.
    fn word_atom(&mut self) -> Result<Vec<(usize, String)>> {
        self.skip_ws();
        let p = self.pos;
        if let Some(n) = self.number()? {
            if n == q(1) {
                return Ok(Vec::new());
            }
            return Err(CliError::parse(p, "expected a word or `1`"));
        }
        if !self.eat('[') {
            return Err(self.unexpected("`[` or `1`"));
        }
        let mut slots = Vec::new();
        loop {
            self.skip_ws();
            slots.push((self.pos, self.slot()?));
            self.skip_ws();
            if self.eat(']') {
                return Ok(slots);
            }
            self.expect('|')?;
        }
    }

    /// `[s^-1] id`.
    fn slot(&mut self) -> Result<String> {
        self.skip_ws();
        if self.eat_str("s^-1") {
            self.skip_ws();
        }
        self.generator_id().ok_or_else(|| self.unexpected("a generator"))?
    }

    /// `name` or `name(args)`, whitespace inside the parentheses dropped.
    fn generator_id(&mut self) -> Option<Result<String>> {
        let mut id = self.word()?;
        if self.peek() == Some('(') {
            let open = self.pos;
            let mut depth = 0;
            loop {
                match self.peek() {
                    None | Some('[' | ']' | '|' | '<' | '>' | ';') => {
                        return Some(Err(CliError::parse(open, "unclosed `(`")))
                    }
                    Some(c) => {
                        self.pos += 1;
                        if c.is_whitespace() {
                            continue;
                        }
                        id.push(c);
                        match c {
                            '(' => depth += 1,
                            ')' => {
                                depth -= 1;
                                if depth == 0 {
                                    break;
                                }
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
        Some(Ok(id))
    }

    /// `[A-Za-z_][A-Za-z0-9_]*`.
    fn word(&mut self) -> Option<String> {
        let start = self.pos;
        if !self.peek().is_some_and(|c| c.is_ascii_alphabetic() || c == '_') {
            return None;
        }
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        Some(self.chars[start..self.pos].iter().collect())
    }

    fn at_basis(&mut self, vector: bool, var: &dyn Fn(&str) -> Option<usize>) -> bool {
        let save = self.pos;
        let hit = self.basis_element(vector, var).is_ok();
        self.pos = save;
        hit
    }

    /// `dx` for forms, `d/dx` for polyvectors.
    fn basis_element(&mut self, vector: bool, var: &dyn Fn(&str) -> Option<usize>) -> Result<usize> {
        self.skip_ws();
        let p = self.pos;
        if vector && !self.eat_str("d/") {
            return Err(self.unexpected("`d/d`"));
        }
        let Some(id) = self.word() else { return Err(self.unexpected("a differential")) };
        id.strip_prefix('d').and_then(var).ok_or_else(|| {
            self.pos = p;
            CliError::parse(p, format!("`{id}` is not a differential"))
        })
    }
}
