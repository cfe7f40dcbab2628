//! Sparse multivariate polynomials over a prime field.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::Monomial;

/// A polynomial as a strictly grevlex-descending list of nonzero terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    field: PrimeField,
    terms: Vec<(Monomial, u32)>,
}

impl Polynomial {
    pub fn zero(nvars: usize, field: PrimeField) -> Self {
        Polynomial { nvars, field, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, field: PrimeField, c: i64) -> Self {
        Self::term(Monomial::one(nvars), field.reduce_i64(c), field)
    }

    pub fn term(mono: Monomial, coeff: u32, field: PrimeField) -> Self {
        let nvars = mono.nvars();
        let coeff = coeff % field.char();
        let terms = if coeff == 0 { Vec::new() } else { vec![(mono, coeff)] };
        Polynomial { nvars, field, terms }
    }

    pub fn var(nvars: usize, field: PrimeField, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), 1, field)
    }

    /// Collects arbitrary `(monomial, coefficient)` pairs into canonical form.
    pub fn from_terms(nvars: usize, field: PrimeField, terms: impl IntoIterator<Item = (Monomial, u32)>) -> Self {
        let mut acc: BTreeMap<Monomial, u32> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            let e = acc.entry(m).or_insert(0);
            *e = field.add(*e, c % field.char());
        }
        let terms = acc.into_iter().rev().filter(|(_, c)| *c != 0).collect();
        Polynomial { nvars, field, terms }
    }

    /// Internal constructor for already canonical term lists.
    pub(crate) fn from_sorted(nvars: usize, field: PrimeField, terms: Vec<(Monomial, u32)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| *c != 0));
        Polynomial { nvars, field, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, u32)> {
        self.terms.first()
    }

    /// Common degree of all terms; `None` for zero or inhomogeneous input.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|(m, _)| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Constant coefficient (0 if absent).
    pub fn constant_coeff(&self) -> u32 {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => *c,
            _ => 0,
        }
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars || self.field != other.field {
            return Err(Error::Structure(format!(
                "operands live in different rings ({} vs {} variables, p={} vs p={})",
                self.nvars,
                other.nvars,
                self.field.char(),
                other.field.char()
            )));
        }
        Ok(())
    }

    /// `self + c * mono * other`, merging the two sorted term lists.
    pub fn add_scaled(&self, c: u32, mono: &Monomial, other: &Polynomial) -> Polynomial {
        let f = self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(m, k)| (m.mul(mono), f.mul(*k, c))).filter(|(_, k)| *k != 0).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some((ma, _)), Some((mb, _))) => match ma.cmp(mb) {
                    std::cmp::Ordering::Greater => out.push(a.next().unwrap().clone()),
                    std::cmp::Ordering::Less => out.push(b.next().unwrap()),
                    std::cmp::Ordering::Equal => {
                        let (m, ka) = a.next().unwrap();
                        let (_, kb) = b.next().unwrap();
                        let s = f.add(*ka, kb);
                        if s != 0 {
                            out.push((m.clone(), s));
                        }
                    }
                },
            }
        }
        Polynomial { nvars: self.nvars, field: f, terms: out }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        Ok(self.add_scaled(1, &Monomial::one(self.nvars), other))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        Ok(self.add_scaled(self.field.neg(1), &Monomial::one(self.nvars), other))
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.field.neg(1))
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let f = self.field;
        let c = c % f.char();
        if c == 0 {
            return Polynomial::zero(self.nvars, f);
        }
        let terms = self.terms.iter().map(|(m, k)| (m.clone(), f.mul(*k, c))).collect();
        Polynomial { nvars: self.nvars, field: f, terms }
    }

    pub fn mul_term(&self, mono: &Monomial, c: u32) -> Polynomial {
        let f = self.field;
        let c = c % f.char();
        if c == 0 {
            return Polynomial::zero(self.nvars, f);
        }
        // multiplication by a monomial preserves the order
        let terms = self.terms.iter().map(|(m, k)| (m.mul(mono), f.mul(*k, c))).collect();
        Polynomial { nvars: self.nvars, field: f, terms }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let f = self.field;
        let mut acc: BTreeMap<Monomial, u32> = BTreeMap::new();
        for (ma, ka) in &self.terms {
            for (mb, kb) in &other.terms {
                let e = acc.entry(ma.mul(mb)).or_insert(0);
                *e = f.add(*e, f.mul(*ka, *kb));
            }
        }
        let terms = acc.into_iter().rev().filter(|(_, c)| *c != 0).collect();
        Ok(Polynomial { nvars: self.nvars, field: f, terms })
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::constant(self.nvars, self.field, 1);
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Substitutes `images[i]` for variable `i`.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.nvars {
            return Err(Error::Structure("substitution needs one image per variable".into()));
        }
        let n = images.first().map(|p| p.nvars).unwrap_or(self.nvars);
        let mut out = Polynomial::zero(n, self.field);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(n, self.field, *c as i64);
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&images[i].pow(e as u32))?;
                }
            }
            out = out.add(&t)?;
        }
        Ok(out)
    }

    /// Leading-coefficient normalization.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(self.field.inv(*c).expect("nonzero leading coefficient")),
        }
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let sc = self.field.signed(*c);
            let (neg, mag) = if sc < 0 { (true, -sc) } else { (false, sc) };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { "-" } else { "+" });
            }
            if m.is_one() {
                s.push_str(&mag.to_string());
            } else {
                if mag != 1 {
                    s.push_str(&format!("{mag}*"));
                }
                s.push_str(&m.fmt_with(names));
            }
        }
        s
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.fmt_with(&names))
    }
}

/// Parses text in the grammar
/// `poly := term (('+'|'-') term)*`, `term := factor ('*' factor)*`,
/// `factor := integer | var ('^' integer)?`.
pub fn parse_poly(text: &str, names: &[String], field: PrimeField) -> Result<Polynomial> {
    Parser { src: text.as_bytes(), pos: 0, names, field }.poly()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [String],
    field: PrimeField,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let n = self.names.len();
        let f = self.field;
        let mut acc: Vec<(Monomial, u32)> = Vec::new();
        let mut sign = 1u32;
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                sign = f.neg(1);
            }
            Some(b'+') => self.pos += 1,
            None => return self.err("empty polynomial"),
            _ => {}
        }
        loop {
            let (m, c) = self.term()?;
            acc.push((m, f.mul(c, sign)));
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = f.neg(1);
                }
                Some(ch) => return self.err(format!("unexpected character '{}'", ch as char)),
            }
        }
        Ok(Polynomial::from_terms(n, f, acc))
    }

    fn term(&mut self) -> Result<(Monomial, u32)> {
        let n = self.names.len();
        let mut exps = vec![0u16; n];
        let mut coeff = 1u32;
        loop {
            match self.peek() {
                Some(ch) if ch.is_ascii_digit() => {
                    let v = self.integer()?;
                    coeff = self.field.mul(coeff, (v % self.field.char() as u64) as u32);
                }
                Some(ch) if ch.is_ascii_alphabetic() || ch == b'_' => {
                    let start = self.pos;
                    while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                        self.pos += 1;
                    }
                    let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    let Some(idx) = self.names.iter().position(|v| v == name) else {
                        self.pos = start;
                        return self.err(format!("unknown variable '{name}'"));
                    };
                    let mut e = 1u64;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                            return self.err("expected exponent after '^'");
                        }
                        e = self.integer()?;
                    }
                    let total = exps[idx] as u64 + e;
                    if total > u16::MAX as u64 {
                        return self.err("exponent too large");
                    }
                    exps[idx] = total as u16;
                }
                Some(ch) => return self.err(format!("expected a variable or integer, found '{}'", ch as char)),
                None => return self.err("unexpected end of input"),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial::from_exps(&exps), coeff))
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        s.parse::<u64>().or_else(|_| {
            self.pos = start;
            self.err("integer literal out of range")
        })
    }
}
