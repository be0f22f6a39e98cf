/*! Noncommutative expressions over the perfect generators.

[`NcElem`] is a finite sum of ordered words in the letters c1..cq with
coefficients that are rational functions in h1, h2, z1, z2. The
coefficients commute with every letter: the h symbols denote Cartan
elements, which commute with all weight-zero words, and the z symbols
denote Casimir elements. Both facts are verified in U(g) by the
Cartan-commutation and centrality suites rather than assumed silently.

The parser accepts the reference-table grammar: `+ - * / ^`,
parentheses, integers, commutators `[a,b]` with `[a,b,c]` read as
`[a,[b,c]]`, and identifiers. Division requires a letter-free divisor.

Relation extraction computes c_i c_j minus its normal form for every
ordered pair, which is the complete length-two relation table.
*/

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::centralizer::normal::{normal_form, word_to_cmono, CentElem, CentralizerContext};
use crate::centralizer::CentError;
use crate::exactmath::{poly_lcm, Poly, RatFn, Symbol};

/// A sum of ordered words in the perfect letters with commuting
/// rational-function coefficients.
#[derive(Clone, PartialEq)]
pub struct NcElem {
    terms: BTreeMap<Vec<u8>, RatFn>,
}

impl NcElem {
    pub fn zero() -> Self {
        NcElem { terms: BTreeMap::new() }
    }

    pub fn scalar(f: RatFn) -> Self {
        let mut terms = BTreeMap::new();
        if !f.is_zero() {
            terms.insert(Vec::new(), f);
        }
        NcElem { terms }
    }

    pub fn letter(k: u8) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![k], RatFn::one());
        NcElem { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &RatFn)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, word: &[u8]) -> RatFn {
        self.terms.get(word).cloned().unwrap_or_else(RatFn::zero)
    }

    pub fn add_term(&mut self, word: Vec<u8>, f: RatFn) {
        if f.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(word) {
            Entry::Vacant(v) => {
                v.insert(f);
            }
            Entry::Occupied(mut o) => {
                let sum = &*o.get() + &f;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &NcElem) -> NcElem {
        let mut out = self.clone();
        for (w, f) in &other.terms {
            out.add_term(w.clone(), f.clone());
        }
        out
    }

    pub fn neg(&self) -> NcElem {
        NcElem {
            terms: self.terms.iter().map(|(w, f)| (w.clone(), -f)).collect(),
        }
    }

    pub fn sub(&self, other: &NcElem) -> NcElem {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &NcElem) -> NcElem {
        let mut out = NcElem::zero();
        for (w1, f1) in &self.terms {
            for (w2, f2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, f1 * f2);
            }
        }
        out
    }

    pub fn commutator(&self, other: &NcElem) -> NcElem {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, n: u32) -> NcElem {
        let mut out = NcElem::scalar(RatFn::one());
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Divide by a letter-free element.
    pub fn div(&self, other: &NcElem) -> Result<NcElem, CentError> {
        if other.num_terms() != 1 {
            return Err(CentError::NonScalarDivisor);
        }
        let (w, f) = other.terms.iter().next().unwrap();
        if !w.is_empty() {
            return Err(CentError::NonScalarDivisor);
        }
        let inv = f.inv().map_err(|_| CentError::NonScalarDivisor)?;
        Ok(NcElem {
            terms: self
                .terms
                .iter()
                .map(|(w, g)| (w.clone(), g * &inv))
                .collect(),
        })
    }

    /// The least common multiple of all coefficient denominators.
    pub fn denominator_lcm(&self) -> Poly {
        let mut lcm = Poly::one();
        for f in self.terms.values() {
            lcm = poly_lcm(&lcm, f.den());
        }
        lcm
    }

    /// Multiply every coefficient by the denominator lcm, returning the
    /// cleared element and the clearing polynomial. Since the lcm is a
    /// polynomial in central symbols, this is left multiplication by a
    /// central element and preserves the truth of `self = 0`.
    pub fn clear_denominators(&self) -> (NcElem, Poly) {
        let lcm = self.denominator_lcm();
        let scale = RatFn::from_poly(lcm.clone());
        let out = NcElem {
            terms: self
                .terms
                .iter()
                .map(|(w, f)| (w.clone(), f * &scale))
                .collect(),
        };
        for f in out.terms.values() {
            assert!(f.is_polynomial(), "lcm failed to clear a denominator");
        }
        (out, lcm)
    }

    /// Reinterpret as a combination of semi-perfect monomials. Errors
    /// when a word is not semi-perfect or a coefficient is not a
    /// polynomial in h1, h2.
    pub fn to_cent_elem(&self, ctx: &CentralizerContext) -> Result<CentElem, CentError> {
        let mut out = CentElem::zero();
        for (word, f) in &self.terms {
            if !ctx.pset().word_is_semi_perfect(word) {
                return Err(CentError::Parse {
                    input: format!("{:?}", word),
                    message: "word is not semi-perfect".into(),
                });
            }
            let poly = f.as_poly().ok_or(CentError::UnclearedDenominator)?.clone();
            for s in poly.active_symbols() {
                if s != Symbol::H1 && s != Symbol::H2 {
                    return Err(CentError::Parse {
                        input: f.to_string(),
                        message: format!("coefficient symbol {} is not h1 or h2", s.name()),
                    });
                }
            }
            out.add_term(word_to_cmono(ctx.pset().q(), word), poly);
        }
        Ok(out)
    }
}

impl fmt::Display for NcElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            for k in w {
                write!(f, "*c{}", k)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NcElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

// ===== Parser =====

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

fn lex(input: &str) -> Result<Vec<Token>, String> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '/' => {
                out.push(Token::Slash);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '(' => {
                out.push(Token::LParen);
                i += 1;
            }
            ')' => {
                out.push(Token::RParen);
                i += 1;
            }
            '[' => {
                out.push(Token::LBracket);
                i += 1;
            }
            ']' => {
                out.push(Token::RBracket);
                i += 1;
            }
            ',' => {
                out.push(Token::Comma);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let n: i64 = text.parse().map_err(|_| format!("bad integer {text}"))?;
                out.push(Token::Int(n));
            }
            'a'..='z' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric()) {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(format!("unexpected character {other:?}")),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    q: usize,
    aliases: &'a HashMap<String, NcElem>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Token) -> Result<(), String> {
        match self.next() {
            Some(got) if got == t => Ok(()),
            got => Err(format!("expected {t:?}, found {got:?}")),
        }
    }

    fn expr(&mut self) -> Result<NcElem, String> {
        let mut negate = false;
        if let Some(Token::Minus) = self.peek() {
            self.next();
            negate = true;
        } else if let Some(Token::Plus) = self.peek() {
            self.next();
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Token::Minus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<NcElem, String> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.next();
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                Some(Token::Slash) => {
                    self.next();
                    let f = self.factor()?;
                    acc = acc.div(&f).map_err(|e| e.to_string())?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<NcElem, String> {
        let base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.next();
            match self.next() {
                Some(Token::Int(n)) if n >= 0 => Ok(base.pow(n as u32)),
                got => Err(format!("expected exponent, found {got:?}")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<NcElem, String> {
        match self.next() {
            Some(Token::Int(n)) => Ok(NcElem::scalar(RatFn::int(n))),
            Some(Token::Ident(name)) => self.resolve(&name),
            Some(Token::LParen) => {
                let e = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(e)
            }
            Some(Token::LBracket) => {
                let mut args = vec![self.expr()?];
                while let Some(Token::Comma) = self.peek() {
                    self.next();
                    args.push(self.expr()?);
                }
                self.expect(Token::RBracket)?;
                if args.len() < 2 {
                    return Err("commutator needs at least two arguments".into());
                }
                // Right-nested: [a, b, c] = [a, [b, c]].
                let mut acc = args.pop().unwrap();
                while let Some(prev) = args.pop() {
                    acc = prev.commutator(&acc);
                }
                Ok(acc)
            }
            got => Err(format!("unexpected token {got:?}")),
        }
    }

    fn resolve(&self, name: &str) -> Result<NcElem, String> {
        match name {
            "h1" => return Ok(NcElem::scalar(RatFn::symbol(Symbol::H1))),
            "h2" => return Ok(NcElem::scalar(RatFn::symbol(Symbol::H2))),
            "z1" => return Ok(NcElem::scalar(RatFn::symbol(Symbol::Z1))),
            "z2" => return Ok(NcElem::scalar(RatFn::symbol(Symbol::Z2))),
            _ => {}
        }
        if let Some(nc) = self.aliases.get(name) {
            return Ok(nc.clone());
        }
        if let Some(rest) = name.strip_prefix('c') {
            if let Ok(k) = rest.parse::<usize>() {
                if k >= 1 && k <= self.q {
                    return Ok(NcElem::letter(k as u8));
                }
                return Err(format!("letter c{k} is out of range 1..={}", self.q));
            }
        }
        Err(format!("unknown identifier {name}"))
    }
}

/// Parse an expression over q letters with the given aliases.
pub fn parse(
    q: usize,
    aliases: &HashMap<String, NcElem>,
    input: &str,
) -> Result<NcElem, CentError> {
    let tokens = lex(input).map_err(|message| CentError::Parse {
        input: input.to_string(),
        message,
    })?;
    let mut p = Parser { tokens, pos: 0, q, aliases };
    let e = p.expr().map_err(|message| CentError::Parse {
        input: input.to_string(),
        message,
    })?;
    if p.pos != p.tokens.len() {
        return Err(CentError::Parse {
            input: input.to_string(),
            message: format!("trailing tokens at position {}", p.pos),
        });
    }
    Ok(e)
}

// ===== Relation checking =====

/// Outcome of verifying one stated identity by expansion in U(g).
pub struct RelationCheck {
    pub lhs: String,
    pub rhs: String,
    /// Polynomial that multiplied the identity to clear denominators,
    /// when it was not 1.
    pub cleared_by: Option<String>,
    pub ok: bool,
}

/// Verify lhs = rhs by expanding lhs - rhs to zero in U(g) after
/// clearing coefficient denominators by a central polynomial.
pub fn check_identity(
    ctx: &CentralizerContext,
    lhs: &str,
    rhs: &str,
) -> Result<RelationCheck, CentError> {
    let l = ctx.parse(lhs)?;
    let r = ctx.parse(rhs)?;
    let diff = l.sub(&r);
    let (cleared, lcm) = diff.clear_denominators();
    let expanded = ctx.expand_nc(&cleared)?;
    Ok(RelationCheck {
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        cleared_by: if lcm.is_constant() { None } else { Some(lcm.to_string()) },
        ok: expanded.is_zero(),
    })
}

/// One extracted relation: an ordered product of letters and its
/// normal form over the semi-perfect basis.
pub struct Relation {
    pub lhs_word: Vec<u8>,
    pub rhs: CentElem,
    /// Number of letters on the left.
    pub length: usize,
    /// True when the product is itself semi-perfect, so the relation
    /// only restates the basis element.
    pub trivial: bool,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word: Vec<String> = self.lhs_word.iter().map(|k| format!("c{}", k)).collect();
        write!(f, "{} = {}", word.join("*"), self.rhs)
    }
}

/// Compute the normal form of every ordered product of up to
/// `max_length` letters. Length-one products are included for
/// completeness and are always trivial.
pub fn extract_relations(
    ctx: &CentralizerContext,
    max_length: usize,
) -> Result<Vec<Relation>, CentError> {
    let q = ctx.pset().q() as u8;
    let mut words: Vec<Vec<u8>> = vec![Vec::new()];
    let mut out = Vec::new();
    for len in 1..=max_length {
        let mut next = Vec::new();
        for w in &words {
            for k in 1..=q {
                let mut v = w.clone();
                v.push(k);
                next.push(v);
            }
        }
        for w in &next {
            let element = ctx.word_element(w);
            let rhs = normal_form(ctx, &element)?;
            out.push(Relation {
                lhs_word: w.clone(),
                rhs,
                length: len,
                trivial: ctx.pset().word_is_semi_perfect(w),
            });
        }
        words = next;
    }
    Ok(out)
}

/// Compute the normal form of one ordered product.
pub fn relation_for_word(
    ctx: &CentralizerContext,
    word: &[u8],
) -> Result<Relation, CentError> {
    let element = ctx.word_element(word);
    let rhs = normal_form(ctx, &element)?;
    Ok(Relation {
        lhs_word: word.to_vec(),
        rhs,
        length: word.len(),
        trivial: ctx.pset().word_is_semi_perfect(word),
    })
}

/// Report produced when a stated identity fails: the derived right
/// side is recomputed from first principles and the differing basis
/// terms are listed.
pub struct ErratumReport {
    pub lhs: String,
    pub printed_rhs: String,
    pub derived_rhs: CentElem,
    /// Terms of printed minus derived, over the semi-perfect basis.
    pub discrepancy: CentElem,
}

/// Derive the correct normal form for a product word and compare it
/// with a stated right-hand side.
pub fn erratum_for(
    ctx: &CentralizerContext,
    lhs: &str,
    printed_rhs: &str,
) -> Result<ErratumReport, CentError> {
    let l = ctx.parse(lhs)?;
    // The left side must be a single product word with coefficient 1.
    let mut words: Vec<Vec<u8>> = l.terms().map(|(w, _)| w.clone()).collect();
    if words.len() != 1 {
        return Err(CentError::Parse {
            input: lhs.to_string(),
            message: "erratum analysis needs a single product word".into(),
        });
    }
    let word = words.pop().unwrap();
    let derived = relation_for_word(ctx, &word)?.rhs;
    let printed = ctx.parse(printed_rhs)?.to_cent_elem(ctx)?;
    let discrepancy = printed.sub(&derived);
    Ok(ErratumReport {
        lhs: lhs.to_string(),
        printed_rhs: printed_rhs.to_string(),
        derived_rhs: derived,
        discrepancy,
    })
}

// ===== Tests =====
