/*! Sparse multivariate polynomials over the fixed symbol registry.

A monomial is a fixed-size exponent array ordered graded-lex (total
degree first, then exponent-array comparison), which fixes a canonical
term order for printing, leading-term extraction, and denominator
normalization. A polynomial is a sorted term map with no stored zero
coefficients, so structural equality is mathematical equality.

The scalar type is generic over the light [`Coeff`] bound but the crate
instantiates it at [`Rational`] only; [`Poly`] is that alias. The
genericity keeps the arithmetic honest (nothing here peeks inside the
scalar) without dragging in a numeric tower.
*/

use super::sym::{Symbol, NSYM};
use super::{rat_int, rat_string, EvalError, Rational};
use num::{One, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent type; coefficient polynomials in this crate stay far below
/// this bound (the deepest products are degree ~12).
pub type Exp = u16;

/// A power product over the registry, e.g. `a1^2 * i * k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mono(pub [Exp; NSYM]);

impl Mono {
    pub fn unit() -> Mono {
        Mono([0; NSYM])
    }

    pub fn symbol(s: Symbol) -> Mono {
        let mut e = [0; NSYM];
        e[s.index()] = 1;
        Mono(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn degree_in(&self, s: Symbol) -> Exp {
        self.0[s.index()]
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a = a.checked_add(*b).expect("monomial exponent overflow");
        }
        Mono(e)
    }

    /// Componentwise quotient; `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a = a.checked_sub(*b)?;
        }
        Some(Mono(e))
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| Symbol::from_index(i))
    }
}

// Graded-lex: higher total degree first; ties broken by the exponent
// array, earlier registry symbols weighing more.
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        let mut first = true;
        for s in self.symbols() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            let e = self.degree_in(s);
            if e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Scalar bound for polynomial coefficients.
pub trait Coeff: Clone + PartialEq + Zero + One + Neg<Output = Self> {}
impl<T: Clone + PartialEq + Zero + One + Neg<Output = T>> Coeff for T {}

/// Sparse polynomial; the term map never stores zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial<C: Coeff> {
    terms: BTreeMap<Mono, C>,
}

/// The only instantiation used by the crate.
pub type Poly = Polynomial<Rational>;

impl<C: Coeff> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(Mono::unit(), c);
        p
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn symbol(s: Symbol) -> Self {
        let mut p = Self::zero();
        p.add_term(Mono::symbol(s), C::one());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Mono, C)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_unit())
    }

    /// The constant value when `self` is constant.
    pub fn as_constant(&self) -> Option<C> {
        if self.is_zero() {
            Some(C::zero())
        } else if self.is_constant() {
            self.terms.get(&Mono::unit()).cloned()
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, s: Symbol) -> Exp {
        self.terms
            .keys()
            .map(|m| m.degree_in(s))
            .max()
            .unwrap_or(0)
    }

    /// Largest monomial under graded-lex, with its coefficient.
    pub fn leading_term(&self) -> Option<(&Mono, &C)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Mono, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = {
                    let cur = e.get().clone();
                    add_c(cur, c)
                };
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_terms(
            self.terms
                .iter()
                .map(|(m, v)| (*m, mul_c(v.clone(), c.clone()))),
        )
    }

    pub fn mul_mono(&self, m: &Mono, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_terms(
            self.terms
                .iter()
                .map(|(t, v)| (t.mul(m), mul_c(v.clone(), c.clone()))),
        )
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Symbols with nonzero degree somewhere in the polynomial.
    pub fn active_symbols(&self) -> Vec<Symbol> {
        let mut mask = [false; NSYM];
        for m in self.terms.keys() {
            for s in m.symbols() {
                mask[s.index()] = true;
            }
        }
        mask.iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| Symbol::from_index(i))
            .collect()
    }

    /// View as univariate in `s`: coefficient polynomials by exponent,
    /// index 0 = constant coefficient. Empty vector for the zero poly.
    pub fn coeffs_in(&self, s: Symbol) -> Vec<Self> {
        if self.is_zero() {
            return Vec::new();
        }
        let d = self.degree_in(s) as usize;
        let mut out = vec![Self::zero(); d + 1];
        for (m, c) in &self.terms {
            let e = m.degree_in(s) as usize;
            let mut m2 = *m;
            m2.0[s.index()] = 0;
            out[e].add_term(m2, c.clone());
        }
        out
    }

    /// Rebuild from a univariate view in `s`.
    pub fn from_coeffs_in(s: Symbol, coeffs: &[Self]) -> Self {
        let mut out = Self::zero();
        for (e, p) in coeffs.iter().enumerate() {
            let mut powm = Mono::unit();
            powm.0[s.index()] = e as Exp;
            for (m, c) in &p.terms {
                out.add_term(m.mul(&powm), c.clone());
            }
        }
        out
    }

    /// Substitute a polynomial for a symbol.
    pub fn substitute(&self, s: Symbol, value: &Self) -> Self {
        let coeffs = self.coeffs_in(s);
        let mut out = Self::zero();
        let mut power = Self::one();
        for c in coeffs {
            out = &out + &(&c * &power);
            power = &power * value;
        }
        out
    }
}

// Add and Mul come in through the Zero/One supertraits.
fn add_c<C: Coeff>(a: C, b: C) -> C {
    a + b
}

fn mul_c<C: Coeff>(a: C, b: C) -> C {
    a * b
}

impl<C: Coeff> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<C: Coeff> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<C: Coeff> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (*m, -c.clone())))
    }
}

impl<C: Coeff> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), mul_c(c1.clone(), c2.clone()));
            }
        }
        out
    }
}

impl Poly {
    pub fn int(n: i64) -> Poly {
        Poly::constant(rat_int(n))
    }

    /// Exact evaluation; every active symbol must be bound.
    pub fn eval(&self, bind: &dyn Fn(Symbol) -> Option<Rational>) -> Result<Rational, EvalError> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for s in m.symbols() {
                let v = bind(s).ok_or(EvalError::UnboundSymbol(s))?;
                for _ in 0..m.degree_in(s) {
                    term *= v.clone();
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Leading coefficient under graded-lex; zero for the zero poly.
    pub fn leading_coeff(&self) -> Rational {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Divide every coefficient by `c` (nonzero).
    pub fn div_scalar(&self, c: &Rational) -> Poly {
        assert!(!c.is_zero(), "scalar division by zero polynomial scale");
        let inv = Rational::one() / c.clone();
        self.scale(&inv)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // Canonical print order: graded-lex descending.
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    f.write_str("-")?;
                }
                first = false;
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let coeff_is_one = abs.is_one();
            if m.is_unit() {
                f.write_str(&rat_string(&abs))?;
            } else if coeff_is_one {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", rat_string(&abs))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn x() -> Poly {
        Poly::symbol(Symbol::I)
    }
    fn y() -> Poly {
        Poly::symbol(Symbol::J)
    }

    #[test]
    fn grlex_orders_by_degree_then_lex() {
        let m1 = Mono::symbol(Symbol::A1); // degree 1
        let m2 = Mono::symbol(Symbol::K).mul(&Mono::symbol(Symbol::K)); // degree 2
        assert!(m1 < m2);
        // Same degree: earlier symbol (a1) outweighs later (k).
        let m3 = Mono::symbol(Symbol::A1).mul(&Mono::symbol(Symbol::K));
        let m4 = Mono::symbol(Symbol::K).mul(&Mono::symbol(Symbol::K));
        assert!(m3 > m4);
    }

    #[test]
    fn arithmetic_cancels_exactly() {
        let p = &(&x() + &y()) * &(&x() - &y());
        let q = &(&x() * &x()) - &(&y() * &y());
        assert_eq!(p, q);
        assert!((&p - &q).is_zero());
    }

    #[test]
    fn substitution_shifts_indices() {
        // i -> i + 1 in (i^2 - j)
        let p = &(&x() * &x()) - &y();
        let shifted = p.substitute(Symbol::I, &(&x() + &Poly::int(1)));
        let expected = &(&(&x() * &x()) + &(&x().scale(&rat_int(2)) + &Poly::int(1))) - &y();
        assert_eq!(shifted, expected);
    }

    #[test]
    fn eval_is_exact() {
        // a3 - j + 2k - 1 at {a3 -> 1/2, j -> 0, k -> 0} = -1/2
        let p = &(&(&Poly::symbol(Symbol::A3) - &y()) + &Poly::symbol(Symbol::K).scale(&rat_int(2)))
            - &Poly::int(1);
        let v = p
            .eval(&|s| match s {
                Symbol::A3 => Some(rat(1, 2)),
                Symbol::J => Some(rat_int(0)),
                Symbol::K => Some(rat_int(0)),
                _ => None,
            })
            .unwrap();
        assert_eq!(v, rat(-1, 2));
    }

    #[test]
    fn coeffs_in_round_trips() {
        let p = &(&(&x() * &x()) * &y()) + &(&x() + &Poly::int(3));
        let cs = p.coeffs_in(Symbol::I);
        assert_eq!(cs.len(), 3);
        assert_eq!(Poly::from_coeffs_in(Symbol::I, &cs), p);
    }

    #[test]
    fn display_is_canonical() {
        let p = &(&y() - &x()) + &Poly::int(2);
        assert_eq!(p.to_string(), "-i + j + 2");
    }
}
