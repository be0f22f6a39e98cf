/*! Rational functions in canonical form.

A value is a pair of polynomials with the gcd divided out and the
denominator made monic in its graded-lex leading coefficient. With both
normalizations applied, structural equality is mathematical equality,
so `PartialEq` derives and maps can key on values directly.
*/

use super::gcd::{poly_div_exact, poly_gcd};
use super::poly::Poly;
use super::sym::Symbol;
use super::{EvalError, Rational};
use num::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// `num / den` with `den` nonzero, `gcd(num, den) = 1`, `den` monic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

impl RatFn {
    pub fn new(num: Poly, den: Poly) -> RatFn {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFn {
                num,
                den: Poly::one(),
            };
        }
        let g = poly_gcd(&num, &den);
        let mut num = poly_div_exact(&num, &g);
        let mut den = poly_div_exact(&den, &g);
        let lc = den.leading_coeff();
        if !lc.is_one() {
            num = num.div_scalar(&lc);
            den = den.div_scalar(&lc);
        }
        RatFn { num, den }
    }

    pub fn from_poly(p: Poly) -> RatFn {
        RatFn {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn from_rat(q: Rational) -> RatFn {
        RatFn::from_poly(Poly::constant(q))
    }

    pub fn int(n: i64) -> RatFn {
        RatFn::from_poly(Poly::int(n))
    }

    pub fn symbol(s: Symbol) -> RatFn {
        RatFn::from_poly(Poly::symbol(s))
    }

    pub fn zero() -> RatFn {
        RatFn::from_poly(Poly::zero())
    }

    pub fn one() -> RatFn {
        RatFn::from_poly(Poly::one())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == Poly::one() && self.den == Poly::one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den == Poly::one()
    }

    /// The polynomial content when the denominator is trivial.
    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_polynomial() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<RatFn, EvalError> {
        if self.is_zero() {
            return Err(EvalError::DivisionByZero);
        }
        Ok(RatFn::new(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, n: u32) -> RatFn {
        let mut acc = RatFn::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at fully bound symbols; poles are errors.
    pub fn eval(&self, bind: &dyn Fn(Symbol) -> Option<Rational>) -> Result<Rational, EvalError> {
        let d = self.den.eval(bind)?;
        if d.is_zero() {
            return Err(EvalError::Pole);
        }
        Ok(self.num.eval(bind)? / d)
    }

    /// Evaluation from a plain binding map.
    pub fn eval_map(&self, bind: &BTreeMap<Symbol, Rational>) -> Result<Rational, EvalError> {
        self.eval(&|s| bind.get(&s).cloned())
    }

    /// Substitute a rational function for a symbol (used for index
    /// shifts like `j -> j + 1` and for parameter elimination).
    pub fn substitute(&self, s: Symbol, value: &RatFn) -> RatFn {
        let sub_poly = |p: &Poly| -> RatFn {
            let coeffs = p.coeffs_in(s);
            let mut out = RatFn::zero();
            let mut power = RatFn::one();
            for c in coeffs {
                out = &out + &(&RatFn::from_poly(c) * &power);
                power = &power * value;
            }
            out
        };
        let n = sub_poly(&self.num);
        let d = sub_poly(&self.den);
        assert!(!d.is_zero(), "substitution produced a zero denominator");
        &n / &d
    }

    /// Shift an index symbol by an integer: `s -> s + delta`.
    pub fn shift_index(&self, s: Symbol, delta: i64) -> RatFn {
        if delta == 0 {
            return self.clone();
        }
        let shifted = &RatFn::symbol(s) + &RatFn::int(delta);
        self.substitute(s, &shifted)
    }

    pub fn active_symbols(&self) -> Vec<Symbol> {
        let mut v = self.num.active_symbols();
        for s in self.den.active_symbols() {
            if !v.contains(&s) {
                v.push(s);
            }
        }
        v.sort();
        v
    }
}

/// Cross-multiplied identity test `f == g`, independent of the
/// canonicalization path either side took.
pub fn rf_simplify_equal(f: &RatFn, g: &RatFn) -> bool {
    (&f.num * &g.den) == (&g.num * &f.den)
}

impl Add for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: Self) -> RatFn {
        RatFn::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: Self) -> RatFn {
        RatFn::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: Self) -> RatFn {
        RatFn::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFn {
    type Output = RatFn;
    fn div(self, rhs: Self) -> RatFn {
        assert!(!rhs.is_zero(), "rational function division by zero");
        RatFn::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, rat_int};
    use proptest::prelude::*;

    fn x() -> RatFn {
        RatFn::symbol(Symbol::H1)
    }

    #[test]
    fn cancellation_is_automatic() {
        // (x^2 - 1) / (x - 1) == x + 1
        let f = &(&(&x() * &x()) - &RatFn::int(1)) / &(&x() - &RatFn::int(1));
        assert_eq!(f, &x() + &RatFn::int(1));
        assert!(rf_simplify_equal(&f, &(&x() + &RatFn::int(1))));
        assert!(!rf_simplify_equal(&x(), &(&x() + &RatFn::int(1))));
    }

    #[test]
    fn x_over_x_is_one_everywhere_defined() {
        let f = &x() / &x();
        assert!(f.is_one());
        assert_eq!(f.eval(&|_| Some(rat_int(5))).unwrap(), rat_int(1));
    }

    #[test]
    fn pole_and_unbound_are_reported() {
        let s = RatFn::symbol(Symbol::A3);
        let f = &RatFn::symbol(Symbol::UPSILON) / &s;
        assert_eq!(
            f.eval(&|sym| (sym == Symbol::A3).then(|| rat_int(0))),
            Err(EvalError::Pole)
        );
        assert_eq!(
            s.eval(&|_| None),
            Err(EvalError::UnboundSymbol(Symbol::A3))
        );
    }

    #[test]
    fn shift_index_composes() {
        let k = RatFn::symbol(Symbol::K);
        let f = &k * &k;
        let g = f.shift_index(Symbol::K, 2).shift_index(Symbol::K, -2);
        assert_eq!(f, g);
    }

    // ===== Field laws on random small rational functions =====

    fn arb_rf() -> impl Strategy<Value = RatFn> {
        (proptest::collection::vec((-4i64..=4, 0u16..3), 0..3)).prop_map(|ts| {
            let mut p = Poly::zero();
            for (c, e) in ts {
                let mut m = super::super::poly::Mono::unit();
                m.0[Symbol::H1.index()] = e;
                p.add_term(m, rat_int(c));
            }
            RatFn::from_poly(p)
        })
    }

    proptest! {
        #[test]
        fn add_mul_distribute(a in arb_rf(), b in arb_rf(), c in arb_rf()) {
            let lhs = &a * &(&b + &c);
            let rhs = &(&a * &b) + &(&a * &c);
            prop_assert_eq!(lhs, rhs);
        }
    }

    proptest! {
        #[test]
        fn eval_commutes_with_arithmetic(a in arb_rf(), b in arb_rf(), n in -5i64..=5, d in 1i64..=5) {
            let at = rat(n, d);
            let bind = |_s: Symbol| Some(at.clone());
            let ab = (&a * &b).eval(&bind).unwrap();
            prop_assert_eq!(ab, a.eval(&bind).unwrap() * b.eval(&bind).unwrap());
            let sum = (&a + &b).eval(&bind).unwrap();
            prop_assert_eq!(sum, a.eval(&bind).unwrap() + b.eval(&bind).unwrap());
        }
    }

    proptest! {
        #[test]
        fn canonical_form_is_path_independent(a in arb_rf(), b in arb_rf()) {
            prop_assume!(!b.is_zero());
            // (a*b)/b rebuilt the long way equals a.
            let f = &(&a * &b) / &b;
            prop_assert_eq!(f, a);
        }
    }
}
