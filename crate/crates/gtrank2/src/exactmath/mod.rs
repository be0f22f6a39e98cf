/*! Exact scalar arithmetic: arbitrary-precision rationals, sparse
multivariate polynomials over a fixed symbol registry, and rational
functions kept in canonical form (gcd removed, monic denominator).

Every coefficient that appears anywhere in the crate lives here. The
symbol registry is closed: the sixteen names cover the module-family
parameters (`a1..a4`, `xi`, `mu`, `upsilon`, `t1`, `t2`), the Cartan
and Casimir symbols used by relation coefficients (`h1`, `h2`, `z1`,
`z2`), and the lattice indices (`i`, `j`, `k`). A closed registry keeps
monomials as fixed-size exponent arrays and makes the canonical-form
story entirely order-based, with no dynamic variable maps.
*/

mod gcd;
mod poly;
mod ratfn;
mod sym;

pub use gcd::{poly_div_exact, poly_gcd, poly_lcm};
pub use poly::{Exp, Mono, Poly, Polynomial};
pub use ratfn::{rf_simplify_equal, RatFn};
pub use sym::{Symbol, NSYM};

use num::BigInt;
use thiserror::Error;

/// Arbitrary-precision rational scalar. `num::BigRational` already
/// maintains the reduced-form and positive-denominator invariants this
/// crate relies on; the invariant tests below pin that contract.
pub type Rational = num::BigRational;

/// `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` as a rational. Panics on `d == 0`: callers only pass literal
/// denominators.
pub fn rat(n: i64, d: i64) -> Rational {
    assert!(d != 0, "rational literal with zero denominator");
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Division that surfaces the zero divisor as an error value instead
/// of panicking.
pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational, EvalError> {
    if b == &Rational::from_integer(BigInt::from(0)) {
        Err(EvalError::DivisionByZero)
    } else {
        Ok(a / b)
    }
}

/// Render `q` as `n` or `n/d`.
pub fn rat_string(q: &Rational) -> String {
    if q.denom() == &BigInt::from(1) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parse `n` or `n/d` into a rational.
pub fn parse_rat(s: &str) -> Result<Rational, EvalError> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt, EvalError> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| EvalError::BadLiteral(s.to_string()))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d == BigInt::from(0) {
                return Err(EvalError::BadLiteral(s.to_string()));
            }
            Ok(Rational::new(parse_int(n)?, d))
        }
    }
}

/// Errors from evaluating or parsing exact scalars.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("symbol {0} is not bound")]
    UnboundSymbol(Symbol),
    #[error("denominator vanishes at the evaluation point")]
    Pole,
    #[error("malformed rational literal: {0}")]
    BadLiteral(String),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_invariants_hold_after_arithmetic() {
        let a = rat(6, -4);
        // num reduces and normalizes the sign into the numerator.
        assert_eq!(a, rat(-3, 2));
        assert!(a.denom() > &BigInt::from(0));
        let b = rat(1, 2) + rat(1, 3);
        assert_eq!(b, rat(5, 6));
        assert_eq!(rat(14, 3) * rat_int(3), rat_int(14));
    }

    #[test]
    fn checked_div_flags_zero() {
        assert_eq!(
            checked_div(&rat(7, 5), &rat_int(0)),
            Err(EvalError::DivisionByZero)
        );
        assert_eq!(checked_div(&rat(7, 5), &rat_int(7)), Ok(rat(1, 5)));
    }

    #[test]
    fn rational_strings_round_trip() {
        for s in ["0", "-7", "5/6", "-14/275"] {
            assert_eq!(rat_string(&parse_rat(s).unwrap()), s);
        }
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }
}
