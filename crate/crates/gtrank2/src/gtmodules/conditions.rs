/*! Integer-zero predicates for the indexed coefficient forms.

The structural theorems for the lattice modules are quantified over
all integer lattice points: a module is torsion-free when a fixed list
of affine coefficient forms never vanishes at any point of Z^3, and
simple when an additional family-specific list never vanishes either.
Each such form is affine in the indices i, j, k once the parameters
are substituted, so the quantified statement reduces to integer
linear-diophantine solvability: after clearing denominators of the
index coefficients, a zero exists exactly when the constant term is an
integer divisible by the gcd of the coefficients, and a witness point
falls out of the extended Euclidean algorithm.

The predicates here are the closed-form side of a two-route check: the
test blocks and the acceptance suite compare them against brute-force
window scans of the same forms.
*/

use super::coeffs::{A2Coeffs, C2Coeffs, G2Coeffs};
use super::table::{Family, ParameterPoint};
use super::window::LatticeWindow;
use super::{is_integer, rat_display, to_i64, GtError};
use crate::exactmath::{rat_int, RatFn, Rational, Symbol};
use num::{BigInt, Integer, One, Zero};
use std::fmt;

// ===== Affine index forms =====

/// An affine form `constant + coeffs . (i, j, k)` with integer index
/// coefficients, stored up to a positive rational multiple of the
/// original coefficient form. Scaling preserves the zero set, which is
/// the only thing the structural conditions consult.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexForm {
    pub label: String,
    pub constant: Rational,
    pub coeffs: [i64; 3],
}

impl IndexForm {
    /// Extract the affine form of a coefficient function whose
    /// parameters are already substituted, leaving only i, j, k.
    ///
    /// The zero set taken is that of the numerator: for polynomial
    /// forms this is the form itself, and for the ladder quotients it
    /// is the stated numerator non-vanishing condition.
    pub fn from_ratfn(label: &str, f: &RatFn) -> Result<IndexForm, GtError> {
        let mut constant = Rational::zero();
        let mut index = [Rational::zero(), Rational::zero(), Rational::zero()];
        for (mono, coeff) in f.num().terms() {
            if mono.is_unit() {
                constant = &constant + coeff;
                continue;
            }
            if mono.degree() != 1 {
                return Err(GtError::NotAffine(format!(
                    "{label}: nonlinear term {mono}"
                )));
            }
            let s = mono.symbols().next().expect("degree-one monomial names a symbol");
            let slot = match s {
                Symbol::I => 0,
                Symbol::J => 1,
                Symbol::K => 2,
                other => {
                    return Err(GtError::NotAffine(format!(
                        "{label}: unbound parameter {other}"
                    )))
                }
            };
            index[slot] = &index[slot] + coeff;
        }
        // Clear the denominators of the index coefficients; the
        // constant may stay a non-integer rational.
        let mut l = BigInt::one();
        for c in &index {
            l = l.lcm(c.denom());
        }
        let scale = Rational::from_integer(l);
        let mut coeffs = [0i64; 3];
        for (slot, c) in index.iter().enumerate() {
            let cleared = c * &scale;
            assert!(is_integer(&cleared), "lcm clears every index coefficient");
            coeffs[slot] = to_i64(&cleared);
        }
        Ok(IndexForm {
            label: label.to_string(),
            constant: &constant * &scale,
            coeffs,
        })
    }

    /// Exact value at a lattice point.
    pub fn eval(&self, p: [i64; 3]) -> Rational {
        let mut v = self.constant.clone();
        for (c, x) in self.coeffs.iter().zip(p.iter()) {
            v += rat_int(c * x);
        }
        v
    }

    /// Whether the form vanishes anywhere on Z^3.
    pub fn has_integer_zero(&self) -> bool {
        if self.coeffs.iter().all(|&c| c == 0) {
            return self.constant.is_zero();
        }
        if !is_integer(&self.constant) {
            return false;
        }
        let g = self.coeffs.iter().fold(0i64, |g, &c| g.gcd(&c));
        to_i64(&self.constant) % g == 0
    }

    /// A witness zero on Z^3, from composed extended Euclid.
    pub fn integer_zero(&self) -> Option<[i64; 3]> {
        if self.coeffs.iter().all(|&c| c == 0) {
            return self.constant.is_zero().then_some([0, 0, 0]);
        }
        if !is_integer(&self.constant) {
            return None;
        }
        let target = -to_i64(&self.constant);
        let [n0, n1, n2] = self.coeffs;
        let e01 = n0.extended_gcd(&n1);
        let e = e01.gcd.extended_gcd(&n2);
        if e.gcd == 0 || target % e.gcd != 0 {
            return None;
        }
        let t = (target / e.gcd) as i128;
        let raw = [
            e01.x as i128 * e.x as i128 * t,
            e01.y as i128 * e.x as i128 * t,
            e.y as i128 * t,
        ];
        let p = raw.map(|v| i64::try_from(v).expect("witness fits in i64"));
        assert!(self.eval(p).is_zero(), "extended-gcd witness is a zero");
        Some(p)
    }

    /// First zero inside a finite window, by direct scan. This is the
    /// brute-force route the closed-form predicate is checked against.
    pub fn zero_in(&self, w: &LatticeWindow) -> Option<[i64; 3]> {
        w.points().find(|&p| self.eval(p).is_zero())
    }
}

impl fmt::Display for IndexForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.label, rat_display(&self.constant))?;
        for (c, name) in self.coeffs.iter().zip(["i", "j", "k"]) {
            match *c {
                0 => {}
                1 => write!(f, " + {name}")?,
                -1 => write!(f, " - {name}")?,
                c if c > 0 => write!(f, " + {c}*{name}")?,
                c => write!(f, " - {}*{name}", -c)?,
            }
        }
        Ok(())
    }
}

// ===== Family condition lists =====

fn form(label: &str, point: &ParameterPoint, f: &RatFn) -> Result<IndexForm, GtError> {
    IndexForm::from_ratfn(label, &point.substitute_into(f))
}

/// The forms whose non-vanishing on Z^3 is the torsion-free condition
/// of the family.
pub fn torsion_free_forms(point: &ParameterPoint) -> Result<Vec<IndexForm>, GtError> {
    match point.family() {
        Family::A2 => {
            let c = A2Coeffs::new();
            Ok(vec![
                form("S+", point, &c.s_plus)?,
                form("S-", point, &c.s_minus)?,
            ])
        }
        Family::C2V1 | Family::C2V2 | Family::C2Generic => {
            let c = C2Coeffs::new();
            Ok(vec![
                form("S+", point, &c.s_plus)?,
                form("S-", point, &c.s_minus)?,
                form("T-", point, &c.t_minus)?,
                form("T+", point, &c.t_plus)?,
            ])
        }
        Family::G2 => {
            let c = G2Coeffs::new();
            Ok(vec![
                form("S+", point, &c.s_plus)?,
                form("S-", point, &c.s_minus)?,
                form("T+", point, &c.t_plus)?,
                form("T-", point, &c.t_minus)?,
            ])
        }
    }
}

/// The extra forms, beyond torsion freeness, whose non-vanishing is
/// the simplicity condition. Empty for the 14-dimensional algebra,
/// whose single condition list already decides both properties.
pub fn simplicity_forms(point: &ParameterPoint) -> Result<Vec<IndexForm>, GtError> {
    match point.family() {
        Family::A2 => {
            let c = A2Coeffs::new();
            let u = point.substitute_into(&c.t_plus.shift_index(Symbol::K, -1));
            let w = point.substitute_into(&c.t_minus.shift_index(Symbol::K, -1));
            let t1 = point.expect(Symbol::T1)?;
            let t2 = point.expect(Symbol::T2)?;
            let t3 = -(&t1 + &t2);
            let mut out = Vec::new();
            for (m, tm) in [(1, t1), (2, t2), (3, t3)] {
                let tm = RatFn::from_rat(tm);
                out.push(IndexForm::from_ratfn(
                    &format!("T+(k-1)+t{m}"),
                    &(&u + &tm),
                )?);
                out.push(IndexForm::from_ratfn(
                    &format!("T-(j,k-1)-t{m}"),
                    &(&w - &tm),
                )?);
            }
            Ok(out)
        }
        Family::C2V1 | Family::C2V2 | Family::C2Generic => {
            let c = C2Coeffs::new();
            Ok(vec![
                form("Q+", point, &c.q_plus)?,
                form("Q-", point, &c.q_minus)?,
            ])
        }
        Family::G2 => Ok(Vec::new()),
    }
}

// ===== Outcome of a quantified condition =====

/// Result of testing a list of forms for integer zeros: either every
/// form is zero-free, or the failing forms with witness points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConditionOutcome {
    Holds,
    Fails(Vec<(String, [i64; 3])>),
}

impl ConditionOutcome {
    pub fn evaluate(forms: &[IndexForm]) -> ConditionOutcome {
        let mut failures = Vec::new();
        for f in forms {
            if let Some(p) = f.integer_zero() {
                failures.push((f.label.clone(), p));
            }
        }
        if failures.is_empty() {
            ConditionOutcome::Holds
        } else {
            ConditionOutcome::Fails(failures)
        }
    }

    pub fn holds(&self) -> bool {
        matches!(self, ConditionOutcome::Holds)
    }

    pub fn failures(&self) -> &[(String, [i64; 3])] {
        match self {
            ConditionOutcome::Holds => &[],
            ConditionOutcome::Fails(v) => v,
        }
    }
}

// ===== Tests =====

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, Mono, Poly};

    fn affine(c: Rational, i: Rational, j: Rational, k: Rational) -> RatFn {
        let mut p = Poly::constant(c);
        p.add_term(Mono::symbol(Symbol::I), i);
        p.add_term(Mono::symbol(Symbol::J), j);
        p.add_term(Mono::symbol(Symbol::K), k);
        RatFn::from_poly(p)
    }

    #[test]
    fn extraction_clears_index_denominators_only() {
        let f = affine(rat(1, 2), rat(1, 3), rat(0, 1), rat(-1, 1));
        let form = IndexForm::from_ratfn("x", &f).unwrap();
        assert_eq!(form.coeffs, [1, 0, -3]);
        assert_eq!(form.constant, rat(3, 2));
        // The cleared form is a positive multiple: same zero set.
        assert_eq!(form.eval([1, 5, 1]), rat(3, 2) + rat_int(1) - rat_int(3));
        let quad = &f * &f;
        assert!(matches!(
            IndexForm::from_ratfn("x", &quad),
            Err(GtError::NotAffine(_))
        ));
        let unbound = RatFn::symbol(Symbol::A3);
        assert!(matches!(
            IndexForm::from_ratfn("x", &unbound),
            Err(GtError::NotAffine(_))
        ));
    }

    #[test]
    fn integer_zero_matches_divisibility() {
        // Non-integer constant: no zero on the integer lattice.
        let f = IndexForm::from_ratfn("x", &affine(rat(1, 2), rat(1, 1), rat(0, 1), rat(0, 1)))
            .unwrap();
        assert!(!f.has_integer_zero());
        assert_eq!(f.integer_zero(), None);
        // gcd 2 does not divide the constant 1.
        let f = IndexForm::from_ratfn("x", &affine(rat(1, 1), rat(2, 1), rat(0, 1), rat(4, 1)))
            .unwrap();
        assert!(!f.has_integer_zero());
        // gcd 1 always solves; the witness must evaluate to zero.
        let f = IndexForm::from_ratfn("x", &affine(rat(7, 1), rat(2, 1), rat(3, 1), rat(0, 1)))
            .unwrap();
        assert!(f.has_integer_zero());
        let p = f.integer_zero().unwrap();
        assert!(f.eval(p).is_zero());
        // Constant forms: zero exactly when the constant vanishes.
        let z = IndexForm::from_ratfn("x", &RatFn::zero()).unwrap();
        assert_eq!(z.integer_zero(), Some([0, 0, 0]));
        let c = IndexForm::from_ratfn("x", &RatFn::from_rat(rat(5, 1))).unwrap();
        assert_eq!(c.integer_zero(), None);
    }

    #[test]
    fn predicates_agree_with_window_scans() {
        let w = LatticeWindow::cube(6);
        // A zero-free point and a point with a torsion witness.
        let free = ParameterPoint::a2(rat(1, 2), rat(0, 1), rat(13, 6), rat(1, 3), rat(-1, 3))
            .unwrap();
        for f in torsion_free_forms(&free).unwrap() {
            assert!(!f.has_integer_zero(), "{f} has an unexpected zero");
            assert_eq!(f.zero_in(&w), None);
        }
        let torsion = ParameterPoint::a2(rat(1, 2), rat(0, 1), rat(5, 2), rat(1, 3), rat(-1, 3))
            .unwrap();
        let forms = torsion_free_forms(&torsion).unwrap();
        let hits: Vec<_> = forms.iter().filter(|f| f.has_integer_zero()).collect();
        assert!(!hits.is_empty());
        for f in hits {
            let p = f.integer_zero().unwrap();
            assert!(f.eval(p).is_zero());
            assert!(f.zero_in(&w).is_some(), "{f} scan misses its zero");
        }
    }

    #[test]
    fn ladder_quotient_conditions_follow_the_upsilon_shift() {
        // upsilon = 0 cancels the quotient entirely: both ladder forms
        // are nonzero constants and the condition holds.
        let p0 = ParameterPoint::c2_v2(rat(1, 5), rat(2, 5), rat(1, 1), rat(1, 3), rat(0, 1))
            .unwrap();
        let forms = simplicity_forms(&p0).unwrap();
        assert!(ConditionOutcome::evaluate(&forms).holds());
        // upsilon + a3 integral puts a zero on the raising ladder form.
        let p1 = ParameterPoint::c2_v1(rat(1, 5), rat(2, 5), rat(1, 2), rat(1, 2)).unwrap();
        let forms = simplicity_forms(&p1).unwrap();
        let out = ConditionOutcome::evaluate(&forms);
        assert!(!out.holds());
        assert_eq!(out.failures()[0].0, "Q+");
        let q_plus = &forms[0];
        assert!(q_plus.eval([0, 0, 0]).is_zero());
        // The same zero is visible to the scan route.
        assert!(q_plus.zero_in(&LatticeWindow::cube(3)).is_some());
    }

    #[test]
    fn display_renders_signed_integer_combinations() {
        let f = IndexForm::from_ratfn(
            "S+",
            &affine(rat(5, 6), rat(1, 1), rat(-1, 1), rat(2, 1)),
        )
        .unwrap();
        assert_eq!(f.to_string(), "S+: 5/6 + i - j + 2*k");
    }
}
