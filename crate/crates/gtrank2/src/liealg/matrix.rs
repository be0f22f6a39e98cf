/*! Small dense matrices over exact rationals.

Just enough linear algebra for the Chevalley realizations: matrix-unit
builders, ring operations, commutators, and an incremental exact span
solver used to express commutators back in the generator basis. Sizes
are 3, 4, and 7, so dense storage and textbook Gaussian elimination are
the right tools; everything is exact, nothing is pivoted for stability.
*/

use crate::exactmath::Rational;
use num::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense square matrix over `Rational`, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    n: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zero(n: usize) -> Self {
        RatMatrix { n, data: vec![Rational::zero(); n * n] }
    }

    /// Matrix unit `E_{rc}` with 1-based indices, matching the standard
    /// notation for Chevalley realizations.
    pub fn unit(n: usize, r: usize, c: usize) -> Self {
        assert!((1..=n).contains(&r) && (1..=n).contains(&c), "E_{{{r}{c}}} out of range for size {n}");
        let mut m = Self::zero(n);
        m.data[(r - 1) * n + (c - 1)] = Rational::one();
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.data[(r - 1) * self.n + (c - 1)]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        RatMatrix { n: self.n, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Row-major flattening, the coordinate vector used by [`SpanSolver`].
    pub fn flatten(&self) -> Vec<Rational> {
        self.data.clone()
    }

    /// Trace form `tr(self · other)`, used only by tests as an invariant
    /// cross-check on the realizations.
    pub fn trace_form(&self, other: &Self) -> Rational {
        let prod = self * other;
        let mut t = Rational::zero();
        for i in 1..=self.n {
            t += prod.at(i, i);
        }
        t
    }
}

impl Add for &RatMatrix {
    type Output = RatMatrix;
    fn add(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.n, rhs.n);
        RatMatrix {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &RatMatrix {
    type Output = RatMatrix;
    fn sub(self, rhs: &RatMatrix) -> RatMatrix {
        RatMatrix {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &RatMatrix {
    type Output = RatMatrix;
    fn neg(self) -> RatMatrix {
        RatMatrix { n: self.n, data: self.data.iter().map(|x| -x).collect() }
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = RatMatrix::zero(n);
        for r in 0..n {
            for k in 0..n {
                let a = &self.data[r * n + k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = &rhs.data[k * n + c];
                    if !b.is_zero() {
                        out.data[r * n + c] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 1..=self.n {
            let row: Vec<String> = (1..=self.n).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Incremental exact linear solver over a growing span.
///
/// Basis vectors are added one at a time and kept in echelon form
/// together with the combination of original vectors producing each
/// echelon row, so `express` can return coordinates in the *original*
/// basis or report that a vector escapes the span.
pub struct SpanSolver {
    width: usize,
    rows: Vec<(Vec<Rational>, Vec<Rational>)>,
    pivots: Vec<usize>,
    added: usize,
}

impl SpanSolver {
    pub fn new(width: usize) -> Self {
        SpanSolver { width, rows: Vec::new(), pivots: Vec::new(), added: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds a vector to the span. Returns true if it enlarged the span
    /// (i.e. was independent of everything added so far).
    pub fn add_vector(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.width);
        let idx = self.added;
        self.added += 1;
        let mut combo = vec![Rational::zero(); idx + 1];
        combo[idx] = Rational::one();
        let mut vec = v.to_vec();
        self.reduce(&mut vec, &mut combo);
        if let Some(p) = vec.iter().position(|x| !x.is_zero()) {
            let lead = vec[p].clone();
            for x in vec.iter_mut() {
                *x /= lead.clone();
            }
            for x in combo.iter_mut() {
                *x /= lead.clone();
            }
            self.rows.push((vec, combo));
            self.pivots.push(p);
            true
        } else {
            false
        }
    }

    /// Expresses `v` in terms of the original added vectors, or returns
    /// None when `v` is outside the span.
    pub fn express(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.width);
        let mut vec = v.to_vec();
        let mut combo = vec![Rational::zero(); self.added];
        self.reduce(&mut vec, &mut combo);
        if vec.iter().all(Zero::is_zero) {
            combo.iter_mut().for_each(|x| *x = -x.clone());
            Some(combo)
        } else {
            None
        }
    }

    fn reduce(&self, vec: &mut [Rational], combo: &mut Vec<Rational>) {
        for ((row, rc), &p) in self.rows.iter().zip(&self.pivots) {
            if vec[p].is_zero() {
                continue;
            }
            let f = vec[p].clone();
            for (x, r) in vec.iter_mut().zip(row) {
                *x -= &f * r;
            }
            if combo.len() < rc.len() {
                combo.resize(rc.len(), Rational::zero());
            }
            for (x, r) in combo.iter_mut().zip(rc) {
                *x -= &f * r;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat_int;

    #[test]
    fn unit_product_follows_index_contraction() {
        let a = RatMatrix::unit(3, 1, 2);
        let b = RatMatrix::unit(3, 2, 3);
        assert_eq!(&a * &b, RatMatrix::unit(3, 1, 3));
        assert!((&b * &a).is_zero());
    }

    #[test]
    fn commutator_is_antisymmetric() {
        let a = &RatMatrix::unit(3, 1, 2) + &RatMatrix::unit(3, 2, 1);
        let b = &RatMatrix::unit(3, 1, 1) - &RatMatrix::unit(3, 3, 3);
        assert_eq!(a.commutator(&b), -&b.commutator(&a));
        assert!(a.commutator(&a).is_zero());
    }

    #[test]
    fn span_solver_expresses_and_rejects() {
        let e12 = RatMatrix::unit(2, 1, 2).flatten();
        let e21 = RatMatrix::unit(2, 2, 1).flatten();
        let mut s = SpanSolver::new(4);
        assert!(s.add_vector(&e12));
        assert!(s.add_vector(&e21));
        assert!(!s.add_vector(&e12));
        assert_eq!(s.rank(), 2);

        let mix: Vec<Rational> =
            e12.iter().zip(&e21).map(|(a, b)| a * rat_int(2) + b * rat_int(-3)).collect();
        let coords = s.express(&mix).unwrap();
        assert_eq!(coords[0], rat_int(2));
        assert_eq!(coords[1], rat_int(-3));

        let outside = RatMatrix::unit(2, 1, 1).flatten();
        assert!(s.express(&outside).is_none());
    }
}
