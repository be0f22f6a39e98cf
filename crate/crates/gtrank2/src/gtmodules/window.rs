/*! Finite lattice windows and exact vectors supported on them.

A window is an inclusive box [lo, hi] in Z^3. Vectors over a window
keep a sparse exact support map; the window is the containment domain,
and applying an operator row reports an error if any nonzero
contribution would land outside it. A contribution whose coefficient
evaluates to zero is dropped before the containment check, since a
vanishing coefficient is exactly how submodule regions stay closed at
their boundary.
*/

use std::collections::BTreeMap;

use super::table::{ActionRow, ActionTable};
use super::GtError;
use crate::exactmath::{rat_int, EvalError, Rational, Symbol};
use num::Zero;

// ===== Windows =====

/// Inclusive box [lo, hi] in Z^3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeWindow {
    lo: [i64; 3],
    hi: [i64; 3],
}

impl LatticeWindow {
    pub fn new(lo: [i64; 3], hi: [i64; 3]) -> LatticeWindow {
        for a in 0..3 {
            assert!(lo[a] <= hi[a], "window axis {a} is empty");
        }
        LatticeWindow { lo, hi }
    }

    /// The symmetric cube [-r, r]^3.
    pub fn cube(r: i64) -> LatticeWindow {
        assert!(r >= 0);
        LatticeWindow::new([-r, -r, -r], [r, r, r])
    }

    pub fn lo(&self) -> [i64; 3] {
        self.lo
    }

    pub fn hi(&self) -> [i64; 3] {
        self.hi
    }

    pub fn contains(&self, p: [i64; 3]) -> bool {
        (0..3).all(|a| self.lo[a] <= p[a] && p[a] <= self.hi[a])
    }

    /// Grow the box by a margin per axis in both directions.
    pub fn expand(&self, margin: [i64; 3]) -> LatticeWindow {
        let lo = [
            self.lo[0] - margin[0],
            self.lo[1] - margin[1],
            self.lo[2] - margin[2],
        ];
        let hi = [
            self.hi[0] + margin[0],
            self.hi[1] + margin[1],
            self.hi[2] + margin[2],
        ];
        LatticeWindow::new(lo, hi)
    }

    pub fn num_points(&self) -> usize {
        (0..3)
            .map(|a| (self.hi[a] - self.lo[a] + 1) as usize)
            .product()
    }

    /// All points of the box in lexicographic order.
    pub fn points(&self) -> impl Iterator<Item = [i64; 3]> + '_ {
        let (lo, hi) = (self.lo, self.hi);
        (lo[0]..=hi[0]).flat_map(move |i| {
            (lo[1]..=hi[1]).flat_map(move |j| (lo[2]..=hi[2]).map(move |k| [i, j, k]))
        })
    }
}

// ===== Vectors =====

/// Exact vector over a window, stored sparsely; zero entries are
/// never kept.
#[derive(Debug, Clone)]
pub struct WindowVec {
    window: LatticeWindow,
    entries: BTreeMap<[i64; 3], Rational>,
}

impl WindowVec {
    pub fn zero(window: LatticeWindow) -> WindowVec {
        WindowVec { window, entries: BTreeMap::new() }
    }

    /// Basis vector at one point.
    pub fn delta(window: LatticeWindow, p: [i64; 3]) -> Result<WindowVec, GtError> {
        if !window.contains(p) {
            return Err(GtError::SupportEscapes { point: p, shift: [0, 0, 0] });
        }
        let mut v = WindowVec::zero(window);
        v.add(p, rat_int(1));
        Ok(v)
    }

    pub fn window(&self) -> &LatticeWindow {
        &self.window
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn coeff(&self, p: [i64; 3]) -> Rational {
        self.entries.get(&p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (&[i64; 3], &Rational)> {
        self.entries.iter()
    }

    pub fn num_entries(&self) -> usize {
        self.entries.len()
    }

    /// Add a value at a point; drops the entry when it cancels.
    pub fn add(&mut self, p: [i64; 3], value: Rational) {
        debug_assert!(self.window.contains(p));
        if value.is_zero() {
            return;
        }
        let slot = self.entries.entry(p).or_insert_with(Rational::zero);
        *slot = &*slot + &value;
        if slot.is_zero() {
            self.entries.remove(&p);
        }
    }

    pub fn add_scaled(&mut self, other: &WindowVec, c: &Rational) {
        for (p, v) in &other.entries {
            self.add(*p, v * c);
        }
    }

    pub fn sub(&self, other: &WindowVec) -> WindowVec {
        let mut out = self.clone();
        out.add_scaled(other, &rat_int(-1));
        out
    }

    pub fn scale(&self, c: &Rational) -> WindowVec {
        let mut out = WindowVec::zero(self.window.clone());
        out.add_scaled(self, c);
        out
    }

    /// Move the support into a different (usually larger) window.
    pub fn rewindow(&self, window: LatticeWindow) -> Result<WindowVec, GtError> {
        let mut out = WindowVec::zero(window);
        for (p, v) in &self.entries {
            if !out.window.contains(*p) {
                return Err(GtError::SupportEscapes { point: *p, shift: [0, 0, 0] });
            }
            out.add(*p, v.clone());
        }
        Ok(out)
    }
}

// ===== Application =====

fn eval_coeff(
    label: &str,
    coeff: &crate::exactmath::RatFn,
    p: [i64; 3],
) -> Result<Rational, GtError> {
    let bind = |s: Symbol| match s {
        Symbol::I => Some(rat_int(p[0])),
        Symbol::J => Some(rat_int(p[1])),
        Symbol::K => Some(rat_int(p[2])),
        _ => None,
    };
    match coeff.eval(&bind) {
        Ok(v) => Ok(v),
        Err(EvalError::Pole) => {
            Err(GtError::CoefficientPole { label: label.to_string(), point: p })
        }
        Err(e) => Err(GtError::Eval(e)),
    }
}

/// Apply one operator row to a vector. Every nonzero contribution
/// must stay inside the vector's window.
pub fn apply_row(label: &str, row: &ActionRow, v: &WindowVec) -> Result<WindowVec, GtError> {
    let mut out = WindowVec::zero(v.window.clone());
    for (p, c) in v.support() {
        for term in &row.terms {
            let value = eval_coeff(label, &term.coeff, *p)?;
            if value.is_zero() {
                continue;
            }
            let target = [
                p[0] + term.shift[0],
                p[1] + term.shift[1],
                p[2] + term.shift[2],
            ];
            if !out.window.contains(target) {
                return Err(GtError::SupportEscapes { point: *p, shift: term.shift });
            }
            out.add(target, &value * c);
        }
    }
    Ok(out)
}

/// Apply the row of one generator by index.
pub fn apply_gen(table: &ActionTable, gen: usize, v: &WindowVec) -> Result<WindowVec, GtError> {
    apply_row(table.algebra().label(gen), table.row(gen), v)
}

/// Apply the row named by an operator label.
pub fn apply_label(table: &ActionTable, label: &str, v: &WindowVec) -> Result<WindowVec, GtError> {
    apply_row(label, table.row_by_label(label)?, v)
}

// ===== Tests =====
