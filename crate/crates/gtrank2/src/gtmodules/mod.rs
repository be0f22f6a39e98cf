/*! Exact lattice modules on Z^3 for the rank-2 simple Lie algebras.

Each module family places one basis vector at every point of Z^3 and
lets the Chevalley generators act by finitely many shift terms, each
carrying an exact rational-function coefficient in the indices i, j, k.
This module tree provides:

- [`coeffs`]: the indexed coefficient families (S, T, Q, A, B forms)
  as symbolic rational functions, with agreement tests between their
  composite definitions and expanded closed forms.
- [`table`]: parameter points, family membership, and the action
  tables mapping each generator to its shift terms.
- [`window`]: finite boxes of lattice points and exact vectors over
  them, with safe application of action tables.
- [`gamma`]: characters of the separating commutative subalgebra on
  basis vectors.
- [`conditions`]: integer-zero predicates for the coefficient forms,
  deciding torsion-freeness and simplicity symbolically.
- [`splitting`]: submodule regions cut out by vanishing coefficients
  and the dimensions of the resulting subquotient weight slices.
- [`branching`]: the rank-2 subalgebra embedding of the 14-dimensional
  algebra and the induced decomposition into three shifted copies of
  an 8-dimensional-algebra module.

All coefficients are exact rationals; no approximation enters anywhere.
*/

pub mod branching;
pub mod coeffs;
pub mod conditions;
pub mod gamma;
pub mod splitting;
pub mod table;
pub mod window;

use std::collections::BTreeMap;
use std::fmt;

use crate::centralizer::CentError;
use crate::exactmath::{rat_int, EvalError, Rational, Symbol};
use crate::liealg::AlgebraId;
use num::{One, Signed, Zero};

pub use branching::{branch_pair, branching_map, psi, BranchingMap};
pub use coeffs::{A2Coeffs, C2Coeffs, G2Coeffs};
pub use conditions::{
    simplicity_forms, torsion_free_forms, ConditionOutcome, IndexForm,
};
pub use gamma::{gamma_character, gamma_labels, GammaCharacter};
pub use splitting::{case1_splitting, case2_splitting, Case1Splitting, Case2Splitting};
pub use table::{build_action, ActionRow, ActionTable, ActionTerm, Family, ParameterPoint};
pub use window::{apply_gen, apply_label, apply_row, LatticeWindow, WindowVec};

// ===== Errors =====

/// Errors from module construction and evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GtError {
    /// A parameter point violates the defining constraints of its family.
    FamilyConstraint { family: &'static str, message: String },
    /// A required parameter symbol has no value at this point.
    MissingParameter(Symbol),
    /// A family was requested for the wrong algebra.
    AlgebraMismatch { expected: AlgebraId, got: AlgebraId },
    /// No generator or derived operator has this label.
    UnknownOperator(String),
    /// An action term would move support outside the window.
    SupportEscapes { point: [i64; 3], shift: [i64; 3] },
    /// A coefficient denominator vanishes at a lattice point.
    CoefficientPole { label: String, point: [i64; 3] },
    /// A splitting construction needs distinct integers in a fixed order.
    RootsNotOrdered([i64; 3]),
    /// A coefficient form is not affine-linear in the lattice indices.
    NotAffine(String),
    /// An index form vanished identically, so no splitting data exists.
    DegenerateForm(String),
    /// An operator expected to act diagonally moved support.
    NotDiagonal(String),
    /// Arithmetic failure while evaluating coefficients.
    Eval(EvalError),
    /// Failure while expanding centralizer elements for characters.
    Cent(String),
}

impl fmt::Display for GtError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GtError::FamilyConstraint { family, message } => {
                write!(f, "family {family}: {message}")
            }
            GtError::MissingParameter(s) => write!(f, "missing parameter {s}"),
            GtError::AlgebraMismatch { expected, got } => {
                write!(f, "expected algebra {}, got {}", expected.name(), got.name())
            }
            GtError::UnknownOperator(l) => write!(f, "unknown operator {l}"),
            GtError::SupportEscapes { point, shift } => write!(
                f,
                "support at ({}, {}, {}) escapes the window under shift ({}, {}, {})",
                point[0], point[1], point[2], shift[0], shift[1], shift[2]
            ),
            GtError::CoefficientPole { label, point } => write!(
                f,
                "coefficient of {label} has a pole at ({}, {}, {})",
                point[0], point[1], point[2]
            ),
            GtError::RootsNotOrdered(k) => write!(
                f,
                "splitting needs strictly decreasing integers, got ({}, {}, {})",
                k[0], k[1], k[2]
            ),
            GtError::NotAffine(l) => write!(f, "form {l} is not affine in the indices"),
            GtError::DegenerateForm(l) => write!(f, "form {l} vanishes identically"),
            GtError::NotDiagonal(l) => write!(f, "operator {l} is not diagonal"),
            GtError::Eval(e) => write!(f, "evaluation error: {e:?}"),
            GtError::Cent(e) => write!(f, "centralizer error: {e}"),
        }
    }
}

impl std::error::Error for GtError {}

impl From<EvalError> for GtError {
    fn from(e: EvalError) -> Self {
        GtError::Eval(e)
    }
}

impl From<CentError> for GtError {
    fn from(e: CentError) -> Self {
        GtError::Cent(e.to_string())
    }
}

// ===== Small helpers shared across the module tree =====

/// True when the rational is an integer.
pub(crate) fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// True when the rational is an odd integer.
pub(crate) fn is_odd_integer(q: &Rational) -> bool {
    use num::Integer;
    is_integer(q) && q.numer().is_odd()
}

/// Exact conversion to i64; panics only on out-of-range values, which
/// cannot arise from window-sized index arithmetic.
pub(crate) fn to_i64(q: &Rational) -> i64 {
    assert!(is_integer(q), "expected an integer, got {q}");
    let n = q.numer();
    i64::try_from(n.clone()).expect("index value fits in i64")
}

pub(crate) fn rat_of_i64(n: i64) -> Rational {
    rat_int(n)
}

/// Sign of an exact rational as -1, 0, or +1.
pub(crate) fn sign_of(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

/// Render a rational without superfluous denominator.
pub(crate) fn rat_display(q: &Rational) -> String {
    if is_integer(q) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Named parameter values in display form, for reports and dumps.
pub(crate) fn named_values(values: &BTreeMap<Symbol, Rational>) -> BTreeMap<String, String> {
    values
        .iter()
        .map(|(s, q)| (s.name().to_string(), rat_display(q)))
        .collect()
}
