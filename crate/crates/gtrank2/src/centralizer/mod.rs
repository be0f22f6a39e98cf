/*! Cartan-centralizer presentations for the rank-2 algebras.

The centralizer U0 of the Cartan subalgebra inside U(g) is spanned by
the weight-zero standard monomials. This module builds its
perfect-monomial generators from the enumerated indecomposable
weight-zero root lists, computes normal forms in the semi-perfect
basis, derives the length-two relation table, expands the Casimir
elements, and verifies the width decomposition of the relation set.
Everything is computed over exact rationals inside the PBW engine and
cross-checked against the reference tables.
*/

pub mod casimir;
pub mod errata;
pub mod hilbert;
pub mod normal;
pub mod perfect;
pub mod relations;
pub mod tables;
pub mod width;

pub use casimir::{casimir, quadratic_casimir, quartic_invariant, CasimirElement};
pub use errata::{verify_errata, ErratumCheck};
pub use hilbert::{
    enumerate_indecomposable, is_primitive, MultiplicityVector, PrimitivityWitness, RootList,
};
pub use normal::{normal_form, CMono, CentElem, CentralizerContext};
pub use perfect::{
    perfect_monomials, semi_perfect_basis, PerfectMonomial, PerfectSet, SemiPerfectMonomial,
};
pub use relations::{extract_relations, NcElem, Relation, RelationCheck};
pub use width::{width_decomposition, WidthDecomposition};

/// Errors raised while building or verifying centralizer data.
#[derive(Debug, thiserror::Error)]
pub enum CentError {
    #[error("word {0:?} does not match any indecomposable list")]
    UnmatchedWord(Vec<String>),
    #[error("indecomposable list {0:?} has no perfect word in the table")]
    UnmatchedList(Vec<u16>),
    #[error("table word {got:?} differs from canonical sorted word {want:?}")]
    NonCanonicalWord { got: Vec<String>, want: Vec<String> },
    #[error("label {0} is unknown or not a root vector")]
    BadLabel(String),
    #[error("element is not of weight zero")]
    NotWeightZero,
    #[error("content {0:?} admits no semi-perfect word")]
    NoSemiPerfectWord(Vec<u16>),
    #[error("parse error in expression `{input}`: {message}")]
    Parse { input: String, message: String },
    #[error("division by an expression containing word letters")]
    NonScalarDivisor,
    #[error("coefficient has a nontrivial denominator; clear denominators first")]
    UnclearedDenominator,
    #[error("casimir index {index} is not available for {algebra}")]
    UnsupportedCasimir { algebra: &'static str, index: usize },
    #[error("width decomposition is not tabulated for {0}")]
    UnsupportedWidth(&'static str),
    #[error("relation `{lhs}` failed to expand to zero")]
    RelationFailed { lhs: String },
    #[error("elimination formula for c{0} failed verification")]
    ExpressFailed(u8),
}
