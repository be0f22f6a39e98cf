/*! Characters of the separating commutative subalgebra.

The subalgebra is generated by the two Cartan generators, the Casimir
elements, and the first zero-weight word c1. On a basis vector of a
lattice module each of these acts diagonally; the resulting tuple of
exact eigenvalues is the character of that vector. Distinct characters
on every pair of basis vectors is the separation property, quantified
over weight slices: two vectors share the Cartan eigenvalues exactly
when their first two indices agree, so only the c1 entry can separate
vectors inside a slice.

Characters are computed honestly: the Cartan entries come from the
diagonal table rows, while the Casimir and c1 entries apply the full
expansion of the element in the enveloping algebra through the action
table, letter by letter, and demand that the image is supported on
the original point alone.
*/

use super::table::ActionTable;
use super::window::{apply_gen, LatticeWindow, WindowVec};
use super::GtError;
use crate::centralizer::CentralizerContext;
use crate::exactmath::Rational;
use crate::liealg::AlgebraId;
use crate::uea::UEAElement;
use num::Zero;

/// The exact eigenvalue tuple of the separating subalgebra at one
/// basis vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaCharacter {
    pub point: [i64; 3],
    /// Labeled entries, in the fixed order of [`gamma_labels`].
    pub entries: Vec<(String, Rational)>,
}

impl GammaCharacter {
    /// The value of one labeled entry.
    pub fn value(&self, label: &str) -> Option<&Rational> {
        self.entries.iter().find(|(l, _)| l == label).map(|(_, v)| v)
    }
}

/// Labels of the subalgebra generators per algebra: both Cartan
/// generators, every Casimir element of the family, and c1.
pub fn gamma_labels(id: AlgebraId) -> &'static [&'static str] {
    match id {
        AlgebraId::A2 => &["h01", "h10", "z1", "z2", "c1"],
        AlgebraId::C2 => &["h10", "h01", "z1", "z2", "c1"],
        AlgebraId::G2 => &["h01", "h21", "z1", "c1"],
    }
}

/// Apply a full enveloping-algebra element to the basis vector at a
/// point, inside an automatically sized window. Standard monomials
/// act right to left: the lowest letter of each monomial acts first.
pub fn apply_element(
    table: &ActionTable,
    elem: &UEAElement,
    p: [i64; 3],
) -> Result<WindowVec, GtError> {
    let shift = table.max_shift();
    let d = elem.degree() as i64;
    let window = LatticeWindow::new(
        [p[0] - d * shift[0], p[1] - d * shift[1], p[2] - d * shift[2]],
        [p[0] + d * shift[0], p[1] + d * shift[1], p[2] + d * shift[2]],
    );
    let mut acc = WindowVec::zero(window.clone());
    for (mono, coeff) in elem.terms() {
        let mut v = WindowVec::delta(window.clone(), p)?;
        for &g in mono.letters_desc().iter().rev() {
            v = apply_gen(table, g, &v)?;
            if v.is_zero() {
                break;
            }
        }
        acc.add_scaled(&v, coeff);
    }
    Ok(acc)
}

/// Apply an element expected to act diagonally, returning its
/// eigenvalue at the point.
pub fn diagonal_value(
    table: &ActionTable,
    label: &str,
    elem: &UEAElement,
    p: [i64; 3],
) -> Result<Rational, GtError> {
    let image = apply_element(table, elem, p)?;
    for (q, v) in image.support() {
        if *q != p && !v.is_zero() {
            return Err(GtError::NotDiagonal(label.to_string()));
        }
    }
    Ok(image.coeff(p))
}

/// The full character tuple at one point.
pub fn gamma_character(
    ctx: &CentralizerContext,
    table: &ActionTable,
    p: [i64; 3],
) -> Result<GammaCharacter, GtError> {
    assert_eq!(ctx.id(), table.algebra().id(), "context and table algebras differ");
    let mut entries = Vec::new();
    for &label in gamma_labels(ctx.id()) {
        let value = match label {
            "z1" => diagonal_value(table, label, ctx.z_element(1)?, p)?,
            "z2" => diagonal_value(table, label, ctx.z_element(2)?, p)?,
            "c1" => diagonal_value(table, label, &ctx.pset().item(1).element, p)?,
            _ => {
                // Cartan rows are diagonal by construction.
                let row = table.row_by_label(label)?;
                assert!(row.is_diagonal(), "Cartan row {label} must be diagonal");
                let v = WindowVec::delta(LatticeWindow::new(p, p), p)?;
                super::window::apply_row(label, row, &v)?.coeff(p)
            }
        };
        entries.push((label.to_string(), value));
    }
    Ok(GammaCharacter { point: p, entries })
}

// ===== Tests =====

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::gtmodules::table::{build_action, ParameterPoint};

    #[test]
    fn a2_characters_match_the_parameter_values() {
        let ctx = CentralizerContext::new(AlgebraId::A2).unwrap();
        let p = ParameterPoint::a2(rat(1, 2), rat(0, 1), rat(13, 6), rat(1, 3), rat(-1, 3))
            .unwrap();
        let t = build_action(&p).unwrap();
        let ch = gamma_character(&ctx, &t, [0, 0, 0]).unwrap();
        // h01 at the origin is a1; z1 and z2 are the derived Casimir
        // values xi and mu.
        assert_eq!(ch.value("h01"), Some(&rat(1, 2)));
        assert_eq!(ch.value("z1"), Some(&rat(-8, 9)));
        assert_eq!(ch.value("z2"), Some(&rat(8, 9)));
        // c1 acts by the product of the two ladder forms along i.
        let c1 = ch.value("c1").unwrap();
        assert!(!c1.is_zero());
    }

    #[test]
    fn characters_separate_a_weight_slice_for_non_integer_a3() {
        let ctx = CentralizerContext::new(AlgebraId::C2).unwrap();
        let p = ParameterPoint::c2_v1(rat(1, 5), rat(2, 5), rat(1, 2), rat(1, 5)).unwrap();
        let t = build_action(&p).unwrap();
        let mut seen = Vec::new();
        for k in -2..=2 {
            let ch = gamma_character(&ctx, &t, [0, 0, k]).unwrap();
            assert!(!seen.contains(&ch.entries), "character collision at k = {k}");
            seen.push(ch.entries);
        }
    }
}
