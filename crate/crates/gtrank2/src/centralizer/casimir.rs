/*! Casimir elements and centrality verification.

Each algebra's quadratic Casimir z1 (and the higher z2 for A2 and C2)
is stated over the perfect generators, expanded into U(g), and checked
to commute with every Chevalley generator. The G2 higher Casimir is not
tabulated and is reported as unsupported rather than approximated.

Two invariants built directly from the matrix realization serve as
independent cross-checks: `quadratic_casimir` (the trace-form Casimir
sum X_a X^a over a dual basis pair) and `quartic_invariant` (the
degree-4 trace invariant). Both are central by invariance of the trace
form, with no input from the tables; the tabulated z1 is a fixed
rational multiple of the quadratic one for every algebra, and the C2 z2
is an exact polynomial in the two.

G2 additionally carries the images of the two Casimirs of its
A2-type subalgebra spanned by the long-root vectors; these commute with
the subalgebra generators, not with all of U(g).
*/

use crate::centralizer::normal::CentralizerContext;
use crate::centralizer::tables::{tables, G2_EMBEDDED_Z1, G2_EMBEDDED_Z2};
use crate::centralizer::CentError;
use crate::exactmath::Rational;
use crate::liealg::{AlgebraId, RatMatrix};
use crate::uea::UEAElement;
use num_traits::{One, Zero};

/// An expanded Casimir element.
pub struct CasimirElement {
    pub index: usize,
    pub expression: String,
    pub element: UEAElement,
}

/// The Casimir z_index for the context's algebra, expanded in U(g).
pub fn casimir(ctx: &CentralizerContext, index: usize) -> Result<CasimirElement, CentError> {
    let tbl = tables(ctx.id());
    let expr = tbl
        .casimirs
        .get(index.wrapping_sub(1))
        .ok_or(CentError::UnsupportedCasimir { algebra: ctx.id().name(), index })?;
    Ok(CasimirElement {
        index,
        expression: expr.to_string(),
        element: ctx.z_element(index)?.clone(),
    })
}

/// All generators that fail to commute with the element.
pub fn non_commuting_generators(ctx: &CentralizerContext, x: &UEAElement) -> Vec<String> {
    let uea = ctx.uea();
    let alg = uea.algebra();
    let mut bad = Vec::new();
    for g in 0..alg.dimension() {
        let gen = UEAElement::generator(alg.dimension(), g);
        if !uea.commutator(&gen, x).is_zero() {
            bad.push(alg.label(g).to_string());
        }
    }
    bad
}

/// True when the element commutes with every generator of g.
pub fn is_central(ctx: &CentralizerContext, x: &UEAElement) -> bool {
    non_commuting_generators(ctx, x).is_empty()
}

/// tr(ab) for two matrices of the realization.
fn trace_product(a: &RatMatrix, b: &RatMatrix) -> Rational {
    let m = a.size();
    let mut t = Rational::zero();
    for r in 1..=m {
        for s in 1..=m {
            t += a.at(r, s) * b.at(s, r);
        }
    }
    t
}

/// The dual basis of the Chevalley generators with respect to the trace
/// form of the matrix realization, as elements of U(g).
fn trace_dual_basis(ctx: &CentralizerContext) -> Vec<UEAElement> {
    let alg = ctx.uea().algebra();
    let n = alg.dimension();
    // Invert the Gram matrix by Gauss-Jordan on [G | I].
    let mut aug: Vec<Vec<Rational>> = (0..n)
        .map(|a| {
            let mut row: Vec<Rational> = (0..n)
                .map(|b| trace_product(&alg.gen(a).matrix, &alg.gen(b).matrix))
                .collect();
            row.extend(
                (0..n).map(|b| if a == b { Rational::one() } else { Rational::zero() }),
            );
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !aug[r][col].is_zero())
            .expect("trace form is nondegenerate on a simple algebra");
        aug.swap(col, piv);
        let p = aug[col][col].clone();
        for x in aug[col].iter_mut() {
            *x /= p.clone();
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for k in 0..2 * n {
                    let sub = &aug[col][k] * &f;
                    aug[r][k] -= sub;
                }
            }
        }
    }
    (0..n)
        .map(|a| {
            let mut e = UEAElement::zero();
            for b in 0..n {
                if !aug[a][n + b].is_zero() {
                    e.add_scaled(&UEAElement::generator(n, b), &aug[a][n + b]);
                }
            }
            e
        })
        .collect()
}

/// The quadratic Casimir sum X_a X^a over the trace-form dual basis,
/// built with no input from the centralizer tables. Central by
/// invariance of the trace form.
pub fn quadratic_casimir(ctx: &CentralizerContext) -> UEAElement {
    let uea = ctx.uea();
    let n = uea.algebra().dimension();
    let dual = trace_dual_basis(ctx);
    let mut omega = UEAElement::zero();
    for a in 0..n {
        let xa = UEAElement::generator(n, a);
        omega.add_assign(&uea.multiply(&xa, &dual[a]));
    }
    omega
}

/// The degree-4 invariant sum tr(X_a X_b X_c X_d) X^a X^b X^c X^d over
/// the trace-form dual basis. Central for the same reason as the
/// quadratic Casimir; together they pin down the higher Casimir of C2.
pub fn quartic_invariant(ctx: &CentralizerContext) -> UEAElement {
    let uea = ctx.uea();
    let alg = uea.algebra();
    let n = alg.dimension();
    let dual = trace_dual_basis(ctx);
    let pair: Vec<Vec<RatMatrix>> = (0..n)
        .map(|a| (0..n).map(|b| &alg.gen(a).matrix * &alg.gen(b).matrix).collect())
        .collect();
    let dual_pair: Vec<Vec<UEAElement>> = (0..n)
        .map(|a| (0..n).map(|b| uea.multiply(&dual[a], &dual[b])).collect())
        .collect();
    let mut g4 = UEAElement::zero();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let t = trace_product(&pair[a][b], &pair[c][d]);
                    if !t.is_zero() {
                        let w = uea.multiply(&dual_pair[a][b], &dual_pair[c][d]);
                        g4.add_scaled(&w, &t);
                    }
                }
            }
        }
    }
    g4
}

/// The images of the subalgebra Casimirs inside U(G2), expanded from
/// their stated formulas.
pub fn g2_embedded_casimirs(
    ctx: &CentralizerContext,
) -> Result<[CasimirElement; 2], CentError> {
    assert_eq!(ctx.id(), AlgebraId::G2, "embedded Casimirs live in G2");
    let z1 = ctx.parse(G2_EMBEDDED_Z1)?;
    let z2 = ctx.parse(G2_EMBEDDED_Z2)?;
    Ok([
        CasimirElement {
            index: 1,
            expression: G2_EMBEDDED_Z1.to_string(),
            element: ctx.expand_nc(&z1)?,
        },
        CasimirElement {
            index: 2,
            expression: G2_EMBEDDED_Z2.to_string(),
            element: ctx.expand_nc(&z2)?,
        },
    ])
}

/// Labels of the long-root subalgebra generators of G2.
pub const G2_SUBALGEBRA_LABELS: [&str; 8] =
    ["e01", "f01", "e31", "f31", "e32", "f32", "h01", "h21"];

// ===== Tests =====
