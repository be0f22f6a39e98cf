/*! Width decomposition of the relation tables.

The presentation splits its generators into S1 = {h1, h2, z1, z2}
(central in U0), S2 (commuting with S1 and each other), and S3. Every
higher perfect generator is eliminated through the tabulated
expressions, so each defining relation can be rewritten over S1, S2,
S3 alone. The width of a rewritten relation is the largest number of
S3 letters in any word; the tables claim width 1 for the first bucket
and width 2 for the second.

Every elimination formula is verified in U(g) before use, each
rewritten relation is re-expanded to zero, and the commutativity
claims behind S1 and S2 are checked generator by generator.
*/

use crate::centralizer::casimir::non_commuting_generators;
use crate::centralizer::normal::CentralizerContext;
use crate::centralizer::relations::NcElem;
use crate::centralizer::tables::tables;
use crate::centralizer::CentError;

/// One relation rewritten over S1, S2, S3.
pub struct ReducedRelation {
    pub lhs: String,
    pub reduced: NcElem,
    pub width: usize,
}

/// The verified decomposition for one algebra.
pub struct WidthDecomposition {
    pub s1: Vec<String>,
    pub s2: Vec<u8>,
    pub s3: Vec<u8>,
    pub r1: Vec<ReducedRelation>,
    pub r2: Vec<ReducedRelation>,
    /// Widths of all rewritten relations in table order.
    pub widths: Vec<usize>,
}

/// Replace every occurrence of the letter k by the given expression.
fn substitute_letter(nc: &NcElem, k: u8, replacement: &NcElem) -> NcElem {
    let mut out = NcElem::zero();
    for (word, coeff) in nc.terms() {
        if !word.contains(&k) {
            out.add_term(word.clone(), coeff.clone());
            continue;
        }
        let mut acc = NcElem::scalar(coeff.clone());
        for &letter in word {
            if letter == k {
                acc = acc.mul(replacement);
            } else {
                acc = acc.mul(&NcElem::letter(letter));
            }
        }
        for (w, f) in acc.terms() {
            out.add_term(w.clone(), f.clone());
        }
    }
    out
}

/// Verify one elimination formula in U(g): c_k minus its expression
/// expands to zero after clearing denominators.
pub fn verify_express_rule(
    ctx: &CentralizerContext,
    k: u8,
    expr: &str,
) -> Result<(), CentError> {
    let lhs = NcElem::letter(k);
    let rhs = ctx.parse(expr)?;
    let (cleared, _) = lhs.sub(&rhs).clear_denominators();
    let expanded = ctx.expand_nc(&cleared)?;
    if expanded.is_zero() {
        Ok(())
    } else {
        Err(CentError::ExpressFailed(k))
    }
}

/// Rewrite an expression over S1 u S2 u S3 by applying every tabulated
/// elimination, highest letter first.
pub fn reduce(ctx: &CentralizerContext, nc: &NcElem) -> Result<NcElem, CentError> {
    let tbl = tables(ctx.id());
    let mut acc = nc.clone();
    for rule in tbl.express {
        let replacement = ctx.parse(rule.expr)?;
        acc = substitute_letter(&acc, rule.c_index, &replacement);
    }
    Ok(acc)
}

/// Count of S3 letters in the longest word of the expression.
pub fn width_of(nc: &NcElem, s3: &[u8]) -> usize {
    nc.terms()
        .map(|(w, _)| w.iter().filter(|k| s3.contains(k)).count())
        .max()
        .unwrap_or(0)
}

/// Build and verify the width decomposition.
pub fn width_decomposition(
    ctx: &CentralizerContext,
) -> Result<WidthDecomposition, CentError> {
    let tbl = tables(ctx.id());
    if tbl.express.is_empty() {
        return Err(CentError::UnsupportedWidth(ctx.id().name()));
    }
    // Elimination formulas must hold in U(g).
    for rule in tbl.express {
        verify_express_rule(ctx, rule.c_index, rule.expr)?;
    }
    // S1 is central: the Casimirs commute with all of g, the Cartan
    // letters with every perfect word.
    for i in 1..=tbl.casimirs.len() {
        let z = ctx.z_element(i)?;
        let bad = non_commuting_generators(ctx, z);
        assert!(bad.is_empty(), "z{} is not central: {:?}", i, bad);
    }
    let [g1, g2] = ctx.pset().h_gens();
    for k in 1..=ctx.pset().q() as u8 {
        let el = ctx.word_element(&[k]);
        for g in [g1, g2] {
            let hg = crate::uea::UEAElement::generator(ctx.uea().dim(), g);
            assert!(
                ctx.uea().commutator(&hg, &el).is_zero(),
                "h does not commute with c{}",
                k
            );
        }
    }
    // S1 u S2 is commutative.
    for &s in tbl.s2 {
        let cs = ctx.word_element(&[s]);
        for i in 1..=tbl.casimirs.len() {
            let z = ctx.z_element(i)?;
            assert!(
                ctx.uea().commutator(z, &cs).is_zero(),
                "[z{}, c{}] != 0",
                i,
                s
            );
        }
        for &t in tbl.s2 {
            let ct = ctx.word_element(&[t]);
            assert!(
                ctx.uea().commutator(&cs, &ct).is_zero(),
                "[c{}, c{}] != 0",
                s,
                t
            );
        }
    }
    let allowed: Vec<u8> = tbl.s2.iter().chain(tbl.s3).copied().collect();
    let rewrite = |lhs_list: &[&str], expect_width: usize| -> Result<Vec<ReducedRelation>, CentError> {
        let mut out = Vec::new();
        for &lhs in lhs_list {
            let (_, rhs) = tbl
                .relations
                .iter()
                .find(|(l, _)| *l == lhs)
                .expect("bucket entry must name a tabulated relation");
            let rel = ctx.parse(lhs)?.sub(&ctx.parse(rhs)?);
            let reduced = reduce(ctx, &rel)?;
            for (word, _) in reduced.terms() {
                assert!(
                    word.iter().all(|k| allowed.contains(k)),
                    "letter escaped the elimination at {}",
                    lhs
                );
            }
            // The rewritten relation must still hold in U(g).
            let (cleared, _) = reduced.clear_denominators();
            let expanded = ctx.expand_nc(&cleared)?;
            if !expanded.is_zero() {
                return Err(CentError::RelationFailed { lhs: lhs.to_string() });
            }
            let width = width_of(&reduced, tbl.s3);
            assert_eq!(width, expect_width, "width of {} is {}", lhs, width);
            out.push(ReducedRelation { lhs: lhs.to_string(), reduced, width });
        }
        Ok(out)
    };
    let r1 = rewrite(tbl.r1_lhs, 1)?;
    let r2 = rewrite(tbl.r2_lhs, 2)?;
    let mut s1: Vec<String> = vec!["h1".into(), "h2".into()];
    for i in 1..=tbl.casimirs.len() {
        s1.push(format!("z{}", i));
    }
    let widths = r1.iter().chain(&r2).map(|r| r.width).collect();
    Ok(WidthDecomposition {
        s1,
        s2: tbl.s2.to_vec(),
        s3: tbl.s3.to_vec(),
        r1,
        r2,
        widths,
    })
}

// ===== Tests =====

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::AlgebraId;

    fn ctx(id: AlgebraId) -> CentralizerContext {
        CentralizerContext::new(id).unwrap()
    }

    #[test]
    fn substitution_replaces_every_occurrence() {
        let c = ctx(AlgebraId::A2);
        let nc = c.parse("c3*c3 + c1*c3*c2").unwrap();
        let rep = c.parse("c1 + 1").unwrap();
        let out = substitute_letter(&nc, 3, &rep);
        for (word, _) in out.terms() {
            assert!(!word.contains(&3));
        }
    }

    #[test]
    fn a2_express_rules_verify() {
        let c = ctx(AlgebraId::A2);
        for rule in tables(AlgebraId::A2).express {
            verify_express_rule(&c, rule.c_index, rule.expr).unwrap();
        }
    }

    #[test]
    fn a2_width_decomposition() {
        let c = ctx(AlgebraId::A2);
        let wd = width_decomposition(&c).unwrap();
        assert_eq!(wd.widths, vec![1, 2, 2]);
        assert_eq!(wd.s2, vec![1]);
        assert_eq!(wd.s3, vec![2]);
    }

    #[test]
    fn c2_express_rules_verify() {
        let c = ctx(AlgebraId::C2);
        for rule in tables(AlgebraId::C2).express {
            verify_express_rule(&c, rule.c_index, rule.expr).unwrap();
        }
    }

    #[test]
    fn c2_width_decomposition() {
        let c = ctx(AlgebraId::C2);
        let wd = width_decomposition(&c).unwrap();
        assert_eq!(wd.widths, vec![1, 1, 2, 2, 2]);
        assert_eq!(wd.s2, vec![1, 2]);
        assert_eq!(wd.s3, vec![3]);
    }

    #[test]
    fn g2_width_decomposition_is_unsupported() {
        let c = ctx(AlgebraId::G2);
        assert!(matches!(
            width_decomposition(&c),
            Err(CentError::UnsupportedWidth(_))
        ));
    }
}
