/*! Two-sided verification of the recorded table corrections.

Each algebra's table carries a list of corrections: a Casimir whose
stated form fails centrality, or an elimination formula whose stated
form fails to reproduce its letter. Every entry is checked in both
directions — the original form must demonstrably fail and the corrected
form must verify — so a correction can never silently weaken a check.
The working tables carry the corrected forms.
*/

use crate::centralizer::casimir::non_commuting_generators;
use crate::centralizer::normal::CentralizerContext;
use crate::centralizer::tables::{tables, ErratumKind};
use crate::centralizer::width::verify_express_rule;
use crate::centralizer::CentError;

/// Outcome of checking one recorded correction in both directions.
#[derive(Debug)]
pub struct ErratumCheck {
    pub target: String,
    pub printed: String,
    pub corrected: String,
    pub note: String,
    /// The original form fails its check.
    pub printed_fails: bool,
    /// The corrected form passes the same check.
    pub corrected_verifies: bool,
    /// Human-readable evidence for the failure of the original form.
    pub witness: String,
}

impl ErratumCheck {
    pub fn ok(&self) -> bool {
        self.printed_fails && self.corrected_verifies
    }
}

/// Check every recorded correction for the context's algebra.
pub fn verify_errata(ctx: &CentralizerContext) -> Result<Vec<ErratumCheck>, CentError> {
    let tbl = tables(ctx.id());
    let mut out = Vec::new();
    for e in tbl.errata {
        let (printed_fails, corrected_verifies, witness) = match e.kind {
            ErratumKind::Casimir => {
                let p = ctx.expand_nc(&ctx.parse(e.printed)?)?;
                let c = ctx.expand_nc(&ctx.parse(e.corrected)?)?;
                let bad_p = non_commuting_generators(ctx, &p);
                let bad_c = non_commuting_generators(ctx, &c);
                let witness = format!(
                    "original {} fails to commute with {}",
                    e.target,
                    bad_p.join(", ")
                );
                (!bad_p.is_empty(), bad_c.is_empty(), witness)
            }
            ErratumKind::Express(k) => {
                let printed_fails = verify_express_rule(ctx, k, e.printed).is_err();
                let corrected_ok = verify_express_rule(ctx, k, e.corrected).is_ok();
                let witness = format!(
                    "original elimination formula for c{k} leaves a nonzero residual"
                );
                (printed_fails, corrected_ok, witness)
            }
        };
        out.push(ErratumCheck {
            target: e.target.to_string(),
            printed: e.printed.to_string(),
            corrected: e.corrected.to_string(),
            note: e.note.to_string(),
            printed_fails,
            corrected_verifies,
            witness,
        });
    }
    Ok(out)
}

// ===== Tests =====
