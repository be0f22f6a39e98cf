/*! Submodule splittings of the non-simple three-parameter modules.

When the simplicity conditions fail, the failing affine forms cut the
index lattice into half-spaces, and the half-space on the non-raising
side of each hyperplane spans a submodule. Two shapes occur:

* Case 1: one of the ladder forms S+ or S- acquires integer zeros
  (the constant becomes an odd integer combination of a1 and a3). The
  points with a nonpositive form value span a submodule; the quotient
  lives on the complementary open half-space.

* Case 2: the cubic ladder forms factor over three integer parameters
  k1 > k2 > k3. The parameter point is reconstructed from the roots,
  each factor collapses to the affine form k - k_m, and the three
  nested half-spaces k >= k_m give a filtration whose two middle
  quotients are bands of widths k1 - k2 and k2 - k3 in the k
  direction.

The factor reconstruction is pinned two-sided against the source
relation it corrects: the unshifted variant of the factor has no zero
at k = k_m, while the shifted variant collapses to exactly k - k_m.
Closure of the predicted regions under the full action is not assumed
here; the verification suites recheck it by applying every operator.
*/

use super::coeffs::A2Coeffs;
use super::conditions::IndexForm;
use super::table::{Family, ParameterPoint};
use super::{sign_of, GtError};
use crate::exactmath::{rat_int, RatFn, Rational, Symbol};

// ===== Case 1: one ladder hyperplane =====

/// A submodule cut out by a single vanishing ladder form.
#[derive(Debug, Clone)]
pub struct Case1Splitting {
    point: ParameterPoint,
    form: IndexForm,
}

impl Case1Splitting {
    pub fn point(&self) -> &ParameterPoint {
        &self.point
    }

    /// The ladder form with integer zeros.
    pub fn form(&self) -> &IndexForm {
        &self.form
    }

    /// Membership in the spanning region of the submodule: the closed
    /// nonpositive side of the hyperplane.
    pub fn in_submodule(&self, p: [i64; 3]) -> bool {
        sign_of(&self.form.eval(p)) <= 0
    }
}

/// Locate the vanishing ladder form of a three-parameter point. The
/// raising form S+ vanishes somewhere exactly when a1 + a3 is an odd
/// integer, the lowering form S- when a3 - a1 is; one of the two must
/// hold for the splitting to exist.
pub fn case1_splitting(point: &ParameterPoint) -> Result<Case1Splitting, GtError> {
    if point.family() != Family::A2 {
        return Err(GtError::FamilyConstraint {
            family: point.family().name(),
            message: "ladder-hyperplane splittings are a three-parameter construction".into(),
        });
    }
    let c = A2Coeffs::new();
    for (label, f) in [("S+", &c.s_plus), ("S-", &c.s_minus)] {
        let form = IndexForm::from_ratfn(label, &point.substitute_into(f))?;
        if form.has_integer_zero() {
            return Ok(Case1Splitting {
                point: point.clone(),
                form,
            });
        }
    }
    Err(GtError::FamilyConstraint {
        family: "a2",
        message: "neither ladder form vanishes on the lattice at this point".into(),
    })
}

// ===== Case 2: three cubic-root hyperplanes =====

/// The nested filtration cut out by the three factored cubic roots.
#[derive(Debug, Clone)]
pub struct Case2Splitting {
    point: ParameterPoint,
    roots: [i64; 3],
    t: [Rational; 3],
    hyperplanes: Vec<IndexForm>,
}

impl Case2Splitting {
    pub fn point(&self) -> &ParameterPoint {
        &self.point
    }

    /// The integer roots k1 > k2 > k3.
    pub fn roots(&self) -> [i64; 3] {
        self.roots
    }

    /// The cubic roots t_m determined by the integer roots.
    pub fn t_values(&self) -> &[Rational; 3] {
        &self.t
    }

    /// The three factor hyperplanes, each the affine form k - k_m.
    pub fn hyperplanes(&self) -> &[IndexForm] {
        &self.hyperplanes
    }

    /// Membership in the m-th spanning region (m = 1, 2, 3): the
    /// raising-closed half-space k >= k_m. The regions nest upward in
    /// m because the roots decrease.
    pub fn in_region(&self, m: usize, p: [i64; 3]) -> bool {
        assert!((1..=3).contains(&m), "region index out of range");
        p[2] >= self.roots[m - 1]
    }

    /// Slice widths in the k direction of the four filtration layers
    /// (innermost region, two middle quotients, outer quotient); the
    /// outer layers are unbounded.
    pub fn band_widths(&self) -> [Option<i64>; 4] {
        let [k1, k2, k3] = self.roots;
        [None, Some(k1 - k2), Some(k2 - k3), None]
    }
}

/// Reconstruct the module and its filtration from integer roots
/// k1 > k2 > k3 and free parameters a1, a2. The cubic roots are
/// t_m = (k1+k2+k3)/3 - k_m and the third lattice parameter is
/// a3 = 3 - (2(k1+k2+k3) + a1 + 2 a2)/3; with these values the m-th
/// shifted cubic factor collapses to the affine form k - k_m.
pub fn case2_splitting(
    a1: Rational,
    a2: Rational,
    roots: [i64; 3],
) -> Result<Case2Splitting, GtError> {
    if !(roots[0] > roots[1] && roots[1] > roots[2]) {
        return Err(GtError::RootsNotOrdered(roots));
    }
    let sum = rat_int(roots[0] + roots[1] + roots[2]);
    let third = Rational::new(1.into(), 3.into());
    let t: [Rational; 3] = std::array::from_fn(|m| &(&third * &sum) - &rat_int(roots[m]));
    let a3 = &rat_int(3)
        - &(&third * &(&(&rat_int(2) * &sum) + &(&a1 + &(&rat_int(2) * &a2))));
    let point = ParameterPoint::a2(a1, a2, a3, t[0].clone(), t[1].clone())?;
    let c = A2Coeffs::new();
    let u = point.substitute_into(&c.t_plus.shift_index(Symbol::K, -1));
    let mut hyperplanes = Vec::new();
    for m in 0..3 {
        let f = &u + &RatFn::from_rat(t[m].clone());
        let form = IndexForm::from_ratfn(&format!("T+(k-1)+t{}", m + 1), &f)?;
        // The factor must collapse to k - k_m; anything else means the
        // roots and parameters fell out of step.
        assert_eq!(form.coeffs, [0, 0, 1], "factor {} is a pure k form", form.label);
        assert_eq!(form.constant, rat_int(-roots[m]), "factor {} vanishes at its root", form.label);
        hyperplanes.push(form);
    }
    Ok(Case2Splitting {
        point,
        roots,
        t,
        hyperplanes,
    })
}

// ===== Tests =====
