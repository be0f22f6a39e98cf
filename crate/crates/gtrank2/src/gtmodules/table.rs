/*! Parameter points and shift-term action tables.

A module in one of the lattice families is specified by a parameter
point: exact rational values for the family's free parameters. The
action of every Chevalley generator on a basis vector indexed by
(i, j, k) is a finite sum of shift terms, each moving the index by a
fixed offset and scaling by a rational function of i, j, k. This file
builds those tables with the parameters already substituted, so each
coefficient is a rational function over the index symbols alone.

The 8-dimensional algebra's table lists only the simple and lowest
root vectors; the rows of the remaining pair are derived from the
algebra brackets by composing rows. The 14-dimensional algebra also
carries diagonal rows for the four composite Cartan forms, which the
branching map needs as operator targets.
*/

use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::coeffs::{A2Coeffs, C2Coeffs, G2Coeffs};
use super::{is_integer, named_values, GtError};
use crate::exactmath::{rat, rat_int, RatFn, Rational, Symbol};
use crate::liealg::{build_algebra, AlgebraId, ChevalleyAlgebra};
use num::Zero;

// ===== Families =====

/// The module families, one per validated construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// 8-dimensional algebra, parameters (a1, a2, a3, t1, t2); the
    /// Casimir values xi and mu are derived from the cubic roots.
    A2,
    /// 10-dimensional algebra, parameters (a1, a2, a3, upsilon) with
    /// a4 = a3 and xi = 2(upsilon+1)(upsilon-2).
    C2V1,
    /// 10-dimensional algebra, parameters (a1, a2, a3, a4, upsilon)
    /// with upsilon in {0, 1}, hence xi = -4.
    C2V2,
    /// 10-dimensional algebra with unconstrained parameters. Not a
    /// module family: the shift operators are well defined, but the
    /// bracket axioms fail outside the two families above. Used as
    /// the negative control in the verification suites.
    C2Generic,
    /// 14-dimensional algebra, parameters (a1, a2, a3).
    G2,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::A2 => "a2",
            Family::C2V1 => "c2-v1",
            Family::C2V2 => "c2-v2",
            Family::C2Generic => "c2-generic",
            Family::G2 => "g2",
        }
    }

    pub fn algebra(self) -> AlgebraId {
        match self {
            Family::A2 => AlgebraId::A2,
            Family::C2V1 | Family::C2V2 | Family::C2Generic => AlgebraId::C2,
            Family::G2 => AlgebraId::G2,
        }
    }

    pub fn by_name(name: &str) -> Option<Family> {
        [
            Family::A2,
            Family::C2V1,
            Family::C2V2,
            Family::C2Generic,
            Family::G2,
        ]
        .into_iter()
        .find(|f| f.name() == name)
    }
}

// ===== Parameter points =====

/// Exact parameter values for one module, validated per family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParameterPoint {
    family: Family,
    values: BTreeMap<Symbol, Rational>,
}

fn constraint(family: Family, message: impl Into<String>) -> GtError {
    GtError::FamilyConstraint {
        family: family.name(),
        message: message.into(),
    }
}

impl ParameterPoint {
    /// 8-dimensional algebra family. The third lattice parameter must
    /// not be an integer; t1 and t2 are two cubic roots (the third is
    /// -t1-t2) from which the Casimir values xi and mu are derived.
    pub fn a2(
        a1: Rational,
        a2: Rational,
        a3: Rational,
        t1: Rational,
        t2: Rational,
    ) -> Result<ParameterPoint, GtError> {
        if is_integer(&a3) {
            return Err(constraint(Family::A2, format!("a3 = {a3} must not be an integer")));
        }
        let t3 = -(&t1 + &t2);
        let e2 = &(&(&t1 * &t2) + &(&t1 * &t3)) + &(&t2 * &t3);
        let e3 = &(&t1 * &t2) * &t3;
        let xi = -&e2 - rat_int(1);
        let mu = -&e3 - &xi;
        let mut values = BTreeMap::new();
        values.insert(Symbol::A1, a1);
        values.insert(Symbol::A2, a2);
        values.insert(Symbol::A3, a3);
        values.insert(Symbol::T1, t1);
        values.insert(Symbol::T2, t2);
        values.insert(Symbol::XI, xi);
        values.insert(Symbol::MU, mu);
        Ok(ParameterPoint { family: Family::A2, values })
    }

    /// First 10-dimensional family: a4 = a3, xi = 2(upsilon+1)(upsilon-2),
    /// a3 not an integer.
    pub fn c2_v1(
        a1: Rational,
        a2: Rational,
        a3: Rational,
        upsilon: Rational,
    ) -> Result<ParameterPoint, GtError> {
        if is_integer(&a3) {
            return Err(constraint(Family::C2V1, format!("a3 = {a3} must not be an integer")));
        }
        let a4 = a3.clone();
        Ok(Self::c2_point(Family::C2V1, a1, a2, a3, a4, upsilon))
    }

    /// Second 10-dimensional family: upsilon in {0, 1}, so xi = -4.
    /// With upsilon = 1 the coefficients have denominators in the s
    /// form, so a3 must not be an integer in that case; upsilon = 0
    /// leaves a3 unconstrained.
    pub fn c2_v2(
        a1: Rational,
        a2: Rational,
        a3: Rational,
        a4: Rational,
        upsilon: Rational,
    ) -> Result<ParameterPoint, GtError> {
        if !upsilon.is_zero() && upsilon != rat_int(1) {
            return Err(constraint(
                Family::C2V2,
                format!("upsilon = {upsilon} must be 0 or 1"),
            ));
        }
        if upsilon == rat_int(1) && is_integer(&a3) {
            return Err(constraint(
                Family::C2V2,
                format!("a3 = {a3} must not be an integer when upsilon = 1"),
            ));
        }
        Ok(Self::c2_point(Family::C2V2, a1, a2, a3, a4, upsilon))
    }

    /// Unconstrained 10-dimensional parameters, outside any module
    /// family. The shift operators still need pole-free coefficients,
    /// so a nonzero upsilon requires a non-integer a3.
    pub fn c2_generic(
        a1: Rational,
        a2: Rational,
        a3: Rational,
        a4: Rational,
        upsilon: Rational,
    ) -> Result<ParameterPoint, GtError> {
        if !upsilon.is_zero() && is_integer(&a3) {
            return Err(constraint(
                Family::C2Generic,
                format!("a3 = {a3} puts a coefficient pole on the lattice"),
            ));
        }
        Ok(Self::c2_point(Family::C2Generic, a1, a2, a3, a4, upsilon))
    }

    fn c2_point(
        family: Family,
        a1: Rational,
        a2: Rational,
        a3: Rational,
        a4: Rational,
        upsilon: Rational,
    ) -> ParameterPoint {
        let two = rat_int(2);
        let xi = &(&two * &(&upsilon + &rat_int(1))) * &(&upsilon - &two);
        let mut values = BTreeMap::new();
        values.insert(Symbol::A1, a1);
        values.insert(Symbol::A2, a2);
        values.insert(Symbol::A3, a3);
        values.insert(Symbol::A4, a4);
        values.insert(Symbol::UPSILON, upsilon);
        values.insert(Symbol::XI, xi);
        ParameterPoint { family, values }
    }

    /// 14-dimensional algebra family: a3 not an integer.
    pub fn g2(a1: Rational, a2: Rational, a3: Rational) -> Result<ParameterPoint, GtError> {
        if is_integer(&a3) {
            return Err(constraint(Family::G2, format!("a3 = {a3} must not be an integer")));
        }
        let mut values = BTreeMap::new();
        values.insert(Symbol::A1, a1);
        values.insert(Symbol::A2, a2);
        values.insert(Symbol::A3, a3);
        Ok(ParameterPoint { family: Family::G2, values })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn algebra(&self) -> AlgebraId {
        self.family.algebra()
    }

    /// Value of one parameter symbol, if the family carries it.
    pub fn value(&self, s: Symbol) -> Option<&Rational> {
        self.values.get(&s)
    }

    /// Value that must exist for this family.
    pub fn expect(&self, s: Symbol) -> Result<Rational, GtError> {
        self.values.get(&s).cloned().ok_or(GtError::MissingParameter(s))
    }

    pub fn values(&self) -> &BTreeMap<Symbol, Rational> {
        &self.values
    }

    /// Parameter names and values in display form.
    pub fn named(&self) -> BTreeMap<String, String> {
        named_values(&self.values)
    }

    /// Binding closure for coefficient evaluation.
    pub fn bind(&self, s: Symbol) -> Option<Rational> {
        self.values.get(&s).cloned()
    }

    /// Substitute every parameter of this point into a symbolic form,
    /// leaving only the index symbols active.
    pub fn substitute_into(&self, f: &RatFn) -> RatFn {
        let mut out = f.clone();
        for (s, v) in &self.values {
            out = out.substitute(*s, &RatFn::from_rat(v.clone()));
        }
        out
    }

    /// Claimed eigenvalues of the Casimir elements, as (index, value).
    pub fn casimir_claims(&self) -> Result<Vec<(usize, Rational)>, GtError> {
        match self.family {
            Family::A2 => Ok(vec![
                (1, self.expect(Symbol::XI)?),
                (2, self.expect(Symbol::MU)?),
            ]),
            Family::C2V1 | Family::C2V2 | Family::C2Generic => {
                let a3 = self.expect(Symbol::A3)?;
                let a4 = self.expect(Symbol::A4)?;
                if a3 == a4 {
                    let xi = self.expect(Symbol::XI)?;
                    let z2 = &(&rat(-1, 4) * &xi) * &(&xi + &rat_int(4));
                    Ok(vec![(1, xi), (2, z2)])
                } else {
                    let d = &a3 - &a4;
                    Ok(vec![(1, &(&d * &d) - &rat_int(4)), (2, Rational::zero())])
                }
            }
            Family::G2 => Ok(vec![(1, rat(14, 3))]),
        }
    }
}

// ===== Action tables =====

/// One shift term: move the index by `shift` and scale by `coeff`,
/// a rational function of the index symbols i, j, k evaluated at the
/// source point.
#[derive(Debug, Clone)]
pub struct ActionTerm {
    pub shift: [i64; 3],
    pub coeff: RatFn,
}

/// Action of one operator: a finite sum of shift terms.
#[derive(Debug, Clone)]
pub struct ActionRow {
    pub terms: Vec<ActionTerm>,
}

impl ActionRow {
    fn from_map(map: BTreeMap<[i64; 3], RatFn>) -> ActionRow {
        let terms = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(shift, coeff)| ActionTerm { shift, coeff })
            .collect();
        ActionRow { terms }
    }

    fn diag(coeff: RatFn) -> ActionRow {
        ActionRow {
            terms: vec![ActionTerm { shift: [0, 0, 0], coeff }],
        }
    }

    /// True when the row is a single unshifted term (or zero).
    pub fn is_diagonal(&self) -> bool {
        self.terms.iter().all(|t| t.shift == [0, 0, 0])
    }

    /// Scale every coefficient.
    fn scale(&self, c: &Rational) -> ActionRow {
        let cf = RatFn::from_rat(c.clone());
        ActionRow {
            terms: self
                .terms
                .iter()
                .map(|t| ActionTerm {
                    shift: t.shift,
                    coeff: &t.coeff * &cf,
                })
                .collect(),
        }
    }
}

/// Shift a coefficient form in all three index symbols at once.
pub(crate) fn shift_ijk(f: &RatFn, s: [i64; 3]) -> RatFn {
    f.shift_index(Symbol::I, s[0])
        .shift_index(Symbol::J, s[1])
        .shift_index(Symbol::K, s[2])
}

/// Compose rows as operators: apply `b` first, then `a`.
pub(crate) fn compose(a: &ActionRow, b: &ActionRow) -> ActionRow {
    let mut map: BTreeMap<[i64; 3], RatFn> = BTreeMap::new();
    for tb in &b.terms {
        for ta in &a.terms {
            let shift = [
                ta.shift[0] + tb.shift[0],
                ta.shift[1] + tb.shift[1],
                ta.shift[2] + tb.shift[2],
            ];
            let coeff = &shift_ijk(&ta.coeff, tb.shift) * &tb.coeff;
            let slot = map.entry(shift).or_insert_with(RatFn::zero);
            *slot = &*slot + &coeff;
        }
    }
    ActionRow::from_map(map)
}

/// Pointwise difference of two rows.
pub(crate) fn row_sub(a: &ActionRow, b: &ActionRow) -> ActionRow {
    let mut map: BTreeMap<[i64; 3], RatFn> = BTreeMap::new();
    for t in &a.terms {
        let slot = map.entry(t.shift).or_insert_with(RatFn::zero);
        *slot = &*slot + &t.coeff;
    }
    for t in &b.terms {
        let slot = map.entry(t.shift).or_insert_with(RatFn::zero);
        *slot = &*slot - &t.coeff;
    }
    ActionRow::from_map(map)
}

/// The commutator of two rows as operators.
pub(crate) fn row_commutator(a: &ActionRow, b: &ActionRow) -> ActionRow {
    row_sub(&compose(a, b), &compose(b, a))
}

/// A complete action table: one row per Chevalley generator, plus
/// named diagonal rows for composite Cartan forms where the source
/// tables provide them.
pub struct ActionTable {
    algebra: ChevalleyAlgebra,
    point: ParameterPoint,
    rows: Vec<ActionRow>,
    extra: BTreeMap<String, ActionRow>,
}

impl ActionTable {
    pub fn algebra(&self) -> &ChevalleyAlgebra {
        &self.algebra
    }

    pub fn point(&self) -> &ParameterPoint {
        &self.point
    }

    pub fn family(&self) -> Family {
        self.point.family()
    }

    /// Row of one generator by index.
    pub fn row(&self, gen: usize) -> &ActionRow {
        &self.rows[gen]
    }

    /// Row by operator label; covers generators and the extra
    /// composite Cartan rows.
    pub fn row_by_label(&self, label: &str) -> Result<&ActionRow, GtError> {
        if let Some(i) = self.algebra.index_of(label) {
            return Ok(&self.rows[i]);
        }
        self.extra
            .get(label)
            .ok_or_else(|| GtError::UnknownOperator(label.to_string()))
    }

    pub fn extra_labels(&self) -> impl Iterator<Item = &str> {
        self.extra.keys().map(|s| s.as_str())
    }

    /// Largest absolute index shift per axis over all rows.
    pub fn max_shift(&self) -> [i64; 3] {
        let mut m = [0i64; 3];
        for row in self.rows.iter().chain(self.extra.values()) {
            for t in &row.terms {
                for a in 0..3 {
                    m[a] = m[a].max(t.shift[a].abs());
                }
            }
        }
        m
    }

    /// JSON dump of the table: parameters and every operator's shift
    /// terms with coefficients in canonical text form.
    pub fn to_json(&self) -> Value {
        let row_json = |label: &str, row: &ActionRow| {
            json!({
                "operator": label,
                "terms": row.terms.iter().map(|t| json!({
                    "shift": t.shift,
                    "coeff": t.coeff.to_string(),
                })).collect::<Vec<_>>(),
            })
        };
        let mut operators = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            operators.push(row_json(self.algebra.label(i), row));
        }
        for (label, row) in &self.extra {
            operators.push(row_json(label, row));
        }
        json!({
            "algebra": self.algebra.id().name(),
            "family": self.point.family().name(),
            "parameters": self.point.named(),
            "operators": operators,
        })
    }
}

/// Build the action table for a parameter point.
pub fn build_action(point: &ParameterPoint) -> Result<ActionTable, GtError> {
    match point.algebra() {
        AlgebraId::A2 => build_a2(point),
        AlgebraId::C2 => build_c2(point),
        AlgebraId::G2 => build_g2(point),
    }
}

/// Substitute the point into a symbolic coefficient and check that
/// only index symbols remain.
fn bind_form(point: &ParameterPoint, f: &RatFn) -> RatFn {
    let out = point.substitute_into(f);
    debug_assert!(out
        .active_symbols()
        .iter()
        .all(|s| matches!(*s, Symbol::I | Symbol::J | Symbol::K)));
    out
}

struct RowSpec<'a> {
    label: &'a str,
    terms: Vec<([i64; 3], RatFn)>,
}

fn assemble(
    point: &ParameterPoint,
    specs: Vec<RowSpec<'_>>,
    extra_specs: Vec<RowSpec<'_>>,
) -> Result<ActionTable, GtError> {
    let algebra = build_algebra(point.algebra()).expect("algebra construction is internally consistent");
    let bind_row = |spec: &RowSpec<'_>| ActionRow {
        terms: spec
            .terms
            .iter()
            .map(|(shift, coeff)| ActionTerm {
                shift: *shift,
                coeff: bind_form(point, coeff),
            })
            .filter(|t| !t.coeff.is_zero())
            .collect(),
    };
    // Missing generator rows stay empty here and are derived from
    // brackets by the per-algebra builders.
    let mut rows: Vec<ActionRow> = vec![ActionRow { terms: Vec::new() }; algebra.dimension()];
    for spec in &specs {
        let idx = algebra
            .index_of(spec.label)
            .ok_or_else(|| GtError::UnknownOperator(spec.label.to_string()))?;
        rows[idx] = bind_row(spec);
    }
    let mut extra = BTreeMap::new();
    for spec in &extra_specs {
        extra.insert(spec.label.to_string(), bind_row(spec));
    }
    Ok(ActionTable {
        algebra,
        point: point.clone(),
        rows,
        extra,
    })
}

/// Derive the row of the generator `[x, y] = c z` from the rows of x
/// and y: row(z) = (1/c) [row(x), row(y)].
fn fill_from_bracket(table: &mut ActionTable, x: &str, y: &str, z: &str) {
    let ix = table.algebra.index_of(x).expect("known generator");
    let iy = table.algebra.index_of(y).expect("known generator");
    let iz = table.algebra.index_of(z).expect("known generator");
    let lc = table.algebra.bracket(ix, iy);
    assert!(
        lc.len() == 1 && lc[0].0 == iz,
        "bracket [{x}, {y}] is not a multiple of {z}"
    );
    let inv = Rational::from_integer(1.into()) / lc[0].1.clone();
    let row = row_commutator(&table.rows[ix], &table.rows[iy]).scale(&inv);
    table.rows[iz] = row;
}

fn build_a2(point: &ParameterPoint) -> Result<ActionTable, GtError> {
    let c = A2Coeffs::new();
    let s1 = c.s.shift_index(Symbol::J, 1);
    let cross = (&c.s * &s1).inv().expect("s is nonzero");
    let cross = &cross;
    let specs = vec![
        RowSpec { label: "h01", terms: vec![([0, 0, 0], c.h1.clone())] },
        RowSpec { label: "h10", terms: vec![([0, 0, 0], c.h2.clone())] },
        RowSpec { label: "e01", terms: vec![([1, 0, 0], c.s_plus.clone())] },
        RowSpec { label: "f01", terms: vec![([-1, 0, 0], c.s_minus.clone())] },
        RowSpec {
            label: "e10",
            terms: vec![
                ([0, 1, 0], c.q_minus.clone()),
                ([0, 1, 1], &c.s_minus * cross),
            ],
        },
        RowSpec {
            label: "f10",
            terms: vec![
                ([0, -1, -1], c.q_plus.clone()),
                ([0, -1, 0], &c.s_plus * cross),
            ],
        },
    ];
    let mut table = assemble(point, specs, Vec::new())?;
    // The composite-root rows follow from the brackets.
    fill_from_bracket(&mut table, "e01", "e10", "e11");
    fill_from_bracket(&mut table, "f10", "f01", "f11");
    Ok(table)
}

fn build_c2(point: &ParameterPoint) -> Result<ActionTable, GtError> {
    let c = C2Coeffs::new();
    let qp1 = c.q_plus.shift_index(Symbol::J, 1);
    let qm1 = c.q_minus.shift_index(Symbol::J, 1);
    let tm1 = c.t_minus.shift_index(Symbol::J, 1);
    let tpk = c.t_plus.shift_index(Symbol::K, -1);
    let two = RatFn::int(2);
    let specs = vec![
        RowSpec { label: "h01", terms: vec![([0, 0, 0], c.h1.clone())] },
        RowSpec { label: "h10", terms: vec![([0, 0, 0], c.h2.clone())] },
        RowSpec { label: "e01", terms: vec![([1, 0, 0], c.s_plus.clone())] },
        RowSpec { label: "f01", terms: vec![([-1, 0, 0], c.s_minus.clone())] },
        RowSpec {
            label: "e10",
            terms: vec![
                ([0, 1, 1], &c.s_minus * &qp1),
                ([0, 1, 0], &tm1 * &qm1),
            ],
        },
        RowSpec {
            label: "f10",
            terms: vec![
                ([0, -1, 0], &c.s_plus * &qp1),
                ([0, -1, -1], &tpk * &qm1),
            ],
        },
        RowSpec {
            label: "e11",
            terms: vec![
                ([1, 1, 1], -&(&c.s_plus * &qp1)),
                ([1, 1, 0], &tm1 * &qm1),
            ],
        },
        RowSpec {
            label: "f11",
            terms: vec![
                ([-1, -1, 0], &c.s_minus * &qp1),
                ([-1, -1, -1], -&(&tpk * &qm1)),
            ],
        },
        RowSpec { label: "e21", terms: vec![([1, 2, 1], &two * &tm1)] },
        RowSpec { label: "f21", terms: vec![([-1, -2, -1], &two * &tpk)] },
    ];
    assemble(point, specs, Vec::new())
}

fn build_g2(point: &ParameterPoint) -> Result<ActionTable, GtError> {
    let c = G2Coeffs::new();
    let sp = |di: i64, dj: i64, dk: i64| {
        c.s_plus
            .shift_index(Symbol::I, di)
            .shift_index(Symbol::J, dj)
            .shift_index(Symbol::K, dk)
    };
    let sm = |di: i64, dk: i64| {
        c.s_minus.shift_index(Symbol::I, di).shift_index(Symbol::K, dk)
    };
    let three = RatFn::int(3);
    let one = RatFn::one();
    let specs = vec![
        RowSpec { label: "h01", terms: vec![([0, 0, 0], c.h01.clone())] },
        RowSpec { label: "h21", terms: vec![([0, 0, 0], c.h21.clone())] },
        RowSpec { label: "e01", terms: vec![([1, 0, 0], c.s_plus.clone())] },
        RowSpec { label: "f01", terms: vec![([-1, 0, 0], c.s_minus.clone())] },
        RowSpec {
            label: "e21",
            terms: vec![([1, 2, 1], c.t_plus.shift_index(Symbol::J, 1))],
        },
        RowSpec {
            label: "f21",
            terms: vec![(
                [-1, -2, -1],
                c.t_minus.shift_index(Symbol::J, -1).shift_index(Symbol::K, -1),
            )],
        },
        RowSpec {
            label: "e10",
            terms: vec![
                ([0, 1, 0], three.clone()),
                ([0, 1, 1], &c.a_plus * &sm(0, 0)),
            ],
        },
        RowSpec {
            label: "f10",
            terms: vec![
                ([0, -1, -1], -&three),
                ([0, -1, 0], -&(&c.a_minus * &sp(0, 0, 0))),
            ],
        },
        RowSpec {
            label: "e11",
            terms: vec![
                ([1, 1, 0], -&three),
                ([1, 1, 1], &c.a_plus * &sp(1, 1, 0)),
            ],
        },
        RowSpec {
            label: "f11",
            terms: vec![
                ([-1, -1, -1], -&three),
                ([-1, -1, 0], &c.a_minus * &sm(1, 1)),
            ],
        },
        RowSpec {
            label: "e31",
            terms: vec![
                ([1, 3, 1], one.clone()),
                ([1, 3, 2], -&(&c.b_plus * &sm(1, 1))),
            ],
        },
        RowSpec {
            label: "f31",
            terms: vec![
                ([-1, -3, -2], one.clone()),
                ([-1, -3, -1], -&(&c.b_minus * &sp(1, 1, 0))),
            ],
        },
        RowSpec {
            label: "e32",
            terms: vec![
                ([2, 3, 1], -&one),
                ([2, 3, 2], -&(&c.b_plus * &sp(1, 1, 0))),
            ],
        },
        RowSpec {
            label: "f32",
            terms: vec![
                ([-2, -3, -2], one.clone()),
                ([-2, -3, -1], &c.b_minus * &sm(1, 1)),
            ],
        },
    ];
    let extra = vec![
        RowSpec { label: "h10", terms: vec![([0, 0, 0], c.h10.clone())] },
        RowSpec { label: "h11", terms: vec![([0, 0, 0], c.h11.clone())] },
        RowSpec { label: "h31", terms: vec![([0, 0, 0], c.h31.clone())] },
        RowSpec { label: "h32", terms: vec![([0, 0, 0], c.h32.clone())] },
    ];
    assemble(point, specs, extra)
}

// ===== Tests =====
