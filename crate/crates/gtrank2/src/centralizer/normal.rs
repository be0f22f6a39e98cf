/*! Normal forms in the semi-perfect basis.

The expansion map omega sends a word of perfect generators to its
product in U(g). For a semi-perfect monomial Y with content X, the top
filtration layer of omega(Y) is exactly the standard monomial X with
coefficient one: in the associated graded algebra (a polynomial ring)
the product of the letters is the sorted monomial itself. Normal forms
therefore follow by back-substitution from the top degree down: peel
the largest standard monomial, emit the semi-perfect monomial with its
content, subtract its expansion, and recurse on the strictly smaller
remainder. The loop ends at zero, which certifies exactness; any
deviation from unit leading coefficients aborts loudly.

[`CentralizerContext`] owns the algebra, the validated perfect set, the
memoized word expansions, and the expanded Casimir elements needed to
interpret z symbols in coefficients.
*/

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use crate::centralizer::perfect::{perfect_monomials, PerfectSet, SemiPerfectMonomial};
use crate::centralizer::relations::{parse, NcElem};
use crate::centralizer::tables::tables;
use crate::centralizer::CentError;
use crate::exactmath::{Mono, Poly, Rational, Symbol};
use crate::liealg::{AlgebraId, Root};
use crate::uea::{StandardMonomial, UEAElement, Uea, Weight};

/// Exponent vector over the perfect generators c1..cq.
pub type CMono = Vec<u16>;

/// Convert a nondecreasing word to its exponent vector.
pub fn word_to_cmono(q: usize, word: &[u8]) -> CMono {
    let mut exps = vec![0u16; q];
    for &k in word {
        exps[(k - 1) as usize] += 1;
    }
    exps
}

/// Convert an exponent vector to the nondecreasing word it encodes.
pub fn cmono_to_word(exps: &[u16]) -> Vec<u8> {
    let mut word = Vec::new();
    for (i, &e) in exps.iter().enumerate() {
        for _ in 0..e {
            word.push((i + 1) as u8);
        }
    }
    word
}

/// An element of U0 written over the semi-perfect basis: polynomial
/// coefficients in h1, h2 attached to c-exponent vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct CentElem {
    terms: BTreeMap<CMono, Poly>,
}

impl CentElem {
    pub fn zero() -> Self {
        CentElem { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CMono, &Poly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &CMono) -> Poly {
        self.terms.get(m).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn add_term(&mut self, m: CMono, p: Poly) {
        if p.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Poly::zero);
        *entry = &*entry + &p;
        if entry.is_zero() {
            let key: Vec<CMono> = self
                .terms
                .iter()
                .filter(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn sub(&self, other: &CentElem) -> CentElem {
        let mut out = self.clone();
        for (m, p) in &other.terms {
            out.add_term(m.clone(), -p);
        }
        out
    }
}

impl fmt::Display for CentElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, p) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", p)?;
            for (i, &e) in m.iter().enumerate() {
                if e == 1 {
                    write!(f, "*c{}", i + 1)?;
                } else if e > 1 {
                    write!(f, "*c{}^{}", i + 1, e)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CentElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Shared state for centralizer computations in one algebra.
pub struct CentralizerContext {
    uea: Uea,
    pset: PerfectSet,
    /// Expansion of an ordered sequence of perfect letters.
    words: Mutex<HashMap<Vec<u8>, UEAElement>>,
    /// Expanded Casimir elements, interpreting z1 (and z2) symbols.
    z_elems: Vec<UEAElement>,
    /// Parsed coefficient aliases from the reference tables.
    aliases: HashMap<String, NcElem>,
}

impl CentralizerContext {
    pub fn new(id: AlgebraId) -> Result<Self, CentError> {
        let uea = Uea::new(id);
        let pset = perfect_monomials(&uea)?;
        let tbl = tables(id);
        let mut aliases: HashMap<String, NcElem> = HashMap::new();
        for (name, expr) in tbl.aliases {
            let nc = parse(pset.q(), &aliases, expr)?;
            aliases.insert(name.to_string(), nc);
        }
        let mut ctx = CentralizerContext {
            uea,
            pset,
            words: Mutex::new(HashMap::new()),
            z_elems: Vec::new(),
            aliases,
        };
        let mut z_elems = Vec::new();
        for s in tbl.casimirs {
            let nc = ctx.parse(s)?;
            // Casimir definitions are z-free, so expansion cannot recurse.
            z_elems.push(ctx.expand_nc(&nc)?);
        }
        ctx.z_elems = z_elems;
        Ok(ctx)
    }

    pub fn uea(&self) -> &Uea {
        &self.uea
    }

    pub fn pset(&self) -> &PerfectSet {
        &self.pset
    }

    pub fn id(&self) -> AlgebraId {
        self.pset.id()
    }

    /// The expanded Casimir z_index (1-based).
    pub fn z_element(&self, index: usize) -> Result<&UEAElement, CentError> {
        self.z_elems.get(index - 1).ok_or(CentError::UnsupportedCasimir {
            algebra: self.id().name(),
            index,
        })
    }

    pub fn parse(&self, input: &str) -> Result<NcElem, CentError> {
        parse(self.pset.q(), &self.aliases, input)
    }

    /// Expansion of an ordered sequence of perfect letters, memoized.
    pub fn word_element(&self, seq: &[u8]) -> UEAElement {
        if seq.is_empty() {
            return self.uea.unit();
        }
        if let Some(e) = self.words.lock().unwrap().get(seq) {
            return e.clone();
        }
        let (head, last) = seq.split_at(seq.len() - 1);
        let prefix = self.word_element(head);
        let out = self
            .uea
            .multiply(&prefix, &self.pset.item(last[0]).element);
        self.words
            .lock()
            .unwrap()
            .insert(seq.to_vec(), out.clone());
        out
    }

    /// Expansion of h1^a h2^b times an ordered word.
    pub fn expand_monomial(&self, h_exp: [u16; 2], seq: &[u8]) -> UEAElement {
        let mut out = self.word_element(seq);
        let [g1, g2] = self.pset.h_gens();
        for _ in 0..h_exp[1] {
            out = self.uea.gen_mul_element(g2, &out);
        }
        for _ in 0..h_exp[0] {
            out = self.uea.gen_mul_element(g1, &out);
        }
        out
    }

    /// Expand a noncommutative expression into U(g). Coefficients must
    /// be polynomial (clear denominators first) over h1, h2, z1, z2.
    pub fn expand_nc(&self, nc: &NcElem) -> Result<UEAElement, CentError> {
        let mut acc = UEAElement::zero();
        for (word, coeff) in nc.terms() {
            let poly = coeff.as_poly().ok_or(CentError::UnclearedDenominator)?;
            let base = self.word_element(word);
            for (mono, rat) in poly.terms() {
                for s in mono.symbols() {
                    if ![Symbol::H1, Symbol::H2, Symbol::Z1, Symbol::Z2].contains(&s) {
                        return Err(CentError::Parse {
                            input: coeff.to_string(),
                            message: format!("symbol {} cannot be expanded", s.name()),
                        });
                    }
                }
                let mut el = base.clone();
                let [g1, g2] = self.pset.h_gens();
                for _ in 0..mono.degree_in(Symbol::H2) {
                    el = self.uea.gen_mul_element(g2, &el);
                }
                for _ in 0..mono.degree_in(Symbol::H1) {
                    el = self.uea.gen_mul_element(g1, &el);
                }
                for _ in 0..mono.degree_in(Symbol::Z1) {
                    el = self.uea.multiply(self.z_element(1)?, &el);
                }
                for _ in 0..mono.degree_in(Symbol::Z2) {
                    el = self.uea.multiply(self.z_element(2)?, &el);
                }
                acc.add_scaled(&el, rat);
            }
        }
        Ok(acc)
    }

    /// Expand an element written over the semi-perfect basis.
    pub fn expand_cent(&self, ce: &CentElem) -> Result<UEAElement, CentError> {
        let mut acc = UEAElement::zero();
        for (m, p) in ce.terms() {
            let word = cmono_to_word(m);
            let base = self.word_element(&word);
            for (mono, rat) in p.terms() {
                for s in mono.symbols() {
                    if ![Symbol::H1, Symbol::H2].contains(&s) {
                        return Err(CentError::Parse {
                            input: p.to_string(),
                            message: format!("symbol {} is not allowed here", s.name()),
                        });
                    }
                }
                let h_exp = [mono.degree_in(Symbol::H1), mono.degree_in(Symbol::H2)];
                let mut el = base.clone();
                let [g1, g2] = self.pset.h_gens();
                for _ in 0..h_exp[1] {
                    el = self.uea.gen_mul_element(g2, &el);
                }
                for _ in 0..h_exp[0] {
                    el = self.uea.gen_mul_element(g1, &el);
                }
                acc.add_scaled(&el, rat);
            }
        }
        Ok(acc)
    }

    /// Split a weight-zero standard monomial into h exponents and its
    /// root content over the algebra's root order.
    fn split_content(&self, m: &StandardMonomial) -> ([u16; 2], Vec<u16>) {
        let alg = self.uea.algebra();
        let roots = alg.roots();
        let mut content = vec![0u16; roots.len()];
        let [g1, g2] = self.pset.h_gens();
        let mut h_exp = [0u16; 2];
        for (g, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if g == g1 {
                h_exp[0] = e;
            } else if g == g2 {
                h_exp[1] = e;
            } else {
                let root = alg.gen(g).root.expect("non-Cartan letter must carry a root");
                let ri = roots.iter().position(|r| *r == root).unwrap();
                content[ri] += e;
            }
        }
        (h_exp, content)
    }
}

/// Rewrite a weight-zero element of U(g) over the semi-perfect basis.
/// The subtraction loop reaches zero exactly or reports the obstruction.
pub fn normal_form(ctx: &CentralizerContext, x: &UEAElement) -> Result<CentElem, CentError> {
    match ctx.uea().weight_of(x) {
        Weight::Homogeneous(r) if r == Root::new(0, 0) => {}
        _ if x.is_zero() => return Ok(CentElem::zero()),
        _ => return Err(CentError::NotWeightZero),
    }
    let mut rest = x.clone();
    let mut out = CentElem::zero();
    while !rest.is_zero() {
        let top = rest.degree().unwrap();
        // Largest monomial at the top degree.
        let (m, gamma) = rest
            .terms()
            .filter(|(m, _)| m.degree() == top)
            .map(|(m, c)| (m.clone(), c.clone()))
            .max_by(|a, b| a.0.cmp(&b.0))
            .unwrap();
        let (h_exp, content) = ctx.split_content(&m);
        let word = ctx
            .pset()
            .minword(&content)
            .ok_or_else(|| CentError::NoSemiPerfectWord(content.clone()))?;
        let expansion = ctx.expand_monomial(h_exp, &word);
        assert!(
            expansion.coeff(&m) == crate::exactmath::rat_int(1),
            "expansion is not unitriangular at {:?}",
            m
        );
        rest.add_scaled(&expansion, &-gamma.clone());
        assert!(rest.coeff(&m) == Rational::from_integer(0.into()));
        let mut hpoly = Mono::unit();
        hpoly.0[Symbol::H1.index()] = h_exp[0];
        hpoly.0[Symbol::H2.index()] = h_exp[1];
        out.add_term(
            word_to_cmono(ctx.pset().q(), &word),
            Poly::from_terms([(hpoly, gamma)]),
        );
    }
    Ok(out)
}

/// Certificate that the expansions of all scanned semi-perfect
/// monomials are unitriangular against their content monomials, which
/// proves their linear independence.
pub fn certify_unitriangular(
    ctx: &CentralizerContext,
    monomials: &[SemiPerfectMonomial],
) -> Result<(), String> {
    use crate::centralizer::perfect::content_monomial;
    for sp in monomials {
        let expansion = ctx.expand_monomial(sp.h_exp, &sp.word);
        let target = content_monomial(ctx.uea(), ctx.pset(), sp);
        let top = expansion.top_degree_part();
        if top.num_terms() != 1 || top.coeff(&target) != crate::exactmath::rat_int(1) {
            return Err(format!(
                "expansion of {:?} is not unitriangular",
                sp
            ));
        }
    }
    Ok(())
}

// ===== Tests =====
