/*! The universal enveloping algebra U(g) in PBW form.

Elements are exact rational combinations of standard monomials, the
ordered products x₁^{s₁}⋯x_k^{s_k} over the algebra's fixed generator
order. Multiplication straightens adjacent out-of-order pairs through
x·y = y·x + [x,y]; the rewrite terminates because each step either
lowers filtration degree or lowers the inversion count at equal degree.
The workhorse is a memoized "generator times standard monomial" product
from which all products are assembled, so repeated normal-form and
relation work stays cheap. Cached results are independent of cache
state, which makes concurrent use deterministic.
*/

use crate::exactmath::Rational;
use crate::liealg::{build_algebra, AlgebraId, ChevalleyAlgebra, LieError, LinComb, Root};
use num::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

/// Exponent vector over the algebra's ordered generators. The unit is
/// all zeros; degree is the exponent sum.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardMonomial(pub Vec<u16>);

impl StandardMonomial {
    pub fn unit(dim: usize) -> Self {
        StandardMonomial(vec![0; dim])
    }

    pub fn generator(dim: usize, i: usize) -> Self {
        let mut m = Self::unit(dim);
        m.0[i] = 1;
        m
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Lowest generator index with nonzero exponent.
    pub fn first_letter(&self) -> Option<usize> {
        self.0.iter().position(|&e| e > 0)
    }

    fn without_first(&self) -> StandardMonomial {
        let mut m = self.clone();
        let f = m.first_letter().expect("unit monomial has no letters");
        m.0[f] -= 1;
        m
    }

    fn prepend(&self, g: usize) -> StandardMonomial {
        let mut m = self.clone();
        m.0[g] += 1;
        m
    }

    /// Generator indices with multiplicity, in descending order; the
    /// fold order for left-multiplication.
    pub fn letters_desc(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree());
        for (i, &e) in self.0.iter().enumerate().rev() {
            for _ in 0..e {
                out.push(i);
            }
        }
        out
    }

    pub fn display<'a>(&'a self, alg: &'a ChevalleyAlgebra) -> impl fmt::Display + 'a {
        struct D<'a>(&'a StandardMonomial, &'a ChevalleyAlgebra);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.0.is_unit() {
                    return f.write_str("1");
                }
                let mut first = true;
                for (i, &e) in self.0 .0.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if !first {
                        f.write_str("*")?;
                    }
                    first = false;
                    if e == 1 {
                        write!(f, "{}", self.1.label(i))?;
                    } else {
                        write!(f, "{}^{}", self.1.label(i), e)?;
                    }
                }
                Ok(())
            }
        }
        D(self, alg)
    }
}

impl fmt::Debug for StandardMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X{:?}", self.0)
    }
}

/// Sparse exact element of U(g): standard monomial → coefficient, no
/// zeros stored, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UEAElement {
    terms: BTreeMap<StandardMonomial, Rational>,
}

/// Weight of an element under the Cartan grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weight {
    Homogeneous(Root),
    NonHomogeneous,
}

impl UEAElement {
    pub fn zero() -> Self {
        UEAElement::default()
    }

    pub fn unit(dim: usize) -> Self {
        Self::from_monomial(StandardMonomial::unit(dim), Rational::one())
    }

    pub fn from_monomial(m: StandardMonomial, c: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub fn generator(dim: usize, i: usize) -> Self {
        Self::from_monomial(StandardMonomial::generator(dim, i), Rational::one())
    }

    /// Degree-1 embedding of a Lie algebra element.
    pub fn from_lincomb(dim: usize, lc: &LinComb) -> Self {
        let mut e = Self::zero();
        for (i, c) in lc {
            e.add_term(StandardMonomial::generator(dim, *i), c.clone());
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&StandardMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &StandardMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: StandardMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &UEAElement) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &UEAElement, s: &Rational) {
        if s.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * s);
        }
    }

    pub fn sub(&self, other: &UEAElement) -> UEAElement {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn scale(&self, s: &Rational) -> UEAElement {
        let mut out = Self::zero();
        out.add_scaled(self, s);
        out
    }

    /// Filtration degree; None for the zero element.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(StandardMonomial::degree).max()
    }

    /// Terms of maximal degree, as a new element.
    pub fn top_degree_part(&self) -> UEAElement {
        let Some(d) = self.degree() else { return Self::zero() };
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if m.degree() == d {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn display<'a>(&'a self, alg: &'a ChevalleyAlgebra) -> impl fmt::Display + 'a {
        struct D<'a>(&'a UEAElement, &'a ChevalleyAlgebra);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.0.is_zero() {
                    return f.write_str("0");
                }
                for (n, (m, c)) in self.0.terms.iter().enumerate() {
                    if n > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "({})*{}", c, m.display(self.1))?;
                }
                Ok(())
            }
        }
        D(self, alg)
    }
}

/// A word in generator labels, before straightening. Carries the split
/// into Cartan letters and root letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    pub letters: Vec<usize>,
}

impl Word {
    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn cartan_letters(&self, alg: &ChevalleyAlgebra) -> Vec<usize> {
        self.letters.iter().copied().filter(|&i| alg.gen(i).root.is_none()).collect()
    }

    pub fn root_letters(&self, alg: &ChevalleyAlgebra) -> Vec<Root> {
        self.letters.iter().filter_map(|&i| alg.gen(i).root).collect()
    }

    /// Sum of the letter roots: the weight of the word.
    pub fn weight(&self, alg: &ChevalleyAlgebra) -> Root {
        self.root_letters(alg).into_iter().fold(Root::new(0, 0), Root::add)
    }
}

/// U(g) context: the algebra plus the straightening memo table.
pub struct Uea {
    alg: ChevalleyAlgebra,
    cache: Mutex<HashMap<(usize, StandardMonomial), UEAElement>>,
}

impl Uea {
    pub fn new(id: AlgebraId) -> Self {
        Self::over(build_algebra(id).expect("algebra construction is internally consistent"))
    }

    pub fn over(alg: ChevalleyAlgebra) -> Self {
        Uea { alg, cache: Mutex::new(HashMap::new()) }
    }

    pub fn algebra(&self) -> &ChevalleyAlgebra {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.alg.dimension()
    }

    pub fn unit(&self) -> UEAElement {
        UEAElement::unit(self.dim())
    }

    pub fn generator(&self, label: &str) -> Result<UEAElement, LieError> {
        let i = self
            .alg
            .index_of(label)
            .ok_or_else(|| LieError::UnknownLabel(label.to_string()))?;
        Ok(UEAElement::generator(self.dim(), i))
    }

    pub fn word_from_labels(&self, labels: &[&str]) -> Result<Word, LieError> {
        let letters = labels
            .iter()
            .map(|l| self.alg.index_of(l).ok_or_else(|| LieError::UnknownLabel(l.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Word { letters })
    }

    /// x_g · X_m straightened, the memoized core of multiplication.
    ///
    /// If g does not exceed the first letter the product is again
    /// standard; otherwise peel the first letter f and rewrite
    /// g·(f·m') = f·(g·m') + [g,f]·m', recursing on strictly smaller
    /// (degree, inversion) pairs.
    fn gen_mono_mul(&self, g: usize, m: &StandardMonomial) -> UEAElement {
        if m.is_unit() {
            return UEAElement::generator(self.dim(), g);
        }
        let f = m.first_letter().expect("non-unit monomial has a first letter");
        if g <= f {
            return UEAElement::from_monomial(m.prepend(g), Rational::one());
        }
        let key = (g, m.clone());
        if let Some(hit) = self.cache.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let rest = m.without_first();
        let g_rest = self.gen_mono_mul(g, &rest);
        let mut out = self.gen_mul_element(f, &g_rest);
        for (k, c) in self.alg.bracket(g, f) {
            out.add_scaled(&self.gen_mono_mul(*k, &rest), c);
        }
        self.cache.lock().unwrap().insert(key, out.clone());
        out
    }

    /// x_g · a for an arbitrary element a.
    pub fn gen_mul_element(&self, g: usize, a: &UEAElement) -> UEAElement {
        let mut out = UEAElement::zero();
        for (m, c) in a.terms() {
            out.add_scaled(&self.gen_mono_mul(g, m), c);
        }
        out
    }

    /// X_{m} · a, folding the letters of m right to left.
    fn mono_mul_element(&self, m: &StandardMonomial, a: &UEAElement) -> UEAElement {
        let mut acc = a.clone();
        for g in m.letters_desc() {
            acc = self.gen_mul_element(g, &acc);
        }
        acc
    }

    /// Product in U(g), expanded in the standard-monomial basis.
    pub fn multiply(&self, a: &UEAElement, b: &UEAElement) -> UEAElement {
        let mut out = UEAElement::zero();
        for (m, c) in a.terms() {
            out.add_scaled(&self.mono_mul_element(m, b), c);
        }
        out
    }

    pub fn commutator(&self, a: &UEAElement, b: &UEAElement) -> UEAElement {
        self.multiply(a, b).sub(&self.multiply(b, a))
    }

    /// Straightened product of the word's letters, left to right.
    pub fn word_to_element(&self, w: &Word) -> UEAElement {
        let mut acc = self.unit();
        for &g in w.letters.iter().rev() {
            acc = self.gen_mul_element(g, &acc);
        }
        acc
    }

    pub fn monomial_weight(&self, m: &StandardMonomial) -> Root {
        let mut w = Root::new(0, 0);
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if let Some(r) = self.alg.gen(i).root {
                w = Root::new(w.m + r.m * e as i64, w.n + r.n * e as i64);
            }
        }
        w
    }

    /// Common weight of all terms, or the mixed-weight marker.
    pub fn weight_of(&self, x: &UEAElement) -> Weight {
        let mut it = x.terms();
        let Some((m0, _)) = it.next() else {
            return Weight::Homogeneous(Root::new(0, 0));
        };
        let w = self.monomial_weight(m0);
        for (m, _) in it {
            if self.monomial_weight(m) != w {
                return Weight::NonHomogeneous;
            }
        }
        Weight::Homogeneous(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat_int;
    use proptest::prelude::*;

    fn a2() -> Uea {
        Uea::new(AlgebraId::A2)
    }

    #[test]
    fn one_straightening_step_produces_commutator_term() {
        let u = a2();
        let e01 = u.generator("e01").unwrap();
        let f01 = u.generator("f01").unwrap();
        let prod = u.multiply(&e01, &f01);

        let dim = u.dim();
        let alg = u.algebra();
        let mut fe = StandardMonomial::unit(dim);
        fe.0[alg.index_of("f01").unwrap()] = 1;
        fe.0[alg.index_of("e01").unwrap()] = 1;
        let h01 = StandardMonomial::generator(dim, alg.index_of("h01").unwrap());

        let mut expect = UEAElement::zero();
        expect.add_term(fe, rat_int(1));
        expect.add_term(h01, rat_int(1));
        assert_eq!(prod, expect);
    }

    #[test]
    fn unit_is_neutral() {
        let u = a2();
        let x = u.multiply(&u.generator("f10").unwrap(), &u.generator("e11").unwrap());
        assert_eq!(u.multiply(&u.unit(), &x), x);
        assert_eq!(u.multiply(&x, &u.unit()), x);
    }

    #[test]
    fn cartan_times_root_vector_straightens_with_eigenvalue() {
        let u = a2();
        let h01 = u.generator("h01").unwrap();
        let e01 = u.generator("e01").unwrap();

        let alg = u.algebra();
        let hi = alg.index_of("h01").unwrap();
        let ei = alg.index_of("e01").unwrap();
        let eigen = alg.bracket(hi, ei)[0].1.clone();
        assert_eq!(eigen, rat_int(2));

        let dim = u.dim();
        let mut he = StandardMonomial::unit(dim);
        he.0[hi] = 1;
        he.0[ei] = 1;

        // h01 precedes e01 in the order, so h01·e01 is already standard;
        // the reversed product straightens and picks up the eigenvalue.
        assert_eq!(u.multiply(&h01, &e01), UEAElement::from_monomial(he.clone(), rat_int(1)));
        let mut expect = UEAElement::from_monomial(he, rat_int(1));
        expect.add_term(StandardMonomial::generator(dim, ei), -eigen);
        assert_eq!(u.multiply(&e01, &h01), expect);
    }

    #[test]
    fn word_to_element_keeps_ordered_words_and_handles_unit() {
        let u = a2();
        let w = u.word_from_labels(&["f01", "e01"]).unwrap();
        let x = u.word_to_element(&w);
        assert_eq!(x.num_terms(), 1);
        assert_eq!(x.degree(), Some(2));

        let c4 = u.word_from_labels(&["f11", "e10", "e01"]).unwrap();
        let y = u.word_to_element(&c4);
        assert_eq!(y.num_terms(), 1, "an already ordered word is a standard monomial");
        assert_eq!(y.degree(), Some(3));

        assert_eq!(u.word_to_element(&Word::empty()), u.unit());
    }

    #[test]
    fn words_carry_cartan_and_root_letter_lists() {
        let u = a2();
        let alg = u.algebra();
        let w = u.word_from_labels(&["h01", "f01", "e01", "h10"]).unwrap();
        assert_eq!(w.cartan_letters(alg).len(), 2);
        assert_eq!(w.root_letters(alg), vec![Root::new(0, -1), Root::new(0, 1)]);
        assert_eq!(w.weight(alg), Root::new(0, 0));
    }

    #[test]
    fn weights_add_and_mixed_sums_are_flagged() {
        let u = a2();
        let f01e01 = u.multiply(&u.generator("f01").unwrap(), &u.generator("e01").unwrap());
        assert_eq!(u.weight_of(&f01e01), Weight::Homogeneous(Root::new(0, 0)));
        assert_eq!(
            u.weight_of(&u.generator("e10").unwrap()),
            Weight::Homogeneous(Root::new(1, 0))
        );

        let mut mixed = u.generator("e10").unwrap();
        mixed.add_assign(&u.generator("f10").unwrap());
        assert_eq!(u.weight_of(&mixed), Weight::NonHomogeneous);
    }

    #[test]
    fn degrees_follow_the_filtration() {
        let u = a2();
        assert_eq!(u.generator("h01").unwrap().degree(), Some(1));
        assert_eq!(u.unit().degree(), Some(0));
        assert_eq!(UEAElement::zero().degree(), None);
    }

    #[test]
    fn degree_one_commutators_match_structure_constants() {
        for id in AlgebraId::all() {
            let u = Uea::new(id);
            let dim = u.dim();
            for i in 0..dim {
                for j in 0..dim {
                    let a = UEAElement::generator(dim, i);
                    let b = UEAElement::generator(dim, j);
                    let comm = u.commutator(&a, &b);
                    let expect = UEAElement::from_lincomb(dim, u.algebra().bracket(i, j));
                    assert_eq!(comm, expect, "{id}: [{}, {}]", u.algebra().label(i), u.algebra().label(j));
                }
            }
        }
    }

    #[test]
    fn concurrent_products_agree() {
        use std::sync::Arc;
        let u = Arc::new(Uea::new(AlgebraId::C2));
        let a = u.multiply(&u.generator("e10").unwrap(), &u.generator("e01").unwrap());
        let b = u.multiply(&u.generator("f10").unwrap(), &u.generator("f01").unwrap());
        let mut handles = Vec::new();
        for _ in 0..4 {
            let u2 = Arc::clone(&u);
            let (a2c, b2c) = (a.clone(), b.clone());
            handles.push(std::thread::spawn(move || u2.multiply(&a2c, &b2c)));
        }
        let results: Vec<UEAElement> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        let expect = u.multiply(&a, &b);
        for r in results {
            assert_eq!(r, expect);
        }
    }

    // ===== Algebra laws on randomized elements =====

    fn arb_monomial(dim: usize) -> impl Strategy<Value = StandardMonomial> {
        prop::collection::vec(0u16..=1, dim)
            .prop_map(StandardMonomial)
            .prop_filter("keep degree small", |m| m.degree() <= 2)
    }

    fn arb_element() -> impl Strategy<Value = UEAElement> {
        prop::collection::vec((arb_monomial(8), -3i64..=3), 1..3).prop_map(|terms| {
            let mut e = UEAElement::zero();
            for (m, c) in terms {
                e.add_term(m, rat_int(c));
            }
            e
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn multiplication_is_associative(a in arb_element(), b in arb_element(), c in arb_element()) {
            let u = a2();
            let left = u.multiply(&u.multiply(&a, &b), &c);
            let right = u.multiply(&a, &u.multiply(&b, &c));
            prop_assert_eq!(left, right);
        }

        #[test]
        fn multiplication_distributes_over_addition(a in arb_element(), b in arb_element(), c in arb_element()) {
            let u = a2();
            let mut bc = b.clone();
            bc.add_assign(&c);
            let lhs = u.multiply(&a, &bc);
            let mut rhs = u.multiply(&a, &b);
            rhs.add_assign(&u.multiply(&a, &c));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn weights_are_additive(m1 in arb_monomial(8), m2 in arb_monomial(8)) {
            let u = a2();
            let a = UEAElement::from_monomial(m1.clone(), rat_int(1));
            let b = UEAElement::from_monomial(m2.clone(), rat_int(1));
            let prod = u.multiply(&a, &b);
            let w1 = u.monomial_weight(&m1);
            let w2 = u.monomial_weight(&m2);
            match u.weight_of(&prod) {
                Weight::Homogeneous(w) => prop_assert_eq!(w, w1.add(w2)),
                Weight::NonHomogeneous => prop_assert!(false, "product of homogeneous terms stays homogeneous"),
            }
        }

        #[test]
        fn degrees_respect_filtration_bounds(m1 in arb_monomial(8), m2 in arb_monomial(8)) {
            let u = a2();
            let a = UEAElement::from_monomial(m1.clone(), rat_int(1));
            let b = UEAElement::from_monomial(m2.clone(), rat_int(1));
            let (da, db) = (m1.degree(), m2.degree());

            let prod = u.multiply(&a, &b);
            prop_assert_eq!(prod.degree(), Some(da + db), "the top PBW term never cancels");

            let comm = u.commutator(&a, &b);
            if let Some(dc) = comm.degree() {
                prop_assert!(dc + 1 <= da + db, "commutator drops filtration degree");
            }
        }
    }
}
