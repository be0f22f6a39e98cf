/*! Perfect monomials and the semi-perfect basis of U0.

A perfect monomial c_k is the ordered product of the root vectors named
by one indecomposable weight-zero list. The table words are validated
against the independent enumeration: every word must be the canonical
sorted product of exactly one enumerated list, and the correspondence
must be a bijection.

A semi-perfect monomial is h1^a h2^b times the lexicographically
smallest nondecreasing word of perfect generators whose lists sum to a
given weight-zero content. Contents are in bijection with weight-zero
standard monomials, which makes the semi-perfect monomials a candidate
basis; linear independence is certified separately through the
unitriangularity of their expansions.
*/

use std::collections::{BTreeSet, HashMap};
use std::sync::Mutex;

use crate::centralizer::hilbert::{enumerate_indecomposable, MultiplicityVector};
use crate::centralizer::tables::tables;
use crate::centralizer::CentError;
use crate::liealg::AlgebraId;
use crate::uea::{StandardMonomial, UEAElement, Uea};

/// One perfect generator c_k with its defining word and list.
pub struct PerfectMonomial {
    /// 1-based index: the k of c_k.
    pub index: u8,
    /// Generator labels of the word, in PBW order.
    pub labels: Vec<String>,
    /// Generator indices of the word, ascending.
    pub word: Vec<usize>,
    /// Multiplicity vector of the underlying root list.
    pub list: MultiplicityVector,
    /// The monomial as a PBW element (single term, coefficient one).
    pub element: UEAElement,
}

/// The validated family c_1..c_q for one algebra.
pub struct PerfectSet {
    id: AlgebraId,
    h_gens: [usize; 2],
    items: Vec<PerfectMonomial>,
    memo: Mutex<HashMap<(Vec<u16>, usize), bool>>,
}

impl PerfectSet {
    pub fn id(&self) -> AlgebraId {
        self.id
    }

    /// Generator indices realizing h1 and h2.
    pub fn h_gens(&self) -> [usize; 2] {
        self.h_gens
    }

    pub fn q(&self) -> usize {
        self.items.len()
    }

    pub fn items(&self) -> &[PerfectMonomial] {
        &self.items
    }

    /// The perfect generator c_k, 1-based.
    pub fn item(&self, k: u8) -> &PerfectMonomial {
        &self.items[(k - 1) as usize]
    }

    /// Number of root-vector letters in c_k.
    pub fn degree_of(&self, k: u8) -> usize {
        self.item(k).word.len()
    }

    /// Total root content of a nondecreasing c-word.
    pub fn content_of_word(&self, word: &[u8]) -> MultiplicityVector {
        let n = self.items[0].list.len();
        let mut out = vec![0u16; n];
        for &k in word {
            for (o, l) in out.iter_mut().zip(&self.item(k).list) {
                *o += l;
            }
        }
        out
    }

    /// True when `content` is a sum of lists of c_k with k-1 >= lo.
    fn decomposes(&self, content: &[u16], lo: usize) -> bool {
        if content.iter().all(|&k| k == 0) {
            return true;
        }
        if lo >= self.items.len() {
            return false;
        }
        let key = (content.to_vec(), lo);
        if let Some(&v) = self.memo.lock().unwrap().get(&key) {
            return v;
        }
        let mut ok = false;
        for i in lo..self.items.len() {
            let list = &self.items[i].list;
            if content.iter().zip(list).all(|(a, b)| a >= b) {
                let rest: Vec<u16> = content.iter().zip(list).map(|(a, b)| a - b).collect();
                if self.decomposes(&rest, i) {
                    ok = true;
                    break;
                }
            }
        }
        self.memo.lock().unwrap().insert(key, ok);
        ok
    }

    /// Lexicographically smallest nondecreasing word with the given
    /// content, or None when the content has no decomposition.
    pub fn minword(&self, content: &[u16]) -> Option<Vec<u8>> {
        let mut rest = content.to_vec();
        let mut lo = 0usize;
        let mut word = Vec::new();
        while rest.iter().any(|&k| k > 0) {
            let mut chosen = None;
            for i in lo..self.items.len() {
                let list = &self.items[i].list;
                if rest.iter().zip(list).all(|(a, b)| a >= b) {
                    let next: Vec<u16> = rest.iter().zip(list).map(|(a, b)| a - b).collect();
                    if self.decomposes(&next, i) {
                        chosen = Some((i, next));
                        break;
                    }
                }
            }
            let (i, next) = chosen?;
            word.push((i + 1) as u8);
            rest = next;
            lo = i;
        }
        Some(word)
    }

    /// True when the word is nondecreasing and minimal for its content.
    pub fn word_is_semi_perfect(&self, word: &[u8]) -> bool {
        if word.windows(2).any(|w| w[0] > w[1]) {
            return false;
        }
        self.minword(&self.content_of_word(word)).as_deref() == Some(word)
    }
}

/// Build and validate the perfect generators for the algebra of `uea`.
pub fn perfect_monomials(uea: &Uea) -> Result<PerfectSet, CentError> {
    let alg = uea.algebra();
    let tbl = tables(alg.id());
    let basis = enumerate_indecomposable(alg);
    let h_gens = [
        alg.index_of(tbl.h_labels[0])
            .ok_or_else(|| CentError::BadLabel(tbl.h_labels[0].into()))?,
        alg.index_of(tbl.h_labels[1])
            .ok_or_else(|| CentError::BadLabel(tbl.h_labels[1].into()))?,
    ];
    let roots = alg.roots();
    let mut items = Vec::new();
    let mut matched = vec![false; basis.len()];
    for (pos, &labels) in tbl.c_words.iter().enumerate() {
        let owned: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let mut word = Vec::new();
        let mut list = vec![0u16; roots.len()];
        for &label in labels {
            let gi = alg
                .index_of(label)
                .ok_or_else(|| CentError::BadLabel(label.into()))?;
            let root = alg.gen(gi).root.ok_or_else(|| CentError::BadLabel(label.into()))?;
            let ri = roots
                .iter()
                .position(|r| *r == root)
                .ok_or_else(|| CentError::BadLabel(label.into()))?;
            word.push(gi);
            list[ri] += 1;
        }
        // The word must be the canonical ascending product of its list.
        let mut canonical = word.clone();
        canonical.sort();
        if canonical != word {
            let want = canonical.iter().map(|&g| alg.label(g).to_string()).collect();
            return Err(CentError::NonCanonicalWord { got: owned, want });
        }
        // The list must be one of the enumerated indecomposables.
        let hit = basis.iter().position(|b| *b == list);
        match hit {
            Some(i) if !matched[i] => matched[i] = true,
            _ => return Err(CentError::UnmatchedWord(owned)),
        }
        let w = uea
            .word_from_labels(labels)
            .map_err(|_| CentError::UnmatchedWord(owned.clone()))?;
        let element = uea.word_to_element(&w);
        // An ascending word is already a standard monomial.
        assert_eq!(element.num_terms(), 1, "perfect word is not standard");
        let (m, c) = element.terms().next().unwrap();
        assert_eq!(m.degree(), word.len());
        assert!(c == &crate::exactmath::rat_int(1));
        items.push(PerfectMonomial {
            index: (pos + 1) as u8,
            labels: owned,
            word,
            list,
            element,
        });
    }
    if let Some(i) = matched.iter().position(|&m| !m) {
        return Err(CentError::UnmatchedList(basis[i].clone()));
    }
    Ok(PerfectSet {
        id: alg.id(),
        h_gens,
        items,
        memo: Mutex::new(HashMap::new()),
    })
}

/// A monomial h1^a h2^b c_{k1}..c_{km} with nondecreasing k.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SemiPerfectMonomial {
    pub h_exp: [u16; 2],
    pub word: Vec<u8>,
}

impl SemiPerfectMonomial {
    pub fn degree(&self, pset: &PerfectSet) -> usize {
        self.h_exp.iter().map(|&e| e as usize).sum::<usize>()
            + self.word.iter().map(|&k| pset.degree_of(k)).sum::<usize>()
    }
}

/// Result of scanning all weight-zero standard monomials up to a degree.
pub struct BasisScan {
    pub monomials: Vec<SemiPerfectMonomial>,
    /// Number of weight-zero standard monomials scanned; equals the
    /// number of semi-perfect monomials when the correspondence is a
    /// bijection.
    pub weight_zero_count: usize,
}

/// Enumerate the semi-perfect monomials of degree <= max_degree by
/// scanning every weight-zero standard monomial and taking the minimal
/// word of its content. Errors when some content has no word.
pub fn semi_perfect_basis(
    uea: &Uea,
    pset: &PerfectSet,
    max_degree: usize,
) -> Result<BasisScan, CentError> {
    let alg = uea.algebra();
    let dim = alg.dimension();
    let roots = alg.roots();
    let gen_root_pos: Vec<Option<usize>> = (0..dim)
        .map(|g| {
            alg.gen(g)
                .root
                .map(|r| roots.iter().position(|s| *s == r).unwrap())
        })
        .collect();
    let mut out = BTreeSet::new();
    let mut count = 0usize;
    let mut exps = vec![0u16; dim];
    // Depth-first odometer over exponent vectors of total degree <= max.
    fn scan(
        pos: usize,
        left: usize,
        exps: &mut Vec<u16>,
        f: &mut impl FnMut(&[u16]) -> Result<(), CentError>,
    ) -> Result<(), CentError> {
        if pos == exps.len() {
            return f(exps);
        }
        for e in 0..=left {
            exps[pos] = e as u16;
            scan(pos + 1, left - e, exps, f)?;
        }
        exps[pos] = 0;
        Ok(())
    }
    scan(0, max_degree, &mut exps, &mut |exps: &[u16]| {
        let mut wm = 0i64;
        let mut wn = 0i64;
        let mut content = vec![0u16; roots.len()];
        for (g, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if let Some(ri) = gen_root_pos[g] {
                content[ri] += e;
                wm += roots[ri].m * e as i64;
                wn += roots[ri].n * e as i64;
            }
        }
        if wm != 0 || wn != 0 {
            return Ok(());
        }
        count += 1;
        let word = pset
            .minword(&content)
            .ok_or_else(|| CentError::NoSemiPerfectWord(content.clone()))?;
        let sp = SemiPerfectMonomial {
            h_exp: [exps[pset.h_gens()[0]], exps[pset.h_gens()[1]]],
            word,
        };
        let fresh = out.insert(sp);
        assert!(fresh, "distinct contents produced the same monomial");
        Ok(())
    })?;
    Ok(BasisScan {
        monomials: out.into_iter().collect(),
        weight_zero_count: count,
    })
}

/// The standard monomial carrying the same content as a semi-perfect
/// monomial: the sorted product of all its letters.
pub fn content_monomial(
    uea: &Uea,
    pset: &PerfectSet,
    sp: &SemiPerfectMonomial,
) -> StandardMonomial {
    let mut exps = vec![0u16; uea.dim()];
    exps[pset.h_gens()[0]] += sp.h_exp[0];
    exps[pset.h_gens()[1]] += sp.h_exp[1];
    for &k in &sp.word {
        for &g in &pset.item(k).word {
            exps[g] += 1;
        }
    }
    StandardMonomial(exps)
}

// ===== Tests =====

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pset(id: AlgebraId) -> (Uea, PerfectSet) {
        let uea = Uea::new(id);
        let p = perfect_monomials(&uea).unwrap();
        (uea, p)
    }

    #[test]
    fn table_words_validate_for_all_algebras() {
        for id in AlgebraId::all() {
            let (_, p) = pset(id);
            let expect = match id {
                AlgebraId::A2 => 5,
                AlgebraId::C2 => 12,
                AlgebraId::G2 => 64,
            };
            assert_eq!(p.q(), expect, "{}", id.name());
        }
    }

    #[test]
    fn single_letters_are_their_own_minword() {
        for id in AlgebraId::all() {
            let (_, p) = pset(id);
            for k in 1..=p.q() as u8 {
                let content = p.content_of_word(&[k]);
                assert_eq!(p.minword(&content), Some(vec![k]), "{} c{}", id.name(), k);
            }
        }
    }

    #[test]
    fn a2_minword_prefers_triple_over_pair() {
        // The full positive-negative content decomposes both as c4 c5 and
        // as c1 c2 c3; the minimal word is the triple.
        let (_, p) = pset(AlgebraId::A2);
        let content = p.content_of_word(&[4, 5]);
        assert_eq!(p.minword(&content), Some(vec![1, 2, 3]));
        assert!(!p.word_is_semi_perfect(&[4, 5]));
        assert!(p.word_is_semi_perfect(&[1, 2, 3]));
    }

    #[test]
    fn a2_high_letter_supports() {
        // Words never contain both c4 and c5, and each occurs alone.
        let (uea, p) = pset(AlgebraId::A2);
        let scan = semi_perfect_basis(&uea, &p, 8).unwrap();
        let mut seen = BTreeSet::new();
        for sp in &scan.monomials {
            let support: BTreeSet<u8> =
                sp.word.iter().copied().filter(|&k| k > 3).collect();
            assert!(
                support.len() < 2,
                "letters above c3 must not mix: {:?}",
                sp.word
            );
            seen.insert(support);
        }
        assert!(seen.contains(&BTreeSet::from([4u8])));
        assert!(seen.contains(&BTreeSet::from([5u8])));
    }

    #[test]
    fn c2_high_letter_supports_follow_the_eight_families() {
        let (uea, p) = pset(AlgebraId::C2);
        let scan = semi_perfect_basis(&uea, &p, 8).unwrap();
        let allowed_pairs: BTreeSet<(u8, u8)> = BTreeSet::from([
            (5, 9),
            (5, 12),
            (6, 10),
            (6, 11),
            (7, 9),
            (7, 11),
            (8, 10),
            (8, 12),
        ]);
        let mut seen_pairs = BTreeSet::new();
        let mut seen_singles = BTreeSet::new();
        for sp in &scan.monomials {
            let support: Vec<u8> = {
                let s: BTreeSet<u8> = sp.word.iter().copied().filter(|&k| k > 4).collect();
                s.into_iter().collect()
            };
            match support.as_slice() {
                [] => {}
                [a] => {
                    seen_singles.insert(*a);
                }
                [a, b] => {
                    assert!(
                        allowed_pairs.contains(&(*a, *b)),
                        "support {:?} outside the allowed families",
                        support
                    );
                    seen_pairs.insert((*a, *b));
                }
                _ => panic!("support {:?} has more than two high letters", support),
            }
        }
        assert_eq!(seen_pairs, allowed_pairs, "every family pair must occur");
        assert_eq!(
            seen_singles,
            (5u8..=12).collect::<BTreeSet<u8>>(),
            "every high letter must occur alone"
        );
    }

    #[test]
    fn c2_c5_c6_never_cooccur() {
        let (uea, p) = pset(AlgebraId::C2);
        let scan = semi_perfect_basis(&uea, &p, 8).unwrap();
        for sp in &scan.monomials {
            let has5 = sp.word.contains(&5);
            let has6 = sp.word.contains(&6);
            assert!(!(has5 && has6), "{:?}", sp.word);
        }
    }

    #[test]
    fn basis_counts_match_weight_zero_monomials() {
        for id in [AlgebraId::A2, AlgebraId::C2] {
            let (uea, p) = pset(id);
            let scan = semi_perfect_basis(&uea, &p, 6).unwrap();
            assert_eq!(
                scan.monomials.len(),
                scan.weight_zero_count,
                "{}",
                id.name()
            );
        }
    }

    #[test]
    fn content_monomial_matches_word_content() {
        let (uea, p) = pset(AlgebraId::C2);
        let sp = SemiPerfectMonomial { h_exp: [2, 1], word: vec![1, 3, 3] };
        let m = content_monomial(&uea, &p, &sp);
        assert_eq!(m.degree(), 2 + 1 + 2 + 2 + 2);
        let alg = uea.algebra();
        let h01 = alg.index_of("h01").unwrap();
        assert_eq!(m.0[h01], 2);
    }

    #[test]
    fn degrees_follow_letter_sizes() {
        let (_, p) = pset(AlgebraId::C2);
        let sp = SemiPerfectMonomial { h_exp: [1, 0], word: vec![5, 9] };
        assert_eq!(sp.degree(&p), 1 + 3 + 4);
    }

    // ===== Property tests =====

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn minword_is_minimal_among_random_decompositions(
            seed in proptest::collection::vec(0usize..12, 1..4)
        ) {
            let uea = Uea::new(AlgebraId::C2);
            let p = perfect_monomials(&uea).unwrap();
            let mut word: Vec<u8> =
                seed.iter().map(|&s| (s % p.q()) as u8 + 1).collect();
            word.sort();
            let content = p.content_of_word(&word);
            let min = p.minword(&content).unwrap();
            // The minimal word never exceeds the sampled word lexicographically.
            prop_assert!(min.as_slice() <= word.as_slice());
            prop_assert_eq!(p.content_of_word(&min), content);
        }

        #[test]
        fn semi_perfect_words_recompose_their_content(
            k1 in 1u8..=12, k2 in 1u8..=12
        ) {
            let uea = Uea::new(AlgebraId::C2);
            let p = perfect_monomials(&uea).unwrap();
            let mut word = vec![k1, k2];
            word.sort();
            let content = p.content_of_word(&word);
            let min = p.minword(&content).unwrap();
            prop_assert!(p.word_is_semi_perfect(&min));
        }
    }
}
