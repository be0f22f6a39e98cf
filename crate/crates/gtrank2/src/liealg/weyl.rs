/*! Weyl groups of the rank-2 algebras, derived from root strings.

The Cartan pairing ⟨β, α∨⟩ is read off the α-string through β
(string length down minus string length up), so the simple reflections
are computed from the root set itself rather than from a hardcoded
Cartan matrix. Each reflection is linear on root coordinates; the whole
group is the closure of the two simple reflections and acts on Δ by
permutations.
*/

use super::{ChevalleyAlgebra, Root};

/// 2x2 integer matrix acting on root coordinates, column-major by
/// images of the two simple roots.
pub type CoordMat = [[i64; 2]; 2];

fn mat_apply(m: &CoordMat, r: Root) -> Root {
    Root::new(m[0][0] * r.m + m[0][1] * r.n, m[1][0] * r.m + m[1][1] * r.n)
}

fn mat_mul(a: &CoordMat, b: &CoordMat) -> CoordMat {
    let mut out = [[0i64; 2]; 2];
    for r in 0..2 {
        for c in 0..2 {
            out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
        }
    }
    out
}

const IDENT: CoordMat = [[1, 0], [0, 1]];

/// ⟨β, α∨⟩ from the α-string through β: the string β − pα, …, β + qα
/// stays inside Δ and the pairing is p − q; the string through ±α
/// would pass through 0, so that case is the defining value ±2.
fn pairing(alg: &ChevalleyAlgebra, beta: Root, alpha: Root) -> i64 {
    if beta == alpha {
        return 2;
    }
    if beta == alpha.neg() {
        return -2;
    }
    let step = |k: i64| Root::new(beta.m + k * alpha.m, beta.n + k * alpha.n);
    let mut p = 0;
    while alg.is_root(step(-(p + 1))) {
        p += 1;
    }
    let mut q = 0;
    while alg.is_root(step(q + 1)) {
        q += 1;
    }
    p - q
}

/// Coordinate matrices of the two simple reflections s₁ (through β₁)
/// and s₂ (through β₂).
pub fn simple_reflections(alg: &ChevalleyAlgebra) -> [CoordMat; 2] {
    let [b1, b2] = alg.simple_roots();
    [b1, b2].map(|alpha| {
        let image = |beta: Root| {
            let k = pairing(alg, beta, alpha);
            Root::new(beta.m - k * alpha.m, beta.n - k * alpha.n)
        };
        let i1 = image(b1);
        let i2 = image(b2);
        [[i1.m, i2.m], [i1.n, i2.n]]
    })
}

/// A Weyl group element as a word in the simple reflections; entries
/// are 1 or 2. The word acts right-to-left: the last letter is applied
/// first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    pub word: Vec<u8>,
}

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement { word: Vec::new() }
    }

    pub fn simple(t: u8) -> Self {
        assert!(t == 1 || t == 2);
        WeylElement { word: vec![t] }
    }
}

/// Applies a Weyl word to a root. The image is again a root; the
/// reflection data comes from the algebra's own root strings.
pub fn weyl_apply(alg: &ChevalleyAlgebra, w: &WeylElement, r: Root) -> Root {
    let refl = simple_reflections(alg);
    let mut cur = r;
    for &t in w.word.iter().rev() {
        assert!(t == 1 || t == 2, "simple reflection index must be 1 or 2");
        cur = mat_apply(&refl[(t - 1) as usize], cur);
    }
    debug_assert!(alg.is_root(cur));
    cur
}

/// The full Weyl group, enumerated by closure of the simple
/// reflections. Each element carries a reduced word.
pub struct WeylGroup {
    mats: Vec<CoordMat>,
    words: Vec<Vec<u8>>,
}

impl WeylGroup {
    pub fn new(alg: &ChevalleyAlgebra) -> Self {
        let refl = simple_reflections(alg);
        let mut mats = vec![IDENT];
        let mut words: Vec<Vec<u8>> = vec![Vec::new()];
        let mut frontier = vec![0usize];
        while let Some(next) = {
            let mut fresh = Vec::new();
            for &i in &frontier {
                for t in [1u8, 2] {
                    // word·s_t applies s_t first: matrix product on the right.
                    let m = mat_mul(&mats[i], &refl[(t - 1) as usize]);
                    if !mats.contains(&m) {
                        let mut w = words[i].clone();
                        w.push(t);
                        mats.push(m);
                        words.push(w);
                        fresh.push(mats.len() - 1);
                    }
                }
            }
            if fresh.is_empty() {
                None
            } else {
                Some(fresh)
            }
        } {
            frontier = next;
        }
        WeylGroup { mats, words }
    }

    pub fn order(&self) -> usize {
        self.mats.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = WeylElement> + '_ {
        self.words.iter().map(|w| WeylElement { word: w.clone() })
    }

    pub fn apply(&self, index: usize, r: Root) -> Root {
        mat_apply(&self.mats[index], r)
    }

    /// Reduced word of the element at `index` (entries 1 or 2).
    pub fn word(&self, index: usize) -> &[u8] {
        &self.words[index]
    }
}
