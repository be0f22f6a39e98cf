/*! Root systems, Weyl groups, and Chevalley-basis matrix realizations
of the rank-2 simple Lie algebras A2, C2, G2.

Each algebra is built from explicit matrix-unit formulas; structure
constants are *derived* by expressing matrix commutators in the
generator basis with an exact solver, never hardcoded, so any
transcription slip in the matrices surfaces as a loud construction
failure instead of a silent wrong table. Roots live in simple-root
coordinates `(m, n) = m·β₁ + n·β₂`, Weyl reflections are derived from
root strings, and the full group is obtained by closure.
*/

mod build;
mod matrix;
mod weyl;

pub use build::build_algebra;
pub use matrix::{RatMatrix, SpanSolver};
pub use weyl::{simple_reflections, weyl_apply, WeylElement, WeylGroup};

use crate::exactmath::Rational;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Which rank-2 simple algebra is active.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AlgebraId {
    A2,
    C2,
    G2,
}

impl AlgebraId {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraId::A2 => "A2",
            AlgebraId::C2 => "C2",
            AlgebraId::G2 => "G2",
        }
    }

    pub fn by_name(s: &str) -> Option<Self> {
        match s {
            "A2" | "a2" => Some(AlgebraId::A2),
            "C2" | "c2" => Some(AlgebraId::C2),
            "G2" | "g2" => Some(AlgebraId::G2),
            _ => None,
        }
    }

    pub fn all() -> [AlgebraId; 3] {
        [AlgebraId::A2, AlgebraId::C2, AlgebraId::G2]
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A root in simple-root coordinates: `(m, n)` means `m·β₁ + n·β₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Root {
    pub m: i64,
    pub n: i64,
}

impl Root {
    pub fn new(m: i64, n: i64) -> Self {
        Root { m, n }
    }

    pub fn neg(self) -> Self {
        Root { m: -self.m, n: -self.n }
    }

    pub fn add(self, other: Root) -> Self {
        Root { m: self.m + other.m, n: self.n + other.n }
    }

    pub fn is_positive(self) -> bool {
        self.m > 0 || (self.m == 0 && self.n > 0)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

/// One Chevalley generator: label, root datum (None marks Cartan), and
/// the realizing matrix.
#[derive(Clone)]
pub struct Generator {
    pub label: String,
    pub root: Option<Root>,
    pub matrix: RatMatrix,
}

/// A degree-1 Lie algebra element in the generator basis.
pub type LinComb = Vec<(usize, Rational)>;

#[derive(Debug, Error)]
pub enum LieError {
    #[error("commutator [{left}, {right}] escapes the generator span")]
    CommutatorOutsideSpan { left: String, right: String },
    #[error("generator matrices are linearly dependent at {label}")]
    DependentGenerators { label: String },
    #[error("unknown generator label {0}")]
    UnknownLabel(String),
    #[error("{0} is not a root of the active algebra")]
    NotARoot(Root),
}

/// A rank-2 simple Lie algebra realized by matrices, with structure
/// constants derived from commutators. Immutable after construction.
pub struct ChevalleyAlgebra {
    id: AlgebraId,
    gens: Vec<Generator>,
    index: BTreeMap<String, usize>,
    /// brackets[i][j] = [x_i, x_j] expressed in the generator basis.
    brackets: Vec<Vec<LinComb>>,
    roots: Vec<Root>,
}

impl ChevalleyAlgebra {
    pub(crate) fn from_parts(
        id: AlgebraId,
        gens: Vec<Generator>,
        brackets: Vec<Vec<LinComb>>,
        roots: Vec<Root>,
    ) -> Self {
        let index = gens.iter().enumerate().map(|(i, g)| (g.label.clone(), i)).collect();
        ChevalleyAlgebra { id, gens, index, brackets, roots }
    }

    pub fn id(&self) -> AlgebraId {
        self.id
    }

    pub fn dimension(&self) -> usize {
        self.gens.len()
    }

    /// Generators in the fixed total order used for standard monomials.
    pub fn gens(&self) -> &[Generator] {
        &self.gens
    }

    pub fn gen(&self, i: usize) -> &Generator {
        &self.gens[i]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.gens[i].label
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// `[x_i, x_j]` in the generator basis.
    pub fn bracket(&self, i: usize, j: usize) -> &LinComb {
        &self.brackets[i][j]
    }

    /// Root datum for a generator label: `Some(root)` for root vectors,
    /// `None` for Cartan generators.
    pub fn root_of(&self, label: &str) -> Result<Option<Root>, LieError> {
        let i = self.index_of(label).ok_or_else(|| LieError::UnknownLabel(label.into()))?;
        Ok(self.gens[i].root)
    }

    /// The finite root set Δ, negative roots included.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn is_root(&self, r: Root) -> bool {
        self.roots.contains(&r)
    }

    pub fn simple_roots(&self) -> [Root; 2] {
        [Root::new(1, 0), Root::new(0, 1)]
    }

    pub fn cartan_indices(&self) -> Vec<usize> {
        (0..self.gens.len()).filter(|&i| self.gens[i].root.is_none()).collect()
    }

    pub fn generator_of_root(&self, r: Root) -> Option<usize> {
        (0..self.gens.len()).find(|&i| self.gens[i].root == Some(r))
    }

    /// Machine-readable dump of the realization: generators with roots
    /// and the full derived bracket table.
    pub fn describe_json(&self) -> serde_json::Value {
        use crate::exactmath::rat_string;
        let gens: Vec<_> = self
            .gens
            .iter()
            .map(|g| {
                serde_json::json!({
                    "label": g.label,
                    "root": g.root.map(|r| [r.m, r.n]),
                })
            })
            .collect();
        let mut brackets = Vec::new();
        for i in 0..self.gens.len() {
            for j in 0..self.gens.len() {
                let b = &self.brackets[i][j];
                if b.is_empty() {
                    continue;
                }
                let terms: Vec<_> = b
                    .iter()
                    .map(|(k, c)| {
                        serde_json::json!({ "gen": self.gens[*k].label, "coeff": rat_string(c) })
                    })
                    .collect();
                brackets.push(serde_json::json!({
                    "left": self.gens[i].label,
                    "right": self.gens[j].label,
                    "value": terms,
                }));
            }
        }
        serde_json::json!({
            "id": self.id.name(),
            "dimension": self.gens.len(),
            "generators": gens,
            "brackets": brackets,
        })
    }
}
