/*! Exact computer algebra for the rank-2 simple Lie algebras A2, C2, G2.

The crate builds the three algebras from explicit matrix realizations,
implements PBW straightening in the universal enveloping algebra,
enumerates the indecomposable zero-weight root lists that generate the
Cartan centralizer, extracts and verifies the centralizer relation
tables, and constructs the exact lattice modules on Z^3 together with
verification suites for every structural claim (bracket axioms, Casimir
eigenvalues, character separation, torsion-freeness, simplicity,
submodule splittings, and the G2-to-A2 branching rules).

All arithmetic is exact: scalars are arbitrary-precision rationals and
coefficient functions are multivariate rational functions over a fixed
symbol registry. There are no floating-point code paths and no
tolerances anywhere.

Module map:

- [`exactmath`]: rationals, sparse multivariate polynomials, rational
  functions in canonical form.
- [`liealg`]: matrix realizations, roots, structure constants, Weyl
  groups.
- [`uea`]: PBW standard monomials and straightening multiplication.
- [`centralizer`]: zero-weight list enumeration, perfect/semi-perfect
  monomials, normal forms, relation tables, Casimir elements, width
  decompositions.
- [`gtmodules`]: the lattice module families with their coefficient
  tables, window evaluation, characters, condition predicates,
  splitting and branching analysis.
- [`verify`]: check suites and structured reports.
*/

pub mod centralizer;
pub mod exactmath;
pub mod gtmodules;
pub mod liealg;
pub mod uea;
pub mod verify;

pub use exactmath::{Poly, RatFn, Rational};
