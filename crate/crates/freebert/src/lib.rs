//! Exact computer algebra for the free associative algebra Q<x1..xd>.
//!
//! Everything here is exact: coefficients are arbitrary-precision rationals,
//! decisions are certified by algebraic identities that are re-verified after
//! construction, and random sampling (where used) only ever produces evidence
//! or witnesses that are themselves checked exactly.
//!
//! Module map:
//! - [`ncpoly`]: noncommutative polynomials, words, univariate polynomials,
//!   arithmetic, composition, grading, involution.
//! - [`exactla`]: exact linear algebra over Q and Q[t] (kernels, solving,
//!   pivoted LDL^T with constructive non-PSD witnesses, fraction-free
//!   elimination for parametric matrices).
//! - [`factor`]: factorization and irreducibility over Q via leading-form
//!   rank-1 splits and graded coefficient peeling, with a bounded
//!   Groebner-basis fallback for the residual algebraic constraints.
//! - [`decide`]: centralizer slices, composite detection, irreducibility
//!   sampling reports, stable association, intertwiner spaces.
//! - [`eigenlevel`]: matrix evaluation, exact characteristic polynomials,
//!   eigenlevel-set membership and inclusion certificates.
//! - [`quasiconvex`]: symmetric quadratic Gram matrices, sums of hermitian
//!   squares, concave quadratic decompositions, sign decisions on intervals,
//!   weak quasiconvexity classification, and LMI pencils.
//! - [`parser`]: the expression grammar shared by the CLI and all textual
//!   interfaces, with byte-offset error reporting.
//! - [`jsonio`]: the matrix-tuple JSON file format.
//! - [`cli`]: command dispatch for the `freebert` binary.
//!
//! All core types are immutable values; nothing shares mutable state, so the
//! whole crate is thread-safe by construction.

pub mod rat;
pub mod word;
pub mod ncpoly;
pub mod unipoly;
pub mod paramnc;
pub mod exactla;
pub mod cpoly;
pub mod gb;
pub mod factor;
pub mod decide;
pub mod eigenlevel;
pub mod quasiconvex;
pub mod parser;
pub mod jsonio;
pub mod sample;
pub mod cli;

pub use ncpoly::NCPoly;
pub use rat::Rat;
pub use unipoly::UniPoly;
pub use word::Word;
