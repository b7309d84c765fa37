//! Exact counting of non-degenerate subspace flags in finite formed spaces
//! (symplectic, unitary, orthogonal), the Igusa-type rational functions built
//! from the normalised counting polynomials, and machine verification of their
//! functional equations along three independent routes:
//!
//! * closed formulas (group-order quotients, Gaussian multinomials),
//! * statistics on symmetric groups (parabolic lengths, descent sums),
//! * brute-force enumeration over small finite fields.
//!
//! The crate is organised around the objects it computes:
//!
//! * [`exactalg`] — Laurent polynomials with big-integer coefficients,
//!   rational functions, Gaussian binomials and the `IgusaFunction` basis.
//! * [`coxeter`] — permutations, descent sets, parabolic length functions,
//!   chessboard elements and the descent-sum functional-equation engine.
//! * [`compositions`] — integer compositions, the bisecting map and
//!   refinement counts driving the orthogonal inversion equations.
//! * [`counting`] — the flag-counting polynomials `a^J` / `alpha^J` for all
//!   geometric types, computed along several independent paths, plus the
//!   verification drivers.
//! * [`oracle`] — explicit formed spaces over small fields and exhaustive
//!   flag enumeration, the ground truth everything is checked against.
//! * [`suites`] — the named verification suites run by the CLI.

pub mod compositions;
pub mod coxeter;
pub mod error;
pub mod exactalg;
pub mod counting;
pub mod oracle;
pub mod report;
pub mod subset;
pub mod suites;

pub use error::{Error, Result};
pub use exactalg::{IgusaFunction, LaurentPoly, RatFunc};
pub use subset::Subset;
