//! Exact arithmetic: Laurent polynomials, rational functions, Gaussian
//! binomials and Igusa-type functions on a substitution-closed basis.
//!
//! Everything here is integral and exact; there is no floating point in this
//! crate. All types are immutable values and safe to share across threads.

mod gaussian;
mod igusa;
mod laurent;
mod ratfunc;

pub use gaussian::{binomial, gaussian_binomial, gaussian_multinomial, multinomial_degree};
pub use igusa::{IgusaFunction, RenderedIgusa};
pub use laurent::{poly_gcd, LaurentPoly};
pub use ratfunc::RatFunc;
