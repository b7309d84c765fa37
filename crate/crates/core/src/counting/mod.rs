//! The flag-counting polynomials `a^J` and `alpha^J` for the six geometric
//! types and for flags of forms, computed along mutually independent paths:
//!
//! * closed order-quotient and Gaussian-multinomial formulas,
//! * descent sums over symmetric groups and the chessboard subgroup,
//! * a recursion over the smallest flag member,
//!
//! together with the functional-equation verification drivers.

mod orders;
mod orthogonal;
mod sp_u;
mod verify;

pub use orders::{group_order, p_sharp, GroupKind};
pub use orthogonal::{
    a_orthogonal, a_orthogonal_typed, a_orthogonal_typed_ratfunc, alpha_lifted,
    alpha_orthogonal_prop3, conjecture_alpha, ChessboardAlphaSweep,
};
pub use sp_u::{a_recursive_sp_u, alpha_base_sp_u, alpha_coxeter, CoxeterAlphaSweep};
pub use verify::{
    build_alpha_table, fe_constants, igusa_function_for_spec, verify_conjecture_c, verify_prop2,
    verify_theorem_a, verify_theorem_b, AlphaMethod, AlphaTableRow, FEConstants,
};

use crate::error::{Error, Result};
use crate::exactalg::LaurentPoly;
use crate::subset::Subset;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeometricKind {
    Symplectic,
    Unitary,
    Orthogonal,
}

/// A formed-space counting query: geometric kind, dimension, sign for even
/// orthogonal spaces, and the flag-of-forms type `I` (empty for plain
/// spaces).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormedSpaceSpec {
    pub kind: GeometricKind,
    pub n: usize,
    pub epsilon: Option<i32>,
    pub forms_type: Subset,
}

impl FormedSpaceSpec {
    pub fn new(
        kind: GeometricKind,
        n: usize,
        epsilon: Option<i32>,
        forms_type: Subset,
    ) -> Result<FormedSpaceSpec> {
        if n == 0 {
            return Err(Error::domain("dimension must be positive"));
        }
        if !forms_type.is_subset_of(Subset::full(n - 1)) {
            return Err(Error::domain("forms type must be a subset of [n-1]"));
        }
        match kind {
            GeometricKind::Symplectic => {
                if n % 2 != 0 {
                    return Err(Error::domain("symplectic spaces have even dimension"));
                }
                if !forms_type.all_even() {
                    return Err(Error::domain("symplectic flag types consist of even numbers"));
                }
                if epsilon.is_some() {
                    return Err(Error::domain("epsilon is an orthogonal datum"));
                }
            }
            GeometricKind::Unitary => {
                if epsilon.is_some() {
                    return Err(Error::domain("epsilon is an orthogonal datum"));
                }
            }
            GeometricKind::Orthogonal => {
                if !forms_type.is_empty() {
                    return Err(Error::domain("flags of forms are symplectic or unitary"));
                }
                match (n % 2, epsilon) {
                    (0, Some(1) | Some(-1)) => {}
                    (0, _) => return Err(Error::domain("even orthogonal spaces need epsilon")),
                    (_, None) => {}
                    (_, Some(_)) => {
                        return Err(Error::domain("odd orthogonal spaces carry no epsilon"))
                    }
                }
            }
        }
        Ok(FormedSpaceSpec { kind, n, epsilon, forms_type })
    }

    pub fn plain(kind: GeometricKind, n: usize, epsilon: Option<i32>) -> Result<FormedSpaceSpec> {
        FormedSpaceSpec::new(kind, n, epsilon, Subset::EMPTY)
    }

    /// The denominator of `gamma`: 2 in the symplectic and orthogonal cases,
    /// 1 in the unitary case (`gamma = 1/gamma_den`).
    pub fn gamma_den(&self) -> usize {
        match self.kind {
            GeometricKind::Unitary => 1,
            _ => 2,
        }
    }

    /// `gamma * n`, the rank carrier of the associated symmetric group.
    pub fn gamma_n(&self) -> usize {
        self.n / self.gamma_den()
    }

    /// The dual type `Itilde = {n - i : i in I}`.
    pub fn dual_type(&self) -> Subset {
        Subset::from_elements(self.forms_type.iter().map(|i| self.n - i))
    }

    pub fn dualized(&self) -> FormedSpaceSpec {
        FormedSpaceSpec {
            kind: self.kind,
            n: self.n,
            epsilon: self.epsilon,
            forms_type: self.dual_type(),
        }
    }
}

/// `alpha` from `a`: shift the exponents down by the degree, so the leading
/// term lands at exponent 0. Zero maps to zero.
pub fn normalize(a: &LaurentPoly) -> LaurentPoly {
    match a.degree() {
        None => LaurentPoly::zero(),
        Some(d) => a.shift(-d),
    }
}

/// `a` from `alpha` for the normalised polynomials produced here (largest
/// exponent 0): shift back up by the lowest exponent.
pub fn denormalize(alpha: &LaurentPoly) -> LaurentPoly {
    match alpha.min_exp() {
        None => LaurentPoly::zero(),
        Some(e) => alpha.shift(-e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_validation() {
        assert!(FormedSpaceSpec::plain(GeometricKind::Symplectic, 3, None).is_err());
        assert!(FormedSpaceSpec::new(
            GeometricKind::Symplectic,
            6,
            None,
            Subset::from_elements([3])
        )
        .is_err());
        assert!(FormedSpaceSpec::plain(GeometricKind::Orthogonal, 4, None).is_err());
        assert!(FormedSpaceSpec::plain(GeometricKind::Orthogonal, 3, Some(1)).is_err());
        assert!(FormedSpaceSpec::plain(GeometricKind::Orthogonal, 3, None).is_ok());
        let spec = FormedSpaceSpec::new(
            GeometricKind::Symplectic,
            6,
            None,
            Subset::from_elements([4]),
        )
        .unwrap();
        assert_eq!(spec.gamma_n(), 3);
        assert_eq!(spec.dual_type(), Subset::from_elements([2]));
    }

    #[test]
    fn normalize_examples() {
        let a = LaurentPoly::from_pairs(&[(3, 1), (1, -1)]);
        assert_eq!(normalize(&a), LaurentPoly::from_pairs(&[(0, 1), (-2, -1)]));
        assert_eq!(normalize(&LaurentPoly::one()), LaurentPoly::one());
        assert_eq!(normalize(&LaurentPoly::zero()), LaurentPoly::zero());
        assert_eq!(denormalize(&normalize(&a)), a);
    }
}
