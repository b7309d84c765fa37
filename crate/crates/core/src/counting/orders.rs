//! Orders of the classical isometry groups as exact polynomials in `q`.
//!
//! The orthogonal orders are the odd-characteristic ones; the flag counts
//! they produce are the same in every characteristic, which the oracle
//! checks at `q = 2`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactalg::LaurentPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    Symplectic,
    Unitary,
    OrthogonalOdd,
    OrthogonalEven(i32),
}

/// `|Sp_n|`, `|U_n|`, `p_{2m+1}`, `p_{2m, eps}`.
pub fn group_order(kind: GroupKind, n: usize) -> Result<LaurentPoly> {
    match kind {
        GroupKind::Symplectic => {
            if n % 2 != 0 {
                return Err(Error::domain("symplectic groups need even dimension"));
            }
            // q^{binom(n+1,2)} prod_{i in [n/2]} (1 - q^{-2i})
            let mut p = LaurentPoly::monomial(BigInt::from(1), (n * (n + 1) / 2) as i64);
            for i in 1..=n / 2 {
                p = p.mul(&LaurentPoly::from_pairs(&[(0, 1), (-2 * i as i64, -1)]));
            }
            Ok(p)
        }
        GroupKind::Unitary => {
            // q^{n^2} prod_{i in [n]} (1 - (-q^{-1})^i)
            let mut p = LaurentPoly::monomial(BigInt::from(1), (n * n) as i64);
            for i in 1..=n {
                let sign = if i % 2 == 0 { -1 } else { 1 };
                p = p.mul(&LaurentPoly::from_pairs(&[(0, 1), (-(i as i64), sign)]));
            }
            Ok(p)
        }
        GroupKind::OrthogonalOdd => {
            if n % 2 != 1 {
                return Err(Error::domain("odd orthogonal groups need odd dimension"));
            }
            let m = n / 2;
            // 2 q^{m^2} prod_{i in [m]} (q^{2i} - 1)
            let mut p = LaurentPoly::monomial(BigInt::from(2), (m * m) as i64);
            for i in 1..=m {
                p = p.mul(&LaurentPoly::from_pairs(&[(2 * i as i64, 1), (0, -1)]));
            }
            Ok(p)
        }
        GroupKind::OrthogonalEven(eps) => {
            if n % 2 != 0 || n == 0 {
                return Err(Error::domain("even orthogonal groups need positive even dimension"));
            }
            if eps != 1 && eps != -1 {
                return Err(Error::domain("epsilon must be +1 or -1"));
            }
            let m = n / 2;
            // 2 q^{m^2 - m} (q^m - eps) prod_{i in [m-1]} (q^{2i} - 1)
            let mut p = LaurentPoly::monomial(BigInt::from(2), (m * m - m) as i64);
            p = p.mul(&LaurentPoly::from_pairs(&[(m as i64, 1), (0, -(eps as i64))]));
            for i in 1..m {
                p = p.mul(&LaurentPoly::from_pairs(&[(2 * i as i64, 1), (0, -1)]));
            }
            Ok(p)
        }
    }
}

/// `p_n^#`: `p_{2m+1}` for odd `n`, `(q^m + eps) p_{2m, eps}` for `n = 2m`
/// (the product does not depend on `eps`).
pub fn p_sharp(n: usize) -> LaurentPoly {
    if n % 2 == 1 {
        group_order(GroupKind::OrthogonalOdd, n).expect("odd")
    } else {
        let m = n / 2;
        let plus = group_order(GroupKind::OrthogonalEven(1), n)
            .expect("even")
            .mul(&LaurentPoly::from_pairs(&[(m as i64, 1), (0, 1)]));
        debug_assert_eq!(
            plus,
            group_order(GroupKind::OrthogonalEven(-1), n)
                .expect("even")
                .mul(&LaurentPoly::from_pairs(&[(m as i64, 1), (0, -1)])),
        );
        plus
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn small_orders() {
        // |Sp_2| = q^3 - q; the oracle recounts |Sp_2(F_2)| = 6 below
        assert_eq!(
            group_order(GroupKind::Symplectic, 2).unwrap(),
            LaurentPoly::from_pairs(&[(3, 1), (1, -1)])
        );
        // |U_1| = q + 1: the norm-one circle in F_4 has 3 elements
        let u1 = group_order(GroupKind::Unitary, 1).unwrap();
        assert_eq!(u1, LaurentPoly::from_pairs(&[(1, 1), (0, 1)]));
        assert_eq!(u1.evaluate_at_int(2).unwrap(), BigInt::from(3));
        // p_{2,eps} = 2(q - eps); |O_2^+(F_3)| = 4
        let p2 = group_order(GroupKind::OrthogonalEven(1), 2).unwrap();
        assert_eq!(p2, LaurentPoly::from_pairs(&[(1, 2), (0, -2)]));
        assert_eq!(p2.evaluate_at_int(3).unwrap(), BigInt::from(4));
        assert!(group_order(GroupKind::Symplectic, 3).is_err());
    }

    #[test]
    fn p_sharp_values() {
        assert_eq!(p_sharp(1), LaurentPoly::from_pairs(&[(0, 2)]));
        // p_2^# = 2(q^2 - 1), independent of eps
        assert_eq!(p_sharp(2), LaurentPoly::from_pairs(&[(2, 2), (0, -2)]));
        // p_3 = 2q(q^2 - 1)
        assert_eq!(p_sharp(3), LaurentPoly::from_pairs(&[(3, 2), (1, -2)]));
    }

    #[test]
    fn oracle_counts_isometries_sp2_f2() {
        // every invertible 2x2 matrix over F_2 preserving the symplectic form
        use crate::oracle::{linalg::Mat, standard_space, FormKind, SmallField};
        let f2 = SmallField::new(2).unwrap();
        let sp = standard_space(FormKind::Alternating, 2, &f2, None).unwrap();
        let mut count = 0;
        for a in 0..2u8 {
            for b in 0..2u8 {
                for c in 0..2u8 {
                    for d in 0..2u8 {
                        let m = Mat::from_rows(vec![vec![a, b], vec![c, d]]);
                        if !m.is_invertible(&f2) {
                            continue;
                        }
                        let preserves = sp.bilinear(m.row(0), m.row(1)) == 1;
                        if preserves {
                            count += 1;
                        }
                    }
                }
            }
        }
        let expected = group_order(GroupKind::Symplectic, 2)
            .unwrap()
            .evaluate_at_int(2)
            .unwrap();
        assert_eq!(BigInt::from(count), expected);
    }
}
