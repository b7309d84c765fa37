//! Rational functions in one variable over the integers, kept in a canonical
//! form so that equality of values is structural equality.
//!
//! Canonical form: write the value as `x^s * (N / D)` with `N, D` ordinary
//! coprime polynomials having nonzero constant terms, `D` with positive
//! leading coefficient, and `gcd(content(N), content(D)) = 1`. The monomial
//! `x^s` is folded into the numerator when `s >= 0` and into the denominator
//! when `s < 0`, so the denominator is always an ordinary polynomial.

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exactalg::laurent::poly_gcd;
use crate::exactalg::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::domain("rational function with zero denominator"));
        }
        Ok(Self::canonical(num, den))
    }

    pub fn from_poly(p: LaurentPoly) -> RatFunc {
        RatFunc { num: p, den: LaurentPoly::one() }
    }

    pub fn zero() -> RatFunc {
        RatFunc::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> RatFunc {
        RatFunc::from_poly(LaurentPoly::one())
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let a = num.min_exp().unwrap();
        let b = den.min_exp().unwrap();
        let mut n = num.shift(-a);
        let mut d = den.shift(-b);
        let g = poly_gcd(&n, &d);
        if !g.is_one() {
            n = n.div_exact(&g).expect("gcd divides");
            d = d.div_exact(&g).expect("gcd divides");
        }
        // clear common integer content
        let c = num_integer::Integer::gcd(&n.content(), &d.content());
        if !c.is_one() {
            n = n.div_exact(&LaurentPoly::monomial(c.clone(), 0)).unwrap();
            d = d.div_exact(&LaurentPoly::monomial(c, 0)).unwrap();
        }
        if d.leading_coeff().is_negative() {
            n = n.neg();
            d = d.neg();
        }
        let s = a - b;
        if s >= 0 {
            RatFunc { num: n.shift(s), den: d }
        } else {
            RatFunc { num: n, den: d.shift(-s) }
        }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        Self::canonical(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        Self::canonical(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        Self::canonical(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        if other.is_zero() {
            return Err(Error::domain("division by the zero rational function"));
        }
        Ok(Self::canonical(self.num.mul(&other.den), self.den.mul(&other.num)))
    }

    /// True iff the canonical denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Extract the value as an ordinary polynomial; the canonical denominator
    /// must be 1.
    pub fn to_polynomial(&self) -> Result<LaurentPoly> {
        if self.is_polynomial() {
            Ok(self.num.clone())
        } else {
            Err(Error::NotPolynomial { denominator: self.den.clone() })
        }
    }

    /// Extract the value as a Laurent polynomial; the canonical denominator
    /// must be a monomial `x^k`.
    pub fn to_laurent(&self) -> Result<LaurentPoly> {
        if self.den.num_terms() == 1 && self.den.leading_coeff().is_one() {
            Ok(self.num.shift(-self.den.degree().unwrap()))
        } else {
            Err(Error::NotPolynomial { denominator: self.den.clone() })
        }
    }
}
