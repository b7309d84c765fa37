//! Univariate Laurent polynomials with arbitrary-precision integer
//! coefficients, in canonical form: no zero coefficient is ever stored, so
//! equality of values is equality of term maps.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exponent -> coefficient, exponents may be negative.
#[derive(Debug, Clone)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
    /// Display name of the variable. Not part of the value: two polynomials
    /// are equal iff their term maps are equal.
    pub var: String,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for LaurentPoly {}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly { terms: BTreeMap::new(), var: "q".into() }
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: i64) -> LaurentPoly {
        LaurentPoly::monomial(c.into(), 0)
    }

    pub fn variable() -> LaurentPoly {
        LaurentPoly::monomial(BigInt::one(), 1)
    }

    /// `c * x^e`.
    pub fn monomial(c: BigInt, e: i64) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms, var: "q".into() }
    }

    pub fn from_terms<I>(iter: I) -> LaurentPoly
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let mut p = LaurentPoly::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    /// Convenience for tests and tables: `[(exp, coeff)]` with i64 coeffs.
    pub fn from_pairs(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(pairs.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    pub fn with_var(mut self, var: &str) -> LaurentPoly {
        self.var = var.into();
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Largest exponent; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Smallest exponent; `None` for the zero polynomial.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.degree().map(|d| self.coeff(d)).unwrap_or_else(BigInt::zero)
    }

    /// True iff nonzero with leading coefficient 1.
    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_one()
    }

    /// True iff all exponents are >= 0.
    pub fn is_ordinary(&self) -> bool {
        self.min_exp().map_or(true, |e| e >= 0)
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        out
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero().with_var(&self.var);
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero().with_var(&self.var);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    /// Multiply by the monomial `x^k`.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        let mut out = LaurentPoly::zero().with_var(&self.var);
        for (e, c) in self.terms() {
            out.add_term(e + k, c.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut out = LaurentPoly::one().with_var(&self.var);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// `x -> x^{-1}`: negates every exponent.
    pub fn invert_var(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero().with_var(&self.var);
        for (e, c) in self.terms() {
            out.add_term(-e, c.clone());
        }
        out
    }

    /// `x -> -x`: the coefficient of `x^e` picks up `(-1)^e`.
    pub fn negate_var(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero().with_var(&self.var);
        for (e, c) in self.terms() {
            let c = if e.rem_euclid(2) == 1 { -c.clone() } else { c.clone() };
            out.add_term(e, c);
        }
        out
    }

    /// `x -> x^k` for nonzero integer `k` (negative allowed).
    pub fn power_substitute(&self, k: i64) -> Result<LaurentPoly> {
        if k == 0 {
            return Err(Error::domain("power_substitute requires a nonzero exponent"));
        }
        let mut out = LaurentPoly::zero().with_var(&self.var);
        for (e, c) in self.terms() {
            out.add_term(e * k, c.clone());
        }
        Ok(out)
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate_at(&self, x: &BigRational) -> Result<BigRational> {
        if x.is_zero() && self.min_exp().is_some_and(|e| e < 0) {
            return Err(Error::domain("evaluation at 0 with negative exponents"));
        }
        let mut acc = BigRational::zero();
        for (e, c) in self.terms() {
            let mut pw = BigRational::one();
            let (base, reps) = if e >= 0 { (x.clone(), e) } else { (x.recip(), -e) };
            for _ in 0..reps {
                pw *= &base;
            }
            acc += BigRational::from(c.clone()) * pw;
        }
        Ok(acc)
    }

    /// Evaluation at an integer point; result guaranteed integral.
    pub fn evaluate_at_int(&self, x: i64) -> Result<BigInt> {
        let v = self.evaluate_at(&BigRational::from(BigInt::from(x)))?;
        if !v.is_integer() {
            return Err(Error::inconsistent(format!("non-integral value {v} at x = {x}")));
        }
        Ok(v.to_integer())
    }

    /// Exact division; fails unless the remainder vanishes.
    pub fn div_exact(&self, d: &LaurentPoly) -> Result<LaurentPoly> {
        if d.is_zero() {
            return Err(Error::domain("division by the zero polynomial"));
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero().with_var(&self.var));
        }
        // Reduce to honest polynomials by shifting out the minimal exponents.
        let sn = self.min_exp().unwrap();
        let sd = d.min_exp().unwrap();
        let mut rem = self.shift(-sn);
        let den = d.shift(-sd);
        let dd = den.degree().unwrap();
        let dlc = den.leading_coeff();
        let mut quot = LaurentPoly::zero().with_var(&self.var);
        while !rem.is_zero() {
            let rd = rem.degree().unwrap();
            if rd < dd {
                return Err(Error::NotPolynomial { denominator: d.clone() });
            }
            let (q, r) = num_integer::Integer::div_rem(&rem.leading_coeff(), &dlc);
            if !r.is_zero() {
                return Err(Error::NotPolynomial { denominator: d.clone() });
            }
            let t = LaurentPoly::monomial(q, rd - dd);
            rem = rem.sub(&den.mul(&t));
            quot = quot.add(&t);
        }
        Ok(quot.shift(sn - sd))
    }

    /// Gcd of the coefficients (non-negative; 0 only for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = num_integer::Integer::gcd(&g, c);
        }
        g
    }

    /// `self / content`, sign-normalised so the leading coefficient is positive.
    pub fn primitive_positive(&self) -> LaurentPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading_coeff().is_negative() {
            c = -c;
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v / &c;
        }
        out
    }
}

/// Gcd in `Z[x]` of two honest polynomials, normalised to have positive
/// leading coefficient. Primitive pseudo-remainder sequence; exact, no
/// rational arithmetic. The integer contents are gcd'd separately.
pub fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    assert!(a.is_ordinary() && b.is_ordinary(), "poly_gcd needs ordinary polynomials");
    if a.is_zero() {
        return b.primitive_positive().mul_scalar(&b.content());
    }
    if b.is_zero() {
        return a.primitive_positive().mul_scalar(&a.content());
    }
    let content = num_integer::Integer::gcd(&a.content(), &b.content());
    let mut x = a.primitive_positive();
    let mut y = b.primitive_positive();
    if x.degree() < y.degree() {
        std::mem::swap(&mut x, &mut y);
    }
    loop {
        let r = pseudo_rem(&x, &y);
        if r.is_zero() {
            return y.primitive_positive().mul_scalar(&content);
        }
        x = y;
        y = r.primitive_positive();
    }
}

/// Pseudo-remainder of `a` by `b`: scale by `lc(b)` before each elimination
/// step so everything stays in integer coefficients.
fn pseudo_rem(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let db = b.degree().unwrap();
    let lb = b.leading_coeff();
    let mut rem = a.clone();
    loop {
        let Some(dr) = rem.degree() else { return rem };
        if dr < db {
            return rem;
        }
        let lr = rem.leading_coeff();
        rem = rem.mul_scalar(&lb).sub(&b.mul(&LaurentPoly::monomial(lr, dr - db)));
    }
}

// ---------------------------------------------------------------------------
// Display and JSON encoding
// ---------------------------------------------------------------------------

impl LaurentPoly {
    /// Plain-text rendering, terms in descending exponent order, e.g.
    /// `q^8 + q^4 + q^2` or `1 - q^-2`.
    pub fn render_text(&self) -> String {
        self.render(false)
    }

    /// LaTeX rendering, e.g. `q^{8}+q^{4}+q^{2}` or `1-q^{-2}`.
    pub fn render_latex(&self) -> String {
        self.render(true)
    }

    fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.magnitude();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if latex {
                out.push_str(if neg { "-" } else { "+" });
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff_one = mag.is_one();
            if e == 0 {
                out.push_str(&mag.to_string());
            } else {
                if !coeff_one {
                    out.push_str(&mag.to_string());
                    out.push_str(if latex { "" } else { "*" });
                }
                out.push_str(&self.var);
                if e != 1 {
                    if latex {
                        out.push_str(&format!("^{{{e}}}"));
                    } else {
                        out.push_str(&format!("^{e}"));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

/// JSON form: `{"var": "q", "terms": [[exponent, "coefficient"], ...]}` with
/// terms sorted by ascending exponent.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("LaurentPoly", 2)?;
        st.serialize_field("var", &self.var)?;
        let terms: Vec<(i64, String)> =
            self.terms.iter().map(|(&e, c)| (e, c.to_string())).collect();
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            var: String,
            terms: Vec<(i64, String)>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut p = LaurentPoly::zero().with_var(&raw.var);
        for (e, c) in raw.terms {
            let c: BigInt = c.parse().map_err(|_| D::Error::custom("bad coefficient"))?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}
