//! Gaussian binomial and multinomial coefficients as exact polynomials.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactalg::LaurentPoly;
use crate::subset::Subset;

/// `binom(a, b)_X = prod_{i=0}^{b-1} (1 - X^{a-i}) / (1 - X^{b-i})`, computed
/// through the q-Pascal recurrence so every intermediate stays polynomial.
/// At a prime power `X = q` this counts the `b`-dimensional subspaces of
/// `F_q^a`.
pub fn gaussian_binomial(a: usize, b: usize) -> Result<LaurentPoly> {
    if b > a {
        return Err(Error::domain(format!("gaussian_binomial({a}, {b}) needs a >= b")));
    }
    // binom(a,b) = binom(a-1,b-1) + X^b binom(a-1,b); row-by-row table.
    let b = b.min(a - b); // symmetry binom(a,b) = binom(a,a-b)
    let mut row: Vec<LaurentPoly> = vec![LaurentPoly::one()];
    for n in 1..=a {
        let width = b.min(n);
        let mut next: Vec<LaurentPoly> = Vec::with_capacity(width + 1);
        next.push(LaurentPoly::one());
        for k in 1..=width {
            let keep = if k < row.len() {
                row[k].shift(k as i64)
            } else {
                LaurentPoly::zero()
            };
            next.push(row[k - 1].add(&keep));
        }
        row = next;
    }
    Ok(row[b].clone())
}

/// `binom(n, J)_X = binom(n, j_s) binom(j_s, j_{s-1}) ... binom(j_2, j_1)`
/// for `J = {j_1 < ... < j_s}`. Elements `0` and `n` contribute trivial
/// factors and are permitted.
pub fn gaussian_multinomial(n: usize, j_set: Subset) -> Result<LaurentPoly> {
    if let Some(mx) = j_set.max() {
        if mx > n {
            return Err(Error::domain(format!(
                "gaussian_multinomial: element {mx} exceeds n = {n}"
            )));
        }
    }
    // Telescoping product from the top down.
    let mut out = LaurentPoly::one();
    let mut upper = n;
    for e in j_set.elements().into_iter().rev() {
        out = out.mul(&gaussian_binomial(upper, e)?);
        upper = e;
    }
    Ok(out)
}

/// `deg_q binom(n, J)_q = sum j_s (j_{s+1} - j_s)` with `j_{s+1} = n`.
pub fn multinomial_degree(n: usize, j_set: Subset) -> i64 {
    let mut elems: Vec<usize> = j_set.elements().into_iter().filter(|&j| j > 0).collect();
    elems.push(n);
    let mut deg = 0i64;
    for w in elems.windows(2) {
        deg += (w[0] as i64) * (w[1] as i64 - w[0] as i64);
    }
    deg
}

/// Ordinary binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut out = BigInt::from(1);
    for i in 0..k.min(n - k) {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}
