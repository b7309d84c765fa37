//! Igusa-type rational functions, stored on the basis
//! `e_K = prod_{k in K} 1/(1 - X_k)`.
//!
//! The `e_K` are linearly independent over the Laurent-polynomial
//! coefficients, so equality of coefficient maps is equality of functions.
//! Both substitutions needed for functional equations are cheap here:
//! `X -> X^{-1}` is triangular on the basis and `q -> q^{-1}` acts
//! coefficient-wise.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::exactalg::LaurentPoly;
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IgusaFunction {
    n_vars: usize,
    coeffs: BTreeMap<Subset, LaurentPoly>,
}

impl IgusaFunction {
    pub fn zero(n_vars: usize) -> IgusaFunction {
        assert!(n_vars <= 16, "too many variables");
        IgusaFunction { n_vars, coeffs: BTreeMap::new() }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn from_e_coeffs(n_vars: usize, coeffs: BTreeMap<Subset, LaurentPoly>) -> IgusaFunction {
        let mut f = IgusaFunction::zero(n_vars);
        for (k, c) in coeffs {
            f.add_e_term(k, c);
        }
        f
    }

    /// Build `sum_J coeffs[J] * F_J` where `F_J = prod_{j in J} X_j/(1-X_j)`,
    /// expanded on the e-basis via `X/(1-X) = 1/(1-X) - 1`.
    pub fn from_f_coeffs(n_vars: usize, coeffs: &BTreeMap<Subset, LaurentPoly>) -> IgusaFunction {
        let mut dense = Self::dense_from(n_vars, coeffs);
        // c_K = sum_{J >= K} (-1)^{|J \ K|} alpha_J
        for b in 0..n_vars {
            let bit = 1u32 << b;
            for mask in 0..dense.len() as u32 {
                if mask & bit == 0 {
                    let hi = dense[(mask | bit) as usize].clone();
                    dense[mask as usize] = dense[mask as usize].sub(&hi);
                }
            }
        }
        Self::from_dense(n_vars, dense)
    }

    /// The single basis function `F_J` as an Igusa function.
    pub fn f_basis(n_vars: usize, j_set: Subset) -> IgusaFunction {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(j_set, LaurentPoly::one());
        Self::from_f_coeffs(n_vars, &coeffs)
    }

    /// Coefficients on the F-basis: `alpha_J = sum_{K >= J} c_K`.
    pub fn f_coeffs(&self) -> BTreeMap<Subset, LaurentPoly> {
        let mut dense = Self::dense_from(self.n_vars, &self.coeffs);
        for b in 0..self.n_vars {
            let bit = 1u32 << b;
            for mask in 0..dense.len() as u32 {
                if mask & bit == 0 {
                    let hi = dense[(mask | bit) as usize].clone();
                    dense[mask as usize] = dense[mask as usize].add(&hi);
                }
            }
        }
        let mut out = BTreeMap::new();
        for (mask, p) in dense.into_iter().enumerate() {
            if !p.is_zero() {
                out.insert(Subset(mask as u32), p);
            }
        }
        out
    }

    pub fn e_coeffs(&self) -> &BTreeMap<Subset, LaurentPoly> {
        &self.coeffs
    }

    fn dense_from(n_vars: usize, sparse: &BTreeMap<Subset, LaurentPoly>) -> Vec<LaurentPoly> {
        let mut dense = vec![LaurentPoly::zero(); 1 << n_vars];
        for (k, c) in sparse {
            debug_assert!(k.is_subset_of(Subset::full(n_vars)));
            dense[k.0 as usize] = c.clone();
        }
        dense
    }

    fn from_dense(n_vars: usize, dense: Vec<LaurentPoly>) -> IgusaFunction {
        let mut f = IgusaFunction::zero(n_vars);
        for (mask, p) in dense.into_iter().enumerate() {
            if !p.is_zero() {
                f.coeffs.insert(Subset(mask as u32), p);
            }
        }
        f
    }

    fn add_e_term(&mut self, k: Subset, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(k).or_insert_with(LaurentPoly::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn add(&self, other: &IgusaFunction) -> IgusaFunction {
        assert_eq!(self.n_vars, other.n_vars);
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_e_term(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &IgusaFunction) -> IgusaFunction {
        self.add(&other.scale(&LaurentPoly::constant(-1)))
    }

    /// Multiply every coefficient by a Laurent polynomial in the base
    /// variable (e.g. `(-1)^a q^b`).
    pub fn scale(&self, s: &LaurentPoly) -> IgusaFunction {
        let mut out = IgusaFunction::zero(self.n_vars);
        for (k, c) in &self.coeffs {
            out.add_e_term(*k, c.mul(s));
        }
        out
    }

    /// Substitute `X_k -> X_k^{-1}` for every k. On the e-basis this is the
    /// triangular map `e_K -> sum_{K' <= K} (-1)^{|K'|} e_{K'}`; it is an
    /// involution.
    pub fn invert_vars(&self) -> IgusaFunction {
        let mut dense = Self::dense_from(self.n_vars, &self.coeffs);
        // superset zeta: t[K'] = sum_{K >= K'} c_K
        for b in 0..self.n_vars {
            let bit = 1u32 << b;
            for mask in 0..dense.len() as u32 {
                if mask & bit == 0 {
                    let hi = dense[(mask | bit) as usize].clone();
                    dense[mask as usize] = dense[mask as usize].add(&hi);
                }
            }
        }
        for (mask, p) in dense.iter_mut().enumerate() {
            if (mask.count_ones() & 1) == 1 {
                *p = p.neg();
            }
        }
        Self::from_dense(self.n_vars, dense)
    }

    /// Substitute `q -> q^{-1}` in every coefficient.
    pub fn invert_base(&self) -> IgusaFunction {
        let mut out = IgusaFunction::zero(self.n_vars);
        for (k, c) in &self.coeffs {
            out.add_e_term(*k, c.invert_var());
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

/// A rendered Igusa function: a multilinear numerator over a product of
/// `(1 - X_j)` factors with `D` minimal.
pub struct RenderedIgusa {
    pub denominator: Subset,
    /// monomial (subset of variable indices) -> coefficient
    pub numerator: BTreeMap<Subset, LaurentPoly>,
}

impl IgusaFunction {
    /// Compute the reduced display: numerator coefficients over the minimal
    /// denominator set `D`, dropping candidates in increasing index order.
    pub fn rendered(&self) -> RenderedIgusa {
        let d_full = Subset::full(self.n_vars);
        // numerator over D = [n_vars]: num[M] = (-1)^{|M|} sum_{K <= D\M} c_K
        let mut num: BTreeMap<Subset, LaurentPoly> = BTreeMap::new();
        for m in d_full.subsets() {
            let avail = d_full.intersection(m.complement(self.n_vars));
            let mut acc = LaurentPoly::zero();
            for (k, c) in &self.coeffs {
                if k.is_subset_of(avail) {
                    acc = acc.add(c);
                }
            }
            if m.len() % 2 == 1 {
                acc = acc.neg();
            }
            if !acc.is_zero() {
                num.insert(m, acc);
            }
        }
        let mut den = d_full;
        for j in 1..=self.n_vars {
            // dividing by (1 - X_j) is exact iff the X_j-part is the negative
            // of the X_j-free part
            let mut divisible = true;
            for m in den.remove(j).subsets() {
                let a = num.get(&m).cloned().unwrap_or_else(LaurentPoly::zero);
                let b = num.get(&m.insert(j)).cloned().unwrap_or_else(LaurentPoly::zero);
                if !a.add(&b).is_zero() {
                    divisible = false;
                    break;
                }
            }
            if divisible {
                num.retain(|m, _| !m.contains(j));
                den = den.remove(j);
            }
        }
        RenderedIgusa { denominator: den, numerator: num }
    }

    pub fn render_text(&self) -> String {
        self.render_fmt(false)
    }

    pub fn render_latex(&self) -> String {
        self.render_fmt(true)
    }

    fn render_fmt(&self, latex: bool) -> String {
        let r = self.rendered();
        let num = render_numerator(&r.numerator, latex);
        if r.denominator.is_empty() {
            return num;
        }
        let mut den = String::new();
        for j in r.denominator.iter() {
            let factor = if latex {
                format!("(1 - X_{j})")
            } else {
                format!("(1 - X{j})")
            };
            if !latex && !den.is_empty() {
                den.push('*');
            }
            den.push_str(&factor);
        }
        if latex {
            format!("\\frac{{{num}}}{{{den}}}")
        } else {
            format!("({num})/({den})")
        }
    }
}

/// Terms ordered by total degree in the X's, then lexicographically by index
/// vector.
fn render_numerator(num: &BTreeMap<Subset, LaurentPoly>, latex: bool) -> String {
    if num.is_empty() {
        return "0".into();
    }
    let mut monomials: Vec<Subset> = num.keys().copied().collect();
    monomials.sort_by_key(|m| (m.len(), m.elements()));
    let mut out = String::new();
    for (i, m) in monomials.iter().enumerate() {
        let c = &num[m];
        // single-term coefficients fold their sign into the join
        let (sign_negative, body) = term_body(c, *m, latex);
        if i == 0 {
            if sign_negative {
                out.push('-');
                if !latex {
                    // keep text compact: "-X1" not "- X1" at the front
                }
            }
        } else if latex {
            out.push_str(if sign_negative { " - " } else { " + " });
        } else {
            out.push_str(if sign_negative { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

fn term_body(c: &LaurentPoly, m: Subset, latex: bool) -> (bool, String) {
    let xpart = || -> String {
        let mut s = String::new();
        for j in m.iter() {
            if latex {
                s.push_str(&format!("X_{j}"));
            } else {
                if !s.is_empty() {
                    s.push('*');
                }
                s.push_str(&format!("X{j}"));
            }
        }
        s
    };
    if m.is_empty() {
        // constant term: sign folded only for single-term coefficients
        if c.num_terms() == 1 {
            let neg = c.leading_coeff() < BigInt::from(0);
            let abs = if neg { c.neg() } else { c.clone() };
            let s = if latex { abs.render_latex() } else { abs.render_text() };
            return (neg, s);
        }
        let s = if latex { c.render_latex() } else { c.render_text() };
        return (false, s);
    }
    if c.num_terms() == 1 {
        let neg = c.leading_coeff() < BigInt::from(0);
        let abs = if neg { c.neg() } else { c.clone() };
        let coeff = if abs.is_one() {
            String::new()
        } else if latex {
            abs.render_latex()
        } else {
            format!("{}*", abs.render_text())
        };
        let body = if latex {
            format!("{}{}", coeff, xpart())
        } else {
            format!("{}{}", coeff, xpart())
        };
        (neg, body)
    } else {
        let coeff = if latex {
            format!("({})", c.render_latex())
        } else {
            format!("({})*", c.render_text())
        };
        (false, format!("{}{}", coeff, xpart()))
    }
}

/// JSON form:
/// `{"n_vars": .., "basis": "e", "coeffs": [{"K": [..], "poly": {..}}, ..]}`
/// with the sets `K` sorted lexicographically as element vectors.
impl Serialize for IgusaFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            #[serde(rename = "K")]
            k: Vec<usize>,
            poly: &'a LaurentPoly,
        }
        let mut entries: Vec<Entry> = self
            .coeffs
            .iter()
            .map(|(k, p)| Entry { k: k.elements(), poly: p })
            .collect();
        entries.sort_by(|a, b| a.k.cmp(&b.k));
        let mut st = serializer.serialize_struct("IgusaFunction", 3)?;
        st.serialize_field("n_vars", &self.n_vars)?;
        st.serialize_field("basis", "e")?;
        st.serialize_field("coeffs", &entries)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_pairs(pairs)
    }

    fn e(pairs: &[(&[usize], &[(i64, i64)])], n: usize) -> IgusaFunction {
        let mut m = BTreeMap::new();
        for (k, c) in pairs {
            m.insert(Subset::from_elements(k.iter().copied()), p(c));
        }
        IgusaFunction::from_e_coeffs(n, m)
    }

    #[test]
    fn f_basis_conversion() {
        // F_{1} = e_{1} - e_empty
        let f1 = IgusaFunction::f_basis(2, Subset::from_elements([1]));
        assert_eq!(f1, e(&[(&[1], &[(0, 1)]), (&[], &[(0, -1)])], 2));
        // F_empty = 1 = e_empty
        let f0 = IgusaFunction::f_basis(2, Subset::EMPTY);
        assert_eq!(f0, e(&[(&[], &[(0, 1)])], 2));
        // round trip through f_coeffs
        let mut coeffs = BTreeMap::new();
        coeffs.insert(Subset::from_elements([1, 2]), p(&[(0, 1), (-2, -1)]));
        coeffs.insert(Subset::EMPTY, p(&[(0, 1)]));
        let f = IgusaFunction::from_f_coeffs(2, &coeffs);
        assert_eq!(f.f_coeffs(), coeffs);
    }

    #[test]
    fn invert_vars_small() {
        // invert_vars(e_{1}) = e_empty - e_{1}
        let e1 = e(&[(&[1], &[(0, 1)])], 2);
        assert_eq!(e1.invert_vars(), e(&[(&[], &[(0, 1)]), (&[1], &[(0, -1)])], 2));
        // inversion property of the standard family:
        // F_J(X^-1) = (-1)^{|J|} sum_{K <= J} F_K(X)
        for n in 1..=4usize {
            for j in Subset::all(n) {
                let lhs = IgusaFunction::f_basis(n, j).invert_vars();
                let mut rhs = IgusaFunction::zero(n);
                for k in j.subsets() {
                    rhs = rhs.add(&IgusaFunction::f_basis(n, k));
                }
                if j.len() % 2 == 1 {
                    rhs = rhs.scale(&LaurentPoly::constant(-1));
                }
                assert_eq!(lhs, rhs, "inversion property fails for J = {j}");
            }
        }
    }

    #[test]
    fn render_basic() {
        // the n = 3 quadratic-space function: (1 - q^-2 X1 X2)/((1-X1)(1-X2))
        let mut coeffs = BTreeMap::new();
        coeffs.insert(Subset::EMPTY, p(&[(0, 1)]));
        coeffs.insert(Subset::from_elements([1]), p(&[(0, 1)]));
        coeffs.insert(Subset::from_elements([2]), p(&[(0, 1)]));
        coeffs.insert(Subset::from_elements([1, 2]), p(&[(0, 1), (-2, -1)]));
        let ig = IgusaFunction::from_f_coeffs(2, &coeffs);
        assert_eq!(ig.render_text(), "(1 - q^-2*X1*X2)/((1 - X1)*(1 - X2))");
        assert_eq!(ig.render_latex(), "\\frac{1 - q^{-2}X_1X_2}{(1 - X_1)(1 - X_2)}");

        let one = e(&[(&[], &[(0, 1)])], 2);
        assert_eq!(one.render_text(), "1");
    }

    #[test]
    fn render_cancels_unused_factor() {
        // e_{1} viewed with 2 variables: 1/(1 - X1) — the (1 - X2) factor
        // must be cancelled from the display.
        let f = e(&[(&[1], &[(0, 1)])], 2);
        assert_eq!(f.render_text(), "(1)/((1 - X1))");
    }
}
