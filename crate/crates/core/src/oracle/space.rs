//! Explicit formed spaces over small fields: Gram data, non-degeneracy per
//! the defining conditions, and standard models of every geometric type.

use crate::error::{Error, Result};
use crate::oracle::linalg::{all_vectors, Mat};
use crate::oracle::SmallField;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormKind {
    Alternating,
    Hermitian,
    Quadratic,
    SymmetricBilinear,
}

/// A vector space with a form. For the quadratic kind, `gram` is the
/// polarisation of `f` (alternating and possibly degenerate in
/// characteristic 2) and `quad_diag` holds the values `f(e_i)`, which the
/// Gram matrix underdetermines in characteristic 2.
#[derive(Debug, Clone)]
pub struct GramSpace {
    pub field: SmallField,
    pub n: usize,
    pub kind: FormKind,
    pub gram: Mat,
    pub quad_diag: Option<Vec<u8>>,
}

impl GramSpace {
    /// Build a quadratic space from the values `f(e_i)` and the polar values
    /// `c_ij = f(e_i + e_j) - f(e_i) - f(e_j)` for `i < j`.
    pub fn quadratic(field: SmallField, diag: Vec<u8>, polar: &Mat) -> GramSpace {
        let n = diag.len();
        let mut gram = Mat::zero(n, n);
        let char2 = field.characteristic() == 2;
        let inv2 = if char2 { 0 } else { field.inv(2 % field.order() as u8).unwrap() };
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    gram[(i, i)] = if char2 { 0 } else { diag[i] };
                } else {
                    let c = if i < j { polar[(i, j)] } else { polar[(j, i)] };
                    gram[(i, j)] = if char2 { c } else { field.mul(c, inv2) };
                }
            }
        }
        GramSpace { field, n, kind: FormKind::Quadratic, gram, quad_diag: Some(diag) }
    }

    /// `B(x, y)`, with conjugation on the second argument for hermitian.
    pub fn bilinear(&self, x: &[u8], y: &[u8]) -> u8 {
        let f = &self.field;
        let mut acc = 0u8;
        for i in 0..self.n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..self.n {
                let yj = match self.kind {
                    FormKind::Hermitian => f.conjugate(y[j]).expect("hermitian field"),
                    _ => y[j],
                };
                acc = f.add(acc, f.mul(x[i], f.mul(self.gram[(i, j)], yj)));
            }
        }
        acc
    }

    /// The quadratic value `f(x)`; for non-quadratic kinds this is `B(x, x)`.
    pub fn quad(&self, x: &[u8]) -> u8 {
        let f = &self.field;
        match (&self.quad_diag, self.kind) {
            (Some(diag), FormKind::Quadratic) => {
                let mut acc = 0u8;
                for i in 0..self.n {
                    acc = f.add(acc, f.mul(f.mul(x[i], x[i]), diag[i]));
                    for j in i + 1..self.n {
                        let c = self.polar_value(i, j);
                        acc = f.add(acc, f.mul(f.mul(x[i], x[j]), c));
                    }
                }
                acc
            }
            _ => self.bilinear(x, x),
        }
    }

    /// `c_ij = f(e_i + e_j) - f(e_i) - f(e_j)` recovered from the Gram matrix.
    fn polar_value(&self, i: usize, j: usize) -> u8 {
        let f = &self.field;
        if f.characteristic() == 2 {
            self.gram[(i, j)]
        } else {
            f.mul(2 % f.order() as u8, self.gram[(i, j)])
        }
    }

    /// Gram matrix of the restriction of `B` to the row space of `basis`.
    pub fn restricted_gram(&self, basis: &Mat) -> Mat {
        let k = basis.rows;
        let mut m = Mat::zero(k, k);
        for i in 0..k {
            for j in 0..k {
                m[(i, j)] = self.bilinear(basis.row(i), basis.row(j));
            }
        }
        m
    }

    /// The restriction to a subspace as a stand-alone quadratic space (in the
    /// coordinates of `basis`). Quadratic kind only.
    pub fn restrict_quadratic(&self, basis: &Mat) -> GramSpace {
        assert_eq!(self.kind, FormKind::Quadratic);
        let f = self.field.clone();
        let k = basis.rows;
        let diag: Vec<u8> = (0..k).map(|i| self.quad(basis.row(i))).collect();
        let mut polar = Mat::zero(k, k);
        for i in 0..k {
            for j in i + 1..k {
                let mut sum = vec![0u8; self.n];
                for t in 0..self.n {
                    sum[t] = f.add(basis.row(i)[t], basis.row(j)[t]);
                }
                let c = f.sub(f.sub(self.quad(&sum), diag[i]), diag[j]);
                polar[(i, j)] = c;
            }
        }
        GramSpace::quadratic(f, diag, &polar)
    }

    /// Non-degeneracy of the restriction to the row space of `basis`:
    /// a full-rank restricted Gram matrix for the sesquilinear kinds, and for
    /// quadratic spaces anisotropy of `f` on the radical of the restricted
    /// polarisation (which reduces to the full-rank test away from
    /// characteristic 2).
    pub fn is_nondegenerate(&self, basis: &Mat) -> bool {
        let gram_u = self.restricted_gram(basis);
        match self.kind {
            FormKind::Alternating | FormKind::Hermitian | FormKind::SymmetricBilinear => {
                gram_u.rank(&self.field) == basis.rows
            }
            FormKind::Quadratic => {
                // kernel vectors are coefficient rows over the basis of U
                let rad = gram_u.kernel_basis(&self.field);
                if rad.rows == 0 {
                    return true;
                }
                // f must be anisotropic on the radical
                let f = &self.field;
                for coeffs in all_vectors(f, rad.rows) {
                    if coeffs.iter().all(|&c| c == 0) {
                        continue;
                    }
                    let mut v = vec![0u8; self.n];
                    for (r, &c) in coeffs.iter().enumerate() {
                        if c == 0 {
                            continue;
                        }
                        for i in 0..basis.rows {
                            let scale = f.mul(c, rad[(r, i)]);
                            if scale == 0 {
                                continue;
                            }
                            for t in 0..self.n {
                                v[t] = f.add(v[t], f.mul(scale, basis.row(i)[t]));
                            }
                        }
                    }
                    if self.quad(&v) == 0 {
                        return false;
                    }
                }
                true
            }
        }
    }

    /// Change of basis: the space whose basis vectors are the rows of `m`.
    pub fn change_basis(&self, m: &Mat) -> Result<GramSpace> {
        if !m.is_invertible(&self.field) {
            return Err(Error::domain("basis change must be invertible"));
        }
        match self.kind {
            FormKind::Quadratic => {
                let mut s = self.restrict_quadratic(m);
                s.kind = FormKind::Quadratic;
                Ok(s)
            }
            _ => {
                let gram = self.restricted_gram(m);
                Ok(GramSpace {
                    field: self.field.clone(),
                    n: self.n,
                    kind: self.kind,
                    gram,
                    quad_diag: None,
                })
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Standard models
// ---------------------------------------------------------------------------

/// The standard non-degenerate space of each kind:
/// symplectic basis, unitary orthonormal basis, orthogonal hyperbolic sum
/// plus anisotropic kernel, char-2 identity symmetric bilinear form.
pub fn standard_space(
    kind: FormKind,
    n: usize,
    field: &SmallField,
    epsilon: Option<i32>,
) -> Result<GramSpace> {
    match kind {
        FormKind::Alternating => {
            if n % 2 != 0 {
                return Err(Error::domain("alternating spaces have even dimension"));
            }
            let mut gram = Mat::zero(n, n);
            for b in 0..n / 2 {
                gram[(2 * b, 2 * b + 1)] = 1;
                gram[(2 * b + 1, 2 * b)] = field.neg(1);
            }
            Ok(GramSpace { field: field.clone(), n, kind, gram, quad_diag: None })
        }
        FormKind::Hermitian => {
            if !field.has_involution() {
                return Err(Error::domain("hermitian forms need a quadratic extension field"));
            }
            Ok(GramSpace { field: field.clone(), n, kind, gram: Mat::identity(n), quad_diag: None })
        }
        FormKind::Quadratic => standard_quadratic(n, field, epsilon),
        FormKind::SymmetricBilinear => {
            if field.characteristic() != 2 {
                return Err(Error::domain(
                    "the symmetric-bilinear kind is reserved for characteristic 2",
                ));
            }
            Ok(GramSpace { field: field.clone(), n, kind, gram: Mat::identity(n), quad_diag: None })
        }
    }
}

fn standard_quadratic(n: usize, field: &SmallField, epsilon: Option<i32>) -> Result<GramSpace> {
    let eps = match (n % 2, epsilon) {
        (0, Some(e)) if e == 1 || e == -1 => e,
        (0, _) => return Err(Error::domain("even-dimensional quadratic spaces need epsilon")),
        (_, None) | (_, Some(1)) => 1,
        (_, Some(-1)) if field.characteristic() != 2 => -1,
        _ => return Err(Error::domain("odd char-2 quadratic spaces have a single type")),
    };
    let m = n / 2;
    let mut diag = vec![0u8; n];
    let mut polar = Mat::zero(n, n);
    let hyperbolic_planes = if n % 2 == 0 && eps == -1 { m - 1 } else { m };
    for b in 0..hyperbolic_planes {
        polar[(2 * b, 2 * b + 1)] = 1; // f(x e + y f) = xy
    }
    if n % 2 == 1 {
        // anisotropic line, f(e) in the square class chosen by epsilon
        diag[n - 1] = if eps == 1 || field.characteristic() == 2 {
            1
        } else {
            field.non_square()?
        };
    } else if eps == -1 {
        // anisotropic plane on the last two coordinates
        let (a, b, c) = anisotropic_plane_coeffs(field)?;
        diag[n - 2] = a;
        diag[n - 1] = c;
        polar[(n - 2, n - 1)] = b;
    }
    let space = GramSpace::quadratic(field.clone(), diag, &polar);
    debug_assert!(space.is_nondegenerate(&Mat::identity(n)));
    Ok(space)
}

/// Coefficients `(a, b, c)` of an anisotropic binary form `a x^2 + b xy + c y^2`,
/// found by search and certified by exhausting all nonzero vectors.
fn anisotropic_plane_coeffs(field: &SmallField) -> Result<(u8, u8, u8)> {
    for a in field.elements() {
        for b in field.elements() {
            for c in field.elements() {
                if a == 0 && b == 0 && c == 0 {
                    continue;
                }
                let anisotropic = all_vectors(field, 2).all(|v| {
                    let (x, y) = (v[0], v[1]);
                    if x == 0 && y == 0 {
                        return true;
                    }
                    let f = field;
                    let val = f.add(
                        f.add(f.mul(a, f.mul(x, x)), f.mul(b, f.mul(x, y))),
                        f.mul(c, f.mul(y, y)),
                    );
                    val != 0
                });
                if anisotropic {
                    return Ok((a, b, c));
                }
            }
        }
    }
    Err(Error::inconsistent("no anisotropic plane found"))
}

// ---------------------------------------------------------------------------
// Flags of forms
// ---------------------------------------------------------------------------

/// A flag of sesquilinear forms of type `I` on the standard radical flag
/// `R_i = <e_1, ..., e_i>`: one form per level, each stored on the first
/// `dim` coordinates with radical exactly the previous level.
#[derive(Debug, Clone)]
pub struct FlagOfForms {
    pub field: SmallField,
    pub n: usize,
    pub kind: FormKind,
    /// `(dim, space)` for each level, innermost first; the last level has
    /// `dim = n`.
    pub levels: Vec<(usize, GramSpace)>,
}

/// Standard flag of forms: level `rho` carries the standard non-degenerate
/// form on the coordinate block `(i_{rho-1}, i_rho]`, extended by zero.
pub fn standard_flag_of_forms(
    n: usize,
    type_dims: &[usize],
    kind: FormKind,
    field: &SmallField,
) -> Result<FlagOfForms> {
    if !matches!(kind, FormKind::Alternating | FormKind::Hermitian) {
        return Err(Error::domain("flags of forms are alternating or hermitian"));
    }
    let mut dims = type_dims.to_vec();
    dims.sort_unstable();
    if dims.iter().any(|&d| d == 0 || d >= n) || dims.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::domain("flag type must be a subset of [n-1]"));
    }
    if kind == FormKind::Alternating && (n % 2 != 0 || dims.iter().any(|&d| d % 2 != 0)) {
        return Err(Error::domain("alternating flag types consist of even numbers"));
    }
    dims.push(n);
    let mut levels = Vec::new();
    let mut prev = 0usize;
    for &d in &dims {
        let block = standard_space(kind, d - prev, field, None)?;
        let mut gram = Mat::zero(d, d);
        for i in 0..d - prev {
            for j in 0..d - prev {
                gram[(prev + i, prev + j)] = block.gram[(i, j)];
            }
        }
        let space = GramSpace { field: field.clone(), n: d, kind, gram, quad_diag: None };
        // radical of this level must be exactly the previous level
        let rad = space.gram.kernel_basis(field);
        if rad.rows != prev {
            return Err(Error::inconsistent("level radical has wrong dimension"));
        }
        levels.push((d, space));
        prev = d;
    }
    Ok(FlagOfForms { field: field.clone(), n, kind, levels })
}

impl FlagOfForms {
    /// Type `I`: the dimensions of the proper radicals.
    pub fn type_dims(&self) -> Vec<usize> {
        self.levels[..self.levels.len() - 1].iter().map(|&(d, _)| d).collect()
    }

    /// Non-degeneracy of a subspace with respect to the flag of forms: for
    /// each level, the intersection with the radical is non-degenerate for
    /// the truncated flag and the image modulo the radical is non-degenerate
    /// for the quotient flag.
    pub fn is_nondegenerate(&self, basis: &Mat) -> bool {
        self.nondeg_rec(&self.levels, basis)
    }

    fn nondeg_rec(&self, levels: &[(usize, GramSpace)], basis: &Mat) -> bool {
        let f = &self.field;
        let (top_dim, _) = *levels.last().expect("at least one level");
        debug_assert_eq!(basis.cols, top_dim);
        if levels.len() == 1 {
            return levels[0].1.is_nondegenerate(basis);
        }
        for (rho, &(dim, _)) in levels.iter().enumerate().take(levels.len() - 1) {
            // (a) intersection with R_{i_rho}: vectors with zero tail
            let inter = intersect_with_coordinate_prefix(basis, dim, f);
            if !self.nondeg_rec(&levels[..=rho], &inter) {
                return false;
            }
            // (b) image in V / R_{i_rho}: tails of the vectors
            let mut tails = Mat::zero(0, top_dim - dim);
            for i in 0..basis.rows {
                tails.push_row(&basis.row(i)[dim..]);
            }
            let image = tails.row_space_basis(f);
            let quotient: Vec<(usize, GramSpace)> = levels[rho + 1..]
                .iter()
                .map(|(d, s)| (d - dim, quotient_block(s, dim, *d, f)))
                .collect();
            if !self.nondeg_rec(&quotient, &image) {
                return false;
            }
        }
        true
    }
}

/// Basis of `U intersect <e_1..e_dim>` for `U` given by rows.
fn intersect_with_coordinate_prefix(basis: &Mat, dim: usize, f: &SmallField) -> Mat {
    // row-reduce against the tail coordinates: combinations with zero tail
    let mut tails = Mat::zero(0, basis.cols - dim);
    for i in 0..basis.rows {
        tails.push_row(&basis.row(i)[dim..]);
    }
    // left kernel: coefficient vectors over the rows of `basis`
    let combos = tails.transpose().kernel_basis(f);
    let mut out = Mat::zero(0, dim);
    for r in 0..combos.rows {
        let mut v = vec![0u8; basis.cols];
        for (i, &c) in combos.row(r).iter().enumerate() {
            if c == 0 {
                continue;
            }
            for t in 0..basis.cols {
                v[t] = f.add(v[t], f.mul(c, basis.row(i)[t]));
            }
        }
        debug_assert!(v[dim..].iter().all(|&x| x == 0));
        out.push_row(&v[..dim]);
    }
    out.row_space_basis(f)
}

/// The form induced on `R_d / R_{cut}` by a level form on `R_d` whose radical
/// contains `R_{cut}`: the bottom-right block of its Gram matrix.
fn quotient_block(space: &GramSpace, cut: usize, d: usize, f: &SmallField) -> GramSpace {
    let k = d - cut;
    let mut gram = Mat::zero(k, k);
    for i in 0..k {
        for j in 0..k {
            gram[(i, j)] = space.gram[(cut + i, cut + j)];
        }
    }
    GramSpace { field: f.clone(), n: k, kind: space.kind, gram, quad_diag: None }
}
