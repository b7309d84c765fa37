//! Exhaustive subspace and flag enumeration over small fields.
//!
//! Subspaces are represented by their canonical reduced-row-echelon bases,
//! enumerated by pivot-column profile with the free entries swept in
//! lexicographic order, so each subspace appears exactly once.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::oracle::linalg::Mat;
use crate::oracle::space::{FlagOfForms, FormKind, GramSpace};
use crate::oracle::SmallField;

/// Anything that can test a subspace for non-degeneracy: a formed space or a
/// flag of forms.
pub trait FormedObject {
    fn field(&self) -> &SmallField;
    fn dim(&self) -> usize;
    fn subspace_is_nondegenerate(&self, basis: &Mat) -> bool;
}

impl FormedObject for GramSpace {
    fn field(&self) -> &SmallField {
        &self.field
    }
    fn dim(&self) -> usize {
        self.n
    }
    fn subspace_is_nondegenerate(&self, basis: &Mat) -> bool {
        self.is_nondegenerate(basis)
    }
}

impl FormedObject for FlagOfForms {
    fn field(&self) -> &SmallField {
        &self.field
    }
    fn dim(&self) -> usize {
        self.n
    }
    fn subspace_is_nondegenerate(&self, basis: &Mat) -> bool {
        self.is_nondegenerate(basis)
    }
}

/// All `dim`-dimensional subspaces of `F^n` as canonical RREF bases.
pub fn subspaces(field: &SmallField, n: usize, dim: usize) -> Result<Vec<Mat>> {
    let count = subspace_count(field.order() as u64, n, dim);
    if count > BigInt::from(10_000_000u64) {
        return Err(Error::resource(format!("{count} subspaces of dimension {dim} in F^{n}")));
    }
    let mut out = Vec::new();
    let pivot_sets = combinations(n, dim);
    for pivots in pivot_sets {
        // free entries: (row i, col j) with j > pivots[i] and j not a pivot
        let mut free: Vec<(usize, usize)> = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            for j in p + 1..n {
                if !pivots.contains(&j) {
                    free.push((i, j));
                }
            }
        }
        let q = field.order();
        let total = q.pow(free.len() as u32);
        for mut idx in 0..total {
            let mut m = Mat::zero(dim, n);
            for (i, &p) in pivots.iter().enumerate() {
                m[(i, p)] = 1;
            }
            for &(i, j) in &free {
                m[(i, j)] = (idx % q) as u8;
                idx /= q;
            }
            out.push(m);
        }
    }
    Ok(out)
}

/// Gaussian binomial value at the field order, as an exact integer.
pub fn subspace_count(q: u64, n: usize, dim: usize) -> BigInt {
    if dim > n {
        return BigInt::from(0);
    }
    let q = BigInt::from(q);
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..dim {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((dim - i) as u32) - 1;
    }
    num / den
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// All subspaces of dimension `target` containing the row space of `base`:
/// lifts of the (target - k)-dimensional subspaces of the quotient.
pub fn extensions(field: &SmallField, base: &Mat, target: usize) -> Result<Vec<Mat>> {
    let n = base.cols;
    let k = base.rows;
    assert!(target >= k && target <= n);
    // coordinate complement: the non-pivot columns of the RREF of base
    let mut rref = base.clone();
    let pivots = rref.rref(field);
    debug_assert_eq!(pivots.len(), k);
    let complement: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut out = Vec::new();
    for sub in subspaces(field, n - k, target - k)? {
        let mut m = base.clone();
        for r in 0..sub.rows {
            let mut v = vec![0u8; n];
            for (idx, &c) in complement.iter().enumerate() {
                v[c] = sub[(r, idx)];
            }
            m.push_row(&v);
        }
        out.push(m.row_space_basis(field));
    }
    Ok(out)
}

/// The exact number of non-degenerate flags of type `J` in the formed
/// object, by depth-first extension from the smallest member.
pub fn count_flags<T: FormedObject>(obj: &T, j_dims: &[usize], max_ops: u64) -> Result<BigInt> {
    let mut dims = j_dims.to_vec();
    dims.sort_unstable();
    if dims.iter().any(|&d| d == 0 || d >= obj.dim()) || dims.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::domain("flag type must be a subset of [n-1]"));
    }
    let mut ops = 0u64;
    if dims.is_empty() {
        return Ok(BigInt::from(1));
    }
    let field = obj.field().clone();
    let first: Vec<Mat> = subspaces(&field, obj.dim(), dims[0])?;
    let mut total = BigInt::from(0);
    for u in first {
        ops += 1;
        if ops > max_ops {
            return Err(Error::resource("flag enumeration budget exhausted"));
        }
        if obj.subspace_is_nondegenerate(&u) {
            total += count_extensions(obj, &u, &dims[1..], &mut ops, max_ops)?;
        }
    }
    Ok(total)
}

fn count_extensions<T: FormedObject>(
    obj: &T,
    base: &Mat,
    rest: &[usize],
    ops: &mut u64,
    max_ops: u64,
) -> Result<BigInt> {
    let Some(&next) = rest.first() else { return Ok(BigInt::from(1)) };
    let mut total = BigInt::from(0);
    for u in extensions(obj.field(), base, next)? {
        *ops += 1;
        if *ops > max_ops {
            return Err(Error::resource("flag enumeration budget exhausted"));
        }
        if obj.subspace_is_nondegenerate(&u) {
            total += count_extensions(obj, &u, &rest[1..], ops, max_ops)?;
        }
    }
    Ok(total)
}

/// Witt type of an even-dimensional non-degenerate restriction, computed by
/// hyperbolic-pair stripping: find an isotropic vector, complete it to a
/// hyperbolic pair, pass to the perp, and read off the anisotropic kernel
/// dimension `d` (0 -> +1, 2 -> -1). Uniform in the characteristic.
pub fn quadratic_type(space: &GramSpace, basis: &Mat) -> Result<i32> {
    assert_eq!(space.kind, FormKind::Quadratic);
    if basis.rows % 2 != 0 {
        return Err(Error::domain("typed counts need even dimension"));
    }
    let mut current = space.restrict_quadratic(basis);
    loop {
        let k = current.n;
        if k == 0 {
            return Ok(1);
        }
        let f = current.field.clone();
        // find a nonzero isotropic vector
        let iso = crate::oracle::linalg::all_vectors(&f, k)
            .find(|v| v.iter().any(|&x| x != 0) && current.quad(v) == 0);
        let Some(v) = iso else {
            return match k {
                2 => Ok(-1),
                _ => Err(Error::inconsistent(format!("anisotropic space of dimension {k}"))),
            };
        };
        // w with B(v, w) = 1
        let w = crate::oracle::linalg::all_vectors(&f, k)
            .find(|w| current.bilinear(&v, w) != 0)
            .ok_or_else(|| Error::inconsistent("isotropic vector in the radical"))?;
        let scale = f.inv(current.bilinear(&v, &w))?;
        let w: Vec<u8> = w.iter().map(|&x| f.mul(x, scale)).collect();
        // make w isotropic: w' = w + t v with t = -f(w) / c(v, w)
        let c = if f.characteristic() == 2 {
            current.bilinear(&v, &w)
        } else {
            f.mul(2 % f.order() as u8, current.bilinear(&v, &w))
        };
        let t = f.neg(f.mul(current.quad(&w), f.inv(c)?));
        let wv: Vec<u8> = (0..k).map(|i| f.add(w[i], f.mul(t, v[i]))).collect();
        debug_assert_eq!(current.quad(&wv), 0);
        debug_assert_eq!(current.bilinear(&v, &wv), 1);
        // restrict to the B-perp of <v, w'>
        let mut rels = Mat::zero(2, k);
        for i in 0..k {
            // B(x, v) = 0 and B(x, w') = 0 as linear conditions on x
            rels[(0, i)] = current.bilinear(&unit(i, k), &v);
            rels[(1, i)] = current.bilinear(&unit(i, k), &wv);
        }
        let perp = rels.kernel_basis(&f);
        debug_assert_eq!(perp.rows, k - 2);
        current = current.restrict_quadratic(&perp);
    }
}

fn unit(i: usize, k: usize) -> Vec<u8> {
    let mut v = vec![0u8; k];
    v[i] = 1;
    v
}

/// Count non-degenerate `j`-dimensional subspaces of a given Witt type.
pub fn count_typed_subspaces(
    space: &GramSpace,
    j: usize,
    delta: i32,
    max_ops: u64,
) -> Result<BigInt> {
    if space.kind != FormKind::Quadratic {
        return Err(Error::domain("typed counts are for quadratic spaces"));
    }
    if j % 2 != 0 {
        return Err(Error::domain("typed counts need even dimension"));
    }
    let mut total = BigInt::from(0);
    let mut ops = 0u64;
    for u in subspaces(&space.field, space.n, j)? {
        ops += 1;
        if ops > max_ops {
            return Err(Error::resource("typed enumeration budget exhausted"));
        }
        if space.is_nondegenerate(&u) && quadratic_type(space, &u)? == delta {
            total += 1;
        }
    }
    Ok(total)
}

/// The characteristic-2 symmetric-bilinear control table: non-degenerate
/// flag counts in the identity-Gram space of dimension 4 over a char-2
/// field, for every flag type.
pub fn a3_counterexample_table(field: &SmallField) -> Result<Vec<(Vec<usize>, BigInt)>> {
    if field.characteristic() != 2 {
        return Err(Error::domain("the control table lives in characteristic 2"));
    }
    let space = crate::oracle::space::standard_space(FormKind::SymmetricBilinear, 4, field, None)?;
    let mut out = Vec::new();
    for mask in 0u32..8 {
        let dims: Vec<usize> = (1..=3).filter(|&d| mask & (1 << (d - 1)) != 0).collect();
        let count = count_flags(&space, &dims, 100_000_000)?;
        out.push((dims, count));
    }
    Ok(out)
}
