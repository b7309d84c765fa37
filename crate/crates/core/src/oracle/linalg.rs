//! Dense matrices over a small field and the row-reduction utilities the
//! subspace enumeration needs.

use crate::oracle::SmallField;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<u8>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<u8>>) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Mat::zero(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c);
            m.data[i * c..(i + 1) * c].copy_from_slice(&row);
        }
        m
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn push_row(&mut self, row: &[u8]) {
        assert_eq!(row.len(), self.cols);
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    pub fn mul(&self, other: &Mat, f: &SmallField) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = f.add(out[(i, j)], f.mul(a, other[(k, j)]));
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self, f: &SmallField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self[(i, c)] != 0) else { continue };
            self.swap_rows(r, pr);
            let scale = f.inv(self[(r, c)]).unwrap();
            for j in 0..self.cols {
                self[(r, j)] = f.mul(self[(r, j)], scale);
            }
            for i in 0..self.rows {
                if i != r && self[(i, c)] != 0 {
                    let factor = self[(i, c)];
                    for j in 0..self.cols {
                        let sub = f.mul(factor, self[(r, j)]);
                        self[(i, j)] = f.sub(self[(i, j)], sub);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &SmallField) -> usize {
        let mut m = self.clone();
        m.rref(f).len()
    }

    /// Basis of the right kernel `{x : M x^T = 0}`, as rows.
    pub fn kernel_basis(&self, f: &SmallField) -> Mat {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Mat::zero(0, self.cols);
        for &fc in &free {
            let mut v = vec![0u8; self.cols];
            v[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m[(r, fc)]);
            }
            out.push_row(&v);
        }
        out
    }

    /// Drop zero rows and return the reduced basis of the row space.
    pub fn row_space_basis(&self, f: &SmallField) -> Mat {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let mut out = Mat::zero(0, self.cols);
        for i in 0..pivots.len() {
            out.push_row(m.row(i));
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn is_invertible(&self, f: &SmallField) -> bool {
        self.rows == self.cols && self.rank(f) == self.rows
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = u8;
    fn index(&self, (i, j): (usize, usize)) -> &u8 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u8 {
        &mut self.data[i * self.cols + j]
    }
}

/// All vectors of `F^k` in lexicographic order, including zero.
pub fn all_vectors(f: &SmallField, k: usize) -> impl Iterator<Item = Vec<u8>> + '_ {
    let q = f.order();
    let total = q.pow(k as u32);
    (0..total).map(move |mut idx| {
        let mut v = vec![0u8; k];
        for slot in v.iter_mut().rev() {
            *slot = (idx % q) as u8;
            idx /= q;
        }
        v
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_rank() {
        let f = SmallField::new(3).unwrap();
        // third row = first - 2 * second (mod 3)
        let m = Mat::from_rows(vec![vec![1, 2, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        let mut r = m.clone();
        let pivots = r.rref(&f);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(m.rank(&f), 2);
        let k = m.kernel_basis(&f);
        assert_eq!(k.rows, 1);
        // kernel vectors really annihilate
        let prod = Mat::from_rows(vec![k.row(0).to_vec()]).mul(&m.transpose(), &f);
        assert!(prod.row(0).iter().all(|&x| x == 0));
    }

    #[test]
    fn vectors_enumeration() {
        let f = SmallField::new(4).unwrap();
        assert_eq!(all_vectors(&f, 2).count(), 16);
        let f2 = SmallField::new(2).unwrap();
        let vs: Vec<_> = all_vectors(&f2, 3).collect();
        assert_eq!(vs[0], vec![0, 0, 0]);
        assert_eq!(vs[7], vec![1, 1, 1]);
    }
}
