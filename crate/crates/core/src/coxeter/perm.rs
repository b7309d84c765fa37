//! Permutations in one-line notation and their length statistics.
//!
//! Convention (pinned by the example table tests below): permutations act on
//! the right, `i^{vw} = (i^v)^w`, and the one-line word is
//! `(1^w, ..., n^w)`. Left descents are then the word descents
//! `{i : i^w > (i+1)^w}`.

use crate::error::{Error, Result};
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation { images: (1..=n as u8).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v < 1 || v > n || seen[v] {
                return Err(Error::domain(format!("{images:?} is not a permutation of [{n}]")));
            }
            seen[v] = true;
        }
        Ok(Permutation { images: images.into_iter().map(|v| v as u8).collect() })
    }

    /// The adjacent transposition `s_i = (i, i+1)` in `S_n`.
    pub fn adjacent_transposition(n: usize, i: usize) -> Permutation {
        assert!(i >= 1 && i < n);
        let mut w = Permutation::identity(n);
        w.images.swap(i - 1, i);
        w
    }

    /// The order reversal `i -> n + 1 - i`.
    pub fn longest_element(n: usize) -> Permutation {
        Permutation { images: (1..=n as u8).rev().collect() }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `i^w` for `1 <= i <= n`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn word(&self) -> &[u8] {
        &self.images
    }

    /// Right-action composition: `i^{self * other} = (i^{self})^{other}`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation {
            images: self.images.iter().map(|&v| other.images[v as usize - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = i as u8 + 1;
        }
        Permutation { images }
    }

    /// `w * s_i`: swaps the values `i` and `i+1` in the one-line word.
    pub fn right_mul_adjacent(&self, i: usize) -> Permutation {
        let mut images = self.images.clone();
        for v in images.iter_mut() {
            if *v as usize == i {
                *v = i as u8 + 1;
            } else if *v as usize == i + 1 {
                *v = i as u8;
            }
        }
        Permutation { images }
    }

    /// Coxeter length: the number of inversion pairs.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Left descent set `{i : i^w > (i+1)^w}` as a subset of `[n-1]`.
    pub fn left_descents(&self) -> Subset {
        let mut d = Subset::EMPTY;
        for i in 1..self.n() {
            if self.images[i - 1] > self.images[i] {
                d = d.insert(i);
            }
        }
        d
    }

    pub fn right_descents(&self) -> Subset {
        self.inverse().left_descents()
    }

    /// Parabolic length `l^I`: the length of the shortest element of the
    /// coset `w W_I` (left) or `W_I w` (right). The right version counts the
    /// inversion pairs `(i, j)` whose interval `[i, j-1]` is not contained in
    /// `I`; the left version is the right version of the inverse.
    pub fn parabolic_length(&self, i_set: Subset, side: Side) -> usize {
        match side {
            Side::Left => self.inverse().parabolic_length(i_set, Side::Right),
            Side::Right => {
                let mut count = 0;
                for i in 0..self.n() {
                    for j in i + 1..self.n() {
                        if self.images[i] > self.images[j]
                            && !Subset::interval(i + 1, j).is_subset_of(i_set)
                        {
                            count += 1;
                        }
                    }
                }
                count
            }
        }
    }

    /// The statistic `L`: the number of inversion pairs `(i, j)` with `i` and
    /// `j` of opposite parity. Equals the Eq.-(29)-weighted combination of
    /// right parabolic lengths, which `weighted_length` recomputes directly.
    pub fn l_statistic(&self) -> usize {
        let mut count = 0;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.images[i] > self.images[j] && (i + j) % 2 == 1 {
                    count += 1;
                }
            }
        }
        count
    }

    /// `i + i^w` has constant parity.
    pub fn is_chessboard(&self) -> bool {
        let base = (1 + self.images[0] as usize) % 2;
        (2..=self.n()).all(|i| (i + self.images[i - 1] as usize) % 2 == base)
    }

    /// Sign character `(-1)^{l(w)}`.
    pub fn sigma(&self) -> i32 {
        if self.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Character of the chessboard subgroup with kernel the parity-preserving
    /// elements: `+1` iff `i = i^w mod 2` for all `i`.
    pub fn tau(&self) -> Result<i32> {
        if !self.is_chessboard() {
            return Err(Error::domain("tau is only defined on chessboard elements"));
        }
        Ok(if (1 + self.images[0] as usize) % 2 == 0 { 1 } else { -1 })
    }

    /// `chi_eps`: the sign character for odd `n` or `eps = +1`, and
    /// `sigma * tau` for even `n` with `eps = -1`.
    pub fn chi_eps(&self, eps: i32) -> Result<i32> {
        if eps != 1 && eps != -1 {
            return Err(Error::domain("eps must be +1 or -1"));
        }
        if self.n() % 2 == 1 && eps == -1 {
            return Err(Error::domain("for odd n use eps = +1"));
        }
        if self.n() % 2 == 1 || eps == 1 {
            if !self.is_chessboard() {
                return Err(Error::domain("chi_eps is only defined on chessboard elements"));
            }
            Ok(self.sigma())
        } else {
            Ok(self.sigma() * self.tau()?)
        }
    }
}

/// `I^{w_0} = {n - i : i in I}` for `I` a subset of `[n-1]`.
pub fn conjugate_subset_by_w0(i_set: Subset, n: usize) -> Subset {
    Subset::from_elements(i_set.iter().map(|i| n - i))
}

/// A sparse family of integer weights `(b_I)_{I <= S}`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StatWeights {
    weights: std::collections::BTreeMap<Subset, i64>,
}

impl StatWeights {
    pub fn zero() -> StatWeights {
        StatWeights::default()
    }

    /// `b_empty = 1`: the ordinary length.
    pub fn length_only() -> StatWeights {
        let mut w = StatWeights::zero();
        w.add(Subset::EMPTY, 1);
        w
    }

    /// The Theorem-B data for a flag of forms of type `I` in rank `k`:
    /// `b_empty = 1` and `b_{(gamma Itilde)^c} += 1`, producing the statistic
    /// `l(w) + l^{(gamma Itilde)^c}_L(w)`.
    pub fn flag_type(complement: Subset) -> StatWeights {
        let mut w = StatWeights::length_only();
        w.add(complement, 1);
        w
    }

    /// The family `b_I = (-1)^{|I|} 2^{|S|-|I|-1}` defining the statistic `L`
    /// on rank `k = |S|`, materialised densely. The weight of `I = S` is
    /// irrelevant (`l^S = 0`) and skipped. Only used for cross-checks at
    /// small rank; the production path for `L` is the parity-inversion count.
    pub fn eq29(rank: usize) -> StatWeights {
        assert!(rank >= 1 && rank <= 20);
        let mut w = StatWeights::zero();
        for i_set in Subset::all(rank) {
            if i_set.len() == rank {
                continue;
            }
            let sign = if i_set.len() % 2 == 0 { 1i64 } else { -1 };
            w.add(i_set, sign << (rank - i_set.len() - 1));
        }
        w
    }

    pub fn add(&mut self, i_set: Subset, b: i64) {
        let e = self.weights.entry(i_set).or_insert(0);
        *e += b;
        if *e == 0 {
            self.weights.remove(&i_set);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (Subset, i64)> + '_ {
        self.weights.iter().map(|(&s, &b)| (s, b))
    }

    /// The conjugated family `b^{w_0}` with `b^{w_0}_{I^{w_0}} = b_I`, so that
    /// `b^{w_0} . l(w) = sum_I b_I l^{I^{w_0}}(w)`.
    pub fn conjugate_by_w0(&self, n: usize) -> StatWeights {
        let mut out = StatWeights::zero();
        for (i_set, b) in self.iter() {
            out.add(conjugate_subset_by_w0(i_set, n), b);
        }
        out
    }
}

/// `b . l_side(w) = sum_I b_I l^I_side(w)`.
pub fn weighted_length(w: &Permutation, b: &StatWeights, side: Side) -> i64 {
    b.iter().map(|(i_set, c)| c * w.parabolic_length(i_set, side) as i64).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_images(v.to_vec()).unwrap()
    }

    #[test]
    fn action_convention() {
        // s1 s2 in S_3 has one-line word (3, 1, 2)
        let s1 = Permutation::adjacent_transposition(3, 1);
        let s2 = Permutation::adjacent_transposition(3, 2);
        let w = s1.compose(&s2);
        assert_eq!(w, perm(&[3, 1, 2]));
        assert_eq!(w.length(), 2);
        assert_eq!(w.left_descents(), Subset::from_elements([1]));
        // inverse and composition
        assert_eq!(w.compose(&w.inverse()), Permutation::identity(3));
        assert_eq!(w.inverse().inverse(), w);
    }

    #[test]
    fn s3_example_table() {
        // the golden S_3 table: w, L(w), chi(w), D_L(w)
        let s1 = Permutation::adjacent_transposition(3, 1);
        let s2 = Permutation::adjacent_transposition(3, 2);
        let elements = [
            Permutation::identity(3),
            s1.clone(),
            s2.clone(),
            s1.compose(&s2),
            s2.compose(&s1),
            s1.compose(&s2).compose(&s1),
        ];
        let l_vals: Vec<usize> = elements.iter().map(|w| w.l_statistic()).collect();
        assert_eq!(l_vals, vec![0, 1, 1, 1, 1, 2]);
        let chi: Vec<i32> = elements.iter().map(|w| w.sigma()).collect();
        assert_eq!(chi, vec![1, -1, -1, 1, 1, -1]);
        let descents: Vec<Subset> = elements.iter().map(|w| w.left_descents()).collect();
        assert_eq!(
            descents,
            vec![
                Subset::EMPTY,
                Subset::from_elements([1]),
                Subset::from_elements([2]),
                Subset::from_elements([1]),
                Subset::from_elements([2]),
                Subset::from_elements([1, 2]),
            ]
        );
        // L(w) = 2 l(w) - l_R^{1}(w) - l_R^{2}(w) on S_3
        for w in &elements {
            let rhs = 2 * w.length() as i64
                - w.parabolic_length(Subset::from_elements([1]), Side::Right) as i64
                - w.parabolic_length(Subset::from_elements([2]), Side::Right) as i64;
            assert_eq!(w.l_statistic() as i64, rhs);
        }
    }

    #[test]
    fn longest_element_basics() {
        let w0 = Permutation::longest_element(3);
        assert_eq!(w0, perm(&[3, 2, 1]));
        for n in 1..=6 {
            let w0 = Permutation::longest_element(n);
            assert_eq!(w0.length(), n * (n - 1) / 2);
        }
        assert_eq!(
            conjugate_subset_by_w0(Subset::from_elements([1, 3]), 6),
            Subset::from_elements([5, 3])
        );
    }

    #[test]
    fn parabolic_length_edge_cases() {
        // l^empty = l and l^S = 0
        for w in crate::coxeter::symmetric_group(5) {
            assert_eq!(w.parabolic_length(Subset::EMPTY, Side::Left), w.length());
            assert_eq!(w.parabolic_length(Subset::EMPTY, Side::Right), w.length());
            assert_eq!(w.parabolic_length(Subset::full(4), Side::Left), 0);
            assert_eq!(w.parabolic_length(Subset::full(4), Side::Right), 0);
        }
    }

    #[test]
    fn chessboard_and_characters() {
        assert!(Permutation::longest_element(3).is_chessboard());
        assert!(!Permutation::adjacent_transposition(3, 1).is_chessboard());
        // tau(w0) = -1 for n = 4 (w0 flips parities)
        assert_eq!(Permutation::longest_element(4).tau().unwrap(), -1);
        assert!(Permutation::adjacent_transposition(4, 1).tau().is_err());
        assert!(perm(&[1, 2, 3]).chi_eps(-1).is_err());
        assert_eq!(Permutation::identity(4).chi_eps(-1).unwrap(), 1);
    }

    #[test]
    fn weighted_length_basics() {
        let b = StatWeights::length_only();
        for w in crate::coxeter::symmetric_group(4) {
            assert_eq!(weighted_length(&w, &b, Side::Left), w.length() as i64);
            assert_eq!(weighted_length(&w, &b, Side::Right), w.length() as i64);
        }
        // b = {empty: 1, K: 1} vanishes on the identity
        let mut b2 = StatWeights::length_only();
        b2.add(Subset::from_elements([2]), 1);
        assert_eq!(weighted_length(&Permutation::identity(4), &b2, Side::Left), 0);
    }

    #[test]
    fn eq29_weights_reproduce_l() {
        // dual computation of L for all w in S_n, n <= 6 (n = 7 in the suite)
        for n in 2..=6usize {
            let b = StatWeights::eq29(n - 1);
            for w in crate::coxeter::symmetric_group(n) {
                assert_eq!(
                    weighted_length(&w, &b, Side::Right),
                    w.l_statistic() as i64,
                    "L mismatch at {:?}",
                    w.word()
                );
            }
        }
    }
}
