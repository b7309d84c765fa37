//! Deterministic enumeration of the symmetric group and of chessboard
//! elements, in lexicographic order on the one-line word.
//!
//! The streams are plain iterators; accumulation downstream is a commutative
//! monoid, so parallel sweeps may split them arbitrarily and merge.

use crate::coxeter::Permutation;
use crate::subset::Subset;

/// All of `S_n` in lexicographic word order.
pub fn symmetric_group(n: usize) -> SymmetricGroupIter {
    SymmetricGroupIter { next: Some(Permutation::identity(n)) }
}

pub struct SymmetricGroupIter {
    next: Option<Permutation>,
}

impl Iterator for SymmetricGroupIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut word: Vec<u8> = current.word().to_vec();
        if next_permutation(&mut word) {
            self.next = Permutation::from_images(word.iter().map(|&v| v as usize).collect()).ok();
        }
        Some(current)
    }
}

fn next_permutation(word: &mut [u8]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

/// One parity class of chessboard elements: `parity_flip = false` is the
/// parity-preserving class (`i^w = i mod 2`), `parity_flip = true` the
/// parity-swapping class (only nonempty for even `n`). Words are produced in
/// lexicographic order by a constrained odometer.
struct ParityClassIter {
    n: usize,
    parity_flip: bool,
    word: Option<Vec<u8>>,
}

impl ParityClassIter {
    fn new(n: usize, parity_flip: bool) -> ParityClassIter {
        let mut it = ParityClassIter { n, parity_flip, word: None };
        if n == 0 || (parity_flip && n % 2 == 1) {
            return it; // no words in the flipped class when n is odd
        }
        let mut used = 0u64;
        let mut word = Vec::with_capacity(n);
        for pos in 1..=n {
            match it.smallest_allowed(pos, used, 0) {
                Some(v) => {
                    used |= 1 << v;
                    word.push(v);
                }
                None => return it,
            }
        }
        it.word = Some(word);
        it
    }

    fn value_parity(&self, pos: usize) -> usize {
        if self.parity_flip {
            pos % 2 ^ 1
        } else {
            pos % 2
        }
    }

    /// Smallest unused value `> floor` of the parity required at `pos`.
    fn smallest_allowed(&self, pos: usize, used: u64, floor: u8) -> Option<u8> {
        let parity = self.value_parity(pos);
        (floor + 1..=self.n as u8)
            .find(|&v| v as usize % 2 == parity && used & (1 << v) == 0)
    }

    fn peek(&self) -> Option<&Vec<u8>> {
        self.word.as_ref()
    }

    fn advance(&mut self) {
        let Some(mut word) = self.word.take() else { return };
        let n = self.n;
        let mut used: u64 = word.iter().fold(0, |acc, &v| acc | 1 << v);
        // scan from the right for a position that can be bumped
        let mut k = n;
        let bumped = loop {
            if k == 0 {
                break None;
            }
            let old = word[k - 1];
            used &= !(1 << old);
            if let Some(v) = self.smallest_allowed(k, used, old) {
                break Some((k, v));
            }
            k -= 1;
        };
        if let Some((k, v)) = bumped {
            word[k - 1] = v;
            used |= 1 << v;
            // fill the suffix minimally; always possible because parities
            // stay balanced
            for pos in k + 1..=n {
                let v = self
                    .smallest_allowed(pos, used, 0)
                    .expect("suffix fill is always feasible");
                used |= 1 << v;
                word[pos - 1] = v;
            }
            self.word = Some(word);
        }
    }
}

/// All chessboard elements of `S_n`, lexicographically by word: a lazy merge
/// of the two parity classes.
pub fn chessboard_stream(n: usize) -> ChessboardIter {
    ChessboardIter {
        keep: ParityClassIter::new(n, false),
        flip: ParityClassIter::new(n, true),
    }
}

pub struct ChessboardIter {
    keep: ParityClassIter,
    flip: ParityClassIter,
}

impl Iterator for ChessboardIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let take_keep = match (self.keep.peek(), self.flip.peek()) {
            (None, None) => return None,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (Some(a), Some(b)) => a < b,
        };
        let it = if take_keep { &mut self.keep } else { &mut self.flip };
        let word = it.peek().unwrap().clone();
        it.advance();
        Permutation::from_images(word.into_iter().map(|v| v as usize).collect()).ok()
    }
}

/// `|C_n|` in closed form: `(m+1)! m!` for `n = 2m+1`, `2 (m!)^2` for `n = 2m`.
pub fn chessboard_order(n: usize) -> u64 {
    let fact = |k: usize| (1..=k as u64).product::<u64>();
    let m = n / 2;
    if n % 2 == 1 {
        fact(m + 1) * fact(m)
    } else {
        2 * fact(m) * fact(m)
    }
}

/// The elements of the standard parabolic subgroup `W_I`, by filtering `S_n`
/// on block preservation. Test oracle only; quadratic-time queries should use
/// `parabolic_length`.
pub fn parabolic_subgroup(n: usize, i_set: Subset) -> Vec<Permutation> {
    // block id per position: positions i, i+1 linked when i in I
    let mut block = vec![0usize; n + 1];
    let mut b = 0;
    for i in 1..=n {
        if i > 1 && !i_set.contains(i - 1) {
            b += 1;
        }
        block[i] = b;
    }
    symmetric_group(n)
        .filter(|w| (1..=n).all(|i| block[i] == block[w.image(i)]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_group_lex() {
        let all: Vec<_> = symmetric_group(3).collect();
        assert_eq!(all.len(), 6);
        let words: Vec<Vec<u8>> = all.iter().map(|w| w.word().to_vec()).collect();
        let mut sorted = words.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(words, sorted);
        assert_eq!(symmetric_group(7).count(), 5040);
        assert_eq!(symmetric_group(1).count(), 1);
    }

    #[test]
    fn chessboard_counts() {
        // frozen from the closed form |C_n| = (m+1)! m! resp. 2 (m!)^2
        assert_eq!(chessboard_stream(4).count() as u64, 8);
        assert_eq!(chessboard_stream(5).count() as u64, 12);
        assert_eq!(chessboard_stream(6).count() as u64, 72);
        for n in 1..=8 {
            assert_eq!(chessboard_stream(n).count() as u64, chessboard_order(n), "n = {n}");
        }
    }

    #[test]
    fn chessboard_stream_is_lex_and_complete() {
        for n in 1..=6usize {
            let streamed: Vec<Vec<u8>> =
                chessboard_stream(n).map(|w| w.word().to_vec()).collect();
            let mut filtered: Vec<Vec<u8>> = symmetric_group(n)
                .filter(|w| w.is_chessboard())
                .map(|w| w.word().to_vec())
                .collect();
            filtered.sort();
            assert_eq!(streamed, filtered, "n = {n}");
        }
    }

    #[test]
    fn chessboard_closure() {
        // C_n is a subgroup: closed under composition and inverse
        for n in 1..=6usize {
            let elems: Vec<_> = chessboard_stream(n).collect();
            for v in &elems {
                assert!(v.inverse().is_chessboard());
                for w in &elems {
                    assert!(v.compose(w).is_chessboard());
                }
            }
        }
    }

    #[test]
    fn parabolic_subgroup_order() {
        // W_{1,2} in S_4 is S_3 x S_1
        let w12 = parabolic_subgroup(4, Subset::from_elements([1, 2]));
        assert_eq!(w12.len(), 6);
        let wfull = parabolic_subgroup(4, Subset::full(3));
        assert_eq!(wfull.len(), 24);
        assert_eq!(parabolic_subgroup(4, Subset::EMPTY).len(), 1);
    }
}
