//! Bitmask subsets of `[k] = {1, .., k}`.
//!
//! Bit `i - 1` of the mask encodes membership of `i`. All index sets in this
//! crate (flag types `J`, Coxeter generator sets `I`, descent sets) are
//! subsets of some `[k]` with `k <= 31`, so a `u32` mask suffices.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_elements<I: IntoIterator<Item = usize>>(iter: I) -> Subset {
        let mut mask = 0u32;
        for i in iter {
            assert!((1..=32).contains(&i), "subset element {i} out of range");
            mask |= 1 << (i - 1);
        }
        Subset(mask)
    }

    /// Full set `[k]`.
    pub fn full(k: usize) -> Subset {
        debug_assert!(k <= 32);
        if k == 0 {
            Subset(0)
        } else {
            Subset(u32::MAX >> (32 - k))
        }
    }

    /// Interval `[a, b]`; empty when `a > b`.
    pub fn interval(a: usize, b: usize) -> Subset {
        Subset::from_elements((a.max(1))..=b.min(32))
    }

    pub fn contains(self, i: usize) -> bool {
        i >= 1 && i <= 32 && self.0 & (1 << (i - 1)) != 0
    }

    pub fn insert(self, i: usize) -> Subset {
        Subset(self.0 | (1 << (i - 1)))
    }

    pub fn remove(self, i: usize) -> Subset {
        Subset(self.0 & !(1 << (i - 1)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    /// Complement inside `[k]`.
    pub fn complement(self, k: usize) -> Subset {
        Subset(Subset::full(k).0 & !self.0)
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 32 - self.0.leading_zeros() as usize)
    }

    /// Elements in increasing order.
    pub fn elements(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (1..=32).filter(move |&i| self.contains(i))
    }

    /// All subsets of `[k]` in mask order.
    pub fn all(k: usize) -> impl Iterator<Item = Subset> {
        (0..=Subset::full(k).0).map(Subset)
    }

    /// All subsets of `self` in increasing mask order.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let m = self.0;
        std::iter::successors(Some(0u32), move |&s| {
            if s == m {
                None
            } else {
                Some((s.wrapping_sub(m)) & m)
            }
        })
        .map(Subset)
    }

    /// All supersets of `self` inside `[k]`, in increasing mask order.
    pub fn supersets(self, k: usize) -> impl Iterator<Item = Subset> {
        let base = self;
        self.complement(k)
            .subsets()
            .map(move |s| base.union(s))
    }

    /// `{x + shift | x in self}` intersected with positive integers.
    pub fn shift(self, shift: i32) -> Subset {
        let mut out = Subset::EMPTY;
        for i in self.iter() {
            let j = i as i32 + shift;
            if j >= 1 {
                out = out.insert(j as usize);
            }
        }
        out
    }

    /// `{c*x | x in self}` for positive `c`.
    pub fn scale(self, c: usize) -> Subset {
        Subset::from_elements(self.iter().map(|i| i * c))
    }

    /// `{x/c | x in self}`; panics unless every element is divisible by `c`.
    pub fn unscale(self, c: usize) -> Subset {
        Subset::from_elements(self.iter().map(|i| {
            assert!(i % c == 0, "element {i} not divisible by {c}");
            i / c
        }))
    }

    /// True iff every element is even.
    pub fn all_even(self) -> bool {
        self.iter().all(|i| i % 2 == 0)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}
