//! Integer compositions attached to subsets, the bisecting map, refinements
//! of truncations, and the coefficients `c_{G,H}` driving the orthogonal
//! inversion equations.
//!
//! Subsets are bitmasks and fibers of the bisecting map are computed by
//! filtering all of `P([n-1])`; `n` stays small by the nature of the problem.

use crate::error::{Error, Result};
use crate::report::Report;
use crate::subset::Subset;

/// A composition of `total` into positive parts. The empty composition of 0
/// (zero parts) arises only for `I` containing all of `[n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Composition {
    pub parts: Vec<usize>,
}

impl Composition {
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }
}

/// `C(I, n)`, `N(I, n)` and `|I|_n` for `I` a subset of `[n]`:
/// `N` is the largest element of `[n]_0 \ I` and the parts are the gaps
/// between consecutive elements of `I` below `N`, ending at `N`.
pub fn composition_of(i_set: Subset, n: usize) -> (Composition, usize, usize) {
    debug_assert!(i_set.is_subset_of(Subset::full(n)));
    let big_n = (0..=n).rev().find(|&x| x == 0 || !i_set.contains(x)).unwrap();
    let elems = i_set.elements();
    // rho = max { k in [r+1]_0 : i_{k-1} < N }, with i_{-1} = -1, i_0 = 0
    let mut rho = 0usize;
    for k in 0..=elems.len() + 1 {
        let prev = if k == 0 { -1i64 } else if k == 1 { 0 } else { elems[k - 2] as i64 };
        if prev < big_n as i64 {
            rho = k;
        }
    }
    let mut parts = Vec::with_capacity(rho);
    let mut prev = 0usize;
    for k in 0..rho {
        let next = if k + 1 == rho { big_n } else { elems[k] };
        parts.push(next - prev);
        prev = next;
    }
    let norm = rho;
    (Composition { parts }, big_n, norm)
}

/// Result of the bisecting map applied to `I <= [n]`:
/// `phi = phi0 U [cut+1, m]` with `phi0 <= [cut-1]` and `N(phi, m) = cut`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BisectResult {
    pub phi: Subset,
    pub cut: usize,
    pub phi0: Subset,
}

/// The bisecting map `P([n]) -> P([m])`, `m = floor(n/2)`: halve the parts of
/// `C(I, n)`, take partial sums.
pub fn bisect(i_set: Subset, n: usize) -> BisectResult {
    let m = n / 2;
    let (comp, _, _) = composition_of(i_set, n);
    let cut: usize = comp.parts.iter().map(|x| x / 2).sum();
    let mut phi0 = Subset::EMPTY;
    let mut acc = 0usize;
    for x in &comp.parts {
        acc += x / 2;
        if acc != 0 && acc != cut {
            phi0 = phi0.insert(acc);
        }
    }
    let phi = phi0.union(Subset::interval(cut + 1, m));
    debug_assert!(phi0.is_subset_of(Subset::full(cut.saturating_sub(1))));
    BisectResult { phi, cut, phi0 }
}

/// All `J <= [n-1]` with `phi(J) = H`, in lexicographic (mask) order.
pub fn fiber(h_set: Subset, n: usize) -> Result<Vec<Subset>> {
    if n > 16 {
        return Err(Error::resource(format!("fiber enumeration scans 2^(n-1) masks; n = {n}")));
    }
    Ok(Subset::all(n - 1).filter(|&j| bisect(j, n).phi == h_set).collect())
}

/// A refinement of a truncation of `C_1` by `C_2`, recorded as the weakly
/// increasing tuple `xi` with `xi_kappa = lambda` assigning to each part of
/// `C_1` the block of `C_2`-parts it absorbs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refinement {
    pub xi: Vec<usize>,
}

fn refinements_of(c1: &Composition, c2: &Composition) -> Vec<Refinement> {
    let kappa = c1.num_parts();
    let lambda = c2.num_parts();
    if kappa == 0 {
        // the empty tuple qualifies exactly when there is nothing to place
        return if lambda == 0 { vec![Refinement { xi: vec![] }] } else { vec![] };
    }
    let mut out = Vec::new();
    let mut xi = vec![0usize; kappa];
    fn rec(
        c1: &Composition,
        c2: &Composition,
        i: usize,
        prev: usize,
        xi: &mut Vec<usize>,
        out: &mut Vec<Refinement>,
    ) {
        let kappa = c1.num_parts();
        let lambda = c2.num_parts();
        if i == kappa {
            if xi[kappa - 1] == lambda {
                out.push(Refinement { xi: xi.clone() });
            }
            return;
        }
        for next in prev..=lambda {
            let block: usize = c2.parts[prev..next].iter().sum();
            if block > c1.parts[i] {
                break;
            }
            xi[i] = next;
            rec(c1, c2, i + 1, next, xi, out);
        }
    }
    rec(c1, c2, 0, 0, &mut xi, &mut out);
    out
}

/// `c_{G,H}`: the number of refinements of truncations of `C(G)` by `C(H)`,
/// for `G, H` subsets of `[m]`.
pub fn refinement_count(g_set: Subset, h_set: Subset, m: usize) -> usize {
    refinement_enumerate(g_set, h_set, m).len()
}

pub fn refinement_enumerate(g_set: Subset, h_set: Subset, m: usize) -> Vec<Refinement> {
    let (c1, _, _) = composition_of(g_set, m);
    let (c2, _, _) = composition_of(h_set, m);
    refinements_of(&c1, &c2)
}

/// Maximal intervals of `[n-1] \ I`, in increasing order.
fn complement_intervals(i_set: Subset, n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = None;
    for x in 1..=n {
        let inside = x < n && !i_set.contains(x);
        if inside {
            start.get_or_insert(x);
        } else if let Some(s) = start.take() {
            out.push((s, x - 1));
        }
    }
    out
}

/// The refinement `xi(I, J)` induced from a pair `I <= J` of subsets of
/// `[n-1]`: each complement interval of `J` lies in a unique complement
/// interval of `I`; `xi_i` counts those absorbed by intervals `1..=i`.
pub fn induced_refinement(i_set: Subset, j_set: Subset, n: usize) -> Result<Refinement> {
    if !i_set.is_subset_of(j_set) {
        return Err(Error::domain("induced refinement needs I <= J"));
    }
    let iv_i = complement_intervals(i_set, n);
    let iv_j = complement_intervals(j_set, n);
    let mut xi = vec![0usize; iv_i.len()];
    for &(a, b) in &iv_j {
        let host = iv_i
            .iter()
            .position(|&(s, e)| s <= a && b <= e)
            .expect("J-interval inside an I-interval");
        xi[host] += 1;
    }
    // cumulative counts
    for i in 1..xi.len() {
        xi[i] += xi[i - 1];
    }
    Ok(Refinement { xi })
}

/// The alternating-sum identity behind the first inversion equation: for
/// every `I`, every `H` with `c_{phi(I),H} != 0` and every refinement `xi`,
///
/// `(-1)^{n-1+|H|} sum_{J in phi^{-1}(H), I <= J, xi(I,J) = xi} (-1)^{|J|} = 1`.
pub fn verify_eq20(n: usize) -> Result<Report> {
    if n > 10 {
        return Err(Error::resource(format!("eq20 sweep is 4^(n-1) pairs; n = {n}")));
    }
    let m = n / 2;
    let mut report = Report::new(format!("truncation-refinement alternating sums, n = {n}"));
    for i_set in Subset::all(n - 1) {
        let g = bisect(i_set, n).phi;
        // group supersets J >= I by (phi(J), xi(I,J))
        let mut sums: std::collections::BTreeMap<(Subset, Vec<usize>), i64> =
            std::collections::BTreeMap::new();
        for j_set in i_set.supersets(n - 1) {
            let h = bisect(j_set, n).phi;
            let xi = induced_refinement(i_set, j_set, n)?.xi;
            let sign = if j_set.len() % 2 == 0 { 1 } else { -1 };
            *sums.entry((h, xi)).or_insert(0) += sign;
        }
        for h_set in Subset::all(m) {
            let (_, norm_h) = (composition_of(h_set, m).0, composition_of(h_set, m).2);
            let refinements = refinement_enumerate(g, h_set, m);
            if refinements.is_empty() {
                report.vacuous();
                continue;
            }
            let outer_sign = if (n - 1 + norm_h) % 2 == 0 { 1 } else { -1 };
            for r in refinements {
                let inner = sums.get(&(h_set, r.xi.clone())).copied().unwrap_or(0);
                report.check(outer_sign * inner == 1, || {
                    format!("I = {i_set}, H = {h_set}, xi = {:?}: sum = {inner}", r.xi)
                });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(elems: &[usize]) -> Subset {
        Subset::from_elements(elems.iter().copied())
    }

    #[test]
    fn composition_examples() {
        // worked example with m = 5
        let (c, n, norm) = composition_of(s(&[1, 3, 4]), 5);
        assert_eq!((c.parts, n, norm), (vec![1, 2, 1, 1], 5, 4));
        let (c, n, norm) = composition_of(s(&[2, 4, 5]), 5);
        assert_eq!((c.parts, n, norm), (vec![2, 1], 3, 2));
        let (c, n, norm) = composition_of(Subset::EMPTY, 4);
        assert_eq!((c.parts, n, norm), (vec![4], 4, 1));
        // I = [m]: the empty composition of 0
        let (c, n, norm) = composition_of(Subset::full(3), 3);
        assert_eq!((c.parts, n, norm), (vec![], 0, 0));
        // I <= [n-1] always gives N = n and r+1 parts
        let (c, n, norm) = composition_of(s(&[2, 7, 9]), 11);
        assert_eq!((c.parts.clone(), n, norm), (vec![2, 5, 2, 2], 11, 4));
        assert_eq!(c.total(), 11);
    }

    #[test]
    fn composition_bijection() {
        // I -> C(I, n) is a bijection from P([n-1]) onto compositions of n
        for n in 1..=10usize {
            let mut seen = std::collections::BTreeSet::new();
            for i_set in Subset::all(n - 1) {
                let (c, total, _) = composition_of(i_set, n);
                assert_eq!(total, n);
                assert_eq!(c.total(), n);
                assert!(seen.insert(c.parts.clone()), "duplicate composition");
            }
            // compositions of n number 2^(n-1)
            assert_eq!(seen.len(), 1 << (n - 1));
        }
    }

    #[test]
    fn bisect_examples() {
        let r = bisect(s(&[2, 7, 9]), 11);
        assert_eq!((r.phi, r.cut, r.phi0), (s(&[1, 3, 4]), 5, s(&[1, 3, 4])));
        let r = bisect(s(&[1, 2, 7, 8, 9]), 11);
        assert_eq!((r.phi, r.cut), (s(&[2, 4, 5]), 3));
        let r = bisect(s(&[1, 2, 3, 7, 9, 10]), 11);
        assert_eq!((r.phi, r.cut), (s(&[2, 4, 5]), 3));
        // empty set, even n: phi = empty, cut = m
        let r = bisect(Subset::EMPTY, 8);
        assert_eq!((r.phi, r.cut), (Subset::EMPTY, 4));
    }

    #[test]
    fn bisect_invariants() {
        // N(phi(I), m) = cut(I), |phi(I)|_m <= |I|_n, surjectivity
        for n in 2..=12usize {
            let m = n / 2;
            let mut image = std::collections::BTreeSet::new();
            for i_set in Subset::all(n - 1) {
                let r = bisect(i_set, n);
                let (_, n_phi, norm_phi) = composition_of(r.phi, m);
                assert_eq!(n_phi, r.cut);
                assert!(norm_phi <= composition_of(i_set, n).2);
                assert_eq!(r.phi, r.phi0.union(Subset::interval(r.cut + 1, m)));
                image.insert(r.phi);
            }
            assert_eq!(image.len(), 1 << m, "phi not surjective onto P([m]) for n = {n}");
        }
    }

    #[test]
    fn fiber_examples() {
        let f = fiber(s(&[2, 4, 5]), 11).unwrap();
        assert!(f.contains(&s(&[1, 2, 7, 8, 9])));
        assert!(f.contains(&s(&[1, 2, 3, 7, 9, 10])));
        // fibers partition P([n-1])
        let n = 6;
        let total: usize = Subset::all(n / 2).map(|h| fiber(h, n).unwrap().len()).sum();
        assert_eq!(total, 1 << (n - 1));
        // phi(emptyset) = emptyset for even n
        assert!(fiber(Subset::EMPTY, 4).unwrap().contains(&Subset::EMPTY));
    }

    #[test]
    fn refinement_count_examples() {
        // the worked example: c_{G,H} = 2 with tuples (0,1,1,2) and (0,1,2,2)
        let refs = refinement_enumerate(s(&[1, 3, 4]), s(&[2, 4, 5]), 5);
        let tuples: Vec<Vec<usize>> = refs.iter().map(|r| r.xi.clone()).collect();
        assert_eq!(tuples, vec![vec![0, 1, 1, 2], vec![0, 1, 2, 2]]);
        // c_{G,G} >= 1 (each block refines itself)
        for m in 1..=4usize {
            for g in Subset::all(m) {
                assert!(refinement_count(g, g, m) >= 1, "G = {g}");
            }
        }
        // c_{G,H} = 0 whenever N(H) > N(G)
        for m in 1..=4usize {
            for g in Subset::all(m) {
                for h in Subset::all(m) {
                    if composition_of(h, m).1 > composition_of(g, m).1 {
                        assert_eq!(refinement_count(g, h, m), 0);
                    }
                }
            }
        }
    }

    #[test]
    fn induced_refinement_examples() {
        let i = s(&[2, 7, 9]);
        assert_eq!(induced_refinement(i, s(&[1, 2, 7, 8, 9]), 11).unwrap().xi, vec![0, 1, 1, 2]);
        assert_eq!(
            induced_refinement(i, s(&[1, 2, 3, 7, 9, 10]), 11).unwrap().xi,
            vec![0, 1, 2, 2]
        );
        assert!(induced_refinement(s(&[1]), Subset::EMPTY, 4).is_err());
        // (I, I): the self-refinement, one interval per block
        let r = induced_refinement(i, i, 11).unwrap();
        assert_eq!(r.xi, vec![1, 2, 3, 4]);
    }

    #[test]
    fn induced_refinements_are_refinements() {
        // every induced xi(I,J) occurs among the refinements of C(phi I) by
        // C(phi J), and conversely every counted refinement is induced
        for n in 2..=9usize {
            let m = n / 2;
            let mut induced: std::collections::BTreeSet<(Subset, Subset, Vec<usize>)> =
                Default::default();
            for i_set in Subset::all(n - 1) {
                for j_set in i_set.supersets(n - 1) {
                    let g = bisect(i_set, n).phi;
                    let h = bisect(j_set, n).phi;
                    let xi = induced_refinement(i_set, j_set, n).unwrap().xi;
                    let all = refinement_enumerate(g, h, m);
                    assert!(all.iter().any(|r| r.xi == xi), "xi(I,J) not a refinement");
                    induced.insert((g, h, xi));
                }
            }
            for g in Subset::all(m) {
                for h in Subset::all(m) {
                    for r in refinement_enumerate(g, h, m) {
                        assert!(
                            induced.contains(&(g, h, r.xi.clone())),
                            "refinement not induced: G={g}, H={h}, xi={:?}",
                            r.xi
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn eq20_small() {
        for n in [4usize, 6] {
            let r = verify_eq20(n).unwrap();
            assert!(r.verified, "n = {n}: {:?}", r.failures.first());
            assert!(r.vacuous > 0);
        }
    }
}
