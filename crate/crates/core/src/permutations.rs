//! Permutations of `{1, ..., k}`, their cycles, and factorizations of a
//! fixed target permutation.
//!
//! Composition is `(a ∘ b)(x) = a(b(x))` everywhere in the crate. The long
//! cycle is `(1, 2, ..., k)`, i.e. `1 → 2 → ... → k → 1`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest degree supported by the bitmask cycle supports.
pub const MAX_DEGREE: usize = 64;

/// A bijection of `{1, ..., k}` stored in one-line notation (0-based internally).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Permutation {
            images: (0..k).collect(),
        }
    }

    /// The canonical long cycle `(1, 2, ..., k)`.
    pub fn long_cycle(k: usize) -> Self {
        Permutation {
            images: (0..k).map(|i| (i + 1) % k.max(1)).collect(),
        }
    }

    /// Builds from one-line notation with 1-based values: `images[i-1] = π(i)`.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let k = images.len();
        let invalid = || Error::InvalidPermutation {
            degree: k,
            images: images.to_vec(),
        };
        if k > MAX_DEGREE {
            return Err(invalid());
        }
        let mut seen = vec![false; k];
        let mut zero_based = Vec::with_capacity(k);
        for &v in images {
            if v == 0 || v > k || seen[v - 1] {
                return Err(invalid());
            }
            seen[v - 1] = true;
            zero_based.push(v - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    /// Builds from disjoint cycles given with 1-based points; unlisted points are fixed.
    pub fn from_cycles(k: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=k).collect();
        let mut touched = vec![false; k];
        for cycle in cycles {
            for (idx, &x) in cycle.iter().enumerate() {
                let y = cycle[(idx + 1) % cycle.len()];
                if x == 0 || x > k || y == 0 || y > k || touched[x - 1] {
                    return Err(Error::InvalidPermutation {
                        degree: k,
                        images: cycle.to_vec(),
                    });
                }
                touched[x - 1] = true;
                images[x - 1] = y;
            }
        }
        Self::from_one_line(&images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    /// One-line notation, 1-based.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    pub(crate) fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Self {
        Permutation {
            images: other.images.iter().map(|&v| self.images[v]).collect(),
        }
    }

    pub fn cycles(&self) -> CycleSet {
        let k = self.images.len();
        let mut seen = vec![false; k];
        let mut cycles = Vec::new();
        for start in 0..k {
            if seen[start] {
                continue;
            }
            let mut points = Vec::new();
            let mut support = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                points.push(x + 1);
                support |= 1 << x;
                x = self.images[x];
            }
            cycles.push(Cycle { points, support });
        }
        CycleSet { degree: k, cycles }
    }

    pub fn num_cycles(&self) -> usize {
        self.cycles().len()
    }

    /// `(-1)^(k - number of cycles)`.
    pub fn sign(&self) -> i32 {
        if (self.degree() - self.num_cycles()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Cycle lengths in weakly decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Cycle::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// All permutations of degree `k` in lexicographic order of one-line notation.
    pub fn all(k: usize) -> LexPermutations {
        LexPermutations::new(k)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Cycle notation with fixed points shown, e.g. `(1 2)(3)`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.images.is_empty() {
            return write!(f, "()");
        }
        for c in self.cycles().iter() {
            write!(f, "(")?;
            for (i, p) in c.points.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// One cycle; `points` are 1-based and start at the smallest element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cycle {
    points: Vec<usize>,
    support: u64,
}

impl Cycle {
    pub fn points(&self) -> &[usize] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Bit `x - 1` is set for each point `x` of the cycle.
    pub fn support(&self) -> u64 {
        self.support
    }

    pub fn intersects(&self, other: &Cycle) -> bool {
        self.support & other.support != 0
    }
}

pub fn cycles_intersect(c1: &Cycle, c2: &Cycle) -> bool {
    c1.intersects(c2)
}

/// The set `C(π)` of all cycles of a permutation, fixed points included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleSet {
    degree: usize,
    cycles: Vec<Cycle>,
}

impl CycleSet {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Cycle> {
        self.cycles.iter()
    }

    pub fn get(&self, i: usize) -> &Cycle {
        &self.cycles[i]
    }

    /// For each cycle of `self`, the bitmask of the cycles of `other` it meets.
    pub fn intersection_masks(&self, other: &CycleSet) -> Vec<u64> {
        self.cycles
            .iter()
            .map(|c| {
                other
                    .cycles
                    .iter()
                    .enumerate()
                    .filter(|(_, d)| c.intersects(d))
                    .fold(0u64, |m, (j, _)| m | 1 << j)
            })
            .collect()
    }
}

impl<'a> IntoIterator for &'a CycleSet {
    type Item = &'a Cycle;
    type IntoIter = std::slice::Iter<'a, Cycle>;

    fn into_iter(self) -> Self::IntoIter {
        self.cycles.iter()
    }
}

/// Lexicographic enumeration of permutations, optionally restricted to a
/// fixed one-line prefix.
pub struct LexPermutations {
    current: Option<Vec<usize>>,
    fixed: usize,
}

impl LexPermutations {
    pub fn new(k: usize) -> Self {
        LexPermutations {
            current: Some((0..k).collect()),
            fixed: 0,
        }
    }

    /// Permutations whose one-line notation starts with `prefix` (1-based values).
    pub fn with_prefix(k: usize, prefix: &[usize]) -> Self {
        let mut used = vec![false; k];
        let mut current = Vec::with_capacity(k);
        for &v in prefix {
            if v == 0 || v > k || used[v - 1] {
                return LexPermutations {
                    current: None,
                    fixed: 0,
                };
            }
            used[v - 1] = true;
            current.push(v - 1);
        }
        current.extend((0..k).filter(|&v| !used[v]));
        LexPermutations {
            current: Some(current),
            fixed: prefix.len(),
        }
    }
}

impl Iterator for LexPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.current.take()?;
        let mut next = current.clone();
        if next_permutation(&mut next[self.fixed..]) {
            self.current = Some(next);
        }
        Some(Permutation { images: current })
    }
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// A factorization `σ1 ∘ σ2 = π` together with the cycle sets of both factors.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub sigma1: Permutation,
    pub sigma2: Permutation,
    pub cycles1: CycleSet,
    pub cycles2: CycleSet,
}

impl Factorization {
    fn new(sigma1: Permutation, target: &Permutation) -> Self {
        let sigma2 = sigma1.inverse().compose_unchecked(target);
        let cycles1 = sigma1.cycles();
        let cycles2 = sigma2.cycles();
        Factorization {
            sigma1,
            sigma2,
            cycles1,
            cycles2,
        }
    }

    /// `(-1)^{σ1}`.
    pub fn sign1(&self) -> i32 {
        if (self.cycles1.degree() - self.cycles1.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `|C(σ1)| + |C(σ2)|`.
    pub fn total_cycles(&self) -> usize {
        self.cycles1.len() + self.cycles2.len()
    }
}

/// Stream of all factorizations `σ1 ∘ σ2 = target`, ordered by `σ1` in
/// lexicographic one-line order. `σ2 = σ1⁻¹ ∘ target`.
pub struct Factorizations {
    target: Permutation,
    sigma1: LexPermutations,
}

impl Iterator for Factorizations {
    type Item = Factorization;

    fn next(&mut self) -> Option<Factorization> {
        let s1 = self.sigma1.next()?;
        Some(Factorization::new(s1, &self.target))
    }
}

pub fn factorizations_of(target: &Permutation) -> Factorizations {
    Factorizations {
        target: target.clone(),
        sigma1: LexPermutations::new(target.degree()),
    }
}

/// Factorizations whose `σ1` has the given one-line prefix (1-based values).
pub fn factorizations_with_prefix(target: &Permutation, prefix: &[usize]) -> Factorizations {
    Factorizations {
        target: target.clone(),
        sigma1: LexPermutations::with_prefix(target.degree(), prefix),
    }
}

/// All `k!` factorizations of the long cycle `(1, ..., k)`.
pub fn factorizations_of_cycle(k: usize) -> Factorizations {
    factorizations_of(&Permutation::long_cycle(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(one_line: &[usize]) -> Permutation {
        Permutation::from_one_line(one_line).unwrap()
    }

    #[test]
    fn compose_identity_and_involution() {
        let q = p(&[3, 1, 2]);
        assert_eq!(Permutation::identity(3).compose(&q).unwrap(), q);
        let t = Permutation::from_cycles(2, &[&[1, 2]]).unwrap();
        assert!(t.compose(&t).unwrap().is_identity());
    }

    #[test]
    fn compose_convention_by_table() {
        // a = (1 2), b = (2 3) on {1,2,3}; (a∘b)(x) = a(b(x)) read off explicitly.
        let a = [2, 1, 3];
        let b = [1, 3, 2];
        let expected: Vec<usize> = (1..=3).map(|x| a[b[x - 1] - 1]).collect();
        assert_eq!(expected, vec![2, 3, 1]);
        let c = p(&a).compose(&p(&b)).unwrap();
        assert_eq!(c.one_line(), expected);
        assert_eq!(c, Permutation::long_cycle(3));
    }

    #[test]
    fn compose_degree_mismatch() {
        let err = Permutation::identity(2).compose(&Permutation::identity(3));
        assert_eq!(err, Err(Error::DegreeMismatch(2, 3)));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_one_line(&[1, 1]).is_err());
        assert!(Permutation::from_one_line(&[0, 1]).is_err());
        assert!(Permutation::from_one_line(&[1, 3]).is_err());
        assert!(Permutation::from_cycles(3, &[&[1, 2], &[2, 3]]).is_err());
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(Permutation::identity(3).cycles().len(), 3);
        let long = Permutation::long_cycle(5).cycles();
        assert_eq!(long.len(), 1);
        assert_eq!(long.get(0).points(), &[1, 2, 3, 4, 5]);
        let s = Permutation::from_cycles(3, &[&[1, 2]]).unwrap().cycles();
        let pts: Vec<&[usize]> = s.iter().map(Cycle::points).collect();
        assert_eq!(pts, vec![&[1, 2][..], &[3][..]]);
        assert_eq!(
            format!("{}", Permutation::from_cycles(3, &[&[1, 2]]).unwrap()),
            "(1 2)(3)"
        );
    }

    #[test]
    fn intersection_examples() {
        let s = Permutation::from_cycles(3, &[&[1, 2]]).unwrap().cycles();
        let t = Permutation::from_cycles(3, &[&[2, 3]]).unwrap().cycles();
        // {1,2} vs {2,3}
        assert!(cycles_intersect(s.get(0), t.get(1)));
        // {1} vs {2,3}
        assert!(!cycles_intersect(t.get(0), t.get(1)));
        for c in s.iter().chain(t.iter()) {
            assert!(cycles_intersect(c, c));
        }
    }

    #[test]
    fn lex_order_and_prefix() {
        let all: Vec<Vec<usize>> = Permutation::all(3).map(|q| q.one_line()).collect();
        assert_eq!(
            all,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 2],
                vec![2, 1, 3],
                vec![2, 3, 1],
                vec![3, 1, 2],
                vec![3, 2, 1]
            ]
        );
        let pref: Vec<Vec<usize>> = LexPermutations::with_prefix(4, &[3, 1]).map(|q| q.one_line()).collect();
        assert_eq!(pref, vec![vec![3, 1, 2, 4], vec![3, 1, 4, 2]]);
        assert_eq!(LexPermutations::with_prefix(3, &[2, 2]).count(), 0);
        assert_eq!(Permutation::all(0).count(), 1);
    }

    #[test]
    fn factorization_counts() {
        let one: Vec<_> = factorizations_of_cycle(1).collect();
        assert_eq!(one.len(), 1);
        assert!(one[0].sigma1.is_identity() && one[0].sigma2.is_identity());

        let three: Vec<_> = factorizations_of_cycle(3).collect();
        assert_eq!(three.len(), 6);
        let minimal = three.iter().filter(|f| f.total_cycles() == 4).count();
        assert_eq!(minimal, 5);
        for f in &three {
            assert_eq!(f.sigma1.compose(&f.sigma2).unwrap(), Permutation::long_cycle(3));
        }
    }
}
