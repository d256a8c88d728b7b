//! Irreducible characters of `𝔖(n)` by the Murnaghan–Nakayama rule, hook
//! length dimensions, and normalized characters `Σ^λ_π`.
//!
//! Rim hooks are removed on the beta-set (abacus) encoding of `λ`: a hook of
//! length `r` corresponds to moving one bead from `b` to an empty `b - r`, and
//! its height is the number of beads strictly in between.

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::diagrams::Partition;
use crate::error::{Error, Result};
use crate::permutations::Permutation;
use crate::rational::{factorial, falling_factorial, Rational};

/// A conjugacy class label: weakly decreasing cycle lengths.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("cycle type {parts:?} has a zero part")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType { parts })
    }

    pub fn of(pi: &Permutation) -> Self {
        CycleType { parts: pi.cycle_type() }
    }

    /// The class of a `k`-cycle on `k` points.
    pub fn cycle(k: usize) -> Self {
        CycleType {
            parts: if k == 0 { vec![] } else { vec![k] },
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of points permuted.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Adds fixed points up to `n` points in total.
    pub fn padded(&self, n: usize) -> Self {
        let mut parts = self.parts.clone();
        parts.extend(std::iter::repeat_n(1, n.saturating_sub(self.size())));
        CycleType { parts }
    }

    /// `(-1)^(n - number of cycles)`.
    pub fn sign(&self) -> i32 {
        if (self.size() - self.parts.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `∏ i^{m_i} m_i!`, the order of the centralizer.
    pub fn centralizer_size(&self) -> BigInt {
        let mut mult: HashMap<usize, usize> = HashMap::new();
        for &p in &self.parts {
            *mult.entry(p).or_default() += 1;
        }
        mult.into_iter()
            .map(|(i, m)| num_traits::pow(BigInt::from(i), m) * factorial(m))
            .product()
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleType({:?})", self.parts)
    }
}

/// Source of irreducible character values `χ^λ(μ)`.
pub trait CharacterTable: Sync {
    fn character(&self, lambda: &Partition, mu: &CycleType) -> Result<BigInt>;
}

/// The Murnaghan–Nakayama rule with a shared cache keyed by `(λ, μ)`.
#[derive(Default)]
pub struct MurnaghanNakayama {
    cache: RwLock<HashMap<(Partition, CycleType), BigInt>>,
}

impl MurnaghanNakayama {
    pub fn new() -> Self {
        Self::default()
    }
}

impl CharacterTable for MurnaghanNakayama {
    fn character(&self, lambda: &Partition, mu: &CycleType) -> Result<BigInt> {
        let key = (lambda.clone(), mu.clone());
        if let Some(v) = self.cache.read().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let v = mn_character(lambda, mu)?;
        self.cache.write().unwrap().insert(key, v.clone());
        Ok(v)
    }
}

/// `χ^λ(μ)` by recursive rim-hook removal, largest part of `μ` first.
pub fn mn_character(lambda: &Partition, mu: &CycleType) -> Result<BigInt> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            partition: lambda.size(),
            cycle_type: mu.size(),
        });
    }
    let mut memo = HashMap::new();
    let value = chi_memo(lambda.rows(), mu.parts(), 0, &mut memo);
    debug_assert!(
        lambda.size() > 8 || value == chi_smallest_first(lambda.rows(), mu.parts()),
        "Murnaghan–Nakayama value depends on part order for {lambda:?}, {mu:?}"
    );
    Ok(value)
}

fn chi_memo(rows: &[usize], parts: &[usize], idx: usize, memo: &mut HashMap<(Vec<usize>, usize), BigInt>) -> BigInt {
    // Remaining parts are all 1: the value is the dimension.
    if idx == parts.len() || parts[idx] == 1 {
        return hook_dimension(rows);
    }
    let key = (rows.to_vec(), idx);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for (shape, height) in rim_hooks(rows, parts[idx]) {
        let v = chi_memo(&shape, parts, idx + 1, memo);
        if height % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    memo.insert(key, total.clone());
    total
}

fn chi_smallest_first(rows: &[usize], parts: &[usize]) -> BigInt {
    match parts.split_last() {
        None => BigInt::from(rows.is_empty() as i32),
        Some((&r, rest)) => rim_hooks(rows, r)
            .into_iter()
            .map(|(shape, h)| {
                let v = chi_smallest_first(&shape, rest);
                if h % 2 == 0 {
                    v
                } else {
                    -v
                }
            })
            .sum(),
    }
}

/// All diagrams obtained by removing a rim hook of length `r`, with heights.
fn rim_hooks(rows: &[usize], r: usize) -> Vec<(Vec<usize>, usize)> {
    let len = rows.len();
    let beta: Vec<usize> = rows.iter().enumerate().map(|(i, &x)| x + (len - 1 - i)).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let shape: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (len - 1 - j))
            .filter(|&x| x > 0)
            .collect();
        out.push((shape, height));
    }
    out
}

fn hook_dimension(rows: &[usize]) -> BigInt {
    let lambda = Partition::new(rows.to_vec()).expect("rows stay a partition under hook removal");
    let mut hooks = BigInt::one();
    for i in 0..lambda.len() {
        for j in 0..lambda.row(i) {
            hooks *= BigInt::from(lambda.hook(i, j));
        }
    }
    let (q, r) = factorial(lambda.size()).div_rem(&hooks);
    assert!(r.is_zero(), "hook product does not divide n! for {lambda:?}");
    q
}

/// `n! / ∏ hooks`, the dimension of the irreducible representation `ρ^λ`.
pub fn dimension(lambda: &Partition) -> BigInt {
    hook_dimension(lambda.rows())
}

/// `Σ^λ_π` for `π` of the given cycle type on `k` points, using `table`.
pub fn normalized_character_with(table: &dyn CharacterTable, lambda: &Partition, pi: &CycleType) -> Result<Rational> {
    let n = lambda.size();
    let k = pi.size();
    if k > n {
        return Ok(Rational::zero());
    }
    let chi = table.character(lambda, &pi.padded(n))?;
    Ok(Rational::new(falling_factorial(n, k) * chi, dimension(lambda)))
}

/// `Σ^λ_π = n(n-1)⋯(n-k+1) χ^λ(π)/dim λ`, zero when `k > n`.
pub fn normalized_character_general(lambda: &Partition, pi: &CycleType) -> Result<Rational> {
    normalized_character_with(&NoCache, lambda, pi)
}

/// `Σ^λ_k`, the normalized character on the `k`-cycle.
pub fn normalized_character(lambda: &Partition, k: usize) -> Rational {
    normalized_character_general(lambda, &CycleType::cycle(k)).expect("cycle class is always valid")
}

struct NoCache;

impl CharacterTable for NoCache {
    fn character(&self, lambda: &Partition, mu: &CycleType) -> Result<BigInt> {
        mn_character(lambda, mu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn part(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    fn ct(parts: &[usize]) -> CycleType {
        CycleType::new(parts.to_vec()).unwrap()
    }

    /// Trace of the permutation representation of 𝔖(3) on C^3 minus the trivial one.
    fn standard_rep_trace(pi: &Permutation) -> i64 {
        (1..=3).filter(|&x| pi.apply(x) == x).count() as i64 - 1
    }

    #[test]
    fn standard_representation_of_s3() {
        for pi in Permutation::all(3) {
            let chi = mn_character(&part(&[2, 1]), &CycleType::of(&pi)).unwrap();
            assert_eq!(chi, BigInt::from(standard_rep_trace(&pi)), "{pi}");
        }
        assert_eq!(mn_character(&part(&[2, 1]), &ct(&[3])).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn identity_class_gives_dimension() {
        for n in 1..=7 {
            for lambda in Partition::all_of_size(n) {
                let chi = mn_character(&lambda, &ct(&vec![1; n])).unwrap();
                assert_eq!(chi, dimension(&lambda));
            }
        }
    }

    #[test]
    fn square_has_no_four_hook() {
        assert!(rim_hooks(&[2, 2], 4).is_empty());
        assert_eq!(mn_character(&part(&[2, 2]), &ct(&[4])).unwrap(), BigInt::zero());
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(&part(&[2, 1])), BigInt::from(2));
        assert_eq!(dimension(&part(&[5])), BigInt::one());
        assert_eq!(dimension(&part(&[4, 3, 1])), BigInt::from(70));
        assert_eq!(dimension(&Partition::empty()), BigInt::one());
    }

    #[test]
    fn size_mismatch() {
        assert_eq!(
            mn_character(&part(&[2, 1]), &ct(&[2])),
            Err(Error::SizeMismatch {
                partition: 3,
                cycle_type: 2
            })
        );
    }

    #[test]
    fn normalized_examples() {
        for lambda in Partition::all_up_to(6).into_iter().skip(1) {
            assert_eq!(normalized_character(&lambda, 1), int(lambda.size() as i64));
        }
        assert_eq!(normalized_character(&part(&[2, 1]), 3), int(-3));
        assert_eq!(normalized_character(&part(&[2, 1]), 5), int(0));
        assert_eq!(normalized_character(&Partition::empty(), 1), int(0));
    }

    #[test]
    fn normalized_general_examples() {
        let lambda = part(&[4, 3, 1]);
        assert_eq!(
            normalized_character_general(&lambda, &ct(&[1, 1, 1])).unwrap(),
            int(8 * 7 * 6)
        );
        for k in 1..=8 {
            assert_eq!(
                normalized_character_general(&lambda, &CycleType::cycle(k)).unwrap(),
                normalized_character(&lambda, k)
            );
        }
        assert_eq!(normalized_character_general(&part(&[2, 2]), &ct(&[2])).unwrap(), int(0));
        assert_eq!(mn_character(&part(&[2, 2]), &ct(&[2, 1, 1])).unwrap(), BigInt::zero());
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=6 {
            for mu in Partition::all_of_size(n) {
                let mu = ct(mu.rows());
                let sum: BigInt = Partition::all_of_size(n)
                    .iter()
                    .map(|l| {
                        let c = mn_character(l, &mu).unwrap();
                        &c * &c
                    })
                    .sum();
                assert_eq!(sum, mu.centralizer_size(), "{mu:?}");
            }
        }
    }

    #[test]
    fn conjugation_symmetry() {
        for n in 1..=6 {
            for lambda in Partition::all_of_size(n) {
                for mu in Partition::all_of_size(n) {
                    let mu = ct(mu.rows());
                    let a = mn_character(&lambda, &mu).unwrap();
                    let b = mn_character(&lambda.conjugate(), &mu).unwrap();
                    assert_eq!(a, b * mu.sign());
                }
            }
        }
    }

    #[test]
    fn cached_table_agrees() {
        let table = MurnaghanNakayama::new();
        for lambda in Partition::all_of_size(6) {
            for mu in Partition::all_of_size(6) {
                let mu = ct(mu.rows());
                let a = table.character(&lambda, &mu).unwrap();
                assert_eq!(a, table.character(&lambda, &mu).unwrap());
                assert_eq!(a, mn_character(&lambda, &mu).unwrap());
            }
        }
    }
}
