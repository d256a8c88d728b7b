//! Data-parallel sweep over factorizations of a fixed permutation.
//!
//! The factorization stream is cut into chunks by the first two entries of
//! `σ1` in one-line notation. Each chunk is folded independently and the
//! partial results are merged with a commutative `reduce`, so the result
//! does not depend on the schedule.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::permutations::{factorizations_of, factorizations_with_prefix, Factorization, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

#[allow(clippy::derivable_impls)]
impl Default for Execution {
    fn default() -> Self {
        #[cfg(feature = "parallel")]
        {
            Execution::Parallel
        }
        #[cfg(not(feature = "parallel"))]
        {
            Execution::Sequential
        }
    }
}

/// All one-line prefixes of length `min(2, k)`.
fn prefixes(k: usize) -> Vec<Vec<usize>> {
    match k {
        0 => vec![vec![]],
        1 => vec![vec![1]],
        _ => (1..=k)
            .flat_map(|a| (1..=k).filter(move |&b| b != a).map(move |b| vec![a, b]))
            .collect(),
    }
}

/// Folds `fold` over every factorization `σ1 ∘ σ2 = target`.
pub fn fold_factorizations<T, I, F, R>(target: &Permutation, exec: Execution, identity: I, fold: F, reduce: R) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(T, &Factorization) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    match exec {
        Execution::Sequential => {
            let _ = &reduce;
            factorizations_of(target).fold(identity(), |acc, f| fold(acc, &f))
        }
        #[cfg(feature = "parallel")]
        Execution::Parallel => prefixes(target.degree())
            .into_par_iter()
            .map(|prefix| factorizations_with_prefix(target, &prefix).fold(identity(), |acc, f| fold(acc, &f)))
            .reduce(&identity, &reduce),
    }
}

/// Chunked sequential sweep; used to check that chunking is order-independent
/// even when the `parallel` feature is off.
pub fn fold_factorizations_chunked<T, I, F, R>(target: &Permutation, identity: I, fold: F, reduce: R) -> T
where
    I: Fn() -> T,
    F: Fn(T, &Factorization) -> T,
    R: Fn(T, T) -> T,
{
    prefixes(target.degree())
        .into_iter()
        .rev()
        .map(|prefix| factorizations_with_prefix(target, &prefix).fold(identity(), |acc, f| fold(acc, &f)))
        .fold(identity(), &reduce)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefix_chunks_cover_the_group() {
        for k in 0..=6 {
            let target = Permutation::long_cycle(k);
            let n = fold_factorizations_chunked(&target, || 0usize, |a, _| a + 1, |a, b| a + b);
            let expected: usize = (1..=k).product();
            assert_eq!(n, expected);
        }
    }

    #[test]
    fn executions_agree() {
        let target = Permutation::long_cycle(6);
        let sum_sign = |exec| {
            fold_factorizations(
                &target,
                exec,
                || 0i64,
                |a, f| a + f.sign1() as i64 * f.total_cycles() as i64,
                |a, b| a + b,
            )
        };
        let seq = sum_sign(Execution::Sequential);
        assert_eq!(seq, sum_sign(Execution::default()));
    }
}
