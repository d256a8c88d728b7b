//! Kerov polynomials `K_k`, with `Σ_k = K_k(R_2, R_3, ...)`.
//!
//! The primary route counts triples `(σ1, σ2, q)`: a factorization of the
//! long cycle and a coloring of the cycles of `σ2` by integers `≥ 2`, kept
//! when a Hall-type marriage condition holds. Each surviving triple adds one
//! to the coefficient of `∏ R_{q(c)}`.
//!
//! Independent routes: substituting `S_j(R)` into `J_k`, and a direct count
//! for the quadratic terms.

use std::collections::{BTreeMap, HashMap};

use crate::functionals::r_in_terms_of_s;
use crate::permutations::{CycleSet, Factorization, Permutation};
use crate::rational::int;
use crate::ratpoly::{Monomial, RatPoly, Variable};
use crate::stanley::{j_polynomial_by_counting_with, j_polynomial_by_stanley};
use crate::sweep::{fold_factorizations, Execution};
use crate::transport;

/// Colors of the cycles of `σ2`, indexed in the order of `σ2.cycles()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoringQ(Vec<usize>);

impl ColoringQ {
    pub fn new(colors: Vec<usize>) -> Self {
        assert!(colors.iter().all(|&c| c >= 2), "colors must be at least 2");
        ColoringQ(colors)
    }

    pub fn colors(&self) -> &[usize] {
        &self.0
    }

    /// `∏ R_{q(c)}`.
    pub fn monomial(&self) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&c| (Variable::r(c), 1)))
    }

    /// `Σ (q(c) - 1)`.
    pub fn excess(&self) -> usize {
        self.0.iter().map(|&c| c - 1).sum()
    }
}

#[derive(Clone, Debug)]
pub struct KerovTriple {
    sigma1: Permutation,
    sigma2: Permutation,
    cycles1: CycleSet,
    cycles2: CycleSet,
    coloring: ColoringQ,
}

impl KerovTriple {
    /// Panics unless `coloring` has one color per cycle of `σ2` and
    /// `Σ (q(c) - 1) = |C(σ1)|`.
    pub fn new(sigma1: Permutation, sigma2: Permutation, coloring: ColoringQ) -> Self {
        let cycles1 = sigma1.cycles();
        let cycles2 = sigma2.cycles();
        assert_eq!(coloring.colors().len(), cycles2.len(), "one color per cycle of σ2");
        assert_eq!(coloring.excess(), cycles1.len(), "colors do not match the cycle counts");
        KerovTriple {
            sigma1,
            sigma2,
            cycles1,
            cycles2,
            coloring,
        }
    }

    pub fn sigma1(&self) -> &Permutation {
        &self.sigma1
    }

    pub fn sigma2(&self) -> &Permutation {
        &self.sigma2
    }

    pub fn coloring(&self) -> &ColoringQ {
        &self.coloring
    }

    fn boy_masks(&self) -> Vec<u64> {
        self.cycles1.intersection_masks(&self.cycles2)
    }
}

/// For every nonempty proper subset `A` of the cycles of `σ2`, more cycles of
/// `σ1` meet `⋃A` than `Σ_{c∈A} (q(c) - 1)`.
pub fn marriage_condition(t: &KerovTriple) -> bool {
    subset_check(&t.boy_masks(), t.coloring.colors())
}

/// The transportation system with supply 1 per `σ1`-cycle and demand
/// `q(c) - 1` per `σ2`-cycle, over intersecting pairs, has a strictly
/// positive solution.
pub fn marriage_condition_flow(t: &KerovTriple) -> bool {
    flow_check(&t.boy_masks(), t.coloring.colors())
}

fn subset_check(boys: &[u64], colors: &[usize]) -> bool {
    let m = colors.len();
    let full = (1u64 << m) - 1;
    (1..full).all(|subset| {
        let husbands = boys.iter().filter(|&&b| b & subset != 0).count();
        let demand: usize = (0..m).filter(|&j| subset >> j & 1 == 1).map(|j| colors[j] - 1).sum();
        husbands > demand
    })
}

fn flow_check(boys: &[u64], colors: &[usize]) -> bool {
    let demand: Vec<usize> = colors.iter().map(|&c| c - 1).collect();
    transport::strictly_positive_solution(boys, &demand).is_some()
}

/// Ordered compositions of `total` into `parts` parts, each at least 1.
fn compositions_into(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(total: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if total < parts {
            return;
        }
        for first in 1..=total - (parts - 1) {
            cur.push(first);
            go(total - first, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, parts, &mut Vec::new(), &mut out);
    out
}

/// Colorings of the cycles of `σ2` compatible with the cycle counts of `f`.
fn candidate_colorings(f: &Factorization) -> Vec<Vec<usize>> {
    compositions_into(f.cycles1.len(), f.cycles2.len())
        .into_iter()
        .map(|c| c.into_iter().map(|x| x + 1).collect())
        .collect()
}

type Tally = HashMap<Vec<usize>, u64>;

fn merge(mut a: Tally, b: Tally) -> Tally {
    if a.len() < b.len() {
        return merge(b, a);
    }
    for (key, n) in b {
        *a.entry(key).or_insert(0) += n;
    }
    a
}

pub fn kerov_polynomial_by_counting(k: usize) -> RatPoly {
    kerov_polynomial_by_counting_with(k, Execution::default())
}

pub fn kerov_polynomial_by_counting_with(k: usize, exec: Execution) -> RatPoly {
    assert!(k >= 1);
    let tally = fold_factorizations(
        &Permutation::long_cycle(k),
        exec,
        Tally::new,
        |mut acc, f| {
            let boys = f.cycles1.intersection_masks(&f.cycles2);
            for colors in candidate_colorings(f) {
                if subset_check(&boys, &colors) {
                    let mut key = colors;
                    key.sort_unstable();
                    *acc.entry(key).or_insert(0) += 1;
                }
            }
            acc
        },
        merge,
    );
    let mut out = RatPoly::zero();
    for (colors, n) in tally {
        out.add_term(
            Monomial::from_pairs(colors.iter().map(|&c| (Variable::r(c), 1))),
            int(n as i64),
        );
    }
    out
}

/// Counts from a sweep comparing the subset check with the flow check.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MarriageSweep {
    pub candidates: u64,
    pub passing: u64,
    pub disagreements: u64,
}

/// Runs both forms of the marriage condition on every candidate triple for
/// the long cycle of length `k`.
pub fn marriage_equivalence_sweep(k: usize, exec: Execution) -> MarriageSweep {
    fold_factorizations(
        &Permutation::long_cycle(k),
        exec,
        MarriageSweep::default,
        |mut acc, f| {
            let boys = f.cycles1.intersection_masks(&f.cycles2);
            for colors in candidate_colorings(f) {
                let subset = subset_check(&boys, &colors);
                let flow = flow_check(&boys, &colors);
                acc.candidates += 1;
                acc.passing += subset as u64;
                acc.disagreements += (subset != flow) as u64;
            }
            acc
        },
        |a, b| MarriageSweep {
            candidates: a.candidates + b.candidates,
            passing: a.passing + b.passing,
            disagreements: a.disagreements + b.disagreements,
        },
    )
}

/// All candidate triples for the long cycle of length `k`, in sweep order.
pub fn kerov_candidate_triples(k: usize) -> Vec<KerovTriple> {
    crate::permutations::factorizations_of_cycle(k)
        .flat_map(|f| {
            candidate_colorings(&f)
                .into_iter()
                .map(move |colors| KerovTriple::new(f.sigma1.clone(), f.sigma2.clone(), ColoringQ::new(colors)))
        })
        .collect()
}

/// `S_j` as polynomials in `R_2, ..., R_j` for `2 ≤ j ≤ k_max`.
pub fn s_in_terms_of_r(k_max: usize) -> BTreeMap<usize, RatPoly> {
    assert!(k_max >= 2);
    let mut subs: HashMap<Variable, RatPoly> = HashMap::new();
    let mut out = BTreeMap::new();
    for k in 2..=k_max {
        // R_k = S_k + (terms in S_2..S_{k-1})
        let lower = r_in_terms_of_s(k) - RatPoly::var(Variable::s(k));
        let s_k = RatPoly::var(Variable::r(k)) - lower.substitute(&subs);
        subs.insert(Variable::s(k), s_k.clone());
        out.insert(k, s_k);
    }
    out
}

/// Rewrites a polynomial in the `S_j` (with `j ≤ k_max`) in the `R_j`.
pub fn to_free_cumulants(poly: &RatPoly, k_max: usize) -> RatPoly {
    let subs: HashMap<Variable, RatPoly> = s_in_terms_of_r(k_max.max(2))
        .into_iter()
        .map(|(j, p)| (Variable::s(j), p))
        .collect();
    poly.substitute(&subs)
}

pub fn kerov_polynomial_by_conversion(k: usize) -> RatPoly {
    kerov_polynomial_by_conversion_with(k, Execution::default())
}

pub fn kerov_polynomial_by_conversion_with(k: usize, exec: Execution) -> RatPoly {
    to_free_cumulants(&j_polynomial_by_counting_with(k, exec), k + 1)
}

/// `K_k` from the Stanley-polynomial reconstruction of `J_k`.
pub fn kerov_polynomial_by_stanley(k: usize, exec: Execution) -> RatPoly {
    to_free_cumulants(&j_polynomial_by_stanley(k, exec), k + 1)
}

/// Mixed second derivative of `K_k` in `R_{j1}, R_{j2}` at zero, counted as
/// labeled factorizations where `σ2` has two cycles, `σ1` has `j1 + j2 - 2`,
/// and the cycle labeled `i` meets at least `j_i` cycles of `σ1`.
pub fn quadratic_coefficient_by_counting(k: usize, j1: usize, j2: usize) -> u64 {
    assert!(j1 >= 2 && j2 >= 2);
    let need = [j1, j2];
    fold_factorizations(
        &Permutation::long_cycle(k),
        Execution::default(),
        || 0u64,
        |acc, f| {
            if f.cycles2.len() != 2 || f.cycles1.len() != j1 + j2 - 2 {
                return acc;
            }
            let boys = f.cycles1.intersection_masks(&f.cycles2);
            let meets = |c: usize| boys.iter().filter(|&&b| b >> c & 1 == 1).count();
            let (m0, m1) = (meets(0), meets(1));
            let labelings = [(m0, m1), (m1, m0)];
            acc + labelings.iter().filter(|&&(a, b)| a >= need[0] && b >= need[1]).count() as u64
        },
        |a, b| a + b,
    )
}
