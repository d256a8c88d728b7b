//! Stanley polynomials: values of polynomial functions on multirectangular
//! diagrams `p × q` as polynomials in `p_1..p_r, q_1..q_r`.
//!
//! The character Stanley polynomial is the Stanley–Féray sum
//!
//! ```text
//! Σ_π^{p×q} = Σ_{σ1∘σ2=π} Σ_{φ2: C(σ2)→[r]} (-1)^{σ1} ∏_{b∈C(σ1)} q_{φ1(b)} ∏_{c∈C(σ2)} p_{φ2(c)}
//! ```
//!
//! with `φ1(b)` the largest color of a `σ2`-cycle meeting `b`. Coefficients
//! `[p_1 q_1^{j_1-1} ⋯ p_l q_l^{j_l-1}]` of it are the `S`-derivatives of the
//! character at zero, which gives a second route to `J_k`.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::diagrams::{MultiRect, Partition};
use crate::error::{Error, Result};
use crate::functionals::s_functional_multirect_symbolic;
use crate::permutations::{Factorization, LexPermutations, Permutation};
use crate::rational::{factorial, falling_factorial, int, Rational};
use crate::ratpoly::{Family, Monomial, RatPoly, Variable};
use crate::sweep::{fold_factorizations, Execution};

type Tally<K, V> = HashMap<K, V>;

fn merge<K: std::hash::Hash + Eq, V: std::ops::AddAssign + Default>(mut a: Tally<K, V>, b: Tally<K, V>) -> Tally<K, V> {
    if a.len() < b.len() {
        return merge(b, a);
    }
    for (k, v) in b {
        *a.entry(k).or_default() += v;
    }
    a
}

/// Largest entry of `colors` over the set bits of `mask`.
fn max_over(mask: u64, colors: &[u8]) -> u8 {
    let mut m = mask;
    let mut best = 0;
    while m != 0 {
        let j = m.trailing_zeros() as usize;
        best = best.max(colors[j]);
        m &= m - 1;
    }
    best
}

/// The Stanley–Féray sum over factorizations of `target` accepted by `keep`,
/// with `r` rectangles, fully expanded.
pub fn stanley_feray_sum<F>(target: &Permutation, r: usize, exec: Execution, keep: F) -> RatPoly
where
    F: Fn(&Factorization) -> bool + Sync + Send,
{
    assert!(r >= 1 && r < u8::MAX as usize);
    let tally = fold_factorizations(
        target,
        exec,
        Tally::<Vec<u8>, i64>::new,
        |mut acc, f| {
            if !keep(f) {
                return acc;
            }
            let sign = f.sign1() as i64;
            let masks = f.cycles1.intersection_masks(&f.cycles2);
            let m2 = f.cycles2.len();
            let mut colors = vec![0u8; m2];
            loop {
                let mut key = vec![0u8; 2 * r];
                for &c in &colors {
                    key[c as usize] += 1;
                }
                for &mask in &masks {
                    key[r + max_over(mask, &colors) as usize] += 1;
                }
                *acc.entry(key).or_insert(0) += sign;
                // next coloring
                let mut i = 0;
                while i < m2 && colors[i] as usize == r - 1 {
                    colors[i] = 0;
                    i += 1;
                }
                if i == m2 {
                    break;
                }
                colors[i] += 1;
            }
            acc
        },
        merge,
    );
    RatPoly::from_int_terms(tally.into_iter().map(|(key, c)| {
        let vars = (0..r).flat_map(|i| {
            [
                (Variable::p(i + 1), key[i] as u32),
                (Variable::q(i + 1), key[r + i] as u32),
            ]
        });
        (Monomial::from_pairs(vars), c)
    }))
}

/// A polynomial function evaluated on `p × q` with `rects` rectangles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StanleyPolynomial {
    rects: usize,
    poly: RatPoly,
}

impl StanleyPolynomial {
    pub fn new(rects: usize, poly: RatPoly) -> Self {
        StanleyPolynomial { rects, poly }
    }

    /// Stanley polynomial of a polynomial in the `S_j`, by substituting `S_j^{p×q}`.
    pub fn of_s_polynomial(f: &RatPoly, rects: usize) -> Self {
        let mut map = HashMap::new();
        for (m, _) in f.terms() {
            for &(v, _) in m.factors() {
                if v.family() == Family::S {
                    map.entry(v)
                        .or_insert_with(|| s_functional_multirect_symbolic(rects, v.index()));
                }
            }
        }
        StanleyPolynomial {
            rects,
            poly: f.substitute(&map),
        }
    }

    pub fn rects(&self) -> usize {
        self.rects
    }

    pub fn poly(&self) -> &RatPoly {
        &self.poly
    }

    /// Value on `m`; missing rectangles are empty.
    pub fn evaluate(&self, m: &MultiRect) -> Result<Rational> {
        if m.rectangles() > self.rects {
            return Err(Error::TooFewRectangles {
                have: self.rects,
                need: m.rectangles(),
            });
        }
        let mut at = HashMap::new();
        for i in 0..self.rects {
            let (p, q) = match (m.p().get(i), m.q().get(i)) {
                (Some(p), Some(q)) => (p.clone(), q.clone()),
                _ => (Rational::zero(), Rational::zero()),
            };
            at.insert(Variable::p(i + 1), p);
            at.insert(Variable::q(i + 1), q);
        }
        self.poly.evaluate(&at)
    }

    /// `[p_1 q_1^{j_1-1} ⋯ p_l q_l^{j_l-1}] F^{p×q}`, equal to the derivative
    /// `∂_{S_{j_1}} ⋯ ∂_{S_{j_l}} F` at `S = 0`.
    pub fn derivative_via_stanley(&self, js: &[usize]) -> Result<Rational> {
        if js.len() > self.rects {
            return Err(Error::TooFewRectangles {
                have: self.rects,
                need: js.len(),
            });
        }
        assert!(js.iter().all(|&j| j >= 2), "S_j needs j >= 2");
        let mono = Monomial::from_pairs(
            js.iter()
                .enumerate()
                .flat_map(|(i, &j)| [(Variable::p(i + 1), 1), (Variable::q(i + 1), j as u32 - 1)]),
        );
        Ok(self.poly.coefficient_of(&mono))
    }

    /// `(j₁+j₂-1)[p_1 q_1^{j₁+j₂-1}]F = -[p_1 p_2 q_2^{j₁+j₂-2}]F`.
    pub fn check_top_coefficient_identity(&self, j1: usize, j2: usize) -> Result<bool> {
        if self.rects < 2 {
            return Err(Error::TooFewRectangles {
                have: self.rects,
                need: 2,
            });
        }
        let j = (j1 + j2) as u32;
        let lhs = self
            .poly
            .coefficient_of(&Monomial::from_pairs([(Variable::p(1), 1), (Variable::q(1), j - 1)]));
        let rhs = self.poly.coefficient_of(&Monomial::from_pairs([
            (Variable::p(1), 1),
            (Variable::p(2), 1),
            (Variable::q(2), j - 2),
        ]));
        Ok(lhs * int(j as i64 - 1) == -rhs)
    }
}

/// The Stanley polynomial of `Σ_π` with `r` rectangles.
pub fn stanley_character_poly(pi: &Permutation, r: usize) -> StanleyPolynomial {
    stanley_character_poly_with(pi, r, Execution::default())
}

pub fn stanley_character_poly_with(pi: &Permutation, r: usize, exec: Execution) -> StanleyPolynomial {
    StanleyPolynomial {
        rects: r,
        poly: stanley_feray_sum(pi, r, exec, |_| true),
    }
}

/// Checks `[p_{i_1}⋯p_{i_s}] S_k^{p×q} = (-1)^{s-1} (k-1)_{s-1} q_{i_s}^{k-s}`
/// for `1 ≤ s ≤ k-1`, and zero otherwise, with `q` treated as constants.
pub fn check_s_coefficients_in_p(k: usize, indices: &[usize]) -> bool {
    assert!(k >= 2 && !indices.is_empty());
    assert!(
        indices.windows(2).all(|w| w[0] < w[1]) && indices[0] >= 1,
        "indices must increase"
    );
    let s = indices.len();
    let last = *indices.last().unwrap();
    let sk = s_functional_multirect_symbolic(last, k);
    let pmono = Monomial::from_pairs(indices.iter().map(|&i| (Variable::p(i), 1)));
    let got = sk.coefficient_in(&pmono, &[Family::P]);
    let expected = if s < k {
        let sign = if s % 2 == 1 { 1 } else { -1 };
        let c = Rational::from_integer(falling_factorial(k - 1, s - 1)) * int(sign);
        RatPoly::term(c, Monomial::from_pairs([(Variable::q(last), (k - s) as u32)]))
    } else {
        RatPoly::zero()
    };
    got == expected
}

/// Tally of triples `(σ1, σ2, ℓ)` by the ordered tuple `(j_1, ..., j_l)` they
/// witness: `ℓ` labels `C(σ2)` bijectively by `1..l`, and exactly `j_i - 1`
/// cycles of `σ1` have `i` as the largest label among the `σ2`-cycles they meet.
pub fn j_derivative_counts(k: usize, exec: Execution) -> BTreeMap<Vec<usize>, u64> {
    let tally = fold_factorizations(
        &Permutation::long_cycle(k),
        exec,
        Tally::<Vec<usize>, u64>::new,
        |mut acc, f| {
            let masks = f.cycles1.intersection_masks(&f.cycles2);
            let l = f.cycles2.len();
            for labeling in LexPermutations::new(l) {
                let labels: Vec<u8> = labeling.images().iter().map(|&x| x as u8).collect();
                let mut counts = vec![0usize; l];
                for &mask in &masks {
                    counts[max_over(mask, &labels) as usize] += 1;
                }
                if counts.contains(&0) {
                    continue;
                }
                let tuple: Vec<usize> = counts.into_iter().map(|c| c + 1).collect();
                *acc.entry(tuple).or_insert(0) += 1;
            }
            acc
        },
        merge,
    );
    tally.into_iter().collect()
}

/// `J_k` with `Σ_k = J_k(S_2, S_3, ...)`, from the triple count.
///
/// The derivative for a multiset of `j`'s is `(-1)^{l-1}` times the count of
/// any one ordering. The coefficient is the derivative over `∏ m_j!`, which is
/// the same as the sum over all orderings divided by `l!`.
pub fn j_polynomial_by_counting(k: usize) -> RatPoly {
    j_polynomial_by_counting_with(k, Execution::default())
}

pub fn j_polynomial_by_counting_with(k: usize, exec: Execution) -> RatPoly {
    assert!(k >= 1);
    let mut out = RatPoly::zero();
    for (tuple, count) in j_derivative_counts(k, exec) {
        let l = tuple.len();
        let sign = if l % 2 == 1 { 1 } else { -1 };
        let c = Rational::new((sign * count as i64).into(), factorial(l));
        out.add_term(Monomial::from_pairs(tuple.iter().map(|&j| (Variable::s(j), 1))), c);
    }
    out
}

/// `J_k` reconstructed from coefficients of the Stanley polynomial of `Σ_k`.
pub fn j_polynomial_by_stanley(k: usize, exec: Execution) -> RatPoly {
    assert!(k >= 1);
    let rects = k.div_ceil(2);
    let sigma = stanley_character_poly_with(&Permutation::long_cycle(k), rects, exec);
    let mut out = RatPoly::zero();
    for total in 2..=k + 1 {
        for js in Partition::all_of_size(total) {
            let js = js.rows();
            if js.iter().any(|&j| j < 2) || js.len() > rects {
                continue;
            }
            let d = sigma.derivative_via_stanley(js).expect("enough rectangles");
            let mono = Monomial::from_pairs(js.iter().map(|&j| (Variable::s(j), 1)));
            let mult: num_bigint::BigInt = mono.factors().iter().map(|&(_, e)| factorial(e as usize)).product();
            out.add_term(mono, d / Rational::from_integer(mult));
        }
    }
    out
}

/// `S_{k+1} - (k/2) Σ_{j₁+j₂=k+1} S_{j₁} S_{j₂}`: the two top layers of `J_k`
/// when `S_j` is given degree `j - 1`.
pub fn j_leading_terms(k: usize) -> RatPoly {
    let mut out = RatPoly::var(Variable::s(k + 1));
    let c = Rational::new((-(k as i64)).into(), 2.into());
    for j1 in 2..k {
        let j2 = k + 1 - j1;
        if j2 >= 2 {
            out.add_term(
                Monomial::from_pairs([(Variable::s(j1), 1), (Variable::s(j2), 1)]),
                c.clone(),
            );
        }
    }
    out
}

/// Degree of a monomial in `S` when `S_j` weighs `j - 1`.
pub fn shifted_weight(v: &Variable) -> u32 {
    v.weight() - 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charoracle::{normalized_character_general, CycleType};

    fn poly(s: &str) -> RatPoly {
        s.parse().unwrap()
    }

    #[test]
    fn identity_in_s1() {
        for r in 1..=3 {
            let sp = stanley_character_poly(&Permutation::identity(1), r);
            let expected = (1..=r).fold(RatPoly::zero(), |acc, j| {
                &acc + &(&RatPoly::var(Variable::p(j)) * &RatPoly::var(Variable::q(j)))
            });
            assert_eq!(sp.poly(), &expected);
        }
    }

    #[test]
    fn transposition_single_rectangle() {
        let sp = stanley_character_poly(&Permutation::long_cycle(2), 1);
        assert_eq!(sp.poly(), &poly("p1*q1^2 - p1^2*q1"));
    }

    #[test]
    fn three_cycle_on_square() {
        let sp = stanley_character_poly(&Permutation::long_cycle(3), 1);
        let m = MultiRect::from_integers(&[2], &[2]).unwrap();
        let oracle = normalized_character_general(&m.to_partition().unwrap(), &CycleType::cycle(3)).unwrap();
        assert_eq!(sp.evaluate(&m).unwrap(), oracle);
    }

    #[test]
    fn s_coefficients_in_p_examples() {
        for k in 2..=6 {
            for i in 1..=3 {
                assert!(check_s_coefficients_in_p(k, &[i]));
            }
        }
        // s = k: zero
        assert!(check_s_coefficients_in_p(3, &[1, 2, 3]));
        let sk = s_functional_multirect_symbolic(2, 4);
        let c = sk.coefficient_in(
            &Monomial::from_pairs([(Variable::p(1), 1), (Variable::p(2), 1)]),
            &[Family::P],
        );
        assert_eq!(c, poly("-3*q2^2"));
        assert!(check_s_coefficients_in_p(4, &[1, 2]));
    }

    #[test]
    fn derivative_via_stanley_examples() {
        for m in 2..=5 {
            let f = StanleyPolynomial::of_s_polynomial(&RatPoly::var(Variable::s(m)), 1);
            for j in 2..=5 {
                let want = if j == m { int(1) } else { int(0) };
                assert_eq!(f.derivative_via_stanley(&[j]).unwrap(), want);
            }
        }
        let f = StanleyPolynomial::of_s_polynomial(&poly("S2*S3"), 2);
        assert_eq!(f.derivative_via_stanley(&[2, 3]).unwrap(), int(1));
        assert_eq!(f.derivative_via_stanley(&[3, 2]).unwrap(), int(1));
        assert_eq!(
            f.derivative_via_stanley(&[2, 2, 2]),
            Err(Error::TooFewRectangles { have: 2, need: 3 })
        );
        let sigma3 = stanley_character_poly(&Permutation::long_cycle(3), 2);
        assert_eq!(sigma3.derivative_via_stanley(&[4]).unwrap(), int(1));
        assert_eq!(sigma3.derivative_via_stanley(&[2, 2]).unwrap(), int(-3));
    }

    #[test]
    fn top_coefficient_identity_examples() {
        for (j1, j2) in [(2, 2), (2, 3), (3, 3)] {
            let f = StanleyPolynomial::of_s_polynomial(&RatPoly::var(Variable::s(j1 + j2)), 2);
            assert!(f.check_top_coefficient_identity(j1, j2).unwrap());
        }
        let f = StanleyPolynomial::of_s_polynomial(&poly("S2*S3"), 2);
        assert!(f.check_top_coefficient_identity(2, 2).unwrap());
        let sigma5 = stanley_character_poly(&Permutation::long_cycle(5), 2);
        assert!(sigma5.check_top_coefficient_identity(2, 3).unwrap());
        let one = StanleyPolynomial::of_s_polynomial(&poly("S4"), 1);
        assert!(one.check_top_coefficient_identity(2, 2).is_err());
    }

    #[test]
    fn j_polynomials_small() {
        assert_eq!(j_polynomial_by_counting(1), poly("S2"));
        assert_eq!(j_polynomial_by_counting(2), poly("S3"));
        assert_eq!(j_polynomial_by_counting(3), poly("S4 - 3/2*S2^2 + S2"));
        assert_eq!(j_polynomial_by_counting(4), poly("S5 - 4*S2*S3 + 5*S3"));
        for k in 1..=4 {
            assert_eq!(
                j_polynomial_by_stanley(k, Execution::default()),
                j_polynomial_by_counting(k)
            );
        }
    }

    #[test]
    fn order_independence_of_counts() {
        let counts = j_derivative_counts(5, Execution::default());
        for (tuple, c) in &counts {
            let mut sorted = tuple.clone();
            sorted.sort_unstable();
            assert_eq!(counts.get(&sorted), Some(c), "{tuple:?}");
        }
    }

    #[test]
    fn leading_terms_of_j3() {
        assert_eq!(j_leading_terms(3), poly("S4 - 3/2*S2^2"));
        let j3 = j_polynomial_by_counting(3);
        let top = &j3.graded_part(shifted_weight, 3) + &j3.graded_part(shifted_weight, 2);
        assert_eq!(top, j_leading_terms(3));
    }
}
