//! Fundamental functionals of shape `S_k` and free cumulants `R_k`.
//!
//! `S_k^λ = (k-1) ∬_λ (x - y)^{k-2} dx dy` is computed over unit boxes and,
//! independently, from shifted Frobenius coordinates. `R_k` has three routes:
//! the explicit formula in the `S_j`, interpolation of `s ↦ Σ^{sλ}_{k-1}`,
//! and the sum over minimal factorizations for multirectangular diagrams.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::charoracle::{normalized_character_with, CharacterTable, CycleType, MurnaghanNakayama};
use crate::diagrams::{FrobeniusCoords, MultiRect, Partition};
use crate::error::{Error, Result};
use crate::permutations::Permutation;
use crate::rational::{self, factorial, int, pow, Rational};
use crate::ratpoly::{interpolate_univariate, RatPoly, Variable};
use crate::stanley;
use crate::sweep::Execution;

/// Values `k ↦ S_k` or `k ↦ R_k` for `2 ≤ k ≤ k_max`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ShapeVector {
    values: BTreeMap<usize, Rational>,
}

impl ShapeVector {
    pub fn get(&self, k: usize) -> Option<&Rational> {
        self.values.get(&k)
    }

    pub fn insert(&mut self, k: usize, v: Rational) {
        self.values.insert(k, v);
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.values.iter().map(|(&k, v)| (k, v))
    }

    /// `S_2, ..., S_{k_max}` of `λ` by box integrals.
    pub fn s_of(lambda: &Partition, k_max: usize) -> Self {
        ShapeVector {
            values: (2..=k_max).map(|k| (k, s_functional_boxes(lambda, k))).collect(),
        }
    }

    /// `R_2, ..., R_{k_max}` of `λ` from its `S` values.
    pub fn r_of(lambda: &Partition, k_max: usize) -> Self {
        let s = Self::s_of(lambda, k_max);
        ShapeVector {
            values: (2..=k_max)
                .map(|k| (k, free_cumulant_from_s(&s, k).expect("all S_j present")))
                .collect(),
        }
    }

    /// Assignment `S_j ↦ value` for polynomial evaluation.
    pub fn as_s_assignment(&self) -> HashMap<Variable, Rational> {
        self.values.iter().map(|(&k, v)| (Variable::s(k), v.clone())).collect()
    }

    /// Assignment `R_j ↦ value` for polynomial evaluation.
    pub fn as_r_assignment(&self) -> HashMap<Variable, Rational> {
        self.values.iter().map(|(&k, v)| (Variable::r(k), v.clone())).collect()
    }
}

/// `∫_a^{a+1} t^e dt`.
fn unit_interval_moment(a: i64, e: u32) -> Rational {
    let a = int(a);
    (pow(&(&a + Rational::one()), e + 1) - pow(&a, e + 1)) / int(e as i64 + 1)
}

fn binomial(n: u32, r: u32) -> Rational {
    Rational::from_integer(factorial(n as usize) / (factorial(r as usize) * factorial((n - r) as usize)))
}

/// `∬ (x - y)^m` over the unit square with lower-left corner `(x0, y0)`.
fn box_integral(x0: i64, y0: i64, m: u32) -> Rational {
    (0..=m)
        .map(|r| {
            let sign = if r % 2 == 0 { int(1) } else { int(-1) };
            binomial(m, r) * sign * unit_interval_moment(x0, m - r) * unit_interval_moment(y0, r)
        })
        .fold(Rational::zero(), |a, b| a + b)
}

/// `S_k^λ` by exact integration over the unit boxes of `λ`.
pub fn s_functional_boxes(lambda: &Partition, k: usize) -> Rational {
    assert!(k >= 2, "S_k needs k >= 2");
    let m = (k - 2) as u32;
    // The box integral depends only on the contents of the corner.
    let mut by_contents: BTreeMap<i64, i64> = BTreeMap::new();
    for b in lambda.box_regions() {
        *by_contents.entry(b.corner_contents()).or_default() += 1;
    }
    let total = by_contents
        .into_iter()
        .map(|(c, count)| box_integral(c, 0, m) * int(count))
        .fold(Rational::zero(), |a, b| a + b);
    total * int(k as i64 - 1)
}

/// `S_k^λ = Σ_i ∫_{-1/2}^{1/2} [(A_i + z)^{k-1} - (-B_i - z)^{k-1}] dz`.
pub fn s_functional_frobenius(fc: &FrobeniusCoords, k: usize) -> Rational {
    assert!(k >= 2, "S_k needs k >= 2");
    let e = k as u32;
    let half = rational::ratio(1, 2);
    let kk = int(k as i64);
    let mut total = Rational::zero();
    for a in &fc.arm {
        total += (pow(&(a + &half), e) - pow(&(a - &half), e)) / &kk;
    }
    for b in &fc.leg {
        let nb = -b;
        total -= (pow(&(&nb + &half), e) - pow(&(&nb - &half), e)) / &kk;
    }
    total
}

/// Ordered tuples `(j_1, ..., j_l)` with every `j_i ≥ min_part` summing to `k`.
pub fn compositions(k: usize, min_part: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(rem: usize, min_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            if !cur.is_empty() {
                out.push(cur.clone());
            }
            return;
        }
        for part in min_part.max(1)..=rem {
            cur.push(part);
            go(rem - part, min_part, cur, out);
            cur.pop();
        }
    }
    go(k, min_part, &mut cur, &mut out);
    out
}

/// `R_k = Σ_{l≥1} (1/l!) (-k+1)^{l-1} Σ_{j_1+⋯+j_l=k, j_i≥2} S_{j_1}⋯S_{j_l}`.
pub fn free_cumulant_from_s(s: &ShapeVector, k: usize) -> Result<Rational> {
    assert!(k >= 2, "R_k needs k >= 2");
    for j in 2..=k {
        if s.get(j).is_none() {
            return Err(Error::MissingShapeValue(j));
        }
    }
    let mut total = Rational::zero();
    for comp in compositions(k, 2) {
        let l = comp.len();
        let coeff = Rational::new(num_traits::pow((1 - k as i64).into(), l - 1), factorial(l));
        let prod = comp.iter().fold(Rational::one(), |acc, &j| acc * s.get(j).unwrap());
        total += coeff * prod;
    }
    Ok(total)
}

/// The same formula as [`free_cumulant_from_s`], as a polynomial in the `S_j`.
pub fn r_in_terms_of_s(k: usize) -> RatPoly {
    assert!(k >= 2, "R_k needs k >= 2");
    let mut out = RatPoly::zero();
    for comp in compositions(k, 2) {
        let l = comp.len();
        let coeff = Rational::new(num_traits::pow((1 - k as i64).into(), l - 1), factorial(l));
        let mono = crate::ratpoly::Monomial::from_pairs(comp.iter().map(|&j| (Variable::s(j), 1)));
        out.add_term(mono, coeff);
    }
    out
}

/// The polynomial `s ↦ Σ^{sλ}_{k-1}` fitted through `s = 0, ..., nodes - 1`
/// with degree bound `k`. Extra nodes beyond `k + 1` test the bound.
pub fn dilation_polynomial(table: &dyn CharacterTable, lambda: &Partition, k: usize, nodes: usize) -> Result<RatPoly> {
    assert!(k >= 2);
    let class = CycleType::cycle(k - 1);
    let points = (0..nodes)
        .map(|s| {
            let dilated = if s == 0 { Partition::empty() } else { lambda.dilate(s) };
            Ok((int(s as i64), normalized_character_with(table, &dilated, &class)?))
        })
        .collect::<Result<Vec<_>>>()?;
    interpolate_univariate(&points, k)
}

/// `R_k^λ = [s^k] Σ^{sλ}_{k-1}` from character values at `s = 0, ..., k`.
pub fn free_cumulant_by_interpolation_with(
    table: &dyn CharacterTable,
    lambda: &Partition,
    k: usize,
) -> Result<Rational> {
    let poly = dilation_polynomial(table, lambda, k, k + 1)?;
    Ok(poly.dilation_coefficient(k as u32))
}

pub fn free_cumulant_by_interpolation(lambda: &Partition, k: usize) -> Rational {
    free_cumulant_by_interpolation_with(&MurnaghanNakayama::new(), lambda, k).expect("oracle values are well-formed")
}

/// `S_k^{p×q}` as a polynomial in `p_1..p_r`, `q_1..q_r`.
///
/// Rectangle `j` is `[0, q_j] × [P_{j-1}, P_j]` with `P_j = p_1 + ⋯ + p_j`;
/// the integrand is expanded binomially and integrated term by term.
pub fn s_functional_multirect_symbolic(r: usize, k: usize) -> RatPoly {
    assert!(k >= 2, "S_k needs k >= 2");
    let m = (k - 2) as u32;
    let mut out = RatPoly::zero();
    let mut prev = RatPoly::zero();
    for j in 1..=r {
        let cur = &prev + &RatPoly::var(Variable::p(j));
        let q = RatPoly::var(Variable::q(j));
        for t in 0..=m {
            let sign = if t % 2 == 0 { int(1) } else { int(-1) };
            // ∫_0^q x^{m-t} dx · ∫_{P_{j-1}}^{P_j} y^t dy
            let xpart = q.pow(m - t + 1).scale(&Rational::new(1.into(), (m - t + 1).into()));
            let ypart = (&cur.pow(t + 1) - &prev.pow(t + 1)).scale(&Rational::new(1.into(), (t + 1).into()));
            out += &(&xpart * &ypart).scale(&(binomial(m, t) * sign));
        }
        prev = cur;
    }
    out.scale(&int(k as i64 - 1))
}

fn multirect_assignment(m: &MultiRect) -> HashMap<Variable, Rational> {
    let mut at = HashMap::new();
    for (i, (p, q)) in m.p().iter().zip(m.q()).enumerate() {
        at.insert(Variable::p(i + 1), p.clone());
        at.insert(Variable::q(i + 1), q.clone());
    }
    at
}

/// `S_k` of a (possibly generalized) multirectangular diagram.
pub fn s_functional_multirect(m: &MultiRect, k: usize) -> Rational {
    s_functional_multirect_symbolic(m.rectangles(), k)
        .evaluate(&multirect_assignment(m))
        .expect("all p_i, q_i assigned")
}

/// `R_k^{p×q}` as a polynomial: the sum over minimal factorizations
/// `σ1 ∘ σ2 = (1, ..., k-1)` with `|C(σ1)| + |C(σ2)| = k` and colorings `φ2`.
pub fn free_cumulant_multirect_symbolic(r: usize, k: usize, exec: Execution) -> RatPoly {
    assert!(k >= 2, "R_k needs k >= 2");
    let target = Permutation::long_cycle(k - 1);
    stanley::stanley_feray_sum(&target, r, exec, |f| f.total_cycles() == k)
}

/// `R_k` of a (possibly generalized) multirectangular diagram via minimal factorizations.
pub fn free_cumulant_multirect(m: &MultiRect, k: usize) -> Rational {
    if m.rectangles() == 0 {
        return Rational::zero();
    }
    free_cumulant_multirect_symbolic(m.rectangles(), k, Execution::default())
        .evaluate(&multirect_assignment(m))
        .expect("all p_i, q_i assigned")
}

/// Whether `S_k^{sλ} = s^k S_k^λ` and `R_k^{sλ} = s^k R_k^λ` both hold.
pub fn scale_homogeneity_check(lambda: &Partition, k: usize, s: usize) -> bool {
    assert!(s >= 1);
    let factor = pow(&int(s as i64), k as u32);
    let dilated = lambda.dilate(s);
    let s_ok = s_functional_boxes(&dilated, k) == &factor * s_functional_boxes(lambda, k);
    let r = |l: &Partition| free_cumulant_from_s(&ShapeVector::s_of(l, k), k).unwrap();
    let r_ok = r(&dilated) == &factor * r(lambda);
    s_ok && r_ok
}
