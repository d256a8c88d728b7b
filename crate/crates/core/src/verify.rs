//! Bounded cross-route verification suite.
//!
//! Each check compares two independent computations of the same quantity.
//! The character table is injectable so that a corrupted table can be shown
//! to make the suite fail.

use serde::Serialize;
use serde_json::json;

use crate::charoracle::{normalized_character_with, CharacterTable, CycleType};
use crate::diagrams::{MultiRect, Partition};
use crate::functionals::{
    free_cumulant_by_interpolation_with, free_cumulant_from_s, free_cumulant_multirect, s_functional_boxes,
    s_functional_frobenius, ShapeVector,
};
use crate::kerov::{kerov_polynomial_by_conversion, kerov_polynomial_by_counting, marriage_equivalence_sweep};
use crate::permutations::{factorizations_of_cycle, Permutation};
use crate::ratpoly::RatPoly;
use crate::stanley::{j_polynomial_by_counting, stanley_character_poly};
use crate::sweep::Execution;

/// The largest `k` for which polynomial routes are run by the suite.
pub const POLY_K_LIMIT: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_n: usize,
    pub max_k: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "checks": self.checks.iter().map(|c| json!({
                "check": c.check,
                "status": if c.passed { "pass" } else { "fail" },
            })).collect::<Vec<_>>()
        })
    }

    fn push(&mut self, check: &str, failures: Vec<String>, cases: usize) {
        let passed = failures.is_empty();
        let detail = if passed {
            format!("{cases} cases")
        } else {
            format!("{} of {cases} cases failed, first: {}", failures.len(), failures[0])
        };
        self.checks.push(CheckResult {
            check: check.to_string(),
            passed,
            detail,
        });
    }
}

const KNOWN_KEROV: [&str; 6] = [
    "R2",
    "R3",
    "R4 + R2",
    "R5 + 5*R3",
    "R6 + 15*R4 + 5*R2^2 + 8*R2",
    "R7 + 35*R5 + 35*R3*R2 + 84*R3",
];

fn catalan(k: usize) -> u64 {
    (0..k as u64).fold(1, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}

/// Runs every check whose bounds are nonzero. `max_n` bounds partition sizes;
/// polynomial checks use `k ≤ min(max_n, max_k, POLY_K_LIMIT)`.
pub fn run_verification(bounds: Bounds, table: &dyn CharacterTable) -> Report {
    let mut report = Report::default();
    let n_max = bounds.max_n;
    let k_poly = bounds.max_k.min(n_max).min(POLY_K_LIMIT);
    if n_max == 0 || bounds.max_k == 0 {
        return report;
    }
    let partitions: Vec<Partition> = (1..=n_max).flat_map(Partition::all_of_size).collect();

    let kerov: Vec<RatPoly> = (1..=k_poly).map(kerov_polynomial_by_counting).collect();
    let jpolys: Vec<RatPoly> = (1..=k_poly).map(j_polynomial_by_counting).collect();

    {
        let mut fails = Vec::new();
        for (k, e) in (1..=k_poly.min(6)).zip(KNOWN_KEROV) {
            if kerov[k - 1] != e.parse::<RatPoly>().expect("valid literal") {
                fails.push(format!("K{k} = {}", kerov[k - 1]));
            }
        }
        report.push("kerov_matches_known_polynomials", fails, k_poly.min(6));
    }

    {
        let mut fails = Vec::new();
        for k in 1..=k_poly {
            if kerov_polynomial_by_conversion(k) != kerov[k - 1] {
                fails.push(format!("k={k}"));
            }
        }
        report.push("kerov_counting_equals_conversion", fails, k_poly);
    }

    let mut j_fails = Vec::new();
    let mut k_fails = Vec::new();
    let mut cases = 0;
    for lambda in &partitions {
        let n = lambda.size();
        let top = n.min(k_poly);
        if top == 0 {
            continue;
        }
        let s = ShapeVector::s_of(lambda, top + 1).as_s_assignment();
        let r = ShapeVector::r_of(lambda, top + 1).as_r_assignment();
        for k in 1..=top {
            cases += 1;
            let expected = normalized_character_with(table, lambda, &CycleType::cycle(k)).expect("sizes fit");
            if jpolys[k - 1].evaluate(&s).ok().as_ref() != Some(&expected) {
                j_fails.push(format!("J{k} at {lambda}"));
            }
            if kerov[k - 1].evaluate(&r).ok().as_ref() != Some(&expected) {
                k_fails.push(format!("K{k} at {lambda}"));
            }
        }
    }
    report.push("j_polynomial_matches_characters", j_fails, cases);
    report.push("kerov_polynomial_matches_characters", k_fails, cases);

    {
        let mut fails = Vec::new();
        let mut cases = 0;
        for lambda in &partitions {
            let fc = lambda.frobenius();
            for k in 2..=bounds.max_k.max(2) {
                cases += 1;
                if s_functional_boxes(lambda, k) != s_functional_frobenius(&fc, k) {
                    fails.push(format!("S{k} at {lambda}"));
                }
            }
        }
        report.push("s_boxes_equals_frobenius", fails, cases);
    }

    {
        let mut fails = Vec::new();
        let mut cases = 0;
        for lambda in partitions.iter().filter(|l| l.size() <= 6) {
            let top = bounds.max_k.min(5);
            if top < 2 {
                continue;
            }
            let s = ShapeVector::s_of(lambda, top);
            for k in 2..=top {
                cases += 1;
                let from_s = free_cumulant_from_s(&s, k).expect("all S present");
                let interp = free_cumulant_by_interpolation_with(table, lambda, k);
                let multi = free_cumulant_multirect(&MultiRect::from(lambda), k);
                if interp.as_ref().ok() != Some(&from_s) || multi != from_s {
                    fails.push(format!("R{k} at {lambda}"));
                }
            }
        }
        report.push("free_cumulant_routes_agree", fails, cases);
    }

    {
        let mut fails = Vec::new();
        let mut cases = 0;
        let k_top = bounds.max_k.min(n_max).min(4);
        let shapes = small_multirects(n_max);
        for k in 1..=k_top {
            for pi in Permutation::all(k) {
                let ct = CycleType::of(&pi);
                let poly = stanley_character_poly(&pi, 2);
                for m in &shapes {
                    cases += 1;
                    let lambda = m.to_partition().expect("integer shape");
                    let expected = normalized_character_with(table, &lambda, &ct).expect("sizes fit");
                    if poly.evaluate(m).ok() != Some(expected) {
                        fails.push(format!("π={pi} at p={:?} q={:?}", m.p(), m.q()));
                    }
                }
            }
        }
        report.push("stanley_feray_matches_characters", fails, cases);
    }

    {
        let mut fails = Vec::new();
        let top = k_poly.min(6);
        for k in 1..=top {
            let sweep = marriage_equivalence_sweep(k, Execution::default());
            if sweep.disagreements != 0 {
                fails.push(format!("k={k}: {} disagreements", sweep.disagreements));
            }
        }
        report.push("marriage_subset_equals_flow", fails, top);
    }

    {
        let mut fails = Vec::new();
        let top = bounds.max_k.min(8);
        for k in 1..=top {
            let minimal = factorizations_of_cycle(k).filter(|f| f.total_cycles() == k + 1).count() as u64;
            if minimal != catalan(k) {
                fails.push(format!("k={k}: {minimal}"));
            }
        }
        report.push("minimal_factorizations_are_catalan", fails, top);
    }

    report
}

/// Two-rectangle diagrams with integer entries up to 3 and area at most `max_n`.
fn small_multirects(max_n: usize) -> Vec<MultiRect> {
    let mut out = Vec::new();
    for p1 in 0..=3i64 {
        for p2 in 0..=3i64 {
            for q1 in 0..=3i64 {
                for q2 in 0..=q1 {
                    if (p1 * q1 + p2 * q2) as usize <= max_n {
                        out.push(MultiRect::from_integers(&[p1, p2], &[q1, q2]).expect("valid"));
                    }
                }
            }
        }
    }
    out
}
