use num_bigint::BigInt;

use kerov_core::charoracle::{CharacterTable, CycleType, MurnaghanNakayama};
use kerov_core::verify::{run_verification, Bounds};
use kerov_core::{Partition, Result};

/// Murnaghan–Nakayama with the sign of one entry flipped.
struct FlippedEntry {
    inner: MurnaghanNakayama,
    lambda: Partition,
    mu: CycleType,
}

impl CharacterTable for FlippedEntry {
    fn character(&self, lambda: &Partition, mu: &CycleType) -> Result<BigInt> {
        let v = self.inner.character(lambda, mu)?;
        Ok(if *lambda == self.lambda && *mu == self.mu {
            -v
        } else {
            v
        })
    }
}

const BOUNDS: Bounds = Bounds { max_n: 6, max_k: 5 };

#[test]
fn clean_table_passes() {
    let report = run_verification(BOUNDS, &MurnaghanNakayama::new());
    assert!(report.all_passed(), "{:?}", report.checks);
}

#[test]
fn flipped_sign_is_detected() {
    let table = FlippedEntry {
        inner: MurnaghanNakayama::new(),
        lambda: "2,1".parse().unwrap(),
        mu: CycleType::cycle(3),
    };
    let report = run_verification(BOUNDS, &table);
    assert!(!report.all_passed());
    let failed: Vec<&str> = report
        .checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.check.as_str())
        .collect();
    assert!(failed.contains(&"kerov_polynomial_matches_characters"), "{failed:?}");
}

#[test]
fn report_json_shape() {
    let report = run_verification(Bounds { max_n: 3, max_k: 3 }, &MurnaghanNakayama::new());
    let json = report.to_json();
    for entry in json["checks"].as_array().unwrap() {
        assert!(entry["check"].is_string());
        assert_eq!(entry["status"], "pass");
    }
}
