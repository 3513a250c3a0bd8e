//! Acceptance suite: every identity the library claims, swept at desk
//! scale with exact (zero-tolerance) comparison.
//!
//! One test per criterion; each prints a single pass/fail summary line
//! (run with `cargo test --test acceptance -- --nocapture` to see them).
//! All sweeps are exact: a single coefficient mismatch anywhere fails.

use std::time::Instant;

use sovchar::verify::{self, SuiteReport};

fn report(criterion: &str, reports: &[SuiteReport], started: Instant) {
    let mut passed = 0;
    let mut total = 0;
    for r in reports {
        let (p, t) = r.count();
        passed += p;
        total += t;
    }
    let ok = passed == total;
    println!(
        "criterion {criterion}: {} — {passed}/{total} exact checks in {:.2?}",
        if ok { "PASS" } else { "FAIL" },
        started.elapsed()
    );
    if !ok {
        for r in reports {
            for c in r.cases.iter().filter(|c| !c.pass) {
                println!("  FAIL {} {}", c.check, c.params);
            }
        }
    }
    assert!(ok, "criterion {criterion} failed ({passed}/{total})");
}

#[test]
fn criterion_01_eigen_equation() {
    let t = Instant::now();
    let rep = verify::eigen_suite(4, 3);
    report("1 (eigen-equation)", &[rep], t);
}

#[test]
fn criterion_02_dimension_formula() {
    let t = Instant::now();
    let rep = verify::dimension_suite(4, 3);
    report("2 (dimension-formula)", &[rep], t);
}

#[test]
fn criterion_03_denominator_identities() {
    let t = Instant::now();
    let rep = verify::denominator_suite(4, 3);
    report("3 (denominator-identities)", &[rep], t);
}

#[test]
fn criterion_04_inverse_separation() {
    let t = Instant::now();
    let reps = vec![verify::inverse_s_suite(3, 3), verify::inverse_sk_suite(3, 3)];
    report("4 (inverse-separation)", &reps, t);
}

#[test]
fn criterion_05_annihilation_and_factorized_hamiltonian() {
    let t = Instant::now();
    let reps = vec![
        verify::w_annihilate_suite(4, 3),
        verify::factorized_h_suite(4, 3, 5),
    ];
    report("5 (w-annihilation+factorized-h)", &reps, t);
}

#[test]
fn criterion_06_q_operator_identity() {
    let t = Instant::now();
    let rep = verify::qred_suite(3, 2);
    report("6 (q-operator-identity)", &[rep], t);
}

#[test]
fn criterion_07_a_k_identity() {
    // L = 3 is long-running and opt-in: SOVCHAR_AAM_L3=1
    let l_max = if std::env::var("SOVCHAR_AAM_L3").is_ok_and(|v| v == "1") { 3 } else { 2 };
    let t = Instant::now();
    let rep = verify::aam_suite(l_max, 2);
    report("7 (a-k-identity)", &[rep], t);
}

#[test]
fn criterion_08_truncation_limits() {
    let t = Instant::now();
    let rep = verify::kprop_suite(2, 3, 2);
    report("8 (truncation-limits)", &[rep], t);
}

#[test]
fn criterion_09_round_trips() {
    let t = Instant::now();
    let rep = verify::roundtrip_suite(3, 3, 3);
    report("9 (round-trips)", &[rep], t);
}

#[test]
fn criterion_10_oracle_equivalence() {
    let t = Instant::now();
    let rep = verify::oracle_suite();
    report("10 (oracle-equivalence)", &[rep], t);
}
