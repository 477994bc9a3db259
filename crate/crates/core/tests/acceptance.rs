//! Acceptance suite: one test per criterion, at full bounds.
//!
//! Every test prints a single PASS/FAIL line (plus the clause-by-clause
//! detail) and then asserts.  Two criteria fail by design: exact
//! computation contradicts one quoted kernel characterization and the
//! quoted uniqueness of maximal orbits beyond the simply-laced rank-2
//! case.  Those failures are real findings, reported with their
//! counterexamples; see the README for the analysis.

use std::time::{Duration, Instant};

use truncweyl_core::checks::{self, CheckOutcome};

fn run(number: u8, budget: Duration, f: impl FnOnce() -> CheckOutcome) {
    let start = Instant::now();
    let outcome = f();
    let elapsed = start.elapsed();
    println!(
        "ACCEPTANCE {:>2}: {} ({:.2?}, budget {:?})",
        number,
        outcome.summary_line(),
        elapsed,
        budget
    );
    println!("{}", outcome.detail);
    assert!(
        elapsed <= budget,
        "criterion {} exceeded its {:?} budget: {:.2?}",
        number,
        budget,
        elapsed
    );
    assert!(
        outcome.passed,
        "criterion {} failed:\n{}",
        number, outcome.detail
    );
}

#[test]
fn criterion_01_dimension_formulas() {
    run(1, Duration::from_millis(1), checks::check_dimension_formulas);
}

#[test]
fn criterion_02_grading_table() {
    run(2, Duration::from_millis(10), checks::check_grading_table);
}

#[test]
fn criterion_03_oracle_equivalence() {
    run(3, Duration::from_secs(60), || {
        checks::check_oracle_equivalence(7)
    });
}

#[test]
fn criterion_04_level2_closed_forms() {
    run(4, Duration::from_secs(10), || {
        checks::check_level2_closed_forms(24, 12)
    });
}

#[test]
fn criterion_05_flag_character_identity() {
    run(5, Duration::from_secs(30), || {
        checks::check_flag_character_identity(8)
    });
}

#[test]
fn criterion_06_demazure_classification() {
    run(6, Duration::from_secs(5), || {
        checks::check_demazure_classification(20, 10)
    });
}

#[test]
fn criterion_07_exact_sequences_and_kernels() {
    run(7, Duration::from_secs(5), || {
        checks::check_exact_sequences(10, 24, 10)
    });
}

#[test]
fn criterion_08_rank_one_fusion_comparison() {
    run(8, Duration::from_secs(300), || {
        checks::check_fusion_conjecture(8)
    });
}

#[test]
fn criterion_09_maximal_orbits() {
    run(9, Duration::from_secs(120), || {
        checks::check_maximal_orbits(10, 6, 5, 4)
    });
}

#[test]
fn criterion_10_character_ring() {
    run(10, Duration::from_secs(30), || {
        checks::check_character_ring(5, 5, 4)
    });
}

#[test]
fn criterion_11_parameter_independence() {
    run(11, Duration::from_secs(120), || {
        checks::check_parameter_independence(6)
    });
}
