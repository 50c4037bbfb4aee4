//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (run with `--nocapture` to see them inline, or use the
//! `corner-forge suite` subcommand for the same battery).

use corner_forge::criteria::{self, CriterionResult, SuiteConfig};

fn check(result: CriterionResult) {
    println!(
        "criterion {:>2}: {} — {} ({} checks, {:.1}s)",
        result.id,
        if result.passed { "PASS" } else { "FAIL" },
        result.name,
        result.checks,
        result.seconds
    );
    assert!(
        result.passed,
        "criterion {} failed: {:?}",
        result.id, result.details
    );
}

#[test]
fn criterion_01_bracket_golden_tables() {
    check(criteria::criterion1_bracket_goldens());
}

#[test]
fn criterion_02_lie_axioms() {
    check(criteria::criterion2_lie_axioms(&SuiteConfig::default()));
}

#[test]
fn criterion_03_classification_isomorphisms() {
    check(criteria::criterion3_classification());
}

#[test]
fn criterion_04_physical_quotient_counts() {
    check(criteria::criterion4_quotient_counts());
}

#[test]
fn criterion_05_representation_property() {
    check(criteria::criterion5_representation_property(
        &SuiteConfig::default(),
    ));
}

#[test]
fn criterion_06_wakimoto() {
    check(criteria::criterion6_wakimoto());
}

#[test]
fn criterion_07_grading() {
    check(criteria::criterion7_grading(&SuiteConfig::default()));
}

#[test]
fn criterion_08_constraint_phenomenology() {
    check(criteria::criterion8_constraints());
}

#[test]
fn criterion_09_window_stability() {
    check(criteria::criterion9_window_stability());
}

#[test]
fn criterion_10_oracle_equivalence() {
    check(criteria::criterion10_oracle(&SuiteConfig::default()));
}
