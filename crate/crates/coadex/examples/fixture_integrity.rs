//! Integrity checks on the shipped 16-dimensional centralizer fixture.
//!
//! The fixture transcribes a bracket table, a diagonal grading, four kernel
//! vectors of the coadjoint matrix and a cubic invariant. This example runs
//! the full self-verification and prints the report.

use coadex::fixture::Fixture;
use coadex::pipeline;
use coadex::rng::DEFAULT_SEED;

fn main() {
    let fx = Fixture::f4_centralizer().unwrap();
    println!(
        "fixture: dimension {}, {} stored brackets, grading {:?}",
        fx.algebra.dim(),
        fx.algebra.bracket_entries().count(),
        fx.grading
            .as_ref()
            .unwrap()
            .0
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
    );

    let report = pipeline::verify_fixture(&fx, DEFAULT_SEED, false).unwrap();
    print!("{}", report.human_summary());
    assert!(report.passed);

    // a deliberately corrupted table fails loudly
    let corrupted = coadex::fixture::F4_CENTRALIZER_JSON.replacen(
        "{\"i\": 1, \"j\": 2, \"terms\": [{\"k\": 3, \"c\": \"2\"}]}",
        "{\"i\": 1, \"j\": 2, \"terms\": [{\"k\": 3, \"c\": \"-2\"}]}",
        1,
    );
    let bad = Fixture::parse(&corrupted).unwrap();
    let violations = bad.algebra.jacobi_check();
    println!(
        "\nflipping one sign in the table produces {} Jacobi violations",
        violations.len()
    );
    assert!(!violations.is_empty());
}
