//! Machine-readable verification reports.
//!
//! Reports serialize deterministically to JSON: identical inputs give
//! byte-identical output, cases sorted by (label, q, x). The same data
//! is available from the CLI via `qpg verify --suite ... --q ...`.
//!
//! Run with: cargo run --example verification_reports

use qpolygamma::{
    check_cm_theorem1, check_sandwich, classify, CMOrder, GridSpec, SeriesPolicy, Spacing,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let policy = SeriesPolicy::default();
    let p = classify(2.0)?;
    let grid = GridSpec::new(0.5, 10.0, 5, Spacing::Logarithmic)?;

    let report = check_cm_theorem1(&p, &grid, CMOrder::new(1)?, &policy)?;
    println!("{}", report.to_json());

    let again = check_cm_theorem1(&p, &grid, CMOrder::new(1)?, &policy)?;
    println!(
        "\ndeterministic: re-running produced byte-identical JSON: {}",
        report.to_json() == again.to_json()
    );

    let sandwich = check_sandwich(&p, &GridSpec::default_log(), &policy)?;
    println!(
        "\nsandwich suite at q=2: passed={} worst_margin={:.3e} ({} cases)",
        sandwich.passed,
        sandwich.worst_margin,
        sandwich.cases.len()
    );
    Ok(())
}
