//! The sharp double bounds around psi_q and their best-possible
//! constants: the lower gap closes as x -> 0+, the upper gap as x -> inf.
//!
//! Run with: cargo run --example digamma_envelope

use qpolygamma::{check_sandwich, classify, digamma_bounds, q_digamma, GridSpec, SeriesPolicy};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let policy = SeriesPolicy::default();

    for q in [0.5, 2.0] {
        let p = classify(q)?;
        println!("q = {q}");
        println!(
            "{:>8} {:>16} {:>16} {:>16} {:>12} {:>12}",
            "x", "lower", "psi_q", "upper", "gap_lo", "gap_hi"
        );
        for x in [0.001, 0.05, 0.5, 1.0, 5.0, 50.0] {
            let b = digamma_bounds(&p, x, &policy)?;
            let v = q_digamma(&p, x, &policy)?.value;
            println!(
                "{:>8} {:>16.8} {:>16.8} {:>16.8} {:>12.3e} {:>12.3e}",
                x,
                b.lower,
                v,
                b.upper,
                v - b.lower,
                b.upper - v
            );
        }
        println!();
    }

    for q in [0.2, 0.5, 0.9, 1.5, 2.0, 5.0] {
        let p = classify(q)?;
        let r = check_sandwich(&p, &GridSpec::default_log(), &policy)?;
        println!(
            "[{}] sandwich q={q}: {} cases (incl. sharpness probes at 1e-3 and 50), worst margin {:.3e}",
            if r.passed { "PASS" } else { "FAIL" },
            r.cases.len(),
            r.worst_margin
        );
    }
    Ok(())
}
