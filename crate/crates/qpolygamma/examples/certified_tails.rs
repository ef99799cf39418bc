//! How the truncation certificate responds to the series policy.
//!
//! Tightening rel_tol buys smaller bounds for more terms; an impossible
//! tolerance is reported as an error instead of a silently wrong value.
//!
//! Run with: cargo run --example certified_tails

use qpolygamma::{classify, q_digamma, SeriesPolicy};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = classify(0.9)?;
    let x = 0.5;

    println!("psi_q(0.5) at q = 0.9 under tightening tolerances");
    println!(
        "{:>10} {:>24} {:>12} {:>8}",
        "rel_tol", "value", "err_bound", "terms"
    );
    for rel in [1e-4, 1e-7, 1e-10, 1e-13] {
        let policy = SeriesPolicy::new(rel, 1e-300, 1_000_000)?;
        let c = q_digamma(&p, x, &policy)?;
        println!(
            "{:>10.0e} {:>24.16e} {:>12.3e} {:>8}",
            rel, c.value, c.err_bound, c.terms_used
        );
    }

    let starved = SeriesPolicy::new(1e-13, 1e-300, 50)?;
    match q_digamma(&p, x, &starved) {
        Err(e) => println!("\nwith max_terms = 50 the same call fails: {e}"),
        Ok(_) => unreachable!("50 terms cannot certify 1e-13 here"),
    }

    let tiny_x = 5e-5;
    match q_digamma(&p, tiny_x, &SeriesPolicy::default()) {
        Err(e) => println!("x = {tiny_x} is rejected up front: {e}"),
        Ok(_) => unreachable!("x below the small-x guard"),
    }
    Ok(())
}
