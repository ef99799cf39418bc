//! The identities linking the q and 1/q branches:
//!
//!   ln Gamma_q(x)  = (x-1)(x-2)/2 ln q + ln Gamma_{1/q}(x)
//!   psi_q(x)       = (ln q)(x - 3/2) + psi_{1/q}(x)
//!   psi'_q(x)      = ln q + psi'_{1/q}(x)
//!   psi''_q(x)     = psi''_{1/q}(x)
//!
//! plus the difference equations psi_q^{(k)}(x+1) - psi_q^{(k)}(x) in
//! closed form. Residuals stay inside the combined error bounds.
//!
//! Run with: cargo run --example reflection_identities

use qpolygamma::{
    check_identities, classify, log_q_gamma, q_digamma, reflect_digamma, GridSpec, SeriesPolicy,
    Spacing,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let policy = SeriesPolicy::default();

    println!("log-gamma reflection residuals:");
    for (q, x) in [(2.0, 2.5), (5.0, 0.3), (0.5, 7.0)] {
        let p = classify(q)?;
        let a = log_q_gamma(&p, x, &policy)?;
        let b = log_q_gamma(&p.reciprocal(), x, &policy)?;
        let resid = a.value - ((x - 1.0) * (x - 2.0) / 2.0 * p.ln_q() + b.value);
        println!("  q={q:<4} x={x:<4} residual = {resid:+.3e}");
    }

    println!("\npsi reflection via reflect_digamma vs direct evaluation:");
    for (q, x) in [(0.5, 2.5), (0.9, 0.3), (2.0, 1.5)] {
        let p = classify(q)?;
        let refl = reflect_digamma(&p, x, &policy)?;
        let direct = q_digamma(&p.reciprocal(), x, &policy)?;
        println!(
            "  psi_{{1/{q}}}({x}) reflected = {:+.15}, direct = {:+.15}",
            refl.value, direct.value
        );
    }

    let grid = GridSpec::new(0.05, 30.0, 25, Spacing::Logarithmic)?;
    for q in [0.5, 2.0, 5.0] {
        let p = classify(q)?;
        let r = check_identities(&p, &grid, &policy)?;
        println!(
            "[{}] identities q={q}: {} residual cases, worst margin {:.3e}",
            if r.passed { "PASS" } else { "FAIL" },
            r.cases.len(),
            r.worst_margin
        );
    }
    Ok(())
}
