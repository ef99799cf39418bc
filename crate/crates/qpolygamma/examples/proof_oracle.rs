//! The coefficient-level machinery behind the complete monotonicity
//! proof: the double-sum representation of ([psi'_q]^2 + psi''_q)/(ln q)^2,
//! the strict inequality between its two sides, and the antisymmetric
//! sum that vanishes identically.
//!
//! Run with: cargo run --example proof_oracle

use qpolygamma::{
    antisymmetric_coeff_sum, c_coeff, classify, proof_inequality_sides, series_identity_lhs,
    theorem1_value, SeriesPolicy,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("coefficients c_i(q, x) = i (ln q) q^(-ix)/(1 - q^(-i)) > 0:");
    for (i, q, x) in [(1, std::f64::consts::E, 1.0), (2, 2.0, 0.0), (5, 1.5, 2.0)] {
        println!("  c_{i}({q:.3}, {x}) = {:.12}", c_coeff(i, q, x)?);
    }

    println!("\nstrict inequality between the proof's two sides:");
    println!(
        "{:>4} {:>6} {:>16} {:>16} {:>12}",
        "i", "q", "lower", "upper", "margin"
    );
    for (i, q) in [(3u32, 2.0), (4, 1.1), (10, 1.01), (30, 10.0), (60, 1.5)] {
        let s = proof_inequality_sides(i, q)?;
        println!(
            "{:>4} {:>6} {:>16.8} {:>16.8} {:>12.4e}",
            i,
            q,
            s.lower,
            s.upper,
            s.upper - s.lower
        );
    }

    println!("\nantisymmetric sum (identically zero):");
    for (i, q) in [(5u32, 3.0), (12, 1.7)] {
        println!(
            "  i={i:<3} q={q}: residual {:+.3e}",
            antisymmetric_coeff_sum(i, q)?
        );
    }

    println!("\ndouble-sum representation vs direct evaluation:");
    let policy = SeriesPolicy::default();
    for (q, x) in [(2.0, 2.0), (3.0, 1.0), (1.5, 5.0)] {
        let p = classify(q)?;
        let lhs = series_identity_lhs(&p, x, None)?;
        let rhs = theorem1_value(&p, x, &policy)?.value / (p.ln_q() * p.ln_q());
        println!(
            "  q={q} x={x}: series {lhs:.14}, direct {rhs:.14}, rel diff {:.2e}",
            ((lhs - rhs) / rhs).abs()
        );
    }
    Ok(())
}
