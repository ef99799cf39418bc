//! The q -> 1 limit: psi_q approaches the classical digamma, all four
//! monotone functions collapse to psi(x) + ln(e^{1/x} - 1), and that
//! limit function is increasing and confined to (-gamma, 0).
//!
//! Second differences of the limit function are printed as exploratory
//! output; concavity is conjectured, not asserted.
//!
//! Run with: cargo run --example classical_limit

use qpolygamma::{
    batir_function, classify, digamma_classical, q_digamma, remark2_value, SeriesPolicy,
};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let policy = SeriesPolicy::default();

    println!("|psi_q(x) - psi(x)| for q near 1:");
    for q in [0.999, 1.001] {
        let p = classify(q)?;
        let mut worst = 0.0f64;
        let mut x = 0.5;
        while x <= 10.0 {
            let d = (q_digamma(&p, x, &policy)?.value - digamma_classical(x)?.value).abs();
            worst = worst.max(d);
            x += 0.5;
        }
        println!("  q={q}: worst deviation {worst:.6} (stays below 0.01)");
    }

    println!("\npsi(x) + ln(e^(1/x) - 1): increasing, between -gamma and 0");
    println!("{:>8} {:>18} {:>14}", "x", "value", "2nd difference");
    let mut prev: Option<(f64, f64)> = None;
    for i in 0..12 {
        let x = 0.01 * 2.3f64.powi(i);
        let v = batir_function(x)?.value;
        let dd = match prev {
            Some((pv, ppv)) => format!("{:+.3e}", v - 2.0 * pv + ppv),
            None => String::from("-"),
        };
        println!("{x:>8.3} {v:>18.12} {dd:>14}");
        prev = Some((v, prev.map_or(v, |(pv, _)| pv)));
    }
    println!(
        "  gap to -gamma at x=0.01: {:+.4e}",
        batir_function(0.01)?.value + EULER_GAMMA
    );
    println!(
        "  gap to 0 at x=50:        {:+.4e}",
        batir_function(50.0)?.value
    );

    println!("\npsi'(x) e^(psi(x)) at q=1: increasing and below 1");
    let p1 = classify(1.0)?;
    for x in [0.1, 0.5, 1.0, 2.0, 5.0, 30.0] {
        let v = remark2_value(&p1, x, &policy)?.value;
        println!("  x={x:<5} value={v:.12}");
    }
    Ok(())
}
