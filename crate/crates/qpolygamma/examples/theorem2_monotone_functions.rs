//! The four increasing functions built from psi_q and the exp-identity
//! behind them: exp(phi_q(x)) = exp(psi_q(x+1)) - exp(psi_q(x)).
//!
//! Run with: cargo run --example theorem2_monotone_functions

use qpolygamma::{
    check_monotone, classify, q_digamma, theorem2_value, GridSpec, MonotoneFn, SeriesPolicy,
    Spacing, Theorem2Kind,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let policy = SeriesPolicy::default();
    let sup = classify(2.0)?;
    let sub = classify(0.5)?;

    println!("values along x (all four increase):");
    println!(
        "{:>6} {:>14} {:>14} {:>14} {:>14}",
        "x", "phi (q=2)", "varphi (q=2)", "Phi (q=1/2)", "Theta (q=1/2)"
    );
    for x in [0.1, 0.5, 1.0, 2.0, 5.0, 20.0] {
        let a = theorem2_value(Theorem2Kind::PhiSuper, &sup, x, &policy)?;
        let b = theorem2_value(Theorem2Kind::VarphiSuper, &sup, x, &policy)?;
        let c = theorem2_value(Theorem2Kind::PhiSub, &sub, x, &policy)?;
        let d = theorem2_value(Theorem2Kind::ThetaSub, &sub, x, &policy)?;
        println!(
            "{:>6} {:>14.8} {:>14.8} {:>14.8} {:>14.8}",
            x, a.value, b.value, c.value, d.value
        );
    }

    // exp identity at one point
    let x = 1.5;
    let phi = theorem2_value(Theorem2Kind::PhiSuper, &sup, x, &policy)?;
    let hi = q_digamma(&sup, x + 1.0, &policy)?;
    let lo = q_digamma(&sup, x, &policy)?;
    println!(
        "\nexp(phi_2({x})) = {:.15e}\nexp(psi_2({})) - exp(psi_2({x})) = {:.15e}",
        phi.value.exp(),
        x + 1.0,
        hi.value.exp() - lo.value.exp()
    );

    let grid = GridSpec::new(0.05, 30.0, 100, Spacing::Logarithmic)?;
    for (f, p) in [
        (MonotoneFn::Phi, sup),
        (MonotoneFn::Varphi, sup),
        (MonotoneFn::PhiSub, sub),
        (MonotoneFn::Theta, sub),
    ] {
        let r = check_monotone(f, &p, &grid, &policy)?;
        println!(
            "[{}] {:?} q={}: {} adjacent pairs, worst margin {:.3e}",
            if r.passed { "PASS" } else { "FAIL" },
            f,
            p.q(),
            r.cases.len(),
            r.worst_margin
        );
    }
    Ok(())
}
