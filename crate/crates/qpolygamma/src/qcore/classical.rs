//! Classical (q = 1) digamma, polygamma, and log-gamma.
//!
//! All three use upward recurrence to shift the argument above a
//! threshold and then a Bernoulli asymptotic expansion whose remainder
//! is bounded by the first omitted term.

use crate::error::{Error, Result};
use crate::qcore::{Certified, DerivOrder, MAX_DERIV_ORDER};

/// Bernoulli numbers B_2, B_4, ..., B_18.
const BERNOULLI: [f64; 9] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
];

const DIGAMMA_SHIFT: f64 = 10.0;
const POLYGAMMA_SHIFT: f64 = 16.0;

fn check_x(x: f64) -> Result<()> {
    if x <= 0.0 || !x.is_finite() {
        return Err(Error::Domain(format!(
            "x must be positive and finite, got {x}"
        )));
    }
    Ok(())
}

/// psi(x) by recurrence psi(x+1) = psi(x) + 1/x and the asymptotic
/// series at y >= 10 with terms through B_14; remainder bound |B_16|/(16 y^16).
pub fn digamma_classical(x: f64) -> Result<Certified> {
    check_x(x)?;
    let mut shift = 0.0;
    let mut y = x;
    while y < DIGAMMA_SHIFT {
        shift -= 1.0 / y;
        y += 1.0;
    }
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut s = y.ln() - 0.5 * inv;
    let mut p = inv2;
    for k in 1..=7 {
        s -= BERNOULLI[k - 1] / (2 * k) as f64 * p;
        p *= inv2;
    }
    let value = s + shift;
    let remainder = (BERNOULLI[7] / 16.0).abs() * p;
    let err_bound = remainder + 4.0 * f64::EPSILON * (value.abs() + 1.0);
    Ok(Certified {
        value,
        err_bound,
        terms_used: 7,
    })
}

/// psi^{(m)}(x) for 1 <= m <= 6 by recurrence
/// psi^{(m)}(x) = psi^{(m)}(x+1) + (-1)^{m+1} m!/x^{m+1} and the
/// asymptotic series at y >= 16 with Bernoulli terms through B_16.
pub fn polygamma_classical(d: DerivOrder, x: f64) -> Result<Certified> {
    check_x(x)?;
    let m = d.m;
    if m == 0 {
        return digamma_classical(x);
    }
    if m > MAX_DERIV_ORDER {
        return Err(Error::OrderTooLarge(m));
    }
    let fact_m: f64 = (1..=m).map(|j| j as f64).product();
    let rec_sign = if m % 2 == 1 { 1.0 } else { -1.0 }; // (-1)^{m+1}
    let mut shift = 0.0;
    let mut y = x;
    while y < POLYGAMMA_SHIFT {
        shift += rec_sign * fact_m / y.powi(m as i32 + 1);
        y += 1.0;
    }
    // (-1)^{m-1} [ (m-1)!/y^m + m!/(2 y^{m+1}) + sum B_2k (2k+m-1)!/((2k)! y^{2k+m}) ]
    let mut s = fact_m / (m as f64) / y.powi(m as i32) + fact_m / (2.0 * y.powi(m as i32 + 1));
    for k in 1..=8usize {
        let mut c = 1.0; // (2k+m-1)!/(2k)!
        for j in (2 * k + 1)..(2 * k + m as usize) {
            c *= j as f64;
        }
        s += BERNOULLI[k - 1] * c / y.powi((2 * k + m as usize) as i32);
    }
    let mut c = 1.0;
    for j in 19..(18 + m as usize) {
        c *= j as f64;
    }
    let remainder = BERNOULLI[8].abs() * c / y.powi(18 + m as i32);
    let asym_sign = if m % 2 == 1 { 1.0 } else { -1.0 }; // (-1)^{m-1}
    let value = asym_sign * s + shift;
    let err_bound = remainder + 4.0 * f64::EPSILON * (value.abs() + 1.0);
    Ok(Certified {
        value,
        err_bound,
        terms_used: 8,
    })
}

/// ln Gamma(x) by recurrence and the Stirling series; used for the q = 1
/// branch of the log-q-gamma evaluation.
pub fn log_gamma_classical(x: f64) -> Result<Certified> {
    check_x(x)?;
    let mut shift = 0.0;
    let mut y = x;
    while y < DIGAMMA_SHIFT {
        shift -= y.ln();
        y += 1.0;
    }
    let half_ln_two_pi = 0.918_938_533_204_672_7;
    let mut s = (y - 0.5) * y.ln() - y + half_ln_two_pi;
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut p = inv;
    for k in 1..=7usize {
        s += BERNOULLI[k - 1] / ((2 * k) * (2 * k - 1)) as f64 * p;
        p *= inv2;
    }
    let value = s + shift;
    let remainder = (BERNOULLI[7] / (16.0 * 15.0)).abs() * p;
    let err_bound = remainder + 4.0 * f64::EPSILON * (value.abs() + 1.0);
    Ok(Certified {
        value,
        err_bound,
        terms_used: 7,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

    #[test]
    fn digamma_at_one_is_minus_gamma() {
        let c = digamma_classical(1.0).unwrap();
        assert!((c.value + EULER_GAMMA).abs() < 1e-14, "got {}", c.value);
    }

    #[test]
    fn digamma_recurrence_step() {
        // psi(2) = psi(1) + 1
        let a = digamma_classical(1.0).unwrap().value;
        let b = digamma_classical(2.0).unwrap().value;
        assert!((b - a - 1.0).abs() < 1e-14);
    }

    #[test]
    fn digamma_at_ten() {
        // psi(10) = -gamma + sum_{k=1}^{9} 1/k, summed independently
        let harmonic: f64 = (1..=9).map(|k| 1.0 / k as f64).sum();
        let expected = -EULER_GAMMA + harmonic;
        let c = digamma_classical(10.0).unwrap();
        assert!((c.value - expected).abs() < 1e-13, "got {}", c.value);
    }

    #[test]
    fn trigamma_at_one_is_pi_squared_over_six() {
        // oracle: zeta(2) by direct summation plus Euler-Maclaurin tail
        let n = 2000.0f64;
        let mut z2 = 0.0;
        let mut k = 1.0;
        while k <= n {
            z2 += 1.0 / (k * k);
            k += 1.0;
        }
        z2 += 1.0 / n - 1.0 / (2.0 * n * n) + 1.0 / (6.0 * n * n * n);
        let c = polygamma_classical(DerivOrder { m: 1 }, 1.0).unwrap();
        assert!((c.value - z2).abs() < 1e-12, "got {} vs {}", c.value, z2);
        assert!(c.value > 0.0);
    }

    #[test]
    fn tetragamma_at_one_is_minus_two_zeta_three() {
        let n = 2000.0f64;
        let mut z3 = 0.0;
        let mut k = 1.0;
        while k <= n {
            z3 += 1.0 / (k * k * k);
            k += 1.0;
        }
        z3 += 1.0 / (2.0 * n * n) - 1.0 / (2.0 * n * n * n);
        let c = polygamma_classical(DerivOrder { m: 2 }, 1.0).unwrap();
        assert!(
            (c.value + 2.0 * z3).abs() < 1e-11,
            "got {} vs {}",
            c.value,
            -2.0 * z3
        );
    }

    #[test]
    fn trigamma_positive_everywhere() {
        for i in 0..40 {
            let x = 0.01 * 1.5f64.powi(i).min(1e6);
            let c = polygamma_classical(DerivOrder { m: 1 }, x).unwrap();
            assert!(c.value > 0.0, "trigamma({x}) = {}", c.value);
        }
    }

    #[test]
    fn log_gamma_known_points() {
        assert!(log_gamma_classical(1.0).unwrap().value.abs() < 1e-13);
        assert!(log_gamma_classical(2.0).unwrap().value.abs() < 1e-13);
        let c = log_gamma_classical(5.0).unwrap();
        assert!((c.value - 24.0f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(digamma_classical(0.0).is_err());
        assert!(digamma_classical(-1.0).is_err());
        assert!(polygamma_classical(DerivOrder { m: 1 }, -0.5).is_err());
        assert!(polygamma_classical(DerivOrder { m: 7 }, 1.0).is_err());
    }
}
