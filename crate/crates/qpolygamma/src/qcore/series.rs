//! Certified summation kernels for the q-series.
//!
//! Both kernels sum to a caller-supplied tolerance and return the value
//! together with a rigorous truncation-tail bound. Double-precision
//! rounding is outside the certificate; the bound covers the discarded
//! tail only.

use crate::error::{Error, Result};
use crate::qcore::{Certified, SeriesPolicy};

/// Arguments below this are rejected: the sub-unit series needs
/// O(log(1/tol)/(x ln(1/r))) terms and small x blows past any term cap.
pub(crate) const MIN_X: f64 = 1e-4;

/// Certified evaluation of `base + prefactor * sum_{n>=1} n^m r^{nx} / (1 - r^n)`
/// for 0 < r < 1.
///
/// Tail bound: 1/(1-r^n) <= 1/(1-r), and for n > N the polynomial-geometric
/// part obeys the ratio test with r_eff = r^x (1 + 1/N)^m, so
/// `tail <= (N+1)^m r^{(N+1)x} / ((1-r)(1-r_eff))` once r_eff < 1.
pub(crate) fn power_series(
    r: f64,
    x: f64,
    m: u32,
    policy: &SeriesPolicy,
    base: f64,
    prefactor: f64,
) -> Result<Certified> {
    debug_assert!(r > 0.0 && r < 1.0);
    if x < MIN_X {
        return Err(Error::ToleranceNotMet {
            terms: 0,
            err_bound: f64::INFINITY,
            target: policy.abs_tol,
        });
    }
    let s = (x * r.ln()).exp(); // r^x
    let inv_one_minus_r = 1.0 / (1.0 - r);
    let mi = m as i32;
    let mut r_pow = 1.0; // r^n
    let mut s_pow = 1.0; // r^{nx}
    let mut sum = 0.0;
    let mut best_err = f64::INFINITY;
    for n in 1..=policy.max_terms {
        r_pow *= r;
        s_pow *= s;
        let nf = n as f64;
        sum += nf.powi(mi) * s_pow / (1.0 - r_pow);

        let ratio = s * (1.0 + 1.0 / nf).powi(mi);
        if ratio < 1.0 {
            let next = (nf + 1.0).powi(mi) * s_pow * s;
            let tail = next * inv_one_minus_r / (1.0 - ratio);
            let err = prefactor.abs() * tail;
            let value = base + prefactor * sum;
            if err <= policy.abs_tol.max(policy.rel_tol * value.abs()) {
                return Ok(Certified {
                    value,
                    err_bound: err,
                    terms_used: n,
                });
            }
            best_err = err;
        }
    }
    Err(Error::ToleranceNotMet {
        terms: policy.max_terms,
        err_bound: best_err,
        target: policy.abs_tol,
    })
}

/// Certified evaluation of `base + sum_{i>=0} [ln(1 - r^{i+1}) - ln(1 - r^{i+x})]`
/// for 0 < r < 1, the log of the q-gamma infinite product.
///
/// By the mean value theorem each term is bounded by
/// `|r^{i+1} - r^{i+x}| / (1 - r^{min(1,x)})`, a geometric majorant in i.
pub(crate) fn log_product_series(
    r: f64,
    x: f64,
    policy: &SeriesPolicy,
    base: f64,
) -> Result<Certified> {
    debug_assert!(r > 0.0 && r < 1.0);
    if x < MIN_X {
        return Err(Error::ToleranceNotMet {
            terms: 0,
            err_bound: f64::INFINITY,
            target: policy.abs_tol,
        });
    }
    let s = (x * r.ln()).exp(); // r^x
    let r_min = if x >= 1.0 { r } else { s }; // r^{min(1,x)}
    let coeff = (r - s).abs() / (1.0 - r_min);
    let inv_one_minus_r = 1.0 / (1.0 - r);
    let mut r_pow = 1.0; // r^i
    let mut sum = 0.0;
    let mut best_err = f64::INFINITY;
    for i in 0..policy.max_terms {
        let a = r * r_pow; // r^{i+1}
        let b = s * r_pow; // r^{i+x}
        sum += (-a).ln_1p() - (-b).ln_1p();
        r_pow *= r;

        let tail = coeff * r_pow * inv_one_minus_r;
        let value = base + sum;
        if tail <= policy.abs_tol.max(policy.rel_tol * value.abs()) {
            return Ok(Certified {
                value,
                err_bound: tail,
                terms_used: i + 1,
            });
        }
        best_err = tail;
    }
    Err(Error::ToleranceNotMet {
        terms: policy.max_terms,
        err_bound: best_err,
        target: policy.abs_tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_series_geometric_sum() {
        // m = 0, base 0, prefactor 1: sum q^{nx}/(1-q^n); cross-check
        // against a brute-force partial sum.
        let policy = SeriesPolicy::default();
        let c = power_series(0.5, 2.0, 0, &policy, 0.0, 1.0).unwrap();
        let mut brute = 0.0;
        for n in 1..200 {
            brute += 0.25f64.powi(n) / (1.0 - 0.5f64.powi(n));
        }
        assert!((c.value - brute).abs() <= c.err_bound + 1e-15);
        assert!(c.err_bound >= 0.0);
        assert!(c.terms_used <= policy.max_terms);
    }

    #[test]
    fn small_x_rejected() {
        let policy = SeriesPolicy::default();
        let err = power_series(0.5, 5e-5, 0, &policy, 0.0, 1.0).unwrap_err();
        assert!(matches!(err, Error::ToleranceNotMet { .. }));
    }

    #[test]
    fn term_cap_respected() {
        let tight = SeriesPolicy::new(1e-30, 1e-320, 5).unwrap();
        let err = power_series(0.9, 0.5, 0, &tight, 0.0, 1.0).unwrap_err();
        match err {
            Error::ToleranceNotMet { terms, .. } => assert_eq!(terms, 5),
            other => panic!("unexpected error {other:?}"),
        }
    }
}
