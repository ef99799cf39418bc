//! Core evaluation of ln Gamma_q, psi_q, and psi_q^{(m)} on all q-branches
//! with certified truncation error.
//!
//! Conventions for the series forms, with `ln q` denoted L:
//!
//! * 0 < q < 1:
//!   - `ln Gamma_q(x) = (1-x) ln(1-q) + sum_{i>=0} [ln(1-q^{i+1}) - ln(1-q^{i+x})]`
//!   - `psi_q(x) = -ln(1-q) + L sum_{k>=1} q^{kx}/(1-q^k)`
//!   - `psi_q^{(m)}(x) = L^{m+1} sum_{n>=1} n^m q^{nx}/(1-q^n)`, m >= 1
//! * q > 1 (with r = 1/q):
//!   - `ln Gamma_q(x) = (1-x) ln(q-1) + x(x-1)/2 L + sum_{i>=0} [ln(1-r^{i+1}) - ln(1-r^{i+x})]`
//!   - `psi_q(x) = -ln(q-1) + L [x - 1/2 - sum_{i>=1} r^{ix}/(1-r^i)]`
//!   - `psi_q^{(m)}(x) = [m=1] L + (-1)^{m+1} L^{m+1} sum_{i>=1} i^m r^{ix}/(1-r^i)`, m >= 1
//! * q = 1: the classical functions.
//!
//! All functions are pure; every returned value carries a rigorous bound
//! on the discarded series tail.

mod classical;
mod series;

pub use classical::{digamma_classical, log_gamma_classical, polygamma_classical};

use crate::error::{Error, Result};

/// Derivative orders above this are rejected (`OrderTooLarge`).
pub const MAX_DERIV_ORDER: u32 = 6;

/// Half-width of the window around 1 that is treated as q = 1. Both
/// q-series lose all precision as ln q -> 0.
pub const CLASSICAL_WINDOW: f64 = 1e-12;

/// Parameter branch of the q-deformation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// 0 < q < 1
    SubUnit,
    /// q = 1 (within the classical window)
    Classical,
    /// q > 1
    SuperUnit,
}

/// Validated deformation parameter together with its branch and cached ln q.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QParam {
    q: f64,
    branch: Branch,
    ln_q: f64,
}

impl QParam {
    /// Classify a raw q. Values within 1e-12 of 1 collapse to the
    /// classical branch, where ln_q is exactly zero.
    pub fn new(q: f64) -> Result<Self> {
        if !q.is_finite() || q <= 0.0 {
            return Err(Error::NonPositiveQ(q));
        }
        let branch = if (q - 1.0).abs() <= CLASSICAL_WINDOW {
            Branch::Classical
        } else if q < 1.0 {
            Branch::SubUnit
        } else {
            Branch::SuperUnit
        };
        let ln_q = match branch {
            Branch::Classical => 0.0,
            _ => q.ln(),
        };
        Ok(QParam { q, branch, ln_q })
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    pub fn ln_q(&self) -> f64 {
        self.ln_q
    }

    pub fn is_classical(&self) -> bool {
        self.branch == Branch::Classical
    }

    /// The reflected parameter 1/q (SubUnit <-> SuperUnit).
    pub fn reciprocal(&self) -> QParam {
        QParam::new(1.0 / self.q).expect("1/q is finite and positive")
    }
}

/// Classify a deformation parameter into its branch.
pub fn classify(q: f64) -> Result<QParam> {
    QParam::new(q)
}

/// Truncation controls for the certified series sums.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesPolicy {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_terms: usize,
}

impl SeriesPolicy {
    pub fn new(rel_tol: f64, abs_tol: f64, max_terms: usize) -> Result<Self> {
        if !rel_tol.is_finite()
            || rel_tol <= 0.0
            || !abs_tol.is_finite()
            || abs_tol <= 0.0
            || max_terms < 1
        {
            return Err(Error::Domain(format!(
                "invalid policy: rel_tol={rel_tol}, abs_tol={abs_tol}, max_terms={max_terms}"
            )));
        }
        Ok(SeriesPolicy {
            rel_tol,
            abs_tol,
            max_terms,
        })
    }
}

impl Default for SeriesPolicy {
    fn default() -> Self {
        SeriesPolicy {
            rel_tol: 1e-13,
            abs_tol: 1e-300,
            max_terms: 1_000_000,
        }
    }
}

/// A computed value with a rigorous truncation-error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Certified {
    pub value: f64,
    pub err_bound: f64,
    pub terms_used: usize,
}

/// Derivative order of a q-polygamma: m = 0 is psi_q itself, m = 1 the
/// q-trigamma, m = 2 the q-tetragamma.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DerivOrder {
    pub m: u32,
}

impl DerivOrder {
    pub fn new(m: u32) -> Self {
        DerivOrder { m }
    }
}

fn check_x(x: f64) -> Result<()> {
    if x <= 0.0 || !x.is_finite() {
        return Err(Error::Domain(format!(
            "x must be positive and finite, got {x}"
        )));
    }
    Ok(())
}

/// ln Gamma_q(x) with certified truncation error.
pub fn log_q_gamma(p: &QParam, x: f64, policy: &SeriesPolicy) -> Result<Certified> {
    check_x(x)?;
    match p.branch {
        Branch::Classical => log_gamma_classical(x),
        Branch::SubUnit => {
            let base = (1.0 - x) * (-p.q).ln_1p();
            series::log_product_series(p.q, x, policy, base)
        }
        Branch::SuperUnit => {
            let base = (1.0 - x) * (p.q - 1.0).ln() + x * (x - 1.0) / 2.0 * p.ln_q;
            series::log_product_series(1.0 / p.q, x, policy, base)
        }
    }
}

/// psi_q(x) with certified truncation error.
pub fn q_digamma(p: &QParam, x: f64, policy: &SeriesPolicy) -> Result<Certified> {
    check_x(x)?;
    match p.branch {
        Branch::Classical => digamma_classical(x),
        Branch::SubUnit => {
            let base = -(-p.q).ln_1p();
            series::power_series(p.q, x, 0, policy, base, p.ln_q)
        }
        Branch::SuperUnit => {
            // -ln(q-1) + L (x - 1/2 - S)  ==  base + (-L) S
            let base = -(p.q - 1.0).ln() + p.ln_q * (x - 0.5);
            series::power_series(1.0 / p.q, x, 0, policy, base, -p.ln_q)
        }
    }
}

/// psi_q^{(m)}(x) with certified truncation error; m = 0 delegates to
/// `q_digamma`, the classical branch to `polygamma_classical`.
pub fn q_polygamma(p: &QParam, d: DerivOrder, x: f64, policy: &SeriesPolicy) -> Result<Certified> {
    check_x(x)?;
    if d.m == 0 {
        return q_digamma(p, x, policy);
    }
    if d.m > MAX_DERIV_ORDER {
        return Err(Error::OrderTooLarge(d.m));
    }
    match p.branch {
        Branch::Classical => polygamma_classical(d, x),
        Branch::SubUnit => {
            let prefactor = p.ln_q.powi(d.m as i32 + 1);
            series::power_series(p.q, x, d.m, policy, 0.0, prefactor)
        }
        Branch::SuperUnit => {
            let sign = if d.m % 2 == 1 { 1.0 } else { -1.0 };
            let prefactor = sign * p.ln_q.powi(d.m as i32 + 1);
            let base = if d.m == 1 { p.ln_q } else { 0.0 };
            series::power_series(1.0 / p.q, x, d.m, policy, base, prefactor)
        }
    }
}

/// psi_{1/q}(x) via the reflection identity
/// `psi_q(x) = (ln q)(x - 3/2) + psi_{1/q}(x)`, which rearranges to the
/// same expression on both branches. The error bound is the one of the
/// underlying `q_digamma` call; the linear shift is exact.
pub fn reflect_digamma(p: &QParam, x: f64, policy: &SeriesPolicy) -> Result<Certified> {
    check_x(x)?;
    if p.is_classical() {
        return Err(Error::Domain("reflection requires q != 1".into()));
    }
    let c = q_digamma(p, x, policy)?;
    Ok(Certified {
        value: c.value - p.ln_q * (x - 1.5),
        err_bound: c.err_bound,
        terms_used: c.terms_used,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn policy() -> SeriesPolicy {
        SeriesPolicy::default()
    }

    #[test]
    fn classify_branches() {
        assert_eq!(classify(0.5).unwrap().branch(), Branch::SubUnit);
        assert_eq!(classify(1.0).unwrap().branch(), Branch::Classical);
        assert_eq!(classify(2.0).unwrap().branch(), Branch::SuperUnit);
        assert_eq!(classify(1.0 + 5e-13).unwrap().branch(), Branch::Classical);
        assert!(classify(0.0).is_err());
        assert!(classify(-2.0).is_err());
        assert!(classify(f64::NAN).is_err());
        assert!(classify(f64::INFINITY).is_err());
    }

    #[test]
    fn ln_q_zero_iff_classical() {
        assert_eq!(classify(1.0).unwrap().ln_q(), 0.0);
        assert!(classify(0.5).unwrap().ln_q() < 0.0);
        assert!(classify(2.0).unwrap().ln_q() > 0.0);
    }

    #[test]
    fn log_q_gamma_telescopes_to_zero_at_one_and_two() {
        for &q in &[0.2, 0.5, 0.9, 1.5, 2.0, 5.0] {
            let p = classify(q).unwrap();
            for &x in &[1.0, 2.0] {
                let c = log_q_gamma(&p, x, &policy()).unwrap();
                assert!(
                    c.value.abs() <= c.err_bound + 1e-14,
                    "lnGamma_q({x}) at q={q}: {} (bound {})",
                    c.value,
                    c.err_bound
                );
            }
        }
    }

    #[test]
    fn log_q_gamma_at_three_is_ln_one_plus_q() {
        // Gamma_q(3) = 1 + q by telescoping of the partial products;
        // cross-check against a directly evaluated partial product.
        let q: f64 = 0.5;
        let p = classify(q).unwrap();
        let c = log_q_gamma(&p, 3.0, &policy()).unwrap();
        assert!((c.value - 1.5f64.ln()).abs() <= c.err_bound + 1e-13);

        let mut prod = (1.0 - q).powf(-2.0);
        for i in 0..200 {
            prod *= (1.0 - q.powi(i + 1)) / (1.0 - q.powi(i + 3));
        }
        assert!((c.value - prod.ln()).abs() <= c.err_bound + 1e-12);
    }

    #[test]
    fn q_digamma_matches_direct_summation() {
        // 60+ terms of the defining series, summed independently.
        let q: f64 = 0.5;
        let mut s = 0.0;
        for k in 1..80 {
            s += q.powi(k) / (1.0 - q.powi(k));
        }
        let expected = -(1.0f64 - q).ln() + q.ln() * s;
        let c = q_digamma(&classify(q).unwrap(), 1.0, &policy()).unwrap();
        assert!((c.value - expected).abs() <= c.err_bound + 1e-13);
        assert!((c.value + 0.420_529_034_356_045_8).abs() < 1e-12);
    }

    #[test]
    fn q_digamma_limit_at_infinity() {
        // psi_q(x) -> -ln(1-q) as x -> infinity for 0 < q < 1
        let p = classify(0.5).unwrap();
        let c = q_digamma(&p, 60.0, &policy()).unwrap();
        assert!((c.value - 2.0f64.ln()).abs() <= c.err_bound + 1e-12);
    }

    #[test]
    fn q_digamma_difference_equation_super_unit() {
        // psi_2(2) - psi_2(1) = (ln 2) 2^1/(2^1 - 1) = 2 ln 2
        let p = classify(2.0).unwrap();
        let a = q_digamma(&p, 1.0, &policy()).unwrap();
        let b = q_digamma(&p, 2.0, &policy()).unwrap();
        let expected = 2.0 * 2.0f64.ln();
        assert!((b.value - a.value - expected).abs() <= a.err_bound + b.err_bound + 1e-12);
    }

    #[test]
    fn q_polygamma_signs_sub_unit() {
        // sign of L^{m+1}: odd m positive, even m negative
        let p = classify(0.5).unwrap();
        for m in 1..=MAX_DERIV_ORDER {
            let c = q_polygamma(&p, DerivOrder::new(m), 2.0, &policy()).unwrap();
            if m % 2 == 1 {
                assert!(c.value > 0.0, "m={m}: {}", c.value);
            } else {
                assert!(c.value < 0.0, "m={m}: {}", c.value);
            }
        }
    }

    #[test]
    fn q_polygamma_reflection_triple() {
        let sub = classify(0.5).unwrap();
        let sup = classify(2.0).unwrap();
        let x = 1.7;
        // psi'_q = ln q + psi'_{1/q}
        let a = q_polygamma(&sub, DerivOrder::new(1), x, &policy()).unwrap();
        let b = q_polygamma(&sup, DerivOrder::new(1), x, &policy()).unwrap();
        let resid = a.value - (0.5f64.ln() + b.value);
        assert!(
            resid.abs() <= a.err_bound + b.err_bound + 1e-12,
            "resid {resid}"
        );
        // psi''_q = psi''_{1/q}
        let a2 = q_polygamma(&sub, DerivOrder::new(2), 1.3, &policy()).unwrap();
        let b2 = q_polygamma(&sup, DerivOrder::new(2), 1.3, &policy()).unwrap();
        assert!((a2.value - b2.value).abs() <= a2.err_bound + b2.err_bound + 1e-12);
    }

    #[test]
    fn reflect_digamma_residual_zero() {
        for &(q, x) in &[(0.5, 2.5), (0.9, 0.3), (2.0, 1.1)] {
            let p = classify(q).unwrap();
            let refl = reflect_digamma(&p, x, &policy()).unwrap();
            let direct = q_digamma(&p.reciprocal(), x, &policy()).unwrap();
            assert!(
                (refl.value - direct.value).abs() <= refl.err_bound + direct.err_bound + 1e-12,
                "q={q} x={x}"
            );
        }
    }

    #[test]
    fn reflect_digamma_linear_term_vanishes_at_three_halves() {
        let p = classify(0.5).unwrap();
        let refl = reflect_digamma(&p, 1.5, &policy()).unwrap();
        let psi = q_digamma(&p, 1.5, &policy()).unwrap();
        assert_eq!(refl.value, psi.value);
    }

    #[test]
    fn reflect_digamma_rejects_classical() {
        let p = classify(1.0).unwrap();
        assert!(reflect_digamma(&p, 1.0, &policy()).is_err());
    }

    #[test]
    fn classical_delegation_continuous_in_q() {
        // |psi_q(x) - psi(x)| <= 0.01 for q near 1
        for &q in &[0.999, 1.001] {
            let p = classify(q).unwrap();
            let mut x = 0.5;
            while x <= 10.0 {
                let a = q_digamma(&p, x, &policy()).unwrap();
                let b = digamma_classical(x).unwrap();
                assert!(
                    (a.value - b.value).abs() <= 0.01,
                    "q={q} x={x}: {} vs {}",
                    a.value,
                    b.value
                );
                x += 0.5;
            }
        }
    }

    #[test]
    fn tolerance_not_met_is_an_error_not_inf() {
        // exhaustion surfaces as Err, never as an Ok value with a
        // silently inflated bound
        let tight = SeriesPolicy::new(1e-30, 1e-320, 10).unwrap();
        let p = classify(0.9).unwrap();
        match q_digamma(&p, 0.5, &tight) {
            Err(Error::ToleranceNotMet { terms, .. }) => assert_eq!(terms, 10),
            other => panic!("expected ToleranceNotMet, got {other:?}"),
        }
    }

    #[test]
    fn rejects_tiny_x() {
        let p = classify(0.5).unwrap();
        assert!(matches!(
            q_digamma(&p, 5e-5, &policy()),
            Err(Error::ToleranceNotMet { .. })
        ));
        assert!(matches!(
            q_digamma(&p, -1.0, &policy()),
            Err(Error::Domain(_))
        ));
    }
}
