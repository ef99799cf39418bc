//! The completely monotonic combinations, the four monotone functions
//! built from psi_q, the sharp double bounds they imply, the
//! coefficient-level inequality behind the monotonicity proof, and the
//! two classical-limit functions.
//!
//! Error bounds on composed quantities use first-order sensitivity with
//! a fixed 2x safety factor; they are heuristic for the composition
//! only, the underlying series bounds stay rigorous.

use crate::error::{Error, Result};
use crate::qcore::{
    digamma_classical, polygamma_classical, q_digamma, q_polygamma, Branch, Certified, DerivOrder,
    QParam, SeriesPolicy,
};

/// Safety factor applied to first-order propagated error bounds.
const PROPAGATION_SAFETY: f64 = 2.0;

/// The four monotone functions of the double-inequality theorem, keyed
/// by the q-branch they are defined on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem2Kind {
    /// phi_q(x) = psi_q(x) + ln[exp((ln q) q^x/(q^x-1)) - 1], q > 1
    PhiSuper,
    /// varphi_q(x) = psi_q(x) + ln[exp((ln q)/(q^x-1)) - 1], q > 1
    VarphiSuper,
    /// Phi_q(x) = psi_q(x) - (ln q) x + ln[exp((ln q) q^x/(q^x-1)) - 1], 0 < q < 1
    PhiSub,
    /// Theta_q(x) = psi_q(x) - (ln q) x + ln[exp((ln q)/(q^x-1)) - 1], 0 < q < 1
    ThetaSub,
}

impl Theorem2Kind {
    pub fn required_branch(&self) -> Branch {
        match self {
            Theorem2Kind::PhiSuper | Theorem2Kind::VarphiSuper => Branch::SuperUnit,
            Theorem2Kind::PhiSub | Theorem2Kind::ThetaSub => Branch::SubUnit,
        }
    }
}

/// A lower/upper pair; lower <= upper whenever both are finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundsPair {
    pub lower: f64,
    pub upper: f64,
}

fn check_x(x: f64) -> Result<()> {
    if x <= 0.0 || !x.is_finite() {
        return Err(Error::Domain(format!(
            "x must be positive and finite, got {x}"
        )));
    }
    Ok(())
}

fn require_branch(p: &QParam, branch: Branch, what: &'static str) -> Result<()> {
    if p.branch() != branch {
        return Err(Error::BranchMismatch {
            expected: what,
            got: p.branch(),
        });
    }
    Ok(())
}

/// The completely monotonic combination of the q-trigamma and
/// q-tetragamma: `[psi'_q]^2 + psi''_q` for q > 1 and
/// `[psi'_q - ln q]^2 + psi''_q` for 0 < q < 1.
pub fn theorem1_value(p: &QParam, x: f64, policy: &SeriesPolicy) -> Result<Certified> {
    check_x(x)?;
    if p.is_classical() {
        return Err(Error::ClassicalBranch);
    }
    let shift = if p.branch() == Branch::SubUnit {
        p.ln_q()
    } else {
        0.0
    };
    let p1 = q_polygamma(p, DerivOrder::new(1), x, policy)?;
    let p2 = q_polygamma(p, DerivOrder::new(2), x, policy)?;
    let a = p1.value - shift;
    let value = a * a + p2.value;
    let err_bound = PROPAGATION_SAFETY * (2.0 * a.abs() * p1.err_bound + p2.err_bound);
    Ok(Certified {
        value,
        err_bound,
        terms_used: p1.terms_used + p2.terms_used,
    })
}

/// Overflow-safe ln(exp(t) - 1) for t > 0.
pub(crate) fn ln_exp_minus_one(t: f64) -> Result<f64> {
    if t.is_nan() || t <= 0.0 {
        return Err(Error::LogDomain);
    }
    if t > 30.0 {
        Ok(t + (-(-t).exp()).ln_1p())
    } else {
        let b = t.exp_m1();
        if b <= 0.0 {
            return Err(Error::LogDomain);
        }
        Ok(b.ln())
    }
}

/// Inner exponent (ln q) q^x/(q^x - 1); positive on both branches.
pub(crate) fn exponent_qx(p: &QParam, x: f64) -> f64 {
    let u = (x * p.ln_q()).exp();
    p.ln_q() * u / (u - 1.0)
}

/// Inner exponent (ln q)/(q^x - 1); positive on both branches.
pub(crate) fn exponent_plain(p: &QParam, x: f64) -> f64 {
    let u = (x * p.ln_q()).exp();
    p.ln_q() / (u - 1.0)
}

/// One of the four monotone functions of the double-inequality theorem.
pub fn theorem2_value(
    kind: Theorem2Kind,
    p: &QParam,
    x: f64,
    policy: &SeriesPolicy,
) -> Result<Certified> {
    check_x(x)?;
    require_branch(p, kind.required_branch(), kind_name(kind))?;
    let psi = q_digamma(p, x, policy)?;
    let t = match kind {
        Theorem2Kind::PhiSuper | Theorem2Kind::PhiSub => exponent_qx(p, x),
        Theorem2Kind::VarphiSuper | Theorem2Kind::ThetaSub => exponent_plain(p, x),
    };
    let bracket = ln_exp_minus_one(t)?;
    let linear = match kind {
        Theorem2Kind::PhiSub | Theorem2Kind::ThetaSub => -p.ln_q() * x,
        _ => 0.0,
    };
    Ok(Certified {
        value: psi.value + linear + bracket,
        err_bound: PROPAGATION_SAFETY * psi.err_bound,
        terms_used: psi.terms_used,
    })
}

fn kind_name(kind: Theorem2Kind) -> &'static str {
    match kind {
        Theorem2Kind::PhiSuper => "phi (q > 1)",
        Theorem2Kind::VarphiSuper => "varphi (q > 1)",
        Theorem2Kind::PhiSub => "Phi (0 < q < 1)",
        Theorem2Kind::ThetaSub => "Theta (0 < q < 1)",
    }
}

/// The sharp double bounds on psi_q implied by the monotone functions.
///
/// 0 < q < 1:
///   `psi_q(1) + (ln q) x - B(x)  <  psi_q(x)  <  ln(ln q/(q-1)) + (ln q) x - B(x)`
///   with B(x) = ln[exp((ln q) q^x/(q^x-1)) - 1];
/// q > 1:
///   `psi_q(1) - ln q - C(x)  <  psi_q(x)  <  ln(ln q/(q-1)) - (ln q)/2 - C(x)`
///   with C(x) = ln[exp((ln q)/(q^x-1)) - 1].
///
/// The constants in each pair are the best possible.
pub fn digamma_bounds(p: &QParam, x: f64, policy: &SeriesPolicy) -> Result<BoundsPair> {
    check_x(x)?;
    if p.is_classical() {
        return Err(Error::BranchMismatch {
            expected: "q != 1",
            got: p.branch(),
        });
    }
    let psi_one = q_digamma(p, 1.0, policy)?.value;
    // ln q and q - 1 share sign, so the ratio is positive on both branches
    let log_ratio = (p.ln_q() / (p.q() - 1.0)).ln();
    match p.branch() {
        Branch::SubUnit => {
            let bracket = ln_exp_minus_one(exponent_qx(p, x))?;
            Ok(BoundsPair {
                lower: psi_one + p.ln_q() * x - bracket,
                upper: log_ratio + p.ln_q() * x - bracket,
            })
        }
        _ => {
            let bracket = ln_exp_minus_one(exponent_plain(p, x))?;
            Ok(BoundsPair {
                lower: psi_one - p.ln_q() - bracket,
                upper: log_ratio - 0.5 * p.ln_q() - bracket,
            })
        }
    }
}

/// Both sides of the coefficient inequality that drives the complete
/// monotonicity proof:
///   lower = sum_{j=1}^{i-1} j(i-j) / ((q^j - 1)(1 - q^{i-j}))
///   upper = (i-2) i / ((ln q)(1 - q^i))
/// with lower <= upper strictly for i >= 3 and q > 1. Both sides are
/// returned so a harness can report margins.
pub fn proof_inequality_sides(i: u32, q: f64) -> Result<BoundsPair> {
    if i < 3 {
        return Err(Error::Domain(format!("i must be >= 3, got {i}")));
    }
    if q <= 1.0 || !q.is_finite() {
        return Err(Error::Domain(format!("q must be > 1, got {q}")));
    }
    let n = f64::from(i);
    let mut lower = 0.0;
    for j in 1..i {
        let jf = f64::from(j);
        lower += jf * (n - jf) / ((q.powf(jf) - 1.0) * (1.0 - q.powf(n - jf)));
    }
    let upper = (n - 2.0) * n / (q.ln() * (1.0 - q.powf(n)));
    Ok(BoundsPair { lower, upper })
}

/// The antisymmetric coefficient sum
/// `sum_{j=1}^{i-1} j(i-j)(q^{i-j} - q^j) / ((q^j - 1)(q^{i-j} - 1))`,
/// identically zero; exposed for residual checks.
pub fn antisymmetric_coeff_sum(i: u32, q: f64) -> Result<f64> {
    if i < 3 {
        return Err(Error::Domain(format!("i must be >= 3, got {i}")));
    }
    if q <= 1.0 || !q.is_finite() {
        return Err(Error::Domain(format!("q must be > 1, got {q}")));
    }
    let n = f64::from(i);
    let mut sum = 0.0;
    for j in 1..i {
        let jf = f64::from(j);
        let a = q.powf(jf);
        let b = q.powf(n - jf);
        sum += jf * (n - jf) * (b - a) / ((a - 1.0) * (b - 1.0));
    }
    Ok(sum)
}

/// The series coefficient c_i(q, x) = i (ln q) q^{-ix} / (1 - q^{-i}),
/// strictly positive for i >= 1, q > 1, x > 0.
pub fn c_coeff(i: u32, q: f64, x: f64) -> Result<f64> {
    if i < 1 {
        return Err(Error::Domain("i must be >= 1".into()));
    }
    if q <= 1.0 || !q.is_finite() {
        return Err(Error::Domain(format!("q must be > 1, got {q}")));
    }
    if x < 0.0 || !x.is_finite() {
        return Err(Error::Domain(format!("x must be nonnegative, got {x}")));
    }
    let n = f64::from(i);
    Ok(n * q.ln() * (-n * x * q.ln()).exp() / (1.0 - q.powf(-n)))
}

/// Truncation of the double-sum representation
///   `([psi'_q]^2 + psi''_q)/(ln q)^2
///      = 1 + sum_{i>=2} sum_{j=1}^{i-1} c_j c_{i-j} - sum_{i>=1} (i-2) c_i`.
///
/// `i_max = None` extends the sum adaptively until c_i < 1e-16.
pub fn series_identity_lhs(p: &QParam, x: f64, i_max: Option<u32>) -> Result<f64> {
    check_x(x)?;
    require_branch(p, Branch::SuperUnit, "q > 1")?;
    let q = p.q();
    let cap = match i_max {
        Some(m) => {
            if m < 1 {
                return Err(Error::Domain("i_max must be >= 1".into()));
            }
            m
        }
        None => {
            let mut m = 2;
            while c_coeff(m, q, x)? >= 1e-16 && m < 100_000 {
                m += 1;
            }
            m
        }
    };
    let coeffs: Vec<f64> = (1..=cap).map(|i| c_coeff(i, q, x)).collect::<Result<_>>()?;
    let mut sum = 1.0;
    for i in 2..=cap as usize {
        for j in 1..i {
            sum += coeffs[j - 1] * coeffs[i - j - 1];
        }
    }
    for (idx, c) in coeffs.iter().enumerate() {
        sum -= (idx as f64 + 1.0 - 2.0) * c;
    }
    Ok(sum)
}

/// The q -> 1 limit of all four monotone functions:
/// `psi(x) + ln(e^{1/x} - 1)`, increasing on (0, inf) and confined to
/// (-gamma, 0). For small x the bracket is computed as
/// 1/x + ln(1 - e^{-1/x}) to avoid overflow.
pub fn batir_function(x: f64) -> Result<Certified> {
    check_x(x)?;
    let psi = digamma_classical(x)?;
    let inv = 1.0 / x;
    let bracket = if x < 0.02 {
        inv + (-(-inv).exp()).ln_1p()
    } else {
        ln_exp_minus_one(inv)?
    };
    Ok(Certified {
        value: psi.value + bracket,
        err_bound: PROPAGATION_SAFETY * psi.err_bound,
        terms_used: psi.terms_used,
    })
}

/// The increasing functions of the second remark:
/// `psi'_q(x) e^{psi_q(x)}` for q >= 1 and
/// `[psi'_q(x) - ln q] e^{psi_q(x) - (ln q) x}` for 0 < q <= 1;
/// the two coincide at q = 1.
pub fn remark2_value(p: &QParam, x: f64, policy: &SeriesPolicy) -> Result<Certified> {
    check_x(x)?;
    let (p1, psi) = match p.branch() {
        Branch::Classical => (
            polygamma_classical(DerivOrder::new(1), x)?,
            digamma_classical(x)?,
        ),
        _ => (
            q_polygamma(p, DerivOrder::new(1), x, policy)?,
            q_digamma(p, x, policy)?,
        ),
    };
    let (factor, exponent) = match p.branch() {
        Branch::SubUnit => (p1.value - p.ln_q(), psi.value - p.ln_q() * x),
        _ => (p1.value, psi.value),
    };
    let e = exponent.exp();
    let value = factor * e;
    let err_bound = PROPAGATION_SAFETY * (e * p1.err_bound + factor.abs() * e * psi.err_bound);
    Ok(Certified {
        value,
        err_bound,
        terms_used: p1.terms_used + psi.terms_used,
    })
}
