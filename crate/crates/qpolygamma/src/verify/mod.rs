//! Grid-based property verification with machine-readable reports.
//!
//! Every suite evaluates a family of inequalities or identity residuals
//! over a deterministic grid and records one case per probe. A case
//! passes when its margin is nonnegative; margins are budget-adjusted so
//! that a failure always means a violation beyond the certified error.
//! Grid cases are independent of one another; reports are assembled in a
//! fixed order (label, then q, then x) regardless of evaluation order.

mod fd;

pub use fd::{fd_step, finite_difference};

use crate::error::{Error, Result};
use crate::qcore::{
    log_q_gamma, q_digamma, q_polygamma, Certified, DerivOrder, QParam, SeriesPolicy,
};
use crate::theorems::{
    batir_function, digamma_bounds, remark2_value, theorem1_value, theorem2_value, Theorem2Kind,
};
use serde::Serialize;

/// Additive slack on every identity/CM budget, covering double rounding
/// that the truncation certificates do not.
const BUDGET_SLACK: f64 = 1e-10;

/// Threshold for the best-possible-constant probes.
const SHARPNESS_THRESHOLD: f64 = 0.02;
const SHARPNESS_LOW_X: f64 = 1e-3;
const SHARPNESS_HIGH_X: f64 = 50.0;

/// Sentinel margin for cases that could not be evaluated at all.
const EVAL_FAILED_MARGIN: f64 = -f64::MAX;

/// Grid spacing rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Logarithmic,
}

/// A deterministic one-dimensional evaluation grid over x.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub n_points: usize,
    pub spacing: Spacing,
}

impl GridSpec {
    pub fn new(x_min: f64, x_max: f64, n_points: usize, spacing: Spacing) -> Result<Self> {
        if x_min <= 0.0 || x_max <= x_min || !x_min.is_finite() || !x_max.is_finite() {
            return Err(Error::Domain(format!(
                "grid requires 0 < x_min < x_max, got [{x_min}, {x_max}]"
            )));
        }
        if n_points < 2 {
            return Err(Error::Domain("grid needs at least 2 points".into()));
        }
        Ok(GridSpec {
            x_min,
            x_max,
            n_points,
            spacing,
        })
    }

    /// 64 logarithmic points on [0.05, 30], the default verification grid.
    pub fn default_log() -> Self {
        GridSpec {
            x_min: 0.05,
            x_max: 30.0,
            n_points: 64,
            spacing: Spacing::Logarithmic,
        }
    }

    /// Strictly increasing points, identical for identical specs.
    pub fn points(&self) -> Vec<f64> {
        let n = self.n_points;
        let mut pts = Vec::with_capacity(n);
        match self.spacing {
            Spacing::Linear => {
                let step = (self.x_max - self.x_min) / (n - 1) as f64;
                for i in 0..n {
                    pts.push(self.x_min + step * i as f64);
                }
            }
            Spacing::Logarithmic => {
                let la = self.x_min.ln();
                let lb = self.x_max.ln();
                let step = (lb - la) / (n - 1) as f64;
                for i in 0..n {
                    pts.push((la + step * i as f64).exp());
                }
            }
        }
        pts[0] = self.x_min;
        pts[n - 1] = self.x_max;
        pts
    }
}

/// One verified probe: a labelled margin with its error budget.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckCase {
    pub label: String,
    pub q: f64,
    pub x: f64,
    pub margin: f64,
    pub err_budget: f64,
    pub pass: bool,
}

/// Outcome of one verification suite. `passed` holds exactly when every
/// case passes; `worst_margin` is the minimum margin over the cases.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    #[serde(rename = "suite")]
    pub suite_name: String,
    pub q: f64,
    pub k_max: Option<u32>,
    pub cases: Vec<CheckCase>,
    pub worst_margin: f64,
    pub passed: bool,
}

impl CheckReport {
    /// Sort cases by (label, q, x), then derive the verdict fields.
    pub fn assemble(
        suite_name: impl Into<String>,
        q: f64,
        k_max: Option<u32>,
        mut cases: Vec<CheckCase>,
    ) -> Self {
        cases.sort_by(|a, b| {
            a.label
                .cmp(&b.label)
                .then(a.q.total_cmp(&b.q))
                .then(a.x.total_cmp(&b.x))
        });
        let worst_margin = cases.iter().map(|c| c.margin).fold(f64::INFINITY, f64::min);
        let passed = cases.iter().all(|c| c.pass);
        CheckReport {
            suite_name: suite_name.into(),
            q,
            k_max,
            cases,
            worst_margin,
            passed,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn margin_case(label: &str, q: f64, x: f64, margin: f64, err_budget: f64) -> CheckCase {
    let margin = if margin.is_finite() {
        margin
    } else {
        EVAL_FAILED_MARGIN
    };
    CheckCase {
        label: label.to_string(),
        q,
        x,
        pass: margin >= 0.0,
        margin,
        err_budget,
    }
}

fn failed_case(label: &str, q: f64, x: f64) -> CheckCase {
    CheckCase {
        label: label.to_string(),
        q,
        x,
        margin: EVAL_FAILED_MARGIN,
        err_budget: 0.0,
        pass: false,
    }
}

/// Degree of the complete-monotonicity sign pattern to verify: derivative
/// orders n = 0..k_max, with k_max capped at 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CMOrder {
    pub k_max: u32,
}

impl CMOrder {
    pub fn new(k_max: u32) -> Result<Self> {
        if k_max > 4 {
            return Err(Error::OrderTooLarge(k_max));
        }
        Ok(CMOrder { k_max })
    }
}

fn binomial(n: u32, k: u32) -> f64 {
    let mut v = 1.0;
    for j in 0..k {
        v = v * (n - j) as f64 / (j + 1) as f64;
    }
    v
}

/// Analytic n-th derivative of the completely monotonic combination,
/// expanded by the Leibniz rule into q-polygamma values of orders up to
/// n + 2, together with a first-order error bound.
fn cm_derivative(p: &QParam, x: f64, n: u32, policy: &SeriesPolicy) -> Result<(f64, f64)> {
    let shift = if p.branch() == crate::qcore::Branch::SubUnit {
        p.ln_q()
    } else {
        0.0
    };
    let mut vals = Vec::with_capacity(n as usize + 2);
    let mut errs = Vec::with_capacity(n as usize + 2);
    for j in 0..=(n + 1) {
        let c = q_polygamma(p, DerivOrder::new(j + 1), x, policy)?;
        let v = if j == 0 { c.value - shift } else { c.value };
        vals.push(v);
        errs.push(c.err_bound);
    }
    let tail = q_polygamma(p, DerivOrder::new(n + 2), x, policy)?;
    let mut deriv = tail.value;
    let mut err = tail.err_bound;
    for k in 0..=n {
        let b = binomial(n, k);
        let (i, j) = (k as usize, (n - k) as usize);
        deriv += b * vals[i] * vals[j];
        err += b * (vals[i].abs() * errs[j] + vals[j].abs() * errs[i]);
    }
    Ok((deriv, 2.0 * err))
}

/// Verify the complete-monotonicity sign pattern (-1)^n d^n/dx^n >= 0 of
/// the combination behind `theorem1_value` for n = 0..k_max over the
/// grid, then
/// cross-check each analytic derivative against a central finite
/// difference on a 10-point spot grid.
pub fn check_cm_theorem1(
    p: &QParam,
    grid: &GridSpec,
    order: CMOrder,
    policy: &SeriesPolicy,
) -> Result<CheckReport> {
    if p.is_classical() {
        return Err(Error::BranchMismatch {
            expected: "q != 1",
            got: p.branch(),
        });
    }
    let mut cases = Vec::new();
    for &x in &grid.points() {
        for n in 0..=order.k_max {
            let label = format!("cm n={n}");
            match cm_derivative(p, x, n, policy) {
                Ok((deriv, err)) => {
                    let signed = if n % 2 == 0 { deriv } else { -deriv };
                    let budget = err + BUDGET_SLACK;
                    cases.push(margin_case(&label, p.q(), x, signed + budget, budget));
                }
                Err(_) => cases.push(failed_case(&label, p.q(), x)),
            }
        }
    }

    // spot-check the analytic derivatives against finite differences of
    // the next-lower analytic order
    let spot = GridSpec::new(2.0, 15.0, 10, Spacing::Logarithmic)?;
    for &x in &spot.points() {
        for n in 1..=order.k_max {
            let label = format!("cm-fd n={n}");
            let analytic = match cm_derivative(p, x, n, policy) {
                Ok(v) => v,
                Err(_) => {
                    cases.push(failed_case(&label, p.q(), x));
                    continue;
                }
            };
            let pc = *p;
            let pol = *policy;
            let f = move |t: f64| -> f64 {
                if n == 1 {
                    theorem1_value(&pc, t, &pol)
                        .map(|c| c.value)
                        .unwrap_or(f64::NAN)
                } else {
                    cm_derivative(&pc, t, n - 1, &pol)
                        .map(|v| v.0)
                        .unwrap_or(f64::NAN)
                }
            };
            let h = fd_step(1, x);
            match finite_difference(f, x, 1, h) {
                Ok(fd) => {
                    let budget = (20.0 * (analytic.1 + BUDGET_SLACK)).max(1e-5);
                    let margin = budget - (analytic.0 - fd).abs();
                    cases.push(margin_case(&label, p.q(), x, margin, budget));
                }
                Err(_) => cases.push(failed_case(&label, p.q(), x)),
            }
        }
    }

    Ok(CheckReport::assemble(
        format!("cm (orders 0..{})", order.k_max),
        p.q(),
        Some(order.k_max),
        cases,
    ))
}

/// Which monotone function a `check_monotone` run exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonotoneFn {
    Phi,
    Varphi,
    PhiSub,
    Theta,
    Remark2,
    Batir,
}

impl MonotoneFn {
    fn label(&self) -> &'static str {
        match self {
            MonotoneFn::Phi => "monotone phi",
            MonotoneFn::Varphi => "monotone varphi",
            MonotoneFn::PhiSub => "monotone phi_sub",
            MonotoneFn::Theta => "monotone theta",
            MonotoneFn::Remark2 => "monotone remark2",
            MonotoneFn::Batir => "monotone batir",
        }
    }

    fn eval(&self, p: &QParam, x: f64, policy: &SeriesPolicy) -> Result<Certified> {
        match self {
            MonotoneFn::Phi => theorem2_value(Theorem2Kind::PhiSuper, p, x, policy),
            MonotoneFn::Varphi => theorem2_value(Theorem2Kind::VarphiSuper, p, x, policy),
            MonotoneFn::PhiSub => theorem2_value(Theorem2Kind::PhiSub, p, x, policy),
            MonotoneFn::Theta => theorem2_value(Theorem2Kind::ThetaSub, p, x, policy),
            MonotoneFn::Remark2 => remark2_value(p, x, policy),
            MonotoneFn::Batir => batir_function(x),
        }
    }

    /// Branch the function is defined on; None means any q.
    fn required_branch(&self) -> Option<crate::qcore::Branch> {
        match self {
            MonotoneFn::Phi | MonotoneFn::Varphi => Some(crate::qcore::Branch::SuperUnit),
            MonotoneFn::PhiSub | MonotoneFn::Theta => Some(crate::qcore::Branch::SubUnit),
            MonotoneFn::Remark2 | MonotoneFn::Batir => None,
        }
    }
}

/// Assert that consecutive grid values are nondecreasing within the
/// combined error budget: f(x_{i+1}) >= f(x_i) - budget.
pub fn check_monotone(
    fn_id: MonotoneFn,
    p: &QParam,
    grid: &GridSpec,
    policy: &SeriesPolicy,
) -> Result<CheckReport> {
    if let Some(b) = fn_id.required_branch() {
        if p.branch() != b {
            return Err(Error::BranchMismatch {
                expected: fn_id.label(),
                got: p.branch(),
            });
        }
    }
    let pts = grid.points();
    let label = fn_id.label();
    let mut cases = Vec::new();
    let mut prev: Option<Certified> = match fn_id.eval(p, pts[0], policy) {
        Ok(c) => Some(c),
        Err(_) => {
            cases.push(failed_case(label, p.q(), pts[0]));
            None
        }
    };
    for &x in &pts[1..] {
        match (fn_id.eval(p, x, policy), prev) {
            (Ok(cur), Some(pv)) => {
                let budget = pv.err_bound + cur.err_bound + BUDGET_SLACK;
                let margin = cur.value - pv.value + budget;
                cases.push(margin_case(label, p.q(), x, margin, budget));
                prev = Some(cur);
            }
            (Ok(cur), None) => prev = Some(cur),
            (Err(_), _) => {
                cases.push(failed_case(label, p.q(), x));
                prev = None;
            }
        }
    }
    Ok(CheckReport::assemble(label, p.q(), None, cases))
}

/// Assert the strict sandwich lower < psi_q < upper at every grid point
/// (budget-adjusted), plus the two best-possible-constant probes:
/// lower gap at x = 1e-3 and upper gap at x = 50, each below 0.02.
pub fn check_sandwich(p: &QParam, grid: &GridSpec, policy: &SeriesPolicy) -> Result<CheckReport> {
    if p.is_classical() {
        return Err(Error::BranchMismatch {
            expected: "q != 1",
            got: p.branch(),
        });
    }
    let psi_one_err = q_digamma(p, 1.0, policy)
        .map(|c| c.err_bound)
        .unwrap_or(0.0);
    let mut cases = Vec::new();
    for &x in &grid.points() {
        match (digamma_bounds(p, x, policy), q_digamma(p, x, policy)) {
            (Ok(b), Ok(v)) => {
                let budget = v.err_bound + psi_one_err + BUDGET_SLACK;
                let gap = (v.value - b.lower).min(b.upper - v.value);
                cases.push(margin_case("sandwich", p.q(), x, gap + budget, budget));
            }
            _ => cases.push(failed_case("sandwich", p.q(), x)),
        }
    }
    // sharpness probes
    let probes = [
        ("sharp lower-gap", SHARPNESS_LOW_X, true),
        ("sharp upper-gap", SHARPNESS_HIGH_X, false),
    ];
    for (label, x, low) in probes {
        match (digamma_bounds(p, x, policy), q_digamma(p, x, policy)) {
            (Ok(b), Ok(v)) => {
                let gap = if low {
                    v.value - b.lower
                } else {
                    b.upper - v.value
                };
                let margin = SHARPNESS_THRESHOLD - gap;
                cases.push(margin_case(label, p.q(), x, margin, SHARPNESS_THRESHOLD));
            }
            _ => cases.push(failed_case(label, p.q(), x)),
        }
    }
    Ok(CheckReport::assemble("sandwich", p.q(), None, cases))
}

/// Closed form of psi_q^{(k)}(x+1) - psi_q^{(k)}(x) for k = 0, 1, 2,
/// valid on both branches (u = q^x):
///   k=0:  (ln q)   u/(u-1)
///   k=1: -(ln q)^2 u/(u-1)^2
///   k=2:  (ln q)^3 u(u+1)/(u-1)^3
fn difference_closed_form(p: &QParam, x: f64, k: u32) -> f64 {
    let l = p.ln_q();
    let u = (x * l).exp();
    let d = u - 1.0;
    match k {
        0 => l * u / d,
        1 => -l * l * u / (d * d),
        _ => l * l * l * u * (u + 1.0) / (d * d * d),
    }
}

/// Residuals of the proven identities on the grid:
/// (a) the log-gamma reflection, (b) the psi / psi' / psi'' reflection
/// triple, (c)+(d) the difference equations for k = 1, 2, 3, and
/// (e) the exp-identity behind the monotone functions.
pub fn check_identities(p: &QParam, grid: &GridSpec, policy: &SeriesPolicy) -> Result<CheckReport> {
    if p.is_classical() {
        return Err(Error::BranchMismatch {
            expected: "q != 1",
            got: p.branch(),
        });
    }
    let recip = p.reciprocal();
    let sub = if p.branch() == crate::qcore::Branch::SubUnit {
        *p
    } else {
        recip
    };
    let sup = sub.reciprocal();
    let mut cases = Vec::new();

    for &x in &grid.points() {
        // (a) ln Gamma_q(x) = (x-1)(x-2)/2 ln q + ln Gamma_{1/q}(x),
        //     with the generalized binomial (x-1)(x-2)/2
        match (log_q_gamma(p, x, policy), log_q_gamma(&recip, x, policy)) {
            (Ok(a), Ok(b)) => {
                let resid = a.value - ((x - 1.0) * (x - 2.0) / 2.0 * p.ln_q() + b.value);
                let budget = a.err_bound + b.err_bound + BUDGET_SLACK;
                cases.push(margin_case(
                    "id-a gamma-reflection",
                    p.q(),
                    x,
                    budget - resid.abs(),
                    budget,
                ));
            }
            _ => cases.push(failed_case("id-a gamma-reflection", p.q(), x)),
        }

        // (b) reflection triple between the two branches
        let triple: [(&str, u32); 3] = [
            ("id-b psi-reflection", 0),
            ("id-b psi1-reflection", 1),
            ("id-b psi2-reflection", 2),
        ];
        for (label, m) in triple {
            let lhs = q_polygamma(&sub, DerivOrder::new(m), x, policy);
            let rhs = q_polygamma(&sup, DerivOrder::new(m), x, policy);
            match (lhs, rhs) {
                (Ok(a), Ok(b)) => {
                    let linear = match m {
                        0 => sub.ln_q() * (x - 1.5),
                        1 => sub.ln_q(),
                        _ => 0.0,
                    };
                    let resid = a.value - linear - b.value;
                    let budget = a.err_bound + b.err_bound + BUDGET_SLACK;
                    cases.push(margin_case(label, p.q(), x, budget - resid.abs(), budget));
                }
                _ => cases.push(failed_case(label, p.q(), x)),
            }
        }

        // (c)+(d) difference equations, k = 1, 2, 3
        let diffs: [(&str, u32); 3] = [
            ("id-c psi-diff", 0),
            ("id-d psi1-diff", 1),
            ("id-d psi2-diff", 2),
        ];
        for (label, m) in diffs {
            let hi = q_polygamma(p, DerivOrder::new(m), x + 1.0, policy);
            let lo = q_polygamma(p, DerivOrder::new(m), x, policy);
            match (hi, lo) {
                (Ok(a), Ok(b)) => {
                    let resid = a.value - b.value - difference_closed_form(p, x, m);
                    let budget = a.err_bound + b.err_bound + BUDGET_SLACK;
                    cases.push(margin_case(label, p.q(), x, budget - resid.abs(), budget));
                }
                _ => cases.push(failed_case(label, p.q(), x)),
            }
        }

        // (e) exp(phi/Phi) equals the difference of exponentials
        let (label, kind, linear) = match p.branch() {
            crate::qcore::Branch::SubUnit => {
                ("id-e exp-phi-sub", Theorem2Kind::PhiSub, -p.ln_q() * x)
            }
            _ => ("id-e exp-phi", Theorem2Kind::PhiSuper, 0.0),
        };
        let phi = theorem2_value(kind, p, x, policy);
        let hi = q_digamma(p, x + 1.0, policy);
        let lo = q_digamma(p, x, policy);
        match (phi, hi, lo) {
            (Ok(f), Ok(a), Ok(b)) => {
                let lhs = f.value.exp();
                let ea = (a.value + linear).exp();
                let eb = (b.value + linear).exp();
                let resid = lhs - (ea - eb);
                // err(e^t) = e^t (series err + eps |t|): the exponent is
                // itself a rounded quantity, and exp amplifies that
                let amp = |v: f64, t: f64, e: f64| v * (e + f64::EPSILON * t.abs());
                let budget = 2.0
                    * (amp(lhs, f.value, f.err_bound)
                        + amp(ea, a.value + linear, a.err_bound)
                        + amp(eb, b.value + linear, b.err_bound))
                    + BUDGET_SLACK;
                cases.push(margin_case(label, p.q(), x, budget - resid.abs(), budget));
            }
            _ => cases.push(failed_case(label, p.q(), x)),
        }
    }

    Ok(CheckReport::assemble("identities", p.q(), None, cases))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::classify;

    fn policy() -> SeriesPolicy {
        SeriesPolicy::default()
    }

    #[test]
    fn grid_points_are_deterministic_and_increasing() {
        let g = GridSpec::new(0.05, 30.0, 64, Spacing::Logarithmic).unwrap();
        let a = g.points();
        let b = g.points();
        assert_eq!(a, b);
        assert!(a.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(a[0], 0.05);
        assert_eq!(a[63], 30.0);

        let lin = GridSpec::new(1.0, 2.0, 3, Spacing::Linear)
            .unwrap()
            .points();
        assert_eq!(lin, vec![1.0, 1.5, 2.0]);
    }

    #[test]
    fn grid_rejects_bad_specs() {
        assert!(GridSpec::new(0.0, 1.0, 4, Spacing::Linear).is_err());
        assert!(GridSpec::new(2.0, 1.0, 4, Spacing::Linear).is_err());
        assert!(GridSpec::new(1.0, 2.0, 1, Spacing::Linear).is_err());
    }

    #[test]
    fn cm_order_capped() {
        assert!(CMOrder::new(4).is_ok());
        assert!(CMOrder::new(5).is_err());
    }

    #[test]
    fn report_ordering_is_deterministic() {
        let cases = vec![
            margin_case("b", 2.0, 1.0, 1.0, 0.1),
            margin_case("a", 2.0, 2.0, 2.0, 0.1),
            margin_case("a", 2.0, 1.0, -1.0, 0.1),
        ];
        let r = CheckReport::assemble("t", 2.0, None, cases);
        assert_eq!(r.cases[0].label, "a");
        assert_eq!(r.cases[0].x, 1.0);
        assert_eq!(r.cases[1].x, 2.0);
        assert_eq!(r.cases[2].label, "b");
        assert_eq!(r.worst_margin, -1.0);
        assert!(!r.passed);
        // byte-identical serialization for identical inputs
        let r2 = CheckReport::assemble(
            "t",
            2.0,
            None,
            vec![
                margin_case("a", 2.0, 1.0, -1.0, 0.1),
                margin_case("b", 2.0, 1.0, 1.0, 0.1),
                margin_case("a", 2.0, 2.0, 2.0, 0.1),
            ],
        );
        assert_eq!(r.to_json(), r2.to_json());
    }

    #[test]
    fn cm_check_passes_both_branches() {
        let grid = GridSpec::new(0.1, 10.0, 12, Spacing::Logarithmic).unwrap();
        for &q in &[0.5, 2.0] {
            let p = classify(q).unwrap();
            let r = check_cm_theorem1(&p, &grid, CMOrder::new(2).unwrap(), &policy()).unwrap();
            assert!(r.passed, "q={q}: worst {}", r.worst_margin);
        }
    }

    #[test]
    fn cm_positivity_near_classical() {
        // order 0 stays positive as q -> 1, matching the classical
        // inequality psi'' + (psi')^2 > 0
        let grid = GridSpec::new(0.5, 10.0, 8, Spacing::Logarithmic).unwrap();
        for &q in &[0.999, 1.001] {
            let p = classify(q).unwrap();
            let r = check_cm_theorem1(&p, &grid, CMOrder::new(0).unwrap(), &policy()).unwrap();
            assert!(r.passed, "q={q}: worst {}", r.worst_margin);
        }
    }

    #[test]
    fn cm_margins_monotone_in_budget() {
        // enlarging every budget can only raise margins, never flip pass -> fail
        let grid = GridSpec::new(0.5, 5.0, 6, Spacing::Logarithmic).unwrap();
        let p = classify(2.0).unwrap();
        let r = check_cm_theorem1(&p, &grid, CMOrder::new(1).unwrap(), &policy()).unwrap();
        for c in &r.cases {
            let inflated = c.margin + 10.0 * c.err_budget;
            assert!(!c.pass || inflated >= 0.0);
        }
    }

    #[test]
    fn monotone_check_all_functions() {
        let grid = GridSpec::new(0.05, 30.0, 40, Spacing::Logarithmic).unwrap();
        let sup = classify(2.0).unwrap();
        let sub = classify(0.5).unwrap();
        for (f, p) in [
            (MonotoneFn::Phi, sup),
            (MonotoneFn::Varphi, sup),
            (MonotoneFn::PhiSub, sub),
            (MonotoneFn::Theta, sub),
            (MonotoneFn::Remark2, sup),
            (MonotoneFn::Batir, sub),
        ] {
            let r = check_monotone(f, &p, &grid, &policy()).unwrap();
            assert!(r.passed, "{:?}: worst {}", f, r.worst_margin);
        }
    }

    #[test]
    fn monotone_check_rejects_wrong_branch() {
        let sup = classify(2.0).unwrap();
        let grid = GridSpec::default_log();
        assert!(matches!(
            check_monotone(MonotoneFn::PhiSub, &sup, &grid, &policy()),
            Err(Error::BranchMismatch { .. })
        ));
    }

    #[test]
    fn sandwich_check_passes() {
        let grid = GridSpec::default_log();
        for &q in &[0.5, 2.0, 5.0] {
            let p = classify(q).unwrap();
            let r = check_sandwich(&p, &grid, &policy()).unwrap();
            assert!(r.passed, "q={q}: worst {}", r.worst_margin);
        }
    }

    #[test]
    fn identities_check_passes() {
        let grid = GridSpec::new(0.05, 30.0, 25, Spacing::Logarithmic).unwrap();
        for &q in &[0.5, 2.0] {
            let p = classify(q).unwrap();
            let r = check_identities(&p, &grid, &policy()).unwrap();
            assert!(r.passed, "q={q}: worst {}", r.worst_margin);
        }
    }

    #[test]
    fn derivative_consistency_digamma_vs_trigamma() {
        // central difference of psi_q matches psi'_q within
        // max(1e-6, 10 * combined err bounds) at every grid point
        let grid = GridSpec::new(1.5, 12.0, 16, Spacing::Logarithmic).unwrap();
        for &q in &[0.5, 2.0] {
            let p = classify(q).unwrap();
            for &x in &grid.points() {
                let fd = finite_difference(
                    |t| q_digamma(&p, t, &policy()).unwrap().value,
                    x,
                    1,
                    fd_step(1, x),
                )
                .unwrap();
                let tri = q_polygamma(&p, DerivOrder::new(1), x, &policy()).unwrap();
                let psi = q_digamma(&p, x, &policy()).unwrap();
                let thr = (10.0 * (tri.err_bound + psi.err_bound)).max(1e-6);
                assert!(
                    (fd - tri.value).abs() < thr,
                    "q={q} x={x}: fd {fd} vs analytic {}",
                    tri.value
                );
            }
        }
    }

    #[test]
    fn impossible_tolerance_fails_cases_not_errors() {
        let grid = GridSpec::new(0.5, 5.0, 4, Spacing::Logarithmic).unwrap();
        let p = classify(0.9).unwrap();
        let tight = SeriesPolicy::new(1e-30, 1e-320, 3).unwrap();
        let r = check_monotone(MonotoneFn::Theta, &p, &grid, &tight).unwrap();
        assert!(!r.passed);
        assert!(r.cases.iter().all(|c| !c.pass));
    }
}
