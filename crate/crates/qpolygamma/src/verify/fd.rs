//! Central finite-difference stencils, used only as cross-check oracles.

use crate::error::{Error, Result};

/// Central-difference approximation of the order-th derivative of `f`
/// at `x` using the standard symmetric stencil. Orders 1-2 use the
/// three-point stencil, orders 3-4 the five-point stencil. The stencil
/// must stay inside (0, inf).
pub fn finite_difference<F>(f: F, x: f64, order: u32, h: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if h <= 0.0 || !h.is_finite() {
        return Err(Error::Domain(format!("step must be positive, got {h}")));
    }
    let half_width = match order {
        1 | 2 => 1.0,
        3 | 4 => 2.0,
        _ => {
            return Err(Error::Domain(format!(
                "finite difference supports orders 1-4, got {order}"
            )))
        }
    };
    if x - half_width * h <= 0.0 {
        return Err(Error::Domain(format!(
            "stencil of half-width {half_width}*{h} leaves (0,inf) at x={x}"
        )));
    }
    let v = match order {
        1 => (f(x + h) - f(x - h)) / (2.0 * h),
        2 => (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h),
        3 => {
            (f(x + 2.0 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2.0 * h)) / (2.0 * h * h * h)
        }
        _ => {
            (f(x + 2.0 * h) - 4.0 * f(x + h) + 6.0 * f(x) - 4.0 * f(x - h) + f(x - 2.0 * h))
                / (h * h * h * h)
        }
    };
    Ok(v)
}

/// Step size for the cross-check stencils. Orders 1-2 use a smaller
/// step than orders 3-4 because the narrow stencil tolerates rounding.
pub fn fd_step(order: u32, x: f64) -> f64 {
    match order {
        1 | 2 => (1e-4 * x).max(1e-5),
        _ => (3e-3 * x).max(1e-3),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_derivative_is_one() {
        let d = finite_difference(|t| t, 3.7, 1, 1e-3).unwrap();
        assert!((d - 1.0).abs() < 1e-10);
    }

    #[test]
    fn exp_second_derivative() {
        let d = finite_difference(|t| t.exp(), 1.0, 2, 1e-3).unwrap();
        assert!((d - std::f64::consts::E).abs() < 1e-6);
    }

    #[test]
    fn cubic_third_derivative() {
        let d = finite_difference(|t| t * t * t, 2.0, 3, 1e-2).unwrap();
        assert!((d - 6.0).abs() < 1e-6);
    }

    #[test]
    fn quartic_fourth_derivative() {
        let d = finite_difference(|t| t.powi(4), 2.0, 4, 1e-2).unwrap();
        assert!((d - 24.0).abs() < 1e-4);
    }

    #[test]
    fn stencil_must_stay_in_domain() {
        assert!(finite_difference(|t| t, 1e-4, 1, 1e-3).is_err());
        assert!(finite_difference(|t| t, 1e-3, 4, 1e-3).is_err());
        assert!(finite_difference(|t| t, 1.0, 5, 1e-3).is_err());
    }
}
