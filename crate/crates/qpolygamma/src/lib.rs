//! Certified evaluation of q-gamma and q-polygamma functions on all
//! parameter branches, the completely monotonic combinations of the
//! q-trigamma and q-tetragamma, the monotone functions and sharp double
//! bounds they imply, and a grid-based verification engine for every
//! proven inequality and identity.
//!
//! Every series evaluation returns a [`qcore::Certified`] value carrying
//! a rigorous truncation-tail bound; verification suites turn those
//! bounds into per-case margins and machine-readable reports.
//!
//! The `examples/` directory walks through each capability; the thin
//! `qpg` binary exposes the same operations as `eval`, `table`,
//! `verify`, and `bounds` subcommands.

pub mod cli;
pub mod error;
pub mod qcore;
pub mod theorems;
pub mod verify;

pub use error::{Error, Result};
pub use qcore::{
    classify, digamma_classical, log_gamma_classical, log_q_gamma, polygamma_classical, q_digamma,
    q_polygamma, reflect_digamma, Branch, Certified, DerivOrder, QParam, SeriesPolicy,
};
pub use theorems::{
    antisymmetric_coeff_sum, batir_function, c_coeff, digamma_bounds, proof_inequality_sides,
    remark2_value, series_identity_lhs, theorem1_value, theorem2_value, BoundsPair, Theorem2Kind,
};
pub use verify::{
    check_cm_theorem1, check_identities, check_monotone, check_sandwich, fd_step,
    finite_difference, CMOrder, CheckCase, CheckReport, GridSpec, MonotoneFn, Spacing,
};
