//! Invariants of braids built from finite biracks and switches.
//!
//! The crate models finite solutions of the set-theoretic Yang-Baxter
//! equation as validated operation tables ([`algebra`]), lets braid words
//! ([`braidword`]) act on dense color-vector state spaces
//! ([`representation`]), and derives three polynomial invariants from the
//! resulting functional graphs: the braid quiver polynomial ([`quiver`])
//! and two cocycle-weighted polynomials ([`cocycle_quiver`]) backed by
//! birack homology over `Z_m` ([`homology`]).
//!
//! Heavy vertex sweeps run through [`ExecMode`]: data-parallel via rayon
//! when the `parallel` feature (default) is enabled, sequential otherwise.
//! Results are identical in both modes.

pub mod algebra;
pub mod braidword;
pub mod catalog;
pub mod cocycle_quiver;
mod exec;
pub mod formal_poly;
pub mod homology;
pub mod quiver;
pub mod representation;

pub use exec::ExecMode;
