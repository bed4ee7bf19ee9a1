//! Dilatation lower bounds for quasiconformally homogeneous hyperbolic
//! surfaces.
//!
//! A closed hyperbolic surface is K-quasiconformally homogeneous when any
//! point can be carried to any other by a K-quasiconformal self-map; each
//! family of self-maps (finite-order, reducible, pseudo-Anosov, twists
//! about short curves, Torelli classes) forces its own lower bound on K.
//! This crate computes those bounds and the named constants they produce,
//! and re-derives every published constant so the `audit` subcommand can
//! grade the printed values against a fresh computation.
//!
//! Layering, bottom to top:
//!
//! * [`solve`] — bracketed root finding and monotone inversion.
//! * [`special`] — complete elliptic integrals via the arithmetic-
//!   geometric mean, the Grötzsch modulus and its inverse, the extremal
//!   quasiconformal distortion function, and the quasisymmetry bound.
//! * [`geometry`] — genus/area/diameter book-keeping for closed
//!   hyperbolic surfaces and quasi-isometry constants.
//! * [`bounds`] — the dilatation bounds themselves and the solved
//!   constants (orbit counting, finite subgroups, periodic and
//!   pseudo-Anosov classes, multi-twists, torsion-free subgroups, the
//!   Torelli threshold).
//! * [`audit`] — recomputes each published claim and grades it PASS /
//!   FAIL / SENSITIVE.
//! * [`report`] / [`cli`] — text, JSON, and CSV rendering behind the
//!   `qch` binary.

pub mod audit;
pub mod bounds;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod report;
pub mod solve;
pub mod special;

pub use error::{Error, Result};
