//! Bracketed root finding: bisection with secant acceleration.
//!
//! The solver is deliberately simple and fully deterministic. Every step
//! keeps a sign-changing bracket, so convergence is guaranteed for any
//! continuous function; secant steps are accepted only when they fall
//! safely inside the current bracket, and a bisection safeguard forces the
//! bracket to at least halve every other iteration.

use crate::error::{Error, Result};

/// Hard cap on solver iterations. Bisection alone resolves any f64
/// bracket to machine width in under 110 halvings, so the cap is never the
/// binding constraint for continuous inputs.
pub const MAX_ITERATIONS: usize = 200;

/// Default residual/width tolerance used by the bound calculators.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// A validated sign-changing interval: `lo < hi` and `f(lo)·f(hi) ≤ 0`.
#[derive(Debug, Clone, Copy)]
pub struct Bracket {
    lo: f64,
    hi: f64,
    f_lo: f64,
    f_hi: f64,
}

impl Bracket {
    /// Evaluates `f` at both endpoints and validates the sign change.
    pub fn new(f: impl Fn(f64) -> f64, lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) || lo >= hi {
            return Err(Error::domain(
                "Bracket::new",
                format!("endpoints must be finite with lo < hi, got [{lo}, {hi}]"),
            ));
        }
        let f_lo = f(lo);
        let f_hi = f(hi);
        Self::from_values(lo, hi, f_lo, f_hi)
    }

    /// Builds a bracket from already-evaluated endpoint values.
    pub fn from_values(lo: f64, hi: f64, f_lo: f64, f_hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) || lo >= hi {
            return Err(Error::domain(
                "Bracket::from_values",
                format!("endpoints must be finite with lo < hi, got [{lo}, {hi}]"),
            ));
        }
        if !(f_lo.is_finite() && f_hi.is_finite()) || f_lo * f_hi > 0.0 {
            return Err(Error::NoSignChange { lo, hi, f_lo, f_hi });
        }
        Ok(Bracket { lo, hi, f_lo, f_hi })
    }

    /// Lower endpoint.
    pub fn lo(&self) -> f64 {
        self.lo
    }

    /// Upper endpoint.
    pub fn hi(&self) -> f64 {
        self.hi
    }
}

/// Outcome of a successful root search.
#[derive(Debug, Clone, Copy)]
pub struct RootResult {
    /// Abscissa of the accepted root.
    pub root: f64,
    /// Function value at `root`.
    pub residual: f64,
    /// Number of function evaluations spent inside the iteration loop.
    pub iterations: usize,
}

/// Finds a root of `f` inside `bracket`.
///
/// Returns as soon as `|f(x)| ≤ tol` or the bracket width drops to `tol`
/// (or to machine resolution); the better of the two candidates seen so
/// far is reported. Secant steps accelerate convergence on smooth
/// functions; a forced bisection every time the bracket fails to halve
/// keeps the worst case logarithmic.
pub fn find_root(f: impl Fn(f64) -> f64, bracket: Bracket, tol: f64) -> Result<RootResult> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::domain(
            "find_root",
            format!("tolerance must be positive and finite, got {tol}"),
        ));
    }

    let Bracket {
        mut lo,
        mut hi,
        mut f_lo,
        mut f_hi,
    } = bracket;

    if f_lo == 0.0 {
        return Ok(RootResult {
            root: lo,
            residual: 0.0,
            iterations: 0,
        });
    }
    if f_hi == 0.0 {
        return Ok(RootResult {
            root: hi,
            residual: 0.0,
            iterations: 0,
        });
    }

    // Best candidate seen so far, by |f|.
    let (mut best_x, mut best_f) = if f_lo.abs() <= f_hi.abs() {
        (lo, f_lo)
    } else {
        (hi, f_hi)
    };
    let mut width_before_two_steps = hi - lo;

    for iteration in 1..=MAX_ITERATIONS {
        let width = hi - lo;

        // Secant proposal from the bracket endpoints, accepted only when it
        // lands strictly inside the bracket; otherwise bisect. Every second
        // iteration that failed to halve the bracket also falls back to
        // bisection so stalled secant runs cannot persist.
        let midpoint = lo + 0.5 * width;
        let force_bisection = iteration % 2 == 0 && width > 0.5 * width_before_two_steps;
        if iteration % 2 == 0 {
            width_before_two_steps = width;
        }
        let secant = hi - f_hi * (hi - lo) / (f_hi - f_lo);
        let x = if !force_bisection && secant.is_finite() && secant > lo && secant < hi {
            secant
        } else {
            midpoint
        };

        let fx = f(x);
        if !fx.is_finite() {
            return Err(Error::domain(
                "find_root",
                format!("function value not finite at x = {x}"),
            ));
        }
        // Ties go to the newest probe: it lies inside the current (nested,
        // shrinking) bracket, so width-converged runs on flat or stepped
        // residuals still report a point from the final bracket.
        if fx.abs() <= best_f.abs() {
            best_x = x;
            best_f = fx;
        }

        if fx == 0.0 || fx.abs() <= tol {
            return Ok(RootResult {
                root: x,
                residual: fx,
                iterations: iteration,
            });
        }

        if fx * f_lo < 0.0 {
            hi = x;
            f_hi = fx;
        } else {
            lo = x;
            f_lo = fx;
        }

        let new_width = hi - lo;
        let machine_width = f64::EPSILON * lo.abs().max(hi.abs()).max(1.0);
        if new_width <= tol || new_width <= machine_width {
            return Ok(RootResult {
                root: best_x,
                residual: best_f,
                iterations: iteration,
            });
        }
    }

    Err(Error::NoConvergence {
        max_iterations: MAX_ITERATIONS,
        residual: best_f,
        width: hi - lo,
    })
}

/// Solves `f(x) = target` for a function monotone on `[lo, hi]`.
///
/// The direction is detected from the endpoint values; targets outside the
/// attained range are rejected rather than extrapolated.
pub fn invert_monotone(
    f: impl Fn(f64) -> f64,
    target: f64,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<f64> {
    if !(lo.is_finite() && hi.is_finite()) || lo >= hi {
        return Err(Error::domain(
            "invert_monotone",
            format!("interval must be finite with lo < hi, got [{lo}, {hi}]"),
        ));
    }
    let f_lo = f(lo);
    let f_hi = f(hi);
    let (range_lo, range_hi) = if f_lo <= f_hi {
        (f_lo, f_hi)
    } else {
        (f_hi, f_lo)
    };
    if !(target >= range_lo && target <= range_hi) {
        return Err(Error::TargetOutOfRange {
            target,
            range_lo,
            range_hi,
        });
    }
    let g = |x: f64| f(x) - target;
    let bracket = Bracket::from_values(lo, hi, f_lo - target, f_hi - target)?;
    Ok(find_root(g, bracket, tol)?.root)
}
