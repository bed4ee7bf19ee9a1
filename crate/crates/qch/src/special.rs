//! Conformal special functions on the unit disk.
//!
//! This module implements the classical function chain
//!
//! ```text
//! K(k)  →  μ(r)  →  ψ(d), λ(K)
//! ```
//!
//! where `K` is the complete elliptic integral of the first kind (modulus
//! convention, DLMF §19.2), `μ` is the Grötzsch ring modulus
//!
//! ```text
//! μ(r) = (π/2) · K(√(1−r²)) / K(r),             0 < r < 1,
//! ```
//!
//! `ψ` is Teichmüller's extremal distortion function
//!
//! ```text
//! ψ(d) = coth²( π² / (4 μ(e^{−d})) ),           d ≥ 0,
//! ```
//!
//! and `λ` is the boundary quasisymmetry modulus of a `K`-quasiconformal
//! self-map of the disk,
//!
//! ```text
//! λ(K) = 1 / μ⁻¹(πK/2)² − 1,                    K ≥ 1.
//! ```
//!
//! Everything reduces to the arithmetic–geometric mean: `K(k) =
//! π / (2·agm(1, √(1−k²)))` (DLMF 19.8.5), so `μ` is evaluated as the
//! AGM ratio `(π/2)·agm(1, √(1−r²))/agm(1, r)`. That form stays accurate
//! for `r` within a few hundred orders of magnitude of zero, where the
//! textbook quotient of two elliptic integrals would lose half its digits
//! to the cancellation in `1 − k²`. For `r > 1/√2` the reflection identity
//! `μ(r)·μ(√(1−r²)) = π²/4` routes the evaluation through the
//! well-conditioned small-argument branch.

use crate::error::{Error, Result};
use crate::solve::{find_root, Bracket};
use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

/// Natural log of 4, the constant in the small-`r` expansion
/// `μ(r) = log(4/r) + O(r²)`.
pub(crate) const LN_4: f64 = 1.386_294_361_119_890_6;

/// Iteration cap for the AGM loop. Quadratic convergence reaches machine
/// precision from any start in well under 32 steps; extremely unbalanced
/// inputs (`b ~ 1e-300`) need ~14.
const AGM_MAX_ITERATIONS: usize = 64;

/// Relative gap at which the AGM iteration stops; one step beyond this the
/// iterates agree to full f64 precision.
const AGM_RELATIVE_TOLERANCE: f64 = 1e-15;

/// Smallest radius the inverse modulus will return; below this the AGM
/// ratio runs into the subnormal range.
const MU_INV_R_MIN: f64 = 1e-300;

/// Largest radius the inverse modulus will return (the next f64 below 1).
const MU_INV_R_MAX: f64 = 1.0 - 1e-16;

/// Residual tolerance for the inverse modulus root search.
const MU_INV_TOLERANCE: f64 = 1e-13;

// ---------------------------------------------------------------------------
// Validated scalar wrappers
// ---------------------------------------------------------------------------

/// A radius in the open unit interval `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct UnitRadius(f64);

impl UnitRadius {
    /// Validates `0 < r < 1`.
    pub fn new(r: f64) -> Result<Self> {
        if r.is_finite() && r > 0.0 && r < 1.0 {
            Ok(UnitRadius(r))
        } else {
            Err(Error::domain(
                "UnitRadius::new",
                format!("radius must lie in (0, 1), got {r}"),
            ))
        }
    }

    /// Raw value.
    pub fn get(self) -> f64 {
        self.0
    }
}

/// A positive conformal modulus, the value space of `μ`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ModulusValue(f64);

impl ModulusValue {
    /// Validates `m > 0`.
    pub fn new(m: f64) -> Result<Self> {
        if m.is_finite() && m > 0.0 {
            Ok(ModulusValue(m))
        } else {
            Err(Error::domain(
                "ModulusValue::new",
                format!("modulus must be positive and finite, got {m}"),
            ))
        }
    }

    /// Raw value.
    pub fn get(self) -> f64 {
        self.0
    }
}

/// A quasiconformal dilatation, `K ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Dilatation(f64);

impl Dilatation {
    /// Validates `K ≥ 1`.
    pub fn new(k: f64) -> Result<Self> {
        if k.is_finite() && k >= 1.0 {
            Ok(Dilatation(k))
        } else {
            Err(Error::domain(
                "Dilatation::new",
                format!("dilatation must satisfy K >= 1, got {k}"),
            ))
        }
    }

    /// Wraps a computed bound that is `≥ 1` mathematically but may sit a
    /// few ulp below 1 after rounding; such values are clamped to exactly 1.
    pub(crate) fn from_computed(k: f64) -> Self {
        debug_assert!(
            k > 1.0 - 1e-9,
            "computed dilatation {k} is not within rounding of 1"
        );
        Dilatation(if k < 1.0 { 1.0 } else { k })
    }

    /// Raw value.
    pub fn get(self) -> f64 {
        self.0
    }
}

/// A hyperbolic distance, `d ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct HyperbolicDistance(f64);

impl HyperbolicDistance {
    /// Validates `d ≥ 0`.
    pub fn new(d: f64) -> Result<Self> {
        if d.is_finite() && d >= 0.0 {
            Ok(HyperbolicDistance(d))
        } else {
            Err(Error::domain(
                "HyperbolicDistance::new",
                format!("distance must be non-negative and finite, got {d}"),
            ))
        }
    }

    /// Raw value.
    pub fn get(self) -> f64 {
        self.0
    }
}

// ---------------------------------------------------------------------------
// Arithmetic–geometric mean and the elliptic integral
// ---------------------------------------------------------------------------

/// Arithmetic–geometric mean of `a ≥ b ≥ 0`.
///
/// The iteration `a ← (a+b)/2`, `b ← √(ab)` converges quadratically; the
/// common limit is returned once the pair agrees to relative precision
/// [`AGM_RELATIVE_TOLERANCE`].
fn agm(a0: f64, b0: f64) -> f64 {
    debug_assert!(a0 >= b0 && b0 >= 0.0);
    if b0 == 0.0 {
        return 0.0;
    }
    let (mut a, mut b) = (a0, b0);
    let mut iterations = 0;
    while (a - b).abs() > AGM_RELATIVE_TOLERANCE * a && iterations < AGM_MAX_ITERATIONS {
        let arithmetic = 0.5 * (a + b);
        let geometric = (a * b).sqrt();
        a = arithmetic;
        b = geometric;
        iterations += 1;
    }
    0.5 * (a + b)
}

/// Complete elliptic integral of the first kind as a function of the
/// modulus `k` (DLMF 19.2.8):
///
/// ```text
/// K(k) = ∫₀^{π/2} dθ / √(1 − k² sin²θ) = π / (2 · agm(1, √(1−k²))).
/// ```
///
/// The complement `√(1−k²)` is computed as `√((1−k)(1+k))` so that moduli
/// close to 1 keep full precision in `1−k`. Valid for `0 ≤ k < 1`; the
/// logarithmic singularity at `k = 1` is outside the domain.
///
/// ```
/// let k = qch::special::elliptic_k(0.0).unwrap();
/// assert!((k - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
/// ```
pub fn elliptic_k(k: f64) -> Result<f64> {
    if !(k.is_finite() && (0.0..1.0).contains(&k)) {
        return Err(Error::domain(
            "elliptic_k",
            format!("modulus must lie in [0, 1), got {k}"),
        ));
    }
    let complement = ((1.0 - k) * (1.0 + k)).sqrt();
    Ok(FRAC_PI_2 / agm(1.0, complement))
}

// ---------------------------------------------------------------------------
// Grötzsch ring modulus
// ---------------------------------------------------------------------------

/// `μ(r)` on raw floats; assumes `0 < r < 1`.
pub(crate) fn mu_raw(r: f64) -> f64 {
    debug_assert!(r > 0.0 && r < 1.0);
    if r <= FRAC_1_SQRT_2 {
        mu_direct(r)
    } else {
        // Reflection identity μ(r)·μ(√(1−r²)) = π²/4; the complement is
        // below 1/√2, where the direct AGM ratio is well conditioned.
        let complement = ((1.0 - r) * (1.0 + r)).sqrt();
        PI * PI / (4.0 * mu_direct(complement))
    }
}

/// Direct AGM-ratio evaluation of `μ`, accurate for `r ≤ 1/√2`:
/// `μ(r) = (π/2) · agm(1, √(1−r²)) / agm(1, r)`.
fn mu_direct(r: f64) -> f64 {
    let complement = ((1.0 - r) * (1.0 + r)).sqrt();
    FRAC_PI_2 * agm(1.0, complement) / agm(1.0, r)
}

/// Grötzsch ring modulus
///
/// ```text
/// μ(r) = (π/2) · K(√(1−r²)) / K(r),
/// ```
///
/// the conformal modulus of the unit disk slit along `[0, r]`. Strictly
/// decreasing, with `μ(1/√2) = π/2`, the reflection identity
/// `μ(r)·μ(√(1−r²)) = π²/4`, and the expansion `μ(r) = log(4/r) + O(r²)`
/// as `r → 0`.
pub fn grotzsch_mu(r: UnitRadius) -> ModulusValue {
    ModulusValue(mu_raw(r.get()))
}

/// `μ⁻¹(y)` on raw floats; assumes `y > 0`.
///
/// The search runs in `t = log r`, where `μ(e^t) ≈ log 4 − t` is nearly
/// affine for small radii and the secant step converges in a handful of
/// iterations.
fn mu_inv_raw(y: f64) -> f64 {
    debug_assert!(y > 0.0);
    // Seed from the asymptotic inverse r ≈ 4e^{−y}, bracketed a factor of
    // two either side and clamped into the representable open interval.
    let seed = 4.0 * (-y).exp();
    let mut lo = (0.5 * seed).clamp(MU_INV_R_MIN, 0.5 * MU_INV_R_MAX);
    let mut hi = (2.0 * seed).clamp(2.0 * MU_INV_R_MIN, MU_INV_R_MAX);

    // Widen geometrically until the bracket straddles y (μ is decreasing:
    // the low radius must give μ ≥ y, the high radius μ ≤ y).
    let mut f_lo = mu_raw(lo) - y;
    let mut attempts = 0;
    while f_lo < 0.0 && attempts < 600 {
        lo = (0.25 * lo).max(MU_INV_R_MIN);
        f_lo = mu_raw(lo) - y;
        if lo == MU_INV_R_MIN {
            break;
        }
        attempts += 1;
    }
    let mut f_hi = mu_raw(hi) - y;
    attempts = 0;
    while f_hi > 0.0 && attempts < 60 {
        hi = (1.0 - 0.25 * (1.0 - hi)).min(MU_INV_R_MAX);
        f_hi = mu_raw(hi) - y;
        if hi == MU_INV_R_MAX {
            break;
        }
        attempts += 1;
    }

    // Targets beyond the radii representable in f64: return the endpoint.
    // (y > μ(1e-300) ≈ 692 or y < μ(1−1e-16) ≈ 0.127.)
    if f_lo < 0.0 {
        return lo;
    }
    if f_hi > 0.0 {
        return hi;
    }

    let objective = |t: f64| mu_raw(t.exp().clamp(MU_INV_R_MIN, MU_INV_R_MAX)) - y;
    let bracket = match Bracket::from_values(lo.ln(), hi.ln(), f_lo, f_hi) {
        Ok(bracket) => bracket,
        Err(_) => return 0.5 * (lo + hi), // endpoints already agree to rounding
    };
    match find_root(objective, bracket, MU_INV_TOLERANCE) {
        Ok(result) => result.root.exp().clamp(MU_INV_R_MIN, MU_INV_R_MAX),
        Err(_) => 0.5 * (lo + hi), // unreachable: bisection always collapses the width
    }
}

/// Inverse of the Grötzsch modulus: the radius `r` with `μ(r) = y`.
///
/// The residual `|μ(r) − y|` is at most `1e-12` whenever that precision is
/// attainable at f64 resolution, which covers `y ≳ 0.3`. Closer to the
/// degenerate end (`y → 0`, radii within `~1e-7` of 1) a one-ulp step in
/// `r` already moves `μ` by more than the tolerance, and the best
/// representable radius is returned instead. Targets outside the radii
/// representable in f64 at all clamp to the interval
/// `[1e-300, 1 − 1e-16]`.
pub fn grotzsch_mu_inv(y: ModulusValue) -> UnitRadius {
    UnitRadius(mu_inv_raw(y.get()))
}

// ---------------------------------------------------------------------------
// Teichmüller's distortion function
// ---------------------------------------------------------------------------

/// Hyperbolic cotangent.
fn coth(x: f64) -> f64 {
    1.0 / x.tanh()
}

/// `ψ(d)` on raw floats; assumes `d ≥ 0`.
pub(crate) fn teichmuller_psi_raw(d: f64) -> f64 {
    if d == 0.0 {
        return 1.0;
    }
    // Beyond e^{−d} ~ 1e-260 switch to the exact small-radius expansion
    // μ(e^{−d}) = log 4 + d (the O(r²) correction is far below one ulp).
    let modulus = if d > 600.0 {
        LN_4 + d
    } else {
        mu_raw((-d).exp())
    };
    let c = coth(PI * PI / (4.0 * modulus));
    (c * c).max(1.0)
}

/// Teichmüller's distortion function
///
/// ```text
/// ψ(d) = coth²( π² / (4 μ(e^{−d})) ),
/// ```
///
/// the square of the extremal dilatation needed to move a point of the
/// hyperbolic disk a distance `d` while fixing the boundary. Strictly
/// increasing with `ψ(0) = 1` (the value at 0 is taken by continuity), and
/// by the reflection identity equal to the second form
/// `coth²( μ(√(1 − e^{−2d})) )` — see
/// [`teichmuller_psi_second_form`].
pub fn teichmuller_psi(d: HyperbolicDistance) -> f64 {
    teichmuller_psi_raw(d.get())
}

/// The equivalent complementary-radius form of [`teichmuller_psi`]:
///
/// ```text
/// ψ(d) = coth²( μ(√(1 − e^{−2d})) ).
/// ```
///
/// The two forms are equal by the reflection identity; this evaluation is
/// kept as an independent cross-check path. The complement of the radius
/// `√(1 − e^{−2d})` is carried exactly as `e^{−d}` (rather than recovered
/// from the rounded radius, which would forfeit all precision once
/// `e^{−2d}` drops below one ulp of 1), so the check stays meaningful for
/// every `d` at which `e^{−d}` is a normal f64 (`d ≲ 700`).
pub fn teichmuller_psi_second_form(d: HyperbolicDistance) -> f64 {
    let d = d.get();
    if d == 0.0 {
        return 1.0;
    }
    // μ(r') = (π/2) · agm(1, √(1−r'²)) / agm(1, r') with 1−r'² = e^{−2d}
    // substituted before rounding.
    let radius = (-(-2.0 * d).exp_m1()).sqrt();
    let modulus = FRAC_PI_2 * agm(1.0, (-d).exp()) / agm(1.0, radius.min(1.0));
    let c = coth(modulus);
    (c * c).max(1.0)
}

// ---------------------------------------------------------------------------
// Boundary quasisymmetry
// ---------------------------------------------------------------------------

/// Quasisymmetry modulus of a `K`-quasiconformal self-map of the disk:
///
/// ```text
/// λ(K) = 1 / μ⁻¹(πK/2)² − 1,
/// ```
///
/// strictly increasing with `λ(1) = 1` (since `μ⁻¹(π/2) = 1/√2`). Grows
/// like `e^{πK}/16`; for `K ≳ 220` the value overflows to infinity.
pub fn quasisymmetry_lambda(k: Dilatation) -> f64 {
    let r = mu_inv_raw(FRAC_PI_2 * k.get());
    (1.0 - r * r) / (r * r)
}

/// Inverse of [`quasisymmetry_lambda`]: the dilatation whose
/// quasisymmetry modulus is `lambda`,
///
/// ```text
/// K = (2/π) · μ( √(1/(λ+1)) ),        λ ≥ 1.
/// ```
pub fn dilatation_from_lambda(lambda: f64) -> Result<Dilatation> {
    if !(lambda.is_finite() && lambda >= 1.0) {
        return Err(Error::domain(
            "dilatation_from_lambda",
            format!("quasisymmetry modulus must satisfy lambda >= 1, got {lambda}"),
        ));
    }
    let r = (1.0 / (lambda + 1.0)).sqrt();
    Ok(Dilatation::from_computed((2.0 / PI) * mu_raw(r)))
}
