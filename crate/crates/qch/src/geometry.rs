//! Hyperbolic surface geometry: areas, diameters, and length distortion.
//!
//! All formulas live on closed hyperbolic surfaces of genus `g ≥ 2` with
//! curvature −1, where Gauss–Bonnet fixes the total area at `4π(g−1)` and
//! embedded disks of radius `d/2` have area `2π(cosh(d/2) − 1)`. The
//! counting argument connecting the two — `n` disjoint embedded disks must
//! fit inside the surface — produces the minimum-diameter bound
//! [`min_diameter_from_count`] used by the bound calculators.

use crate::error::{Error, Result};
use crate::special::{Dilatation, HyperbolicDistance, LN_4};
use std::f64::consts::PI;

/// Genus of a closed orientable surface, `g ≥ 2` (hyperbolic type).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Genus(u64);

impl Genus {
    /// Validates `g ≥ 2`.
    pub fn new(g: u64) -> Result<Self> {
        if g >= 2 {
            Ok(Genus(g))
        } else {
            Err(Error::domain(
                "Genus::new",
                format!("genus must be at least 2, got {g}"),
            ))
        }
    }

    /// Raw value.
    pub fn get(self) -> u64 {
        self.0
    }

    /// `g − 1` as a float, the factor appearing in every area formula.
    pub(crate) fn gm1(self) -> f64 {
        (self.0 - 1) as f64
    }
}

/// Length of a systole (shortest essential closed geodesic), `ℓ > 0`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct SystoleLength(f64);

impl SystoleLength {
    /// Validates `ℓ > 0`.
    pub fn new(ell: f64) -> Result<Self> {
        if ell.is_finite() && ell > 0.0 {
            Ok(SystoleLength(ell))
        } else {
            Err(Error::domain(
                "SystoleLength::new",
                format!("systole length must be positive and finite, got {ell}"),
            ))
        }
    }

    /// Raw value.
    pub fn get(self) -> f64 {
        self.0
    }
}

/// `arccosh(1 + t)` for `t ≥ 0`, computed as
/// `log1p(t + √(t(t+2)))` so that small excesses keep full relative
/// precision (the textbook `log(x + √(x²−1))` loses half its digits for
/// `x` near 1). Negative rounding fuzz clamps to the boundary value 0.
pub(crate) fn acosh_1p(t: f64) -> f64 {
    let t = t.max(0.0);
    (t + (t * (t + 2.0)).sqrt()).ln_1p()
}

/// Area of an embedded hyperbolic disk of diameter `d`:
/// `2π(cosh(d/2) − 1)`, evaluated as `4π·sinh²(d/4)` so small disks keep
/// relative precision.
pub fn disk_area(d: HyperbolicDistance) -> f64 {
    let s = (0.25 * d.get()).sinh();
    4.0 * PI * s * s
}

/// Gauss–Bonnet area of a closed hyperbolic surface: `4π(g−1)`.
pub fn surface_area(g: Genus) -> f64 {
    4.0 * PI * g.gm1()
}

/// Area of the radius-`c` neighborhood of a closed geodesic of length
/// `ℓ`: `2·ℓ·sinh(c)`.
pub fn neighborhood_area(ell: SystoleLength, c: f64) -> Result<f64> {
    if !(c.is_finite() && c >= 0.0) {
        return Err(Error::domain(
            "neighborhood_area",
            format!("neighborhood radius must be non-negative and finite, got {c}"),
        ));
    }
    Ok(2.0 * ell.get() * c.sinh())
}

/// Smallest possible diameter of `n` disjoint embedded disks on a closed
/// surface of genus `g`:
///
/// ```text
/// d = 2·arccosh( 2(g−1)/n + 1 ),
/// ```
///
/// the diameter at which `n` such disks exactly exhaust the Gauss–Bonnet
/// area. As `n → ∞` the diameter tends to 0; by construction
/// `disk_area(d) · n = surface_area(g)` up to rounding.
pub fn min_diameter_from_count(g: Genus, n: u64) -> Result<HyperbolicDistance> {
    if n == 0 {
        return Err(Error::domain(
            "min_diameter_from_count",
            "disk count must be at least 1",
        ));
    }
    let t = 2.0 * g.gm1() / n as f64;
    HyperbolicDistance::new(2.0 * acosh_1p(t))
}

/// Upper bound for the diameter of a closed hyperbolic surface that is
/// `(K, K·log 4)`-quasi-isometric to one of systole `ℓ`:
/// `K·ℓ + 2K·log 4`.
pub fn diameter_upper_bound(k: Dilatation, ell: SystoleLength) -> f64 {
    k.get() * ell.get() + 2.0 * k.get() * LN_4
}

/// Multiplicative and additive constants `(K, K·log 4)` of the
/// quasi-isometry induced on the hyperbolic plane by lifting a
/// `K`-quasiconformal map.
pub fn quasi_isometry_params(k: Dilatation) -> (f64, f64) {
    (k.get(), k.get() * LN_4)
}

/// Range `[ℓ/K, K·ℓ]` of possible geodesic-length distortion under a
/// `K`-quasiconformal map (Wolpert's bound).
pub fn wolpert_interval(ell: SystoleLength, k: Dilatation) -> (f64, f64) {
    (ell.get() / k.get(), k.get() * ell.get())
}

#[cfg(test)]
// Reference values keep every digit of the high-precision oracle; the
// compiler rounds them to the nearest double.
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;

    fn genus(g: u64) -> Genus {
        Genus::new(g).unwrap()
    }

    fn dist(d: f64) -> HyperbolicDistance {
        HyperbolicDistance::new(d).unwrap()
    }

    #[test]
    fn genus_validates() {
        assert!(Genus::new(0).is_err());
        assert!(Genus::new(1).is_err());
        assert!(Genus::new(2).is_ok());
        assert_eq!(genus(7).get(), 7);
    }

    #[test]
    fn systole_validates() {
        assert!(SystoleLength::new(0.0).is_err());
        assert!(SystoleLength::new(-1.0).is_err());
        assert!(SystoleLength::new(f64::INFINITY).is_err());
        assert!(SystoleLength::new(1e-9).is_ok());
    }

    #[test]
    fn acosh_1p_agrees_with_std_acosh() {
        // Below t ≈ 1e-4 the naive 1 + t loses the low bits of t, so the
        // std comparison is only meaningful from there up.
        for &t in &[1e-4_f64, 0.1, 1.0, 2.0, 50.0] {
            let direct = (1.0 + t).acosh();
            let stable = acosh_1p(t);
            assert!(
                (stable - direct).abs() <= 1e-9 * stable.max(1e-300),
                "t = {t}: {stable} vs {direct}"
            );
        }
        assert_eq!(acosh_1p(0.0), 0.0);
        assert_eq!(acosh_1p(-1e-18), 0.0); // rounding fuzz clamps
    }

    #[test]
    fn acosh_1p_keeps_precision_where_std_acosh_loses_it() {
        // Reference for the exact f64 nearest 1e-8, 60-digit arithmetic.
        let reference = 1.414_213_561_194_583_764_3e-4;
        let stable = acosh_1p(1e-8);
        assert!(
            (stable - reference).abs() <= 1e-14 * reference,
            "{stable} vs {reference}"
        );
    }

    #[test]
    fn disk_area_reference_value() {
        // 2π(cosh(1/2) − 1), mpmath: 0.80189758939934486984.
        let a = disk_area(dist(1.0));
        assert!((a - 0.801_897_589_399_344_9).abs() < 1e-14);
        assert_eq!(disk_area(dist(0.0)), 0.0);
    }

    #[test]
    fn surface_area_is_gauss_bonnet() {
        assert!((surface_area(genus(2)) - 4.0 * PI).abs() < 1e-15);
        assert!((surface_area(genus(11)) - 40.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn neighborhood_area_reference_value() {
        // 2·1·sinh(1), mpmath: 2.3504023872876029138.
        let a = neighborhood_area(SystoleLength::new(1.0).unwrap(), 1.0).unwrap();
        assert!((a - 2.350_402_387_287_603).abs() < 1e-14);
        assert!(neighborhood_area(SystoleLength::new(1.0).unwrap(), -0.1).is_err());
    }

    #[test]
    fn min_diameter_reference_values() {
        // 2·arccosh(43/42) = 0.43557444284025790 (g = 2, n = 84, mpmath).
        let d = min_diameter_from_count(genus(2), 84).unwrap().get();
        assert!((d - 0.435_574_442_840_257_9).abs() < 1e-14);
        // 2·arccosh(6/5) = 1.2447250074295573 (g = 2, n = 10).
        let d = min_diameter_from_count(genus(2), 10).unwrap().get();
        assert!((d - 1.244_725_007_429_557_3).abs() < 1e-14);
    }

    #[test]
    fn min_diameter_rejects_zero_count() {
        assert!(min_diameter_from_count(genus(2), 0).is_err());
    }

    #[test]
    fn min_diameter_vanishes_as_count_grows() {
        let mut previous = f64::INFINITY;
        for &n in &[1u64, 10, 100, 10_000, 1_000_000, 1_000_000_000_000] {
            let d = min_diameter_from_count(genus(2), n).unwrap().get();
            assert!(d < previous);
            previous = d;
        }
        // Asymptotically d ≈ 2√(2t) = 4√((g−1)/n), so 4e-6 at n = 1e12.
        assert!((previous - 4e-6).abs() < 1e-8, "{previous}");
    }

    #[test]
    fn disk_count_times_disk_area_recovers_surface_area() {
        for &(g, n) in &[(2u64, 1u64), (2, 84), (3, 7), (10, 1000), (1000, 123_456)] {
            let g = genus(g);
            let d = min_diameter_from_count(g, n).unwrap();
            let total = disk_area(d) * n as f64;
            let surface = surface_area(g);
            assert!(
                (total - surface).abs() <= 1e-9 * surface,
                "g = {}, n = {n}: {total} vs {surface}",
                g.get()
            );
        }
    }

    #[test]
    fn diameter_bound_and_qi_params_are_consistent() {
        let k = Dilatation::new(2.0).unwrap();
        let ell = SystoleLength::new(0.5).unwrap();
        let (mult, add) = quasi_isometry_params(k);
        assert_eq!(mult, 2.0);
        assert!((add - 2.0 * LN_4).abs() < 1e-15);
        assert!((diameter_upper_bound(k, ell) - (2.0 * 0.5 + 2.0 * add)).abs() < 1e-15);
    }

    #[test]
    fn wolpert_interval_contains_the_unit_distortion() {
        let ell = SystoleLength::new(1.3).unwrap();
        for &k in &[1.0, 1.5, 4.0] {
            let (lo, hi) = wolpert_interval(ell, Dilatation::new(k).unwrap());
            assert!(lo <= ell.get() && ell.get() <= hi);
            assert!((lo * k - ell.get()).abs() < 1e-15);
            assert!((hi / k - ell.get()).abs() < 1e-15);
        }
    }
}
