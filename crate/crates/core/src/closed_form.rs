//! Explicit Randić spectra and energies for caterpillars with two or three
//! spine vertices.
//!
//! Double star `T(p, n−p−2)`:
//!
//! ```text
//! σ(Γ_4) = { ±1, ±√( p(n−p−2) / ((p+1)(n−p−1)) ) }
//! RE     = 2 + 2√( p(n−p−2) / ((p+1)(n−p−1)) )
//! ```
//!
//! Three-spine caterpillar `T(p, n−p−q−3, q)`: the pencil factors as
//! `(λ² − 1)(ηλ⁴ − ζλ² + χ)/η` with
//!
//! ```text
//! η = (p+1)(q+1)(n−p−q−1)
//! ζ = (n−p−q−2)(q(2p+1) + p)
//! χ = pq(n−p−q−3)
//! ```
//!
//! and with `α = ζ/2η`, `γ = χ/η`, `β = √(α² − γ)` the nonzero eigenvalues
//! are `±1, ±√(α+β), ±√(α−β)`, so `RE = 2(1 + √(α+β) + √(α−β))`.

use crate::error::{Error, Result};
use crate::math;

/// Rounding slack allowed on `α² − γ` before it is treated as an error.
pub const DISCRIMINANT_SLACK: f64 = 1e-12;

fn double_star_ratio(n: u64, p: u64) -> Result<f64> {
    if n < 4 {
        return Err(Error::OutOfDomain { what: "n", value: n as i64, min: 4, max: i64::MAX });
    }
    if p < 1 || p > n - 3 {
        return Err(Error::OutOfDomain { what: "p", value: p as i64, min: 1, max: n as i64 - 3 });
    }
    let num = p * (n - p - 2);
    let den = (p + 1) * (n - p - 1);
    Ok(num as f64 / den as f64)
}

/// `σ(Γ_4)` of `T(p, n−p−2)` in non-increasing order.
pub fn spectrum_r2(n: u64, p: u64) -> Result<[f64; 4]> {
    let x = math::sqrt(double_star_ratio(n, p)?);
    Ok([1.0, x, -x, -1.0])
}

/// Randić energy of the double star `T(p, n−p−2)`.
pub fn energy_r2(n: u64, p: u64) -> Result<f64> {
    Ok(2.0 + 2.0 * math::sqrt(double_star_ratio(n, p)?))
}

/// Integer coefficients of the biquadratic factor `ηλ⁴ − ζλ² + χ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct R3Coefficients {
    pub eta: i64,
    pub zeta: i64,
    pub chi: i64,
}

impl R3Coefficients {
    /// `ζ² − 4ηχ`, exact.
    pub fn discriminant(&self) -> i128 {
        let (e, z, c) = (self.eta as i128, self.zeta as i128, self.chi as i128);
        z * z - 4 * e * c
    }
}

/// Spine-star sizes `(p, n−p−q−3, q)` must all be at least one.
fn check_r3(n: u64, p: u64, q: u64) -> Result<()> {
    if p < 1 {
        return Err(Error::OutOfDomain { what: "p", value: p as i64, min: 1, max: i64::MAX });
    }
    if q < 1 {
        return Err(Error::OutOfDomain { what: "q", value: q as i64, min: 1, max: i64::MAX });
    }
    if n < p + q + 4 {
        return Err(Error::OutOfDomain {
            what: "n - p - q - 3",
            value: n as i64 - p as i64 - q as i64 - 3,
            min: 1,
            max: i64::MAX,
        });
    }
    Ok(())
}

pub fn r3_coefficients(n: u64, p: u64, q: u64) -> Result<R3Coefficients> {
    check_r3(n, p, q)?;
    let (n, p, q) = (n as i64, p as i64, q as i64);
    Ok(R3Coefficients {
        eta: (p + 1) * (q + 1) * (n - p - q - 1),
        zeta: (n - p - q - 2) * (q * (2 * p + 1) + p),
        chi: p * q * (n - p - q - 3),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct R3SpectralParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl R3SpectralParams {
    /// `√(α+β)`, the larger nontrivial root.
    pub fn upper_root(&self) -> f64 {
        math::sqrt(self.alpha + self.beta)
    }

    /// `√(α−β)`, computed as `√(γ/(α+β))` to avoid cancellation.
    pub fn lower_root(&self) -> f64 {
        let s = self.alpha + self.beta;
        if s > 0.0 { math::sqrt(self.gamma / s) } else { 0.0 }
    }
}

pub fn r3_spectral_params(c: &R3Coefficients) -> Result<R3SpectralParams> {
    if c.eta <= 0 {
        return Err(Error::OutOfDomain { what: "eta", value: c.eta, min: 1, max: i64::MAX });
    }
    let eta = c.eta as f64;
    let alpha = c.zeta as f64 / (2.0 * eta);
    let gamma = c.chi as f64 / eta;
    // α² − γ = (ζ² − 4ηχ) / 4η², with an integer-exact numerator.
    let disc = c.discriminant() as f64 / (4.0 * eta * eta);
    if disc < -DISCRIMINANT_SLACK {
        return Err(Error::NegativeDiscriminant { value: disc });
    }
    let beta = math::sqrt(disc.max(0.0));
    Ok(R3SpectralParams { alpha, beta, gamma })
}

fn params(n: u64, p: u64, q: u64) -> Result<R3SpectralParams> {
    r3_spectral_params(&r3_coefficients(n, p, q)?)
}

/// `σ(Γ_6)` of `T(p, n−p−q−3, q)` in non-increasing order.
pub fn spectrum_r3(n: u64, p: u64, q: u64) -> Result<[f64; 6]> {
    let ps = params(n, p, q)?;
    let (hi, lo) = (ps.upper_root(), ps.lower_root());
    Ok([1.0, hi, lo, -lo, -hi, -1.0])
}

/// Randić energy of `T(p, n−p−q−3, q)`.
pub fn energy_r3(n: u64, p: u64, q: u64) -> Result<f64> {
    let ps = params(n, p, q)?;
    Ok(2.0 * (1.0 + ps.upper_root() + ps.lower_root()))
}

/// `RE/2 − 1 = √(α+β) + √(α−β)` with real-valued `p`, `q`; used to locate
/// the continuous maximizer of a family. Arguments must keep every factor positive.
pub(crate) fn energy_r3_real(n: f64, p: f64, q: f64) -> f64 {
    let eta = (p + 1.0) * (q + 1.0) * (n - p - q - 1.0);
    let zeta = (n - p - q - 2.0) * (q * (2.0 * p + 1.0) + p);
    let chi = p * q * (n - p - q - 3.0);
    let alpha = zeta / (2.0 * eta);
    let gamma = chi / eta;
    let beta = math::sqrt((alpha * alpha - gamma).max(0.0));
    let hi = alpha + beta;
    let lo = if hi > 0.0 { gamma / hi } else { 0.0 };
    2.0 * (1.0 + math::sqrt(hi) + math::sqrt(lo.max(0.0)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_star_spectra() {
        let s = spectrum_r2(6, 2).unwrap();
        let expected = [1.0, 2.0 / 3.0, -2.0 / 3.0, -1.0];
        for (x, e) in s.iter().zip(expected) {
            assert!((x - e).abs() < 1e-15);
        }
        assert_eq!(spectrum_r2(4, 1).unwrap(), [1.0, 0.5, -0.5, -1.0]);
        assert!(spectrum_r2(6, 4).is_err());
        assert!(spectrum_r2(6, 0).is_err());
        assert!(spectrum_r2(3, 1).is_err());
    }

    #[test]
    fn double_star_energies() {
        assert!((energy_r2(6, 2).unwrap() - 10.0 / 3.0).abs() < 1e-15);
        for n in [4u64, 10, 50] {
            let low = 2.0 + math::sqrt(2.0 * (n - 3) as f64 / (n - 2) as f64);
            assert!((energy_r2(n, 1).unwrap() - low).abs() < 1e-14);
        }
        for n in [6u64, 10, 100] {
            let high = 4.0 - 4.0 / n as f64;
            assert!((energy_r2(n, (n - 2) / 2).unwrap() - high).abs() < 1e-14);
        }
        assert!((energy_r2(7, 2).unwrap() - 3.4142136).abs() < 5e-8);
    }

    #[test]
    fn coefficients_by_substitution() {
        assert_eq!(r3_coefficients(9, 1, 1).unwrap(), R3Coefficients { eta: 24, zeta: 20, chi: 4 });
        assert_eq!(r3_coefficients(19, 5, 5).unwrap(), R3Coefficients { eta: 288, zeta: 420, chi: 150 });
        assert_eq!(r3_coefficients(7, 1, 1).unwrap(), R3Coefficients { eta: 16, zeta: 12, chi: 2 });
    }

    #[test]
    fn coefficient_domain() {
        // bare middle vertex (χ = 0)
        assert!(r3_coefficients(8, 2, 3).is_err());
        assert!(r3_coefficients(9, 0, 3).is_err());
        assert!(r3_coefficients(9, 3, 0).is_err());
        assert!(r3_coefficients(6, 1, 1).is_ok());
    }

    #[test]
    fn exact_fraction_params() {
        let ps = r3_spectral_params(&R3Coefficients { eta: 24, zeta: 20, chi: 4 }).unwrap();
        assert!((ps.alpha - 5.0 / 12.0).abs() < 1e-15);
        assert!((ps.gamma - 1.0 / 6.0).abs() < 1e-15);
        assert!((ps.beta - 1.0 / 12.0).abs() < 1e-15);

        let c = r3_coefficients(33, 9, 9).unwrap();
        assert!(c.discriminant() >= 0);
        let ps = r3_spectral_params(&c).unwrap();
        assert!(ps.alpha * ps.alpha - ps.gamma >= -DISCRIMINANT_SLACK);
    }

    #[test]
    fn negative_discriminant_is_an_error() {
        let bad = R3Coefficients { eta: 1, zeta: 1, chi: 1 };
        assert!(matches!(r3_spectral_params(&bad), Err(Error::NegativeDiscriminant { .. })));
    }

    #[test]
    fn smallest_family_member() {
        let s = spectrum_r3(9, 1, 1).unwrap();
        let expected = [1.0, math::sqrt(0.5), math::sqrt(1.0 / 3.0)];
        for (x, e) in s.iter().zip(expected) {
            assert!((x - e).abs() < 1e-15);
        }
        let re = energy_r3(9, 1, 1).unwrap();
        assert!((re - 2.0 * (1.0 + math::sqrt(0.5) + math::sqrt(1.0 / 3.0))).abs() < 1e-14);
        assert!((re - 4.5689141).abs() < 5e-8);
    }

    #[test]
    fn reference_energies() {
        assert!((energy_r3(19, 5, 5).unwrap() - 5.406881).abs() < 5e-7);
        assert!((energy_r3(33, 9, 9).unwrap() - 5.653986727).abs() < 5e-9);
    }

    #[test]
    fn real_extension_agrees_on_integers() {
        for (n, p, q) in [(9u64, 1u64, 1u64), (19, 5, 5), (33, 9, 8), (50, 3, 20)] {
            let a = energy_r3(n, p, q).unwrap();
            let b = energy_r3_real(n as f64, p as f64, q as f64);
            assert!((a - b).abs() < 1e-12);
        }
    }
}
