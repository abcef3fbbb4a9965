//! Extremal caterpillars of the one-parameter families
//!
//! - double star `T(p, n−p−2)`,
//! - fixed middle star `T(p, b, n−p−b−3)`,
//! - symmetric `T(p, n−2p−3, p)`,
//! - fixed end star `T(p, n−p−b−3, b)`,
//!
//! with closed-form bounds, interval localization of the maximizer, and the
//! `g(n, b)` analysis of when the fixed-end interval is shorter than one.

use alloc::vec::Vec;
use core::ops::RangeInclusive;

use crate::closed_form::{energy_r2, energy_r3, energy_r3_real, r3_spectral_params, R3Coefficients};
use crate::error::{Error, Result};
use crate::graph::CaterpillarSpec;
use crate::math;

/// Energies closer than this count as tied.
pub const TIE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `T(p, n−p−2)`, `p ∈ [1, ⌊(n−2)/2⌋]`.
    DoubleStar { n: u64 },
    /// `T(p, b, n−p−b−3)`, `p ∈ [1, n−b−4]`.
    FixedMiddle { n: u64, b: u64 },
    /// `T(p, n−2p−3, p)`, `p ∈ [1, ⌊(n−4)/2⌋]`.
    Symmetric { n: u64 },
    /// `T(p, n−p−b−3, b)`, `p ∈ [1, n−b−4]`.
    FixedEnd { n: u64, b: u64 },
}

fn check_n(n: u64, min: u64) -> Result<()> {
    if n < min {
        return Err(Error::OutOfDomain { what: "n", value: n as i64, min: min as i64, max: i64::MAX });
    }
    Ok(())
}

fn check_b(n: u64, b: u64) -> Result<()> {
    if b < 1 || b > n - 6 {
        return Err(Error::OutOfDomain { what: "b", value: b as i64, min: 1, max: n as i64 - 6 });
    }
    Ok(())
}

impl Family {
    pub fn double_star(n: u64) -> Result<Self> {
        check_n(n, 4)?;
        Ok(Family::DoubleStar { n })
    }

    pub fn fixed_middle(n: u64, b: u64) -> Result<Self> {
        check_n(n, 7)?;
        check_b(n, b)?;
        Ok(Family::FixedMiddle { n, b })
    }

    pub fn symmetric(n: u64) -> Result<Self> {
        check_n(n, 7)?;
        Ok(Family::Symmetric { n })
    }

    pub fn fixed_end(n: u64, b: u64) -> Result<Self> {
        check_n(n, 7)?;
        check_b(n, b)?;
        Ok(Family::FixedEnd { n, b })
    }

    /// Re-runs the constructor checks, for values built from the public variants.
    pub fn validate(&self) -> Result<()> {
        match *self {
            Family::DoubleStar { n } => Family::double_star(n).map(|_| ()),
            Family::FixedMiddle { n, b } => Family::fixed_middle(n, b).map(|_| ()),
            Family::Symmetric { n } => Family::symmetric(n).map(|_| ()),
            Family::FixedEnd { n, b } => Family::fixed_end(n, b).map(|_| ()),
        }
    }

    pub fn n(&self) -> u64 {
        match *self {
            Family::DoubleStar { n }
            | Family::FixedMiddle { n, .. }
            | Family::Symmetric { n }
            | Family::FixedEnd { n, .. } => n,
        }
    }

    pub fn b(&self) -> Option<u64> {
        match *self {
            Family::FixedMiddle { b, .. } | Family::FixedEnd { b, .. } => Some(b),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::DoubleStar { .. } => "double-star",
            Family::FixedMiddle { .. } => "fixed-middle",
            Family::Symmetric { .. } => "symmetric",
            Family::FixedEnd { .. } => "fixed-end",
        }
    }

    pub fn domain(&self) -> RangeInclusive<u64> {
        match *self {
            Family::DoubleStar { n } => 1..=(n - 2) / 2,
            Family::FixedMiddle { n, b } | Family::FixedEnd { n, b } => 1..=n - b - 4,
            Family::Symmetric { n } => 1..=(n - 4) / 2,
        }
    }

    fn check_p(&self, p: u64) -> Result<()> {
        let d = self.domain();
        if !d.contains(&p) {
            return Err(Error::OutOfDomain {
                what: "p",
                value: p as i64,
                min: *d.start() as i64,
                max: *d.end() as i64,
            });
        }
        Ok(())
    }

    /// Leaf counts of the member with parameter `p`.
    pub fn member(&self, p: u64) -> Result<CaterpillarSpec> {
        self.validate()?;
        self.check_p(p)?;
        let leaves = match *self {
            Family::DoubleStar { n } => alloc::vec![p, n - p - 2],
            Family::FixedMiddle { n, b } => alloc::vec![p, b, n - p - b - 3],
            Family::Symmetric { n } => alloc::vec![p, n - 2 * p - 3, p],
            Family::FixedEnd { n, b } => alloc::vec![p, n - p - b - 3, b],
        };
        CaterpillarSpec::new(leaves.into_iter().map(|x| x as usize).collect())
    }

    /// `q(p)` for the three-spine families, where the member is `T(p, n−p−q−3, q)`.
    fn end_parameter(&self, p: u64) -> Option<u64> {
        match *self {
            Family::DoubleStar { .. } => None,
            Family::FixedMiddle { n, b } => Some(n - p - b - 3),
            Family::Symmetric { .. } => Some(p),
            Family::FixedEnd { b, .. } => Some(b),
        }
    }
}

/// Randić energy of the family member with parameter `p`, from closed forms.
pub fn family_energy(f: &Family, p: u64) -> Result<f64> {
    f.validate()?;
    f.check_p(p)?;
    match f.end_parameter(p) {
        None => energy_r2(f.n(), p),
        Some(q) => energy_r3(f.n(), p, q),
    }
}

/// Energies of every member of a family, with extremizers.
#[derive(Debug, Clone, PartialEq)]
pub struct Sweep {
    pub family: Family,
    /// `(p, RE(T_p))` for every admissible `p`, ascending in `p`.
    pub energies: Vec<(u64, f64)>,
    /// All `p` attaining the maximum within [`TIE_TOLERANCE`], ascending.
    pub argmax: Vec<u64>,
    pub argmin: Vec<u64>,
    pub max: f64,
    pub min: f64,
}

impl Sweep {
    pub fn energy_at(&self, p: u64) -> Option<f64> {
        self.energies.iter().find(|(q, _)| *q == p).map(|&(_, e)| e)
    }
}

pub fn sweep_family(f: &Family) -> Result<Sweep> {
    f.validate()?;
    let energies = f
        .domain()
        .map(|p| family_energy(f, p).map(|e| (p, e)))
        .collect::<Result<Vec<_>>>()?;
    let max = energies.iter().map(|e| e.1).fold(f64::NEG_INFINITY, f64::max);
    let min = energies.iter().map(|e| e.1).fold(f64::INFINITY, f64::min);
    let argmax = energies.iter().filter(|e| max - e.1 <= TIE_TOLERANCE).map(|e| e.0).collect();
    let argmin = energies.iter().filter(|e| e.1 - min <= TIE_TOLERANCE).map(|e| e.0).collect();
    Ok(Sweep { family: *f, energies, argmax, argmin, max, min })
}

/// Double-star energy bounds and where they are attained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Theorem4Bounds {
    /// `2 + √(2(n−3)/(n−2))`, attained at `p = 1`.
    pub lower: f64,
    /// `4 − 4/n`.
    pub upper: f64,
    pub p_min: u64,
    /// `⌊(n−2)/2⌋`.
    pub p_max: u64,
    /// `RE(T_{p_max})`.
    pub max_energy: f64,
    /// True exactly when `n` is even, where `max_energy == upper`.
    pub upper_attained: bool,
    /// For odd `n`, the commonly quoted closed form `2 + 2√((n−3)/(n+2))` of the maximum.
    pub odd_order_display: Option<f64>,
    /// For odd `n`, `RE(T_{(n−3)/2})` rewritten as `2 + 2√((n−3)/(n+1))`.
    pub odd_order_simplified: Option<f64>,
}

impl Theorem4Bounds {
    /// Whether the quoted odd-order closed form agrees with the energy
    /// formula (it does not: the exact value has `n+1` in the denominator).
    pub fn odd_display_matches(&self, tol: f64) -> Option<bool> {
        self.odd_order_display.map(|d| (d - self.max_energy).abs() <= tol)
    }
}

pub fn theorem4_bounds(n: u64) -> Result<Theorem4Bounds> {
    check_n(n, 4)?;
    let p_max = (n - 2) / 2;
    let nf = n as f64;
    let odd = n % 2 == 1;
    Ok(Theorem4Bounds {
        lower: 2.0 + math::sqrt(2.0 * (nf - 3.0) / (nf - 2.0)),
        upper: 4.0 - 4.0 / nf,
        p_min: 1,
        p_max,
        max_energy: energy_r2(n, p_max)?,
        upper_attained: !odd,
        odd_order_display: odd.then(|| 2.0 + 2.0 * math::sqrt((nf - 3.0) / (nf + 2.0))),
        odd_order_simplified: odd.then(|| 2.0 + 2.0 * math::sqrt((nf - 3.0) / (nf + 1.0))),
    })
}

/// Closed interval `[r, s]` bracketing the continuous maximizer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub r: f64,
    pub s: f64,
}

impl Interval {
    /// `[round(r), round(s)]`, rounding half away from zero.
    pub fn rounded(&self) -> (i64, i64) {
        (math::round(self.r) as i64, math::round(self.s) as i64)
    }

    /// `[⌊r⌋, ⌈s⌉]`.
    pub fn widened(&self) -> (i64, i64) {
        (math::floor(self.r) as i64, math::ceil(self.s) as i64)
    }

    pub fn len(&self) -> f64 {
        self.s - self.r
    }
}

/// Interval for the symmetric family `T(p, n−2p−3, p)`:
/// `r = (2n − 3 − √(2n(n−2)+3))/2`, `s = (2(n−1) − √(2n(n−1)))/2`.
pub fn theorem6_interval(n: u64) -> Result<Interval> {
    check_n(n, 7)?;
    let r_rad = (2 * n * (n - 2) + 3) as f64;
    let s_rad = (2 * n * (n - 1)) as f64;
    Ok(Interval {
        r: 0.5 * ((2 * n - 3) as f64 - math::sqrt(r_rad)),
        s: 0.5 * ((2 * (n - 1)) as f64 - math::sqrt(s_rad)),
    })
}

/// Interval for the fixed-end family `T(p, n−p−b−3, b)`:
///
/// ```text
/// r = −(n−b−1) + √(2(n−b−1)(n−b−2))
/// s = ( −((b+1)(n−b) − 1) + √((b+1)(n−b−1)((2b+1)(n−1) − 2b²)) ) / b
/// ```
pub fn theorem7_interval(n: u64, b: u64) -> Result<Interval> {
    check_n(n, 7)?;
    check_b(n, b)?;
    let (n, b) = (n as i128, b as i128);
    let m = n - b - 1;
    let r_rad = 2 * m * (m - 1);
    let s_rad = (b + 1) * m * ((2 * b + 1) * (n - 1) - 2 * b * b);
    let s_lin = (b + 1) * (n - b) - 1;
    Ok(Interval {
        r: -(m as f64) + math::sqrt(r_rad as f64),
        s: (-(s_lin as f64) + math::sqrt(s_rad as f64)) / b as f64,
    })
}

/// Outcome of an extremal analysis over one family.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalReport {
    pub family: Family,
    /// Bracketing interval; absent for the double-star and fixed-middle families.
    pub interval: Option<Interval>,
    /// Canonical maximizer (smallest `p` among ties).
    pub z: u64,
    pub z_ties: Vec<u64>,
    /// Canonical minimizer (smallest `p` among ties).
    pub argmin_p: u64,
    /// `(p, RE(T_p))` over the whole domain.
    pub energies: Vec<(u64, f64)>,
    pub attained_max: f64,
    pub attained_min: f64,
    /// Maximizer of the real-extended energy inside the interval.
    pub continuous_maximizer: Option<f64>,
    /// Whether `round(continuous_maximizer)` lies in `[round(r), round(s)]`.
    pub rounded_maximizer_in_interval: Option<bool>,
}

impl ExtremalReport {
    pub fn energy_at(&self, p: u64) -> Option<f64> {
        self.energies.iter().find(|(q, _)| *q == p).map(|&(_, e)| e)
    }

    pub fn extremal_graph(&self) -> CaterpillarSpec {
        self.family.member(self.z).expect("z lies in the family domain")
    }
}

/// Fixed middle star: energy increases on `[1, ⌊(n−b−3)/2⌋]`, and members
/// `p` and `n−p−b−3` are isomorphic, so the maximum sits at the midpoint.
pub fn theorem5_extremes(n: u64, b: u64) -> Result<ExtremalReport> {
    let family = Family::fixed_middle(n, b)?;
    let sweep = sweep_family(&family)?;
    let z = (n - b - 3) / 2;
    if !sweep.argmax.contains(&z) {
        return Err(Error::LocalizationMismatch { interval_argmax: z as u32, sweep_argmax: sweep.argmax[0] as u32 });
    }
    let argmin_p = 1;
    Ok(ExtremalReport {
        family,
        interval: None,
        z,
        z_ties: sweep.argmax.clone(),
        argmin_p,
        attained_max: sweep.energy_at(z).unwrap_or(sweep.max),
        attained_min: sweep.energy_at(argmin_p).unwrap_or(sweep.min),
        energies: sweep.energies,
        continuous_maximizer: None,
        rounded_maximizer_in_interval: None,
    })
}

/// Locates the maximizer of the symmetric or fixed-end family by evaluating
/// every integer in `[⌊r⌋, ⌈s⌉]` and checks it against a full-domain sweep.
pub fn locate_z(f: &Family) -> Result<ExtremalReport> {
    f.validate()?;
    let interval = match *f {
        Family::Symmetric { n } => theorem6_interval(n)?,
        Family::FixedEnd { n, b } => theorem7_interval(n, b)?,
        _ => return Err(Error::Unsupported("interval localization needs the symmetric or fixed-end family")),
    };
    let domain = f.domain();
    let (lo, hi) = interval.widened();
    let lo_p = lo.max(*domain.start() as i64);
    let hi_p = hi.min(*domain.end() as i64);
    if lo_p > hi_p {
        return Err(Error::EmptyInterval { lo, hi });
    }

    let mut best: Option<(u64, f64)> = None;
    for p in lo_p as u64..=hi_p as u64 {
        let e = family_energy(f, p)?;
        if best.is_none_or(|(_, b)| e > b + TIE_TOLERANCE) {
            best = Some((p, e));
        }
    }
    let (z, _) = best.expect("non-empty candidate range");

    let sweep = sweep_family(f)?;
    if sweep.argmax[0] != z {
        return Err(Error::LocalizationMismatch { interval_argmax: z as u32, sweep_argmax: sweep.argmax[0] as u32 });
    }

    let zbar = continuous_maximizer(f, lo_p as f64, hi_p as f64);
    let (rr, rs) = interval.rounded();
    let rounded = math::round(zbar) as i64;
    let argmin_p = sweep.argmin[0];

    Ok(ExtremalReport {
        family: *f,
        interval: Some(interval),
        z,
        z_ties: sweep.argmax.clone(),
        argmin_p,
        attained_max: sweep.max,
        attained_min: sweep.min,
        energies: sweep.energies,
        continuous_maximizer: Some(zbar),
        rounded_maximizer_in_interval: Some(rr <= rounded && rounded <= rs),
    })
}

/// Golden-section search for the maximizer of the real-extended energy on `[lo, hi]`.
fn continuous_maximizer(f: &Family, lo: f64, hi: f64) -> f64 {
    let n = f.n() as f64;
    let energy = |x: f64| match *f {
        Family::Symmetric { .. } => energy_r3_real(n, x, x),
        Family::FixedEnd { b, .. } => energy_r3_real(n, x, b as f64),
        Family::FixedMiddle { b, .. } => energy_r3_real(n, x, n - x - b as f64 - 3.0),
        Family::DoubleStar { .. } => 2.0 + 2.0 * math::sqrt(x * (n - x - 2.0) / ((x + 1.0) * (n - x - 1.0))),
    };
    let inv_phi = 0.5 * (math::sqrt(5.0) - 1.0);
    let (mut a, mut b) = (lo, hi);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (energy(c), energy(d));
    while b - a > 1e-10 {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = energy(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = energy(d);
        }
    }
    0.5 * (a + b)
}

/// `α(x)`, `γ(x)` and their derivatives along a three-spine family, with
/// `x` real.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilyDerivatives {
    pub alpha: f64,
    pub gamma: f64,
    pub alpha_prime: f64,
    pub gamma_prime: f64,
}

impl FamilyDerivatives {
    /// `λ(x) = 2α′(x)√γ(x) + γ′(x)`; the energy increases where it is positive.
    pub fn lambda(&self) -> f64 {
        2.0 * self.alpha_prime * math::sqrt(self.gamma.max(0.0)) + self.gamma_prime
    }
}

pub fn family_derivatives(f: &Family, x: f64) -> Result<FamilyDerivatives> {
    f.validate()?;
    let n = f.n() as f64;
    let (q, alpha_prime, gamma_prime) = match *f {
        Family::DoubleStar { .. } => {
            return Err(Error::Unsupported("derivative criterion applies to three-spine families"))
        }
        Family::FixedMiddle { b, .. } => {
            let b = b as f64;
            let w = (x + 1.0) * (n - x - b - 2.0);
            let ap = (b + 1.0) * (n - b - 1.0) * (n - 2.0 * x - b - 3.0) / (2.0 * (b + 2.0) * w * w);
            let gp = b * (n - b - 2.0) * (n - 2.0 * x - b - 3.0) / ((b + 2.0) * w * w);
            (n - x - b - 3.0, ap, gp)
        }
        Family::Symmetric { .. } => {
            let u = (x + 1.0) * (x + 1.0) * (n - 2.0 * x - 1.0) * (n - 2.0 * x - 1.0);
            let ap = (2.0 * x * x - (4.0 * n - 4.0) * x + n * n - 3.0 * n + 2.0) / u;
            let gp = 2.0 * x * (2.0 * x * x - (4.0 * n - 6.0) * x + n * n - 4.0 * n + 3.0) / (u * (x + 1.0));
            (x, ap, gp)
        }
        Family::FixedEnd { b, .. } => {
            let b = b as f64;
            let w = (x + 1.0) * (n - x - b - 1.0);
            let ap_num = -b * x * x - 2.0 * ((b + 1.0) * (n - b) - 1.0) * x + (b + 1.0) * n * n
                - (b + 1.0) * (2.0 * b + 3.0) * n
                + b * (b + 2.0) * (b + 2.0)
                + 2.0;
            let ap = ap_num / (2.0 * (b + 1.0) * w * w);
            let gp_num = -x * x - 2.0 * (n - b - 1.0) * x + n * n - 2.0 * (b + 2.0) * n + (b + 3.0) * (b + 1.0);
            let gp = b * gp_num / ((b + 1.0) * w * w);
            (b, ap, gp)
        }
    };
    let eta = (x + 1.0) * (q + 1.0) * (n - x - q - 1.0);
    let zeta = (n - x - q - 2.0) * (q * (2.0 * x + 1.0) + x);
    let chi = x * q * (n - x - q - 3.0);
    Ok(FamilyDerivatives { alpha: zeta / (2.0 * eta), gamma: chi / eta, alpha_prime, gamma_prime })
}

/// `g(n, b) = 8(n+b−1)²(n−b−1)(n−b−2) − (3n² − 3bn − 9n + 2b + 6)²`, exact.
/// Positive exactly when the fixed-end interval is shorter than one.
pub fn remark_g(n: u64, b: u64) -> i128 {
    let (n, b) = (n as i128, b as i128);
    let t = 3 * n * n - 3 * b * n - 9 * n + 2 * b + 6;
    8 * (n + b - 1) * (n + b - 1) * (n - b - 1) * (n - b - 2) - t * t
}

/// `(Δ₁, Δ₂)` with `h(n, b) = Δ₁Δ₂ < g(n, b)`.
pub fn remark_deltas(n: u64, b: u64) -> (f64, f64) {
    let (n, b) = (n as f64, b as f64);
    let s8 = math::sqrt(8.0);
    let lead = s8 * (n + b - 1.0) * (n - b - 2.0);
    let rest = 3.0 * (n - 1.0) * (n - 2.0) - (3.0 * n - 2.0) * b;
    (lead - rest, lead + rest)
}

/// `h(n, b) = 8(n+b−1)²(n−b−2)² − (3(n−1)(n−2) − (3n−2)b)²`.
pub fn remark_h(n: u64, b: u64) -> f64 {
    let (d1, d2) = remark_deltas(n, b);
    d1 * d2
}

/// `(3 − √8)/√8 · (n − 1) ≈ 0.06066(n − 1)`, above which `Δ₁ > 0`.
pub fn remark_b_star(n: u64) -> f64 {
    let s8 = math::sqrt(8.0);
    (3.0 - s8) / s8 * (n as f64 - 1.0)
}

/// Smallest `b ∈ [1, n−6]` with `g(n, b) > 0`.
pub fn remark_b_min(n: u64) -> Result<u64> {
    check_n(n, 7)?;
    (1..=n - 6)
        .find(|&b| remark_g(n, b) > 0)
        .ok_or(Error::EmptyInterval { lo: 1, hi: n as i64 - 6 })
}

/// `α`, `β`, `γ` for a member of a three-spine family.
pub fn family_params(f: &Family, p: u64) -> Result<crate::closed_form::R3SpectralParams> {
    f.validate()?;
    f.check_p(p)?;
    let q = f.end_parameter(p).ok_or(Error::Unsupported("double stars have no r = 3 parameters"))?;
    let c: R3Coefficients = crate::closed_form::r3_coefficients(f.n(), p, q)?;
    r3_spectral_params(&c)
}
