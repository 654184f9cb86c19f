//! Physical constants and wavelength/frequency conversions.
//!
//! All quantities in this crate are SI unless a name says otherwise
//! (wavelengths in metres, times in seconds, frequencies in hertz).

use crate::{Result, SimError};

/// Speed of light in vacuum (m/s).
pub const C: f64 = 299_792_458.0;

/// FWHM of a Gaussian with standard deviation 1.
pub const GAUSSIAN_FWHM_PER_SIGMA: f64 = 2.354_820_045_030_949_4; // 2 sqrt(2 ln 2)

/// Time-bandwidth product of a transform-limited Gaussian pulse.
pub const TBP_GAUSSIAN: f64 = 0.441_271_200_305_303_4; // 2 ln 2 / pi

/// Time-bandwidth product of a transform-limited sech^2 pulse.
pub const TBP_SECH2: f64 = 0.314_833_953_270_2; // 4 ln^2(1+sqrt 2) / pi^2

/// Exact conversion between vacuum wavelength and frequency.
pub fn wavelength_to_frequency(lambda: f64) -> f64 {
    C / lambda
}

/// Exact conversion between frequency and vacuum wavelength.
pub fn frequency_to_wavelength(nu: f64) -> f64 {
    C / nu
}

/// Narrowband conversion of a wavelength FWHM to a frequency FWHM,
/// `dnu = c dlambda / lambda0^2`.
///
/// Rejected once the band stops being narrow (`dlambda >= lambda0 / 2`).
pub fn bandwidth_wavelength_to_frequency(lambda0: f64, fwhm_lambda: f64) -> Result<f64> {
    if lambda0 <= 0.0 {
        return Err(SimError::domain(format!(
            "center wavelength must be positive, got {lambda0:e} m"
        )));
    }
    if fwhm_lambda < 0.0 {
        return Err(SimError::domain("bandwidth must be non-negative".to_string()));
    }
    if fwhm_lambda >= lambda0 / 2.0 {
        return Err(SimError::domain(format!(
            "bandwidth {fwhm_lambda:e} m is too large relative to {lambda0:e} m \
             for the narrowband conversion"
        )));
    }
    Ok(C * fwhm_lambda / (lambda0 * lambda0))
}

/// Inverse of [`bandwidth_wavelength_to_frequency`].
pub fn bandwidth_frequency_to_wavelength(lambda0: f64, fwhm_nu: f64) -> f64 {
    fwhm_nu * lambda0 * lambda0 / C
}

/// sin(x)/x with the removable singularity filled in.
pub fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-8 {
        1.0 - x * x / 6.0
    } else {
        x.sin() / x
    }
}

/// Linear-interpolation FWHM of a sampled non-negative profile.
///
/// `axis` must be strictly monotonic (either direction). Fails when the
/// half-maximum level is not crossed on both sides of the peak, i.e. the
/// profile is clipped by the sampling window.
pub fn fwhm_interpolated(axis: &[f64], profile: &[f64]) -> Result<f64> {
    assert_eq!(axis.len(), profile.len());
    if axis.len() < 3 {
        return Err(SimError::domain("need at least 3 samples for a FWHM".to_string()));
    }
    let (imax, &peak) = profile
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .expect("non-empty profile");
    if peak <= 0.0 {
        return Err(SimError::domain("profile is identically zero".to_string()));
    }
    let half = peak / 2.0;
    // Walk outwards from the peak to the first half-maximum crossing on
    // each side, interpolating linearly inside the crossing interval.
    let mut lo = None;
    for i in (1..=imax).rev() {
        if profile[i - 1] <= half && profile[i] > half {
            let t = (half - profile[i - 1]) / (profile[i] - profile[i - 1]);
            lo = Some(axis[i - 1] + t * (axis[i] - axis[i - 1]));
            break;
        }
    }
    let mut hi = None;
    for i in imax..profile.len() - 1 {
        if profile[i] > half && profile[i + 1] <= half {
            let t = (profile[i] - half) / (profile[i] - profile[i + 1]);
            hi = Some(axis[i] + t * (axis[i + 1] - axis[i]));
            break;
        }
    }
    match (lo, hi) {
        (Some(a), Some(b)) => Ok((b - a).abs()),
        _ => Err(SimError::numerics(
            "profile does not cross half maximum on both sides; widen the grid".to_string(),
        )),
    }
}
