//! Simulation library for a pulsed, telecom-wavelength, type-II SPDC
//! photon-pair source.
//!
//! The crate models the full chain of such a source at design level:
//!
//! * [`spectra`] — classical pulse optics for the pump chain (envelopes,
//!   grating dispersion, slit filtering, second-harmonic conversion),
//! * [`phasematch`] — refractive-index and quasi-phase-matching models for
//!   the apodized down-conversion crystal,
//! * [`jsa`] — joint spectral amplitudes, Schmidt analysis and the
//!   spectral-purity side of Hong-Ou-Mandel interference,
//! * [`counting`] — photon-number statistics, detector models and Monte
//!   Carlo time-tag generation,
//! * [`interference`] — polarization-entanglement analyzer scans and the
//!   photon-photon / photon-local-oscillator HOM experiments,
//! * [`tof`] — a dispersive time-of-flight fiber spectrometer with swap
//!   calibration,
//! * [`config`] / [`report`] — the structured configuration file and the
//!   metric report used by the command-line front end.
//!
//! All operations are pure functions of their inputs; every Monte Carlo
//! entry point takes an explicit seed and derives per-block ChaCha streams
//! so results are independent of worker count.

pub mod config;
pub mod counting;
pub mod csvio;
mod error;
pub mod interference;
pub mod jsa;
pub mod phasematch;
pub mod report;
pub mod spectra;
pub mod tof;
pub mod units;

pub use error::{Result, SimError};
