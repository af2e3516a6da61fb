//! Baseband simulation of an in-band full-duplex transceiver with digital
//! cancellation of power-amplifier-induced nonlinear self-interference.
//!
//! The crate models the complete self-interference (SI) chain of a
//! separate-antenna full-duplex radio: the transmit OFDM waveform, a Wiener
//! (FIR + odd-order polynomial) power amplifier, the multipath TX-to-RX
//! coupling channel, an RF canceller, receiver noise, AGC and ADC
//! quantization. On top of that chain it implements a parallel-Hammerstein
//! digital SI canceller whose coefficients are obtained by block linear
//! least squares, plus a closed-form link-budget calculator and a Monte
//! Carlo sweep harness that produces the SINR / digital-cancellation curves.
//!
//! Modules:
//! - [`signal`]: complex baseband signal container, FIR filtering and
//!   power/dB utilities.
//! - [`ofdm`]: 16-QAM mapping and OFDM modulation/demodulation.
//! - [`impairments`]: Wiener PA design and application, AWGN, AGC, ADC.
//! - [`si_chain`]: multipath SI channel generation and RF canceller tuning.
//! - [`canceller`]: parallel-Hammerstein basis, regression matrix, LS
//!   estimation, SI regeneration and subtraction.
//! - [`link_budget`]: per-stage power levels of SOI, linear/nonlinear SI,
//!   thermal and quantization noise versus transmit power.
//! - [`sim`]: scenario description, per-realization pipeline, metrics and
//!   parameter sweeps.
//! - [`scenario`]: flat key-value scenario file parsing.

pub mod canceller;
pub mod error;
pub mod impairments;
pub mod link_budget;
pub mod ofdm;
pub mod scenario;
pub mod si_chain;
pub mod signal;
pub mod sim;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
