//! 16-QAM mapping and OFDM modulation/demodulation.
//!
//! The numerology follows an 802.11a-like grid: a 20 MHz base rate with 64
//! subcarriers and a 16-sample guard interval (4 us symbols), oversampled by
//! zero-padding the IFFT. Data subcarriers are split symmetrically around a
//! null DC bin; there are no pilots.

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::signal::ComplexSignal;
use crate::{Error, Result};

/// Base (critically sampled) rate of the OFDM grid before oversampling.
pub const BASE_SAMPLE_RATE_HZ: f64 = 20.0e6;

/// Supported constellations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constellation {
    Qam16,
}

/// OFDM waveform parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OfdmConfig {
    pub n_subcarriers: usize,
    pub n_data_subcarriers: usize,
    /// Cyclic prefix length in base-rate samples.
    pub cp_len_samples: usize,
    pub oversampling: usize,
    pub constellation: Constellation,
}

impl OfdmConfig {
    pub fn new(
        n_subcarriers: usize,
        n_data_subcarriers: usize,
        cp_len_samples: usize,
        oversampling: usize,
    ) -> Result<Self> {
        if n_subcarriers == 0 || n_data_subcarriers == 0 {
            return Err(Error::config("subcarrier counts must be positive"));
        }
        if oversampling == 0 {
            return Err(Error::config("oversampling factor must be >= 1"));
        }
        if n_data_subcarriers > n_subcarriers {
            return Err(Error::config(
                "data subcarriers cannot exceed total subcarriers",
            ));
        }
        let cfg = OfdmConfig {
            n_subcarriers,
            n_data_subcarriers,
            cp_len_samples,
            oversampling,
            constellation: Constellation::Qam16,
        };
        // The two data half-bands must fit beside the null DC bin.
        if cfg.neg_bins() > n_subcarriers / 2 || cfg.pos_bins() > (n_subcarriers - 1) / 2 {
            return Err(Error::config(
                "data subcarriers do not fit around the DC null",
            ));
        }
        Ok(cfg)
    }

    /// The 64/48/16/x4 16-QAM configuration used throughout.
    pub fn default_config() -> Self {
        OfdmConfig::new(64, 48, 16, 4).expect("default config is valid")
    }

    fn neg_bins(&self) -> usize {
        self.n_data_subcarriers.div_ceil(2)
    }

    fn pos_bins(&self) -> usize {
        self.n_data_subcarriers / 2
    }

    /// IFFT size after oversampling.
    pub fn fft_len(&self) -> usize {
        self.n_subcarriers * self.oversampling
    }

    /// Cyclic prefix length at the oversampled rate.
    pub fn cp_len(&self) -> usize {
        self.cp_len_samples * self.oversampling
    }

    /// Samples per OFDM symbol (CP included) at the oversampled rate.
    pub fn symbol_len(&self) -> usize {
        self.fft_len() + self.cp_len()
    }

    /// Output sample rate.
    pub fn sample_rate_hz(&self) -> f64 {
        BASE_SAMPLE_RATE_HZ * self.oversampling as f64
    }

    /// Indices of the active bins in the length-`fft_len` spectrum, ordered
    /// from the most negative data subcarrier to the most positive.
    fn active_bins(&self) -> Vec<usize> {
        let n = self.fft_len();
        let mut bins = Vec::with_capacity(self.n_data_subcarriers);
        for k in (1..=self.neg_bins()).rev() {
            bins.push(n - k);
        }
        for k in 1..=self.pos_bins() {
            bins.push(k);
        }
        bins
    }
}

/// Gray level for a bit pair: 00 -> -3, 01 -> -1, 11 -> +1, 10 -> +3.
fn gray_level(msb: bool, lsb: bool) -> f64 {
    match (msb, lsb) {
        (false, false) => -3.0,
        (false, true) => -1.0,
        (true, true) => 1.0,
        (true, false) => 3.0,
    }
}

/// Maps bits to Gray-coded 16-QAM symbols with unit average power.
///
/// Four bits per symbol: the first pair selects the in-phase level, the
/// second pair the quadrature level, both Gray coded. The `1/sqrt(10)`
/// scale makes the 16-point alphabet average exactly unit power.
pub fn qam16_map(bits: &[bool]) -> Result<Vec<Complex64>> {
    if bits.len() % 4 != 0 {
        return Err(Error::invalid(format!(
            "16-QAM needs a multiple of 4 bits, got {}",
            bits.len()
        )));
    }
    let scale = 1.0 / 10f64.sqrt();
    Ok(bits
        .chunks_exact(4)
        .map(|b| Complex64::new(gray_level(b[0], b[1]), gray_level(b[2], b[3])) * scale)
        .collect())
}

/// OFDM-modulates a symbol sequence.
///
/// Per OFDM symbol the data symbols fill the active bins around the DC
/// null, the spectrum is zero-padded to the oversampled IFFT size, and a
/// cyclic prefix is prepended. The fixed `1/sqrt(n_data)` transform scale
/// makes the output unit average power in expectation for a unit-power
/// constellation (and keeps modulate/demodulate an exact inverse pair).
pub fn ofdm_modulate(symbols: &[Complex64], cfg: &OfdmConfig) -> Result<ComplexSignal> {
    let nd = cfg.n_data_subcarriers;
    if symbols.len() % nd != 0 {
        return Err(Error::invalid(format!(
            "symbol count {} is not a multiple of {} data subcarriers",
            symbols.len(),
            nd
        )));
    }
    let n = cfg.fft_len();
    let bins = cfg.active_bins();
    let ifft = FftPlanner::new().plan_fft_inverse(n);
    let scale = 1.0 / (nd as f64).sqrt();

    let mut out = Vec::with_capacity(symbols.len() / nd * cfg.symbol_len());
    let mut spectrum = vec![Complex64::ZERO; n];
    for block in symbols.chunks_exact(nd) {
        spectrum.fill(Complex64::ZERO);
        for (&bin, &sym) in bins.iter().zip(block) {
            spectrum[bin] = sym;
        }
        ifft.process(&mut spectrum);
        for s in spectrum.iter_mut() {
            *s *= scale;
        }
        out.extend_from_slice(&spectrum[n - cfg.cp_len()..]);
        out.extend_from_slice(&spectrum);
    }
    Ok(ComplexSignal::new(out, cfg.sample_rate_hz()))
}

/// Inverse of [`ofdm_modulate`] on an ideal channel: strips the cyclic
/// prefix, applies the forward transform and extracts the active bins.
pub fn ofdm_demodulate(sig: &ComplexSignal, cfg: &OfdmConfig) -> Result<Vec<Complex64>> {
    let sym_len = cfg.symbol_len();
    if sig.len() % sym_len != 0 {
        return Err(Error::invalid(format!(
            "signal length {} is not a multiple of the {}-sample OFDM symbol",
            sig.len(),
            sym_len
        )));
    }
    let n = cfg.fft_len();
    let bins = cfg.active_bins();
    let fft = FftPlanner::new().plan_fft_forward(n);
    let scale = (cfg.n_data_subcarriers as f64).sqrt() / n as f64;

    let mut symbols = Vec::with_capacity(sig.len() / sym_len * cfg.n_data_subcarriers);
    let mut buf = vec![Complex64::ZERO; n];
    for block in sig.samples().chunks_exact(sym_len) {
        buf.copy_from_slice(&block[cfg.cp_len()..]);
        fft.process(&mut buf);
        symbols.extend(bins.iter().map(|&b| buf[b] * scale));
    }
    Ok(symbols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_bits(n: usize, seed: u64) -> Vec<bool> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n).map(|_| rng.random()).collect()
    }

    #[test]
    fn qam16_corner_point() {
        let syms = qam16_map(&[false; 4]).unwrap();
        let expected = Complex64::new(-3.0, -3.0) / 10f64.sqrt();
        assert!((syms[0] - expected).norm() < 1e-15);
    }

    #[test]
    fn qam16_alphabet_has_unit_power_and_min_distance() {
        // All 16 labels once.
        let mut bits = Vec::new();
        for v in 0..16u8 {
            for i in (0..4).rev() {
                bits.push((v >> i) & 1 == 1);
            }
        }
        let syms = qam16_map(&bits).unwrap();
        assert_eq!(syms.len(), 16);

        let mean_power: f64 = syms.iter().map(|s| s.norm_sqr()).sum::<f64>() / 16.0;
        assert!((mean_power - 1.0).abs() < 1e-14);

        let mut min_dist = f64::INFINITY;
        for i in 0..16 {
            for j in 0..16 {
                if i != j {
                    min_dist = min_dist.min((syms[i] - syms[j]).norm());
                }
            }
        }
        assert!((min_dist - 2.0 / 10f64.sqrt()).abs() < 1e-12);

        // 16 distinct points.
        for i in 0..16 {
            for j in (i + 1)..16 {
                assert!((syms[i] - syms[j]).norm() > 1e-9);
            }
        }
    }

    #[test]
    fn qam16_rejects_partial_symbol() {
        assert!(qam16_map(&[true; 6]).is_err());
    }

    #[test]
    fn one_symbol_is_320_samples() {
        let cfg = OfdmConfig::default_config();
        let syms = qam16_map(&random_bits(48 * 4, 7)).unwrap();
        let sig = ofdm_modulate(&syms, &cfg).unwrap();
        assert_eq!(sig.len(), 320);
        assert_eq!(sig.sample_rate_hz(), 80.0e6);
    }

    #[test]
    fn ten_symbols_are_3200_samples() {
        let cfg = OfdmConfig::default_config();
        let syms = qam16_map(&random_bits(10 * 48 * 4, 8)).unwrap();
        let sig = ofdm_modulate(&syms, &cfg).unwrap();
        assert_eq!(sig.len(), 3200);
    }

    #[test]
    fn zero_symbols_modulate_to_zero_signal() {
        let cfg = OfdmConfig::default_config();
        let sig = ofdm_modulate(&[Complex64::ZERO; 48], &cfg).unwrap();
        assert!(sig.samples().iter().all(|s| s.norm() == 0.0));
    }

    #[test]
    fn modulate_rejects_partial_block() {
        let cfg = OfdmConfig::default_config();
        assert!(ofdm_modulate(&[Complex64::ZERO; 47], &cfg).is_err());
    }

    #[test]
    fn round_trip_is_exact() {
        let cfg = OfdmConfig::default_config();
        let syms = qam16_map(&random_bits(5 * 48 * 4, 9)).unwrap();
        let sig = ofdm_modulate(&syms, &cfg).unwrap();
        let back = ofdm_demodulate(&sig, &cfg).unwrap();
        assert_eq!(back.len(), syms.len());
        let max_err = syms
            .iter()
            .zip(&back)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0f64, f64::max);
        assert!(max_err < 1e-10, "round-trip error {max_err}");
    }

    #[test]
    fn round_trip_other_numerology() {
        // Identity must hold for other valid configs too.
        let cfg = OfdmConfig::new(32, 20, 8, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let syms: Vec<Complex64> = (0..3 * 20)
            .map(|_| Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
            .collect();
        let sig = ofdm_modulate(&syms, &cfg).unwrap();
        let back = ofdm_demodulate(&sig, &cfg).unwrap();
        let max_err = syms
            .iter()
            .zip(&back)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0f64, f64::max);
        assert!(max_err < 1e-10);
    }

    #[test]
    fn demodulate_zero_signal() {
        let cfg = OfdmConfig::default_config();
        let syms = ofdm_demodulate(&ComplexSignal::zeros(640, cfg.sample_rate_hz()), &cfg).unwrap();
        assert_eq!(syms.len(), 96);
        assert!(syms.iter().all(|s| s.norm() == 0.0));
    }

    #[test]
    fn demodulate_rejects_length_mismatch() {
        let cfg = OfdmConfig::default_config();
        let sig = ComplexSignal::zeros(321, cfg.sample_rate_hz());
        assert!(ofdm_demodulate(&sig, &cfg).is_err());
    }

    #[test]
    fn full_symbol_delay_shifts_by_one_block() {
        let cfg = OfdmConfig::default_config();
        let syms = qam16_map(&random_bits(2 * 48 * 4, 11)).unwrap();
        let sig = ofdm_modulate(&syms, &cfg).unwrap();

        let mut delayed = vec![Complex64::ZERO; cfg.symbol_len()];
        delayed.extend_from_slice(sig.samples());
        let delayed = ComplexSignal::new(delayed, sig.sample_rate_hz());

        let back = ofdm_demodulate(&delayed, &cfg).unwrap();
        for s in &back[..48] {
            assert!(s.norm() < 1e-12);
        }
        for (a, b) in syms.iter().zip(&back[48..]) {
            assert!((a - b).norm() < 1e-10);
        }
    }

    #[test]
    fn long_waveform_power_is_near_unity_and_papr_near_10_db() {
        let cfg = OfdmConfig::default_config();
        let syms = qam16_map(&random_bits(120 * 48 * 4, 12)).unwrap();
        let sig = ofdm_modulate(&syms, &cfg).unwrap();
        let p = sig.mean_power_watts();
        assert!((p - 1.0).abs() < 0.05, "mean power {p}");
        let papr = crate::signal::papr_db(&sig).unwrap();
        assert!((8.0..=12.0).contains(&papr), "PAPR {papr} dB");
    }
}
