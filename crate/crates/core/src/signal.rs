//! Complex baseband signal container and power utilities.
//!
//! Power convention: the squared magnitude of a sample is instantaneous
//! power in watts (no impedance modeling), so `10*log10(mean|x|^2) + 30`
//! is power in dBm. Every dBm figure in the toolkit follows this rule.

use num_complex::Complex64;

/// Converts dBm to watts. `-inf` maps to zero watts.
pub fn dbm_to_watts(dbm: f64) -> f64 {
    10f64.powf((dbm - 30.0) / 10.0)
}

/// Converts watts to dBm. Zero power maps to the `-inf` sentinel.
pub fn watts_to_dbm(watts: f64) -> f64 {
    if watts <= 0.0 {
        f64::NEG_INFINITY
    } else {
        10.0 * watts.log10() + 30.0
    }
}

/// A sequence of complex baseband samples with an associated sample rate.
///
/// Immutable once constructed; all operations return new signals.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSignal {
    samples: Vec<Complex64>,
    sample_rate_hz: f64,
}

impl ComplexSignal {
    /// Wraps a sample vector. Panics if the sample rate is not positive or
    /// any sample is non-finite.
    pub fn new(samples: Vec<Complex64>, sample_rate_hz: f64) -> Self {
        assert!(
            sample_rate_hz > 0.0 && sample_rate_hz.is_finite(),
            "sample rate must be positive"
        );
        debug_assert!(
            samples.iter().all(|s| s.re.is_finite() && s.im.is_finite()),
            "samples must be finite"
        );
        ComplexSignal {
            samples,
            sample_rate_hz,
        }
    }

    /// An all-zero signal of the given length.
    pub fn zeros(len: usize, sample_rate_hz: f64) -> Self {
        ComplexSignal::new(vec![Complex64::ZERO; len], sample_rate_hz)
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn sample_rate_hz(&self) -> f64 {
        self.sample_rate_hz
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Mean of `|x|^2` over all samples (watts under the crate convention).
    pub fn mean_power_watts(&self) -> f64 {
        if self.samples.is_empty() {
            return 0.0;
        }
        self.samples.iter().map(|s| s.norm_sqr()).sum::<f64>() / self.samples.len() as f64
    }

    /// Returns a copy scaled by a real factor.
    pub fn scaled(&self, factor: f64) -> ComplexSignal {
        ComplexSignal::new(
            self.samples.iter().map(|s| s * factor).collect(),
            self.sample_rate_hz,
        )
    }

    /// Samplewise sum of two equal-length signals.
    pub fn add(&self, other: &ComplexSignal) -> ComplexSignal {
        assert_eq!(self.len(), other.len(), "signal lengths must match");
        ComplexSignal::new(
            self.samples
                .iter()
                .zip(other.samples.iter())
                .map(|(a, b)| a + b)
                .collect(),
            self.sample_rate_hz,
        )
    }

    /// A copy of the sample range `[start, start + len)`.
    pub fn slice(&self, start: usize, len: usize) -> ComplexSignal {
        ComplexSignal::new(
            self.samples[start..start + len].to_vec(),
            self.sample_rate_hz,
        )
    }
}

/// Linear convolution of `x` with taps `h`, truncated to the input length.
///
/// Samples before the start of `x` are taken as zero, so the output has the
/// same length as the input and no circular wrap.
pub fn fir_filter(x: &ComplexSignal, h: &[Complex64]) -> crate::Result<ComplexSignal> {
    if h.is_empty() {
        return Err(crate::Error::invalid("FIR filter taps must be non-empty"));
    }
    let xs = x.samples();
    let mut y = vec![Complex64::ZERO; xs.len()];
    for (n, out) in y.iter_mut().enumerate() {
        let kmax = h.len().min(n + 1);
        let mut acc = Complex64::ZERO;
        for (k, tap) in h.iter().enumerate().take(kmax) {
            acc += tap * xs[n - k];
        }
        *out = acc;
    }
    Ok(ComplexSignal::new(y, x.sample_rate_hz()))
}

/// Mean signal power in dBm. All-zero input returns `-inf`.
pub fn measure_power_dbm(x: &ComplexSignal) -> f64 {
    watts_to_dbm(x.mean_power_watts())
}

/// Returns a scaled copy whose measured power equals `target_dbm`.
///
/// A `-inf` target produces an all-zero signal. Zero-power input is an
/// error since no scale factor can reach a finite target.
pub fn set_power_dbm(x: &ComplexSignal, target_dbm: f64) -> crate::Result<ComplexSignal> {
    let p = x.mean_power_watts();
    if p <= 0.0 {
        return Err(crate::Error::invalid(
            "cannot set the power of a zero-power signal",
        ));
    }
    Ok(x.scaled((dbm_to_watts(target_dbm) / p).sqrt()))
}

/// Peak-to-average power ratio in dB: `10*log10(max|x|^2 / mean|x|^2)`.
pub fn papr_db(x: &ComplexSignal) -> crate::Result<f64> {
    let mean = x.mean_power_watts();
    if mean <= 0.0 {
        return Err(crate::Error::invalid("PAPR of a zero-power signal"));
    }
    let peak = x
        .samples()
        .iter()
        .map(|s| s.norm_sqr())
        .fold(0.0f64, f64::max);
    Ok(10.0 * (peak / mean).log10())
}
