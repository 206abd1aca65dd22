#pragma once

#include <span>
#include <vector>

namespace ecgrhythm {

// Windowed-sinc FIR design (Hamming window). All designs are linear-phase
// with an odd tap count, so the group delay is an integer and
// fir_apply_centered can compensate it exactly. Stopband attenuation of the
// Hamming window is about 53 dB.

/// Low-pass with the -6 dB point midway between pass_hz and stop_hz.
/// DC gain is normalized to exactly 1.
std::vector<double> design_lowpass_fir(double fs, double pass_hz, double stop_hz);

/// High-pass by spectral inversion of a low-pass with the given cutoff and
/// transition width. The tap sum is exactly 0, so DC is nulled.
std::vector<double> design_highpass_fir(double fs, double cut_hz, double transition_hz);

/// Band-pass as the difference of two low-pass designs sharing one length.
std::vector<double> design_bandpass_fir(double fs, double lo_hz, double hi_hz,
                                        double transition_hz);

/// Convolves with the filter centered on each sample (delay compensated,
/// zero-padded edges); output length equals input length.
std::vector<double> fir_apply_centered(std::span<const double> taps, std::span<const double> x);

/// |H(f)| of the tap vector at frequency f_hz for sampling rate fs.
double fir_magnitude_at(std::span<const double> taps, double f_hz, double fs);

}  // namespace ecgrhythm
