#include "ecgrhythm/fir.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

namespace ecgrhythm {

namespace {

// Hamming main-lobe factor: transition width ~= 3.3 / N in normalized frequency.
constexpr double kHammingTransitionFactor = 3.3;

std::size_t odd_length_for_transition(double fs, double transition_hz) {
  if (transition_hz <= 0.0) throw std::invalid_argument("FIR design: transition width must be > 0");
  const double delta = transition_hz / fs;
  auto n = static_cast<std::size_t>(std::ceil(kHammingTransitionFactor / delta));
  if (n % 2 == 0) ++n;
  return std::max<std::size_t>(n, 5);
}

// Windowed sinc of given odd length, cutoff in Hz, DC gain exactly 1.
std::vector<double> sinc_kernel(double fs, double cut_hz, std::size_t n) {
  const double fc = cut_hz / fs;  // cycles per sample
  const auto center = static_cast<double>(n - 1) / 2.0;
  std::vector<double> taps(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double m = static_cast<double>(i) - center;
    const double sinc = (std::abs(m) < 1e-12) ? 2.0 * fc : std::sin(2.0 * M_PI * fc * m) / (M_PI * m);
    const double w = 0.54 - 0.46 * std::cos(2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n - 1));
    taps[i] = sinc * w;
  }
  const double sum = std::accumulate(taps.begin(), taps.end(), 0.0);
  for (double& t : taps) t /= sum;
  return taps;
}

}  // namespace

std::vector<double> design_lowpass_fir(double fs, double pass_hz, double stop_hz) {
  if (!(0.0 <= pass_hz && pass_hz < stop_hz && stop_hz <= fs / 2.0))
    throw std::invalid_argument("FIR design: need 0 <= pass < stop <= fs/2");
  const std::size_t n = odd_length_for_transition(fs, stop_hz - pass_hz);
  return sinc_kernel(fs, (pass_hz + stop_hz) / 2.0, n);
}

std::vector<double> design_highpass_fir(double fs, double cut_hz, double transition_hz) {
  if (!(cut_hz > 0.0 && cut_hz < fs / 2.0))
    throw std::invalid_argument("FIR design: high-pass cutoff out of range");
  const std::size_t n = odd_length_for_transition(fs, transition_hz);
  std::vector<double> taps = sinc_kernel(fs, cut_hz, n);
  for (double& t : taps) t = -t;
  taps[(n - 1) / 2] += 1.0;
  return taps;
}

std::vector<double> design_bandpass_fir(double fs, double lo_hz, double hi_hz,
                                        double transition_hz) {
  if (!(0.0 < lo_hz && lo_hz < hi_hz && hi_hz < fs / 2.0))
    throw std::invalid_argument("FIR design: need 0 < lo < hi < fs/2");
  const std::size_t n = odd_length_for_transition(fs, transition_hz);
  const std::vector<double> upper = sinc_kernel(fs, hi_hz, n);
  const std::vector<double> lower = sinc_kernel(fs, lo_hz, n);
  std::vector<double> taps(n);
  for (std::size_t i = 0; i < n; ++i) taps[i] = upper[i] - lower[i];
  return taps;
}

std::vector<double> fir_apply_centered(std::span<const double> taps, std::span<const double> x) {
  const std::size_t n = taps.size();
  if (n == 0 || n % 2 == 0) throw std::invalid_argument("fir_apply_centered: odd tap count required");
  const auto half = static_cast<std::ptrdiff_t>((n - 1) / 2);
  const auto len = static_cast<std::ptrdiff_t>(x.size());

  std::vector<double> y(x.size(), 0.0);
  for (std::ptrdiff_t i = 0; i < len; ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const std::ptrdiff_t j = i + half - static_cast<std::ptrdiff_t>(k);
      if (j >= 0 && j < len) acc += taps[k] * x[static_cast<std::size_t>(j)];
    }
    y[static_cast<std::size_t>(i)] = acc;
  }
  return y;
}

double fir_magnitude_at(std::span<const double> taps, double f_hz, double fs) {
  const double w = 2.0 * M_PI * f_hz / fs;
  std::complex<double> h{0.0, 0.0};
  for (std::size_t k = 0; k < taps.size(); ++k)
    h += taps[k] * std::exp(std::complex<double>(0.0, -w * static_cast<double>(k)));
  return std::abs(h);
}

}  // namespace ecgrhythm
