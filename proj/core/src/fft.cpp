#include "ecgrhythm/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace ecgrhythm {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Arbitrary-length DFT via the chirp-z identity: X[k] = w^{k^2/2} * (a * b)[k]
// with a[m] = x[m] w^{m^2/2}, b[m] = w^{-m^2/2}, convolved through a padded
// power-of-two FFT.
std::vector<std::complex<double>> bluestein(std::span<const std::complex<double>> x) {
  const std::size_t n = x.size();
  const std::size_t m = next_pow2(2 * n + 1);

  // chirp[k] = exp(-i*pi*k^2/n); k^2 mod 2n keeps the angle argument small
  std::vector<std::complex<double>> chirp(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t k2 = (k * k) % (2 * n);
    const double angle = M_PI * static_cast<double>(k2) / static_cast<double>(n);
    chirp[k] = std::complex<double>(std::cos(angle), -std::sin(angle));
  }

  std::vector<std::complex<double>> a(m, {0.0, 0.0});
  std::vector<std::complex<double>> b(m, {0.0, 0.0});
  for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * chirp[k];
  b[0] = std::conj(chirp[0]);
  for (std::size_t k = 1; k < n; ++k) b[k] = b[m - k] = std::conj(chirp[k]);

  fft_pow2(a, false);
  fft_pow2(b, false);
  for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
  fft_pow2(a, true);

  std::vector<std::complex<double>> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * chirp[k];
  return out;
}

}  // namespace

void fft_pow2(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  if (!is_pow2(n)) throw std::invalid_argument("fft_pow2: size must be a power of two");

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle = (inverse ? 2.0 : -2.0) * M_PI / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(angle), std::sin(angle));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }

  if (inverse)
    for (auto& v : a) v /= static_cast<double>(n);
}

std::vector<std::complex<double>> dft(std::span<const std::complex<double>> x) {
  if (x.empty()) throw std::invalid_argument("dft: empty input");
  if (is_pow2(x.size())) {
    std::vector<std::complex<double>> a(x.begin(), x.end());
    fft_pow2(a, false);
    return a;
  }
  return bluestein(x);
}

std::vector<std::complex<double>> dft_real(std::span<const double> x) {
  std::vector<std::complex<double>> cx(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) cx[i] = {x[i], 0.0};
  return dft(cx);
}

}  // namespace ecgrhythm
