#pragma once

#include <complex>
#include <span>
#include <vector>

namespace ecgrhythm {

/// In-place iterative radix-2 DIT transform; size must be a power of two.
void fft_pow2(std::vector<std::complex<double>>& a, bool inverse);

/// Forward DFT of arbitrary length (Bluestein chirp-z for non powers of two).
std::vector<std::complex<double>> dft(std::span<const std::complex<double>> x);

/// Forward DFT of a real sequence.
std::vector<std::complex<double>> dft_real(std::span<const double> x);

}  // namespace ecgrhythm
