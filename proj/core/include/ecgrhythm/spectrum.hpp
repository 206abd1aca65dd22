#pragma once

#include <span>
#include <vector>

namespace ecgrhythm {

/// Fourier magnitude spectrum: |DFT(x)[k]| for k = 0 .. N/2 - 1 (DC kept,
/// Nyquist bin dropped). N must be even. Invariant to circular time shifts
/// and sign flips of the input.
std::vector<double> magnitude_spectrum(std::span<const double> segment);

}  // namespace ecgrhythm
