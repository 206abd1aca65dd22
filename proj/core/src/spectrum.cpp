#include "ecgrhythm/spectrum.hpp"

#include <stdexcept>

#include "ecgrhythm/fft.hpp"

namespace ecgrhythm {

std::vector<double> magnitude_spectrum(std::span<const double> segment) {
  if (segment.empty() || segment.size() % 2 != 0)
    throw std::invalid_argument("magnitude_spectrum: segment length must be even and non-zero");
  const auto bins = dft_real(segment);
  std::vector<double> mag(segment.size() / 2);
  for (std::size_t k = 0; k < mag.size(); ++k) mag[k] = std::abs(bins[k]);
  return mag;
}

}  // namespace ecgrhythm
