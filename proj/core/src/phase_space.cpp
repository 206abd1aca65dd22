#include "ecgrhythm/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ecgrhythm {

namespace {

int bin_of(double v, double lo, double hi) {
  if (lo == hi) return 0;
  const auto b = static_cast<int>(std::floor((v - lo) / (hi - lo) * kPhaseSpaceBins));
  return std::clamp(b, 0, kPhaseSpaceBins - 1);
}

PhaseSpaceResult count_cells(std::span<const double> x1, std::span<const double> x2) {
  const auto [lo1, hi1] = std::minmax_element(x1.begin(), x1.end());
  const auto [lo2, hi2] = std::minmax_element(x2.begin(), x2.end());

  std::vector<bool> occupied(kPhaseSpaceCells, false);
  int visited = 0;
  for (std::size_t i = 0; i < x1.size(); ++i) {
    const int cell = bin_of(x1[i], *lo1, *hi1) * kPhaseSpaceBins + bin_of(x2[i], *lo2, *hi2);
    if (!occupied[cell]) {
      occupied[cell] = true;
      ++visited;
    }
  }
  return {visited, static_cast<double>(visited) / kPhaseSpaceCells};
}

}  // namespace

PhaseSpaceResult psa_count(std::span<const double> segment, int fs) {
  if (fs <= 0) throw std::invalid_argument("psa_count: fs must be positive");
  const auto k = static_cast<std::size_t>(std::lround(0.5 * fs));
  if (segment.size() <= k)
    throw std::invalid_argument("psa_count: segment too short for a 0.5 s delay (" +
                                std::to_string(segment.size()) + " samples, need > " +
                                std::to_string(k) + ")");

  const std::size_t n = segment.size() - k;
  std::vector<double> x1(n), x2(n);
  for (std::size_t i = 0; i < n; ++i) {
    x1[i] = segment[k + i];
    x2[i] = segment[i];
  }
  return count_cells(x1, x2);
}

PhaseSpaceResult psm_count(std::span<const double> segment) {
  if (segment.size() < 2)
    throw std::invalid_argument("psm_count: need at least 2 samples");

  const std::size_t n = segment.size() - 1;
  std::vector<double> x1(n), x2(n);
  for (std::size_t i = 0; i < n; ++i) {
    x1[i] = segment[i + 1];
    x2[i] = segment[i + 1] - segment[i];
  }
  return count_cells(x1, x2);
}

bool psa_is_vf(const PhaseSpaceResult& result) { return result.eta > kVfEtaThreshold; }

}  // namespace ecgrhythm
