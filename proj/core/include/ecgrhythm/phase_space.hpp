#pragma once

#include <span>

namespace ecgrhythm {

inline constexpr int kPhaseSpaceBins = 40;          // per axis
inline constexpr int kPhaseSpaceCells = 40 * 40;    // total grid cells
inline constexpr double kVfEtaThreshold = 0.15;

struct PhaseSpaceResult {
  int visited = 0;   // occupied cells, 1 .. 1600
  double eta = 0.0;  // visited / 1600
};

/// Delay embedding (x[n], x[n-k]) with k = 0.5 s worth of samples; each axis
/// is discretized into 40 equal-width bins spanning that axis's own min..max,
/// and distinct occupied cells are counted. A degenerate axis (max == min)
/// collapses to a single bin. Invariant under a*x + b, a > 0.
PhaseSpaceResult psa_count(std::span<const double> segment, int fs);

/// Derivative embedding (x[n], x[n] - x[n-1]); same discretization and count.
PhaseSpaceResult psm_count(std::span<const double> segment);

/// VF iff eta exceeds the 0.15 threshold (strict inequality).
bool psa_is_vf(const PhaseSpaceResult& result);

}  // namespace ecgrhythm
