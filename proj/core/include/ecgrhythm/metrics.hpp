#pragma once

#include <array>
#include <utility>
#include <vector>

#include "ecgrhythm/types.hpp"

namespace ecgrhythm {

/// 3x3 confusion counts; rows are true labels, columns predicted.
struct ConfusionMatrix {
  std::array<std::array<long, kNumClasses>, kNumClasses> counts{};

  void add(RhythmLabel truth, RhythmLabel predicted) {
    ++counts[static_cast<std::size_t>(truth)][static_cast<std::size_t>(predicted)];
  }
  long total() const;
  long row_sum(RhythmLabel truth) const;
};

/// trace / total. Throws std::invalid_argument on an empty matrix.
double accuracy(const ConfusionMatrix& cm);

/// Per-class recall: cm[c][c] / row_sum(c). Throws on an empty row.
double sensitivity(const ConfusionMatrix& cm, RhythmLabel cls);

/// Arithmetic mean and standard error (sample stdev with the n-1 divisor,
/// over sqrt(n)). Needs at least 2 values.
std::pair<double, double> mean_stderr(const std::vector<double>& values);

}  // namespace ecgrhythm
