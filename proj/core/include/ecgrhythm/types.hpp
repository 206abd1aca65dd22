#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ecgrhythm {

/// The three rhythm classes handled by this library. The order is fixed and
/// doubles as the row order of every coding matrix and confusion matrix.
enum class RhythmLabel : int { SR = 0, VT = 1, VF = 2 };

inline constexpr int kNumClasses = 3;

std::string to_string(RhythmLabel label);

/// Parses "SR"/"VT"/"VF". Throws std::invalid_argument on anything else.
RhythmLabel parse_label(const std::string& text);

/// One labeled rhythm interval, [start, end) in sample indices.
struct Annotation {
  std::size_t start = 0;
  std::size_t end = 0;
  RhythmLabel label = RhythmLabel::SR;
};

/// A single-channel sampled ECG trace with labeled rhythm intervals.
struct AnnotatedRecord {
  std::string record_id;
  int fs = 0;
  std::vector<double> samples;
  std::vector<Annotation> annotations;
};

/// Checks all AnnotatedRecord invariants: supported fs, non-empty samples,
/// annotations sorted, non-overlapping, in range, meaningful intervals.
/// Throws std::invalid_argument with a description of the first violation.
void validate_record(const AnnotatedRecord& record);

inline bool is_supported_fs(int fs) { return fs == 100 || fs == 250 || fs == 360; }

/// A record after the preprocessing pipeline: always 100 Hz, unit mean
/// square amplitude, annotations remapped onto the 100 Hz index grid.
struct CleanRecord {
  std::string record_id;
  std::vector<double> samples;
  std::vector<Annotation> annotations;

  static constexpr int fs = 100;
};

/// A fixed-duration window cut from one annotation interval of a record.
struct LabeledSegment {
  std::vector<double> samples;
  RhythmLabel label = RhythmLabel::SR;
  std::string record_id;
  std::size_t start = 0;  // index into the 100 Hz clean record
};

}  // namespace ecgrhythm
