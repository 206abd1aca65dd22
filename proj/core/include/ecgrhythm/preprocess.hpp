#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ecgrhythm/types.hpp"

namespace ecgrhythm {

/// 49 Hz low-pass (passband edge 40 Hz, stopband edge 49 Hz) for the source
/// rates 250 and 360 Hz. Linear phase, delay compensated, same length out.
std::vector<double> lowpass49(std::span<const double> samples, int fs);

/// 0.5 Hz baseline-wander high-pass, applied after resampling (fs must be
/// 100). The kernel's DC response is exactly zero.
std::vector<double> highpass05(std::span<const double> samples, int fs);

/// Scales the whole record uniformly so that sum(x^2) == number of samples.
/// Throws std::invalid_argument on an all-zero record.
CleanRecord normalize_energy(CleanRecord record);

/// Full per-record pipeline: lowpass49 (250/360 Hz sources only) ->
/// resample_to_100 -> highpass05 -> normalize_energy. Annotations are
/// remapped onto the 100 Hz grid, shrinking conservatively so no remapped
/// sample falls outside the original interval.
CleanRecord preprocess_record(const AnnotatedRecord& record);

/// Window lengths accepted by segment(), in seconds.
bool is_supported_window(double window_s);

/// Cuts non-overlapping consecutive windows that lie fully inside a single
/// annotation interval; partial tails are discarded. Each segment inherits
/// the interval's label.
std::vector<LabeledSegment> segment(const CleanRecord& record, double window_s);

/// Sub-samples every class listed in `classes` down to the smallest class
/// count (uniform, without replacement) and shuffles the result. Both steps
/// are driven by one seeded generator, so output is reproducible.
/// Throws std::invalid_argument if a listed class is absent.
std::vector<LabeledSegment> balance_classes(const std::vector<LabeledSegment>& segments,
                                            std::uint64_t seed,
                                            const std::vector<RhythmLabel>& classes = {
                                                RhythmLabel::SR, RhythmLabel::VT, RhythmLabel::VF});

}  // namespace ecgrhythm
