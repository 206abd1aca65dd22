#include "ecgrhythm/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "ecgrhythm/fir.hpp"
#include "ecgrhythm/resample.hpp"
#include "ecgrhythm/rng.hpp"

namespace ecgrhythm {

std::vector<double> lowpass49(std::span<const double> samples, int fs) {
  if (fs != 250 && fs != 360)
    throw std::invalid_argument("lowpass49: unsupported rate " + std::to_string(fs) + " Hz");
  const std::vector<double> taps = design_lowpass_fir(static_cast<double>(fs), 40.0, 49.0);
  return fir_apply_centered(taps, samples);
}

std::vector<double> highpass05(std::span<const double> samples, int fs) {
  if (fs != 100)
    throw std::invalid_argument("highpass05: expected 100 Hz input, got " + std::to_string(fs));
  const std::vector<double> taps = design_highpass_fir(100.0, 0.5, 1.0);
  return fir_apply_centered(taps, samples);
}

CleanRecord normalize_energy(CleanRecord record) {
  double sum_sq = 0.0;
  for (double v : record.samples) sum_sq += v * v;
  if (sum_sq == 0.0)
    throw std::invalid_argument("normalize_energy: record " + record.record_id + " is all zero");
  const double scale = std::sqrt(static_cast<double>(record.samples.size()) / sum_sq);
  for (double& v : record.samples) v *= scale;
  return record;
}

CleanRecord preprocess_record(const AnnotatedRecord& record) {
  validate_record(record);

  std::vector<double> samples;
  if (record.fs == 100)
    samples.assign(record.samples.begin(), record.samples.end());
  else
    samples = lowpass49(record.samples, record.fs);

  const ResampleRatio ratio = ratio_to_100(record.fs);
  samples = resample_to_100(samples, record.fs);
  samples = highpass05(samples, CleanRecord::fs);

  CleanRecord clean;
  clean.record_id = record.record_id;
  clean.samples = std::move(samples);
  for (const Annotation& a : record.annotations) {
    Annotation m;
    m.start = remap_index_up(a.start, ratio);
    m.end = std::min(remap_index_up(a.end, ratio), clean.samples.size());
    m.label = a.label;
    if (m.start < m.end) clean.annotations.push_back(m);
  }
  return normalize_energy(std::move(clean));
}

bool is_supported_window(double window_s) {
  for (double w : {0.5, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0})
    if (window_s == w) return true;
  return false;
}

std::vector<LabeledSegment> segment(const CleanRecord& record, double window_s) {
  if (!is_supported_window(window_s))
    throw std::invalid_argument("segment: unsupported window length " + std::to_string(window_s) +
                                " s (expected 0.5, 1, 2, 3, 4, 5 or 6)");
  const auto window = static_cast<std::size_t>(std::lround(window_s * CleanRecord::fs));

  std::vector<LabeledSegment> segments;
  for (const Annotation& a : record.annotations) {
    for (std::size_t start = a.start; start + window <= a.end; start += window) {
      LabeledSegment s;
      s.samples.assign(record.samples.begin() + static_cast<std::ptrdiff_t>(start),
                       record.samples.begin() + static_cast<std::ptrdiff_t>(start + window));
      s.label = a.label;
      s.record_id = record.record_id;
      s.start = start;
      segments.push_back(std::move(s));
    }
  }
  return segments;
}

std::vector<LabeledSegment> balance_classes(const std::vector<LabeledSegment>& segments,
                                            std::uint64_t seed,
                                            const std::vector<RhythmLabel>& classes) {
  std::map<RhythmLabel, std::vector<std::size_t>> by_class;
  for (RhythmLabel c : classes) by_class[c];
  for (std::size_t i = 0; i < segments.size(); ++i) {
    auto it = by_class.find(segments[i].label);
    if (it != by_class.end()) it->second.push_back(i);
  }

  std::size_t min_count = SIZE_MAX;
  for (const auto& [label, idx] : by_class) {
    if (idx.empty())
      throw std::invalid_argument("balance_classes: class " + to_string(label) + " absent from input");
    min_count = std::min(min_count, idx.size());
  }

  Rng rng(seed);
  std::vector<std::size_t> keep;
  for (RhythmLabel c : classes) {
    const auto& idx = by_class.at(c);
    for (std::size_t pick : rng.sample_without_replacement(idx.size(), min_count))
      keep.push_back(idx[pick]);
  }
  rng.shuffle(keep);

  std::vector<LabeledSegment> out;
  out.reserve(keep.size());
  for (std::size_t i : keep) out.push_back(segments[i]);
  return out;
}

}  // namespace ecgrhythm
