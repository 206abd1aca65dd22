#include "ecgrhythm/types.hpp"

namespace ecgrhythm {

std::string to_string(RhythmLabel label) {
  switch (label) {
    case RhythmLabel::SR: return "SR";
    case RhythmLabel::VT: return "VT";
    case RhythmLabel::VF: return "VF";
  }
  throw std::invalid_argument("invalid RhythmLabel value");
}

RhythmLabel parse_label(const std::string& text) {
  if (text == "SR") return RhythmLabel::SR;
  if (text == "VT") return RhythmLabel::VT;
  if (text == "VF") return RhythmLabel::VF;
  throw std::invalid_argument("unknown rhythm label \"" + text + "\" (expected SR, VT or VF)");
}

void validate_record(const AnnotatedRecord& record) {
  if (!is_supported_fs(record.fs))
    throw std::invalid_argument("record " + record.record_id + ": unsupported sampling rate " +
                                std::to_string(record.fs) + " Hz (expected 100, 250 or 360)");
  if (record.samples.empty())
    throw std::invalid_argument("record " + record.record_id + ": no samples");

  std::size_t prev_end = 0;
  for (std::size_t i = 0; i < record.annotations.size(); ++i) {
    const Annotation& a = record.annotations[i];
    const std::string where = "record " + record.record_id + ", annotation " + std::to_string(i);
    if (a.start >= a.end)
      throw std::invalid_argument(where + ": empty or inverted interval");
    if (a.end > record.samples.size())
      throw std::invalid_argument(where + ": end " + std::to_string(a.end) +
                                  " exceeds record length " + std::to_string(record.samples.size()));
    if (i > 0 && a.start < prev_end)
      throw std::invalid_argument(where + ": overlaps or is out of order with previous annotation");
    prev_end = a.end;
  }
}

}  // namespace ecgrhythm
