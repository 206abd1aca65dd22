#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ecgrhythm/types.hpp"

namespace ecgrhythm {

/// Raised on malformed record or annotation files; the message carries the
/// file, line and field that failed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::filesystem::path& file, std::size_t line, const std::string& what_arg)
      : std::runtime_error(file.string() + ":" + std::to_string(line) + ": " + what_arg),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Record file format (UTF-8 text):
//   line 1: #fs=<int>
//   line 2: #id=<string>
//   then one sample per line as a decimal float.
// Annotations live in a sidecar next to the record, extension ".ann", one
// interval per line: "<start> <end> <LABEL>" with exclusive end and
// LABEL in {SR, VT, VF}.

/// Loads and validates a record plus its ".ann" sidecar (a missing sidecar
/// means no annotations). Throws ParseError / std::invalid_argument.
AnnotatedRecord load_record(const std::filesystem::path& path);

/// Writes the record and its sidecar. Samples are written with 17 significant
/// digits, so load_record(save_record(r)) reproduces them bit-exactly.
void save_record(const AnnotatedRecord& record, const std::filesystem::path& path);

/// Loads every "*.rec" file in a directory, sorted by filename.
std::vector<AnnotatedRecord> load_record_dir(const std::filesystem::path& dir);

/// One contiguous sample run per annotation interval, in annotation order.
std::vector<std::pair<std::vector<double>, RhythmLabel>> extract_labeled_runs(
    const AnnotatedRecord& record);

}  // namespace ecgrhythm
