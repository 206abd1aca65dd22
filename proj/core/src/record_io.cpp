#include "ecgrhythm/record_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <system_error>

namespace ecgrhythm {

namespace {

std::string trim(const std::string& s) {
  const char* ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

double parse_double(const std::filesystem::path& file, std::size_t line, const std::string& tok,
                    const char* field) {
  double value = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw ParseError(file, line, std::string("non-numeric ") + field + " \"" + tok + "\"");
  return value;
}

std::size_t parse_index(const std::filesystem::path& file, std::size_t line, const std::string& tok,
                        const char* field) {
  std::size_t value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw ParseError(file, line, std::string("invalid ") + field + " \"" + tok + "\" (expected a non-negative integer)");
  return value;
}

std::vector<Annotation> load_annotations(const std::filesystem::path& ann_path,
                                         std::size_t n_samples) {
  std::vector<Annotation> annotations;
  std::ifstream in(ann_path);
  if (!in) return annotations;  // no sidecar: record carries no labels

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;

    const auto sp1 = line.find(' ');
    const auto sp2 = line.find(' ', sp1 == std::string::npos ? sp1 : sp1 + 1);
    if (sp1 == std::string::npos || sp2 == std::string::npos)
      throw ParseError(ann_path, line_no, "expected \"<start> <end> <LABEL>\"");

    Annotation a;
    a.start = parse_index(ann_path, line_no, line.substr(0, sp1), "start index");
    a.end = parse_index(ann_path, line_no, trim(line.substr(sp1 + 1, sp2 - sp1 - 1)), "end index");
    const std::string label_tok = trim(line.substr(sp2 + 1));
    try {
      a.label = parse_label(label_tok);
    } catch (const std::invalid_argument& e) {
      throw ParseError(ann_path, line_no, e.what());
    }

    if (a.start >= a.end)
      throw ParseError(ann_path, line_no, "empty or inverted interval");
    if (a.end > n_samples)
      throw ParseError(ann_path, line_no,
                       "annotation end " + std::to_string(a.end) + " out of range (record has " +
                           std::to_string(n_samples) + " samples)");
    if (!annotations.empty() && a.start < annotations.back().end)
      throw ParseError(ann_path, line_no, "annotation overlaps or is out of order with previous one");

    annotations.push_back(a);
  }
  return annotations;
}

std::filesystem::path sidecar_path(std::filesystem::path path) {
  path.replace_extension(".ann");
  return path;
}

}  // namespace

AnnotatedRecord load_record(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open record file " + path.string());

  AnnotatedRecord record;
  std::string raw;
  std::size_t line_no = 0;

  if (!std::getline(in, raw)) throw ParseError(path, 1, "missing \"#fs=\" header");
  ++line_no;
  std::string line = trim(raw);
  if (line.rfind("#fs=", 0) != 0) throw ParseError(path, 1, "first line must be \"#fs=<int>\"");
  {
    const std::string tok = line.substr(4);
    int fs = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), fs);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParseError(path, 1, "malformed sampling rate \"" + tok + "\"");
    record.fs = fs;
  }

  if (!std::getline(in, raw)) throw ParseError(path, 2, "missing \"#id=\" header");
  ++line_no;
  line = trim(raw);
  if (line.rfind("#id=", 0) != 0) throw ParseError(path, 2, "second line must be \"#id=<string>\"");
  record.record_id = line.substr(4);
  if (record.record_id.empty()) throw ParseError(path, 2, "empty record id");

  while (std::getline(in, raw)) {
    ++line_no;
    line = trim(raw);
    if (line.empty()) continue;
    record.samples.push_back(parse_double(path, line_no, line, "sample"));
  }

  record.annotations = load_annotations(sidecar_path(path), record.samples.size());
  validate_record(record);
  return record;
}

void save_record(const AnnotatedRecord& record, const std::filesystem::path& path) {
  validate_record(record);
  {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write record file " + path.string());
    out << "#fs=" << record.fs << "\n";
    out << "#id=" << record.record_id << "\n";
    char buf[64];
    for (double v : record.samples) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
      if (ec != std::errc{}) throw std::runtime_error("sample formatting failed");
      out.write(buf, ptr - buf);
      out.put('\n');
    }
    if (!out) throw std::runtime_error("write failed for " + path.string());
  }
  {
    std::ofstream out(sidecar_path(path));
    if (!out) throw std::runtime_error("cannot write annotation file " + sidecar_path(path).string());
    for (const Annotation& a : record.annotations)
      out << a.start << " " << a.end << " " << to_string(a.label) << "\n";
    if (!out) throw std::runtime_error("write failed for " + sidecar_path(path).string());
  }
}

std::vector<AnnotatedRecord> load_record_dir(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".rec") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw std::runtime_error("no .rec files found in " + dir.string());

  std::vector<AnnotatedRecord> records;
  records.reserve(files.size());
  for (const auto& f : files) records.push_back(load_record(f));
  return records;
}

std::vector<std::pair<std::vector<double>, RhythmLabel>> extract_labeled_runs(
    const AnnotatedRecord& record) {
  std::vector<std::pair<std::vector<double>, RhythmLabel>> runs;
  runs.reserve(record.annotations.size());
  for (const Annotation& a : record.annotations)
    runs.emplace_back(std::vector<double>(record.samples.begin() + static_cast<std::ptrdiff_t>(a.start),
                                          record.samples.begin() + static_cast<std::ptrdiff_t>(a.end)),
                      a.label);
  return runs;
}

}  // namespace ecgrhythm
