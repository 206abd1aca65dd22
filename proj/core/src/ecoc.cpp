#include "ecgrhythm/ecoc.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json_io.hpp"

namespace ecgrhythm {

namespace {
constexpr int kEcocFileVersion = 1;
}

CodingMatrix default_coding_matrix() {
  CodingMatrix w;
  w.columns = {
      {{1, 1, -1}},   // VF vs rest
      {{1, -1, 1}},   // VT vs rest
      {{-1, 1, 1}},   // SR vs rest
      {{1, 0, -1}},   // SR vs VF
      {{1, -1, 0}},   // SR vs VT
      {{0, 1, -1}},   // VT vs VF
  };
  return w;
}

void validate_matrix(const CodingMatrix& matrix) {
  if (matrix.columns.empty()) throw std::invalid_argument("coding matrix: no columns");
  for (int n = 0; n < matrix.cols(); ++n) {
    bool has_pos = false, has_neg = false;
    for (int m = 0; m < kNumClasses; ++m) {
      const int w = matrix.at(m, n);
      if (w < -1 || w > 1)
        throw std::invalid_argument("coding matrix: entries must be -1, 0 or +1");
      has_pos |= w == 1;
      has_neg |= w == -1;
    }
    if (!has_pos || !has_neg)
      throw std::invalid_argument("coding matrix: column " + std::to_string(n) +
                                  " needs at least one +1 and one -1");
  }
  for (int a = 0; a < kNumClasses; ++a)
    for (int b = a + 1; b < kNumClasses; ++b) {
      bool same = true;
      for (int n = 0; n < matrix.cols(); ++n) same &= matrix.at(a, n) == matrix.at(b, n);
      if (same)
        throw std::invalid_argument("coding matrix: rows " + std::to_string(a) + " and " +
                                    std::to_string(b) + " are identical");
    }
}

double min_row_hamming(const CodingMatrix& matrix) {
  double best = std::numeric_limits<double>::infinity();
  for (int a = 0; a < kNumClasses; ++a)
    for (int b = a + 1; b < kNumClasses; ++b) {
      double d = 0.0;
      for (int n = 0; n < matrix.cols(); ++n) {
        const int wa = matrix.at(a, n);
        const int wb = matrix.at(b, n);
        if (wa != 0 && wb != 0 && wa != wb)
          d += 1.0;
        else if ((wa == 0) != (wb == 0))
          d += 0.5;
      }
      best = std::min(best, d);
    }
  return best;
}

double loss_eval(LossKind loss, double z) {
  switch (loss) {
    case LossKind::Hinge: return std::max(1.0 - z, 0.0);
    case LossKind::Hamming: {
      const double sgn = z > 0.0 ? 1.0 : (z < 0.0 ? -1.0 : 0.0);
      return (1.0 - sgn) / 2.0;
    }
    case LossKind::Exponential: return std::exp(-z);
    case LossKind::Linear: return -z;
  }
  throw std::invalid_argument("invalid loss kind");
}

LossKind parse_loss(const std::string& name) {
  if (name == "hinge") return LossKind::Hinge;
  if (name == "hamming") return LossKind::Hamming;
  if (name == "exponential") return LossKind::Exponential;
  if (name == "linear") return LossKind::Linear;
  throw std::invalid_argument("unknown loss \"" + name +
                              "\" (expected hinge, hamming, exponential or linear)");
}

std::string to_string(LossKind loss) {
  switch (loss) {
    case LossKind::Hinge: return "hinge";
    case LossKind::Hamming: return "hamming";
    case LossKind::Exponential: return "exponential";
    case LossKind::Linear: return "linear";
  }
  throw std::invalid_argument("invalid loss kind");
}

EcocModel train_ecoc(const std::vector<std::vector<double>>& vectors,
                     const std::vector<RhythmLabel>& labels, const CodingMatrix& matrix,
                     const std::vector<EcocColumnParams>& per_column, LossKind loss) {
  validate_matrix(matrix);
  if (vectors.size() != labels.size())
    throw std::invalid_argument("train_ecoc: vectors/labels size mismatch");
  if (per_column.size() != static_cast<std::size_t>(matrix.cols()))
    throw std::invalid_argument("train_ecoc: need one parameter set per matrix column");

  EcocModel model;
  model.matrix = matrix;
  model.loss = loss;
  model.classifiers.reserve(per_column.size());

  for (int n = 0; n < matrix.cols(); ++n) {
    std::vector<std::vector<double>> subset;
    std::vector<int> binary;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      const int w = matrix.at(static_cast<int>(labels[i]), n);
      if (w != 0) {
        subset.push_back(vectors[i]);
        binary.push_back(w);
      }
    }
    if (subset.empty())
      throw std::invalid_argument("train_ecoc: column " + std::to_string(n) +
                                  " has an empty training subset");
    model.classifiers.push_back(smo_train(subset, binary, per_column[static_cast<std::size_t>(n)].svm));
  }
  return model;
}

RhythmLabel decode(std::span<const double> decision_values, const CodingMatrix& matrix,
                   LossKind loss) {
  if (decision_values.size() != static_cast<std::size_t>(matrix.cols()))
    throw std::invalid_argument("decode: expected " + std::to_string(matrix.cols()) +
                                " decision values, got " + std::to_string(decision_values.size()));
  for (double f : decision_values)
    if (!std::isfinite(f)) throw std::invalid_argument("decode: non-finite decision value");

  int best = 0;
  double best_loss = std::numeric_limits<double>::infinity();
  for (int m = 0; m < kNumClasses; ++m) {
    double total = 0.0;
    for (int n = 0; n < matrix.cols(); ++n)
      total += loss_eval(loss, matrix.at(m, n) * decision_values[static_cast<std::size_t>(n)]);
    if (total < best_loss) {
      best_loss = total;
      best = m;
    }
  }
  return static_cast<RhythmLabel>(best);
}

std::vector<double> ecoc_decision_values(const EcocModel& model, std::span<const double> x) {
  std::vector<double> values(model.classifiers.size());
  for (std::size_t n = 0; n < model.classifiers.size(); ++n)
    values[n] = decision_value(model.classifiers[n], x);
  return values;
}

RhythmLabel classify(const EcocModel& model, std::span<const double> x) {
  const std::vector<double> values = ecoc_decision_values(model, x);
  return decode(values, model.matrix, model.loss);
}

void save_ecoc_model(const EcocModel& model, const std::filesystem::path& path) {
  nlohmann::json j;
  j["format"] = "ecgrhythm-ecoc-model";
  j["version"] = kEcocFileVersion;
  j["loss"] = to_string(model.loss);
  j["matrix"] = nlohmann::json::array();
  for (const auto& col : model.matrix.columns) j["matrix"].push_back(col);
  j["representation"] = model.representation;
  j["window_s"] = model.window_s;
  j["classifiers"] = nlohmann::json::array();
  for (const auto& classifier : model.classifiers)
    j["classifiers"].push_back(detail::svm_to_json(classifier));
  if (model.pca.has_value()) j["pca"] = detail::pca_to_json(*model.pca);

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write ECOC model file " + path.string());
  out << j.dump(1, '\t') << "\n";
}

EcocModel load_ecoc_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ECOC model file " + path.string());
  nlohmann::json j;
  in >> j;
  if (j.value("format", "") != "ecgrhythm-ecoc-model")
    throw std::runtime_error(path.string() + ": not an ECOC model file");
  if (j.value("version", -1) != kEcocFileVersion)
    throw std::runtime_error(path.string() + ": unsupported model file version");

  EcocModel model;
  model.loss = parse_loss(j.at("loss").get<std::string>());
  for (const auto& col : j.at("matrix")) {
    std::array<int, kNumClasses> entries{};
    for (int m = 0; m < kNumClasses; ++m) entries[static_cast<std::size_t>(m)] = col.at(m).get<int>();
    model.matrix.columns.push_back(entries);
  }
  validate_matrix(model.matrix);
  model.representation = j.at("representation").get<std::string>();
  model.window_s = j.at("window_s").get<double>();

  for (const auto& jc : j.at("classifiers"))
    model.classifiers.push_back(detail::svm_from_json(jc, path.string()));
  if (model.classifiers.size() != static_cast<std::size_t>(model.matrix.cols()))
    throw std::runtime_error(path.string() + ": classifier count does not match matrix columns");
  if (j.contains("pca")) model.pca = detail::pca_from_json(j.at("pca"), path.string());
  return model;
}

}  // namespace ecgrhythm
