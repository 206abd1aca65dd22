#include "ecgrhythm/svm.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <list>
#include <unordered_map>

#include "json_io.hpp"

namespace ecgrhythm {

namespace {

constexpr int kSvmFileVersion = 1;

// Row-wise kernel cache with LRU eviction under a byte budget. At desk scale
// the whole matrix fits; the budget matters for long records swept by the CLI.
class KernelRowCache {
 public:
  KernelRowCache(const std::vector<std::vector<double>>& data, const KernelSpec& spec,
                 std::size_t budget_bytes)
      : data_(data), spec_(spec) {
    const std::size_t row_bytes = data.size() * sizeof(double);
    max_rows_ = row_bytes == 0 ? 1 : std::max<std::size_t>(2, budget_bytes / row_bytes);
  }

  const std::vector<double>& row(std::size_t i) {
    auto it = index_.find(i);
    if (it != index_.end()) {
      lru_.splice(lru_.begin(), lru_, it->second.first);
      return it->second.second;
    }
    if (index_.size() >= max_rows_) {
      index_.erase(lru_.back());
      lru_.pop_back();
    }
    std::vector<double> values(data_.size());
    for (std::size_t j = 0; j < data_.size(); ++j)
      values[j] = kernel_eval(spec_, data_[i], data_[j]);
    lru_.push_front(i);
    auto [pos, inserted] = index_.emplace(i, std::pair(lru_.begin(), std::move(values)));
    return pos->second.second;
  }

 private:
  const std::vector<std::vector<double>>& data_;
  const KernelSpec& spec_;
  std::size_t max_rows_;
  std::list<std::size_t> lru_;
  std::unordered_map<std::size_t, std::pair<std::list<std::size_t>::iterator, std::vector<double>>>
      index_;
};

}  // namespace

BinarySvmModel smo_train(const std::vector<std::vector<double>>& data,
                         const std::vector<int>& labels, const SmoParams& params) {
  validate_kernel(params.kernel);
  if (!(params.cost > 0.0)) throw std::invalid_argument("smo_train: C must be > 0");
  if (data.size() != labels.size() || data.empty())
    throw std::invalid_argument("smo_train: need matching, non-empty data and labels");

  const std::size_t n = data.size();
  const std::size_t dim = data.front().size();
  bool has_pos = false, has_neg = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i] != 1 && labels[i] != -1)
      throw std::invalid_argument("smo_train: labels must be +1 or -1");
    (labels[i] == 1 ? has_pos : has_neg) = true;
    if (data[i].size() != dim) throw std::invalid_argument("smo_train: inconsistent dimensions");
    for (double v : data[i])
      if (!std::isfinite(v)) throw std::invalid_argument("smo_train: non-finite feature value");
  }
  if (!has_pos || !has_neg)
    throw std::invalid_argument("smo_train: training data contains a single class");

  const double c = params.cost;
  KernelRowCache cache(data, params.kernel, params.cache_bytes);
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = kernel_eval(params.kernel, data[i], data[i]);

  std::vector<double> alpha(n, 0.0);
  std::vector<double> grad(n, -1.0);  // gradient of 1/2 a'Qa - e'a at a = 0

  const auto in_up = [&](std::size_t t) {
    return (labels[t] == 1 && alpha[t] < c) || (labels[t] == -1 && alpha[t] > 0.0);
  };
  const auto in_low = [&](std::size_t t) {
    return (labels[t] == -1 && alpha[t] < c) || (labels[t] == 1 && alpha[t] > 0.0);
  };

  std::size_t iter = 0;
  for (;; ++iter) {
    // maximal violating pair
    double m_up = -std::numeric_limits<double>::infinity();
    double m_low = std::numeric_limits<double>::infinity();
    std::size_t i = n, j = n;
    for (std::size_t t = 0; t < n; ++t) {
      const double v = -labels[t] * grad[t];
      if (in_up(t) && v > m_up) {
        m_up = v;
        i = t;
      }
      if (in_low(t) && v < m_low) {
        m_low = v;
        j = t;
      }
    }
    if (i == n || j == n || m_up - m_low <= params.tol) break;
    if (iter >= params.max_iter)
      throw SmoConvergenceError("smo_train: no convergence after " + std::to_string(iter) +
                                " iterations (KKT gap " + std::to_string(m_up - m_low) + ")");

    const std::vector<double>& row_i = cache.row(i);
    const std::vector<double>& row_j = cache.row(j);

    double eta = diag[i] + diag[j] - 2.0 * row_i[j];
    if (eta <= 0.0) eta = 1e-12;

    // step along a_i += y_i*t, a_j -= y_j*t, clipped to the box
    double step = (labels[j] * grad[j] - labels[i] * grad[i]) / eta;
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    if (labels[i] == 1) {
      lo = std::max(lo, -alpha[i]);
      hi = std::min(hi, c - alpha[i]);
    } else {
      lo = std::max(lo, alpha[i] - c);
      hi = std::min(hi, alpha[i]);
    }
    if (labels[j] == 1) {
      lo = std::max(lo, alpha[j] - c);
      hi = std::min(hi, alpha[j]);
    } else {
      lo = std::max(lo, -alpha[j]);
      hi = std::min(hi, c - alpha[j]);
    }
    step = std::min(std::max(step, lo), hi);

    alpha[i] = std::min(std::max(alpha[i] + labels[i] * step, 0.0), c);
    alpha[j] = std::min(std::max(alpha[j] - labels[j] * step, 0.0), c);
    for (std::size_t t = 0; t < n; ++t) grad[t] += labels[t] * step * (row_i[t] - row_j[t]);
  }

  // bias from free vectors when available, midpoint of the KKT bounds otherwise
  double bias;
  {
    double free_sum = 0.0;
    std::size_t free_count = 0;
    double m_up = -std::numeric_limits<double>::infinity();
    double m_low = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < n; ++t) {
      const double v = -labels[t] * grad[t];
      if (alpha[t] > 0.0 && alpha[t] < c) {
        free_sum += v;
        ++free_count;
      }
      if (in_up(t)) m_up = std::max(m_up, v);
      if (in_low(t)) m_low = std::min(m_low, v);
    }
    bias = free_count > 0 ? free_sum / static_cast<double>(free_count) : (m_up + m_low) / 2.0;
  }

  BinarySvmModel model;
  model.kernel = params.kernel;
  model.cost = c;
  model.bias = bias;
  for (std::size_t t = 0; t < n; ++t) {
    if (alpha[t] > 0.0) {
      model.support_vectors.push_back(data[t]);
      model.coefficients.push_back(alpha[t] * labels[t]);
    }
  }
  return model;
}

double decision_value(const BinarySvmModel& model, std::span<const double> x) {
  double acc = model.bias;
  for (std::size_t i = 0; i < model.support_vectors.size(); ++i)
    acc += model.coefficients[i] * kernel_eval(model.kernel, x, model.support_vectors[i]);
  return acc;
}

int predict(const BinarySvmModel& model, std::span<const double> x) {
  return decision_value(model, x) >= 0.0 ? 1 : -1;
}

double dual_objective(const BinarySvmModel& model) {
  const std::size_t m = model.support_vectors.size();
  double sum_alpha = 0.0;
  double quad = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sum_alpha += std::abs(model.coefficients[i]);
    for (std::size_t j = 0; j < m; ++j)
      quad += model.coefficients[i] * model.coefficients[j] *
              kernel_eval(model.kernel, model.support_vectors[i], model.support_vectors[j]);
  }
  return sum_alpha - 0.5 * quad;
}

namespace detail {

nlohmann::json svm_to_json(const BinarySvmModel& model) {
  nlohmann::json j;
  switch (model.kernel.type) {
    case KernelType::Linear: j["kernel"] = {{"type", "linear"}}; break;
    case KernelType::Polynomial:
      j["kernel"] = {{"type", "polynomial"}, {"c", model.kernel.poly_c}, {"d", model.kernel.degree}};
      break;
    case KernelType::Rbf: j["kernel"] = {{"type", "rbf"}, {"gamma", model.kernel.gamma}}; break;
  }
  j["cost"] = model.cost;
  j["bias"] = model.bias;
  j["coefficients"] = model.coefficients;
  j["support_vectors"] = model.support_vectors;
  return j;
}

BinarySvmModel svm_from_json(const nlohmann::json& j, const std::string& context) {
  BinarySvmModel model;
  const auto& jk = j.at("kernel");
  const std::string type = jk.at("type").get<std::string>();
  if (type == "linear") {
    model.kernel = KernelSpec::linear();
  } else if (type == "polynomial") {
    model.kernel = KernelSpec::polynomial(jk.at("c").get<double>(), jk.at("d").get<int>());
  } else if (type == "rbf") {
    model.kernel = KernelSpec::rbf(jk.at("gamma").get<double>());
  } else {
    throw std::runtime_error(context + ": unknown kernel type \"" + type + "\"");
  }
  model.cost = j.at("cost").get<double>();
  model.bias = j.at("bias").get<double>();
  model.coefficients = j.at("coefficients").get<std::vector<double>>();
  model.support_vectors = j.at("support_vectors").get<std::vector<std::vector<double>>>();
  if (model.coefficients.size() != model.support_vectors.size())
    throw std::runtime_error(context + ": coefficient/support vector count mismatch");
  validate_kernel(model.kernel);
  return model;
}

}  // namespace detail

void save_svm_model(const BinarySvmModel& model, const std::filesystem::path& path) {
  nlohmann::json j = detail::svm_to_json(model);
  j["format"] = "ecgrhythm-svm-model";
  j["version"] = kSvmFileVersion;

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write SVM model file " + path.string());
  out << j.dump(1, '\t') << "\n";
}

BinarySvmModel load_svm_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open SVM model file " + path.string());
  nlohmann::json j;
  in >> j;
  if (j.value("format", "") != "ecgrhythm-svm-model")
    throw std::runtime_error(path.string() + ": not an SVM model file");
  if (j.value("version", -1) != kSvmFileVersion)
    throw std::runtime_error(path.string() + ": unsupported model file version");
  return detail::svm_from_json(j, path.string());
}

}  // namespace ecgrhythm
