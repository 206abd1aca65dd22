#include "ecgrhythm/pca.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json_io.hpp"

namespace ecgrhythm {

namespace {

constexpr int kBasisFileVersion = 1;
constexpr double kRankDropTolerance = 1e-8;

void fix_sign(Eigen::VectorXd& v) {
  Eigen::Index arg = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v[i]);
    if (a > best) {
      best = a;
      arg = i;
    }
  }
  if (v[arg] < 0.0) v = -v;
}

// Pivoted modified Gram-Schmidt; keeps vectors whose residual norm stays
// above tol, in pivot order.
std::vector<std::vector<double>> orthonormalize_union(std::vector<Eigen::VectorXd> cols,
                                                      double tol) {
  std::vector<std::vector<double>> kept;
  std::vector<bool> used(cols.size(), false);

  for (std::size_t step = 0; step < cols.size(); ++step) {
    std::size_t pivot = cols.size();
    double best = tol;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (used[j]) continue;
      const double norm = cols[j].norm();
      if (norm > best) {
        best = norm;
        pivot = j;
      }
    }
    if (pivot == cols.size()) break;  // everything left is in the span already

    used[pivot] = true;
    Eigen::VectorXd q = cols[pivot] / cols[pivot].norm();
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (!used[j]) cols[j] -= q.dot(cols[j]) * q;
    kept.emplace_back(q.data(), q.data() + q.size());
  }
  return kept;
}

}  // namespace

PcaBasis fit_pca_basis(const std::vector<std::vector<double>>& vectors,
                       const std::vector<RhythmLabel>& labels,
                       const std::vector<RhythmLabel>& classes, int n_per_class) {
  if (n_per_class < 5 || n_per_class > 15)
    throw std::invalid_argument("fit_pca_basis: n_per_class must be in [5, 15]");
  if (vectors.size() != labels.size())
    throw std::invalid_argument("fit_pca_basis: vectors/labels size mismatch");
  if (vectors.empty()) throw std::invalid_argument("fit_pca_basis: no training data");
  if (classes.empty()) throw std::invalid_argument("fit_pca_basis: empty class set");

  const std::size_t dim = vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != dim) throw std::invalid_argument("fit_pca_basis: inconsistent dimensions");

  PcaBasis out;
  out.classes = classes;
  out.n_per_class = n_per_class;
  out.dim = dim;

  std::vector<Eigen::VectorXd> union_cols;
  Eigen::VectorXd global_mean = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));

  for (RhythmLabel cls : classes) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == cls) members.push_back(i);
    if (members.size() < static_cast<std::size_t>(n_per_class) + 1)
      throw std::invalid_argument("fit_pca_basis: class " + to_string(cls) + " has " +
                                  std::to_string(members.size()) + " vectors, need at least " +
                                  std::to_string(n_per_class + 1));

    Eigen::MatrixXd data(static_cast<Eigen::Index>(members.size()), static_cast<Eigen::Index>(dim));
    for (std::size_t r = 0; r < members.size(); ++r)
      data.row(static_cast<Eigen::Index>(r)) =
          Eigen::Map<const Eigen::VectorXd>(vectors[members[r]].data(), static_cast<Eigen::Index>(dim));

    const Eigen::VectorXd mean = data.colwise().mean();
    data.rowwise() -= mean.transpose();
    const Eigen::MatrixXd cov = data.transpose() * data / static_cast<double>(members.size() - 1);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
    if (solver.info() != Eigen::Success)
      throw std::runtime_error("fit_pca_basis: eigensolver failed for class " + to_string(cls));

    // Eigen reports ascending eigenvalues; take the top n_per_class from the back.
    std::vector<double> top_values;
    for (int k = 0; k < n_per_class; ++k) {
      const Eigen::Index col = cov.cols() - 1 - k;
      Eigen::VectorXd v = solver.eigenvectors().col(col);
      fix_sign(v);
      union_cols.push_back(std::move(v));
      top_values.push_back(solver.eigenvalues()[col]);
    }

    out.class_means.emplace_back(mean.data(), mean.data() + mean.size());
    out.class_eigenvalues.push_back(std::move(top_values));
    out.class_variance_total.push_back(cov.trace());
    global_mean += mean;
  }

  global_mean /= static_cast<double>(classes.size());
  out.global_mean.assign(global_mean.data(), global_mean.data() + global_mean.size());
  out.basis = orthonormalize_union(std::move(union_cols), kRankDropTolerance);
  return out;
}

std::vector<double> project(const PcaBasis& basis, std::span<const double> x) {
  if (x.size() != basis.dim)
    throw std::invalid_argument("project: vector dimension " + std::to_string(x.size()) +
                                " does not match basis dimension " + std::to_string(basis.dim));
  std::vector<double> centered(basis.dim);
  for (std::size_t i = 0; i < basis.dim; ++i) centered[i] = x[i] - basis.global_mean[i];

  std::vector<double> coords(basis.basis.size());
  for (std::size_t r = 0; r < basis.basis.size(); ++r) {
    double acc = 0.0;
    const auto& row = basis.basis[r];
    for (std::size_t i = 0; i < basis.dim; ++i) acc += row[i] * centered[i];
    coords[r] = acc;
  }
  return coords;
}

namespace detail {

nlohmann::json pca_to_json(const PcaBasis& basis) {
  nlohmann::json j;
  std::vector<std::string> class_names;
  for (RhythmLabel c : basis.classes) class_names.push_back(to_string(c));
  j["classes"] = class_names;
  j["n_per_class"] = basis.n_per_class;
  j["dim"] = basis.dim;
  j["class_means"] = basis.class_means;
  j["class_eigenvalues"] = basis.class_eigenvalues;
  j["class_variance_total"] = basis.class_variance_total;
  j["global_mean"] = basis.global_mean;
  j["basis"] = basis.basis;
  return j;
}

PcaBasis pca_from_json(const nlohmann::json& j, const std::string& context) {
  PcaBasis basis;
  for (const auto& name : j.at("classes")) basis.classes.push_back(parse_label(name));
  basis.n_per_class = j.at("n_per_class").get<int>();
  basis.dim = j.at("dim").get<std::size_t>();
  basis.class_means = j.at("class_means").get<std::vector<std::vector<double>>>();
  basis.class_eigenvalues = j.at("class_eigenvalues").get<std::vector<std::vector<double>>>();
  basis.class_variance_total = j.at("class_variance_total").get<std::vector<double>>();
  basis.global_mean = j.at("global_mean").get<std::vector<double>>();
  basis.basis = j.at("basis").get<std::vector<std::vector<double>>>();
  for (const auto& row : basis.basis)
    if (row.size() != basis.dim)
      throw std::runtime_error(context + ": basis row dimension mismatch");
  return basis;
}

}  // namespace detail

void save_pca_basis(const PcaBasis& basis, const std::filesystem::path& path) {
  nlohmann::json j = detail::pca_to_json(basis);
  j["format"] = "ecgrhythm-pca-basis";
  j["version"] = kBasisFileVersion;

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write PCA basis file " + path.string());
  out << j.dump(1, '\t') << "\n";
}

PcaBasis load_pca_basis(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open PCA basis file " + path.string());
  nlohmann::json j;
  in >> j;
  if (j.value("format", "") != "ecgrhythm-pca-basis")
    throw std::runtime_error(path.string() + ": not a PCA basis file");
  if (j.value("version", -1) != kBasisFileVersion)
    throw std::runtime_error(path.string() + ": unsupported basis file version");
  return detail::pca_from_json(j, path.string());
}

}  // namespace ecgrhythm
