#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <vector>

#include "ecgrhythm/kernel.hpp"

namespace ecgrhythm {

/// Soft-margin binary SVM in dual form: f(x) = sum_i coeff_i K(x, x_i) + b
/// with coeff_i = a_i * y_i. Only vectors with a_i > 0 are stored.
struct BinarySvmModel {
  KernelSpec kernel;
  double cost = 1.0;  // the C used for training
  std::vector<std::vector<double>> support_vectors;
  std::vector<double> coefficients;  // a_i * y_i, same order as support_vectors
  double bias = 0.0;
};

struct SmoParams {
  double cost = 1.0;               // C > 0
  KernelSpec kernel;
  double tol = 1e-3;               // KKT violation tolerance
  std::size_t max_iter = 1000000;  // working-pair updates before giving up
  std::size_t cache_bytes = 64ull << 20;  // kernel row cache budget
};

/// Raised when the working-pair loop hits max_iter before the KKT gap closes.
class SmoConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sequential minimal optimization on the dual problem
///   min 1/2 a'Qa - e'a  s.t. 0 <= a_i <= C, y'a = 0,
/// selecting the maximal-KKT-violating pair each step. Fully deterministic:
/// identical inputs give a bit-identical model. Labels must be +1/-1 with
/// both classes present; features must be finite.
BinarySvmModel smo_train(const std::vector<std::vector<double>>& data,
                         const std::vector<int>& labels, const SmoParams& params);

double decision_value(const BinarySvmModel& model, std::span<const double> x);

/// sign(decision_value); sign(0) is +1 by convention.
int predict(const BinarySvmModel& model, std::span<const double> x);

/// Dual objective sum(a) - 1/2 sum_ij a_i a_j y_i y_j K_ij of a trained model.
double dual_objective(const BinarySvmModel& model);

void save_svm_model(const BinarySvmModel& model, const std::filesystem::path& path);
BinarySvmModel load_svm_model(const std::filesystem::path& path);

}  // namespace ecgrhythm
