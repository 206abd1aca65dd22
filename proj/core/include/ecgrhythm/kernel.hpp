#pragma once

#include <span>
#include <string>

namespace ecgrhythm {

enum class KernelType { Linear, Polynomial, Rbf };

/// Kernel specification: <x,y>, (1 + c<x,y>)^d, or exp(-gamma*||x-y||^2).
struct KernelSpec {
  KernelType type = KernelType::Linear;
  double poly_c = 1.0;  // > 0
  int degree = 3;       // in [1, 6]
  double gamma = 1.0;   // > 0

  static KernelSpec linear() { return {KernelType::Linear, 1.0, 1, 1.0}; }
  static KernelSpec polynomial(double c, int d) { return {KernelType::Polynomial, c, d, 1.0}; }
  static KernelSpec rbf(double gamma) { return {KernelType::Rbf, 1.0, 1, gamma}; }
};

/// Throws std::invalid_argument if parameters are out of range.
void validate_kernel(const KernelSpec& spec);

double kernel_eval(const KernelSpec& spec, std::span<const double> x, std::span<const double> y);

std::string describe(const KernelSpec& spec);

}  // namespace ecgrhythm
