#include "ecgrhythm/kernel.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ecgrhythm {

void validate_kernel(const KernelSpec& spec) {
  switch (spec.type) {
    case KernelType::Linear:
      return;
    case KernelType::Polynomial:
      if (!(spec.poly_c > 0.0)) throw std::invalid_argument("polynomial kernel: c must be > 0");
      if (spec.degree < 1 || spec.degree > 6)
        throw std::invalid_argument("polynomial kernel: degree must be in [1, 6]");
      return;
    case KernelType::Rbf:
      if (!(spec.gamma > 0.0)) throw std::invalid_argument("rbf kernel: gamma must be > 0");
      return;
  }
  throw std::invalid_argument("invalid kernel type");
}

namespace {

double dot(std::span<const double> x, std::span<const double> y) {
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

double sq_dist(std::span<const double> x, std::span<const double> y) {
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    acc += d * d;
  }
  return acc;
}

double ipow(double base, int exp) {
  double acc = 1.0;
  for (int i = 0; i < exp; ++i) acc *= base;
  return acc;
}

}  // namespace

double kernel_eval(const KernelSpec& spec, std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw std::invalid_argument("kernel_eval: dimension mismatch (" + std::to_string(x.size()) +
                                " vs " + std::to_string(y.size()) + ")");
  switch (spec.type) {
    case KernelType::Linear: return dot(x, y);
    case KernelType::Polynomial: return ipow(1.0 + spec.poly_c * dot(x, y), spec.degree);
    case KernelType::Rbf: return std::exp(-spec.gamma * sq_dist(x, y));
  }
  throw std::invalid_argument("invalid kernel type");
}

std::string describe(const KernelSpec& spec) {
  std::ostringstream out;
  switch (spec.type) {
    case KernelType::Linear: out << "linear"; break;
    case KernelType::Polynomial: out << "poly(c=" << spec.poly_c << ",d=" << spec.degree << ")"; break;
    case KernelType::Rbf: out << "rbf(gamma=" << spec.gamma << ")"; break;
  }
  return out.str();
}

}  // namespace ecgrhythm
