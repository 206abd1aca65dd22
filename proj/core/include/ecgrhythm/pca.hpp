#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "ecgrhythm/types.hpp"

namespace ecgrhythm {

/// Per-class principal subspaces merged into one projection basis: PCA is run
/// on each class separately, the top n_per_class eigenvectors of every class
/// are concatenated in class order, and the union is orthonormalized by
/// pivoted Gram-Schmidt (rank-deficient directions dropped at 1e-8).
struct PcaBasis {
  std::vector<RhythmLabel> classes;  // class order used for the union
  int n_per_class = 0;
  std::size_t dim = 0;  // ambient dimension

  std::vector<std::vector<double>> class_means;
  std::vector<std::vector<double>> class_eigenvalues;  // top n_per_class, descending
  std::vector<double> class_variance_total;            // trace of each class covariance
  std::vector<double> global_mean;                     // mean of class means; projection origin
  std::vector<std::vector<double>> basis;              // retained orthonormal vectors

  std::size_t retained() const { return basis.size(); }
};

/// Fits the per-class bases on training data only. Covariances use the n-1
/// divisor; eigenvector signs are fixed so the largest-magnitude component is
/// positive. Requires n_per_class in [5, 15] and at least n_per_class + 1
/// training vectors per class.
PcaBasis fit_pca_basis(const std::vector<std::vector<double>>& vectors,
                       const std::vector<RhythmLabel>& labels,
                       const std::vector<RhythmLabel>& classes, int n_per_class);

/// Coordinates of (x - global_mean) in the orthonormal basis.
std::vector<double> project(const PcaBasis& basis, std::span<const double> x);

void save_pca_basis(const PcaBasis& basis, const std::filesystem::path& path);
PcaBasis load_pca_basis(const std::filesystem::path& path);

}  // namespace ecgrhythm
