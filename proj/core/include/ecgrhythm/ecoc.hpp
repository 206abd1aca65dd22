#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "ecgrhythm/pca.hpp"
#include "ecgrhythm/svm.hpp"
#include "ecgrhythm/types.hpp"

namespace ecgrhythm {

inline constexpr int kEcocColumns = 6;

/// 3 x N coding matrix over {-1, 0, +1}; rows follow the SR, VT, VF order.
/// Column n defines binary classifier n: it trains on classes m with
/// w[m][n] != 0, labeled sgn(w[m][n]).
struct CodingMatrix {
  std::vector<std::array<int, kNumClasses>> columns;  // columns[n][m] = w_mn

  int cols() const { return static_cast<int>(columns.size()); }
  int at(int row, int col) const { return columns[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)]; }
};

/// The fixed matrix combining all one-vs-all and all pairwise classifiers:
///   SR:  1  1 -1  1  1  0
///   VT:  1 -1  1  0 -1  1
///   VF: -1  1  1 -1  0 -1
CodingMatrix default_coding_matrix();

/// Checks: >= 1 column, no all-zero column, every column has a +1 and a -1,
/// no two rows identical. Throws std::invalid_argument.
void validate_matrix(const CodingMatrix& matrix);

/// Minimum generalized Hamming distance between matrix rows: a position
/// counts 1 when both entries are nonzero and differ, 1/2 when exactly one is
/// zero, 0 otherwise. Reporting only; decoding never uses it.
double min_row_hamming(const CodingMatrix& matrix);

enum class LossKind { Hinge, Hamming, Exponential, Linear };

/// Hinge max(1-z, 0); Hamming (1-sgn(z))/2 with sgn(0) = 0; Exponential
/// e^-z; Linear -z.
double loss_eval(LossKind loss, double z);

LossKind parse_loss(const std::string& name);
std::string to_string(LossKind loss);

/// Six binary models glued by the coding matrix and decoded by loss sums.
struct EcocModel {
  CodingMatrix matrix;
  LossKind loss = LossKind::Hinge;
  std::vector<BinarySvmModel> classifiers;  // one per column

  // what the feature vectors are, so ensembles can re-featurize sub-segments
  std::string representation;           // "time", "spectrum", "reduced", "psa", "psm"
  std::optional<PcaBasis> pca;          // present when representation == "reduced"
  double window_s = 0.0;                // segment length the model was trained on
};

struct EcocColumnParams {
  SmoParams svm;
};

/// Trains one SVM per matrix column on the vectors whose class has a nonzero
/// entry there, relabeled to the entry's sign. All three classes must appear.
EcocModel train_ecoc(const std::vector<std::vector<double>>& vectors,
                     const std::vector<RhythmLabel>& labels, const CodingMatrix& matrix,
                     const std::vector<EcocColumnParams>& per_column, LossKind loss);

/// Eq-style decoding: picks the row minimizing sum_n loss(w_mn * f_n); zero
/// entries contribute loss(0). Ties resolve to the lowest class index.
RhythmLabel decode(std::span<const double> decision_values, const CodingMatrix& matrix,
                   LossKind loss);

/// Decision values of the six classifiers at x, in column order.
std::vector<double> ecoc_decision_values(const EcocModel& model, std::span<const double> x);

RhythmLabel classify(const EcocModel& model, std::span<const double> x);

void save_ecoc_model(const EcocModel& model, const std::filesystem::path& path);
EcocModel load_ecoc_model(const std::filesystem::path& path);

}  // namespace ecgrhythm
