#pragma once

// Internal JSON (de)serialization helpers shared by the model file writers.
// Not installed; the public headers stay free of the json dependency.

#include <nlohmann/json.hpp>
#include <string>

#include "ecgrhythm/pca.hpp"
#include "ecgrhythm/svm.hpp"

namespace ecgrhythm::detail {

nlohmann::json svm_to_json(const BinarySvmModel& model);
BinarySvmModel svm_from_json(const nlohmann::json& j, const std::string& context);

nlohmann::json pca_to_json(const PcaBasis& basis);
PcaBasis pca_from_json(const nlohmann::json& j, const std::string& context);

}  // namespace ecgrhythm::detail
