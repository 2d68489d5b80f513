#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace lexistat {

/// Square labeled distance matrix, row-major.
struct DistanceMatrix {
  std::vector<std::string> labels;
  std::vector<double> values;

  DistanceMatrix() = default;
  explicit DistanceMatrix(std::vector<std::string> names)
      : labels(std::move(names)), values(labels.size() * labels.size(), 0.0) {}

  std::size_t size() const { return labels.size(); }
  double& at(std::size_t i, std::size_t j) { return values[i * size() + j]; }
  double at(std::size_t i, std::size_t j) const {
    return values[i * size() + j];
  }

  bool operator==(const DistanceMatrix&) const = default;
};

}  // namespace lexistat
