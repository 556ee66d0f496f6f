#include "acfgm/problems/dataset.hpp"

#include "acfgm/core/errors.hpp"

namespace acfgm {

void validate(const Dataset& data) {
  if (data.a.rows() != data.b.size()) {
    throw InvalidInput("dataset: A has " + std::to_string(data.a.rows()) + " rows but b has " +
                       std::to_string(data.b.size()) + " entries");
  }
  if (data.x_star && data.x_star->size() != data.a.cols()) {
    throw InvalidInput("dataset: x_star has wrong length");
  }
}

bool has_binary_labels(const Dataset& data) {
  for (double v : data.b.values()) {
    if (v != 1.0 && v != -1.0) return false;
  }
  return true;
}

}  // namespace acfgm
