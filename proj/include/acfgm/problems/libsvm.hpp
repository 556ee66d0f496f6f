#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "acfgm/problems/dataset.hpp"

namespace acfgm {

enum class LabelMode {
  Regression,  // labels kept as read
  Binary,      // exactly two distinct labels: larger -> +1, smaller -> -1
};

struct LibsvmOptions {
  LabelMode labels = LabelMode::Regression;
  std::optional<std::size_t> features;  // default: largest index seen
  std::string name;
};

/// Parses "label idx:val idx:val ..." lines with 1-based strictly increasing
/// indices. Blank lines and lines starting with '#' are skipped. Throws
/// ParseError carrying the 1-based line number.
Dataset libsvm_parse(std::istream& in, const LibsvmOptions& options = {});

/// Writes one line per row with shortest round-trip number formatting.
void libsvm_write(std::ostream& out, const Dataset& data);

/// Reads a file; provenance becomes "file:<path>". Throws InvalidInput when
/// the file cannot be opened.
Dataset libsvm_read_file(const std::filesystem::path& path, const LibsvmOptions& options = {});

}  // namespace acfgm
