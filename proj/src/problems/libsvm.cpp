#include "acfgm/problems/libsvm.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <string_view>
#include <vector>

#include "acfgm/core/errors.hpp"

namespace acfgm {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

double parse_real(std::string_view tok, std::size_t line) {
  std::string_view t = tok;
  if (!t.empty() && t.front() == '+') t.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw ParseError("malformed number '" + std::string(tok) + "'", line);
  }
  return v;
}

std::size_t parse_index(std::string_view tok, std::string_view whole, std::size_t line) {
  std::size_t v = 0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
    throw ParseError("malformed feature index in '" + std::string(whole) + "'", line);
  }
  if (v == 0) throw ParseError("feature index 0 (indices are 1-based)", line);
  return v;
}

void write_number(std::ostream& out, double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.write(buf, res.ptr - buf);
}

}  // namespace

Dataset libsvm_parse(std::istream& in, const LibsvmOptions& options) {
  std::vector<double> labels;
  std::vector<std::size_t> row_ptr{0};
  std::vector<std::size_t> cols;
  std::vector<double> vals;
  std::size_t max_index = 0;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    labels.push_back(parse_real(tokens.front(), lineno));
    std::size_t last = 0;
    for (std::size_t k = 1; k < tokens.size(); ++k) {
      const std::string_view tok = tokens[k];
      if (tok.front() == '#') break;  // trailing comment
      const auto colon = tok.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError("expected idx:val, got '" + std::string(tok) + "'", lineno);
      }
      const std::size_t idx = parse_index(tok.substr(0, colon), tok, lineno);
      if (idx <= last) {
        throw ParseError("feature indices not strictly increasing at '" + std::string(tok) + "'",
                         lineno);
      }
      if (options.features && idx > *options.features) {
        throw ParseError("feature index " + std::to_string(idx) + " exceeds " +
                             std::to_string(*options.features),
                         lineno);
      }
      last = idx;
      max_index = std::max(max_index, idx);
      cols.push_back(idx - 1);
      vals.push_back(parse_real(tok.substr(colon + 1), lineno));
    }
    row_ptr.push_back(cols.size());
  }
  if (in.bad()) throw InvalidInput("libsvm: read error");

  if (options.labels == LabelMode::Binary) {
    const std::set<double> distinct(labels.begin(), labels.end());
    if (distinct.size() > 2) {
      throw InvalidInput("libsvm: binary mode needs at most two distinct labels, found " +
                         std::to_string(distinct.size()));
    }
    if (distinct.size() == 2) {
      const double hi = *distinct.rbegin();
      for (auto& l : labels) l = l == hi ? 1.0 : -1.0;
    } else if (distinct.size() == 1 && *distinct.begin() != 1.0 && *distinct.begin() != -1.0) {
      throw InvalidInput("libsvm: single label value is not +-1");
    }
  }

  Dataset out;
  const std::size_t n = options.features.value_or(max_index);
  out.a = SparseMatrixCSR(labels.size(), n, std::move(row_ptr), std::move(cols), std::move(vals));
  out.b = DenseVector(std::move(labels));
  out.name = options.name;
  return out;
}

void libsvm_write(std::ostream& out, const Dataset& data) {
  validate(data);
  const auto rp = data.a.row_ptr();
  const auto ci = data.a.col_idx();
  const auto vs = data.a.values();
  for (std::size_t i = 0; i < data.rows(); ++i) {
    write_number(out, data.b[i]);
    for (std::size_t k = rp[i]; k < rp[i + 1]; ++k) {
      out << ' ' << ci[k] + 1 << ':';
      write_number(out, vs[k]);
    }
    out << '\n';
  }
}

Dataset libsvm_read_file(const std::filesystem::path& path, const LibsvmOptions& options) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  LibsvmOptions opts = options;
  if (opts.name.empty()) opts.name = path.stem().string();
  Dataset d = libsvm_parse(in, opts);
  d.provenance = "file:" + path.string();
  return d;
}

}  // namespace acfgm
