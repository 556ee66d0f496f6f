#include "acfgm/harness/trace.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "acfgm/core/errors.hpp"
#include "acfgm/harness/format.hpp"

namespace acfgm::harness {

namespace {

using nlohmann::json;

void put_optional(std::ostream& out, const std::optional<double>& value) {
  out << ',';
  if (value) out << format_double(*value);
}

std::optional<double> optional_field(std::string_view text, std::size_t line, const char* name) {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  auto value = parse_double(text);
  if (!value) throw ParseError(std::string("bad ") + name + " '" + std::string(text) + "'", line);
  return value;
}

json optional_json(const std::optional<double>& value) {
  return value ? json(*value) : json(nullptr);
}

std::optional<double> optional_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

}  // namespace

void check_monotone(const Trace& trace) {
  for (std::size_t i = 1; i < trace.records.size(); ++i) {
    const auto& a = trace.records[i - 1];
    const auto& b = trace.records[i];
    if (b.iteration <= a.iteration) throw InvalidInput("trace iterations not strictly increasing");
    if (b.oracle_calls < a.oracle_calls) throw InvalidInput("trace oracle calls decrease");
    if (b.elapsed_seconds < a.elapsed_seconds) throw InvalidInput("trace elapsed time decreases");
  }
}

void write_csv(std::ostream& out, const Trace& trace) {
  out << kTraceHeader << '\n';
  for (const auto& r : trace.records) {
    out << r.iteration << ',' << r.oracle_calls << ',' << format_double(r.elapsed_seconds) << ','
        << format_double(r.objective);
    put_optional(out, r.gap);
    put_optional(out, r.eta);
    put_optional(out, r.tau);
    put_optional(out, r.local_curvature);
    out << '\n';
  }
}

std::vector<TraceRecord> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty trace file", 1);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kTraceHeader) throw ParseError("unexpected header '" + line + "'", 1);
  std::vector<TraceRecord> records;
  std::size_t number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (trim(line).empty()) continue;
    std::vector<std::string_view> fields;
    std::string_view rest(line);
    while (true) {
      const auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != 8) {
      throw ParseError("expected 8 fields, got " + std::to_string(fields.size()), number);
    }
    TraceRecord r;
    auto iteration = parse_unsigned(fields[0]);
    auto calls = parse_unsigned(fields[1]);
    auto elapsed = parse_double(fields[2]);
    auto objective = parse_double(fields[3]);
    if (!iteration || !calls || !elapsed || !objective) {
      throw ParseError("malformed required field", number);
    }
    r.iteration = static_cast<std::size_t>(*iteration);
    r.oracle_calls = static_cast<std::size_t>(*calls);
    r.elapsed_seconds = *elapsed;
    r.objective = *objective;
    r.gap = optional_field(fields[4], number, "gap");
    r.eta = optional_field(fields[5], number, "eta");
    r.tau = optional_field(fields[6], number, "tau");
    r.local_curvature = optional_field(fields[7], number, "L_local");
    records.push_back(r);
  }
  return records;
}

void write_json(std::ostream& out, const Trace& trace) {
  json j;
  j["problem"] = trace.problem;
  j["solver"] = trace.solver;
  j["method"] = trace.method;
  j["settings"] = trace.settings;
  j["config_hash"] = trace.config_hash;
  j["init_oracle_calls"] = trace.init_oracle_calls;
  j["reference"] = optional_json(trace.reference);
  j["reference_source"] = trace.reference_source;
  j["diverged"] = trace.diverged;
  j["stationary"] = trace.stationary;
  j["message"] = trace.message;
  j["wall_seconds"] = trace.wall_seconds;
  j["final_last_objective"] = optional_json(trace.final_last_objective);
  json records = json::array();
  for (const auto& r : trace.records) {
    records.push_back({{"iteration", r.iteration},
                       {"oracle_calls", r.oracle_calls},
                       {"elapsed_seconds", r.elapsed_seconds},
                       {"objective", r.objective},
                       {"gap", optional_json(r.gap)},
                       {"eta", optional_json(r.eta)},
                       {"tau", optional_json(r.tau)},
                       {"L_local", optional_json(r.local_curvature)}});
  }
  j["records"] = std::move(records);
  out << j.dump(1) << '\n';
}

Trace parse_json(std::istream& in) {
  json j;
  try {
    in >> j;
    Trace t;
    t.problem = j.at("problem").get<std::string>();
    t.solver = j.at("solver").get<std::string>();
    t.method = j.value("method", std::string{});
    t.settings = j.value("settings", std::string{});
    t.config_hash = j.value("config_hash", std::string{});
    t.init_oracle_calls = j.value("init_oracle_calls", std::size_t{0});
    t.reference = optional_from(j, "reference");
    t.reference_source = j.value("reference_source", std::string{});
    t.diverged = j.value("diverged", false);
    t.stationary = j.value("stationary", false);
    t.message = j.value("message", std::string{});
    t.wall_seconds = j.value("wall_seconds", 0.0);
    t.final_last_objective = optional_from(j, "final_last_objective");
    for (const auto& r : j.at("records")) {
      TraceRecord rec;
      rec.iteration = r.at("iteration").get<std::size_t>();
      rec.oracle_calls = r.at("oracle_calls").get<std::size_t>();
      rec.elapsed_seconds = r.at("elapsed_seconds").get<double>();
      rec.objective = r.at("objective").get<double>();
      rec.gap = optional_from(r, "gap");
      rec.eta = optional_from(r, "eta");
      rec.tau = optional_from(r, "tau");
      rec.local_curvature = optional_from(r, "L_local");
      t.records.push_back(rec);
    }
    return t;
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed trace JSON: ") + e.what());
  }
}

std::vector<std::filesystem::path> export_traces(const std::vector<Trace>& traces,
                                                 const std::filesystem::path& dir,
                                                 const std::vector<ExportFormat>& formats) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw DataError("cannot create output directory '" + dir.string() + "': " + ec.message());
  std::vector<std::filesystem::path> written;
  for (const auto& trace : traces) {
    for (auto format : formats) {
      const auto path = dir / (trace.run_key() + (format == ExportFormat::CSV ? ".csv" : ".json"));
      std::ofstream out(path);
      if (!out) throw DataError("cannot write '" + path.string() + "'");
      if (format == ExportFormat::CSV) {
        write_csv(out, trace);
      } else {
        write_json(out, trace);
      }
      out.close();
      if (!out) throw DataError("error writing '" + path.string() + "'");
      written.push_back(path);
    }
  }
  return written;
}

std::vector<Trace> load_traces(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw DataError("not a directory: '" + dir.string() + "'");
  }
  std::map<std::string, std::filesystem::path> json_files, csv_files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto& p = entry.path();
    if (p.stem().string().find("__") == std::string::npos) continue;
    if (p.extension() == ".json") json_files[p.stem().string()] = p;
    if (p.extension() == ".csv") csv_files[p.stem().string()] = p;
  }
  std::vector<Trace> traces;
  for (const auto& [stem, path] : json_files) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot read '" + path.string() + "'");
    traces.push_back(parse_json(in));
  }
  for (const auto& [stem, path] : csv_files) {
    if (json_files.count(stem)) continue;
    std::ifstream in(path);
    if (!in) throw DataError("cannot read '" + path.string() + "'");
    Trace t;
    const auto split = stem.find("__");
    t.problem = stem.substr(0, split);
    t.solver = stem.substr(split + 2);
    try {
      t.records = parse_csv(in);
    } catch (const ParseError& e) {
      throw DataError(path.string() + ": " + e.what());
    }
    // Without metadata the first record stands in for the initialization.
    if (!t.records.empty()) t.init_oracle_calls = t.records.front().oracle_calls;
    traces.push_back(std::move(t));
  }
  std::sort(traces.begin(), traces.end(),
            [](const Trace& a, const Trace& b) { return a.run_key() < b.run_key(); });
  return traces;
}

}  // namespace acfgm::harness
