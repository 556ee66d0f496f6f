#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace acfgm::harness {

/// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

/// Whole-string parses; std::nullopt on trailing garbage or overflow.
std::optional<double> parse_double(std::string_view text);
std::optional<std::uint64_t> parse_unsigned(std::string_view text);
std::optional<bool> parse_bool(std::string_view text);

std::string_view trim(std::string_view text);

}  // namespace acfgm::harness
