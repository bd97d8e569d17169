#pragma once

#include <string>

namespace spor {

// Shortest decimal form that parses back to the same double ("9" for 9.0,
// "0.1" for 0.1, "inf" for infinity). Used by every text format so files
// round-trip exactly.
std::string format_double(double x);

// Strict parsers; return false on trailing garbage or range errors.
bool parse_double(const std::string& token, double& out);
bool parse_u64(const std::string& token, std::uint64_t& out);
bool parse_u32(const std::string& token, std::uint32_t& out);

} // namespace spor
