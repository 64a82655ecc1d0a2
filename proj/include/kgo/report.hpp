#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

namespace kgo::report {

using json = nlohmann::ordered_json;

/// Deterministic JSON serialization: insertion-ordered fields, floats printed
/// with 17 significant digits, no locale dependence.
void dump_json(const json& j, std::ostream& os, int indent = 2, int depth = 0);

std::string dump_json(const json& j);

/// Fixed 17-significant-digit float formatting shared with the CSV writer.
std::string format_double(double v);

}  // namespace kgo::report
