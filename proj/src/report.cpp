#include "kgo/report.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

namespace kgo::report {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void dump_json(const json& j, std::ostream& os, int indent, int depth) {
  std::string pad(static_cast<size_t>(indent) * (depth + 1), ' ');
  std::string close_pad(static_cast<size_t>(indent) * depth, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << pad << json(it.key()).dump() << ": ";
        dump_json(it.value(), os, indent, depth + 1);
      }
      os << "\n" << close_pad << "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      bool first = true;
      for (const auto& el : j) {
        if (!first) os << ",\n";
        first = false;
        os << pad;
        dump_json(el, os, indent, depth + 1);
      }
      os << "\n" << close_pad << "]";
      return;
    }
    case json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << j.dump();
      return;
  }
}

std::string dump_json(const json& j) {
  std::ostringstream os;
  dump_json(j, os);
  os << "\n";
  return os.str();
}

}  // namespace kgo::report
