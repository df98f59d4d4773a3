#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace h22 {

using json = nlohmann::json;

enum class Verdict { pass, fail, finding };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::finding:
      return "finding";
  }
  return "fail";
}

/// Outcome of one check. `inputs["relation"]` states how lhs and rhs are
/// compared so the verdict can be recomputed from the document alone.
struct CheckReport {
  std::string check_id;
  json inputs = json::object();
  json lhs;
  json rhs;
  double tolerance = 0.0;
  Verdict verdict = Verdict::fail;
  std::optional<std::int64_t> runtime_ms;
};

inline json to_json_value(std::complex<double> z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

inline json to_json(const CheckReport& r, bool with_timing) {
  json j;
  j["check_id"] = r.check_id;
  j["inputs"] = r.inputs;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["tolerance"] = r.tolerance;
  j["verdict"] = std::string(to_string(r.verdict));
  if (with_timing && r.runtime_ms) {
    j["runtime_ms"] = *r.runtime_ms;
  } else {
    j["runtime_ms"] = nullptr;
  }
  return j;
}

inline std::string format_double(double x) {
  if (!std::isfinite(x)) {
    return "null";
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  if (s.find_first_of(".eEn") == std::string::npos) {
    s += ".0";
  }
  return s;
}

namespace detail {
inline void write_json(std::ostream& os, const json& j, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      // nlohmann's default object is an ordered std::map, so keys come out sorted.
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) {
          os << ",\n";
        }
        first = false;
        os << pad << json(it.key()).dump() << ": ";
        write_json(os, it.value(), indent, depth + 1);
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
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) {
          os << ",\n";
        }
        os << pad;
        write_json(os, j[i], indent, depth + 1);
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
}  // namespace detail

/// Deterministic JSON text: sorted keys, floats with 17 significant digits.
inline std::string dump_json(const json& j, int indent = 2) {
  std::ostringstream os;
  detail::write_json(os, j, indent, 0);
  os << "\n";
  return os.str();
}

inline json reports_to_json(const std::vector<CheckReport>& reports, bool with_timing) {
  json arr = json::array();
  for (const auto& r : reports) {
    arr.push_back(to_json(r, with_timing));
  }
  return arr;
}

inline std::size_t count_verdict(const std::vector<CheckReport>& reports, Verdict v) {
  return static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [v](const CheckReport& r) { return r.verdict == v; }));
}

}  // namespace h22
