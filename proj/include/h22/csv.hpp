#pragma once

#include <cstddef>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "h22/operators.hpp"
#include "h22/series.hpp"

namespace h22 {

inline std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace detail {

inline std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? std::string() : field.substr(b, e - b + 1));
  }
  return out;
}

inline double parse_number(const std::string& s, std::size_t line_no) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": not a number: '" + s + "'");
  }
  return v;
}

}  // namespace detail

/// Reads "n,re,im" rows. Blank lines, '#' comments and a header whose first
/// field is "n" are skipped. Missing indices are zero; duplicates are errors.
inline Series read_coefficients_csv(std::istream& in) {
  std::map<std::size_t, complex> coeffs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    const auto f = detail::split_fields(line);
    if (f.size() != 3) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected 3 fields, got " +
                               std::to_string(f.size()));
    }
    if (f[0] == "n") {
      continue;
    }
    const double idx = detail::parse_number(f[0], line_no);
    if (idx < 0 || idx != static_cast<double>(static_cast<std::size_t>(idx))) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": index must be a non-negative integer");
    }
    const auto n = static_cast<std::size_t>(idx);
    if (!coeffs.emplace(n, complex(detail::parse_number(f[1], line_no), detail::parse_number(f[2], line_no))).second) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": duplicate index " + std::to_string(n));
    }
  }
  if (coeffs.empty()) {
    throw std::runtime_error("no coefficient rows");
  }
  std::vector<complex> c(coeffs.rbegin()->first + 1);
  for (const auto& [n, v] : coeffs) {
    c[n] = v;
  }
  return Series(std::move(c));
}

inline void write_coefficients_csv(std::ostream& out, const Series& f) {
  out << "n,re,im\n";
  for (std::size_t n = 0; n <= f.order(); ++n) {
    out << n << ',' << format_g17(f[n].real()) << ',' << format_g17(f[n].imag()) << '\n';
  }
}

inline void write_matrix_csv(std::ostream& out, const OperatorMatrix& T) {
  out << "m,n,re,im\n";
  const auto rows = static_cast<std::size_t>(T.entries.rows());
  const auto cols = static_cast<std::size_t>(T.entries.cols());
  for (std::size_t m = 0; m < rows; ++m) {
    for (std::size_t n = 0; n < cols; ++n) {
      const complex v = T(m, n);
      out << m << ',' << n << ',' << format_g17(v.real()) << ',' << format_g17(v.imag()) << '\n';
    }
  }
}

}  // namespace h22
