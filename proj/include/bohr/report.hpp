#pragma once

#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bohr/radius.hpp"

namespace bohr {

/// Fixed CSV header for radius results.
inline constexpr const char* kRadiusCsvHeader = "psi,family,m,N,mode,r0,rb,residual,iterations,sharp";

/// Value printed with 12 significant digits.
inline std::string format12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

/// v rounded to 12 significant digits, so JSON output carries the same digits
/// as the text formats.
inline double round12(double v) { return std::strtod(format12(v).c_str(), nullptr); }

inline nlohmann::json radius_json(const RadiusResult& r) {
  return nlohmann::json{{"psi", r.psi},
                        {"family", to_string(r.family)},
                        {"m", r.m},
                        {"N", r.N},
                        {"mode", to_string(r.mode)},
                        {"r0", round12(r.r0)},
                        {"rb", round12(r.rb)},
                        {"residual", round12(r.residual)},
                        {"iterations", r.iterations},
                        {"sharp", r.sharp}};
}

inline std::string radius_csv_row(const RadiusResult& r) {
  return r.psi + "," + to_string(r.family) + "," + std::to_string(r.m) + "," +
         std::to_string(r.N) + "," + to_string(r.mode) + "," + format12(r.r0) + "," +
         format12(r.rb) + "," + format12(r.residual) + "," + std::to_string(r.iterations) + "," +
         (r.sharp ? "true" : "false");
}

// Left-aligned columns separated by two spaces.
inline void write_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

inline std::vector<std::string> radius_table_header() {
  return {"psi", "family", "m", "N", "mode", "r0", "rb", "residual", "iterations", "sharp"};
}

inline std::vector<std::string> radius_table_row(const RadiusResult& r) {
  return {r.psi,          to_string(r.family),   std::to_string(r.m),
          std::to_string(r.N), to_string(r.mode), format12(r.r0),
          format12(r.rb), format12(r.residual),  std::to_string(r.iterations),
          r.sharp ? "yes" : "no"};
}

}  // namespace bohr
