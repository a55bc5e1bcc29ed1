#pragma once
// Published data used as fixtures: the two worked examples and the table of
// twenty seeds with their Galois data.

#include <string>
#include <vector>

#include "dp5/parse.hpp"

namespace fixtures {

inline const std::vector<std::string>& t_vars() {
  static const std::vector<std::string> v{"t0", "t1", "t2"};
  return v;
}
inline const std::vector<std::string>& x_vars() {
  static const std::vector<std::string> v{"x0", "x1", "x2", "x3", "x4", "x5"};
  return v;
}

inline std::vector<dp5::MPoly> parse_all(const std::vector<std::string>& src, const std::vector<std::string>& vars) {
  std::vector<dp5::MPoly> out;
  for (const auto& s : src) out.push_back(dp5::parse_poly(s, vars));
  return out;
}

// Seed x^5 - 1.
inline std::vector<dp5::MPoly> cyclo_quintics() {
  return parse_all({"t0^5 - 5*t0*t1^2*t2^2 + 2*t1^5 + 2*t2^5",
                    "t0^4*t1 - 2*t0^2*t1^2*t2 + t1^3*t2^2",
                    "t0^4*t2 - 2*t0^2*t1*t2^2 + t1^2*t2^3",
                    "t0^3*t1^2 - t0^2*t2^3 - t0*t1^3*t2 + t1*t2^4",
                    "t0^3*t1*t2 - 3*t0*t1^2*t2^2 + t1^5 + t2^5",
                    "t0^3*t2^2 - t0^2*t1^3 - t0*t1*t2^3 + t1^4*t2"},
                   t_vars());
}

inline std::vector<dp5::MPoly> cyclo_quadrics() {
  return parse_all({"x1*x5 - x2*x4 + x3^2", "x1*x4 - x2*x3 - x5^2", "x0*x5 + x1*x3 - x2^2 - 2*x4*x5",
                    "x0*x4 - x1*x2 + x3*x5 - 2*x4^2", "x0*x3 - x1^2 + x2*x5 - 2*x3*x4"},
                   x_vars());
}

// Split surface: cubics through the four coordinate-type points.
inline std::vector<dp5::MPoly> split_cubics() {
  return parse_all({"t1^2*t2 - t1*t2*t0", "t1^2*t0 - t1*t2*t0", "t0^2*t1 - t1*t2*t0", "t0^2*t2 - t1*t2*t0",
                    "t2^2*t0 - t1*t2*t0", "t2^2*t1 - t1*t2*t0"},
                   t_vars());
}

/// The skew-symmetric matrix of linear forms.
inline std::vector<std::vector<dp5::MPoly>> split_syzygy_matrix() {
  const std::vector<std::vector<std::string>> m{{"0", "-x0+x1", "-x1", "x1-x5", "x5"},
                                                {"x0-x1", "0", "-x2", "-x5", "x5"},
                                                {"x1", "x2", "0", "x2", "-x3"},
                                                {"-x1+x5", "x5", "-x2", "0", "x4"},
                                                {"-x5", "-x5", "x3", "-x4", "0"}};
  std::vector<std::vector<dp5::MPoly>> out;
  for (const auto& row : m) out.push_back(parse_all(row, x_vars()));
  return out;
}

struct TableRow {
  std::string group;
  int orbits;
  std::string seed;
  int degree;
};

inline const std::vector<TableRow>& table1() {
  static const std::vector<TableRow> rows{
      {"S5", 1, "x^5-2*x^4-3*x^3+6*x^2-1", 5},
      {"A5", 1, "x^5-11*x^3-5*x^2+18*x+9", 5},
      {"S4", 2, "(x^4-4*x^2-x+1)*x", 3},
      {"H20", 1, "x^5-9*x^3-4*x^2+17*x+12", 5},
      {"A4", 2, "(x^4-x^3-7*x^2+2*x+9)*x", 3},
      {"D6", 3, "(x^3-2)*(x^2-5)", 4},
      {"D6", 3, "(x^3+2)*(x^2+x+1)", 4},
      {"D5", 2, "x^5-x^4-5*x^3+4*x^2+3*x-1", 5},
      {"D4", 3, "(x^4-4*x^2+5)*x", 3},
      {"D4", 3, "(x^4-8*x^2-4)*x", 3},
      {"S3", 4, "(x^3-x^2-3*x+1)*(x+1)*x", 3},
      {"C6", 3, "(x^3-x^2-2*x+1)*(x^2+1)", 4},
      {"C5", 2, "x^5-x^4-4*x^3+3*x^2+3*x-1", 5},
      {"C4", 3, "(x^4-x^3-4*x^2+4*x+1)*x", 3},
      {"C2xC2", 4, "(x^4-2*x^2+9)*x", 3},
      {"C2xC2", 5, "(x^2+1)*(x^2-2)*x", 3},
      {"C3", 4, "(x^3-x^2-2*x+1)*(x+1)*x", 3},
      {"C2", 6, "(x^2+1)*(x^2+4)*x", 3},
      {"C2", 7, "(x^2+1)*(x+1)*(x-1)*x", 3},
      {"1", 10, "(x+2)*(x-2)*(x+1)*(x-1)*x", 3},
  };
  return rows;
}

/// Index of the row whose group cell is checked against the tower oracle.
constexpr size_t kSecondD6Row = 6;

}  // namespace fixtures
