#pragma once

#include <initializer_list>
#include <vector>

#include "dp5/upoly.hpp"

namespace testutil {

/// Rational polynomial from integer coefficients, lowest degree first.
inline dp5::QPoly P(std::initializer_list<long> lowfirst) {
  std::vector<dp5::Rational> c;
  for (long v : lowfirst) c.emplace_back(v);
  return dp5::QPoly(c);
}

inline dp5::QPoly P(const std::vector<long>& lowfirst) {
  std::vector<dp5::Rational> c;
  for (long v : lowfirst) c.emplace_back(v);
  return dp5::QPoly(c);
}

}  // namespace testutil
