#pragma once

#include <string>

#include "sl2loc/rational.hpp"

namespace sl2loc {

/// The two standard affine charts of the projective line. ChartZero carries
/// the coordinate z, ChartInfinity the coordinate w; on the overlap w = 1/z.
enum class Chart { Zero, Infinity };

inline Chart other_chart(Chart c) {
  return c == Chart::Zero ? Chart::Infinity : Chart::Zero;
}

inline char chart_coordinate(Chart c) { return c == Chart::Zero ? 'z' : 'w'; }

inline std::string chart_name(Chart c) {
  return c == Chart::Zero ? "chart0" : "chartinf";
}

inline void require_same_chart(Chart a, Chart b, const char* op) {
  if (a != b)
    throw Error(std::string(op) + ": chart mismatch (" + chart_name(a) + " vs " +
                chart_name(b) + ")");
}

}  // namespace sl2loc
