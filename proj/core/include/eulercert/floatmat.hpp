#pragma once

#include <array>
#include <utility>
#include <vector>

#include "eulercert/surfrep.hpp"

namespace eulercert {

using FloatMat2 = std::array<double, 4>;  // row-major a, b, c, d

FloatMat2 fmul(const FloatMat2& g, const FloatMat2& h);
FloatMat2 finv(const FloatMat2& g);
double fdet(const FloatMat2& g);

/// Inexact counterpart of SurfaceRep used by the float-only channels
/// (circle oracle, flow twist, word heuristic).
struct FloatSurfaceRep {
  int genus = 0;
  std::vector<std::pair<FloatMat2, FloatMat2>> pairs;
};

FloatMat2 downcast(const Mat2& m);
FloatSurfaceRep downcast(const SurfaceRep& rep);

}  // namespace eulercert
