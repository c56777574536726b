#include "eulercert/floatmat.hpp"

namespace eulercert {

FloatMat2 fmul(const FloatMat2& g, const FloatMat2& h) {
  return {g[0] * h[0] + g[1] * h[2], g[0] * h[1] + g[1] * h[3],
          g[2] * h[0] + g[3] * h[2], g[2] * h[1] + g[3] * h[3]};
}

FloatMat2 finv(const FloatMat2& g) {
  double det = fdet(g);
  return {g[3] / det, -g[1] / det, -g[2] / det, g[0] / det};
}

double fdet(const FloatMat2& g) { return g[0] * g[3] - g[1] * g[2]; }

FloatMat2 downcast(const Mat2& m) { return m.to_doubles(); }

FloatSurfaceRep downcast(const SurfaceRep& rep) {
  FloatSurfaceRep out;
  out.genus = rep.genus;
  out.pairs.reserve(rep.pairs.size());
  for (const auto& [a, b] : rep.pairs) out.pairs.emplace_back(downcast(a), downcast(b));
  return out;
}

}  // namespace eulercert
