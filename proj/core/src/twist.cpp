#include "eulercert/twist.hpp"

#include <cmath>

#include "eulercert/doubling.hpp"
#include "eulercert/errors.hpp"

namespace eulercert {

namespace {

Mat2 separating_curve(const SurfaceRep& rep, int kappa) {
  if (kappa < 1 || kappa >= rep.genus)
    throw KappaOutOfRange("kappa must satisfy 1 <= kappa < genus");
  Mat2 gamma = Mat2::identity(rep.field());
  for (int j = 0; j < kappa; ++j)
    gamma = gamma * commutator(rep.pairs[static_cast<std::size_t>(j)].first,
                               rep.pairs[static_cast<std::size_t>(j)].second);
  if (classify(gamma) != IsomClass::Hyperbolic)
    throw NotHyperbolic("separating curve class is not hyperbolic");
  return gamma;
}

}  // namespace

SurfaceRep discrete_twist(const SurfaceRep& rep, int kappa) {
  Mat2 gamma = separating_curve(rep, kappa);
  FieldElement t = gamma.trace();
  FieldElement two = embed_rational(Rational(2), rep.field());
  // M = 2 gamma - tr(gamma) I, a scalar multiple of the reflection.
  Mat2 m = Mat2::gl2(two * gamma.a() - t, two * gamma.b(), two * gamma.c(),
                     two * gamma.d() - t);
  SurfaceRep out;
  out.genus = rep.genus;
  for (int j = 0; j < rep.genus; ++j) {
    const auto& [a, b] = rep.pairs[static_cast<std::size_t>(j)];
    if (j < kappa)
      out.pairs.emplace_back(a, b);
    else
      out.pairs.emplace_back(m.conjugate(a), m.conjugate(b));
  }
  return out;
}

FlowTwistResult flow_twist(const SurfaceRep& rep, int kappa, double t) {
  if (rep.field().kind != FieldKind::Rational)
    throw NonRationalField("flow twist is defined over the rational field only");
  Mat2 gamma = separating_curve(rep, kappa);

  FlowTwistResult result;
  FloatMat2 g = downcast(gamma);
  if (g[0] + g[3] < 0) {
    // Same PSL2 element; take the principal logarithm of -gamma.
    for (auto& e : g) e = -e;
    result.sign_flipped = true;
  }
  double tr = g[0] + g[3];
  double s = std::sqrt(tr * tr - 4.0);
  double lambda = (tr + s) / 2.0;
  // A = log(gamma) = log(lambda) R with R = (2 gamma - tr I)/s, R^2 = I;
  // exp(-tA) = cosh(u) I - sinh(u) R, u = t log(lambda).
  FloatMat2 r{(2 * g[0] - tr) / s, 2 * g[1] / s, 2 * g[2] / s, (2 * g[3] - tr) / s};
  double u = t * std::log(lambda);
  double ch = std::cosh(u), sh = std::sinh(u);
  FloatMat2 flow{ch - sh * r[0], -sh * r[1], -sh * r[2], ch - sh * r[3]};
  FloatMat2 flow_inv = finv(flow);

  result.rep.genus = rep.genus;
  for (int j = 0; j < rep.genus; ++j) {
    const auto& [a, b] = rep.pairs[static_cast<std::size_t>(j)];
    FloatMat2 fa = downcast(a), fb = downcast(b);
    if (j >= kappa) {
      fa = fmul(fmul(flow, fa), flow_inv);
      fb = fmul(fmul(flow, fb), flow_inv);
    }
    result.rep.pairs.emplace_back(fa, fb);
  }
  return result;
}

}  // namespace eulercert
