#include "eulercert/circle.hpp"

#include <cmath>

#include "eulercert/errors.hpp"

namespace eulercert {

double proj_angle(double x, double y) {
  double s = std::atan2(y, x) / M_PI;
  s -= std::floor(s);
  return s;
}

namespace {

FloatMat2 normalize_det1(const FloatMat2& m) {
  double det = fdet(m);
  if (det <= 0) throw SingularMatrix();
  double s = std::sqrt(det);
  return {m[0] / s, m[1] / s, m[2] / s, m[3] / s};
}

double apply_angles(const FloatMat2& m, double base, double x) {
  double w = std::floor(x);
  double s = x - w;
  double cx = std::cos(M_PI * s), sx = std::sin(M_PI * s);
  double img = proj_angle(m[0] * cx + m[1] * sx, m[2] * cx + m[3] * sx);
  double frac = img - base;
  frac -= std::floor(frac);  // in [0, 1): monotone branch above the base image
  return w + base + frac;
}

}  // namespace

LiftedMap::LiftedMap(const FloatMat2& m, int k)
    : m_(normalize_det1(m)), k_(k), base_(proj_angle(m_[0], m_[2])),
      inv_(finv(m_)), inv_base_(proj_angle(inv_[0], inv_[2])) {
  double roundtrip = apply_angles(m_, base_, apply_angles(inv_, inv_base_, 0.0)) + k_;
  inv_correction_ = static_cast<int>(std::lround(roundtrip));
}

double LiftedMap::operator()(double x) const {
  return apply_angles(m_, base_, x) + k_;
}

double LiftedMap::apply_inverse(double x) const {
  return apply_angles(inv_, inv_base_, x) - inv_correction_;
}

TranslationNumber translation_number(const LiftedMap& f, long iters) {
  if (iters < 1) throw Error("translation_number needs iters >= 1");
  double x = 0.0;
  for (long i = 0; i < iters; ++i) x = f(x);
  return {x / static_cast<double>(iters), 1.0 / static_cast<double>(iters)};
}

long milnor_euler(const FloatSurfaceRep& rep) {
  // Relator must be +-I within float tolerance.
  FloatMat2 relator{1, 0, 0, 1};
  for (const auto& [a, b] : rep.pairs)
    relator = fmul(relator, fmul(fmul(a, b), fmul(finv(a), finv(b))));
  double dev = 0;
  double sign = relator[0] + relator[3] >= 0 ? 1.0 : -1.0;
  const FloatMat2 id{sign, 0, 0, sign};
  for (int i = 0; i < 4; ++i) dev = std::max(dev, std::abs(relator[i] - id[i]));
  if (dev > 1e-9) throw NotARepresentation("float relator is not near +-identity");

  // Apply the lifted relator word to 0, rightmost letter first; commutators
  // of lifts are independent of the lift choices, so the word is a
  // translation by the Euler number.
  double x = 0.0;
  for (auto it = rep.pairs.rbegin(); it != rep.pairs.rend(); ++it) {
    LiftedMap la(it->first), lb(it->second);
    x = lb.apply_inverse(x);
    x = la.apply_inverse(x);
    x = lb(x);
    x = la(x);
  }
  double nearest = std::round(x);
  if (std::abs(x - nearest) > 0.1)
    throw PrecisionLoss("lifted relator translation is not close to an integer");
  return static_cast<long>(nearest);
}

double rot(const FloatMat2& g) {
  FloatMat2 m = normalize_det1(g);
  double tr = m[0] + m[3];
  if (std::abs(tr) >= 2.0) return 0.0;  // hyperbolic, parabolic or central
  double phi = std::acos(tr / 2.0);     // in (0, pi)
  // Orientation: for the rotation model [[cos, -sin],[sin, cos]] the lower
  // left entry is positive and the action adds phi/pi.
  double tau = (m[2] - m[1] >= 0) ? phi / M_PI : 1.0 - phi / M_PI;
  return tau - std::floor(tau);
}

GenusBound genus_lower_bound(double tau, long n, double defect) {
  if (defect <= 0) throw Error("defect constant must be positive");
  if (n < 1) throw Error("power must be >= 1");
  double raw = static_cast<double>(n) * std::abs(tau) / (4.0 * defect);
  return {tau, n, defect, static_cast<long>(std::ceil(raw))};
}

}  // namespace eulercert
