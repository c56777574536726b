#pragma once

#include "eulercert/mat2.hpp"

namespace eulercert {

/// Point of P1(K) in canonical homogeneous coordinates: finite points are
/// [x : 1], the point at infinity is [1 : 0].
class ProjPoint {
 public:
  /// Canonicalizes [x : y]; throws if both coordinates are zero.
  ProjPoint(FieldElement x, FieldElement y);
  /// The finite point [x : 1].
  static ProjPoint finite(FieldElement x);
  static ProjPoint infinity(const FieldDesc& field);

  const FieldElement& x() const { return x_; }
  const FieldElement& y() const { return y_; }
  bool is_infinity() const { return y_.is_zero(); }
  FieldDesc field() const { return x_.field(); }

  friend bool operator==(const ProjPoint&, const ProjPoint&);
  std::string str() const;

 private:
  FieldElement x_, y_;
};

/// x_p * y_q - x_q * y_p, the homogeneous 2x2 determinant of a pair.
FieldElement pair_det(const ProjPoint& p, const ProjPoint& q);

/// Orientation of a triple of points on P1(K): +1 for positively ordered
/// triples, -1 for negatively ordered ones, 0 when two points coincide.
/// The convention is pinned by psi(0, 1, infinity) = +1, which makes the
/// induced order on the finite points the field order.
int psi(const ProjPoint& u, const ProjPoint& v, const ProjPoint& w);

/// The Moebius action of GL2 on P1.
ProjPoint moebius_apply(const Mat2& g, const ProjPoint& p);

}  // namespace eulercert
