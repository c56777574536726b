#pragma once

#include <array>
#include <string>

#include "eulercert/field.hpp"

namespace eulercert {

/// 2x2 matrix over an ordered field, the carrier of SL2/GL2 elements and of
/// Moebius actions on P1.  The determinant is computed exactly on
/// construction and cached.
class Mat2 {
 public:
  /// Any invertible matrix.  Throws SingularMatrix when det = 0.
  static Mat2 gl2(FieldElement a, FieldElement b, FieldElement c, FieldElement d);
  /// Unimodular matrix.  Throws BadDeterminant when det != 1.
  static Mat2 sl2(FieldElement a, FieldElement b, FieldElement c, FieldElement d);
  static Mat2 identity(const FieldDesc& field);

  const FieldElement& a() const { return e_[0]; }
  const FieldElement& b() const { return e_[1]; }
  const FieldElement& c() const { return e_[2]; }
  const FieldElement& d() const { return e_[3]; }
  const FieldElement& det() const { return det_; }
  FieldElement trace() const { return e_[0] + e_[3]; }
  FieldDesc field() const { return e_[0].field(); }

  friend Mat2 operator*(const Mat2& g, const Mat2& h);
  Mat2 operator-() const;
  Mat2 inverse() const;
  /// g * x * g^-1.
  Mat2 conjugate(const Mat2& x) const;

  friend bool operator==(const Mat2&, const Mat2&);
  bool is_identity() const;
  bool is_minus_identity() const;
  /// True for +I and -I (the projectively trivial elements).
  bool is_central() const;

  /// Entrywise archimedean downcast (row-major a, b, c, d).
  std::array<double, 4> to_doubles() const;

  /// Entrywise image under a rational embedding into `field`.
  /// Only Rational -> QuadExt embeddings are supported.
  Mat2 embedded(const FieldDesc& field) const;

 private:
  Mat2(FieldElement a, FieldElement b, FieldElement c, FieldElement d);
  std::array<FieldElement, 4> e_;
  FieldElement det_;
};

/// [g, h] = g h g^-1 h^-1.
Mat2 commutator(const Mat2& g, const Mat2& h);

}  // namespace eulercert
