#include "eulercert/mat2.hpp"

#include "eulercert/errors.hpp"

namespace eulercert {

Mat2::Mat2(FieldElement a, FieldElement b, FieldElement c, FieldElement d)
    : e_{std::move(a), std::move(b), std::move(c), std::move(d)},
      det_(e_[0] * e_[3] - e_[1] * e_[2]) {}

Mat2 Mat2::gl2(FieldElement a, FieldElement b, FieldElement c, FieldElement d) {
  Mat2 m(std::move(a), std::move(b), std::move(c), std::move(d));
  if (m.det_.is_zero()) throw SingularMatrix();
  return m;
}

Mat2 Mat2::sl2(FieldElement a, FieldElement b, FieldElement c, FieldElement d) {
  Mat2 m(std::move(a), std::move(b), std::move(c), std::move(d));
  if (!m.det_.is_one()) throw BadDeterminant("matrix is not unimodular");
  return m;
}

Mat2 Mat2::identity(const FieldDesc& field) {
  FieldElement one = field_one(field), zero = field_zero(field);
  return Mat2(one, zero, zero, one);
}

Mat2 operator*(const Mat2& g, const Mat2& h) {
  return Mat2(g.e_[0] * h.e_[0] + g.e_[1] * h.e_[2],
              g.e_[0] * h.e_[1] + g.e_[1] * h.e_[3],
              g.e_[2] * h.e_[0] + g.e_[3] * h.e_[2],
              g.e_[2] * h.e_[1] + g.e_[3] * h.e_[3]);
}

Mat2 Mat2::operator-() const { return Mat2(-e_[0], -e_[1], -e_[2], -e_[3]); }

Mat2 Mat2::inverse() const {
  if (det_.is_zero()) throw SingularMatrix();
  return Mat2(e_[3] / det_, -e_[1] / det_, -e_[2] / det_, e_[0] / det_);
}

Mat2 Mat2::conjugate(const Mat2& x) const { return *this * x * inverse(); }

bool operator==(const Mat2& g, const Mat2& h) {
  return g.e_[0] == h.e_[0] && g.e_[1] == h.e_[1] && g.e_[2] == h.e_[2] &&
         g.e_[3] == h.e_[3];
}

bool Mat2::is_identity() const {
  return e_[0].is_one() && e_[1].is_zero() && e_[2].is_zero() && e_[3].is_one();
}

bool Mat2::is_minus_identity() const {
  return (-*this).is_identity();
}

bool Mat2::is_central() const { return is_identity() || is_minus_identity(); }

std::array<double, 4> Mat2::to_doubles() const {
  return {e_[0].to_double(), e_[1].to_double(), e_[2].to_double(), e_[3].to_double()};
}

Mat2 Mat2::embedded(const FieldDesc& field) const {
  if (this->field() == field) return *this;
  if (this->field().kind != FieldKind::Rational)
    throw MixedFields("only rational matrices can be embedded");
  auto lift = [&](const FieldElement& x) {
    return embed_rational(x.rational_value(), field);
  };
  return Mat2(lift(e_[0]), lift(e_[1]), lift(e_[2]), lift(e_[3]));
}

Mat2 commutator(const Mat2& g, const Mat2& h) {
  return g * h * g.inverse() * h.inverse();
}

}  // namespace eulercert
