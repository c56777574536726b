#include "eulercert/projline.hpp"

#include "eulercert/errors.hpp"

namespace eulercert {

ProjPoint::ProjPoint(FieldElement x, FieldElement y) : x_(std::move(x)), y_(std::move(y)) {
  if (y_.is_zero()) {
    if (x_.is_zero()) throw Error("projective point needs a nonzero coordinate");
    x_ = field_one(x_.field());
  } else {
    x_ = x_ / y_;
    y_ = field_one(y_.field());
  }
}

ProjPoint ProjPoint::finite(FieldElement x) {
  FieldElement one = field_one(x.field());
  return ProjPoint(std::move(x), std::move(one));
}

ProjPoint ProjPoint::infinity(const FieldDesc& field) {
  return ProjPoint(field_one(field), field_zero(field));
}

bool operator==(const ProjPoint& p, const ProjPoint& q) {
  return p.x_ == q.x_ && p.y_ == q.y_;
}

std::string ProjPoint::str() const {
  return "[" + x_.str() + ":" + y_.str() + "]";
}

FieldElement pair_det(const ProjPoint& p, const ProjPoint& q) {
  return p.x() * q.y() - q.x() * p.y();
}

int psi(const ProjPoint& u, const ProjPoint& v, const ProjPoint& w) {
  // One homogeneous formula, no infinity case split: rescaling any
  // representative multiplies the product by a square, so the sign is well
  // defined on P1.
  return (pair_det(u, v) * pair_det(v, w) * pair_det(w, u)).sign();
}

ProjPoint moebius_apply(const Mat2& g, const ProjPoint& p) {
  if (g.det().is_zero()) throw SingularMatrix();
  return ProjPoint(g.a() * p.x() + g.b() * p.y(), g.c() * p.x() + g.d() * p.y());
}

}  // namespace eulercert
