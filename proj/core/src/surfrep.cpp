#include "eulercert/surfrep.hpp"

#include <cstdlib>

#include "eulercert/errors.hpp"

namespace eulercert {

Mat2 relator(const SurfaceRep& rep) {
  Mat2 r = Mat2::identity(rep.field());
  for (const auto& [a, b] : rep.pairs) r = r * commutator(a, b);
  return r;
}

RelatorCheck check_relator(const SurfaceRep& rep) {
  Mat2 r = relator(rep);
  if (r.is_identity()) return {true, RelatorSign::Plus};
  if (r.is_minus_identity()) return {true, RelatorSign::Minus};
  return {false, RelatorSign::Plus};
}

long euler_number(const SurfaceRep& rep, const ProjPoint& p) {
  if (!check_relator(rep).valid)
    throw NotARepresentation("relator is not +-identity");
  Mat2 partial = Mat2::identity(rep.field());
  long sum = 0;
  for (const auto& [a, b] : rep.pairs) {
    Mat2 prev = partial;
    partial = partial * commutator(a, b);
    sum += ell(prev, a, p);
    sum += ell(prev * a, b, p);
    sum -= ell(prev * a * b * a.inverse(), a, p);
    sum -= ell(partial, b, p);
  }
  return sum;
}

MilnorWood milnor_wood_check(const SurfaceRep& rep) {
  MilnorWood mw;
  mw.value = euler_number(rep, default_base_point(rep.field()));
  mw.bound = kNormConst * (2L * rep.genus - 2);
  mw.ok = std::abs(mw.value) <= mw.bound;
  return mw;
}

ProjPoint default_base_point(const FieldDesc& field) {
  return ProjPoint::finite(field_zero(field));
}

}  // namespace eulercert
