#include "eulercert/cocycle.hpp"

namespace eulercert {

int ell(const Mat2& g1, const Mat2& g2, const ProjPoint& p) {
  ProjPoint g1p = moebius_apply(g1, p);
  ProjPoint g12p = moebius_apply(g1 * g2, p);
  return psi(p, g1p, g12p);
}

long cocycle_defect(const Mat2& g1, const Mat2& g2, const Mat2& g3, const ProjPoint& p) {
  return static_cast<long>(ell(g2, g3, p)) - ell(g1 * g2, g3, p) +
         ell(g1, g2 * g3, p) - ell(g1, g2, p);
}

namespace {

long primitive(const Mat2& g, const ProjPoint& p, const ProjPoint& q) {
  ProjPoint gp = moebius_apply(g, p);
  ProjPoint gq = moebius_apply(g, q);
  return static_cast<long>(psi(p, gp, gq)) + psi(p, gq, q);
}

}  // namespace

long coboundary_difference(const Mat2& g1, const Mat2& g2, const ProjPoint& p,
                           const ProjPoint& q) {
  long diff = static_cast<long>(ell(g1, g2, p)) - ell(g1, g2, q);
  long du = primitive(g1, p, q) - primitive(g1 * g2, p, q) + primitive(g2, p, q);
  return diff - du;
}

}  // namespace eulercert
