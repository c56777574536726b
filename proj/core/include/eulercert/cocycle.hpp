#pragma once

#include "eulercert/projline.hpp"

namespace eulercert {

/// The orientation 2-cocycle on groups acting on P1(K):
///
///   ell_p(g1, g2) = psi(p, g1 p, (g1 g2) p)
///
/// This is the standard inhomogeneous form of the invariant homogeneous
/// cocycle (g0, g1, g2) -> psi(g0 p, g1 p, g2 p); its class in H^2 is the
/// Euler class and does not depend on p.
int ell(const Mat2& g1, const Mat2& g2, const ProjPoint& p);

/// ell(g2,g3) - ell(g1 g2, g3) + ell(g1, g2 g3) - ell(g1, g2).
/// Identically zero (Lemma: ell is an integer cocycle).
long cocycle_defect(const Mat2& g1, const Mat2& g2, const Mat2& g3, const ProjPoint& p);

/// ell_p - ell_q - (delta u) for the primitive
///
///   u(g) = psi(p, g p, g q) + psi(p, g q, q),
///
/// with (delta u)(g1, g2) = u(g1) - u(g1 g2) + u(g2).  Identically zero:
/// the base-point dependence of ell is an explicit coboundary.
long coboundary_difference(const Mat2& g1, const Mat2& g2, const ProjPoint& p,
                           const ProjPoint& q);

}  // namespace eulercert
