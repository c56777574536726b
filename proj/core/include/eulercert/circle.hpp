#pragma once

#include "eulercert/floatmat.hpp"

namespace eulercert {

/// Angle coordinate on P1(R): theta([cos(pi s) : sin(pi s)]) = s mod 1, so
/// the whole projective line is one turn of circumference 1.
double proj_angle(double x, double y);

/// The unique continuous monotone lift F : R -> R of the P1(R) action of a
/// positive-determinant matrix, pinned by F(0) in [k, k+1).  F is strictly
/// increasing and commutes with x -> x + 1.
class LiftedMap {
 public:
  /// Throws SingularMatrix when det <= 0.
  LiftedMap(const FloatMat2& m, int k = 0);

  double operator()(double x) const;
  /// The inverse lift (the composition with it is exactly the identity's
  /// integer translation bookkeeping).
  double apply_inverse(double x) const;

  const FloatMat2& matrix() const { return m_; }
  int offset() const { return k_; }

 private:
  FloatMat2 m_;  // normalized to det = 1
  int k_;
  double base_;            // angle image of 0
  FloatMat2 inv_;
  double inv_base_;
  int inv_correction_;     // F o G = id + c
};

struct TranslationNumber {
  double estimate = 0;
  double error_bound = 0;
};

/// Orbit estimate (F^n(0) - 0)/n of the translation number; since F - id is
/// periodic the estimate brackets tau within 1/iters.
TranslationNumber translation_number(const LiftedMap& f, long iters);

/// Milnor's lifted-relator Euler number: lift each generator with k = 0,
/// evaluate the lifted relator word prod [A~_j, B~_j] at 0 (a translation by
/// the Euler number e) and round.  Throws NotARepresentation when the float
/// relator is not within 1e-9 of +-I, PrecisionLoss when the translation is
/// further than 0.1 from an integer.
long milnor_euler(const FloatSurfaceRep& rep);

/// Homogeneous rotation number of the canonical (k = 0) lift, in P1 units:
/// eigen-angle / pi reduced to [0, 1) for elliptic matrices, 0 for
/// hyperbolic/parabolic/central ones.  A conjugation-invariant class
/// function and a homogeneous quasimorphism of defect <= 1.
double rot(const FloatMat2& g);

struct GenusBound {
  double tau = 0;
  long n = 0;
  double defect = 0;
  long lower_bound = 0;
};

/// Quasimorphism genus bound: any z with homogeneous quasimorphism value tau
/// needs at least ceil(n |tau| / (4 C)) commutators to express z^n.
/// Throws on C <= 0.
GenusBound genus_lower_bound(double tau, long n, double defect);

}  // namespace eulercert
