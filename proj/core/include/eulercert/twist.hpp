#pragma once

#include "eulercert/floatmat.hpp"
#include "eulercert/surfrep.hpp"

namespace eulercert {

/// The discrete regluing twist along the separating curve gamma whose class
/// is the product of the first kappa commutators: pairs j <= kappa are kept,
/// pairs j > kappa are conjugated by the reflection of gamma.  Conjugation by
/// r equals conjugation by the traceless multiple M = 2 gamma - tr(gamma) I
/// (the scalar 1/sqrt(tr^2-4) cancels), so the result stays in the base
/// field.  The relator is preserved exactly, with its sign, because r
/// commutes with gamma; the twist is an involution.
///
/// Requires 1 <= kappa < genus (KappaOutOfRange) and gamma hyperbolic
/// (NotHyperbolic).
SurfaceRep discrete_twist(const SurfaceRep& rep, int kappa);

struct FlowTwistResult {
  FloatSurfaceRep rep;
  /// True when tr(gamma) < -2 and the principal logarithm of -gamma (the
  /// same PSL2 element) was used.
  bool sign_flipped = false;
};

/// The continuous trace-Hamiltonian flow twist: pairs j > kappa are
/// conjugated by exp(-t A) with A = log(gamma), computed in closed form from
/// the spectral decomposition.  Float-only (exp/log have no exact form over
/// Q); defined only for rational-field representations.
FlowTwistResult flow_twist(const SurfaceRep& rep, int kappa, double t);

}  // namespace eulercert
