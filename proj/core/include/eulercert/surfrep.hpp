#pragma once

#include <utility>
#include <vector>

#include "eulercert/cocycle.hpp"

namespace eulercert {

/// Frozen normalization: the exact cocycle sum of a maximal genus-g
/// representation is kNormConst * (2g - 2), while the float circle oracle
/// (which lives on P1 with circumference 1) reports 2g - 2.  The value 2 was
/// pinned once by the calibration acceptance test on doubled one-holed-torus
/// holonomies and is frozen here; every bound and certificate uses it.
inline constexpr long kNormConst = 2;

/// Genus-g tuple of unimodular matrix pairs (A_j, B_j).
struct SurfaceRep {
  int genus = 0;
  std::vector<std::pair<Mat2, Mat2>> pairs;

  FieldDesc field() const { return pairs.at(0).first.field(); }
};

/// The relator product [A_1,B_1] ... [A_g,B_g] in index order.
Mat2 relator(const SurfaceRep& rep);

enum class RelatorSign { Plus, Minus };

/// Diagnostics: a valid closed-surface representation has relator +I or -I
/// (the action on P1 factors through PSL2, so -I is accepted and the sign is
/// surfaced separately).
struct RelatorCheck {
  bool valid = false;
  RelatorSign sign = RelatorSign::Plus;
};
RelatorCheck check_relator(const SurfaceRep& rep);

/// Euler number of the representation: the exact integer
///
///   sum_j ell(I_{j-1}, A_j) + ell(I_{j-1} A_j, B_j)
///         - ell(I_{j-1} A_j B_j A_j^-1, A_j) - ell(I_j, B_j)
///
/// over the explicit fundamental 2-cycle, where I_j is the j-th partial
/// relator product.  Independent of the base point p.  Throws
/// NotARepresentation when the relator is not +-I.
long euler_number(const SurfaceRep& rep, const ProjPoint& p);

struct MilnorWood {
  long value = 0;
  long bound = 0;
  bool ok = false;
};

/// |euler_number| <= kNormConst * (2g - 2), checked with the default base
/// point [0 : 1].
MilnorWood milnor_wood_check(const SurfaceRep& rep);

/// Default base point [0 : 1] in the representation's field.
ProjPoint default_base_point(const FieldDesc& field);

}  // namespace eulercert
