#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eulercert/floatmat.hpp"

namespace eulercert {

struct WordCheck {
  bool ok = false;
  /// First freely reduced word whose matrix is within epsilon of +-I,
  /// written with letters a, b, ... for the generators and A, B, ... for
  /// their inverses.
  std::optional<std::string> witness;
  long words_checked = 0;
};

/// Enumerates every nonempty freely reduced word of length <= max_length over
/// the generators and their inverses; ok is true iff no word lands within
/// epsilon (entrywise max norm) of +I or -I.  This is one-sided numerical
/// evidence: ok = false means the group is indistinguishable from non-free at
/// precision epsilon, ok = true proves nothing.
/// Throws CombinatorialBlowup when the word count would exceed word_cap.
WordCheck word_heuristic(const std::vector<FloatMat2>& generators, int max_length,
                         double epsilon, long word_cap = 1L << 21);

}  // namespace eulercert
