#pragma once

#include <optional>

#include "eulercert/surfrep.hpp"
#include "eulercert/wordcheck.hpp"

namespace eulercert {

enum class IsomClass { Hyperbolic, Parabolic, Elliptic, CentralPM };

/// Classification of a unimodular matrix by tr^2 - 4, decided exactly.
IsomClass classify(const Mat2& h);

const char* isom_class_name(IsomClass c);

struct EigenSplit {
  /// Fixed points of h on P1 over the working field; x1 belongs to the
  /// eigenvalue lambda with sign(lambda - 1/lambda) = sign(tr h).
  ProjPoint x1, x2;
  /// Radicand when the base field had to be extended to Q(sqrt(d)).
  std::optional<mpz_class> extension_d;
  FieldDesc working_field;
};

/// Splits a hyperbolic matrix into its two eigenlines, extending Q to
/// Q(sqrt(d)) automatically when tr^2 - 4 is not a square.  Extensions of an
/// already-extended (or rational-function) base field are refused with
/// UnsupportedExtension; towers are out of scope.
EigenSplit eigen_split(const Mat2& h);

/// The involution commuting with a hyperbolic h that acts as +1 / -1 on its
/// eigenlines: r = (2h - tr(h) I) / sqrt(tr^2 - 4), with det r = -1 and
/// r^2 = I.  Of {r, -r} the representative with entry(1,1) >= 0 (tie-broken
/// by entry(1,2) >= 0) is returned, so results are bit-for-bit reproducible.
Mat2 reflection(const Mat2& h);

/// Extends n pairs to a genus-2n surface representation by mirroring through
/// the reflection of h = prod [a_i, b_i]:
///
///   a_i = r b_{2n+1-i} r^-1,  b_i = r a_{2n+1-i} r^-1   (n < i <= 2n).
///
/// The constructed relator is exactly the identity (h r^-1 h^-1 r = 1 since
/// r commutes with h); this is re-verified on every call.
SurfaceRep double_pairs(const std::vector<std::pair<Mat2, Mat2>>& pairs);

struct DoublingResult {
  std::vector<std::pair<Mat2, Mat2>> input;
  Mat2 h;
  FieldElement trace_h;
  std::optional<mpz_class> extension_d;
  ProjPoint x1, x2;
  Mat2 r;
  SurfaceRep doubled;
  long f_value = 0;
  long bound = 0;
  bool maximal = false;
};

DoublingResult run_doubling(const std::vector<std::pair<Mat2, Mat2>>& pairs);

struct HeuristicParams {
  int max_length = 8;
  double epsilon = 1e-6;
  long word_cap = 1L << 21;
};

enum class HeuristicVerdict { Ok, Violated, NotApplicable };

struct HeuristicReport {
  HeuristicVerdict verdict = HeuristicVerdict::NotApplicable;
  std::optional<std::string> witness;
  int max_length = 0;
  double epsilon = 0;
  long words_checked = 0;
};

struct Certificate {
  DoublingResult result;
  HeuristicReport heuristic;
  std::string verdict;
};

/// Full certificate pipeline: classify, double, compute the exact integer
/// f = sum of cocycle values over the genus-2n cycle, compare against
/// bound = kNormConst * (2 (2n) - 2), and attach the word-enumeration
/// discreteness heuristic (run on the n input pairs; inapplicable over Q(t)).
/// A Maximal verdict certifies the premise |f| = bound exactly; the
/// implication to freeness/discreteness is Goldman-type maximality theory,
/// not re-proved at runtime.  NonMaximal is not a disproof.
Certificate certify(const std::vector<std::pair<Mat2, Mat2>>& pairs,
                    const HeuristicParams& params = {});

}  // namespace eulercert
