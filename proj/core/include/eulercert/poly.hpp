#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eulercert {

using Rational = mpq_class;

inline int sgn(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

/// Univariate polynomial over Q in the indeterminate t.
/// Coefficients are stored low-to-high with the leading one nonzero;
/// the zero polynomial has an empty coefficient vector (degree -1).
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rational c);
  explicit Poly(std::vector<Rational> coeffs);

  /// The indeterminate t.
  static Poly t();
  static Poly one() { return Poly(Rational(1)); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;

  /// Leading coefficient; the zero polynomial has none.
  const Rational& lc() const { return c_.back(); }
  /// Coefficient of t^i (zero outside the stored range).
  Rational coeff(int i) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& f, const Poly& g);
  friend Poly operator-(const Poly& f, const Poly& g);
  friend Poly operator*(const Poly& f, const Poly& g);
  friend bool operator==(const Poly& f, const Poly& g) { return f.c_ == g.c_; }

  Poly scaled(const Rational& s) const;
  Poly monic() const;

  /// Quotient and remainder of exact division by a nonzero divisor.
  static std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
  /// Monic gcd (gcd(0, 0) = 0).
  static Poly gcd(Poly f, Poly g);

  /// Exact square root, if this polynomial is the square of another.
  std::optional<Poly> try_sqrt() const;

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Exact square root of a nonnegative rational, if it is a square.
std::optional<Rational> rational_sqrt(const Rational& q);

}  // namespace eulercert
