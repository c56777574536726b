#pragma once

#include <optional>
#include <string>
#include <variant>

#include "eulercert/poly.hpp"

namespace eulercert {

enum class FieldKind { Rational, QuadExt, RatFunc };

/// Identifies a field instance: the variant plus, for Q(sqrt(d)), the radicand.
struct FieldDesc {
  FieldKind kind = FieldKind::Rational;
  mpz_class d = 0;  // radicand; arbitrary size (doubling can produce huge ones)

  static FieldDesc rational() { return {FieldKind::Rational, 0}; }
  static FieldDesc quad(mpz_class d) { return {FieldKind::QuadExt, std::move(d)}; }
  static FieldDesc rat_func() { return {FieldKind::RatFunc, 0}; }

  friend bool operator==(const FieldDesc& x, const FieldDesc& y) {
    return x.kind == y.kind && x.d == y.d;
  }
  std::string str() const;
};

/// Exact element of an ordered field: Q, Q(sqrt(d)) with d square-free, or the
/// rational function field Q(t) ordered at +infinity (t is positive and larger
/// than every rational).  All elements are kept in canonical form, so equality
/// of representations coincides with field equality.
class FieldElement {
 public:
  FieldElement() : v_(Rational(0)) {}
  FieldElement(Rational q) : v_(std::move(q)) { canonicalize(); }
  FieldElement(long n) : v_(Rational(n)) {}

  /// a + b*sqrt(d).  Requires d >= 2 and not a perfect square.
  static FieldElement quad(Rational a, Rational b, mpz_class d);
  /// num/den in Q(t); canonicalized to coprime parts with monic denominator.
  static FieldElement rat_func(Poly num, Poly den);

  FieldKind kind() const { return static_cast<FieldKind>(v_.index()); }
  FieldDesc field() const;

  /// Sign of the element in the field order: -1, 0 or +1.
  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement inverse() const;
  friend FieldElement operator+(const FieldElement&, const FieldElement&);
  friend FieldElement operator-(const FieldElement&, const FieldElement&);
  friend FieldElement operator*(const FieldElement&, const FieldElement&);
  friend FieldElement operator/(const FieldElement&, const FieldElement&);
  friend bool operator==(const FieldElement&, const FieldElement&);
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

  /// Exact square root within the same field, if one exists.
  std::optional<FieldElement> try_sqrt() const;

  /// Archimedean downcast; Q(t) has none (throws NonRationalField).
  double to_double() const;

  std::string str() const;

  // Variant accessors (precondition: matching kind).
  const Rational& rational_value() const;
  const Rational& quad_a() const;
  const Rational& quad_b() const;
  const mpz_class& quad_d() const;
  const Poly& num() const;
  const Poly& den() const;

 private:
  struct Quad {
    Rational a, b;
    mpz_class d;
    friend bool operator==(const Quad& x, const Quad& y) {
      return x.a == y.a && x.b == y.b && x.d == y.d;
    }
  };
  struct RatFunc {
    Poly num, den;
    friend bool operator==(const RatFunc&, const RatFunc&) = default;
  };

  void canonicalize();
  std::variant<Rational, Quad, RatFunc> v_;
};

/// Canonical image of q in the target field.
FieldElement embed_rational(const Rational& q, const FieldDesc& field);

/// Zero / one of the target field.
FieldElement field_zero(const FieldDesc& field);
FieldElement field_one(const FieldDesc& field);

/// Largest square divisor peeled off: n = s^2 * d with d as square-free as
/// trial division up to 10^4 (plus perfect-square detection) can make it.
/// Requires n > 0.
std::pair<mpz_class, mpz_class> squarefree_part(const mpz_class& n);

}  // namespace eulercert
