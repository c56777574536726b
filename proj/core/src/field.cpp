#include "eulercert/field.hpp"

#include <cmath>
#include <sstream>

#include "eulercert/errors.hpp"

namespace eulercert {

namespace {

void require_same(const FieldElement& x, const FieldElement& y) {
  if (x.field() != y.field())
    throw MixedFields(x.field().str() + " vs " + y.field().str());
}

void check_radicand(const mpz_class& d) {
  if (d < 2) throw Error("quadratic radicand must be >= 2");
  if (mpz_perfect_square_p(d.get_mpz_t()))
    throw Error("quadratic radicand must not be a perfect square");
}

}  // namespace

std::string FieldDesc::str() const {
  switch (kind) {
    case FieldKind::Rational: return "rational";
    case FieldKind::QuadExt: return "quad " + d.get_str();
    case FieldKind::RatFunc: return "ratfunc";
  }
  return "?";
}

FieldElement FieldElement::quad(Rational a, Rational b, mpz_class d) {
  check_radicand(d);
  FieldElement e;
  a.canonicalize();
  b.canonicalize();
  e.v_ = Quad{std::move(a), std::move(b), std::move(d)};
  return e;
}

FieldElement FieldElement::rat_func(Poly num, Poly den) {
  if (den.is_zero()) throw DivisionByZero();
  FieldElement e;
  e.v_ = RatFunc{std::move(num), std::move(den)};
  e.canonicalize();
  return e;
}

void FieldElement::canonicalize() {
  if (auto* q = std::get_if<Rational>(&v_)) {
    q->canonicalize();
  } else if (auto* r = std::get_if<RatFunc>(&v_)) {
    if (r->num.is_zero()) {
      r->den = Poly::one();
      return;
    }
    Poly g = Poly::gcd(r->num, r->den);
    if (g.degree() > 0) {
      r->num = Poly::divmod(r->num, g).first;
      r->den = Poly::divmod(r->den, g).first;
    }
    Rational dl = r->den.lc();
    r->num = r->num.scaled(Rational(1) / dl);
    r->den = r->den.scaled(Rational(1) / dl);
  }
}

FieldDesc FieldElement::field() const {
  switch (kind()) {
    case FieldKind::Rational: return FieldDesc::rational();
    case FieldKind::QuadExt: return FieldDesc::quad(std::get<Quad>(v_).d);
    case FieldKind::RatFunc: return FieldDesc::rat_func();
  }
  return {};
}

int FieldElement::sign() const {
  switch (kind()) {
    case FieldKind::Rational:
      return sgn(std::get<Rational>(v_));
    case FieldKind::QuadExt: {
      const Quad& q = std::get<Quad>(v_);
      int sa = sgn(q.a), sb = sgn(q.b);
      if (sa == 0) return sb;
      if (sb == 0 || sa == sb) return sa;
      // Opposite signs: compare a^2 against b^2 d.
      Rational diff = q.a * q.a - q.b * q.b * Rational(q.d);
      return sa * sgn(diff);
    }
    case FieldKind::RatFunc: {
      const RatFunc& r = std::get<RatFunc>(v_);
      if (r.num.is_zero()) return 0;
      // Order at +infinity of t; denominators are kept monic.
      return sgn(r.num.lc()) * sgn(r.den.lc());
    }
  }
  return 0;
}

bool FieldElement::is_one() const {
  switch (kind()) {
    case FieldKind::Rational: return std::get<Rational>(v_) == 1;
    case FieldKind::QuadExt: {
      const Quad& q = std::get<Quad>(v_);
      return q.a == 1 && sgn(q.b) == 0;
    }
    case FieldKind::RatFunc: {
      const RatFunc& r = std::get<RatFunc>(v_);
      return r.num.is_one() && r.den.is_one();
    }
  }
  return false;
}

FieldElement FieldElement::operator-() const {
  FieldElement e = *this;
  switch (kind()) {
    case FieldKind::Rational:
      std::get<Rational>(e.v_) = -std::get<Rational>(e.v_);
      break;
    case FieldKind::QuadExt: {
      Quad& q = std::get<Quad>(e.v_);
      q.a = -q.a;
      q.b = -q.b;
      break;
    }
    case FieldKind::RatFunc: {
      RatFunc& r = std::get<RatFunc>(e.v_);
      r.num = -r.num;
      break;
    }
  }
  return e;
}

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
  require_same(x, y);
  FieldElement e;
  switch (x.kind()) {
    case FieldKind::Rational:
      e.v_ = Rational(std::get<Rational>(x.v_) + std::get<Rational>(y.v_));
      break;
    case FieldKind::QuadExt: {
      const auto& a = std::get<FieldElement::Quad>(x.v_);
      const auto& b = std::get<FieldElement::Quad>(y.v_);
      e.v_ = FieldElement::Quad{a.a + b.a, a.b + b.b, a.d};
      break;
    }
    case FieldKind::RatFunc: {
      const auto& a = std::get<FieldElement::RatFunc>(x.v_);
      const auto& b = std::get<FieldElement::RatFunc>(y.v_);
      e.v_ = FieldElement::RatFunc{a.num * b.den + b.num * a.den, a.den * b.den};
      break;
    }
  }
  e.canonicalize();
  return e;
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) { return x + (-y); }

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  require_same(x, y);
  FieldElement e;
  switch (x.kind()) {
    case FieldKind::Rational:
      e.v_ = Rational(std::get<Rational>(x.v_) * std::get<Rational>(y.v_));
      break;
    case FieldKind::QuadExt: {
      const auto& a = std::get<FieldElement::Quad>(x.v_);
      const auto& b = std::get<FieldElement::Quad>(y.v_);
      Rational d(a.d);
      e.v_ = FieldElement::Quad{a.a * b.a + a.b * b.b * d, a.a * b.b + a.b * b.a, a.d};
      break;
    }
    case FieldKind::RatFunc: {
      const auto& a = std::get<FieldElement::RatFunc>(x.v_);
      const auto& b = std::get<FieldElement::RatFunc>(y.v_);
      e.v_ = FieldElement::RatFunc{a.num * b.num, a.den * b.den};
      break;
    }
  }
  e.canonicalize();
  return e;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero();
  FieldElement e;
  switch (kind()) {
    case FieldKind::Rational:
      e.v_ = Rational(1 / std::get<Rational>(v_));
      break;
    case FieldKind::QuadExt: {
      const Quad& q = std::get<Quad>(v_);
      // (a + b sqrt d)^-1 = (a - b sqrt d) / (a^2 - b^2 d); the norm is
      // nonzero since d is not a square.
      Rational norm = q.a * q.a - q.b * q.b * Rational(q.d);
      e.v_ = Quad{q.a / norm, -q.b / norm, q.d};
      break;
    }
    case FieldKind::RatFunc: {
      const RatFunc& r = std::get<RatFunc>(v_);
      e.v_ = RatFunc{r.den, r.num};
      break;
    }
  }
  e.canonicalize();
  return e;
}

FieldElement operator/(const FieldElement& x, const FieldElement& y) {
  require_same(x, y);
  return x * y.inverse();
}

bool operator==(const FieldElement& x, const FieldElement& y) {
  require_same(x, y);
  return x.v_ == y.v_;
}

std::optional<FieldElement> FieldElement::try_sqrt() const {
  if (sign() < 0) return std::nullopt;
  switch (kind()) {
    case FieldKind::Rational: {
      auto r = rational_sqrt(std::get<Rational>(v_));
      if (!r) return std::nullopt;
      return FieldElement(*r);
    }
    case FieldKind::QuadExt: {
      const Quad& q = std::get<Quad>(v_);
      Rational d(q.d);
      if (sgn(q.b) == 0) {
        if (auto p = rational_sqrt(q.a)) return quad(*p, Rational(0), q.d);
        if (auto p = rational_sqrt(Rational(q.a / d))) return quad(Rational(0), *p, q.d);
        return std::nullopt;
      }
      // (p + r sqrt d)^2 = p^2 + r^2 d + 2 p r sqrt d: p^2 is a root of
      // X^2 - aX + b^2 d / 4.
      Rational disc = q.a * q.a - q.b * q.b * d;
      auto sd = rational_sqrt(disc);
      if (!sd) return std::nullopt;
      for (const Rational& p2 : {Rational((q.a + *sd) / 2), Rational((q.a - *sd) / 2)}) {
        auto p = rational_sqrt(p2);
        if (!p || sgn(*p) == 0) continue;
        Rational r = q.b / (2 * *p);
        FieldElement cand = quad(*p, r, q.d);
        if (cand * cand == *this) return cand;
      }
      return std::nullopt;
    }
    case FieldKind::RatFunc: {
      const RatFunc& r = std::get<RatFunc>(v_);
      if (r.num.is_zero()) return FieldElement::rat_func(Poly(), Poly::one());
      // den is monic; num = lc * monic.  In lowest terms a square has square
      // numerator and denominator.
      auto dn = r.den.try_sqrt();
      if (!dn) return std::nullopt;
      auto lead = rational_sqrt(r.num.lc());
      if (!lead) return std::nullopt;
      auto nm = r.num.monic().try_sqrt();
      if (!nm) return std::nullopt;
      return rat_func(nm->scaled(*lead), *dn);
    }
  }
  return std::nullopt;
}

double FieldElement::to_double() const {
  switch (kind()) {
    case FieldKind::Rational:
      return std::get<Rational>(v_).get_d();
    case FieldKind::QuadExt: {
      const Quad& q = std::get<Quad>(v_);
      return q.a.get_d() + q.b.get_d() * std::sqrt(q.d.get_d());
    }
    case FieldKind::RatFunc:
      throw NonRationalField("Q(t) has no archimedean embedding");
  }
  return 0;
}

std::string FieldElement::str() const {
  switch (kind()) {
    case FieldKind::Rational:
      return std::get<Rational>(v_).get_str();
    case FieldKind::QuadExt: {
      const Quad& q = std::get<Quad>(v_);
      if (sgn(q.b) == 0) return q.a.get_str();
      std::ostringstream out;
      if (sgn(q.a) != 0) {
        out << q.a.get_str();
        out << (sgn(q.b) > 0 ? "+" : "-");
        Rational ab(abs(q.b.get_num()), q.b.get_den());
        out << ab.get_str();
      } else {
        out << q.b.get_str();
      }
      out << "*sqrt(" << q.d << ")";
      return out.str();
    }
    case FieldKind::RatFunc: {
      const RatFunc& r = std::get<RatFunc>(v_);
      if (r.den.is_one()) {
        if (r.num.degree() <= 0) return r.num.str();
        return "(" + r.num.str() + ")";
      }
      return "(" + r.num.str() + ")/(" + r.den.str() + ")";
    }
  }
  return "?";
}

const Rational& FieldElement::rational_value() const { return std::get<Rational>(v_); }
const Rational& FieldElement::quad_a() const { return std::get<Quad>(v_).a; }
const Rational& FieldElement::quad_b() const { return std::get<Quad>(v_).b; }
const mpz_class& FieldElement::quad_d() const { return std::get<Quad>(v_).d; }
const Poly& FieldElement::num() const { return std::get<RatFunc>(v_).num; }
const Poly& FieldElement::den() const { return std::get<RatFunc>(v_).den; }

FieldElement embed_rational(const Rational& q, const FieldDesc& field) {
  switch (field.kind) {
    case FieldKind::Rational: return FieldElement(q);
    case FieldKind::QuadExt: return FieldElement::quad(q, Rational(0), field.d);
    case FieldKind::RatFunc: return FieldElement::rat_func(Poly(q), Poly::one());
  }
  return FieldElement();
}

FieldElement field_zero(const FieldDesc& field) { return embed_rational(Rational(0), field); }
FieldElement field_one(const FieldDesc& field) { return embed_rational(Rational(1), field); }

std::pair<mpz_class, mpz_class> squarefree_part(const mpz_class& n) {
  if (n <= 0) throw Error("squarefree_part requires a positive argument");
  mpz_class s = 1, d = n;
  for (unsigned long p = 2; p <= 10000; ++p) {
    mpz_class p2 = mpz_class(static_cast<long>(p)) * static_cast<long>(p);
    while (mpz_divisible_p(d.get_mpz_t(), p2.get_mpz_t())) {
      d /= p2;
      s *= static_cast<long>(p);
    }
    if (d < p2) break;
  }
  if (mpz_perfect_square_p(d.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), d.get_mpz_t());
    s *= r;
    d = 1;
  }
  return {s, d};
}

}  // namespace eulercert
