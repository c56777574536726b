#include "eulercert/poly.hpp"

#include <sstream>

#include "eulercert/errors.hpp"

namespace eulercert {

Poly::Poly(Rational c) {
  c.canonicalize();
  if (sgn(c) != 0) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

Poly Poly::t() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

bool Poly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly operator+(const Poly& f, const Poly& g) {
  std::vector<Rational> c(std::max(f.c_.size(), g.c_.size()), Rational(0));
  for (std::size_t i = 0; i < f.c_.size(); ++i) c[i] += f.c_[i];
  for (std::size_t i = 0; i < g.c_.size(); ++i) c[i] += g.c_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& f, const Poly& g) { return f + (-g); }

Poly operator*(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return Poly();
  std::vector<Rational> c(f.c_.size() + g.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < f.c_.size(); ++i)
    for (std::size_t j = 0; j < g.c_.size(); ++j) c[i + j] += f.c_[i] * g.c_[j];
  return Poly(std::move(c));
}

Poly Poly::scaled(const Rational& s) const {
  Poly r = *this;
  for (auto& c : r.c_) c *= s;
  r.trim();
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / lc());
}

std::pair<Poly, Poly> Poly::divmod(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw DivisionByZero();
  Poly rem = f;
  if (f.degree() < g.degree()) return {Poly(), rem};
  std::vector<Rational> q(static_cast<std::size_t>(f.degree() - g.degree()) + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= g.degree()) {
    int shift = rem.degree() - g.degree();
    Rational factor = rem.lc() / g.lc();
    q[static_cast<std::size_t>(shift)] = factor;
    std::vector<Rational> sub(static_cast<std::size_t>(shift), Rational(0));
    for (int i = 0; i <= g.degree(); ++i) sub.push_back(factor * g.coeff(i));
    rem = rem - Poly(std::move(sub));
  }
  return {Poly(std::move(q)), rem};
}

namespace {

// Integer-polynomial helpers for the primitive pseudo-remainder sequence.
// Plain Euclid over Q suffers exponential coefficient growth; keeping the
// remainders as primitive integer polynomials keeps the gcd cheap.
using ZPoly = std::vector<mpz_class>;  // dense, no trailing zero coefficients

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(ZPoly& p) {
  mpz_class content(0);
  for (const auto& c : p) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content > 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
}

ZPoly primitive_int(const Poly& p) {
  mpz_class l(1);
  for (int i = 0; i <= p.degree(); ++i) {
    mpz_class d = p.coeff(i).get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  ZPoly z(static_cast<std::size_t>(p.degree()) + 1);
  for (int i = 0; i <= p.degree(); ++i) {
    Rational c = p.coeff(i);
    z[static_cast<std::size_t>(i)] = c.get_num() * (l / c.get_den());
  }
  ztrim(z);
  make_primitive(z);
  return z;
}

// Pseudo-remainder of lc(g)^(deg f - deg g + 1) * f by g; exact over Z.
ZPoly pseudo_rem(ZPoly f, const ZPoly& g) {
  const mpz_class& lg = g.back();
  while (f.size() >= g.size()) {
    mpz_class factor = f.back();
    std::size_t shift = f.size() - g.size();
    for (auto& c : f) c *= lg;
    for (std::size_t i = 0; i < g.size(); ++i) f[i + shift] -= factor * g[i];
    ztrim(f);
    if (f.empty()) break;
  }
  return f;
}

}  // namespace

Poly Poly::gcd(Poly f, Poly g) {
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  ZPoly a = primitive_int(f), b = primitive_int(g);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = pseudo_rem(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  std::vector<Rational> c;
  c.reserve(a.size());
  for (const auto& z : a) c.emplace_back(z);
  return Poly(std::move(c)).monic();
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

std::optional<Poly> Poly::try_sqrt() const {
  if (is_zero()) return Poly();
  if (degree() % 2 != 0) return std::nullopt;
  auto lead = rational_sqrt(lc());
  if (!lead) return std::nullopt;
  // Solve s^2 = f coefficient by coefficient from the top.
  int half = degree() / 2;
  std::vector<Rational> s(static_cast<std::size_t>(half) + 1, Rational(0));
  s[static_cast<std::size_t>(half)] = *lead;
  for (int k = half - 1; k >= 0; --k) {
    // Coefficient of t^(k + half) in s^2 must match; sum over i + j = k + half
    // with both indices above k (the s[k]*s[half] cross term is solved for).
    Rational acc(0);
    for (int i = k + 1; i <= half; ++i) {
      int j = k + half - i;
      if (j <= k || j > half || j < i) continue;
      Rational term = s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)];
      acc += (i == j) ? term : 2 * term;
    }
    s[static_cast<std::size_t>(k)] = (coeff(k + half) - acc) / (2 * s[static_cast<std::size_t>(half)]);
  }
  Poly cand{std::vector<Rational>(s)};
  if (cand * cand == *this) return cand;
  return std::nullopt;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeff(i);
    if (sgn(c) == 0) continue;
    if (!first) out << (sgn(c) > 0 ? "+" : "-");
    Rational a = first ? c : Rational(abs(c.get_num()), c.get_den());
    first = false;
    if (i == 0) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str() << "*";
      out << "t";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace eulercert
