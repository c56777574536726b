#include "eulercert/doubling.hpp"

#include <cstdlib>

#include "eulercert/errors.hpp"

namespace eulercert {

IsomClass classify(const Mat2& h) {
  if (h.is_central()) return IsomClass::CentralPM;
  FieldElement t = h.trace();
  FieldElement disc = t * t - embed_rational(Rational(4), h.field());
  switch (disc.sign()) {
    case 1: return IsomClass::Hyperbolic;
    case -1: return IsomClass::Elliptic;
    default: return IsomClass::Parabolic;
  }
}

const char* isom_class_name(IsomClass c) {
  switch (c) {
    case IsomClass::Hyperbolic: return "Hyperbolic";
    case IsomClass::Parabolic: return "Parabolic";
    case IsomClass::Elliptic: return "Elliptic";
    case IsomClass::CentralPM: return "CentralPM";
  }
  return "?";
}

namespace {

struct WorkingField {
  FieldDesc field;
  FieldElement sqrt_disc;  // positive square root of tr^2 - 4 in `field`
  std::optional<mpz_class> extension_d;
};

WorkingField split_discriminant(const Mat2& h) {
  FieldElement t = h.trace();
  FieldElement disc = t * t - embed_rational(Rational(4), h.field());
  if (auto s = disc.try_sqrt()) {
    if (s->sign() < 0) *s = -*s;
    return {h.field(), *s, std::nullopt};
  }
  if (h.field().kind != FieldKind::Rational)
    throw UnsupportedExtension(
        "tr^2 - 4 is not a square in " + h.field().str() +
        "; extending an already-extended field is unsupported");
  // disc = num/den > 0 in Q; sqrt(disc) = (s / den) sqrt(d) with
  // num * den = s^2 * d and d square-free.
  const Rational& q = disc.rational_value();
  mpz_class n = q.get_num() * q.get_den();
  auto [s, d] = squarefree_part(n);
  FieldDesc ext = FieldDesc::quad(d);
  FieldElement root = FieldElement::quad(Rational(0), Rational(s, q.get_den()), d);
  return {ext, root, d};
}

}  // namespace

EigenSplit eigen_split(const Mat2& h) {
  if (classify(h) != IsomClass::Hyperbolic)
    throw NotHyperbolic("eigen_split requires a hyperbolic matrix (got " +
                        std::string(isom_class_name(classify(h))) + ")");
  WorkingField wf = split_discriminant(h);
  Mat2 hw = h.embedded(wf.field);
  FieldElement t = hw.trace();
  FieldElement two = embed_rational(Rational(2), wf.field);
  // lambda1 - 1/lambda1 = +sqrt_disc, so label by the sign of the trace.
  FieldElement l1 = (t.sign() > 0) ? (t + wf.sqrt_disc) / two : (t - wf.sqrt_disc) / two;
  FieldElement l2 = t - l1;
  auto eigenvector = [&](const FieldElement& lambda) {
    if (!hw.b().is_zero()) return ProjPoint(hw.b(), lambda - hw.a());
    if (!hw.c().is_zero()) return ProjPoint(lambda - hw.d(), hw.c());
    // Diagonal hyperbolic matrix: eigenlines are the coordinate axes.
    if (lambda == hw.a()) return ProjPoint::infinity(wf.field);
    return ProjPoint::finite(field_zero(wf.field));
  };
  return {eigenvector(l1), eigenvector(l2), wf.extension_d, wf.field};
}

Mat2 reflection(const Mat2& h) {
  if (classify(h) != IsomClass::Hyperbolic)
    throw NotHyperbolic("reflection requires a hyperbolic matrix");
  WorkingField wf = split_discriminant(h);
  Mat2 hw = h.embedded(wf.field);
  FieldElement t = hw.trace();
  FieldElement two = embed_rational(Rational(2), wf.field);
  Mat2 r = Mat2::gl2((two * hw.a() - t) / wf.sqrt_disc, two * hw.b() / wf.sqrt_disc,
                     two * hw.c() / wf.sqrt_disc, (two * hw.d() - t) / wf.sqrt_disc);
  int s11 = r.a().sign();
  if (s11 < 0 || (s11 == 0 && r.b().sign() < 0)) r = -r;
  return r;
}

SurfaceRep double_pairs(const std::vector<std::pair<Mat2, Mat2>>& pairs) {
  if (pairs.empty()) throw Error("double_pairs needs at least one pair");
  FieldDesc base = pairs.front().first.field();
  Mat2 h = Mat2::identity(base);
  for (const auto& [a, b] : pairs) h = h * commutator(a, b);
  Mat2 r = reflection(h);  // throws NotHyperbolic / UnsupportedExtension
  FieldDesc wfield = r.field();

  SurfaceRep rep;
  rep.genus = 2 * static_cast<int>(pairs.size());
  for (const auto& [a, b] : pairs)
    rep.pairs.emplace_back(a.embedded(wfield), b.embedded(wfield));
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it)
    rep.pairs.emplace_back(r.conjugate(it->second.embedded(wfield)),
                           r.conjugate(it->first.embedded(wfield)));

  if (!relator(rep).is_identity())
    throw NotARepresentation("doubled relator is not the identity (internal bug)");
  return rep;
}

DoublingResult run_doubling(const std::vector<std::pair<Mat2, Mat2>>& pairs) {
  if (pairs.empty()) throw Error("certify needs at least one pair");
  FieldDesc base = pairs.front().first.field();
  Mat2 h = Mat2::identity(base);
  for (const auto& [a, b] : pairs) h = h * commutator(a, b);
  if (classify(h) != IsomClass::Hyperbolic)
    throw NotHyperbolic("product of commutators is " +
                        std::string(isom_class_name(classify(h))) +
                        ", the doubling construction needs a hyperbolic one");
  EigenSplit split = eigen_split(h);
  Mat2 r = reflection(h);
  SurfaceRep doubled = double_pairs(pairs);

  long f = euler_number(doubled, default_base_point(doubled.field()));
  long bound = kNormConst * (2L * doubled.genus - 2);
  return DoublingResult{pairs, h, h.trace(), split.extension_d, split.x1, split.x2,
                        r, std::move(doubled), f, bound, std::labs(f) == bound};
}

Certificate certify(const std::vector<std::pair<Mat2, Mat2>>& pairs,
                    const HeuristicParams& params) {
  DoublingResult result = run_doubling(pairs);

  HeuristicReport report;
  report.max_length = params.max_length;
  report.epsilon = params.epsilon;
  if (pairs.front().first.field().kind == FieldKind::RatFunc) {
    report.verdict = HeuristicVerdict::NotApplicable;
  } else {
    std::vector<FloatMat2> gens;
    for (const auto& [a, b] : pairs) {
      gens.push_back(downcast(a));
      gens.push_back(downcast(b));
    }
    WordCheck wc = word_heuristic(gens, params.max_length, params.epsilon, params.word_cap);
    report.verdict = wc.ok ? HeuristicVerdict::Ok : HeuristicVerdict::Violated;
    report.witness = wc.witness;
    report.words_checked = wc.words_checked;
  }

  Certificate cert{std::move(result), std::move(report), ""};
  cert.verdict = cert.result.maximal
                     ? "certified free discrete: |f| attains the bound exactly "
                       "(conditional on maximality implying discreteness and on "
                       "the frozen normalization)"
                     : "no certificate: |f| below the bound (the maximality "
                       "condition is sufficient, not necessary)";
  return cert;
}

}  // namespace eulercert
