#include "eulercert/explore.hpp"

#include <map>
#include <sstream>

#include "eulercert/errors.hpp"
#include "eulercert/parse.hpp"
#include "eulercert/io.hpp"
#include "eulercert/twist.hpp"

namespace eulercert {

std::uint64_t Rng::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

std::uint64_t Rng::derive(std::uint64_t master, std::uint64_t index) {
  Rng mix(master ^ ((index + 1) * 0x9E3779B97F4A7C15ULL));
  return mix.next();
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

namespace {

std::string hash_hex(std::uint64_t h) {
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

FieldElement sample_entry(Rng& rng, long height, const FieldDesc& field) {
  long m = rng.uniform(-height, height);
  switch (field.kind) {
    case FieldKind::Rational:
      return FieldElement(m);
    case FieldKind::QuadExt:
      return FieldElement::quad(Rational(m), Rational(rng.uniform(-1, 1)), field.d);
    case FieldKind::RatFunc: {
      Poly p({Rational(m), Rational(rng.uniform(0, 1))});
      return FieldElement::rat_func(p, Poly({Rational(1)}));
    }
  }
  throw Error("unknown field kind");
}

std::string tuple_text(const std::vector<std::pair<Mat2, Mat2>>& pairs) {
  std::ostringstream out;
  write_pairs(out, pairs);
  return out.str();
}

std::string rep_text(const SurfaceRep& rep) {
  std::ostringstream out;
  write_rep(out, rep);
  return out.str();
}

const char* heuristic_name(HeuristicVerdict v) {
  switch (v) {
    case HeuristicVerdict::Ok: return "ok";
    case HeuristicVerdict::Violated: return "violated";
    case HeuristicVerdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

}  // namespace

Mat2 sample_sl2(Rng& rng, long height, const FieldDesc& field) {
  if (height < 1) throw ConfigError("entry height must be >= 1");
  FieldElement one = field_one(field);
  FieldElement zero = field_zero(field);
  Mat2 m = Mat2::identity(field);
  int factors = static_cast<int>(rng.uniform(2, 5));
  bool upper = rng.uniform(0, 1) == 1;
  for (int i = 0; i < factors; ++i) {
    FieldElement e = sample_entry(rng, height, field);
    m = upper ? m * Mat2::sl2(one, e, zero, one) : m * Mat2::sl2(one, zero, e, one);
    upper = !upper;
  }
  return m;
}

std::vector<std::pair<Mat2, Mat2>> calibration_pair() {
  FieldDesc q = FieldDesc::rational();
  Mat2 a = Mat2::sl2(FieldElement(Rational(2)), field_zero(q), field_zero(q),
                     FieldElement(Rational(1, 2)));
  Mat2 b = Mat2::sl2(FieldElement(Rational(17, 8)), FieldElement(Rational(15, 8)),
                     FieldElement(Rational(15, 8)), FieldElement(Rational(17, 8)));
  return {{a, b}};
}

ScanConfig scan_config_from_json(const nlohmann::json& j) {
  ScanConfig c;
  try {
    if (j.contains("n")) c.n = j.at("n").get<int>();
    if (j.contains("trials")) c.trials = j.at("trials").get<long>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("entry_height")) c.entry_height = j.at("entry_height").get<long>();
    if (j.contains("field")) c.field = parse_field_desc(j.at("field").get<std::string>());
    if (j.contains("genus")) c.genus = j.at("genus").get<int>();
    if (j.contains("max_word_length")) c.heuristic.max_length = j.at("max_word_length").get<int>();
    if (j.contains("epsilon")) c.heuristic.epsilon = j.at("epsilon").get<double>();
    if (j.contains("word_cap")) c.heuristic.word_cap = j.at("word_cap").get<long>();
    if (j.contains("planted") && !j.at("planted").is_null()) {
      const auto& p = j.at("planted");
      if (p.is_string() && p.get<std::string>() == "calibration")
        c.planted = calibration_pair();
      else
        c.planted = pairs_from_record(p);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad scan config: ") + e.what());
  } catch (const ParseError& e) {
    throw ConfigError(std::string("bad scan config: ") + e.what());
  }
  if (c.n < 1) throw ConfigError("n must be >= 1");
  if (c.trials < 1) throw ConfigError("trials must be >= 1");
  if (c.entry_height < 1) throw ConfigError("entry_height must be >= 1");
  if (c.genus < 1) throw ConfigError("genus must be >= 1");
  if (c.heuristic.max_length < 1) throw ConfigError("max_word_length must be >= 1");
  if (!(c.heuristic.epsilon > 0)) throw ConfigError("epsilon must be > 0");
  return c;
}

nlohmann::json scan_config_to_json(const ScanConfig& c) {
  nlohmann::json j;
  j["type"] = "config";
  j["n"] = c.n;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  j["entry_height"] = c.entry_height;
  j["field"] = c.field.str();
  j["genus"] = c.genus;
  j["max_word_length"] = c.heuristic.max_length;
  j["epsilon"] = c.heuristic.epsilon;
  j["word_cap"] = c.heuristic.word_cap;
  j["planted"] = c.planted ? pairs_record(*c.planted) : nlohmann::json(nullptr);
  return j;
}

ScanReport scan_certificates(const ScanConfig& config) {
  ScanReport report;
  report.config = scan_config_to_json(config);
  report.config["mode"] = "certificates";

  long errors = 0, maximal = 0;
  std::map<long, long> histogram;
  nlohmann::json witnesses = nlohmann::json::array();

  for (long i = 0; i < config.trials; ++i) {
    Rng rng(Rng::derive(config.seed, static_cast<std::uint64_t>(i)));
    std::vector<std::pair<Mat2, Mat2>> pairs;
    if (config.planted && i == 0) {
      pairs = *config.planted;
    } else {
      for (int k = 0; k < config.n; ++k) {
        Mat2 a = sample_sl2(rng, config.entry_height, config.field);
        Mat2 b = sample_sl2(rng, config.entry_height, config.field);
        pairs.emplace_back(std::move(a), std::move(b));
      }
    }

    nlohmann::json rec;
    rec["type"] = "trial";
    rec["trial"] = i;
    rec["tuple_hash"] = hash_hex(fnv1a(tuple_text(pairs)));
    Mat2 h = Mat2::identity(pairs.front().first.field());
    for (const auto& [a, b] : pairs) h = h * commutator(a, b);
    rec["class"] = isom_class_name(classify(h));
    try {
      Certificate cert = certify(pairs, config.heuristic);
      rec["f_value"] = cert.result.f_value;
      rec["bound"] = cert.result.bound;
      rec["status"] = cert.result.maximal ? "Maximal" : "NonMaximal";
      rec["heuristic"] = heuristic_name(cert.heuristic.verdict);
      ++histogram[cert.result.f_value];
      if (cert.result.maximal) {
        ++maximal;
        nlohmann::json w;
        w["trial"] = i;
        w["tuple"] = pairs_record(pairs);
        witnesses.push_back(w);
      }
    } catch (const std::exception& e) {
      rec["error"] = error_name(e);
      rec["message"] = e.what();
      ++errors;
    }
    report.trials.push_back(std::move(rec));
  }

  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [f, count] : histogram) hist[std::to_string(f)] = count;
  nlohmann::json s;
  s["type"] = "summary";
  s["mode"] = "certificates";
  s["trials"] = config.trials;
  s["errors"] = errors;
  s["maximal"] = maximal;
  s["histogram"] = hist;
  s["witnesses"] = witnesses;
  s["violations"] = nlohmann::json::array();
  report.summary = s;
  return report;
}

ScanReport scan_milnor_wood(const ScanConfig& config) {
  ScanReport report;
  report.config = scan_config_to_json(config);
  report.config["mode"] = "milnor-wood";

  long errors = 0, ok_count = 0;
  std::map<long, long> histogram;
  nlohmann::json violations = nlohmann::json::array();

  for (long i = 0; i < config.trials; ++i) {
    Rng rng(Rng::derive(config.seed, static_cast<std::uint64_t>(i)));
    nlohmann::json rec;
    rec["type"] = "trial";
    rec["trial"] = i;
    try {
      SurfaceRep rep;
      rep.genus = config.genus;
      bool doubled = false;
      if (config.genus % 2 == 0 && rng.uniform(0, 3) == 0) {
        // Some trials use the doubling construction directly as the seed rep.
        std::vector<std::pair<Mat2, Mat2>> seed;
        for (int k = 0; k < config.genus / 2; ++k) {
          Mat2 a = sample_sl2(rng, config.entry_height, config.field);
          Mat2 b = sample_sl2(rng, config.entry_height, config.field);
          seed.emplace_back(std::move(a), std::move(b));
        }
        try {
          rep = double_pairs(seed);
          doubled = true;
        } catch (const Error&) {
          rep.pairs.clear();  // commutator not splittable; fall back to mirrors
        }
      }
      // Mirrored blocks: [A,B] [gBg^-1, gAg^-1] = I when g commutes with
      // [A,B], so g runs over small powers of the commutator itself.
      for (int blk = 0; !doubled && blk < config.genus / 2; ++blk) {
        Mat2 a = sample_sl2(rng, config.entry_height, config.field);
        Mat2 b = sample_sl2(rng, config.entry_height, config.field);
        Mat2 h = commutator(a, b);
        long k = rng.uniform(0, 2);
        Mat2 g = Mat2::identity(config.field);
        for (long p = 0; p < k; ++p) g = g * h;
        rep.pairs.emplace_back(a, b);
        rep.pairs.emplace_back(g.conjugate(b), g.conjugate(a));
      }
      if (!doubled && config.genus % 2 == 1) {
        // A commuting pair (C, C^m) contributes a trivial commutator.
        Mat2 c = sample_sl2(rng, config.entry_height, config.field);
        long m = rng.uniform(1, 3);
        Mat2 cm = Mat2::identity(config.field);
        for (long p = 0; p < m; ++p) cm = cm * c;
        rep.pairs.emplace_back(c, cm);
      }
      Mat2 conj = sample_sl2(rng, config.entry_height, rep.field());
      for (auto& [a, b] : rep.pairs) {
        a = conj.conjugate(a);
        b = conj.conjugate(b);
      }
      rec["construction"] = doubled ? "doubled" : "mirror";
      bool twisted = false;
      if (config.genus >= 2 && rng.uniform(0, 1) == 1) {
        int kappa = static_cast<int>(rng.uniform(1, config.genus - 1));
        try {
          rep = discrete_twist(rep, kappa);
          twisted = true;
          rec["kappa"] = kappa;
        } catch (const NotHyperbolic&) {
          // Separating curve not hyperbolic for this sample; keep untwisted.
        }
      }
      rec["rep_hash"] = hash_hex(fnv1a(rep_text(rep)));
      rec["twisted"] = twisted;
      MilnorWood mw = milnor_wood_check(rep);
      rec["value"] = mw.value;
      rec["bound"] = mw.bound;
      rec["ok"] = mw.ok;
      ++histogram[mw.value];
      if (mw.ok) {
        ++ok_count;
      } else {
        nlohmann::json v;
        v["trial"] = i;
        v["value"] = mw.value;
        v["bound"] = mw.bound;
        v["rep"] = rep_text(rep);
        violations.push_back(v);
      }
    } catch (const std::exception& e) {
      rec["error"] = error_name(e);
      rec["message"] = e.what();
      ++errors;
    }
    report.trials.push_back(std::move(rec));
  }

  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [f, count] : histogram) hist[std::to_string(f)] = count;
  nlohmann::json s;
  s["type"] = "summary";
  s["mode"] = "milnor-wood";
  s["trials"] = config.trials;
  s["errors"] = errors;
  s["ok"] = ok_count;
  s["histogram"] = hist;
  s["witnesses"] = nlohmann::json::array();
  s["violations"] = violations;
  if (config.field.kind == FieldKind::RatFunc)
    s["note"] = "non-archimedean field: bound evidence only";
  report.summary = s;
  return report;
}

std::string to_jsonl(const ScanReport& report) {
  std::ostringstream out;
  out << report.config.dump() << "\n";
  for (const auto& rec : report.trials) out << rec.dump() << "\n";
  out << report.summary.dump() << "\n";
  return out.str();
}

std::string summary_table(const ScanReport& report) {
  std::ostringstream out;
  const auto& s = report.summary;
  out << "mode: " << s.at("mode").get<std::string>() << "\n";
  out << "trials: " << s.at("trials").get<long>() << "  errors: " << s.at("errors").get<long>();
  if (s.contains("maximal")) out << "  maximal: " << s.at("maximal").get<long>();
  if (s.contains("ok")) out << "  within-bound: " << s.at("ok").get<long>();
  out << "\n";
  out << "value histogram:";
  for (const auto& [key, count] : s.at("histogram").items())
    out << "  " << key << ":" << count.get<long>();
  out << "\n";
  if (s.contains("violations") && !s.at("violations").empty())
    out << "VIOLATIONS RECORDED: " << s.at("violations").size() << "\n";
  return out.str();
}

}  // namespace eulercert
