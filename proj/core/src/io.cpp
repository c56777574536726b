#include "eulercert/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "eulercert/errors.hpp"
#include "eulercert/parse.hpp"

namespace eulercert {

namespace {

std::string next_token(std::istream& in, const char* what) {
  std::string tok;
  if (!(in >> tok)) throw ParseError(std::string("unexpected end of input, expected ") + what);
  return tok;
}

Mat2 read_matrix(std::istream& in, const FieldDesc& field) {
  std::array<FieldElement, 4> e;
  for (auto& x : e) x = parse_element(next_token(in, "field element"), field);
  return Mat2::sl2(e[0], e[1], e[2], e[3]);
}

FieldDesc read_header(std::istream& in, const char* keyword, long& count) {
  std::string tok = next_token(in, keyword);
  if (tok != keyword)
    throw ParseError("expected header keyword '" + std::string(keyword) + "', got '" + tok + "'");
  std::string num = next_token(in, "count");
  try {
    count = std::stol(num);
  } catch (const std::exception&) {
    throw ParseError("bad count '" + num + "' in header");
  }
  if (count < 1) throw ParseError("count in header must be >= 1");
  if (next_token(in, "'field'") != "field")
    throw ParseError("expected 'field' in header");
  std::string desc = next_token(in, "field descriptor");
  if (desc == "quad") desc += " " + next_token(in, "radicand");
  return parse_field_desc(desc);
}

}  // namespace

SurfaceRep read_rep(std::istream& in) {
  long g = 0;
  FieldDesc field = read_header(in, "genus", g);
  SurfaceRep rep;
  rep.genus = static_cast<int>(g);
  for (long j = 0; j < g; ++j) {
    Mat2 a = read_matrix(in, field);
    Mat2 b = read_matrix(in, field);
    rep.pairs.emplace_back(std::move(a), std::move(b));
  }
  return rep;
}

void write_rep(std::ostream& out, const SurfaceRep& rep) {
  out << "genus " << rep.genus << " field " << rep.field().str() << "\n";
  for (const auto& [a, b] : rep.pairs) {
    out << a.a().str() << " " << a.b().str() << " " << a.c().str() << " " << a.d().str() << "\n";
    out << b.a().str() << " " << b.b().str() << " " << b.c().str() << " " << b.d().str() << "\n";
  }
}

std::vector<std::pair<Mat2, Mat2>> read_pairs(std::istream& in) {
  long n = 0;
  FieldDesc field = read_header(in, "pairs", n);
  std::vector<std::pair<Mat2, Mat2>> pairs;
  for (long i = 0; i < n; ++i) {
    Mat2 a = read_matrix(in, field);
    Mat2 b = read_matrix(in, field);
    pairs.emplace_back(std::move(a), std::move(b));
  }
  return pairs;
}

void write_pairs(std::ostream& out, const std::vector<std::pair<Mat2, Mat2>>& pairs) {
  if (pairs.empty()) throw Error("cannot serialize an empty tuple");
  out << "pairs " << pairs.size() << " field " << pairs.front().first.field().str() << "\n";
  for (const auto& [a, b] : pairs) {
    out << a.a().str() << " " << a.b().str() << " " << a.c().str() << " " << a.d().str() << "\n";
    out << b.a().str() << " " << b.b().str() << " " << b.c().str() << " " << b.d().str() << "\n";
  }
}

SurfaceRep load_rep(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  return read_rep(in);
}

std::vector<std::pair<Mat2, Mat2>> load_pairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  char first = 0;
  in >> std::ws;
  first = static_cast<char>(in.peek());
  if (first == '{') {
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad JSON record: ") + e.what());
    }
    if (j.contains("input_pairs")) {
      nlohmann::json sub;
      sub["field"] = j.at("field");
      sub["pairs"] = j.at("input_pairs");
      return pairs_from_record(sub);
    }
    return pairs_from_record(j);
  }
  return read_pairs(in);
}

nlohmann::json matrix_record(const Mat2& m) {
  return nlohmann::json::array({m.a().str(), m.b().str(), m.c().str(), m.d().str()});
}

Mat2 matrix_from_record(const nlohmann::json& j, const FieldDesc& field) {
  if (!j.is_array() || j.size() != 4)
    throw ParseError("matrix record must be an array of four element strings");
  std::array<FieldElement, 4> e;
  for (std::size_t i = 0; i < 4; ++i)
    e[i] = parse_element(j[i].get<std::string>(), field);
  return Mat2::sl2(e[0], e[1], e[2], e[3]);
}

nlohmann::json pairs_record(const std::vector<std::pair<Mat2, Mat2>>& pairs) {
  if (pairs.empty()) throw Error("cannot serialize an empty tuple");
  nlohmann::json j;
  j["field"] = pairs.front().first.field().str();
  j["pairs"] = nlohmann::json::array();
  for (const auto& [a, b] : pairs)
    j["pairs"].push_back(nlohmann::json::array({matrix_record(a), matrix_record(b)}));
  return j;
}

std::vector<std::pair<Mat2, Mat2>> pairs_from_record(const nlohmann::json& j) {
  try {
    FieldDesc field = parse_field_desc(j.at("field").get<std::string>());
    std::vector<std::pair<Mat2, Mat2>> pairs;
    for (const auto& p : j.at("pairs")) {
      if (!p.is_array() || p.size() != 2)
        throw ParseError("pair record must be an array of two matrices");
      pairs.emplace_back(matrix_from_record(p[0], field), matrix_from_record(p[1], field));
    }
    if (pairs.empty()) throw ParseError("tuple record has no pairs");
    return pairs;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad tuple record: ") + e.what());
  }
}

namespace {

const char* verdict_name(HeuristicVerdict v) {
  switch (v) {
    case HeuristicVerdict::Ok: return "ok";
    case HeuristicVerdict::Violated: return "violated";
    case HeuristicVerdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

}  // namespace

nlohmann::json certificate_record(const Certificate& cert) {
  const DoublingResult& r = cert.result;
  nlohmann::json j;
  j["type"] = "certificate";
  j["norm_const"] = kNormConst;
  j["field"] = r.input.front().first.field().str();
  j["input_pairs"] = nlohmann::json::array();
  for (const auto& [a, b] : r.input)
    j["input_pairs"].push_back(nlohmann::json::array({matrix_record(a), matrix_record(b)}));
  j["h"] = matrix_record(r.h);
  j["trace_h"] = r.trace_h.str();
  if (r.extension_d)
    j["extension_d"] = r.extension_d->get_str();  // string: may exceed 64 bits
  else
    j["extension_d"] = nullptr;
  j["working_field"] = r.doubled.field().str();
  j["x1"] = r.x1.str();
  j["x2"] = r.x2.str();
  j["r"] = matrix_record(r.r);
  nlohmann::json doubled;
  doubled["genus"] = r.doubled.genus;
  doubled["field"] = r.doubled.field().str();
  doubled["pairs"] = nlohmann::json::array();
  for (const auto& [a, b] : r.doubled.pairs)
    doubled["pairs"].push_back(nlohmann::json::array({matrix_record(a), matrix_record(b)}));
  j["doubled"] = doubled;
  j["f_value"] = r.f_value;
  j["bound"] = r.bound;
  j["status"] = r.maximal ? "Maximal" : "NonMaximal";
  nlohmann::json h;
  h["verdict"] = verdict_name(cert.heuristic.verdict);
  if (cert.heuristic.witness)
    h["witness"] = *cert.heuristic.witness;
  else
    h["witness"] = nullptr;
  h["max_length"] = cert.heuristic.max_length;
  h["epsilon"] = cert.heuristic.epsilon;
  h["words_checked"] = cert.heuristic.words_checked;
  j["heuristic"] = h;
  j["verdict"] = cert.verdict;
  return j;
}

nlohmann::json error_record(const std::string& name, const std::string& message) {
  nlohmann::json j;
  j["type"] = "error";
  j["error"] = name;
  j["message"] = message;
  return j;
}

std::string error_name(const std::exception& e) {
  if (dynamic_cast<const DivisionByZero*>(&e)) return "DivisionByZero";
  if (dynamic_cast<const MixedFields*>(&e)) return "MixedFields";
  if (dynamic_cast<const BadDeterminant*>(&e)) return "BadDeterminant";
  if (dynamic_cast<const SingularMatrix*>(&e)) return "SingularMatrix";
  if (dynamic_cast<const NotHyperbolic*>(&e)) return "NotHyperbolic";
  if (dynamic_cast<const NotARepresentation*>(&e)) return "NotARepresentation";
  if (dynamic_cast<const UnsupportedExtension*>(&e)) return "UnsupportedExtension";
  if (dynamic_cast<const KappaOutOfRange*>(&e)) return "KappaOutOfRange";
  if (dynamic_cast<const NonRationalField*>(&e)) return "NonRationalField";
  if (dynamic_cast<const PrecisionLoss*>(&e)) return "PrecisionLoss";
  if (dynamic_cast<const CombinatorialBlowup*>(&e)) return "CombinatorialBlowup";
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const ConfigError*>(&e)) return "ConfigError";
  if (dynamic_cast<const Error*>(&e)) return "Error";
  return "InternalError";
}

}  // namespace eulercert
