#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"
#include "eulercert/doubling.hpp"
#include "eulercert/errors.hpp"
#include "eulercert/explore.hpp"
#include "eulercert/io.hpp"
#include "test_util.hpp"

using namespace eulercert;
using namespace testutil;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  std::filesystem::path p = std::filesystem::temp_directory_path() / name;
  std::ofstream out(p);
  out << text;
  return p;
}

bool same_rep(const SurfaceRep& x, const SurfaceRep& y) {
  if (x.genus != y.genus || x.pairs.size() != y.pairs.size()) return false;
  for (std::size_t j = 0; j < x.pairs.size(); ++j) {
    const auto& [xa, xb] = x.pairs[j];
    const auto& [ya, yb] = y.pairs[j];
    if (!(xa.a() == ya.a() && xa.b() == ya.b() && xa.c() == ya.c() && xa.d() == ya.d()))
      return false;
    if (!(xb.a() == yb.a() && xb.b() == yb.b() && xb.c() == yb.c() && xb.d() == yb.d()))
      return false;
  }
  return true;
}

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

}  // namespace

TEST_CASE("representation text format round-trips over all fields") {
  Rng rng(11);
  for (const FieldDesc& field :
       {FieldDesc::rational(), FieldDesc::quad(5), FieldDesc::rat_func()}) {
    SurfaceRep rep = random_valid_rep(rng, 2, field);
    std::ostringstream out;
    write_rep(out, rep);
    std::istringstream in(out.str());
    SurfaceRep back = read_rep(in);
    CHECK(same_rep(rep, back));
    // Serialization is canonical: a second round-trip is byte-identical.
    std::ostringstream out2;
    write_rep(out2, back);
    CHECK(out.str() == out2.str());
  }
}

TEST_CASE("pairs text format round-trips") {
  std::ostringstream out;
  write_pairs(out, calibration_pair());
  CHECK(out.str().rfind("pairs 1 field rational", 0) == 0);
  std::istringstream in(out.str());
  auto back = read_pairs(in);
  REQUIRE(back.size() == 1);
  CHECK(back.front().first.a() == calibration_pair().front().first.a());
  CHECK_THROWS_AS(write_pairs(out, {}), Error);
}

TEST_CASE("format errors") {
  std::istringstream bad_header("genius 2 field rational\n");
  CHECK_THROWS_AS(read_rep(bad_header), ParseError);
  std::istringstream bad_count("genus x field rational\n");
  CHECK_THROWS_AS(read_rep(bad_count), ParseError);
  std::istringstream zero_count("genus 0 field rational\n");
  CHECK_THROWS_AS(read_rep(zero_count), ParseError);
  std::istringstream bad_field("genus 1 field decimal\n1 0 0 1\n1 0 0 1\n");
  CHECK_THROWS_AS(read_rep(bad_field), ParseError);
  std::istringstream truncated("genus 1 field rational\n1 0 0 1\n1 0\n");
  CHECK_THROWS_AS(read_rep(truncated), ParseError);
  std::istringstream bad_det("genus 1 field rational\n2 0 0 1\n1 0 0 1\n");
  CHECK_THROWS_AS(read_rep(bad_det), BadDeterminant);
  std::istringstream float_entry("genus 1 field rational\n1.5 0 0 1\n1 0 0 1\n");
  CHECK_THROWS_AS(read_rep(float_entry), ParseError);
}

TEST_CASE("JSON tuple records round-trip and load_pairs sniffs formats") {
  nlohmann::json rec = pairs_record(calibration_pair());
  auto back = pairs_from_record(rec);
  CHECK(back.front().second.b() == calibration_pair().front().second.b());
  CHECK_THROWS_AS(pairs_from_record(nlohmann::json{{"field", "rational"}}), ParseError);
  CHECK_THROWS_AS(
      pairs_from_record(nlohmann::json{{"field", "rational"},
                                       {"pairs", nlohmann::json::array()}}),
      ParseError);

  // Plain text file.
  std::ostringstream text;
  write_pairs(text, calibration_pair());
  auto p1 = write_temp("eulercert_pairs.txt", text.str());
  CHECK(load_pairs(p1.string()).size() == 1);

  // JSON tuple record file.
  auto p2 = write_temp("eulercert_pairs.json", rec.dump());
  CHECK(load_pairs(p2.string()).size() == 1);

  // A full certificate record: input_pairs is picked up.
  Certificate cert = certify(calibration_pair());
  auto p3 = write_temp("eulercert_cert.json", certificate_record(cert).dump());
  auto from_cert = load_pairs(p3.string());
  REQUIRE(from_cert.size() == 1);
  CHECK(from_cert.front().first.a() == calibration_pair().front().first.a());

  CHECK_THROWS_AS(load_pairs("/nonexistent/path"), Error);
  auto p4 = write_temp("eulercert_bad.json", "{broken");
  CHECK_THROWS_AS(load_pairs(p4.string()), ParseError);
}

TEST_CASE("certificate record contents") {
  Certificate cert = certify(calibration_pair());
  nlohmann::json j = certificate_record(cert);
  CHECK(j.at("type") == "certificate");
  CHECK(j.at("norm_const").get<long>() == kNormConst);
  CHECK(j.at("status") == "Maximal");
  CHECK(j.at("f_value").get<long>() == -4);
  CHECK(j.at("bound").get<long>() == 4);
  CHECK(j.at("extension_d").get<std::string>() == "1001");
  CHECK(j.at("working_field") == "quad 1001");
  CHECK(j.at("doubled").at("genus").get<int>() == 2);
  CHECK(j.at("heuristic").at("verdict") == "ok");
  CHECK(j.at("verdict").get<std::string>().rfind("certified", 0) == 0);
}

TEST_CASE("cli: euler, basepoint, oracle") {
  auto [a, b] = calibration_pair().front();
  std::ostringstream text;
  write_rep(text, mirror_rep(a, b, 1));
  auto rep_path = write_temp("eulercert_rep.txt", text.str());

  std::string out, err;
  CHECK(run_cli({"euler", rep_path.string()}, &out, &err) == 0);
  CHECK(out == "0\n");
  CHECK(err.find("norm_const=2") != std::string::npos);

  CHECK(run_cli({"euler", rep_path.string(), "--basepoint", "3/2", "1"}, &out) == 0);
  CHECK(out == "0\n");

  CHECK(run_cli({"oracle", rep_path.string()}, &out) == 0);
  CHECK(out == "inexact 0\n");

  // The doubled tuple: exact -4, oracle -2.
  std::ostringstream dtext;
  write_rep(dtext, run_doubling(calibration_pair()).doubled);
  auto dpath = write_temp("eulercert_doubled.txt", dtext.str());
  CHECK(run_cli({"euler", dpath.string()}, &out) == 0);
  CHECK(out == "-4\n");
  CHECK(run_cli({"oracle", dpath.string()}, &out) == 0);
  CHECK(out == "inexact -2\n");
}

TEST_CASE("cli: certify emits a record that reproduces itself") {
  std::ostringstream text;
  write_pairs(text, calibration_pair());
  auto path = write_temp("eulercert_tuple.txt", text.str());

  std::string out;
  CHECK(run_cli({"certify", path.string(), "--word-depth", "6"}, &out) == 0);
  nlohmann::json j = nlohmann::json::parse(out);
  CHECK(j.at("status") == "Maximal");
  CHECK(j.at("heuristic").at("max_length").get<int>() == 6);

  // Feed the certificate back in as the input: same f_value.
  auto path2 = write_temp("eulercert_cert_roundtrip.json", out);
  std::string out2;
  CHECK(run_cli({"certify", path2.string()}, &out2) == 0);
  CHECK(nlohmann::json::parse(out2).at("f_value") == j.at("f_value"));
}

TEST_CASE("cli: twist output feeds back into euler") {
  std::ostringstream text;
  write_rep(text, run_doubling(calibration_pair()).doubled);
  auto path = write_temp("eulercert_twistin.txt", text.str());

  std::string out;
  CHECK(run_cli({"twist", path.string(), "--kappa", "1"}, &out) == 0);
  auto tw_path = write_temp("eulercert_twisted.txt", out);
  std::string e;
  CHECK(run_cli({"euler", tw_path.string()}, &e) == 0);
  CHECK(e == "0\n");  // the twist undoes the doubling reflection

  // Flow twist prints inexact floats.
  auto [a, b] = calibration_pair().front();
  std::ostringstream mtext;
  write_rep(mtext, mirror_rep(a, b, 1));
  auto mpath = write_temp("eulercert_flowin.txt", mtext.str());
  std::string err;
  CHECK(run_cli({"twist", mpath.string(), "--kappa", "1", "--flow", "0.5"}, &out,
                &err) == 0);
  CHECK(out.rfind("inexact genus 2", 0) == 0);
  CHECK(err.find("log(-gamma)") != std::string::npos);  // tr gamma < -2 here
}

TEST_CASE("cli: rot, scan, check-cocycle") {
  std::string out;
  CHECK(run_cli({"rot", "0", "-1", "1", "0"}, &out) == 0);
  CHECK(out == "0.5\n");

  nlohmann::json config = {{"n", 1}, {"trials", 3}, {"seed", 5},
                           {"planted", "calibration"}};
  auto cpath = write_temp("eulercert_scan.json", config.dump());
  std::string err;
  CHECK(run_cli({"scan", "--mode", "cert", "--config", cpath.string()}, &out, &err) == 0);
  CHECK(nlohmann::json::parse(out.substr(0, out.find('\n'))).at("type") == "config");
  CHECK(err.find("certificates") != std::string::npos);

  CHECK(run_cli({"check-cocycle", "--trials", "50", "--seed", "3"}, &out) == 0);
  CHECK(out == "ok 50\n");
}

TEST_CASE("cli: error and usage paths") {
  // Domain error: a commuting pair cannot be doubled -> record + exit 1.
  std::vector<std::pair<Mat2, Mat2>> comm{{sl2q(1, 1, 0, 1), sl2q(1, 2, 0, 1)}};
  std::ostringstream text;
  write_pairs(text, comm);
  auto path = write_temp("eulercert_commuting.txt", text.str());
  std::string out;
  CHECK(run_cli({"certify", path.string()}, &out) == 1);
  nlohmann::json j = nlohmann::json::parse(out);
  CHECK(j.at("type") == "error");
  CHECK(j.at("error") == "NotHyperbolic");

  // Missing file -> error record, exit 1.
  CHECK(run_cli({"euler", "/nonexistent/rep.txt"}, &out) == 1);
  CHECK(nlohmann::json::parse(out).at("type") == "error");

  // Usage errors -> exit 2, no record.
  CHECK(run_cli({}, &out) == 2);
  CHECK(run_cli({"frobnicate"}, &out) == 2);
  CHECK(run_cli({"certify"}, &out) == 2);
  CHECK(run_cli({"scan", "--mode", "nope", "--config", "x"}, &out) == 2);

  // Help exits 0 and prints the subcommands.
  CHECK(run_cli({"--help"}, &out) == 0);
  CHECK(out.find("certify") != std::string::npos);
}
