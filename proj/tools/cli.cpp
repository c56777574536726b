#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "eulercert/circle.hpp"
#include "eulercert/cocycle.hpp"
#include "eulercert/errors.hpp"
#include "eulercert/explore.hpp"
#include "eulercert/io.hpp"
#include "eulercert/parse.hpp"
#include "eulercert/twist.hpp"

namespace eulercert::cli {

namespace {

ProjPoint basepoint_from_flags(const std::vector<std::string>& coords, const FieldDesc& field) {
  if (coords.empty()) return default_base_point(field);
  if (coords.size() != 2) throw ConfigError("--basepoint needs exactly two coordinates");
  return ProjPoint(parse_element(coords[0], field), parse_element(coords[1], field));
}

void print_float_rep(std::ostream& out, const FloatSurfaceRep& rep) {
  out << "inexact genus " << rep.genus << "\n";
  out << std::setprecision(17);
  for (const auto& [a, b] : rep.pairs) {
    out << a[0] << " " << a[1] << " " << a[2] << " " << a[3] << "\n";
    out << b[0] << " " << b[1] << " " << b[2] << " " << b[3] << "\n";
  }
}

int check_cocycle(long trials, std::uint64_t seed, std::ostream& out) {
  long failures = 0;
  for (long i = 0; i < trials; ++i) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(i)));
    FieldDesc q = FieldDesc::rational();
    Mat2 g1 = sample_sl2(rng, 3, q);
    Mat2 g2 = sample_sl2(rng, 3, q);
    Mat2 g3 = sample_sl2(rng, 3, q);
    ProjPoint p = ProjPoint::finite(FieldElement(rng.uniform(-5, 5)));
    if (cocycle_defect(g1, g2, g3, p) != 0) ++failures;
  }
  if (failures == 0) {
    out << "ok " << trials << "\n";
    return 0;
  }
  out << error_record("CocycleViolation",
                      std::to_string(failures) + " of " + std::to_string(trials) +
                          " defects nonzero")
             .dump()
      << "\n";
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Euler-cocycle computations for surface-group representations in SL2"};
  app.require_subcommand(1);

  std::string file;
  std::vector<std::string> basepoint;
  auto* euler = app.add_subcommand("euler", "Exact integer Euler number of a representation file");
  euler->add_option("file", file)->required();
  euler->add_option("--basepoint", basepoint)->expected(2);

  int word_depth = 8;
  double epsilon = 1e-6;
  auto* certify_cmd = app.add_subcommand("certify", "Doubling certificate for a tuple file");
  certify_cmd->add_option("file", file)->required();
  certify_cmd->add_option("--word-depth", word_depth);
  certify_cmd->add_option("--epsilon", epsilon);

  int kappa = 1;
  double flow_t = 0;
  bool flow_set = false;
  auto* twist_cmd = app.add_subcommand("twist", "Regluing twist along a separating curve");
  twist_cmd->add_option("file", file)->required();
  twist_cmd->add_option("--kappa", kappa)->required();
  auto* flow_opt = twist_cmd->add_option("--flow", flow_t);

  std::vector<double> mat_entries;
  auto* rot_cmd = app.add_subcommand("rot", "Rotation number of a float matrix a b c d");
  rot_cmd->add_option("matrix", mat_entries)->expected(4)->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Float lifted-relator Euler number (inexact)");
  oracle_cmd->add_option("file", file)->required();

  std::string mode, config_path;
  auto* scan_cmd = app.add_subcommand("scan", "Reproducible certificate / bound scans");
  scan_cmd->add_option("--mode", mode)->required()->check(CLI::IsMember({"cert", "mw"}));
  scan_cmd->add_option("--config", config_path)->required();

  long cc_trials = 1000;
  std::uint64_t cc_seed = 0;
  auto* cc_cmd = app.add_subcommand("check-cocycle", "Random cocycle-identity self check");
  cc_cmd->add_option("--trials", cc_trials);
  cc_cmd->add_option("--seed", cc_seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  flow_set = flow_opt->count() > 0;

  err << "eulercert " << kVersion << " norm_const=" << kNormConst << "\n";

  try {
    if (euler->parsed()) {
      SurfaceRep rep = load_rep(file);
      out << euler_number(rep, basepoint_from_flags(basepoint, rep.field())) << "\n";
      return 0;
    }
    if (certify_cmd->parsed()) {
      HeuristicParams params;
      params.max_length = word_depth;
      params.epsilon = epsilon;
      Certificate cert = certify(load_pairs(file), params);
      out << certificate_record(cert).dump() << "\n";
      return 0;
    }
    if (twist_cmd->parsed()) {
      SurfaceRep rep = load_rep(file);
      if (flow_set) {
        FlowTwistResult result = flow_twist(rep, kappa, flow_t);
        if (result.sign_flipped) err << "note: tr(gamma) < -2, used log(-gamma)\n";
        print_float_rep(out, result.rep);
      } else {
        write_rep(out, discrete_twist(rep, kappa));
      }
      return 0;
    }
    if (rot_cmd->parsed()) {
      out << std::setprecision(17)
          << rot({mat_entries[0], mat_entries[1], mat_entries[2], mat_entries[3]}) << "\n";
      return 0;
    }
    if (oracle_cmd->parsed()) {
      SurfaceRep rep = load_rep(file);
      out << "inexact " << milnor_euler(downcast(rep)) << "\n";
      return 0;
    }
    if (scan_cmd->parsed()) {
      std::ifstream in(config_path);
      if (!in) throw ConfigError("cannot open config file: " + config_path);
      nlohmann::json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad config JSON: ") + e.what());
      }
      ScanConfig config = scan_config_from_json(j);
      ScanReport report =
          mode == "cert" ? scan_certificates(config) : scan_milnor_wood(config);
      out << to_jsonl(report);
      err << summary_table(report);
      return 0;
    }
    if (cc_cmd->parsed()) {
      if (cc_trials < 1) throw ConfigError("--trials must be >= 1");
      return check_cocycle(cc_trials, cc_seed, out);
    }
  } catch (const Error& e) {
    out << error_record(error_name(e), e.what()).dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    out << error_record("InternalError", e.what()).dump() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace eulercert::cli
