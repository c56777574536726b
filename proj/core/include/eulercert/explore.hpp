#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eulercert/doubling.hpp"
#include "eulercert/surfrep.hpp"

namespace eulercert {

/// Deterministic 64-bit generator (splitmix64).  The standard library's
/// distributions are not specified bit-for-bit across platforms; this one is,
/// which the byte-identical-reports contract requires.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform-ish integer in [lo, hi] (modulo reduction; the sampling measure
  /// is an arbitrary, documented choice, not a statistical claim).
  long uniform(long lo, long hi);
  /// Independent per-trial seed derived from (master seed, trial index), so
  /// trials may run in any order with identical results.
  static std::uint64_t derive(std::uint64_t master, std::uint64_t index);

 private:
  std::uint64_t state_;
};

/// Random unimodular matrix over the given field: a bounded product of
/// elementary matrices [[1,m],[0,1]], [[1,0],[m,1]] with small entries, so
/// det = 1 holds exactly by construction.
Mat2 sample_sl2(Rng& rng, long height, const FieldDesc& field = FieldDesc::rational());

struct ScanConfig {
  int n = 1;            // pairs per tuple (certificate mode)
  long trials = 1;
  std::uint64_t seed = 0;
  long entry_height = 2;
  FieldDesc field = FieldDesc::rational();
  int genus = 2;        // surface genus (Milnor-Wood mode)
  HeuristicParams heuristic;
  /// Optional tuple planted as trial 0 of a certificate scan.
  std::optional<std::vector<std::pair<Mat2, Mat2>>> planted;
};

/// Reads a config from JSON keys n, trials, seed, entry_height, field, genus,
/// max_word_length, epsilon, word_cap, planted (a tuple record, or the string
/// "calibration" for the built-in maximal pair).  Throws ConfigError.
ScanConfig scan_config_from_json(const nlohmann::json& j);
nlohmann::json scan_config_to_json(const ScanConfig& config);

/// The frozen calibration tuple: one pair of rational hyperbolic matrices
/// whose commutator has trace < -2, whose double is a maximal genus-2
/// representation (exact f = -4, oracle Euler number -2).
std::vector<std::pair<Mat2, Mat2>> calibration_pair();

struct ScanReport {
  nlohmann::json config;
  std::vector<nlohmann::json> trials;
  nlohmann::json summary;
};

/// Line-delimited records: config line, one line per trial, summary line.
/// Byte-identical for identical configs.
std::string to_jsonl(const ScanReport& report);
/// Human summary table (stderr companion to the JSONL stream).
std::string summary_table(const ScanReport& report);

/// Certificate scan: per trial, sample n pairs and run the full certify
/// pipeline; errors are captured per-trial, never aborting the scan.
ScanReport scan_certificates(const ScanConfig& config);

/// Milnor-Wood scan: per trial, build a valid genus-g representation (from
/// mirrored blocks, a random global conjugation and an optional twist) and
/// check |euler_number| <= bound; violations carry full reproduction data.
ScanReport scan_milnor_wood(const ScanConfig& config);

/// 64-bit FNV-1a, used for tuple hashes in trial records.
std::uint64_t fnv1a(const std::string& text);

}  // namespace eulercert
