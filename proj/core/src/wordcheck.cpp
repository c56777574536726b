#include "eulercert/wordcheck.hpp"

#include <cmath>

#include "eulercert/errors.hpp"

namespace eulercert {

namespace {

bool near_central(const FloatMat2& m, double eps) {
  double dp = 0, dm = 0;
  const FloatMat2 id{1, 0, 0, 1};
  for (int i = 0; i < 4; ++i) {
    dp = std::max(dp, std::abs(m[i] - id[i]));
    dm = std::max(dm, std::abs(m[i] + id[i]));
  }
  return dp <= eps || dm <= eps;
}

char letter_name(std::size_t index, bool inverse) {
  char base = inverse ? 'A' : 'a';
  return static_cast<char>(base + static_cast<char>(index));
}

struct Enumerator {
  const std::vector<FloatMat2>& letters;  // generators then inverses
  std::size_t n;
  int max_length;
  double eps;
  WordCheck result;

  bool is_inverse_pair(std::size_t i, std::size_t j) const {
    return (i < n && j == i + n) || (j < n && i == j + n);
  }

  // Returns true when a witness was found (stop the search).
  bool extend(const FloatMat2& prefix, std::string& word, std::size_t last, int depth) {
    if (depth == max_length) return false;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (!word.empty() && is_inverse_pair(last, i)) continue;  // freely reduce
      FloatMat2 m = word.empty() ? letters[i] : fmul(prefix, letters[i]);
      word.push_back(letter_name(i % n, i >= n));
      ++result.words_checked;
      if (near_central(m, eps)) {
        result.witness = word;
        return true;
      }
      if (extend(m, word, i, depth + 1)) return true;
      word.pop_back();
    }
    return false;
  }
};

}  // namespace

WordCheck word_heuristic(const std::vector<FloatMat2>& generators, int max_length,
                         double epsilon, long word_cap) {
  if (generators.empty()) throw Error("word_heuristic needs at least one generator");
  if (max_length < 1) throw Error("max_length must be >= 1");
  if (epsilon <= 0) throw Error("epsilon must be positive");

  // Count freely reduced words up front and refuse hopeless configurations.
  long double total = 0, layer = static_cast<long double>(2 * generators.size());
  for (int l = 1; l <= max_length; ++l) {
    total += layer;
    layer *= static_cast<long double>(2 * generators.size() - 1);
    if (total > static_cast<long double>(word_cap))
      throw CombinatorialBlowup("word enumeration would exceed the cap; lower max_length");
  }

  std::vector<FloatMat2> letters = generators;
  for (const auto& g : generators) letters.push_back(finv(g));

  Enumerator en{letters, generators.size(), max_length, epsilon, {}};
  std::string word;
  bool found = en.extend({1, 0, 0, 1}, word, 0, 0);
  en.result.ok = !found;
  return en.result;
}

}  // namespace eulercert
