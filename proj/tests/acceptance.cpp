// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "sadic/builtin.hpp"
#include "sadic/directive.hpp"
#include "sadic/error.hpp"
#include "sadic/returns.hpp"

using namespace sadic;
using namespace sadic::builtin;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::uint64_t pow3(std::size_t e) {
  std::uint64_t p = 1;
  while (e--) p *= 3;
  return p;
}

unsigned threads() { return std::max(1u, std::min(8u, std::thread::hardware_concurrency())); }

Outcome not_lr_blow_up() {
  std::ostringstream detail;
  bool ok = true;
  for (std::size_t n = 1; n <= 3; ++n) {
    const NotLrReport r = verify_not_lr(n, 100000);
    // |w| / 2 >= 3^{n+2} / 2, compared on numerators.
    const bool ratio_ok = r.ratio_den == 2 && r.ratio_num >= pow3(n + 2);
    ok = ok && r.passed && ratio_ok && r.window <= 1000000;
    detail << (n > 1 ? ", " : "") << "n=" << n << " |w|=" << r.return_length << " ratio=" << r.ratio_num << "/"
           << r.ratio_den;
  }
  return {ok, detail.str()};
}

Outcome gap_lemma() {
  std::ostringstream detail;
  bool ok = true;
  for (std::size_t n = 1; n <= 5; ++n) {
    const GapLemmaReport r = verify_gap_lemma(n, 20000);
    ok = ok && r.conclusive && r.occurrences >= 3 && r.min_gap && *r.min_gap >= pow3(n + 1);
    detail << (n > 1 ? ", " : "") << "n=" << n << " min=" << (r.min_gap ? *r.min_gap : 0) << ">=" << r.bound;
  }
  return {ok, detail.str()};
}

Outcome complexity_ceiling() {
  const ComplexityBoundReport r = complexity_bound_check(counterexample_directive(), Ratio{3, 1}, 100, pow3(10));
  std::size_t worst = 0;
  for (const ComplexityRow& row : r.complexity) worst = std::max(worst, row.observed * 1000 / (27 * row.n));
  return {r.complexity_holds && r.complexity.size() == 100 && r.window >= pow3(10),
          "window=" + std::to_string(r.window) + " p(100)=" + std::to_string(r.complexity.back().observed) +
              " max p(n)/27n=" + std::to_string(worst) + "/1000"};
}

Outcome length_hypothesis() {
  const ComplexityBoundReport r = complexity_bound_check(counterexample_directive(), Ratio{3, 1}, 1, 1000, 8);
  const auto lengths = telescoped_lengths(counterexample_directive(), 0, 9);
  bool exact = true;
  for (std::size_t k = 0; k < lengths.size(); ++k)
    for (std::uint64_t len : lengths[k]) exact = exact && len == pow3(k + 1);
  return {r.hypothesis_holds && r.hypothesis.size() == 9 && exact,
          "depths 0..8 hold, telescoped lengths 3^(k+1) for k<=9: " + std::string(exact ? "yes" : "no")};
}

Outcome coding_injective() {
  const CodingCheckReport r = check_coding(10000, 1);
  return {r.passed() && r.pairs == 10000,
          std::to_string(r.pairs) + " pairs over " + std::to_string(r.tables) + " tables, " +
              std::to_string(r.collisions) + " collisions, " + std::to_string(r.round_trips) + " round trips"};
}

Outcome derived_tower() {
  const DerivedTower t = build_tower(sturmian_directive(SturmianSpec::golden()), 3, 2);
  bool ok = t.levels.size() == 3 && t.count_bound == 48 && t.length_bound == 324;
  std::ostringstream detail;
  for (const TowerLevel& level : t.levels) {
    ok = ok && level.table.size() <= 48 && level.count_ok && level.reconstruction_ok;
    if (level.n >= 1)
      ok = ok && level.identity_ok && level.length_ok && level.max_lambda_length <= 324 && level.proper &&
           level.lambda_positive;
    detail << (level.n ? ", " : "") << "#R_" << level.n << "=" << level.table.size();
    if (level.n) detail << " max|lambda_" << level.n << "|=" << level.max_lambda_length;
  }
  ok = ok && t.all_ok();
  detail << ", window=" << t.window_size;
  return {ok, detail.str()};
}

Outcome block_identities() {
  std::size_t passed = 0;
  for (std::size_t i = 1; i <= 4; ++i)
    for (std::size_t j = 1; j <= 4; ++j)
      for (std::size_t k = 1; k <= 4; ++k) {
        const BlockIdentityReport r = verify_block_identities(i, j, k);
        passed += r.equal0 + r.equal1;
      }
  return {passed == 128, std::to_string(passed) + "/128 identities"};
}

Outcome golden_gap_bound() {
  const LrSufficientReport r = lr_sufficient_report(sturmian_directive(SturmianSpec::golden()), 6, 10000, threads());
  bool ok = r.rows.size() == 7;
  std::ostringstream detail;
  detail << "D_n =";
  for (const DnObservation& d : r.rows) {
    ok = ok && d.value && *d.value <= 5 && d.window >= 10000;
    detail << " " << (d.value ? std::to_string(*d.value) : "-");
  }
  return {ok, detail.str()};
}

Outcome ratio_contrast() {
  const std::size_t window = 100000, limit = 4;
  const RatioProfile golden =
      lr_ratio_estimate(generate(sturmian_directive(SturmianSpec::golden()), 0, window), 200, threads());
  const RatioProfile linear =
      lr_ratio_estimate(generate(sturmian_directive(SturmianSpec::linear()), 0, window), 200, threads());
  const bool below = golden.best_num < limit * golden.best_den;
  // linear.num / linear.den > golden.num / golden.den
  const bool exceeds = linear.best_num * golden.best_den > golden.best_num * linear.best_den;
  return {below && exceeds && golden.rows.size() == 200,
          "golden max=" + std::to_string(golden.best_num) + "/" + std::to_string(golden.best_den) + " < " +
              std::to_string(limit) + ", linear max=" + std::to_string(linear.best_num) + "/" +
              std::to_string(linear.best_den)};
}

Outcome oracle_equivalence() {
  const OracleCheckReport r = check_return_oracle(500, 2000, 1);
  return {r.passed() && r.instances == 500,
          std::to_string(r.instances) + " instances, windows <= " + std::to_string(r.max_window) + ", " +
              std::to_string(r.mismatches) + " mismatches"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"counterexample return words to ca reach 3^(n+2), n=1..3", not_lr_blow_up},
      {"ca gaps in sigma^n tau(z) are >= 3^(n+1), n=1..5", gap_lemma},
      {"p(n) <= 27n for n<=100 on a 3^10 prefix", complexity_ceiling},
      {"length-ratio hypothesis with D=3 at depths <= 8", length_hypothesis},
      {"return-word coding is injective and round-trips", coding_injective},
      {"derived tower of the golden word, K=3, levels 0..2", derived_tower},
      {"Sturmian block identities for 1 <= i,j,k <= 4", block_identities},
      {"golden D_n <= 5 for n <= 6 on 10^4 windows", golden_gap_bound},
      {"ratio profile: golden below 4, linear quotients above golden", ratio_contrast},
      {"return_words matches brute force on 500 instances", oracle_equivalence},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const Error& e) {
      o = {false, std::string("error: ") + to_string(e.code()) + ": " + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu  %s  [%s] (%.2fs)\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), seconds);
    failed += !o.passed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
