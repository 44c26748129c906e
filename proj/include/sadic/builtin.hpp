#pragma once

// The two worked constructions: the primitive non-LR counterexample built
// from sigma, tau over {a, b, c}, and Sturmian sequences driven by
// continued-fraction partial quotients.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sadic/directive.hpp"
#include "sadic/morphisms.hpp"
#include "sadic/returns.hpp"
#include "sadic/words.hpp"

namespace sadic::builtin {

// ---- counterexample over {a, b, c} ----

AlphabetPtr abc();
/// a -> acb, b -> bab, c -> cbc
const Morphism& cx_sigma();
/// a -> abc, b -> acb, c -> aac
const Morphism& cx_tau();

/// sigma tau sigma^2 tau sigma^3 tau ..., seed a, primitivity constant 1.
DirectiveSequence counterexample_directive();
/// Index of the first morphism of block k >= 1 (the block sigma^k tau).
std::size_t counterexample_block_start(std::size_t k);
/// rho_n = sigma tau sigma^2 tau ... sigma^n tau.
Morphism rho(std::size_t n);
/// |rho_n| as a power of three: n (n + 3) / 2.
std::size_t rho_exponent(std::size_t n);
/// sigma^n tau.
Morphism sigma_power_tau(std::size_t n);

struct GapLemmaReport {
  std::size_t n = 0;
  std::uint64_t bound = 0;  // 3^{n+1}
  std::size_t word_length = 0;
  std::size_t occurrences = 0;
  std::optional<std::size_t> min_gap, max_gap;
  bool conclusive = false;  // at least three occurrences of ca
  bool holds = false;       // min gap >= bound
  bool strict = false;      // min gap > bound
};

/// Gaps between successive occurrences of ca in sigma^n tau (z).
GapLemmaReport verify_gap_lemma(std::size_t n, const Word& z);
/// Same, with z a prefix of the counterexample tail following block n and
/// sigma^n tau (z) about `window` symbols long.
GapLemmaReport verify_gap_lemma(std::size_t n, std::size_t window);

struct NotLrReport {
  std::size_t n = 0;
  std::size_t window = 0;                 // |sigma^{n+1} tau (y)| scanned
  std::size_t first_ca = 0;               // w starts here, with ca
  std::size_t return_length = 0;          // |w|
  std::size_t min_return_length = 0;      // over every return word to ca seen
  std::uint64_t bound = 0;                // 3^{n+2}
  std::size_t ratio_num = 0, ratio_den = 2;  // |rho_n(w)| / |rho_n(ca)| = |w| / 2
  std::size_t rho_exponent = 0;
  std::size_t rho_ca_occurrences = 0;     // in rho_n(c a w' c a)
  bool exact_twice = false;
  // rho_n(c a w' c a) read at offset first_ca |rho_n| of the generated x.
  std::optional<bool> occurs_in_x;
  bool passed = false;
};

NotLrReport verify_not_lr(std::size_t n, std::size_t window,
                          std::size_t x_check_limit = std::size_t{1} << 25);

// ---- Sturmian family ----

AlphabetPtr binary();
/// 0 -> 01, 1 -> 1
const Morphism& st_sigma();
/// 0 -> 0, 1 -> 10
const Morphism& st_tau();

class SturmianSpec {
 public:
  using Quotients = std::function<std::size_t(std::size_t)>;

  /// i_1, i_2, ... ; the last one repeats forever when repeat_last is set,
  /// otherwise the directive is finite.
  static SturmianSpec from_quotients(std::vector<std::size_t> quotients, bool repeat_last = true);
  /// [0; a_1, a_2, ...] with i_1 = a_1 - 1 and i_k = a_k.
  static SturmianSpec from_continued_fraction(const std::vector<std::size_t>& cf,
                                              bool repeat_last = true);
  static SturmianSpec golden();  // i_1 = 0, i_k = 1
  static SturmianSpec linear();  // i_k = k
  static SturmianSpec from_rule(Quotients rule, std::string description);

  /// 1-based.
  std::size_t quotient(std::size_t k) const;
  std::optional<std::size_t> count() const noexcept { return count_; }
  const std::string& description() const noexcept { return description_; }

 private:
  SturmianSpec(Quotients q, std::optional<std::size_t> count, std::string description);
  Quotients q_;
  std::optional<std::size_t> count_;
  std::string description_;
};

/// tau^{i_1} sigma^{i_2} tau^{i_3} ... flattened, seed 0.
DirectiveSequence sturmian_directive(const SturmianSpec& s);
/// One morphism (tau^{i_k} or sigma^{i_k}) per non-empty block, seed 0.
DirectiveSequence sturmian_block_directive(const SturmianSpec& s);

struct BlockIdentityReport {
  std::size_t i = 0, j = 0, k = 0;
  Word image0, formula0, image1, formula1;
  bool equal0 = false, equal1 = false;
  bool passed() const noexcept { return equal0 && equal1; }
};

/// tau^i sigma^j tau^k (0) == 0 (1 0^i)^j, (1) == 1 0^i (0 (1 0^i)^j)^k.
BlockIdentityReport verify_block_identities(std::size_t i, std::size_t j, std::size_t k);

struct SturmianGapRow {
  Word factor;
  std::optional<std::size_t> max_gap;
  std::optional<std::size_t> sub_bound;  // informational
  bool within_sub_bound = true;
};

struct SturmianGapReport {
  std::size_t i = 0, j = 0, k = 0;
  std::size_t word_length = 0;
  std::size_t bound = 0;  // 2 max{i, j, k} + 3
  std::vector<SturmianGapRow> rows;
  bool only_expected_factors = false;  // length-2 factors within {00, 01, 10}
  bool holds = false;
};

/// Gaps of the length-2 factors of tau^i sigma^j tau^k (x_tail).
SturmianGapReport verify_sturmian_gaps(std::size_t i, std::size_t j, std::size_t k,
                                       const Word& x_tail);

struct SturmianVerdictRow {
  std::size_t level = 0;
  std::size_t max_quotient = 0;  // over the blocks level, level + 1, level + 2
  std::size_t bound = 0;         // 2 max_quotient + 3
  DnObservation dn;
  bool holds = false;
};

struct SturmianVerdict {
  std::string description;
  bool head_dropped = false;  // i_1 = 0 contributes no block
  std::vector<SturmianVerdictRow> rows;
  RatioProfile profile;
  LrSufficientReport trend;
  bool bounds_hold = false;
};

SturmianVerdict sturmian_lr_verdict(const SturmianSpec& s, std::size_t n_max, std::size_t window,
                                    std::size_t max_u_len = 200, unsigned threads = 1);

// ---- randomized self-checks on sample windows ----

struct CodingCheckReport {
  std::size_t tables = 0;
  std::size_t pairs = 0;        // distinct code words compared
  std::size_t collisions = 0;   // pairs decoding to the same word
  std::size_t round_trips = 0;  // encode + decode against a window slice
  std::size_t round_trip_failures = 0;
  bool passed() const noexcept { return pairs > 0 && collisions == 0 && round_trip_failures == 0; }
};

/// Random pairs of distinct code words over return-word tables with at least
/// two return words, drawn from Sturmian, counterexample and random windows.
CodingCheckReport check_coding(std::size_t pairs, std::uint64_t seed = 1);

struct OracleCheckReport {
  std::size_t instances = 0;
  std::size_t max_window = 0;
  std::size_t mismatches = 0;
  std::string first_mismatch;
  bool passed() const noexcept { return instances > 0 && mismatches == 0; }
};

/// return_words against brute_force_return_words on random (window, u, v).
OracleCheckReport check_return_oracle(std::size_t instances, std::size_t max_window = 2000,
                                      std::uint64_t seed = 1);

}  // namespace sadic::builtin
