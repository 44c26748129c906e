#pragma once

// Directive sequences (s_n : A_{n+1} -> A_n^+) and the S-adic limit
// x = lim s_0 s_1 ... s_n (a a a ...), together with the diagnostics that
// are computable on finite prefixes: primitivity windows, the D_n gap
// statistic and the linear complexity ceiling.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sadic/morphisms.hpp"
#include "sadic/words.hpp"

namespace sadic {

inline constexpr std::size_t kDefaultDepthBudget = 96;

class DirectiveSequence {
 public:
  /// The rule must be pure: the same n always yields the same morphism.
  using Rule = std::function<Morphism(std::size_t)>;

  DirectiveSequence(Rule rule, std::optional<std::size_t> length, std::string seed,
                    std::string description,
                    std::optional<std::size_t> primitivity_constant = std::nullopt);

  /// s_0 ... s_{k-1}; asking for s_k or later is an error.
  static DirectiveSequence finite(std::vector<Morphism> morphisms, std::string seed,
                                  std::string description);
  /// s_n = period[n mod |period|].
  static DirectiveSequence periodic(std::vector<Morphism> period, std::string seed,
                                    std::string description);

  Morphism at(std::size_t n) const;
  bool has(std::size_t n) const noexcept { return !length_ || n < *length_; }
  std::optional<std::size_t> length() const noexcept { return length_; }
  const std::string& seed() const noexcept { return seed_; }
  const std::string& description() const noexcept { return description_; }
  std::optional<std::size_t> primitivity_constant() const noexcept { return s0_; }

  /// The shifted directive s_n, s_{n+1}, ...
  DirectiveSequence tail(std::size_t n) const;

 private:
  Rule rule_;
  std::optional<std::size_t> length_;
  std::string seed_;
  std::string description_;
  std::optional<std::size_t> s0_;
};

struct GeneratedPrefix {
  Word word;
  // Leading symbols that agreed across the confirming depths.
  std::size_t stable_length = 0;
  // Largest directive index composed.
  std::size_t depth_used = 0;
  bool converged = false;
};

/// First `target` symbols of x. Depths are tried in turn. When every
/// morphism of the chain is prolongable on the seed the prefix is certified
/// as soon as s_0 ... s_k (seed) is long enough; otherwise three consecutive
/// depths applied to seed^m must agree on it.
GeneratedPrefix limit_prefix(const DirectiveSequence& d, std::size_t target,
                             std::size_t depth_budget = kDefaultDepthBudget);
/// First `target` symbols of x^(level) = lim s_level ... s_l (a a a ...).
GeneratedPrefix tail_prefix(const DirectiveSequence& d, std::size_t level, std::size_t target,
                            std::size_t depth_budget = kDefaultDepthBudget);
/// tail_prefix that turns non-convergence into a not_converged error.
Word generate(const DirectiveSequence& d, std::size_t level, std::size_t target,
              std::size_t depth_budget = kDefaultDepthBudget);

/// s_from s_{from+1} ... s_to, materialised.
Morphism telescope(const DirectiveSequence& d, std::size_t from, std::size_t to);

/// Row k - from holds |s_from ... s_k (c)| for every c in A_{k+1}, computed
/// by the length recursion without materialising images. Saturates at 2^63.
std::vector<std::vector<std::uint64_t>> telescoped_lengths(const DirectiveSequence& d,
                                                           std::size_t from, std::size_t to);

struct PrimitivityRow {
  std::size_t r = 0;
  bool positive = false;
  // A letter b of A_r missing from the image of c, when not positive.
  std::optional<std::pair<std::string, std::string>> witness;
};

struct PrimitivityReport {
  std::size_t s0 = 0;
  std::vector<PrimitivityRow> rows;
  bool all_positive = false;
};

/// For r = 0..r_max, whether every letter of A_r occurs in
/// s_r s_{r+1} ... s_{r+s0} (c) for every c in A_{r+s0+1}. Only the
/// inspected window is certified.
PrimitivityReport check_primitive_window(const DirectiveSequence& d, std::size_t r_max,
                                         std::size_t s0);

struct DnObservation {
  std::size_t level = 0;
  // Largest gap between consecutive occurrences of a length-2 factor of the
  // observed prefix of x^(level): a lower bound for D_level.
  std::optional<std::size_t> value;
  bool truncated = false;
  std::size_t window = 0;
};

DnObservation dn_statistic(const DirectiveSequence& d, std::size_t level, std::size_t window,
                           std::size_t depth_budget = kDefaultDepthBudget);

struct LrSufficientReport {
  std::vector<DnObservation> rows;
  std::optional<std::size_t> max_observed;
  // Heuristic only: the later half of the observed levels does not exceed
  // the maximum of the earlier half.
  bool consistent_with_lr = false;
};

LrSufficientReport lr_sufficient_report(const DirectiveSequence& d, std::size_t n_max,
                                        std::size_t window, unsigned threads = 1);

/// Exact non-negative rational.
struct Ratio {
  std::uint64_t num = 1;
  std::uint64_t den = 1;

  /// "3", "5/2".
  static Ratio parse(std::string_view text);
  std::string str() const;
};

struct LengthHypothesisRow {
  std::size_t depth = 0;
  std::uint64_t max_next = 0;     // max_b |s_0 ... s_{n+1}(b)|
  std::uint64_t min_current = 0;  // min_c |s_0 ... s_n(c)|
  bool holds = false;
  std::string witness_b, witness_c;
};

struct ComplexityRow {
  std::size_t n = 0;
  std::size_t observed = 0;
  bool holds = false;
};

struct ComplexityBoundReport {
  Ratio bound;
  std::size_t alphabet_size = 0;
  std::size_t window = 0;
  std::vector<LengthHypothesisRow> hypothesis;
  bool hypothesis_holds = false;
  std::vector<std::uint64_t> min_lengths;  // min_c |s_0 ... s_n(c)|, n = 0..depth+1
  bool growth_holds = false;
  std::vector<ComplexityRow> complexity;
  bool complexity_holds = false;

  bool passed() const noexcept { return hypothesis_holds && growth_holds && complexity_holds; }
};

/// Checks the length-ratio hypothesis |s_0..s_{n+1}(b)| <= D |s_0..s_n(c)| for
/// n = 0..depth, strict growth of the shortest telescoped image, and the
/// ceiling p(n) <= D (Card A)^2 n for 1 <= n <= n_max on a window-length
/// prefix of x.
ComplexityBoundReport complexity_bound_check(const DirectiveSequence& d, Ratio D,
                                             std::size_t n_max, std::size_t window,
                                             std::size_t depth = 8);

}  // namespace sadic
