#pragma once

// Return words to u.v on windows of two-sided sequences, their coding by
// first appearance, derived morphisms between nested windows and the full
// derived tower (u_n, v_n, lambda_n) with its length and count bounds.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sadic/directive.hpp"
#include "sadic/morphisms.hpp"
#include "sadic/words.hpp"

namespace sadic {

/// Return words to u.v found in a window, in order of first appearance of
/// u w v at positions >= -|u|. Index k (1-based) codes returns[k - 1].
struct ReturnWordTable {
  Word u;
  Word v;
  std::vector<Word> returns;
  // Window position where each return word first starts.
  std::vector<Position> first_positions;
  // How many consecutive-occurrence pairs produced each return word.
  std::vector<std::size_t> counts;
  // Occurrences of uv considered start in [scan_from, scan_to).
  Position scan_from = 0;
  Position scan_to = 0;
  // Every return word was seen at least twice and the scanned span reached
  // the requested minimum.
  bool complete = false;
  AlphabetPtr code_alphabet;

  std::size_t size() const noexcept { return returns.size(); }
  const Word& theta(std::size_t k) const;
  /// The coding R -> A^+ as a morphism.
  Morphism as_morphism() const;
};

struct ReturnWordOptions {
  // Minimum span of window (from -|u| rightward) for the table to count as
  // complete.
  std::size_t min_complete_span = 0;
};

ReturnWordTable return_words(const TwoSidedWindow& x, const Word& u, const Word& v,
                             ReturnWordOptions options = {});

/// The three-condition test: u w v occurs in the window at a position
/// >= -|u|, v is a prefix of w v, u is a suffix of u w, and u w v contains
/// exactly two occurrences of uv.
bool is_return_word(const TwoSidedWindow& x, const Word& u, const Word& w, const Word& v);

/// Independent oracle: the set of return words read off every pair of
/// occurrences of uv whose span u w v holds exactly two occurrences.
std::set<Word> brute_force_return_words(const TwoSidedWindow& x, const Word& u, const Word& v);

/// Codes of the `count` return words tiling x from the occurrence of uv at
/// `from`.
Word encode(const ReturnWordTable& table, const TwoSidedWindow& x, Position from,
            std::size_t count);
/// Concatenation of the coded return words.
Word decode(const ReturnWordTable& table, const Word& code);

/// lambda : R_next -> R_prev^+ with decode(prev, lambda(b)) == theta_next(b).
/// Fails with a factorization error when some return word of `next` is not a
/// unique concatenation of return words of `prev`.
Morphism derived_morphism(const ReturnWordTable& prev, const ReturnWordTable& next);

struct TowerLevel {
  std::size_t n = 0;
  std::size_t window_length = 0;  // |u_n| = |v_n|
  ReturnWordTable table;
  std::optional<Morphism> lambda;  // n >= 1
  std::size_t max_lambda_length = 0;
  bool count_ok = false;          // #R_n <= K (K+1)^2
  bool length_ok = true;          // |lambda_n(b)| <= alpha K^2
  bool identity_ok = true;        // theta_{n-1} lambda_n == theta_n letterwise
  std::optional<std::pair<Symbol, Symbol>> proper;
  // Every letter of R_{n-1} occurs in every lambda_n(b).
  bool lambda_positive = true;
  // lambda_0 ... lambda_n (1) == theta_n(1), a prefix of x_[0, oo).
  bool reconstruction_ok = false;
};

struct DerivedTower {
  unsigned K = 2;
  std::uint64_t alpha = 0;  // K^2 (K + 1)
  std::uint64_t count_bound = 0;   // K (K+1)^2
  std::uint64_t length_bound = 0;  // alpha K^2
  std::size_t window_size = 0;
  std::size_t origin = 0;
  std::vector<TowerLevel> levels;
  std::optional<Morphism> lambda0;  // theta_0
  std::vector<std::string> diagnostics;

  bool all_ok() const noexcept;
};

/// Builds levels 0..levels from u_n = x_[-alpha^n, 0), v_n = x_[0, alpha^n).
/// Bound violations are recorded as "K too small" diagnostics; an incomplete
/// table is an insufficient_window error.
DerivedTower build_tower(const TwoSidedWindow& x, unsigned K, std::size_t levels);

/// Generates x^+ from the directive, places the origin at alpha^levels and
/// doubles the right extent until every level is complete.
DerivedTower build_tower(const DirectiveSequence& d, unsigned K, std::size_t levels,
                         std::size_t max_window = std::size_t{1} << 24);

struct RatioRow {
  std::size_t length = 0;
  std::size_t max_return = 0;  // longest observed return word to a length-`length` factor
  std::size_t witness = 0;     // window index of the factor preceding it
  std::size_t factors_seen = 0;
  std::size_t recurrent_factors = 0;  // factors with at least two occurrences
};

struct RatioProfile {
  std::size_t window = 0;
  std::vector<RatioRow> rows;
  std::vector<std::size_t> omitted;  // lengths with no observed return word
  // Largest max_return / length over the rows, as an exact fraction.
  std::size_t best_num = 0;
  std::size_t best_den = 1;
};

/// For each factor length 1..max_u_len, the largest |w| / |u| over all
/// factors u of the window and return words w to u observed inside it.
RatioProfile lr_ratio_estimate(const Word& x, std::size_t max_u_len, unsigned threads = 1);
RatioProfile lr_ratio_estimate(const TwoSidedWindow& x, std::size_t max_u_len, unsigned threads = 1);

}  // namespace sadic
