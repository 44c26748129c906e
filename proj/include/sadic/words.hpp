#pragma once

// Alphabets, finite words and the exact scanning primitives (occurrences,
// factors, complexity, gaps) that the rest of the library is built on.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sadic {

using Symbol = std::uint32_t;
// Signed coordinate on a two-sided sequence (position 0 is the origin).
using Position = std::int64_t;

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// Ordered set of distinct, non-empty text tokens. A symbol is the index of
/// its token in this order.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> tokens);

  static AlphabetPtr make(std::vector<std::string> tokens);
  /// The alphabet {"1", ..., "count"} used for return-word codes.
  static AlphabetPtr numbered(std::size_t count);

  std::size_t size() const noexcept { return tokens_.size(); }
  const std::string& token(Symbol s) const;
  std::optional<Symbol> find(std::string_view token) const;
  /// Like find(), but an unknown token is an alphabet_mismatch error.
  Symbol index(std::string_view token) const;
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }
  /// True when every token is a single character, so words print unseparated.
  bool single_char() const noexcept { return single_char_; }

  bool operator==(const Alphabet& other) const { return tokens_ == other.tokens_; }

 private:
  std::vector<std::string> tokens_;
  std::map<std::string, Symbol, std::less<>> index_;
  bool single_char_ = true;
};

/// True when both alphabets have the same tokens in the same order.
bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);
/// True when every token of `sub` is a token of `super`.
bool is_subalphabet(const Alphabet& sub, const Alphabet& super);

class Word {
 public:
  Word(AlphabetPtr alphabet, std::vector<Symbol> symbols);

  static Word empty(AlphabetPtr alphabet);
  /// Whitespace-separated tokens, or one token per character when the text
  /// has no whitespace.
  static Word parse(const AlphabetPtr& alphabet, std::string_view text);
  /// Parses text and infers the alphabet from the tokens in first-appearance
  /// order.
  static Word from_text(std::string_view text);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }

  /// Symbols [from, to).
  Word subword(std::size_t from, std::size_t to) const;
  Word prefix(std::size_t length) const { return subword(0, length); }
  /// The same token sequence over another alphabet containing all its tokens.
  Word translated(const AlphabetPtr& target) const;
  std::string str() const;

  /// Token-wise equality (alphabets may be distinct objects).
  bool operator==(const Word& other) const;
  /// Symbol-lexicographic order; meaningful for words over one alphabet.
  std::strong_ordering operator<=>(const Word& other) const;

 private:
  AlphabetPtr alphabet_;
  std::vector<Symbol> symbols_;
};

Word concat(std::span<const Word> parts);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Ascending start positions of u in w, overlapping occurrences included.
std::vector<std::size_t> occurrences(const Word& w, const Word& u);
/// The same over raw symbol spans; u must be non-empty.
std::vector<std::size_t> occurrences(std::span<const Symbol> text,
                                     std::span<const Symbol> pattern);

/// Distinct factors of length n in symbol order.
std::vector<Word> factors(const Word& w, std::size_t n);
/// Number of distinct factors of length n. complexity(w, 0) == 1.
std::size_t complexity(const Word& w, std::size_t n);
/// Entry n holds complexity(w, n) for 0 <= n <= max_n.
std::vector<std::size_t> complexity_profile(const Word& w, std::size_t max_n);

/// Largest difference between consecutive occurrences of u in w, if u
/// occurs at least twice.
std::optional<std::size_t> max_gap(const Word& w, const Word& u);

struct FactorGap {
  Symbol first = 0;
  Symbol second = 0;
  std::size_t occurrences = 0;
  std::optional<std::size_t> max_gap;
  // Distance from the last occurrence to the end of the word.
  std::size_t open_tail = 0;
};

struct Length2Gaps {
  std::optional<std::size_t> max_gap;
  // Set when some length-2 factor occurs exactly once: the window may
  // under-observe its gaps.
  bool truncated = false;
  std::vector<FactorGap> factors;
};

Length2Gaps max_gap_over_length2(const Word& w);

/// Finite window of a two-sided sequence: symbol i of `word` sits at
/// position i - origin.
class TwoSidedWindow {
 public:
  TwoSidedWindow(Word word, std::size_t origin);

  const Word& word() const noexcept { return word_; }
  std::size_t origin() const noexcept { return origin_; }
  Position min_position() const noexcept { return -static_cast<Position>(origin_); }
  Position end_position() const noexcept {
    return static_cast<Position>(word_.size()) - static_cast<Position>(origin_);
  }
  bool contains(Position from, Position to) const noexcept {
    return min_position() <= from && from <= to && to <= end_position();
  }
  std::size_t index(Position p) const;
  Symbol at(Position p) const;
  /// x_[from, to) in window coordinates.
  Word slice(Position from, Position to) const;

 private:
  Word word_;
  std::size_t origin_;
};

}  // namespace sadic
