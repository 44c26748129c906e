#pragma once

// Free-monoid morphisms between alphabets.
//
// Composition follows directive notation: compose(outer, inner) is the map
// c -> outer(inner(c)), so the product s0 s1 ... sn applies sn first.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sadic/words.hpp"

namespace sadic {

class Morphism {
 public:
  /// images[s] is the image of domain symbol s; it is translated onto the
  /// codomain and must be non-empty.
  Morphism(AlphabetPtr domain, AlphabetPtr codomain, std::vector<Word> images);

  static Morphism identity(const AlphabetPtr& alphabet);
  /// Images given as text, one per domain letter in alphabet order.
  static Morphism from_images(const AlphabetPtr& domain, const AlphabetPtr& codomain,
                              const std::vector<std::string>& images);

  const AlphabetPtr& domain() const noexcept { return domain_; }
  const AlphabetPtr& codomain() const noexcept { return codomain_; }
  const Word& image(Symbol letter) const { return images_.at(letter); }
  const Word& image(std::string_view letter) const { return images_.at(domain_->index(letter)); }
  std::span<const Word> images() const noexcept { return images_; }

  /// Letter-wise equality of images over equal alphabets.
  bool operator==(const Morphism& other) const;

  /// Morphism file text: a `domain:` and `codomain:` header then one
  /// `letter -> image` line per domain letter.
  std::string str() const;

 private:
  AlphabetPtr domain_;
  AlphabetPtr codomain_;
  std::vector<Word> images_;
};

/// Concatenation of letter images; apply(m, empty) is empty.
Word apply(const Morphism& m, const Word& w);
/// The first min(max_length, |m(w)|) symbols of m(w), reading only as much
/// of w as needed.
Word apply_prefix(const Morphism& m, const Word& w, std::size_t max_length);

Morphism compose(const Morphism& outer, const Morphism& inner);
/// m^k for an endomorphism; m^0 is the identity.
Morphism power(const Morphism& m, unsigned k);

/// (first, last) codomain letters shared by every image, if any.
std::optional<std::pair<Symbol, Symbol>> is_proper(const Morphism& m);
/// The common image length, if every image has the same length.
std::optional<std::size_t> constant_length(const Morphism& m);
/// (shortest, longest) image length.
std::pair<std::size_t, std::size_t> image_length_bounds(const Morphism& m);

/// Dense non-negative integer matrix.
class CountMatrix {
 public:
  CountMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint64_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  bool is_positive() const;
  bool operator==(const CountMatrix&) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<std::uint64_t> data_;
};

/// Saturating product (entries clamp at 2^63).
CountMatrix operator*(const CountMatrix& a, const CountMatrix& b);

/// Entry (b, c) counts occurrences of codomain letter b in m(c).
CountMatrix occurrence_matrix(const Morphism& m);
bool is_positive(const Morphism& m);

}  // namespace sadic
