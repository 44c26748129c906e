#include "sadic/morphisms.hpp"

#include <algorithm>
#include <limits>

#include "sadic/error.hpp"

namespace sadic {

namespace {

constexpr std::uint64_t kSaturated = std::uint64_t{1} << 63;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return (a >= kSaturated - b) ? kSaturated : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return (a > kSaturated / b) ? kSaturated : a * b;
}

// Maps each symbol of `from` onto the domain of m; -1 marks tokens m does
// not know.
std::vector<Symbol> domain_map(const Morphism& m, const AlphabetPtr& from) {
  std::vector<Symbol> map(from->size(), static_cast<Symbol>(-1));
  for (Symbol s = 0; s < from->size(); ++s)
    if (auto d = m.domain()->find(from->token(s))) map[s] = *d;
  return map;
}

template <class Emit>
void for_each_image(const Morphism& m, const Word& w, std::size_t letters, Emit&& emit) {
  if (same_alphabet(m.domain(), w.alphabet())) {
    for (std::size_t i = 0; i < letters; ++i) emit(m.image(w[i]));
    return;
  }
  const auto map = domain_map(m, w.alphabet());
  for (std::size_t i = 0; i < letters; ++i) {
    const Symbol d = map[w[i]];
    if (d == static_cast<Symbol>(-1))
      fail(ErrorCode::alphabet_mismatch,
           "letter '" + w.alphabet()->token(w[i]) + "' outside morphism domain");
    emit(m.image(d));
  }
}

}  // namespace

Morphism::Morphism(AlphabetPtr domain, AlphabetPtr codomain, std::vector<Word> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  if (!domain_ || !codomain_) fail(ErrorCode::invalid_argument, "morphism needs both alphabets");
  if (images.size() != domain_->size())
    fail(ErrorCode::invalid_argument, "morphism needs exactly one image per domain letter");
  images_.reserve(images.size());
  for (std::size_t s = 0; s < images.size(); ++s) {
    if (images[s].empty())
      fail(ErrorCode::invalid_argument,
           "image of '" + domain_->token(static_cast<Symbol>(s)) + "' is empty");
    images_.push_back(images[s].translated(codomain_));
  }
}

Morphism Morphism::identity(const AlphabetPtr& alphabet) {
  std::vector<Word> images;
  for (Symbol s = 0; s < alphabet->size(); ++s) images.emplace_back(alphabet, std::vector<Symbol>{s});
  return Morphism(alphabet, alphabet, std::move(images));
}

Morphism Morphism::from_images(const AlphabetPtr& domain, const AlphabetPtr& codomain,
                               const std::vector<std::string>& images) {
  std::vector<Word> words;
  words.reserve(images.size());
  for (const auto& text : images) words.push_back(Word::parse(codomain, text));
  return Morphism(domain, codomain, std::move(words));
}

bool Morphism::operator==(const Morphism& other) const {
  return same_alphabet(domain_, other.domain_) && same_alphabet(codomain_, other.codomain_) &&
         images_ == other.images_;
}

std::string Morphism::str() const {
  auto join = [](const Alphabet& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i) s.push_back(' ');
      s += a.tokens()[i];
    }
    return s;
  };
  std::string out = "domain: " + join(*domain_) + "\ncodomain: " + join(*codomain_) + "\n";
  for (Symbol s = 0; s < domain_->size(); ++s)
    out += domain_->token(s) + " -> " + images_[s].str() + "\n";
  return out;
}

Word apply(const Morphism& m, const Word& w) {
  std::size_t total = 0;
  for_each_image(m, w, w.size(), [&](const Word& img) { total += img.size(); });
  std::vector<Symbol> out;
  out.reserve(total);
  for_each_image(m, w, w.size(),
                 [&](const Word& img) { out.insert(out.end(), img.symbols().begin(), img.symbols().end()); });
  return Word(m.codomain(), std::move(out));
}

Word apply_prefix(const Morphism& m, const Word& w, std::size_t max_length) {
  std::vector<Symbol> out;
  out.reserve(max_length);
  // Each image is non-empty, so at most max_length letters are read.
  const std::size_t letters = std::min(w.size(), max_length);
  for_each_image(m, w, letters, [&](const Word& img) {
    if (out.size() >= max_length) return;
    const std::size_t take = std::min(img.size(), max_length - out.size());
    out.insert(out.end(), img.symbols().begin(), img.symbols().begin() + static_cast<std::ptrdiff_t>(take));
  });
  return Word(m.codomain(), std::move(out));
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (!is_subalphabet(*inner.codomain(), *outer.domain()))
    fail(ErrorCode::alphabet_mismatch,
         "compose: inner codomain is not contained in the outer domain");
  std::vector<Word> images;
  images.reserve(inner.domain()->size());
  for (const Word& img : inner.images()) images.push_back(apply(outer, img));
  return Morphism(inner.domain(), outer.codomain(), std::move(images));
}

Morphism power(const Morphism& m, unsigned k) {
  if (!same_alphabet(m.domain(), m.codomain()))
    fail(ErrorCode::alphabet_mismatch, "power needs an endomorphism");
  Morphism result = Morphism::identity(m.domain());
  for (unsigned i = 0; i < k; ++i) result = compose(result, m);
  return result;
}

std::optional<std::pair<Symbol, Symbol>> is_proper(const Morphism& m) {
  const auto images = m.images();
  const Symbol l = images.front()[0];
  const Symbol r = images.front()[images.front().size() - 1];
  for (const Word& img : images)
    if (img[0] != l || img[img.size() - 1] != r) return std::nullopt;
  return std::pair{l, r};
}

std::optional<std::size_t> constant_length(const Morphism& m) {
  const auto [lo, hi] = image_length_bounds(m);
  if (lo != hi) return std::nullopt;
  return lo;
}

std::pair<std::size_t, std::size_t> image_length_bounds(const Morphism& m) {
  std::size_t lo = std::numeric_limits<std::size_t>::max(), hi = 0;
  for (const Word& img : m.images()) {
    lo = std::min(lo, img.size());
    hi = std::max(hi, img.size());
  }
  return {lo, hi};
}

bool CountMatrix::is_positive() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint64_t v) { return v >= 1; });
}

CountMatrix operator*(const CountMatrix& a, const CountMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::invalid_argument, "matrix shape mismatch");
  CountMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out.at(i, j) = sat_add(out.at(i, j), sat_mul(aik, b.at(k, j)));
    }
  return out;
}

CountMatrix occurrence_matrix(const Morphism& m) {
  CountMatrix out(m.codomain()->size(), m.domain()->size());
  for (Symbol c = 0; c < m.domain()->size(); ++c)
    for (Symbol b : m.image(c).symbols()) ++out.at(b, c);
  return out;
}

bool is_positive(const Morphism& m) { return occurrence_matrix(m).is_positive(); }

}  // namespace sadic
