#pragma once

// Deliberately naive reference implementations and random generators used
// to cross-check the library.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sadic/morphisms.hpp"
#include "sadic/words.hpp"

namespace oracle {

inline std::vector<std::size_t> occurrences(const std::string& w, const std::string& u) {
  std::vector<std::size_t> out;
  if (u.size() > w.size()) return out;
  for (std::size_t i = 0; i + u.size() <= w.size(); ++i)
    if (w.compare(i, u.size(), u) == 0) out.push_back(i);
  return out;
}

inline std::set<std::string> factor_set(const std::string& w, std::size_t n) {
  std::set<std::string> out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.substr(i, n));
  return out;
}

inline std::string apply(const std::vector<std::string>& images, const std::string& letters,
                         const std::string& w) {
  std::string out;
  for (char c : w) out += images[letters.find(c)];
  return out;
}

// Return words to u.v on the text read from index `base` (= position -|u|).
inline std::set<std::string> return_words(const std::string& text, std::size_t base, const std::string& u,
                                          const std::string& v) {
  const std::string uv = u + v;
  std::vector<std::size_t> occ;
  for (std::size_t i = base; i + uv.size() <= text.size(); ++i)
    if (text.compare(i, uv.size(), uv) == 0) occ.push_back(i);
  std::set<std::string> out;
  for (std::size_t k = 0; k + 1 < occ.size(); ++k)
    out.insert(text.substr(occ[k] + u.size(), occ[k + 1] - occ[k]));
  return out;
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  std::size_t between(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  std::string word(const std::string& letters, std::size_t length) {
    std::string s;
    for (std::size_t i = 0; i < length; ++i) s.push_back(letters[below(letters.size())]);
    return s;
  }
  std::vector<std::string> images(const std::string& domain, const std::string& codomain, std::size_t max_len) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < domain.size(); ++i) out.push_back(word(codomain, between(1, max_len)));
    return out;
  }
  // Every image starts with `first` and ends with `last`.
  std::vector<std::string> proper_images(const std::string& domain, const std::string& codomain, char first,
                                         char last, std::size_t max_len) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < domain.size(); ++i)
      out.push_back(std::string(1, first) + word(codomain, between(0, max_len)) + std::string(1, last));
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
