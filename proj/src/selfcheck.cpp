#include <algorithm>
#include <random>
#include <set>

#include "sadic/builtin.hpp"
#include "sadic/error.hpp"

namespace sadic::builtin {

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::size_t between(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  // A word of the given length from one of the sample sources.
  Word source(std::size_t length) {
    switch (between(0, 6)) {
      case 0: return generate(sturmian_directive(SturmianSpec::golden()), 0, length);
      case 1: return generate(sturmian_directive(SturmianSpec::linear()), 0, length);
      case 2: return generate(sturmian_directive(SturmianSpec::from_continued_fraction({0, 2, 3, 1})), 0, length);
      case 3: return generate(counterexample_directive(), 0, length);
      case 4: return generate(counterexample_directive(), between(1, 6), length);
      case 5: return random_word(binary(), length);
      default: return random_word(abc(), length);
    }
  }

  Word random_word(const AlphabetPtr& a, std::size_t length) {
    std::vector<Symbol> s(length);
    for (auto& c : s) c = static_cast<Symbol>(between(0, a->size() - 1));
    return Word(a, std::move(s));
  }

 private:
  std::mt19937_64 rng_;
};

Word join(const Word& a, const Word& b) { return concat(std::vector<Word>{a, b}); }

std::size_t occurrences_from(const TwoSidedWindow& x, Position from, const Word& uv) {
  return occurrences(x.word().symbols().subspan(x.index(from)), uv.symbols()).size();
}

}  // namespace

CodingCheckReport check_coding(std::size_t pairs, std::uint64_t seed) {
  if (pairs == 0) fail(ErrorCode::invalid_argument, "need at least one pair");
  Sampler rng(seed);
  CodingCheckReport r;
  const std::size_t per_table = 200;
  while (r.pairs < pairs) {
    const Word w = rng.source(2000);
    const std::size_t origin = rng.between(0, 500);
    const TwoSidedWindow x(w, origin);
    const std::size_t lu = rng.between(0, 3), lv = rng.between(1, 6);
    const Word u = x.slice(-static_cast<Position>(lu), 0), v = x.slice(0, static_cast<Position>(lv));
    if (occurrences_from(x, -static_cast<Position>(lu), join(u, v)) < 8) continue;
    const ReturnWordTable t = return_words(x, u, v);
    if (t.size() < 2) continue;
    ++r.tables;

    for (std::size_t i = 0; i < per_table && r.pairs < pairs; ++i) {
      const Word a = rng.random_word(t.code_alphabet, rng.between(1, 8));
      const Word b = rng.random_word(t.code_alphabet, rng.between(1, 8));
      if (a == b) continue;
      ++r.pairs;
      if (decode(t, a) == decode(t, b)) ++r.collisions;
    }

    const auto occ = occurrences(x.word().symbols().subspan(x.index(t.scan_from)), join(u, v).symbols());
    for (int trial = 0; trial < 5; ++trial) {
      const std::size_t i = rng.between(0, occ.size() - 2);
      const std::size_t count = rng.between(1, occ.size() - 1 - i);
      const Position from = t.scan_from + static_cast<Position>(occ[i]);
      const Word decoded = decode(t, encode(t, x, from, count));
      const Position start = from + static_cast<Position>(lu);
      ++r.round_trips;
      if (!(decoded == x.slice(start, start + static_cast<Position>(decoded.size())))) ++r.round_trip_failures;
    }
  }
  return r;
}

OracleCheckReport check_return_oracle(std::size_t instances, std::size_t max_window, std::uint64_t seed) {
  if (instances == 0) fail(ErrorCode::invalid_argument, "need at least one instance");
  if (max_window < 20) fail(ErrorCode::invalid_argument, "windows need at least 20 symbols");
  Sampler rng(seed);
  OracleCheckReport r;
  r.max_window = max_window;
  while (r.instances < instances) {
    const std::size_t length = rng.between(20, max_window);
    const TwoSidedWindow x(rng.source(length), rng.between(0, length / 2));
    const std::size_t lu = std::min<std::size_t>(x.origin(), rng.between(0, 4));
    const std::size_t lv = std::min<std::size_t>(x.word().size() - x.origin(), rng.between(1, 6));
    if (lv == 0) continue;
    const Word u = x.slice(-static_cast<Position>(lu), 0), v = x.slice(0, static_cast<Position>(lv));
    if (occurrences_from(x, -static_cast<Position>(lu), join(u, v)) < 2) continue;
    ++r.instances;
    const ReturnWordTable t = return_words(x, u, v);
    const std::set<Word> fast(t.returns.begin(), t.returns.end());
    const std::set<Word> brute = brute_force_return_words(x, u, v);
    if (fast != brute || fast.size() != t.returns.size()) {
      if (r.mismatches++ == 0)
        r.first_mismatch = "window of " + std::to_string(x.word().size()) + " symbols, origin " +
                           std::to_string(x.origin()) + ", u=" + u.str() + ", v=" + v.str();
    }
  }
  return r;
}

}  // namespace sadic::builtin
