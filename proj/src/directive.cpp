#include "sadic/directive.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "parallel.hpp"
#include "sadic/error.hpp"

namespace sadic {

__extension__ using u128 = unsigned __int128;

namespace {

constexpr std::uint64_t kSaturated = std::uint64_t{1} << 63;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return (a >= kSaturated - b) ? kSaturated : a + b;
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return b == 0 ? a : (a + b - 1) / b; }

// The composed chain s_from ... s_k grown one morphism at a time, with the
// length recursion kept alongside.
class Chain {
 public:
  Chain(const DirectiveSequence& d, std::size_t from) : d_(d), from_(from) {}

  std::size_t size() const noexcept { return levels_.size(); }
  const Morphism& morphism(std::size_t i) const { return levels_[i].m; }
  const std::vector<std::uint64_t>& lengths(std::size_t i) const { return levels_[i].lengths; }
  std::uint64_t min_length(std::size_t i) const { return levels_[i].min_len; }

  void extend() {
    const std::size_t n = from_ + levels_.size();
    Level level{d_.at(n), {}, 0};
    const Morphism& m = level.m;
    level.lengths.assign(m.domain()->size(), 0);
    if (levels_.empty()) {
      for (Symbol c = 0; c < m.domain()->size(); ++c) level.lengths[c] = m.image(c).size();
    } else {
      const Level& outer = levels_.back();
      std::vector<Symbol> to_outer(m.codomain()->size(), static_cast<Symbol>(-1));
      for (Symbol b = 0; b < m.codomain()->size(); ++b)
        if (auto s = outer.m.domain()->find(m.codomain()->token(b))) to_outer[b] = *s;
      for (Symbol c = 0; c < m.domain()->size(); ++c) {
        std::uint64_t total = 0;
        for (Symbol b : m.image(c).symbols()) {
          if (to_outer[b] == static_cast<Symbol>(-1))
            fail(ErrorCode::alphabet_mismatch,
                 "ill-formed directive: letter '" + m.codomain()->token(b) + "' of s_" +
                     std::to_string(n) + " is outside the domain of s_" + std::to_string(n - 1));
          total = sat_add(total, outer.lengths[to_outer[b]]);
        }
        level.lengths[c] = total;
      }
    }
    level.min_len = *std::min_element(level.lengths.begin(), level.lengths.end());
    levels_.push_back(std::move(level));
  }

  // First `target` symbols of s_from ... s_last (seed^m) for m large enough.
  // With single_seed, the prefix of s_from ... s_last (seed) instead.
  Word prefix(const std::string& seed, std::size_t target, bool single_seed = false) const {
    const std::size_t last = levels_.size() - 1;
    const Morphism& inner = levels_[last].m;
    const Symbol seed_symbol = seed_letter(seed);
    const std::uint64_t reps =
        single_seed ? 1 : std::max<std::uint64_t>(1, ceil_div(target, levels_[last].min_len));
    Word word(inner.domain(), std::vector<Symbol>(reps, seed_symbol));
    for (std::size_t i = last + 1; i-- > 0;) {
      const std::uint64_t need = i == 0 ? target : ceil_div(target, levels_[i - 1].min_len);
      word = apply_prefix(levels_[i].m, word, static_cast<std::size_t>(std::max<std::uint64_t>(1, need)));
    }
    return word;
  }

  Symbol seed_letter(const std::string& seed) const {
    const std::size_t last = levels_.size() - 1;
    const auto s = levels_[last].m.domain()->find(seed);
    if (!s)
      fail(ErrorCode::invalid_argument, "seed '" + seed + "' is not a letter of A_" +
                                            std::to_string(from_ + last + 1));
    return *s;
  }

  std::uint64_t seed_image_length(const std::string& seed) const {
    return levels_.back().lengths[seed_letter(seed)];
  }

  bool prolongable(std::size_t i, const std::string& seed) const {
    const Morphism& m = levels_[i].m;
    const auto s = m.domain()->find(seed);
    return s && m.codomain()->token(m.image(*s)[0]) == seed;
  }

 private:
  struct Level {
    Morphism m;
    std::vector<std::uint64_t> lengths;
    std::uint64_t min_len;
  };
  const DirectiveSequence& d_;
  std::size_t from_;
  std::vector<Level> levels_;
};

std::size_t common_prefix(const Word& a, const Word& b) {
  const auto sa = a.symbols(), sb = b.symbols();
  const std::size_t n = std::min(sa.size(), sb.size());
  std::size_t i = 0;
  while (i < n && sa[i] == sb[i]) ++i;
  return i;
}

}  // namespace

DirectiveSequence::DirectiveSequence(Rule rule, std::optional<std::size_t> length, std::string seed,
                                     std::string description,
                                     std::optional<std::size_t> primitivity_constant)
    : rule_(std::move(rule)),
      length_(length),
      seed_(std::move(seed)),
      description_(std::move(description)),
      s0_(primitivity_constant) {
  if (!rule_) fail(ErrorCode::invalid_argument, "directive needs a rule");
  if (length_ && *length_ == 0) fail(ErrorCode::invalid_argument, "directive needs at least one morphism");
  if (seed_.empty()) fail(ErrorCode::invalid_argument, "directive needs a seed letter");
}

DirectiveSequence DirectiveSequence::finite(std::vector<Morphism> morphisms, std::string seed,
                                            std::string description) {
  const std::size_t n = morphisms.size();
  auto list = std::make_shared<const std::vector<Morphism>>(std::move(morphisms));
  return DirectiveSequence([list](std::size_t i) { return (*list)[i]; }, n, std::move(seed),
                           std::move(description));
}

DirectiveSequence DirectiveSequence::periodic(std::vector<Morphism> period, std::string seed,
                                              std::string description) {
  if (period.empty()) fail(ErrorCode::invalid_argument, "periodic directive needs a period");
  auto list = std::make_shared<const std::vector<Morphism>>(std::move(period));
  return DirectiveSequence([list](std::size_t i) { return (*list)[i % list->size()]; },
                           std::nullopt, std::move(seed), std::move(description));
}

Morphism DirectiveSequence::at(std::size_t n) const {
  if (!has(n))
    fail(ErrorCode::invalid_argument, "directive '" + description_ + "' has no morphism s_" +
                                          std::to_string(n) + " (length " +
                                          std::to_string(*length_) + ")");
  return rule_(n);
}

DirectiveSequence DirectiveSequence::tail(std::size_t n) const {
  if (!has(n)) fail(ErrorCode::invalid_argument, "directive '" + description_ + "' has no level " + std::to_string(n));
  std::optional<std::size_t> len;
  if (length_) len = *length_ - n;
  return DirectiveSequence([rule = rule_, n](std::size_t i) { return rule(i + n); }, len, seed_,
                           description_ + " from level " + std::to_string(n), s0_);
}

GeneratedPrefix tail_prefix(const DirectiveSequence& d, std::size_t level, std::size_t target,
                            std::size_t depth_budget) {
  if (target == 0) fail(ErrorCode::invalid_argument, "target length must be at least 1");
  if (depth_budget == 0) fail(ErrorCode::invalid_argument, "depth budget must be at least 1");
  if (!d.has(level))
    fail(ErrorCode::invalid_argument, "directive '" + d.description() + "' has no level " + std::to_string(level));

  Chain chain(d, level);
  GeneratedPrefix result{Word::empty(d.at(level).codomain()), 0, level, false};
  std::optional<Word> previous;
  std::size_t agreements = 0;
  bool all_prolongable = true;

  for (std::size_t step = 0; step < depth_budget && d.has(level + step); ++step) {
    chain.extend();
    if (!d.has(level + step + 1)) {
      // A finite directive: s_level ... s_last (seed seed ...) is exact.
      result.word = chain.prefix(d.seed(), target);
      result.stable_length = target;
      result.depth_used = level + step;
      result.converged = true;
      return result;
    }
    all_prolongable = all_prolongable && chain.prolongable(step, d.seed());
    if (all_prolongable) {
      // Every later image of the seed starts with this one.
      const std::uint64_t len = chain.seed_image_length(d.seed());
      result.depth_used = level + step;
      if (len >= target) {
        result.word = chain.prefix(d.seed(), target, true);
        result.stable_length = target;
        result.converged = true;
        return result;
      }
      result.stable_length = static_cast<std::size_t>(len);
      continue;
    }
    Word current = chain.prefix(d.seed(), target);
    const std::size_t agree = previous ? common_prefix(*previous, current) : 0;
    agreements = (previous && agree >= target) ? agreements + 1 : 0;
    result.stable_length = std::min(agree, current.size());
    result.depth_used = level + step;
    result.word = std::move(current);
    if (agreements >= 2) {
      result.converged = true;
      result.stable_length = target;
      return result;
    }
    previous = result.word;
  }
  if (all_prolongable && chain.size() > 0) result.word = chain.prefix(d.seed(), target, true);
  return result;
}

GeneratedPrefix limit_prefix(const DirectiveSequence& d, std::size_t target, std::size_t depth_budget) {
  return tail_prefix(d, 0, target, depth_budget);
}

Word generate(const DirectiveSequence& d, std::size_t level, std::size_t target,
              std::size_t depth_budget) {
  GeneratedPrefix g = tail_prefix(d, level, target, depth_budget);
  if (!g.converged)
    fail(ErrorCode::not_converged,
         "prefix of length " + std::to_string(target) + " of level " + std::to_string(level) +
             " did not stabilise within depth " + std::to_string(g.depth_used) +
             " (stable " + std::to_string(g.stable_length) + ")");
  return std::move(g.word);
}

Morphism telescope(const DirectiveSequence& d, std::size_t from, std::size_t to) {
  if (from > to)
    fail(ErrorCode::invalid_argument,
         "telescope from " + std::to_string(from) + " to " + std::to_string(to) + " is empty");
  Morphism result = d.at(from);
  for (std::size_t k = from + 1; k <= to; ++k) result = compose(result, d.at(k));
  return result;
}

std::vector<std::vector<std::uint64_t>> telescoped_lengths(const DirectiveSequence& d,
                                                           std::size_t from, std::size_t to) {
  if (from > to) fail(ErrorCode::invalid_argument, "telescoped lengths need from <= to");
  Chain chain(d, from);
  std::vector<std::vector<std::uint64_t>> out;
  for (std::size_t k = from; k <= to; ++k) {
    chain.extend();
    out.push_back(chain.lengths(k - from));
  }
  return out;
}

PrimitivityReport check_primitive_window(const DirectiveSequence& d, std::size_t r_max,
                                         std::size_t s0) {
  PrimitivityReport report;
  report.s0 = s0;
  report.all_positive = true;
  for (std::size_t r = 0; r <= r_max; ++r) {
    // support[c] = letters of A_r occurring in s_r ... s_k (c), grown inward.
    const Morphism outer = d.at(r);
    const std::size_t top = outer.codomain()->size();
    std::vector<std::vector<bool>> support;
    for (const Word& img : outer.images()) {
      std::vector<bool> s(top, false);
      for (Symbol b : img.symbols()) s[b] = true;
      support.push_back(std::move(s));
    }
    Morphism prev = outer;
    for (std::size_t k = r + 1; k <= r + s0; ++k) {
      const Morphism m = d.at(k);
      std::vector<std::vector<bool>> next;
      for (const Word& img : m.images()) {
        std::vector<bool> s(top, false);
        for (Symbol b : img.symbols()) {
          const Symbol p = prev.domain()->index(m.codomain()->token(b));
          for (std::size_t t = 0; t < top; ++t) s[t] = s[t] || support[p][t];
        }
        next.push_back(std::move(s));
      }
      support = std::move(next);
      prev = m;
    }
    PrimitivityRow row{r, true, std::nullopt};
    for (Symbol c = 0; c < support.size() && row.positive; ++c)
      for (Symbol b = 0; b < top; ++b)
        if (!support[c][b]) {
          row.positive = false;
          row.witness = std::pair{outer.codomain()->token(b), prev.domain()->token(c)};
          break;
        }
    report.all_positive = report.all_positive && row.positive;
    report.rows.push_back(std::move(row));
  }
  return report;
}

DnObservation dn_statistic(const DirectiveSequence& d, std::size_t level, std::size_t window,
                           std::size_t depth_budget) {
  if (window < 2) fail(ErrorCode::invalid_argument, "D_n needs a window of at least 2 symbols");
  const Word tail = generate(d, level, window, depth_budget);
  const Length2Gaps gaps = max_gap_over_length2(tail);
  return DnObservation{level, gaps.max_gap, gaps.truncated, window};
}

LrSufficientReport lr_sufficient_report(const DirectiveSequence& d, std::size_t n_max,
                                        std::size_t window, unsigned threads) {
  LrSufficientReport report;
  report.rows.resize(n_max + 1);
  detail::parallel_for(n_max + 1, threads,
                       [&](std::size_t n) { report.rows[n] = dn_statistic(d, n, window); });

  const std::size_t split = (report.rows.size() + 1) / 2;
  std::size_t early = 0, late = 0;
  for (std::size_t n = 0; n < report.rows.size(); ++n) {
    const std::size_t v = report.rows[n].value.value_or(0);
    if (n < split)
      early = std::max(early, v);
    else
      late = std::max(late, v);
    if (report.rows[n].value)
      report.max_observed = std::max(report.max_observed.value_or(0), v);
  }
  report.consistent_with_lr = late <= early;
  return report;
}

Ratio Ratio::parse(std::string_view text) {
  auto number = [&](std::string_view part) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty())
      fail(ErrorCode::parse, "malformed ratio '" + std::string(text) + "'");
    return v;
  };
  const auto slash = text.find('/');
  Ratio r;
  if (slash == std::string_view::npos) {
    r.num = number(text);
  } else {
    r.num = number(text.substr(0, slash));
    r.den = number(text.substr(slash + 1));
  }
  if (r.den == 0) fail(ErrorCode::parse, "ratio with zero denominator");
  return r;
}

std::string Ratio::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

ComplexityBoundReport complexity_bound_check(const DirectiveSequence& d, Ratio D,
                                             std::size_t n_max, std::size_t window,
                                             std::size_t depth) {
  if (D.num < D.den) fail(ErrorCode::invalid_argument, "complexity bound requires D >= 1");
  if (n_max == 0) fail(ErrorCode::invalid_argument, "complexity check needs n_max >= 1");
  if (window < n_max)
    fail(ErrorCode::invalid_argument, "window must be at least n_max symbols long");

  ComplexityBoundReport report;
  report.bound = D;
  report.window = window;

  const auto lengths = telescoped_lengths(d, 0, depth + 1);
  for (const auto& row : lengths)
    report.min_lengths.push_back(*std::min_element(row.begin(), row.end()));

  report.hypothesis_holds = true;
  for (std::size_t n = 0; n <= depth; ++n) {
    const auto& next = lengths[n + 1];
    const auto& current = lengths[n];
    const auto b = static_cast<Symbol>(std::max_element(next.begin(), next.end()) - next.begin());
    const auto c = static_cast<Symbol>(std::min_element(current.begin(), current.end()) - current.begin());
    LengthHypothesisRow row;
    row.depth = n;
    row.max_next = next[b];
    row.min_current = current[c];
    // max_b |S_{n+1}(b)| * den <= num * min_c |S_n(c)|, in 128-bit.
    row.holds = static_cast<u128>(row.max_next) * D.den <=
                static_cast<u128>(row.min_current) * D.num;
    row.witness_b = d.at(n + 1).domain()->token(b);
    row.witness_c = d.at(n).domain()->token(c);
    report.hypothesis_holds = report.hypothesis_holds && row.holds;
    report.hypothesis.push_back(std::move(row));
  }

  report.growth_holds = true;
  for (std::size_t n = 1; n < report.min_lengths.size(); ++n)
    report.growth_holds = report.growth_holds && report.min_lengths[n] > report.min_lengths[n - 1];

  const Word prefix = generate(d, 0, window);
  report.alphabet_size = prefix.alphabet()->size();
  const auto p = complexity_profile(prefix, n_max);
  const auto card2 = static_cast<u128>(report.alphabet_size) * report.alphabet_size;
  report.complexity_holds = true;
  for (std::size_t n = 1; n <= n_max; ++n) {
    ComplexityRow row{n, p[n], false};
    row.holds = static_cast<u128>(p[n]) * D.den <= card2 * D.num * n;
    report.complexity_holds = report.complexity_holds && row.holds;
    report.complexity.push_back(row);
  }
  return report;
}

}  // namespace sadic
