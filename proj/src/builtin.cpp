#include "sadic/builtin.hpp"

#include <algorithm>

#include "sadic/error.hpp"

namespace sadic::builtin {

namespace {

std::uint64_t pow3(std::size_t e) {
  if (e > 39) fail(ErrorCode::invalid_argument, "3^" + std::to_string(e) + " overflows");
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= 3;
  return r;
}

std::string repeat(const std::string& s, std::size_t times) {
  std::string out;
  out.reserve(s.size() * times);
  for (std::size_t i = 0; i < times; ++i) out += s;
  return out;
}

Word ca() { return Word::parse(abc(), "ca"); }

}  // namespace

AlphabetPtr abc() {
  static const AlphabetPtr a = Alphabet::make({"a", "b", "c"});
  return a;
}

const Morphism& cx_sigma() {
  static const Morphism m = Morphism::from_images(abc(), abc(), {"acb", "bab", "cbc"});
  return m;
}

const Morphism& cx_tau() {
  static const Morphism m = Morphism::from_images(abc(), abc(), {"abc", "acb", "aac"});
  return m;
}

std::size_t counterexample_block_start(std::size_t k) {
  if (k == 0) fail(ErrorCode::invalid_argument, "blocks are numbered from 1");
  return (k - 1) * (k + 2) / 2;
}

DirectiveSequence counterexample_directive() {
  auto rule = [](std::size_t n) -> Morphism {
    std::size_t k = 1;
    while (counterexample_block_start(k + 1) <= n) ++k;
    return n - counterexample_block_start(k) < k ? cx_sigma() : cx_tau();
  };
  return DirectiveSequence(rule, std::nullopt, "a", "counterexample", 1);
}

std::size_t rho_exponent(std::size_t n) { return n * (n + 3) / 2; }

Morphism rho(std::size_t n) {
  if (n == 0) return Morphism::identity(abc());
  return telescope(counterexample_directive(), 0, counterexample_block_start(n + 1) - 1);
}

Morphism sigma_power_tau(std::size_t n) {
  if (n == 0) return cx_tau();
  return compose(power(cx_sigma(), static_cast<unsigned>(n)), cx_tau());
}

GapLemmaReport verify_gap_lemma(std::size_t n, const Word& z) {
  GapLemmaReport report;
  report.n = n;
  report.bound = pow3(n + 1);
  const Word y = apply(sigma_power_tau(n), z.translated(abc()));
  report.word_length = y.size();
  const auto occ = occurrences(y, ca());
  report.occurrences = occ.size();
  for (std::size_t i = 0; i + 1 < occ.size(); ++i) {
    const std::size_t gap = occ[i + 1] - occ[i];
    report.min_gap = std::min(report.min_gap.value_or(gap), gap);
    report.max_gap = std::max(report.max_gap.value_or(gap), gap);
  }
  report.conclusive = occ.size() >= 3;
  report.holds = report.conclusive && *report.min_gap >= report.bound;
  report.strict = report.conclusive && *report.min_gap > report.bound;
  return report;
}

GapLemmaReport verify_gap_lemma(std::size_t n, std::size_t window) {
  const std::uint64_t unit = pow3(n + 1);
  const auto z_len = static_cast<std::size_t>((window + unit - 1) / unit);
  const Word z = generate(counterexample_directive(), counterexample_block_start(n + 1), std::max<std::size_t>(z_len, 1));
  return verify_gap_lemma(n, z);
}

NotLrReport verify_not_lr(std::size_t n, std::size_t window, std::size_t x_check_limit) {
  if (n == 0) fail(ErrorCode::invalid_argument, "verify_not_lr needs n >= 1");
  NotLrReport report;
  report.n = n;
  report.bound = pow3(n + 2);
  report.rho_exponent = rho_exponent(n);

  const DirectiveSequence d = counterexample_directive();
  const auto y_len = static_cast<std::size_t>((window + report.bound - 1) / report.bound);
  const Word y = generate(d, counterexample_block_start(n + 2), std::max<std::size_t>(y_len, 1));
  const Word z = apply(sigma_power_tau(n + 1), y);
  report.window = z.size();

  const auto occ = occurrences(z, ca());
  if (occ.size() < 2)
    fail(ErrorCode::insufficient_window,
         "fewer than two occurrences of ca in " + std::to_string(z.size()) + " symbols");
  report.first_ca = occ[0];
  report.return_length = occ[1] - occ[0];
  report.min_return_length = report.return_length;
  for (std::size_t i = 1; i + 1 < occ.size(); ++i)
    report.min_return_length = std::min(report.min_return_length, occ[i + 1] - occ[i]);
  report.ratio_num = report.return_length;

  // rho_n(c a w' c a) with w = c a w'.
  const Morphism r = rho(n);
  const Word block = apply(r, z.subword(occ[0], occ[1] + 2));
  report.rho_ca_occurrences = occurrences(block, apply(r, ca())).size();
  report.exact_twice = report.rho_ca_occurrences == 2;

  const std::size_t unit = r.image(0).size();
  const std::size_t end = (occ[1] + 2) * unit;
  if (end <= x_check_limit) {
    const Word x = generate(d, 0, end);
    report.occurs_in_x = x.subword(occ[0] * unit, end) == block;
  }
  report.passed = report.return_length >= report.bound && report.exact_twice &&
                  report.occurs_in_x.value_or(true);
  return report;
}

AlphabetPtr binary() {
  static const AlphabetPtr a = Alphabet::make({"0", "1"});
  return a;
}

const Morphism& st_sigma() {
  static const Morphism m = Morphism::from_images(binary(), binary(), {"01", "1"});
  return m;
}

const Morphism& st_tau() {
  static const Morphism m = Morphism::from_images(binary(), binary(), {"0", "10"});
  return m;
}

SturmianSpec::SturmianSpec(Quotients q, std::optional<std::size_t> count, std::string description)
    : q_(std::move(q)), count_(count), description_(std::move(description)) {}

SturmianSpec SturmianSpec::from_quotients(std::vector<std::size_t> quotients, bool repeat_last) {
  if (quotients.empty()) fail(ErrorCode::invalid_argument, "Sturmian directive needs at least one quotient");
  for (std::size_t k = 1; k < quotients.size(); ++k)
    if (quotients[k] == 0)
      fail(ErrorCode::invalid_argument, "quotient i_" + std::to_string(k + 1) + " must be positive");
  std::string description = "sturmian i=";
  for (std::size_t k = 0; k < quotients.size(); ++k)
    description += (k ? "," : "") + std::to_string(quotients[k]);
  if (repeat_last) description += ",...";
  auto list = std::make_shared<const std::vector<std::size_t>>(std::move(quotients));
  std::optional<std::size_t> count;
  if (!repeat_last) count = list->size();
  return SturmianSpec(
      [list](std::size_t k) { return (*list)[std::min(k, list->size()) - 1]; }, count,
      std::move(description));
}

SturmianSpec SturmianSpec::from_continued_fraction(const std::vector<std::size_t>& cf, bool repeat_last) {
  if (cf.size() < 2 || cf[0] != 0)
    fail(ErrorCode::invalid_argument, "continued fraction must look like [0; a_1, a_2, ...]");
  if (cf[1] == 0) fail(ErrorCode::invalid_argument, "partial quotient a_1 must be positive");
  std::vector<std::size_t> q(cf.begin() + 1, cf.end());
  q[0] -= 1;
  return from_quotients(std::move(q), repeat_last);
}

SturmianSpec SturmianSpec::golden() {
  return SturmianSpec([](std::size_t k) -> std::size_t { return k == 1 ? 0 : 1; }, std::nullopt,
                      "golden");
}

SturmianSpec SturmianSpec::linear() {
  return SturmianSpec([](std::size_t k) { return k; }, std::nullopt, "linear");
}

SturmianSpec SturmianSpec::from_rule(Quotients rule, std::string description) {
  if (!rule) fail(ErrorCode::invalid_argument, "Sturmian spec needs a quotient rule");
  return SturmianSpec(std::move(rule), std::nullopt, std::move(description));
}

std::size_t SturmianSpec::quotient(std::size_t k) const {
  if (k == 0) fail(ErrorCode::invalid_argument, "quotients are numbered from 1");
  if (count_ && k > *count_)
    fail(ErrorCode::invalid_argument, "quotient i_" + std::to_string(k) + " is past the end");
  const std::size_t q = q_(k);
  if (k >= 2 && q == 0)
    fail(ErrorCode::invalid_argument, "quotient i_" + std::to_string(k) + " must be positive");
  return q;
}

DirectiveSequence sturmian_directive(const SturmianSpec& s) {
  std::optional<std::size_t> length;
  if (s.count()) {
    std::size_t total = 0;
    for (std::size_t k = 1; k <= *s.count(); ++k) total += s.quotient(k);
    length = total;
  }
  auto rule = [s](std::size_t n) -> Morphism {
    std::size_t k = 1, end = s.quotient(1);
    while (end <= n) end += s.quotient(++k);
    return k % 2 == 1 ? st_tau() : st_sigma();
  };
  return DirectiveSequence(rule, length, "0", s.description());
}

DirectiveSequence sturmian_block_directive(const SturmianSpec& s) {
  const std::size_t skip = s.quotient(1) == 0 ? 1 : 0;
  std::optional<std::size_t> length;
  if (s.count()) length = *s.count() - skip;
  auto rule = [s, skip](std::size_t n) -> Morphism {
    const std::size_t k = n + 1 + skip;
    return power(k % 2 == 1 ? st_tau() : st_sigma(), static_cast<unsigned>(s.quotient(k)));
  };
  return DirectiveSequence(rule, length, "0", s.description() + " (blocks)");
}

BlockIdentityReport verify_block_identities(std::size_t i, std::size_t j, std::size_t k) {
  if (i == 0 || j == 0 || k == 0) fail(ErrorCode::invalid_argument, "block exponents must be positive");
  const Morphism m = compose(power(st_tau(), static_cast<unsigned>(i)),
                             compose(power(st_sigma(), static_cast<unsigned>(j)),
                                     power(st_tau(), static_cast<unsigned>(k))));
  const std::string one_zeros = "1" + std::string(i, '0');
  const std::string f0 = "0" + repeat(one_zeros, j);
  const std::string f1 = one_zeros + repeat(f0, k);
  BlockIdentityReport r{i,
                        j,
                        k,
                        m.image(0),
                        Word::parse(binary(), f0),
                        m.image(1),
                        Word::parse(binary(), f1),
                        false,
                        false};
  r.equal0 = r.image0 == r.formula0;
  r.equal1 = r.image1 == r.formula1;
  return r;
}

SturmianGapReport verify_sturmian_gaps(std::size_t i, std::size_t j, std::size_t k, const Word& x_tail) {
  if (i == 0 || j == 0 || k == 0) fail(ErrorCode::invalid_argument, "block exponents must be positive");
  const Morphism m = compose(power(st_tau(), static_cast<unsigned>(i)),
                             compose(power(st_sigma(), static_cast<unsigned>(j)),
                                     power(st_tau(), static_cast<unsigned>(k))));
  const Word y = apply(m, x_tail.translated(binary()));
  SturmianGapReport report;
  report.i = i;
  report.j = j;
  report.k = k;
  report.word_length = y.size();
  report.bound = 2 * std::max({i, j, k}) + 3;
  report.only_expected_factors = occurrences(y, Word::parse(binary(), "11")).empty();
  report.holds = report.only_expected_factors;
  for (const char* f : {"00", "01", "10"}) {
    SturmianGapRow row{Word::parse(binary(), f), std::nullopt, std::nullopt, true};
    row.max_gap = max_gap(y, row.factor);
    if (f[0] != f[1])
      row.sub_bound = i + 2;
    else
      row.sub_bound = i == 1 ? 2 * j + 3 : 3;
    if (row.max_gap) {
      row.within_sub_bound = *row.max_gap <= *row.sub_bound;
      report.holds = report.holds && *row.max_gap <= report.bound;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

SturmianVerdict sturmian_lr_verdict(const SturmianSpec& s, std::size_t n_max, std::size_t window,
                                    std::size_t max_u_len, unsigned threads) {
  SturmianVerdict v;
  v.description = s.description();
  v.head_dropped = s.quotient(1) == 0;
  const std::size_t skip = v.head_dropped ? 1 : 0;
  const DirectiveSequence blocks = sturmian_block_directive(s);

  // Level n covers blocks n, n + 1, n + 2 of the block directive.
  std::size_t last = n_max;
  if (blocks.length()) {
    if (*blocks.length() < 3)
      fail(ErrorCode::invalid_argument, "the verdict needs at least three non-empty blocks");
    last = std::min(last, *blocks.length() - 3);
  }
  v.trend = lr_sufficient_report(blocks, last, window, threads);
  v.bounds_hold = true;
  for (std::size_t n = 0; n <= last; ++n) {
    SturmianVerdictRow row;
    row.level = n;
    for (std::size_t b = n; b < n + 3; ++b)
      row.max_quotient = std::max(row.max_quotient, s.quotient(b + 1 + skip));
    row.bound = 2 * row.max_quotient + 3;
    row.dn = v.trend.rows[n];
    row.holds = row.dn.value && *row.dn.value <= row.bound;
    v.bounds_hold = v.bounds_hold && row.holds;
    v.rows.push_back(std::move(row));
  }
  v.profile = lr_ratio_estimate(generate(sturmian_directive(s), 0, window), max_u_len, threads);
  return v;
}

}  // namespace sadic::builtin
