#include "sadic/returns.hpp"

#include <algorithm>
#include <unordered_map>

#include "parallel.hpp"
#include "sadic/error.hpp"
#include "suffix_array.hpp"

namespace sadic {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > (std::uint64_t{1} << 40) / base)
      fail(ErrorCode::invalid_argument, "alpha^levels is too large for a desk-scale window");
    r *= base;
  }
  return r;
}

bool matches_at(std::span<const Symbol> text, std::size_t at, std::span<const Symbol> pattern) {
  if (at + pattern.size() > text.size()) return false;
  for (std::size_t i = 0; i < pattern.size(); ++i)
    if (text[at + i] != pattern[i]) return false;
  return true;
}

std::size_t naive_count(std::span<const Symbol> text, std::span<const Symbol> pattern) {
  std::size_t n = 0;
  for (std::size_t i = 0; i + pattern.size() <= text.size(); ++i)
    if (matches_at(text, i, pattern)) ++n;
  return n;
}

Word join(const Word& a, const Word& b) {
  const Word parts[] = {a, b};
  return concat(parts);
}

}  // namespace

const Word& ReturnWordTable::theta(std::size_t k) const {
  if (k == 0 || k > returns.size())
    fail(ErrorCode::invalid_argument, "return word index " + std::to_string(k) + " outside 1.." +
                                          std::to_string(returns.size()));
  return returns[k - 1];
}

Morphism ReturnWordTable::as_morphism() const {
  return Morphism(code_alphabet, u.alphabet(), returns);
}

ReturnWordTable return_words(const TwoSidedWindow& x, const Word& u_in, const Word& v_in,
                             ReturnWordOptions options) {
  if (v_in.empty()) fail(ErrorCode::invalid_argument, "return words to u.v need a non-empty v");
  const AlphabetPtr& alphabet = x.word().alphabet();
  const Word u = u_in.translated(alphabet);
  const Word v = v_in.translated(alphabet);
  const Word uv = join(u, v);
  const auto ulen = static_cast<Position>(u.size());

  const Position scan_from = -ulen;
  if (scan_from < x.min_position())
    fail(ErrorCode::insufficient_window,
         "window has " + std::to_string(x.origin()) + " symbols left of the origin, need |u| = " +
             std::to_string(u.size()));
  const std::size_t base = x.index(scan_from);
  const auto text = x.word().symbols().subspan(base);
  const auto occ = occurrences(text, uv.symbols());
  if (occ.size() < 2)
    fail(ErrorCode::insufficient_window,
         "fewer than two occurrences of uv (" + uv.str() + ") from position " +
             std::to_string(scan_from));

  ReturnWordTable table{u, v, {}, {}, {}, scan_from, x.end_position(), false, nullptr};
  std::unordered_map<Word, std::size_t, WordHash> index;
  for (std::size_t i = 0; i + 1 < occ.size(); ++i) {
    // w = x_[j + |u|, k + |u|) for consecutive occurrences j < k.
    const std::size_t a = base + occ[i] + u.size(), b = base + occ[i + 1] + u.size();
    Word w = x.word().subword(a, b);
    auto [it, inserted] = index.emplace(w, table.returns.size());
    if (inserted) {
      table.returns.push_back(std::move(w));
      table.first_positions.push_back(static_cast<Position>(a) - static_cast<Position>(x.origin()));
      table.counts.push_back(0);
    }
    ++table.counts[it->second];
  }
  const auto span = static_cast<std::size_t>(x.end_position() - scan_from);
  table.complete = span >= options.min_complete_span &&
                   std::all_of(table.counts.begin(), table.counts.end(),
                               [](std::size_t c) { return c >= 2; });
  table.code_alphabet = Alphabet::numbered(table.returns.size());
  return table;
}

bool is_return_word(const TwoSidedWindow& x, const Word& u_in, const Word& w_in, const Word& v_in) {
  const AlphabetPtr& alphabet = x.word().alphabet();
  const Word u = u_in.translated(alphabet), w = w_in.translated(alphabet), v = v_in.translated(alphabet);
  if (w.empty()) return false;
  const Word uw = join(u, w), wv = join(w, v), uv = join(u, v);
  const Word block = join(uw, v);

  // (2) v is a prefix of wv, u is a suffix of uw.
  if (!matches_at(wv.symbols(), 0, v.symbols())) return false;
  if (!matches_at(uw.symbols(), uw.size() - u.size(), u.symbols())) return false;
  // (3) exactly two occurrences of uv in uwv.
  if (naive_count(block.symbols(), uv.symbols()) != 2) return false;
  // (1) uwv occurs in the scanned part of the window.
  const auto from = static_cast<Position>(u.size());
  if (-from < x.min_position()) return false;
  const auto text = x.word().symbols().subspan(x.index(-from));
  for (std::size_t i = 0; i + block.size() <= text.size(); ++i)
    if (matches_at(text, i, block.symbols())) return true;
  return false;
}

std::set<Word> brute_force_return_words(const TwoSidedWindow& x, const Word& u_in, const Word& v_in) {
  const AlphabetPtr& alphabet = x.word().alphabet();
  const Word u = u_in.translated(alphabet), v = v_in.translated(alphabet);
  const Word uv = join(u, v);
  std::set<Word> out;
  if (uv.empty() || static_cast<Position>(u.size()) > static_cast<Position>(x.origin())) return out;
  const std::size_t base = x.origin() - u.size();
  const auto text = x.word().symbols();
  const auto pattern = uv.symbols();

  std::vector<std::size_t> occ;
  for (std::size_t i = base; i + pattern.size() <= text.size(); ++i)
    if (matches_at(text, i, pattern)) occ.push_back(i);

  for (std::size_t a = 0; a < occ.size(); ++a) {
    for (std::size_t b = a + 1; b < occ.size(); ++b) {
      const auto block = text.subspan(occ[a], occ[b] + pattern.size() - occ[a]);
      const std::size_t count = naive_count(block, pattern);
      if (count == 2) out.insert(x.word().subword(occ[a] + u.size(), occ[b] + u.size()));
      if (count >= 2) break;
    }
  }
  return out;
}

Word encode(const ReturnWordTable& table, const TwoSidedWindow& x, Position from, std::size_t count) {
  const Word uv = join(table.u, table.v).translated(x.word().alphabet());
  const auto text = x.word().symbols();
  if (from < x.min_position() || from >= x.end_position() ||
      !matches_at(text, x.index(from), uv.symbols()))
    fail(ErrorCode::invalid_argument,
         "position " + std::to_string(from) + " is not an occurrence of uv");
  const std::size_t start = x.index(from);
  const auto occ = occurrences(text.subspan(start), uv.symbols());
  if (occ.size() < count + 1)
    fail(ErrorCode::insufficient_window, "window exhausted after " +
                                             std::to_string(occ.size() - 1) + " return words");

  std::unordered_map<Word, Symbol, WordHash> index;
  for (std::size_t k = 0; k < table.returns.size(); ++k)
    index.emplace(table.returns[k].translated(x.word().alphabet()), static_cast<Symbol>(k));

  std::vector<Symbol> code;
  code.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Word w = x.word().subword(start + occ[i] + table.u.size(), start + occ[i + 1] + table.u.size());
    auto it = index.find(w);
    if (it == index.end())
      fail(ErrorCode::factorization, "return word '" + w.str() + "' is missing from the table");
    code.push_back(it->second);
  }
  return Word(table.code_alphabet, std::move(code));
}

Word decode(const ReturnWordTable& table, const Word& code_in) {
  const Word code = code_in.translated(table.code_alphabet);
  std::vector<Symbol> out;
  for (Symbol s : code.symbols()) {
    const auto syms = table.returns[s].symbols();
    out.insert(out.end(), syms.begin(), syms.end());
  }
  return Word(table.u.alphabet(), std::move(out));
}

Morphism derived_morphism(const ReturnWordTable& prev, const ReturnWordTable& next) {
  const AlphabetPtr& alphabet = prev.u.alphabet();
  const Word nu = next.u.translated(alphabet), nv = next.v.translated(alphabet);
  if (prev.u.size() > nu.size() ||
      !matches_at(nu.symbols(), nu.size() - prev.u.size(), prev.u.symbols()) ||
      prev.v.size() > nv.size() || !matches_at(nv.symbols(), 0, prev.v.symbols()))
    fail(ErrorCode::invalid_argument,
         "derived morphism needs u_prev a suffix of u_next and v_prev a prefix of v_next");

  std::vector<Word> images;
  for (std::size_t b = 0; b < next.returns.size(); ++b) {
    const Word target = next.returns[b].translated(alphabet);
    const auto t = target.symbols();
    const std::size_t n = t.size();
    // ways[i]: factorizations of t[0, i), capped at 2.
    std::vector<unsigned char> ways(n + 1, 0);
    std::vector<std::pair<std::size_t, Symbol>> parent(n + 1, {0, 0});
    ways[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (!ways[i]) continue;
      for (std::size_t k = 0; k < prev.returns.size(); ++k) {
        const auto piece = prev.returns[k].symbols();
        if (!matches_at(t, i, piece)) continue;
        const std::size_t j = i + piece.size();
        if (!ways[j]) parent[j] = {i, static_cast<Symbol>(k)};
        ways[j] = static_cast<unsigned char>(std::min(2, ways[j] + ways[i]));
      }
    }
    const std::string which = "return word " + std::to_string(b + 1) + " ('" + target.str() + "')";
    if (ways[n] == 0)
      fail(ErrorCode::factorization, which + " is not a concatenation of the previous level's return words");
    if (ways[n] > 1)
      fail(ErrorCode::factorization, which + " factors in more than one way over the previous level");
    std::vector<Symbol> code;
    for (std::size_t j = n; j > 0; j = parent[j].first) code.push_back(parent[j].second);
    std::reverse(code.begin(), code.end());
    images.emplace_back(prev.code_alphabet, std::move(code));
  }
  return Morphism(next.code_alphabet, prev.code_alphabet, std::move(images));
}

bool DerivedTower::all_ok() const noexcept {
  for (const auto& l : levels) {
    if (!l.count_ok || !l.length_ok || !l.identity_ok || !l.reconstruction_ok) return false;
    if (l.n >= 1 && (!l.proper || !l.lambda_positive)) return false;
  }
  return !levels.empty();
}

DerivedTower build_tower(const TwoSidedWindow& x, unsigned K, std::size_t levels) {
  if (K < 2) fail(ErrorCode::invalid_argument, "the tower needs K >= 2");
  DerivedTower tower;
  tower.K = K;
  tower.alpha = std::uint64_t{K} * K * (K + 1);
  tower.count_bound = std::uint64_t{K} * (K + 1) * (K + 1);
  tower.length_bound = tower.alpha * K * K;
  tower.window_size = x.word().size();
  tower.origin = x.origin();

  const std::uint64_t widest = checked_pow(tower.alpha, levels);
  if (x.origin() < widest || static_cast<std::uint64_t>(x.end_position()) < widest)
    fail(ErrorCode::insufficient_window,
         "window must cover [-" + std::to_string(widest) + ", " + std::to_string(widest) + ")");

  const AlphabetPtr& alphabet = x.word().alphabet();
  for (std::size_t n = 0; n <= levels; ++n) {
    const auto len = static_cast<Position>(checked_pow(tower.alpha, n));
    const std::size_t min_span = 2ull * K * (K + 1) * 2 * static_cast<std::size_t>(len);
    ReturnWordTable table = return_words(x, x.slice(-len, 0), x.slice(0, len), {min_span});
    if (!table.complete)
      fail(ErrorCode::insufficient_window,
           "level " + std::to_string(n) + " table is incomplete (scanned span " +
               std::to_string(x.end_position() + len) + ", need " + std::to_string(min_span) +
               " with every return word seen twice)");
    TowerLevel level{.n = n,
                     .window_length = static_cast<std::size_t>(len),
                     .table = std::move(table),
                     .lambda = std::nullopt,
                     .max_lambda_length = 0,
                     .count_ok = false,
                     .length_ok = true,
                     .identity_ok = true,
                     .proper = std::nullopt,
                     .lambda_positive = true,
                     .reconstruction_ok = false};
    const ReturnWordTable& t = level.table;
    level.count_ok = t.size() <= tower.count_bound;
    if (!level.count_ok)
      tower.diagnostics.push_back("level " + std::to_string(n) + ": #R = " + std::to_string(t.size()) +
                                  " exceeds K(K+1)^2 = " + std::to_string(tower.count_bound) +
                                  "; K too small");

    if (n == 0) {
      tower.lambda0 = t.as_morphism();
    } else {
      const ReturnWordTable& prev = tower.levels.back().table;
      Morphism lambda = derived_morphism(prev, t);
      level.max_lambda_length = image_length_bounds(lambda).second;
      level.length_ok = level.max_lambda_length <= tower.length_bound;
      if (!level.length_ok)
        tower.diagnostics.push_back("level " + std::to_string(n) + ": |lambda(b)| = " +
                                    std::to_string(level.max_lambda_length) + " exceeds alpha K^2 = " +
                                    std::to_string(tower.length_bound) + "; K too small");
      level.identity_ok = compose(prev.as_morphism(), lambda) == t.as_morphism();
      if (!level.identity_ok)
        tower.diagnostics.push_back("level " + std::to_string(n) +
                                    ": theta_{n-1} lambda_n differs from theta_n");
      level.proper = is_proper(lambda);
      if (!level.proper)
        tower.diagnostics.push_back("level " + std::to_string(n) + ": lambda_n is not proper; K too small");
      level.lambda_positive = is_positive(lambda);
      if (!level.lambda_positive)
        tower.diagnostics.push_back("level " + std::to_string(n) +
                                    ": some letter of R_{n-1} is missing from an image of lambda_n");
      level.lambda = std::move(lambda);
    }

    // lambda_0 lambda_1 ... lambda_n (1), evaluated innermost first.
    Word word(t.code_alphabet, {0});
    for (std::size_t m = n; m >= 1; --m)
      word = apply(m == n ? *level.lambda : *tower.levels[m].lambda, word);
    word = apply(*tower.lambda0, word);
    level.reconstruction_ok = word == t.theta(1) &&
                              word == x.slice(0, static_cast<Position>(word.size())).translated(alphabet);
    if (!level.reconstruction_ok)
      tower.diagnostics.push_back("level " + std::to_string(n) + ": lambda_0...lambda_n(1) != theta_n(1)");
    tower.levels.push_back(std::move(level));
  }
  return tower;
}

DerivedTower build_tower(const DirectiveSequence& d, unsigned K, std::size_t levels,
                         std::size_t max_window) {
  if (K < 2) fail(ErrorCode::invalid_argument, "the tower needs K >= 2");
  const std::uint64_t alpha = std::uint64_t{K} * K * (K + 1);
  const std::uint64_t widest = checked_pow(alpha, levels);
  std::uint64_t right = (2ull * K * (K + 1) + 2ull * K) * 2 * widest;
  for (;;) {
    const std::uint64_t total = widest + right;
    if (total > max_window)
      fail(ErrorCode::insufficient_window,
           "tower needs more than " + std::to_string(max_window) + " symbols");
    const Word prefix = generate(d, 0, static_cast<std::size_t>(total));
    try {
      return build_tower(TwoSidedWindow(prefix, static_cast<std::size_t>(widest)), K, levels);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::insufficient_window) throw;
    }
    right *= 2;
  }
}

RatioProfile lr_ratio_estimate(const Word& x, std::size_t max_u_len, unsigned threads) {
  if (max_u_len == 0) fail(ErrorCode::invalid_argument, "max factor length must be at least 1");
  const std::size_t n = x.size();
  RatioProfile profile;
  profile.window = n;
  const std::size_t top = std::min(max_u_len, n);
  if (top == 0) return profile;

  const auto sa = detail::suffix_array(x.symbols(), x.alphabet()->size());
  const auto lcp = detail::lcp_array(x.symbols(), sa);
  std::vector<RatioRow> rows(top);
  detail::parallel_for(top, threads, [&](std::size_t idx) {
    const std::size_t len = idx + 1;
    const auto cls = detail::factor_classes(sa, lcp, n, len);
    std::vector<std::size_t> last(n, detail::npos);
    std::vector<unsigned char> seen_twice(n, 0);
    RatioRow row;
    row.length = len;
    for (std::size_t i = 0; i + len <= n; ++i) {
      const std::size_t c = cls[i];
      if (last[c] == detail::npos) {
        ++row.factors_seen;
      } else {
        if (!seen_twice[c]) {
          seen_twice[c] = 1;
          ++row.recurrent_factors;
        }
        if (i - last[c] > row.max_return) {
          row.max_return = i - last[c];
          row.witness = last[c];
        }
      }
      last[c] = i;
    }
    rows[idx] = row;
  });

  for (const auto& row : rows) {
    if (row.max_return == 0) {
      profile.omitted.push_back(row.length);
      continue;
    }
    if (row.max_return * profile.best_den > profile.best_num * row.length) {
      profile.best_num = row.max_return;
      profile.best_den = row.length;
    }
    profile.rows.push_back(row);
  }
  return profile;
}

RatioProfile lr_ratio_estimate(const TwoSidedWindow& x, std::size_t max_u_len, unsigned threads) {
  return lr_ratio_estimate(x.word(), max_u_len, threads);
}

}  // namespace sadic
