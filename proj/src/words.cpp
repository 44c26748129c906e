#include "sadic/words.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "sadic/error.hpp"
#include "suffix_array.hpp"

namespace sadic {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::alphabet_mismatch: return "alphabet_mismatch";
    case ErrorCode::out_of_window: return "out_of_window";
    case ErrorCode::not_converged: return "not_converged";
    case ErrorCode::insufficient_window: return "insufficient_window";
    case ErrorCode::factorization: return "factorization";
    case ErrorCode::parse: return "parse";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> out;
  const bool spaced = std::any_of(text.begin(), text.end(), is_space);
  if (!spaced) {
    for (char c : text) out.emplace_back(1, c);
    return out;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty()) fail(ErrorCode::invalid_argument, "alphabet must be non-empty");
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    const std::string& t = tokens_[i];
    if (t.empty()) fail(ErrorCode::invalid_argument, "alphabet tokens must be non-empty");
    if (std::any_of(t.begin(), t.end(), is_space))
      fail(ErrorCode::invalid_argument, "alphabet token contains whitespace: '" + t + "'");
    if (!index_.emplace(t, static_cast<Symbol>(i)).second)
      fail(ErrorCode::invalid_argument, "duplicate alphabet token '" + t + "'");
    if (t.size() != 1) single_char_ = false;
  }
}

AlphabetPtr Alphabet::make(std::vector<std::string> tokens) {
  return std::make_shared<const Alphabet>(std::move(tokens));
}

AlphabetPtr Alphabet::numbered(std::size_t count) {
  std::vector<std::string> tokens;
  tokens.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) tokens.push_back(std::to_string(k));
  return make(std::move(tokens));
}

const std::string& Alphabet::token(Symbol s) const {
  if (s >= tokens_.size())
    fail(ErrorCode::alphabet_mismatch, "symbol index " + std::to_string(s) + " outside alphabet");
  return tokens_[s];
}

std::optional<Symbol> Alphabet::find(std::string_view token) const {
  auto it = index_.find(token);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Symbol Alphabet::index(std::string_view token) const {
  if (auto s = find(token)) return *s;
  fail(ErrorCode::alphabet_mismatch, "token '" + std::string(token) + "' not in alphabet");
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

bool is_subalphabet(const Alphabet& sub, const Alphabet& super) {
  return std::all_of(sub.tokens().begin(), sub.tokens().end(),
                     [&](const std::string& t) { return super.find(t).has_value(); });
}

Word::Word(AlphabetPtr alphabet, std::vector<Symbol> symbols)
    : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
  if (!alphabet_) fail(ErrorCode::invalid_argument, "word requires an alphabet");
  const std::size_t n = alphabet_->size();
  for (Symbol s : symbols_)
    if (s >= n) fail(ErrorCode::alphabet_mismatch, "symbol index outside alphabet");
}

Word Word::empty(AlphabetPtr alphabet) { return Word(std::move(alphabet), {}); }

Word Word::parse(const AlphabetPtr& alphabet, std::string_view text) {
  std::vector<std::string> tokens;
  const bool spaced = std::any_of(text.begin(), text.end(), is_space);
  if (!spaced && !alphabet->single_char() && alphabet->find(text))
    tokens.emplace_back(text);
  else
    tokens = split_tokens(text);
  std::vector<Symbol> symbols;
  symbols.reserve(tokens.size());
  for (const auto& t : tokens) symbols.push_back(alphabet->index(t));
  return Word(alphabet, std::move(symbols));
}

Word Word::from_text(std::string_view text) {
  std::vector<std::string> tokens = split_tokens(text);
  std::vector<std::string> distinct;
  std::map<std::string, Symbol, std::less<>> seen;
  std::vector<Symbol> symbols;
  symbols.reserve(tokens.size());
  for (auto& t : tokens) {
    auto [it, inserted] = seen.emplace(t, static_cast<Symbol>(distinct.size()));
    if (inserted) distinct.push_back(t);
    symbols.push_back(it->second);
  }
  if (distinct.empty()) fail(ErrorCode::invalid_argument, "cannot infer an alphabet from empty text");
  return Word(Alphabet::make(std::move(distinct)), std::move(symbols));
}

Word Word::subword(std::size_t from, std::size_t to) const {
  if (from > to || to > symbols_.size())
    fail(ErrorCode::out_of_window, "subword [" + std::to_string(from) + ", " +
                                       std::to_string(to) + ") outside word of length " +
                                       std::to_string(symbols_.size()));
  return Word(alphabet_, std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(from),
                                             symbols_.begin() + static_cast<std::ptrdiff_t>(to)));
}

Word Word::translated(const AlphabetPtr& target) const {
  if (same_alphabet(alphabet_, target)) return Word(target, symbols_);
  std::vector<Symbol> map(alphabet_->size());
  for (Symbol s = 0; s < alphabet_->size(); ++s) {
    auto t = target->find(alphabet_->token(s));
    // Unused tokens may be missing; only symbols actually present must map.
    map[s] = t ? *t : static_cast<Symbol>(-1);
  }
  std::vector<Symbol> out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) {
    if (map[s] == static_cast<Symbol>(-1))
      fail(ErrorCode::alphabet_mismatch,
           "token '" + alphabet_->token(s) + "' not in target alphabet");
    out.push_back(map[s]);
  }
  return Word(target, std::move(out));
}

std::string Word::str() const {
  std::string out;
  const bool tight = alphabet_->single_char();
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (!tight && i > 0) out.push_back(' ');
    out += alphabet_->token(symbols_[i]);
  }
  return out;
}

bool Word::operator==(const Word& other) const {
  if (symbols_.size() != other.symbols_.size()) return false;
  if (same_alphabet(alphabet_, other.alphabet_)) return symbols_ == other.symbols_;
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (alphabet_->token(symbols_[i]) != other.alphabet_->token(other.symbols_[i])) return false;
  return true;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  return std::lexicographical_compare_three_way(symbols_.begin(), symbols_.end(),
                                                other.symbols_.begin(), other.symbols_.end());
}

Word concat(std::span<const Word> parts) {
  if (parts.empty()) fail(ErrorCode::invalid_argument, "concat needs at least one word");
  const AlphabetPtr& alphabet = parts.front().alphabet();
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  std::vector<Symbol> out;
  out.reserve(total);
  for (const auto& p : parts) {
    if (same_alphabet(p.alphabet(), alphabet)) {
      out.insert(out.end(), p.symbols().begin(), p.symbols().end());
    } else {
      const Word t = p.translated(alphabet);
      out.insert(out.end(), t.symbols().begin(), t.symbols().end());
    }
  }
  return Word(alphabet, std::move(out));
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Symbol s : w.symbols()) {
    h ^= s;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<std::size_t> occurrences(std::span<const Symbol> text,
                                     std::span<const Symbol> pattern) {
  const std::size_t m = pattern.size();
  if (m == 0) fail(ErrorCode::invalid_argument, "occurrences of the empty word are undefined");
  std::vector<std::size_t> out;
  if (m > text.size()) return out;

  // Knuth-Morris-Pratt: border[i] is the length of the longest proper border
  // of pattern[0, i].
  std::vector<std::size_t> border(m, 0);
  for (std::size_t i = 1, k = 0; i < m; ++i) {
    while (k > 0 && pattern[i] != pattern[k]) k = border[k - 1];
    if (pattern[i] == pattern[k]) ++k;
    border[i] = k;
  }
  for (std::size_t i = 0, k = 0; i < text.size(); ++i) {
    while (k > 0 && text[i] != pattern[k]) k = border[k - 1];
    if (text[i] == pattern[k]) ++k;
    if (k == m) {
      out.push_back(i + 1 - m);
      k = border[k - 1];
    }
  }
  return out;
}

std::vector<std::size_t> occurrences(const Word& w, const Word& u) {
  if (u.empty()) fail(ErrorCode::invalid_argument, "occurrences of the empty word are undefined");
  if (same_alphabet(w.alphabet(), u.alphabet())) return occurrences(w.symbols(), u.symbols());
  return occurrences(w.symbols(), u.translated(w.alphabet()).symbols());
}

std::vector<Word> factors(const Word& w, std::size_t n) {
  if (n > w.size())
    fail(ErrorCode::invalid_argument, "factor length " + std::to_string(n) +
                                          " exceeds word length " + std::to_string(w.size()));
  std::vector<Word> out;
  out.reserve(w.size() - n + 1);
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.push_back(w.subword(i, i + n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> complexity_profile(const Word& w, std::size_t max_n) {
  if (max_n > w.size())
    fail(ErrorCode::invalid_argument, "factor length " + std::to_string(max_n) +
                                          " exceeds word length " + std::to_string(w.size()));
  std::vector<std::size_t> p(max_n + 1, 0);
  p[0] = 1;
  if (w.empty() || max_n == 0) return p;
  const auto sa = detail::suffix_array(w.symbols(), w.alphabet()->size());
  const auto lcp = detail::lcp_array(w.symbols(), sa);
  // The suffix at rank r opens a new length-n class exactly for
  // lcp[r] < n <= its length.
  std::vector<std::ptrdiff_t> delta(max_n + 2, 0);
  for (std::size_t r = 0; r < sa.size(); ++r) {
    const std::size_t lo = (r == 0 ? 0 : lcp[r]) + 1;
    const std::size_t hi = std::min(w.size() - sa[r], max_n);
    if (lo > hi) continue;
    delta[lo] += 1;
    delta[hi + 1] -= 1;
  }
  std::ptrdiff_t running = 0;
  for (std::size_t n = 1; n <= max_n; ++n) {
    running += delta[n];
    p[n] = static_cast<std::size_t>(running);
  }
  return p;
}

std::size_t complexity(const Word& w, std::size_t n) { return complexity_profile(w, n)[n]; }

std::optional<std::size_t> max_gap(const Word& w, const Word& u) {
  const auto occ = occurrences(w, u);
  if (occ.size() < 2) return std::nullopt;
  std::size_t best = 0;
  for (std::size_t i = 1; i < occ.size(); ++i) best = std::max(best, occ[i] - occ[i - 1]);
  return best;
}

Length2Gaps max_gap_over_length2(const Word& w) {
  if (w.size() < 2) fail(ErrorCode::invalid_argument, "length-2 gaps need a word of length >= 2");
  const std::uint64_t sigma = w.alphabet()->size();
  struct Acc {
    std::size_t first = 0, last = 0, count = 0;
    std::optional<std::size_t> gap;
  };
  std::unordered_map<std::uint64_t, Acc> acc;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    Acc& a = acc[w[i] * sigma + w[i + 1]];
    if (a.count == 0) {
      a.first = i;
    } else {
      const std::size_t g = i - a.last;
      if (!a.gap || g > *a.gap) a.gap = g;
    }
    a.last = i;
    ++a.count;
  }
  Length2Gaps out;
  for (const auto& [key, a] : acc) {
    FactorGap f;
    f.first = static_cast<Symbol>(key / sigma);
    f.second = static_cast<Symbol>(key % sigma);
    f.occurrences = a.count;
    f.max_gap = a.gap;
    f.open_tail = w.size() - a.last;
    if (a.count == 1) out.truncated = true;
    if (a.gap && (!out.max_gap || *a.gap > *out.max_gap)) out.max_gap = a.gap;
    out.factors.push_back(f);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const FactorGap& x, const FactorGap& y) {
    return std::pair(x.first, x.second) < std::pair(y.first, y.second);
  });
  return out;
}

TwoSidedWindow::TwoSidedWindow(Word word, std::size_t origin)
    : word_(std::move(word)), origin_(origin) {
  if (origin_ > word_.size())
    fail(ErrorCode::out_of_window, "window origin " + std::to_string(origin_) +
                                       " beyond word length " + std::to_string(word_.size()));
}

std::size_t TwoSidedWindow::index(Position p) const {
  if (p < min_position() || p >= end_position())
    fail(ErrorCode::out_of_window, "position " + std::to_string(p) + " outside window [" +
                                       std::to_string(min_position()) + ", " +
                                       std::to_string(end_position()) + ")");
  return static_cast<std::size_t>(p + static_cast<Position>(origin_));
}

Symbol TwoSidedWindow::at(Position p) const { return word_[index(p)]; }

Word TwoSidedWindow::slice(Position from, Position to) const {
  if (!contains(from, to))
    fail(ErrorCode::out_of_window, "slice [" + std::to_string(from) + ", " + std::to_string(to) +
                                       ") outside window [" + std::to_string(min_position()) +
                                       ", " + std::to_string(end_position()) + ")");
  const auto o = static_cast<Position>(origin_);
  return word_.subword(static_cast<std::size_t>(from + o), static_cast<std::size_t>(to + o));
}

}  // namespace sadic
