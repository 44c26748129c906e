#include "sadic/sadic.h"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "report.hpp"
#include "sadic/builtin.hpp"
#include "sadic/error.hpp"
#include "sadic/formats.hpp"

struct sadic_word {
  sadic::Word w;
};
struct sadic_window {
  sadic::TwoSidedWindow x;
};
struct sadic_morphism {
  sadic::Morphism m;
};
struct sadic_directive {
  sadic::DirectiveSequence d;
};
struct sadic_return_table {
  sadic::ReturnWordTable t;
};
struct sadic_tower {
  sadic::DerivedTower t;
};

namespace {

using sadic::ErrorCode;
using sadic::report::Format;

__extension__ using u128 = unsigned __int128;

thread_local std::string last_error;
std::atomic<unsigned> worker_threads{1};

sadic_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return SADIC_ERR_INVALID_ARGUMENT;
    case ErrorCode::alphabet_mismatch: return SADIC_ERR_ALPHABET_MISMATCH;
    case ErrorCode::out_of_window: return SADIC_ERR_OUT_OF_WINDOW;
    case ErrorCode::not_converged: return SADIC_ERR_NOT_CONVERGED;
    case ErrorCode::insufficient_window: return SADIC_ERR_INSUFFICIENT_WINDOW;
    case ErrorCode::factorization: return SADIC_ERR_FACTORIZATION;
    case ErrorCode::parse: return SADIC_ERR_PARSE;
    case ErrorCode::io: return SADIC_ERR_IO;
  }
  return SADIC_ERR_INTERNAL;
}

template <class F>
sadic_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const sadic::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SADIC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SADIC_ERR_INTERNAL;
  }
}

template <class T>
void require(const T* p, const char* what) {
  if (!p) sadic::fail(ErrorCode::invalid_argument, std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

Format format_of(sadic_format f) { return f == SADIC_FORMAT_JSONL ? Format::jsonl : Format::text; }

sadic_status emit(const sadic::report::Records& records, sadic_format format, char** out, bool passed) {
  require(out, "output");
  *out = dup(sadic::report::render(records, format_of(format)));
  return passed ? SADIC_OK : SADIC_CHECK_FAILED;
}

sadic::Word parse_over(const sadic::AlphabetPtr& alphabet, const char* text) {
  if (!text || !*text) return sadic::Word::empty(alphabet);
  return sadic::Word::parse(alphabet, text);
}

std::vector<std::size_t> parse_list(std::string_view s) {
  std::vector<std::size_t> out;
  while (true) {
    const std::size_t comma = s.find(',');
    const std::string_view item = s.substr(0, comma);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
      sadic::fail(ErrorCode::parse, "malformed integer list '" + std::string(s) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) return out;
    s = s.substr(comma + 1);
  }
}

sadic::builtin::SturmianSpec sturmian_spec(const char* spec) {
  using sadic::builtin::SturmianSpec;
  require(spec, "Sturmian spec");
  const std::string_view s(spec);
  if (s == "golden") return SturmianSpec::golden();
  if (s == "linear") return SturmianSpec::linear();
  return SturmianSpec::from_continued_fraction(parse_list(s));
}

bool below(std::size_t num, std::size_t den, const sadic::Ratio& limit) {
  return static_cast<u128>(num) * limit.den < static_cast<u128>(limit.num) * den;
}

}  // namespace

extern "C" {

const char* sadic_version(void) { return "0.1.0"; }

const char* sadic_last_error(void) { return last_error.c_str(); }

const char* sadic_status_name(sadic_status status) {
  switch (status) {
    case SADIC_OK: return "ok";
    case SADIC_CHECK_FAILED: return "check_failed";
    case SADIC_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case SADIC_ERR_ALPHABET_MISMATCH: return "alphabet_mismatch";
    case SADIC_ERR_OUT_OF_WINDOW: return "out_of_window";
    case SADIC_ERR_NOT_CONVERGED: return "not_converged";
    case SADIC_ERR_INSUFFICIENT_WINDOW: return "insufficient_window";
    case SADIC_ERR_FACTORIZATION: return "factorization";
    case SADIC_ERR_PARSE: return "parse";
    case SADIC_ERR_IO: return "io";
    case SADIC_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void sadic_string_free(char* s) { std::free(s); }

void sadic_set_threads(unsigned threads) { worker_threads = threads == 0 ? 1 : threads; }

sadic_status sadic_word_parse(const char* text, sadic_word** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output");
    *out = new sadic_word{sadic::parse_sequence(text)};
    return SADIC_OK;
  });
}

sadic_status sadic_word_load(const char* path, sadic_word** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "output");
    *out = new sadic_word{sadic::read_sequence(path)};
    return SADIC_OK;
  });
}

void sadic_word_free(sadic_word* w) { delete w; }

size_t sadic_word_length(const sadic_word* w) { return w ? w->w.size() : 0; }

sadic_status sadic_word_to_string(const sadic_word* w, char** out) {
  return guarded([&] {
    require(w, "word");
    require(out, "output");
    *out = dup(w->w.str());
    return SADIC_OK;
  });
}

sadic_status sadic_word_complexity_profile(const sadic_word* w, size_t max_n, size_t* values) {
  return guarded([&] {
    require(w, "word");
    require(values, "values");
    const auto p = sadic::complexity_profile(w->w, max_n);
    std::copy(p.begin(), p.end(), values);
    return SADIC_OK;
  });
}

sadic_status sadic_window_load(const char* path, sadic_window** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "output");
    *out = new sadic_window{sadic::read_window(path)};
    return SADIC_OK;
  });
}

sadic_status sadic_window_from_word(const sadic_word* w, size_t origin, sadic_window** out) {
  return guarded([&] {
    require(w, "word");
    require(out, "output");
    *out = new sadic_window{sadic::TwoSidedWindow(w->w, origin)};
    return SADIC_OK;
  });
}

void sadic_window_free(sadic_window* x) { delete x; }
size_t sadic_window_origin(const sadic_window* x) { return x ? x->x.origin() : 0; }
size_t sadic_window_length(const sadic_window* x) { return x ? x->x.word().size() : 0; }

sadic_status sadic_window_word(const sadic_window* x, sadic_word** out) {
  return guarded([&] {
    require(x, "window");
    require(out, "output");
    *out = new sadic_word{x->x.word()};
    return SADIC_OK;
  });
}

sadic_status sadic_morphism_parse(const char* text, sadic_morphism** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output");
    *out = new sadic_morphism{sadic::parse_morphism(text)};
    return SADIC_OK;
  });
}

sadic_status sadic_morphism_load(const char* path, sadic_morphism** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "output");
    *out = new sadic_morphism{sadic::read_morphism(path)};
    return SADIC_OK;
  });
}

void sadic_morphism_free(sadic_morphism* m) { delete m; }

sadic_status sadic_morphism_to_string(const sadic_morphism* m, char** out) {
  return guarded([&] {
    require(m, "morphism");
    require(out, "output");
    *out = dup(m->m.str());
    return SADIC_OK;
  });
}

sadic_status sadic_morphism_apply(const sadic_morphism* m, const sadic_word* w, sadic_word** out) {
  return guarded([&] {
    require(m, "morphism");
    require(w, "word");
    require(out, "output");
    *out = new sadic_word{sadic::apply(m->m, w->w.translated(m->m.domain()))};
    return SADIC_OK;
  });
}

sadic_status sadic_morphism_compose(const sadic_morphism* outer, const sadic_morphism* inner,
                                    sadic_morphism** out) {
  return guarded([&] {
    require(outer, "outer");
    require(inner, "inner");
    require(out, "output");
    *out = new sadic_morphism{sadic::compose(outer->m, inner->m)};
    return SADIC_OK;
  });
}

sadic_status sadic_directive_builtin(const char* name, sadic_directive** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "output");
    *out = new sadic_directive{sadic::builtin_directive(name)};
    return SADIC_OK;
  });
}

sadic_status sadic_directive_load(const char* path, sadic_directive** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "output");
    *out = new sadic_directive{sadic::read_directive(path)};
    return SADIC_OK;
  });
}

void sadic_directive_free(sadic_directive* d) { delete d; }

sadic_status sadic_directive_generate(const sadic_directive* d, size_t level, size_t target,
                                      size_t depth_budget, sadic_word** out, sadic_generate_info* info) {
  return guarded([&] {
    require(d, "directive");
    require(out, "output");
    auto g = sadic::tail_prefix(d->d, level, target, depth_budget ? depth_budget : sadic::kDefaultDepthBudget);
    if (info) *info = {g.stable_length, g.depth_used, g.converged ? 1 : 0};
    if (!g.converged)
      sadic::fail(ErrorCode::not_converged, "prefix of length " + std::to_string(target) +
                                                " did not stabilise within depth " +
                                                std::to_string(g.depth_used));
    *out = new sadic_word{std::move(g.word)};
    return SADIC_OK;
  });
}

sadic_status sadic_return_table_build(const sadic_window* x, const char* u, const char* v,
                                      sadic_return_table** out) {
  return guarded([&] {
    require(x, "window");
    require(out, "output");
    const auto& alphabet = x->x.word().alphabet();
    *out = new sadic_return_table{sadic::return_words(x->x, parse_over(alphabet, u), parse_over(alphabet, v))};
    return SADIC_OK;
  });
}

void sadic_return_table_free(sadic_return_table* t) { delete t; }
size_t sadic_return_table_size(const sadic_return_table* t) { return t ? t->t.size() : 0; }
int sadic_return_table_complete(const sadic_return_table* t) { return t && t->t.complete ? 1 : 0; }

sadic_status sadic_return_table_word(const sadic_return_table* t, size_t k, char** out) {
  return guarded([&] {
    require(t, "table");
    require(out, "output");
    *out = dup(t->t.theta(k).str());
    return SADIC_OK;
  });
}

sadic_status sadic_return_table_encode(const sadic_return_table* t, const sadic_window* x, int64_t from,
                                       size_t count, sadic_word** out) {
  return guarded([&] {
    require(t, "table");
    require(x, "window");
    require(out, "output");
    *out = new sadic_word{sadic::encode(t->t, x->x, from, count)};
    return SADIC_OK;
  });
}

sadic_status sadic_return_table_decode(const sadic_return_table* t, const sadic_word* code, sadic_word** out) {
  return guarded([&] {
    require(t, "table");
    require(code, "code");
    require(out, "output");
    *out = new sadic_word{sadic::decode(t->t, code->w)};
    return SADIC_OK;
  });
}

sadic_status sadic_return_table_report(const sadic_return_table* t, sadic_format format, char** out) {
  return guarded([&] {
    require(t, "table");
    require(out, "output");
    if (format == SADIC_FORMAT_JSONL) return emit(sadic::report::return_table_records(t->t), format, out, true);
    std::string text;
    for (std::size_t k = 1; k <= t->t.size(); ++k) text += std::to_string(k) + "\t" + t->t.theta(k).str() + "\n";
    *out = dup(text);
    return SADIC_OK;
  });
}

sadic_status sadic_tower_build_window(const sadic_window* x, unsigned K, size_t levels, sadic_tower** out) {
  return guarded([&] {
    require(x, "window");
    require(out, "output");
    *out = new sadic_tower{sadic::build_tower(x->x, K, levels)};
    return SADIC_OK;
  });
}

sadic_status sadic_tower_build_directive(const sadic_directive* d, unsigned K, size_t levels, size_t max_window,
                                         sadic_tower** out) {
  return guarded([&] {
    require(d, "directive");
    require(out, "output");
    *out = new sadic_tower{sadic::build_tower(d->d, K, levels, max_window ? max_window : std::size_t{1} << 24)};
    return SADIC_OK;
  });
}

void sadic_tower_free(sadic_tower* t) { delete t; }
size_t sadic_tower_levels(const sadic_tower* t) { return t ? t->t.levels.size() : 0; }

sadic_status sadic_tower_lambda(const sadic_tower* t, size_t n, char** out) {
  return guarded([&] {
    require(t, "tower");
    require(out, "output");
    if (n >= t->t.levels.size())
      sadic::fail(ErrorCode::invalid_argument, "tower has no level " + std::to_string(n));
    *out = dup(n == 0 ? t->t.lambda0->str() : t->t.levels[n].lambda->str());
    return SADIC_OK;
  });
}

sadic_status sadic_tower_report(const sadic_tower* t, sadic_format format, char** out) {
  return guarded([&] {
    require(t, "tower");
    return emit(sadic::report::tower_records(t->t), format, out, t->t.all_ok());
  });
}

sadic_status sadic_report_prefix(const sadic_directive* d, size_t level, size_t target, size_t depth_budget,
                                 sadic_format format, char** out) {
  return guarded([&] {
    require(d, "directive");
    const auto g = sadic::tail_prefix(d->d, level, target, depth_budget ? depth_budget : sadic::kDefaultDepthBudget);
    if (!g.converged)
      sadic::fail(ErrorCode::not_converged, "prefix of length " + std::to_string(target) +
                                                " did not stabilise within depth " + std::to_string(g.depth_used) +
                                                " (stable " + std::to_string(g.stable_length) + ")");
    if (format == SADIC_FORMAT_TEXT) {
      require(out, "output");
      *out = dup(g.word.str() + "\n");
      return SADIC_OK;
    }
    return emit(sadic::report::prefix_records(g, level), format, out, true);
  });
}

sadic_status sadic_report_word_complexity(const sadic_word* w, size_t max_n, const char* bound,
                                          sadic_format format, char** out) {
  return guarded([&] {
    require(w, "word");
    const auto p = sadic::complexity_profile(w->w, max_n);
    if (!bound) return emit(sadic::report::profile_records(p), format, out, true);
    const sadic::Ratio D = sadic::Ratio::parse(bound);
    const std::size_t card = w->w.alphabet()->size();
    sadic::report::Records records;
    bool ok = true;
    for (std::size_t n = 1; n < p.size(); ++n) {
      const bool holds = static_cast<u128>(p[n]) * D.den <=
                         static_cast<u128>(D.num) * card * card * n;
      ok = ok && holds;
      records.push_back({{"kind", "complexity"}, {"n", n}, {"p", p[n]}, {"holds", holds}});
    }
    records.push_back({{"kind", "complexity_bound"},
                       {"D", D.str()},
                       {"alphabet_size", card},
                       {"window", w->w.size()},
                       {"passed", ok}});
    return emit(records, format, out, ok);
  });
}

sadic_status sadic_report_complexity_bound(const sadic_directive* d, const char* bound, size_t max_n,
                                           size_t window, size_t depth, sadic_format format, char** out) {
  return guarded([&] {
    require(d, "directive");
    require(bound, "bound");
    const auto r = sadic::complexity_bound_check(d->d, sadic::Ratio::parse(bound), max_n, window, depth);
    return emit(sadic::report::complexity_records(r), format, out, r.passed());
  });
}

sadic_status sadic_report_lr(const sadic_directive* d, size_t n_max, size_t window, size_t max_u_len,
                             int expect_lr, sadic_format format, char** out) {
  return guarded([&] {
    require(d, "directive");
    const auto r = sadic::lr_sufficient_report(d->d, n_max, window, worker_threads);
    auto records = sadic::report::lr_records(r);
    if (max_u_len > 0) {
      const auto p = sadic::lr_ratio_estimate(sadic::generate(d->d, 0, window), max_u_len, worker_threads);
      const auto more = sadic::report::ratio_records(p, false);
      records.insert(records.end(), more.begin(), more.end());
    }
    const bool ok = expect_lr < 0 || (expect_lr > 0) == r.consistent_with_lr;
    return emit(records, format, out, ok);
  });
}

sadic_status sadic_report_ratio_profile(const sadic_word* w, size_t max_u_len, int rows, sadic_format format,
                                        char** out) {
  return guarded([&] {
    require(w, "word");
    const auto p = sadic::lr_ratio_estimate(w->w, max_u_len, worker_threads);
    return emit(sadic::report::ratio_records(p, rows != 0), format, out, true);
  });
}

sadic_status sadic_report_not_lr(size_t n, size_t window, sadic_format format, char** out) {
  return guarded([&] {
    const auto r = sadic::builtin::verify_not_lr(n, window);
    return emit(sadic::report::not_lr_records(r), format, out, r.passed);
  });
}

sadic_status sadic_report_gap_lemma(size_t n, size_t window, sadic_format format, char** out) {
  return guarded([&] {
    const auto r = sadic::builtin::verify_gap_lemma(n, window);
    return emit(sadic::report::gap_lemma_records(r), format, out, r.holds);
  });
}

sadic_status sadic_report_block_identities(size_t i, size_t j, size_t k, sadic_format format, char** out) {
  return guarded([&] {
    const auto r = sadic::builtin::verify_block_identities(i, j, k);
    return emit(sadic::report::block_identity_records(r, true), format, out, r.passed());
  });
}

sadic_status sadic_report_block_identities_upto(size_t upto, sadic_format format, char** out) {
  return guarded([&] {
    if (upto == 0) sadic::fail(ErrorCode::invalid_argument, "block exponents start at 1");
    sadic::report::Records records;
    std::size_t passed = 0, total = 0;
    for (std::size_t i = 1; i <= upto; ++i)
      for (std::size_t j = 1; j <= upto; ++j)
        for (std::size_t k = 1; k <= upto; ++k) {
          const auto r = sadic::builtin::verify_block_identities(i, j, k);
          const auto rec = sadic::report::block_identity_records(r, false);
          records.insert(records.end(), rec.begin(), rec.end());
          passed += r.passed() ? 1 : 0;
          ++total;
        }
    records.push_back({{"kind", "block_identities"}, {"cases", total}, {"passed", passed}});
    return emit(records, format, out, passed == total);
  });
}

sadic_status sadic_report_sturmian_gaps(size_t i, size_t j, size_t k, const sadic_word* tail,
                                        sadic_format format, char** out) {
  return guarded([&] {
    require(tail, "tail");
    const auto r = sadic::builtin::verify_sturmian_gaps(i, j, k, tail->w);
    return emit(sadic::report::sturmian_gap_records(r), format, out, r.holds);
  });
}

sadic_status sadic_report_sturmian_verdict(const char* spec, size_t levels, size_t window, size_t max_u_len,
                                           const char* ratio_limit, const char* contrast, sadic_format format,
                                           char** out) {
  return guarded([&] {
    const auto v = sadic::builtin::sturmian_lr_verdict(sturmian_spec(spec), levels, window, max_u_len,
                                                       worker_threads);
    auto records = sadic::report::sturmian_verdict_records(v);
    bool ok = v.bounds_hold;
    if (ratio_limit) {
      const sadic::Ratio limit = sadic::Ratio::parse(ratio_limit);
      const bool holds = below(v.profile.best_num, v.profile.best_den, limit);
      ok = ok && holds;
      records.push_back({{"kind", "ratio_limit"},
                         {"max_ratio", std::to_string(v.profile.best_num) + "/" + std::to_string(v.profile.best_den)},
                         {"limit", limit.str()},
                         {"holds", holds}});
    }
    if (contrast) {
      const auto other = sadic::lr_ratio_estimate(
          sadic::generate(sadic::builtin::sturmian_directive(sturmian_spec(contrast)), 0, window), max_u_len,
          worker_threads);
      // other.best > v.best, cross-multiplied.
      const bool exceeds = static_cast<u128>(other.best_num) * v.profile.best_den >
                           static_cast<u128>(v.profile.best_num) * other.best_den;
      ok = ok && exceeds;
      records.push_back({{"kind", "contrast"},
                         {"against", contrast},
                         {"max_ratio", std::to_string(other.best_num) + "/" + std::to_string(other.best_den)},
                         {"baseline", std::to_string(v.profile.best_num) + "/" + std::to_string(v.profile.best_den)},
                         {"exceeds", exceeds}});
    }
    return emit(records, format, out, ok);
  });
}

sadic_status sadic_report_coding_check(size_t pairs, uint64_t seed, sadic_format format, char** out) {
  return guarded([&] {
    const auto r = sadic::builtin::check_coding(pairs, seed);
    return emit(sadic::report::coding_check_records(r), format, out, r.passed());
  });
}

sadic_status sadic_report_return_oracle(size_t instances, size_t max_window, uint64_t seed, sadic_format format,
                                        char** out) {
  return guarded([&] {
    const auto r = sadic::builtin::check_return_oracle(instances, max_window, seed);
    return emit(sadic::report::oracle_check_records(r), format, out, r.passed());
  });
}

sadic_status sadic_sturmian_directive(const char* spec, sadic_directive** out) {
  return guarded([&] {
    require(out, "output");
    *out = new sadic_directive{sadic::builtin::sturmian_directive(sturmian_spec(spec))};
    return SADIC_OK;
  });
}

}  // extern "C"
