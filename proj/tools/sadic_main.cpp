// sadic: command-line front end over the libsadic C API.
//
// Exit status: 0 when every checked bound holds, 1 when a check fails,
// 2 on usage or input errors. Errors print a single "error: <code>: <reason>"
// line on stderr.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "sadic/sadic.h"

namespace {

struct Failure {
  sadic_status status;
  std::string message;
};

struct StringDeleter {
  void operator()(char* s) const { sadic_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
  T** out() { return &p; }
  T* get() const { return p; }
};
using Word = Handle<sadic_word, sadic_word_free>;
using Window = Handle<sadic_window, sadic_window_free>;
using Directive = Handle<sadic_directive, sadic_directive_free>;
using Table = Handle<sadic_return_table, sadic_return_table_free>;
using Tower = Handle<sadic_tower, sadic_tower_free>;

// Turns API errors into exceptions; check failures pass through.
sadic_status call(sadic_status s) {
  if (s != SADIC_OK && s != SADIC_CHECK_FAILED) throw Failure{s, sadic_last_error()};
  return s;
}

[[noreturn]] void usage_error(const std::string& message) { throw Failure{SADIC_ERR_INVALID_ARGUMENT, message}; }

// Takes ownership of text (by reference: it is read after the call filled it).
int emit(sadic_status s, char*& text) {
  CString owned(text);
  text = nullptr;
  if (owned) std::fputs(owned.get(), stdout);
  return s == SADIC_CHECK_FAILED ? 1 : 0;
}

// "3", "1,2,5" or "1-5".
std::vector<std::size_t> parse_levels(const std::string& text) {
  std::vector<std::size_t> out;
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (s.empty() || used != s.size()) usage_error("malformed level list '" + text + "'");
    return static_cast<std::size_t>(v);
  };
  if (auto dash = text.find('-'); dash != std::string::npos) {
    const std::size_t lo = number(text.substr(0, dash)), hi = number(text.substr(dash + 1));
    if (lo > hi) usage_error("empty level range '" + text + "'");
    for (std::size_t n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(number(item));
  if (out.empty()) usage_error("empty level list");
  return out;
}

std::vector<std::size_t> parse_triple(const std::string& text) {
  auto v = parse_levels(text);
  if (v.size() != 3 || text.find('-') != std::string::npos) usage_error("expected i,j,k, got '" + text + "'");
  return v;
}

struct Source {
  std::string builtin;
  std::string directive;
  std::string input;

  void add(CLI::App* app, bool with_input) {
    auto* b = app->add_option("--builtin", builtin,
                              "Named directive: counterexample, golden, sturmian-linear, sturmian:A0,A1,...");
    auto* d = app->add_option("--directive", directive, "Directive file")->check(CLI::ExistingFile);
    b->excludes(d);
    if (with_input) {
      auto* i = app->add_option("--input", input, "Sequence or window file")->check(CLI::ExistingFile);
      i->excludes(b)->excludes(d);
    }
  }
  bool has_directive() const { return !builtin.empty() || !directive.empty(); }
  void open(Directive& d) const {
    if (!builtin.empty())
      call(sadic_directive_builtin(builtin.c_str(), d.out()));
    else if (!directive.empty())
      call(sadic_directive_load(directive.c_str(), d.out()));
    else
      usage_error("one of --builtin or --directive is required");
  }
};

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{SADIC_ERR_IO, "cannot write '" + path.string() + "'"};
  out << text;
}

unsigned thread_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SADIC_THREADS")) {
    try {
      n = std::min(n, static_cast<unsigned>(std::max(1ul, std::stoul(env))));
    } catch (const std::exception&) {
      usage_error("SADIC_THREADS must be a positive integer");
    }
  }
  return n;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Experiments on S-adic sequences, return words and linear recurrence", "sadic"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  std::string format_name = "text";
  auto* format_opt = app.add_option("--format", format_name, "Output format")
                         ->check(CLI::IsMember({"text", "jsonl"}));
  std::size_t depth_budget = 0;
  app.add_option("--depth-budget", depth_budget, "Directive depth budget for prefix generation (0: default 96)");

  // gen
  auto* gen = app.add_subcommand("gen", "Print a prefix of the S-adic limit");
  Source gen_src;
  gen_src.add(gen, false);
  std::size_t gen_len = 0, gen_level = 0;
  gen->add_option("--len", gen_len, "Prefix length")->required()->check(CLI::PositiveNumber);
  gen->add_option("--level", gen_level, "Start composing at s_level");

  // complexity
  auto* cplx = app.add_subcommand("complexity", "Factor complexity and the linear ceiling");
  Source cplx_src;
  cplx_src.add(cplx, true);
  std::size_t max_n = 100, cplx_window = 59049, cplx_depth = 8;
  std::string bound;
  cplx->add_option("--max-n", max_n, "Largest factor length")->check(CLI::PositiveNumber);
  cplx->add_option("--bound", bound, "D in p(n) <= D (Card A)^2 n, e.g. 3 or 5/2");
  cplx->add_option("--window", cplx_window, "Prefix length scanned for a directive (default 3^10)")
      ->check(CLI::PositiveNumber);
  cplx->add_option("--depth", cplx_depth, "Depths checked for the length-ratio hypothesis");

  // returns
  auto* rets = app.add_subcommand("returns", "Return words to u.v on a window");
  Source rets_src;
  rets_src.add(rets, true);
  std::string u, v;
  std::size_t rets_len = 10000;
  rets->add_option("--u", u, "Left context (may be empty)");
  auto* v_opt = rets->add_option("--v", v, "Right context");
  rets->add_option("--len", rets_len, "Prefix length for --builtin/--directive")->check(CLI::PositiveNumber);
  std::size_t coding_pairs = 0, oracle_instances = 0, oracle_window = 2000;
  std::uint64_t check_seed = 1;
  auto* coding_opt = rets->add_option("--check-coding", coding_pairs,
                                      "Self-check: this many random code pairs must decode to distinct words")
                         ->check(CLI::PositiveNumber);
  auto* oracle_opt = rets->add_option("--check-oracle", oracle_instances,
                                      "Self-check: compare against brute force on this many random instances")
                         ->check(CLI::PositiveNumber);
  rets->add_option("--oracle-window", oracle_window, "Largest window for --check-oracle")->check(CLI::PositiveNumber);
  rets->add_option("--seed", check_seed, "Seed for the self-checks");
  v_opt->excludes(coding_opt)->excludes(oracle_opt);

  // derive
  auto* derive = app.add_subcommand("derive", "Build the derived tower lambda_0, lambda_1, ...");
  Source derive_src;
  derive_src.add(derive, true);
  unsigned K = 3;
  std::size_t levels = 2, max_window = 0;
  std::string out_dir;
  derive->add_option("--K", K, "LR constant parameter (>= 2)")->check(CLI::Range(2u, 64u));
  derive->add_option("--levels", levels, "Highest level");
  derive->add_option("--out-dir", out_dir, "Write lambda_<n> morphism files here");
  derive->add_option("--max-window", max_window, "Largest generated window (default 2^24)");

  // lr-check
  auto* lr = app.add_subcommand("lr-check", "D_n statistics and return-ratio profile");
  Source lr_src;
  lr_src.add(lr, true);
  std::size_t n_max = 6, lr_window = 10000, max_u_len = 0;
  std::string expect;
  lr->add_option("--n-max", n_max, "Highest level");
  lr->add_option("--window", lr_window, "Symbols scanned per level")->check(CLI::PositiveNumber);
  lr->add_option("--max-u-len", max_u_len, "Also report the return-ratio profile up to this factor length");
  lr->add_option("--expect", expect, "Fail unless the heuristic verdict matches")
      ->check(CLI::IsMember({"lr", "non-lr"}));
  bool lr_rows = false;
  lr->add_flag("--rows", lr_rows, "Print one ratio row per factor length (with --input)");

  // counterexample
  auto* cx = app.add_subcommand("counterexample", "The primitive non-LR counterexample");
  cx->require_subcommand(1);
  auto* cx_verify = cx->add_subcommand("verify", "Long return words to rho_n(ca)");
  std::string cx_n = "1-3";
  std::size_t cx_window = 100000;
  cx_verify->add_option("--n", cx_n, "Level, list or range (e.g. 2, 1,3, 1-3)");
  cx_verify->add_option("--window", cx_window, "Length of sigma^{n+1} tau (y) scanned")->check(CLI::PositiveNumber);
  auto* cx_gaps = cx->add_subcommand("gaps", "Gaps between occurrences of ca in sigma^n tau (z)");
  std::string gaps_n = "1-5";
  std::size_t gaps_window = 20000;
  cx_gaps->add_option("--n", gaps_n, "Level, list or range");
  cx_gaps->add_option("--window", gaps_window, "Approximate length of sigma^n tau (z)")->check(CLI::PositiveNumber);

  // sturmian
  auto* st = app.add_subcommand("sturmian", "Sturmian sequences from continued fractions");
  std::string cf;
  bool linear = false, verdict = false;
  std::size_t st_len = 0, st_levels = 6, st_window = 20000, st_max_u = 200, upto = 0, tail_len = 1000;
  std::string ratio_limit, contrast, check_blocks, check_gaps, tail;
  auto* cf_opt = st->add_option("--cf", cf, "Continued fraction 0,a1,a2,... (last quotient repeats; default golden)");
  st->add_flag("--linear", linear, "Quotients i_k = k")->excludes(cf_opt);
  st->add_option("--len", st_len, "Print this many symbols");
  st->add_flag("--verdict", verdict, "D_n rows against 2 max(i) + 3 and the return-ratio profile");
  st->add_option("--levels", st_levels, "Highest verdict level");
  st->add_option("--window", st_window, "Symbols scanned per level")->check(CLI::PositiveNumber);
  st->add_option("--max-u-len", st_max_u, "Factor lengths in the ratio profile")->check(CLI::PositiveNumber);
  st->add_option("--ratio-limit", ratio_limit, "Fail unless the profile maximum is below this");
  st->add_option("--contrast", contrast, "Fail unless this spec's profile maximum is strictly larger (golden, linear, 0,a1,...)");
  st->add_option("--check-blocks", check_blocks, "Check tau^i sigma^j tau^k (0), (1) against closed forms: i,j,k");
  st->add_option("--check-blocks-upto", upto, "Check every 1 <= i,j,k <= N");
  st->add_option("--check-gaps", check_gaps, "Gap bounds in tau^i sigma^j tau^k (tail): i,j,k");
  auto* tail_opt = st->add_option("--tail", tail, "Tail word file for --check-gaps (default: a prefix of the sequence)")
                       ->check(CLI::ExistingFile);
  st->add_option("--tail-len", tail_len, "Length of the default tail")->check(CLI::PositiveNumber)->excludes(tail_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  }

  sadic_format format = format_name == "jsonl" ? SADIC_FORMAT_JSONL : SADIC_FORMAT_TEXT;
  char* text = nullptr;

  try {
    sadic_set_threads(thread_count());

    if (gen->parsed()) {
      Directive d;
      gen_src.open(d);
      return emit(call(sadic_report_prefix(d.get(), gen_level, gen_len, depth_budget, format, &text)), text);
    }

    if (cplx->parsed()) {
      if (cplx_src.has_directive()) {
        Directive d;
        cplx_src.open(d);
        if (!bound.empty())
          return emit(call(sadic_report_complexity_bound(d.get(), bound.c_str(), max_n, cplx_window, cplx_depth,
                                                         format, &text)),
                      text);
        Word w;
        call(sadic_directive_generate(d.get(), 0, cplx_window, depth_budget, w.out(), nullptr));
        return emit(call(sadic_report_word_complexity(w.get(), max_n, nullptr, format, &text)), text);
      }
      if (cplx_src.input.empty()) usage_error("one of --input, --builtin or --directive is required");
      Window x;
      call(sadic_window_load(cplx_src.input.c_str(), x.out()));
      Word w;
      call(sadic_window_word(x.get(), w.out()));
      return emit(call(sadic_report_word_complexity(w.get(), max_n, bound.empty() ? nullptr : bound.c_str(),
                                                    format, &text)),
                  text);
    }

    if (rets->parsed()) {
      if (coding_pairs > 0 || oracle_instances > 0) {
        int status = 0;
        if (coding_pairs > 0)
          status = std::max(status, emit(call(sadic_report_coding_check(coding_pairs, check_seed, format, &text)), text));
        if (oracle_instances > 0)
          status = std::max(status, emit(call(sadic_report_return_oracle(oracle_instances, oracle_window, check_seed,
                                                                         format, &text)),
                                          text));
        return status;
      }
      if (v.empty()) usage_error("returns needs --v");
      Window x;
      if (rets_src.has_directive()) {
        Directive d;
        rets_src.open(d);
        Word w;
        call(sadic_directive_generate(d.get(), 0, rets_len, depth_budget, w.out(), nullptr));
        call(sadic_window_from_word(w.get(), 0, x.out()));
      } else if (!rets_src.input.empty()) {
        call(sadic_window_load(rets_src.input.c_str(), x.out()));
      } else {
        usage_error("one of --input, --builtin or --directive is required");
      }
      Table t;
      call(sadic_return_table_build(x.get(), u.c_str(), v.c_str(), t.out()));
      return emit(call(sadic_return_table_report(t.get(), format, &text)), text);
    }

    if (derive->parsed()) {
      if (format_opt->count() == 0) format = SADIC_FORMAT_JSONL;
      Tower t;
      if (derive_src.has_directive()) {
        Directive d;
        derive_src.open(d);
        call(sadic_tower_build_directive(d.get(), K, levels, max_window, t.out()));
      } else if (!derive_src.input.empty()) {
        Window x;
        call(sadic_window_load(derive_src.input.c_str(), x.out()));
        call(sadic_tower_build_window(x.get(), K, levels, t.out()));
      } else {
        usage_error("one of --input, --builtin or --directive is required");
      }
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (std::size_t n = 0; n < sadic_tower_levels(t.get()); ++n) {
          char* m = nullptr;
          call(sadic_tower_lambda(t.get(), n, &m));
          CString owned(m);
          write_file(std::filesystem::path(out_dir) / ("lambda_" + std::to_string(n) + ".morphism"), owned.get());
        }
      }
      return emit(call(sadic_tower_report(t.get(), format, &text)), text);
    }

    if (lr->parsed()) {
      if (!lr_src.input.empty()) {
        if (max_u_len == 0) usage_error("--input needs --max-u-len");
        Window x;
        call(sadic_window_load(lr_src.input.c_str(), x.out()));
        Word w;
        call(sadic_window_word(x.get(), w.out()));
        return emit(call(sadic_report_ratio_profile(w.get(), max_u_len, lr_rows, format, &text)), text);
      }
      Directive d;
      lr_src.open(d);
      const int expect_lr = expect.empty() ? -1 : expect == "lr" ? 1 : 0;
      return emit(call(sadic_report_lr(d.get(), n_max, lr_window, max_u_len, expect_lr, format, &text)), text);
    }

    if (cx->parsed()) {
      const bool verify = cx_verify->parsed();
      int status = 0;
      for (std::size_t n : parse_levels(verify ? cx_n : gaps_n)) {
        const sadic_status s = verify ? call(sadic_report_not_lr(n, cx_window, format, &text))
                                      : call(sadic_report_gap_lemma(n, gaps_window, format, &text));
        status = std::max(status, emit(s, text));
      }
      return status;
    }

    if (st->parsed()) {
      const std::string spec = linear ? "linear" : cf.empty() ? "golden" : cf;
      int status = 0;
      bool did = false;
      if (st_len > 0) {
        Directive d;
        call(sadic_sturmian_directive(spec.c_str(), d.out()));
        status = std::max(status, emit(call(sadic_report_prefix(d.get(), 0, st_len, depth_budget, format, &text)), text));
        did = true;
      }
      if (!check_blocks.empty()) {
        const auto t = parse_triple(check_blocks);
        status = std::max(status, emit(call(sadic_report_block_identities(t[0], t[1], t[2], format, &text)), text));
        did = true;
      }
      if (upto > 0) {
        status = std::max(status, emit(call(sadic_report_block_identities_upto(upto, format, &text)), text));
        did = true;
      }
      if (!check_gaps.empty()) {
        const auto t = parse_triple(check_gaps);
        Word w;
        if (!tail.empty()) {
          call(sadic_word_load(tail.c_str(), w.out()));
        } else {
          Directive d;
          call(sadic_sturmian_directive(spec.c_str(), d.out()));
          call(sadic_directive_generate(d.get(), 0, tail_len, depth_budget, w.out(), nullptr));
        }
        status = std::max(status, emit(call(sadic_report_sturmian_gaps(t[0], t[1], t[2], w.get(), format, &text)), text));
        did = true;
      }
      if (verdict) {
        status = std::max(
            status, emit(call(sadic_report_sturmian_verdict(spec.c_str(), st_levels, st_window, st_max_u,
                                                            ratio_limit.empty() ? nullptr : ratio_limit.c_str(),
                                                            contrast.empty() ? nullptr : contrast.c_str(), format,
                                                            &text)),
                         text));
        did = true;
      }
      if (!did) usage_error("sturmian needs one of --len, --verdict, --check-blocks, --check-blocks-upto, --check-gaps");
      return status;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << sadic_status_name(f.status) << ": " << f.message << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
