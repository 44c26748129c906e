#include <set>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "sadic/builtin.hpp"
#include "sadic/error.hpp"
#include "sadic/returns.hpp"

using namespace sadic;

namespace {

std::string fibonacci(std::size_t n) {
  std::string a = "0", b = "01";
  while (b.size() < n) {
    std::string c = b + a;
    a = b;
    b = c;
  }
  return b.substr(0, n);
}

TwoSidedWindow window(const std::string& text, std::size_t origin) {
  return TwoSidedWindow(Word::from_text(text), origin);
}

Word over(const TwoSidedWindow& x, const std::string& text) { return Word::parse(x.word().alphabet(), text); }

std::vector<std::string> strings(const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const Word& w : words) out.push_back(w.str());
  return out;
}

}  // namespace

TEST_CASE("return words on a Fibonacci window") {
  const TwoSidedWindow x = window(fibonacci(200), 0);
  const Word empty = Word::empty(x.word().alphabet());
  const ReturnWordTable t = return_words(x, empty, over(x, "0"));
  CHECK(strings(t.returns) == std::vector<std::string>{"01", "0"});
  CHECK(t.first_positions[0] == 0);
  CHECK(t.first_positions[1] == 2);

  const ReturnWordTable t2 = return_words(x, empty, over(x, "00"));
  CHECK(strings(t2.returns) == std::vector<std::string>{"00101", "001"});
  CHECK(t2.theta(1).str() == "00101");
  CHECK_THROWS_AS(t2.theta(3), Error);
}

TEST_CASE("occurrences of u may begin left of the origin") {
  const TwoSidedWindow x = window("aaaa", 1);
  const ReturnWordTable t = return_words(x, over(x, "a"), over(x, "a"));
  CHECK(strings(t.returns) == std::vector<std::string>{"a"});
  CHECK(t.scan_from == -1);
  CHECK(is_return_word(x, over(x, "a"), over(x, "a"), over(x, "a")));
  CHECK_FALSE(is_return_word(x, over(x, "a"), over(x, "aa"), over(x, "a")));
}

TEST_CASE("coding and decoding") {
  const TwoSidedWindow x = window(fibonacci(300), 0);
  const Word empty = Word::empty(x.word().alphabet());
  const ReturnWordTable t = return_words(x, empty, over(x, "0"));
  const Word code = encode(t, x, 0, 3);
  REQUIRE(code.size() == 3);
  CHECK(code[0] == 0);
  CHECK(code[1] == 1);
  CHECK(code[2] == 0);
  CHECK(decode(t, code).str() == "01001");
  CHECK(decode(t, Word(t.code_alphabet, {0, 1})).str() == "010");
  CHECK(decode(t, Word::empty(t.code_alphabet)).empty());
  CHECK(decode(t, encode(t, x, 0, 40)) == x.slice(0, static_cast<Position>(decode(t, encode(t, x, 0, 40)).size())));
  CHECK_THROWS_AS(encode(t, x, 1, 2), Error);
}

TEST_CASE("three-condition test against the oracle") {
  oracle::Random rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::string text = trial % 2 ? fibonacci(150) : rng.word("ab", 150);
    const std::size_t origin = rng.between(0, 20);
    const TwoSidedWindow x = window(text, origin);
    const std::size_t lu = std::min<std::size_t>(origin, rng.between(0, 2));
    const std::string u = text.substr(origin - lu, lu);
    const std::string v = text.substr(origin, rng.between(1, 3));
    const std::size_t base = origin - u.size();
    const auto expected = oracle::return_words(text, base, u, v);
    if (expected.empty()) {
      CHECK_THROWS_AS(return_words(x, over(x, u), over(x, v)), Error);
      continue;
    }
    const ReturnWordTable t = return_words(x, over(x, u), over(x, v));
    std::set<std::string> got;
    for (const Word& w : t.returns) got.insert(w.str());
    CHECK(got == expected);
    std::set<std::string> brute;
    for (const Word& w : brute_force_return_words(x, over(x, u), over(x, v))) brute.insert(w.str());
    CHECK(brute == expected);
    for (const std::string& w : expected) CHECK(is_return_word(x, over(x, u), over(x, w), over(x, v)));
  }
}

TEST_CASE("return words to u.v and to the empty word before uv agree in number") {
  const TwoSidedWindow x = window(fibonacci(3000), 500);
  for (std::size_t lu : {1u, 2u, 5u, 8u})
    for (std::size_t lv : {1u, 3u, 5u}) {
      const Word u = x.slice(-static_cast<Position>(lu), 0);
      const Word v = x.slice(0, static_cast<Position>(lv));
      const Word uv = x.slice(-static_cast<Position>(lu), static_cast<Position>(lv));
      const TwoSidedWindow shifted(x.word(), 500 - lu);
      const ReturnWordTable a = return_words(x, u, v);
      const ReturnWordTable b = return_words(shifted, Word::empty(uv.alphabet()), uv);
      CHECK(a.size() == b.size());
    }
}

TEST_CASE("coding is injective on random windows") {
  oracle::Random rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const TwoSidedWindow x = window(fibonacci(400 + rng.below(200)), rng.between(0, 50));
    const std::size_t lv = rng.between(1, 6);
    const ReturnWordTable t = return_words(x, Word::empty(x.word().alphabet()), x.slice(0, lv));
    const Word a = encode(t, x, 0, rng.between(1, 10));
    Word b = a;
    std::vector<Symbol> s(b.symbols().begin(), b.symbols().end());
    if (t.size() > 1) {
      s[rng.below(s.size())] ^= 1;
      for (Symbol& c : s) c = std::min<Symbol>(c, static_cast<Symbol>(t.size() - 1));
      const Word c(t.code_alphabet, s);
      if (!(c == a)) CHECK_FALSE(decode(t, c) == decode(t, a));
    }
  }
}

TEST_CASE("derived morphisms") {
  const TwoSidedWindow x = window(fibonacci(4000), 1000);
  const Word empty = Word::empty(x.word().alphabet());
  const ReturnWordTable t1 = return_words(x, x.slice(-1, 0), x.slice(0, 1));
  const ReturnWordTable t2 = return_words(x, x.slice(-3, 0), x.slice(0, 3));
  const Morphism lambda = derived_morphism(t1, t2);
  for (Symbol b = 0; b < t2.size(); ++b) CHECK(decode(t1, lambda.image(b)) == t2.returns[b]);

  const Morphism id = derived_morphism(t1, t1);
  CHECK(id == Morphism::identity(t1.code_alphabet));

  ReturnWordTable tampered = t2;
  tampered.returns[0] = Word::parse(x.word().alphabet(), "1" + tampered.returns[0].str());
  try {
    derived_morphism(t1, tampered);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::factorization);
  }
}

TEST_CASE("derived tower of the golden Sturmian word") {
  const DerivedTower t = build_tower(builtin::sturmian_directive(builtin::SturmianSpec::golden()), 3, 2);
  CHECK(t.alpha == 36);
  CHECK(t.count_bound == 48);
  CHECK(t.length_bound == 324);
  REQUIRE(t.levels.size() == 3);
  CHECK(t.all_ok());
  CHECK(t.diagnostics.empty());
  for (const TowerLevel& level : t.levels) {
    CHECK(level.table.complete);
    CHECK(level.table.size() == 2);
    CHECK(level.count_ok);
    CHECK(level.reconstruction_ok);
  }
  for (std::size_t n = 1; n < t.levels.size(); ++n) {
    const TowerLevel& level = t.levels[n];
    REQUIRE(level.lambda.has_value());
    CHECK(level.proper.has_value());
    CHECK(level.lambda_positive);
    CHECK(level.identity_ok);
    CHECK(level.length_ok);
    const ReturnWordTable& prev = t.levels[n - 1].table;
    for (Symbol b = 0; b < level.table.size(); ++b)
      CHECK(decode(prev, level.lambda->image(b)) == level.table.returns[b]);
  }
}

TEST_CASE("a tower on a short window reports the shortfall") {
  const TwoSidedWindow x = window(fibonacci(300), 150);
  try {
    build_tower(x, 3, 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::insufficient_window);
  }
}

TEST_CASE("ratio profile") {
  const RatioProfile periodic = lr_ratio_estimate(Word::from_text(std::string(400, 'a')), 10);
  CHECK(periodic.best_num <= periodic.best_den);
  std::string abab;
  for (int i = 0; i < 300; ++i) abab += "ab";
  const RatioProfile p = lr_ratio_estimate(Word::from_text(abab), 20, 2);
  CHECK(p.best_num <= 2 * p.best_den);
  CHECK(p.rows.size() == 20);
  const RatioProfile fib = lr_ratio_estimate(Word::from_text(fibonacci(5000)), 30, 4);
  CHECK(fib.best_num <= 4 * fib.best_den);
  CHECK(fib.best_num >= 2 * fib.best_den);
}
