#include "doctest.h"
#include "oracles.hpp"
#include "sadic/error.hpp"
#include "sadic/words.hpp"

using namespace sadic;

namespace {

Word w(std::string_view text) { return Word::from_text(text); }

Word over(const Word& like, std::string_view text) { return Word::parse(like.alphabet(), text); }

}  // namespace

TEST_CASE("alphabet rejects duplicates, blanks and unknown tokens") {
  CHECK_THROWS_AS(Alphabet::make({}), Error);
  CHECK_THROWS_AS(Alphabet::make({"a", "a"}), Error);
  CHECK_THROWS_AS(Alphabet::make({"a b"}), Error);
  auto a = Alphabet::make({"x", "y"});
  CHECK(a->single_char());
  CHECK(a->index("y") == 1);
  try {
    a->index("z");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::alphabet_mismatch);
  }
  auto n = Alphabet::numbered(12);
  CHECK_FALSE(n->single_char());
  CHECK(n->token(11) == "12");
}

TEST_CASE("parse and print keep single-character and token words apart") {
  Word a = w("abcaacacb");
  CHECK(a.size() == 9);
  CHECK(a.str() == "abcaacacb");
  CHECK(a.alphabet()->tokens() == std::vector<std::string>{"a", "b", "c"});

  Word t = Word::from_text("10 2 10 1");
  CHECK(t.size() == 4);
  CHECK(t.str() == "10 2 10 1");

  auto n = Alphabet::numbered(12);
  CHECK(Word::parse(n, "12").size() == 1);
  CHECK(Word::parse(n, "121").size() == 3);
  CHECK(Word::parse(n, "1 12 3").str() == "1 12 3");
}

TEST_CASE("occurrences: worked examples") {
  Word x = w("abcaacacb");
  CHECK(occurrences(x, over(x, "ca")) == std::vector<std::size_t>{2, 5});
  Word aaaa = w("aaaa");
  CHECK(occurrences(aaaa, over(aaaa, "aa")) == std::vector<std::size_t>{0, 1, 2});
  CHECK(occurrences(aaaa, over(aaaa, "aaaaa")).empty());
  CHECK_THROWS_AS(occurrences(aaaa, Word::empty(aaaa.alphabet())), Error);
}

TEST_CASE("occurrences agree with a quadratic scan") {
  oracle::Random rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const std::string letters = trial % 2 ? "ab" : "abc";
    const std::string text = rng.word(letters, rng.between(1, 80));
    const std::string pat = rng.word(letters, rng.between(1, 5));
    const auto alphabet = Alphabet::make({"a", "b", "c"});
    const auto got = occurrences(Word::parse(alphabet, text), Word::parse(alphabet, pat));
    CHECK(got == oracle::occurrences(text, pat));
  }
}

TEST_CASE("factors and complexity") {
  Word x = w("abcaacacb");
  std::vector<std::string> got;
  for (const auto& f : factors(x, 2)) got.push_back(f.str());
  CHECK(got == std::vector<std::string>{"aa", "ab", "ac", "bc", "ca", "cb"});
  CHECK(complexity(x, 0) == 1);
  CHECK(complexity(x, 1) == 3);
  CHECK(complexity(x, 2) == 6);
  CHECK_THROWS_AS(complexity(x, 10), Error);
}

TEST_CASE("complexity profile matches naive factor sets and stays monotone under extension") {
  oracle::Random rng(12);
  const auto alphabet = Alphabet::make({"a", "b", "c"});
  for (int trial = 0; trial < 120; ++trial) {
    const std::string text = rng.word(trial % 3 ? "abc" : "ab", rng.between(1, 120));
    const Word word = Word::parse(alphabet, text);
    const auto p = complexity_profile(word, text.size());
    REQUIRE(p.size() == text.size() + 1);
    CHECK(p[0] == 1);
    for (std::size_t n = 1; n <= text.size(); ++n) {
      CHECK(p[n] == oracle::factor_set(text, n).size());
      std::size_t cap = text.size() - n + 1, power = 1;
      for (std::size_t i = 0; i < n && power < cap; ++i) power *= 3;
      CHECK(p[n] <= std::min(cap, power));
    }
    const Word prefix = word.prefix(text.size() / 2 + 1);
    const auto q = complexity_profile(prefix, prefix.size());
    for (std::size_t n = 0; n < q.size(); ++n) CHECK(q[n] <= p[n]);
  }
}

TEST_CASE("max_gap") {
  Word x = w("abcaacacb");
  CHECK(max_gap(x, over(x, "ca")) == 3u);
  Word aaaa = w("aaaa");
  CHECK(max_gap(aaaa, over(aaaa, "a")) == 1u);
  Word abc = w("abc");
  CHECK_FALSE(max_gap(abc, over(abc, "ab")).has_value());
  CHECK_THROWS_AS(max_gap(abc, Word::empty(abc.alphabet())), Error);
}

TEST_CASE("max_gap_over_length2 flags single occurrences") {
  const Length2Gaps g = max_gap_over_length2(Word::from_text("010010"));
  CHECK(g.max_gap == 3u);
  CHECK(g.truncated);

  const Length2Gaps alt = max_gap_over_length2(Word::from_text("abab"));
  CHECK(alt.max_gap == 2u);

  const Length2Gaps aa = max_gap_over_length2(Word::from_text("aa"));
  CHECK_FALSE(aa.max_gap.has_value());
  CHECK(aa.truncated);

  CHECK_THROWS_AS(max_gap_over_length2(Word::from_text("a")), Error);
}

TEST_CASE("two-sided window slicing") {
  TwoSidedWindow x(Word::from_text("abc"), 1);
  CHECK(x.slice(-1, 2).str() == "abc");
  CHECK(x.slice(0, 1).str() == "b");
  CHECK(x.at(-1) == 0);
  try {
    x.slice(-2, 0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::out_of_window);
  }
  CHECK_THROWS_AS(TwoSidedWindow(Word::from_text("ab"), 3), Error);
}

TEST_CASE("translated words keep tokens and reject missing ones") {
  const auto big = Alphabet::make({"c", "b", "a"});
  Word x = w("ab");
  Word t = x.translated(big);
  CHECK(t.str() == "ab");
  CHECK(t[0] == 2);
  CHECK_THROWS_AS(w("xyz").translated(big), Error);
}
