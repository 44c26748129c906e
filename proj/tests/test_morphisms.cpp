#include "doctest.h"
#include "oracles.hpp"
#include "sadic/builtin.hpp"
#include "sadic/error.hpp"
#include "sadic/morphisms.hpp"

using namespace sadic;
using builtin::cx_sigma;
using builtin::cx_tau;

namespace {

Word abc(std::string_view s) { return Word::parse(builtin::abc(), s); }

}  // namespace

TEST_CASE("sigma and tau images are pinned") {
  CHECK(cx_sigma().image("a").str() == "acb");
  CHECK(cx_sigma().image("b").str() == "bab");
  CHECK(cx_sigma().image("c").str() == "cbc");
  CHECK(cx_tau().image("a").str() == "abc");
  CHECK(cx_tau().image("b").str() == "acb");
  CHECK(cx_tau().image("c").str() == "aac");
  CHECK(builtin::st_sigma().image("0").str() == "01");
  CHECK(builtin::st_sigma().image("1").str() == "1");
  CHECK(builtin::st_tau().image("0").str() == "0");
  CHECK(builtin::st_tau().image("1").str() == "10");
}

TEST_CASE("apply") {
  CHECK(apply(cx_sigma(), abc("ab")).str() == "acbbab");
  CHECK(apply(cx_tau(), abc("acb")).str() == "abcaacacb");
  CHECK(apply(cx_tau(), Word::empty(builtin::abc())).empty());
  const auto ab = Alphabet::make({"a", "b"});
  CHECK_THROWS_AS(apply(Morphism::from_images(ab, ab, {"ab", "a"}), abc("c")), Error);
}

TEST_CASE("compose follows the outer(inner(c)) convention") {
  CHECK(compose(cx_tau(), cx_sigma()).image("a").str() == "abcaacacb");
  CHECK(compose(cx_sigma(), cx_tau()).image("a").str() == "acbbabcbc");
  CHECK(compose(Morphism::identity(builtin::abc()), cx_sigma()) == cx_sigma());

  const auto ab = Alphabet::make({"a", "b"});
  const auto xy = Alphabet::make({"x", "y"});
  const Morphism to_xy = Morphism::from_images(ab, xy, {"xy", "y"});
  CHECK_THROWS_AS(compose(to_xy, to_xy), Error);
}

TEST_CASE("morphisms reject empty images") {
  const auto ab = Alphabet::make({"a", "b"});
  CHECK_THROWS_AS(Morphism::from_images(ab, ab, {"a", ""}), Error);
  CHECK_THROWS_AS(Morphism::from_images(ab, ab, {"a"}), Error);
}

TEST_CASE("is_proper") {
  const auto ab = Alphabet::make({"a", "b"});
  const auto p = is_proper(Morphism::from_images(ab, ab, {"aba", "abba"}));
  REQUIRE(p.has_value());
  CHECK(p->first == 0);
  CHECK(p->second == 0);
  CHECK_FALSE(is_proper(cx_tau()).has_value());
  CHECK_FALSE(is_proper(builtin::st_tau()).has_value());
}

TEST_CASE("constant_length and image_length_bounds") {
  CHECK(constant_length(cx_sigma()) == 3u);
  CHECK_FALSE(constant_length(builtin::st_tau()).has_value());
  const auto a = Alphabet::make({"a"});
  CHECK(constant_length(Morphism::identity(a)) == 1u);
  CHECK(image_length_bounds(builtin::st_sigma()) == std::pair<std::size_t, std::size_t>{1, 2});
}

TEST_CASE("occurrence matrices") {
  const CountMatrix m = occurrence_matrix(cx_sigma());
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(1, 0) == 1);
  CHECK(m.at(2, 0) == 1);
  CHECK(m.at(0, 2) == 0);
  CHECK_FALSE(is_positive(cx_sigma()));
  CHECK_FALSE(is_positive(cx_tau()));
  CHECK(is_positive(compose(cx_sigma(), cx_tau())));
  CHECK(is_positive(compose(cx_tau(), cx_sigma())));
  CHECK(is_positive(compose(cx_sigma(), cx_sigma())));
  CHECK(is_positive(compose(cx_tau(), cx_tau())));
  const auto ab = Alphabet::make({"a", "b"});
  CHECK_FALSE(is_positive(Morphism::from_images(ab, ab, {"aa", "ab"})));
}

TEST_CASE("matrix of a composition is the product of the matrices") {
  oracle::Random rng(21);
  const auto ab = Alphabet::make({"a", "b"});
  const auto xyz = Alphabet::make({"x", "y", "z"});
  for (int trial = 0; trial < 200; ++trial) {
    const Morphism inner = Morphism::from_images(ab, xyz, rng.images("ab", "xyz", 5));
    const Morphism outer = Morphism::from_images(xyz, ab, rng.images("xyz", "ab", 4));
    CHECK(occurrence_matrix(compose(outer, inner)) == occurrence_matrix(outer) * occurrence_matrix(inner));
    CHECK(occurrence_matrix(compose(inner, outer)) == occurrence_matrix(inner) * occurrence_matrix(outer));
  }
}

TEST_CASE("compose and apply agree with string substitution") {
  oracle::Random rng(22);
  const auto ab = Alphabet::make({"a", "b"});
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = rng.images("ab", "ab", 4), g = rng.images("ab", "ab", 4);
    const Morphism mf = Morphism::from_images(ab, ab, f), mg = Morphism::from_images(ab, ab, g);
    const std::string w = rng.word("ab", rng.between(0, 12));
    const std::string expect = oracle::apply(f, "ab", oracle::apply(g, "ab", w));
    CHECK(apply(compose(mf, mg), Word::parse(ab, w)).str() == expect);
    CHECK(apply(mf, apply(mg, Word::parse(ab, w))) == apply(compose(mf, mg), Word::parse(ab, w)));
  }
}

TEST_CASE("composition of proper morphisms is proper") {
  oracle::Random rng(23);
  const auto ab = Alphabet::make({"a", "b"});
  for (int trial = 0; trial < 200; ++trial) {
    const Morphism f = Morphism::from_images(ab, ab, rng.proper_images("ab", "ab", 'a', 'b', 4));
    const Morphism g = Morphism::from_images(ab, ab, rng.proper_images("ab", "ab", 'b', 'b', 4));
    const auto p = is_proper(compose(f, g));
    REQUIRE(p.has_value());
    CHECK(p->first == 0);
    CHECK(p->second == 1);
  }
}

TEST_CASE("apply_prefix truncates without changing the prefix") {
  const Word w = abc("abcab");
  const Word full = apply(cx_sigma(), w);
  for (std::size_t n = 1; n <= full.size(); ++n) {
    const Word p = apply_prefix(cx_sigma(), w, n);
    CHECK(p.size() >= n);
    CHECK(p.prefix(n) == full.prefix(n));
  }
}

TEST_CASE("power") {
  CHECK(power(cx_sigma(), 0) == Morphism::identity(builtin::abc()));
  CHECK(power(cx_sigma(), 2).image("a").str() == "acbcbcbab");
  CHECK(power(builtin::st_tau(), 3).image("1").str() == "1000");
}
