#include <string>

#include "doctest.h"
#include "sadic/builtin.hpp"
#include "sadic/error.hpp"

using namespace sadic;
using namespace sadic::builtin;

namespace {

std::size_t pow3(std::size_t e) {
  std::size_t p = 1;
  while (e--) p *= 3;
  return p;
}

std::string stream(const DirectiveSequence& d, std::size_t n, const Morphism& first, char a, char b) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(d.at(i) == first ? a : b);
  return s;
}

}  // namespace

TEST_CASE("counterexample morphisms") {
  CHECK(cx_sigma().str().find("a -> acb") != std::string::npos);
  CHECK(cx_tau().image("c").str() == "aac");
  CHECK_FALSE(is_proper(compose(cx_sigma(), cx_tau())).has_value());
  CHECK(counterexample_directive().primitivity_constant() == 1u);
  for (std::size_t k = 1; k <= 8; ++k) {
    CHECK(counterexample_block_start(k) == (k - 1) * (k + 2) / 2);
    CHECK(counterexample_directive().at(counterexample_block_start(k + 1) - 1) == cx_tau());
  }
}

TEST_CASE("rho lengths") {
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(rho_exponent(n) == n * (n + 3) / 2);
    const Morphism r = rho(n);
    CHECK(constant_length(r) == pow3(rho_exponent(n)));
    CHECK(r == telescope(counterexample_directive(), 0, counterexample_block_start(n + 1) - 1));
  }
  CHECK(sigma_power_tau(2) == compose(power(cx_sigma(), 2), cx_tau()));
}

TEST_CASE("ca gaps after sigma^n tau") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const GapLemmaReport r = verify_gap_lemma(n, 20000);
    CHECK(r.bound == pow3(n + 1));
    CHECK(r.conclusive);
    CHECK(r.holds);
    CHECK(r.min_gap == pow3(n + 1));
    CHECK_FALSE(r.strict);
  }
  const Word z = Word::parse(abc(), "ab");
  const GapLemmaReport few = verify_gap_lemma(1, z);
  CHECK_FALSE(few.conclusive);
}

TEST_CASE("x is not linearly recurrent") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const NotLrReport r = verify_not_lr(n, 100000);
    CHECK(r.passed);
    CHECK(r.exact_twice);
    CHECK(r.return_length >= r.bound);
    CHECK(r.return_length == pow3(n + 2));
    CHECK(r.first_ca == pow3(n + 2) - 1);
    CHECK(r.ratio_num == r.return_length);
    CHECK(r.ratio_den == 2);
    CHECK(r.rho_ca_occurrences == 2);
    REQUIRE(r.occurs_in_x.has_value());
    CHECK(*r.occurs_in_x);
  }
}

TEST_CASE("Sturmian streams") {
  const DirectiveSequence golden = sturmian_directive(SturmianSpec::golden());
  CHECK(stream(golden, 8, st_sigma(), 'S', 'T') == "STSTSTST");
  CHECK(generate(golden, 0, 13).str() == "0110110101101");

  const DirectiveSequence linear = sturmian_directive(SturmianSpec::linear());
  CHECK(stream(linear, 10, st_sigma(), 'S', 'T') == "TSSTTTSSSS");
  const DirectiveSequence blocks = sturmian_block_directive(SturmianSpec::linear());
  CHECK(blocks.at(0) == st_tau());
  CHECK(blocks.at(1) == power(st_sigma(), 2));
  CHECK(blocks.at(2) == power(st_tau(), 3));

  const SturmianSpec cf = SturmianSpec::from_continued_fraction({0, 2, 3});
  CHECK(cf.quotient(1) == 1);
  CHECK(cf.quotient(2) == 3);
  CHECK(cf.quotient(7) == 3);
  const SturmianSpec finite = SturmianSpec::from_quotients({1, 2}, false);
  CHECK(finite.count() == 2u);
  CHECK(stream(sturmian_directive(finite), 3, st_sigma(), 'S', 'T') == "TSS");
  CHECK_FALSE(sturmian_directive(finite).has(3));
  CHECK_THROWS_AS(SturmianSpec::from_quotients({}), Error);
  CHECK_THROWS_AS(SturmianSpec::from_continued_fraction({1, 2}), Error);
  CHECK_THROWS_AS(SturmianSpec::golden().quotient(0), Error);
}

TEST_CASE("block identities") {
  const BlockIdentityReport r = verify_block_identities(2, 1, 1);
  CHECK(r.image0.str() == "0100");
  CHECK(r.passed());
  for (std::size_t i = 1; i <= 6; ++i)
    for (std::size_t j = 1; j <= 6; ++j)
      for (std::size_t k = 1; k <= 6; ++k) CHECK(verify_block_identities(i, j, k).passed());
  CHECK_THROWS_AS(verify_block_identities(0, 3, 1), Error);
}

TEST_CASE("length-2 gaps of Sturmian blocks") {
  const Word tail = generate(sturmian_directive(SturmianSpec::golden()), 0, 1000);
  for (std::size_t i = 1; i <= 4; ++i)
    for (std::size_t j = 1; j <= 4; ++j)
      for (std::size_t k = 1; k <= 4; ++k) {
        const SturmianGapReport r = verify_sturmian_gaps(i, j, k, tail);
        CHECK(r.holds);
        CHECK(r.only_expected_factors);
        CHECK(r.bound == 2 * std::max({i, j, k}) + 3);
        for (const SturmianGapRow& row : r.rows) CHECK(row.within_sub_bound);
      }
}

TEST_CASE("Sturmian LR verdicts") {
  const SturmianVerdict golden = sturmian_lr_verdict(SturmianSpec::golden(), 4, 20000, 60, 2);
  CHECK(golden.head_dropped);
  CHECK(golden.bounds_hold);
  CHECK(golden.trend.consistent_with_lr);
  CHECK(golden.profile.best_num <= 4 * golden.profile.best_den);
  for (const SturmianVerdictRow& row : golden.rows) {
    CHECK(row.bound == 5);
    CHECK(row.dn.value == 5u);
  }
  const SturmianVerdict linear = sturmian_lr_verdict(SturmianSpec::linear(), 3, 20000, 60, 2);
  CHECK_FALSE(linear.head_dropped);
  CHECK(linear.bounds_hold);
  CHECK(linear.profile.best_num > 4 * linear.profile.best_den);
}

TEST_CASE("randomized coding and oracle self-checks") {
  const CodingCheckReport c = check_coding(2000, 3);
  CHECK(c.passed());
  CHECK(c.pairs == 2000);
  CHECK(c.tables >= 10);
  const OracleCheckReport o = check_return_oracle(100, 500, 3);
  CHECK(o.passed());
  CHECK(o.instances == 100);
  CHECK_THROWS_AS(check_coding(0), Error);
}
