#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "sadic/error.hpp"
#include "sadic/formats.hpp"

using namespace sadic;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::invalid_argument;
}

const std::filesystem::path data = SADIC_TEST_DATA;

}  // namespace

TEST_CASE("sequences") {
  CHECK(parse_sequence("# comment\nabc\nab\n").str() == "abcab");
  const Word tokens = parse_sequence("x1 x2\nx1\n");
  CHECK(tokens.size() == 3);
  CHECK(tokens.alphabet()->size() == 2);
  CHECK(code_of([] { parse_sequence("# only a comment\n"); }) == ErrorCode::parse);
  const auto ab = Alphabet::make({"a", "b"});
  CHECK(code_of([&] { parse_sequence("abc", ab); }) == ErrorCode::alphabet_mismatch);
  CHECK(code_of([] { read_sequence("/nonexistent/file"); }) == ErrorCode::io);
}

TEST_CASE("windows") {
  const TwoSidedWindow x = parse_window("origin: 2\nabab\n");
  CHECK(x.origin() == 2);
  CHECK(x.slice(-2, 0).str() == "ab");
  CHECK(parse_window("abab").origin() == 0);
  CHECK(code_of([] { parse_window("origin: -1\nab"); }) == ErrorCode::parse);
  CHECK(code_of([] { parse_window("origin: 1\norigin: 1\nab"); }) == ErrorCode::parse);
  const TwoSidedWindow f = read_window(data / "fibonacci.window");
  CHECK(f.origin() == 1000);
  CHECK(f.word().size() == 3000);
}

TEST_CASE("morphisms") {
  const Morphism m = parse_morphism("a -> ab\nb -> a\n");
  CHECK(m.image("a").str() == "ab");
  CHECK(parse_morphism(m.str()) == m);
  const Morphism d = parse_morphism("domain: b a\nb -> a\na -> ab\n");
  CHECK(d.domain()->token(0) == "b");
  const Morphism mixed = parse_morphism("codomain: x y z\n0 -> xy\n1 -> z\n");
  CHECK(mixed.codomain()->size() == 3);
  CHECK(code_of([] { parse_morphism("a ab\n"); }) == ErrorCode::parse);
  CHECK(code_of([] { parse_morphism("a ->\n"); }) == ErrorCode::parse);
  CHECK(code_of([] { parse_morphism("a -> b\na -> a\n"); }) == ErrorCode::parse);
  CHECK(code_of([] { parse_morphism("# nothing\n"); }) == ErrorCode::parse);
  CHECK(code_of([] { parse_morphism("domain: a b c\na -> ab\nb -> a\n"); }) == ErrorCode::parse);
  CHECK(read_morphism(data / "fibonacci.morphism") == m);
}

TEST_CASE("directives") {
  const DirectiveSequence f = read_directive(data / "fibonacci.directive");
  CHECK(f.has(1000));
  CHECK(generate(f, 0, 8).str() == "abaababa");
  const DirectiveSequence c = read_directive(data / "counterexample.directive");
  CHECK(generate(c, 0, 9).str() == "acbbabcbc");
  CHECK(parse_directive("pattern: golden\n").seed() == "0");
  CHECK(parse_directive("pattern: sturmian 0,1,2\n").at(0) == parse_directive("pattern: sturmian 0,1,2\n").at(0));
  CHECK(code_of([] { parse_directive("seed: a\n"); }) == ErrorCode::parse);
  CHECK(code_of([] { parse_directive("pattern: golden\npattern: golden\n"); }) == ErrorCode::parse);
  CHECK(code_of([] { parse_directive("pattern: golden extra\n"); }) == ErrorCode::parse);
  CHECK(code_of([] { parse_directive("pattern: nosuch\n"); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { parse_directive("seed: a\nuse missing.morphism\n", data); }) == ErrorCode::io);
  CHECK(code_of([] { parse_directive("seed: a\nbogus\n"); }) == ErrorCode::parse);
}

TEST_CASE("builtin names") {
  CHECK(builtin_directive("golden").has(100));
  CHECK(builtin_directive("sturmian:0,2,3").has(100));
  CHECK_FALSE(builtin_directive("sturmian-finite:0,2,3").has(100));
  CHECK(code_of([] { builtin_directive("sturmian:0,x"); }) == ErrorCode::parse);
  CHECK(code_of([] { builtin_directive("fibonacci"); }) == ErrorCode::invalid_argument);
}
