#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "seqpat/errors.hpp"
#include "seqpat/pattern.hpp"
#include "seqpat/sequence.hpp"
#include "test_util.hpp"

using namespace seqpat;

namespace {

Alphabet letters(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return Alphabet::from_names(std::move(names));
}

std::vector<std::uint32_t> ids_of(const SymbolSequence& s) {
  std::vector<std::uint32_t> out;
  for (Symbol sym : s.symbols()) out.push_back(sym.id);
  return out;
}

}  // namespace

TEST_SUITE("seq_core") {

TEST_CASE("alphabet interning and lookup") {
  const Alphabet a = Alphabet::from_names({"a", "b"});
  CHECK(a.size() == 2);
  CHECK(a.name(Symbol{0}) == "a");
  CHECK(a.name(Symbol{1}) == "b");
  CHECK(a.find("b").has_value());
  CHECK(a.find("b")->id == 1);
  CHECK_FALSE(a.find("c").has_value());
  CHECK(a.require("a") == Symbol{0});
  CHECK_THROWS_AS(a.require("c"), UnknownSymbolError);
  CHECK_THROWS_AS(Alphabet::from_names({"a", "a"}), ConfigError);
  CHECK_THROWS_AS(Alphabet::from_names({"a", ""}), ConfigError);
}

TEST_CASE("parsing builds the alphabet in first-appearance order") {
  const auto [alphabet, s] = parse_sequence("a b a");
  CHECK(alphabet.names() == std::vector<std::string>{"a", "b"});
  CHECK(s.length() == 3);
  CHECK(ids_of(s) == std::vector<std::uint32_t>{0, 1, 0});
  CHECK(s.count(Symbol{0}) == 2);
  CHECK(s.count(Symbol{1}) == 1);
  CHECK(s.counts() == std::vector<std::size_t>{2, 1});
}

TEST_CASE("parsing skips comments and extra whitespace") {
  const auto [alphabet, s] = parse_sequence("# header line\n  a\tb # trailing note\n\n b\n");
  CHECK(alphabet.names() == std::vector<std::string>{"a", "b"});
  CHECK(ids_of(s) == std::vector<std::uint32_t>{0, 1, 1});
}

TEST_CASE("parsing rejects input with no tokens") {
  CHECK_THROWS_AS(parse_sequence(""), EmptySequenceError);
  CHECK_THROWS_AS(parse_sequence("# just a comment\n   \n"), EmptySequenceError);
}

TEST_CASE("parsing against a fixed alphabet") {
  const Alphabet ab = letters(2);
  const SymbolSequence s = parse_sequence("b a b", ab);
  CHECK(ids_of(s) == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(s.alphabet_size() == 2);
  CHECK_THROWS_AS(parse_sequence("a c", ab), UnknownSymbolError);
}

TEST_CASE("render and parse round-trip") {
  const auto [alphabet, s] = parse_sequence("a b a a");
  CHECK(render_sequence(s, alphabet) == "a b a a");

  std::mt19937_64 rng(101);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t m = 1 + rng() % 4;
    const Alphabet names = letters(m);
    const SymbolSequence original = testutil::random_sequence(rng, 1 + rng() % 30, m);
    const SymbolSequence again = parse_sequence(render_sequence(original, names), names);
    REQUIRE(ids_of(again) == ids_of(original));
  }
}

TEST_CASE("pattern construction and accessors") {
  const Pattern p = Pattern::single(Symbol{0}, 3, 1);
  CHECK(p.period() == 3);
  CHECK(p.arity() == 1);
  CHECK_FALSE(p.is_concrete());
  CHECK_FALSE(p.slot(0).has_value());
  CHECK(p.slot(1) == Pattern::Slot{Symbol{0}});

  const Pattern c = Pattern::concrete({Symbol{0}, Symbol{1}});
  CHECK(c.is_concrete());
  CHECK(c.concrete_symbols() == std::vector<Symbol>{Symbol{0}, Symbol{1}});

  CHECK_THROWS_AS(Pattern(std::vector<Pattern::Slot>{}), InvalidPatternError);
  CHECK_THROWS_AS(Pattern({std::nullopt, std::nullopt}), InvalidPatternError);
  CHECK_THROWS_AS(Pattern::single(Symbol{0}, 2, 2), InvalidPatternError);
}

TEST_CASE("pattern text forms") {
  const Alphabet ab = letters(2);
  const Pattern p = parse_pattern("a,*,b", ab);
  CHECK(p.period() == 3);
  CHECK(p.arity() == 2);
  CHECK(render_pattern(p, ab) == "a * b");
  CHECK(parse_pattern(" a , * , b ", ab) == p);
  CHECK_THROWS_AS(parse_pattern("*,*", ab), InvalidPatternError);
  CHECK_THROWS_AS(parse_pattern("", ab), InvalidPatternError);
  CHECK_THROWS_AS(parse_pattern("a,,b", ab), InvalidPatternError);
  CHECK_THROWS_AS(parse_pattern("a,z", ab), UnknownSymbolError);
}

TEST_CASE("slot ordering ranks wildcards before symbols") {
  const Alphabet ab = letters(2);
  const Pattern wild_first = parse_pattern("*,b", ab);
  const Pattern concrete_first = parse_pattern("a,*", ab);
  CHECK(wild_first < concrete_first);
  CHECK(parse_pattern("a", ab) < parse_pattern("a,*", ab));  // prefix orders first
  CHECK(parse_pattern("a,a", ab) < parse_pattern("a,b", ab));
}

TEST_CASE("window matching at a position") {
  const auto [ab, s1] = parse_sequence("a b b");
  const Pattern head = parse_pattern("a,*,*", ab);
  CHECK(matches_at(head, s1, 0));

  const SymbolSequence s2 = parse_sequence("b a a", ab);
  CHECK_FALSE(matches_at(head, s2, 0));

  const Pattern pair = parse_pattern("a,b", ab);
  const SymbolSequence s3 = parse_sequence("a a b", ab);
  CHECK_FALSE(matches_at(pair, s3, 0));
  CHECK(matches_at(pair, s3, 1));
  CHECK_THROWS_AS(matches_at(pair, s3, 2), RangeError);
  CHECK_THROWS_AS(matches_at(pair, s3, 7), RangeError);
}

TEST_CASE("match enumeration is ascending and complete") {
  const auto [ab, s] = parse_sequence("a b a a");
  CHECK(find_matches(parse_pattern("a", ab), s) == std::vector<std::size_t>{0, 2, 3});

  const SymbolSequence s2 = parse_sequence("a a b", ab);
  CHECK(find_matches(parse_pattern("a,*", ab), s2) == std::vector<std::size_t>{0, 1});
  const SymbolSequence s3 = parse_sequence("b b b", ab);
  CHECK(find_matches(parse_pattern("a,b", ab), s3).empty());
  CHECK(find_matches(parse_pattern("a,*,*,*", ab), s3).empty());  // window larger than s
}

TEST_CASE("match enumeration agrees with position-wise checks") {
  std::mt19937_64 rng(202);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t m = 1 + rng() % 3;
    const SymbolSequence s = testutil::random_sequence(rng, 1 + rng() % 20, m);
    const Pattern p = testutil::random_pattern(rng, 1 + rng() % 3, m);
    const auto matches = find_matches(p, s);
    CHECK(std::is_sorted(matches.begin(), matches.end()));
    std::set<std::size_t> hit(matches.begin(), matches.end());
    if (p.period() > s.length()) {
      CHECK(matches.empty());
      continue;
    }
    for (std::size_t pos = 0; pos + p.period() <= s.length(); ++pos) {
      CHECK(matches_at(p, s, pos) == (hit.count(pos) > 0));
    }
  }
}

TEST_CASE("generalizations enumerate proper wildcard replacements") {
  const Alphabet ab = letters(3);
  const auto two = generalizations(parse_pattern("a,b,*", ab));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == parse_pattern("*,b,*", ab));
  CHECK(two[1] == parse_pattern("a,*,*", ab));

  CHECK(generalizations(parse_pattern("a", ab)).empty());
  CHECK(generalizations(parse_pattern("a,*", ab)).empty());

  const auto six = generalizations(parse_pattern("a,b,c", ab));
  CHECK(six.size() == 6);
  CHECK(std::is_sorted(six.begin(), six.end()));
}

TEST_CASE("every generalization matches wherever the pattern does") {
  std::mt19937_64 rng(303);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t m = 1 + rng() % 3;
    const SymbolSequence s = testutil::random_sequence(rng, 1 + rng() % 25, m);
    const Pattern p = testutil::random_pattern(rng, 1 + rng() % 3, m);
    const auto base = find_matches(p, s);
    for (const Pattern& g : generalizations(p)) {
      CHECK(g.period() == p.period());
      CHECK(g.arity() < p.arity());
      const auto wider = find_matches(g, s);
      CHECK(std::includes(wider.begin(), wider.end(), base.begin(), base.end()));
    }
  }
}

}  // TEST_SUITE
