#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "selfsim/selfsim.hpp"

using namespace selfsim;

namespace {

  // Reference free reduction on (symbol, exponent) pairs with a stack.
  GroupWord stack_reduce(GroupWord const& w) {
    std::vector<GroupLetter> st;
    for (auto const& l : w) {
      if (!st.empty() && st.back().symbol == l.symbol && st.back().exp == -l.exp) {
        st.pop_back();
      } else {
        st.push_back(l);
      }
    }
    return GroupWord(st);
  }

}  // namespace

TEST_CASE("word syntax", "[words]") {
  CHECK(parse_word("a b^-1 c'").to_string() == "a b^-1 c^-1");
  CHECK(parse_word("1").empty());
  CHECK(parse_word("").empty());
  CHECK(parse_word("(a b)^2").to_string() == "a b a b");
  CHECK(parse_word("(a b)^-1").to_string() == "b^-1 a^-1");
  CHECK(parse_word("[x, y]").to_string() == "x^-1 y^-1 x y");
  CHECK(parse_word("x^y").to_string() == "y^-1 x y");
  CHECK(parse_word("d^{[a,c] a}") == conjugate(parse_word("d"), parse_word("[a,c] a")));
  CHECK(parse_word("3z^-1 3z+1").to_string() == "3z^-1 3z+1");
  CHECK(parse_word("t^3").size() == 3);
  CHECK_THROWS_AS(parse_word("[a, b"), Error);
  CHECK_THROWS_AS(parse_word("a^"), Error);
}

TEST_CASE("free reduction", "[words]") {
  CHECK(free_reduce(parse_word("t t^-1")).empty());
  CHECK(free_reduce(parse_word("a b b^-1 a")) == parse_word("a a"));
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    GroupWord w = oracle::random_group_word(rng, {"a", "b", "c"}, 20);
    CHECK(free_reduce(w * w.inverse()).empty());
    GroupWord r = free_reduce(w);
    CHECK(r == stack_reduce(w));
    CHECK(free_reduce(r) == r);
    CHECK(r.size() <= w.size());
    CHECK(is_freely_reduced(r));
  }
}

TEST_CASE("substitution endomorphisms", "[words]") {
  Endomorphism const sigma = grigorchuk_sigma();
  CHECK(substitute(sigma, parse_word("a")) == parse_word("a c a"));
  CHECK(substitute(sigma, parse_word("b c d")) == parse_word("d b c"));
  CHECK(substitute(sigma, substitute(sigma, parse_word("a"))) == parse_word("a c a b a c a"));
  // Unlisted symbols map to themselves.
  CHECK(substitute(sigma, parse_word("z")) == parse_word("z"));
  std::mt19937_64 rng(37);
  for (int i = 0; i < 100; ++i) {
    GroupWord u = oracle::random_group_word(rng, {"a", "b", "c", "d"}, 1 + rng() % 8);
    GroupWord v = oracle::random_group_word(rng, {"a", "b", "c", "d"}, 1 + rng() % 8);
    CHECK(sigma(u * v) == sigma(u) * sigma(v));
    CHECK(free_reduce(sigma(u.inverse())) == free_reduce(sigma(u).inverse()));
  }
}

TEST_CASE("relator families", "[words]") {
  auto base = grigorchuk_base_relators();
  CHECK(relator_family(base, grigorchuk_sigma(), 0) == base);
  auto fam = relator_family(base, grigorchuk_sigma(), 2);
  CHECK(fam.size() == 3 * base.size());
  for (auto const& r : fam) {
    CHECK(is_freely_reduced(r));
  }
  CHECK(fam[base.size()] == free_reduce(grigorchuk_sigma()(base[0])));
  CHECK(relator_family({}, grigorchuk_sigma(), 3).empty());

  // Basilica: sigma^(2j) and sigma^(2j+1) of [b, b^a] are the two relators
  // for p = 2^j.
  auto bas = relator_family(basilica_base_relators(), basilica_sigma(), 5);
  REQUIRE(bas.size() == 6);
  for (int j = 0; j < 3; ++j) {
    std::string const p  = std::to_string(1 << j);
    std::string const p2 = std::to_string(2 << j);
    CHECK(bas[2 * j] == free_reduce(parse_word("[b^" + p + ", (b^" + p + ")^{a^" + p + "}]")));
    CHECK(bas[2 * j + 1]
          == free_reduce(parse_word("[a^" + p2 + ", (a^" + p2 + ")^{b^" + p + "}]")));
  }
}
