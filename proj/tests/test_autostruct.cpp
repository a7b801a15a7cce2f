#include <catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "selfsim/selfsim.hpp"

using namespace selfsim;

namespace {

  std::vector<std::string> const Z2{"x", "x^-1", "y", "y^-1"};

  Word z(std::string const& s) {
    return parse_generator_word(Z2, s);
  }

  std::string names(PairAlphabet const& pa, Word const& w) {
    std::string out;
    for (letter_t a : w) {
      out += pa.names()[a];
    }
    return out;
  }

  // Acceptor for a single word, label L.
  Acceptor single_word(std::vector<std::string> const& alphabet, Word const& w) {
    Acceptor a(alphabet, w.size() + 1, 0);
    a.add_label(LANGUAGE_LABEL);
    for (std::size_t i = 0; i < w.size(); ++i) {
      a.set_next(static_cast<state_t>(i), w[i], static_cast<state_t>(i + 1));
    }
    a.set_accepting(LANGUAGE_LABEL, static_cast<state_t>(w.size()));
    return a;
  }

  // Coefficients of num / den as a power series, by long division.
  std::vector<std::int64_t> divide(std::vector<std::int64_t> num, std::vector<std::int64_t> const& den,
                                   std::size_t terms) {
    num.resize(terms + 1 + den.size(), 0);
    std::vector<std::int64_t> q;
    for (std::size_t n = 0; n <= terms; ++n) {
      std::int64_t c = num[n] / den[0];
      q.push_back(c);
      for (std::size_t i = 0; i < den.size(); ++i) {
        num[n + i] -= c * den[i];
      }
    }
    return q;
  }

  Word random_surface_word(std::mt19937_64& rng, std::size_t max_len) {
    std::size_t const len = rng() % (max_len + 1);
    return oracle::random_word(rng, 4 * 2, len);
  }

  Word concat(std::initializer_list<Word> ws) {
    Word out;
    for (auto const& w : ws) {
      out.insert(out.end(), w.begin(), w.end());
    }
    return out;
  }

  // A random conjugate c r c^-1 of the relator or its inverse.
  Word conjugated_relator(std::mt19937_64& rng, SurfaceGroup const& p) {
    Word c = random_surface_word(rng, 5);
    Word r = rng() % 2 ? p.relator() : inverse_word(p.relator());
    return concat({c, r, inverse_word(c)});
  }

}  // namespace

TEST_CASE("padded pairs of words", "[autostruct]") {
  PairAlphabet const pa(Z2);
  CHECK(names(pa, pad_pairs(pa, z("x x"), z("y"))) == "(x,y)(x,1)");
  CHECK(pad_pairs(pa, Word{}, Word{}).empty());
  PairAlphabet const abc({"a", "b", "c"});
  CHECK(names(abc, pad_pairs(abc, Word{0}, Word{0, 1, 2})) == "(a,a)(1,b)(1,c)");
}

TEST_CASE("the Z^2 structure", "[autostruct]") {
  auto const s = z2_structure();
  CHECK(s.alphabet == Z2);
  CHECK(s.language.accepts(LANGUAGE_LABEL, z("x x y^-1")));
  CHECK_FALSE(s.language.accepts(LANGUAGE_LABEL, z("x x^-1")));
  CHECK_FALSE(s.language.accepts(LANGUAGE_LABEL, z("y x")));
  PairAlphabet const pa = s.pairs();
  CHECK(s.multiplier.accepts("x", pad_pairs(pa, z("x"), Word{})));
  CHECK(s.multiplier.accepts("1", pad_pairs(pa, z("x y"), z("x y"))));
  CHECK_FALSE(s.multiplier.accepts("1", pad_pairs(pa, z("x y"), z("y x"))));

  // On pairs of normal forms, label a accepts exactly when pi(u) = pi(v) a.
  auto const normal = enumerate(s.language, LANGUAGE_LABEL, 4);
  CHECK(normal.size() == 41);
  Acceptor const generic = z2_multiplier(s.language, 2);
  for (auto const& u : normal) {
    for (auto const& v : normal) {
      Word const p  = pad_pairs(pa, u, v);
      auto const du = z2_vector(u);
      auto const dv = z2_vector(v);
      CHECK(s.multiplier.accepts("1", p) == (du == dv));
      CHECK(generic.accepts("1", p) == (du == dv));
      for (letter_t a = 0; a < 4; ++a) {
        auto const da = z2_vector(Word{a});
        bool const expect = du.first == dv.first + da.first && du.second == dv.second + da.second;
        CHECK(s.multiplier.accepts(Z2[a], p) == expect);
        CHECK(generic.accepts(Z2[a], p) == expect);
      }
    }
  }
  // Text forms round-trip.
  auto const again = structure_from_text(to_text(s.language, "z2_language"),
                                         to_text(s.multiplier, "z2_multiplier"));
  CHECK(enumerate(again.language, LANGUAGE_LABEL, 4) == normal);
}

TEST_CASE("data files hold the Z^2 structure", "[autostruct]") {
  auto const lang = read_file(std::string(SELFSIM_DATA_DIR) + "/z2_language.fsa");
  auto const mult = read_file(std::string(SELFSIM_DATA_DIR) + "/z2_multiplier.fsa");
  auto const s    = structure_from_text(lang, mult);
  auto const ref  = z2_structure();
  CHECK(enumerate(s.language, LANGUAGE_LABEL, 5) == enumerate(ref.language, LANGUAGE_LABEL, 5));
  CHECK(to_text(s.multiplier, "z2_multiplier") == to_text(ref.multiplier, "z2_multiplier"));
}

TEST_CASE("malformed structures are rejected", "[autostruct]") {
  auto s = z2_structure();
  s.alphabet.pop_back();
  CHECK_THROWS_AS(s.validate(), Error);
  auto t     = z2_structure();
  t.language = select_label(t.language, LANGUAGE_LABEL, "other");
  try {
    t.validate();
    FAIL("expected an error");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::malformed_structure);
  }
  // Without the empty word there is nowhere to start.
  auto u     = z2_structure();
  u.language = bool_op(u.language, single_word(Z2, Word{}), BoolOp::difference);
  try {
    (void)wp_quadratic(u, z("x"));
    FAIL("expected an error");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::malformed_structure);
  }
}

TEST_CASE("word problem through the multipliers", "[autostruct]") {
  auto const s = z2_structure();
  CHECK(wp_quadratic(s, z("x y x^-1 y^-1")).is_identity);
  CHECK_FALSE(wp_quadratic(s, z("x y")).is_identity);
  CHECK(normal_form(s, z("x y x")) == z("x x y"));
  CHECK(wp_quadratic(s, z("x^3 y^-2 x^-3 y^2")).is_identity);
  CHECK(wp_quadratic(s, Word{}).is_identity);

  std::mt19937_64 rng(83);
  for (int i = 0; i < 1000; ++i) {
    Word const w  = oracle::random_word(rng, 4, rng() % 51);
    auto const r  = wp_quadratic(s, w);
    auto const v  = z2_vector(w);
    CHECK(r.is_identity == (v == std::pair<std::int64_t, std::int64_t>{0, 0}));
    CHECK(z2_vector(r.normal_form) == v);
    CHECK(s.language.accepts(LANGUAGE_LABEL, r.normal_form));
    CHECK(r.normal_form.size()
          == static_cast<std::size_t>(std::llabs(v.first) + std::llabs(v.second)));
  }
}

TEST_CASE("uniqueness of normal forms", "[autostruct]") {
  auto const s = z2_structure();
  auto const u = make_unique(s);
  auto const before = enumerate(s.language, LANGUAGE_LABEL, 6);
  auto const after  = enumerate(u.language, LANGUAGE_LABEL, 6);
  CHECK(after == before);
  // Exactly one word per element of the ball of radius 6.
  std::map<std::pair<std::int64_t, std::int64_t>, int> seen;
  for (auto const& w : after) {
    ++seen[z2_vector(w)];
  }
  CHECK(seen.size() == after.size());
  CHECK(seen.size() == 85);  // 2 r^2 + 2 r + 1 at r = 6

  // Adding "y x" to the language: make_unique removes it again.
  Acceptor const extended = minimize(
      bool_op(s.language, single_word(Z2, z("y x")), BoolOp::unite));
  REQUIRE(extended.accepts(LANGUAGE_LABEL, z("y x")));
  AutomaticStructure x{Z2, extended, z2_multiplier(extended, 2)};
  x.validate();
  auto const fixed = make_unique(x);
  CHECK_FALSE(fixed.language.accepts(LANGUAGE_LABEL, z("y x")));
  CHECK(fixed.language.accepts(LANGUAGE_LABEL, z("x y")));
  CHECK(enumerate(fixed.language, LANGUAGE_LABEL, 6) == before);

  // An empty language stays empty without error.
  Acceptor empty(Z2, 1, 0);
  empty.add_label(LANGUAGE_LABEL);
  AutomaticStructure e{Z2, empty, z2_multiplier(empty, 2)};
  CHECK(is_empty(make_unique(e).language, LANGUAGE_LABEL).empty);
}

TEST_CASE("fellow traveller property", "[autostruct]") {
  auto const s = z2_structure();
  DistanceOracle const l1 = [](Word const& u, Word const& v) { return z2_distance(u, v); };
  CHECK(fellow_travel_check(s, 2, 8, l1).holds);
  auto const bad = fellow_travel_check(s, 1, 8, l1);
  REQUIRE_FALSE(bad.holds);
  CHECK(z2_distance(bad.u, bad.v) <= 1);
  Word const pu(bad.u.begin(), bad.u.begin() + std::min(bad.j, bad.u.size()));
  Word const pv(bad.v.begin(), bad.v.begin() + std::min(bad.j, bad.v.size()));
  CHECK(z2_distance(pu, pv) == 2);
  CHECK(fellow_travel_check(s, 16, 8, l1).holds);
}

TEST_CASE("surface group presentation", "[autostruct]") {
  SurfaceGroup const p(2);
  CHECK(p.alphabet().size() == 8);
  CHECK(p.relator().size() == 8);
  CHECK(p.rstar().size() == 16);
  CHECK(p.to_string(p.relator()) == "a1^-1 b1^-1 a1 b1 a2^-1 b2^-1 a2 b2");
  CHECK(p.parse("a1 b2^-1") == Word{0, 7});
  CHECK_THROWS_AS(SurfaceGroup(1), Error);
}

TEST_CASE("Dehn's algorithm", "[autostruct]") {
  SurfaceGroup const p(2);
  CHECK(dehn_reduce(p, p.relator()).empty());
  CHECK(dehn_reduce(p, inverse_word(p.relator())).empty());
  CHECK(dehn_reduce(p, p.parse("a1 a1^-1")).empty());
  CHECK(dehn_reduce(p, p.parse("a1 b1")) == p.parse("a1 b1"));

  std::mt19937_64 rng(89);
  for (int i = 0; i < 100; ++i) {
    Word w;
    for (std::size_t k = 0, n = 1 + rng() % 3; k < n; ++k) {
      w = concat({w, conjugated_relator(rng, p)});
    }
    CHECK(dehn_reduce(p, w).empty());
  }
  // Output is shorter or equal and free of long relator pieces.
  for (int i = 0; i < 300; ++i) {
    Word const w = random_surface_word(rng, 30);
    Word const r = dehn_reduce(p, w);
    CHECK(r.size() <= w.size());
    CHECK(oracle::reduce(r) == r);
    for (auto const& rel : p.rstar()) {
      Word const piece(rel.begin(), rel.begin() + 5);
      CHECK(std::search(r.begin(), r.end(), piece.begin(), piece.end()) == r.end());
    }
  }
}

TEST_CASE("equality in the surface group", "[autostruct]") {
  SurfaceGroup const p(2);
  CHECK(surface_equal(p, p.relator(), Word{}));
  CHECK_FALSE(surface_equal(p, p.parse("a1"), p.parse("b1")));
  std::mt19937_64 rng(97);
  for (int i = 0; i < 20; ++i) {
    Word const u = random_surface_word(rng, 8);
    Word const v = concat({conjugated_relator(rng, p), u});
    Word const w = concat({v, conjugated_relator(rng, p)});
    CHECK(surface_equal(p, u, v));
    CHECK(surface_equal(p, v, u));
    CHECK(surface_equal(p, u, u));
    CHECK(surface_equal(p, u, w));
    Word const x = concat({u, p.parse("a2")});
    CHECK_FALSE(surface_equal(p, u, x));
    CHECK_FALSE(surface_equal(p, x, w));
  }
  CHECK(surface_distance(p, p.parse("a1"), p.parse("a1")) == 0);
  CHECK(surface_distance(p, Word{}, p.parse("a1 b1")) == 2);
  CHECK(surface_distance(p, Word{}, p.parse("a1 b1 a2"), 2) == 3);
}

TEST_CASE("growth series of surface groups", "[autostruct]") {
  auto const c = cannon_series(2, 4);
  std::vector<BigInt> const expect{1, 8, 56, 392, 2736};
  CHECK(c == expect);
  for (std::size_t g = 2; g <= 4; ++g) {
    std::int64_t const        k = static_cast<std::int64_t>(4 * g - 2);
    std::vector<std::int64_t> num(2 * g + 1, 2), den(2 * g + 1, -k);
    num.front() = num.back() = den.front() = den.back() = 1;
    auto const oracle = divide(num, den, 8);
    auto const series = cannon_series(g, 8);
    REQUIRE(series.size() == 9);
    for (std::size_t n = 0; n <= 8; ++n) {
      CHECK(series[n] == oracle[n]);
      CHECK(series[n] > 0);
      if (n >= 1) {
        CHECK(series[n] <= series[n - 1] * BigInt(4 * g));
      }
      if (n >= 2) {
        CHECK(series[n] <= series[n - 1] * BigInt(4 * g - 1));
      }
    }
    CHECK(series[1] == BigInt(4 * g));
  }
  // Large terms need more than 64 bits.
  CHECK(cannon_series(2, 40).back() > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("surface group ball enumeration", "[autostruct]") {
  auto const t = surface_growth_bfs(2, 3);
  CHECK(t.spheres == std::vector<std::uint64_t>{1, 8, 56, 392});
  CHECK(t.balls.back() == 457);
  CHECK(surface_growth_bfs(2, 0).spheres == std::vector<std::uint64_t>{1});
  CHECK(surface_growth_bfs(2, 1).spheres == std::vector<std::uint64_t>{1, 8});
  auto const c = cannon_series(2, 3);
  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK(BigInt(t.spheres[n]) == c[n]);
  }
}
