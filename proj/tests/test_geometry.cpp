#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "selfsim/selfsim.hpp"

using namespace selfsim;

namespace {

  std::vector<GroupWord> words(std::vector<std::string> const& ws) {
    std::vector<GroupWord> out;
    for (auto const& w : ws) {
      out.push_back(parse_word(w));
    }
    return out;
  }

  std::size_t index_of(Word const& w, std::size_t k) {
    std::size_t x = 0;
    for (letter_t a : w) {
      x = x * k + a;
    }
    return x;
  }

  // Floyd-Warshall distances and every ordered quadruple.
  std::size_t delta_oracle(Graph const& g) {
    std::size_t const                     n   = g.size();
    std::size_t const                     inf = n + 1;
    std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
    for (std::size_t v = 0; v < n; ++v) {
      d[v][v] = 0;
      for (std::size_t w : g.adj[v]) {
        d[v][w] = 1;
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
        }
      }
    }
    std::size_t best = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          for (std::size_t e = 0; e < n; ++e) {
            std::vector<std::size_t> s{d[a][b] + d[c][e], d[a][c] + d[b][e], d[a][e] + d[b][c]};
            std::sort(s.begin(), s.end());
            best = std::max(best, s[2] - s[1]);
          }
        }
      }
    }
    return best;
  }

  // Ball sizes by enumerating words and comparing each new word with the
  // elements found so far through the word problem.
  std::vector<std::size_t> ball_oracle(MealyMachine const& m, std::vector<std::string> const& gens,
                                       std::size_t radius) {
    std::vector<GroupWord>   reps{GroupWord{}};
    std::vector<GroupWord>   layer{GroupWord{}};
    std::vector<std::size_t> balls{1};
    for (std::size_t r = 1; r <= radius; ++r) {
      std::vector<GroupWord> next;
      for (auto const& w : layer) {
        for (auto const& g : gens) {
          for (int e : {1, -1}) {
            GroupWord x = w * GroupWord::symbol(g, e);
            bool      fresh = std::none_of(reps.begin(), reps.end(), [&](GroupWord const& y) {
              return is_identity(m, x * y.inverse());
            });
            if (fresh) {
              reps.push_back(x);
              next.push_back(x);
            }
          }
        }
      }
      balls.push_back(reps.size());
      layer = std::move(next);
    }
    return balls;
  }

}  // namespace

TEST_CASE("Schreier graphs", "[geometry]") {
  auto const add = builtin("adding").machine;
  auto const s   = schreier_graph(add, words({"t"}), 3);
  REQUIRE(s.number_of_vertices() == 8);
  REQUIRE(s.targets.size() == 1);
  std::set<std::size_t> visited;
  std::size_t           v = 0;
  for (int i = 0; i < 8; ++i) {
    visited.insert(v);
    v = s.targets[0][v];
  }
  CHECK(v == 0);
  CHECK(visited.size() == 8);
  CHECK(s.is_connected());

  auto const id = schreier_graph(add, {GroupWord{}}, 2);
  CHECK(id.number_of_vertices() == 4);
  for (std::size_t x = 0; x < 4; ++x) {
    CHECK(id.targets[0][x] == x);
  }
  CHECK_FALSE(id.is_connected());

  auto const g  = builtin("grigorchuk").machine;
  auto const gs = schreier_graph(g, words({"a", "b", "c", "d"}), 3);
  CHECK(gs.number_of_vertices() == 8);
  CHECK(gs.is_connected());
  // Edge targets agree with the table-level action.
  for (std::size_t i = 0; i < gs.targets.size(); ++i) {
    for (std::size_t x = 0; x < 8; ++x) {
      Word const w = gs.vertex(x);
      CHECK(gs.targets[i][x] == index_of(oracle::run_word(g, parse_word(gs.generators[i]), w), 2));
    }
  }
  CHECK(gs.vertex_name(5) == "101");

  std::string const dot = to_dot(s);
  CHECK(dot.starts_with("digraph"));
  CHECK(std::count(dot.begin(), dot.end(), '>') == 8);
}

TEST_CASE("level transitivity", "[geometry]") {
  auto const g = builtin("grigorchuk").machine;
  auto const b = builtin("basilica").machine;
  auto const a = builtin("adding").machine;
  for (std::size_t n = 1; n <= 8; ++n) {
    CHECK(is_level_transitive(g, words({"a", "b", "c", "d"}), n));
    CHECK(is_level_transitive(b, words({"a", "b"}), n));
  }
  for (std::size_t n = 1; n <= 10; ++n) {
    auto const s = schreier_graph(a, words({"t"}), n);
    std::size_t v = 0, steps = 0;
    do {
      v = s.targets[0][v];
      ++steps;
    } while (v != 0 && steps <= s.number_of_vertices());
    CHECK(steps == (std::size_t(1) << n));
  }
  CHECK_FALSE(is_level_transitive(a, {GroupWord{}}, 1));
  CHECK_FALSE(is_level_transitive(g, words({"b", "c", "d"}), 1));
  // Connectivity projects to lower levels.
  for (auto const& gens : {words({"a", "b"}), words({"b", "c"}), words({"a", "d"}), words({"a b"})}) {
    for (std::size_t n = 1; n <= 6; ++n) {
      if (is_level_transitive(g, gens, n)) {
        for (std::size_t k = 1; k < n; ++k) {
          CHECK(is_level_transitive(g, gens, k));
        }
      }
    }
  }
}

TEST_CASE("growth of the adding machine", "[geometry]") {
  auto const t = growth(builtin("adding").machine, words({"t"}), 12);
  CHECK_FALSE(t.truncated);
  REQUIRE(t.spheres.size() == 13);
  CHECK(t.spheres[0] == 1);
  for (std::size_t r = 1; r <= 12; ++r) {
    CHECK(t.spheres[r] == 2);
    CHECK(t.balls[r] == 2 * r + 1);
  }
  CHECK(growth(builtin("adding").machine, words({"t"}), 0).balls == std::vector<std::uint64_t>{1});
  CHECK_THROWS_AS(growth(builtin("adding").machine, words({"t"}), 13), Error);
}

TEST_CASE("growth of the Grigorchuk group", "[geometry]") {
  auto const g = builtin("grigorchuk").machine;
  auto const t = growth(g, words({"a", "b", "c", "d"}), 6);
  REQUIRE(t.balls.size() == 7);
  CHECK(t.balls[0] == 1);
  CHECK(t.balls[1] == 5);
  CHECK(t.balls[2] == 11);
  for (std::size_t r = 1; r < t.balls.size(); ++r) {
    CHECK(t.balls[r] >= t.balls[r - 1]);
    CHECK(t.balls[r] == t.balls[r - 1] + t.spheres[r]);
    double bound = double(t.spheres[1]);
    for (std::size_t i = 1; i < r; ++i) {
      bound *= double(t.spheres[1] - 1);
    }
    CHECK(double(t.spheres[r]) <= bound);
  }
  auto const oracle = ball_oracle(g, {"a", "b", "c", "d"}, 4);
  for (std::size_t r = 0; r <= 4; ++r) {
    CHECK(t.balls[r] == oracle[r]);
  }
  // Order and multiplicity of the generators do not matter.
  CHECK(growth(g, words({"d", "c", "b", "a", "a", "b"}), 6).balls == t.balls);
  CHECK(growth(g, words({"a", "b^-1", "c", "d"}), 6).balls == t.balls);
  CHECK(to_csv(growth(g, words({"a"}), 2)) == "radius,sphere,ball\n0,1,1\n1,1,2\n2,0,2\n");
}

TEST_CASE("growth of finite and free groups", "[geometry]") {
  // The rotation a of the Gupta-Sidki machine generates Z/3.
  auto const t = growth(builtin("gupta_sidki").machine, words({"a"}), 5);
  CHECK(t.balls == std::vector<std::uint64_t>{1, 3, 3, 3, 3, 3});
  // A Cayley machine of Z/3 generates an infinite group instead.
  auto const z3 = cayley_machine(cyclic_group_table(3));
  auto const c  = growth(z3, {GroupWord::symbol("1")}, 5);
  CHECK(c.balls[1] == 3);
  CHECK(c.balls[5] > c.balls[4]);
  auto const f1 = builtin("f1").machine;
  auto const f  = growth(f1, words({"a", "b", "c"}), 3);
  CHECK(f.spheres == std::vector<std::uint64_t>{1, 6, 30, 150});
  auto const capped = growth(f1, words({"a", "b", "c"}), 4, 50);
  CHECK(capped.truncated);
  CHECK_FALSE(capped.truncation_reason.empty());
  CHECK(capped.spheres.size() <= 3);
}

TEST_CASE("four-point condition", "[geometry]") {
  CHECK(four_point_delta(Graph::path(6)) == 0);
  auto const c8 = Graph::cycle(8);
  CHECK(four_point_delta(c8) == delta_oracle(c8));
  auto const grid = Graph::grid(4, 4);
  auto const gd   = four_point_delta(grid);
  CHECK(gd == delta_oracle(grid));
  CHECK(gd > 0);
  auto const sg = Graph::from(schreier_graph(builtin("grigorchuk").machine, words({"a", "b", "c", "d"}), 4));
  CHECK(four_point_delta(sg) == delta_oracle(sg));
  Graph two(2);
  try {
    (void)four_point_delta(two);
    FAIL("expected an error");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::disconnected_graph);
  }
}
