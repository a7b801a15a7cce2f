// selfsim - computations with self-similar and automatic groups
//
// Actions on the levels A^n of the tree (Schreier graphs, transitivity),
// ball enumeration in automata groups, and the four-point hyperbolicity
// defect of a finite graph.

#ifndef SELFSIM_GEOMETRY_HPP_
#define SELFSIM_GEOMETRY_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "action.hpp"
#include "analysis.hpp"
#include "error.hpp"
#include "mealy.hpp"
#include "words.hpp"

namespace selfsim {

  ////////////////////////////////////////////////////////////////////////
  // Schreier graphs
  ////////////////////////////////////////////////////////////////////////

  // Vertices are the words of A^n, numbered lexicographically (first letter
  // most significant). targets[g][v] is the image of v under generator g.
  struct SchreierGraph {
    std::size_t                           level = 0;
    std::vector<std::string>              alphabet;
    std::vector<std::string>              generators;
    std::vector<std::vector<std::size_t>> targets;

    [[nodiscard]] std::size_t number_of_vertices() const noexcept {
      std::size_t n = 1;
      for (std::size_t i = 0; i < level; ++i) {
        n *= alphabet.size();
      }
      return n;
    }

    [[nodiscard]] Word vertex(std::size_t v) const {
      return detail::decode(v, alphabet.size(), level);
    }

    [[nodiscard]] std::string vertex_name(std::size_t v) const {
      return level == 0 ? std::string("1") : letters_to_string(alphabet, vertex(v));
    }

    // Connected when edges are read as undirected.
    [[nodiscard]] bool is_connected() const {
      std::size_t const n = number_of_vertices();
      detail::UnionFind uf(n);
      for (auto const& t : targets) {
        for (std::size_t v = 0; v < n; ++v) {
          uf.unite(v, t[v]);
        }
      }
      for (std::size_t v = 0; v < n; ++v) {
        if (uf.find(v) != 0) {
          return false;
        }
      }
      return true;
    }
  };

  inline SchreierGraph schreier_graph(MealyMachine const& m, std::vector<GroupWord> const& gens,
                                      std::size_t n, std::size_t cap = DEFAULT_LEVEL_CAP) {
    Evaluator const ev(m);
    SchreierGraph   g;
    g.level    = n;
    g.alphabet = m.alphabet();
    std::size_t const k     = m.alphabet_size();
    std::size_t const total = detail::checked_power(k, n, cap);
    for (auto const& w : gens) {
      g.generators.push_back(w.to_string());
      InitialMachine const im = ev.evaluate(w).initial();
      std::vector<std::size_t> t(total);
      for (std::size_t v = 0; v < total; ++v) {
        t[v] = detail::encode(selfsim::apply(im, detail::decode(v, k, n)), k);
      }
      g.targets.push_back(std::move(t));
    }
    return g;
  }

  [[nodiscard]] inline bool is_level_transitive(MealyMachine const& m,
                                                std::vector<GroupWord> const& gens, std::size_t n) {
    return schreier_graph(m, gens, n).is_connected();
  }

  inline std::string to_dot(SchreierGraph const& g) {
    std::ostringstream os;
    os << "digraph \"schreier_level_" << g.level << "\" {\n";
    for (std::size_t v = 0; v < g.number_of_vertices(); ++v) {
      os << "  v" << v << " [label=\"" << g.vertex_name(v) << "\"];\n";
    }
    for (std::size_t i = 0; i < g.targets.size(); ++i) {
      for (std::size_t v = 0; v < g.targets[i].size(); ++v) {
        os << "  v" << v << " -> v" << g.targets[i][v] << " [label=\"" << g.generators[i]
           << "\"];\n";
      }
    }
    os << "}\n";
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Growth
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::size_t DEFAULT_MAX_RADIUS = 12;
  inline constexpr std::size_t DEFAULT_MAX_FORMS  = 2'000'000;

  struct GrowthTable {
    std::vector<std::uint64_t> spheres;
    std::vector<std::uint64_t> balls;
    // Set when a cap stopped the enumeration; spheres then covers the radii
    // fully enumerated.
    bool        truncated = false;
    std::string truncation_reason;

    [[nodiscard]] std::size_t radius() const noexcept {
      return spheres.empty() ? 0 : spheres.size() - 1;
    }

    void push(std::uint64_t sphere) {
      spheres.push_back(sphere);
      balls.push_back(balls.empty() ? sphere : balls.back() + sphere);
    }
  };

  // Breadth-first enumeration of the ball of the given radius in the group
  // generated by gens and their inverses, using canonical machines as keys.
  inline GrowthTable growth(MealyMachine const& m, std::vector<GroupWord> const& gens,
                            std::size_t radius, std::size_t max_forms = DEFAULT_MAX_FORMS,
                            std::size_t cap = DEFAULT_STATE_CAP) {
    if (radius > DEFAULT_MAX_RADIUS) {
      raise(ErrorKind::invalid_argument,
            "radius " + std::to_string(radius) + " exceeds the limit "
                + std::to_string(DEFAULT_MAX_RADIUS));
    }
    Evaluator const ev(m, cap);
    // Symmetric generating set, deduplicated and ordered by key so that the
    // result is independent of the order and multiplicity of gens.
    std::vector<CanonicalMachine> step;
    {
      std::vector<CanonicalMachine> all;
      for (auto const& w : gens) {
        CanonicalMachine g = ev.evaluate(w);
        all.push_back(g);
        all.push_back(ev.invert(g));
      }
      std::sort(all.begin(), all.end());
      all.erase(std::unique(all.begin(), all.end()), all.end());
      for (auto& g : all) {
        if (!g.is_identity()) {
          step.push_back(std::move(g));
        }
      }
    }
    GrowthTable                     table;
    std::unordered_set<std::string> seen{ev.identity().key()};
    std::vector<CanonicalMachine>   frontier{ev.identity()};
    table.push(1);
    for (std::size_t r = 1; r <= radius; ++r) {
      std::vector<CanonicalMachine> next;
      try {
        for (auto const& x : frontier) {
          for (auto const& g : step) {
            CanonicalMachine y = ev.multiply(x, g);
            if (seen.insert(y.key()).second) {
              if (seen.size() > max_forms) {
                table.truncated = true;
                table.truncation_reason =
                    "more than " + std::to_string(max_forms) + " canonical forms";
                return table;
              }
              next.push_back(std::move(y));
            }
          }
        }
      } catch (ResourceError const& e) {
        table.truncated         = true;
        table.truncation_reason = e.what();
        return table;
      }
      table.push(next.size());
      frontier = std::move(next);
    }
    return table;
  }

  inline std::string to_csv(GrowthTable const& t) {
    std::ostringstream os;
    os << "radius,sphere,ball\n";
    for (std::size_t r = 0; r < t.spheres.size(); ++r) {
      os << r << ',' << t.spheres[r] << ',' << t.balls[r] << '\n';
    }
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Four-point condition
  ////////////////////////////////////////////////////////////////////////

  struct Graph {
    std::vector<std::vector<std::size_t>> adj;

    explicit Graph(std::size_t n = 0) : adj(n) {}

    [[nodiscard]] std::size_t size() const noexcept {
      return adj.size();
    }
    void add_edge(std::size_t u, std::size_t v) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }

    static Graph path(std::size_t n) {
      Graph g(n);
      for (std::size_t i = 0; i + 1 < n; ++i) {
        g.add_edge(i, i + 1);
      }
      return g;
    }
    static Graph cycle(std::size_t n) {
      Graph g = path(n);
      if (n > 2) {
        g.add_edge(n - 1, 0);
      }
      return g;
    }
    static Graph grid(std::size_t rows, std::size_t cols) {
      Graph g(rows * cols);
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
          if (c + 1 < cols) {
            g.add_edge(r * cols + c, r * cols + c + 1);
          }
          if (r + 1 < rows) {
            g.add_edge(r * cols + c, (r + 1) * cols + c);
          }
        }
      }
      return g;
    }
    // Underlying undirected graph of a Schreier graph (loops dropped).
    static Graph from(SchreierGraph const& s) {
      Graph g(s.number_of_vertices());
      for (auto const& t : s.targets) {
        for (std::size_t v = 0; v < t.size(); ++v) {
          if (t[v] != v) {
            g.add_edge(v, t[v]);
          }
        }
      }
      return g;
    }
  };

  inline std::vector<std::vector<std::size_t>> all_distances(Graph const& g) {
    std::size_t const                     n = g.size();
    std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, SIZE_MAX));
    for (std::size_t s = 0; s < n; ++s) {
      std::deque<std::size_t> q{s};
      d[s][s] = 0;
      while (!q.empty()) {
        std::size_t v = q.front();
        q.pop_front();
        for (std::size_t w : g.adj[v]) {
          if (d[s][w] == SIZE_MAX) {
            d[s][w] = d[s][v] + 1;
            q.push_back(w);
          }
        }
      }
    }
    return d;
  }

  // Max over unordered quadruples (repetition allowed) of the difference
  // between the largest and second largest of the three pair sums. Distances
  // are integers, so the result is an integer.
  inline std::size_t four_point_delta(Graph const& g) {
    std::size_t const n = g.size();
    if (n == 0) {
      raise(ErrorKind::disconnected_graph, "empty graph");
    }
    auto d = all_distances(g);
    for (std::size_t v = 0; v < n; ++v) {
      if (d[0][v] == SIZE_MAX) {
        raise(ErrorKind::disconnected_graph, "graph is not connected");
      }
    }
    std::size_t best = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        for (std::size_t c = b; c < n; ++c) {
          for (std::size_t e = c; e < n; ++e) {
            std::size_t s[3] = {d[a][b] + d[c][e], d[a][c] + d[b][e], d[a][e] + d[b][c]};
            std::sort(s, s + 3);
            best = std::max(best, s[2] - s[1]);
          }
        }
      }
    }
    return best;
  }

}  // namespace selfsim

#endif  // SELFSIM_GEOMETRY_HPP_
