// selfsim - computations with self-similar and automatic groups
//
// Structural invariants of machines: activity growth, the nucleus of a
// contracting group, nuclearity, and orbits of the dual group on words over
// the state set.

#ifndef SELFSIM_ANALYSIS_HPP_
#define SELFSIM_ANALYSIS_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "action.hpp"
#include "error.hpp"
#include "mealy.hpp"
#include "words.hpp"

namespace selfsim {

  namespace detail {

    // Tarjan's algorithm without recursion. Components are numbered in
    // reverse topological order (sinks first).
    inline std::vector<std::size_t> strongly_connected(
        std::vector<std::vector<std::size_t>> const& adj, std::size_t& count) {
      std::size_t const        n = adj.size();
      std::vector<std::size_t> index(n, SIZE_MAX), low(n, 0), comp(n, SIZE_MAX);
      std::vector<bool>        on_stack(n, false);
      std::vector<std::size_t> stack;
      std::vector<std::pair<std::size_t, std::size_t>> call;
      std::size_t                                       next_index = 0;
      count                                                        = 0;
      for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != SIZE_MAX) {
          continue;
        }
        call.emplace_back(root, 0);
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
          auto& [v, i] = call.back();
          if (i < adj[v].size()) {
            std::size_t w = adj[v][i++];
            if (index[w] == SIZE_MAX) {
              index[w] = low[w] = next_index++;
              stack.push_back(w);
              on_stack[w] = true;
              call.emplace_back(w, 0);
            } else if (on_stack[w]) {
              low[v] = std::min(low[v], index[w]);
            }
            continue;
          }
          std::size_t const vv = v;
          if (low[vv] == index[vv]) {
            std::size_t w;
            do {
              w = stack.back();
              stack.pop_back();
              on_stack[w] = false;
              comp[w]     = count;
            } while (w != vv);
            ++count;
          }
          call.pop_back();
          if (!call.empty()) {
            std::size_t u = call.back().first;
            low[u]        = std::min(low[u], low[vv]);
          }
        }
      }
      return comp;
    }

    // Vertices reachable from some cycle.
    inline std::vector<bool> recurrent_vertices(std::vector<std::vector<std::size_t>> const& adj) {
      std::size_t count = 0;
      auto        comp  = strongly_connected(adj, count);
      std::vector<std::size_t> size(count, 0);
      std::vector<bool>        cyclic(count, false);
      for (std::size_t v = 0; v < adj.size(); ++v) {
        if (++size[comp[v]] > 1) {
          cyclic[comp[v]] = true;
        }
        for (std::size_t w : adj[v]) {
          if (w == v) {
            cyclic[comp[v]] = true;
          }
        }
      }
      std::vector<bool>        out(adj.size(), false);
      std::vector<std::size_t> stack;
      for (std::size_t v = 0; v < adj.size(); ++v) {
        if (cyclic[comp[v]]) {
          out[v] = true;
          stack.push_back(v);
        }
      }
      while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : adj[v]) {
          if (!out[w]) {
            out[w] = true;
            stack.push_back(w);
          }
        }
      }
      return out;
    }

    inline std::vector<std::vector<std::size_t>> state_graph(MealyMachine const& m) {
      std::vector<std::vector<std::size_t>> adj(m.number_of_states());
      for (state_t q = 0; q < m.number_of_states(); ++q) {
        for (letter_t a = 0; a < m.alphabet_size(); ++a) {
          adj[q].push_back(m.next(q, a));
        }
      }
      return adj;
    }

    // Canonical forms of every state of a canonical machine.
    inline std::vector<CanonicalMachine> all_sections(CanonicalMachine const& c) {
      std::vector<state_t> cls(c.number_of_states());
      std::iota(cls.begin(), cls.end(), 0);
      std::vector<CanonicalMachine> out;
      for (state_t q = 0; q < c.number_of_states(); ++q) {
        out.push_back(q == 0 ? c : canonical_from_classes(c.machine(), cls, q));
      }
      return out;
    }

  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Activity
  ////////////////////////////////////////////////////////////////////////

  struct ActivityClass {
    bool        exponential = false;
    std::size_t degree      = 0;  // meaningful when !exponential

    [[nodiscard]] bool is_bounded() const noexcept {
      return !exponential && degree == 0;
    }
    [[nodiscard]] std::string to_string() const {
      return exponential ? "Exponential" : "Polynomial(" + std::to_string(degree) + ")";
    }
    bool operator==(ActivityClass const&) const = default;

    static ActivityClass polynomial(std::size_t d) {
      return {false, d};
    }
    static ActivityClass exponential_growth() {
      return {true, 0};
    }
  };

  // Growth of the number of length-n paths through states not acting as the
  // identity. Paths may start at any such state.
  inline ActivityClass activity_degree(MealyMachine const& m) {
    std::vector<bool> const trivial = identity_behaviour(m);
    std::size_t const       n       = m.number_of_states();
    std::vector<std::vector<std::size_t>> adj(n);
    for (state_t q = 0; q < n; ++q) {
      if (trivial[q]) {
        continue;
      }
      for (letter_t a = 0; a < m.alphabet_size(); ++a) {
        state_t r = m.next(q, a);
        if (!trivial[r]) {
          adj[q].push_back(r);
        }
      }
    }
    std::size_t count = 0;
    auto        comp  = detail::strongly_connected(adj, count);
    std::vector<std::size_t> verts(count, 0), edges(count, 0);
    for (std::size_t v = 0; v < n; ++v) {
      if (trivial[v]) {
        continue;
      }
      ++verts[comp[v]];
      for (std::size_t w : adj[v]) {
        if (comp[w] == comp[v]) {
          ++edges[comp[v]];
        }
      }
    }
    for (std::size_t c = 0; c < count; ++c) {
      if (edges[c] > verts[c]) {
        return ActivityClass::exponential_growth();
      }
    }
    // Longest chain of cyclic components; components are numbered sinks
    // first, so successors of c have smaller numbers.
    std::vector<std::vector<std::size_t>> members(count);
    for (std::size_t v = 0; v < n; ++v) {
      if (!trivial[v]) {
        members[comp[v]].push_back(v);
      }
    }
    std::vector<std::size_t> chain(count, 0);
    std::size_t              best = 0;
    for (std::size_t c = 0; c < count; ++c) {
      std::size_t below = 0;
      for (std::size_t v : members[c]) {
        for (std::size_t w : adj[v]) {
          if (comp[w] != c) {
            below = std::max(below, chain[comp[w]]);
          }
        }
      }
      chain[c] = below + (edges[c] > 0 ? 1 : 0);
      best     = std::max(best, chain[c]);
    }
    return ActivityClass::polynomial(best == 0 ? 0 : best - 1);
  }

  ////////////////////////////////////////////////////////////////////////
  // Nucleus
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::size_t DEFAULT_NUCLEUS_CAP = 10'000;

  struct Nucleus {
    std::vector<CanonicalMachine> elements;    // sorted by key
    std::vector<std::string>      generators;  // state names of the source machine

    [[nodiscard]] std::size_t size() const noexcept {
      return elements.size();
    }
    [[nodiscard]] bool contains(CanonicalMachine const& c) const {
      return std::binary_search(elements.begin(), elements.end(), c);
    }
  };

  struct NucleusResult {
    bool        contracting = false;
    Nucleus     nucleus;   // set when contracting
    std::size_t cap = 0;   // bound used
  };

  // Closes {q, q^-1, 1} under sections and under recurrent sections of
  // pairwise products until stable, then keeps the elements that are
  // recurrent in the section graph of the stable set.
  inline NucleusResult nucleus(MealyMachine const& m, std::size_t cap = DEFAULT_NUCLEUS_CAP) {
    if (!is_invertible(m)) {
      raise(ErrorKind::not_invertible, "nucleus requires an invertible machine");
    }
    if (cap < 1) {
      raise(ErrorKind::invalid_argument, "cap must be at least 1");
    }
    // The cap also bounds the composite machines built for products.
    Evaluator const                          ev(m, cap);
    std::vector<CanonicalMachine>            elems;
    std::unordered_map<std::string, std::size_t> index;
    NucleusResult                            result;
    result.cap = cap;

    struct Exceeded {};
    auto insert = [&](CanonicalMachine const& c) {
      if (index.emplace(c.key(), elems.size()).second) {
        elems.push_back(c);
        if (elems.size() > cap) {
          throw Exceeded{};
        }
      }
    };
    auto add = [&](CanonicalMachine const& c) {
      if (!index.contains(c.key())) {
        for (auto const& s : detail::all_sections(c)) {
          insert(s);
        }
      }
    };

    try {
      add(ev.identity());
      for (state_t q = 0; q < m.number_of_states(); ++q) {
        add(ev.letter({m.state_name(q), 1}));
        add(ev.letter({m.state_name(q), -1}));
      }
      // Sections of recurrent states are recurrent, so each one can be
      // inserted directly.
      auto absorb = [&](CanonicalMachine const& p) {
        auto rec = detail::recurrent_vertices(detail::state_graph(p.machine()));
        std::vector<state_t> cls(p.number_of_states());
        std::iota(cls.begin(), cls.end(), 0);
        for (state_t q = 0; q < p.number_of_states(); ++q) {
          if (rec[q]) {
            insert(q == 0 ? p : canonical_from_classes(p.machine(), cls, q));
          }
        }
      };
      for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
          absorb(ev.multiply(elems[i], elems[j]));
          if (j != i) {
            absorb(ev.multiply(elems[j], elems[i]));
          }
        }
      }
    } catch (Exceeded const&) {
      result.contracting = false;
      return result;
    } catch (ResourceError const&) {
      result.contracting = false;
      return result;
    }

    std::vector<std::vector<std::size_t>> adj(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      auto const& mm = elems[i].machine();
      auto        secs = detail::all_sections(elems[i]);
      for (letter_t a = 0; a < mm.alphabet_size(); ++a) {
        adj[i].push_back(index.at(secs[mm.next(0, a)].key()));
      }
    }
    auto rec = detail::recurrent_vertices(adj);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (rec[i]) {
        result.nucleus.elements.push_back(elems[i]);
      }
    }
    std::sort(result.nucleus.elements.begin(), result.nucleus.elements.end());
    result.nucleus.generators = m.state_names_or_default();
    result.contracting        = true;
    return result;
  }

  // Shortest words (shortlex over q, q^-1 in state order) naming the given
  // elements, searched up to max_len; unnamed elements get an empty optional.
  inline std::vector<std::optional<GroupWord>> name_elements(
      MealyMachine const& m, std::vector<CanonicalMachine> const& elems, std::size_t max_len = 4) {
    Evaluator const ev(m);
    std::unordered_map<std::string, std::size_t> want;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      want.emplace(elems[i].key(), i);
    }
    std::vector<std::optional<GroupWord>> out(elems.size());
    std::size_t                           found = 0;
    std::vector<GroupLetter>              letters;
    std::vector<bool> const               trivial = identity_behaviour(m);
    for (state_t q = 0; q < m.number_of_states(); ++q) {
      if (trivial[q]) {
        continue;
      }
      letters.push_back({m.state_name(q), 1});
      if (ev.invertible()) {
        letters.push_back({m.state_name(q), -1});
      }
    }
    std::set<std::string>                                   seen;
    std::vector<std::pair<GroupWord, CanonicalMachine>>     layer{{GroupWord(), ev.identity()}};
    auto record = [&](GroupWord const& w, CanonicalMachine const& c) {
      if (auto it = want.find(c.key()); it != want.end() && !out[it->second]) {
        out[it->second] = w;
        ++found;
      }
    };
    seen.insert(ev.identity().key());
    record(GroupWord(), ev.identity());
    for (std::size_t len = 1; len <= max_len && found < elems.size(); ++len) {
      std::vector<std::pair<GroupWord, CanonicalMachine>> next;
      for (auto const& [w, c] : layer) {
        for (auto const& l : letters) {
          CanonicalMachine p = ev.multiply(c, ev.letter(l));
          if (seen.insert(p.key()).second) {
            GroupWord v = w;
            v.push_back(l);
            record(v, p);
            next.emplace_back(std::move(v), std::move(p));
          }
        }
      }
      layer = std::move(next);
    }
    return out;
  }

  // The recurrent states of M M behave exactly as the states of M, and (for
  // invertible M) the state set is closed under inversion.
  [[nodiscard]] inline bool is_nuclear(MealyMachine const& m) {
    auto keys_of = [](MealyMachine const& x, std::vector<bool> const* keep) {
      auto                  cls = equivalence_classes(x);
      std::set<std::string> out;
      for (state_t q = 0; q < x.number_of_states(); ++q) {
        if (!keep || (*keep)[q]) {
          out.insert(canonical_from_classes(x, cls, q).key());
        }
      }
      return out;
    };
    MealyMachine const mm  = product(m, m);
    auto const         rec = detail::recurrent_vertices(detail::state_graph(mm));
    auto const         own = keys_of(m, nullptr);
    if (keys_of(mm, &rec) != own) {
      return false;
    }
    if (is_invertible(m) && keys_of(inverse(m), nullptr) != own) {
      return false;
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Dual orbits
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    struct UnionFind {
      std::vector<std::size_t> parent;

      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
    };

    inline std::size_t checked_power(std::size_t base, std::size_t n, std::size_t cap) {
      std::size_t total = 1;
      for (std::size_t i = 0; i < n; ++i) {
        if (base != 0 && total > cap / base) {
          throw ResourceError("level too large to enumerate", cap);
        }
        total *= base;
      }
      return total;
    }

    // Lexicographic index of a word of fixed length over k letters.
    inline std::size_t encode(Word const& w, std::size_t k) {
      std::size_t x = 0;
      for (letter_t a : w) {
        x = x * k + a;
      }
      return x;
    }

    inline Word decode(std::size_t x, std::size_t k, std::size_t n) {
      Word w(n);
      for (std::size_t i = n; i-- > 0;) {
        w[i] = static_cast<letter_t>(x % k);
        x /= k;
      }
      return w;
    }

  }  // namespace detail

  inline constexpr std::size_t DEFAULT_LEVEL_CAP = 1u << 24;

  // Orbits of G(m^dual) on Q^n. Each orbit is sorted lexicographically;
  // orbits are ordered by their first element.
  inline std::vector<std::vector<Word>> dual_orbits(MealyMachine const& m, std::size_t n,
                                                    std::size_t cap = DEFAULT_LEVEL_CAP) {
    MealyMachine const d = dual(m);
    if (!is_invertible(d)) {
      raise(ErrorKind::not_reversible, "machine is not reversible (its dual is not invertible)");
    }
    std::size_t const k     = m.number_of_states();
    std::size_t const total = detail::checked_power(k, n, cap);
    detail::UnionFind uf(total);
    for (std::size_t x = 0; x < total; ++x) {
      Word w = detail::decode(x, k, n);
      for (state_t i = 0; i < d.number_of_states(); ++i) {
        uf.unite(x, detail::encode(selfsim::apply(d, i, w), k));
      }
    }
    std::vector<std::vector<Word>>             orbits;
    std::unordered_map<std::size_t, std::size_t> which;
    for (std::size_t x = 0; x < total; ++x) {
      auto [it, ok] = which.emplace(uf.find(x), orbits.size());
      if (ok) {
        orbits.emplace_back();
      }
      orbits[it->second].push_back(detail::decode(x, k, n));
    }
    return orbits;
  }

  // Disjoint union of m and its inverse: state q + |Q| is q^-1.
  inline MealyMachine symmetric_machine(MealyMachine const& m) {
    MealyMachine const inv = inverse(m);
    std::size_t const  n   = m.number_of_states();
    std::vector<Edge>  table(m.table());
    for (auto e : inv.table()) {
      table.push_back({e.output, static_cast<state_t>(e.next + n)});
    }
    return MealyMachine(m.alphabet(), {}, std::move(table), std::nullopt, 2 * n);
  }

  struct InjectivityCertificate {
    bool                   certified = false;
    std::size_t            words     = 0;  // |L and Sigma^n|
    std::size_t            orbits    = 0;
    std::vector<GroupWord> failed_orbit;   // set when not certified
  };

  // Words of length n over Q (or over Q and Q^-1 when `signed_letters`)
  // satisfying L are partitioned into orbits of the dual group; the
  // certificate holds when every orbit contains a word acting nontrivially.
  inline InjectivityCertificate injectivity_certificate(
      MealyMachine const& m, std::function<bool(GroupWord const&)> const& L, std::size_t n,
      bool signed_letters = false, std::size_t cap = DEFAULT_LEVEL_CAP) {
    Classification const c = classify(m);
    if (!c.bireversible) {
      raise(ErrorKind::not_bireversible, "injectivity certificate requires a bireversible machine");
    }
    MealyMachine const sym = signed_letters ? symmetric_machine(m) : m;
    std::size_t const  q   = m.number_of_states();
    std::size_t const  k   = sym.number_of_states();
    auto to_word = [&](Word const& w) {
      GroupWord g;
      for (letter_t x : w) {
        g.push_back({m.state_name(x % q), x < q ? 1 : -1});
      }
      return g;
    };
    MealyMachine const d     = dual(sym);
    std::size_t const  total = detail::checked_power(k, n, cap);
    std::vector<bool>  in_l(total);
    for (std::size_t x = 0; x < total; ++x) {
      in_l[x] = L(to_word(detail::decode(x, k, n)));
    }
    detail::UnionFind uf(total);
    InjectivityCertificate out;
    for (std::size_t x = 0; x < total; ++x) {
      if (!in_l[x]) {
        continue;
      }
      ++out.words;
      Word w = detail::decode(x, k, n);
      for (state_t i = 0; i < d.number_of_states(); ++i) {
        Word        v = selfsim::apply(d, i, w);
        std::size_t y = detail::encode(v, k);
        if (!in_l[y]) {
          raise(ErrorKind::not_invariant, "language is not invariant under the dual action: "
                                              + to_word(w).to_string() + " -> "
                                              + to_word(v).to_string());
        }
        uf.unite(x, y);
      }
    }
    Evaluator const ev(m);
    std::unordered_map<std::size_t, bool> witnessed;
    std::vector<std::size_t>              roots;
    for (std::size_t x = 0; x < total; ++x) {
      if (!in_l[x]) {
        continue;
      }
      auto [it, ok] = witnessed.emplace(uf.find(x), false);
      if (ok) {
        roots.push_back(it->first);
      }
      if (!it->second && !ev.evaluate(to_word(detail::decode(x, k, n))).is_identity()) {
        it->second = true;
      }
    }
    out.orbits    = roots.size();
    out.certified = true;
    for (std::size_t r : roots) {
      if (!witnessed[r]) {
        out.certified = false;
        for (std::size_t x = 0; x < total; ++x) {
          if (in_l[x] && uf.find(x) == r) {
            out.failed_orbit.push_back(to_word(detail::decode(x, k, n)));
          }
        }
        break;
      }
    }
    return out;
  }

}  // namespace selfsim

#endif  // SELFSIM_ANALYSIS_HPP_
