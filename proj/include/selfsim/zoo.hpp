// selfsim - computations with self-similar and automatic groups
//
// Built-in machines, the Cayley machine of a finite group, and the affine
// machines z -> az + b over Z^n acting on binary words (least significant
// digit first).

#ifndef SELFSIM_ZOO_HPP_
#define SELFSIM_ZOO_HPP_

#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "io.hpp"
#include "mealy.hpp"
#include "words.hpp"

namespace selfsim {

  struct ZooEntry {
    std::string  name;
    MealyMachine machine;
    // Non-identity states, in state order.
    std::vector<std::string> generators;
    // Abstract generator -> word over states, when the documented
    // presentation uses other generators.
    std::map<std::string, GroupWord> dictionary;
    // Words over states expected to act trivially.
    std::vector<GroupWord> relations;
    std::string            provenance;
  };

  namespace detail {

    inline char const* const ADDING_TEXT = R"(mealy adding
alphabet 0 1
states t 1
identity 1
t: 0 -> 1 1 ; 1 -> 0 t
1: 0 -> 0 1 ; 1 -> 1 1
)";

    inline char const* const GRIGORCHUK_TEXT = R"(mealy grigorchuk
alphabet 0 1
states a b c d 1
identity 1
a: 0 -> 1 1 ; 1 -> 0 1
b: 0 -> 0 a ; 1 -> 1 c
c: 0 -> 0 a ; 1 -> 1 d
d: 0 -> 0 1 ; 1 -> 1 b
1: 0 -> 0 1 ; 1 -> 1 1
)";

    inline char const* const ALESHIN_FULL_TEXT = R"(mealy aleshin_full
alphabet 0 1
states a b c d 1 A B u
identity 1
a: 0 -> 1 1 ; 1 -> 0 1
b: 0 -> 0 a ; 1 -> 1 c
c: 0 -> 0 a ; 1 -> 1 d
d: 0 -> 0 1 ; 1 -> 1 b
1: 0 -> 0 1 ; 1 -> 1 1
A: 0 -> 0 b ; 1 -> 1 u
B: 0 -> 1 1 ; 1 -> 0 a
u: 0 -> 0 1 ; 1 -> 1 d
)";

    inline char const* const GUPTA_SIDKI_TEXT = R"(mealy gupta_sidki
alphabet 0 1 2
states a a^-1 t t^-1 1
identity 1
a: 0 -> 1 1 ; 1 -> 2 1 ; 2 -> 0 1
a^-1: 0 -> 2 1 ; 1 -> 0 1 ; 2 -> 1 1
t: 0 -> 0 a ; 1 -> 1 a^-1 ; 2 -> 2 t
t^-1: 0 -> 0 a^-1 ; 1 -> 1 a ; 2 -> 2 t^-1
1: 0 -> 0 1 ; 1 -> 1 1 ; 2 -> 2 1
)";

    inline char const* const BS13_TEXT = R"(mealy bs13
alphabet 0 1
states 3z 3z+1 3z+2
3z: 0 -> 0 3z ; 1 -> 1 3z+1
3z+1: 0 -> 1 3z ; 1 -> 0 3z+2
3z+2: 0 -> 0 3z+1 ; 1 -> 1 3z+2
)";

    inline char const* const LAMPLIGHTER_TEXT = R"(mealy lamplighter
alphabet 0 1
states p q
p: 0 -> 0 p ; 1 -> 1 q
q: 0 -> 1 q ; 1 -> 0 p
)";

    inline char const* const BASILICA_TEXT = R"(mealy basilica
alphabet 0 1
states a b 1
identity 1
a: 0 -> 1 1 ; 1 -> 0 b
b: 0 -> 0 1 ; 1 -> 1 a
1: 0 -> 0 1 ; 1 -> 1 1
)";

    inline char const* const E1_TEXT = R"(mealy e1
alphabet 0 1
states a b c
a: 0 -> 0 b ; 1 -> 1 c
b: 0 -> 0 c ; 1 -> 1 b
c: 0 -> 1 a ; 1 -> 0 a
)";

    inline char const* const F1_TEXT = R"(mealy f1
alphabet 0 1
states a b c
a: 0 -> 1 b ; 1 -> 0 c
b: 0 -> 1 c ; 1 -> 0 b
c: 0 -> 0 a ; 1 -> 1 a
)";

    inline std::vector<GroupWord> parse_words(std::vector<std::string> const& texts) {
      std::vector<GroupWord> out;
      for (auto const& t : texts) {
        out.push_back(parse_word(t));
      }
      return out;
    }

    inline std::vector<std::string> non_identity_states(MealyMachine const& m) {
      std::vector<bool>        trivial = identity_behaviour(m);
      std::vector<std::string> out;
      for (state_t q = 0; q < m.number_of_states(); ++q) {
        if (!trivial[q]) {
          out.push_back(m.state_name(q));
        }
      }
      return out;
    }

  }  // namespace detail

  inline Endomorphism grigorchuk_sigma() {
    return Endomorphism::parse({{"a", "a c a"}, {"b", "d"}, {"c", "b"}, {"d", "c"}});
  }

  inline std::vector<GroupWord> grigorchuk_base_relators() {
    return detail::parse_words({"b c d", "a^2", "[d, d^a]", "[d, d^{[a,c] a}]"});
  }

  inline Endomorphism basilica_sigma() {
    return Endomorphism::parse({{"a", "b"}, {"b", "a^2"}});
  }

  // In this machine a is the generator acting on the first letter, so the
  // commutation relator starts from the other generator b. Applying sigma
  // n times gives the relators for p = 2^floor(n/2).
  inline std::vector<GroupWord> basilica_base_relators() {
    return detail::parse_words({"[b, b^a]"});
  }

  // F_n: a and b as in F_1, then a chain of 2n-1 states copying their input
  // from c back to a (2n+1 states in total).
  inline MealyMachine f_n_machine(std::size_t n) {
    if (n == 0) {
      raise(ErrorKind::invalid_argument, "f_n requires n >= 1");
    }
    std::vector<std::string> states{"a", "b", "c"};
    for (std::size_t i = 2; i <= 2 * n - 1; ++i) {
      states.push_back("c" + std::to_string(i));
    }
    auto const        k = states.size();
    std::vector<Edge> table{{1, 1}, {0, 2}, {1, 2}, {0, 1}};
    for (std::size_t i = 2; i < k; ++i) {
      auto next = static_cast<state_t>(i + 1 == k ? 0 : i + 1);
      table.push_back({0, next});
      table.push_back({1, next});
    }
    MealyMachine m({"0", "1"}, std::move(states), std::move(table));
    m.set_name(n == 1 ? "f1" : "f_n(" + std::to_string(n) + ")");
    return m;
  }

  inline std::vector<std::string> builtin_names() {
    return {"adding", "grigorchuk", "aleshin_full", "gupta_sidki", "bs13",
            "lamplighter", "basilica", "e1", "f1", "f_n(k)"};
  }

  inline std::optional<std::size_t> parse_f_n(std::string const& name) {
    std::string digits;
    if (name.starts_with("f_n(") && name.ends_with(")")) {
      digits = name.substr(4, name.size() - 5);
    } else if (name.size() > 1 && name[0] == 'f') {
      digits = name.substr(1);
    } else {
      return std::nullopt;
    }
    if (digits.empty() || digits.size() > 6
        || digits.find_first_not_of("0123456789") != std::string::npos) {
      return std::nullopt;
    }
    return std::stoul(digits);
  }

  inline ZooEntry builtin(std::string const& name) {
    ZooEntry e;
    e.name = name;
    if (name == "adding") {
      e.machine    = parse_machine(detail::ADDING_TEXT);
      e.provenance = "binary odometer: t = (1, t) with the root swap";
    } else if (name == "grigorchuk" || name == "aleshin_full") {
      e.machine = parse_machine(name == "grigorchuk" ? detail::GRIGORCHUK_TEXT
                                                     : detail::ALESHIN_FULL_TEXT);
      e.relations = detail::parse_words(
          {"a^2", "b^2", "c^2", "d^2", "b c d", "(a d)^4", "(a c)^8", "(a b)^16"});
      auto fam = relator_family(grigorchuk_base_relators(), grigorchuk_sigma(), 2);
      e.relations.insert(e.relations.end(), fam.begin(), fam.end());
      if (name == "aleshin_full") {
        e.relations.push_back(parse_word("A^2"));
        e.provenance = "Grigorchuk machine with the three extra states of the Aleshin machine";
      } else {
        e.provenance = "first Grigorchuk group: a swaps, b = (a, c), c = (a, d), d = (1, b)";
      }
    } else if (name == "gupta_sidki") {
      e.machine    = parse_machine(detail::GUPTA_SIDKI_TEXT);
      e.relations  = detail::parse_words({"a^3", "t^3", "a a^-1", "t t^-1"});
      e.provenance = "Gupta-Sidki 3-group: a cycles the letters, t = (a, a^-1, t)";
    } else if (name == "bs13") {
      e.machine    = parse_machine(detail::BS13_TEXT);
      e.dictionary = {{"t", parse_word("3z")}, {"a", parse_word("3z^-1 3z+1")}};
      Endomorphism sub(e.dictionary);
      e.relations  = {sub(parse_word("t^-1 a t a^-3"))};
      e.provenance = "Baumslag-Solitar BS(1,3): state 3z+q acts as v -> 3v + q on binary integers";
    } else if (name == "lamplighter") {
      e.machine    = parse_machine(detail::LAMPLIGHTER_TEXT);
      e.dictionary = {{"t", parse_word("p")}, {"lamp", parse_word("p^-1 q")}};
      Endomorphism sub(e.dictionary);
      e.relations.push_back(sub(parse_word("lamp^2")));
      for (int n = 0; n <= 5; ++n) {
        e.relations.push_back(
            sub(parse_word("[lamp, lamp^{t^" + std::to_string(n) + "}]")));
      }
      e.provenance = "Cayley machine of Z/2: tau(q, x) = (q + x, q + x)";
    } else if (name == "basilica") {
      e.machine   = parse_machine(detail::BASILICA_TEXT);
      e.relations = relator_family(basilica_base_relators(), basilica_sigma(), 5);
      e.provenance = "Basilica group: a = (1, b) with the root swap, b = (1, a)";
    } else if (name == "e1") {
      e.machine    = parse_machine(detail::E1_TEXT);
      e.relations  = detail::parse_words({"a^2", "b^2", "c^2"});
      e.provenance = "bireversible 3-state machine generating a free product of three Z/2";
    } else if (name == "f1") {
      e.machine    = parse_machine(detail::F1_TEXT);
      e.provenance = "bireversible 3-state machine generating a free group of rank 3";
    } else if (auto n = parse_f_n(name)) {
      e.machine    = f_n_machine(*n);
      e.name       = e.machine.name();
      e.provenance = "bireversible machine F_n with 2n+1 states";
    } else {
      raise(ErrorKind::unknown_builtin, "unknown builtin machine '" + name + "'");
    }
    e.generators = detail::non_identity_states(e.machine);
    return e;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cayley machine
  ////////////////////////////////////////////////////////////////////////

  // mult[g][h] is the product gh. States and letters are the elements,
  // named by their indices; tau(q, x) = (qx, qx).
  inline MealyMachine cayley_machine(std::vector<std::vector<std::size_t>> const& mult) {
    std::size_t const n = mult.size();
    if (n == 0) {
      raise(ErrorKind::not_a_group, "empty multiplication table");
    }
    for (auto const& row : mult) {
      if (row.size() != n) {
        raise(ErrorKind::not_a_group, "multiplication table is not square");
      }
      for (std::size_t x : row) {
        if (x >= n) {
          raise(ErrorKind::not_a_group, "multiplication table is not closed");
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (mult[mult[a][b]][c] != mult[a][mult[b][c]]) {
            raise(ErrorKind::not_a_group, "multiplication is not associative");
          }
        }
      }
    }
    std::optional<std::size_t> one;
    for (std::size_t e = 0; e < n && !one; ++e) {
      bool ok = true;
      for (std::size_t g = 0; g < n && ok; ++g) {
        ok = mult[e][g] == g && mult[g][e] == g;
      }
      if (ok) {
        one = e;
      }
    }
    if (!one) {
      raise(ErrorKind::not_a_group, "no identity element");
    }
    for (std::size_t g = 0; g < n; ++g) {
      bool has_inverse = false;
      for (std::size_t h = 0; h < n && !has_inverse; ++h) {
        has_inverse = mult[g][h] == *one && mult[h][g] == *one;
      }
      if (!has_inverse) {
        raise(ErrorKind::not_a_group, "element " + std::to_string(g) + " has no inverse");
      }
    }
    std::vector<std::string> names;
    for (std::size_t g = 0; g < n; ++g) {
      names.push_back(std::to_string(g));
    }
    std::vector<Edge> table;
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t x = 0; x < n; ++x) {
        auto y = static_cast<state_t>(mult[q][x]);
        table.push_back({y, y});
      }
    }
    auto m = with_detected_identity(MealyMachine(names, names, std::move(table)));
    m.set_name("cayley");
    return m;
  }

  inline std::vector<std::vector<std::size_t>> cyclic_group_table(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[a][b] = (a + b) % n;
      }
    }
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // Affine machines over Z^n
  ////////////////////////////////////////////////////////////////////////

  using IntMatrix = std::vector<std::vector<std::int64_t>>;
  using IntVector = std::vector<std::int64_t>;

  // Exact determinant by Bareiss elimination.
  inline std::int64_t determinant(IntMatrix a) {
    std::size_t const n = a.size();
    if (n == 0) {
      return 1;
    }
    std::int64_t sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a[k][k] == 0) {
        std::size_t p = k + 1;
        while (p < n && a[p][k] == 0) {
          ++p;
        }
        if (p == n) {
          return 0;
        }
        std::swap(a[p], a[k]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        }
      }
      prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
  }

  inline std::string affine_state_name(IntVector const& m) {
    std::string s = "m";
    for (std::size_t i = 0; i < m.size(); ++i) {
      s += (i ? "_" : "") + std::to_string(m[i]);
    }
    return s;
  }

  // Letters are the vectors x in {0,1}^n, letter index sum x_i 2^i, named by
  // their digits x_0 x_1 ... x_{n-1}. The state with offset m maps input x
  // to y = (a x + m) mod 2 and moves to offset (a x + m - y) / 2. States are
  // discovered from offset b; the start state is the one with offset b.
  inline InitialMachine affine_machine(std::size_t n, IntMatrix const& a, IntVector const& b,
                                       std::size_t cap = 100'000) {
    if (n == 0 || a.size() != n || b.size() != n) {
      raise(ErrorKind::invalid_argument, "affine machine needs an n x n matrix and an n-vector");
    }
    for (auto const& row : a) {
      if (row.size() != n) {
        raise(ErrorKind::invalid_argument, "affine matrix is not square");
      }
    }
    if (n > 16) {
      raise(ErrorKind::invalid_argument, "affine dimension is limited to 16");
    }
    if (determinant(a) % 2 == 0) {
      raise(ErrorKind::even_determinant, "determinant is even; the action is not invertible");
    }
    std::size_t const        k = std::size_t{1} << n;
    std::vector<std::string> alphabet;
    for (std::size_t x = 0; x < k; ++x) {
      std::string s;
      for (std::size_t i = 0; i < n; ++i) {
        s += ((x >> i) & 1) ? '1' : '0';
      }
      alphabet.push_back(s);
    }
    std::map<IntVector, state_t> index{{b, 0}};
    std::vector<IntVector>       offsets{b};
    std::vector<Edge>            table;
    for (std::size_t s = 0; s < offsets.size(); ++s) {
      for (std::size_t x = 0; x < k; ++x) {
        IntVector v     = offsets[s];
        std::size_t y   = 0;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            v[i] += a[i][j] * static_cast<std::int64_t>((x >> j) & 1);
          }
          std::int64_t bit = ((v[i] % 2) + 2) % 2;
          y |= static_cast<std::size_t>(bit) << i;
          v[i] = (v[i] - bit) / 2;
        }
        auto [it, ok] = index.emplace(v, static_cast<state_t>(offsets.size()));
        if (ok) {
          if (offsets.size() >= cap) {
            throw ResourceError("affine machine exceeds the state cap", cap);
          }
          offsets.push_back(v);
        }
        table.push_back({static_cast<letter_t>(y), it->second});
      }
    }
    std::vector<std::string> names;
    for (auto const& m : offsets) {
      names.push_back(affine_state_name(m));
    }
    auto m = with_detected_identity(MealyMachine(alphabet, names, std::move(table)));
    m.set_name("affine");
    return {std::move(m), 0};
  }

}  // namespace selfsim

#endif  // SELFSIM_ZOO_HPP_
