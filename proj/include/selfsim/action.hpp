// selfsim - computations with self-similar and automatic groups
//
// Group words over the states of a Mealy machine, read as automatic
// transformations of A*. Convention: the leftmost symbol of a word acts
// first, so "a b" maps u to b(a(u)).

#ifndef SELFSIM_ACTION_HPP_
#define SELFSIM_ACTION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "mealy.hpp"
#include "words.hpp"

namespace selfsim {

  inline constexpr std::size_t DEFAULT_STATE_CAP = 100'000;
  inline constexpr std::uint64_t DEFAULT_MAX_EXP = 1u << 16;

  // Evaluates group words over the states of one machine, caching the
  // canonical form of every generator and its inverse.
  class Evaluator {
   public:
    explicit Evaluator(MealyMachine m, std::size_t cap = DEFAULT_STATE_CAP)
        : _m(std::move(m)), _cap(cap), _identity(canonical_identity(_m.alphabet())) {
      std::size_t const n = _m.number_of_states();
      auto              cls = equivalence_classes(_m);
      for (state_t q = 0; q < n; ++q) {
        _gens.push_back(canonical_from_classes(_m, cls, q));
      }
      if (is_invertible(_m)) {
        _inv = inverse(_m);
        auto icls = equivalence_classes(*_inv);
        for (state_t q = 0; q < n; ++q) {
          _inv_gens.push_back(canonical_from_classes(*_inv, icls, q));
        }
      }
    }

    [[nodiscard]] MealyMachine const& machine() const noexcept {
      return _m;
    }
    [[nodiscard]] std::size_t cap() const noexcept {
      return _cap;
    }
    [[nodiscard]] bool invertible() const noexcept {
      return _inv.has_value();
    }
    [[nodiscard]] MealyMachine const& inverse_machine() const {
      if (!_inv) {
        raise(ErrorKind::not_invertible, "machine is not invertible");
      }
      return *_inv;
    }
    [[nodiscard]] CanonicalMachine const& identity() const noexcept {
      return _identity;
    }

    [[nodiscard]] state_t state_of(std::string const& symbol) const {
      auto q = _m.state_index(symbol);
      if (!q) {
        raise(ErrorKind::unknown_symbol, "'" + symbol + "' is not a state of the machine");
      }
      return *q;
    }

    // Canonical form of a single letter.
    [[nodiscard]] CanonicalMachine const& letter(GroupLetter const& l) const {
      state_t q = state_of(l.symbol);
      if (l.exp > 0) {
        return _gens[q];
      }
      if (!_inv) {
        raise(ErrorKind::not_invertible,
              "word uses the inverse of '" + l.symbol + "' but the machine is not invertible");
      }
      return _inv_gens[q];
    }

    // x then y.
    [[nodiscard]] CanonicalMachine multiply(CanonicalMachine const& x,
                                            CanonicalMachine const& y) const {
      if (x.is_identity()) {
        return y;
      }
      if (y.is_identity()) {
        return x;
      }
      return minimize(then(x.initial(), y.initial(), _cap));
    }

    [[nodiscard]] CanonicalMachine evaluate(GroupWord const& w) const {
      CanonicalMachine cur = _identity;
      for (auto const& l : w) {
        cur = multiply(cur, letter(l));
      }
      return cur;
    }

    [[nodiscard]] CanonicalMachine invert(CanonicalMachine const& x) const {
      return minimize({inverse(x.machine()), 0});
    }

   private:
    MealyMachine                  _m;
    std::optional<MealyMachine>   _inv;
    std::size_t                   _cap;
    CanonicalMachine              _identity;
    std::vector<CanonicalMachine> _gens;
    std::vector<CanonicalMachine> _inv_gens;
  };

  inline CanonicalMachine evaluate(MealyMachine const& m, GroupWord const& w,
                                   std::size_t cap = DEFAULT_STATE_CAP) {
    return Evaluator(m, cap).evaluate(w);
  }

  [[nodiscard]] inline bool is_identity(MealyMachine const& m, GroupWord const& w,
                                        std::size_t cap = DEFAULT_STATE_CAP) {
    return evaluate(m, w, cap).is_identity();
  }

  // Image of the letter word u under the element w.
  inline Word apply(MealyMachine const& m, GroupWord const& w, std::span<letter_t const> u) {
    return selfsim::apply(evaluate(m, w).initial(), u);
  }

  ////////////////////////////////////////////////////////////////////////
  // Wreath recursion
  ////////////////////////////////////////////////////////////////////////

  struct WreathDecomposition {
    std::vector<letter_t>  root_perm;  // a -> w(a)
    std::vector<GroupWord> sections;   // indexed by input letter
  };

  // Sections are returned as words over the machine's states, with states
  // behaving as the identity omitted.
  inline WreathDecomposition wreath_decompose(MealyMachine const& m, GroupWord const& w) {
    Evaluator const ev(m);
    std::vector<bool> const trivial = identity_behaviour(m);
    std::size_t const       k       = m.alphabet_size();
    WreathDecomposition     out;
    out.root_perm.resize(k);
    out.sections.resize(k);
    for (letter_t a = 0; a < k; ++a) {
      letter_t  cur = a;
      GroupWord sec;
      for (auto const& l : w) {
        state_t q = ev.state_of(l.symbol);
        if (l.exp > 0) {
          Edge e = m.edge(q, cur);
          cur    = e.output;
          if (!trivial[e.next]) {
            sec.push_back({m.state_name(e.next), 1});
          }
        } else {
          Edge e = ev.inverse_machine().edge(q, cur);
          cur    = e.output;
          if (!trivial[e.next]) {
            sec.push_back({m.state_name(e.next), -1});
          }
        }
      }
      out.root_perm[a] = cur;
      out.sections[a]  = sec;
    }
    return out;
  }

  // Permutation-matrix display: entry (i, pi(i)) holds the section at i,
  // written "1" when trivial; other entries are 0.
  inline std::vector<std::vector<std::string>> matrix_form(MealyMachine const& m,
                                                           GroupWord const&    w) {
    auto        d = wreath_decompose(m, w);
    std::size_t k = m.alphabet_size();
    std::vector<std::vector<std::string>> mat(k, std::vector<std::string>(k, "0"));
    for (letter_t i = 0; i < k; ++i) {
      mat[i][d.root_perm[i]] = d.sections[i].to_string();
    }
    return mat;
  }

  inline std::string matrix_to_string(std::vector<std::vector<std::string>> const& mat) {
    std::string out = "[";
    for (std::size_t i = 0; i < mat.size(); ++i) {
      out += i ? ", [" : "[";
      for (std::size_t j = 0; j < mat[i].size(); ++j) {
        out += (j ? ", " : "") + mat[i][j];
      }
      out += "]";
    }
    return out + "]";
  }

  ////////////////////////////////////////////////////////////////////////
  // Order
  ////////////////////////////////////////////////////////////////////////

  struct OrderResult {
    bool          finite = false;
    std::uint64_t value  = 0;  // the order if finite, else the bound searched

    static OrderResult finite_order(std::uint64_t k) {
      return {true, k};
    }
    static OrderResult unknown_beyond(std::uint64_t bound) {
      return {false, bound};
    }
    bool operator==(OrderResult const&) const = default;
  };

  // Smallest k <= max_exp with w^k trivial; powers are built one factor at a
  // time so the first trivial power found is the order.
  inline OrderResult order(Evaluator const& ev, GroupWord const& w,
                           std::uint64_t max_exp = DEFAULT_MAX_EXP) {
    if (max_exp < 1) {
      raise(ErrorKind::invalid_argument, "max_exp must be at least 1");
    }
    CanonicalMachine const g   = ev.evaluate(w);
    CanonicalMachine       cur = g;
    for (std::uint64_t k = 1; k <= max_exp; ++k) {
      if (cur.is_identity()) {
        return OrderResult::finite_order(k);
      }
      if (k < max_exp) {
        cur = ev.multiply(cur, g);
      }
    }
    return OrderResult::unknown_beyond(max_exp);
  }

  inline OrderResult order(MealyMachine const& m, GroupWord const& w,
                           std::uint64_t max_exp = DEFAULT_MAX_EXP,
                           std::size_t   cap     = DEFAULT_STATE_CAP) {
    return order(Evaluator(m, cap), w, max_exp);
  }

  // u, w(u), w^2(u), ... until the first repetition.
  inline std::vector<Word> orbit_on_level(MealyMachine const& m, GroupWord const& w,
                                          Word const& u) {
    for (letter_t a : u) {
      if (a >= m.alphabet_size()) {
        raise(ErrorKind::unknown_letter, "letter index out of range");
      }
    }
    InitialMachine const g = evaluate(m, w).initial();
    std::vector<Word>    out{u};
    std::set<Word>       seen{u};
    for (Word cur = selfsim::apply(g, u); seen.insert(cur).second; cur = selfsim::apply(g, cur)) {
      out.push_back(cur);
    }
    return out;
  }

}  // namespace selfsim

#endif  // SELFSIM_ACTION_HPP_
