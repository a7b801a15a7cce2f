// selfsim - computations with self-similar and automatic groups
//
// Finite acceptors over abstract alphabets: partial deterministic automata
// with several labelled accepting subsets, nondeterministic automata with
// epsilon moves, subset construction, boolean closure, emptiness and
// shortlex enumeration, and the padded-pair alphabets used by multiplier
// automata.

#ifndef SELFSIM_FSA_HPP_
#define SELFSIM_FSA_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "types.hpp"

namespace selfsim {

  // Deterministic acceptor with a partial transition function. A missing
  // transition sends the run to an implicit, non-accepting sink.
  class Acceptor {
   public:
    Acceptor() = default;

    Acceptor(std::vector<std::string> alphabet, std::size_t num_states,
             state_t initial = 0)
        : _alphabet(std::move(alphabet)),
          _num_states(num_states),
          _initial(initial),
          _table(num_states * _alphabet.size(), UNDEFINED_STATE) {
      if (num_states == 0) {
        raise(ErrorKind::invalid_acceptor, "an acceptor needs at least one state");
      }
      if (initial >= num_states) {
        raise(ErrorKind::invalid_acceptor, "initial state out of range");
      }
    }

    [[nodiscard]] std::size_t number_of_states() const noexcept {
      return _num_states;
    }
    [[nodiscard]] std::size_t alphabet_size() const noexcept {
      return _alphabet.size();
    }
    [[nodiscard]] std::vector<std::string> const& alphabet() const noexcept {
      return _alphabet;
    }
    [[nodiscard]] state_t initial() const noexcept {
      return _initial;
    }

    [[nodiscard]] state_t next(state_t s, letter_t a) const {
      return _table[s * _alphabet.size() + a];
    }

    void set_next(state_t s, letter_t a, state_t t) {
      if (s >= _num_states || t >= _num_states || a >= _alphabet.size()) {
        raise(ErrorKind::invalid_acceptor, "transition references an undeclared state or letter");
      }
      _table[s * _alphabet.size() + a] = t;
    }

    void set_accepting(std::string const& label, state_t s, bool value = true) {
      if (s >= _num_states) {
        raise(ErrorKind::invalid_acceptor, "accepting state out of range");
      }
      auto& v = _accept.try_emplace(label, _num_states, false).first->second;
      v[s]    = value;
    }

    // Declares a label with an empty accepting subset.
    void add_label(std::string const& label) {
      _accept.try_emplace(label, _num_states, false);
    }

    [[nodiscard]] bool has_label(std::string const& label) const {
      return _accept.count(label) != 0;
    }

    [[nodiscard]] std::vector<std::string> labels() const {
      std::vector<std::string> out;
      for (auto const& [k, v] : _accept) {
        out.push_back(k);
      }
      return out;
    }

    [[nodiscard]] std::vector<bool> const& accepting(std::string const& label) const {
      auto it = _accept.find(label);
      if (it == _accept.end()) {
        raise(ErrorKind::unknown_label, "unknown accepting label '" + label + "'");
      }
      return it->second;
    }

    [[nodiscard]] bool is_accepting(std::string const& label, state_t s) const {
      return accepting(label)[s];
    }

    // Runs the acceptor; returns UNDEFINED_STATE when the run falls into the sink.
    [[nodiscard]] state_t run(std::span<letter_t const> w) const {
      state_t s = _initial;
      for (letter_t a : w) {
        if (a >= _alphabet.size()) {
          raise(ErrorKind::unknown_letter, "letter index out of range");
        }
        s = next(s, a);
        if (s == UNDEFINED_STATE) {
          return s;
        }
      }
      return s;
    }

    [[nodiscard]] bool accepts(std::string const& label, std::span<letter_t const> w) const {
      auto const& acc = accepting(label);
      state_t     s   = run(w);
      return s != UNDEFINED_STATE && acc[s];
    }

    [[nodiscard]] bool is_complete() const {
      return std::find(_table.begin(), _table.end(), UNDEFINED_STATE) == _table.end();
    }

    [[nodiscard]] std::vector<std::string> const& state_names() const noexcept {
      return _state_names;
    }

    // Optional human-readable names; empty means "s0, s1, ...".
    void set_state_names(std::vector<std::string> names) {
      if (!names.empty() && names.size() != _num_states) {
        raise(ErrorKind::invalid_acceptor, "state name count does not match state count");
      }
      _state_names = std::move(names);
    }

    [[nodiscard]] std::string state_name(state_t s) const {
      return _state_names.empty() ? "s" + std::to_string(s) : _state_names[s];
    }

    [[nodiscard]] std::optional<letter_t> letter_index(std::string const& name) const {
      auto it = std::find(_alphabet.begin(), _alphabet.end(), name);
      if (it == _alphabet.end()) {
        return std::nullopt;
      }
      return static_cast<letter_t>(it - _alphabet.begin());
    }

    bool operator==(Acceptor const&) const = default;

   private:
    std::vector<std::string>                 _alphabet;
    std::size_t                              _num_states = 0;
    state_t                                  _initial    = 0;
    std::vector<state_t>                     _table;
    std::map<std::string, std::vector<bool>> _accept;
    std::vector<std::string>                 _state_names;
  };

  // Nondeterministic acceptor with epsilon moves (letter EPSILON).
  class Nfa {
   public:
    Nfa(std::vector<std::string> alphabet, std::size_t num_states)
        : _alphabet(std::move(alphabet)), _edges(num_states) {}

    [[nodiscard]] std::size_t number_of_states() const noexcept {
      return _edges.size();
    }
    [[nodiscard]] std::vector<std::string> const& alphabet() const noexcept {
      return _alphabet;
    }

    state_t add_state() {
      _edges.emplace_back();
      for (auto& [k, v] : _accept) {
        v.push_back(false);
      }
      return static_cast<state_t>(_edges.size() - 1);
    }

    void add_edge(state_t s, letter_t a, state_t t) {
      if (s >= _edges.size() || t >= _edges.size()
          || (a != EPSILON && a >= _alphabet.size())) {
        raise(ErrorKind::invalid_acceptor, "transition references an undeclared state or letter");
      }
      _edges[s].emplace_back(a, t);
    }

    void add_initial(state_t s) {
      _initial.push_back(s);
    }

    void set_accepting(std::string const& label, state_t s) {
      auto& v = _accept.try_emplace(label, _edges.size(), false).first->second;
      v[s]    = true;
    }

    void add_label(std::string const& label) {
      _accept.try_emplace(label, _edges.size(), false);
    }

    [[nodiscard]] std::vector<state_t> const& initial() const noexcept {
      return _initial;
    }
    [[nodiscard]] std::vector<std::pair<letter_t, state_t>> const& edges(state_t s) const {
      return _edges[s];
    }
    [[nodiscard]] std::map<std::string, std::vector<bool>> const& accepting() const noexcept {
      return _accept;
    }

    // Direct simulation; used as the membership oracle for determinization.
    [[nodiscard]] bool accepts(std::string const& label, std::span<letter_t const> w) const {
      auto it = _accept.find(label);
      if (it == _accept.end()) {
        raise(ErrorKind::unknown_label, "unknown accepting label '" + label + "'");
      }
      auto cur = closure(_initial);
      for (letter_t a : w) {
        std::vector<state_t> nxt;
        for (state_t s : cur) {
          for (auto [b, t] : _edges[s]) {
            if (b == a) {
              nxt.push_back(t);
            }
          }
        }
        cur = closure(std::move(nxt));
      }
      return std::any_of(cur.begin(), cur.end(), [&](state_t s) { return it->second[s]; });
    }

    // Epsilon closure, returned sorted and without duplicates.
    [[nodiscard]] std::vector<state_t> closure(std::vector<state_t> set) const {
      std::vector<bool>    seen(_edges.size(), false);
      std::vector<state_t> stack;
      for (state_t s : set) {
        if (!seen[s]) {
          seen[s] = true;
          stack.push_back(s);
        }
      }
      std::vector<state_t> out;
      while (!stack.empty()) {
        state_t s = stack.back();
        stack.pop_back();
        out.push_back(s);
        for (auto [a, t] : _edges[s]) {
          if (a == EPSILON && !seen[t]) {
            seen[t] = true;
            stack.push_back(t);
          }
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

   private:
    std::vector<std::string>                                _alphabet;
    std::vector<std::vector<std::pair<letter_t, state_t>>>  _edges;
    std::vector<state_t>                                    _initial;
    std::map<std::string, std::vector<bool>>                _accept;
  };

  inline Nfa to_nfa(Acceptor const& a) {
    Nfa n(a.alphabet(), a.number_of_states());
    n.add_initial(a.initial());
    for (state_t s = 0; s < a.number_of_states(); ++s) {
      for (letter_t x = 0; x < a.alphabet_size(); ++x) {
        if (a.next(s, x) != UNDEFINED_STATE) {
          n.add_edge(s, x, a.next(s, x));
        }
      }
    }
    for (auto const& label : a.labels()) {
      n.add_label(label);
      auto const& acc = a.accepting(label);
      for (state_t s = 0; s < a.number_of_states(); ++s) {
        if (acc[s]) {
          n.set_accepting(label, s);
        }
      }
    }
    return n;
  }

  // Subset construction. Only reachable, nonempty subsets become states; a
  // subset accepts for a label when any member does.
  inline Acceptor determinize(Nfa const& n) {
    std::map<std::vector<state_t>, state_t> index;
    std::vector<std::vector<state_t>>       subsets;
    auto                                    start = n.closure(n.initial());
    index.emplace(start, 0);
    subsets.push_back(start);
    std::vector<std::vector<state_t>> rows;  // rows[i][a]
    std::size_t const                 k = n.alphabet().size();
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      std::vector<std::vector<state_t>> targets(k);
      for (state_t s : subsets[i]) {
        for (auto [a, t] : n.edges(s)) {
          if (a != EPSILON) {
            targets[a].push_back(t);
          }
        }
      }
      std::vector<state_t> row(k, UNDEFINED_STATE);
      for (letter_t a = 0; a < k; ++a) {
        if (targets[a].empty()) {
          continue;
        }
        auto c        = n.closure(std::move(targets[a]));
        auto [it, ok] = index.emplace(c, static_cast<state_t>(subsets.size()));
        if (ok) {
          subsets.push_back(std::move(c));
        }
        row[a] = it->second;
      }
      rows.push_back(std::move(row));
    }
    if (start.empty()) {
      // Degenerate input without initial states: a single rejecting state.
      Acceptor out(n.alphabet(), 1, 0);
      for (auto const& [label, acc] : n.accepting()) {
        out.add_label(label);
      }
      return out;
    }
    Acceptor out(n.alphabet(), subsets.size(), 0);
    for (state_t i = 0; i < subsets.size(); ++i) {
      for (letter_t a = 0; a < k; ++a) {
        if (rows[i][a] != UNDEFINED_STATE) {
          out.set_next(i, a, rows[i][a]);
        }
      }
    }
    for (auto const& [label, acc] : n.accepting()) {
      out.add_label(label);
      for (state_t i = 0; i < subsets.size(); ++i) {
        if (std::any_of(subsets[i].begin(), subsets[i].end(),
                        [&acc = acc](state_t s) { return acc[s]; })) {
          out.set_accepting(label, i);
        }
      }
    }
    return out;
  }

  // Restriction to the states reachable from the initial state.
  inline Acceptor trim(Acceptor const& a) {
    std::vector<state_t> id(a.number_of_states(), UNDEFINED_STATE);
    std::vector<state_t> order{a.initial()};
    id[a.initial()] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (letter_t x = 0; x < a.alphabet_size(); ++x) {
        state_t t = a.next(order[i], x);
        if (t != UNDEFINED_STATE && id[t] == UNDEFINED_STATE) {
          id[t] = static_cast<state_t>(order.size());
          order.push_back(t);
        }
      }
    }
    Acceptor out(a.alphabet(), order.size(), 0);
    for (state_t i = 0; i < order.size(); ++i) {
      for (letter_t x = 0; x < a.alphabet_size(); ++x) {
        state_t t = a.next(order[i], x);
        if (t != UNDEFINED_STATE) {
          out.set_next(i, x, id[t]);
        }
      }
    }
    for (auto const& label : a.labels()) {
      out.add_label(label);
      for (state_t i = 0; i < order.size(); ++i) {
        if (a.is_accepting(label, order[i])) {
          out.set_accepting(label, i);
        }
      }
    }
    if (!a.state_names().empty()) {
      std::vector<std::string> names;
      for (state_t s : order) {
        names.push_back(a.state_name(s));
      }
      out.set_state_names(std::move(names));
    }
    return out;
  }

  // Adds an explicit sink so that every transition is defined.
  inline Acceptor complete(Acceptor const& a) {
    if (a.is_complete()) {
      return a;
    }
    std::size_t const n = a.number_of_states();
    Acceptor          out(a.alphabet(), n + 1, a.initial());
    for (state_t s = 0; s <= n; ++s) {
      for (letter_t x = 0; x < a.alphabet_size(); ++x) {
        state_t t = s < n ? a.next(s, x) : UNDEFINED_STATE;
        out.set_next(s, x, t == UNDEFINED_STATE ? static_cast<state_t>(n) : t);
      }
    }
    for (auto const& label : a.labels()) {
      out.add_label(label);
      for (state_t s = 0; s < n; ++s) {
        if (a.is_accepting(label, s)) {
          out.set_accepting(label, s);
        }
      }
    }
    return out;
  }

  // Keeps a single label, optionally renamed.
  inline Acceptor select_label(Acceptor const& a, std::string const& label,
                               std::string const& rename = {}) {
    auto const& acc = a.accepting(label);
    Acceptor    out(a.alphabet(), a.number_of_states(), a.initial());
    for (state_t s = 0; s < a.number_of_states(); ++s) {
      for (letter_t x = 0; x < a.alphabet_size(); ++x) {
        if (a.next(s, x) != UNDEFINED_STATE) {
          out.set_next(s, x, a.next(s, x));
        }
      }
    }
    std::string const name = rename.empty() ? label : rename;
    out.add_label(name);
    for (state_t s = 0; s < a.number_of_states(); ++s) {
      if (acc[s]) {
        out.set_accepting(name, s);
      }
    }
    return out;
  }

  enum class BoolOp { intersect, unite, difference, complement };

  inline Acceptor complement(Acceptor const& a) {
    Acceptor c   = complete(a);
    Acceptor out = c;
    for (auto const& label : c.labels()) {
      for (state_t s = 0; s < c.number_of_states(); ++s) {
        out.set_accepting(label, s, !c.is_accepting(label, s));
      }
    }
    return out;
  }

  // Product construction on the completed inputs, restricted to reachable
  // pairs. Labels present in both operands are combined; for complement the
  // second operand is ignored.
  inline Acceptor bool_op(Acceptor const& a, Acceptor const& b, BoolOp op) {
    if (op == BoolOp::complement) {
      return complement(a);
    }
    if (a.alphabet() != b.alphabet()) {
      raise(ErrorKind::alphabet_mismatch, "boolean operation on acceptors with different alphabets");
    }
    std::vector<std::string> labels;
    for (auto const& l : a.labels()) {
      if (b.has_label(l)) {
        labels.push_back(l);
      }
    }
    if (labels.empty()) {
      raise(ErrorKind::unknown_label, "boolean operation on acceptors without a common label");
    }
    Acceptor const    ca = complete(a);
    Acceptor const    cb = complete(b);
    std::size_t const k  = a.alphabet_size();

    std::map<std::pair<state_t, state_t>, state_t> index;
    std::vector<std::pair<state_t, state_t>>       pairs;
    index.emplace(std::pair{ca.initial(), cb.initial()}, 0);
    pairs.emplace_back(ca.initial(), cb.initial());
    std::vector<state_t> table;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto [p, q] = pairs[i];
      for (letter_t x = 0; x < k; ++x) {
        std::pair<state_t, state_t> t{ca.next(p, x), cb.next(q, x)};
        auto [it, ok] = index.emplace(t, static_cast<state_t>(pairs.size()));
        if (ok) {
          pairs.push_back(t);
        }
        table.push_back(it->second);
      }
    }
    Acceptor out(a.alphabet(), pairs.size(), 0);
    for (state_t i = 0; i < pairs.size(); ++i) {
      for (letter_t x = 0; x < k; ++x) {
        out.set_next(i, x, table[i * k + x]);
      }
    }
    for (auto const& label : labels) {
      out.add_label(label);
      for (state_t i = 0; i < pairs.size(); ++i) {
        bool const x = ca.is_accepting(label, pairs[i].first);
        bool const y = cb.is_accepting(label, pairs[i].second);
        bool       r = false;
        switch (op) {
          case BoolOp::intersect: r = x && y; break;
          case BoolOp::unite: r = x || y; break;
          case BoolOp::difference: r = x && !y; break;
          case BoolOp::complement: break;
        }
        if (r) {
          out.set_accepting(label, i);
        }
      }
    }
    return out;
  }

  // Moore-style refinement on the completed, trimmed acceptor; the initial
  // partition separates states by their full acceptance signature.
  inline Acceptor minimize(Acceptor const& a) {
    Acceptor const    c      = trim(complete(trim(a)));
    std::size_t const n      = c.number_of_states();
    std::size_t const k      = c.alphabet_size();
    auto const        labels = c.labels();
    std::vector<state_t> cls(n);
    {
      std::map<std::vector<bool>, state_t> sig;
      for (state_t s = 0; s < n; ++s) {
        std::vector<bool> key;
        for (auto const& l : labels) {
          key.push_back(c.is_accepting(l, s));
        }
        cls[s] = sig.emplace(key, static_cast<state_t>(sig.size())).first->second;
      }
    }
    std::size_t count = 0;
    while (true) {
      std::map<std::vector<state_t>, state_t> sig;
      std::vector<state_t>                    next(n);
      for (state_t s = 0; s < n; ++s) {
        std::vector<state_t> key{cls[s]};
        for (letter_t x = 0; x < k; ++x) {
          key.push_back(cls[c.next(s, x)]);
        }
        next[s] = sig.emplace(key, static_cast<state_t>(sig.size())).first->second;
      }
      cls.swap(next);
      if (sig.size() == count) {
        break;
      }
      count = sig.size();
    }
    // Renumber classes in BFS order from the initial state.
    std::vector<state_t> rep(count, UNDEFINED_STATE);
    for (state_t s = 0; s < n; ++s) {
      if (rep[cls[s]] == UNDEFINED_STATE) {
        rep[cls[s]] = s;
      }
    }
    Acceptor out(c.alphabet(), count, cls[c.initial()]);
    for (state_t b = 0; b < count; ++b) {
      for (letter_t x = 0; x < k; ++x) {
        out.set_next(b, x, cls[c.next(rep[b], x)]);
      }
    }
    for (auto const& l : labels) {
      out.add_label(l);
      for (state_t b = 0; b < count; ++b) {
        if (c.is_accepting(l, rep[b])) {
          out.set_accepting(l, b);
        }
      }
    }
    return trim(out);
  }

  struct EmptinessResult {
    bool empty = true;
    Word witness;  // shortest, shortlex-least accepted word when nonempty
  };

  // Breadth-first search in letter order, so the first accepting state found
  // yields the shortlex-least accepted word.
  inline EmptinessResult is_empty(Acceptor const& a, std::string const& label) {
    auto const&          acc = a.accepting(label);
    std::size_t const    n   = a.number_of_states();
    std::vector<state_t> parent(n, UNDEFINED_STATE);
    std::vector<letter_t> via(n, 0);
    std::vector<bool>    seen(n, false);
    std::queue<state_t>  q;
    q.push(a.initial());
    seen[a.initial()] = true;
    while (!q.empty()) {
      state_t s = q.front();
      q.pop();
      if (acc[s]) {
        Word w;
        for (state_t t = s; t != a.initial(); t = parent[t]) {
          w.push_back(via[t]);
        }
        std::reverse(w.begin(), w.end());
        return {false, w};
      }
      for (letter_t x = 0; x < a.alphabet_size(); ++x) {
        state_t t = a.next(s, x);
        if (t != UNDEFINED_STATE && !seen[t]) {
          seen[t]   = true;
          parent[t] = s;
          via[t]    = x;
          q.push(t);
        }
      }
    }
    return {true, {}};
  }

  // Every accepted word of length at most max_len, in shortlex order.
  inline std::vector<Word> enumerate(Acceptor const& a, std::string const& label,
                                     std::size_t max_len) {
    auto const&       acc = a.accepting(label);
    std::size_t const n   = a.number_of_states();
    // live[r][s]: some accepted word of length exactly r starts at s.
    std::vector<std::vector<bool>> live(max_len + 1, std::vector<bool>(n, false));
    for (state_t s = 0; s < n; ++s) {
      live[0][s] = acc[s];
    }
    for (std::size_t r = 1; r <= max_len; ++r) {
      for (state_t s = 0; s < n; ++s) {
        for (letter_t x = 0; x < a.alphabet_size() && !live[r][s]; ++x) {
          state_t t = a.next(s, x);
          if (t != UNDEFINED_STATE && live[r - 1][t]) {
            live[r][s] = true;
          }
        }
      }
    }
    std::vector<Word> out;
    Word              cur;
    auto dfs = [&](auto&& self, state_t s, std::size_t remaining) -> void {
      if (remaining == 0) {
        out.push_back(cur);
        return;
      }
      for (letter_t x = 0; x < a.alphabet_size(); ++x) {
        state_t t = a.next(s, x);
        if (t != UNDEFINED_STATE && live[remaining - 1][t]) {
          cur.push_back(x);
          self(self, t, remaining - 1);
          cur.pop_back();
        }
      }
    };
    for (std::size_t len = 0; len <= max_len; ++len) {
      if (live[len][a.initial()]) {
        dfs(dfs, a.initial(), len);
      }
    }
    return out;
  }

  // Shortlex comparison induced by the letter indices.
  inline bool shortlex_less(std::span<letter_t const> u, std::span<letter_t const> v) {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
  }

  ////////////////////////////////////////////////////////////////////////
  // Padded pairs
  ////////////////////////////////////////////////////////////////////////

  // The alphabet (B+pad) x (B+pad) minus (pad, pad), where B has k letters
  // and the padding symbol has index k. Pair (l, r) has index l*(k+1) + r,
  // which is contiguous because (pad, pad) is the last combination.
  class PairAlphabet {
   public:
    static constexpr char const* PAD_NAME = "1";

    explicit PairAlphabet(std::vector<std::string> base) : _base(std::move(base)) {}

    [[nodiscard]] std::size_t base_size() const noexcept {
      return _base.size();
    }
    [[nodiscard]] letter_t pad() const noexcept {
      return static_cast<letter_t>(_base.size());
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return (_base.size() + 1) * (_base.size() + 1) - 1;
    }
    [[nodiscard]] std::vector<std::string> const& base() const noexcept {
      return _base;
    }

    [[nodiscard]] letter_t index(letter_t left, letter_t right) const {
      if (left > pad() || right > pad() || (left == pad() && right == pad())) {
        raise(ErrorKind::invalid_argument, "(padding, padding) is not a letter");
      }
      return left * static_cast<letter_t>(_base.size() + 1) + right;
    }
    [[nodiscard]] letter_t left(letter_t x) const noexcept {
      return x / static_cast<letter_t>(_base.size() + 1);
    }
    [[nodiscard]] letter_t right(letter_t x) const noexcept {
      return x % static_cast<letter_t>(_base.size() + 1);
    }

    [[nodiscard]] std::string component_name(letter_t c) const {
      return c == pad() ? std::string(PAD_NAME) : _base[c];
    }

    [[nodiscard]] std::vector<std::string> names() const {
      std::vector<std::string> out;
      for (letter_t x = 0; x < size(); ++x) {
        out.push_back("(" + component_name(left(x)) + "," + component_name(right(x)) + ")");
      }
      return out;
    }

    // Synchronous padded encoding of (u, v): length max(|u|, |v|), the
    // shorter word padded at the end.
    [[nodiscard]] Word encode(std::span<letter_t const> u, std::span<letter_t const> v) const {
      Word w;
      for (std::size_t i = 0; i < std::max(u.size(), v.size()); ++i) {
        w.push_back(index(i < u.size() ? u[i] : pad(), i < v.size() ? v[i] : pad()));
      }
      return w;
    }

   private:
    std::vector<std::string> _base;
  };

  // Comparator acceptor on padded pairs (u, v) for the shortlex order given
  // by the base letter indices. Labels: "le" (u <= v, the main one), "lt",
  // "eq", "gt", "ge". Ill-formed paddings (a letter after a pad in the same
  // coordinate) are rejected under every label.
  inline Acceptor shortlex_pair_acceptor(PairAlphabet const& pa) {
    enum : state_t { EQ = 0, LT = 1, GT = 2, USHORT = 3, VSHORT = 4 };
    Acceptor out(pa.names(), 5, EQ);
    out.set_state_names({"eq", "lt", "gt", "u-short", "v-short"});
    letter_t const pad = pa.pad();
    for (letter_t l = 0; l <= pad; ++l) {
      for (letter_t r = 0; r <= pad; ++r) {
        if (l == pad && r == pad) {
          continue;
        }
        letter_t x = pa.index(l, r);
        if (l != pad && r != pad) {
          out.set_next(EQ, x, l == r ? EQ : (l < r ? LT : GT));
          out.set_next(LT, x, LT);
          out.set_next(GT, x, GT);
        } else if (l == pad) {
          for (state_t s : {EQ, LT, GT, USHORT}) {
            out.set_next(s, x, USHORT);
          }
        } else {
          for (state_t s : {EQ, LT, GT, VSHORT}) {
            out.set_next(s, x, VSHORT);
          }
        }
      }
    }
    for (auto const& l : {"le", "lt", "eq", "gt", "ge"}) {
      out.add_label(l);
    }
    for (state_t s : {EQ, LT, USHORT}) {
      out.set_accepting("le", s);
    }
    for (state_t s : {LT, USHORT}) {
      out.set_accepting("lt", s);
    }
    out.set_accepting("eq", EQ);
    for (state_t s : {GT, VSHORT}) {
      out.set_accepting("gt", s);
    }
    for (state_t s : {EQ, GT, VSHORT}) {
      out.set_accepting("ge", s);
    }
    return out;
  }

  // Projection of a pair acceptor onto one coordinate. Letters whose
  // projected component is the padding symbol become epsilon moves.
  inline Nfa project(Acceptor const& a, PairAlphabet const& pa, bool left_coordinate) {
    Nfa n(pa.base(), a.number_of_states());
    n.add_initial(a.initial());
    for (state_t s = 0; s < a.number_of_states(); ++s) {
      for (letter_t x = 0; x < a.alphabet_size(); ++x) {
        state_t t = a.next(s, x);
        if (t == UNDEFINED_STATE) {
          continue;
        }
        letter_t c = left_coordinate ? pa.left(x) : pa.right(x);
        n.add_edge(s, c == pa.pad() ? EPSILON : c, t);
      }
    }
    for (auto const& label : a.labels()) {
      n.add_label(label);
      for (state_t s = 0; s < a.number_of_states(); ++s) {
        if (a.is_accepting(label, s)) {
          n.set_accepting(label, s);
        }
      }
    }
    return n;
  }

  // Lifts an acceptor over B to padded pairs, reading only one coordinate:
  // accepts (u, v) iff the chosen coordinate, with padding stripped, is
  // accepted and the padding is well formed (only trailing).
  inline Acceptor lift_to_pairs(Acceptor const& a, PairAlphabet const& pa,
                                bool left_coordinate) {
    Acceptor const    c = complete(a);
    std::size_t const n = c.number_of_states();
    // States 0..n-1: reading; n..2n-1: the chosen coordinate has ended.
    Acceptor out(pa.names(), 2 * n, c.initial());
    for (state_t s = 0; s < n; ++s) {
      for (letter_t x = 0; x < pa.size(); ++x) {
        letter_t comp = left_coordinate ? pa.left(x) : pa.right(x);
        if (comp == pa.pad()) {
          out.set_next(s, x, static_cast<state_t>(n + s));
          out.set_next(static_cast<state_t>(n + s), x, static_cast<state_t>(n + s));
        } else {
          out.set_next(s, x, c.next(s, comp));
        }
      }
    }
    for (auto const& label : c.labels()) {
      out.add_label(label);
      for (state_t s = 0; s < n; ++s) {
        if (c.is_accepting(label, s)) {
          out.set_accepting(label, s);
          out.set_accepting(label, static_cast<state_t>(n + s));
        }
      }
    }
    return trim(out);
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format and DOT export
  ////////////////////////////////////////////////////////////////////////

  inline std::string to_text(Acceptor const& a, std::string const& name = "acceptor") {
    std::ostringstream os;
    os << "acceptor " << name << "\nalphabet";
    for (auto const& x : a.alphabet()) {
      os << ' ' << x;
    }
    os << "\nstates";
    for (state_t s = 0; s < a.number_of_states(); ++s) {
      os << ' ' << a.state_name(s);
    }
    os << "\ninitial " << a.state_name(a.initial()) << '\n';
    for (state_t s = 0; s < a.number_of_states(); ++s) {
      os << a.state_name(s) << ':';
      bool first = true;
      for (letter_t x = 0; x < a.alphabet_size(); ++x) {
        if (a.next(s, x) == UNDEFINED_STATE) {
          continue;
        }
        os << (first ? " " : " ; ") << a.alphabet()[x] << " -> " << a.state_name(a.next(s, x));
        first = false;
      }
      os << '\n';
    }
    for (auto const& label : a.labels()) {
      os << "accept " << label << ':';
      for (state_t s = 0; s < a.number_of_states(); ++s) {
        if (a.is_accepting(label, s)) {
          os << ' ' << a.state_name(s);
        }
      }
      os << '\n';
    }
    return os.str();
  }

  namespace detail {
    inline std::vector<std::string> split_ws(std::string const& s) {
      std::istringstream       is(s);
      std::vector<std::string> out;
      std::string              tok;
      while (is >> tok) {
        out.push_back(tok);
      }
      return out;
    }

    inline std::string trim_ws(std::string const& s) {
      auto b = s.find_first_not_of(" \t\r\n");
      if (b == std::string::npos) {
        return {};
      }
      auto e = s.find_last_not_of(" \t\r\n");
      return s.substr(b, e - b + 1);
    }

    // Splits on a single-character separator and trims each field.
    inline std::vector<std::string> split_on(std::string const& s, char sep) {
      std::vector<std::string> out;
      std::size_t              start = 0;
      while (true) {
        auto pos = s.find(sep, start);
        out.push_back(trim_ws(s.substr(start, pos - start)));
        if (pos == std::string::npos) {
          break;
        }
        start = pos + 1;
      }
      return out;
    }
  }  // namespace detail

  struct NamedAcceptor {
    std::string name;
    Acceptor    acceptor;
  };

  inline NamedAcceptor parse_acceptor(std::string const& text) {
    std::istringstream       is(text);
    std::string              line;
    std::string              name;
    std::vector<std::string> alphabet, states;
    std::string              initial;
    std::vector<std::pair<std::string, std::string>> rows, accepts;
    std::size_t              lineno = 0;
    auto fail = [&](std::string const& msg) {
      raise(ErrorKind::parse_error, "acceptor line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(is, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) {
        line.erase(hash);
      }
      line = detail::trim_ws(line);
      if (line.empty()) {
        continue;
      }
      auto toks = detail::split_ws(line);
      if (toks[0] == "acceptor") {
        name = toks.size() > 1 ? toks[1] : "";
      } else if (toks[0] == "alphabet") {
        alphabet.assign(toks.begin() + 1, toks.end());
      } else if (toks[0] == "states") {
        states.assign(toks.begin() + 1, toks.end());
      } else if (toks[0] == "initial") {
        if (toks.size() != 2) {
          fail("expected 'initial <state>'");
        }
        initial = toks[1];
      } else if (toks[0] == "accept") {
        auto colon = line.find(':');
        if (colon == std::string::npos) {
          fail("expected 'accept <label>: states...'");
        }
        accepts.emplace_back(detail::trim_ws(line.substr(6, colon - 6)), line.substr(colon + 1));
      } else {
        auto colon = line.find(':');
        if (colon == std::string::npos) {
          fail("expected '<state>: <letter> -> <state> ; ...'");
        }
        rows.emplace_back(detail::trim_ws(line.substr(0, colon)), line.substr(colon + 1));
      }
    }
    if (alphabet.empty() || states.empty()) {
      raise(ErrorKind::parse_error, "acceptor needs 'alphabet' and 'states' lines");
    }
    auto state_of = [&](std::string const& s) -> state_t {
      auto it = std::find(states.begin(), states.end(), s);
      if (it == states.end()) {
        raise(ErrorKind::parse_error, "undeclared state '" + s + "'");
      }
      return static_cast<state_t>(it - states.begin());
    };
    Acceptor a(alphabet, states.size(), initial.empty() ? 0 : state_of(initial));
    a.set_state_names(states);
    for (auto const& [src, body] : rows) {
      state_t s = state_of(src);
      if (detail::trim_ws(body).empty()) {
        continue;
      }
      for (auto const& item : detail::split_on(body, ';')) {
        auto toks = detail::split_ws(item);
        if (toks.size() != 3 || toks[1] != "->") {
          raise(ErrorKind::parse_error, "bad transition '" + item + "'");
        }
        auto x = a.letter_index(toks[0]);
        if (!x) {
          raise(ErrorKind::parse_error, "undeclared letter '" + toks[0] + "'");
        }
        a.set_next(s, *x, state_of(toks[2]));
      }
    }
    for (auto const& [label, body] : accepts) {
      a.add_label(label);
      for (auto const& s : detail::split_ws(body)) {
        a.set_accepting(label, state_of(s));
      }
    }
    return {name, a};
  }

  inline std::string to_dot(Acceptor const& a, std::string const& name = "acceptor") {
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n  rankdir=LR;\n  init [shape=point];\n";
    for (state_t s = 0; s < a.number_of_states(); ++s) {
      std::string accepted;
      for (auto const& l : a.labels()) {
        if (a.is_accepting(l, s)) {
          accepted += accepted.empty() ? l : "," + l;
        }
      }
      os << "  s" << s << " [label=\"" << a.state_name(s)
         << (accepted.empty() ? "" : "\\n{" + accepted + "}") << "\", shape="
         << (accepted.empty() ? "circle" : "doublecircle") << "];\n";
    }
    os << "  init -> s" << a.initial() << ";\n";
    for (state_t s = 0; s < a.number_of_states(); ++s) {
      for (letter_t x = 0; x < a.alphabet_size(); ++x) {
        if (a.next(s, x) != UNDEFINED_STATE) {
          os << "  s" << s << " -> s" << a.next(s, x) << " [label=\"" << a.alphabet()[x]
             << "\"];\n";
        }
      }
    }
    os << "}\n";
    return os.str();
  }

}  // namespace selfsim

#endif  // SELFSIM_FSA_HPP_
