// selfsim - computations with self-similar and automatic groups
//
// Mealy machines: complete, deterministic, letter-to-letter transducers
// tau : Q x A -> A x Q, written q.i = o.r for a transition from state q to
// state r reading i and writing o. This header provides validation,
// transduction, inversion, products, the dual machine, Hopcroft
// minimization and canonical forms used as exact equality keys.

#ifndef SELFSIM_MEALY_HPP_
#define SELFSIM_MEALY_HPP_

#include <algorithm>
#include <cstddef>
#include <cstring>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "types.hpp"

namespace selfsim {

  struct Edge {
    letter_t output = 0;
    state_t  next   = 0;

    bool operator==(Edge const&) const = default;
  };

  class MealyMachine {
   public:
    MealyMachine() = default;

    // table[q * |A| + a] is the transition of state q on input a. An empty
    // state-name list means the default names q0, q1, ...
    MealyMachine(std::vector<std::string> alphabet, std::vector<std::string> states,
                 std::vector<Edge> table, std::optional<state_t> identity = std::nullopt,
                 std::size_t num_states = 0)
        : _alphabet(std::move(alphabet)),
          _states(std::move(states)),
          _table(std::move(table)),
          _identity(identity),
          _num_states(_states.empty() ? num_states : _states.size()) {
      validate();
    }

    [[nodiscard]] std::size_t alphabet_size() const noexcept {
      return _alphabet.size();
    }
    [[nodiscard]] std::size_t number_of_states() const noexcept {
      return _num_states;
    }
    [[nodiscard]] std::vector<std::string> const& alphabet() const noexcept {
      return _alphabet;
    }
    [[nodiscard]] std::vector<std::string> const& state_names() const noexcept {
      return _states;
    }
    [[nodiscard]] std::string state_name(state_t q) const {
      return _states.empty() ? "q" + std::to_string(q) : _states[q];
    }
    [[nodiscard]] std::string const& letter_name(letter_t a) const {
      return _alphabet[a];
    }
    [[nodiscard]] std::vector<Edge> const& table() const noexcept {
      return _table;
    }
    [[nodiscard]] std::optional<state_t> identity_state() const noexcept {
      return _identity;
    }
    [[nodiscard]] std::string const& name() const noexcept {
      return _name;
    }
    void set_name(std::string name) {
      _name = std::move(name);
    }

    [[nodiscard]] Edge edge(state_t q, letter_t a) const noexcept {
      return _table[q * _alphabet.size() + a];
    }
    [[nodiscard]] letter_t output(state_t q, letter_t a) const noexcept {
      return edge(q, a).output;
    }
    [[nodiscard]] state_t next(state_t q, letter_t a) const noexcept {
      return edge(q, a).next;
    }
    [[nodiscard]] std::span<Edge const> row(state_t q) const noexcept {
      return {_table.data() + q * _alphabet.size(), _alphabet.size()};
    }

    [[nodiscard]] std::optional<state_t> state_index(std::string const& name) const {
      if (_states.empty()) {
        if (name.size() > 1 && name[0] == 'q') {
          try {
            std::size_t pos = 0;
            auto        v   = std::stoul(name.substr(1), &pos);
            if (pos + 1 == name.size() && v < _num_states) {
              return static_cast<state_t>(v);
            }
          } catch (std::exception const&) {
          }
        }
        return std::nullopt;
      }
      auto it = std::find(_states.begin(), _states.end(), name);
      if (it == _states.end()) {
        return std::nullopt;
      }
      return static_cast<state_t>(it - _states.begin());
    }

    [[nodiscard]] std::optional<letter_t> letter_index(std::string const& name) const {
      auto it = std::find(_alphabet.begin(), _alphabet.end(), name);
      if (it == _alphabet.end()) {
        return std::nullopt;
      }
      return static_cast<letter_t>(it - _alphabet.begin());
    }

    // True if q copies every letter and loops to itself.
    [[nodiscard]] bool is_identity_row(state_t q) const noexcept {
      for (letter_t a = 0; a < _alphabet.size(); ++a) {
        if (output(q, a) != a || next(q, a) != q) {
          return false;
        }
      }
      return true;
    }

    // Same transitions and identity designation; names and machine name are
    // ignored.
    [[nodiscard]] bool same_structure(MealyMachine const& that) const noexcept {
      return _alphabet.size() == that._alphabet.size() && _num_states == that._num_states
             && _table == that._table;
    }

    bool operator==(MealyMachine const& that) const {
      return _alphabet == that._alphabet && _num_states == that._num_states
             && _table == that._table && _identity == that._identity
             && state_names_or_default() == that.state_names_or_default();
    }

    [[nodiscard]] std::vector<std::string> state_names_or_default() const {
      std::vector<std::string> out;
      for (state_t q = 0; q < _num_states; ++q) {
        out.push_back(state_name(q));
      }
      return out;
    }

   private:
    void validate() const {
      if (_alphabet.empty()) {
        raise(ErrorKind::invalid_machine, "alphabet must have at least one letter");
      }
      if (_num_states == 0) {
        raise(ErrorKind::invalid_machine, "machine must have at least one state");
      }
      if (_table.size() != _num_states * _alphabet.size()) {
        raise(ErrorKind::invalid_machine, "transition table is not total");
      }
      for (auto const& e : _table) {
        if (e.output >= _alphabet.size() || e.next >= _num_states) {
          raise(ErrorKind::invalid_machine, "transition references an undeclared letter or state");
        }
      }
      auto distinct = [](std::vector<std::string> v) {
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) == v.end();
      };
      if (!distinct(_alphabet) || !distinct(_states)) {
        raise(ErrorKind::invalid_machine, "letter and state names must be distinct");
      }
      if (_identity && (*_identity >= _num_states || !is_identity_row(*_identity))) {
        raise(ErrorKind::invalid_machine, "designated identity state does not copy and loop");
      }
    }

    std::vector<std::string> _alphabet;
    std::vector<std::string> _states;
    std::vector<Edge>        _table;
    std::optional<state_t>   _identity;
    std::size_t              _num_states = 0;
    std::string              _name;
  };

  struct InitialMachine {
    MealyMachine machine;
    state_t      start = 0;
  };

  inline InitialMachine at(MealyMachine m, std::string const& state) {
    auto q = m.state_index(state);
    if (!q) {
      raise(ErrorKind::unknown_symbol, "unknown state '" + state + "'");
    }
    return {std::move(m), *q};
  }

  // Returns a copy with the identity designation set to the first state that
  // copies and loops, if any.
  inline MealyMachine with_detected_identity(MealyMachine const& m) {
    std::optional<state_t> id;
    for (state_t q = 0; q < m.number_of_states() && !id; ++q) {
      if (m.is_identity_row(q)) {
        id = q;
      }
    }
    MealyMachine out(m.alphabet(), m.state_names(), m.table(), id, m.number_of_states());
    out.set_name(m.name());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Words over the alphabet
  ////////////////////////////////////////////////////////////////////////

  // Splits on whitespace when present; otherwise, if every letter name is a
  // single character, reads one letter per character.
  inline Word parse_letters(std::vector<std::string> const& alphabet, std::string const& text) {
    std::vector<std::string> tokens;
    bool const has_space = text.find_first_of(" \t\n") != std::string::npos;
    bool const single    = std::all_of(alphabet.begin(), alphabet.end(),
                                       [](auto const& s) { return s.size() == 1; });
    if (has_space || !single) {
      std::istringstream is(text);
      std::string        tok;
      while (is >> tok) {
        tokens.push_back(tok);
      }
    } else {
      for (char c : text) {
        tokens.emplace_back(1, c);
      }
    }
    Word w;
    for (auto const& t : tokens) {
      auto it = std::find(alphabet.begin(), alphabet.end(), t);
      if (it == alphabet.end()) {
        raise(ErrorKind::unknown_letter, "letter '" + t + "' is not in the alphabet");
      }
      w.push_back(static_cast<letter_t>(it - alphabet.begin()));
    }
    return w;
  }

  inline std::string letters_to_string(std::vector<std::string> const& alphabet,
                                       std::span<letter_t const> w) {
    bool const single = std::all_of(alphabet.begin(), alphabet.end(),
                                    [](auto const& s) { return s.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!single && i > 0) {
        out += ' ';
      }
      out += alphabet[w[i]];
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Transduction and basic constructions
  ////////////////////////////////////////////////////////////////////////

  // Output along the unique path labelled w from q; also returns the state
  // reached (the section of q at w).
  inline std::pair<Word, state_t> transduce(MealyMachine const& m, state_t q,
                                            std::span<letter_t const> w) {
    Word out;
    out.reserve(w.size());
    for (letter_t a : w) {
      if (a >= m.alphabet_size()) {
        raise(ErrorKind::unknown_letter, "letter index out of range");
      }
      Edge e = m.edge(q, a);
      out.push_back(e.output);
      q = e.next;
    }
    return {std::move(out), q};
  }

  inline Word apply(MealyMachine const& m, state_t q, std::span<letter_t const> w) {
    return transduce(m, q, w).first;
  }

  inline Word apply(InitialMachine const& m, std::span<letter_t const> w) {
    return selfsim::apply(m.machine, m.start, w);
  }

  [[nodiscard]] inline bool is_invertible_state(MealyMachine const& m, state_t q) {
    std::vector<bool> seen(m.alphabet_size(), false);
    for (letter_t a = 0; a < m.alphabet_size(); ++a) {
      letter_t o = m.output(q, a);
      if (seen[o]) {
        return false;
      }
      seen[o] = true;
    }
    return true;
  }

  [[nodiscard]] inline bool is_invertible(MealyMachine const& m) {
    for (state_t q = 0; q < m.number_of_states(); ++q) {
      if (!is_invertible_state(m, q)) {
        return false;
      }
    }
    return true;
  }

  inline std::string inverse_name(std::string const& name) {
    constexpr std::string_view suffix = "^-1";
    if (name.size() > suffix.size() && name.ends_with(suffix)) {
      return name.substr(0, name.size() - suffix.size());
    }
    return name + std::string(suffix);
  }

  // q^-1 . o = i . r^-1 whenever q . i = o . r. The identity state keeps its
  // name, every other name toggles a trailing "^-1".
  inline MealyMachine inverse(MealyMachine const& m) {
    if (!is_invertible(m)) {
      raise(ErrorKind::not_invertible, "machine is not invertible");
    }
    std::size_t const k = m.alphabet_size();
    std::vector<Edge> table(m.number_of_states() * k);
    for (state_t q = 0; q < m.number_of_states(); ++q) {
      for (letter_t i = 0; i < k; ++i) {
        Edge e                    = m.edge(q, i);
        table[q * k + e.output] = {i, e.next};
      }
    }
    std::vector<std::string> names;
    if (!m.state_names().empty()) {
      for (state_t q = 0; q < m.number_of_states(); ++q) {
        names.push_back(m.identity_state() == q ? m.state_name(q)
                                                : inverse_name(m.state_name(q)));
      }
    }
    MealyMachine out(m.alphabet(), std::move(names), std::move(table), m.identity_state(),
                     m.number_of_states());
    if (!m.name().empty()) {
      out.set_name(inverse_name(m.name()));
    }
    return out;
  }

  // State (q, r) acts as "first r, then q": (q, r) . i = q . (r . i).
  inline MealyMachine product(MealyMachine const& m, MealyMachine const& n) {
    if (m.alphabet() != n.alphabet()) {
      raise(ErrorKind::alphabet_mismatch, "product of machines over different alphabets");
    }
    std::size_t const k  = m.alphabet_size();
    std::size_t const nr = n.number_of_states();
    std::vector<Edge>        table;
    std::vector<std::string> names;
    table.reserve(m.number_of_states() * nr * k);
    for (state_t q = 0; q < m.number_of_states(); ++q) {
      for (state_t r = 0; r < nr; ++r) {
        names.push_back("(" + m.state_name(q) + "," + n.state_name(r) + ")");
        for (letter_t i = 0; i < k; ++i) {
          Edge er = n.edge(r, i);
          Edge eq = m.edge(q, er.output);
          table.push_back({eq.output, static_cast<state_t>(eq.next * nr + er.next)});
        }
      }
    }
    std::optional<state_t> id;
    if (m.identity_state() && n.identity_state()) {
      id = static_cast<state_t>(*m.identity_state() * nr + *n.identity_state());
    }
    return MealyMachine(m.alphabet(), std::move(names), std::move(table), id);
  }

  // Reachable part of the composite "first, then second", started at
  // (first.start, second.start). Throws ResourceError past `cap` states.
  inline InitialMachine then(InitialMachine const& first, InitialMachine const& second,
                             std::size_t cap = 100'000) {
    MealyMachine const& a = first.machine;
    MealyMachine const& b = second.machine;
    if (a.alphabet() != b.alphabet()) {
      raise(ErrorKind::alphabet_mismatch, "composition of machines over different alphabets");
    }
    std::size_t const k = a.alphabet_size();
    std::unordered_map<std::uint64_t, state_t> index;
    std::vector<std::pair<state_t, state_t>>   pairs;
    auto key = [](state_t p, state_t r) { return (std::uint64_t(p) << 32) | r; };
    index.emplace(key(first.start, second.start), 0);
    pairs.emplace_back(first.start, second.start);
    std::vector<Edge> table;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto [p, r] = pairs[i];
      for (letter_t x = 0; x < k; ++x) {
        Edge ea = a.edge(p, x);
        Edge eb = b.edge(r, ea.output);
        auto [it, ok] = index.emplace(key(ea.next, eb.next), static_cast<state_t>(pairs.size()));
        if (ok) {
          if (pairs.size() >= cap) {
            throw ResourceError("composite machine exceeds the state cap", cap);
          }
          pairs.emplace_back(ea.next, eb.next);
        }
        table.push_back({eb.output, it->second});
      }
    }
    return {MealyMachine(a.alphabet(), {}, std::move(table), std::nullopt, pairs.size()), 0};
  }

  // States = A, alphabet = Q; i . q = r . o whenever q . i = o . r.
  inline MealyMachine dual(MealyMachine const& m) {
    std::size_t const nq = m.number_of_states();
    std::size_t const k  = m.alphabet_size();
    std::vector<Edge> table(k * nq);
    for (state_t q = 0; q < nq; ++q) {
      for (letter_t i = 0; i < k; ++i) {
        Edge e             = m.edge(q, i);
        table[i * nq + q] = {e.next, e.output};
      }
    }
    auto out = with_detected_identity(
        MealyMachine(m.state_names_or_default(), m.alphabet(), std::move(table)));
    if (!m.name().empty()) {
      out.set_name(m.name() + "^dual");
    }
    return out;
  }

  struct Classification {
    bool invertible   = false;
    bool reversible   = false;
    bool bireversible = false;

    bool operator==(Classification const&) const = default;
  };

  inline Classification classify(MealyMachine const& m) {
    Classification c;
    c.invertible   = is_invertible(m);
    c.reversible   = is_invertible(dual(m));
    c.bireversible = c.invertible && c.reversible && is_invertible(dual(inverse(m)));
    return c;
  }

  ////////////////////////////////////////////////////////////////////////
  // Minimization
  ////////////////////////////////////////////////////////////////////////

  // Hopcroft partition refinement. The initial partition groups states by
  // their output row a -> output(q, a); blocks are then split by inverse
  // images under each input letter. Returns a class index per state,
  // numbered by first occurrence in state order.
  inline std::vector<state_t> equivalence_classes(MealyMachine const& m) {
    std::size_t const n = m.number_of_states();
    std::size_t const k = m.alphabet_size();

    std::vector<state_t>     elems(n), pos(n), block(n);
    std::vector<std::size_t> first, last, marked;
    {
      std::map<std::vector<letter_t>, std::vector<state_t>> rows;
      for (state_t q = 0; q < n; ++q) {
        std::vector<letter_t> r(k);
        for (letter_t a = 0; a < k; ++a) {
          r[a] = m.output(q, a);
        }
        rows[r].push_back(q);
      }
      std::size_t i = 0;
      for (auto const& [r, qs] : rows) {
        first.push_back(i);
        for (state_t q : qs) {
          elems[i] = q;
          pos[q]   = static_cast<state_t>(i);
          block[q] = static_cast<state_t>(first.size() - 1);
          ++i;
        }
        last.push_back(i);
      }
      marked.assign(first.size(), 0);
    }

    // preds[a] in CSR form.
    std::vector<std::size_t> pstart((n + 1) * k, 0);
    std::vector<state_t>     plist(n * k);
    for (letter_t a = 0; a < k; ++a) {
      std::size_t* cnt = &pstart[a * (n + 1)];
      for (state_t q = 0; q < n; ++q) {
        ++cnt[m.next(q, a) + 1];
      }
      for (std::size_t r = 0; r < n; ++r) {
        cnt[r + 1] += cnt[r];
      }
      std::vector<std::size_t> fill(cnt, cnt + n);
      for (state_t q = 0; q < n; ++q) {
        plist[a * n + fill[m.next(q, a)]++] = q;
      }
    }

    std::vector<std::pair<state_t, letter_t>> work;
    std::vector<std::vector<bool>>            in_work(first.size(), std::vector<bool>(k, true));
    for (state_t b = 0; b < first.size(); ++b) {
      for (letter_t a = 0; a < k; ++a) {
        work.emplace_back(b, a);
      }
    }

    std::vector<state_t> splitter, touched;
    while (!work.empty()) {
      auto [b, a] = work.back();
      work.pop_back();
      in_work[b][a] = false;

      splitter.clear();
      for (std::size_t i = first[b]; i < last[b]; ++i) {
        state_t            r  = elems[i];
        std::size_t const* cs = &pstart[a * (n + 1)];
        for (std::size_t j = cs[r]; j < cs[r + 1]; ++j) {
          splitter.push_back(plist[a * n + j]);
        }
      }
      touched.clear();
      for (state_t q : splitter) {
        state_t c = block[q];
        if (marked[c] == 0) {
          touched.push_back(c);
        }
        // Move q to the marked prefix of its block.
        std::size_t dst = first[c] + marked[c];
        state_t     o   = elems[dst];
        std::swap(elems[dst], elems[pos[q]]);
        pos[o] = pos[q];
        pos[q] = static_cast<state_t>(dst);
        ++marked[c];
      }
      for (state_t c : touched) {
        std::size_t const mk = marked[c];
        marked[c]            = 0;
        if (mk == last[c] - first[c]) {
          continue;
        }
        auto const d = static_cast<state_t>(first.size());
        first.push_back(first[c]);
        last.push_back(first[c] + mk);
        marked.push_back(0);
        first[c] += mk;
        for (std::size_t i = first[d]; i < last[d]; ++i) {
          block[elems[i]] = d;
        }
        in_work.emplace_back(k, false);
        std::size_t const size_c = last[c] - first[c];
        std::size_t const size_d = last[d] - first[d];
        for (letter_t x = 0; x < k; ++x) {
          if (in_work[c][x]) {
            in_work[d][x] = true;
            work.emplace_back(d, x);
          } else {
            state_t smaller       = size_d <= size_c ? d : c;
            in_work[smaller][x] = true;
            work.emplace_back(smaller, x);
          }
        }
      }
    }

    // Renumber by first occurrence.
    std::vector<state_t> renum(first.size(), UNDEFINED_STATE);
    std::vector<state_t> out(n);
    state_t              next_id = 0;
    for (state_t q = 0; q < n; ++q) {
      if (renum[block[q]] == UNDEFINED_STATE) {
        renum[block[q]] = next_id++;
      }
      out[q] = renum[block[q]];
    }
    return out;
  }

  // A minimized initial machine restricted to states reachable from the
  // start, renumbered breadth-first (letters in alphabet order) so that
  // structural equality coincides with behavioural equality.
  class CanonicalMachine {
   public:
    CanonicalMachine() = default;

    explicit CanonicalMachine(MealyMachine m) : _machine(std::move(m)) {
      _key.resize(sizeof(std::uint32_t) * (1 + 2 * _machine.table().size()));
      char*         p = _key.data();
      std::uint32_t k = static_cast<std::uint32_t>(_machine.alphabet_size());
      std::memcpy(p, &k, sizeof k);
      p += sizeof k;
      for (auto const& e : _machine.table()) {
        std::memcpy(p, &e.output, sizeof e.output);
        p += sizeof e.output;
        std::memcpy(p, &e.next, sizeof e.next);
        p += sizeof e.next;
      }
    }

    [[nodiscard]] MealyMachine const& machine() const noexcept {
      return _machine;
    }
    [[nodiscard]] static constexpr state_t start() noexcept {
      return 0;
    }
    [[nodiscard]] InitialMachine initial() const {
      return {_machine, 0};
    }
    [[nodiscard]] std::size_t number_of_states() const noexcept {
      return _machine.number_of_states();
    }
    // Byte-string serialization of the transition table; equal keys iff
    // equal behaviour.
    [[nodiscard]] std::string const& key() const noexcept {
      return _key;
    }
    [[nodiscard]] bool is_identity() const noexcept {
      return _machine.number_of_states() == 1 && _machine.is_identity_row(0);
    }

    bool operator==(CanonicalMachine const& that) const noexcept {
      return _key == that._key;
    }
    bool operator<(CanonicalMachine const& that) const noexcept {
      return _key < that._key;
    }

   private:
    MealyMachine _machine;
    std::string  _key;
  };

  // Canonical form of the state `start` given a behavioural partition of m.
  inline CanonicalMachine canonical_from_classes(MealyMachine const& m,
                                                 std::vector<state_t> const& cls,
                                                 state_t start) {
    std::size_t const                       k = m.alphabet_size();
    std::unordered_map<state_t, state_t>    id;  // class -> canonical index
    std::vector<state_t>                    rep;  // canonical index -> a state
    id.emplace(cls[start], 0);
    rep.push_back(start);
    std::vector<Edge> table;
    for (std::size_t i = 0; i < rep.size(); ++i) {
      for (letter_t a = 0; a < k; ++a) {
        Edge e        = m.edge(rep[i], a);
        auto [it, ok] = id.emplace(cls[e.next], static_cast<state_t>(rep.size()));
        if (ok) {
          rep.push_back(e.next);
        }
        table.push_back({e.output, it->second});
      }
    }
    std::optional<state_t> ident;
    MealyMachine canon(m.alphabet(), {}, std::move(table), std::nullopt, rep.size());
    for (state_t q = 0; q < canon.number_of_states(); ++q) {
      if (canon.is_identity_row(q)) {
        ident = q;
        break;
      }
    }
    return CanonicalMachine(
        MealyMachine(canon.alphabet(), {}, canon.table(), ident, canon.number_of_states()));
  }

  // Sub-machine of the states reachable from `start` (breadth-first order);
  // start becomes state 0.
  inline InitialMachine reachable_part(InitialMachine const& im) {
    MealyMachine const&  m = im.machine;
    std::size_t const    k = m.alphabet_size();
    std::vector<state_t> id(m.number_of_states(), UNDEFINED_STATE);
    std::vector<state_t> order{im.start};
    id[im.start] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (letter_t a = 0; a < k; ++a) {
        state_t t = m.next(order[i], a);
        if (id[t] == UNDEFINED_STATE) {
          id[t] = static_cast<state_t>(order.size());
          order.push_back(t);
        }
      }
    }
    if (order.size() == m.number_of_states() && im.start == 0) {
      bool identity_order = true;
      for (state_t i = 0; i < order.size() && identity_order; ++i) {
        identity_order = order[i] == i;
      }
      if (identity_order) {
        return im;
      }
    }
    std::vector<Edge>        table;
    std::vector<std::string> names;
    for (state_t q : order) {
      if (!m.state_names().empty()) {
        names.push_back(m.state_name(q));
      }
      for (letter_t a = 0; a < k; ++a) {
        Edge e = m.edge(q, a);
        table.push_back({e.output, id[e.next]});
      }
    }
    std::optional<state_t> ident;
    if (m.identity_state() && id[*m.identity_state()] != UNDEFINED_STATE) {
      ident = id[*m.identity_state()];
    }
    return {MealyMachine(m.alphabet(), std::move(names), std::move(table), ident, order.size()),
            0};
  }

  inline CanonicalMachine minimize(InitialMachine const& im) {
    InitialMachine r = reachable_part(im);
    return canonical_from_classes(r.machine, equivalence_classes(r.machine), 0);
  }

  inline CanonicalMachine canonical_identity(std::vector<std::string> const& alphabet) {
    std::vector<Edge> table;
    for (letter_t a = 0; a < alphabet.size(); ++a) {
      table.push_back({a, 0});
    }
    return CanonicalMachine(MealyMachine(alphabet, {}, std::move(table), state_t{0}, 1));
  }

  [[nodiscard]] inline bool behavior_eq(InitialMachine const& m, InitialMachine const& n) {
    if (m.machine.alphabet() != n.machine.alphabet()) {
      raise(ErrorKind::alphabet_mismatch, "behaviour comparison across different alphabets");
    }
    return minimize(m) == minimize(n);
  }

  // States whose transformation is the identity: every state reachable from
  // them copies its input.
  inline std::vector<bool> identity_behaviour(MealyMachine const& m) {
    std::size_t const n = m.number_of_states();
    std::vector<std::vector<state_t>> preds(n);
    std::vector<bool>                 bad(n, false);
    std::vector<state_t>              stack;
    for (state_t q = 0; q < n; ++q) {
      for (letter_t a = 0; a < m.alphabet_size(); ++a) {
        preds[m.next(q, a)].push_back(q);
        if (m.output(q, a) != a && !bad[q]) {
          bad[q] = true;
          stack.push_back(q);
        }
      }
    }
    while (!stack.empty()) {
      state_t q = stack.back();
      stack.pop_back();
      for (state_t p : preds[q]) {
        if (!bad[p]) {
          bad[p] = true;
          stack.push_back(p);
        }
      }
    }
    std::vector<bool> out(n);
    for (state_t q = 0; q < n; ++q) {
      out[q] = !bad[q];
    }
    return out;
  }

}  // namespace selfsim

#endif  // SELFSIM_MEALY_HPP_
