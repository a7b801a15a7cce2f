// selfsim - computations with self-similar and automatic groups
//
// Text format for Mealy machines and DOT export.
//
//   mealy <name>
//   alphabet <letter> ...
//   states <state> ...
//   identity <state>                      (optional)
//   <state>: <in> -> <out> <next> ; ...   (one line per state)
//
// '#' starts a comment. to_text writes the normalized form, which parses
// back to the same machine.

#ifndef SELFSIM_IO_HPP_
#define SELFSIM_IO_HPP_

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "fsa.hpp"
#include "mealy.hpp"

namespace selfsim {

  inline MealyMachine parse_machine(std::string const& text) {
    std::istringstream       is(text);
    std::string              line, name;
    std::vector<std::string> alphabet, states;
    std::optional<std::string> identity;
    std::vector<std::pair<std::string, std::string>> rows;
    std::size_t              lineno = 0;
    bool                     header = false;
    auto fail = [&](std::string const& msg) {
      raise(ErrorKind::parse_error, "machine line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(is, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      line = detail::trim_ws(line);
      if (line.empty()) {
        continue;
      }
      auto toks = detail::split_ws(line);
      if (toks[0] == "mealy") {
        if (toks.size() > 2) {
          fail("expected 'mealy <name>'");
        }
        header = true;
        name   = toks.size() == 2 ? toks[1] : "";
      } else if (toks[0] == "alphabet") {
        alphabet.assign(toks.begin() + 1, toks.end());
      } else if (toks[0] == "states") {
        states.assign(toks.begin() + 1, toks.end());
      } else if (toks[0] == "identity") {
        if (toks.size() != 2) {
          fail("expected 'identity <state>'");
        }
        identity = toks[1];
      } else {
        auto colon = line.find(':');
        if (colon == std::string::npos) {
          fail("expected '<state>: <in> -> <out> <next> ; ...'");
        }
        rows.emplace_back(detail::trim_ws(line.substr(0, colon)), line.substr(colon + 1));
      }
    }
    if (!header) {
      raise(ErrorKind::parse_error, "missing 'mealy <name>' header");
    }
    if (alphabet.empty() || states.empty()) {
      raise(ErrorKind::parse_error, "machine needs non-empty 'alphabet' and 'states' lines");
    }
    auto index_of = [](std::vector<std::string> const& v, std::string const& s,
                       char const* what) -> std::uint32_t {
      auto it = std::find(v.begin(), v.end(), s);
      if (it == v.end()) {
        raise(ErrorKind::invalid_machine, std::string("undeclared ") + what + " '" + s + "'");
      }
      return static_cast<std::uint32_t>(it - v.begin());
    };
    std::size_t const k = alphabet.size();
    std::vector<Edge> table(states.size() * k);
    std::vector<bool> set(states.size() * k, false);
    for (auto const& [src, body] : rows) {
      state_t q = index_of(states, src, "state");
      for (auto const& item : detail::split_on(body, ';')) {
        if (item.empty()) {
          continue;
        }
        auto toks = detail::split_ws(item);
        if (toks.size() != 4 || toks[1] != "->") {
          raise(ErrorKind::parse_error, "bad transition '" + item + "' for state " + src);
        }
        letter_t i = index_of(alphabet, toks[0], "letter");
        if (set[q * k + i]) {
          raise(ErrorKind::invalid_machine,
                "two transitions for state " + src + " on input " + toks[0]);
        }
        set[q * k + i]   = true;
        table[q * k + i] = {index_of(alphabet, toks[2], "letter"),
                            index_of(states, toks[3], "state")};
      }
    }
    for (std::size_t x = 0; x < set.size(); ++x) {
      if (!set[x]) {
        raise(ErrorKind::invalid_machine, "state " + states[x / k] + " has no transition on "
                                              + alphabet[x % k]);
      }
    }
    std::optional<state_t> id;
    if (identity) {
      id = index_of(states, *identity, "state");
    }
    MealyMachine m(std::move(alphabet), std::move(states), std::move(table), id);
    m.set_name(name);
    return m;
  }

  inline std::string to_text(MealyMachine const& m) {
    std::ostringstream os;
    os << "mealy " << (m.name().empty() ? "machine" : m.name()) << "\nalphabet";
    for (auto const& a : m.alphabet()) {
      os << ' ' << a;
    }
    os << "\nstates";
    for (state_t q = 0; q < m.number_of_states(); ++q) {
      os << ' ' << m.state_name(q);
    }
    os << '\n';
    if (m.identity_state()) {
      os << "identity " << m.state_name(*m.identity_state()) << '\n';
    }
    for (state_t q = 0; q < m.number_of_states(); ++q) {
      os << m.state_name(q) << ':';
      for (letter_t a = 0; a < m.alphabet_size(); ++a) {
        Edge e = m.edge(q, a);
        os << (a == 0 ? " " : " ; ") << m.letter_name(a) << " -> " << m.letter_name(e.output)
           << ' ' << m.state_name(e.next);
      }
      os << '\n';
    }
    return os.str();
  }

  inline std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      raise(ErrorKind::invalid_argument, "cannot open file '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

  namespace detail {
    inline std::string dot_escape(std::string const& s) {
      std::string out;
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out;
    }
  }  // namespace detail

  // Parallel edges between the same pair of states are merged into one
  // edge with a comma-separated label.
  inline std::string to_dot(MealyMachine const& m) {
    std::ostringstream os;
    os << "digraph \"" << detail::dot_escape(m.name().empty() ? "machine" : m.name())
       << "\" {\n  rankdir=LR;\n";
    for (state_t q = 0; q < m.number_of_states(); ++q) {
      os << "  q" << q << " [label=\"" << detail::dot_escape(m.state_name(q)) << "\"";
      if (m.identity_state() == q) {
        os << ", shape=doublecircle";
      }
      os << "];\n";
    }
    for (state_t q = 0; q < m.number_of_states(); ++q) {
      std::vector<std::pair<state_t, std::string>> out;
      for (letter_t a = 0; a < m.alphabet_size(); ++a) {
        Edge        e     = m.edge(q, a);
        std::string label = m.letter_name(a) + "|" + m.letter_name(e.output);
        auto it = std::find_if(out.begin(), out.end(), [&](auto const& p) { return p.first == e.next; });
        if (it == out.end()) {
          out.emplace_back(e.next, label);
        } else {
          it->second += "," + label;
        }
      }
      for (auto const& [r, label] : out) {
        os << "  q" << q << " -> q" << r << " [label=\"" << detail::dot_escape(label) << "\"];\n";
      }
    }
    os << "}\n";
    return os.str();
  }

}  // namespace selfsim

#endif  // SELFSIM_IO_HPP_
