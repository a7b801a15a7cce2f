// selfsim - computations with self-similar and automatic groups
//
// Group words: finite sequences of generator symbols with exponents +1 or
// -1, a small parser for the textual word syntax, free reduction and
// substitution endomorphisms with their iterated relator families.
//
// Syntax accepted by parse_word:
//   a b c         whitespace-separated symbols (any run of characters other
//                 than whitespace and  [ ] ( ) { } , ^ ' )
//   a^-1, a'      inverse
//   a^3, a^-2     integer powers
//   [x,y]         commutator x^-1 y^-1 x y
//   x^y, x^{u v}  conjugation y^-1 x y
//   ( ... )       grouping
//   1             the empty word

#ifndef SELFSIM_WORDS_HPP_
#define SELFSIM_WORDS_HPP_

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace selfsim {

  struct GroupLetter {
    std::string symbol;
    int         exp = 1;  // +1 or -1

    bool operator==(GroupLetter const&) const = default;
    auto operator<=>(GroupLetter const&) const = default;

    [[nodiscard]] GroupLetter inverse() const {
      return {symbol, -exp};
    }
  };

  class GroupWord {
   public:
    GroupWord() = default;
    GroupWord(std::vector<GroupLetter> letters) : _letters(std::move(letters)) {}  // NOLINT

    static GroupWord symbol(std::string s, int exp = 1) {
      return GroupWord({GroupLetter{std::move(s), exp}});
    }

    [[nodiscard]] std::vector<GroupLetter> const& letters() const noexcept {
      return _letters;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _letters.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _letters.empty();
    }
    GroupLetter const& operator[](std::size_t i) const {
      return _letters[i];
    }
    [[nodiscard]] auto begin() const noexcept {
      return _letters.begin();
    }
    [[nodiscard]] auto end() const noexcept {
      return _letters.end();
    }

    void push_back(GroupLetter l) {
      _letters.push_back(std::move(l));
    }

    GroupWord& operator*=(GroupWord const& that) {
      _letters.insert(_letters.end(), that._letters.begin(), that._letters.end());
      return *this;
    }

    friend GroupWord operator*(GroupWord a, GroupWord const& b) {
      a *= b;
      return a;
    }

    [[nodiscard]] GroupWord inverse() const {
      std::vector<GroupLetter> out;
      out.reserve(_letters.size());
      for (auto it = _letters.rbegin(); it != _letters.rend(); ++it) {
        out.push_back(it->inverse());
      }
      return GroupWord(std::move(out));
    }

    [[nodiscard]] GroupWord pow(long n) const {
      GroupWord base = n < 0 ? inverse() : *this;
      GroupWord out;
      for (long i = 0; i < (n < 0 ? -n : n); ++i) {
        out *= base;
      }
      return out;
    }

    // Symbols in order of first appearance.
    [[nodiscard]] std::vector<std::string> symbols() const {
      std::vector<std::string> out;
      for (auto const& l : _letters) {
        if (std::find(out.begin(), out.end(), l.symbol) == out.end()) {
          out.push_back(l.symbol);
        }
      }
      return out;
    }

    // "1" for the empty word, otherwise letters separated by spaces with
    // inverses written s^-1.
    [[nodiscard]] std::string to_string() const {
      if (_letters.empty()) {
        return "1";
      }
      std::string out;
      for (std::size_t i = 0; i < _letters.size(); ++i) {
        if (i > 0) {
          out += ' ';
        }
        out += _letters[i].symbol;
        if (_letters[i].exp < 0) {
          out += "^-1";
        }
      }
      return out;
    }

    bool operator==(GroupWord const&) const = default;
    auto operator<=>(GroupWord const&) const = default;

   private:
    std::vector<GroupLetter> _letters;
  };

  inline GroupWord commutator(GroupWord const& x, GroupWord const& y) {
    return x.inverse() * y.inverse() * x * y;
  }

  inline GroupWord conjugate(GroupWord const& x, GroupWord const& y) {
    return y.inverse() * x * y;
  }

  namespace detail {

    class WordParser {
     public:
      explicit WordParser(std::string const& text) : _s(text) {}

      GroupWord parse() {
        GroupWord w = expr();
        skip();
        if (_i != _s.size()) {
          fail("unexpected '" + std::string(1, _s[_i]) + "'");
        }
        return w;
      }

     private:
      static bool special(char c) {
        return std::isspace(static_cast<unsigned char>(c)) || c == '[' || c == ']' || c == '('
               || c == ')' || c == '{' || c == '}' || c == ',' || c == '^' || c == '\'';
      }

      [[noreturn]] void fail(std::string const& msg) const {
        raise(ErrorKind::parse_error,
              "cannot parse word \"" + _s + "\" at position " + std::to_string(_i) + ": " + msg);
      }

      void skip() {
        while (_i < _s.size() && std::isspace(static_cast<unsigned char>(_s[_i]))) {
          ++_i;
        }
      }

      bool peek(char c) {
        skip();
        return _i < _s.size() && _s[_i] == c;
      }

      void expect(char c) {
        if (!peek(c)) {
          fail(std::string("expected '") + c + "'");
        }
        ++_i;
      }

      GroupWord expr() {
        GroupWord w;
        while (true) {
          skip();
          if (_i == _s.size() || _s[_i] == ')' || _s[_i] == ']' || _s[_i] == '}'
              || _s[_i] == ',') {
            return w;
          }
          w *= term();
        }
      }

      GroupWord term() {
        GroupWord w = atom();
        while (true) {
          if (_i < _s.size() && _s[_i] == '\'') {
            ++_i;
            w = w.inverse();
          } else if (_i < _s.size() && _s[_i] == '^') {
            ++_i;
            w = exponent(std::move(w));
          } else {
            return w;
          }
        }
      }

      GroupWord exponent(GroupWord base) {
        if (_i < _s.size() && (_s[_i] == '-' || std::isdigit(static_cast<unsigned char>(_s[_i])))) {
          bool neg = _s[_i] == '-';
          if (neg) {
            ++_i;
          }
          std::size_t start = _i;
          while (_i < _s.size() && std::isdigit(static_cast<unsigned char>(_s[_i]))) {
            ++_i;
          }
          if (start == _i) {
            fail("expected an integer exponent");
          }
          // A trailing symbol character means this was a symbol, e.g. x^3z.
          if (_i < _s.size() && !special(_s[_i])) {
            if (neg) {
              fail("expected an integer exponent");
            }
            _i = start;
            return conjugate(base, atom());
          }
          long n = std::stol(_s.substr(start, _i - start));
          return base.pow(neg ? -n : n);
        }
        if (_i < _s.size() && _s[_i] == '{') {
          ++_i;
          GroupWord c = expr();
          expect('}');
          return conjugate(base, c);
        }
        return conjugate(base, atom());
      }

      GroupWord atom() {
        skip();
        if (_i == _s.size()) {
          fail("unexpected end of input");
        }
        char c = _s[_i];
        if (c == '(') {
          ++_i;
          GroupWord w = expr();
          expect(')');
          return w;
        }
        if (c == '[') {
          ++_i;
          GroupWord x = expr();
          expect(',');
          GroupWord y = expr();
          expect(']');
          return commutator(x, y);
        }
        if (special(c)) {
          fail("unexpected '" + std::string(1, c) + "'");
        }
        std::size_t start = _i;
        while (_i < _s.size() && !special(_s[_i])) {
          ++_i;
        }
        std::string sym = _s.substr(start, _i - start);
        if (sym == "1") {
          return {};
        }
        return GroupWord::symbol(std::move(sym));
      }

      std::string _s;
      std::size_t _i = 0;
    };

  }  // namespace detail

  inline GroupWord parse_word(std::string const& text) {
    return detail::WordParser(text).parse();
  }

  inline GroupWord free_reduce(GroupWord const& w) {
    std::vector<GroupLetter> out;
    out.reserve(w.size());
    for (auto const& l : w) {
      if (!out.empty() && out.back().symbol == l.symbol && out.back().exp == -l.exp) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return GroupWord(std::move(out));
  }

  [[nodiscard]] inline bool is_freely_reduced(GroupWord const& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i].symbol == w[i - 1].symbol && w[i].exp == -w[i - 1].exp) {
        return false;
      }
    }
    return true;
  }

  // A substitution on generator symbols; unlisted symbols map to themselves.
  class Endomorphism {
   public:
    Endomorphism() = default;
    explicit Endomorphism(std::map<std::string, GroupWord> rules) : _rules(std::move(rules)) {}

    // From pairs of strings in word syntax, e.g. {{"a", "a c a"}, {"b", "d"}}.
    static Endomorphism parse(std::vector<std::pair<std::string, std::string>> const& rules) {
      std::map<std::string, GroupWord> m;
      for (auto const& [k, v] : rules) {
        m[k] = parse_word(v);
      }
      return Endomorphism(std::move(m));
    }

    [[nodiscard]] std::map<std::string, GroupWord> const& rules() const noexcept {
      return _rules;
    }

    [[nodiscard]] GroupWord image(GroupLetter const& l) const {
      auto it = _rules.find(l.symbol);
      GroupWord w = it == _rules.end() ? GroupWord::symbol(l.symbol) : it->second;
      return l.exp < 0 ? w.inverse() : w;
    }

    [[nodiscard]] GroupWord operator()(GroupWord const& w) const {
      GroupWord out;
      for (auto const& l : w) {
        out *= image(l);
      }
      return out;
    }

   private:
    std::map<std::string, GroupWord> _rules;
  };

  inline GroupWord substitute(Endomorphism const& e, GroupWord const& w) {
    return e(w);
  }

  // sigma^k(r) for r in base and 0 <= k <= n_max, freely reduced, ordered by
  // k then by position in base.
  inline std::vector<GroupWord> relator_family(std::vector<GroupWord> const& base,
                                               Endomorphism const& e, std::size_t n_max) {
    std::vector<GroupWord> out;
    std::vector<GroupWord> cur = base;
    for (std::size_t k = 0; k <= n_max; ++k) {
      for (auto& r : cur) {
        r = free_reduce(r);
        out.push_back(r);
      }
      if (k < n_max) {
        for (auto& r : cur) {
          r = e(r);
        }
      }
    }
    return out;
  }

}  // namespace selfsim

#endif  // SELFSIM_WORDS_HPP_
