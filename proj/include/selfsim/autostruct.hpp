// selfsim - computations with self-similar and automatic groups
//
// Automatic structures (a language of normal forms plus multiplier
// acceptors on padded pairs), the quadratic word-problem solver, shortlex
// uniqueness, a bounded fellow-traveller check, Dehn's algorithm for
// surface groups and the growth series of surface groups.
//
// Generator alphabets list each generator immediately followed by its
// inverse: letter 2i is a generator and letter 2i+1 its inverse.

#ifndef SELFSIM_AUTOSTRUCT_HPP_
#define SELFSIM_AUTOSTRUCT_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"
#include "fsa.hpp"
#include "geometry.hpp"
#include "types.hpp"
#include "words.hpp"

namespace selfsim {

  inline constexpr char const* LANGUAGE_LABEL = "L";
  inline constexpr char const* IDENTITY_LABEL = "1";

  inline letter_t inverse_letter(letter_t a) noexcept {
    return a ^ 1u;
  }

  inline Word inverse_word(std::span<letter_t const> w) {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back(inverse_letter(*it));
    }
    return out;
  }

  inline Word free_reduce(std::span<letter_t const> w) {
    Word out;
    for (letter_t a : w) {
      if (!out.empty() && out.back() == inverse_letter(a)) {
        out.pop_back();
      } else {
        out.push_back(a);
      }
    }
    return out;
  }

  // Generator names with inverses interleaved: {x, y} -> {x, x^-1, y, y^-1}.
  inline std::vector<std::string> symmetric_alphabet(std::vector<std::string> const& gens) {
    std::vector<std::string> out;
    for (auto const& g : gens) {
      out.push_back(g);
      out.push_back(g + "^-1");
    }
    return out;
  }

  // Converts between group words and letter indices of a symmetric alphabet.
  inline Word to_letters(std::vector<std::string> const& alphabet, GroupWord const& w) {
    Word out;
    for (auto const& l : w) {
      auto it = std::find(alphabet.begin(), alphabet.end(), l.symbol);
      if (it == alphabet.end() || (it - alphabet.begin()) % 2 != 0) {
        raise(ErrorKind::unknown_symbol, "'" + l.symbol + "' is not a generator");
      }
      auto a = static_cast<letter_t>(it - alphabet.begin());
      out.push_back(l.exp > 0 ? a : inverse_letter(a));
    }
    return out;
  }

  inline GroupWord to_group_word(std::vector<std::string> const& alphabet,
                                 std::span<letter_t const> w) {
    GroupWord out;
    for (letter_t a : w) {
      out.push_back({alphabet[a & ~1u], (a & 1u) ? -1 : 1});
    }
    return out;
  }

  inline std::string word_to_string(std::vector<std::string> const& alphabet,
                                    std::span<letter_t const> w) {
    return to_group_word(alphabet, w).to_string();
  }

  inline Word parse_generator_word(std::vector<std::string> const& alphabet,
                                   std::string const& text) {
    return to_letters(alphabet, parse_word(text));
  }

  ////////////////////////////////////////////////////////////////////////
  // Automatic structures
  ////////////////////////////////////////////////////////////////////////

  struct AutomaticStructure {
    std::vector<std::string> alphabet;    // symmetric generator alphabet
    Acceptor                 language;    // label LANGUAGE_LABEL
    Acceptor                 multiplier;  // over pairs(); labels "1" and each letter

    [[nodiscard]] PairAlphabet pairs() const {
      return PairAlphabet(alphabet);
    }

    void validate() const {
      if (alphabet.empty() || alphabet.size() % 2 != 0) {
        raise(ErrorKind::malformed_structure, "generator alphabet must pair letters with inverses");
      }
      if (language.alphabet() != alphabet) {
        raise(ErrorKind::malformed_structure, "language alphabet differs from the generators");
      }
      if (multiplier.alphabet() != pairs().names()) {
        raise(ErrorKind::malformed_structure, "multiplier alphabet is not the padded pairs");
      }
      if (!language.has_label(LANGUAGE_LABEL)) {
        raise(ErrorKind::malformed_structure, "language has no accepting label 'L'");
      }
      if (!multiplier.has_label(IDENTITY_LABEL)) {
        raise(ErrorKind::malformed_structure, "multiplier has no label '1'");
      }
      for (auto const& a : alphabet) {
        if (!multiplier.has_label(a)) {
          raise(ErrorKind::malformed_structure, "multiplier has no label '" + a + "'");
        }
      }
    }
  };

  inline Word pad_pairs(PairAlphabet const& pa, std::span<letter_t const> u,
                        std::span<letter_t const> v) {
    return pa.encode(u, v);
  }

  namespace detail {

    inline char const* const Z2_LANGUAGE_TEXT = R"(acceptor z2_language
alphabet x x^-1 y y^-1
states e x X y Y
initial e
e: x -> x ; x^-1 -> X ; y -> y ; y^-1 -> Y
x: x -> x ; y -> y ; y^-1 -> Y
X: x^-1 -> X ; y -> y ; y^-1 -> Y
y: y -> y
Y: y^-1 -> Y
accept L: e x X y Y
)";

    // Missing transitions reject. State names record pi(u) - pi(v) for the
    // pair (u, v) read so far; xY means x - y and so on.
    inline char const* const Z2_MULTIPLIER_TRANSITIONS = R"(
e: (x,x) -> e ; (x^-1,x^-1) -> e ; (y,y) -> e ; (y^-1,y^-1) -> e ; (x,y^-1) -> xy ; (y,x^-1) -> xy ; (x,y) -> xY ; (y^-1,x^-1) -> xY ; (y,1) -> y ; (1,y^-1) -> y ; (x,1) -> x ; (1,x^-1) -> x ; (x^-1,y^-1) -> Xy ; (y,x) -> Xy ; (x^-1,y) -> XY ; (y^-1,x) -> XY ; (1,x) -> X ; (x^-1,1) -> X ; (1,y) -> Y ; (y^-1,1) -> Y
xy: (x,x) -> xy ; (x^-1,x^-1) -> xy ; (y,y) -> xy ; (y^-1,y^-1) -> xy ; (y^-1,1) -> x ; (1,y) -> x
xY: (x,x) -> xY ; (x^-1,x^-1) -> xY ; (y,y) -> xY ; (y^-1,y^-1) -> xY ; (y,1) -> x ; (1,y^-1) -> x
Xy: (x,x) -> Xy ; (x^-1,x^-1) -> Xy ; (y,y) -> Xy ; (y^-1,y^-1) -> Xy ; (y^-1,1) -> X ; (1,y) -> X
XY: (x,x) -> XY ; (x^-1,x^-1) -> XY ; (y,y) -> XY ; (y^-1,y^-1) -> XY ; (y,1) -> X ; (1,y^-1) -> X
accept 1: e
accept x: x
accept x^-1: X
accept y: y
accept y^-1: Y
)";

  }  // namespace detail

  inline std::string z2_language_text() {
    return detail::Z2_LANGUAGE_TEXT;
  }

  inline std::string z2_multiplier_text() {
    std::string out = "acceptor z2_multiplier\nalphabet";
    for (auto const& n : PairAlphabet({"x", "x^-1", "y", "y^-1"}).names()) {
      out += " " + n;
    }
    out += "\nstates e x X y Y xy xY Xy XY\ninitial e";
    return out + detail::Z2_MULTIPLIER_TRANSITIONS;
  }

  inline AutomaticStructure structure_from_text(std::string const& language,
                                                std::string const& multiplier) {
    AutomaticStructure s;
    s.language   = parse_acceptor(language).acceptor;
    s.multiplier = parse_acceptor(multiplier).acceptor;
    s.alphabet   = s.language.alphabet();
    s.validate();
    return s;
  }

  // Z^2 = <x, y> with normal forms (x* or (x^-1)*)(y* or (y^-1)*).
  inline AutomaticStructure z2_structure() {
    return structure_from_text(z2_language_text(), z2_multiplier_text());
  }

  // Abelianization of a word over {x, x^-1, y, y^-1}.
  inline std::pair<std::int64_t, std::int64_t> z2_vector(std::span<letter_t const> w) {
    std::int64_t v[2] = {0, 0};
    for (letter_t a : w) {
      v[a / 2] += (a & 1u) ? -1 : 1;
    }
    return {v[0], v[1]};
  }

  // L1 distance between the endpoints of two words in Z^2.
  inline std::size_t z2_distance(std::span<letter_t const> u, std::span<letter_t const> v) {
    auto [a, b] = z2_vector(u);
    auto [c, d] = z2_vector(v);
    return static_cast<std::size_t>(std::llabs(a - c) + std::llabs(b - d));
  }

  // Multiplier for Z^2 over an arbitrary language L, by the fellow-traveller
  // construction: states are (state of L on u, state of L on v, the
  // difference pi(u) - pi(v) while it stays in the ball of radius k).
  // Accepts (u, v) under label s when u, v are in L and pi(u) = pi(v s).
  inline Acceptor z2_multiplier(Acceptor const& language, std::size_t k) {
    PairAlphabet const pa({"x", "x^-1", "y", "y^-1"});
    Acceptor const     L   = complete(language);
    auto const&        acc = L.accepting(LANGUAGE_LABEL);
    auto const         r   = static_cast<std::int64_t>(k);
    // Each coordinate also records whether its word has ended (padding).
    struct Key {
      state_t      p, q;
      bool         pe, qe;
      std::int64_t dx, dy;
      auto         operator<=>(Key const&) const = default;
    };
    std::map<Key, state_t> index;
    std::vector<Key>       keys;
    std::vector<std::pair<std::pair<state_t, letter_t>, Key>> edges;
    Key start{L.initial(), L.initial(), false, false, 0, 0};
    index.emplace(start, 0);
    keys.push_back(start);
    auto step = [](letter_t a, std::int64_t& dx, std::int64_t& dy, int sign) {
      std::int64_t const e = (a & 1u) ? -1 : 1;
      (a / 2 == 0 ? dx : dy) += sign * e;
    };
    for (std::size_t i = 0; i < keys.size(); ++i) {
      Key const cur = keys[i];
      for (letter_t x = 0; x < pa.size(); ++x) {
        letter_t l = pa.left(x), rr = pa.right(x);
        Key      nk = cur;
        if (l == pa.pad()) {
          nk.pe = true;
        } else {
          if (cur.pe) {
            continue;
          }
          nk.p = L.next(cur.p, l);
          step(l, nk.dx, nk.dy, 1);
        }
        if (rr == pa.pad()) {
          nk.qe = true;
        } else {
          if (cur.qe) {
            continue;
          }
          nk.q = L.next(cur.q, rr);
          step(rr, nk.dx, nk.dy, -1);
        }
        if (std::llabs(nk.dx) + std::llabs(nk.dy) > r) {
          continue;
        }
        auto [it, ok] = index.emplace(nk, static_cast<state_t>(keys.size()));
        if (ok) {
          keys.push_back(nk);
        }
        edges.push_back({{static_cast<state_t>(i), x}, nk});
      }
    }
    Acceptor out(pa.names(), keys.size(), 0);
    for (auto const& [from, to] : edges) {
      out.set_next(from.first, from.second, index.at(to));
    }
    out.add_label(IDENTITY_LABEL);
    for (auto const& a : pa.base()) {
      out.add_label(a);
    }
    for (state_t s = 0; s < keys.size(); ++s) {
      Key const& key = keys[s];
      if (!acc[key.p] || !acc[key.q]) {
        continue;
      }
      if (key.dx == 0 && key.dy == 0) {
        out.set_accepting(IDENTITY_LABEL, s);
      }
      for (letter_t a = 0; a < 4; ++a) {
        std::int64_t dx = 0, dy = 0;
        step(a, dx, dy, 1);
        if (key.dx == dx && key.dy == dy) {
          out.set_accepting(pa.base()[a], s);
        }
      }
    }
    return trim(out);
  }

  ////////////////////////////////////////////////////////////////////////
  // Word problem
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    // A word u in L with (u, v) accepted under `label`, found by a
    // breadth-first search over (position, multiplier state, language
    // state, u ended); the first solution in that order is returned.
    inline std::optional<Word> multiplier_successor(AutomaticStructure const& s,
                                                    PairAlphabet const& pa, Word const& v,
                                                    std::string const& label) {
      Acceptor const& M    = s.multiplier;
      Acceptor const& L    = s.language;
      auto const&     macc = M.accepting(label);
      auto const&     lacc = L.accepting(LANGUAGE_LABEL);
      std::size_t const n  = v.size();

      struct Node {
        state_t     m, l;
        bool        ended;
        std::size_t parent;
        letter_t    letter;  // first coordinate read (pad when ended)
      };
      std::vector<Node> nodes{{M.initial(), L.initial(), false, SIZE_MAX, 0}};
      // Positions past the end of v only ever read padding in the second
      // coordinate, so states there need to be visited once.
      std::map<std::tuple<state_t, state_t, bool>, bool> seen_tail;
      std::vector<std::size_t> layer{0};
      for (std::size_t j = 0;; ++j) {
        for (std::size_t id : layer) {
          Node const& nd = nodes[id];
          if (j >= n && macc[nd.m] && lacc[nd.l]) {
            Word u;
            for (std::size_t t = id; nodes[t].parent != SIZE_MAX; t = nodes[t].parent) {
              if (nodes[t].letter != pa.pad()) {
                u.push_back(nodes[t].letter);
              }
            }
            std::reverse(u.begin(), u.end());
            return u;
          }
        }
        std::vector<std::size_t>                              next;
        std::map<std::tuple<state_t, state_t, bool>, bool>    seen;
        letter_t const right = j < n ? v[j] : pa.pad();
        for (std::size_t id : layer) {
          Node const nd = nodes[id];
          for (letter_t c = 0; c <= pa.pad(); ++c) {
            if (c == pa.pad() && right == pa.pad()) {
              continue;  // both coordinates have ended
            }
            if (nd.ended && c != pa.pad()) {
              continue;
            }
            state_t m = M.next(nd.m, pa.index(c, right));
            if (m == UNDEFINED_STATE) {
              continue;
            }
            state_t l = c == pa.pad() ? nd.l : L.next(nd.l, c);
            if (l == UNDEFINED_STATE) {
              continue;
            }
            bool ended = c == pa.pad();
            auto key   = std::make_tuple(m, l, ended);
            auto& book = j + 1 > n ? seen_tail : seen;
            if (!book.emplace(key, true).second) {
              continue;
            }
            next.push_back(nodes.size());
            nodes.push_back({m, l, ended, id, c});
          }
        }
        if (next.empty()) {
          return std::nullopt;
        }
        layer = std::move(next);
      }
    }

  }  // namespace detail

  struct WordProblemResult {
    bool is_identity = false;
    Word normal_form;  // w_n, the normal form of the input word
  };

  // w_0 is the empty word (required to lie in L); w_i is the normal form
  // of w_{i-1} a_i, found through the multiplier for a_i.
  inline WordProblemResult wp_quadratic(AutomaticStructure const& s, std::span<letter_t const> w) {
    if (!s.language.accepts(LANGUAGE_LABEL, Word{})) {
      raise(ErrorKind::malformed_structure,
            "the empty word must be a normal form to start the word problem");
    }
    PairAlphabet const pa = s.pairs();
    Word               cur;
    for (letter_t a : w) {
      if (a >= s.alphabet.size()) {
        raise(ErrorKind::unknown_letter, "letter index out of range");
      }
      auto next = detail::multiplier_successor(s, pa, cur, s.alphabet[a]);
      if (!next) {
        raise(ErrorKind::malformed_structure,
              "multiplier has no successor for " + word_to_string(s.alphabet, cur) + " * "
                  + s.alphabet[a]);
      }
      cur = std::move(*next);
    }
    return {cur.empty(), cur};
  }

  inline Word normal_form(AutomaticStructure const& s, std::span<letter_t const> w) {
    return wp_quadratic(s, w).normal_form;
  }

  ////////////////////////////////////////////////////////////////////////
  // Uniqueness
  ////////////////////////////////////////////////////////////////////////

  // L = L' minus { u : some v in L' with (u, v) accepted by M_1 and v < u }.
  // Restricting v to L' is what makes the removed words redundant: each
  // removed u has a shortlex-smaller representative that survives.
  inline AutomaticStructure make_unique(AutomaticStructure const& s) {
    s.validate();
    PairAlphabet const pa   = s.pairs();
    Acceptor const     m1   = select_label(s.multiplier, IDENTITY_LABEL, "B");
    Acceptor const     gt   = select_label(shortlex_pair_acceptor(pa), "gt", "B");
    Acceptor const     v_in = select_label(lift_to_pairs(s.language, pa, false), LANGUAGE_LABEL, "B");
    Acceptor const     bad_pairs =
        bool_op(bool_op(m1, gt, BoolOp::intersect), v_in, BoolOp::intersect);
    Acceptor const bad = select_label(determinize(project(bad_pairs, pa, true)), "B",
                                      LANGUAGE_LABEL);
    AutomaticStructure out = s;
    out.language           = minimize(bool_op(select_label(s.language, LANGUAGE_LABEL), bad,
                                              BoolOp::difference));
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Fellow travellers
  ////////////////////////////////////////////////////////////////////////

  using DistanceOracle = std::function<std::size_t(Word const&, Word const&)>;

  struct FellowTravelResult {
    bool        holds = true;
    Word        u, v;  // counterexample pair when !holds
    std::size_t j = 0;
  };

  // Checks every pair u, v in L with |u|, |v| <= len_max and endpoints at
  // distance <= 1 for d(u(j), v(j)) <= k at all times j.
  inline FellowTravelResult fellow_travel_check(AutomaticStructure const& s, std::size_t k,
                                                std::size_t len_max, DistanceOracle const& dist) {
    auto const words = enumerate(s.language, LANGUAGE_LABEL, len_max);
    auto prefix = [](Word const& w, std::size_t j) {
      return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(std::min(j, w.size())));
    };
    for (auto const& u : words) {
      for (auto const& v : words) {
        if (dist(u, v) > 1) {
          continue;
        }
        for (std::size_t j = 1; j <= std::max(u.size(), v.size()); ++j) {
          if (dist(prefix(u, j), prefix(v, j)) > k) {
            return {false, u, v, j};
          }
        }
      }
    }
    return {};
  }

  ////////////////////////////////////////////////////////////////////////
  // Surface groups
  ////////////////////////////////////////////////////////////////////////

  // J_g = <a1, b1, ..., ag, bg | [a1,b1] ... [ag,bg]> with [x,y] = x^-1 y^-1 x y.
  class SurfaceGroup {
   public:
    explicit SurfaceGroup(std::size_t genus) : _g(genus) {
      if (genus < 2) {
        raise(ErrorKind::invalid_argument, "surface groups are supported for genus >= 2");
      }
      std::vector<std::string> gens;
      for (std::size_t i = 1; i <= genus; ++i) {
        gens.push_back("a" + std::to_string(i));
        gens.push_back("b" + std::to_string(i));
      }
      _alphabet = symmetric_alphabet(gens);
      for (std::size_t i = 0; i < genus; ++i) {
        auto a = static_cast<letter_t>(4 * i), b = static_cast<letter_t>(4 * i + 2);
        _relator.insert(_relator.end(), {inverse_letter(a), inverse_letter(b), a, b});
      }
      Word const inv = inverse_word(_relator);
      for (Word const* r : std::initializer_list<Word const*>{&_relator, &inv}) {
        for (std::size_t s = 0; s < r->size(); ++s) {
          Word rot(r->begin() + static_cast<std::ptrdiff_t>(s), r->end());
          rot.insert(rot.end(), r->begin(), r->begin() + static_cast<std::ptrdiff_t>(s));
          _rstar.push_back(std::move(rot));
        }
      }
    }

    [[nodiscard]] std::size_t genus() const noexcept {
      return _g;
    }
    [[nodiscard]] std::vector<std::string> const& alphabet() const noexcept {
      return _alphabet;
    }
    [[nodiscard]] Word const& relator() const noexcept {
      return _relator;
    }
    // Cyclic permutations of r, then of r^-1.
    [[nodiscard]] std::vector<Word> const& rstar() const noexcept {
      return _rstar;
    }

    [[nodiscard]] Word parse(std::string const& text) const {
      return parse_generator_word(_alphabet, text);
    }
    [[nodiscard]] std::string to_string(std::span<letter_t const> w) const {
      return word_to_string(_alphabet, w);
    }

   private:
    std::size_t              _g;
    std::vector<std::string> _alphabet;
    Word                     _relator;
    std::vector<Word>        _rstar;
  };

  // Dehn's algorithm. Repeatedly: freely reduce, then find the leftmost
  // position holding a prefix v1 of some element v1 v2 of R* with
  // |v1| > |v2|, preferring the longest v1 and then the first element of
  // R*, and replace v1 by v2^-1.
  inline Word dehn_reduce(SurfaceGroup const& p, std::span<letter_t const> w) {
    std::size_t const rl   = 4 * p.genus();
    std::size_t const half = 2 * p.genus();
    Word              cur  = free_reduce(w);
    while (true) {
      bool replaced = false;
      for (std::size_t i = 0; i < cur.size() && !replaced; ++i) {
        for (std::size_t len = std::min(rl, cur.size() - i); len > half && !replaced; --len) {
          for (auto const& r : p.rstar()) {
            if (!std::equal(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(len),
                            cur.begin() + static_cast<std::ptrdiff_t>(i))) {
              continue;
            }
            Word v2inv = inverse_word(
                std::span<letter_t const>(r).subspan(len, rl - len));
            Word next(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(i));
            next.insert(next.end(), v2inv.begin(), v2inv.end());
            next.insert(next.end(), cur.begin() + static_cast<std::ptrdiff_t>(i + len), cur.end());
            cur      = free_reduce(next);
            replaced = true;
            break;
          }
        }
      }
      if (!replaced) {
        return cur;
      }
    }
  }

  [[nodiscard]] inline bool surface_equal(SurfaceGroup const& p, std::span<letter_t const> u,
                                          std::span<letter_t const> v) {
    Word w(u.begin(), u.end());
    Word vi = inverse_word(v);
    w.insert(w.end(), vi.begin(), vi.end());
    return dehn_reduce(p, w).empty();
  }

  // Word-metric distance between the endpoints of u and v, searched up to
  // `bound`; returns bound + 1 when the distance exceeds it.
  inline std::size_t surface_distance(SurfaceGroup const& p, std::span<letter_t const> u,
                                      std::span<letter_t const> v, std::size_t bound = 2) {
    Word target(inverse_word(u));
    target.insert(target.end(), v.begin(), v.end());
    target = dehn_reduce(p, target);
    if (target.empty()) {
      return 0;
    }
    std::vector<Word> layer{Word{}};
    for (std::size_t d = 1; d <= bound; ++d) {
      std::vector<Word> next;
      for (auto const& w : layer) {
        for (letter_t a = 0; a < p.alphabet().size(); ++a) {
          if (!w.empty() && w.back() == inverse_letter(a)) {
            continue;
          }
          Word x = w;
          x.push_back(a);
          if (surface_equal(p, x, target)) {
            return d;
          }
          next.push_back(std::move(x));
        }
      }
      layer = std::move(next);
    }
    return bound + 1;
  }

  using BigInt = boost::multiprecision::cpp_int;

  // Coefficients z^0..z^terms of
  //   (1 + 2z + ... + 2z^(2g-1) + z^(2g)) / (1 + (2-4g)z + ... + (2-4g)z^(2g-1) + z^(2g)).
  inline std::vector<BigInt> cannon_series(std::size_t genus, std::size_t terms) {
    if (genus < 2) {
      raise(ErrorKind::invalid_argument, "surface groups are supported for genus >= 2");
    }
    std::size_t const   deg = 2 * genus;
    std::vector<BigInt> num(deg + 1, 2), den(deg + 1, BigInt(2) - BigInt(4 * genus));
    num[0] = num[deg] = 1;
    den[0] = den[deg] = 1;
    std::vector<BigInt> c;
    for (std::size_t n = 0; n <= terms; ++n) {
      BigInt v = n <= deg ? num[n] : BigInt(0);
      for (std::size_t k = 1; k <= std::min(n, deg); ++k) {
        v -= den[k] * c[n - k];
      }
      c.push_back(v);
    }
    return c;
  }

  // Sphere sizes of J_g by breadth-first search over Dehn-reduced words,
  // deduplicating with surface_equal inside abelianization buckets.
  inline GrowthTable surface_growth_bfs(std::size_t genus, std::size_t radius,
                                        std::size_t max_elements = 200'000) {
    SurfaceGroup const p(genus);
    auto abel = [&](Word const& w) {
      std::vector<std::int64_t> v(2 * genus, 0);
      for (letter_t a : w) {
        v[a / 2] += (a & 1u) ? -1 : 1;
      }
      return v;
    };
    std::map<std::vector<std::int64_t>, std::vector<Word>> seen;
    std::size_t                                           total = 1;
    seen[abel({})].push_back({});
    GrowthTable       table;
    std::vector<Word> frontier{Word{}};
    table.push(1);
    for (std::size_t r = 1; r <= radius; ++r) {
      std::vector<Word> next;
      for (auto const& w : frontier) {
        for (letter_t a = 0; a < p.alphabet().size(); ++a) {
          Word x = w;
          x.push_back(a);
          x            = dehn_reduce(p, x);
          auto& bucket = seen[abel(x)];
          bool  dup    = std::any_of(bucket.begin(), bucket.end(),
                                     [&](Word const& y) { return surface_equal(p, x, y); });
          if (!dup) {
            bucket.push_back(x);
            next.push_back(std::move(x));
            if (++total > max_elements) {
              table.truncated         = true;
              table.truncation_reason = "more than " + std::to_string(max_elements) + " elements";
              return table;
            }
          }
        }
      }
      table.push(next.size());
      frontier = std::move(next);
    }
    return table;
  }

}  // namespace selfsim

#endif  // SELFSIM_AUTOSTRUCT_HPP_
