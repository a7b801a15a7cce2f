// Independent reference implementations used by the tests. Nothing here
// calls the library algorithm it is meant to check; the oracles work
// directly on transition tables, integers and strings.

#ifndef SELFSIM_TESTS_ORACLES_HPP_
#define SELFSIM_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "selfsim/selfsim.hpp"

namespace oracle {

  using selfsim::letter_t;
  using selfsim::state_t;
  using selfsim::Word;

  // All words of length exactly n over k letters, first letter most significant.
  inline std::vector<Word> words_of_length(std::size_t k, std::size_t n) {
    std::vector<Word> out{Word{}};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Word> next;
      for (auto const& w : out) {
        for (letter_t a = 0; a < k; ++a) {
          Word x = w;
          x.push_back(a);
          next.push_back(std::move(x));
        }
      }
      out = std::move(next);
    }
    return out;
  }

  inline std::vector<Word> words_up_to(std::size_t k, std::size_t n) {
    std::vector<Word> out;
    for (std::size_t i = 0; i <= n; ++i) {
      auto w = words_of_length(k, i);
      out.insert(out.end(), w.begin(), w.end());
    }
    return out;
  }

  // Reads the raw table: no library transduction involved.
  inline Word run(selfsim::MealyMachine const& m, state_t q, Word const& w) {
    auto const& t = m.table();
    std::size_t k = m.alphabet_size();
    Word        out;
    for (letter_t a : w) {
      out.push_back(t[q * k + a].output);
      q = t[q * k + a].next;
    }
    return out;
  }

  // LSB-first binary value of a word over {0, 1}.
  inline std::uint64_t to_int(Word const& w) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      v |= std::uint64_t(w[i]) << i;
    }
    return v;
  }

  inline Word from_int(std::uint64_t v, std::size_t n) {
    Word w(n);
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = (v >> i) & 1u;
    }
    return w;
  }

  // The odometer adds k to the LSB-first binary value, modulo 2^|w|.
  inline Word odometer(Word const& w, std::int64_t k) {
    std::uint64_t const mod = std::uint64_t(1) << w.size();
    std::int64_t        v   = static_cast<std::int64_t>(to_int(w)) + k;
    v %= static_cast<std::int64_t>(mod);
    if (v < 0) {
      v += static_cast<std::int64_t>(mod);
    }
    return from_int(static_cast<std::uint64_t>(v), w.size());
  }

  // Naive O(|Q|^2) Moore refinement on output rows, iterated to a fixpoint.
  // Returns the number of behaviour classes.
  inline std::size_t naive_class_count(selfsim::MealyMachine const& m) {
    std::size_t const  n = m.number_of_states(), k = m.alphabet_size();
    std::vector<std::size_t> cls(n, 0);
    // Start: classes by output rows.
    {
      std::map<std::vector<letter_t>, std::size_t> ids;
      for (state_t q = 0; q < n; ++q) {
        std::vector<letter_t> row;
        for (letter_t a = 0; a < k; ++a) {
          row.push_back(m.table()[q * k + a].output);
        }
        cls[q] = ids.emplace(row, ids.size()).first->second;
      }
    }
    while (true) {
      std::map<std::vector<std::size_t>, std::size_t> ids;
      std::vector<std::size_t>                        next(n);
      for (state_t q = 0; q < n; ++q) {
        std::vector<std::size_t> sig{cls[q]};
        for (letter_t a = 0; a < k; ++a) {
          sig.push_back(cls[m.table()[q * k + a].next]);
        }
        next[q] = ids.emplace(sig, ids.size()).first->second;
      }
      std::size_t before = std::set<std::size_t>(cls.begin(), cls.end()).size();
      std::size_t after  = ids.size();
      cls                = next;
      if (before == after) {
        return after;
      }
    }
  }

  // Exhaustive comparison of two initial machines on all words up to len.
  inline bool same_behaviour(selfsim::MealyMachine const& m, state_t p,
                             selfsim::MealyMachine const& n, state_t q, std::size_t len) {
    for (auto const& w : words_up_to(m.alphabet_size(), len)) {
      if (run(m, p, w) != run(n, q, w)) {
        return false;
      }
    }
    return true;
  }

  // States acting as the identity, decided by exhaustive words of length
  // |Q| (enough to separate any state from the identity).
  inline std::vector<bool> identity_states(selfsim::MealyMachine const& m) {
    std::vector<bool> out(m.number_of_states());
    auto const        words = words_of_length(m.alphabet_size(), m.number_of_states());
    for (state_t q = 0; q < m.number_of_states(); ++q) {
      out[q] = std::all_of(words.begin(), words.end(),
                           [&](Word const& w) { return run(m, q, w) == w; });
    }
    return out;
  }

  // Number of length-n paths (one letter per step) that never visit an
  // identity state, summed over all non-identity start states.
  inline std::vector<double> path_counts(selfsim::MealyMachine const& m, std::size_t n_max) {
    auto const        id = identity_states(m);
    std::size_t const n = m.number_of_states(), k = m.alphabet_size();
    std::vector<double> cur(n, 0.0), out;
    for (state_t q = 0; q < n; ++q) {
      cur[q] = id[q] ? 0.0 : 1.0;
    }
    for (std::size_t step = 0; step <= n_max; ++step) {
      out.push_back(std::accumulate(cur.begin(), cur.end(), 0.0));
      std::vector<double> next(n, 0.0);
      for (state_t q = 0; q < n; ++q) {
        for (letter_t a = 0; a < k; ++a) {
          state_t r = m.table()[q * k + a].next;
          if (!id[r]) {
            next[r] += cur[q];
          }
        }
      }
      cur = std::move(next);
    }
    return out;
  }

  // Affine map v -> a v + b on Z^n, applied to {0,1}^n-letter words: letter
  // x encodes bit i of coordinate j in bit j of the letter at position i.
  inline Word affine_apply(std::vector<std::vector<std::int64_t>> const& a,
                           std::vector<std::int64_t> const& b, Word const& w) {
    std::size_t const n   = b.size();
    std::size_t const len = w.size();
    std::vector<std::int64_t> v(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < len; ++i) {
        v[j] |= std::int64_t((w[i] >> j) & 1u) << i;
      }
    }
    std::int64_t const mod = std::int64_t(1) << len;
    Word               out(len, 0);
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t y = b[j];
      for (std::size_t c = 0; c < n; ++c) {
        y += a[j][c] * v[c];
      }
      y %= mod;
      if (y < 0) {
        y += mod;
      }
      for (std::size_t i = 0; i < len; ++i) {
        out[i] |= static_cast<letter_t>(((y >> i) & 1) << j);
      }
    }
    return out;
  }

  // Free reduction over a symmetric alphabet (letter 2i+1 inverts 2i).
  inline Word reduce(Word const& w) {
    Word out;
    for (letter_t a : w) {
      if (!out.empty() && (out.back() ^ 1u) == a) {
        out.pop_back();
      } else {
        out.push_back(a);
      }
    }
    return out;
  }

  inline bool shortlex(Word const& u, Word const& v) {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return u < v;
  }

  // Random machine with every state's output row a permutation.
  inline selfsim::MealyMachine random_invertible(std::mt19937_64& rng, std::size_t states,
                                                 std::size_t letters) {
    std::vector<std::string> alphabet;
    for (std::size_t a = 0; a < letters; ++a) {
      alphabet.push_back(std::to_string(a));
    }
    std::vector<std::string> names;
    for (std::size_t q = 0; q < states; ++q) {
      names.push_back("q" + std::to_string(q));
    }
    std::vector<selfsim::Edge> table;
    for (std::size_t q = 0; q < states; ++q) {
      std::vector<letter_t> perm(letters);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      for (std::size_t a = 0; a < letters; ++a) {
        table.push_back({perm[a], static_cast<state_t>(rng() % states)});
      }
    }
    return selfsim::MealyMachine(alphabet, names, table);
  }

  inline Word random_word(std::mt19937_64& rng, std::size_t k, std::size_t len) {
    Word w(len);
    for (auto& a : w) {
      a = static_cast<letter_t>(rng() % k);
    }
    return w;
  }

  // Random group word over the given symbols, with random signs.
  inline selfsim::GroupWord random_group_word(std::mt19937_64& rng,
                                              std::vector<std::string> const& symbols,
                                              std::size_t len, bool signs = true) {
    selfsim::GroupWord w;
    for (std::size_t i = 0; i < len; ++i) {
      w.push_back({symbols[rng() % symbols.size()], signs && rng() % 2 ? -1 : 1});
    }
    return w;
  }

  // Preimage of w under state q, found letter by letter from the table.
  inline Word run_inverse(selfsim::MealyMachine const& m, state_t q, Word const& w) {
    auto const& t = m.table();
    std::size_t k = m.alphabet_size();
    Word        out;
    for (letter_t b : w) {
      letter_t a = 0;
      while (t[q * k + a].output != b) {
        ++a;
      }
      out.push_back(a);
      q = t[q * k + a].next;
    }
    return out;
  }

  // Action of a word of states, leftmost letter first, from the raw table.
  inline Word run_word(selfsim::MealyMachine const& m, selfsim::GroupWord const& g, Word w) {
    for (auto const& l : g) {
      state_t q = *m.state_index(l.symbol);
      w         = l.exp > 0 ? run(m, q, w) : run_inverse(m, q, w);
    }
    return w;
  }

  // Reduced words of length <= radius over a symmetric generating set, each
  // a list of (state, sign). With `involutions` every generator is its own
  // inverse and only adjacent-distinct unsigned words are produced.
  struct SignedLetter {
    state_t q;
    bool    inv;
  };
  using SignedWord = std::vector<SignedLetter>;

  inline std::vector<SignedWord> reduced_words(std::size_t gens, std::size_t radius,
                                               bool involutions) {
    std::vector<SignedWord> out{SignedWord{}};
    std::size_t             begin = 0;
    for (std::size_t len = 1; len <= radius; ++len) {
      std::size_t const end = out.size();
      for (std::size_t i = begin; i < end; ++i) {
        for (state_t q = 0; q < gens; ++q) {
          for (int s = 0; s < (involutions ? 1 : 2); ++s) {
            SignedLetter l{q, s == 1};
            if (!out[i].empty() && out[i].back().q == q
                && (involutions || out[i].back().inv != l.inv)) {
              continue;
            }
            SignedWord w = out[i];
            w.push_back(l);
            out.push_back(std::move(w));
          }
        }
      }
      begin = end;
    }
    return out;
  }

  inline Word run_signed(selfsim::MealyMachine const& m, SignedWord const& g, Word w) {
    for (auto const& l : g) {
      w = l.inv ? run_inverse(m, l.q, w) : run(m, l.q, w);
    }
    return w;
  }

  inline selfsim::GroupWord to_group_word(selfsim::MealyMachine const& m, SignedWord const& g) {
    selfsim::GroupWord out;
    for (auto const& l : g) {
      out.push_back({m.state_name(l.q), l.inv ? -1 : 1});
    }
    return out;
  }

  // Groups the words by their action on the given inputs. Words in
  // different groups are certainly different elements; the returned pairs
  // share a fingerprint and still need an exact comparison.
  inline std::vector<std::pair<SignedWord, SignedWord>> fingerprint_collisions(
      selfsim::MealyMachine const& m, std::vector<SignedWord> const& words,
      std::vector<Word> const& inputs) {
    std::map<std::uint64_t, std::vector<std::size_t>> seen;
    std::vector<std::pair<SignedWord, SignedWord>> out;
    for (std::size_t i = 0; i < words.size(); ++i) {
      std::uint64_t h = 1469598103934665603ull;  // FNV-1a
      for (auto const& x : inputs) {
        for (letter_t a : run_signed(m, words[i], x)) {
          h = (h ^ a) * 1099511628211ull;
        }
        h = (h ^ 0xff) * 1099511628211ull;
      }
      auto& bucket = seen[h];
      for (std::size_t j : bucket) {
        out.emplace_back(words[j], words[i]);
      }
      bucket.push_back(i);
    }
    return out;
  }

}  // namespace oracle

#endif  // SELFSIM_TESTS_ORACLES_HPP_
