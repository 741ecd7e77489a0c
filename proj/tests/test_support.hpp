#pragma once

// Test-only helpers: compact word literals, random generators, and
// brute-force routines that deliberately avoid the library's own code paths.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string_view>
#include <vector>

#include "isoblock/whitehead.hpp"
#include "isoblock/words.hpp"

namespace isoblock::ts {

/// 'a'..'z' = x1..x26, upper case = inverses; "1" is the empty word.
inline Word w(std::string_view compact) {
  std::vector<Letter> out;
  if (compact == "1") return Word{};
  for (char c : compact) {
    const bool upper = c >= 'A' && c <= 'Z';
    out.push_back(Letter::make((upper ? c - 'A' : c - 'a') + 1, upper ? -1 : 1));
  }
  return Word(std::move(out));
}

inline TangencySet set(int genus, std::initializer_list<std::string_view> words) {
  std::vector<Word> raw;
  for (auto s : words) raw.push_back(w(s));
  return TangencySet(genus, std::move(raw));
}

inline CyclicWord cw(std::string_view compact) { return cyclic_reduce(w(compact)); }

/// The worked genus-2 example.
inline TangencySet fig8() { return set(2, {"ababb", "BBA", "AB"}); }

// ---- independent oracles -------------------------------------------------

/// Reversal with per-letter sign flip, via index arithmetic only.
inline std::vector<std::pair<int, int>> oracle_invert(const Word& word) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = word.size(); i-- > 0;) out.emplace_back(word[i].index(), -word[i].sign());
  return out;
}

/// Repeatedly deletes the first cancelling pair anywhere (wrap-around
/// included) until none is left, then returns the least of all rotations.
inline std::vector<Letter> oracle_cyclic_reduce(const Word& word) {
  std::vector<Letter> s(word.begin(), word.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i].index() == s[i + 1].index() && s[i].sign() != s[i + 1].sign()) {
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(i), s.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
    if (!changed && s.size() >= 2 && s.front().index() == s.back().index() &&
        s.front().sign() != s.back().sign()) {
      s.pop_back();
      s.erase(s.begin());
      changed = true;
    }
  }
  std::vector<Letter> best = s;
  for (std::size_t r = 1; r < s.size(); ++r) {
    std::vector<Letter> rot(s.begin() + static_cast<std::ptrdiff_t>(r), s.end());
    rot.insert(rot.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(r));
    best = std::min(best, rot);
  }
  return best;
}

inline std::size_t oracle_length(const std::vector<Word>& words) {
  std::size_t n = 0;
  for (const Word& x : words) n += oracle_cyclic_reduce(x).size();
  return n;
}

/// Every word of exactly `len` letters over x_1..x_g, in counting order.
template <typename F>
void for_each_word(int genus, std::size_t len, F&& f) {
  const std::uint32_t base = 2 * static_cast<std::uint32_t>(genus);
  if (base == 0) {
    if (len == 0) f(Word{});
    return;
  }
  std::vector<std::uint32_t> digits(len, 0);
  for (;;) {
    std::vector<Letter> letters;
    for (auto d : digits) letters.push_back(Letter::from_code(d));
    f(Word(std::move(letters)));
    std::size_t i = 0;
    while (i < len && ++digits[i] == base) digits[i++] = 0;
    if (i == len) return;
  }
}

/// All multisets of nonempty cyclically reduced words satisfying (A) exactly,
/// over genus g, as sorted vectors. Each generator subset, each arrangement
/// of its letters into cycles; built from permutations of the letter list.
inline std::set<std::vector<CyclicWord>> oracle_condition_a_sets(int genus) {
  std::set<std::vector<CyclicWord>> out;
  for (std::uint32_t subset = 0; subset < (1U << genus); ++subset) {
    std::vector<Letter> letters;
    for (int i = 0; i < genus; ++i)
      if (subset & (1U << i)) {
        letters.push_back(Letter::gen(i + 1));
        letters.push_back(Letter::gen_inv(i + 1));
      }
    // A permutation sigma of the letters splits into cycles; each cycle is a word.
    std::vector<std::size_t> sigma(letters.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = i;
    do {
      std::vector<bool> done(sigma.size(), false);
      std::vector<CyclicWord> words;
      bool ok = true;
      for (std::size_t s = 0; s < sigma.size() && ok; ++s) {
        if (done[s]) continue;
        std::vector<Letter> cyc;
        for (std::size_t j = s; !done[j]; j = sigma[j]) {
          done[j] = true;
          cyc.push_back(letters[j]);
        }
        if (!is_cyclically_reduced(cyc)) ok = false;
        else words.push_back(CyclicWord::from_reduced(cyc));
      }
      if (!ok) continue;
      std::sort(words.begin(), words.end());
      out.insert(words);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  return out;
}

// ---- random generators ---------------------------------------------------

inline Word random_word(std::mt19937_64& rng, int genus, std::size_t len) {
  std::uniform_int_distribution<std::uint32_t> pick(0, 2 * static_cast<std::uint32_t>(genus) - 1);
  std::vector<Letter> out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(Letter::from_code(pick(rng)));
  return Word(std::move(out));
}

/// A set of 1..max_words words over genus in [1, max_genus] whose reduced
/// total length is at most `max_length` and at least 1.
inline TangencySet random_set(std::mt19937_64& rng, int max_genus, std::size_t max_length,
                              std::size_t max_words = 3) {
  std::uniform_int_distribution<int> genus_pick(1, max_genus);
  const int g = genus_pick(rng);
  for (;;) {
    std::uniform_int_distribution<std::size_t> count_pick(1, max_words);
    std::uniform_int_distribution<std::size_t> len_pick(1, max_length);
    std::vector<Word> words;
    const std::size_t n = count_pick(rng);
    for (std::size_t i = 0; i < n; ++i) words.push_back(random_word(rng, g, len_pick(rng)));
    TangencySet s(g, std::move(words));
    if (s.length() >= 1 && s.length() <= max_length) return s;
  }
}

/// Random move of genus g drawn from the full enumeration.
inline WhiteheadMove random_move(std::mt19937_64& rng, const std::vector<WhiteheadMove>& moves) {
  std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
  return moves[pick(rng)];
}

}  // namespace isoblock::ts
