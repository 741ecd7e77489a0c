#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace isoblock {

/// One generator symbol x_i or its inverse.
///
/// Stored as the code 2(i-1) for x_i and 2(i-1)+1 for x_i^-1, so the natural
/// ordering of codes is x1 < x1^-1 < x2 < x2^-1 < ... and inversion flips the
/// low bit.
class Letter {
 public:
  constexpr Letter() = default;

  /// Throws std::invalid_argument unless index >= 1 and sign is +1 or -1.
  static Letter make(int index, int sign);

  static constexpr Letter gen(int index) { return from_code(static_cast<std::uint32_t>(2 * (index - 1))); }
  static constexpr Letter gen_inv(int index) { return gen(index).inverse(); }
  static constexpr Letter from_code(std::uint32_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr int index() const { return static_cast<int>(code_ / 2) + 1; }
  constexpr int sign() const { return (code_ & 1U) != 0 ? -1 : +1; }
  constexpr bool positive() const { return (code_ & 1U) == 0; }
  constexpr Letter inverse() const { return from_code(code_ ^ 1U); }
  constexpr std::uint32_t code() const { return code_; }

  constexpr auto operator<=>(const Letter&) const = default;

 private:
  std::uint32_t code_ = 0;
};

/// A finite sequence of letters; the empty sequence is the word 1.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  /// Largest generator index mentioned, 0 for the empty word.
  int max_index() const;

  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// A cyclically reduced word stored in its canonical rotation: the
/// lexicographically least rotation under the letter order.
class CyclicWord {
 public:
  CyclicWord() = default;

  /// Canonicalizes a sequence that is already cyclically reduced. Throws
  /// std::invalid_argument otherwise.
  static CyclicWord from_reduced(std::vector<Letter> letters);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word word() const { return Word(letters_); }

  auto operator<=>(const CyclicWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

Word invert(const Word& w);

/// Cancels adjacent inverse pairs until none remain.
Word free_reduce(const Word& w);

/// Free reduction, then cancellation across the last/first boundary, then
/// canonical rotation. Idempotent.
CyclicWord cyclic_reduce(const Word& w);

/// Offset of the lexicographically least rotation (Booth / minimum expression).
std::size_t least_rotation_offset(std::span<const Letter> letters);

bool cyclic_equal(const CyclicWord& u, const CyclicWord& v);

/// True iff no adjacent inverse pair exists, including the wrap-around pair.
bool is_cyclically_reduced(std::span<const Letter> letters);

/// Algebraic length: number of letters after cyclic reduction.
std::size_t algebraic_length(const Word& w);

/// Genus plus the words read off the tangency curves, as a multiset.
///
/// `raw_words` keeps the input as given, empty words included; `reduced`
/// holds the nonempty cyclic reductions, sorted, so two sets with the same
/// multiset of cyclic words compare equal regardless of input order.
class TangencySet {
 public:
  TangencySet() = default;

  /// Throws IndexOutOfRange if any letter index exceeds `genus`, and
  /// std::invalid_argument for a negative genus.
  TangencySet(int genus, std::vector<Word> raw_words);

  /// Builds a set directly from cyclic words (empty ones are dropped).
  static TangencySet from_cyclic(int genus, std::vector<CyclicWord> words);

  int genus() const { return genus_; }
  const std::vector<Word>& raw_words() const { return raw_; }
  const std::vector<CyclicWord>& reduced() const { return reduced_; }

  /// Sum of algebraic lengths of the member words.
  std::size_t length() const;
  std::size_t nonempty_count() const { return reduced_.size(); }

  /// Equality as word sets: same genus and same multiset of cyclic words.
  friend bool operator==(const TangencySet& a, const TangencySet& b) {
    return a.genus_ == b.genus_ && a.reduced_ == b.reduced_;
  }

 private:
  int genus_ = 0;
  std::vector<Word> raw_;
  std::vector<CyclicWord> reduced_;
};

std::size_t length(const TangencySet& s);

std::string to_string(Letter l);
/// Space-separated `x<k>` / `x<k>^-1` tokens; the empty word renders as `1`.
std::string to_string(const Word& w);
std::string to_string(const CyclicWord& w);
/// `{w1, w2, ...}` over the reduced words.
std::string to_string(const TangencySet& s);

}  // namespace isoblock

template <>
struct std::hash<isoblock::CyclicWord> {
  std::size_t operator()(const isoblock::CyclicWord& w) const noexcept;
};
