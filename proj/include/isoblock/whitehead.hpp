#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "isoblock/words.hpp"

namespace isoblock {

/// What a multiplier move does to one generator x_i (a is the multiplier).
enum class Action : std::uint8_t {
  Keep,   ///< x_i
  Right,  ///< x_i a
  Left,   ///< a^-1 x_i
  Both,   ///< a^-1 x_i a
};

/// Type (1) substitution: x_i -> images[i-1], a letter; extended to inverses.
struct PermutationMove {
  std::vector<Letter> images;
  bool operator==(const PermutationMove&) const = default;
};

/// Type (2) substitution. `actions[i-1]` applies to x_i; the entry for the
/// multiplier's own generator is always Keep.
struct MultiplierMove {
  Letter multiplier;
  std::vector<Action> actions;
  bool operator==(const MultiplierMove&) const = default;
};

/// A Whitehead substitution on the free group of rank `genus()`.
class WhiteheadMove {
 public:
  /// Throws std::invalid_argument unless `images` is a signed permutation.
  static WhiteheadMove permutation(std::vector<Letter> images);
  /// Throws std::invalid_argument if the multiplier index exceeds the rank.
  static WhiteheadMove multiplier(Letter a, std::vector<Action> actions);

  int genus() const;
  bool is_permutation() const { return std::holds_alternative<PermutationMove>(move_); }
  bool is_multiplier() const { return std::holds_alternative<MultiplierMove>(move_); }
  const PermutationMove& as_permutation() const { return std::get<PermutationMove>(move_); }
  const MultiplierMove& as_multiplier() const { return std::get<MultiplierMove>(move_); }

  bool is_identity() const;

  /// The replacement word for one letter: V_i for x_i, V_i^-1 for x_i^-1.
  Word image(Letter l) const;

  WhiteheadMove inverse() const;

  bool operator==(const WhiteheadMove&) const = default;

 private:
  explicit WhiteheadMove(std::variant<PermutationMove, MultiplierMove> m) : move_(std::move(m)) {}
  std::variant<PermutationMove, MultiplierMove> move_;
};

struct MoveKinds {
  bool permutations = true;
  bool multipliers = true;
};

/// Every non-identity move of the requested kinds, in a fixed order:
/// permutations by (lexicographic index permutation, sign mask); multipliers
/// by (multiplier letter, action table read as a base-4 number with the
/// lowest other generator most significant).
std::vector<WhiteheadMove> enumerate_moves(int genus, MoveKinds kinds = {});

/// 2g (4^(g-1) - 1), zero for g = 0.
std::size_t multiplier_move_count(int genus);
/// 2^g g! - 1.
std::size_t permutation_move_count(int genus);

/// Letter-by-letter substitution, without any reduction.
/// Throws IndexOutOfRange if `w` mentions a generator beyond the move's rank.
Word substitute(const WhiteheadMove& m, const Word& w);

/// Substitutes in every reduced word of `s`, then cyclically reduces.
TangencySet apply(const WhiteheadMove& m, const TangencySet& s);

// Dense integer matrix indexed by letter codes.
template <typename Scalar>
using LetterMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using LetterVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Counts of cyclically adjacent letter pairs: entry (u, v) is how many times
/// v immediately follows u, wrap-around included, over all reduced words.
template <typename Scalar = std::int64_t>
LetterMatrix<Scalar> pair_counts(const TangencySet& s) {
  const Eigen::Index n = 2 * static_cast<Eigen::Index>(s.genus());
  LetterMatrix<Scalar> counts = LetterMatrix<Scalar>::Zero(n, n);
  for (const CyclicWord& w : s.reduced()) {
    const std::size_t len = w.size();
    for (std::size_t i = 0; i < len; ++i)
      counts(w[i].code(), w[(i + 1) % len].code()) += 1;
  }
  return counts;
}

/// Evaluates length changes of multiplier moves from pair counts alone.
///
/// For a cyclically reduced word and multiplier a, letters other than a^{+-1}
/// never cancel; only the a-run between two consecutive non-a letters p, q
/// changes, to exponent e + r(p) - l(q), where r(p) says whether p acquires a
/// on its right and l(q) whether q acquires a^-1 on its left. Summing the
/// change over runs gives a bilinear form in r and l over the pair counts.
template <typename Scalar = std::int64_t>
class LengthDeltaEvaluator {
 public:
  explicit LengthDeltaEvaluator(LetterMatrix<Scalar> counts) : counts_(std::move(counts)) {}

  const LetterMatrix<Scalar>& counts() const { return counts_; }

  Scalar operator()(const WhiteheadMove& m) const {
    if (m.is_permutation()) return Scalar(0);
    const MultiplierMove& mm = m.as_multiplier();
    const Eigen::Index n = counts_.rows();
    const auto a = static_cast<Eigen::Index>(mm.multiplier.code());
    const auto a_inv = static_cast<Eigen::Index>(mm.multiplier.inverse().code());

    LetterVector<Scalar> right = LetterVector<Scalar>::Zero(n);
    LetterVector<Scalar> left = LetterVector<Scalar>::Zero(n);
    for (std::size_t i = 0; i < mm.actions.size(); ++i) {
      const auto pos = static_cast<Eigen::Index>(2 * i);
      if (pos == a || pos == a_inv) continue;
      const Action act = mm.actions[i];
      const bool r = act == Action::Right || act == Action::Both;
      const bool l = act == Action::Left || act == Action::Both;
      // x_i^-1 -> (image of x_i)^-1 swaps the sides.
      right(pos) = r;
      left(pos) = l;
      right(pos + 1) = l;
      left(pos + 1) = r;
    }

    LetterVector<Scalar> non_a = LetterVector<Scalar>::Ones(n);
    non_a(a) = 0;
    non_a(a_inv) = 0;

    const LetterVector<Scalar> row_side = counts_ * non_a + counts_.col(a) - counts_.col(a_inv);
    const LetterVector<Scalar> col_side =
        counts_.transpose() * non_a + (counts_.row(a_inv) - counts_.row(a)).transpose();
    return right.dot(row_side) + left.dot(col_side) - Scalar(2) * right.dot(counts_ * left);
  }

 private:
  LetterMatrix<Scalar> counts_;
};

/// length(apply(m, s)) - length(s) without materializing the new words.
std::int64_t length_delta(const WhiteheadMove& m, const TangencySet& s);

struct ReductionStep {
  WhiteheadMove move;
  TangencySet result;
  std::size_t length;
};

/// Applied moves in order; lengths strictly decrease along the steps.
struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

struct ReduceOptions {
  /// Worker threads used to score candidate moves; the chosen move does not
  /// depend on this.
  unsigned threads = 1;
};

struct Reduction {
  TangencySet minimal;
  ReductionTrace trace;
};

/// Greedy Whitehead reduction: repeatedly applies the first multiplier move
/// (in enumeration order) achieving the largest strict decrease in length,
/// until no multiplier move decreases it.
Reduction reduce(const TangencySet& s, ReduceOptions options = {});

/// E.g. `x1 -> x1 x2^-1` or `x1 -> x2, x2 -> x1^-1`; generators left
/// unchanged are omitted.
std::string to_string(const WhiteheadMove& m);

}  // namespace isoblock
