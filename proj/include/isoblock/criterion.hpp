#pragma once

#include <Eigen/Core>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "isoblock/whitehead.hpp"
#include "isoblock/words.hpp"

namespace isoblock {

/// Row i-1 holds (count of x_i, count of x_i^-1) over the reduced words.
using OccurrenceReport = Eigen::Matrix<long, Eigen::Dynamic, 2>;

OccurrenceReport occurrences(const TangencySet& s);

/// Each generator appears either not at all or as exactly one x_i and one x_i^-1.
bool satisfies_a(const OccurrenceReport& report);

/// Condition (A) on the reduced words of `s`.
std::pair<bool, OccurrenceReport> check_a(const TangencySet& s);

enum class Interpretation {
  /// The criterion fails: any flow realizing this block has an invariant set
  /// with nontrivial first Čech cohomology.
  NontrivialH1,
  /// The criterion holds: some flow realizes the block with a single rest
  /// point as its maximal invariant set, so nothing can be concluded.
  InconclusiveRealizable,
};

std::string_view to_string(Interpretation i);
Interpretation interpret(bool criterion_holds);

/// Which rule decided the verdict.
enum class Basis {
  Reduction,         ///< reduce, then check (A)
  GenusZero,         ///< a ball: no cut disks, criterion holds
  NoTangencyCurves,  ///< g >= 1 with no t-curves at all: criterion fails
};

struct Verdict {
  int genus = 0;
  TangencySet input;
  TangencySet s_min;
  ReductionTrace trace;
  OccurrenceReport occurrences;
  bool criterion_holds = false;
  Interpretation interpretation = Interpretation::NontrivialH1;
  Basis basis = Basis::Reduction;
};

/// Full decision pipeline for a handlebody of genus `genus` whose tangency
/// curves read `raw_words` (empty words stand for inessential curves).
/// Throws IndexOutOfRange for letters beyond the genus.
Verdict verdict(int genus, std::vector<Word> raw_words, ReduceOptions options = {});
Verdict verdict(const TangencySet& s, ReduceOptions options = {});

/// More than 2g essential curves rules the criterion out, because the word
/// count is invariant under moves and (A) bounds the total length by 2g.
/// Returns false in that case and nullopt otherwise; never returns true.
std::optional<bool> essential_count_fastpath(const TangencySet& s);

}  // namespace isoblock
