#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "isoblock/whitehead.hpp"
#include "isoblock/words.hpp"

namespace isoblock {

/// One class of essential tangency-curve patterns compatible with the
/// geometric criterion, as a word set satisfying (A) up to signed
/// generator permutations.
struct ModelClass {
  int genus = 0;
  /// Sorted canonical cyclic words; the least member of its orbit.
  std::vector<CyclicWord> representative;
  std::size_t orbit_size = 1;
  /// No Whitehead move shortens the representative. Condition (A) does not
  /// imply this: {x1 x2, x1^-1 x2^-1} reduces to {x2, x2^-1}.
  bool whitehead_minimal = true;

  TangencySet as_set() const { return TangencySet::from_cyclic(genus, representative); }

  bool operator==(const ModelClass&) const = default;
};

/// The signed permutations of x_1..x_g, identity first.
std::vector<WhiteheadMove> symmetry_group(int genus);

/// All multisets of nonempty cyclically reduced words using each letter at
/// most once, x_i iff x_i^-1, up to the symmetry group. The empty model is
/// always first. Work grows like (2g)!, so this is meant for small genus.
std::vector<ModelClass> enumerate_models(int genus);

/// Every generator's total letter count is even, i.e. the curves' mod-2
/// homology classes sum to zero. Holds for every model satisfying (A).
bool colourability_hint(const ModelClass& m);

/// Number of nonempty models in the hand-drawn genus-g catalogue, where one
/// exists (genus 1 and 2). Word-space enumeration may disagree, since it only
/// identifies classes related by signed generator permutations.
std::optional<std::size_t> drawn_catalogue_count(int genus);

}  // namespace isoblock
