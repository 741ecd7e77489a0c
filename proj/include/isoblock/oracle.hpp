#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "isoblock/words.hpp"

namespace isoblock {

inline constexpr std::size_t kDefaultNodeBudget = 1'000'000;

/// Result of exhaustively closing a word set under Whitehead moves.
struct Exploration {
  std::size_t global_min_length = 0;
  /// Every visited state of minimum length, sorted.
  std::vector<std::vector<CyclicWord>> minimal_forms;
  std::size_t visited_count = 0;
};

/// Breadth-first closure of `s` under every move of both kinds whose result
/// has length at most `length_cap`. States are sorted multisets of canonical
/// cyclic words. Uses plain substitution only, never the length-delta path.
///
/// Throws std::invalid_argument if length(s) > length_cap and BudgetExceeded
/// once more than `node_budget` states have been visited.
Exploration bfs_explore(const TangencySet& s, std::size_t length_cap,
                        std::size_t node_budget = kDefaultNodeBudget);

struct OracleCaps {
  /// Defaults to the input length.
  std::optional<std::size_t> length_cap;
  std::size_t node_budget = kDefaultNodeBudget;
};

/// Greedy reduction reaches the exhaustive minimum.
bool certify_greedy(const TangencySet& s, OracleCaps caps = {});

/// All minimal forms, explored with headroom min + 2 from one of them, are
/// mutually reachable through length-preserving moves.
bool minimal_level_connectivity(const TangencySet& s, OracleCaps caps = {});

}  // namespace isoblock
