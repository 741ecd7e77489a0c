#include "isoblock/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "isoblock/errors.hpp"
#include "isoblock/whitehead.hpp"

namespace isoblock {
namespace {

using State = std::vector<CyclicWord>;

struct StateHash {
  std::size_t operator()(const State& s) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const CyclicWord& w : s) h = (h ^ std::hash<CyclicWord>{}(w)) * 0x100000001b3ULL + 0x7f;
    return h;
  }
};

std::size_t state_length(const State& s) {
  return std::accumulate(s.begin(), s.end(), std::size_t{0},
                         [](std::size_t acc, const CyclicWord& w) { return acc + w.size(); });
}

State step(const WhiteheadMove& m, const State& s) {
  State out;
  out.reserve(s.size());
  for (const CyclicWord& w : s) {
    CyclicWord c = cyclic_reduce(substitute(m, w.word()));
    if (!c.empty()) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Closure {
  std::vector<State> states;
  std::vector<std::size_t> lengths;
};

Closure close(const State& start, const std::vector<WhiteheadMove>& moves, std::size_t cap,
              std::size_t budget) {
  Closure c;
  std::unordered_map<State, std::size_t, StateHash> index;
  std::deque<std::size_t> frontier;

  auto visit = [&](State s, std::size_t len) {
    if (index.contains(s)) return;
    if (c.states.size() >= budget) throw BudgetExceeded(budget);
    index.emplace(s, c.states.size());
    frontier.push_back(c.states.size());
    c.states.push_back(std::move(s));
    c.lengths.push_back(len);
  };

  visit(start, state_length(start));
  while (!frontier.empty()) {
    const std::size_t cur = frontier.front();
    frontier.pop_front();
    for (const WhiteheadMove& m : moves) {
      State next = step(m, c.states[cur]);
      const std::size_t len = state_length(next);
      if (len <= cap) visit(std::move(next), len);
    }
  }
  return c;
}

Exploration summarize(const Closure& c) {
  Exploration e;
  e.visited_count = c.states.size();
  e.global_min_length = *std::min_element(c.lengths.begin(), c.lengths.end());
  for (std::size_t i = 0; i < c.states.size(); ++i)
    if (c.lengths[i] == e.global_min_length) e.minimal_forms.push_back(c.states[i]);
  std::sort(e.minimal_forms.begin(), e.minimal_forms.end());
  return e;
}

std::size_t default_cap(const TangencySet& s, const OracleCaps& caps) {
  return caps.length_cap.value_or(s.length());
}

}  // namespace

Exploration bfs_explore(const TangencySet& s, std::size_t length_cap, std::size_t node_budget) {
  if (node_budget == 0) throw std::invalid_argument("node budget must be positive");
  if (s.length() > length_cap) throw std::invalid_argument("input longer than the length cap");
  return summarize(close(s.reduced(), enumerate_moves(s.genus()), length_cap, node_budget));
}

bool certify_greedy(const TangencySet& s, OracleCaps caps) {
  const Exploration e = bfs_explore(s, default_cap(s, caps), caps.node_budget);
  return reduce(s).minimal.length() == e.global_min_length;
}

bool minimal_level_connectivity(const TangencySet& s, OracleCaps caps) {
  const Exploration first = bfs_explore(s, default_cap(s, caps), caps.node_budget);
  const std::vector<WhiteheadMove> moves = enumerate_moves(s.genus());
  const std::size_t level = first.global_min_length;
  const Closure c = close(first.minimal_forms.front(), moves, level + 2, caps.node_budget);

  std::unordered_map<State, std::size_t, StateHash> minimal;
  for (std::size_t i = 0; i < c.states.size(); ++i)
    if (c.lengths[i] == level) minimal.emplace(c.states[i], minimal.size());
  if (minimal.empty()) return false;

  // Flood fill restricted to the minimal level.
  std::vector<bool> reached(minimal.size(), false);
  std::deque<const State*> queue;
  auto start = minimal.find(first.minimal_forms.front());
  if (start == minimal.end()) return false;
  reached[start->second] = true;
  queue.push_back(&start->first);
  std::size_t count = 1;
  while (!queue.empty()) {
    const State* cur = queue.front();
    queue.pop_front();
    for (const WhiteheadMove& m : moves) {
      State next = step(m, *cur);
      if (state_length(next) != level) continue;
      auto it = minimal.find(next);
      if (it == minimal.end() || reached[it->second]) continue;
      reached[it->second] = true;
      ++count;
      queue.push_back(&it->first);
    }
  }
  return count == minimal.size();
}

}  // namespace isoblock
