#include "isoblock/models.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "isoblock/criterion.hpp"

namespace isoblock {
namespace {

using State = std::vector<CyclicWord>;

State act(const WhiteheadMove& m, const State& s) {
  State out;
  out.reserve(s.size());
  for (const CyclicWord& w : s) out.push_back(cyclic_reduce(substitute(m, w.word())));
  std::sort(out.begin(), out.end());
  return out;
}

// Orbit representative order: compare word lists arranged longest first,
// ties broken lexicographically.
bool representative_less(const State& a, const State& b) {
  auto arranged = [](State s) {
    std::stable_sort(s.begin(), s.end(), [](const CyclicWord& x, const CyclicWord& y) {
      return x.size() != y.size() ? x.size() > y.size() : x < y;
    });
    return s;
  };
  return arranged(a) < arranged(b);
}

std::size_t total_length(const State& s) {
  std::size_t n = 0;
  for (const CyclicWord& w : s) n += w.size();
  return n;
}

// Emits every decomposition of the letters with codes < 2k into cycles with
// no inverse pair adjacent (wrap-around included). Each cycle starts at its
// least unused letter, so each decomposition appears once.
class CycleDecompositions {
 public:
  CycleDecompositions(std::size_t letters, std::vector<State>& sink)
      : used_(letters, false), sink_(sink) {}

  void run() { next_cycle(); }

 private:
  void next_cycle() {
    const auto first = std::find(used_.begin(), used_.end(), false);
    if (first == used_.end()) {
      State s;
      for (const auto& c : cycles_) s.push_back(CyclicWord::from_reduced(c));
      std::sort(s.begin(), s.end());
      sink_.push_back(std::move(s));
      return;
    }
    const auto code = static_cast<std::uint32_t>(first - used_.begin());
    used_[code] = true;
    cycles_.push_back({Letter::from_code(code)});
    extend();
    cycles_.pop_back();
    used_[code] = false;
  }

  void extend() {
    // cycles_ may reallocate during recursion; re-fetch the open cycle.
    auto open = [this]() -> std::vector<Letter>& { return cycles_.back(); };
    if (open().size() == 1 || open().back() != open().front().inverse()) next_cycle();
    for (std::uint32_t code = 0; code < used_.size(); ++code) {
      const Letter l = Letter::from_code(code);
      if (used_[code] || l == open().back().inverse()) continue;
      used_[code] = true;
      open().push_back(l);
      extend();
      open().pop_back();
      used_[code] = false;
    }
  }

  std::vector<bool> used_;
  std::vector<std::vector<Letter>> cycles_;
  std::vector<State>& sink_;
};

}  // namespace

std::vector<WhiteheadMove> symmetry_group(int genus) {
  std::vector<Letter> identity;
  for (int i = 1; i <= genus; ++i) identity.push_back(Letter::gen(i));
  std::vector<WhiteheadMove> group{WhiteheadMove::permutation(std::move(identity))};
  for (WhiteheadMove& m : enumerate_moves(genus, {.permutations = true, .multipliers = false}))
    group.push_back(std::move(m));
  return group;
}

std::vector<ModelClass> enumerate_models(int genus) {
  if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
  const std::vector<WhiteheadMove> group = symmetry_group(genus);

  std::vector<ModelClass> out;
  std::set<State> seen;
  // Any generator subset is carried onto an initial segment by a permutation,
  // so using x_1..x_k for each k reaches every orbit.
  for (int k = 0; k <= genus; ++k) {
    std::vector<State> candidates;
    CycleDecompositions(2 * static_cast<std::size_t>(k), candidates).run();
    for (const State& s : candidates) {
      if (seen.contains(s)) continue;
      std::set<State> orbit;
      for (const WhiteheadMove& g : group) orbit.insert(act(g, s));
      seen.insert(orbit.begin(), orbit.end());
      ModelClass m{genus, *std::min_element(orbit.begin(), orbit.end(), representative_less),
                   orbit.size()};
      const TangencySet rep = m.as_set();
      m.whitehead_minimal = reduce(rep).minimal.length() == rep.length();
      out.push_back(std::move(m));
    }
  }
  std::sort(out.begin(), out.end(), [](const ModelClass& a, const ModelClass& b) {
    const std::size_t la = total_length(a.representative);
    const std::size_t lb = total_length(b.representative);
    if (la != lb) return la < lb;
    if (a.representative.size() != b.representative.size())
      return a.representative.size() > b.representative.size();
    return a.representative < b.representative;
  });
  return out;
}

bool colourability_hint(const ModelClass& m) {
  const OccurrenceReport occ = occurrences(m.as_set());
  for (Eigen::Index i = 0; i < occ.rows(); ++i)
    if ((occ(i, 0) + occ(i, 1)) % 2 != 0) return false;
  return true;
}

std::optional<std::size_t> drawn_catalogue_count(int genus) {
  switch (genus) {
    case 1:
      return 1;
    case 2:
      return 4;
    default:
      return std::nullopt;
  }
}

}  // namespace isoblock
