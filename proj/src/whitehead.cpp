#include "isoblock/whitehead.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "isoblock/errors.hpp"

namespace isoblock {

WhiteheadMove WhiteheadMove::permutation(std::vector<Letter> images) {
  std::vector<bool> seen(images.size(), false);
  for (Letter l : images) {
    const auto idx = static_cast<std::size_t>(l.index());
    if (idx > images.size() || seen[idx - 1])
      throw std::invalid_argument("permutation move images must be a signed permutation");
    seen[idx - 1] = true;
  }
  return WhiteheadMove(PermutationMove{std::move(images)});
}

WhiteheadMove WhiteheadMove::multiplier(Letter a, std::vector<Action> actions) {
  const auto idx = static_cast<std::size_t>(a.index());
  if (idx > actions.size()) throw std::invalid_argument("multiplier outside the move's rank");
  actions[idx - 1] = Action::Keep;
  return WhiteheadMove(MultiplierMove{a, std::move(actions)});
}

int WhiteheadMove::genus() const {
  return std::visit(
      [](const auto& m) {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, PermutationMove>)
          return static_cast<int>(m.images.size());
        else
          return static_cast<int>(m.actions.size());
      },
      move_);
}

bool WhiteheadMove::is_identity() const {
  if (is_permutation()) {
    const auto& im = as_permutation().images;
    for (std::size_t i = 0; i < im.size(); ++i)
      if (im[i] != Letter::gen(static_cast<int>(i) + 1)) return false;
    return true;
  }
  const auto& acts = as_multiplier().actions;
  return std::all_of(acts.begin(), acts.end(), [](Action a) { return a == Action::Keep; });
}

Word WhiteheadMove::image(Letter l) const {
  const int g = genus();
  if (l.index() > g) throw IndexOutOfRange(l.index(), g, "move substitution");
  if (!l.positive()) return invert(image(l.inverse()));
  const auto i = static_cast<std::size_t>(l.index() - 1);
  if (is_permutation()) return Word{as_permutation().images[i]};

  const MultiplierMove& m = as_multiplier();
  const Letter a = m.multiplier;
  switch (m.actions[i]) {
    case Action::Keep:
      return Word{l};
    case Action::Right:
      return Word{l, a};
    case Action::Left:
      return Word{a.inverse(), l};
    case Action::Both:
      return Word{a.inverse(), l, a};
  }
  return Word{l};
}

WhiteheadMove WhiteheadMove::inverse() const {
  if (is_multiplier()) {
    const MultiplierMove& m = as_multiplier();
    // The multiplier is fixed, so x -> a^-1 x a is undone by x -> a x a^-1.
    return WhiteheadMove(MultiplierMove{m.multiplier.inverse(), m.actions});
  }
  const auto& im = as_permutation().images;
  std::vector<Letter> inv(im.size());
  for (std::size_t i = 0; i < im.size(); ++i) {
    const Letter target = im[i];
    inv[static_cast<std::size_t>(target.index() - 1)] =
        Letter::make(static_cast<int>(i) + 1, target.sign());
  }
  return WhiteheadMove(PermutationMove{std::move(inv)});
}

std::size_t multiplier_move_count(int genus) {
  if (genus <= 0) return 0;
  std::size_t p = 1;
  for (int i = 1; i < genus; ++i) p *= 4;
  return 2 * static_cast<std::size_t>(genus) * (p - 1);
}

std::size_t permutation_move_count(int genus) {
  std::size_t n = 1;
  for (int i = 1; i <= genus; ++i) n *= 2 * static_cast<std::size_t>(i);
  return n - 1;
}

std::vector<WhiteheadMove> enumerate_moves(int genus, MoveKinds kinds) {
  if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
  const auto g = static_cast<std::size_t>(genus);
  std::vector<WhiteheadMove> out;

  if (kinds.permutations) {
    out.reserve(permutation_move_count(genus));
    std::vector<int> perm(g);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      for (std::size_t mask = 0; mask < (std::size_t{1} << g); ++mask) {
        std::vector<Letter> images(g);
        for (std::size_t i = 0; i < g; ++i)
          images[i] = Letter::make(perm[i], (mask >> i) & 1U ? -1 : +1);
        WhiteheadMove m = WhiteheadMove::permutation(std::move(images));
        if (!m.is_identity()) out.push_back(std::move(m));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  if (kinds.multipliers && genus >= 2) {
    out.reserve(out.size() + multiplier_move_count(genus));
    std::size_t tables = 1;
    for (std::size_t i = 1; i < g; ++i) tables *= 4;
    for (std::uint32_t code = 0; code < 2 * g; ++code) {
      const Letter a = Letter::from_code(code);
      const auto fixed = static_cast<std::size_t>(a.index() - 1);
      for (std::size_t t = 1; t < tables; ++t) {
        std::vector<Action> actions(g, Action::Keep);
        std::size_t rest = t;
        for (std::size_t i = g; i-- > 0;) {
          if (i == fixed) continue;
          actions[i] = static_cast<Action>(rest % 4);
          rest /= 4;
        }
        out.push_back(WhiteheadMove::multiplier(a, std::move(actions)));
      }
    }
  }
  return out;
}

Word substitute(const WhiteheadMove& m, const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size() * 3);
  for (Letter l : w)
    for (Letter x : m.image(l)) out.push_back(x);
  return Word(std::move(out));
}

TangencySet apply(const WhiteheadMove& m, const TangencySet& s) {
  std::vector<CyclicWord> words;
  words.reserve(s.reduced().size());
  for (const CyclicWord& w : s.reduced()) words.push_back(cyclic_reduce(substitute(m, w.word())));
  return TangencySet::from_cyclic(s.genus(), std::move(words));
}

std::int64_t length_delta(const WhiteheadMove& m, const TangencySet& s) {
  for (const CyclicWord& w : s.reduced())
    for (Letter l : w)
      if (l.index() > m.genus()) throw IndexOutOfRange(l.index(), m.genus(), "move substitution");
  if (m.is_permutation()) return 0;
  if (s.genus() != m.genus()) {
    // Pair counts are sized by the set's genus; re-home onto the move's rank.
    return LengthDeltaEvaluator<std::int64_t>(
        pair_counts(TangencySet::from_cyclic(m.genus(), s.reduced())))(m);
  }
  return LengthDeltaEvaluator<std::int64_t>(pair_counts(s))(m);
}

namespace {

struct Best {
  std::int64_t delta = 0;
  std::size_t index = std::numeric_limits<std::size_t>::max();
};

Best better(Best x, Best y) {
  if (y.delta < x.delta || (y.delta == x.delta && y.index < x.index)) return y;
  return x;
}

Best scan(const std::vector<WhiteheadMove>& moves, const LengthDeltaEvaluator<std::int64_t>& eval,
          std::size_t begin, std::size_t end) {
  Best best;
  for (std::size_t i = begin; i < end; ++i) {
    const std::int64_t d = eval(moves[i]);
    if (d < best.delta) best = {d, i};
  }
  return best;
}

}  // namespace

Reduction reduce(const TangencySet& s, ReduceOptions options) {
  Reduction result{TangencySet::from_cyclic(s.genus(), s.reduced()), {}};
  if (s.genus() < 2 || s.reduced().empty()) return result;

  const std::vector<WhiteheadMove> moves = enumerate_moves(s.genus(), {.permutations = false});
  const unsigned threads = std::max(1U, std::min<unsigned>(options.threads, 64));

  std::size_t current = result.minimal.length();
  for (;;) {
    const LengthDeltaEvaluator<std::int64_t> eval(pair_counts(result.minimal));
    Best best;
    if (threads == 1) {
      best = scan(moves, eval, 0, moves.size());
    } else {
      std::vector<Best> partial(threads);
      {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (moves.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
          const std::size_t b = std::min(moves.size(), t * chunk);
          const std::size_t e = std::min(moves.size(), b + chunk);
          pool.emplace_back([&, t, b, e] { partial[t] = scan(moves, eval, b, e); });
        }
      }
      for (const Best& p : partial) best = better(best, p);
    }
    if (best.delta >= 0) break;

    const WhiteheadMove& m = moves[best.index];
    TangencySet next = apply(m, result.minimal);
    const std::size_t len = next.length();
    if (static_cast<std::int64_t>(len) != static_cast<std::int64_t>(current) + best.delta)
      throw std::logic_error("length delta disagrees with substitution");
    result.trace.steps.push_back({m, next, len});
    result.minimal = std::move(next);
    current = len;
  }
  return result;
}

std::string to_string(const WhiteheadMove& m) {
  std::string out;
  for (int i = 1; i <= m.genus(); ++i) {
    const Letter x = Letter::gen(i);
    const Word img = m.image(x);
    if (img.size() == 1 && img[0] == x) continue;
    if (!out.empty()) out += ", ";
    out += to_string(x) + " -> " + to_string(img);
  }
  return out.empty() ? "identity" : out;
}

}  // namespace isoblock
