#include "isoblock/words.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "isoblock/errors.hpp"

namespace isoblock {

Letter Letter::make(int index, int sign) {
  if (index < 1) throw std::invalid_argument("letter index must be >= 1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
  return sign > 0 ? gen(index) : gen_inv(index);
}

int Word::max_index() const {
  int m = 0;
  for (Letter l : letters_) m = std::max(m, l.index());
  return m;
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && stack.back() == l.inverse())
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return Word(std::move(stack));
}

bool is_cyclically_reduced(std::span<const Letter> letters) {
  const std::size_t n = letters.size();
  if (n < 2) return true;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (letters[i + 1] == letters[i].inverse()) return false;
  return letters.front() != letters.back().inverse();
}

std::size_t least_rotation_offset(std::span<const Letter> s) {
  const std::size_t n = s.size();
  if (n < 2) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const Letter a = s[(i + k) % n];
    const Letter b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b)
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

CyclicWord CyclicWord::from_reduced(std::vector<Letter> letters) {
  if (!is_cyclically_reduced(letters)) throw std::invalid_argument("word is not cyclically reduced");
  std::rotate(letters.begin(),
              letters.begin() + static_cast<std::ptrdiff_t>(least_rotation_offset(letters)),
              letters.end());
  CyclicWord w;
  w.letters_ = std::move(letters);
  return w;
}

CyclicWord cyclic_reduce(const Word& w) {
  const Word r = free_reduce(w);
  auto first = r.letters().begin();
  auto last = r.letters().end();
  // A freely reduced word can only cancel by peeling matching ends.
  while (last - first >= 2 && *first == std::prev(last)->inverse()) {
    ++first;
    --last;
  }
  return CyclicWord::from_reduced(std::vector<Letter>(first, last));
}

bool cyclic_equal(const CyclicWord& u, const CyclicWord& v) { return u == v; }

std::size_t algebraic_length(const Word& w) { return cyclic_reduce(w).size(); }

TangencySet::TangencySet(int genus, std::vector<Word> raw_words)
    : genus_(genus), raw_(std::move(raw_words)) {
  if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
  reduced_.reserve(raw_.size());
  for (const Word& w : raw_) {
    if (const int m = w.max_index(); m > genus_) throw IndexOutOfRange(m, genus_, to_string(w));
    CyclicWord c = cyclic_reduce(w);
    if (!c.empty()) reduced_.push_back(std::move(c));
  }
  std::sort(reduced_.begin(), reduced_.end());
}

TangencySet TangencySet::from_cyclic(int genus, std::vector<CyclicWord> words) {
  std::vector<Word> raw;
  raw.reserve(words.size());
  for (const CyclicWord& c : words)
    if (!c.empty()) raw.push_back(c.word());
  return TangencySet(genus, std::move(raw));
}

std::size_t TangencySet::length() const {
  return std::accumulate(reduced_.begin(), reduced_.end(), std::size_t{0},
                         [](std::size_t acc, const CyclicWord& c) { return acc + c.size(); });
}

std::size_t length(const TangencySet& s) { return s.length(); }

std::string to_string(Letter l) {
  std::string out = "x" + std::to_string(l.index());
  if (!l.positive()) out += "^-1";
  return out;
}

namespace {

std::string render_letters(std::span<const Letter> letters) {
  if (letters.empty()) return "1";
  std::string out;
  for (Letter l : letters) {
    if (!out.empty()) out += ' ';
    out += to_string(l);
  }
  return out;
}

}  // namespace

std::string to_string(const Word& w) { return render_letters(w.letters()); }
std::string to_string(const CyclicWord& w) { return render_letters(w.letters()); }

std::string to_string(const TangencySet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.reduced().size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.reduced()[i]);
  }
  return out + "}";
}

}  // namespace isoblock

std::size_t std::hash<isoblock::CyclicWord>::operator()(const isoblock::CyclicWord& w) const noexcept {
  // FNV-1a over letter codes.
  std::size_t h = 1469598103934665603ULL;
  for (isoblock::Letter l : w) {
    h ^= l.code() + 1;
    h *= 1099511628211ULL;
  }
  return h;
}
