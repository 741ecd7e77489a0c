#include "isoblock/document.hpp"

#include <charconv>

#include "isoblock/errors.hpp"

namespace isoblock {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }
bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based within the line
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

// `x<digits>` or `x<digits>^-1`.
bool parse_token(std::string_view t, int& index, int& sign) {
  if (t.size() < 2 || t[0] != 'x') return false;
  std::size_t end = 1;
  while (end < t.size() && is_digit(t[end])) ++end;
  if (end == 1) return false;
  const std::string_view rest = t.substr(end);
  if (rest.empty())
    sign = 1;
  else if (rest == "^-1")
    sign = -1;
  else
    return false;
  const auto [ptr, ec] = std::from_chars(t.data() + 1, t.data() + end, index);
  return ec == std::errc{} && ptr == t.data() + end && index >= 1;
}

bool is_compact(std::string_view t) {
  for (char c : t)
    if (!is_alpha(c)) return false;
  return !t.empty();
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string where(std::size_t line_no) {
  return line_no == 0 ? std::string{} : "line " + std::to_string(line_no);
}

}  // namespace

Word parse_word(std::string_view raw, int genus, std::size_t line_no) {
  // Column numbers refer to `raw`, which callers pass unstripped.
  const std::vector<Token> tokens = split(raw);
  if (tokens.empty()) throw MalformedWord("empty word line (write 1 for the empty word)", line_no, 1);
  if (tokens.size() == 1 && tokens[0].text == "1") return Word{};

  std::vector<Letter> letters;
  int index = 0, sign = 0;
  if (parse_token(tokens[0].text, index, sign)) {
    for (const Token& t : tokens) {
      if (!parse_token(t.text, index, sign)) {
        if (is_compact(t.text))
          throw MalformedWord("mixed token and compact forms in one word", line_no, t.column);
        throw MalformedWord("bad letter token '" + std::string(t.text) + "'", line_no, t.column);
      }
      if (index > genus) throw IndexOutOfRange(index, genus, where(line_no));
      letters.push_back(Letter::make(index, sign));
    }
    return Word(std::move(letters));
  }

  if (!is_compact(tokens[0].text))
    throw MalformedWord("bad letter token '" + std::string(tokens[0].text) + "'", line_no,
                        tokens[0].column);
  if (tokens.size() > 1) {
    const Token& t = tokens[1];
    throw MalformedWord(parse_token(t.text, index, sign)
                            ? "mixed token and compact forms in one word"
                            : "compact word must be a single run of letters",
                        line_no, t.column);
  }
  for (char c : tokens[0].text) {
    const bool upper = c >= 'A' && c <= 'Z';
    const int idx = (upper ? c - 'A' : c - 'a') + 1;
    if (idx > genus) throw IndexOutOfRange(idx, genus, where(line_no));
    letters.push_back(Letter::make(idx, upper ? -1 : 1));
  }
  return Word(std::move(letters));
}

InputDocument parse_document(std::string_view text, std::string source) {
  InputDocument doc;
  doc.source = std::move(source);
  bool have_genus = false;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  for (;;) {
    const std::size_t nl = text.find('\n', pos);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    if (strip(line).empty()) {
      if (nl == std::string_view::npos) break;
      continue;
    }

    if (!have_genus) {
      const std::vector<Token> tokens = split(line);
      if (tokens[0].text != "genus")
        throw MissingGenus("line " + std::to_string(line_no) + ": expected 'genus <g>' header");
      if (tokens.size() != 2)
        throw MalformedWord("genus header takes exactly one value", line_no, tokens[0].column);
      const std::string_view v = tokens[1].text;
      int g = -1;
      const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), g);
      if (ec != std::errc{} || ptr != v.data() + v.size() || g < 0)
        throw MalformedWord("bad genus '" + std::string(v) + "'", line_no, tokens[1].column);
      doc.genus = g;
      have_genus = true;
    } else {
      doc.words.push_back(parse_word(line, doc.genus, line_no));
      doc.word_lines.emplace_back(strip(line));
    }
    if (nl == std::string_view::npos) break;
  }
  if (!have_genus) throw MissingGenus("no 'genus <g>' header");
  return doc;
}

std::string render_document(int genus, const std::vector<Word>& words) {
  std::string out = "genus " + std::to_string(genus) + "\n";
  for (const Word& w : words) out += to_string(w) + "\n";
  return out;
}

std::string render_document(const InputDocument& doc) { return render_document(doc.genus, doc.words); }

}  // namespace isoblock
