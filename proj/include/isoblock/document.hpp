#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "isoblock/words.hpp"

namespace isoblock {

/// A parsed tangency-data file.
///
/// Format, line oriented: `#` starts a comment; blank lines are ignored; the
/// first significant line is `genus <g>`; every later significant line is one
/// word, either whitespace-separated `x<k>` / `x<k>^-1` tokens or a single
/// compact run of letters (`a`..`z` = x1..x26, upper case = inverses). The
/// line `1` is the empty word.
struct InputDocument {
  int genus = 0;
  /// Significant word lines as written, comments and outer blanks removed.
  std::vector<std::string> word_lines;
  std::vector<Word> words;
  std::string source;

  TangencySet tangency_set() const { return TangencySet(genus, words); }
};

/// Throws MissingGenus, MalformedWord (with 1-based line/column) or
/// IndexOutOfRange.
InputDocument parse_document(std::string_view text, std::string source = "<input>");

/// Parses one word line against `genus`; `line_no` only feeds error positions.
Word parse_word(std::string_view line, int genus, std::size_t line_no = 0);

/// `genus <g>` followed by one token-form line per word.
std::string render_document(int genus, const std::vector<Word>& words);
std::string render_document(const InputDocument& doc);

}  // namespace isoblock
