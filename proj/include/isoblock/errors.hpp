#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isoblock {

/// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A word mentions a generator index larger than the genus.
class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(int index, int genus, std::string where = {});

  int index() const noexcept { return index_; }
  int genus() const noexcept { return genus_; }

 private:
  int index_;
  int genus_;
};

/// A word line could not be tokenized. Positions are 1-based; 0 means unknown.
class MalformedWord : public Error {
 public:
  MalformedWord(const std::string& what, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// The document has no `genus <g>` header.
class MissingGenus : public Error {
 public:
  using Error::Error;
};

/// A brute-force exploration visited more states than it was allowed to.
/// Signals an instance too large to certify, not a wrong answer.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::size_t budget);

  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t budget_;
};

}  // namespace isoblock
