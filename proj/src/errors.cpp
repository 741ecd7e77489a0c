#include "isoblock/errors.hpp"

namespace isoblock {

IndexOutOfRange::IndexOutOfRange(int index, int genus, std::string where)
    : Error("generator x" + std::to_string(index) + " out of range for genus " +
            std::to_string(genus) + (where.empty() ? "" : " (" + where + ")")),
      index_(index),
      genus_(genus) {}

MalformedWord::MalformedWord(const std::string& what, std::size_t line, std::size_t column)
    : Error(line == 0 ? what
                      : "line " + std::to_string(line) + ", column " + std::to_string(column) +
                            ": " + what),
      line_(line),
      column_(column) {}

BudgetExceeded::BudgetExceeded(std::size_t budget)
    : Error("exploration exceeded node budget of " + std::to_string(budget) + " states"),
      budget_(budget) {}

}  // namespace isoblock
