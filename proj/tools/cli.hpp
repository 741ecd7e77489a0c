#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "isoblock/criterion.hpp"
#include "isoblock/models.hpp"
#include "isoblock/oracle.hpp"

namespace isoblock::cli {

/// Exit statuses; "criterion fails" is kept apart from operational errors.
enum ExitCode : int {
  kOk = 0,
  kError = 1,
  kCriterionFails = 3,
  kBudgetExceeded = 4,
};

/// {genus, input_words, s_min, trace, occurrences, criterion_holds, interpretation}
nlohmann::ordered_json verdict_json(const Verdict& v);
nlohmann::ordered_json models_json(int genus, const std::vector<ModelClass>& models);

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isoblock::cli
