#include "isoblock/criterion.hpp"

namespace isoblock {

OccurrenceReport occurrences(const TangencySet& s) {
  OccurrenceReport report = OccurrenceReport::Zero(s.genus(), 2);
  for (const CyclicWord& w : s.reduced())
    for (Letter l : w) report(l.index() - 1, l.positive() ? 0 : 1) += 1;
  return report;
}

bool satisfies_a(const OccurrenceReport& report) {
  for (Eigen::Index i = 0; i < report.rows(); ++i) {
    const long pos = report(i, 0);
    const long neg = report(i, 1);
    if (!((pos == 0 && neg == 0) || (pos == 1 && neg == 1))) return false;
  }
  return true;
}

std::pair<bool, OccurrenceReport> check_a(const TangencySet& s) {
  OccurrenceReport report = occurrences(s);
  const bool ok = satisfies_a(report);
  return {ok, std::move(report)};
}

std::string_view to_string(Interpretation i) {
  switch (i) {
    case Interpretation::NontrivialH1:
      return "NONTRIVIAL_H1";
    case Interpretation::InconclusiveRealizable:
      return "INCONCLUSIVE_REALIZABLE";
  }
  return "NONTRIVIAL_H1";
}

Interpretation interpret(bool criterion_holds) {
  return criterion_holds ? Interpretation::InconclusiveRealizable : Interpretation::NontrivialH1;
}

Verdict verdict(int genus, std::vector<Word> raw_words, ReduceOptions options) {
  return verdict(TangencySet(genus, std::move(raw_words)), options);
}

Verdict verdict(const TangencySet& s, ReduceOptions options) {
  Verdict v;
  v.genus = s.genus();
  v.input = s;

  if (s.genus() == 0) {
    v.s_min = TangencySet(0, {});
    v.occurrences = occurrences(v.s_min);
    v.criterion_holds = true;
    v.basis = Basis::GenusZero;
  } else if (s.raw_words().empty()) {
    v.s_min = TangencySet(s.genus(), {});
    v.occurrences = occurrences(v.s_min);
    v.criterion_holds = false;
    v.basis = Basis::NoTangencyCurves;
  } else {
    Reduction r = reduce(s, options);
    v.s_min = std::move(r.minimal);
    v.trace = std::move(r.trace);
    auto [ok, report] = check_a(v.s_min);
    v.criterion_holds = ok;
    v.occurrences = std::move(report);
  }
  v.interpretation = interpret(v.criterion_holds);
  return v;
}

std::optional<bool> essential_count_fastpath(const TangencySet& s) {
  if (s.nonempty_count() > 2 * static_cast<std::size_t>(s.genus())) return false;
  return std::nullopt;
}

}  // namespace isoblock
