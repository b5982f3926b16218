#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "rw/params.hpp"

namespace rw {

struct SurveyResult {
  int records = 0;
  int disagreements = 0;
  int capacity_errors = 0;
};

/// Enumerates the normalized parameter representatives (a ≤ n/2, r ≤ n/2)
/// for 3 ≤ n ≤ max_n in (n, a, r) order. ParameterError if max_n < 3.
std::vector<RoseWindowParams> survey_representatives(int max_n);

/// Writes the survey as JSON lines: a header line carrying the tool
/// version, max_n and the enumeration cap; one classification record per
/// normalized representative, sorted by (n, a, r), each with both
/// arithmetic and search verdicts (degenerate records carry arithmetic
/// fields only); and a final summary line with the disagreement and
/// capacity-error counts. Output is byte-identical for fixed inputs,
/// independent of the number of jobs. `jobs` is the number of worker
/// threads (values < 2 mean serial).
SurveyResult run_survey(int max_n, std::ostream& out, int jobs = 1);

} // namespace rw
