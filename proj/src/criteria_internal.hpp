#pragma once

#include <vector>

#include "dynlie/criteria.hpp"

namespace dynlie::detail {

double max_abs(const std::vector<double>& v);
/// Every entry exceeds the absolute floor scaled by the largest magnitude.
bool all_nonzero(const std::vector<double>& v);
/// a^2 == b^2 to relative tolerance.
bool same_square(double a, double b);
bool close(double a, double b, double scale);
/// v_m differs from v_anchor for every other m in M.
bool v_distinct_from(const OmegaV& ov, int anchor);
bool uniform_hypothesis(const GenericCartanSystem& g);

}  // namespace dynlie::detail
