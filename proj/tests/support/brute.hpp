#pragma once

#include <string>
#include <vector>

namespace relift::testsupport {

// Plain recursive definition of edit distance, no dynamic programming.
// Exponential; only for short sequences.
int brute_edit_distance(const std::vector<std::string>& a, const std::vector<std::string>& b);

// Upper tail of the chi-square distribution: P(X >= x) with k degrees of
// freedom, via the regularized incomplete gamma function.
double chi_square_upper(double x, int k);

// Chi-square goodness-of-fit p-value for observed counts against a uniform
// distribution over the given number of bins.
double uniform_fit_pvalue(const std::vector<long>& counts);

}  // namespace relift::testsupport
