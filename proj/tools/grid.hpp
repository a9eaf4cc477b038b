#pragma once

#include <string_view>
#include <vector>

namespace qsr::cli {

/// Evaluates a scalar such as "0.9", "pi/2", "3pi/4", "pi/2-0.1", "1/sqrt(2)" or
/// "sqrt(3)/2". `pi_value` is what the symbol pi stands for (pi in radian
/// mode, 180 in degree mode). Throws DomainError on syntax errors.
double parse_scalar(std::string_view text, double pi_value);

/// Grid specification: "a:b:n" (n >= 2 evenly spaced points including both
/// ends), a comma-separated list "v1,v2,...", or a single value.
std::vector<double> parse_grid(std::string_view text, double pi_value);

}  // namespace qsr::cli
