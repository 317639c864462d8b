#pragma once

#include <vector>

#include <gmpxx.h>

namespace trilinear {

/// Distinct rational roots of a univariate polynomial given by coefficients
/// c_0..c_n (lowest degree first), in increasing order. Roots are found mod a
/// small prime, lifted p-adically and confirmed by exact evaluation.
std::vector<mpq_class> rational_roots(const std::vector<mpq_class>& coeffs);

}  // namespace trilinear
