#pragma once

#include <span>

namespace dfbg {

// Zero-mean diagonal multivariate Gaussian density:
//   prod_k (2 pi var_k)^(-1/2) * exp(-d_k^2 / (2 var_k)).
// Throws std::invalid_argument on non-positive variance or size mismatch.
double gaussian_pdf(std::span<const double> d, std::span<const double> variances);

}  // namespace dfbg
