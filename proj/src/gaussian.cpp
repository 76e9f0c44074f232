#include "dfbg/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dfbg {

double gaussian_pdf(std::span<const double> d, std::span<const double> variances) {
  if (d.size() != variances.size())
    throw std::invalid_argument("gaussian_pdf: offset/variance dimension mismatch");
  if (d.empty())
    throw std::invalid_argument("gaussian_pdf: empty offset");

  double norm = 1.0;
  double exponent = 0.0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    const double v = variances[k];
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::invalid_argument("gaussian_pdf: variance must be positive and finite");
    norm *= 2.0 * std::numbers::pi * v;
    exponent += d[k] * d[k] / (2.0 * v);
  }
  return std::exp(-exponent) / std::sqrt(norm);
}

}  // namespace dfbg
