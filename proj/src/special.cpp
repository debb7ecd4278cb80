#include "anpvs/special.hpp"

#include <cmath>
#include <stdexcept>

namespace anpvs {

double digamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("digamma: x must be positive");
  double result = 0.0;
  // Recurrence psi(x) = psi(x+1) - 1/x until the asymptotic series is accurate.
  while (x < 10.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  // Asymptotic expansion with Bernoulli-number coefficients.
  double inv = 1.0 / x;
  double inv2 = inv * inv;
  double series = std::log(x) - 0.5 * inv -
                  inv2 * (1.0 / 12.0 -
                          inv2 * (1.0 / 120.0 -
                                  inv2 * (1.0 / 252.0 -
                                          inv2 * (1.0 / 240.0 -
                                                  inv2 * (1.0 / 132.0)))));
  return result + series;
}

double trigamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("trigamma: x must be positive");
  double result = 0.0;
  while (x < 10.0) {
    result += 1.0 / (x * x);
    x += 1.0;
  }
  double inv = 1.0 / x;
  double inv2 = inv * inv;
  double series =
      inv * (1.0 +
             inv * (0.5 +
                    inv * (1.0 / 6.0 -
                           inv2 * (1.0 / 30.0 -
                                   inv2 * (1.0 / 42.0 - inv2 * (1.0 / 30.0))))));
  return result + series;
}

double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double kumaraswamy_mean(double a, double b) {
  return b * std::exp(log_beta(1.0 + 1.0 / a, b));
}

double softplus(double x) {
  if (x > 30.0) return x;
  if (x < -30.0) return std::exp(x);
  return std::log1p(std::exp(x));
}

double softplus_inverse(double y) {
  if (y > 30.0) return y;
  return std::log(std::expm1(y));
}

double sigmoid(double x) {
  if (x >= 0.0) {
    double e = std::exp(-x);
    return 1.0 / (1.0 + e);
  }
  double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace anpvs
