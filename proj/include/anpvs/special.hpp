#pragma once

namespace anpvs {

// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Digamma function for x > 0; absolute error below 1e-10.
double digamma(double x);

// Trigamma function (derivative of digamma) for x > 0.
double trigamma(double x);

// log B(a, b) via lgamma.
double log_beta(double a, double b);

// Mean of Kumaraswamy(a, b): b * B(1 + 1/a, b).
double kumaraswamy_mean(double a, double b);

double softplus(double x);
double softplus_inverse(double y);
double sigmoid(double x);

}  // namespace anpvs
