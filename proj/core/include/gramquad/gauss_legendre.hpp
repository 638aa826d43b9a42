#pragma once

#include <utility>
#include <vector>

namespace gramquad {

/// n-point Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree
/// <= 2n - 1. Nodes ascending, weights positive.
struct GaussRule {
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// (P_n(x), P_n'(x)) from the three-term recurrence. At |x| = 1 the
/// derivative is taken from the closed form P_n'(+-1) = (+-1)^{n+1} n(n+1)/2.
std::pair<double, double> legendre_value_and_derivative(int n, double x);

/// Roots of P_n by Newton iteration from cos(pi (k - 1/4) / (n + 1/2)),
/// stopping once |dx| < 1e-15 (100 iterations at most, else
/// ComputationError). Weights are 2 / ((1 - x^2) P_n'(x)^2).
GaussRule gauss_legendre_rule(int n);

}  // namespace gramquad
