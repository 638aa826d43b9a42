#include "gramquad/gauss_legendre.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gramquad/errors.hpp"

namespace gramquad {

namespace {

constexpr double kNewtonTolerance = 1e-15;
constexpr int kMaxNewtonIterations = 100;

}  // namespace

std::pair<double, double> legendre_value_and_derivative(int n, double x) {
  if (n < 0) throw DomainError("legendre_value_and_derivative: negative degree");
  if (n == 0) return {1.0, 0.0};

  double p_prev = 1.0;  // P_0
  double p = x;         // P_1
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0) * x * p - k * p_prev) / (k + 1.0);
    p_prev = p;
    p = next;
  }

  const double nn = static_cast<double>(n);
  if (std::abs(x) == 1.0) {
    const double sign = (x > 0.0 || n % 2 == 1) ? 1.0 : -1.0;
    return {p, sign * nn * (nn + 1.0) / 2.0};
  }
  return {p, nn * (x * p - p_prev) / (x * x - 1.0)};
}

GaussRule gauss_legendre_rule(int n) {
  if (n < 1) throw DomainError("gauss_legendre_rule: order must be >= 1");

  GaussRule rule;
  rule.order = n;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));

  // Only the non-negative half is iterated; the rest follows by symmetry.
  // Guess k = 1 is the largest root, so root k lands at index n - k.
  const int half = (n + 1) / 2;
  for (int k = 1; k <= half; ++k) {
    double x = std::cos(std::numbers::pi * (k - 0.25) / (n + 0.5));
    bool converged = false;
    for (int it = 0; it < kMaxNewtonIterations; ++it) {
      const auto [p, deriv] = legendre_value_and_derivative(n, x);
      const double dx = p / deriv;
      x -= dx;
      if (std::abs(dx) < kNewtonTolerance) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw ComputationError("gauss_legendre_rule: Newton iteration for root " +
                             std::to_string(k) + " of P_" + std::to_string(n) +
                             " did not converge");
    }
    const double dp = legendre_value_and_derivative(n, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);

    const auto hi = static_cast<std::size_t>(n - k);
    const auto lo = static_cast<std::size_t>(k - 1);
    if (hi == lo) {
      rule.nodes[hi] = 0.0;
      rule.weights[hi] = w;
    } else {
      rule.nodes[hi] = x;
      rule.nodes[lo] = -x;
      rule.weights[hi] = w;
      rule.weights[lo] = w;
    }
  }
  return rule;
}

}  // namespace gramquad
