#pragma once

// Brute-force baselines used to validate the streaming path. None of this is
// meant for production sizes.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace gramquad {

/// Full (M+1) x P design matrix, entries(j, i) = G_j(x_i), row-major.
struct DenseDesignMatrix {
  std::size_t p_points = 0;
  int degree = 0;
  std::vector<double> entries;

  std::size_t rows() const { return static_cast<std::size_t>(degree) + 1; }
  double operator()(std::size_t j, std::size_t i) const { return entries[j * p_points + i]; }
  std::span<const double> row(std::size_t j) const {
    return {entries.data() + j * p_points, p_points};
  }
};

/// Orthonormal basis and its moments, built without the three-term recurrence
/// and without Gauss quadrature.
struct DenseSystem {
  DenseDesignMatrix matrix;
  std::vector<double> moments;
};

/// Orthonormalises the Legendre values P_k(x_i), k = 0..degree, over the
/// equidistant points with twice-iterated modified Gram-Schmidt, tracking the
/// change of basis so that b_j = 2 * C_{j,0} (only P_0 has a nonzero integral).
DenseSystem dense_system(std::size_t p_points, std::optional<int> degree = std::nullopt);

/// A^T b from the fully materialised system. Same domain as compute_rule.
std::vector<double> dense_weights(std::size_t p_points, std::optional<int> degree = std::nullopt);

/// Closed Newton-Cotes weights on P equidistant points, w_i = integral of the
/// i-th Lagrange basis polynomial, integrated with a Gauss rule of order
/// ceil(P/2) + 2. Valid for 2 <= P <= 30.
std::vector<double> newton_cotes_weights(std::size_t p_points);

inline constexpr std::size_t kNewtonCotesMaxPoints = 30;

}  // namespace gramquad
