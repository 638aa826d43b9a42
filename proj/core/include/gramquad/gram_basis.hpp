#pragma once

// Orthonormal Gram (discrete Legendre) polynomials on P equidistant points
// of [-1, 1]. With N = P - 1 the basis satisfies
//
//   G_{m+1}(x) = alpha_m x G_m(x) - gamma_m G_{m-1}(x),
//   G_0(x) = (N + 1)^{-1/2},  G_{-1}(x) = 0,
//
// with gamma_m = alpha_m / alpha_{m-1} and alpha_{-1} = 1. Rows of the
// design matrix (the values of one G_m at every point) are produced one at a
// time; nothing here ever holds more than two rows.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace gramquad {

/// alpha_{m,N} = N/(m+1) * sqrt((4(m+1)^2 - 1) / ((N+1)^2 - (m+1)^2)).
/// Requires 0 <= m <= n_param - 1; throws DomainError otherwise.
double alpha_coefficient(int m, std::size_t n_param);

/// floor(sqrt(p_points - 1)), the largest degree that keeps the weights in
/// the positive (stable) regime.
int default_max_degree(std::size_t p_points);

/// x_i = -1 + 2i/(P-1), i = 0..P-1. Endpoints are exactly -1 and 1.
std::vector<double> equidistant_points(std::size_t p_points);

/// Coefficient table for degrees 0..max_degree.
///
/// alpha is shifted by one: alpha[0] = alpha_{-1} = 1 and alpha[m + 1] is
/// alpha_{m,N}, so the table has max_degree + 2 entries. gamma is never
/// stored.
struct GramRecurrence {
  std::size_t n_param = 0;
  int max_degree = 0;
  std::vector<double> alpha;

  std::size_t point_count() const { return n_param + 1; }

  /// alpha_{m,N}
  double scale(int m) const { return alpha[static_cast<std::size_t>(m) + 1]; }

  /// gamma_{m,N} = alpha_{m,N} / alpha_{m-1,N}
  double damping(int m) const {
    return alpha[static_cast<std::size_t>(m) + 1] / alpha[static_cast<std::size_t>(m)];
  }
};

/// Builds the table for p_points >= 2. max_degree defaults to
/// default_max_degree(p_points) and may not exceed it.
///
/// When max_degree == n_param (only possible for P = 2) the top entry
/// alpha_{M,N} has a zero denominator and is stored as +inf. It is never read:
/// advancing stops at max_degree.
GramRecurrence build_recurrence(std::size_t p_points,
                                std::optional<int> max_degree = std::nullopt);

/// Two live rows of the design matrix. `cur` holds G_degree at each point,
/// `prev` holds G_{degree-1}.
struct RowState {
  std::vector<double> prev;
  std::vector<double> cur;
  int degree = 0;

  std::size_t size() const { return cur.size(); }
};

/// Degree-0 state on the rule's own point set: prev = 0, cur = P^{-1/2}.
/// `points` must have rec.point_count() entries.
RowState initial_row_state(const GramRecurrence& rec, std::span<const double> points);

/// Degree-0 state on an arbitrary point set with per-point weights:
/// cur[n] = weights[n] * P^{-1/2}. The recurrence is linear, so advancing this
/// state yields weights[n] * G_m(x_n). Used for moments on Gauss nodes and for
/// evaluation on dense grids (weights = 1).
RowState seeded_row_state(const GramRecurrence& rec, std::span<const double> weights);

/// Same as seeded_row_state with unit weights on `count` points.
RowState unit_row_state(const GramRecurrence& rec, std::size_t count);

/// One step of the three-term recurrence, in place on the moved-in buffers:
/// cur' = alpha_m x cur - gamma_m prev, prev' = cur. Throws DomainError when
/// state.degree == rec.max_degree or when sizes disagree.
RowState advance_row(RowState state, const GramRecurrence& rec,
                     std::span<const double> points);

/// max_{k,l <= M} |sum_i G_k(x_i) G_l(x_i) - delta_kl| over `points`,
/// accumulated block-wise over the points so memory stays O(M^2 + M * block).
double orthonormality_residual(const GramRecurrence& rec, std::span<const double> points);

}  // namespace gramquad
