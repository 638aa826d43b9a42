#pragma once

#include <vector>

#include "gramquad/gauss_legendre.hpp"
#include "gramquad/gram_basis.hpp"

namespace gramquad {

/// b_m = integral of G_m over [-1, 1] for m = 0..degree.
struct MomentVector {
  std::vector<double> values;
  int degree = 0;
};

/// Smallest Gauss order that integrates every G_m, m <= max_degree, exactly:
/// floor(max_degree / 2) + 1.
int minimal_gauss_order(int max_degree);

/// Moments via the recurrence carried on Gauss nodes: q_0 = w^GQ P^{-1/2},
/// q_{m+1} = alpha_m x^GQ q_m - gamma_m q_{m-1}, b_m = sum q_m.
/// Throws DomainError when gauss.order < minimal_gauss_order(rec.max_degree).
MomentVector compute_moments(const GramRecurrence& rec, const GaussRule& gauss);

/// compute_moments with the minimal Gauss order.
MomentVector compute_moments(const GramRecurrence& rec);

}  // namespace gramquad
