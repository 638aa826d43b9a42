#include "gramquad/moments.hpp"

#include <numeric>
#include <string>

#include "gramquad/errors.hpp"

namespace gramquad {

int minimal_gauss_order(int max_degree) { return max_degree / 2 + 1; }

MomentVector compute_moments(const GramRecurrence& rec, const GaussRule& gauss) {
  const int needed = minimal_gauss_order(rec.max_degree);
  if (gauss.order < needed) {
    throw DomainError("compute_moments: Gauss order " + std::to_string(gauss.order) +
                      " cannot integrate degree " + std::to_string(rec.max_degree) +
                      " exactly (need >= " + std::to_string(needed) + ")");
  }

  MomentVector b;
  b.degree = rec.max_degree;
  b.values.reserve(static_cast<std::size_t>(rec.max_degree) + 1);

  RowState q = seeded_row_state(rec, gauss.weights);
  for (int m = 0;; ++m) {
    b.values.push_back(std::accumulate(q.cur.begin(), q.cur.end(), 0.0));
    if (m == rec.max_degree) break;
    q = advance_row(std::move(q), rec, gauss.nodes);
  }
  return b;
}

MomentVector compute_moments(const GramRecurrence& rec) {
  return compute_moments(rec, gauss_legendre_rule(minimal_gauss_order(rec.max_degree)));
}

}  // namespace gramquad
