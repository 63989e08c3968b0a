#pragma once

#include <vector>

#include "seriesforge/bigint.hpp"
#include "seriesforge/poly.hpp"

namespace seriesforge {

/// Rooted unlabeled series-reduced trees with `leaves` leaves counted by inner
/// vertices: poly[k] is the number of trees with k inner vertices.
struct RefinedPoly {
  unsigned leaves = 1;
  PolyVar poly;
};

/// Refined polynomials for s = 1..up_to_s from the divisor-sum Bell recurrence.
/// Throws std::logic_error if a result fails to be integral.
std::vector<RefinedPoly> refined_polys(unsigned up_to_s);

/// Number of rooted unlabeled series-reduced trees with s leaves.
BigInt unlabeled_count(unsigned s);

/// Inner vertices colored from m colors, adjacent ones different; returned as
/// m * q(m-1) with q(t) = refined(t)/t, which stays finite at m = 1.
PolyVar multipartite_unlabeled_polynomial(unsigned s);
PolyVar multipartite_unlabeled_polynomial(const RefinedPoly& refined);
BigInt multipartite_unlabeled(unsigned s, unsigned m);

/// Leaves colored too: m (m-1)^{s-1} refined(m-1), and m when s = 1.
BigInt fully_colored_unlabeled(unsigned s, unsigned m);
BigInt fully_colored_unlabeled(const RefinedPoly& refined, unsigned m);

}  // namespace seriesforge
