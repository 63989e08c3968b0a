#pragma once

// Published values used by `table --check-paper` and the test suites. These
// are literal transcriptions; nothing here is computed.

#include <cstdint>
#include <vector>

namespace seriesforge::reference {

/// grid[m-1][s-1]
using Grid = std::vector<std::vector<std::int64_t>>;
/// coeffs[i] is the coefficient of m^i
using Coeffs = std::vector<std::int64_t>;

const Grid& ultrametric_table();              // s, m <= 8
const Grid& fully_colored_labeled_table();    // s, m <= 6
const Grid& mobile_table();                   // s, m <= 8
const Grid& multipartite_unlabeled_table();   // s, m <= 8
const Grid& fully_colored_unlabeled_table();  // s, m <= 6

/// rows[k-1] holds the counts for n = k+1..10 leaves with k inner vertices.
const Grid& riordan_triangle_rows();
/// Column sums for n = 2..10.
const std::vector<std::int64_t>& riordan_column_sums();
/// Unlabeled series-reduced trees, s = 1..10.
const std::vector<std::int64_t>& unlabeled_sequence();

/// a_s(m) for s = 1..7.
const std::vector<Coeffs>& ultrametric_polynomials();
/// Unlabeled multipartite counts as polynomials in m, s = 1..8.
const std::vector<Coeffs>& multipartite_unlabeled_polynomials();

}  // namespace seriesforge::reference
