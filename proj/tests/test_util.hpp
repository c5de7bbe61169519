#ifndef CONFEX_TEST_UTIL_HPP
#define CONFEX_TEST_UTIL_HPP

#include <random>
#include <set>
#include <vector>

#include "confex/matrix.hpp"

namespace confex::testutil {

using Rng = std::mt19937;

inline unsigned pick(Rng& rng, unsigned lo, unsigned hi) {
  return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
}

inline Column random_column(Rng& rng, unsigned m, unsigned r) {
  Column c(m);
  for (auto& v : c) v = static_cast<Symbol>(pick(rng, 0, r - 1));
  return c;
}

inline AlphMatrix random_matrix(Rng& rng, unsigned m, unsigned n, unsigned r) {
  std::vector<Column> cols;
  cols.reserve(n);
  for (unsigned j = 0; j < n; ++j) cols.push_back(random_column(rng, m, r));
  return AlphMatrix(r, m, std::move(cols));
}

/// Random matrix with every column multiplicity <= s (distinct columns
/// when s = 1). Caps n at s * r^m implicitly by rejection.
inline AlphMatrix random_s_simple(Rng& rng, unsigned m, unsigned n, unsigned r,
                                  unsigned s = 1) {
  std::vector<Column> cols;
  std::set<Column> seen;
  std::vector<Column> pool;
  unsigned attempts = 0;
  while (cols.size() < n && attempts < 50 * n + 100) {
    ++attempts;
    Column c = random_column(rng, m, r);
    unsigned count = 0;
    for (const Column& have : cols) count += have == c;
    if (count < s) cols.push_back(std::move(c));
  }
  return AlphMatrix(r, m, std::move(cols));
}

/// All r^m columns on m rows in canonical order.
inline AlphMatrix complete_matrix(unsigned m, unsigned r) {
  std::vector<Column> cols;
  Column c(m, 0);
  while (true) {
    cols.push_back(c);
    unsigned i = m;
    while (i > 0 && c[i - 1] == r - 1) c[--i] = 0;
    if (i == 0) break;
    ++c[i - 1];
  }
  return AlphMatrix(r, m, std::move(cols));
}

}  // namespace confex::testutil

#endif
