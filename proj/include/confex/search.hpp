#ifndef CONFEX_SEARCH_HPP
#define CONFEX_SEARCH_HPP

#include <cstdint>
#include <vector>

#include "confex/containment.hpp"
#include "confex/matrix.hpp"
#include "confex/patterns.hpp"

namespace confex {

struct SearchCaps {
  std::uint64_t max_nodes = 0;   // 0 = unlimited
  double timeout_seconds = 0.0;  // 0 = unlimited
};

/// Result of an exact forb computation. When complete, value is the
/// exact maximum and witness is an extremal avoider; on a resource cap
/// value is a certified lower bound (the witness still avoids).
struct SearchReport {
  unsigned m = 0;
  unsigned r = 0;
  unsigned s = 1;
  ForbiddenFamily family;
  std::uint64_t value = 0;
  AlphMatrix witness;
  std::uint64_t nodes_explored = 0;
  bool complete = true;

  SearchReport() : witness(AlphMatrix::empty(1, 0)) {}
};

/// Exact maximum number of columns of an s-simple m-rowed r-matrix
/// avoiding every family member in CONFIGURATION mode.
///
/// Columns are chosen as a non-decreasing sequence in the canonical
/// base-r order (quotienting out column permutations exactly), each
/// column used at most s times. After appending a column only witnesses
/// whose column map uses it are searched; branch-and-bound on the
/// remaining feasible candidate budget.
SearchReport forb_exact(unsigned m, unsigned r, const ForbiddenFamily& family,
                        SimplicityBound s, const SearchCaps& caps = {});

/// max over m' = 0..m of forb_exact; the achieving m' is the witness's
/// row count.
SearchReport forbmax_exact(unsigned m, unsigned r,
                           const ForbiddenFamily& family, SimplicityBound s,
                           const SearchCaps& caps = {});

}  // namespace confex

#endif
