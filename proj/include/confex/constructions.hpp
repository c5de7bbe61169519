#ifndef CONFEX_CONSTRUCTIONS_HPP
#define CONFEX_CONSTRUCTIONS_HPP

#include <string>
#include <vector>

#include "confex/matrix.hpp"

namespace confex {

/// Disjoint nonempty symbol blocks covering {0,...,r-1}.
struct Partition {
  std::vector<std::vector<Symbol>> blocks;

  /// Throws unless blocks are disjoint, nonempty, and cover {0,...,r-1}.
  void validate(unsigned r) const;
};

/// Parse "0,1|2" style block lists.
Partition parse_partition(const std::string& text);

/// Simple m-rowed matrix over {a,b} with exactly floor(tm/2)+1 columns
/// and t.[e] not contained: the all-(not e) column, the m single-e
/// columns, then floor(m(t-2)/2) distinct two-e columns chosen by
/// round-robin row pairing until per-row e-budgets (t-1) are exhausted.
AlphMatrix construct_single_pair_avoider(unsigned m, unsigned t, Symbol a,
                                         Symbol b, Symbol e);

/// Concatenation of the C(r,2) single-pair avoiders (e = a per pair),
/// deduplicated to a simple matrix.
AlphMatrix construct_pair_family_lb(unsigned m, unsigned r, unsigned t);

/// Concatenation of (t-1) copies of every I_m(a,b), a != b: a
/// (t-1)-simple matrix with exactly r(r-1)(t-1)m columns avoiding the
/// t-fold identity/triangular family for ell >= 3. t < 2 yields the
/// empty matrix.
AlphMatrix construct_identity_lb(unsigned m, unsigned r, unsigned t);

/// Append q = ceil(log2(t-1)) binary code rows so that equal-column
/// groups become distinct; column count is preserved. Requires M to be
/// (t-1)-simple.
AlphMatrix augment_to_simple(const AlphMatrix& M, unsigned t);

/// Entrywise block-index map: each entry a in block P_i becomes i.
AlphMatrix collapse_partition(const AlphMatrix& A, const Partition& pi);

}  // namespace confex

#endif
