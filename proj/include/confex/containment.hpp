#ifndef CONFEX_CONTAINMENT_HPP
#define CONFEX_CONTAINMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "confex/matrix.hpp"

namespace confex {

/// Containment modes.
///   CONFIGURATION: arbitrary injective row map and column map.
///   ROW_FIXED:     strictly increasing row map, injective column map.
///   SUBMATRIX:     both maps strictly increasing.
enum class Mode { CONFIGURATION, ROW_FIXED, SUBMATRIX };

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& s);

/// Certificate of F < A: row_map[i] and col_map[j] are the A-row and
/// A-column hosting F's row i / column j, so that
/// A[row_map[i]][col_map[j]] == F[i][j] for all i, j.
struct ConfigWitness {
  Mode mode = Mode::CONFIGURATION;
  std::vector<unsigned> row_map;
  std::vector<unsigned> col_map;
};

/// Decide F < A in the given mode and return a witness when one exists.
/// Row maps are searched depth-first with per-row compatibility-bitset
/// pruning; at a complete row map the column assignment is resolved by
/// maximum bipartite matching (greedy leftmost matching in SUBMATRIX
/// mode, where the column map must be increasing).
///
/// F symbols outside A's alphabet are legal and simply never match.
std::optional<ConfigWitness> contains(const AlphMatrix& F, const AlphMatrix& A,
                                      Mode mode);

/// As contains, but only accepts witnesses whose column map uses A's
/// column `required_col`. Used by the extremal search for incremental
/// avoidance checks after appending a column.
std::optional<ConfigWitness> contains_using_column(const AlphMatrix& F,
                                                   const AlphMatrix& A,
                                                   Mode mode,
                                                   unsigned required_col);

/// Exhaustive test oracle: enumerates every admissible row map and
/// column map. Intended for F up to ~3x3 and A up to ~6x10.
std::optional<ConfigWitness> contains_naive(const AlphMatrix& F,
                                            const AlphMatrix& A, Mode mode);

/// True iff w satisfies every ConfigWitness invariant against F and A.
bool verify_witness(const AlphMatrix& F, const AlphMatrix& A,
                    const ConfigWitness& w);

}  // namespace confex

#endif
