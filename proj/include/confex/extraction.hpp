#ifndef CONFEX_EXTRACTION_HPP
#define CONFEX_EXTRACTION_HPP

#include <optional>
#include <vector>

#include "confex/containment.hpp"
#include "confex/matrix.hpp"
#include "confex/patterns.hpp"
#include "confex/ramsey.hpp"

namespace confex {

enum class ExtractStrategy { DIRECT, PROOF_FOLLOWING };

/// A verified pattern occurrence pulled out of a matrix with many
/// distinct columns.
struct ExtractionResult {
  PatternKind kind = PatternKind::IDENTITY;
  Symbol a = 0;
  Symbol b = 0;
  unsigned ell = 0;
  ConfigWitness witness;
  ExtractStrategy strategy = ExtractStrategy::DIRECT;
};

struct ExtractOptions {
  ExtractStrategy strategy = ExtractStrategy::DIRECT;
  /// Node-branching threshold that triggers the square-layout route in
  /// PROOF_FOLLOWING; the theoretical threshold u is astronomically
  /// large, so a configurable desk-scale budget stands in for it.
  unsigned branching_budget = 8;
  /// Containment mode used for the returned witness (DIRECT route).
  Mode mode = Mode::CONFIGURATION;
};

/// Find a verified I_ell(a,b) or T_ell(a,b) occurrence in A.
///
/// DIRECT scans the full pattern family with the containment search.
/// PROOF_FOLLOWING builds the decomposition tree: a chain deeper than
/// the depth bound C(r,2)(ell-1)+1 pigeonholes the chain's pair labels
/// and reads an identity occurrence off the doubled columns; a node
/// branching beyond the budget builds the square layout, colours its
/// edges, finds a monochromatic clique and applies the diagonal
/// pigeonhole or alternate-deletion kernel. When neither trigger fires
/// (or a route fails at desk scale) it falls back to DIRECT.
std::optional<ExtractionResult> extract_configuration(
    const AlphMatrix& A, unsigned ell, const ExtractOptions& opts = {});

struct MonotoneRun {
  bool increasing = true;
  std::vector<unsigned> indices;  // positions into the input sequence
};

/// Strictly monotone subsequence of length ell (longest-run dynamic
/// programming); guaranteed to exist when the input has at least
/// (ell-1)^2 + 1 distinct values.
std::optional<MonotoneRun> es_monotone(const std::vector<unsigned>& seq,
                                       unsigned ell);

/// Fixed-row-and-column-order occurrence of one of I/T/I^R/T^R: find an
/// ell^2-sized row-fixed configuration, extract a monotone run from its
/// column permutation, and restrict.
std::optional<ExtractionResult> extract_submatrix(const AlphMatrix& A,
                                                  unsigned ell);

// Proof kernels, exposed for direct testing.

/// Diagonal pigeonhole: S is a square matrix with every off-diagonal
/// entry equal to off_diag and no diagonal entry equal to it; returns a
/// value b and >= ell positions whose diagonal entry is b. Requires
/// side >= (alphabet-1)(ell-1)+1.
std::pair<Symbol, std::vector<unsigned>> case1_pigeonhole(const AlphMatrix& S,
                                                          Symbol off_diag,
                                                          unsigned ell);

/// Alternate deletion on a 2*ell square (delete first column, second
/// row, third column, ...): the surviving row and column index sets,
/// which carve T_ell(a,b) out of any square with constant a below and
/// constant b above the diagonal.
std::pair<std::vector<unsigned>, std::vector<unsigned>>
case2_alternate_deletion(unsigned ell);

}  // namespace confex

#endif
