#ifndef CONFEX_DECOMPOSITION_HPP
#define CONFEX_DECOMPOSITION_HPP

#include <vector>

#include "confex/matrix.hpp"

namespace confex {

/// One column extracted into C during a decomposition step, with the
/// provenance needed to locate the doubled copies in the decomposed
/// matrix: the two deleted copies sat in blocks G_{sym_a} and G_{sym_b}
/// (sym_a < sym_b) at columns origin_a / origin_b of the matrix the
/// chain started from.
struct ExtractionRecord {
  Column column;  // the (m-1)-rowed tail
  Symbol sym_a = 0;
  Symbol sym_b = 0;
  unsigned origin_a = 0;
  unsigned origin_b = 0;
};

/// Result of one pivot-row split: A's columns are partitioned by the
/// pivot symbol into G-blocks (pivot row deleted); over-multiplicity
/// columns are paired off greedily into C, leaving the s-simple A1.
/// Column totals satisfy |A| = 2|C| + |A1|.
struct DecompositionStep {
  unsigned pivot_row = 0;  // row index in the chain's root matrix
  AlphMatrix C;
  AlphMatrix A1;
  std::vector<unsigned> g_sizes;               // per pivot symbol
  std::vector<ExtractionRecord> records;       // aligned with C's columns
  std::vector<unsigned> a1_origins;            // root column index per A1 column

  DecompositionStep() : C(AlphMatrix::empty(1, 0)), A1(AlphMatrix::empty(1, 0)) {}
};

/// Split A by the pivot row's symbol and greedily extract columns whose
/// working multiplicity exceeds s, deleting pairs of copies from the two
/// G-blocks currently holding the most. Requires A s-simple.
DecompositionStep decompose(const AlphMatrix& A, SimplicityBound s,
                            unsigned pivot_row);

/// Pivot rows processed top-to-bottom until one row remains; step i
/// records pivot_row = i and column origins relative to A.
std::vector<DecompositionStep> chain(const AlphMatrix& A, SimplicityBound s);

struct TreeStats {
  unsigned depth = 0;
  unsigned node_count = 1;
  unsigned max_branching = 0;
};

/// Tree of C-blocks: the children of a node are the nonempty C_i of its
/// chain, each carried with the updated multiplicity bound floor(r*s/2).
/// row_offset and col_origin map node coordinates back to the tree's
/// root matrix.
struct DecompositionTree {
  AlphMatrix matrix;
  unsigned bound = 1;             // multiplicity bound s at this node
  unsigned row_offset = 0;        // node row i == root row i + row_offset
  std::vector<unsigned> col_origin;  // node column -> root column
  std::vector<DecompositionStep> steps;
  std::vector<unsigned> child_step;  // chain-step index per child
  std::vector<DecompositionTree> children;
  TreeStats stats;
  bool complete = true;  // false when the node budget fired

  DecompositionTree() : matrix(AlphMatrix::empty(1, 0)) {}
};

struct TreeOptions {
  unsigned max_nodes = 100000;
};

DecompositionTree build_tree(const AlphMatrix& A, SimplicityBound s,
                             const TreeOptions& opts = {});

}  // namespace confex

#endif
