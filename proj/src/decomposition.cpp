#include "confex/decomposition.hpp"

#include <algorithm>
#include <map>

namespace confex {

namespace {

Column drop_row(const Column& c, unsigned row) {
  Column out;
  out.reserve(c.size() - 1);
  for (unsigned i = 0; i < c.size(); ++i)
    if (i != row) out.push_back(c[i]);
  return out;
}

}  // namespace

DecompositionStep decompose(const AlphMatrix& A, SimplicityBound s,
                            unsigned pivot_row) {
  if (A.rows() < 1) throw ArgumentError("decompose: need at least one row");
  if (pivot_row >= A.rows()) throw ArgumentError("decompose: bad pivot row");
  if (!is_s_simple(A, s))
    throw ArgumentError("decompose: matrix is not s-simple");

  unsigned r = A.alphabet();
  // Working multiset of tails: per tail, the surviving origins in each
  // G-block.
  std::map<Column, std::vector<std::vector<unsigned>>> work;
  std::vector<unsigned> g_sizes(r, 0);
  for (unsigned j = 0; j < A.cols(); ++j) {
    Symbol g = A.at(pivot_row, j);
    ++g_sizes[g];
    auto& blocks = work.try_emplace(drop_row(A.column(j), pivot_row),
                                    std::vector<std::vector<unsigned>>(r))
                       .first->second;
    blocks[g].push_back(j);
  }

  DecompositionStep step;
  step.pivot_row = pivot_row;
  step.g_sizes = std::move(g_sizes);

  std::vector<Column> c_cols, a1_cols;
  for (auto& [tail, blocks] : work) {
    auto total = [&] {
      unsigned t = 0;
      for (const auto& b : blocks) t += static_cast<unsigned>(b.size());
      return t;
    };
    while (total() > s.s) {
      // Two blocks currently holding the most copies; each block holds
      // at most s copies (A is s-simple), so multiplicity > s forces at
      // least two nonempty blocks.
      int first = -1, second = -1;
      for (unsigned g = 0; g < blocks.size(); ++g) {
        if (blocks[g].empty()) continue;
        if (first < 0 || blocks[g].size() > blocks[first].size()) {
          second = first;
          first = static_cast<int>(g);
        } else if (second < 0 || blocks[g].size() > blocks[second].size()) {
          second = static_cast<int>(g);
        }
      }
      if (second < 0)
        throw ArgumentError("decompose: pair extraction infeasible");
      Symbol ga = static_cast<Symbol>(std::min(first, second));
      Symbol gb = static_cast<Symbol>(std::max(first, second));
      ExtractionRecord rec;
      rec.column = tail;
      rec.sym_a = ga;
      rec.sym_b = gb;
      rec.origin_a = blocks[ga].front();
      rec.origin_b = blocks[gb].front();
      blocks[ga].erase(blocks[ga].begin());
      blocks[gb].erase(blocks[gb].begin());
      c_cols.push_back(tail);
      step.records.push_back(std::move(rec));
    }
    for (const auto& b : blocks)
      for (unsigned origin : b) {
        a1_cols.push_back(tail);
        step.a1_origins.push_back(origin);
      }
  }

  step.C = AlphMatrix(A.alphabet(), A.rows() - 1, std::move(c_cols));
  step.A1 = AlphMatrix(A.alphabet(), A.rows() - 1, std::move(a1_cols));
  return step;
}

std::vector<DecompositionStep> chain(const AlphMatrix& A, SimplicityBound s) {
  std::vector<DecompositionStep> steps;
  AlphMatrix cur = A;
  std::vector<unsigned> origin(A.cols());
  for (unsigned j = 0; j < A.cols(); ++j) origin[j] = j;
  for (unsigned i = 0; i + 1 < A.rows(); ++i) {
    DecompositionStep step = decompose(cur, s, 0);
    step.pivot_row = i;
    for (auto& rec : step.records) {
      rec.origin_a = origin[rec.origin_a];
      rec.origin_b = origin[rec.origin_b];
    }
    std::vector<unsigned> next_origin(step.a1_origins.size());
    for (unsigned j = 0; j < step.a1_origins.size(); ++j)
      next_origin[j] = origin[step.a1_origins[j]];
    step.a1_origins = next_origin;
    cur = step.A1;
    origin = std::move(next_origin);
    steps.push_back(std::move(step));
  }
  return steps;
}

namespace {

void build_node(DecompositionTree& node, SimplicityBound s, unsigned& budget,
                bool& complete) {
  node.bound = s.s;
  if (node.matrix.rows() <= 1 || node.matrix.cols() == 0) return;
  node.steps = chain(node.matrix, s);
  unsigned r = node.matrix.alphabet();
  unsigned child_bound = std::max(1u, r * s.s / 2);
  for (unsigned i = 0; i < node.steps.size(); ++i) {
    const DecompositionStep& step = node.steps[i];
    if (step.C.cols() == 0) continue;  // empty C-blocks are dropped
    if (budget == 0) {
      complete = false;
      return;
    }
    --budget;
    DecompositionTree child;
    child.matrix = step.C;
    child.row_offset = node.row_offset + step.pivot_row + 1;
    child.col_origin.reserve(step.records.size());
    for (const auto& rec : step.records)
      child.col_origin.push_back(node.col_origin[rec.origin_a]);
    build_node(child, SimplicityBound(child_bound), budget, complete);
    node.child_step.push_back(i);
    node.children.push_back(std::move(child));
  }
  for (const auto& child : node.children) {
    node.stats.depth = std::max(node.stats.depth, child.stats.depth + 1);
    node.stats.node_count += child.stats.node_count;
  }
  node.stats.max_branching = static_cast<unsigned>(node.children.size());
  for (const auto& child : node.children)
    node.stats.max_branching =
        std::max(node.stats.max_branching, child.stats.max_branching);
}

}  // namespace

DecompositionTree build_tree(const AlphMatrix& A, SimplicityBound s,
                             const TreeOptions& opts) {
  DecompositionTree root;
  root.matrix = A;
  root.row_offset = 0;
  root.col_origin.resize(A.cols());
  for (unsigned j = 0; j < A.cols(); ++j) root.col_origin[j] = j;
  unsigned budget = opts.max_nodes;
  bool complete = true;
  build_node(root, s, budget, complete);
  root.complete = complete;
  return root;
}

}  // namespace confex
