#include "confex/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "confex/patterns.hpp"

namespace confex {

void Partition::validate(unsigned r) const {
  std::vector<bool> seen(r, false);
  for (const auto& block : blocks) {
    if (block.empty()) throw ArgumentError("Partition: empty block");
    for (Symbol v : block) {
      if (v >= r) throw ArgumentError("Partition: symbol out of range");
      if (seen[v]) throw ArgumentError("Partition: blocks not disjoint");
      seen[v] = true;
    }
  }
  for (unsigned v = 0; v < r; ++v)
    if (!seen[v])
      throw ArgumentError("Partition: symbol " + std::to_string(v) +
                          " uncovered");
}

Partition parse_partition(const std::string& text) {
  Partition pi;
  std::vector<Symbol> block;
  std::string num;
  auto flush_num = [&] {
    if (num.empty()) throw ArgumentError("partition: missing symbol");
    block.push_back(static_cast<Symbol>(std::stoul(num)));
    num.clear();
  };
  for (char c : text) {
    if (c >= '0' && c <= '9') num.push_back(c);
    else if (c == ',') flush_num();
    else if (c == '|') {
      flush_num();
      pi.blocks.push_back(block);
      block.clear();
    } else if (c != ' ') {
      throw ArgumentError("partition: bad character");
    }
  }
  flush_num();
  pi.blocks.push_back(block);
  return pi;
}

AlphMatrix construct_single_pair_avoider(unsigned m, unsigned t, Symbol a,
                                         Symbol b, Symbol e) {
  if (t < 2) throw ArgumentError("construct_single_pair_avoider: t < 2");
  if (a == b) throw ArgumentError("construct_single_pair_avoider: a == b");
  if (e != a && e != b)
    throw ArgumentError("construct_single_pair_avoider: e not in {a,b}");
  if (m < 1) throw ArgumentError("construct_single_pair_avoider: m < 1");
  Symbol ne = e == a ? b : a;
  unsigned alphabet = static_cast<unsigned>(std::max(a, b)) + 1;

  std::vector<Column> cols;
  cols.emplace_back(m, ne);
  for (unsigned i = 0; i < m; ++i) {
    Column c(m, ne);
    c[i] = e;
    cols.push_back(std::move(c));
  }

  unsigned need = m * (t - 2) / 2;
  std::vector<unsigned> budget(m, t - 2);  // e-budget left after the singles
  std::set<std::pair<unsigned, unsigned>> used;
  auto emit = [&](unsigned i, unsigned j) {
    Column c(m, ne);
    c[i] = e;
    c[j] = e;
    cols.push_back(std::move(c));
    --budget[i];
    --budget[j];
    used.emplace(i, j);
  };
  unsigned placed = 0;
  for (unsigned offset = 0; offset < m && placed < need; ++offset)
    for (unsigned i = offset; i + 1 < m && placed < need; i += 2) {
      if (budget[i] == 0 || budget[i + 1] == 0 || used.count({i, i + 1}))
        continue;
      emit(i, i + 1);
      ++placed;
    }
  // Round-robin may strand budget on non-adjacent rows; sweep all pairs.
  for (unsigned i = 0; i < m && placed < need; ++i)
    for (unsigned j = i + 1; j < m && placed < need; ++j) {
      if (budget[i] == 0 || budget[j] == 0 || used.count({i, j})) continue;
      emit(i, j);
      ++placed;
    }
  if (placed < need)
    throw ArgumentError(
        "construct_single_pair_avoider: cannot place the two-e columns");

  return AlphMatrix(alphabet, m, std::move(cols));
}

AlphMatrix construct_pair_family_lb(unsigned m, unsigned r, unsigned t) {
  if (r < 2) throw ArgumentError("construct_pair_family_lb: r < 2");
  if (t < 2) throw ArgumentError("construct_pair_family_lb: t < 2");
  std::set<Column> seen;
  std::vector<Column> cols;
  for (Symbol a = 0; a < r; ++a)
    for (Symbol b = static_cast<Symbol>(a + 1); b < r; ++b) {
      AlphMatrix M = construct_single_pair_avoider(m, t, a, b, a);
      for (const Column& c : M.columns())
        if (seen.insert(c).second) cols.push_back(c);
    }
  return AlphMatrix(r, m, std::move(cols));
}

AlphMatrix construct_identity_lb(unsigned m, unsigned r, unsigned t) {
  if (r < 2) throw ArgumentError("construct_identity_lb: r < 2");
  if (m < 1) throw ArgumentError("construct_identity_lb: m < 1");
  if (t < 2) return AlphMatrix::empty(r, m);
  std::vector<Column> cols;
  for (Symbol a = 0; a < r; ++a)
    for (Symbol b = 0; b < r; ++b) {
      if (a == b) continue;
      AlphMatrix I = identity_pattern(m, a, b);
      for (unsigned k = 0; k + 1 < t; ++k)
        cols.insert(cols.end(), I.columns().begin(), I.columns().end());
    }
  return AlphMatrix(r, m, std::move(cols));
}

AlphMatrix augment_to_simple(const AlphMatrix& M, unsigned t) {
  if (t < 2) throw ArgumentError("augment_to_simple: t < 2");
  if (!is_s_simple(M, SimplicityBound(t - 1)))
    throw ArgumentError("augment_to_simple: M is not (t-1)-simple");
  unsigned q = 0;
  while ((1u << q) < t - 1) ++q;  // q = ceil(log2(t-1))
  if (q == 0) return M;

  // Codewords 0,1,... within each group of equal columns, assigned in
  // canonical column order.
  std::vector<unsigned> order(M.cols());
  for (unsigned j = 0; j < M.cols(); ++j) order[j] = j;
  std::stable_sort(order.begin(), order.end(), [&](unsigned x, unsigned y) {
    return M.column(x) < M.column(y);
  });
  std::map<Column, unsigned> next_code;
  std::vector<unsigned> code(M.cols(), 0);
  for (unsigned j : order) code[j] = next_code[M.column(j)]++;

  std::vector<Column> cols = M.columns();
  for (unsigned j = 0; j < M.cols(); ++j)
    for (unsigned bit = q; bit-- > 0;)
      cols[j].push_back(static_cast<Symbol>((code[j] >> bit) & 1));
  return AlphMatrix(std::max(M.alphabet(), 2u), M.rows() + q,
                    std::move(cols));
}

AlphMatrix collapse_partition(const AlphMatrix& A, const Partition& pi) {
  // pi may partition a larger alphabet; every symbol of A must be
  // covered exactly once.
  std::vector<int> owner(256, -1);
  for (unsigned i = 0; i < pi.blocks.size(); ++i) {
    if (pi.blocks[i].empty()) throw ArgumentError("Partition: empty block");
    for (Symbol v : pi.blocks[i]) {
      if (owner[v] >= 0) throw ArgumentError("Partition: blocks not disjoint");
      owner[v] = static_cast<int>(i);
    }
  }
  for (unsigned v = 0; v < A.alphabet(); ++v)
    if (owner[v] < 0)
      throw ArgumentError("collapse_partition: symbol " + std::to_string(v) +
                          " uncovered");
  std::vector<Symbol> block_of(A.alphabet());
  for (unsigned v = 0; v < A.alphabet(); ++v)
    block_of[v] = static_cast<Symbol>(owner[v]);
  std::vector<Column> cols = A.columns();
  for (Column& c : cols)
    for (Symbol& v : c) v = block_of[v];
  return AlphMatrix(static_cast<unsigned>(pi.blocks.size()), A.rows(),
                    std::move(cols));
}

}  // namespace confex
