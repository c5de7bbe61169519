#include "confex/extraction.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "confex/decomposition.hpp"

namespace confex {

namespace {

std::optional<ExtractionResult> direct_scan(const AlphMatrix& A, unsigned ell,
                                            Mode mode) {
  ForbiddenFamily fam = family_T(ell, A.alphabet());
  for (const PatternSpec& spec : fam.members) {
    AlphMatrix F = realize(spec);
    if (F.rows() > A.rows() || F.cols() > A.cols()) continue;
    if (auto w = contains(F, A, mode)) {
      ExtractionResult res;
      res.kind = spec.kind;
      res.a = spec.a;
      res.b = spec.b;
      res.ell = ell;
      res.witness = std::move(*w);
      res.strategy = ExtractStrategy::DIRECT;
      return res;
    }
  }
  return std::nullopt;
}

unsigned max_multiplicity(const AlphMatrix& A) {
  std::map<Column, unsigned> counts;
  unsigned best = 1;
  for (const Column& c : A.columns()) best = std::max(best, ++counts[c]);
  return best;
}

std::optional<ExtractionResult> verified(const AlphMatrix& A, PatternKind kind,
                                         Symbol a, Symbol b, unsigned ell,
                                         ConfigWitness w) {
  AlphMatrix F = realize(PatternSpec::generator(kind, ell, a, b));
  if (!verify_witness(F, A, w)) return std::nullopt;
  ExtractionResult res;
  res.kind = kind;
  res.a = a;
  res.b = b;
  res.ell = ell;
  res.witness = std::move(w);
  res.strategy = ExtractStrategy::PROOF_FOLLOWING;
  return res;
}

// Root-to-leaf path of maximum depth, with the chosen child index at
// each interior node.
struct TreePath {
  std::vector<const DecompositionTree*> nodes;
  std::vector<unsigned> child_idx;  // nodes.size() - 1 entries

  const DecompositionStep& edge_step(unsigned t) const {
    const DecompositionTree* n = nodes[t];
    return n->steps[n->child_step[child_idx[t]]];
  }
};

TreePath deepest_path(const DecompositionTree& root) {
  TreePath path;
  const DecompositionTree* cur = &root;
  path.nodes.push_back(cur);
  while (!cur->children.empty()) {
    unsigned best = 0;
    for (unsigned c = 1; c < cur->children.size(); ++c)
      if (cur->children[c].stats.depth > cur->children[best].stats.depth)
        best = c;
    path.child_idx.push_back(best);
    cur = &cur->children[best];
    path.nodes.push_back(cur);
  }
  return path;
}

// Chain-depth route: pigeonhole the pair labels along the deepest path,
// then realize the identity witness by re-walking the path and taking
// the second doubled copy at exactly one selected edge per column.
std::optional<ExtractionResult> depth_route(const AlphMatrix& A,
                                            const TreePath& path,
                                            unsigned ell) {
  unsigned d = static_cast<unsigned>(path.child_idx.size());
  if (d == 0) return std::nullopt;

  struct EdgeLabel {
    Symbol a = 0, b = 0;
    unsigned row = 0;  // pivot row in A's coordinates
  };
  std::vector<EdgeLabel> labels(d);
  unsigned cur = 0;  // any column of the terminal node
  for (unsigned t = d; t-- > 0;) {
    const DecompositionStep& step = path.edge_step(t);
    const ExtractionRecord& rec = step.records[cur];
    labels[t] = {rec.sym_a, rec.sym_b, path.nodes[t]->row_offset + step.pivot_row};
    cur = rec.origin_a;
  }

  std::map<std::pair<Symbol, Symbol>, std::vector<unsigned>> by_pair;
  for (unsigned t = 0; t < d; ++t)
    by_pair[{labels[t].a, labels[t].b}].push_back(t);
  const std::vector<unsigned>* sel = nullptr;
  Symbol pa = 0, pb = 0;
  for (const auto& [pair, edges] : by_pair)
    if (edges.size() >= ell) {
      sel = &edges;
      pa = pair.first;
      pb = pair.second;
      break;
    }
  if (!sel) return std::nullopt;

  std::vector<unsigned> rows;  // increasing: edges are ordered by depth
  for (unsigned k = 0; k < ell; ++k) rows.push_back(labels[(*sel)[k]].row);

  // Column for target p carries pb at rows[p] and should carry pa at
  // the other selected rows. Above the deviation edge the walk passes
  // through columns whose doubling pairs are no longer pinned down, so
  // every lifted column is checked entrywise.
  std::vector<unsigned> cols;
  std::set<unsigned> used;
  for (unsigned p = 0; p < ell; ++p) {
    unsigned c = 0;
    for (unsigned t = d; t-- > 0;) {
      const ExtractionRecord& rec = path.edge_step(t).records[c];
      c = t == (*sel)[p] ? rec.origin_b : rec.origin_a;
    }
    unsigned root_col = path.nodes.front()->col_origin[c];
    bool ok = used.insert(root_col).second;
    for (unsigned i = 0; i < ell && ok; ++i)
      ok = A.at(rows[i], root_col) == (i == p ? pb : pa);
    if (!ok) {
      cols.clear();
      break;
    }
    cols.push_back(root_col);
  }
  if (cols.size() == ell) {
    ConfigWitness w;
    w.mode = Mode::CONFIGURATION;
    w.row_map = rows;
    w.col_map = cols;
    if (auto res = verified(A, PatternKind::IDENTITY, pb, pa, ell, std::move(w)))
      return res;
  }

  // The pigeonholed rows are still a strong hint: search the row-restricted
  // matrix for any pattern over the pair.
  AlphMatrix R = select_rows(A, rows);
  const std::pair<PatternKind, std::pair<Symbol, Symbol>> candidates[] = {
      {PatternKind::IDENTITY, {pb, pa}},
      {PatternKind::IDENTITY, {pa, pb}},
      {PatternKind::TRIANGULAR, {pa, pb}},
      {PatternKind::TRIANGULAR, {pb, pa}},
  };
  for (const auto& [kind, pair] : candidates) {
    AlphMatrix F = realize(PatternSpec::generator(kind, ell, pair.first, pair.second));
    if (auto w = contains(F, R, Mode::CONFIGURATION)) {
      for (unsigned& i : w->row_map) i = rows[i];
      if (auto res = verified(A, kind, pair.first, pair.second, ell, std::move(*w)))
        return res;
    }
  }
  return std::nullopt;
}

const DecompositionTree* find_branchy(const DecompositionTree& node,
                                      unsigned budget) {
  if (node.children.size() > budget) return &node;
  for (const DecompositionTree& child : node.children)
    if (const DecompositionTree* hit = find_branchy(child, budget)) return hit;
  return nullptr;
}

// Branching route: one doubled column pair per child gives the square
// layout; a monochromatic clique resolves into the diagonal-pigeonhole
// or the alternate-deletion kernel.
std::optional<ExtractionResult> layout_route(const AlphMatrix& A,
                                             const DecompositionTree& node,
                                             unsigned ell) {
  unsigned r = A.alphabet();
  unsigned k = static_cast<unsigned>(node.children.size());

  struct Vertex {
    unsigned row = 0;  // pivot row in A's coordinates
    unsigned u = 0;    // A column carrying sym_a at row
    unsigned v = 0;    // A column carrying sym_b at row
    Symbol a = 0, b = 0;
  };
  std::vector<Vertex> verts(k);
  for (unsigned c = 0; c < k; ++c) {
    const DecompositionStep& step = node.steps[node.child_step[c]];
    const ExtractionRecord& rec = step.records.front();
    verts[c] = {node.row_offset + step.pivot_row,
                node.col_origin[rec.origin_a], node.col_origin[rec.origin_b],
                rec.sym_a, rec.sym_b};
  }

  SquareLayout layout;
  layout.order = k;
  layout.width = 2;
  layout.alphabet = r;
  layout.cells.assign(k, std::vector<Column>(k));
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j)
      layout.cells[i][j] = {A.at(verts[i].row, verts[j].u),
                            A.at(verts[i].row, verts[j].v)};

  std::vector<std::pair<EdgeColour, unsigned>> targets;
  unsigned diag_target = (r - 1) * (ell - 1) + 1;
  for (unsigned a = 0; a < r; ++a) {
    EdgeColour c;
    c.kind = EdgeColour::Kind::DIAGONAL_CONSTANT;
    c.a = static_cast<Symbol>(a);
    targets.emplace_back(c, diag_target);
  }
  for (unsigned a = 0; a < r; ++a)
    for (unsigned b = 0; b < r; ++b) {
      if (a == b) continue;
      EdgeColour c;
      c.a = static_cast<Symbol>(a);
      c.b = static_cast<Symbol>(b);
      c.kind = EdgeColour::Kind::FIRST_COLUMN;
      targets.emplace_back(c, 2 * ell);
      c.kind = EdgeColour::Kind::SECOND_COLUMN;
      targets.emplace_back(c, 2 * ell);
    }

  std::optional<std::pair<EdgeColour, std::vector<unsigned>>> hit;
  try {
    hit = find_mono_clique(colour_edges(layout), targets);
  } catch (const ArgumentError&) {
    return std::nullopt;
  }
  if (!hit) return std::nullopt;
  const EdgeColour& colour = hit->first;
  const std::vector<unsigned>& clique = hit->second;

  if (colour.kind == EdgeColour::Kind::DIAGONAL_CONSTANT) {
    Symbol a = colour.a;
    // Off-diagonal entries across the clique are all a; each diagonal
    // pair offers a symbol other than a.
    std::vector<unsigned> srows, scols;
    for (unsigned t : clique) {
      srows.push_back(verts[t].row);
      scols.push_back(verts[t].a != a ? verts[t].u : verts[t].v);
    }
    AlphMatrix S = select_cols(select_rows(A, srows), scols);
    auto [bstar, positions] = case1_pigeonhole(S, a, ell);
    ConfigWitness w;
    w.mode = Mode::CONFIGURATION;
    for (unsigned p = 0; p < ell; ++p) {
      w.row_map.push_back(srows[positions[p]]);
      w.col_map.push_back(scols[positions[p]]);
    }
    return verified(A, PatternKind::IDENTITY, bstar, a, ell, std::move(w));
  }

  // Cases 2 and 3: single-column selection then alternate deletion.
  bool first = colour.kind == EdgeColour::Kind::FIRST_COLUMN;
  auto [keep_rows, keep_cols] = case2_alternate_deletion(ell);
  ConfigWitness w;
  w.mode = Mode::CONFIGURATION;
  for (unsigned x : keep_rows) w.row_map.push_back(verts[clique[x]].row);
  for (unsigned y : keep_cols)
    w.col_map.push_back(first ? verts[clique[y]].u : verts[clique[y]].v);
  return verified(A, PatternKind::TRIANGULAR, colour.a, colour.b, ell,
                  std::move(w));
}

std::optional<ExtractionResult> proof_following(const AlphMatrix& A,
                                                unsigned ell,
                                                const ExtractOptions& opts) {
  DecompositionTree tree =
      build_tree(A, SimplicityBound(max_multiplicity(A)));
  unsigned r = A.alphabet();
  unsigned depth_bound = r * (r - 1) / 2 * (ell - 1) + 1;
  if (tree.stats.depth >= depth_bound)
    if (auto res = depth_route(A, deepest_path(tree), ell)) return res;
  if (const DecompositionTree* node =
          find_branchy(tree, std::max(opts.branching_budget, 1u)))
    if (auto res = layout_route(A, *node, ell)) return res;
  return std::nullopt;
}

}  // namespace

std::optional<ExtractionResult> extract_configuration(
    const AlphMatrix& A, unsigned ell, const ExtractOptions& opts) {
  if (ell < 1) throw ArgumentError("extract_configuration: ell must be >= 1");
  if (A.alphabet() < 2)
    throw ArgumentError("extract_configuration: alphabet must be >= 2");
  if (opts.strategy == ExtractStrategy::PROOF_FOLLOWING)
    if (auto res = proof_following(A, ell, opts)) return res;
  return direct_scan(A, ell, opts.mode);
}

std::optional<MonotoneRun> es_monotone(const std::vector<unsigned>& seq,
                                       unsigned ell) {
  unsigned n = static_cast<unsigned>(seq.size());
  if (ell == 0) return MonotoneRun{true, {}};
  if (ell == 1) {
    if (n == 0) return std::nullopt;
    return MonotoneRun{true, {0}};
  }
  for (bool increasing : {true, false}) {
    std::vector<unsigned> len(n, 1);
    std::vector<int> pred(n, -1);
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < i; ++j) {
        bool ok = increasing ? seq[j] < seq[i] : seq[j] > seq[i];
        if (ok && len[j] + 1 > len[i]) {
          len[i] = len[j] + 1;
          pred[i] = static_cast<int>(j);
        }
      }
      if (len[i] >= ell) {
        MonotoneRun run;
        run.increasing = increasing;
        for (int p = static_cast<int>(i); p >= 0; p = pred[p])
          run.indices.push_back(static_cast<unsigned>(p));
        std::reverse(run.indices.begin(), run.indices.end());
        run.indices.resize(ell);
        return run;
      }
    }
  }
  return std::nullopt;
}

std::optional<ExtractionResult> extract_submatrix(const AlphMatrix& A,
                                                  unsigned ell) {
  if (ell < 1) throw ArgumentError("extract_submatrix: ell must be >= 1");
  unsigned big_ell = ell * ell;
  ExtractOptions opts;
  opts.strategy = ExtractStrategy::DIRECT;
  opts.mode = Mode::ROW_FIXED;
  auto big = extract_configuration(A, big_ell, opts);
  if (!big) return std::nullopt;

  // Column ranks of the row-fixed witness form a permutation with
  // ell^2 >= (ell-1)^2 + 1 entries, so a monotone run of length ell
  // always exists.
  const std::vector<unsigned>& cm = big->witness.col_map;
  std::vector<unsigned> sorted_cols = cm;
  std::sort(sorted_cols.begin(), sorted_cols.end());
  std::vector<unsigned> pos(big_ell);
  for (unsigned j = 0; j < big_ell; ++j)
    pos[j] = static_cast<unsigned>(
        std::lower_bound(sorted_cols.begin(), sorted_cols.end(), cm[j]) -
        sorted_cols.begin());
  auto run = es_monotone(pos, ell);
  if (!run) return std::nullopt;

  std::vector<unsigned> rows, cols;
  for (unsigned t : run->indices) {
    rows.push_back(big->witness.row_map[t]);
    cols.push_back(cm[t]);
  }
  PatternKind kind = big->kind;
  if (!run->increasing) {
    std::reverse(cols.begin(), cols.end());
    kind = kind == PatternKind::IDENTITY ? PatternKind::IDENTITY_REVERSED
                                         : PatternKind::TRIANGULAR_REVERSED;
  }

  ConfigWitness w;
  w.mode = Mode::SUBMATRIX;
  w.row_map = std::move(rows);
  w.col_map = std::move(cols);
  AlphMatrix F = realize(PatternSpec::generator(kind, ell, big->a, big->b));
  if (!verify_witness(F, A, w)) return std::nullopt;
  ExtractionResult res;
  res.kind = kind;
  res.a = big->a;
  res.b = big->b;
  res.ell = ell;
  res.witness = std::move(w);
  res.strategy = ExtractStrategy::DIRECT;
  return res;
}

std::pair<Symbol, std::vector<unsigned>> case1_pigeonhole(const AlphMatrix& S,
                                                          Symbol off_diag,
                                                          unsigned ell) {
  unsigned n = S.rows();
  if (S.cols() != n) throw ArgumentError("case1_pigeonhole: not square");
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      if (i == j) {
        if (S.at(i, i) == off_diag)
          throw ArgumentError("case1_pigeonhole: diagonal hits off_diag");
      } else if (S.at(i, j) != off_diag) {
        throw ArgumentError("case1_pigeonhole: off-diagonal not constant");
      }
    }
  std::map<Symbol, std::vector<unsigned>> where;
  for (unsigned i = 0; i < n; ++i) {
    auto& positions = where[S.at(i, i)];
    positions.push_back(i);
    if (positions.size() >= ell) return {S.at(i, i), positions};
  }
  throw ArgumentError("case1_pigeonhole: no diagonal value reaches ell");
}

std::pair<std::vector<unsigned>, std::vector<unsigned>>
case2_alternate_deletion(unsigned ell) {
  std::vector<unsigned> rows, cols;
  for (unsigned t = 0; t < ell; ++t) {
    rows.push_back(2 * t);
    cols.push_back(2 * t + 1);
  }
  return {rows, cols};
}

}  // namespace confex
