#include "confex/containment.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>

namespace confex {

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::CONFIGURATION: return "configuration";
    case Mode::ROW_FIXED: return "row_fixed";
    case Mode::SUBMATRIX: return "submatrix";
  }
  return "?";
}

Mode mode_from_string(const std::string& s) {
  if (s == "configuration" || s == "config") return Mode::CONFIGURATION;
  if (s == "row_fixed" || s == "rowfixed") return Mode::ROW_FIXED;
  if (s == "submatrix") return Mode::SUBMATRIX;
  throw ArgumentError("unknown mode: " + s);
}

namespace {

// Small dynamic bitset over A's column indices.
class Bits {
 public:
  explicit Bits(unsigned n = 0) : n_(n), w_((n + 63) / 64, 0) {}
  void set(unsigned i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(unsigned i) const {
    return (w_[i >> 6] >> (i & 63)) & 1;
  }
  void clear(unsigned i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  Bits& operator&=(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  unsigned count() const {
    unsigned c = 0;
    for (auto w : w_) c += static_cast<unsigned>(__builtin_popcountll(w));
    return c;
  }
  // Smallest set bit >= from, or n if none.
  unsigned next(unsigned from) const {
    for (unsigned i = from; i < n_; ++i)  // n is small; linear scan is fine
      if (test(i)) return i;
    return n_;
  }
  unsigned size() const { return n_; }

 private:
  unsigned n_;
  std::vector<std::uint64_t> w_;
};

struct Searcher {
  const AlphMatrix& F;
  const AlphMatrix& A;
  Mode mode;
  std::optional<unsigned> required_col;

  unsigned fr, fc, ar, ac;
  std::vector<unsigned> row_order;           // F rows, search order
  std::vector<std::vector<Bits>> colmask;    // [A row][symbol] -> A cols
  std::vector<unsigned> dup_count;           // per F col: multiplicity of its column
  std::vector<unsigned> assigned;            // F row (original idx) -> A row
  std::vector<bool> used_arow;
  std::optional<ConfigWitness> result;

  Searcher(const AlphMatrix& F_, const AlphMatrix& A_, Mode m,
           std::optional<unsigned> req)
      : F(F_), A(A_), mode(m), required_col(req) {
    fr = F.rows();
    fc = F.cols();
    ar = A.rows();
    ac = A.cols();
  }

  std::optional<ConfigWitness> run() {
    if (fr > ar || fc > ac) return std::nullopt;
    if (required_col && *required_col >= ac) return std::nullopt;
    if (fc == 0) {
      if (required_col) return std::nullopt;
      ConfigWitness w;
      w.mode = mode;
      w.row_map.resize(fr);
      std::iota(w.row_map.begin(), w.row_map.end(), 0u);
      return w;
    }
    colmask.assign(ar, std::vector<Bits>(A.alphabet(), Bits(ac)));
    for (unsigned k = 0; k < ar; ++k)
      for (unsigned c = 0; c < ac; ++c) colmask[k][A.at(k, c)].set(c);

    dup_count.assign(fc, 0);
    for (unsigned j = 0; j < fc; ++j)
      for (unsigned j2 = 0; j2 < fc; ++j2)
        if (F.column(j) == F.column(j2)) ++dup_count[j];

    row_order.resize(fr);
    std::iota(row_order.begin(), row_order.end(), 0u);
    if (mode == Mode::CONFIGURATION) {
      // Most-constrained-first: rows whose symbols are rarest in A go
      // early so mismatches prune at shallow depth.
      std::vector<unsigned> total(A.alphabet(), 0);
      for (unsigned k = 0; k < ar; ++k)
        for (unsigned c = 0; c < ac; ++c) ++total[A.at(k, c)];
      std::vector<unsigned long long> score(fr, 0);
      for (unsigned i = 0; i < fr; ++i)
        for (unsigned j = 0; j < fc; ++j) {
          Symbol v = F.at(i, j);
          score[i] += v < A.alphabet() ? total[v] : 0;
        }
      std::stable_sort(row_order.begin(), row_order.end(),
                       [&](unsigned x, unsigned y) { return score[x] < score[y]; });
    }

    assigned.assign(fr, 0);
    used_arow.assign(ar, false);
    std::vector<Bits> cand(fc, Bits(ac));
    for (unsigned j = 0; j < fc; ++j)
      for (unsigned c = 0; c < ac; ++c) cand[j].set(c);
    dfs(0, cand);
    return result;
  }

  bool feasible(const std::vector<Bits>& cand) const {
    for (unsigned j = 0; j < fc; ++j) {
      if (!cand[j].any()) return false;
      if (cand[j].count() < dup_count[j]) return false;
    }
    if (required_col) {
      bool hit = false;
      for (unsigned j = 0; j < fc && !hit; ++j)
        hit = cand[j].test(*required_col);
      if (!hit) return false;
    }
    return true;
  }

  void dfs(unsigned depth, const std::vector<Bits>& cand) {
    if (result) return;
    if (depth == fr) {
      finish(cand);
      return;
    }
    unsigned i = row_order[depth];
    unsigned lo = 0, hi = ar;
    if (mode != Mode::CONFIGURATION) {
      // Strictly increasing row map over F rows in natural order.
      lo = depth == 0 ? 0 : assigned[row_order[depth - 1]] + 1;
      hi = ar - (fr - depth) + 1;
    }
    for (unsigned k = lo; k < hi && !result; ++k) {
      if (mode == Mode::CONFIGURATION && used_arow[k]) continue;
      std::vector<Bits> next = cand;
      bool ok = true;
      for (unsigned j = 0; j < fc; ++j) {
        Symbol v = F.at(i, j);
        if (v >= A.alphabet()) {
          ok = false;
          break;
        }
        next[j] &= colmask[k][v];
      }
      if (!ok || !feasible(next)) continue;
      assigned[i] = k;
      used_arow[k] = true;
      dfs(depth + 1, next);
      used_arow[k] = false;
    }
  }

  // Column assignment at a complete row map.
  void finish(const std::vector<Bits>& cand) {
    std::vector<unsigned> col_map;
    bool ok = mode == Mode::SUBMATRIX ? match_increasing(cand, col_map)
                                      : match_bipartite(cand, col_map);
    if (!ok) return;
    ConfigWitness w;
    w.mode = mode;
    w.row_map.assign(assigned.begin(), assigned.end());
    w.col_map = std::move(col_map);
    result = std::move(w);
  }

  // Kuhn's augmenting-path matching, F columns against A columns.
  bool try_kuhn(const std::vector<Bits>& cand, unsigned j,
                std::vector<int>& owner, std::vector<bool>& seen) const {
    for (unsigned c = 0; c < ac; ++c) {
      if (!cand[j].test(c) || seen[c]) continue;
      seen[c] = true;
      if (owner[c] < 0 ||
          try_kuhn(cand, static_cast<unsigned>(owner[c]), owner, seen)) {
        owner[c] = static_cast<int>(j);
        return true;
      }
    }
    return false;
  }

  bool match_bipartite(const std::vector<Bits>& cand,
                       std::vector<unsigned>& col_map) const {
    std::vector<int> owner(ac, -1);
    if (required_col) {
      // Force some F column onto the required A column, then match the
      // rest around it.
      for (unsigned j = 0; j < fc; ++j) {
        if (!cand[j].test(*required_col)) continue;
        std::vector<int> own(ac, -1);
        own[*required_col] = static_cast<int>(j);
        bool all = true;
        for (unsigned j2 = 0; j2 < fc && all; ++j2) {
          if (j2 == j) continue;
          std::vector<bool> seen(ac, false);
          seen[*required_col] = true;  // pinned
          all = try_kuhn(cand, j2, own, seen);
        }
        if (all) {
          col_map.assign(fc, 0);
          for (unsigned c = 0; c < ac; ++c)
            if (own[c] >= 0) col_map[static_cast<unsigned>(own[c])] = c;
          return true;
        }
      }
      return false;
    }
    for (unsigned j = 0; j < fc; ++j) {
      std::vector<bool> seen(ac, false);
      if (!try_kuhn(cand, j, owner, seen)) return false;
    }
    col_map.assign(fc, 0);
    for (unsigned c = 0; c < ac; ++c)
      if (owner[c] >= 0) col_map[static_cast<unsigned>(owner[c])] = c;
    return true;
  }

  // Greedy leftmost increasing assignment; optimal for an
  // order-constrained matching.
  bool greedy_range(const std::vector<Bits>& cand, unsigned jb, unsigned je,
                    unsigned lo, unsigned hi,
                    std::vector<unsigned>& out) const {
    unsigned prev = lo;
    for (unsigned j = jb; j < je; ++j) {
      unsigned c = cand[j].next(prev);
      if (c >= hi) return false;
      out.push_back(c);
      prev = c + 1;
    }
    return true;
  }

  bool match_increasing(const std::vector<Bits>& cand,
                        std::vector<unsigned>& col_map) const {
    if (!required_col) {
      col_map.clear();
      return greedy_range(cand, 0, fc, 0, ac, col_map);
    }
    for (unsigned j = 0; j < fc; ++j) {
      if (!cand[j].test(*required_col)) continue;
      std::vector<unsigned> left, right;
      if (!greedy_range(cand, 0, j, 0, *required_col, left)) continue;
      if (!greedy_range(cand, j + 1, fc, *required_col + 1, ac, right))
        continue;
      col_map = std::move(left);
      col_map.push_back(*required_col);
      col_map.insert(col_map.end(), right.begin(), right.end());
      return true;
    }
    return false;
  }
};

bool entries_match(const AlphMatrix& F, const AlphMatrix& A,
                   const std::vector<unsigned>& row_map,
                   const std::vector<unsigned>& col_map) {
  for (unsigned i = 0; i < F.rows(); ++i)
    for (unsigned j = 0; j < F.cols(); ++j)
      if (A.at(row_map[i], col_map[j]) != F.at(i, j)) return false;
  return true;
}

// Enumerate injective maps [0,k) -> [0,n), increasing-only when
// `increasing`; calls fn for each, stopping when fn returns true.
bool enum_injections(unsigned k, unsigned n, bool increasing,
                     std::vector<unsigned>& cur,
                     const std::function<bool()>& fn) {
  if (cur.size() == k) return fn();
  unsigned lo = increasing && !cur.empty() ? cur.back() + 1 : 0;
  for (unsigned v = lo; v < n; ++v) {
    if (!increasing &&
        std::find(cur.begin(), cur.end(), v) != cur.end())
      continue;
    cur.push_back(v);
    if (enum_injections(k, n, increasing, cur, fn)) return true;
    cur.pop_back();
  }
  return false;
}

}  // namespace

std::optional<ConfigWitness> contains(const AlphMatrix& F, const AlphMatrix& A,
                                      Mode mode) {
  Searcher s(F, A, mode, std::nullopt);
  return s.run();
}

std::optional<ConfigWitness> contains_using_column(const AlphMatrix& F,
                                                   const AlphMatrix& A,
                                                   Mode mode,
                                                   unsigned required_col) {
  Searcher s(F, A, mode, required_col);
  return s.run();
}

std::optional<ConfigWitness> contains_naive(const AlphMatrix& F,
                                            const AlphMatrix& A, Mode mode) {
  if (F.rows() > A.rows() || F.cols() > A.cols()) return std::nullopt;
  bool rows_increasing = mode != Mode::CONFIGURATION;
  bool cols_increasing = mode == Mode::SUBMATRIX;
  std::optional<ConfigWitness> result;
  std::vector<unsigned> rmap;
  enum_injections(F.rows(), A.rows(), rows_increasing, rmap, [&]() {
    std::vector<unsigned> cmap;
    return enum_injections(F.cols(), A.cols(), cols_increasing, cmap, [&]() {
      if (!entries_match(F, A, rmap, cmap)) return false;
      ConfigWitness w;
      w.mode = mode;
      w.row_map = rmap;
      w.col_map = cmap;
      result = std::move(w);
      return true;
    });
  });
  return result;
}

bool verify_witness(const AlphMatrix& F, const AlphMatrix& A,
                    const ConfigWitness& w) {
  if (w.row_map.size() != F.rows() || w.col_map.size() != F.cols())
    return false;
  for (unsigned v : w.row_map)
    if (v >= A.rows()) return false;
  for (unsigned v : w.col_map)
    if (v >= A.cols()) return false;
  auto injective = [](const std::vector<unsigned>& m) {
    std::vector<unsigned> s = m;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
  };
  auto increasing = [](const std::vector<unsigned>& m) {
    return std::is_sorted(m.begin(), m.end()) &&
           std::adjacent_find(m.begin(), m.end()) == m.end();
  };
  if (!injective(w.row_map) || !injective(w.col_map)) return false;
  if (w.mode != Mode::CONFIGURATION && !increasing(w.row_map)) return false;
  if (w.mode == Mode::SUBMATRIX && !increasing(w.col_map)) return false;
  return entries_match(F, A, w.row_map, w.col_map);
}

}  // namespace confex
