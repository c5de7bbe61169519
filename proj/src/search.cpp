#include "confex/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace confex {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<Column> all_columns(unsigned m, unsigned r) {
  std::vector<Column> out;
  Column cur(m, 0);
  while (true) {
    out.push_back(cur);
    unsigned i = m;
    while (i > 0) {
      --i;
      if (cur[i] + 1u < r) {
        ++cur[i];
        std::fill(cur.begin() + i + 1, cur.end(), Symbol{0});
        break;
      }
      if (i == 0) return out;
    }
    if (m == 0) return out;
  }
}

struct ForbSearcher {
  unsigned m, r, s;
  std::vector<AlphMatrix> patterns;  // realized, embeddable members only
  SearchCaps caps;
  Clock::time_point start;

  std::vector<Column> candidates;
  std::vector<Column> current;
  std::uint64_t best = 0;
  std::vector<Column> best_cols;
  std::uint64_t nodes = 0;
  bool complete = true;

  bool capped() {
    if (caps.max_nodes && nodes >= caps.max_nodes) return true;
    if (caps.timeout_seconds > 0 && (nodes & 0xff) == 0) {
      double dt = std::chrono::duration<double>(Clock::now() - start).count();
      if (dt > caps.timeout_seconds) return true;
    }
    return false;
  }

  // Appending candidates[idx] keeps avoidance: the prefix already
  // avoids, so only witnesses using the new last column can appear.
  bool append_ok(unsigned idx) {
    std::vector<Column> cols = current;
    cols.push_back(candidates[idx]);
    AlphMatrix A(r, m, std::move(cols));
    unsigned last = A.cols() - 1;
    for (const AlphMatrix& F : patterns)
      if (contains_using_column(F, A, Mode::CONFIGURATION, last))
        return false;
    return true;
  }

  void dfs(unsigned min_idx, unsigned used_of_min) {
    ++nodes;
    if (capped()) {
      complete = false;
      return;
    }
    if (current.size() > best) {
      best = current.size();
      best_cols = current;
    }
    // Feasible extensions and their remaining budgets.
    std::vector<unsigned> feas;
    std::uint64_t budget_sum = 0;
    for (unsigned idx = min_idx; idx < candidates.size(); ++idx) {
      unsigned budget = s - (idx == min_idx ? used_of_min : 0);
      if (budget == 0) continue;
      if (!append_ok(idx)) continue;
      feas.push_back(idx);
      budget_sum += budget;
    }
    if (current.size() + budget_sum <= best) return;
    for (unsigned idx : feas) {
      if (!complete) return;
      current.push_back(candidates[idx]);
      unsigned used = idx == min_idx ? used_of_min + 1 : 1;
      // A column at its multiplicity cap advances the frontier.
      if (used >= s)
        dfs(idx + 1, 0);
      else
        dfs(idx, used);
      current.pop_back();
    }
  }
};

}  // namespace

SearchReport forb_exact(unsigned m, unsigned r, const ForbiddenFamily& family,
                        SimplicityBound s, const SearchCaps& caps) {
  if (r < 1) throw ArgumentError("forb_exact: r must be >= 1");
  SearchReport rep;
  rep.m = m;
  rep.r = r;
  rep.s = s.s;
  rep.family = family;

  if (family.members.empty()) {
    // Every s-simple matrix avoids: the maximum is s columns per
    // distinct column, s * r^m total.
    double bits = m * std::log2(static_cast<double>(r));
    if (bits > 40)
      throw ArgumentError("forb_exact: empty family at infeasible scale");
    std::uint64_t total = 1;
    for (unsigned i = 0; i < m; ++i) total *= r;
    rep.value = static_cast<std::uint64_t>(s.s) * total;
    if (rep.value <= (1u << 20)) {
      std::vector<Column> cols;
      for (const Column& c : all_columns(m, r))
        for (unsigned k = 0; k < s.s; ++k) cols.push_back(c);
      rep.witness = AlphMatrix(r, m, std::move(cols));
    }
    rep.complete = true;
    return rep;
  }

  ForbSearcher fs;
  fs.m = m;
  fs.r = r;
  fs.s = s.s;
  fs.caps = caps;
  fs.start = Clock::now();
  for (const PatternSpec& spec : family.members) {
    AlphMatrix F = realize(spec);
    if (F.rows() <= m) fs.patterns.push_back(std::move(F));
  }
  fs.candidates = all_columns(m, r);
  fs.dfs(0, 0);

  rep.value = fs.best;
  rep.witness = AlphMatrix(r, m, std::move(fs.best_cols));
  rep.nodes_explored = fs.nodes;
  rep.complete = fs.complete;
  return rep;
}

SearchReport forbmax_exact(unsigned m, unsigned r,
                           const ForbiddenFamily& family, SimplicityBound s,
                           const SearchCaps& caps) {
  SearchReport best;
  bool have = false;
  std::uint64_t nodes = 0;
  bool complete = true;
  for (unsigned mp = 0; mp <= m; ++mp) {
    SearchReport rep = forb_exact(mp, r, family, s, caps);
    nodes += rep.nodes_explored;
    complete = complete && rep.complete;
    if (!have || rep.value > best.value) {
      best = std::move(rep);
      have = true;
    }
  }
  best.m = m;
  best.nodes_explored = nodes;
  best.complete = complete;
  return best;
}

}  // namespace confex
