#include "confex/classify.hpp"

#include <algorithm>

#include "confex/containment.hpp"

namespace confex {

namespace {

GrowthClass classify_impl(const ForbiddenFamily& family, unsigned D) {
  unsigned r = family.alphabet;
  if (r < 2) throw ArgumentError("classify_family: alphabet must be >= 2");
  if (family.members.empty())
    throw ArgumentError("classify_family: empty family");

  std::vector<AlphMatrix> realized;
  for (const PatternSpec& spec : family.members) {
    AlphMatrix F = realize(spec);
    if (F.alphabet() > r)
      throw ArgumentError("classify_family: member symbols exceed alphabet");
    realized.push_back(std::move(F));
  }

  GrowthClass out;
  out.D = D;

  // A member contained in the D-structure stays contained in every
  // larger one; an uncovered structure certifies the linear
  // construction.
  auto covering_member = [&](const AlphMatrix& structure) -> int {
    for (unsigned h = 0; h < realized.size(); ++h)
      if (contains(realized[h], structure, Mode::CONFIGURATION))
        return static_cast<int>(h);
    return -1;
  };

  struct TriCover {
    int member = -1;
    Symbol a = 0, b = 0;
  };

  std::vector<int> id_cover;         // per ordered pair, scan order
  std::vector<TriCover> tri_cover;   // per unordered pair
  for (Symbol i = 0; i < r; ++i)
    for (Symbol j = 0; j < r; ++j) {
      if (i == j) continue;
      int h = covering_member(identity_pattern(D, i, j));
      if (h < 0) {
        out.verdict = GrowthClass::Verdict::LINEAR;
        out.cert_i = i;
        out.cert_j = j;
        out.cert_kind = StructureKind::IDENTITY;
        return out;
      }
      id_cover.push_back(h);
    }
  for (Symbol i = 0; i < r; ++i)
    for (Symbol j = static_cast<Symbol>(i + 1); j < r; ++j) {
      TriCover tc;
      int h = covering_member(triangular_pattern(D, i, j));
      if (h >= 0) {
        tc = {h, i, j};
      } else {
        h = covering_member(triangular_pattern(D, j, i));
        if (h >= 0) tc = {h, j, i};
      }
      if (tc.member < 0) {
        out.verdict = GrowthClass::Verdict::LINEAR;
        out.cert_i = i;
        out.cert_j = j;
        out.cert_kind = StructureKind::TRIANGULAR;
        return out;
      }
      tri_cover.push_back(tc);
    }

  out.verdict = GrowthClass::Verdict::CONSTANT;
  unsigned idx = 0;
  for (Symbol i = 0; i < r; ++i)
    for (Symbol j = 0; j < r; ++j) {
      if (i == j) continue;
      PairCoverage pc;
      pc.i = i;
      pc.j = j;
      pc.identity_member = static_cast<unsigned>(id_cover[idx++]);
      Symbol lo = std::min(i, j), hi = std::max(i, j);
      unsigned uidx = 0, k = 0;
      for (Symbol x = 0; x < r; ++x)
        for (Symbol y = static_cast<Symbol>(x + 1); y < r; ++y, ++k)
          if (x == lo && y == hi) uidx = k;
      const TriCover& tc = tri_cover[uidx];
      pc.triangular_member = static_cast<unsigned>(tc.member);
      pc.tri_a = tc.a;
      pc.tri_b = tc.b;
      out.coverage.push_back(pc);
    }
  return out;
}

}  // namespace

GrowthClass classify_family(const ForbiddenFamily& family) {
  unsigned D = 0;
  for (const PatternSpec& spec : family.members) {
    AlphMatrix F = realize(spec);
    D = std::max(D, F.rows() + F.cols());
  }
  if (D == 0) throw ArgumentError("classify_family: empty family");
  return classify_impl(family, D);
}

GrowthClass classify_family_at(const ForbiddenFamily& family, unsigned D) {
  return classify_impl(family, D);
}

}  // namespace confex
