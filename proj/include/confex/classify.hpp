#ifndef CONFEX_CLASSIFY_HPP
#define CONFEX_CLASSIFY_HPP

#include <vector>

#include "confex/matrix.hpp"
#include "confex/patterns.hpp"

namespace confex {

enum class StructureKind { IDENTITY, TRIANGULAR };

/// CONSTANT coverage entry for one ordered pair (i,j): the member
/// contained in I_D(i,j), and the member contained in T_D in one of the
/// pair's two orientations (either suffices, by the triangular nesting).
struct PairCoverage {
  Symbol i = 0;
  Symbol j = 0;
  unsigned identity_member = 0;
  unsigned triangular_member = 0;
  Symbol tri_a = 0;  // covered orientation T_D(tri_a, tri_b)
  Symbol tri_b = 0;
};

/// Growth-dichotomy verdict. LINEAR carries a certificate (i,j,kind)
/// such that no family member is contained in the D-sized structure,
/// hence the construction K_m(i,j) avoids the family for every m >= D.
struct GrowthClass {
  enum class Verdict { CONSTANT, LINEAR };
  Verdict verdict = Verdict::CONSTANT;
  unsigned D = 0;
  std::vector<PairCoverage> coverage;  // CONSTANT only
  Symbol cert_i = 0;                   // LINEAR only
  Symbol cert_j = 0;
  StructureKind cert_kind = StructureKind::IDENTITY;
};

/// Decide the dichotomy with D = max over members of rows + columns.
/// CONSTANT requires coverage of both the identity and the triangular
/// structure for every pair; a single uncovered structure certifies a
/// linear lower bound.
GrowthClass classify_family(const ForbiddenFamily& family);

/// Same verdict computed at an inflated D (stability checks).
GrowthClass classify_family_at(const ForbiddenFamily& family, unsigned D);

}  // namespace confex

#endif
