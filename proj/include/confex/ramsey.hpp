#ifndef CONFEX_RAMSEY_HPP
#define CONFEX_RAMSEY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "confex/matrix.hpp"

namespace confex {

/// Exact arbitrary-precision count.
using BigCount = boost::multiprecision::cpp_int;

/// Multinomial upper bound on the multicolour Ramsey number
/// R(k_1,...,k_n): (sum (k_i - 1))! / prod (k_i - 1)!.
/// A single colour returns k_1 and any k_i = 1 returns 1 (the
/// multinomial form presumes at least two colours).
/// Computed as an iterative product of binomials.
BigCount ramsey_upper(const std::vector<unsigned>& ks);

/// Same value via the explicit factorial ratio; second evaluation path
/// used to cross-check ramsey_upper.
BigCount ramsey_upper_factorial(const std::vector<unsigned>& ks);

/// Argument list for u: r copies of (r-1)(ell-1)+1 and 2r(r-1) copies
/// of 2*ell.
std::vector<unsigned> u_arguments(unsigned ell, unsigned r);
BigCount u_value(unsigned ell, unsigned r);

/// (2r^2 - r)^{r(r-1)(5*ell-3)}; sits between u_value and u_closed.
BigCount u_mid(unsigned ell, unsigned r);

/// r^{15 r (r-1) ell}.
BigCount u_closed(unsigned ell, unsigned r);

/// T = r(r-1)(t-1) + 1.
unsigned T_value(unsigned r, unsigned t);

/// Argument list for v: r^T copies of (r-1)(ell-1)+1 and 2T r(r-1)
/// copies of 2 t ell.
std::vector<unsigned> v_arguments(unsigned ell, unsigned r, unsigned t);
BigCount v_value(unsigned ell, unsigned r, unsigned t);

/// 2r^2 - r.
unsigned colour_count_main(unsigned r);

/// r^T + r^2 T.
BigCount colour_count_t(unsigned r, unsigned T);

/// Edge colour classes of the square layouts. The w = 2 layout uses
/// DIAGONAL_CONSTANT / FIRST_COLUMN / SECOND_COLUMN; the w = 2T layout
/// uses CLASS_ALPHA (all-alpha blocks) and CLASS_ABI (column i of the
/// block equals b over a; i is 0-based).
struct EdgeColour {
  enum class Kind {
    DIAGONAL_CONSTANT,
    FIRST_COLUMN,
    SECOND_COLUMN,
    CLASS_ALPHA,
    CLASS_ABI,
  };
  Kind kind = Kind::DIAGONAL_CONSTANT;
  Symbol a = 0;
  Symbol b = 0;
  unsigned i = 0;
  Column alpha;

  friend auto operator<=>(const EdgeColour&, const EdgeColour&) = default;
};

std::string to_string(const EdgeColour& c);

/// The u x u "square" matrix whose entries are 1 x w row vectors
/// (w = 2 in the single-pattern layout, w = 2T in the t-fold layout).
/// Below-diagonal cells are doubled; diagonal cells have their first
/// half entrywise strictly below the second half.
struct SquareLayout {
  unsigned order = 0;
  unsigned width = 2;
  unsigned alphabet = 2;
  std::vector<std::vector<Column>> cells;  // cells[i][j], each of length width

  void validate() const;
};

struct EdgeColoring {
  unsigned vertex_count = 0;
  std::vector<std::vector<EdgeColour>> upper;  // upper[i][j-i-1] for i<j

  const EdgeColour& edge(unsigned i, unsigned j) const;
};

/// Colour every unordered edge {i<j} from the block formed by stacking
/// cell(i,j) over cell(j,i). Tie-breaking is fixed: FIRST_COLUMN beats
/// SECOND_COLUMN, CLASS_ALPHA is checked first, then the least
/// lexicographic (a,b,i).
EdgeColoring colour_edges(const SquareLayout& layout);

/// A clique of some colour meeting that colour's target size, or
/// absent. Branch-and-bound over per-colour candidate sets; returned
/// cliques are re-verified by edge inspection.
std::optional<std::pair<EdgeColour, std::vector<unsigned>>> find_mono_clique(
    const EdgeColoring& coloring,
    const std::vector<std::pair<EdgeColour, unsigned>>& targets);

/// Closed-form bounds for the constant growth regime plus the f(i)
/// recursion f(i) <= 2 u f(i+1) + r (r/2)^i evaluated exactly.
struct BoundReport {
  BigCount general;                    // r^{30 C(r,2)^2 ell^2}
  BigCount f0;                         // general recursion, ceiling
  std::optional<BigCount> r2_specialized;  // 6^{6(ell-1)ell}
  std::optional<BigCount> r2_family_bb;    // 6^{6 ell (ell+1)}
  std::optional<BigCount> f0_r2;  // r=2 recursion with f(ell-1) = 2 ell - 1
};

BoundReport bound_main(unsigned ell, unsigned r);

}  // namespace confex

#endif
