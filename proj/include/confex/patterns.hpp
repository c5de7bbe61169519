#ifndef CONFEX_PATTERNS_HPP
#define CONFEX_PATTERNS_HPP

#include <optional>
#include <string>
#include <vector>

#include "confex/matrix.hpp"

namespace confex {

enum class PatternKind {
  IDENTITY,
  TRIANGULAR,
  IDENTITY_REVERSED,
  TRIANGULAR_REVERSED,
  LITERAL,
};

std::string to_string(PatternKind k);

/// Symbolic description of one forbidden pattern: an I/T generator (or a
/// literal matrix) with a t-multiplier. Patterns carry no alphabet of
/// their own; they adopt the alphabet of whatever they are checked
/// against.
struct PatternSpec {
  PatternKind kind = PatternKind::IDENTITY;
  unsigned ell = 1;
  Symbol a = 1;
  Symbol b = 0;
  std::optional<AlphMatrix> literal;  // only for LITERAL
  unsigned t = 1;

  static PatternSpec generator(PatternKind kind, unsigned ell, Symbol a,
                               Symbol b, unsigned t = 1);
  static PatternSpec literal_of(AlphMatrix M, unsigned t = 1);
};

struct ForbiddenFamily {
  std::vector<PatternSpec> members;
  unsigned alphabet = 2;
};

/// ell x ell matrix with a on the diagonal and b elsewhere.
AlphMatrix identity_pattern(unsigned ell, Symbol a, Symbol b);

/// ell x ell matrix with a strictly below the diagonal and b elsewhere.
AlphMatrix triangular_pattern(unsigned ell, Symbol a, Symbol b);

/// Columns in reverse order.
AlphMatrix reverse_columns(const AlphMatrix& M);

/// All I_ell(a,b) and T_ell(a,b) over ordered pairs a != b < r; size
/// 2 r (r-1). Pairs enumerated lexicographically.
ForbiddenFamily family_T(unsigned ell, unsigned r);

/// All I_ell(a,b) over ordered pairs plus T_ell(a,b) for a < b only;
/// size 3 C(r,2).
ForbiddenFamily family_T_prime(unsigned ell, unsigned r);

/// The concrete matrix: generator output (or literal), then t copies.
AlphMatrix realize(const PatternSpec& spec);

/// Pattern mini-language:
///   I(ell;a,b)  T(ell;a,b)  IR(ell;a,b)  TR(ell;a,b)  @path.amat
/// with optional multiplier prefix "t*", e.g. "2*I(2;1,0)".
/// Whitespace-insensitive, kind names case-insensitive.
PatternSpec parse_pattern(const std::string& text);

/// A full family expression: a single pattern, or Tfam(ell,r) /
/// Tprime(ell,r) expanding to the whole family (multiplier prefix
/// applies to every member).
std::vector<PatternSpec> parse_pattern_list(const std::string& text);

std::string pattern_to_string(const PatternSpec& spec);

}  // namespace confex

#endif
