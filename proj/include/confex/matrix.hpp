#ifndef CONFEX_MATRIX_HPP
#define CONFEX_MATRIX_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace confex {

/// A colour in {0, ..., r-1}.
using Symbol = std::uint8_t;

/// One column of an r-matrix, stored top row first. Lexicographic
/// comparison of the digit vector coincides with comparing the column
/// as a base-r numeral (most significant digit at row 0), which is the
/// canonical column order used throughout.
using Column = std::vector<Symbol>;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Column multiplicity bound; s = 1 means simple.
struct SimplicityBound {
  unsigned s = 1;
  explicit SimplicityBound(unsigned s_) : s(s_) {
    if (s == 0) throw ArgumentError("SimplicityBound: s must be >= 1");
  }
};

/// An m x n matrix over alphabet {0,...,r-1} with column-multiset
/// semantics. Immutable after construction; entries are validated
/// eagerly so every later operation may assume validity.
///
/// Zero-row matrices are legal degenerate inputs (any number of empty
/// columns).
class AlphMatrix {
 public:
  AlphMatrix(unsigned alphabet, unsigned rows, std::vector<Column> columns);

  /// Matrix with no columns.
  static AlphMatrix empty(unsigned alphabet, unsigned rows) {
    return AlphMatrix(alphabet, rows, {});
  }

  /// Build from row-major data (rows x cols).
  static AlphMatrix from_rows(unsigned alphabet,
                              const std::vector<std::vector<unsigned>>& rows);

  unsigned alphabet() const { return alphabet_; }
  unsigned rows() const { return rows_; }
  unsigned cols() const { return static_cast<unsigned>(columns_.size()); }

  Symbol at(unsigned row, unsigned col) const { return columns_[col][row]; }
  const Column& column(unsigned col) const { return columns_[col]; }
  const std::vector<Column>& columns() const { return columns_; }

  bool operator==(const AlphMatrix& other) const {
    return alphabet_ == other.alphabet_ && rows_ == other.rows_ &&
           columns_ == other.columns_;
  }

 private:
  unsigned alphabet_;
  unsigned rows_;
  std::vector<Column> columns_;
};

/// Number of columns of M equal to col, entrywise.
unsigned multiplicity(const AlphMatrix& M, const Column& col);

/// True iff every column multiplicity is <= b.s. With s = 1 this is
/// plain simplicity (no repeated columns).
bool is_s_simple(const AlphMatrix& M, SimplicityBound b);

/// Columns of M1 followed by columns of M2. Unequal alphabets take the
/// larger one.
AlphMatrix concat(const AlphMatrix& M1, const AlphMatrix& M2);

/// t . M = [M|M|...|M], t copies.
AlphMatrix t_copies(unsigned t, const AlphMatrix& M);

/// The simple matrix of distinct columns of M, in canonical column
/// order.
AlphMatrix support(const AlphMatrix& M);

/// M restricted to the given rows (in the given order).
AlphMatrix select_rows(const AlphMatrix& M, const std::vector<unsigned>& rows);

/// M restricted to the given columns (in the given order).
AlphMatrix select_cols(const AlphMatrix& M, const std::vector<unsigned>& cols);

// .amat text format.
//   amat <rows> <cols> <alphabet>
// then <rows> lines of <cols> space-separated entries. Lines starting
// with '#' are comments. Readers also accept rows written as contiguous
// digit strings when alphabet <= 10; writers emit the spaced form.
AlphMatrix read_amat(std::istream& in);
AlphMatrix read_amat_file(const std::string& path);
void write_amat(std::ostream& out, const AlphMatrix& M);
std::string to_amat_string(const AlphMatrix& M);

}  // namespace confex

#endif
