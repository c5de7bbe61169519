#include "confex/matrix.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace confex {

AlphMatrix::AlphMatrix(unsigned alphabet, unsigned rows,
                       std::vector<Column> columns)
    : alphabet_(alphabet), rows_(rows), columns_(std::move(columns)) {
  if (alphabet_ < 1) throw ArgumentError("AlphMatrix: alphabet must be >= 1");
  for (const Column& c : columns_) {
    if (c.size() != rows_)
      throw DimensionError("AlphMatrix: column length != rows");
    for (Symbol e : c)
      if (e >= alphabet_)
        throw ArgumentError("AlphMatrix: entry " + std::to_string(e) +
                            " >= alphabet " + std::to_string(alphabet_));
  }
}

AlphMatrix AlphMatrix::from_rows(
    unsigned alphabet, const std::vector<std::vector<unsigned>>& rows) {
  unsigned m = static_cast<unsigned>(rows.size());
  unsigned n = m == 0 ? 0 : static_cast<unsigned>(rows[0].size());
  for (const auto& r : rows)
    if (r.size() != n) throw DimensionError("from_rows: ragged rows");
  std::vector<Column> cols(n, Column(m));
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < n; ++j)
      cols[j][i] = static_cast<Symbol>(rows[i][j]);
  return AlphMatrix(alphabet, m, std::move(cols));
}

unsigned multiplicity(const AlphMatrix& M, const Column& col) {
  if (col.size() != M.rows())
    throw DimensionError("multiplicity: column length != rows");
  unsigned n = 0;
  for (const Column& c : M.columns())
    if (c == col) ++n;
  return n;
}

bool is_s_simple(const AlphMatrix& M, SimplicityBound b) {
  std::map<Column, unsigned> counts;
  for (const Column& c : M.columns())
    if (++counts[c] > b.s) return false;
  return true;
}

AlphMatrix concat(const AlphMatrix& M1, const AlphMatrix& M2) {
  if (M1.rows() != M2.rows())
    throw DimensionError("concat: row-count mismatch");
  std::vector<Column> cols = M1.columns();
  cols.insert(cols.end(), M2.columns().begin(), M2.columns().end());
  return AlphMatrix(std::max(M1.alphabet(), M2.alphabet()), M1.rows(),
                    std::move(cols));
}

AlphMatrix t_copies(unsigned t, const AlphMatrix& M) {
  if (t == 0) throw ArgumentError("t_copies: t must be >= 1");
  std::vector<Column> cols;
  cols.reserve(static_cast<std::size_t>(t) * M.cols());
  for (unsigned k = 0; k < t; ++k)
    cols.insert(cols.end(), M.columns().begin(), M.columns().end());
  return AlphMatrix(M.alphabet(), M.rows(), std::move(cols));
}

AlphMatrix support(const AlphMatrix& M) {
  std::vector<Column> cols = M.columns();
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  return AlphMatrix(M.alphabet(), M.rows(), std::move(cols));
}

AlphMatrix select_rows(const AlphMatrix& M,
                       const std::vector<unsigned>& rows) {
  std::vector<Column> cols(M.cols());
  for (unsigned j = 0; j < M.cols(); ++j) {
    cols[j].reserve(rows.size());
    for (unsigned i : rows) {
      if (i >= M.rows()) throw DimensionError("select_rows: row out of range");
      cols[j].push_back(M.at(i, j));
    }
  }
  return AlphMatrix(M.alphabet(), static_cast<unsigned>(rows.size()),
                    std::move(cols));
}

AlphMatrix select_cols(const AlphMatrix& M,
                       const std::vector<unsigned>& cols) {
  std::vector<Column> out;
  out.reserve(cols.size());
  for (unsigned j : cols) {
    if (j >= M.cols()) throw DimensionError("select_cols: col out of range");
    out.push_back(M.column(j));
  }
  return AlphMatrix(M.alphabet(), M.rows(), std::move(out));
}

namespace {

// Next non-comment, non-blank line.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos) continue;
    if (line[p] == '#') continue;
    return true;
  }
  return false;
}

std::vector<unsigned> parse_row(const std::string& line, unsigned cols,
                                unsigned alphabet) {
  std::vector<unsigned> out;
  std::istringstream iss(line);
  unsigned v;
  while (iss >> v) out.push_back(v);
  if (out.size() == cols) return out;
  // Compact variant: one contiguous digit string per row.
  if (out.size() == 1 && cols != 1 && alphabet <= 10) {
    std::string tok;
    std::istringstream again(line);
    again >> tok;
    if (tok.size() == cols &&
        std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      out.clear();
      for (char c : tok) out.push_back(static_cast<unsigned>(c - '0'));
      return out;
    }
  }
  throw ArgumentError("amat: bad row: " + line);
}

}  // namespace

AlphMatrix read_amat(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw ArgumentError("amat: empty input");
  std::istringstream head(line);
  std::string magic;
  unsigned rows, cols, alphabet;
  if (!(head >> magic >> rows >> cols >> alphabet) || magic != "amat")
    throw ArgumentError("amat: bad header: " + line);
  if (cols == 0) return AlphMatrix(alphabet, rows, {});
  std::vector<std::vector<unsigned>> data;
  for (unsigned i = 0; i < rows; ++i) {
    if (!next_line(in, line)) throw ArgumentError("amat: missing row");
    data.push_back(parse_row(line, cols, alphabet));
  }
  if (rows == 0) {
    return AlphMatrix(alphabet, 0, std::vector<Column>(cols));
  }
  return AlphMatrix::from_rows(alphabet, data);
}

AlphMatrix read_amat_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("amat: cannot open " + path);
  return read_amat(in);
}

void write_amat(std::ostream& out, const AlphMatrix& M) {
  out << "amat " << M.rows() << " " << M.cols() << " " << M.alphabet()
      << "\n";
  for (unsigned i = 0; i < M.rows(); ++i) {
    for (unsigned j = 0; j < M.cols(); ++j) {
      if (j) out << ' ';
      out << static_cast<unsigned>(M.at(i, j));
    }
    out << "\n";
  }
}

std::string to_amat_string(const AlphMatrix& M) {
  std::ostringstream oss;
  write_amat(oss, M);
  return oss.str();
}

}  // namespace confex
