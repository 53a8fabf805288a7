#pragma once

#include <string>
#include <vector>

#include "field.hpp"

namespace rbclab {

// Dense row-major matrix over a shared field. Zero rows or columns are
// allowed. Indices are 0-based internally; the text format and all rendered
// reports are 1-based.
class Matrix {
 public:
  Matrix(FieldPtr field, int rows, int cols);  // zero matrix
  Matrix(FieldPtr field, const std::vector<std::vector<int>>& row_data);

  const FieldPtr& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int at(int r, int c) const;
  void set(int r, int c, int v);

  std::vector<int> row(int r) const;
  std::vector<int> col(int c) const;

  // Submatrix on the given ascending 0-based index sets, preserving index
  // order. Empty sets give empty dimensions.
  Matrix restricted(const std::vector<int>& row_idx,
                    const std::vector<int>& col_idx) const;

  Matrix transposed() const;

  // Row rank by exact Gaussian elimination.
  int rank() const;

  bool is_zero() const;

  bool operator==(const Matrix& o) const;

 private:
  FieldPtr field_;
  int rows_ = 0, cols_ = 0;
  std::vector<int> a_;
};

// True when v (length = m.rows()) is a field-linear combination of the
// columns of m; the zero vector is always in the column space.
bool in_colspace(const Matrix& m, const std::vector<int>& v);

// Incrementally maintained reduced echelon basis of a subspace of F^dim.
// absorb() adds a vector and reports whether it enlarged the span;
// contains() tests membership without modifying the basis.
class SpanBasis {
 public:
  SpanBasis(const Field& field, int dim) : field_(&field), dim_(dim) {}

  bool absorb(std::vector<int> v);
  bool contains(std::vector<int> v) const;
  int rank() const { return static_cast<int>(basis_.size()); }

 private:
  // Reduces v against the basis; returns the pivot of the residue or -1.
  int reduce(std::vector<int>& v) const;

  const Field* field_;
  int dim_;
  std::vector<std::vector<int>> basis_;  // pivot entry normalized to 1
  std::vector<int> pivots_;
};

// Validates that `set` is strictly ascending with entries in [0, bound);
// `what` names the set in error messages.
void validate_index_set(const std::vector<int>& set, int bound,
                        const char* what);

// Matrix text format:
//
//   # comment lines start with '#'
//   q k n
//   poly c_e ... c_0      (extension fields only; optional, the default
//                          reduction polynomial is used when absent)
//   k rows of n space-separated integer encodings
//
// Whitespace is free-form; '#' comments run to end of line.
Matrix parse_matrix(const std::string& text);
Matrix read_matrix_file(const std::string& path);
std::string format_matrix(const Matrix& m);
void write_matrix_file(const Matrix& m, const std::string& path);

}  // namespace rbclab
