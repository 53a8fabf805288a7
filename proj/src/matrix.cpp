#include "matrix.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace rbclab {

Matrix::Matrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
  if (!field_) throw std::invalid_argument("matrix needs a field");
  if (rows < 0 || cols < 0)
    throw std::invalid_argument("matrix dimensions must be non-negative");
  a_.assign(static_cast<size_t>(rows) * cols, 0);
}

Matrix::Matrix(FieldPtr field, const std::vector<std::vector<int>>& row_data)
    : Matrix(std::move(field), static_cast<int>(row_data.size()),
             row_data.empty() ? 0 : static_cast<int>(row_data.front().size())) {
  for (int r = 0; r < rows_; ++r) {
    if (static_cast<int>(row_data[r].size()) != cols_)
      throw std::invalid_argument("ragged row data");
    for (int c = 0; c < cols_; ++c) set(r, c, row_data[r][c]);
  }
}

int Matrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index (" + std::to_string(r) + ", " +
                            std::to_string(c) + ") out of range");
  return a_[static_cast<size_t>(r) * cols_ + c];
}

void Matrix::set(int r, int c, int v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index out of range");
  if (!field_->valid(v))
    throw std::invalid_argument("entry " + std::to_string(v) +
                                " outside GF(" +
                                std::to_string(field_->order()) + ")");
  a_[static_cast<size_t>(r) * cols_ + c] = v;
}

std::vector<int> Matrix::row(int r) const {
  if (r < 0 || r >= rows_) throw std::out_of_range("row index out of range");
  return std::vector<int>(a_.begin() + static_cast<size_t>(r) * cols_,
                          a_.begin() + static_cast<size_t>(r + 1) * cols_);
}

std::vector<int> Matrix::col(int c) const {
  if (c < 0 || c >= cols_) throw std::out_of_range("column index out of range");
  std::vector<int> out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = a_[static_cast<size_t>(r) * cols_ + c];
  return out;
}

void validate_index_set(const std::vector<int>& set, int bound,
                        const char* what) {
  int prev = -1;
  for (int i : set) {
    if (i < 0 || i >= bound)
      throw std::out_of_range(std::string(what) + " index " +
                              std::to_string(i + 1) + " out of range [1, " +
                              std::to_string(bound) + "]");
    if (i <= prev)
      throw std::invalid_argument(std::string(what) +
                                  " must be strictly ascending");
    prev = i;
  }
}

Matrix Matrix::restricted(const std::vector<int>& row_idx,
                          const std::vector<int>& col_idx) const {
  validate_index_set(row_idx, rows_, "row set");
  validate_index_set(col_idx, cols_, "column set");
  Matrix out(field_, static_cast<int>(row_idx.size()),
             static_cast<int>(col_idx.size()));
  for (size_t r = 0; r < row_idx.size(); ++r)
    for (size_t c = 0; c < col_idx.size(); ++c)
      out.a_[r * col_idx.size() + c] =
          a_[static_cast<size_t>(row_idx[r]) * cols_ + col_idx[c]];
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(field_, cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      out.a_[static_cast<size_t>(c) * rows_ + r] =
          a_[static_cast<size_t>(r) * cols_ + c];
  return out;
}

int Matrix::rank() const {
  SpanBasis span(*field_, cols_);
  for (int r = 0; r < rows_; ++r) span.absorb(row(r));
  return span.rank();
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](int v) { return v == 0; });
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && *field_ == *o.field_ &&
         a_ == o.a_;
}

int SpanBasis::reduce(std::vector<int>& v) const {
  for (size_t b = 0; b < basis_.size(); ++b) {
    const int p = pivots_[b];
    const int c = v[p];
    if (c == 0) continue;
    const std::vector<int>& base = basis_[b];
    for (int t = 0; t < dim_; ++t)
      if (base[t] != 0) v[t] = field_->sub(v[t], field_->mul(c, base[t]));
  }
  for (int t = 0; t < dim_; ++t)
    if (v[t] != 0) return t;
  return -1;
}

bool SpanBasis::absorb(std::vector<int> v) {
  if (static_cast<int>(v.size()) != dim_)
    throw std::invalid_argument("vector dimension mismatch");
  const int pivot = reduce(v);
  if (pivot < 0) return false;
  const int scale = field_->inv(v[pivot]);
  for (int t = 0; t < dim_; ++t) v[t] = field_->mul(v[t], scale);
  // Keep the basis fully reduced: clear the new pivot column everywhere.
  for (size_t b = 0; b < basis_.size(); ++b) {
    const int c = basis_[b][pivot];
    if (c == 0) continue;
    for (int t = 0; t < dim_; ++t)
      if (v[t] != 0)
        basis_[b][t] = field_->sub(basis_[b][t], field_->mul(c, v[t]));
  }
  basis_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool SpanBasis::contains(std::vector<int> v) const {
  if (static_cast<int>(v.size()) != dim_)
    throw std::invalid_argument("vector dimension mismatch");
  return reduce(v) < 0;
}

bool in_colspace(const Matrix& m, const std::vector<int>& v) {
  if (static_cast<int>(v.size()) != m.rows())
    throw std::invalid_argument("vector length " + std::to_string(v.size()) +
                                " does not match matrix rows " +
                                std::to_string(m.rows()));
  for (int x : v)
    if (!m.field()->valid(x))
      throw std::invalid_argument("vector entry outside the field");
  SpanBasis span(*m.field(), m.rows());
  for (int c = 0; c < m.cols(); ++c) span.absorb(m.col(c));
  return span.contains(v);
}

namespace {

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string w;
    while (words >> w) tokens.push_back(w);
  }
  return tokens;
}

int parse_int(const std::string& tok, const char* what) {
  try {
    size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw parse_error(std::string("expected an integer for ") + what +
                      ", got '" + tok + "'");
  }
}

}  // namespace

Matrix parse_matrix(const std::string& text) {
  const std::vector<std::string> tok = tokenize(text);
  size_t pos = 0;
  auto next = [&](const char* what) -> const std::string& {
    if (pos >= tok.size())
      throw parse_error(std::string("unexpected end of input, expected ") +
                        what);
    return tok[pos++];
  };

  const int q = parse_int(next("field order q"), "field order q");
  const int k = parse_int(next("row count k"), "row count k");
  const int n = parse_int(next("column count n"), "column count n");
  if (k < 0 || n < 0) throw parse_error("matrix dimensions must be >= 0");

  int p = 0, e = 0;
  try {
    std::tie(p, e) = factor_prime_power(q);
  } catch (const std::invalid_argument& ex) {
    throw parse_error(ex.what());
  }

  std::vector<int> poly;
  if (pos < tok.size() && tok[pos] == "poly") {
    ++pos;
    for (int i = 0; i <= e; ++i)
      poly.push_back(parse_int(next("polynomial coefficient"),
                               "polynomial coefficient"));
  }

  FieldPtr field;
  try {
    field = poly.empty() ? Field::of_order(q) : Field::make(p, e, poly);
  } catch (const std::invalid_argument& ex) {
    throw parse_error(ex.what());
  }

  Matrix m(field, k, n);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < n; ++c) {
      const int v = parse_int(next("matrix entry"), "matrix entry");
      try {
        m.set(r, c, v);
      } catch (const std::invalid_argument& ex) {
        throw parse_error(ex.what());
      }
    }
  if (pos != tok.size())
    throw parse_error("trailing content after " + std::to_string(k) + "x" +
                      std::to_string(n) + " matrix");
  return m;
}

std::string format_matrix(const Matrix& m) {
  std::ostringstream out;
  const Field& f = *m.field();
  out << f.order() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  if (f.degree() > 1) {
    out << "poly";
    for (int c : f.reduction_poly()) out << ' ' << c;
    out << '\n';
  }
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << m.at(r, c);
    }
    out << '\n';
  }
  return out.str();
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

void write_matrix_file(const Matrix& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open '" + path + "' for writing");
  out << format_matrix(m);
  if (!out) throw io_error("write to '" + path + "' failed");
}

}  // namespace rbclab
