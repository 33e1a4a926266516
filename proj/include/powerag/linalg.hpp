#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "powerag/field.hpp"

namespace powerag {

// Dense row-major matrix over a single field. Entries are raw encodings; the
// shared field pointer guarantees they all live in the same GF(p^m).
class Matrix {
 public:
  Matrix() = default;  // empty placeholder, 0 x 0 with no field
  Matrix(std::shared_ptr<const Field> field, int rows, int cols);
  static Matrix identity(std::shared_ptr<const Field> field, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }

  std::uint16_t operator()(int r, int c) const { return e_[std::size_t(r) * cols_ + c]; }
  std::uint16_t& operator()(int r, int c) { return e_[std::size_t(r) * cols_ + c]; }
  std::uint16_t* row(int r) { return e_.data() + std::size_t(r) * cols_; }
  const std::uint16_t* row(int r) const { return e_.data() + std::size_t(r) * cols_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_->same(*b.field_) &&
           a.e_ == b.e_;
  }

 private:
  std::shared_ptr<const Field> field_;
  int rows_ = 0, cols_ = 0;
  std::vector<std::uint16_t> e_;
};

struct RrefResult {
  Matrix reduced;
  int rank;
  std::vector<int> pivot_cols;
};

// Reduced row echelon form; pivots are the first nonzero entry scanned
// top-to-bottom in each column, so the result is canonical.
RrefResult rref(const Matrix& a);

int rank(const Matrix& a);

// Columns form the canonical kernel basis: one vector per rref free column,
// in ascending free-column order, with a 1 in the free position.
Matrix right_kernel_basis(const Matrix& a);

// One solution of a x = b with every free variable set to zero, or nullopt
// when the system is inconsistent.
std::optional<std::vector<std::uint16_t>> solve_any(const Matrix& a,
                                                    std::span<const std::uint16_t> b);

Matrix matmul(const Matrix& a, const Matrix& b);
std::vector<std::uint16_t> matvec(const Matrix& a, std::span<const std::uint16_t> x);

// dst += c * src over the matrix field, the elimination inner loop.
void row_addmul(const Field& f, std::uint16_t* dst, const std::uint16_t* src,
                std::uint16_t c, int len);

}  // namespace powerag
