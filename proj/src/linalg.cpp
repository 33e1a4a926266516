#include "powerag/linalg.hpp"

namespace powerag {

Matrix::Matrix(std::shared_ptr<const Field> field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw Error("matrix: negative dimension");
  e_.assign(std::size_t(rows) * cols, 0);
}

Matrix Matrix::identity(std::shared_ptr<const Field> field, int n) {
  Matrix m(std::move(field), n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void row_addmul(const Field& f, std::uint16_t* dst, const std::uint16_t* src,
                std::uint16_t c, int len) {
  if (c == 0) return;
  const std::uint16_t* mrow = f.mul_row(c);
  if (mrow == nullptr) {
    for (int j = 0; j < len; ++j) dst[j] = f.add(dst[j], f.mul(c, src[j]));
  } else if (f.p() == 2) {
    for (int j = 0; j < len; ++j) dst[j] ^= mrow[src[j]];
  } else {
    for (int j = 0; j < len; ++j) dst[j] = f.add_row(dst[j])[mrow[src[j]]];
  }
}

RrefResult rref(const Matrix& a) {
  Matrix m = a;
  const Field& f = m.field();
  const int rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = c; j < cols; ++j) std::swap(m(pr, j), m(r, j));
    std::uint16_t pinv = f.inv(m(r, c));
    if (pinv != 1)
      for (int j = c; j < cols; ++j) m(r, j) = f.mul(pinv, m(r, j));
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      std::uint16_t v = m(i, c);
      if (v == 0) continue;
      // row_i -= v * row_r; columns left of c are already reduced
      row_addmul(f, m.row(i) + c, m.row(r) + c, f.neg(v), cols - c);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), int(pivots.size()), std::move(pivots)};
}

int rank(const Matrix& a) { return rref(a).rank; }

Matrix right_kernel_basis(const Matrix& a) {
  RrefResult rr = rref(a);
  const Field& f = a.field();
  const int cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix k(a.field_ptr(), cols, int(free_cols.size()));
  for (int j = 0; j < int(free_cols.size()); ++j) {
    int fc = free_cols[j];
    k(fc, j) = 1;
    for (int t = 0; t < rr.rank; ++t) k(rr.pivot_cols[t], j) = f.neg(rr.reduced(t, fc));
  }
  return k;
}

std::optional<std::vector<std::uint16_t>> solve_any(const Matrix& a,
                                                    std::span<const std::uint16_t> b) {
  if (int(b.size()) != a.rows()) throw Error("solve: right-hand side length mismatch");
  Matrix aug(a.field_ptr(), a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  RrefResult rr = rref(aug);
  for (int c : rr.pivot_cols)
    if (c == a.cols()) return std::nullopt;  // pivot in the augmented column
  std::vector<std::uint16_t> x(a.cols(), 0);
  for (int t = 0; t < rr.rank; ++t) x[rr.pivot_cols[t]] = rr.reduced(t, a.cols());
  return x;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (!a.field().same(b.field())) throw Error("matmul: mismatched fields");
  if (a.cols() != b.rows()) throw Error("matmul: dimension mismatch");
  Matrix c(a.field_ptr(), a.rows(), b.cols());
  const Field& f = a.field();
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      std::uint16_t v = a(i, k);
      if (v != 0) row_addmul(f, c.row(i), b.row(k), v, b.cols());
    }
  return c;
}

std::vector<std::uint16_t> matvec(const Matrix& a, std::span<const std::uint16_t> x) {
  if (int(x.size()) != a.cols()) throw Error("matvec: dimension mismatch");
  const Field& f = a.field();
  std::vector<std::uint16_t> y(a.rows(), 0);
  for (int i = 0; i < a.rows(); ++i) {
    std::uint16_t acc = 0;
    const std::uint16_t* row = a.row(i);
    for (int j = 0; j < a.cols(); ++j) acc = f.add(acc, f.mul(row[j], x[j]));
    y[i] = acc;
  }
  return y;
}

}  // namespace powerag
