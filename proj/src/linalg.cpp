#include "cmwild/linalg.hpp"

#include <sstream>

#include "cmwild/error.hpp"

namespace cmwild {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw InputError("matrix data size mismatch");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const PrimeField& f, const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(rows[i][j]);
  }
  return m;
}

bool Matrix::is_zero() const noexcept {
  for (auto v : data_)
    if (v != 0) return false;
  return true;
}

std::vector<std::vector<std::int64_t>> Matrix::to_rows(const PrimeField& f, bool symmetric) const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out[i][j] = symmetric ? f.to_signed((*this)(i, j)) : (*this)(i, j);
  return out;
}

std::string Matrix::to_string(const PrimeField& f) const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? "," : "") << f.to_signed((*this)(i, j));
    out << ']';
  }
  out << ']';
  return out.str();
}

Matrix mat_mul(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product dimension mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
    }
  return c;
}

Matrix mat_add(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix sum dimension mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.add(a(i, j), b(i, j));
  return c;
}

Matrix mat_sub(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix difference dimension mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.sub(a(i, j), b(i, j));
  return c;
}

Matrix mat_scale(const PrimeField& f, const Matrix& a, PrimeField::Elem s) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.mul(a(i, j), s);
  return c;
}

Matrix mat_pow(const PrimeField& f, const Matrix& a, std::uint64_t e) {
  Matrix result = Matrix::identity(a.rows());
  Matrix base = a;
  while (e > 0) {
    if (e & 1) result = mat_mul(f, result, base);
    e >>= 1;
    if (e) base = mat_mul(f, base, base);
  }
  return result;
}

PrimeField::Elem trace(const PrimeField& f, const Matrix& a) {
  PrimeField::Elem t = 0;
  for (std::size_t i = 0; i < a.rows() && i < a.cols(); ++i) t = f.add(t, a(i, i));
  return t;
}

std::vector<std::size_t> rref(const PrimeField& f, Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    auto inv = f.inv(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = f.mul(a(r, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      auto factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const PrimeField& f, Matrix a) { return rref(f, a).size(); }

PrimeField::Elem determinant(const PrimeField& f, Matrix a) {
  if (!a.square()) throw InputError("determinant of a non-square matrix");
  PrimeField::Elem det = 1;
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, a(c, c));
    auto inv = f.inv(a(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      auto factor = f.mul(a(i, c), inv);
      for (std::size_t j = c; j < n; ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(c, j)));
    }
  }
  return det;
}

std::optional<Matrix> inverse(const PrimeField& f, const Matrix& a) {
  if (!a.square()) return std::nullopt;
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(f, aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<std::vector<PrimeField::Elem>> nullspace(const PrimeField& f, const Matrix& a) {
  Matrix r = a;
  auto pivots = rref(f, r);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<PrimeField::Elem>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<PrimeField::Elem> v(a.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<PrimeField::Elem> EchelonBasis::reduce(std::vector<PrimeField::Elem> v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    auto c = v[pivots_[k]];
    if (c == 0) continue;
    const auto& row = rows_[k];
    for (std::size_t j = pivots_[k]; j < dim_; ++j)
      if (row[j] != 0) v[j] = field_.sub(v[j], field_.mul(c, row[j]));
  }
  return v;
}

bool EchelonBasis::insert(std::vector<PrimeField::Elem> v) {
  if (v.size() != dim_) throw InputError("vector length mismatch in echelon basis");
  v = reduce(std::move(v));
  std::size_t piv = 0;
  while (piv < dim_ && v[piv] == 0) ++piv;
  if (piv == dim_) return false;
  auto inv = field_.inv(v[piv]);
  for (std::size_t j = piv; j < dim_; ++j) v[j] = field_.mul(v[j], inv);
  // keep earlier rows reduced at the new pivot so reduce() stays one pass
  for (auto& row : rows_) {
    auto c = row[piv];
    if (c == 0) continue;
    for (std::size_t j = piv; j < dim_; ++j)
      if (v[j] != 0) row[j] = field_.sub(row[j], field_.mul(c, v[j]));
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

bool EchelonBasis::contains(const std::vector<PrimeField::Elem>& v) const {
  auto r = reduce(v);
  for (auto x : r)
    if (x != 0) return false;
  return true;
}

}  // namespace cmwild
