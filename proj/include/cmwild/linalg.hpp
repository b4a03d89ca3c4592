#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cmwild/field.hpp"

namespace cmwild {

/// Dense row-major matrix over a prime field.
class Matrix {
 public:
  using Elem = PrimeField::Elem;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Elem> data);

  static Matrix identity(std::size_t n);
  /// Reduces signed integer entries mod p.
  static Matrix from_rows(const PrimeField& f, const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Elem>& data() const noexcept { return data_; }
  bool is_zero() const noexcept;

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::vector<std::vector<std::int64_t>> to_rows(const PrimeField& f, bool symmetric = false) const;
  std::string to_string(const PrimeField& f) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> data_;
};

Matrix mat_mul(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix mat_add(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix mat_sub(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix mat_scale(const PrimeField& f, const Matrix& a, PrimeField::Elem c);
Matrix mat_pow(const PrimeField& f, const Matrix& a, std::uint64_t e);
PrimeField::Elem trace(const PrimeField& f, const Matrix& a);

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(const PrimeField& f, Matrix& a);
std::size_t rank(const PrimeField& f, Matrix a);
PrimeField::Elem determinant(const PrimeField& f, Matrix a);
std::optional<Matrix> inverse(const PrimeField& f, const Matrix& a);
/// Basis of {v : a v = 0}, one basis vector per returned entry.
std::vector<std::vector<PrimeField::Elem>> nullspace(const PrimeField& f, const Matrix& a);

/// Incrementally grown row-echelon basis of a subspace of k^dim.
class EchelonBasis {
 public:
  EchelonBasis(const PrimeField& f, std::size_t dim) : field_(f), dim_(dim) {}

  /// Reduces v against the basis; returns true and stores it if independent.
  bool insert(std::vector<PrimeField::Elem> v);
  /// Remainder of v after elimination against the stored rows.
  std::vector<PrimeField::Elem> reduce(std::vector<PrimeField::Elem> v) const;
  bool contains(const std::vector<PrimeField::Elem>& v) const;

  std::size_t size() const noexcept { return rows_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::vector<PrimeField::Elem>>& rows() const noexcept { return rows_; }

 private:
  PrimeField field_;
  std::size_t dim_;
  std::vector<std::vector<PrimeField::Elem>> rows_;  // normalized: pivot entry 1
  std::vector<std::size_t> pivots_;
};

}  // namespace cmwild
