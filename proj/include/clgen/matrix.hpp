#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clgen/gf.hpp"

namespace clgen {

// Dense matrix over a finite field, row-major codes.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field* f, size_t rows, size_t cols);
  Matrix(const Field* f, size_t rows, size_t cols, std::vector<code_t> codes);

  static Matrix identity(const Field* f, size_t n);
  static Matrix scalar(const GF& c, size_t n);
  static Matrix from_rows(const std::vector<std::vector<GF>>& rows);
  static Matrix from_ints(const Field* f, const std::vector<std::vector<int64_t>>& rows);

  const Field& field() const { return *f_; }
  const Field* field_ptr() const { return f_; }
  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }

  code_t raw(size_t i, size_t j) const { return a_[i * c_ + j]; }
  code_t& raw(size_t i, size_t j) { return a_[i * c_ + j]; }
  const std::vector<code_t>& codes() const { return a_; }
  GF at(size_t i, size_t j) const { return GF(f_, raw(i, j)); }
  void set(size_t i, size_t j, const GF& v);

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scale(const GF& c) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool operator<(const Matrix& o) const { return a_ < o.a_; }

  Matrix transpose() const;
  Matrix inverse() const;
  Matrix pow(int64_t e) const;
  GF det() const;
  GF trace() const;
  size_t rank() const;
  // Basis of the right null space {v : M v = 0}, one vector per row.
  Matrix nullspace() const;
  // Reduced row echelon form; pivots receives the pivot column of each row.
  Matrix rref(std::vector<size_t>* pivots = nullptr) const;
  // Scalar value c if the matrix equals c*I.
  std::optional<GF> scalar_value() const;
  bool is_identity() const;
  // Entrywise Frobenius x -> x^(p^i).
  Matrix frob(int64_t i) const;
  Matrix embed(const Field& big) const;
  // Entrywise preimage in a subfield, if every entry lies in it.
  std::optional<Matrix> restrict_to(const Field& small) const;
  Matrix row(size_t i) const;
  Matrix col(size_t j) const;
  // Stack rows of o below this matrix.
  Matrix vstack(const Matrix& o) const;
  Matrix hstack(const Matrix& o) const;

  std::vector<std::vector<std::string>> str_rows() const;
  std::string str() const;

 private:
  void same_shape_field(const Matrix& o) const;

  const Field* f_ = nullptr;
  size_t r_ = 0, c_ = 0;
  std::vector<code_t> a_;
};

}  // namespace clgen
