#include "clgen/matrix.hpp"

#include <sstream>

namespace clgen {

Matrix::Matrix(const Field* f, size_t rows, size_t cols) : f_(f), r_(rows), c_(cols), a_(rows * cols, 0) {}

Matrix::Matrix(const Field* f, size_t rows, size_t cols, std::vector<code_t> codes)
    : f_(f), r_(rows), c_(cols), a_(std::move(codes))
{
  if (a_.size() != r_ * c_)
    throw Error(ErrorCode::InternalMismatch, "matrix data size mismatch");
}

Matrix Matrix::identity(const Field* f, size_t n)
{
  Matrix m(f, n, n);
  for (size_t i = 0; i < n; i++)
    m.raw(i, i) = 1;
  return m;
}

Matrix Matrix::scalar(const GF& c, size_t n)
{
  Matrix m(c.field_ptr(), n, n);
  for (size_t i = 0; i < n; i++)
    m.raw(i, i) = c.code();
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<GF>>& rows)
{
  if (rows.empty() || rows[0].empty())
    throw Error(ErrorCode::InternalMismatch, "empty matrix");
  const Field* f = rows[0][0].field_ptr();
  Matrix m(f, rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); i++) {
    if (rows[i].size() != m.c_)
      throw Error(ErrorCode::InternalMismatch, "ragged matrix rows");
    for (size_t j = 0; j < m.c_; j++)
      m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_ints(const Field* f, const std::vector<std::vector<int64_t>>& rows)
{
  Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < rows.size(); i++)
    for (size_t j = 0; j < m.c_; j++)
      m.raw(i, j) = f->from_int(rows[i][j]);
  return m;
}

void Matrix::set(size_t i, size_t j, const GF& v)
{
  if (v.field_ptr() != f_)
    throw Error(ErrorCode::FieldMismatch, "entry from another field");
  raw(i, j) = v.code();
}

void Matrix::same_shape_field(const Matrix& o) const
{
  if (f_ != o.f_)
    throw Error(ErrorCode::FieldMismatch, "matrices over different fields");
  if (r_ != o.r_ || c_ != o.c_)
    throw Error(ErrorCode::InternalMismatch, "matrix shape mismatch");
}

Matrix Matrix::operator*(const Matrix& o) const
{
  if (f_ != o.f_)
    throw Error(ErrorCode::FieldMismatch, "matrices over different fields");
  if (c_ != o.r_)
    throw Error(ErrorCode::InternalMismatch, "matrix shape mismatch in product");
  Matrix m(f_, r_, o.c_);
  for (size_t i = 0; i < r_; i++) {
    for (size_t k = 0; k < c_; k++) {
      code_t x = raw(i, k);
      if (x == 0)
        continue;
      for (size_t j = 0; j < o.c_; j++) {
        code_t y = o.raw(k, j);
        if (y != 0)
          m.raw(i, j) = f_->add(m.raw(i, j), f_->mul(x, y));
      }
    }
  }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const
{
  same_shape_field(o);
  Matrix m(*this);
  for (size_t i = 0; i < a_.size(); i++)
    m.a_[i] = f_->add(a_[i], o.a_[i]);
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const
{
  same_shape_field(o);
  Matrix m(*this);
  for (size_t i = 0; i < a_.size(); i++)
    m.a_[i] = f_->sub(a_[i], o.a_[i]);
  return m;
}

Matrix Matrix::operator-() const
{
  Matrix m(*this);
  for (auto& v : m.a_)
    v = f_->neg(v);
  return m;
}

Matrix Matrix::scale(const GF& c) const
{
  if (c.field_ptr() != f_)
    throw Error(ErrorCode::FieldMismatch, "scalar from another field");
  Matrix m(*this);
  for (auto& v : m.a_)
    v = f_->mul(v, c.code());
  return m;
}

bool Matrix::operator==(const Matrix& o) const
{
  return f_ == o.f_ && r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
}

Matrix Matrix::transpose() const
{
  Matrix m(f_, c_, r_);
  for (size_t i = 0; i < r_; i++)
    for (size_t j = 0; j < c_; j++)
      m.raw(j, i) = raw(i, j);
  return m;
}

Matrix Matrix::rref(std::vector<size_t>* pivots) const
{
  Matrix m(*this);
  std::vector<size_t> piv;
  size_t row = 0;
  for (size_t col = 0; col < c_ && row < r_; col++) {
    size_t sel = r_;
    for (size_t i = row; i < r_; i++) {
      if (m.raw(i, col) != 0) {
        sel = i;
        break;
      }
    }
    if (sel == r_)
      continue;
    if (sel != row) {
      for (size_t j = 0; j < c_; j++)
        std::swap(m.raw(sel, j), m.raw(row, j));
    }
    code_t inv = f_->inv(m.raw(row, col));
    for (size_t j = col; j < c_; j++)
      m.raw(row, j) = f_->mul(m.raw(row, j), inv);
    for (size_t i = 0; i < r_; i++) {
      if (i == row)
        continue;
      code_t factor = m.raw(i, col);
      if (factor == 0)
        continue;
      for (size_t j = col; j < c_; j++)
        m.raw(i, j) = f_->sub(m.raw(i, j), f_->mul(factor, m.raw(row, j)));
    }
    piv.push_back(col);
    row++;
  }
  if (pivots)
    *pivots = piv;
  return m;
}

size_t Matrix::rank() const
{
  std::vector<size_t> piv;
  rref(&piv);
  return piv.size();
}

Matrix Matrix::nullspace() const
{
  std::vector<size_t> piv;
  Matrix m = rref(&piv);
  std::vector<bool> is_pivot(c_, false);
  for (size_t p : piv)
    is_pivot[p] = true;
  std::vector<size_t> free;
  for (size_t j = 0; j < c_; j++)
    if (!is_pivot[j])
      free.push_back(j);
  Matrix basis(f_, free.size(), c_);
  for (size_t k = 0; k < free.size(); k++) {
    size_t fj = free[k];
    basis.raw(k, fj) = 1;
    for (size_t i = 0; i < piv.size(); i++)
      basis.raw(k, piv[i]) = f_->neg(m.raw(i, fj));
  }
  return basis;
}

Matrix Matrix::inverse() const
{
  if (!square())
    throw Error(ErrorCode::InternalMismatch, "inverse of a non-square matrix");
  Matrix aug = hstack(identity(f_, r_));
  std::vector<size_t> piv;
  Matrix red = aug.rref(&piv);
  if (piv.size() < r_ || piv[r_ - 1] >= r_)
    throw Error(ErrorCode::DivisionByZero, "singular matrix");
  Matrix inv(f_, r_, r_);
  for (size_t i = 0; i < r_; i++)
    for (size_t j = 0; j < r_; j++)
      inv.raw(i, j) = red.raw(i, r_ + j);
  return inv;
}

Matrix Matrix::pow(int64_t e) const
{
  Matrix base = e < 0 ? inverse() : *this;
  uint64_t n = e < 0 ? static_cast<uint64_t>(-e) : static_cast<uint64_t>(e);
  Matrix r = identity(f_, r_);
  while (n > 0) {
    if (n & 1)
      r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

GF Matrix::det() const
{
  if (!square())
    throw Error(ErrorCode::InternalMismatch, "determinant of a non-square matrix");
  Matrix m(*this);
  code_t d = 1;
  for (size_t col = 0; col < r_; col++) {
    size_t sel = r_;
    for (size_t i = col; i < r_; i++) {
      if (m.raw(i, col) != 0) {
        sel = i;
        break;
      }
    }
    if (sel == r_)
      return GF(f_, 0);
    if (sel != col) {
      for (size_t j = 0; j < c_; j++)
        std::swap(m.raw(sel, j), m.raw(col, j));
      d = f_->neg(d);
    }
    code_t piv = m.raw(col, col);
    d = f_->mul(d, piv);
    code_t inv = f_->inv(piv);
    for (size_t i = col + 1; i < r_; i++) {
      code_t factor = f_->mul(m.raw(i, col), inv);
      if (factor == 0)
        continue;
      for (size_t j = col; j < c_; j++)
        m.raw(i, j) = f_->sub(m.raw(i, j), f_->mul(factor, m.raw(col, j)));
    }
  }
  return GF(f_, d);
}

GF Matrix::trace() const
{
  code_t t = 0;
  for (size_t i = 0; i < std::min(r_, c_); i++)
    t = f_->add(t, raw(i, i));
  return GF(f_, t);
}

std::optional<GF> Matrix::scalar_value() const
{
  if (!square() || r_ == 0)
    return std::nullopt;
  code_t c = raw(0, 0);
  for (size_t i = 0; i < r_; i++)
    for (size_t j = 0; j < c_; j++)
      if (raw(i, j) != (i == j ? c : 0))
        return std::nullopt;
  return GF(f_, c);
}

bool Matrix::is_identity() const
{
  auto s = scalar_value();
  return s && s->is_one();
}

Matrix Matrix::frob(int64_t i) const
{
  Matrix m(*this);
  for (auto& v : m.a_)
    v = f_->frobenius(v, i);
  return m;
}

Matrix Matrix::embed(const Field& big) const
{
  Matrix m(&big, r_, c_);
  for (size_t k = 0; k < a_.size(); k++)
    m.a_[k] = f_->embed(a_[k], big);
  return m;
}

std::optional<Matrix> Matrix::restrict_to(const Field& small) const
{
  Matrix m(&small, r_, c_);
  for (size_t k = 0; k < a_.size(); k++) {
    auto v = small.restrict_from(a_[k], *f_);
    if (!v)
      return std::nullopt;
    m.a_[k] = *v;
  }
  return m;
}

Matrix Matrix::row(size_t i) const
{
  Matrix m(f_, 1, c_);
  for (size_t j = 0; j < c_; j++)
    m.raw(0, j) = raw(i, j);
  return m;
}

Matrix Matrix::col(size_t j) const
{
  Matrix m(f_, r_, 1);
  for (size_t i = 0; i < r_; i++)
    m.raw(i, 0) = raw(i, j);
  return m;
}

Matrix Matrix::vstack(const Matrix& o) const
{
  if (r_ == 0)
    return o;
  if (o.r_ == 0)
    return *this;
  if (c_ != o.c_ || f_ != o.f_)
    throw Error(ErrorCode::InternalMismatch, "vstack shape mismatch");
  Matrix m(f_, r_ + o.r_, c_);
  std::copy(a_.begin(), a_.end(), m.a_.begin());
  std::copy(o.a_.begin(), o.a_.end(), m.a_.begin() + a_.size());
  return m;
}

Matrix Matrix::hstack(const Matrix& o) const
{
  if (r_ != o.r_ || f_ != o.f_)
    throw Error(ErrorCode::InternalMismatch, "hstack shape mismatch");
  Matrix m(f_, r_, c_ + o.c_);
  for (size_t i = 0; i < r_; i++) {
    for (size_t j = 0; j < c_; j++)
      m.raw(i, j) = raw(i, j);
    for (size_t j = 0; j < o.c_; j++)
      m.raw(i, c_ + j) = o.raw(i, j);
  }
  return m;
}

std::vector<std::vector<std::string>> Matrix::str_rows() const
{
  std::vector<std::vector<std::string>> out(r_);
  for (size_t i = 0; i < r_; i++)
    for (size_t j = 0; j < c_; j++)
      out[i].push_back(f_->str(raw(i, j)));
  return out;
}

std::string Matrix::str() const
{
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < r_; i++) {
    os << (i ? ", [" : "[");
    for (size_t j = 0; j < c_; j++)
      os << (j ? ", " : "") << f_->str(raw(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace clgen
