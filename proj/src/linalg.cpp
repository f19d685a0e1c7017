#include "clgen/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace clgen {

std::vector<int> SimilarityInvariants::degrees() const
{
  std::vector<int> d;
  for (const Poly& f : factors)
    d.push_back(f.degree());
  return d;
}

Poly SimilarityInvariants::product() const
{
  Poly r = Poly::constant(factors.front().field().el(1));
  for (const Poly& f : factors)
    r = r * f;
  return r;
}

Poly char_poly(const Matrix& m)
{
  if (!m.square())
    throw Error(ErrorCode::InternalMismatch, "char_poly of a non-square matrix");
  const Field* f = m.field_ptr();
  size_t n = m.rows();
  Matrix h(m);
  // Similarity reduction to upper Hessenberg form.
  for (size_t j = 0; j + 2 < n; j++) {
    size_t sel = n;
    for (size_t i = j + 1; i < n; i++) {
      if (h.raw(i, j) != 0) {
        sel = i;
        break;
      }
    }
    if (sel == n)
      continue;
    if (sel != j + 1) {
      for (size_t c = 0; c < n; c++)
        std::swap(h.raw(sel, c), h.raw(j + 1, c));
      for (size_t r = 0; r < n; r++)
        std::swap(h.raw(r, sel), h.raw(r, j + 1));
    }
    code_t inv = f->inv(h.raw(j + 1, j));
    for (size_t r = j + 2; r < n; r++) {
      code_t factor = f->mul(h.raw(r, j), inv);
      if (factor == 0)
        continue;
      for (size_t c = 0; c < n; c++)
        h.raw(r, c) = f->sub(h.raw(r, c), f->mul(factor, h.raw(j + 1, c)));
      for (size_t rr = 0; rr < n; rr++)
        h.raw(rr, j + 1) = f->add(h.raw(rr, j + 1), f->mul(factor, h.raw(rr, r)));
    }
  }
  auto at = [&](size_t i, size_t j) { return h.at(i - 1, j - 1); };
  Poly t = Poly::monomial(f, 1);
  std::vector<Poly> p(n + 1, Poly(f));
  p[0] = Poly::constant(f->el(1));
  for (size_t k = 1; k <= n; k++) {
    p[k] = (t - Poly::constant(at(k, k))) * p[k - 1];
    GF prod = f->el(1);
    for (size_t i = k - 1; i >= 1; i--) {
      prod = prod * at(i + 1, i);
      GF coef = at(i, k) * prod;
      if (!coef.is_zero())
        p[k] = p[k] - p[i - 1].scale(coef);
    }
  }
  return p[n];
}

SimilarityInvariants similarity_invariants(const Matrix& m)
{
  const Field* f = m.field_ptr();
  size_t n = m.rows();
  std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n, Poly(f)));
  for (size_t i = 0; i < n; i++) {
    for (size_t j = 0; j < n; j++) {
      Poly e = Poly::constant(m.at(i, j)).scale(f->el(-1));
      if (i == j)
        e = e + Poly::monomial(f, 1);
      a[i][j] = e;
    }
  }
  // Smith normal form over F[t], always pivoting on a smallest-degree entry.
  for (size_t k = 0; k < n; k++) {
    while (true) {
      size_t pi = n, pj = n;
      int best = std::numeric_limits<int>::max();
      for (size_t i = k; i < n; i++)
        for (size_t j = k; j < n; j++)
          if (!a[i][j].is_zero() && a[i][j].degree() < best) {
            best = a[i][j].degree();
            pi = i;
            pj = j;
          }
      if (pi == n)
        break;
      std::swap(a[k], a[pi]);
      for (size_t i = 0; i < n; i++)
        std::swap(a[i][k], a[i][pj]);
      bool clean = true;
      for (size_t i = k + 1; i < n; i++) {
        if (a[i][k].is_zero())
          continue;
        auto [q, r] = a[i][k].divmod(a[k][k]);
        for (size_t j = k; j < n; j++)
          a[i][j] = a[i][j] - q * a[k][j];
        if (!r.is_zero())
          clean = false;
      }
      for (size_t j = k + 1; j < n; j++) {
        if (a[k][j].is_zero())
          continue;
        auto [q, r] = a[k][j].divmod(a[k][k]);
        for (size_t i = k; i < n; i++)
          a[i][j] = a[i][j] - q * a[i][k];
        if (!r.is_zero())
          clean = false;
      }
      if (!clean)
        continue;
      bool divides = true;
      for (size_t i = k + 1; i < n && divides; i++) {
        for (size_t j = k + 1; j < n; j++) {
          if (!(a[i][j] % a[k][k]).is_zero()) {
            for (size_t c = k; c < n; c++)
              a[k][c] = a[k][c] + a[i][c];
            divides = false;
            break;
          }
        }
      }
      if (divides)
        break;
    }
  }
  SimilarityInvariants inv;
  for (size_t k = 0; k < n; k++) {
    if (a[k][k].degree() > 0)
      inv.factors.push_back(a[k][k].monic());
  }
  return inv;
}

Poly min_poly(const Matrix& m)
{
  return similarity_invariants(m).factors.back();
}

Matrix poly_at(const Poly& f, const Matrix& m)
{
  Matrix acc(m.field_ptr(), m.rows(), m.cols());
  Matrix id = Matrix::identity(m.field_ptr(), m.rows());
  for (size_t k = f.coeffs().size(); k-- > 0;)
    acc = acc * m + id.scale(f.coeff(k));
  return acc;
}

unsigned centralizer_dim_by_invariants(const Matrix& m)
{
  auto degs = similarity_invariants(m).degrees();
  unsigned total = 0;
  for (int a : degs)
    for (int b : degs)
      total += static_cast<unsigned>(std::min(a, b));
  return total;
}

unsigned centralizer_dim_by_nullity(const Matrix& m)
{
  const Field* f = m.field_ptr();
  size_t n = m.rows();
  Matrix sys(f, n * n, n * n);
  for (size_t i = 0; i < n; i++) {
    for (size_t j = 0; j < n; j++) {
      size_t row = i * n + j;
      for (size_t k = 0; k < n; k++) {
        // (MZ)_ij = sum_k M_ik Z_kj ; (ZM)_ij = sum_k Z_ik M_kj.
        sys.raw(row, k * n + j) = f->add(sys.raw(row, k * n + j), m.raw(i, k));
        sys.raw(row, i * n + k) = f->sub(sys.raw(row, i * n + k), m.raw(k, j));
      }
    }
  }
  return static_cast<unsigned>(n * n - sys.rank());
}

unsigned centralizer_dim(const Matrix& m)
{
  unsigned a = centralizer_dim_by_invariants(m);
  unsigned b = centralizer_dim_by_nullity(m);
  if (a != b)
    throw Error(ErrorCode::InternalMismatch, "centralizer dimension methods disagree");
  return a;
}

namespace {

// Incrementally maintained echelon basis of row vectors.
class EchelonBasis {
 public:
  EchelonBasis(const Field* f, size_t len) : f_(f), len_(len) {}

  // Adds v if independent; returns true when the span grew.
  bool add(std::vector<code_t> v)
  {
    reduce(v);
    size_t piv = 0;
    while (piv < len_ && v[piv] == 0)
      piv++;
    if (piv == len_)
      return false;
    code_t inv = f_->inv(v[piv]);
    for (auto& c : v)
      c = f_->mul(c, inv);
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

  bool contains(std::vector<code_t> v) const
  {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](code_t c) { return c == 0; });
  }

  size_t dim() const { return rows_.size(); }

  Matrix matrix() const
  {
    Matrix m(f_, rows_.size(), len_);
    for (size_t i = 0; i < rows_.size(); i++)
      for (size_t j = 0; j < len_; j++)
        m.raw(i, j) = rows_[i][j];
    return m.rref();
  }

 private:
  void reduce(std::vector<code_t>& v) const
  {
    for (size_t k = 0; k < rows_.size(); k++) {
      code_t c = v[pivots_[k]];
      if (c == 0)
        continue;
      for (size_t j = 0; j < len_; j++)
        v[j] = f_->sub(v[j], f_->mul(c, rows_[k][j]));
    }
  }

  const Field* f_;
  size_t len_;
  std::vector<std::vector<code_t>> rows_;
  std::vector<size_t> pivots_;
};

std::vector<code_t> apply_col(const Matrix& g, const std::vector<code_t>& v)
{
  const Field& f = g.field();
  size_t n = g.rows();
  std::vector<code_t> out(n, 0);
  for (size_t i = 0; i < n; i++) {
    code_t acc = 0;
    for (size_t j = 0; j < n; j++)
      acc = f.add(acc, f.mul(g.raw(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

std::vector<code_t> row_vec(const Matrix& m, size_t i)
{
  std::vector<code_t> v(m.cols());
  for (size_t j = 0; j < m.cols(); j++)
    v[j] = m.raw(i, j);
  return v;
}

// Intersection of the row space `basis` with the kernel of (g - lambda I).
Matrix restrict_kernel(const Matrix& basis, const Matrix& g, const GF& lambda)
{
  const Field* f = g.field_ptr();
  size_t n = g.rows();
  Matrix shifted = g - Matrix::scalar(lambda, n);
  // Solve (g - lambda) B^T c = 0 for coefficient vectors c.
  Matrix image = shifted * basis.transpose();
  Matrix coeffs = image.nullspace();
  if (coeffs.rows() == 0)
    return Matrix(f, 0, n);
  return (coeffs * basis).rref();
}

void eigen_recurse(const std::vector<Matrix>& gens, size_t idx, const Matrix& space,
                   std::vector<Matrix>& out)
{
  if (space.rows() == 0)
    return;
  if (idx == gens.size()) {
    out.push_back(space);
    return;
  }
  const Matrix& g = gens[idx];
  // Eigenvalues of g restricted to the space are among the roots of char_poly(g).
  for (const GF& lambda : poly_roots(char_poly(g))) {
    Matrix sub = restrict_kernel(space, g, lambda);
    eigen_recurse(gens, idx + 1, sub, out);
  }
}

// Enumerates the lines of the row space of `basis`, calling fn with a
// representative until it returns true.
template <typename Fn>
bool for_each_line(const Matrix& basis, Fn fn)
{
  const Field& f = basis.field();
  size_t e = basis.rows(), n = basis.cols();
  uint64_t Q = f.size();
  // Representatives: first nonzero coefficient equal to 1.
  for (size_t lead = 0; lead < e; lead++) {
    size_t tail = e - lead - 1;
    uint64_t count = 1;
    for (size_t k = 0; k < tail; k++)
      count *= Q;
    for (uint64_t idx = 0; idx < count; idx++) {
      std::vector<code_t> c(e, 0);
      c[lead] = 1;
      uint64_t rest = idx;
      for (size_t k = lead + 1; k < e; k++) {
        c[k] = static_cast<code_t>(rest % Q);
        rest /= Q;
      }
      std::vector<code_t> v(n, 0);
      for (size_t k = 0; k < e; k++) {
        if (c[k] == 0)
          continue;
        for (size_t j = 0; j < n; j++)
          v[j] = f.add(v[j], f.mul(c[k], basis.raw(k, j)));
      }
      if (fn(v))
        return true;
    }
  }
  return false;
}

Matrix vec_to_row(const Field* f, const std::vector<code_t>& v)
{
  return Matrix(f, 1, v.size(), v);
}

bool is_invariant(const std::vector<Matrix>& gens, const Matrix& w_rref, const std::vector<size_t>& pivots)
{
  const Field& f = w_rref.field();
  size_t n = w_rref.cols();
  for (const Matrix& g : gens) {
    for (size_t r = 0; r < w_rref.rows(); r++) {
      auto img = apply_col(g, row_vec(w_rref, r));
      for (size_t k = 0; k < pivots.size(); k++) {
        code_t c = img[pivots[k]];
        if (c == 0)
          continue;
        for (size_t j = 0; j < n; j++)
          img[j] = f.sub(img[j], f.mul(c, w_rref.raw(k, j)));
      }
      if (std::any_of(img.begin(), img.end(), [](code_t c) { return c != 0; }))
        return false;
    }
  }
  return true;
}

std::optional<Matrix> enumerate_subspaces(const std::vector<Matrix>& gens, unsigned dim)
{
  const Field* f = gens[0].field_ptr();
  size_t n = gens[0].rows();
  uint64_t Q = f->size();
  std::vector<size_t> piv(dim);
  for (unsigned i = 0; i < dim; i++)
    piv[i] = i;
  while (true) {
    // Free positions: row i, column j > piv[i], j not a pivot column.
    std::vector<std::pair<size_t, size_t>> free;
    for (unsigned i = 0; i < dim; i++)
      for (size_t j = piv[i] + 1; j < n; j++)
        if (std::find(piv.begin(), piv.end(), j) == piv.end())
          free.emplace_back(i, j);
    std::vector<code_t> digits(free.size(), 0);
    while (true) {
      Matrix w(f, dim, n);
      for (unsigned i = 0; i < dim; i++)
        w.raw(i, piv[i]) = 1;
      for (size_t k = 0; k < free.size(); k++)
        w.raw(free[k].first, free[k].second) = digits[k];
      if (is_invariant(gens, w, piv))
        return w;
      size_t k = 0;
      while (k < digits.size() && ++digits[k] == Q) {
        digits[k] = 0;
        k++;
      }
      if (k == digits.size())
        break;
    }
    // Next pivot combination.
    int i = static_cast<int>(dim) - 1;
    while (i >= 0 && piv[i] == n - dim + i)
      i--;
    if (i < 0)
      break;
    piv[i]++;
    for (unsigned j = i + 1; j < dim; j++)
      piv[j] = piv[j - 1] + 1;
  }
  return std::nullopt;
}

std::optional<Matrix> common_eigenline(const std::vector<Matrix>& gens)
{
  auto spaces = common_eigenspaces(gens);
  if (spaces.empty())
    return std::nullopt;
  return spaces.front().row(0);
}

// Two-dimensional search, complete when some generator's characteristic
// polynomial splits over the field.
std::optional<Matrix> plane_by_eigenvectors(const std::vector<Matrix>& gens, uint64_t limit)
{
  const Field* f = gens[0].field_ptr();
  size_t n = gens[0].rows();
  const Matrix* split = nullptr;
  for (const Matrix& g : gens) {
    Poly cp = char_poly(g);
    if (poly_roots(cp).size() > 0) {
      auto degs = factor_degrees(cp);
      if (degs.size() == 1 && degs[0] == 1) {
        split = &g;
        break;
      }
    }
  }
  if (split == nullptr)
    throw Error(ErrorCode::TooLarge, "two-dimensional search needs a split generator");
  std::optional<Matrix> found;
  std::vector<Matrix> lines;
  for (const GF& lambda : poly_roots(char_poly(*split))) {
    Matrix eig = (*split - Matrix::scalar(lambda, n)).nullspace();
    uint64_t count = 1;
    for (size_t k = 1; k < eig.rows(); k++)
      count *= f->size();
    if (count > limit)
      throw Error(ErrorCode::TooLarge, "eigenspace too large to enumerate");
    for_each_line(eig, [&](const std::vector<code_t>& v) {
      Matrix s = spin(gens, vec_to_row(f, v));
      if (s.rows() == 2) {
        found = s;
        return true;
      }
      if (s.rows() == 1)
        lines.push_back(s);
      return false;
    });
    if (found)
      return found;
  }
  // Common eigenlines: two distinct ones span an invariant plane.
  for (size_t i = 0; i < lines.size(); i++) {
    for (size_t j = i + 1; j < lines.size(); j++) {
      Matrix w = lines[i].vstack(lines[j]);
      if (w.rank() == 2)
        return w.rref();
    }
  }
  // Otherwise lift a common eigenline of the action on V / L.
  for (const Matrix& line : lines) {
    std::vector<size_t> piv;
    Matrix l = line.rref(&piv);
    std::vector<size_t> comp;
    for (size_t j = 0; j < n; j++)
      if (j != piv[0])
        comp.push_back(j);
    std::vector<Matrix> quot;
    for (const Matrix& g : gens) {
      Matrix qg(f, n - 1, n - 1);
      for (size_t c = 0; c < comp.size(); c++) {
        std::vector<code_t> e(n, 0);
        e[comp[c]] = 1;
        auto img = apply_col(g, e);
        code_t k = img[piv[0]];
        for (size_t j = 0; j < n; j++)
          img[j] = f->sub(img[j], f->mul(k, l.raw(0, j)));
        for (size_t r = 0; r < comp.size(); r++)
          qg.raw(r, c) = img[comp[r]];
      }
      quot.push_back(qg);
    }
    auto u = common_eigenline(quot);
    if (u) {
      Matrix lift(f, 1, n);
      for (size_t r = 0; r < comp.size(); r++)
        lift.raw(0, comp[r]) = u->raw(0, r);
      return l.vstack(lift).rref();
    }
  }
  return std::nullopt;
}

}  // namespace

unsigned enveloping_dim(const std::vector<Matrix>& gens)
{
  if (gens.empty())
    return 1;
  const Field* f = gens[0].field_ptr();
  size_t n = gens[0].rows();
  EchelonBasis basis(f, n * n);
  Matrix id = Matrix::identity(f, n);
  basis.add(id.codes());
  std::vector<Matrix> queue{id};
  for (size_t head = 0; head < queue.size() && basis.dim() < n * n; head++) {
    for (const Matrix& g : gens) {
      Matrix w = g * queue[head];
      if (basis.add(w.codes()))
        queue.push_back(std::move(w));
    }
  }
  return static_cast<unsigned>(basis.dim());
}

Matrix spin(const std::vector<Matrix>& gens, const Matrix& start)
{
  const Field* f = start.field_ptr();
  size_t n = start.cols();
  EchelonBasis basis(f, n);
  std::vector<std::vector<code_t>> queue;
  for (size_t i = 0; i < start.rows(); i++) {
    auto v = row_vec(start, i);
    if (basis.add(v))
      queue.push_back(v);
  }
  for (size_t head = 0; head < queue.size(); head++) {
    for (const Matrix& g : gens) {
      auto w = apply_col(g, queue[head]);
      if (basis.add(w))
        queue.push_back(std::move(w));
    }
  }
  return basis.matrix();
}

std::vector<Matrix> common_eigenspaces(const std::vector<Matrix>& gens)
{
  std::vector<Matrix> out;
  if (gens.empty())
    return out;
  const Field* f = gens[0].field_ptr();
  size_t n = gens[0].rows();
  eigen_recurse(gens, 0, Matrix::identity(f, n), out);
  return out;
}

uint64_t subspace_count(uint64_t Q, unsigned n, unsigned dim)
{
  if (dim > n)
    return 0;
  // Gaussian binomial computed in long double to detect overflow.
  long double num = 1, den = 1;
  for (unsigned i = 0; i < dim; i++) {
    num *= static_cast<long double>(std::pow(static_cast<long double>(Q), n - i) - 1);
    den *= static_cast<long double>(std::pow(static_cast<long double>(Q), i + 1) - 1);
  }
  long double v = num / den;
  if (v >= static_cast<long double>(std::numeric_limits<uint64_t>::max()))
    return std::numeric_limits<uint64_t>::max();
  return static_cast<uint64_t>(v + 0.5L);
}

std::optional<Matrix> invariant_subspace(const std::vector<Matrix>& gens, unsigned dim, uint64_t limit)
{
  if (gens.empty())
    throw Error(ErrorCode::InternalMismatch, "no generators");
  const Field* f = gens[0].field_ptr();
  size_t n = gens[0].rows();
  if (dim == 0 || dim >= n)
    throw Error(ErrorCode::InternalMismatch, "subspace dimension must be proper and nonzero");
  if (subspace_count(f->size(), n, dim) <= limit)
    return enumerate_subspaces(gens, dim);
  if (dim == 1)
    return common_eigenline(gens);
  if (dim == n - 1) {
    std::vector<Matrix> tr;
    for (const Matrix& g : gens)
      tr.push_back(g.transpose());
    auto line = common_eigenline(tr);
    if (!line)
      return std::nullopt;
    // The hyperplane annihilated by the invariant linear form.
    return line->nullspace().rref();
  }
  if (dim == 2)
    return plane_by_eigenvectors(gens, limit);
  throw Error(ErrorCode::TooLarge, "subspace enumeration exceeds the limit");
}

Matrix sym_action(const Matrix& g)
{
  const Field* f = g.field_ptr();
  size_t n = g.rows();
  std::vector<std::pair<size_t, size_t>> idx;
  for (size_t i = 0; i < n; i++)
    for (size_t j = i; j < n; j++)
      idx.emplace_back(i, j);
  Matrix act(f, idx.size(), idx.size());
  Matrix gt = g.transpose();
  for (size_t b = 0; b < idx.size(); b++) {
    Matrix m(f, n, n);
    m.raw(idx[b].first, idx[b].second) = 1;
    m.raw(idx[b].second, idx[b].first) = 1;
    Matrix img = g * m * gt;
    for (size_t r = 0; r < idx.size(); r++)
      act.raw(r, b) = img.raw(idx[r].first, idx[r].second);
  }
  return act;
}

unsigned sym_fixed_dim(const std::vector<Matrix>& gens, bool dual)
{
  if (gens.empty())
    throw Error(ErrorCode::InternalMismatch, "no generators");
  size_t n = gens[0].rows();
  size_t N = n * (n + 1) / 2;
  const Field* f = gens[0].field_ptr();
  Matrix stacked(f, 0, N);
  for (const Matrix& g : gens) {
    Matrix a = sym_action(g);
    // Fixed vectors of the contragredient action (A^{-1})^T are ker(A^T - I).
    if (dual)
      a = a.transpose();
    stacked = stacked.vstack(a - Matrix::identity(f, N));
  }
  return static_cast<unsigned>(N - stacked.rank());
}

Matrix conj_action(const Matrix& g)
{
  const Field* f = g.field_ptr();
  size_t n = g.rows();
  Matrix gi = g.inverse();
  Matrix act(f, n * n, n * n);
  for (size_t b = 0; b < n * n; b++) {
    Matrix e(f, n, n);
    e.raw(b / n, b % n) = 1;
    Matrix img = g * e * gi;
    for (size_t r = 0; r < n * n; r++)
      act.raw(r, b) = img.raw(r / n, r % n);
  }
  return act;
}

Matrix cubic_rep(const Matrix& g)
{
  const Field* f = g.field_ptr();
  if (f->p() == 2 || f->p() == 3)
    throw Error(ErrorCode::BadCharacteristic, "cubic representation needs p != 2, 3");
  if (g.rows() != 2 || g.cols() != 2)
    throw Error(ErrorCode::InternalMismatch, "cubic representation needs a 2x2 matrix");
  if (!g.det().is_one())
    throw Error(ErrorCode::HypothesisNotMet, "cubic representation needs determinant 1");
  // Images of t1 and t2 as coefficient pairs (coefficient of t1, of t2).
  std::vector<code_t> im1{g.raw(0, 0), g.raw(1, 0)};
  std::vector<code_t> im2{g.raw(0, 1), g.raw(1, 1)};
  auto mul_lin = [&](const std::vector<code_t>& poly, const std::vector<code_t>& lin) {
    // poly indexed by power of t2 within a homogeneous form.
    std::vector<code_t> out(poly.size() + 1, 0);
    for (size_t k = 0; k < poly.size(); k++) {
      out[k] = f->add(out[k], f->mul(poly[k], lin[0]));
      out[k + 1] = f->add(out[k + 1], f->mul(poly[k], lin[1]));
    }
    return out;
  };
  Matrix phi(f, 4, 4);
  for (size_t k = 0; k < 4; k++) {
    std::vector<code_t> form{1};
    for (size_t i = 0; i < 3 - k; i++)
      form = mul_lin(form, im1);
    for (size_t i = 0; i < k; i++)
      form = mul_lin(form, im2);
    for (size_t r = 0; r < 4; r++)
      phi.raw(r, k) = form[r];
  }
  return phi;
}

}  // namespace clgen

namespace clgen {

Matrix cubic_conjugator(const GF& r)
{
  const Field* f = r.field_ptr();
  GF r2 = r * r, r3 = r2 * r;
  GF three = f->el(3);
  return Matrix::from_rows({
      {three, -three, r, r},
      {three * r3, three * r3, three * r2, -(three * r2)},
      {-(three * r2), three * r2, three * r3, three * r3},
      {r, r, -three, three},
  });
}

Matrix cubic_x2(const Field* f)
{
  return Matrix::from_ints(f, {{0, -1}, {1, 0}});
}

Matrix cubic_y2(const GF& r)
{
  const Field* f = r.field_ptr();
  GF half = f->el(2).inv();
  return Matrix::from_rows({
      {-half, f->el(3) * half / r},
      {-(r * half), -half},
  });
}

}  // namespace clgen
