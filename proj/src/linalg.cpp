#include "jpgeom/linalg.hpp"

#include <sstream>

namespace jpgeom {

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch();
  Vec r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch();
  Vec r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i]);
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& a) {
  Vec r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(c * x);
  return r;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

Vec vec_zero(const FieldSpec& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

std::string vec_str(const Vec& a) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ",";
    os << a[i].str();
  }
  os << "]";
  return os.str();
}

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, const std::vector<Vec>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows[0].size();
  Matrix m(f, rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw DimensionMismatch();
    for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  Vec r;
  r.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r.push_back(at(i, j));
  return r;
}

Vec Matrix::col(std::size_t j) const {
  Vec r;
  r.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) r.push_back(at(i, j));
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (!(field_ == o.field_)) throw FieldMismatch();
  if (cols_ != o.rows_) throw DimensionMismatch();
  Matrix m(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        m.at(i, j) = m.at(i, j) + aik * o.at(k, j);
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (!(field_ == o.field_)) throw FieldMismatch();
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch();
  Matrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (!(field_ == o.field_)) throw FieldMismatch();
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch();
  Matrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
  return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = c * a_[i];
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatch();
  Vec r = vec_zero(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      r[i] = r[i] + at(i, j) * v[j];
    }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix m(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(field_, rows_);
}

Matrix Matrix::hstack(const Matrix& o) const {
  if (rows_ != o.rows_) throw DimensionMismatch();
  Matrix m(field_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (cols_ != o.cols_) throw DimensionMismatch();
  Matrix m(field_, rows_ + o.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(rows_ + i, j) = o.at(i, j);
  return m;
}

Matrix Matrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix m(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = at(r0 + i, c0 + j);
  return m;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ";";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ",";
      os << at(i, j).str();
    }
  }
  os << "]";
  return os.str();
}

namespace {

// In-place Gauss-Jordan; returns pivot columns.
std::vector<std::size_t> rref_inplace(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && m.at(pr, c).is_zero()) ++pr;
    if (pr == m.rows()) continue;
    if (pr != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
    Scalar inv = m.at(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = inv * m.at(r, j);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::pair<Matrix, std::size_t> rref(const Matrix& m) {
  Matrix out = m;
  auto pivots = rref_inplace(out);
  return {out, pivots.size()};
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch();
  Matrix aug = a.hstack(b);
  auto pivots = rref_inplace(aug);
  // pivot in the b-part means inconsistency
  for (auto c : pivots)
    if (c >= a.cols()) return std::nullopt;
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t j = 0; j < b.cols(); ++j)
      x.at(pivots[k], j) = aug.at(k, a.cols() + j);
  return x;
}

std::optional<Vec> solve_vec(const Matrix& a, const Vec& b) {
  Matrix bm(a.field(), b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) bm.at(i, 0) = b[i];
  auto x = solve(a, bm);
  if (!x) return std::nullopt;
  return x->col(0);
}

Matrix kernel_basis(const Matrix& a) {
  Matrix r = a;
  auto pivots = rref_inplace(r);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> rows;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v = vec_zero(a.field(), a.cols());
    v[c] = Scalar::one(a.field());
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(k, c);
    rows.push_back(v);
  }
  if (rows.empty()) return Matrix(a.field(), 0, a.cols());
  return Matrix::from_rows(a.field(), rows);
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  Matrix aug = a.hstack(Matrix::identity(a.field(), a.rows()));
  auto pivots = rref_inplace(aug);
  if (pivots.size() != a.rows()) return std::nullopt;
  if (!pivots.empty() && pivots.back() >= a.cols()) return std::nullopt;
  return aug.submatrix(0, a.cols(), a.rows(), a.cols());
}

Subspace Subspace::zero(const FieldSpec& f, std::size_t ambient) {
  Subspace s;
  s.field_ = f;
  s.ambient_ = ambient;
  s.basis_ = Matrix(f, 0, ambient);
  return s;
}

Subspace Subspace::full(const FieldSpec& f, std::size_t ambient) {
  return span(Matrix::identity(f, ambient));
}

Subspace Subspace::span(const Matrix& rows) {
  Subspace s;
  s.field_ = rows.field();
  s.ambient_ = rows.cols();
  Matrix r = rows;
  s.pivots_ = rref_inplace(r);
  s.basis_ = r.submatrix(0, 0, s.pivots_.size(), rows.cols());
  return s;
}

Subspace Subspace::span_vecs(const FieldSpec& f, std::size_t ambient,
                             const std::vector<Vec>& vs) {
  if (vs.empty()) return zero(f, ambient);
  return span(Matrix::from_rows(f, vs));
}

void Subspace::check_ambient(const Subspace& o) const {
  if (!(field_ == o.field_) || ambient_ != o.ambient_) throw DimensionMismatch();
}

Subspace Subspace::sum(const Subspace& o) const {
  check_ambient(o);
  return span(basis_.vstack(o.basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
  // Zassenhaus: row reduce [U U; W 0]; rows with zero left half carry the
  // intersection in their right half.
  check_ambient(o);
  std::size_t n = ambient_;
  Matrix top = basis_.hstack(basis_);
  Matrix bot = o.basis_.hstack(Matrix(field_, o.basis_.rows(), n));
  Matrix z = top.vstack(bot);
  rref_inplace(z);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < z.rows(); ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n && left_zero; ++j)
      if (!z.at(i, j).is_zero()) left_zero = false;
    if (!left_zero) continue;
    Vec v;
    v.reserve(n);
    for (std::size_t j = 0; j < n; ++j) v.push_back(z.at(i, n + j));
    if (!vec_is_zero(v)) rows.push_back(v);
  }
  return span_vecs(field_, n, rows);
}

bool Subspace::contains_vector(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionMismatch();
  return vec_is_zero(reduce_mod(v));
}

bool Subspace::contains(const Subspace& o) const {
  check_ambient(o);
  for (std::size_t i = 0; i < o.dim(); ++i)
    if (!contains_vector(o.basis_vector(i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return field_ == o.field_ && ambient_ == o.ambient_ && basis_ == o.basis_;
}

bool Subspace::is_complement(const Subspace& o) const {
  check_ambient(o);
  if (dim() + o.dim() != ambient_) return false;
  return sum(o).dim() == ambient_;
}

std::optional<Vec> Subspace::coordinates_of(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionMismatch();
  return solve_vec(basis_.transpose(), v);
}

Vec Subspace::from_coordinates(const Vec& c) const {
  if (c.size() != dim()) throw DimensionMismatch();
  Vec v = vec_zero(field_, ambient_);
  for (std::size_t i = 0; i < dim(); ++i)
    if (!c[i].is_zero()) v = vec_add(v, vec_scale(c[i], basis_.row(i)));
  return v;
}

Vec Subspace::reduce_mod(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionMismatch();
  Vec r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar& c = r[pivots_[i]];
    if (c.is_zero()) continue;
    r = vec_sub(r, vec_scale(c, basis_.row(i)));
  }
  return r;
}

Vec Subspace::quotient_coords(const Vec& v) const {
  Vec r = reduce_mod(v);
  std::vector<bool> is_pivot(ambient_, false);
  for (auto c : pivots_) is_pivot[c] = true;
  Vec q;
  q.reserve(quotient_dim());
  for (std::size_t j = 0; j < ambient_; ++j)
    if (!is_pivot[j]) q.push_back(r[j]);
  return q;
}

std::vector<Vec> all_vectors(const FieldSpec& f, std::size_t n) {
  if (f.kind == FieldKind::rational) throw InfiniteField("cannot enumerate Q^n");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > (1u << 21) / f.p) throw CapExceeded("p^n too large to enumerate");
    total *= f.p;
  }
  std::vector<Vec> out;
  out.reserve(total);
  Vec cur = vec_zero(f, n);
  std::vector<std::uint64_t> digits(n, 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    out.push_back(cur);
    for (std::size_t j = n; j-- > 0;) {
      digits[j]++;
      if (digits[j] == f.p) {
        digits[j] = 0;
        cur[j] = Scalar::zero(f);
      } else {
        cur[j] = Scalar::from_int(f, static_cast<long>(digits[j]));
        break;
      }
    }
  }
  return out;
}

}  // namespace jpgeom
