#include "blockloewy/gf_matrix.hpp"

#include <algorithm>
#include <string>

namespace blockloewy {

bool is_zero(std::span<const Elem> v) {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

GFMatrix GFMatrix::identity(FieldPtr field, std::size_t n) {
  GFMatrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

GFMatrix GFMatrix::from_rows(FieldPtr field, std::size_t cols, std::span<const Vec> rows) {
  GFMatrix m(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

GFMatrix GFMatrix::from_columns(FieldPtr field, std::size_t rows, std::span<const Vec> cols) {
  GFMatrix m(std::move(field), rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vec GFMatrix::col_vec(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

GFMatrix GFMatrix::transpose() const {
  GFMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

GFMatrix GFMatrix::operator*(const GFMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("matrix product dimension mismatch");
  GFMatrix out(field_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Elem* dst = out.data_.data() + r * rhs.cols_;
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem a = (*this)(r, k);
      if (a != 0) field_->axpy(dst, rhs.data_.data() + k * rhs.cols_, a, rhs.cols_);
    }
  }
  return out;
}

Vec GFMatrix::apply(std::span<const Elem> x) const {
  if (x.size() != cols_) throw DimensionError("matrix-vector dimension mismatch");
  Vec y(rows_, 0);
  const GField& f = *field_;
  for (std::size_t r = 0; r < rows_; ++r) {
    Elem acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Elem a = (*this)(r, c);
      if (a != 0 && x[c] != 0) acc = f.add(acc, f.mul(a, x[c]));
    }
    y[r] = acc;
  }
  return y;
}

void GFMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
}

void GFMatrix::append_row(std::span<const Elem> r) {
  if (r.size() != cols_) throw DimensionError("row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

RrefResult rref(GFMatrix m) {
  const GField& f = *m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    m.swap_rows(r, piv);
    f.scale(m.row(r).data(), f.inv(m(r, c)), cols);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      f.axpy(m.row(i).data(), m.row(r).data(), f.neg(m(i, c)), cols);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const GFMatrix& m) { return rref(m).pivots.size(); }

GFMatrix kernel(const GFMatrix& m) {
  const auto [red, pivots] = rref(m);
  const GField& f = *m.field();
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec x(n, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = f.neg(red(i, free));
    basis.push_back(std::move(x));
  }
  return rref(GFMatrix::from_rows(m.field(), n, basis)).reduced;
}

std::optional<Vec> solve(const GFMatrix& m, std::span<const Elem> b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side length mismatch");
  GFMatrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto [red, pivots] = rref(std::move(aug));
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red(i, m.cols());
  return x;
}

std::vector<Vec> semilinear_kernel(const GFMatrix& m, std::uint32_t k) {
  const FieldPtr& fq = m.field();
  const GField& f = *fq;
  const std::uint32_t s = f.s();
  const auto fp = make_field(f.p(), 1);
  const std::size_t n = m.cols();
  const std::size_t rows = m.rows();

  // Column (j, t) of the flattened system is the image of the F_p-basis
  // vector x^t e_j, i.e. (x^t)^(p^k) times column j of m.
  GFMatrix flat(fp, rows * s, n * s);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::uint32_t t = 0; t < s; ++t) {
      std::vector<std::uint32_t> mono(s, 0);
      mono[t] = 1;
      const Elem twisted = f.frobenius(f.from_coords(mono), k);
      for (std::size_t r = 0; r < rows; ++r) {
        const auto c = f.coords(f.mul(m(r, j), twisted));
        for (std::uint32_t u = 0; u < s; ++u) flat(r * s + u, j * s + t) = c[u];
      }
    }
  }
  const GFMatrix ker = kernel(flat);
  std::vector<Vec> out;
  out.reserve(ker.rows());
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    Vec v(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::uint32_t> c(s);
      for (std::uint32_t t = 0; t < s; ++t) c[t] = ker(i, j * s + t);
      v[j] = f.from_coords(c);
    }
    out.push_back(std::move(v));
  }
  return out;
}

Subspace Subspace::span(FieldPtr field, std::size_t ambient, std::span<const Vec> vectors) {
  Subspace s(std::move(field), ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::full(FieldPtr field, std::size_t ambient) {
  Subspace s(std::move(field), ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vec v(ambient, 0);
    v[i] = 1;
    s.basis_.push_back(std::move(v));
    s.pivots_.push_back(i);
  }
  return s;
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient_) throw DimensionError("vector length does not match ambient dimension");
  const GField& f = *field_;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Elem c = v[pivots_[i]];
    if (c != 0) f.axpy(v.data(), basis_[i].data(), f.neg(c), ambient_);
  }
  return v;
}

bool Subspace::insert(Vec v) {
  v = reduce(std::move(v));
  auto it = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
  if (it == v.end()) return false;
  const GField& f = *field_;
  const std::size_t piv = static_cast<std::size_t>(it - v.begin());
  f.scale(v.data(), f.inv(v[piv]), ambient_);
  for (auto& b : basis_) {
    if (b[piv] != 0) f.axpy(b.data(), v.data(), f.neg(b[piv]), ambient_);
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  basis_.insert(basis_.begin() + pos, std::move(v));
  return true;
}

bool Subspace::contains(std::span<const Elem> v) const { return is_zero(reduce(Vec(v.begin(), v.end()))); }

std::optional<Vec> Subspace::coordinates(std::span<const Elem> v) const {
  if (!contains(v)) return std::nullopt;
  Vec c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::sum(const Subspace& other) const {
  Subspace s = *this;
  for (const auto& v : other.basis_) s.insert(v);
  return s;
}

Subspace Subspace::intersect(const Subspace& other) const {
  // Solve sum a_i u_i = sum b_j w_j; the intersection is spanned by sum a_i u_i.
  const std::size_t du = dim();
  const std::size_t dw = other.dim();
  Subspace out(field_, ambient_);
  if (du == 0 || dw == 0) return out;
  const GField& f = *field_;
  GFMatrix m(field_, ambient_, du + dw);
  for (std::size_t i = 0; i < du; ++i)
    for (std::size_t r = 0; r < ambient_; ++r) m(r, i) = basis_[i][r];
  for (std::size_t j = 0; j < dw; ++j)
    for (std::size_t r = 0; r < ambient_; ++r) m(r, du + j) = f.neg(other.basis_[j][r]);
  const GFMatrix ker = kernel(m);
  for (std::size_t k = 0; k < ker.rows(); ++k) {
    Vec v(ambient_, 0);
    for (std::size_t i = 0; i < du; ++i) f.axpy(v.data(), basis_[i].data(), ker(k, i), ambient_);
    out.insert(std::move(v));
  }
  return out;
}

Subspace fq_span_of_fp_basis(const FieldPtr& field, std::size_t ambient, std::span<const Vec> fp_basis,
                             bool assert_closed) {
  Subspace s = Subspace::span(field, ambient, fp_basis);
  if (assert_closed && fp_basis.size() != s.dim() * field->s()) {
    throw std::logic_error("F_p-solution space of dimension " + std::to_string(fp_basis.size()) +
                           " is not closed under " + field->name() + "-scaling");
  }
  return s;
}

}  // namespace blockloewy
