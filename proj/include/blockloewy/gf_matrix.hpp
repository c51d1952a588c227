#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "blockloewy/gfield.hpp"

namespace blockloewy {

using Elem = GField::Elem;
using Vec = std::vector<Elem>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over a finite field.
class GFMatrix {
 public:
  GFMatrix() = default;
  GFMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static GFMatrix identity(FieldPtr field, std::size_t n);
  /// Matrix whose rows are the given vectors (all of length cols).
  static GFMatrix from_rows(FieldPtr field, std::size_t cols, std::span<const Vec> rows);
  /// Matrix whose columns are the given vectors (all of length rows).
  static GFMatrix from_columns(FieldPtr field, std::size_t rows, std::span<const Vec> cols);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }
  Vec col_vec(std::size_t c) const;

  GFMatrix transpose() const;
  GFMatrix operator*(const GFMatrix& rhs) const;
  Vec apply(std::span<const Elem> x) const;

  void swap_rows(std::size_t a, std::size_t b);
  void append_row(std::span<const Elem> r);

  bool operator==(const GFMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

struct RrefResult {
  GFMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form (pivots normalized to 1, pivot columns cleared).
RrefResult rref(GFMatrix m);
std::size_t rank(const GFMatrix& m);
/// Basis of {x : m x = 0}, returned as the rows of a matrix in reduced
/// echelon form.
GFMatrix kernel(const GFMatrix& m);
/// Some x with m x = b, or nullopt.
std::optional<Vec> solve(const GFMatrix& m, std::span<const Elem> b);

/// Solutions of m * x^(p^k) = 0 (Frobenius applied coordinatewise), found by
/// flattening every F_{p^s} entry into its s coordinates over F_p and solving
/// the resulting F_p-linear system. Returns an F_p-basis of the solution set,
/// as vectors over F_{p^s}.
std::vector<Vec> semilinear_kernel(const GFMatrix& m, std::uint32_t k);

/// Subspace of F^n stored as a basis in reduced row echelon form.
class Subspace {
 public:
  Subspace() = default;
  Subspace(FieldPtr field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

  static Subspace span(FieldPtr field, std::size_t ambient, std::span<const Vec> vectors);
  static Subspace full(FieldPtr field, std::size_t ambient);

  const FieldPtr& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Adds v to the span; returns true if the dimension grew.
  bool insert(Vec v);
  /// v minus its projection along the echelon basis.
  Vec reduce(Vec v) const;
  bool contains(std::span<const Elem> v) const;
  /// Coordinates of v in basis(), or nullopt when v is outside.
  std::optional<Vec> coordinates(std::span<const Elem> v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  bool operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
  }

 private:
  FieldPtr field_;
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;  // sorted by pivot column
  std::vector<std::size_t> pivots_;
};

/// F_{p^s}-span of an F_p-spanning set; throws if the F_p-span was not
/// closed under F_{p^s}-scaling (dim_Fp != s * dim_Fq).
Subspace fq_span_of_fp_basis(const FieldPtr& field, std::size_t ambient, std::span<const Vec> fp_basis,
                             bool assert_closed);

bool is_zero(std::span<const Elem> v);

}  // namespace blockloewy
