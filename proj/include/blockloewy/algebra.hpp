#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "blockloewy/gf_matrix.hpp"
#include "blockloewy/perm_group.hpp"

namespace blockloewy {

struct Term {
  std::uint32_t index;
  Elem coeff;
};

struct IntTerm {
  std::uint32_t index;
  std::int64_t coeff;
};

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldTooSmall : public std::runtime_error {
 public:
  FieldTooSmall(const std::string& what, std::uint32_t degree_hint)
      : std::runtime_error(what), degree_hint_(degree_hint) {}
  /// Extension degree over the current field that would split the residue field.
  std::uint32_t degree_hint() const { return degree_hint_; }

 private:
  std::uint32_t degree_hint_;
};

struct LoewyProfile {
  /// dims[n] = dim J(A)^n for n = 0..LL; dims.back() == 0.
  std::vector<std::size_t> dims;
  std::size_t loewy_length = 0;
  /// codims[n-1] = c(n) = dim J^(n-1) - dim J^n for n = 1..LL.
  std::vector<std::size_t> codims;

  std::size_t c(std::size_t n) const { return n >= 1 && n <= codims.size() ? codims[n - 1] : 0; }
};

/// Finite-dimensional associative unital algebra given by structure
/// constants b_i b_j = sum_k c_ijk b_k, stored sparsely.
///
/// Algebras whose constants are reductions of nonnegative integer constants
/// of an associative ring (group algebras, class-sum centers, orbit-sum
/// algebras) can carry that integral lift; the trace-form radical uses it to
/// avoid building regular-representation matrices.
///
/// Immutable once built. The radical, its powers and the Loewy profile are
/// computed on first use and cached; concurrent readers are safe.
class StructureAlgebra {
 public:
  using Products = std::vector<std::vector<Term>>;
  using IntProducts = std::vector<std::vector<IntTerm>>;

  StructureAlgebra() = default;
  /// products has dim*dim entries indexed i*dim + j. Zero coefficients are
  /// dropped. integral, when present, must reduce to products mod p.
  StructureAlgebra(FieldPtr field, std::vector<std::string> labels, const Products& products, Vec unit,
                   std::optional<IntProducts> integral = std::nullopt);

  const FieldPtr& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec& unit() const { return unit_; }
  bool is_commutative() const { return commutative_; }
  bool has_integral_lift() const { return !int_offsets_.empty(); }

  std::span<const Term> product(std::size_t i, std::size_t j) const {
    return {terms_.data() + offsets_[i * dim_ + j], terms_.data() + offsets_[i * dim_ + j + 1]};
  }
  std::span<const IntTerm> integral_product(std::size_t i, std::size_t j) const {
    return {int_terms_.data() + int_offsets_[i * dim_ + j], int_terms_.data() + int_offsets_[i * dim_ + j + 1]};
  }

  Vec zero() const { return Vec(dim_, 0); }
  Vec basis_vector(std::size_t i) const;
  Vec mul(std::span<const Elem> x, std::span<const Elem> y) const;
  Vec add(std::span<const Elem> x, std::span<const Elem> y) const;
  Vec sub(std::span<const Elem> x, std::span<const Elem> y) const;
  Vec scale(std::span<const Elem> x, Elem c) const;
  Vec power(std::span<const Elem> x, std::uint64_t e) const;
  /// Column j is x * b_j.
  GFMatrix left_mult_matrix(std::span<const Elem> x) const;
  /// Column j is b_j * x.
  GFMatrix right_mult_matrix(std::span<const Elem> x) const;

  const Subspace& radical() const;
  /// J^0 = A, J^1 = J, ..., ending with the zero subspace.
  const std::vector<Subspace>& radical_powers() const;
  const LoewyProfile& loewy() const;

 private:
  struct Cache {
    std::once_flag radical_once;
    std::once_flag powers_once;
    Subspace radical;
    std::vector<Subspace> powers;
    LoewyProfile loewy;
  };

  FieldPtr field_;
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::size_t> offsets_;
  std::vector<Term> terms_;
  std::vector<std::size_t> int_offsets_;
  std::vector<IntTerm> int_terms_;
  Vec unit_;
  bool commutative_ = false;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Group algebra F G on the group-element basis, with integral lift.
StructureAlgebra group_algebra(const GroupPtr& g, const FieldPtr& field);
/// Group algebra of a subgroup, basis ordered as h.indices().
StructureAlgebra group_algebra(const Subgroup& h, const FieldPtr& field);

/// Verifies associativity on every basis triple up to dimension 60 (sampled
/// deterministically above that) and the two-sided unit law. Throws
/// AlgebraError naming the first failing triple.
void check_algebra(const StructureAlgebra& a);

/// J(A). Commutative algebras use the Frobenius-power kernel, others the
/// trace-form layering.
Subspace compute_radical(const StructureAlgebra& a);
/// Nilradical of a commutative algebra: kernel of a -> a^(p^K), p^K >= dim,
/// solved as an F_p-linear system.
Subspace radical_commutative(const StructureAlgebra& a);
/// Trace-form layering over F_p: I_{-1} = A, I_i = {x in I_{i-1} :
/// g_i(x y) = 0 for all y}, where g_i(x) = Tr(lift(x)^(p^i)) / p^i mod p for the
/// regular representation; J(A) = I_l with l = floor(log_p dim A).
Subspace radical_trace_form(const StructureAlgebra& a);

LoewyProfile loewy_profile(const StructureAlgebra& a);
/// Span of all products u v with u in x, v in y.
Subspace product_space(const StructureAlgebra& a, const Subspace& x, const Subspace& y);

/// {a : a J = J a = 0}
Subspace socle(const StructureAlgebra& a);
/// {a : a b = b a for all b}
Subspace center(const StructureAlgebra& a);

struct IdempotentDecomposition {
  std::vector<Vec> idempotents;
};

/// Orthogonal primitive central idempotents summing to 1. Non-commutative
/// algebras are handled through their center. With demand_split, a block
/// whose residue field is a proper extension of the base field raises
/// FieldTooSmall.
IdempotentDecomposition primitive_central_idempotents(const StructureAlgebra& a, bool demand_split = true);

/// A / I for a two-sided ideal I; basis = standard vectors at the non-pivot
/// positions of I. Throws AlgebraError if I is not an ideal.
StructureAlgebra quotient(const StructureAlgebra& a, const Subspace& ideal);
/// Smallest subalgebra containing the unit and the generators.
StructureAlgebra subalgebra_span(const StructureAlgebra& a, std::span<const Vec> generators);

/// e A with unit e, for a central idempotent e (or any idempotent of a
/// commutative algebra). basis() of the returned Subspace maps corner
/// coordinates back into A.
struct Corner {
  StructureAlgebra algebra;
  Subspace embedding;
};
Corner corner(const StructureAlgebra& a, std::span<const Elem> e);

bool is_local(const StructureAlgebra& a);
/// Local with every Loewy layer of dimension <= 1.
bool is_uniserial_local(const StructureAlgebra& a);

/// Labels and nonzero structure constants, one per line.
std::string dump(const StructureAlgebra& a);

}  // namespace blockloewy
