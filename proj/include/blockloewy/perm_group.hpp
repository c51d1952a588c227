#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace blockloewy {

/// Permutation of {0, ..., degree-1}. Products act on the right:
/// i^(a*b) = (i^a)^b, so (a * b)[i] == b[a[i]].
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint32_t> images);

  static Perm identity(std::size_t degree);
  /// Cycles are 0-based point lists; points not mentioned are fixed.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  bool is_identity() const;
  std::uint64_t order() const;
  std::string to_cycle_string() const;

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

class GroupTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline constexpr std::size_t kDefaultMaxOrder = 50000;

/// Finite permutation group with its full element list.
///
/// Elements are enumerated breadth-first from the identity, multiplying each
/// dequeued element on the right by the generators in the order given, so
/// element 0 is always the identity and the numbering is reproducible.
class FiniteGroup {
 public:
  static GroupPtr from_generators(std::size_t degree, std::vector<Perm> gens, std::string name,
                                  std::size_t max_order = kDefaultMaxOrder);

  const std::string& name() const { return name_; }
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(std::uint32_t i) const { return elements_[i]; }
  /// Generators as element indices.
  const std::vector<std::uint32_t>& generator_indices() const { return gen_idx_; }

  std::optional<std::uint32_t> find(const Perm& p) const;
  std::uint32_t index_of(const Perm& p) const;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  /// g^-1 x g
  std::uint32_t conj(std::uint32_t x, std::uint32_t g) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint64_t element_order(std::uint32_t a) const { return orders_[a]; }
  std::uint64_t exponent() const;
  bool is_abelian() const;

 private:
  FiniteGroup() = default;

  std::string name_;
  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<std::uint32_t> gen_idx_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, std::uint32_t, PermHash> index_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::uint32_t> table_;  // order^2 product table for small groups
};

/// Subgroup of a FiniteGroup as a sorted set of element indices.
class Subgroup {
 public:
  Subgroup() = default;
  /// Indices need not be sorted; closure is the caller's responsibility
  /// (checked by is_closed()).
  Subgroup(GroupPtr parent, std::vector<std::uint32_t> indices);

  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);
  static Subgroup generated(GroupPtr parent, const std::vector<std::uint32_t>& gens);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<std::uint32_t>& indices() const { return indices_; }
  std::size_t order() const { return indices_.size(); }
  bool contains(std::uint32_t g) const { return member_[g]; }
  bool is_closed() const;

  /// A small generating set: greedy over indices() in increasing order.
  std::vector<std::uint32_t> generators() const;
  bool is_abelian() const;
  bool is_cyclic() const;
  std::uint64_t exponent() const;

  /// The subgroup as a standalone permutation group of the same degree.
  GroupPtr as_group(std::string name) const;

  bool operator==(const Subgroup& other) const { return indices_ == other.indices_; }

 private:
  GroupPtr parent_;
  std::vector<std::uint32_t> indices_;
  std::vector<bool> member_;
  mutable std::vector<std::uint32_t> gens_cache_;
};

struct ConjugacyClass {
  std::uint32_t representative = 0;   // least member index
  std::vector<std::uint32_t> members;  // sorted
  std::size_t size = 0;
  std::size_t centralizer_order = 0;
  /// nu_p(|C_G(x)|) once a prime is fixed, else -1.
  int defect = -1;
};

/// Classes sorted by size, then by least member index.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);
/// class_of[x] = index of the class containing x.
std::vector<std::uint32_t> class_lookup(const std::vector<ConjugacyClass>& classes, std::size_t order);

Subgroup centralizer(const GroupPtr& g, std::uint32_t x);
/// C_G(H): elements commuting with every element of h.
Subgroup centralizer(const GroupPtr& g, const Subgroup& h);
/// Centralizer of h inside the subgroup k.
Subgroup centralizer_in(const Subgroup& k, const Subgroup& h);
Subgroup normalizer(const GroupPtr& g, const Subgroup& h);
Subgroup normalizer_in(const Subgroup& k, const Subgroup& h);
Subgroup center(const Subgroup& h);
/// Subgroup generated by the union of a and b.
Subgroup join(const Subgroup& a, const Subgroup& b);

/// Sylow p-subgroup of h: start from the least nontrivial p-element and keep
/// adjoining the least p-element that normalizes the current subgroup.
Subgroup sylow_subgroup(const Subgroup& h, std::uint32_t p);
Subgroup sylow_subgroup(const GroupPtr& g, std::uint32_t p);

class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Invariant factors of an abelian p-group.
struct AbelianType {
  std::uint32_t p = 0;
  std::vector<std::uint32_t> exponents;  // a_1 >= ... >= a_r >= 1
  std::uint32_t m() const { return exponents.empty() ? 0 : exponents.front(); }
  std::uint32_t rank() const { return static_cast<std::uint32_t>(exponents.size()); }
  std::vector<std::uint64_t> factors() const;
  bool elementary() const { return m() <= 1; }
  std::string to_string() const;
};

AbelianType abelian_type(const Subgroup& h, std::uint32_t p);

/// p-adic valuation.
int nu_p(std::uint64_t n, std::uint32_t p);
std::uint64_t ipow(std::uint64_t base, std::uint32_t e);

}  // namespace blockloewy
