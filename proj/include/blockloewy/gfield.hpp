#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace blockloewy {

/// Finite field F_{p^s} = F_p[x]/(modulus).
///
/// An element is stored as a single integer: the coefficient vector
/// (c_0, ..., c_{s-1}) of its polynomial representative read as the base-p
/// number c_0 + c_1 p + ... + c_{s-1} p^{s-1}. Elements of the prime
/// subfield are therefore the integers 0..p-1, and 0 and 1 are the field's
/// zero and one for every s.
///
/// Multiplication uses log/antilog tables when q <= 2^20 and schoolbook
/// polynomial arithmetic otherwise. Fields are immutable and shared through
/// FieldPtr.
class GField {
 public:
  using Elem = std::uint32_t;

  /// Builds F_{p^s} with the lexicographically smallest monic irreducible
  /// modulus of degree s (smallest base-p encoding of the low coefficients).
  GField(std::uint32_t p, std::uint32_t s);

  std::uint32_t p() const { return p_; }
  std::uint32_t s() const { return s_; }
  std::uint64_t q() const { return q_; }
  bool is_prime_field() const { return s_ == 1; }

  /// Monic modulus, low degree first, length s+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  static constexpr Elem zero() { return 0; }
  static constexpr Elem one() { return 1; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// a^(p^k)
  Elem frobenius(Elem a, std::uint32_t k = 1) const;

  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const;

  /// F_p-coordinates of a in the polynomial basis 1, x, ..., x^{s-1}.
  std::vector<std::uint32_t> coords(Elem a) const;
  Elem from_coords(std::span<const std::uint32_t> c) const;

  /// dst[i] += f * src[i] for i < n.
  void axpy(Elem* dst, const Elem* src, Elem f, std::size_t n) const;
  /// v[i] *= f for i < n.
  void scale(Elem* v, Elem f, std::size_t n) const;

  /// A generator of the multiplicative group (smallest encoding).
  Elem primitive_element() const { return generator_; }

  std::string to_string(Elem a) const;
  std::string name() const;

 private:
  Elem poly_mul(Elem a, Elem b) const;

  std::uint32_t p_;
  std::uint32_t s_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> pow_p_;  // p^i for i <= s
  bool tables_ = false;
  std::vector<Elem> exp_;          // exp_[i] = g^i, i < 2(q-1)
  std::vector<std::uint32_t> log_;  // log_[a] for a != 0
  std::vector<Elem> add_table_;     // q*q, only for small odd extension fields
  Elem generator_ = 1;
};

using FieldPtr = std::shared_ptr<const GField>;

/// make_field(p, s): shared F_{p^s}. Throws std::invalid_argument for
/// non-prime p or s == 0.
FieldPtr make_field(std::uint32_t p, std::uint32_t s = 1);

bool is_prime(std::uint64_t n);

/// Monic irreducibility over F_p by trial division; coefficients low first.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace blockloewy
