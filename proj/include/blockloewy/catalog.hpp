#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "blockloewy/perm_group.hpp"

namespace blockloewy {

GroupPtr cyclic(std::uint32_t n);
/// Dihedral group of the given order (order = 2n).
GroupPtr dihedral(std::uint32_t order);
GroupPtr symmetric(std::uint32_t n);
/// M_{p^d} = <x, y | x^(p^(d-1)) = y^p = 1, y^-1 x y = x^(1 + p^(d-2))>,
/// realized by its right regular representation on normal forms x^i y^j.
GroupPtr modular_group(std::uint32_t p, std::uint32_t d);
/// C_n : C_m acting by x -> x^a, realized as affine maps of Z/n.
GroupPtr semidirect_cyclic(std::uint32_t n, std::uint32_t m, std::uint32_t a);
GroupPtr abelian(const std::vector<std::uint32_t>& cyclic_orders);
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, std::string name = {});

/// P : H for an action given on the generators of H. action[i] is the
/// automorphism of P (as a permutation of P's element indices) induced by
/// the i-th generator of H. Realized by the right regular representation on
/// pairs (x, h) with (x1, h1)(x2, h2) = (x1 * h1(x2), h1 h2). Throws if the
/// generator images do not extend to a homomorphism H -> Aut(P).
GroupPtr semidirect(const GroupPtr& p_group, const GroupPtr& h_group,
                    const std::vector<std::vector<std::uint32_t>>& action, std::string name = {});

/// The Frobenius group P : (H x X) with P = F_p^2, H the double cover of S4
/// acting freely through SL(2, p), X the scalars of order (p-1)/22.
struct FrobeniusHK {
  std::uint32_t p = 0;
  std::uint64_t x = 0;
  GroupPtr group;        // acting on the p^2 points of F_p^2
  GroupPtr complement;   // H x X, same degree, fixes the zero vector
  std::string cover;     // which double cover of S4 was found
  std::map<std::uint64_t, std::uint64_t> h_order_census;  // element order -> count in H
  std::uint64_t h_involutions = 0;
};

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requires p = 23 (mod 264). Throws ConstructionError if no free action is
/// found.
FrobeniusHK frobenius_hk(std::uint32_t p, std::size_t max_order = kDefaultMaxOrder);
GroupPtr frobenius_hk_group(std::uint32_t p, std::size_t max_order = kDefaultMaxOrder);

class SpecParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Group spec strings:
///   "C n"        cyclic of order n
///   "D n"        dihedral of order n (n even)
///   "S n"        symmetric group on n points
///   "M p d"      modular p-group of order p^d (d >= 3)
///   "SD n m a"   C_n : C_m, generator acting by x -> x^a
///   "Ab n1 n2 ..."  C_n1 x C_n2 x ...
///   "FHK p"      the Frobenius group P : (H x X) for p = 23 mod 264
///   "perm:<degree>:<gen>;<gen>;..."  0-based cycle notation, e.g.
///                "perm:4:(0,1,2,3);(0,2)"; "()" is the identity.
GroupPtr parse_group_spec(const std::string& spec, std::size_t max_order = kDefaultMaxOrder);

struct CatalogEntry {
  std::string spec;
  std::string name;
  std::uint64_t order = 0;
  bool large = false;
  /// Primes to analyze: every prime divisor of the order, except for the
  /// large entries, which are analyzed at their defining prime only.
  std::vector<std::uint32_t> primes;
};

/// Built-in catalog, sorted by order then spec. Entries above max_order are
/// dropped; the 25 392-element Frobenius group only appears when
/// include_large is set.
std::vector<CatalogEntry> catalog(std::uint64_t max_order, bool include_large);

}  // namespace blockloewy
