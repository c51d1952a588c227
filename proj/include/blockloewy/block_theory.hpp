#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blockloewy/algebra.hpp"
#include "blockloewy/perm_group.hpp"

namespace blockloewy {

inline constexpr std::size_t kDefaultFullAlgebraCap = 600;

/// Order of p modulo the p'-part of exp(G). F_{p^s} then contains every
/// root of unity needed to split FG.
std::uint32_t splitting_degree(const FiniteGroup& g, std::uint32_t p);

struct GroupAlgebraCtx {
  GroupPtr group;
  std::uint32_t p = 0;
  std::uint32_t s = 1;
  FieldPtr field;
  /// Classes in conjugacy_classes() order with defect = nu_p(|C_G(x)|).
  std::vector<ConjugacyClass> classes;
  std::vector<std::uint32_t> class_of;
  /// Z(FG) on the class-sum basis over F_{p^s}, with integral lift.
  StructureAlgebra center;
  /// FG over F_p on the group-element basis, only when |G| <= full_algebra_cap.
  std::optional<StructureAlgebra> full;
  std::size_t full_algebra_cap = kDefaultFullAlgebraCap;

  std::size_t class_count() const { return classes.size(); }
  std::size_t p_regular_class_count() const;
};

/// Integer class multiplication constants a[(i * k + j) * k + l] =
/// #{(u, v) in C_i x C_j : u v = z_l} for a fixed z_l in C_l.
std::vector<std::int64_t> class_structure_constants(const FiniteGroup& g, const std::vector<ConjugacyClass>& classes,
                                                    const std::vector<std::uint32_t>& class_of);

/// Builds classes, Z(FG), and FG itself when allowed by the cap. field
/// defaults to F_{p^s} with s = splitting_degree.
GroupAlgebraCtx build_ctx(const GroupPtr& g, std::uint32_t p, std::size_t full_algebra_cap = kDefaultFullAlgebraCap,
                          FieldPtr field = nullptr);

struct Block {
  std::size_t index = 0;
  /// e_B in class-sum coordinates.
  Vec idempotent;
  /// lambda_B(C_i) for every class.
  Vec central_character;
  std::size_t k = 0;
  Corner zb;

  int defect = -1;
  std::vector<std::size_t> defect_classes;
  std::optional<Subgroup> defect_group;

  // Root block data over H = D C_G(D).
  std::optional<Subgroup> dc;
  std::optional<Subgroup> normalizer;
  std::optional<Subgroup> inertial;
  /// e_b in the class-sum coordinates of H, classes as in H.as_group().
  Vec root_idempotent;
  std::size_t root_count = 0;
  std::size_t inertial_index = 0;

  std::optional<std::size_t> l;
  /// "reynolds", "cyclic defect", "single block", or empty.
  std::string l_source;

  const LoewyProfile& loewy() const { return zb.algebra.loewy(); }
};

/// Primitive central idempotents of Z(FG) with central characters and
/// corners. The principal block (lambda = augmentation) comes first, the
/// rest keep the order of the idempotent computation.
std::vector<Block> blocks(const GroupAlgebraCtx& ctx);

/// d = min{d(C) : lambda_B(C) != 0}; records the classes attaining it.
/// Throws std::logic_error when max{d(C) : e_B has nonzero coefficient on C}
/// disagrees.
int block_defect(const GroupAlgebraCtx& ctx, Block& b);

/// Sylow p-subgroup of C_G(x), x the least representative of the first
/// defect class.
Subgroup defect_group(const GroupAlgebraCtx& ctx, Block& b);

/// Br_D on class sums: column i holds the image of C_i in the class-sum
/// basis of H = D C_G(D).
struct BrauerMap {
  Subgroup h;
  GroupPtr h_group;
  std::vector<ConjugacyClass> h_classes;
  /// parent element index -> class of h, or -1 outside h.
  std::vector<std::int32_t> h_class_of;
  GFMatrix matrix;
};
BrauerMap brauer_hom(const GroupAlgebraCtx& ctx, const Subgroup& d);

/// Root b over D C_G(D) with lambda_b o Br_D = lambda_B, its stabilizer in
/// N_G(D), and e(B).
void root_block_and_inertia(const GroupAlgebraCtx& ctx, Block& b);

/// Reynolds ideal Z(FG) cap soc(FG) in class-sum coordinates, over ctx.field.
/// Requires ctx.full.
Subspace reynolds_ideal(const GroupAlgebraCtx& ctx);

/// l(B) = dim e_B R. Beyond the cap falls back to l = e(B) for cyclic D and
/// to the p-regular class count when there is a single block.
void l_of_block(const GroupAlgebraCtx& ctx, std::vector<Block>& all);

/// Every invariant above for every block.
std::vector<Block> analyze_blocks(const GroupAlgebraCtx& ctx);

}  // namespace blockloewy
