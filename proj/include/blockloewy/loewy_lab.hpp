#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blockloewy/algebra.hpp"
#include "blockloewy/block_theory.hpp"
#include "blockloewy/perm_group.hpp"

namespace blockloewy {

/// F[Z(D)]^N on orbit sums, over the prime field.
struct FixedPointAlgebra {
  StructureAlgebra algebra;
  Subgroup zd;
  AbelianType zd_type;
  /// Orbits of N on Z(D) as parent element indices; orbits[0] = {1}.
  std::vector<std::vector<std::uint32_t>> orbits;
  /// LL(F[Z(D)]) computed directly, when |Z(D)| is within the cap.
  std::optional<std::size_t> lambda_direct;
  std::size_t lambda_formula = 0;

  std::size_t lambda() const { return lambda_direct.value_or(lambda_formula); }
};

inline constexpr std::size_t kDefaultLambdaDirectCap = 256;

/// p^a1 + ... + p^ar - r + 1
std::size_t lambda_of_abelian_type(const AbelianType& type);

/// zd must be abelian and normalized by n.
FixedPointAlgebra fixed_point_algebra(const Subgroup& zd, const Subgroup& n, std::uint32_t p,
                                      std::size_t lambda_direct_cap = kDefaultLambdaDirectCap);

struct WitnessElement {
  std::size_t orbit = 0;  // index into FixedPointAlgebra::orbits
  std::uint32_t m = 0;
  std::uint64_t t = 0;    // 1 + p + ... + p^(m-1)
  Vec a;                  // orbit-sum coordinates
  Vec a_t;
  Elem identity_coeff = 0;
  Elem expected_identity_coeff = 0;  // |O|^m mod p
  bool in_radical = false;
};

/// a = |O| 1 - sum of O for the orbit of the least-index element of maximal
/// order in Z(D). Requires m >= 1.
WitnessElement witness_element(const FixedPointAlgebra& fpa, std::uint32_t p);

struct LabOptions {
  std::size_t full_algebra_cap = kDefaultFullAlgebraCap;
  std::size_t lambda_direct_cap = kDefaultLambdaDirectCap;
};

struct AnalyzedBlock {
  Block block;
  FixedPointAlgebra fpa;
  std::optional<WitnessElement> witness;
  bool defect_cyclic = false;
};

struct Instance {
  std::string spec;
  std::uint32_t p = 0;
  GroupAlgebraCtx ctx;
  std::vector<AnalyzedBlock> blocks;
};

Instance analyze_instance(const std::string& spec, const GroupPtr& g, std::uint32_t p, const LabOptions& opts = {});

enum class Verdict { pass, fail, skipped };
std::string to_string(Verdict v);

struct VerificationReport {
  std::string claim;
  std::string group;
  std::uint32_t p = 0;
  std::optional<std::size_t> block;
  std::vector<std::pair<std::string, std::int64_t>> values;
  Verdict verdict = Verdict::skipped;
  std::string reason;
  /// Failures are reported but do not fail the run.
  bool report_only = false;

  void set(const std::string& key, std::int64_t v) { values.emplace_back(key, v); }
  std::optional<std::int64_t> get(const std::string& key) const;
  bool operator==(const VerificationReport&) const = default;
};

VerificationReport check_prop1(const Instance& in, std::size_t block);
VerificationReport check_thm2(const Instance& in, std::size_t block);
VerificationReport check_kks(const Instance& in, std::size_t block);
VerificationReport check_thm4(const Instance& in, std::size_t block);
VerificationReport check_cor5(const Instance& in, std::size_t block);
VerificationReport check_okuyama(const Instance& in, std::size_t block);
VerificationReport check_hk_scan(const Instance& in, std::size_t block);
VerificationReport check_remark_conditions(const Instance& in, std::size_t block);
/// Blocks whose defect group is M_{p^d} with d >= 4.
VerificationReport check_mpd(const Instance& in, std::size_t block);
/// Whole-group check for G = D : I with D a normal cyclic Sylow p-subgroup
/// and C_G(D) = D.
VerificationReport check_gamma_decomposition(const Instance& in);

/// k(G) and l(G) for the Frobenius group of frobenius_hk(p), by orbit
/// counting on P. brute_force also counts the classes of G directly.
VerificationReport check_frobenius_example(std::uint32_t p, bool brute_force);

/// Every per-block check for every block, then the group-level checks.
std::vector<VerificationReport> run_checks(const Instance& in);

bool is_modular_p_group(const Subgroup& d, std::uint32_t p);

}  // namespace blockloewy
