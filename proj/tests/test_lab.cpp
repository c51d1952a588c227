#include <doctest.h>

#include "blockloewy/catalog.hpp"
#include "blockloewy/loewy_lab.hpp"

using namespace blockloewy;

namespace {

AbelianType type_of(std::uint32_t p, std::vector<std::uint32_t> exps) {
  AbelianType t;
  t.p = p;
  t.exponents = std::move(exps);
  return t;
}

Instance instance(const std::string& spec, std::uint32_t p) { return analyze_instance(spec, parse_group_spec(spec), p); }

}  // namespace

TEST_SUITE("lab") {
  TEST_CASE("lambda of abelian types") {
    CHECK(lambda_of_abelian_type(type_of(3, {1})) == 3);
    CHECK(lambda_of_abelian_type(type_of(2, {2})) == 4);
    CHECK(lambda_of_abelian_type(type_of(2, {1, 1})) == 3);
    CHECK(lambda_of_abelian_type(type_of(3, {2, 1})) == 11);
    CHECK(lambda_of_abelian_type(type_of(5, {})) == 1);
  }

  TEST_CASE("lambda formula equals the Loewy length of the group algebra") {
    for (const char* spec : {"C 8", "Ab 2 4", "Ab 2 2 2", "C 9", "Ab 3 3", "Ab 4 4", "C 25", "Ab 3 9"}) {
      auto g = parse_group_spec(spec);
      const std::uint32_t p = g->order() % 2 == 0 ? 2 : g->order() % 3 == 0 ? 3 : 5;
      CAPTURE(spec);
      const Subgroup whole = Subgroup::whole(g);
      const auto fpa = fixed_point_algebra(whole, Subgroup::trivial(g), p);
      REQUIRE(fpa.lambda_direct);
      CHECK(*fpa.lambda_direct == fpa.lambda_formula);
      CHECK(fpa.algebra.dim() == g->order());
    }
  }

  TEST_CASE("fixed point algebra of S3 at 3") {
    auto g = symmetric(3);
    const Subgroup d = sylow_subgroup(g, 3);
    const auto fpa = fixed_point_algebra(d, normalizer(g, d), 3);
    CHECK(fpa.orbits.size() == 2);
    CHECK(fpa.algebra.dim() == 2);
    CHECK(fpa.algebra.loewy().loewy_length == 2);
    const auto w = witness_element(fpa, 3);
    CHECK(w.m == 1);
    CHECK(w.t == 1);
    CHECK(w.in_radical);
    CHECK(w.identity_coeff == 2);
    CHECK(w.expected_identity_coeff == 2);
  }

  TEST_CASE("witness on a cyclic group of order 9") {
    auto g = cyclic(9);
    const Subgroup whole = Subgroup::whole(g);
    const auto fpa = fixed_point_algebra(whole, Subgroup::trivial(g), 3);
    const auto w = witness_element(fpa, 3);
    CHECK(w.m == 2);
    CHECK(w.t == 4);
    CHECK(w.identity_coeff == 1);
    CHECK(fpa.algebra.loewy().loewy_length >= w.t + 1);
  }

  TEST_CASE("checks on small instances") {
    const auto s3 = instance("S 3", 3);
    CHECK(check_prop1(s3, 0).verdict == Verdict::pass);
    CHECK(check_thm2(s3, 0).verdict == Verdict::pass);
    CHECK(check_kks(s3, 0).verdict == Verdict::pass);
    CHECK(check_thm4(s3, 0).verdict == Verdict::pass);
    CHECK(check_cor5(s3, 0).verdict == Verdict::pass);
    CHECK(check_okuyama(s3, 0).verdict == Verdict::pass);
    CHECK(check_gamma_decomposition(s3).verdict == Verdict::pass);
    CHECK(check_mpd(s3, 0).verdict == Verdict::skipped);

    const auto m16 = instance("M 2 4", 2);
    const auto mpd = check_mpd(m16, 0);
    CHECK(mpd.verdict == Verdict::pass);
    CHECK(mpd.get("LL") == 4);
    CHECK(mpd.get("(p^(d-1)+p-2)/(p-1)") == 8);
    const auto thm4 = check_thm4(m16, 0);
    CHECK(thm4.verdict == Verdict::pass);
    CHECK(thm4.get("bound") == thm4.get("LL"));

    const auto c4 = instance("C 4", 2);
    const auto t = check_thm4(c4, 0);
    CHECK(t.get("bound") == 4);
    CHECK(t.get("LL") == 4);
  }

  TEST_CASE("proposition conditions on cyclic defect") {
    // e = 1 gives a uniserial center with c(2) = 1
    const auto c9 = instance("C 9", 3);
    const auto r = check_prop1(c9, 0);
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.get("cond1") == 1);
    CHECK(r.get("cond2") == 1);
    CHECK(r.get("cond3") == 1);
    // e = 2 breaks all three
    const auto d10 = instance("D 10", 5);
    const auto q = check_prop1(d10, 0);
    CHECK(q.verdict == Verdict::pass);
    CHECK(q.get("cond1") == 0);
    CHECK(q.get("cond3") == 0);
  }

  TEST_CASE("verdict strings and report values") {
    CHECK(to_string(Verdict::pass) == "pass");
    CHECK(to_string(Verdict::fail) == "fail");
    CHECK(to_string(Verdict::skipped) == "skipped");
    VerificationReport r;
    r.set("x", 5);
    CHECK(r.get("x") == 5);
    CHECK_FALSE(r.get("y"));
  }

  TEST_CASE("modular p-groups") {
    CHECK(is_modular_p_group(Subgroup::whole(modular_group(2, 4)), 2));
    CHECK(is_modular_p_group(Subgroup::whole(modular_group(3, 4)), 3));
    CHECK_FALSE(is_modular_p_group(Subgroup::whole(dihedral(16)), 2));
    CHECK_FALSE(is_modular_p_group(Subgroup::whole(abelian({2, 8})), 2));
  }
}
