#include <doctest.h>

#include "blockloewy/catalog.hpp"
#include "blockloewy/perm_group.hpp"
#include "oracles.hpp"

using namespace blockloewy;

namespace {

std::multiset<std::size_t> class_sizes(const FiniteGroup& g) {
  std::multiset<std::size_t> out;
  for (const auto& c : conjugacy_classes(g)) out.insert(c.size);
  return out;
}

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("right action convention") {
    const Perm a = Perm::from_cycles(3, {{0, 1}});
    const Perm b = Perm::from_cycles(3, {{1, 2}});
    const Perm ab = a * b;
    CHECK(ab[0] == b[a[0]]);
    CHECK(ab.to_cycle_string() == "(0,2,1)");
    CHECK((a * a).is_identity());
    CHECK(ab.order() == 3);
    CHECK_THROWS(Perm(std::vector<std::uint32_t>{0, 0, 1}));
  }

  TEST_CASE("orders and classes of catalog groups") {
    CHECK(symmetric(4)->order() == 24);
    CHECK(symmetric(5)->order() == 120);
    CHECK(dihedral(10)->order() == 10);
    CHECK(modular_group(2, 4)->order() == 16);
    CHECK(modular_group(3, 4)->order() == 81);
    CHECK(class_sizes(*dihedral(10)) == std::multiset<std::size_t>{1, 2, 2, 5});
    CHECK(conjugacy_classes(*modular_group(2, 4)).size() == 10);
    CHECK(conjugacy_classes(*symmetric(5)).size() == 7);
    for (const auto& e : catalog(60, false)) {
      CAPTURE(e.spec);
      auto g = parse_group_spec(e.spec);
      CHECK(g->order() == e.order);
      CHECK(class_sizes(*g) == oracle::class_sizes_naive(*g));
    }
  }

  TEST_CASE("classes are sorted and identity comes first") {
    auto g = symmetric(4);
    const auto cl = conjugacy_classes(*g);
    CHECK(cl.front().representative == 0);
    for (std::size_t i = 1; i < cl.size(); ++i) CHECK(cl[i - 1].size <= cl[i].size);
    for (const auto& c : cl) CHECK(c.size * c.centralizer_order == 24);
  }

  TEST_CASE("Sylow subgroups") {
    auto g = symmetric(4);
    const Subgroup s = sylow_subgroup(g, 2);
    CHECK(s.order() == 8);
    CHECK(s.is_closed());
    // every element is a 2-element
    for (auto x : s.indices()) CHECK(8 % g->element_order(x) == 0);
    CHECK(sylow_subgroup(g, 3).order() == 3);
    CHECK(sylow_subgroup(symmetric(5), 5).is_cyclic());
    CHECK(sylow_subgroup(parse_group_spec("SD 5 4 2"), 2).order() == 4);
  }

  TEST_CASE("centralizers and normalizers against brute force") {
    auto g = parse_group_spec("SD 7 6 3");
    for (std::uint32_t x = 0; x < g->order(); x += 5) {
      const Subgroup c = centralizer(g, x);
      std::size_t count = 0;
      for (std::uint32_t y = 0; y < g->order(); ++y)
        if (g->mul(x, y) == g->mul(y, x)) ++count;
      CHECK(c.order() == count);
    }
    const Subgroup p = sylow_subgroup(g, 7);
    CHECK(normalizer(g, p).order() == 42);
    CHECK(centralizer(g, p).order() == 7);
    CHECK(center(Subgroup::whole(modular_group(2, 4))).order() == 4);
  }

  TEST_CASE("abelian type") {
    auto g = abelian({2, 8});
    const auto t = abelian_type(Subgroup::whole(g), 2);
    CHECK(t.exponents == std::vector<std::uint32_t>{3, 1});
    CHECK(t.m() == 3);
    CHECK(t.rank() == 2);
    CHECK_FALSE(t.elementary());
    CHECK(abelian_type(Subgroup::whole(abelian({3, 3})), 3).elementary());
    CHECK_THROWS_AS(abelian_type(Subgroup::whole(symmetric(3)), 3), ContractViolation);
  }

  TEST_CASE("group order cap") {
    CHECK_THROWS_AS(parse_group_spec("S 6", 100), GroupTooLarge);
    CHECK_THROWS_AS(parse_group_spec("C 0"), SpecParseError);
    CHECK_THROWS_AS(parse_group_spec("nonsense"), SpecParseError);
    CHECK(parse_group_spec("perm:4:(0,1,2,3);(0,2)")->order() == 8);
  }

  TEST_CASE("modular group presentation") {
    auto g = modular_group(2, 4);
    CHECK(g->exponent() == 8);
    CHECK_FALSE(g->is_abelian());
    auto m = modular_group(3, 4);
    CHECK(m->exponent() == 27);
    CHECK(center(Subgroup::whole(m)).order() == 9);
  }
}
