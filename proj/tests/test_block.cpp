#include <doctest.h>

#include <algorithm>
#include <set>

#include "blockloewy/block_theory.hpp"
#include "blockloewy/catalog.hpp"
#include "oracles.hpp"

using namespace blockloewy;

namespace {

std::uint32_t p_regular_part(const FiniteGroup& g, std::uint32_t x, std::uint32_t p) {
  const std::uint64_t n = g.element_order(x);
  std::uint64_t pa = 1;
  while ((n / pa) % p == 0) pa *= p;
  const std::uint64_t m = n / pa;
  // u = 0 mod p^a, u = 1 mod m
  std::uint64_t u = 0;
  while (u % m != 1 % m) u += pa;
  return g.pow(x, u);
}

bool conjugate(const GroupPtr& g, const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return false;
  const std::set<std::uint32_t> target(b.indices().begin(), b.indices().end());
  for (std::uint32_t y = 0; y < g->order(); ++y) {
    bool ok = true;
    for (auto x : a.indices())
      if (!target.count(g->conj(x, y))) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

struct Expect {
  const char* spec;
  std::uint32_t p;
  int d;
  std::size_t e, k, l, ll;
};

}  // namespace

TEST_SUITE("block") {
  TEST_CASE("principal block invariants of small groups") {
    const std::vector<Expect> cases{
        {"S 3", 3, 1, 2, 3, 2, 2},   {"D 10", 5, 1, 2, 4, 2, 3},  {"D 14", 7, 1, 2, 5, 2, 4},
        {"SD 5 4 2", 5, 1, 4, 5, 4, 2}, {"C 9", 3, 2, 1, 9, 1, 9},  {"M 2 4", 2, 4, 1, 10, 1, 4},
        {"S 4", 3, 1, 2, 3, 2, 2},   {"C 4", 2, 2, 1, 4, 1, 4}};
    for (const auto& c : cases) {
      CAPTURE(c.spec);
      CAPTURE(c.p);
      const auto ctx = build_ctx(parse_group_spec(c.spec), c.p);
      const auto bs = analyze_blocks(ctx);
      const Block& b = bs.front();
      CHECK(b.defect == c.d);
      CHECK(b.inertial_index == c.e);
      CHECK(b.k == c.k);
      REQUIRE(b.l);
      CHECK(*b.l == c.l);
      CHECK(b.loewy().loewy_length == c.ll);
    }
  }

  TEST_CASE("S3 at 3 has codimensions 1 and 2") {
    const auto bs = analyze_blocks(build_ctx(symmetric(3), 3));
    REQUIRE(bs.size() == 1);
    CHECK(bs[0].loewy().codims == std::vector<std::size_t>{1, 2});
  }

  TEST_CASE("blocks partition the classes and the p-regular classes") {
    for (const auto& e : catalog(60, false)) {
      for (auto p : e.primes) {
        CAPTURE(e.spec);
        CAPTURE(p);
        const auto ctx = build_ctx(parse_group_spec(e.spec), p);
        const auto bs = analyze_blocks(ctx);
        std::size_t ksum = 0, lsum = 0;
        Vec unit = ctx.center.zero();
        for (const auto& b : bs) {
          ksum += b.k;
          REQUIRE(b.l);
          lsum += *b.l;
          unit = ctx.center.add(unit, b.idempotent);
          CHECK(b.k == b.zb.algebra.dim());
          CHECK(*b.l <= b.k);
          CHECK(b.inertial_index % p != 0);
          CHECK(b.root_count * b.inertial->order() == b.normalizer->order());
          CHECK(nu_p(b.defect_group->order(), p) == b.defect);
        }
        CHECK(unit == ctx.center.unit());
        CHECK(ksum == ctx.class_count());
        CHECK(lsum == ctx.p_regular_class_count());
        // principal block has lambda = augmentation
        for (std::size_t i = 0; i < ctx.class_count(); ++i)
          CHECK(bs[0].central_character[i] == ctx.field->from_int(static_cast<std::int64_t>(ctx.classes[i].size)));
      }
    }
  }

  TEST_CASE("Reynolds ideal is spanned by p-regular section sums") {
    for (const char* spec : {"S 3", "S 4", "D 12", "SD 5 4 2", "Ab 2 6"}) {
      for (std::uint32_t p : {2u, 3u, 5u}) {
        auto g = parse_group_spec(spec);
        if (g->order() % p) continue;
        CAPTURE(spec);
        CAPTURE(p);
        const auto ctx = build_ctx(g, p);
        const Subspace r = reynolds_ideal(ctx);
        std::vector<Vec> sections;
        std::vector<int> section_of(ctx.class_count(), -1);
        std::vector<std::uint32_t> reg_class;
        for (std::size_t i = 0; i < ctx.class_count(); ++i) {
          const std::uint32_t c = ctx.class_of[p_regular_part(*g, ctx.classes[i].representative, p)];
          auto it = std::find(reg_class.begin(), reg_class.end(), c);
          if (it == reg_class.end()) {
            reg_class.push_back(c);
            sections.push_back(ctx.center.zero());
            it = reg_class.end() - 1;
          }
          sections[static_cast<std::size_t>(it - reg_class.begin())][i] = 1;
        }
        const Subspace s = Subspace::span(ctx.field, ctx.class_count(), sections);
        CHECK(s.dim() == ctx.p_regular_class_count());
        CHECK(r.dim() == s.dim());
        CHECK(r.intersect(s).dim() == s.dim());
      }
    }
  }

  TEST_CASE("defect groups from different defect classes are conjugate") {
    for (const char* spec : {"S 4", "S 5", "D 24", "SD 7 6 3", "M 2 4"}) {
      auto g = parse_group_spec(spec);
      for (std::uint32_t p : {2u, 3u}) {
        if (g->order() % p) continue;
        const auto ctx = build_ctx(g, p);
        auto bs = blocks(ctx);
        for (auto& b : bs) {
          block_defect(ctx, b);
          const Subgroup d = defect_group(ctx, b);
          CHECK(static_cast<int>(nu_p(d.order(), p)) == b.defect);
          for (auto ci : b.defect_classes) {
            const Subgroup c = centralizer(g, ctx.classes[ci].representative);
            CHECK(conjugate(g, d, sylow_subgroup(c, p)));
          }
        }
      }
    }
  }

  TEST_CASE("Brauer homomorphism on S3") {
    auto g = symmetric(3);
    const auto ctx = build_ctx(g, 3);
    const Subgroup d = sylow_subgroup(g, 3);
    const BrauerMap br = brauer_hom(ctx, d);
    CHECK(br.h.order() == 3);
    CHECK(br.h_classes.size() == 3);
    CHECK(br.matrix.rows() == 3);
    CHECK(br.matrix.cols() == 3);
    // transpositions vanish, 1 and the 3-cycles map to class sums of C3
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) nonzero += br.matrix(i, j) != 0;
    CHECK(nonzero == 3);
  }

  TEST_CASE("splitting degree") {
    CHECK(splitting_degree(*cyclic(5), 2) == 4);
    CHECK(splitting_degree(*symmetric(3), 3) == 1);
    CHECK(splitting_degree(*cyclic(7), 2) == 3);
    const auto ctx = build_ctx(cyclic(5), 2);
    CHECK(ctx.s == 4);
    CHECK(analyze_blocks(ctx).size() == 5);
  }
}
