#include <doctest.h>

#include "blockloewy/gfield.hpp"
#include "oracles.hpp"

using namespace blockloewy;

namespace {

// Monic polynomial product over F_p, low degree first.
std::vector<std::uint32_t> poly_mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                    std::uint32_t p) {
  std::vector<std::uint32_t> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return c;
}

std::vector<std::vector<std::uint32_t>> monic_of_degree(std::uint32_t p, std::size_t deg) {
  std::vector<std::vector<std::uint32_t>> out;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < deg; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<std::uint32_t> f(deg + 1, 0);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < deg; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[deg] = 1;
    out.push_back(f);
  }
  return out;
}

// Smallest monic irreducible: not a product of two monic polynomials of lower degree.
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::size_t deg) {
  for (const auto& f : monic_of_degree(p, deg)) {
    bool reducible = false;
    for (std::size_t d = 1; d <= deg / 2 && !reducible; ++d)
      for (const auto& g : monic_of_degree(p, d))
        for (const auto& h : monic_of_degree(p, deg - d))
          if (poly_mul(g, h, p) == f) reducible = true;
    if (!reducible) return f;
  }
  return {};
}

}  // namespace

TEST_SUITE("field") {
  TEST_CASE("prime field arithmetic") {
    auto f = make_field(7);
    CHECK(f->q() == 7);
    CHECK(f->mul(3, 5) == 1);
    CHECK(f->inv(3) == 5);
    CHECK(f->neg(2) == 5);
    CHECK(f->from_int(-1) == 6);
    CHECK(f->from_int(23) == 2);
    CHECK(f->pow(3, 6) == 1);
  }

  TEST_CASE("modulus is the smallest irreducible") {
    for (auto [p, s] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {5, 2}, {3, 3}}) {
      CAPTURE(p);
      CAPTURE(s);
      auto f = make_field(p, s);
      CHECK(f->modulus() == smallest_irreducible(p, s));
    }
  }

  TEST_CASE("field axioms on small extension fields") {
    for (auto [p, s] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}}) {
      auto fp = make_field(p, s);
      const GField& f = *fp;
      const auto q = static_cast<Elem>(f.q());
      CAPTURE(f.name());
      for (Elem a = 0; a < q; ++a) {
        CHECK(f.add(a, 0) == a);
        CHECK(f.mul(a, 1) == a);
        CHECK(f.add(a, f.neg(a)) == 0);
        if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.pow(a, f.q()) == a);
        CHECK(f.frobenius(a, s) == a);
        CHECK(f.frobenius(a) == f.pow(a, p));
        CHECK(f.from_coords(f.coords(a)) == a);
        for (Elem b = 0; b < q; ++b) {
          CHECK(f.mul(a, b) == f.mul(b, a));
          CHECK(f.add(a, b) == f.add(b, a));
          for (Elem c = 0; c < q; c += 3) CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
      std::size_t order = 1;
      Elem g = f.primitive_element();
      for (Elem x = g; x != 1; x = f.mul(x, g)) ++order;
      CHECK(order == q - 1);
    }
  }

  TEST_CASE("large field without tables") {
    auto f = make_field(2, 22);
    const Elem a = 123457, b = 987651;
    CHECK(f->mul(a, f->inv(a)) == 1);
    CHECK(f->mul(f->mul(a, b), f->inv(b)) == a);
    CHECK(f->pow(a, f->q() - 1) == 1);
  }

  TEST_CASE("invalid parameters") {
    CHECK_THROWS_AS(make_field(4), std::invalid_argument);
    CHECK_THROWS_AS(make_field(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_field(3, 40), std::invalid_argument);
    CHECK(is_irreducible_mod_p({1, 1, 1}, 2));
    CHECK_FALSE(is_irreducible_mod_p({1, 0, 1}, 2));
  }
}
