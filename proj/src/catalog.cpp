#include "blockloewy/catalog.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "blockloewy/gfield.hpp"

namespace blockloewy {

namespace {

std::uint64_t mult_order(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 1;
  std::uint64_t x = a % n;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (x == 1) return k;
    x = x * a % n;
  }
  return 0;
}

}  // namespace

GroupPtr cyclic(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("cyclic: order must be positive");
  std::vector<Perm> gens;
  if (n > 1) {
    std::vector<std::uint32_t> im(n);
    for (std::uint32_t i = 0; i < n; ++i) im[i] = (i + 1) % n;
    gens.emplace_back(std::move(im));
  }
  return FiniteGroup::from_generators(n, std::move(gens), "C" + std::to_string(n));
}

GroupPtr dihedral(std::uint32_t order) {
  if (order < 2 || order % 2 != 0) throw std::invalid_argument("dihedral: order must be even and >= 2");
  const std::uint32_t n = order / 2;
  const std::string name = "D" + std::to_string(order);
  if (n == 1) return FiniteGroup::from_generators(2, {Perm::from_cycles(2, {{0, 1}})}, name);
  if (n == 2)
    return FiniteGroup::from_generators(
        4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})}, name);
  std::vector<std::uint32_t> rot(n), ref(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    ref[i] = (n - i) % n;
  }
  return FiniteGroup::from_generators(n, {Perm(rot), Perm(ref)}, name);
}

GroupPtr symmetric(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("symmetric: degree must be positive");
  std::vector<Perm> gens;
  if (n >= 2) {
    std::vector<std::uint32_t> cyc(n);
    for (std::uint32_t i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    gens.emplace_back(std::move(cyc));
    if (n > 2) gens.push_back(Perm::from_cycles(n, {{0, 1}}));
  }
  return FiniteGroup::from_generators(n, std::move(gens), "S" + std::to_string(n));
}

GroupPtr modular_group(std::uint32_t p, std::uint32_t d) {
  if (!is_prime(p)) throw std::invalid_argument("modular_group: p must be prime");
  if (d < 3) throw std::invalid_argument("modular_group: requires d >= 3");
  const std::uint64_t nx = ipow(p, d - 1);  // order of x
  const std::uint64_t r = 1 + ipow(p, d - 2);
  // s = r^-1 mod nx; y^j x^k = x^(k s^j) y^j.
  std::uint64_t s = 1;
  for (std::uint64_t t = 1; t < nx; ++t) {
    if (r * t % nx == 1) {
      s = t;
      break;
    }
  }
  std::vector<std::uint64_t> s_pow(p);
  s_pow[0] = 1;
  for (std::uint32_t j = 1; j < p; ++j) s_pow[j] = s_pow[j - 1] * s % nx;
  const std::size_t degree = static_cast<std::size_t>(nx * p);
  auto index = [&](std::uint64_t i, std::uint64_t j) { return static_cast<std::uint32_t>(i * p + j); };
  auto right_mult = [&](std::uint64_t k, std::uint64_t l) {
    std::vector<std::uint32_t> im(degree);
    for (std::uint64_t i = 0; i < nx; ++i)
      for (std::uint64_t j = 0; j < p; ++j) im[index(i, j)] = index((i + k * s_pow[j]) % nx, (j + l) % p);
    return Perm(std::move(im));
  };
  return FiniteGroup::from_generators(degree, {right_mult(1, 0), right_mult(0, 1)},
                                      "M" + std::to_string(ipow(p, d)), std::max<std::size_t>(degree, 1));
}

GroupPtr semidirect_cyclic(std::uint32_t n, std::uint32_t m, std::uint32_t a) {
  if (n < 2 || m < 1) throw std::invalid_argument("semidirect_cyclic: need n >= 2, m >= 1");
  if (std::gcd(a, n) != 1 || mult_order(a, n) != m)
    throw std::invalid_argument("semidirect_cyclic: a must have multiplicative order exactly m mod n");
  std::vector<std::uint32_t> t(n), u(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    t[i] = (i + 1) % n;
    u[i] = static_cast<std::uint32_t>(std::uint64_t{a} * i % n);
  }
  std::vector<Perm> gens{Perm(t)};
  if (m > 1) gens.emplace_back(u);
  return FiniteGroup::from_generators(n, std::move(gens), "C" + std::to_string(n) + ":C" + std::to_string(m));
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, std::string name) {
  const std::size_t da = a->degree();
  const std::size_t db = b->degree();
  std::vector<Perm> gens;
  for (const auto& g : a->generators()) {
    std::vector<std::uint32_t> im(da + db);
    for (std::size_t i = 0; i < da; ++i) im[i] = g[i];
    for (std::size_t i = 0; i < db; ++i) im[da + i] = static_cast<std::uint32_t>(da + i);
    gens.emplace_back(std::move(im));
  }
  for (const auto& g : b->generators()) {
    std::vector<std::uint32_t> im(da + db);
    for (std::size_t i = 0; i < da; ++i) im[i] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < db; ++i) im[da + i] = static_cast<std::uint32_t>(da + g[i]);
    gens.emplace_back(std::move(im));
  }
  if (name.empty()) name = a->name() + "x" + b->name();
  return FiniteGroup::from_generators(da + db, std::move(gens), std::move(name));
}

GroupPtr abelian(const std::vector<std::uint32_t>& cyclic_orders) {
  if (cyclic_orders.empty()) return cyclic(1);
  GroupPtr g = cyclic(cyclic_orders.front());
  for (std::size_t i = 1; i < cyclic_orders.size(); ++i) g = direct_product(g, cyclic(cyclic_orders[i]));
  return g;
}

GroupPtr semidirect(const GroupPtr& pg, const GroupPtr& hg, const std::vector<std::vector<std::uint32_t>>& action,
                    std::string name) {
  const std::size_t np = pg->order();
  const std::size_t nh = hg->order();
  if (action.size() != hg->generators().size())
    throw std::invalid_argument("semidirect: one automorphism per generator of H is required");
  for (const auto& a : action) {
    if (a.size() != np) throw std::invalid_argument("semidirect: automorphism has wrong length");
    for (std::uint32_t x = 0; x < np; ++x)
      for (std::uint32_t y = 0; y < np; ++y)
        if (a[pg->mul(x, y)] != pg->mul(a[x], a[y]))
          throw std::invalid_argument("semidirect: action is not by automorphisms");
  }
  // phi[h] for every h, extended along the BFS numbering: phi[h g] = phi[h] o a_g.
  std::vector<std::vector<std::uint32_t>> phi(nh);
  phi[0].resize(np);
  std::iota(phi[0].begin(), phi[0].end(), 0u);
  const auto& hgens = hg->generator_indices();
  for (std::uint32_t h = 0; h < nh; ++h) {
    for (std::size_t i = 0; i < hgens.size(); ++i) {
      const auto hg_idx = hg->mul(h, hgens[i]);
      std::vector<std::uint32_t> composed(np);
      for (std::uint32_t x = 0; x < np; ++x) composed[x] = phi[h][action[i][x]];
      if (phi[hg_idx].empty()) {
        phi[hg_idx] = std::move(composed);
      }
    }
  }
  for (std::uint32_t h = 0; h < nh; ++h) {
    for (std::size_t i = 0; i < hgens.size(); ++i) {
      const auto hg_idx = hg->mul(h, hgens[i]);
      for (std::uint32_t x = 0; x < np; ++x)
        if (phi[hg_idx][x] != phi[h][action[i][x]])
          throw std::invalid_argument("semidirect: generator images do not define a homomorphism");
    }
  }
  const std::size_t degree = np * nh;
  auto idx = [&](std::uint32_t x, std::uint32_t h) { return static_cast<std::uint32_t>(x * nh + h); };
  auto right_mult = [&](std::uint32_t x2, std::uint32_t h2) {
    std::vector<std::uint32_t> im(degree);
    for (std::uint32_t x1 = 0; x1 < np; ++x1)
      for (std::uint32_t h1 = 0; h1 < nh; ++h1) im[idx(x1, h1)] = idx(pg->mul(x1, phi[h1][x2]), hg->mul(h1, h2));
    return Perm(std::move(im));
  };
  std::vector<Perm> gens;
  for (auto x : pg->generator_indices()) gens.push_back(right_mult(x, 0));
  for (auto h : hgens) gens.push_back(right_mult(0, h));
  if (name.empty()) name = pg->name() + ":" + hg->name();
  return FiniteGroup::from_generators(degree, std::move(gens), std::move(name), std::max<std::size_t>(degree, 1));
}

// ------------------------------------------------------------ Frobenius

namespace {

using Mat2 = std::array<std::uint64_t, 4>;  // row-major a b / c d

Mat2 mat_mul(const Mat2& a, const Mat2& b, std::uint64_t p) {
  return {(a[0] * b[0] + a[1] * b[2]) % p, (a[0] * b[1] + a[1] * b[3]) % p, (a[2] * b[0] + a[3] * b[2]) % p,
          (a[2] * b[1] + a[3] * b[3]) % p};
}

constexpr Mat2 kId{1, 0, 0, 1};

std::uint64_t mat_order(const Mat2& m, std::uint64_t p, std::uint64_t cap) {
  Mat2 x = m;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (x == kId) return k;
    x = mat_mul(x, m, p);
  }
  return 0;
}

// Closure of a generating set, or empty if it exceeds cap elements.
std::vector<Mat2> mat_closure(const std::vector<Mat2>& gens, std::uint64_t p, std::size_t cap) {
  std::vector<Mat2> elems{kId};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      const Mat2 h = mat_mul(elems[head], g, p);
      if (std::find(elems.begin(), elems.end(), h) == elems.end()) {
        if (elems.size() >= cap) return {};
        elems.push_back(h);
      }
    }
  }
  return elems;
}

bool acts_freely(const std::vector<Mat2>& elems, std::uint64_t p) {
  for (const auto& m : elems) {
    if (m == kId) continue;
    // m fixes a nonzero vector iff det(m - I) = 0.
    const std::uint64_t a = (m[0] + p - 1) % p, d = (m[3] + p - 1) % p;
    if ((a * d + p * p - m[1] * m[2] % p) % p == 0) return false;
  }
  return true;
}

Perm affine_perm(const Mat2& m, std::uint64_t tu, std::uint64_t tv, std::uint64_t p) {
  std::vector<std::uint32_t> im(p * p);
  for (std::uint64_t v = 0; v < p; ++v)
    for (std::uint64_t u = 0; u < p; ++u) {
      const std::uint64_t nu = (m[0] * u + m[1] * v + tu) % p;
      const std::uint64_t nv = (m[2] * u + m[3] * v + tv) % p;
      im[u + p * v] = static_cast<std::uint32_t>(nu + p * nv);
    }
  return Perm(std::move(im));
}

}  // namespace

FrobeniusHK frobenius_hk(std::uint32_t p, std::size_t max_order) {
  if (!is_prime(p) || p % 264 != 23) throw std::invalid_argument("frobenius_hk_group requires p = 23 (mod 264)");
  FrobeniusHK out;
  out.p = p;
  out.x = (p - 1) / 22;
  const std::uint64_t P = p;

  // Binary octahedral census; the other double cover of S4 (GL(2,3)) has
  // 13 involutions and so cannot act freely.
  const std::map<std::uint64_t, std::uint64_t> binary_octahedral{{1, 1}, {2, 1}, {3, 8}, {4, 18}, {6, 8}, {8, 12}};

  std::vector<Mat2> sl_order8, sl_order3;
  for (std::uint64_t a = 0; a < P; ++a)
    for (std::uint64_t b = 0; b < P; ++b)
      for (std::uint64_t c = 0; c < P; ++c)
        for (std::uint64_t d = 0; d < P; ++d) {
          if ((a * d + P * P - b * c) % P != 1) continue;
          const Mat2 m{a, b, c, d};
          const auto o = mat_order(m, P, 8);
          if (o == 8) sl_order8.push_back(m);
          if (o == 3) sl_order3.push_back(m);
        }

  std::vector<Mat2> h_elems;
  std::vector<Mat2> h_gens;
  for (const auto& a8 : sl_order8) {
    for (const auto& b3 : sl_order3) {
      auto elems = mat_closure({a8, b3}, P, 48);
      if (elems.size() != 48 || !acts_freely(elems, P)) continue;
      std::map<std::uint64_t, std::uint64_t> census;
      for (const auto& m : elems) ++census[mat_order(m, P, 48)];
      if (census != binary_octahedral) continue;
      h_elems = std::move(elems);
      h_gens = {a8, b3};
      out.h_order_census = std::move(census);
      break;
    }
    if (!h_elems.empty()) break;
  }
  if (h_elems.empty()) throw ConstructionError("no double cover of S4 acting freely on F_p^2 was found");
  out.h_involutions = out.h_order_census[2];
  out.cover = "binary octahedral 2.S4 (unique involution, quaternion Sylow 2-subgroup)";

  std::vector<Mat2> k_gens = h_gens;
  if (out.x > 1) {
    const auto fp = make_field(p, 1);
    const std::uint64_t lam = fp->pow(fp->primitive_element(), (P - 1) / out.x);
    k_gens.push_back({lam, 0, 0, lam});
  }
  const auto k_elems = mat_closure(k_gens, P, 48 * out.x);
  if (k_elems.size() != 48 * out.x || !acts_freely(k_elems, P))
    throw ConstructionError("H x X does not act freely on F_p^2");

  std::vector<Perm> k_perms;
  for (const auto& m : k_gens) k_perms.push_back(affine_perm(m, 0, 0, P));
  out.complement = FiniteGroup::from_generators(P * P, k_perms, "H x X", max_order);

  std::vector<Perm> g_perms{affine_perm(kId, 1, 0, P), affine_perm(kId, 0, 1, P)};
  for (const auto& k : k_perms) g_perms.push_back(k);
  out.group = FiniteGroup::from_generators(P * P, g_perms, "FHK(" + std::to_string(p) + ")", max_order);
  if (out.group->order() != P * P * 48 * out.x) throw ConstructionError("unexpected order for P : (H x X)");
  return out;
}

GroupPtr frobenius_hk_group(std::uint32_t p, std::size_t max_order) { return frobenius_hk(p, max_order).group; }

// --------------------------------------------------------- spec strings

namespace {

std::uint32_t parse_uint(const std::string& tok, const std::string& spec) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw SpecParseError("bad integer '" + tok + "' in group spec '" + spec + "'");
  const unsigned long v = std::stoul(tok);
  if (v > 0xffffffffUL) throw SpecParseError("integer out of range in group spec '" + spec + "'");
  return static_cast<std::uint32_t>(v);
}

Perm parse_cycle_gen(const std::string& text, std::size_t degree, const std::string& spec) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i == text.size()) throw SpecParseError("empty generator in '" + spec + "' (use '()' for the identity)");
  while (i < text.size()) {
    if (text[i] != '(') throw SpecParseError("expected '(' in generator '" + text + "'");
    ++i;
    std::vector<std::uint32_t> cyc;
    std::string tok;
    for (; i < text.size() && text[i] != ')'; ++i) {
      const char c = text[i];
      if (c == ',' || c == ' ') {
        if (!tok.empty()) cyc.push_back(parse_uint(tok, spec));
        tok.clear();
      } else {
        tok += c;
      }
    }
    if (i == text.size()) throw SpecParseError("unterminated cycle in generator '" + text + "'");
    if (!tok.empty()) cyc.push_back(parse_uint(tok, spec));
    ++i;
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  try {
    return Perm::from_cycles(degree, cycles);
  } catch (const std::invalid_argument& e) {
    throw SpecParseError(std::string(e.what()) + " in generator '" + text + "'");
  }
}

}  // namespace

GroupPtr parse_group_spec(const std::string& spec, std::size_t max_order) {
  if (spec.rfind("perm:", 0) == 0) {
    const auto second = spec.find(':', 5);
    if (second == std::string::npos) throw SpecParseError("perm spec needs 'perm:<degree>:<gens>'");
    const std::uint32_t degree = parse_uint(spec.substr(5, second - 5), spec);
    if (degree == 0) throw SpecParseError("perm spec degree must be positive");
    std::vector<Perm> gens;
    std::string rest = spec.substr(second + 1);
    std::size_t start = 0;
    while (start <= rest.size() && !rest.empty()) {
      const auto semi = rest.find(';', start);
      const std::string piece = rest.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
      gens.push_back(parse_cycle_gen(piece, degree, spec));
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
    return FiniteGroup::from_generators(degree, std::move(gens), spec, max_order);
  }

  std::istringstream is(spec);
  std::vector<std::string> toks;
  for (std::string t; is >> t;) toks.push_back(t);
  if (toks.empty()) throw SpecParseError("empty group spec");
  const std::string& kind = toks[0];
  auto arg = [&](std::size_t i) {
    if (i >= toks.size()) throw SpecParseError("missing argument in group spec '" + spec + "'");
    return parse_uint(toks[i], spec);
  };
  auto expect_args = [&](std::size_t n) {
    if (toks.size() != n + 1) throw SpecParseError("group spec '" + spec + "' expects " + std::to_string(n) + " argument(s)");
  };
  auto check_order = [&](std::uint64_t order) {
    if (order > max_order) throw GroupTooLarge("group too large: order " + std::to_string(order) + " exceeds cap " + std::to_string(max_order));
  };
  try {
    if (kind == "C") {
      expect_args(1);
      check_order(arg(1));
      return cyclic(arg(1));
    }
    if (kind == "D") {
      expect_args(1);
      check_order(arg(1));
      return dihedral(arg(1));
    }
    if (kind == "S") {
      expect_args(1);
      if (arg(1) > 12) throw GroupTooLarge("group too large: S" + std::to_string(arg(1)));
      std::uint64_t fact = 1;
      for (std::uint32_t i = 2; i <= arg(1); ++i) fact *= i;
      check_order(fact);
      return symmetric(arg(1));
    }
    if (kind == "M") {
      expect_args(2);
      if (arg(2) > 20) throw GroupTooLarge("group too large");
      check_order(ipow(arg(1), arg(2)));
      return modular_group(arg(1), arg(2));
    }
    if (kind == "SD") {
      expect_args(3);
      check_order(std::uint64_t{arg(1)} * arg(2));
      return semidirect_cyclic(arg(1), arg(2), arg(3));
    }
    if (kind == "Ab") {
      if (toks.size() < 2) throw SpecParseError("Ab needs at least one cyclic factor");
      std::vector<std::uint32_t> orders;
      std::uint64_t order = 1;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        orders.push_back(arg(i));
        order *= orders.back();
        check_order(order);
      }
      auto g = abelian(orders);
      return g;
    }
    if (kind == "FHK") {
      expect_args(1);
      return frobenius_hk_group(arg(1), max_order);
    }
  } catch (const SpecParseError&) {
    throw;
  } catch (const GroupTooLarge&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SpecParseError(std::string(e.what()) + " (spec '" + spec + "')");
  }
  throw SpecParseError("unknown group kind '" + kind + "' in spec '" + spec + "'");
}

// -------------------------------------------------------------- catalog

std::vector<CatalogEntry> catalog(std::uint64_t max_order, bool include_large) {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string spec, std::string name, std::uint64_t order, bool large = false,
                 std::vector<std::uint32_t> primes = {}) {
    if (order > max_order || (large && !include_large)) return;
    if (primes.empty()) {
      std::uint64_t n = order;
      for (std::uint32_t q = 2; n > 1; ++q) {
        if (n % q != 0) continue;
        primes.push_back(q);
        while (n % q == 0) n /= q;
      }
    }
    out.push_back({std::move(spec), std::move(name), order, large, std::move(primes)});
  };
  for (std::uint32_t n = 2; n <= 16; ++n) add("C " + std::to_string(n), "C" + std::to_string(n), n);
  add("C 25", "C25", 25);
  add("C 27", "C27", 27);
  add("C 32", "C32", 32);
  for (std::uint32_t n = 4; n <= 30; n += 2) add("D " + std::to_string(n), "D" + std::to_string(n), n);
  for (std::uint32_t n = 3; n <= 5; ++n) {
    std::uint64_t fact = 1;
    for (std::uint32_t i = 2; i <= n; ++i) fact *= i;
    add("S " + std::to_string(n), "S" + std::to_string(n), fact);
  }
  add("Ab 2 4", "C2xC4", 8);
  add("Ab 2 2 2", "C2xC2xC2", 8);
  add("Ab 3 3", "C3xC3", 9);
  add("Ab 2 6", "C2xC6", 12);
  add("Ab 4 4", "C4xC4", 16);
  add("Ab 2 8", "C2xC8", 16);
  add("Ab 3 9", "C3xC9", 27);
  add("SD 5 4 2", "C5:C4", 20);
  add("SD 7 3 2", "C7:C3", 21);
  add("SD 7 6 3", "C7:C6", 42);
  add("SD 9 3 4", "C9:C3", 27);
  add("SD 9 6 2", "C9:C6", 54);
  add("SD 11 5 3", "C11:C5", 55);
  add("SD 13 3 3", "C13:C3", 39);
  add("SD 13 4 5", "C13:C4", 52);
  add("M 2 4", "M16", 16);
  add("M 2 5", "M32", 32);
  add("M 3 4", "M81", 81);
  add("FHK 23", "FHK(23)", 25392, true, {23});
  std::stable_sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.spec < b.spec;
  });
  return out;
}

}  // namespace blockloewy
