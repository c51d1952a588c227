#pragma once
// Brute-force reference computations used by the tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "blockloewy/algebra.hpp"
#include "blockloewy/perm_group.hpp"

namespace oracle {

using namespace blockloewy;

/// Calls f on every vector of F_q^n (q^n must be small).
inline void for_each_vector(const GField& f, std::size_t n, const std::function<void(const Vec&)>& fn) {
  Vec v(n, 0);
  while (true) {
    fn(v);
    std::size_t i = 0;
    while (i < n && v[i] == f.q() - 1) v[i++] = 0;
    if (i == n) return;
    ++v[i];
  }
}

inline bool is_nilpotent(const StructureAlgebra& a, const Vec& x) {
  Vec y = x;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (is_zero(y)) return true;
    y = a.mul(y, x);
  }
  return is_zero(y);
}

/// All nilpotent elements of a commutative algebra (they form J(A)).
inline std::vector<Vec> nilpotents(const StructureAlgebra& a) {
  std::vector<Vec> out;
  for_each_vector(*a.field(), a.dim(), [&](const Vec& v) {
    if (is_nilpotent(a, v)) out.push_back(v);
  });
  return out;
}

/// J(A) of any algebra as {x : x y nilpotent for all y}.
inline std::size_t radical_size_bruteforce(const StructureAlgebra& a) {
  std::vector<Vec> all;
  for_each_vector(*a.field(), a.dim(), [&](const Vec& v) { all.push_back(v); });
  std::size_t count = 0;
  for (const auto& x : all) {
    bool in = true;
    for (const auto& y : all) {
      if (!is_nilpotent(a, a.mul(x, y))) {
        in = false;
        break;
      }
    }
    if (in) ++count;
  }
  return count;
}

/// Determinant over a prime field by permutation expansion (n <= 6).
inline std::int64_t det_mod(const std::vector<std::vector<std::int64_t>>& m, std::int64_t p) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::int64_t total = 0;
  do {
    std::int64_t term = 1;
    for (std::size_t i = 0; i < n; ++i) term = term * m[i][perm[i]] % p;
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    total = (total + (inversions % 2 ? p - term : term)) % p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Rank as the largest nonvanishing minor.
inline std::size_t rank_by_minors(const GFMatrix& m) {
  const std::int64_t p = m.field()->p();
  const std::size_t r = m.rows(), c = m.cols();
  for (std::size_t k = std::min(r, c); k > 0; --k) {
    std::vector<bool> rs(r, false), cs(c, false);
    std::fill(rs.begin(), rs.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        std::vector<std::vector<std::int64_t>> sub;
        for (std::size_t i = 0; i < r; ++i) {
          if (!rs[i]) continue;
          sub.emplace_back();
          for (std::size_t j = 0; j < c; ++j)
            if (cs[j]) sub.back().push_back(m(i, j));
        }
        if (det_mod(sub, p) != 0) return k;
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
  }
  return 0;
}

/// Conjugacy class sizes by direct conjugation over all pairs.
inline std::multiset<std::size_t> class_sizes_naive(const FiniteGroup& g) {
  std::vector<bool> seen(g.order(), false);
  std::multiset<std::size_t> out;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::set<std::uint32_t> cls;
    for (std::uint32_t y = 0; y < g.order(); ++y) {
      const Perm c = g.element(y).inverse() * g.element(x) * g.element(y);
      cls.insert(g.index_of(c));
    }
    for (auto c : cls) seen[c] = true;
    out.insert(cls.size());
  }
  return out;
}

/// F_q[x]/(f) for monic f (coefficients low first, length deg+1), monomial basis.
inline StructureAlgebra truncated_poly_algebra(const FieldPtr& field, const std::vector<Elem>& f) {
  const GField& F = *field;
  const std::size_t n = f.size() - 1;
  StructureAlgebra::Products prods(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Elem> c(2 * n, 0);
      c[i + j] = 1;
      for (std::size_t d = 2 * n - 1; d >= n; --d) {
        const Elem lead = c[d];
        if (lead == 0) continue;
        for (std::size_t t = 0; t <= n; ++t) c[d - n + t] = F.sub(c[d - n + t], F.mul(lead, f[t]));
      }
      for (std::size_t k = 0; k < n; ++k)
        if (c[k] != 0) prods[i * n + j].push_back({static_cast<std::uint32_t>(k), c[k]});
    }
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = "x" + std::to_string(i);
  Vec unit(n, 0);
  unit[0] = 1;
  return StructureAlgebra(field, labels, prods, unit);
}

inline StructureAlgebra product_algebra(const StructureAlgebra& a, const StructureAlgebra& b) {
  const std::size_t n = a.dim(), m = b.dim(), t = n + m;
  StructureAlgebra::Products prods(t * t);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& x : a.product(i, j)) prods[i * t + j].push_back(x);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (const auto& x : b.product(i, j))
        prods[(n + i) * t + n + j].push_back({static_cast<std::uint32_t>(n + x.index), x.coeff});
  std::vector<std::string> labels(t);
  for (std::size_t i = 0; i < t; ++i) labels[i] = "b" + std::to_string(i);
  Vec unit(a.unit());
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  return StructureAlgebra(a.field(), labels, prods, unit);
}

/// Same algebra on the basis given by the columns of an invertible matrix.
inline StructureAlgebra change_basis(const StructureAlgebra& a, const GFMatrix& p) {
  const std::size_t n = a.dim();
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(p.col_vec(j));
  StructureAlgebra::Products prods(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto c = solve(p, a.mul(cols[i], cols[j]));
      for (std::size_t k = 0; k < n; ++k)
        if ((*c)[k] != 0) prods[i * n + j].push_back({static_cast<std::uint32_t>(k), (*c)[k]});
    }
  const auto u = solve(p, a.unit());
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = "y" + std::to_string(i);
  return StructureAlgebra(a.field(), labels, prods, *u);
}

inline GFMatrix random_invertible(const FieldPtr& f, std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint64_t> d(0, f->q() - 1);
  while (true) {
    GFMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<Elem>(d(rng));
    if (rank(m) == n) return m;
  }
}

inline std::vector<Elem> random_monic(const FieldPtr& f, std::size_t deg, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint64_t> d(0, f->q() - 1);
  std::vector<Elem> c(deg + 1);
  for (std::size_t i = 0; i < deg; ++i) c[i] = static_cast<Elem>(d(rng));
  c[deg] = 1;
  return c;
}

}  // namespace oracle
