#include "blockloewy/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace blockloewy {

StructureAlgebra::StructureAlgebra(FieldPtr field, std::vector<std::string> labels, const Products& products,
                                   Vec unit, std::optional<IntProducts> integral)
    : field_(std::move(field)), dim_(labels.size()), labels_(std::move(labels)), unit_(std::move(unit)) {
  if (products.size() != dim_ * dim_) throw DimensionError("structure constant table must have dim^2 entries");
  if (unit_.size() != dim_) throw DimensionError("unit has wrong length");
  const GField& f = *field_;

  offsets_.reserve(dim_ * dim_ + 1);
  offsets_.push_back(0);
  Vec acc(dim_, 0);
  std::vector<std::uint32_t> touched;
  for (const auto& entry : products) {
    for (const auto& t : entry) {
      if (t.index >= dim_) throw DimensionError("structure constant index out of range");
      if (acc[t.index] == 0) touched.push_back(t.index);
      acc[t.index] = f.add(acc[t.index], t.coeff);
    }
    std::sort(touched.begin(), touched.end());
    for (auto k : touched) {
      if (acc[k] != 0) terms_.push_back({k, acc[k]});
      acc[k] = 0;
    }
    touched.clear();
    offsets_.push_back(terms_.size());
  }

  if (integral) {
    if (integral->size() != dim_ * dim_) throw DimensionError("integral table must have dim^2 entries");
    int_offsets_.reserve(dim_ * dim_ + 1);
    int_offsets_.push_back(0);
    for (const auto& entry : *integral) {
      for (const auto& t : entry)
        if (t.coeff != 0) int_terms_.push_back(t);
      int_offsets_.push_back(int_terms_.size());
    }
  }

  commutative_ = true;
  for (std::size_t i = 0; i < dim_ && commutative_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const auto a = product(i, j);
      const auto b = product(j, i);
      if (a.size() != b.size() ||
          !std::equal(a.begin(), a.end(), b.begin(),
                      [](const Term& x, const Term& y) { return x.index == y.index && x.coeff == y.coeff; })) {
        commutative_ = false;
        break;
      }
    }
  }
}

Vec StructureAlgebra::basis_vector(std::size_t i) const {
  Vec v(dim_, 0);
  v.at(i) = 1;
  return v;
}

Vec StructureAlgebra::mul(std::span<const Elem> x, std::span<const Elem> y) const {
  const GField& f = *field_;
  Vec out(dim_, 0);
  std::vector<std::uint32_t> ynz;
  for (std::size_t j = 0; j < dim_; ++j)
    if (y[j] != 0) ynz.push_back(static_cast<std::uint32_t>(j));
  if (f.is_prime_field()) {
    const std::uint64_t p = f.p();
    std::vector<std::uint64_t> acc(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i] == 0) continue;
      for (auto j : ynz) {
        const std::uint64_t xy = std::uint64_t{x[i]} * y[j] % p;
        for (const auto& t : product(i, j)) acc[t.index] = (acc[t.index] + xy * t.coeff) % p;
      }
    }
    for (std::size_t k = 0; k < dim_; ++k) out[k] = static_cast<Elem>(acc[k]);
    return out;
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (auto j : ynz) {
      const Elem xy = f.mul(x[i], y[j]);
      for (const auto& t : product(i, j)) out[t.index] = f.add(out[t.index], f.mul(xy, t.coeff));
    }
  }
  return out;
}

Vec StructureAlgebra::add(std::span<const Elem> x, std::span<const Elem> y) const {
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = field_->add(x[i], y[i]);
  return out;
}

Vec StructureAlgebra::sub(std::span<const Elem> x, std::span<const Elem> y) const {
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = field_->sub(x[i], y[i]);
  return out;
}

Vec StructureAlgebra::scale(std::span<const Elem> x, Elem c) const {
  Vec out(x.begin(), x.end());
  field_->scale(out.data(), c, dim_);
  return out;
}

Vec StructureAlgebra::power(std::span<const Elem> x, std::uint64_t e) const {
  Vec result = unit_;
  Vec base(x.begin(), x.end());
  bool first = true;
  while (e > 0) {
    if (e & 1) {
      result = first ? base : mul(result, base);
      first = false;
    }
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

GFMatrix StructureAlgebra::left_mult_matrix(std::span<const Elem> x) const {
  const GField& f = *field_;
  GFMatrix m(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& t : product(i, j)) m(t.index, j) = f.add(m(t.index, j), f.mul(x[i], t.coeff));
  }
  return m;
}

GFMatrix StructureAlgebra::right_mult_matrix(std::span<const Elem> x) const {
  const GField& f = *field_;
  GFMatrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i] == 0) continue;
      for (const auto& t : product(j, i)) m(t.index, j) = f.add(m(t.index, j), f.mul(x[i], t.coeff));
    }
  }
  return m;
}

const Subspace& StructureAlgebra::radical() const {
  std::call_once(cache_->radical_once, [this] { cache_->radical = compute_radical(*this); });
  return cache_->radical;
}

const std::vector<Subspace>& StructureAlgebra::radical_powers() const {
  std::call_once(cache_->powers_once, [this] {
    auto& powers = cache_->powers;
    powers.push_back(Subspace::full(field_, dim_));
    const Subspace& j = radical();
    powers.push_back(j);
    if (j.dim() > 0) {
      // J^(n+1) = U J^n for any U spanning J modulo J^2.
      Subspace j2 = product_space(*this, j, j);
      Subspace gens_mod = j2;
      std::vector<Vec> u;
      for (const auto& v : j.basis())
        if (gens_mod.insert(v)) u.push_back(v);
      powers.push_back(std::move(j2));
      while (powers.back().dim() > 0) {
        Subspace next(field_, dim_);
        const Subspace& last = powers.back();
        for (const auto& a : u) {
          const GFMatrix la = left_mult_matrix(a);
          for (const auto& b : last.basis()) next.insert(la.apply(b));
        }
        powers.push_back(std::move(next));
      }
    }
    LoewyProfile& lp = cache_->loewy;
    for (const auto& s : powers) lp.dims.push_back(s.dim());
    lp.loewy_length = powers.size() - 1;
    for (std::size_t n = 1; n < lp.dims.size(); ++n) lp.codims.push_back(lp.dims[n - 1] - lp.dims[n]);
  });
  return cache_->powers;
}

const LoewyProfile& StructureAlgebra::loewy() const {
  radical_powers();
  return cache_->loewy;
}

LoewyProfile loewy_profile(const StructureAlgebra& a) { return a.loewy(); }

Subspace product_space(const StructureAlgebra& a, const Subspace& x, const Subspace& y) {
  Subspace out(a.field(), a.dim());
  if (a.dim() <= 256) {
    for (const auto& u : x.basis()) {
      const GFMatrix lu = a.left_mult_matrix(u);
      for (const auto& v : y.basis()) out.insert(lu.apply(v));
    }
  } else {
    for (const auto& u : x.basis())
      for (const auto& v : y.basis()) out.insert(a.mul(u, v));
  }
  return out;
}

// -------------------------------------------------------- group algebras

StructureAlgebra group_algebra(const GroupPtr& g, const FieldPtr& field) {
  return group_algebra(Subgroup::whole(g), field);
}

StructureAlgebra group_algebra(const Subgroup& h, const FieldPtr& field) {
  const auto& g = h.parent();
  const auto& idx = h.indices();
  const std::size_t n = idx.size();
  std::unordered_map<std::uint32_t, std::uint32_t> local;
  for (std::size_t i = 0; i < n; ++i) local.emplace(idx[i], static_cast<std::uint32_t>(i));
  StructureAlgebra::Products prods(n * n);
  StructureAlgebra::IntProducts ints(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto k = local.at(g->mul(idx[i], idx[j]));
      prods[i * n + j] = {{k, 1}};
      ints[i * n + j] = {{k, 1}};
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = "g" + std::to_string(idx[i]);
  Vec unit(n, 0);
  unit[local.at(0)] = 1;
  return StructureAlgebra(field, std::move(labels), prods, std::move(unit), std::move(ints));
}

// -------------------------------------------------------------- checks

void check_algebra(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  auto check_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
    const Vec bi = a.basis_vector(i), bj = a.basis_vector(j), bk = a.basis_vector(k);
    if (a.mul(a.mul(bi, bj), bk) != a.mul(bi, a.mul(bj, bk))) {
      throw AlgebraError("associativity fails on basis triple (" + std::to_string(i) + ", " + std::to_string(j) +
                         ", " + std::to_string(k) + ")");
    }
  };
  if (n <= 60) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) check_triple(i, j, k);
  } else {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&] {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return static_cast<std::size_t>(state % n);
    };
    for (int t = 0; t < 20000; ++t) {
      const auto i = next(), j = next(), k = next();
      check_triple(i, j, k);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vec bi = a.basis_vector(i);
    if (a.mul(a.unit(), bi) != bi || a.mul(bi, a.unit()) != bi)
      throw AlgebraError("unit law fails on basis element " + std::to_string(i));
  }
}

// ---------------------------------------------------- socle and center

namespace {

// Shrinks the subspace s to {a in s : op(a) = 0} where op is linear.
template <typename Op>
Subspace restrict_kernel(const StructureAlgebra& a, const Subspace& s, Op op) {
  const auto& basis = s.basis();
  if (basis.empty()) return s;
  std::vector<Vec> images;
  images.reserve(basis.size());
  bool all_zero = true;
  for (const auto& v : basis) {
    images.push_back(op(v));
    if (!is_zero(images.back())) all_zero = false;
  }
  if (all_zero) return s;
  const GFMatrix m = GFMatrix::from_columns(a.field(), a.dim(), images);
  const GFMatrix ker = kernel(m);
  const GField& f = *a.field();
  Subspace out(a.field(), a.dim());
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    Vec v(a.dim(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) f.axpy(v.data(), basis[i].data(), ker(r, i), a.dim());
    out.insert(std::move(v));
  }
  return out;
}

}  // namespace

Subspace socle(const StructureAlgebra& a) {
  Subspace s = Subspace::full(a.field(), a.dim());
  for (const auto& j : a.radical().basis()) {
    s = restrict_kernel(a, s, [&](const Vec& v) { return a.mul(v, j); });
    if (!a.is_commutative()) s = restrict_kernel(a, s, [&](const Vec& v) { return a.mul(j, v); });
    if (s.dim() == 0) break;
  }
  return s;
}

Subspace center(const StructureAlgebra& a) {
  Subspace s = Subspace::full(a.field(), a.dim());
  if (a.is_commutative()) return s;
  for (std::size_t m = 0; m < a.dim(); ++m) {
    const Vec bm = a.basis_vector(m);
    s = restrict_kernel(a, s, [&](const Vec& v) { return a.sub(a.mul(v, bm), a.mul(bm, v)); });
  }
  return s;
}

// ---------------------------------------------- subalgebras and corners

namespace {

StructureAlgebra algebra_on_basis(const StructureAlgebra& a, const Subspace& sub, std::span<const Elem> unit,
                                  const std::string& label_prefix) {
  const std::size_t n = sub.dim();
  StructureAlgebra::Products prods(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const GFMatrix li = a.left_mult_matrix(sub.basis()[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const Vec prod = li.apply(sub.basis()[j]);
      const auto c = sub.coordinates(prod);
      if (!c) throw AlgebraError("span is not closed under multiplication (basis pair " + std::to_string(i) + ", " +
                                 std::to_string(j) + ")");
      for (std::size_t k = 0; k < n; ++k)
        if ((*c)[k] != 0) prods[i * n + j].push_back({static_cast<std::uint32_t>(k), (*c)[k]});
    }
  }
  const auto u = sub.coordinates(unit);
  if (!u) throw AlgebraError("unit is not in the span");
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = label_prefix + std::to_string(i);
  StructureAlgebra out(a.field(), std::move(labels), prods, *u);
  check_algebra(out);
  return out;
}

}  // namespace

StructureAlgebra subalgebra_span(const StructureAlgebra& a, std::span<const Vec> generators) {
  Subspace s(a.field(), a.dim());
  std::vector<Vec> pending;
  auto push = [&](Vec v) {
    if (s.insert(v)) pending.push_back(std::move(v));
  };
  push(a.unit());
  for (const auto& g : generators) push(g);
  std::vector<Vec> done;
  while (!pending.empty()) {
    Vec w = std::move(pending.back());
    pending.pop_back();
    done.push_back(w);
    for (std::size_t i = 0; i < done.size(); ++i) {
      push(a.mul(w, done[i]));
      push(a.mul(done[i], w));
    }
  }
  return algebra_on_basis(a, s, a.unit(), "s");
}

Corner corner(const StructureAlgebra& a, std::span<const Elem> e) {
  if (a.mul(e, e) != Vec(e.begin(), e.end())) throw AlgebraError("corner: element is not idempotent");
  if (Vec(e.begin(), e.end()) == a.unit()) return {a, Subspace::full(a.field(), a.dim())};
  Subspace s(a.field(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Vec bi = a.basis_vector(i);
    const Vec eb = a.mul(e, bi);
    if (!a.is_commutative() && eb != a.mul(bi, e)) throw AlgebraError("corner: idempotent is not central");
    s.insert(eb);
  }
  auto alg = algebra_on_basis(a, s, e, "e");
  return {std::move(alg), std::move(s)};
}

StructureAlgebra quotient(const StructureAlgebra& a, const Subspace& ideal) {
  const std::size_t n = a.dim();
  for (std::size_t v = 0; v < ideal.dim(); ++v) {
    for (std::size_t m = 0; m < n; ++m) {
      const Vec bm = a.basis_vector(m);
      if (!ideal.contains(a.mul(ideal.basis()[v], bm)) || !ideal.contains(a.mul(bm, ideal.basis()[v])))
        throw AlgebraError("quotient: not a two-sided ideal (ideal basis " + std::to_string(v) +
                           " times algebra basis " + std::to_string(m) + ")");
    }
  }
  std::vector<bool> is_piv(n, false);
  for (auto c : ideal.pivots()) is_piv[c] = true;
  std::vector<std::uint32_t> keep;
  std::vector<std::int64_t> pos(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_piv[i]) {
      pos[i] = static_cast<std::int64_t>(keep.size());
      keep.push_back(static_cast<std::uint32_t>(i));
    }
  }
  const std::size_t m = keep.size();
  auto project = [&](const Vec& v) {
    const Vec r = ideal.reduce(v);
    Vec out(m, 0);
    for (std::size_t i = 0; i < m; ++i) out[i] = r[keep[i]];
    return out;
  };
  StructureAlgebra::Products prods(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Vec c = project(a.mul(a.basis_vector(keep[i]), a.basis_vector(keep[j])));
      for (std::size_t k = 0; k < m; ++k)
        if (c[k] != 0) prods[i * m + j].push_back({static_cast<std::uint32_t>(k), c[k]});
    }
  }
  std::vector<std::string> labels;
  for (auto k : keep) labels.push_back(a.labels()[k]);
  StructureAlgebra out(a.field(), std::move(labels), prods, project(a.unit()));
  check_algebra(out);
  return out;
}

bool is_local(const StructureAlgebra& a) { return a.dim() - a.radical().dim() == 1; }

bool is_uniserial_local(const StructureAlgebra& a) {
  if (!is_local(a)) return false;
  const auto& lp = a.loewy();
  return std::all_of(lp.codims.begin(), lp.codims.end(), [](std::size_t c) { return c <= 1; });
}

std::string dump(const StructureAlgebra& a) {
  const GField& f = *a.field();
  std::ostringstream os;
  os << "algebra dim " << a.dim() << " over " << f.name() << (a.is_commutative() ? " (commutative)" : "") << "\n";
  os << "basis:";
  for (const auto& l : a.labels()) os << ' ' << l;
  os << "\nunit:";
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.unit()[i] != 0) os << ' ' << f.to_string(a.unit()[i]) << '*' << a.labels()[i];
  os << '\n';
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const auto terms = a.product(i, j);
      if (terms.empty()) continue;
      os << a.labels()[i] << " * " << a.labels()[j] << " =";
      bool first = true;
      for (const auto& t : terms) {
        os << (first ? " " : " + ") << f.to_string(t.coeff) << '*' << a.labels()[t.index];
        first = false;
      }
      os << '\n';
    }
  }
  return os.str();
}


// ------------------------------------------------------------ radicals

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

// Same algebra viewed over F_p, on the basis w^a b_i (w the field generator),
// index k * s + a.
StructureAlgebra flatten_to_prime(const StructureAlgebra& a) {
  const GField& f = *a.field();
  const std::size_t s = f.s(), n = a.dim(), fn = n * s;
  const FieldPtr fp = make_field(f.p());
  std::vector<Elem> wpow(2 * s);
  for (std::size_t e = 0; e < 2 * s; ++e) wpow[e] = f.pow(static_cast<Elem>(f.p()), e);
  StructureAlgebra::Products prods(fn * fn);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t ai = 0; ai < s; ++ai) {
        for (std::size_t aj = 0; aj < s; ++aj) {
          auto& out = prods[(i * s + ai) * fn + (j * s + aj)];
          for (const auto& t : a.product(i, j)) {
            const auto c = f.coords(f.mul(wpow[ai + aj], t.coeff));
            for (std::size_t d = 0; d < s; ++d)
              if (c[d] != 0) out.push_back({static_cast<std::uint32_t>(t.index * s + d), c[d]});
          }
        }
      }
    }
  }
  Vec unit(fn, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const auto c = f.coords(a.unit()[k]);
    for (std::size_t d = 0; d < s; ++d) unit[k * s + d] = c[d];
  }
  std::vector<std::string> labels(fn);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t d = 0; d < s; ++d) labels[k * s + d] = a.labels()[k] + "w" + std::to_string(d);
  return StructureAlgebra(fp, std::move(labels), prods, std::move(unit));
}

// Tr(L(lift(x))^e) mod m, through the integral structure constants when
// available and through lifted regular-representation matrices otherwise.
class LiftedTrace {
 public:
  explicit LiftedTrace(const StructureAlgebra& a) : a_(a), n_(a.dim()) {
    if (a.has_integral_lift()) {
      tau_.assign(n_, 0);
      for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t j = 0; j < n_; ++j)
          for (const auto& t : a.integral_product(k, j))
            if (t.index == j) tau_[k] += t.coeff;
    }
  }

  std::uint64_t trace_power(std::span<const Elem> x, std::uint64_t e, std::uint64_t m) const {
    return a_.has_integral_lift() ? ring_path(x, e, m) : matrix_path(x, e, m);
  }

 private:
  using IVec = std::vector<std::uint64_t>;

  IVec ring_mul(const IVec& x, const IVec& y, std::uint64_t m) const {
    IVec out(n_, 0);
    std::vector<std::uint32_t> ynz;
    for (std::size_t j = 0; j < n_; ++j)
      if (y[j] != 0) ynz.push_back(static_cast<std::uint32_t>(j));
    for (std::size_t i = 0; i < n_; ++i) {
      if (x[i] == 0) continue;
      for (auto j : ynz) {
        const std::uint64_t xy = mulmod(x[i], y[j], m);
        for (const auto& t : a_.integral_product(i, j)) {
          const std::uint64_t c = static_cast<std::uint64_t>(((t.coeff % static_cast<std::int64_t>(m)) +
                                                              static_cast<std::int64_t>(m)) %
                                                             static_cast<std::int64_t>(m));
          out[t.index] = (out[t.index] + mulmod(xy, c, m)) % m;
        }
      }
    }
    return out;
  }

  std::uint64_t ring_path(std::span<const Elem> x, std::uint64_t e, std::uint64_t m) const {
    IVec base(x.begin(), x.end());
    IVec result;
    while (e > 0) {
      if (e & 1) result = result.empty() ? base : ring_mul(result, base, m);
      e >>= 1;
      if (e > 0) base = ring_mul(base, base, m);
    }
    std::uint64_t tr = 0;
    for (std::size_t k = 0; k < n_; ++k) {
      if (result[k] == 0) continue;
      const auto tk = static_cast<std::uint64_t>((tau_[k] % static_cast<std::int64_t>(m) +
                                                  static_cast<std::int64_t>(m)) %
                                                 static_cast<std::int64_t>(m));
      tr = (tr + mulmod(result[k], tk, m)) % m;
    }
    return tr;
  }

  std::uint64_t matrix_path(std::span<const Elem> x, std::uint64_t e, std::uint64_t m) const {
    // L[r][j] = coefficient of b_r in x b_j, entries lifted to [0, p).
    IVec l(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n_; ++j)
        for (const auto& t : a_.product(i, j))
          l[t.index * n_ + j] = (l[t.index * n_ + j] + mulmod(x[i], t.coeff, m)) % m;
    }
    auto matmul = [&](const IVec& u, const IVec& v) {
      IVec w(n_ * n_, 0);
      for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t k = 0; k < n_; ++k) {
          const std::uint64_t ur = u[r * n_ + k];
          if (ur == 0) continue;
          for (std::size_t c = 0; c < n_; ++c) w[r * n_ + c] = (w[r * n_ + c] + mulmod(ur, v[k * n_ + c], m)) % m;
        }
      return w;
    };
    IVec result;
    while (e > 0) {
      if (e & 1) result = result.empty() ? l : matmul(result, l);
      e >>= 1;
      if (e > 0) l = matmul(l, l);
    }
    std::uint64_t tr = 0;
    for (std::size_t r = 0; r < n_; ++r) tr = (tr + result[r * n_ + r]) % m;
    return tr;
  }

  const StructureAlgebra& a_;
  std::size_t n_;
  std::vector<std::int64_t> tau_;
};

Subspace trace_form_prime(const StructureAlgebra& a) {
  const GField& f = *a.field();
  const std::uint64_t p = f.p();
  const std::size_t n = a.dim();
  std::size_t l = 0;
  for (std::uint64_t pw = p; pw <= n; pw *= p) ++l;

  const LiftedTrace trace(a);
  Subspace current = Subspace::full(a.field(), n);

  std::uint64_t pi = 1;  // p^i
  for (std::size_t i = 0; i <= l; ++i, pi *= p) {
    const std::uint64_t m = pi * p;
    const auto& basis = current.basis();
    std::vector<Elem> g(basis.size());
    bool any = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const std::uint64_t tr = trace.trace_power(basis[k], pi, m);
      if (tr % pi != 0) throw std::logic_error("trace form: trace not divisible by p^i on the previous layer");
      g[k] = static_cast<Elem>((tr / pi) % p);
      if (g[k] != 0) any = true;
    }
    if (!any) continue;
    // B(x_j, b_c) = sum_k (x_j b_c)[pivot_k] g_k; rows of bt are indexed by c.
    const auto& piv = current.pivots();
    GFMatrix bt(a.field(), n, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const GFMatrix lj = a.left_mult_matrix(basis[j]);
      for (std::size_t c = 0; c < n; ++c) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < piv.size(); ++k)
          if (g[k] != 0) acc += std::uint64_t{lj(piv[k], c)} * g[k];
        bt(c, j) = static_cast<Elem>(acc % p);
      }
    }
    const GFMatrix ker = kernel(bt);
    Subspace next(a.field(), n);
    for (std::size_t r = 0; r < ker.rows(); ++r) {
      Vec v(n, 0);
      for (std::size_t j = 0; j < basis.size(); ++j) f.axpy(v.data(), basis[j].data(), ker(r, j), n);
      next.insert(std::move(v));
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace

Subspace radical_trace_form(const StructureAlgebra& a) {
  const GField& f = *a.field();
  if (f.is_prime_field()) return trace_form_prime(a);
  const std::size_t n = a.dim();
  if (a.has_integral_lift()) {
    const FieldPtr fp = make_field(f.p());
    StructureAlgebra::Products prods(n * n);
    StructureAlgebra::IntProducts ints(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& t : a.integral_product(i, j)) {
          ints[i * n + j].push_back(t);
          prods[i * n + j].push_back({t.index, fp->from_int(t.coeff)});
        }
    Vec unit(a.unit());
    for (auto u : unit)
      if (u >= f.p()) throw AlgebraError("integral lift with a unit outside the prime field");
    const StructureAlgebra ap(fp, a.labels(), prods, std::move(unit), std::move(ints));
    const Subspace jp = trace_form_prime(ap);
    return Subspace::span(a.field(), n, jp.basis());
  }
  const StructureAlgebra flat = flatten_to_prime(a);
  const Subspace jf = trace_form_prime(flat);
  const std::size_t s = f.s();
  std::vector<Vec> back;
  for (const auto& w : jf.basis()) {
    Vec v(n, 0);
    for (std::size_t k = 0; k < n; ++k) v[k] = f.from_coords(std::span<const std::uint32_t>(w.data() + k * s, s));
    back.push_back(std::move(v));
  }
  return fq_span_of_fp_basis(a.field(), n, back, true);
}

Subspace radical_commutative(const StructureAlgebra& a) {
  if (!a.is_commutative()) throw AlgebraError("radical_commutative: algebra is not commutative");
  const GField& f = *a.field();
  const std::size_t n = a.dim();
  std::uint32_t k = 0;
  for (std::uint64_t pw = 1; pw < n; pw *= f.p()) ++k;
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < n; ++i) {
    Vec v = a.basis_vector(i);
    for (std::uint32_t r = 0; r < k; ++r) v = a.power(v, f.p());
    cols.push_back(std::move(v));
  }
  const GFMatrix m = GFMatrix::from_columns(a.field(), n, cols);
  const auto fp_basis = semilinear_kernel(m, k);
  return fq_span_of_fp_basis(a.field(), n, fp_basis, true);
}

Subspace compute_radical(const StructureAlgebra& a) {
  return a.is_commutative() ? radical_commutative(a) : radical_trace_form(a);
}

// -------------------------------------------------------- idempotents

namespace {

// Splits the idempotent e along the eigenvalues of x in eA.
std::vector<Vec> split_idempotent(const StructureAlgebra& a, const Vec& e, const Vec& x) {
  const GField& f = *a.field();
  std::vector<Vec> pw{e};
  Subspace span(a.field(), a.dim());
  span.insert(e);
  std::optional<Vec> coeffs;
  while (true) {
    Vec next = a.mul(pw.back(), x);
    if (span.contains(next)) {
      const GFMatrix m = GFMatrix::from_columns(a.field(), a.dim(), pw);
      coeffs = solve(m, next);
      break;
    }
    span.insert(next);
    pw.push_back(std::move(next));
  }
  // minimal polynomial X^d - sum c_i X^i
  const std::size_t d = pw.size();
  std::vector<Elem> roots;
  for (std::uint64_t lam = 0; lam < f.q(); ++lam) {
    const auto l = static_cast<Elem>(lam);
    Elem val = f.pow(l, d);
    Elem lp = 1;
    for (std::size_t i = 0; i < d; ++i) {
      val = f.sub(val, f.mul((*coeffs)[i], lp));
      lp = f.mul(lp, l);
    }
    if (val == 0) roots.push_back(l);
  }
  if (roots.size() <= 1) return {e};
  std::vector<Vec> out;
  for (auto lam : roots) {
    const Vec shifted = a.sub(x, a.scale(e, lam));
    const Vec nil = a.power(shifted, f.q() - 1);
    out.push_back(a.sub(e, nil));
  }
  return out;
}

IdempotentDecomposition commutative_idempotents(const StructureAlgebra& a, bool demand_split) {
  const GField& f = *a.field();
  const std::size_t n = a.dim();
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec b = a.basis_vector(i);
    cols.push_back(a.sub(a.power(b, f.q()), b));
  }
  const GFMatrix fixed = kernel(GFMatrix::from_columns(a.field(), n, cols));
  const std::size_t t = fixed.rows();
  std::vector<Vec> idems{a.unit()};
  for (std::size_t r = 0; r < fixed.rows() && idems.size() < t; ++r) {
    const Vec s = fixed.row_vec(r);
    std::vector<Vec> refined;
    for (const auto& e : idems)
      for (auto& piece : split_idempotent(a, e, a.mul(e, s))) refined.push_back(std::move(piece));
    idems = std::move(refined);
  }
  if (idems.size() != t) throw std::logic_error("idempotent refinement did not reach the block count");
  Vec total = a.zero();
  for (std::size_t i = 0; i < t; ++i) {
    if (a.mul(idems[i], idems[i]) != idems[i]) throw std::logic_error("refined element is not idempotent");
    for (std::size_t j = i + 1; j < t; ++j)
      if (!is_zero(a.mul(idems[i], idems[j]))) throw std::logic_error("idempotents are not orthogonal");
    total = a.add(total, idems[i]);
  }
  if (total != a.unit()) throw std::logic_error("idempotents do not sum to 1");
  if (demand_split) {
    for (const auto& e : idems) {
      const Corner c = corner(a, e);
      const std::size_t top = c.algebra.dim() - c.algebra.radical().dim();
      if (top != 1)
        throw FieldTooSmall("block residue field is a proper extension of " + f.name(),
                            static_cast<std::uint32_t>(top));
    }
  }
  return {std::move(idems)};
}

}  // namespace

IdempotentDecomposition primitive_central_idempotents(const StructureAlgebra& a, bool demand_split) {
  if (a.is_commutative()) return commutative_idempotents(a, demand_split);
  const Subspace z = center(a);
  const StructureAlgebra za = algebra_on_basis(a, z, a.unit(), "z");
  const auto local = commutative_idempotents(za, demand_split);
  const GField& f = *a.field();
  IdempotentDecomposition out;
  for (const auto& e : local.idempotents) {
    Vec v(a.dim(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f.axpy(v.data(), z.basis()[i].data(), e[i], a.dim());
    out.idempotents.push_back(std::move(v));
  }
  return out;
}

}  // namespace blockloewy
