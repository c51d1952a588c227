#include "blockloewy/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace blockloewy {

int nu_p(std::uint64_t n, std::uint32_t p) {
  if (n == 0) return 0;
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= base;
  return r;
}

// ---------------------------------------------------------------- Perm

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw std::invalid_argument("not a permutation");
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  Perm p;
  p.images_ = std::move(im);
  return p;
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree) throw std::invalid_argument("cycle point out of range");
      if (used[c[i]]) throw std::invalid_argument("cycles are not disjoint");
      used[c[i]] = true;
      im[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Perm(std::move(im));
}

Perm Perm::operator*(const Perm& rhs) const {
  if (rhs.degree() != degree()) throw std::invalid_argument("degree mismatch in permutation product");
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = rhs.images_[images_[i]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<std::uint32_t>(i);
  return out;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::uint64_t Perm::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Perm::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    os << '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      if (j != i) os << ',';
      os << j;
      seen[j] = true;
    }
    os << ')';
    any = true;
  }
  return any ? os.str() : "()";
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) h = (h ^ x) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------- FiniteGroup

GroupPtr FiniteGroup::from_generators(std::size_t degree, std::vector<Perm> gens, std::string name,
                                      std::size_t max_order) {
  for (const auto& g : gens)
    if (g.degree() != degree) throw std::invalid_argument("generator degree does not match group degree");

  auto grp = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  grp->name_ = std::move(name);
  grp->degree_ = degree;
  grp->gens_ = std::move(gens);

  auto& elems = grp->elements_;
  auto& index = grp->index_;
  elems.push_back(Perm::identity(degree));
  index.emplace(elems.back(), 0);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : grp->gens_) {
      Perm h = elems[head] * g;
      if (index.contains(h)) continue;
      if (elems.size() >= max_order)
        throw GroupTooLarge("group too large: order exceeds cap " + std::to_string(max_order));
      index.emplace(h, static_cast<std::uint32_t>(elems.size()));
      elems.push_back(std::move(h));
    }
  }

  const std::size_t n = elems.size();
  for (const auto& g : grp->gens_) grp->gen_idx_.push_back(index.at(g));
  grp->inv_.resize(n);
  grp->orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    grp->inv_[i] = index.at(elems[i].inverse());
    grp->orders_[i] = elems[i].order();
  }
  if (n <= 1024 && n * n * std::max<std::size_t>(degree, 1) <= 100'000'000) {
    grp->table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) grp->table_[a * n + b] = index.at(elems[a] * elems[b]);
  }
  return grp;
}

std::optional<std::uint32_t> FiniteGroup::find(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t FiniteGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw std::invalid_argument("permutation is not an element of " + name_);
  return it->second;
}

std::uint32_t FiniteGroup::mul(std::uint32_t a, std::uint32_t b) const {
  if (!table_.empty()) return table_[std::size_t{a} * elements_.size() + b];
  return index_.at(elements_[a] * elements_[b]);
}

std::uint32_t FiniteGroup::conj(std::uint32_t x, std::uint32_t g) const {
  if (!table_.empty()) return mul(mul(inv_[g], x), g);
  const Perm& pg = elements_[g];
  const Perm& pgi = elements_[inv_[g]];
  const Perm& px = elements_[x];
  std::vector<std::uint32_t> im(degree_);
  for (std::size_t i = 0; i < degree_; ++i) im[i] = pg[px[pgi[i]]];
  Perm out;
  out = Perm(std::move(im));
  return index_.at(out);
}

std::uint32_t FiniteGroup::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 0;
  std::uint32_t base = a;
  e %= orders_[a];
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::uint64_t FiniteGroup::exponent() const {
  std::uint64_t e = 1;
  for (auto o : orders_) e = std::lcm(e, o);
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (auto a : gen_idx_)
    for (auto b : gen_idx_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

// ------------------------------------------------------------- Subgroup

Subgroup::Subgroup(GroupPtr parent, std::vector<std::uint32_t> indices)
    : parent_(std::move(parent)), indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  member_.assign(parent_->order(), false);
  for (auto i : indices_) member_.at(i) = true;
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<std::uint32_t> all(parent->order());
  std::iota(all.begin(), all.end(), 0u);
  Subgroup s(parent, std::move(all));
  for (auto g : s.parent_->generator_indices())
    if (g != 0 && std::find(s.gens_cache_.begin(), s.gens_cache_.end(), g) == s.gens_cache_.end())
      s.gens_cache_.push_back(g);
  return s;
}

Subgroup Subgroup::trivial(GroupPtr parent) { return Subgroup(std::move(parent), {0}); }

Subgroup Subgroup::generated(GroupPtr parent, const std::vector<std::uint32_t>& gens) {
  std::vector<bool> seen(parent->order(), false);
  std::vector<std::uint32_t> elems{0};
  seen[0] = true;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (auto g : gens) {
      const auto h = parent->mul(elems[head], g);
      if (!seen[h]) {
        seen[h] = true;
        elems.push_back(h);
      }
    }
  }
  return Subgroup(std::move(parent), std::move(elems));
}

bool Subgroup::is_closed() const {
  for (auto a : indices_) {
    if (!member_[parent_->inv(a)]) return false;
    for (auto b : generators())
      if (!member_[parent_->mul(a, b)]) return false;
  }
  return member_[0];
}

std::vector<std::uint32_t> Subgroup::generators() const {
  if (!gens_cache_.empty() || order() == 1) return gens_cache_;
  std::vector<std::uint32_t> gens;
  Subgroup current = trivial(parent_);
  for (auto idx : indices_) {
    if (current.contains(idx)) continue;
    gens.push_back(idx);
    current = generated(parent_, gens);
    if (current.order() == order()) break;
  }
  gens_cache_ = gens;
  return gens;
}

bool Subgroup::is_abelian() const {
  const auto gens = generators();
  for (auto a : gens)
    for (auto b : gens)
      if (parent_->mul(a, b) != parent_->mul(b, a)) return false;
  return true;
}

std::uint64_t Subgroup::exponent() const {
  std::uint64_t e = 1;
  for (auto i : indices_) e = std::lcm(e, parent_->element_order(i));
  return e;
}

bool Subgroup::is_cyclic() const {
  for (auto i : indices_)
    if (parent_->element_order(i) == order()) return true;
  return false;
}

GroupPtr Subgroup::as_group(std::string name) const {
  std::vector<Perm> gens;
  for (auto g : generators()) gens.push_back(parent_->element(g));
  return FiniteGroup::from_generators(parent_->degree(), std::move(gens), std::move(name),
                                      std::max<std::size_t>(order(), 1));
}

// ---------------------------------------------------- classes & subgroups

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<bool> assigned(n, false);
  std::vector<ConjugacyClass> classes;
  const auto& gens = g.generator_indices();
  for (std::uint32_t x = 0; x < n; ++x) {
    if (assigned[x]) continue;
    ConjugacyClass c;
    c.members.push_back(x);
    assigned[x] = true;
    for (std::size_t head = 0; head < c.members.size(); ++head) {
      for (auto s : gens) {
        const auto y = g.conj(c.members[head], s);
        if (!assigned[y]) {
          assigned[y] = true;
          c.members.push_back(y);
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());
    c.representative = c.members.front();
    c.size = c.members.size();
    c.centralizer_order = n / c.size;
    classes.push_back(std::move(c));
  }
  std::stable_sort(classes.begin(), classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    if (a.size != b.size) return a.size < b.size;
    return a.representative < b.representative;
  });
  return classes;
}

std::vector<std::uint32_t> class_lookup(const std::vector<ConjugacyClass>& classes, std::size_t order) {
  std::vector<std::uint32_t> out(order, 0);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (auto m : classes[c].members) out[m] = static_cast<std::uint32_t>(c);
  return out;
}

Subgroup centralizer(const GroupPtr& g, std::uint32_t x) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t y = 0; y < g->order(); ++y)
    if (g->mul(x, y) == g->mul(y, x)) out.push_back(y);
  return Subgroup(g, std::move(out));
}

Subgroup centralizer_in(const Subgroup& k, const Subgroup& h) {
  const auto& g = k.parent();
  const auto gens = h.generators();
  std::vector<std::uint32_t> out;
  for (auto y : k.indices()) {
    bool ok = true;
    for (auto x : gens) {
      if (g->mul(x, y) != g->mul(y, x)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(y);
  }
  return Subgroup(g, std::move(out));
}

Subgroup centralizer(const GroupPtr& g, const Subgroup& h) { return centralizer_in(Subgroup::whole(g), h); }

Subgroup normalizer_in(const Subgroup& k, const Subgroup& h) {
  const auto& g = k.parent();
  const auto gens = h.generators();
  std::vector<std::uint32_t> out;
  for (auto y : k.indices()) {
    bool ok = true;
    for (auto x : gens) {
      if (!h.contains(g->conj(x, y))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(y);
  }
  return Subgroup(g, std::move(out));
}

Subgroup normalizer(const GroupPtr& g, const Subgroup& h) { return normalizer_in(Subgroup::whole(g), h); }

Subgroup center(const Subgroup& h) { return centralizer_in(h, h); }

Subgroup join(const Subgroup& a, const Subgroup& b) {
  auto gens = a.generators();
  for (auto x : b.generators()) gens.push_back(x);
  return Subgroup::generated(a.parent(), gens);
}

Subgroup sylow_subgroup(const Subgroup& h, std::uint32_t p) {
  const auto& g = h.parent();
  const std::uint64_t target = ipow(p, static_cast<std::uint32_t>(nu_p(h.order(), p)));
  auto is_p_element = [&](std::uint32_t x) {
    std::uint64_t o = g->element_order(x);
    while (o % p == 0) o /= p;
    return o == 1;
  };
  Subgroup s = Subgroup::trivial(g);
  while (s.order() < target) {
    bool grown = false;
    for (auto x : h.indices()) {
      if (s.contains(x) || !is_p_element(x)) continue;
      bool normalizes = true;
      for (auto y : s.generators()) {
        if (!s.contains(g->conj(y, x))) {
          normalizes = false;
          break;
        }
      }
      if (!normalizes) continue;
      auto gens = s.generators();
      gens.push_back(x);
      s = Subgroup::generated(g, gens);
      grown = true;
      break;
    }
    if (!grown) throw std::logic_error("Sylow growth stalled below the p-part of the order");
  }
  return s;
}

Subgroup sylow_subgroup(const GroupPtr& g, std::uint32_t p) { return sylow_subgroup(Subgroup::whole(g), p); }

// ---------------------------------------------------------- AbelianType

std::vector<std::uint64_t> AbelianType::factors() const {
  std::vector<std::uint64_t> out;
  for (auto a : exponents) out.push_back(ipow(p, a));
  return out;
}

std::string AbelianType::to_string() const {
  std::string s = "(";
  const auto f = factors();
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + ")";
}

AbelianType abelian_type(const Subgroup& h, std::uint32_t p) {
  if (!h.is_abelian()) throw ContractViolation("abelian_type: subgroup is not abelian");
  const int n = nu_p(h.order(), p);
  if (ipow(p, static_cast<std::uint32_t>(n)) != h.order())
    throw ContractViolation("abelian_type: subgroup is not a p-group");
  // omega[i] = log_p #{x : x^(p^i) = 1}; #factors with a_j >= i is omega[i] - omega[i-1].
  std::vector<int> omega(n + 1, 0);
  for (int i = 0; i <= n; ++i) {
    const std::uint64_t pi = ipow(p, static_cast<std::uint32_t>(i));
    std::uint64_t count = 0;
    for (auto x : h.indices())
      if (pi % h.parent()->element_order(x) == 0) ++count;
    omega[i] = nu_p(count, p);
  }
  AbelianType t;
  t.p = p;
  std::vector<int> at_least(n + 2, 0);
  for (int i = 1; i <= n; ++i) at_least[i] = omega[i] - omega[i - 1];
  for (int i = n; i >= 1; --i) {
    const int exactly = at_least[i] - at_least[i + 1];
    for (int k = 0; k < exactly; ++k) t.exponents.push_back(static_cast<std::uint32_t>(i));
  }
  return t;
}

}  // namespace blockloewy
