#include "blockloewy/block_theory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace blockloewy {

std::uint32_t splitting_degree(const FiniteGroup& g, std::uint32_t p) {
  std::uint64_t e = g.exponent();
  while (e % p == 0) e /= p;
  if (e <= 1) return 1;
  std::uint32_t s = 1;
  std::uint64_t r = p % e;
  while (r != 1 % e) {
    r = r * p % e;
    ++s;
  }
  return s;
}

std::size_t GroupAlgebraCtx::p_regular_class_count() const {
  return static_cast<std::size_t>(std::count_if(classes.begin(), classes.end(), [&](const ConjugacyClass& c) {
    return group->element_order(c.representative) % p != 0;
  }));
}

std::vector<std::int64_t> class_structure_constants(const FiniteGroup& g, const std::vector<ConjugacyClass>& classes,
                                                    const std::vector<std::uint32_t>& class_of) {
  const std::size_t k = classes.size();
  std::vector<std::int64_t> a(k * k * k, 0);
  for (std::size_t l = 0; l < k; ++l) {
    const auto z = classes[l].representative;
    for (std::uint32_t u = 0; u < g.order(); ++u) {
      const auto i = class_of[u];
      const auto j = class_of[g.mul(g.inv(u), z)];
      ++a[(i * k + j) * k + l];
    }
  }
  return a;
}

GroupAlgebraCtx build_ctx(const GroupPtr& g, std::uint32_t p, std::size_t full_algebra_cap, FieldPtr field) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
  GroupAlgebraCtx ctx;
  ctx.group = g;
  ctx.p = p;
  ctx.field = field ? std::move(field) : make_field(p, splitting_degree(*g, p));
  if (ctx.field->p() != p) throw std::invalid_argument("field characteristic does not match p");
  ctx.s = ctx.field->s();
  ctx.full_algebra_cap = full_algebra_cap;
  ctx.classes = conjugacy_classes(*g);
  for (auto& c : ctx.classes) c.defect = nu_p(c.centralizer_order, p);
  ctx.class_of = class_lookup(ctx.classes, g->order());

  const std::size_t k = ctx.classes.size();
  const auto a = class_structure_constants(*g, ctx.classes, ctx.class_of);
  StructureAlgebra::Products prods(k * k);
  StructureAlgebra::IntProducts ints(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        const auto c = a[(i * k + j) * k + l];
        if (c == 0) continue;
        ints[i * k + j].push_back({static_cast<std::uint32_t>(l), c});
        const Elem f = ctx.field->from_int(c);
        if (f != 0) prods[i * k + j].push_back({static_cast<std::uint32_t>(l), f});
      }
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) labels[i] = "K" + std::to_string(i);
  Vec unit(k, 0);
  unit[ctx.class_of[0]] = 1;
  ctx.center = StructureAlgebra(ctx.field, std::move(labels), prods, std::move(unit), std::move(ints));
  if (k <= 60) check_algebra(ctx.center);

  if (g->order() <= full_algebra_cap) ctx.full = group_algebra(g, make_field(p));
  return ctx;
}

// ------------------------------------------------------------- blocks

std::vector<Block> blocks(const GroupAlgebraCtx& ctx) {
  const auto& z = ctx.center;
  const GField& f = *ctx.field;
  const std::size_t k = z.dim();
  const auto dec = primitive_central_idempotents(z, true);

  std::vector<Block> out;
  for (const auto& e : dec.idempotents) {
    Block b;
    b.idempotent = e;
    b.zb = corner(z, e);
    b.k = b.zb.algebra.dim();
    const Subspace& j = b.zb.algebra.radical();
    if (b.k - j.dim() != 1) throw std::logic_error("block center is not local");
    const Vec ru = j.reduce(b.zb.algebra.unit());
    const auto pos = static_cast<std::size_t>(std::find_if(ru.begin(), ru.end(), [](Elem x) { return x != 0; }) -
                                              ru.begin());
    b.central_character.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      const auto x = b.zb.embedding.coordinates(z.mul(z.basis_vector(i), e));
      if (!x) throw std::logic_error("class sum times e_B left the block");
      const Vec rx = j.reduce(*x);
      const Elem c = f.div(rx[pos], ru[pos]);
      if (rx != b.zb.algebra.scale(ru, c)) throw std::logic_error("central character is not well defined");
      b.central_character[i] = c;
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t jj = 0; jj < k; ++jj) {
        Elem lhs = 0;
        for (const auto& t : z.product(i, jj)) lhs = f.add(lhs, f.mul(t.coeff, b.central_character[t.index]));
        if (lhs != f.mul(b.central_character[i], b.central_character[jj]))
          throw std::logic_error("central character is not multiplicative");
      }
    }
    out.push_back(std::move(b));
  }

  auto is_principal = [&](const Block& b) {
    for (std::size_t i = 0; i < k; ++i)
      if (b.central_character[i] != f.from_int(static_cast<std::int64_t>(ctx.classes[i].size))) return false;
    return true;
  };
  const auto principal = std::find_if(out.begin(), out.end(), is_principal);
  if (principal == out.end()) throw std::logic_error("no block has the augmentation as central character");
  std::rotate(out.begin(), principal, principal + 1);
  for (std::size_t i = 0; i < out.size(); ++i) out[i].index = i;
  return out;
}

int block_defect(const GroupAlgebraCtx& ctx, Block& b) {
  int d = -1;
  for (std::size_t i = 0; i < ctx.classes.size(); ++i)
    if (b.central_character[i] != 0 && (d < 0 || ctx.classes[i].defect < d)) d = ctx.classes[i].defect;
  if (d < 0) throw std::logic_error("central character vanishes on every class");
  int support_max = -1;
  for (std::size_t i = 0; i < ctx.classes.size(); ++i) {
    if (b.idempotent[i] == 0) continue;
    if (ctx.group->element_order(ctx.classes[i].representative) % ctx.p == 0)
      throw std::logic_error("block idempotent is supported on a p-singular class");
    support_max = std::max(support_max, ctx.classes[i].defect);
  }
  if (support_max != d)
    throw std::logic_error("defect from the central character (" + std::to_string(d) +
                           ") disagrees with the idempotent support (" + std::to_string(support_max) + ")");
  b.defect = d;
  b.defect_classes.clear();
  for (std::size_t i = 0; i < ctx.classes.size(); ++i)
    if (b.central_character[i] != 0 && ctx.classes[i].defect == d && b.idempotent[i] != 0)
      b.defect_classes.push_back(i);
  if (b.defect_classes.empty()) throw std::logic_error("block has no defect class");
  return d;
}

Subgroup defect_group(const GroupAlgebraCtx& ctx, Block& b) {
  if (b.defect < 0) block_defect(ctx, b);
  const auto x = ctx.classes[b.defect_classes.front()].representative;
  Subgroup d = sylow_subgroup(centralizer(ctx.group, x), ctx.p);
  if (d.order() != ipow(ctx.p, static_cast<std::uint32_t>(b.defect)))
    throw std::logic_error("Sylow subgroup of the defect class centralizer has the wrong order");
  b.defect_group = d;
  return d;
}

BrauerMap brauer_hom(const GroupAlgebraCtx& ctx, const Subgroup& d) {
  const auto& g = ctx.group;
  const Subgroup c = centralizer(g, d);
  BrauerMap br;
  br.h = join(d, c);
  br.h_group = br.h.as_group(g->name() + " DC");
  br.h_classes = conjugacy_classes(*br.h_group);
  br.h_class_of.assign(g->order(), -1);
  std::vector<std::uint32_t> to_parent(br.h_group->order());
  for (std::uint32_t t = 0; t < br.h_group->order(); ++t) to_parent[t] = g->index_of(br.h_group->element(t));
  for (std::size_t kk = 0; kk < br.h_classes.size(); ++kk)
    for (auto m : br.h_classes[kk].members) br.h_class_of[to_parent[m]] = static_cast<std::int32_t>(kk);
  br.matrix = GFMatrix(ctx.field, br.h_classes.size(), ctx.classes.size());
  for (std::size_t kk = 0; kk < br.h_classes.size(); ++kk) {
    const auto rep = to_parent[br.h_classes[kk].representative];
    if (c.contains(rep)) br.matrix(kk, ctx.class_of[rep]) = 1;
  }
  return br;
}

void root_block_and_inertia(const GroupAlgebraCtx& ctx, Block& b) {
  const auto& g = ctx.group;
  if (!b.defect_group) defect_group(ctx, b);
  if (b.defect == 0) {
    b.dc = Subgroup::whole(g);
    b.normalizer = Subgroup::whole(g);
    b.inertial = Subgroup::whole(g);
    b.root_idempotent = b.idempotent;
    b.root_count = 1;
    b.inertial_index = 1;
    return;
  }
  const Subgroup& d = *b.defect_group;
  const BrauerMap br = brauer_hom(ctx, d);
  const GroupAlgebraCtx hctx = build_ctx(br.h_group, ctx.p, 0, ctx.field);
  auto hblocks = blocks(hctx);
  const GField& f = *ctx.field;

  std::vector<std::size_t> roots;
  for (std::size_t r = 0; r < hblocks.size(); ++r) {
    bool match = true;
    for (std::size_t i = 0; i < ctx.classes.size() && match; ++i) {
      Elem v = 0;
      for (std::size_t kk = 0; kk < br.h_classes.size(); ++kk)
        if (br.matrix(kk, i) != 0) v = f.add(v, hblocks[r].central_character[kk]);
      match = v == b.central_character[i];
    }
    if (match) roots.push_back(r);
  }
  if (roots.empty()) throw std::logic_error("no block of D C_G(D) corresponds to the block");
  for (auto r : roots)
    if (block_defect(hctx, hblocks[r]) != b.defect) throw std::logic_error("root block has the wrong defect");

  const Block& root = hblocks[roots.front()];
  b.dc = br.h;
  b.root_idempotent = root.idempotent;
  b.root_count = roots.size();
  const Subgroup n = normalizer(g, d);
  b.normalizer = n;
  if (hblocks.size() == 1) {
    b.inertial = n;
  } else {
    std::vector<std::uint32_t> stab;
    const std::size_t hk = br.h_classes.size();
    std::vector<std::uint32_t> reps(hk);
    for (std::size_t kk = 0; kk < hk; ++kk)
      reps[kk] = g->index_of(br.h_group->element(br.h_classes[kk].representative));
    for (auto x : n.indices()) {
      bool fixed = true;
      for (std::size_t kk = 0; kk < hk && fixed; ++kk) {
        const auto img = br.h_class_of[g->conj(reps[kk], x)];
        if (img < 0) throw std::logic_error("N_G(D) does not normalize D C_G(D)");
        fixed = root.idempotent[static_cast<std::size_t>(img)] == root.idempotent[kk];
      }
      if (fixed) stab.push_back(x);
    }
    b.inertial = Subgroup(g, std::move(stab));
  }
  if (b.inertial->order() % br.h.order() != 0) throw std::logic_error("inertial group does not contain D C_G(D)");
  b.inertial_index = b.inertial->order() / br.h.order();
  if (b.root_count * b.inertial->order() != n.order())
    throw std::logic_error("root count does not match the index of the inertial group");
  if (b.inertial_index % ctx.p == 0) throw std::logic_error("inertial index divisible by p");
}

Subspace reynolds_ideal(const GroupAlgebraCtx& ctx) {
  if (!ctx.full) throw std::logic_error("reynolds_ideal needs the full group algebra");
  const StructureAlgebra& a = *ctx.full;
  const Subspace soc = socle(a);
  std::vector<Vec> sums;
  for (const auto& c : ctx.classes) {
    Vec v(a.dim(), 0);
    for (auto m : c.members) v[m] = 1;
    sums.push_back(std::move(v));
  }
  const Subspace zspan = Subspace::span(a.field(), a.dim(), sums);
  const Subspace r = zspan.intersect(soc);
  std::vector<Vec> coords;
  for (const auto& v : r.basis()) {
    Vec c(ctx.classes.size());
    for (std::size_t i = 0; i < ctx.classes.size(); ++i) c[i] = v[ctx.classes[i].representative];
    coords.push_back(std::move(c));
  }
  return Subspace::span(ctx.field, ctx.classes.size(), coords);
}

void l_of_block(const GroupAlgebraCtx& ctx, std::vector<Block>& all) {
  if (ctx.full) {
    const Subspace r = reynolds_ideal(ctx);
    std::size_t total = 0;
    for (auto& b : all) {
      Subspace s(ctx.field, ctx.classes.size());
      for (const auto& v : r.basis()) s.insert(ctx.center.mul(b.idempotent, v));
      b.l = s.dim();
      b.l_source = "reynolds";
      total += s.dim();
    }
    if (total != ctx.p_regular_class_count())
      throw std::logic_error("sum of l(B) differs from the number of p-regular classes");
    return;
  }
  if (all.size() == 1) {
    all.front().l = ctx.p_regular_class_count();
    all.front().l_source = "single block";
    return;
  }
  for (auto& b : all) {
    if (b.defect_group && b.defect_group->is_cyclic() && b.inertial_index > 0) {
      b.l = b.inertial_index;
      b.l_source = "cyclic defect";
    }
  }
}

std::vector<Block> analyze_blocks(const GroupAlgebraCtx& ctx) {
  auto all = blocks(ctx);
  for (auto& b : all) {
    block_defect(ctx, b);
    defect_group(ctx, b);
    root_block_and_inertia(ctx, b);
  }
  l_of_block(ctx, all);
  return all;
}

}  // namespace blockloewy
