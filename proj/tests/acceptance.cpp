// Acceptance gate: one line per criterion, nonzero exit if a gated one fails.

#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "blockloewy/catalog.hpp"
#include "blockloewy/report.hpp"
#include "oracles.hpp"

using namespace blockloewy;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Gate {
  std::size_t asserts = 0;
  std::size_t failures = 0;
  std::ostringstream notes;

  void expect(bool ok, const std::string& what) {
    ++asserts;
    if (!ok) {
      ++failures;
      if (failures <= 5) notes << "\n    failed: " << what;
    }
  }
};

std::string tag(const Instance& in, std::size_t b) { return in.spec + " p=" + std::to_string(in.p) + " block " + std::to_string(b); }

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<Instance> catalog_instances(std::uint64_t max_order) {
  std::vector<Instance> out;
  for (const auto& e : catalog(max_order, false))
    for (auto p : e.primes) out.push_back(analyze_instance(e.spec, parse_group_spec(e.spec), p));
  return out;
}

bool report(int n, const std::string& title, const Gate& g, double secs, bool extra_ok = true,
            const std::string& extra = {}) {
  const bool ok = g.failures == 0 && extra_ok;
  std::cout << (ok ? "PASS" : "FAIL") << "  [" << n << "] " << title << "  (" << g.asserts << " assertions, "
            << g.failures << " failed, " << std::fixed << std::setprecision(2) << secs << " s)" << extra
            << g.notes.str() << '\n';
  return ok;
}

bool criterion1() {
  const auto t0 = Clock::now();
  Gate g;
  struct Case {
    const char* spec;
    std::uint32_t p;
  };
  for (const Case c : {Case{"S 3", 3}, {"D 10", 5}, {"C 9", 3}, {"C 4", 2}, {"SD 5 4 2", 5}, {"D 14", 7}}) {
    const Instance in = analyze_instance(c.spec, parse_group_spec(c.spec), c.p);
    for (std::size_t b = 0; b < in.blocks.size(); ++b) {
      const Block& blk = in.blocks[b].block;
      if (blk.defect == 0) continue;
      const std::size_t pd = ipow(c.p, static_cast<std::uint64_t>(blk.defect));
      const std::size_t e = blk.inertial_index;
      g.expect(in.blocks[b].defect_cyclic, tag(in, b) + " defect group cyclic");
      g.expect((pd - 1) % e == 0, tag(in, b) + " e divides p^d - 1");
      const std::size_t ll = (pd - 1) / e + 1;
      std::vector<std::size_t> codims(ll, 1);
      if (ll >= 2) codims[1] = e;
      g.expect(blk.loewy().loewy_length == ll, tag(in, b) + " LL");
      g.expect(blk.loewy().codims == codims, tag(in, b) + " codimensions");
      g.expect(blk.k == (pd - 1) / e + e, tag(in, b) + " k(B)");
      g.expect(check_thm2(in, b).verdict == Verdict::pass, tag(in, b) + " thm2 check");
      const StructureAlgebra& zb = blk.zb.algebra;
      if (zb.dim() <= 6) {
        const std::size_t nil = oracle::nilpotents(zb).size();
        g.expect(nil == ipow(zb.field()->q(), zb.radical().dim()), tag(in, b) + " radical vs nilpotent count");
      }
    }
  }
  const double secs = seconds_since(t0);
  return report(1, "cyclic-defect Loewy length, codimensions and k(B)", g, secs, secs < 5.0,
                secs < 5.0 ? "" : "  over the 5 s budget");
}

bool criterion2(const std::vector<Instance>& all) {
  const auto t0 = Clock::now();
  Gate g;
  for (const auto& in : all)
    for (std::size_t b = 0; b < in.blocks.size(); ++b) {
      const auto& ab = in.blocks[b];
      if (ab.block.defect == 0) continue;
      const auto r = check_thm4(in, b);
      g.expect(r.verdict == Verdict::pass, tag(in, b) + " thm4: " + r.reason);
      g.expect(ab.witness && ab.witness->in_radical && !is_zero(ab.witness->a_t), tag(in, b) + " witness a^t != 0");
    }
  auto tight = [&](const char* spec, std::uint32_t p) {
    const Instance in = analyze_instance(spec, parse_group_spec(spec), p);
    const auto r = check_thm4(in, 0);
    g.expect(r.get("bound") == 4 && r.get("LL") == 4 && r.get("LL_fixed") == 4, std::string(spec) + " tight at 4");
  };
  tight("C 4", 2);
  tight("M 2 4", 2);
  return report(2, "lower bound and witness on every block of positive defect", g, seconds_since(t0));
}

bool criterion3() {
  const auto t0 = Clock::now();
  Gate g;
  const Instance in = analyze_instance("M 2 4", parse_group_spec("M 2 4"), 2);
  g.expect(in.blocks.size() == 1, "M16 has one block");
  const auto r = check_mpd(in, 0);
  g.expect(r.verdict == Verdict::pass, "mpd check");
  g.expect(in.blocks[0].block.loewy().loewy_length == 4, "LL(Z(F M16)) = 4");
  g.expect(r.get("(p^(d-1)+p-2)/(p-1)") == 8, "(2^3 + 0)/1 = 8");
  g.expect(r.get("LL") < r.get("(p^(d-1)+p-2)/(p-1)"), "4 < 8");
  return report(3, "modular group of order 16: LL = 4 < 8", g, seconds_since(t0));
}

bool criterion4(const std::vector<Instance>& all) {
  const auto t0 = Clock::now();
  Gate g;
  for (const auto& in : all)
    for (std::size_t b = 0; b < in.blocks.size(); ++b) {
      const auto& ab = in.blocks[b];
      if (ab.block.defect == 0) continue;
      const auto r = check_cor5(in, b);
      g.expect(r.verdict == Verdict::pass, tag(in, b) + " cor5: " + r.reason);
      if (ab.witness && ab.witness->m >= 2) g.expect(in.p + 2 <= ab.block.k, tag(in, b) + " p + 2 <= k(B)");
    }
  const Instance m16 = analyze_instance("M 2 4", parse_group_spec("M 2 4"), 2);
  const auto r = check_cor5(m16, 0);
  g.expect(r.get("m") == 2 && r.get("k") == 10 && r.get("k-l+1") == 10 && r.get("p+2") == 4, "M16 values");
  return report(4, "k(B) lower bounds", g, seconds_since(t0));
}

bool criterion5() {
  const auto t0 = Clock::now();
  Gate g;
  const auto r = check_frobenius_example(23, true);
  g.expect(r.verdict == Verdict::pass, "frobenius example: " + r.reason);
  g.expect(r.get("order") == 25392, "order 25392");
  g.expect(r.get("k") == 19 && r.get("k_direct") == 19, "k(G) = 19");
  g.expect(r.get("l") == 8 && r.get("l_direct") == 8, "l(G) = 8");
  g.expect(r.get("k-l+1") == 12 && r.get("k-l+1_formula") == 12, "k - l + 1 = 12");
  const InstanceResult res = analyze_and_check("FHK 23", 23);
  g.expect(res.classes == 19 && res.p_regular_classes == 8, "block analysis class counts");
  for (const auto& c : res.checks)
    if (!c.report_only) g.expect(c.verdict != Verdict::fail, "FHK " + c.claim + ": " + c.reason);
  const double secs = seconds_since(t0);
  return report(5, "Frobenius group of order 25392 at p = 23", g, secs, secs < 300.0,
                secs < 300.0 ? "" : "  over the 5 min budget");
}

bool criterion6(const std::vector<Instance>& all, double analysis_secs) {
  const auto t0 = Clock::now();
  Gate g;
  for (const auto& in : all) {
    const auto& ctx = in.ctx;
    const auto& z = ctx.center;
    const GField& F = *ctx.field;
    const std::string t = in.spec + " p=" + std::to_string(in.p);
    std::size_t ksum = 0, lsum = 0;
    bool all_l = true;
    Vec unit = z.zero();
    for (std::size_t b = 0; b < in.blocks.size(); ++b) {
      const auto& ab = in.blocks[b];
      const Block& blk = ab.block;
      ksum += blk.k;
      if (blk.l)
        lsum += *blk.l;
      else
        all_l = false;
      unit = z.add(unit, blk.idempotent);
      g.expect(blk.loewy().c(1) == 1, tag(in, b) + " c(1) = 1");
      const bool d0 = blk.defect == 0, k1 = blk.k == 1, ll1 = blk.loewy().loewy_length == 1;
      g.expect(d0 == k1 && k1 == ll1, tag(in, b) + " d = 0 iff k = 1 iff LL = 1");
      g.expect(z.mul(blk.idempotent, blk.idempotent) == blk.idempotent, tag(in, b) + " idempotent");
      for (std::size_t c = b + 1; c < in.blocks.size(); ++c)
        g.expect(is_zero(z.mul(blk.idempotent, in.blocks[c].block.idempotent)), tag(in, b) + " orthogonal");
      // lambda(C_i) lambda(C_j) = sum_l a_ijl lambda(C_l)
      bool mult = true;
      const auto& lam = blk.central_character;
      for (std::size_t i = 0; i < z.dim() && mult; ++i)
        for (std::size_t j = 0; j < z.dim() && mult; ++j) {
          Elem s = 0;
          for (const auto& term : z.product(i, j)) s = F.add(s, F.mul(term.coeff, lam[term.index]));
          mult = s == F.mul(lam[i], lam[j]);
        }
      g.expect(mult, tag(in, b) + " central character multiplicative");
      g.expect(lam[0] == 1, tag(in, b) + " lambda(1) = 1");
      if (blk.defect > 0) {
        const auto& fpa = ab.fpa;
        if (fpa.lambda_direct) g.expect(*fpa.lambda_direct == fpa.lambda_formula, tag(in, b) + " lambda formula");
        g.expect(check_kks(in, b).verdict == Verdict::pass, tag(in, b) + " fixed-point Loewy bounds");
        g.expect(check_okuyama(in, b).verdict == Verdict::pass, tag(in, b) + " LL <= p^d");
      }
    }
    g.expect(unit == z.unit(), t + " idempotents sum to 1");
    g.expect(ksum == ctx.class_count(), t + " sum k(B) = #classes");
    if (ctx.full) {
      g.expect(all_l, t + " l(B) computed");
      g.expect(lsum == ctx.p_regular_class_count(), t + " sum l(B) = #p-regular classes");
    }
    const auto gd = check_gamma_decomposition(in);
    if (gd.verdict != Verdict::skipped) g.expect(gd.verdict == Verdict::pass, t + " gamma decomposition");
  }
  const double secs = seconds_since(t0) + analysis_secs;
  const bool ok = g.asserts >= 200 && secs < 60.0;
  return report(6, "structural invariants over the catalog", g, secs, ok,
                ok ? "" : "  (needs >= 200 assertions in < 60 s)");
}

bool criterion7() {
  const auto t0 = Clock::now();
  Gate g;
  std::mt19937 rng(20240601);
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}};
  std::size_t random_count = 0;
  for (int trial = 0; trial < 28; ++trial) {
    const auto [p, s] = fields[trial % fields.size()];
    auto f = make_field(p, s);
    StructureAlgebra a0;
    if (trial % 3 == 2) {
      const std::size_t d1 = 1 + trial % 2, d2 = 1 + (trial / 2) % 3;
      a0 = oracle::product_algebra(oracle::truncated_poly_algebra(f, oracle::random_monic(f, d1, rng)),
                                   oracle::truncated_poly_algebra(f, oracle::random_monic(f, d2, rng)));
    } else {
      a0 = oracle::truncated_poly_algebra(f, oracle::random_monic(f, 1 + trial % 5, rng));
    }
    if (ipow(f->q(), a0.dim()) > 70000) continue;
    const auto a = oracle::change_basis(a0, oracle::random_invertible(f, a0.dim(), rng));
    check_algebra(a);
    ++random_count;
    const Subspace j = radical_commutative(a);
    g.expect(ipow(f->q(), j.dim()) == oracle::nilpotents(a).size(), "random algebra " + std::to_string(trial));
  }
  g.expect(random_count >= 20, "at least 20 random algebras");
  for (std::uint32_t p : {2u, 3u}) {
    const auto ctx = build_ctx(symmetric(3), p);
    const Subspace j = radical_commutative(ctx.center);
    g.expect(ipow(ctx.field->q(), j.dim()) == oracle::nilpotents(ctx.center).size(), "Z(F S3) p=" + std::to_string(p));
  }
  for (const auto& e : catalog(16, false)) {
    auto grp = parse_group_spec(e.spec);
    if (!grp->is_abelian()) continue;
    for (auto p : e.primes) {
      const auto a = group_algebra(grp, make_field(p));
      const Subspace tf = radical_trace_form(a), cm = radical_commutative(a);
      g.expect(tf.dim() == cm.dim() && tf.intersect(cm).dim() == cm.dim(),
               "trace form vs commutative on " + e.spec + " p=" + std::to_string(p));
    }
  }
  return report(7, "radical algorithms against nilpotent enumeration", g, seconds_since(t0));
}

void criterion8(const std::vector<Instance>& all) {
  const auto t0 = Clock::now();
  Gate g;
  for (const auto& in : all)
    for (std::size_t b = 0; b < in.blocks.size(); ++b) {
      const auto r = check_hk_scan(in, b);
      if (r.verdict == Verdict::skipped) continue;
      g.expect(r.verdict == Verdict::pass, tag(in, b) + " 4(p-1) <= k(B)^2 VIOLATED");
    }
  std::cout << (g.failures == 0 ? "PASS" : "WARN") << "  [8] k(B)^2 >= 4(p-1) scan, report only  (" << g.asserts
            << " blocks, " << g.failures << " violations, " << std::fixed << std::setprecision(2) << seconds_since(t0)
            << " s)" << g.notes.str() << '\n';
}

}  // namespace

int main() {
  std::cout << "blockloewy acceptance " << kToolVersion << '\n';
  bool ok = criterion1();
  const auto t0 = Clock::now();
  const auto all = catalog_instances(1000);
  const double analysis_secs = seconds_since(t0);
  std::cout << "      analyzed " << all.size() << " catalog instances in " << std::fixed << std::setprecision(2)
            << analysis_secs << " s\n";
  ok = criterion2(all) && ok;
  ok = criterion3() && ok;
  ok = criterion4(all) && ok;
  ok = criterion5() && ok;
  ok = criterion6(all, analysis_secs) && ok;
  ok = criterion7() && ok;
  criterion8(all);
  std::cout << (ok ? "all gated criteria pass" : "some gated criteria FAIL") << '\n';
  return ok ? 0 : 1;
}
