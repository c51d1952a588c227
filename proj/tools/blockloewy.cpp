// blockloewy: block invariants and Loewy data of modular group algebras.

#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "blockloewy/catalog.hpp"
#include "blockloewy/report.hpp"

namespace {

using namespace blockloewy;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string group;
  std::uint32_t p = 0;
  std::uint64_t max_order = 1000;
  std::string format = "text";
  std::string out;
  unsigned jobs = 1;
  bool large = false;
  std::size_t full_algebra_cap = kDefaultFullAlgebraCap;
};

int emit(const std::string& text, const Options& o) {
  if (o.out.empty()) {
    std::cout << text;
    return kExitPass;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot write " << o.out << '\n';
    return kExitUsage;
  }
  f << text;
  return kExitPass;
}

std::string render(const Report& r, const std::string& format) {
  if (format == "json") return to_json(r).dump(2) + "\n";
  if (format == "csv") return to_csv(r);
  return to_text(r);
}

int finish(const Report& r, const Options& o) {
  if (int rc = emit(render(r, o.format), o); rc != kExitPass) return rc;
  const Tally t = tally(r);
  if (t.fail > 0) {
    for (const auto& in : r.instances)
      for (const auto& c : in.checks)
        if (c.verdict == Verdict::fail && !c.report_only)
          std::cerr << "FAIL " << c.claim << ' ' << c.group << " p=" << c.p
                    << (c.block ? " block " + std::to_string(*c.block) : std::string()) << ": " << c.reason << '\n';
    return kExitFail;
  }
  if (t.report_only_fail > 0) std::cerr << "warning: " << t.report_only_fail << " report-only check(s) failed\n";
  return kExitPass;
}

ReportConfig config_of(const std::string& command, const Options& o) {
  ReportConfig c;
  c.command = command;
  c.group = o.group;
  c.p = o.p;
  c.max_order = o.max_order;
  c.full_algebra_cap = o.full_algebra_cap;
  c.large = o.large;
  return c;
}

int cmd_analyze(const Options& o) {
  if (!is_prime(o.p)) {
    std::cerr << "error: --p must be a prime, got " << o.p << '\n';
    return kExitUsage;
  }
  LabOptions lab;
  lab.full_algebra_cap = o.full_algebra_cap;
  Report r;
  r.config = config_of("analyze", o);
  r.instances.push_back(analyze_and_check(o.group, o.p, lab, std::max<std::uint64_t>(o.max_order, kDefaultMaxOrder)));
  return finish(r, o);
}

int cmd_verify(const Options& o) {
  LabOptions lab;
  lab.full_algebra_cap = o.full_algebra_cap;
  auto entries = catalog(o.max_order, o.large);
  if (!o.group.empty()) {
    std::erase_if(entries, [&](const CatalogEntry& e) { return e.spec != o.group; });
    if (entries.empty()) {
      std::cerr << "error: no catalog entry matches '" << o.group << "'\n";
      return kExitUsage;
    }
  }
  auto tasks = suite_tasks(entries);
  if (o.p != 0) std::erase_if(tasks, [&](const SuiteTask& t) { return t.p != o.p; });
  Report r;
  r.config = config_of("verify", o);
  r.instances = run_suite(tasks, lab, o.jobs);
  return finish(r, o);
}

int cmd_catalog(const Options& o) {
  const auto entries = catalog(o.max_order, o.large);
  if (o.format == "json") return emit(catalog_json(entries).dump(2) + "\n", o);
  if (o.format == "csv") return emit(catalog_csv(entries), o);
  return emit(catalog_text(entries), o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Block invariants and Loewy series of centers of p-blocks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", o.out, "Write output to this file instead of stdout");
    sub->add_option("--max-order", o.max_order, "Largest group order considered")->check(CLI::PositiveNumber);
    sub->add_flag("--large", o.large, "Include the 25392-element Frobenius group");
  };

  auto* analyze = app.add_subcommand("analyze", "Analyze the blocks of one group at one prime");
  analyze->add_option("--group", o.group, "Group spec, e.g. 'S 4' or 'M 2 4'")->required();
  analyze->add_option("--p", o.p, "Prime")->required();
  analyze->add_option("--full-algebra-cap", o.full_algebra_cap, "Largest |G| for full group algebra work");
  add_common(analyze);

  auto* verify = app.add_subcommand("verify", "Run every check over the built-in catalog");
  verify->add_option("--group", o.group, "Restrict to one catalog spec");
  verify->add_option("--p", o.p, "Restrict to one prime");
  verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--full-algebra-cap", o.full_algebra_cap, "Largest |G| for full group algebra work");
  add_common(verify);

  auto* cat = app.add_subcommand("catalog", "List the built-in groups");
  add_common(cat);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  // BLOCKLOEWY_SEEDLESS is reserved; nothing here is randomized.
  try {
    if (*analyze) return cmd_analyze(o);
    if (*verify) return cmd_verify(o);
    return cmd_catalog(o);
  } catch (const SpecParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GroupTooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFail;
  }
}
