#include "blockloewy/report.hpp"

#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

namespace blockloewy {

using nlohmann::json;

InstanceResult summarize(const Instance& in, std::vector<VerificationReport> checks) {
  InstanceResult out;
  out.spec = in.spec;
  out.name = in.ctx.group->name();
  out.order = in.ctx.group->order();
  out.p = in.p;
  out.s = in.ctx.s;
  out.classes = in.ctx.class_count();
  out.p_regular_classes = in.ctx.p_regular_class_count();
  for (const auto& ab : in.blocks) {
    const Block& b = ab.block;
    BlockRow row;
    row.index = b.index;
    row.defect = b.defect;
    row.defect_order = b.defect_group->order();
    row.defect_cyclic = ab.defect_cyclic;
    row.zd_m = ab.fpa.zd_type.m();
    row.zd_r = ab.fpa.zd_type.rank();
    row.e = b.inertial_index;
    row.k = b.k;
    row.l = b.l;
    row.l_source = b.l_source;
    row.loewy_length = b.loewy().loewy_length;
    row.codims = b.loewy().codims;
    row.loewy_length_fixed = ab.fpa.algebra.loewy().loewy_length;
    row.lambda = ab.fpa.lambda();
    row.root_count = b.root_count;
    out.blocks.push_back(std::move(row));
  }
  out.checks = std::move(checks);
  return out;
}

InstanceResult analyze_and_check(const std::string& spec, std::uint32_t p, const LabOptions& opts,
                                 std::size_t max_order) {
  const GroupPtr g = parse_group_spec(spec, max_order);
  const Instance in = analyze_instance(spec, g, p, opts);
  return summarize(in, run_checks(in));
}

std::vector<SuiteTask> suite_tasks(const std::vector<CatalogEntry>& entries) {
  std::vector<SuiteTask> tasks;
  for (const auto& e : entries)
    for (auto p : e.primes) tasks.push_back({e.spec, p});
  return tasks;
}

std::vector<InstanceResult> run_suite(const std::vector<SuiteTask>& tasks, const LabOptions& opts, unsigned jobs) {
  std::vector<InstanceResult> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = analyze_and_check(tasks[i].spec, tasks[i].p, opts, 100000);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

Tally tally(const Report& r) {
  Tally t;
  for (const auto& in : r.instances)
    for (const auto& c : in.checks) {
      switch (c.verdict) {
        case Verdict::pass: ++t.pass; break;
        case Verdict::skipped: ++t.skipped; break;
        case Verdict::fail:
          if (c.report_only)
            ++t.report_only_fail;
          else
            ++t.fail;
          break;
      }
    }
  return t;
}

// ---------------------------------------------------------------- json

namespace {

json check_json(const VerificationReport& c) {
  json values = json::array();
  for (const auto& [k, v] : c.values) values.push_back({{"name", k}, {"value", v}});
  return {{"claim", c.claim},
          {"group", c.group},
          {"p", c.p},
          {"block", c.block ? json(*c.block) : json(nullptr)},
          {"verdict", to_string(c.verdict)},
          {"reason", c.reason},
          {"report_only", c.report_only},
          {"values", values}};
}

VerificationReport check_from_json(const json& j) {
  VerificationReport c;
  c.claim = j.at("claim").get<std::string>();
  c.group = j.at("group").get<std::string>();
  c.p = j.at("p").get<std::uint32_t>();
  if (!j.at("block").is_null()) c.block = j.at("block").get<std::size_t>();
  const auto v = j.at("verdict").get<std::string>();
  c.verdict = v == "pass" ? Verdict::pass : v == "fail" ? Verdict::fail : Verdict::skipped;
  c.reason = j.at("reason").get<std::string>();
  c.report_only = j.at("report_only").get<bool>();
  for (const auto& kv : j.at("values")) c.values.emplace_back(kv.at("name"), kv.at("value").get<std::int64_t>());
  return c;
}

json block_json(const BlockRow& b) {
  return {{"index", b.index},
          {"d", b.defect},
          {"defect_order", b.defect_order},
          {"defect_cyclic", b.defect_cyclic},
          {"zd_m", b.zd_m},
          {"zd_r", b.zd_r},
          {"e", b.e},
          {"k", b.k},
          {"l", b.l ? json(*b.l) : json(nullptr)},
          {"l_source", b.l_source},
          {"LL", b.loewy_length},
          {"c", b.codims},
          {"LL_fixed", b.loewy_length_fixed},
          {"lambda", b.lambda},
          {"roots", b.root_count}};
}

BlockRow block_from_json(const json& j) {
  BlockRow b;
  b.index = j.at("index");
  b.defect = j.at("d");
  b.defect_order = j.at("defect_order");
  b.defect_cyclic = j.at("defect_cyclic");
  b.zd_m = j.at("zd_m");
  b.zd_r = j.at("zd_r");
  b.e = j.at("e");
  b.k = j.at("k");
  if (!j.at("l").is_null()) b.l = j.at("l").get<std::size_t>();
  b.l_source = j.at("l_source");
  b.loewy_length = j.at("LL");
  b.codims = j.at("c").get<std::vector<std::size_t>>();
  b.loewy_length_fixed = j.at("LL_fixed");
  b.lambda = j.at("lambda");
  b.root_count = j.at("roots");
  return b;
}

}  // namespace

json to_json(const Report& r) {
  json instances = json::array();
  for (const auto& in : r.instances) {
    json blocks = json::array(), checks = json::array();
    for (const auto& b : in.blocks) blocks.push_back(block_json(b));
    for (const auto& c : in.checks) checks.push_back(check_json(c));
    instances.push_back({{"group", in.spec},
                         {"name", in.name},
                         {"order", in.order},
                         {"p", in.p},
                         {"s", in.s},
                         {"classes", in.classes},
                         {"p_regular_classes", in.p_regular_classes},
                         {"blocks", blocks},
                         {"checks", checks}});
  }
  return {{"tool_version", r.tool_version},
          {"config",
           {{"command", r.config.command},
            {"group", r.config.group},
            {"p", r.config.p},
            {"max_order", r.config.max_order},
            {"full_algebra_cap", r.config.full_algebra_cap},
            {"large", r.config.large}}},
          {"instances", instances}};
}

Report report_from_json(const json& j) {
  Report r;
  r.tool_version = j.at("tool_version");
  const auto& c = j.at("config");
  r.config.command = c.at("command");
  r.config.group = c.at("group");
  r.config.p = c.at("p");
  r.config.max_order = c.at("max_order");
  r.config.full_algebra_cap = c.at("full_algebra_cap");
  r.config.large = c.at("large");
  for (const auto& ji : j.at("instances")) {
    InstanceResult in;
    in.spec = ji.at("group");
    in.name = ji.at("name");
    in.order = ji.at("order");
    in.p = ji.at("p");
    in.s = ji.at("s");
    in.classes = ji.at("classes");
    in.p_regular_classes = ji.at("p_regular_classes");
    for (const auto& b : ji.at("blocks")) in.blocks.push_back(block_from_json(b));
    for (const auto& ck : ji.at("checks")) in.checks.push_back(check_from_json(ck));
    r.instances.push_back(std::move(in));
  }
  return r;
}

json catalog_json(const std::vector<CatalogEntry>& entries) {
  json out = json::array();
  for (const auto& e : entries)
    out.push_back({{"spec", e.spec}, {"order", e.order}, {"name", e.name}, {"primes", e.primes}, {"large", e.large}});
  return out;
}

// ------------------------------------------------------------ csv/text

namespace {

std::string join(const std::vector<std::size_t>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

}  // namespace

std::string to_csv(const Report& r) {
  std::ostringstream os;
  os << "group,p,s,block,d,defect_order,defect_cyclic,zd_m,zd_r,e,k,l,LL,c,LL_fixed,lambda\n";
  for (const auto& in : r.instances)
    for (const auto& b : in.blocks)
      os << csv_field(in.spec) << ',' << in.p << ',' << in.s << ',' << b.index << ',' << b.defect << ','
         << b.defect_order << ',' << (b.defect_cyclic ? 1 : 0) << ',' << b.zd_m << ',' << b.zd_r << ',' << b.e << ','
         << b.k << ',' << (b.l ? std::to_string(*b.l) : "") << ',' << b.loewy_length << ',' << join(b.codims, ";")
         << ',' << b.loewy_length_fixed << ',' << b.lambda << '\n';
  return os.str();
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  for (const auto& in : r.instances) {
    os << in.name << " [" << in.spec << "], order " << in.order << ", p = " << in.p << ", field GF(" << in.p;
    if (in.s > 1) os << '^' << in.s;
    os << "), " << in.classes << " classes, " << in.p_regular_classes << " p-regular\n";
    os << "  block  d  |D|  cyc  m  r  e  k  l  LL  LL_fix  lambda  c\n";
    for (const auto& b : in.blocks) {
      os << "  " << b.index << "  " << b.defect << "  " << b.defect_order << "  " << (b.defect_cyclic ? "y" : "n")
         << "  " << b.zd_m << "  " << b.zd_r << "  " << b.e << "  " << b.k << "  "
         << (b.l ? std::to_string(*b.l) : "-") << "  " << b.loewy_length << "  " << b.loewy_length_fixed << "  "
         << b.lambda << "  [" << join(b.codims, ",") << "]\n";
    }
    for (const auto& c : in.checks) {
      if (c.verdict == Verdict::skipped) continue;
      os << "  " << to_string(c.verdict) << (c.report_only ? " (report only)" : "") << "  " << c.claim;
      if (c.block) os << " block " << *c.block;
      for (const auto& [k, v] : c.values) os << ' ' << k << '=' << v;
      if (!c.reason.empty()) os << "  # " << c.reason;
      os << '\n';
    }
  }
  const Tally t = tally(r);
  os << "checks: " << t.pass << " pass, " << t.fail << " fail, " << t.skipped << " skipped";
  if (t.report_only_fail) os << ", " << t.report_only_fail << " report-only failures";
  os << '\n';
  return os.str();
}

std::string catalog_text(const std::vector<CatalogEntry>& entries) {
  std::ostringstream os;
  for (const auto& e : entries) {
    os << e.spec << " (order " << e.order << ")  " << e.name;
    if (e.large) os << "  [large]";
    os << '\n';
  }
  return os.str();
}

std::string catalog_csv(const std::vector<CatalogEntry>& entries) {
  std::ostringstream os;
  os << "spec,order,name\n";
  for (const auto& e : entries) os << csv_field(e.spec) << ',' << e.order << ',' << csv_field(e.name) << '\n';
  return os.str();
}

}  // namespace blockloewy
