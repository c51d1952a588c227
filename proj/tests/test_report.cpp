#include <doctest.h>

#include "blockloewy/report.hpp"

using namespace blockloewy;

TEST_SUITE("report") {
  TEST_CASE("json round trip") {
    Report r;
    r.config.command = "verify";
    r.config.max_order = 30;
    r.instances = run_suite(suite_tasks(catalog(12, false)), {}, 2);
    const auto j = to_json(r);
    const Report back = report_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back == r);
    CHECK(j.at("instances").size() == r.instances.size());
  }

  TEST_CASE("parallel runs are deterministic") {
    const auto tasks = suite_tasks(catalog(40, false));
    const auto a = run_suite(tasks, {}, 1);
    const auto b = run_suite(tasks, {}, 4);
    CHECK(a == b);
    Report ra, rb;
    ra.instances = a;
    rb.instances = b;
    CHECK(to_json(ra).dump() == to_json(rb).dump());
    CHECK(tally(ra).fail == 0);
  }

  TEST_CASE("csv and text output") {
    Report r;
    r.instances.push_back(analyze_and_check("S 3", 3));
    const auto csv = to_csv(r);
    CHECK(csv.rfind("group,p,s,block", 0) == 0);
    CHECK(csv.find("S 3,3,1,0,1,3,1,") != std::string::npos);
    const auto text = to_text(r);
    CHECK(text.find("checks:") != std::string::npos);
    CHECK(catalog_csv(catalog(6, false)).find("\"") == std::string::npos);
  }
}
