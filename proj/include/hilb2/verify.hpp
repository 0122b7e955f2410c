#ifndef HILB2_VERIFY_HPP
#define HILB2_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace hilb2 {

using Json = nlohmann::ordered_json;

struct CheckResult {
  bool pass = false;
  Json details = Json::object();
};

// A registered verification check. Every check carries a human-readable
// statement of the claim it reproduces; registration refuses empty claims.
struct Check {
  std::string id;
  std::string suite;  // scroll | crimp | ribbon | surfquad | bielliptic | slope
  std::string claim;
  std::function<CheckResult(std::uint64_t seed)> run;
};

const std::vector<Check>& acceptance_checks();

// Runs every check of the suite ("all" for everything) in registration
// order; each check derives its own deterministic random stream from the
// seed and its id.
Json run_suite(const std::string& suite, std::uint64_t seed);

bool suite_passed(const Json& report);

}  // namespace hilb2

#endif
