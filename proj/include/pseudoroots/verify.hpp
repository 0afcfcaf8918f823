#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

// Property suites run by `pseudoroots verify` and the acceptance binary.
namespace pseudoroots::verify {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct Options {
  std::uint64_t seed = kDefaultSeed;
  std::optional<int> n;      // size of Γ_n / number of roots, when the suite has one
  std::optional<int> cases;  // number of random instances
};

struct Result {
  std::string suite;
  bool passed = true;
  // Line-oriented findings, one per line of the text report.
  std::vector<std::string> findings;
  nlohmann::json summary = nlohmann::json::object();
  std::optional<std::string> counterexample;

  void fail(std::string what);
};

struct Suite {
  std::string name;
  std::string description;
  std::function<Result(const Options&)> run;
};

const std::vector<Suite>& suites();
const Suite* find_suite(const std::string& name);

nlohmann::json to_json(const Result& r);

}  // namespace pseudoroots::verify
