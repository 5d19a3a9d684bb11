#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace fillsys {

inline constexpr std::uint64_t kDefaultSeed = 20240521;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct SelftestOptions {
  std::uint64_t seed = kDefaultSeed;
  int threads = 0;  // <= 0: FILLSYS_THREADS or 1
  std::vector<int> only;  // empty runs every criterion
};

CriterionResult run_criterion(int id, const SelftestOptions& opt);
std::vector<CriterionResult> run_selftest(const SelftestOptions& opt = {});
nlohmann::json to_json(const std::vector<CriterionResult>& rs, std::uint64_t seed);
// "PASS 3 name: detail"
std::string format_line(const CriterionResult& r);

}  // namespace fillsys
