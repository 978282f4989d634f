#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuzzitop/json_io.hpp"

namespace fuzzitop {

// One evaluated inequality instance; passes when lhs <= rhs.
struct CheckInstance {
  std::string args;
  Degree lhs, rhs;
  bool pass() const { return lhs <= rhs; }
};

// Exact slack rhs - lhs of a satisfied instance.
Degree instance_slack(const CheckInstance& i);

struct CheckOutcome {
  std::string id;
  std::string title;
  bool degenerate = false;  // every compactness factor is 1 at finite scale
  bool skipped = false;
  std::string skip_reason;
  std::size_t instances = 0;
  std::vector<CheckInstance> violations;
  std::optional<CheckInstance> tightest;  // minimal slack among passing
  bool pass() const { return skipped || violations.empty(); }
};

// Registered checks, one per inequality the degree calculus must satisfy on
// every valid space. Checks whose hypothesis is the P-topological condition
// skip spaces that fail it and record the skip.
std::vector<std::string> theorem_ids();
std::string theorem_title(const std::string& id);
CheckOutcome run_check(const FuzzySpace& s, const std::string& id);
std::vector<CheckOutcome> run_all(const FuzzySpace& s);
Json outcomes_to_json(const std::vector<CheckOutcome>& outcomes);

struct SearchOptions {
  std::string theorem = "all";
  int points = 3;
  int grid = 4;
  int samples = 100;
  std::uint64_t seed = 1;
  bool converse = false;  // hunt strict lhs < rhs witnesses instead
};

struct SearchViolation {
  int sample;
  std::uint64_t space_seed;
  std::string theorem;
  CheckInstance instance;
};

struct SearchReport {
  SearchOptions options;
  int spaces_tried = 0;
  std::vector<SearchViolation> violations;
  std::optional<SearchViolation> tightest;  // minimal slack over all samples
  std::vector<SearchViolation> converse_witnesses;
};

// Deterministic in (options, seed): sample i draws its space from a fixed
// mix of the seed and i, so any reported witness replays exactly.
SearchReport search(const SearchOptions& opts);
Json search_report_to_json(const SearchReport& r);

}  // namespace fuzzitop
