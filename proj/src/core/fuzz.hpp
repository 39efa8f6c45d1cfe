#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "core/presentation.hpp"

namespace mk {

struct FuzzConfig {
  uint64_t seed = 7;
  int case_count = 200;
  int max_vertices = 4;
  int max_arrows = 5;
  int max_relation_length = 3;
  Field field{};
  bool shrink = true;
  // negative-control hook: corrupt one structure constant of every built
  // algebra before validation
  bool corrupt = false;
};

struct FuzzViolation {
  int case_index = 0;
  std::string check;   // "a".."g", "validate"
  std::string detail;
  std::string presentation_json;
  std::string shrunk_json;  // empty when shrinking is off
};

struct FuzzReport {
  FuzzConfig config;
  int cases_run = 0;
  std::vector<FuzzViolation> violations;
};

QuiverPresentation generate_case(std::mt19937_64& rng, const FuzzConfig& cfg);
FuzzReport run_suite(const FuzzConfig& cfg);
std::string fuzz_report_json(const FuzzReport& r);

}  // namespace mk
