#pragma once

// Invariant suites behind the `verify` subcommand and the acceptance runner.
// Each check is reported by name; a failing check never throws.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ggm/hecke_finite.hpp"

namespace ggm {

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct VerifyOptions {
  StructureFault fault = StructureFault::none;
  std::uint64_t seed = 0x5eed;

  // hecke-finite
  int relations_max_k = 4;
  int modules_max_k = 5;
  int finite_triples = 200;

  // hecke-affine
  std::vector<int> affine_ranks{2, 3};
  int affine_triples = 50;

  // cover
  std::int64_t sweep_max_n = 10;
  std::int64_t sweep_max_k = 4;
  std::int64_t class_test_max_n = 6;
  std::int64_t class_test_max_k = 3;

  // cocycle; empty means q in {5, 7, 13} and every n dividing q - 1
  std::optional<std::int64_t> q;
  std::optional<std::int64_t> n;
  int cocycle_triples = 200;
};

const std::vector<std::string>& verify_suite_names();

std::vector<CheckResult> verify_hecke_finite(const VerifyOptions& opt);
std::vector<CheckResult> verify_hecke_affine(const VerifyOptions& opt);
std::vector<CheckResult> verify_cover(const VerifyOptions& opt);
std::vector<CheckResult> verify_cocycle(const VerifyOptions& opt);

/// Throws InvalidArgument for an unknown suite name.
std::vector<CheckResult> run_verify_suite(const std::string& name, const VerifyOptions& opt);

}  // namespace ggm
