#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "idealkit/homology.hpp"

namespace idealkit {

struct FuzzConfig {
  std::uint64_t seed = 1;
  unsigned max_vars_per_side = 3;
  unsigned max_generators = 4;
  unsigned max_exponent = 3;
  unsigned max_s = 3;
  unsigned cases = 500;
  std::vector<std::string> suites = {"thm38"};
  Characteristic characteristic = 0;
  // Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

const std::vector<std::string>& fuzz_suite_names();

// Throws std::invalid_argument for zero bounds, unknown suites or a bad characteristic.
void validate(const FuzzConfig& config);

/// One random instance: I, K in A and J, L in B, an auxiliary ideal I2 in A
/// for two-filtration identities, and an exponent s.
struct FuzzInstance {
  Ring A;
  Ring B;
  MonomialIdeal I, K, I2;
  MonomialIdeal J, L;
  unsigned s = 1;

  // Script declaring the rings and ideals, with no print statements.
  std::string declarations() const;
};

// Exactly config.cases instances, a pure function of the bounds and the seed.
std::vector<FuzzInstance> generate_instances(const FuzzConfig& config);

struct FuzzFailure {
  std::size_t case_index = 0;
  std::string check;
  std::string instance_script;
  std::string expected;
  std::string actual;
};

struct SuiteResult {
  std::string suite;
  unsigned cases = 0;
  unsigned passes = 0;
  // Cases where some route of the check could not be applied; the remaining
  // routes are still checked and counted.
  unsigned not_applicable = 0;
  std::vector<FuzzFailure> failures;

  bool passed() const { return failures.empty() && passes == cases; }
};

struct FuzzReport {
  FuzzConfig config;
  std::vector<SuiteResult> suites;

  bool passed() const;
  std::string to_text() const;
  std::string to_json() const;
};

FuzzReport run_fuzz(const FuzzConfig& config);

// Independent enumeration of Ass(I^{i-1}/I^i) over all monomials of total
// degree <= max_degree, used to cross-check ass_module_quotient.
PrimeSet ass_module_quotient_by_degree(const MonomialIdeal& ideal, unsigned i, unsigned max_degree);

}  // namespace idealkit
