#pragma once

// Seeded random instances and the randomized property suite.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "aspec/linalg.hpp"

namespace aspec::harness {

struct RandomInstanceSpec {
  Index dim = 2;
  Index rank = 2;           // rank of A, in [0, dim]
  bool member_only = true;  // X leaves N(A) invariant
  std::uint64_t seed = 0;
  double scale = 1.0;       // standard deviation of the entries of X
};

struct Instance {
  ComplexMatrix a;
  ComplexMatrix x;
};

/// A = G diag(d) G^* with G Haar-like unitary (QR of a Gaussian matrix) and
/// exactly `rank` entries of d drawn from [0.25, 2]. With member_only,
/// X = P M P + (I - P) M' (I - P). Throws InvalidArgument for a bad spec.
Instance generate_instance(const RandomInstanceSpec& spec);

/// Block-diagonal A and member X built from two independent instances.
Instance generate_block_instance(const RandomInstanceSpec& first, const RandomInstanceSpec& second);

/// Standard splitmix64 step; per-trial seeds are splitmix64(seed + trial).
std::uint64_t splitmix64(std::uint64_t x);

Mat random_gaussian(Index rows, Index cols, std::mt19937_64& rng, double scale = 1.0);
Mat random_unitary(Index n, std::mt19937_64& rng);
/// Normal matrix U diag(z) U^* with Gaussian eigenvalues z.
Mat random_normal_matrix(Index n, std::mt19937_64& rng);

nlohmann::json instance_to_json(const RandomInstanceSpec& spec, const Instance& inst);

struct SuiteConfig {
  int trials = 100;
  Index dim_min = 2;
  Index dim_max = 8;
  ToleranceConfig tol;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct PropertyFailure {
  std::string property;
  std::uint64_t seed = 0;  // trial seed; replays the instance
  nlohmann::json instance;
  std::string observed;
  std::string expected;
};

struct PropertyReport {
  std::string suite;
  int trials = 0;
  std::vector<std::string> properties;
  std::vector<PropertyFailure> failures;
  std::int64_t elapsed_ms = 0;

  bool passed() const noexcept { return failures.empty(); }
  nlohmann::json to_json() const;
};

/// Names of every registered property, in execution order.
std::vector<std::string> property_names();

/// Instance spec of one trial: dimension and rank drawn from the trial seed.
RandomInstanceSpec trial_spec(const SuiteConfig& config, std::uint64_t trial_seed);

/// Runs every property on `trials` fresh instances. Trials may run on
/// several threads; the report is identical for any thread count.
PropertyReport run_property_suite(const SuiteConfig& config);

/// Reruns every property on the single trial with the given seed.
PropertyReport replay_trial(const SuiteConfig& config, std::uint64_t trial_seed);

}  // namespace aspec::harness
