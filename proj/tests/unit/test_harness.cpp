#include <doctest.h>

#include <set>

#include "aspec/harness.hpp"
#include "aspec/seminorm.hpp"
#include "oracles.hpp"

using namespace aspec;
using namespace aspec::harness;

TEST_CASE("generate_instance examples") {
  RandomInstanceSpec full;
  full.dim = 2;
  full.rank = 2;
  full.seed = 5;
  const Instance i1 = generate_instance(full);
  CHECK(psd_decompose(i1.a).rank() == 2);
  CHECK(a_membership(psd_decompose(i1.a), i1.x).member);

  RandomInstanceSpec zero;
  zero.dim = 4;
  zero.rank = 0;
  const Instance i2 = generate_instance(zero);
  CHECK(oracle::max_abs(i2.a.eigen()) == 0.0);

  RandomInstanceSpec member;
  member.dim = 3;
  member.rank = 2;
  member.seed = 42;
  const Instance i3 = generate_instance(member);
  const PsdDecomposition d3 = psd_decompose(i3.a);
  CHECK(d3.rank() == 2);
  CHECK(a_membership(d3, i3.x).member);
}

TEST_CASE("generator is deterministic and respects the rank") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RandomInstanceSpec spec;
    spec.dim = 1 + static_cast<Index>(seed % 8);
    spec.rank = static_cast<Index>(seed % static_cast<std::uint64_t>(spec.dim + 1));
    spec.seed = seed;
    const Instance a = generate_instance(spec);
    const Instance b = generate_instance(spec);
    CHECK(a.a.eigen() == b.a.eigen());
    CHECK(a.x.eigen() == b.x.eigen());
    const PsdDecomposition d = psd_decompose(a.a);
    CHECK(d.rank() == spec.rank);
    const RealVec ev = d.range_eigenvalues();
    if (ev.size() > 0) {
      CHECK(ev.minCoeff() >= 0.25 - 1e-12);
      CHECK(ev.maxCoeff() <= 2.0 + 1e-12);
    }
  }
}

TEST_CASE("non-member generation usually escapes the member set") {
  int non_members = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    RandomInstanceSpec spec;
    spec.dim = 4;
    spec.rank = 2;
    spec.member_only = false;
    spec.seed = seed;
    const Instance inst = generate_instance(spec);
    non_members += a_membership(psd_decompose(inst.a), inst.x).member ? 0 : 1;
  }
  CHECK(non_members == 30);
}

TEST_CASE("generator rejects invalid specs") {
  RandomInstanceSpec spec;
  spec.dim = 3;
  spec.rank = 4;
  CHECK_THROWS_AS(generate_instance(spec), Error);
  spec.rank = -1;
  CHECK_THROWS_AS(generate_instance(spec), Error);
  spec.rank = 1;
  spec.dim = 0;
  CHECK_THROWS_AS(generate_instance(spec), Error);
  spec.dim = 2;
  spec.scale = 0.0;
  CHECK_THROWS_AS(generate_instance(spec), Error);
}

TEST_CASE("block instances are block diagonal") {
  RandomInstanceSpec s1;
  RandomInstanceSpec s2;
  s1.dim = 2;
  s1.rank = 1;
  s2.dim = 3;
  s2.rank = 3;
  s2.seed = 9;
  const Instance inst = generate_block_instance(s1, s2);
  CHECK(inst.a.rows() == 5);
  CHECK(oracle::max_abs(inst.a.eigen().topRightCorner(2, 3)) == 0.0);
  CHECK(oracle::max_abs(inst.x.eigen().bottomLeftCorner(3, 2)) == 0.0);
  s1.member_only = false;
  CHECK_THROWS_AS(generate_block_instance(s1, s2), Error);
}

TEST_CASE("random unitary and normal matrices") {
  std::mt19937_64 rng(8);
  const Mat u = random_unitary(5, rng);
  CHECK(oracle::max_abs(u.adjoint() * u - Mat::Identity(5, 5)) < 1e-12);
  const Mat n = random_normal_matrix(5, rng);
  CHECK(oracle::max_abs(n * n.adjoint() - n.adjoint() * n) < 1e-10);
}

TEST_CASE("splitmix64 reference values") {
  // Published first outputs of the generator seeded with 0.
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
  CHECK(splitmix64(0x9e3779b97f4a7c15ULL) == 0x6e789e6aa1b965f4ULL);
}

TEST_CASE("smoke run of the property suite") {
  SuiteConfig config;
  config.trials = 1;
  config.dim_min = 2;
  config.dim_max = 2;
  config.seed = 7;
  const PropertyReport report = run_property_suite(config);
  CHECK(report.properties.size() >= 12);
  CHECK(report.trials == 1);
  CHECK(report.suite == "aspec-properties");
  const std::set<std::string> unique(report.properties.begin(), report.properties.end());
  CHECK(unique.size() == report.properties.size());
  const nlohmann::json j = report.to_json();
  for (const char* key : {"suite", "trials", "properties", "failures", "passed", "elapsed_ms"}) {
    CHECK(j.contains(key));
  }
}

TEST_CASE("suite passes and is independent of the thread count") {
  SuiteConfig config;
  config.trials = 40;
  config.seed = 123;
  const PropertyReport one = run_property_suite(config);
  CHECK(one.passed());
  config.threads = 4;
  const PropertyReport four = run_property_suite(config);
  CHECK(four.passed());
  auto strip = [](nlohmann::json j) {
    j.erase("elapsed_ms");
    return j;
  };
  CHECK(strip(one.to_json()) == strip(four.to_json()));
}

TEST_CASE("failures are reproduced by replay") {
  SuiteConfig config;
  config.trials = 10;
  config.seed = 1;
  config.tol.atol = 1e-18;
  config.tol.rtol = 0.0;
  const PropertyReport report = run_property_suite(config);
  REQUIRE_FALSE(report.passed());
  const PropertyFailure& first = report.failures.front();
  const PropertyReport again = replay_trial(config, first.seed);
  REQUIRE_FALSE(again.passed());
  bool found = false;
  for (const auto& f : again.failures) {
    if (f.property == first.property) {
      found = true;
      CHECK(f.observed == first.observed);
      CHECK(f.instance == first.instance);
    }
  }
  CHECK(found);
}

TEST_CASE("suite config validation") {
  SuiteConfig config;
  config.trials = 0;
  CHECK_THROWS_AS(run_property_suite(config), Error);
  config.trials = 1;
  config.dim_min = 5;
  config.dim_max = 3;
  CHECK_THROWS_AS(run_property_suite(config), Error);
  config.dim_max = 6;
  config.tol.atol = -1.0;
  CHECK_THROWS_AS(run_property_suite(config), Error);
}
