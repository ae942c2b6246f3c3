#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "aspec/harness.hpp"
#include "aspec/psd.hpp"

namespace aspec::harness::detail {

struct Trial {
  const RandomInstanceSpec& spec;
  const Instance& inst;
  const PsdDecomposition& d;
  const ToleranceConfig& tol;
  std::mt19937_64& rng;  // private stream of the property on this trial
};

struct Mismatch {
  std::string observed;
  std::string expected;
};

using Check = std::optional<Mismatch>;

struct Property {
  std::string name;
  std::function<Check(Trial&)> run;
};

const std::vector<Property>& registry();

}  // namespace aspec::harness::detail
