#include "aspec/harness.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "aspec/json_io.hpp"
#include "properties.hpp"

namespace aspec::harness {

namespace {

Mat projection_onto_first(const Mat& g, Index rank) {
  const Mat basis = g.leftCols(rank);
  return basis * basis.adjoint();
}

struct TrialOutcome {
  std::vector<PropertyFailure> failures;
};

TrialOutcome run_trial(const SuiteConfig& config, std::uint64_t trial_seed) {
  const auto& props = detail::registry();
  TrialOutcome out;
  const RandomInstanceSpec spec = trial_spec(config, trial_seed);
  const Instance inst = generate_instance(spec);
  auto record = [&](const std::string& name, std::string observed, std::string expected) {
    out.failures.push_back(
        {name, trial_seed, instance_to_json(spec, inst), std::move(observed), std::move(expected)});
  };

  std::optional<PsdDecomposition> d;
  try {
    d = psd_decompose(inst.a, config.tol);
  } catch (const Error& e) {
    record("harness.generator", e.what(), "valid PSD weight");
    return out;
  }

  for (std::size_t i = 0; i < props.size(); ++i) {
    std::mt19937_64 rng(splitmix64(trial_seed ^ (0x9e3779b97f4a7c15ULL * (i + 1))));
    detail::Trial trial{spec, inst, *d, config.tol, rng};
    try {
      if (auto bad = props[i].run(trial)) record(props[i].name, bad->observed, bad->expected);
    } catch (const std::exception& e) {
      record(props[i].name, std::string("exception: ") + e.what(), "no exception");
    }
  }
  return out;
}

void validate(const SuiteConfig& config) {
  if (config.trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
  if (config.dim_min < 1 || config.dim_max < config.dim_min) {
    throw Error(ErrorCode::InvalidArgument, "dims must satisfy 1 <= lo <= hi");
  }
  config.tol.validate();
}

PropertyReport empty_report(const SuiteConfig& config) {
  PropertyReport report;
  report.suite = "aspec-properties";
  report.trials = config.trials;
  report.properties = property_names();
  return report;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Mat random_gaussian(Index rows, Index cols, std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> normal(0.0, scale);
  Mat m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = Complex(normal(rng), normal(rng));
  }
  return m;
}

Mat random_unitary(Index n, std::mt19937_64& rng) {
  const Eigen::HouseholderQR<Mat> qr(random_gaussian(n, n, rng));
  Mat q = qr.householderQ();
  // Fix the phases so the distribution does not depend on QR sign conventions.
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index k = 0; k < n; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

Mat random_normal_matrix(Index n, std::mt19937_64& rng) {
  const Mat u = random_unitary(n, rng);
  const Vec z = random_gaussian(n, 1, rng);
  return u * z.asDiagonal() * u.adjoint();
}

Instance generate_instance(const RandomInstanceSpec& spec) {
  if (spec.dim < 1) throw Error(ErrorCode::InvalidArgument, "dim must be at least 1");
  if (spec.rank < 0 || spec.rank > spec.dim) {
    throw Error(ErrorCode::InvalidArgument, "rank must lie in [0, dim]");
  }
  if (!(spec.scale > 0.0)) throw Error(ErrorCode::InvalidArgument, "scale must be positive");

  std::mt19937_64 rng(spec.seed);
  const Index n = spec.dim;
  const Mat g = random_unitary(n, rng);
  std::uniform_real_distribution<double> weight(0.25, 2.0);
  RealVec d = RealVec::Zero(n);
  for (Index k = 0; k < spec.rank; ++k) d(k) = weight(rng);
  Mat a = g * d.cast<Complex>().asDiagonal() * g.adjoint();
  a = hermitian_part(a);

  Mat x = random_gaussian(n, n, rng, spec.scale);
  if (spec.member_only) {
    const Mat p = projection_onto_first(g, spec.rank);
    const Mat q = Mat::Identity(n, n) - p;
    x = p * x * p + q * random_gaussian(n, n, rng, spec.scale) * q;
  }
  return {ComplexMatrix(std::move(a)), ComplexMatrix(std::move(x))};
}

Instance generate_block_instance(const RandomInstanceSpec& first, const RandomInstanceSpec& second) {
  if (!first.member_only || !second.member_only) {
    throw Error(ErrorCode::InvalidArgument, "block instances are built from member instances");
  }
  const Instance i1 = generate_instance(first);
  const Instance i2 = generate_instance(second);
  const Index n1 = first.dim;
  const Index n = n1 + second.dim;
  Mat a = Mat::Zero(n, n);
  Mat x = Mat::Zero(n, n);
  a.topLeftCorner(n1, n1) = i1.a.eigen();
  a.bottomRightCorner(second.dim, second.dim) = i2.a.eigen();
  x.topLeftCorner(n1, n1) = i1.x.eigen();
  x.bottomRightCorner(second.dim, second.dim) = i2.x.eigen();
  return {ComplexMatrix(std::move(a)), ComplexMatrix(std::move(x))};
}

nlohmann::json instance_to_json(const RandomInstanceSpec& spec, const Instance& inst) {
  return {{"dim", spec.dim},
          {"rank", spec.rank},
          {"member_only", spec.member_only},
          {"seed", spec.seed},
          {"scale", spec.scale},
          {"a", matrix_to_json(inst.a)},
          {"x", matrix_to_json(inst.x)}};
}

nlohmann::json PropertyReport::to_json() const {
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : failures) {
    fails.push_back({{"property", f.property},
                     {"seed", f.seed},
                     {"instance", f.instance},
                     {"observed", f.observed},
                     {"expected", f.expected}});
  }
  return {{"suite", suite},     {"trials", trials}, {"properties", properties},
          {"failures", fails}, {"passed", passed()}, {"elapsed_ms", elapsed_ms}};
}

std::vector<std::string> property_names() {
  std::vector<std::string> names;
  for (const auto& p : detail::registry()) names.push_back(p.name);
  return names;
}

RandomInstanceSpec trial_spec(const SuiteConfig& config, std::uint64_t trial_seed) {
  const auto span = static_cast<std::uint64_t>(config.dim_max - config.dim_min + 1);
  RandomInstanceSpec spec;
  spec.dim = config.dim_min + static_cast<Index>(trial_seed % span);
  spec.rank = static_cast<Index>((trial_seed >> 16) % static_cast<std::uint64_t>(spec.dim + 1));
  spec.member_only = true;
  spec.seed = trial_seed;
  spec.scale = 1.0;
  return spec;
}

PropertyReport run_property_suite(const SuiteConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(config.trials));

  const unsigned workers = std::clamp<unsigned>(config.threads, 1U, static_cast<unsigned>(config.trials));
  auto work = [&](unsigned worker) {
    for (auto t = static_cast<std::size_t>(worker); t < outcomes.size(); t += workers) {
      outcomes[t] = run_trial(config, splitmix64(config.seed + t));
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  PropertyReport report = empty_report(config);
  for (auto& o : outcomes) {
    for (auto& f : o.failures) report.failures.push_back(std::move(f));
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

PropertyReport replay_trial(const SuiteConfig& config, std::uint64_t trial_seed) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  PropertyReport report = empty_report(config);
  report.trials = 1;
  report.failures = run_trial(config, trial_seed).failures;
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace aspec::harness
