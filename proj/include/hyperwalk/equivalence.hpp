#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "hyperwalk/random.hpp"
#include "hyperwalk/transforms.hpp"

namespace hyperwalk {

struct EquivalenceReport {
  bool pass = false;
  bool strong = false;  // basis did not grow and the step map is the identity
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::vector<std::array<long long, 2>> checked_steps;  // (source, target) stages
  std::array<int, 2> basis_sizes{0, 0};
  std::string note;
};

/// Simulates both sides and compares vertex distributions at the step pairs
/// given by the transform's step map, for comparison units 0..n_max, over
/// all source vertices.
EquivalenceReport check_instance(const WalkInstance& source, const StateVector& psi,
                                 const TransformResult& tr, int n_max, double tol);

/// As check_instance, additionally requiring that the target basis is no
/// larger than the source basis and that the step map is the identity.
EquivalenceReport check_strong_instance(const WalkInstance& source,
                                        const StateVector& psi,
                                        const TransformResult& tr, int n_max,
                                        double tol);

struct SizeBounds {
  int max_vertices = 6;
  int max_edges = 4;
  int max_tessellations = 3;
  int max_coins = 4;
};

struct SuiteReport {
  std::string pair_name;
  std::uint64_t seed = 0;
  int total = 0;
  int passed = 0;
  double worst_deviation = 0.0;
  std::vector<EquivalenceReport> reports;

  bool pass() const { return passed == total; }
};

/// Runs check_instance on randomly generated instances of one construction.
/// Deterministic for a fixed (pair name, bounds, seed). Recognized pairs are
/// the transform names plus "szegedy-coined-roundtrip". Strong checking is
/// used automatically for generalized-hyperwalk-from-staggered.
SuiteReport randomized_suite(std::string_view model_pair, int instance_count,
                             const SizeBounds& bounds, std::uint64_t seed,
                             int n_max = 10, double tol = 1e-10);

}  // namespace hyperwalk
