#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "hyperwalk/walks.hpp"

namespace hyperwalk {

/// Affine step correspondence between a walk and its transformed image.
/// Distributions are compared at unit n: the source after source_stride * n
/// stage applications against the target after a * n + b stage applications.
struct StepMap {
  long long a = 1;
  long long b = 0;
  int source_stride = 1;

  long long target_steps(long long n) const { return a * n + b; }
  long long source_steps(long long n) const { return source_stride * n; }
  bool identity() const { return a == 1 && b == 0 && source_stride == 1; }
};

/// Injection from source basis indices to target basis indices (-1 where
/// undefined). Sends normalized states to normalized states.
struct StateMap {
  std::vector<int> target_index;
};

struct SizeReport {
  int vertex_count = 0;
  int basis_size = 0;
  int operator_count = 0;  // operators in one full cycle of the schedule
};

/// Output of a cross-model construction. The target instance's measurement
/// maps target basis states to the *source* vertex ids, restricted to the
/// states the construction associates with original vertices.
struct TransformResult {
  std::string name;
  WalkInstance target;
  StateMap state_map;
  StepMap step_map;
  SizeReport sizes;
};

StateVector map_state(const StateMap& m, const StateVector& source, BasisPtr target);

TransformResult identity_transform(const WalkInstance& w);

/// Szegedy walk reproducing a static coined walk: stages U1 = C, U2 = S C S
/// on the relabeled pair basis; distributions agree at every step.
TransformResult szegedy_from_coined(const WalkInstance& w);

/// Inverse direction: C = U1. Requires U2 = S U1 S, which holds for every
/// Szegedy walk built from amplitudes.
TransformResult coined_from_szegedy(const WalkInstance& w);

/// Coined walk on the bipartite vertex/edge incidence graph with coin
/// U_V (+) U_E; n hyperwalk steps correspond to 2n coined steps.
TransformResult coined_from_hyperwalk(const WalkInstance& w);

/// Staggered walk on the incidence pairs of the hypergraph, with the
/// vertex and edge groupings as alternating tessellations; distributions
/// agree at every stage.
TransformResult staggered_from_generalized_hyperwalk(const WalkInstance& w);

/// Generalized coined walk obtained by adding one vertex per polygon per
/// tessellation; distributions agree at full staggered cycles, which cost
/// 2k coined steps (k = number of tessellations).
TransformResult generalized_coined_from_staggered(const WalkInstance& w);

/// Static coined walk on the layered graph with k * N vertices; one
/// generalized step corresponds to one coined step. k = 1 returns the
/// identity transform.
TransformResult coined_from_generalized_coined(const WalkInstance& w);

/// Hyperwalk with a single all-vertex hyperedge and identity coins whose
/// edge shifts change in time as the staggered stages. Same basis size,
/// identity step map; distributions agree exactly at every step.
TransformResult generalized_hyperwalk_from_staggered(const WalkInstance& w);

TransformResult apply_transform(std::string_view name, const WalkInstance& w);
std::span<const std::string_view> transform_names();

// -- size accounting without simulation -------------------------------------

/// Structural skeleton of a walk: enough to apply every construction's
/// counting rules (and to derive the next structure) without any matrices.
struct WalkShape {
  WalkModel model = WalkModel::ScatteringCoined;
  std::optional<Graph> graph;
  std::optional<Hypergraph> hypergraph;
  std::vector<Tessellation> stage_tessellations;  // staggered, one per stage
  int schedule_len = 1;                           // stages per cycle
  int positions = 0;                              // coined line
  bool composed = false;                          // hyperwalk stage form
};

WalkShape shape_of(const WalkInstance& w);
SizeReport shape_sizes(const WalkShape& s);
WalkShape apply_shape_transform(std::string_view name, const WalkShape& s);

/// Sizes of the source followed by the sizes after each chain link.
std::vector<std::pair<std::string, SizeReport>> transform_chain_size(
    const WalkShape& source, std::span<const std::string> chain);

}  // namespace hyperwalk
